#pragma once

#include <optional>
#include <vector>

#include "dyb/modint.hpp"
#include "dyb/perm.hpp"
#include "dyb/quasigroup.hpp"
#include "dyb/word.hpp"

namespace dyb {

/// Parameters of an affine s-set on (Z/nZ)^k: s_x(y) = (1-r)x + ry with r
/// invertible.  The carrier is enumerated mixed-radix, last coordinate
/// fastest.
struct AffineSpec {
    long long modulus;
    int dim;
    long long r;
};

/// Finite s-set: a family of bijections s_x of {0,...,n-1}, one per point,
/// satisfying s_x . s_y = s_{s_x(y)} . s_x for all pairs.  Inverse rows are
/// precomputed.
class FiniteSSet {
  public:
    /// Checks bijectivity of every row and the symmetry identity over all
    /// pairs (n^3 evaluations).  Throws NotBijective or SymmetryFails with
    /// the lexicographically first witness.
    static FiniteSSet validate(std::vector<Perm> rows);

    /// Conjugation s-set of a group: s_x(y) = x y x^{-1}.  The input table
    /// is checked to be a group (associative, two-sided identity,
    /// inverses); throws NotAGroup otherwise.
    static FiniteSSet conjugation(const Quasigroup& g);

    /// Affine s-set on (Z/nZ)^k.  Throws NotInvertible if gcd(r, n) != 1.
    static FiniteSSet affine(long long n, int k, long long r);

    int size() const { return n_; }
    const Perm& row(int x) const { return s_[static_cast<std::size_t>(x)]; }
    const Perm& inv_row(int x) const { return s_inv_[static_cast<std::size_t>(x)]; }
    const std::optional<AffineSpec>& affine_spec() const { return affine_; }
    const std::vector<Perm>& rows() const { return s_; }

    /// w_I(s_x, s_y) as a permutation.
    Perm word_perm(const Word& w, int x, int y) const;
    /// The ternary operation value w_I(s_x, s_y)(z).
    int eval_word(const Word& w, int x, int y, int z) const;

  private:
    FiniteSSet() = default;
    int n_ = 0;
    std::vector<Perm> s_, s_inv_;
    std::optional<AffineSpec> affine_;
};

}  // namespace dyb
