#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "dyb/errors.hpp"

namespace dyb {

/// Finite quasigroup: a Latin-square multiplication table together with
/// precomputed left and right division tables.
///
/// Elements are 0-based indices.  left_div(u, w) is the unique v with
/// u*v = w; right_div(v, w) is the unique u with u*v = w.
class Quasigroup {
  public:
    /// Validates the table (every row and column a permutation) and
    /// precomputes both divisions.  Throws NotLatin with the first
    /// offending row or column on failure.
    static Quasigroup validate(const std::vector<std::vector<int>>& table);

    int order() const { return n_; }

    int mul(int u, int v) const { return mul_[idx(u, v)]; }
    int left_div(int u, int w) const { return ldiv_[idx(u, w)]; }
    int right_div(int v, int w) const { return rdiv_[idx(v, w)]; }

    struct AssocWitness {
        int u, v, w;
        int lhs, rhs;  // (uv)w and u(vw)
    };
    /// Lexicographically smallest triple with (uv)w != u(vw), if any.
    std::optional<AssocWitness> associativity_counterexample() const;
    bool is_associative() const { return !associativity_counterexample().has_value(); }

    std::vector<std::vector<int>> table() const;

    const std::vector<std::int32_t>& mul_table() const { return mul_; }

  private:
    Quasigroup() = default;
    std::size_t idx(int a, int b) const {
        return static_cast<std::size_t>(a) * static_cast<std::size_t>(n_) +
               static_cast<std::size_t>(b);
    }
    int n_ = 0;
    std::vector<std::int32_t> mul_, ldiv_, rdiv_;
};

/// The additive group Z/nZ as a quasigroup.
Quasigroup cyclic_group(int n);

/// Symmetric group on m letters, elements enumerated in lexicographic
/// one-line order, product (p*q)(i) = p(q(i)).
Quasigroup symmetric_group(int m);

/// Uniform-ish random Latin square by row-by-row randomized backtracking.
/// Deterministic for a fixed seed.
Quasigroup random_latin_square(int n, std::uint64_t seed);

}  // namespace dyb
