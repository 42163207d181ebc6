#pragma once

#include <array>
#include <utility>

#include "dyb/quasigroup.hpp"
#include "dyb/report.hpp"
#include "dyb/ternary.hpp"

namespace dyb {

/// mu(a, b, c) = eta(b, a, c); any affine form has its first two
/// coefficients swapped.
TernaryOp mu_from_eta(const TernaryOp& eta);

/// The two four-variable identities a ternary operation derived from a
/// homogeneous pre-system must satisfy:
///   "mu_identity1": mu(a, mu(a,b,c), mu(mu(a,b,c), c, d)) = mu(a, b, mu(b,c,d));
///   "mu_identity2": mu(mu(a,b,c), c, d) = mu(mu(a,b,mu(b,c,d)), mu(b,c,d), d).
/// Witnesses are [a, b, c, d].
Report check_mu_identities(const TernaryOp& mu);

std::pair<int, int> mu_identity1_sides(const TernaryOp& mu, int a, int b, int c, int d);
std::pair<int, int> mu_identity2_sides(const TernaryOp& mu, int a, int b, int c, int d);

/// For each argument position of mu, checks that fixing the other two
/// arguments gives a bijection ("solvability_pos1..3").  A failing part
/// carries [fix1, fix2, s, s'] with two distinct inputs s, s' mapped to
/// the same value.
Report check_unique_solvability(const TernaryOp& mu);

/// A bijection between two index sets of equal size.
struct Bijection {
    Perm pi, pi_inv;

    static Bijection identity(int n);
    static Bijection from_perm(Perm p);
};

/// lambda-indexed family sigma(lambda): Q x Q -> Q x Q, tabulated, with
/// the quasigroup supplying the parameter shift lambda -> lambda * x.
/// The same representation serves the argument-swapped R-form.
class DynamicalMap {
  public:
    /// Wraps raw component tables (no structural checks beyond ranges).
    static DynamicalMap from_table(Quasigroup q, std::vector<std::int32_t> a_tab,
                                   std::vector<std::int32_t> c_tab);

    int size() const { return n_; }
    const Quasigroup& quasigroup() const { return q_; }

    std::pair<int, int> apply(int lambda, int u, int v) const {
        std::size_t i = idx(lambda, u, v);
        return {a_[i], c_[i]};
    }
    const std::vector<std::int32_t>& a_table() const { return a_; }
    const std::vector<std::int32_t>& c_table() const { return c_; }

    /// Copy with one entry replaced; handy for negative controls.
    DynamicalMap with_entry(int lambda, int u, int v, int a, int c) const;

  private:
    explicit DynamicalMap(Quasigroup q) : n_(q.order()), q_(std::move(q)) {}
    std::size_t idx(int l, int u, int v) const {
        return (static_cast<std::size_t>(l) * static_cast<std::size_t>(n_) +
                static_cast<std::size_t>(u)) *
                   static_cast<std::size_t>(n_) +
               static_cast<std::size_t>(v);
    }
    int n_;
    Quasigroup q_;
    std::vector<std::int32_t> a_, c_;
};

/// Builds sigma from a ternary operation eta on S, a quasigroup Q of the
/// same size and a bijection pi: Q -> S:
///   h(l, v, u)     = pi^{-1}( mu(pi(l), pi(lv), pi((lv)u)) )
///   sigma(l)(u, v) = ( h \ ((lv)u),  l \ h )
/// with mu(a,b,c) = eta(b,a,c).  Refuses to build when eta fails the
/// pre-system axioms or the displacement identity (PrerequisiteFailed), or
/// when sizes differ (SizeMismatch).  The weight-zero identity
/// (l c) a = (l v) u holds for every entry by construction and is asserted.
DynamicalMap build_sigma(const TernaryOp& eta, const Quasigroup& q, const Bijection& pi);

/// Dynamical braid relation, all n^4 tuples; witness [lambda, x, y, z].
Report check_dybe(const DynamicalMap& sigma);

/// R(lambda)(x, y) = sigma(lambda)(y, x).
DynamicalMap to_R_form(const DynamicalMap& sigma);

/// Quantum dynamical Yang-Baxter equation for an R-form map, all n^4
/// tuples; witness [lambda, x, y, z].
Report check_qdybe(const DynamicalMap& r);

/// Each sigma(lambda) is a permutation of Q x Q; witness
/// [lambda, u, v, u', v'] lists two pairs with the same image.
Report check_bijective(const DynamicalMap& sigma);

/// Both sides of the braid relation at one tuple, each a triple, for
/// replaying witnesses.
std::pair<std::array<int, 3>, std::array<int, 3>> dybe_sides(const DynamicalMap& sigma, int lambda,
                                                             int x, int y, int z);
std::pair<std::array<int, 3>, std::array<int, 3>> qdybe_sides(const DynamicalMap& r, int lambda,
                                                              int x, int y, int z);

}  // namespace dyb
