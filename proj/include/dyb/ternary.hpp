#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "dyb/report.hpp"
#include "dyb/sset.hpp"

namespace dyb {

/// Affine closed form of a ternary operation on (Z/nZ)^k:
/// eta(x, y, z) = alpha*x + beta*y + gamma*z componentwise.
struct AffineCoeffs {
    long long modulus;
    int dim;
    long long alpha, beta, gamma;
};

/// Ternary operation on a finite set, held as a full n^3 table (flattened
/// (x*n + y)*n + z) with an optional affine closed form attached.  The two
/// representations are interconvertible; when both are present they agree
/// on every triple.
class TernaryOp {
  public:
    static TernaryOp from_table(int n, std::vector<std::int32_t> flat);
    /// Expands the closed form into a table over the mixed-radix carrier.
    static TernaryOp from_affine(const AffineCoeffs& a);

    int size() const { return n_; }
    int eval(int x, int y, int z) const {
        return t_[(static_cast<std::size_t>(x) * static_cast<std::size_t>(n_) +
                   static_cast<std::size_t>(y)) *
                      static_cast<std::size_t>(n_) +
                  static_cast<std::size_t>(z)];
    }
    const std::vector<std::int32_t>& table() const { return t_; }
    const std::optional<AffineCoeffs>& affine() const { return affine_; }

  private:
    friend TernaryOp eta_table(const FiniteSSet&, const Word&);
    friend TernaryOp mu_from_eta(const TernaryOp&);
    TernaryOp() = default;
    int n_ = 0;
    std::vector<std::int32_t> t_;
    std::optional<AffineCoeffs> affine_;
};

/// eta_I(x, y, z) = w_I(s_x, s_y)(z) as a full table.  For affine s-sets
/// the affine closed form alpha = phi(r) - r^d, beta = 1 - phi(r),
/// gamma = r^d is computed as well and checked against the table entry by
/// entry; a disagreement throws ClosedFormMismatch (internal consistency
/// failure).  Single-letter words take phi = 1 (the empty alternating
/// sum).
TernaryOp eta_table(const FiniteSSet& s, const Word& w);

/// Checks the two homogeneous pre-system axioms:
///   "hps_axiom3": eta(x, y, x) = y over all pairs, witness [x, y];
///   "hps_axiom4": eta(x, y, eta(u, v, w)) =
///                 eta(eta(x,y,u), eta(x,y,v), eta(x,y,w)) over all n^5
///                 quintuples, witness [x, y, u, v, w].
Report check_hps(const TernaryOp& t);

/// Checks eta(x, y, z) = eta(w, eta(x, y, w), z) over all n^4 quadruples;
/// witness [x, y, z, w] (w innermost in the scan).
Report check_displacement(const TernaryOp& t);

/// Both sides of the axiom-4 identity at one point, for replaying
/// witnesses.
std::pair<int, int> axiom4_sides(const TernaryOp& t, int x, int y, int u, int v, int w);
std::pair<int, int> displacement_sides(const TernaryOp& t, int x, int y, int z, int w);

}  // namespace dyb
