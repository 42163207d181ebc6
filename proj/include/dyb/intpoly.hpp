#pragma once

#include <map>
#include <optional>
#include <string>

#include "dyb/modint.hpp"

namespace dyb {

/// Integer Laurent polynomial: exponent -> nonzero coefficient.
/// Exponents may be negative; no zero coefficients are ever stored.
class IntPoly {
  public:
    IntPoly() = default;

    static IntPoly monomial(long long coeff, int exponent);
    static IntPoly constant(long long c) { return monomial(c, 0); }

    bool is_zero() const { return c_.empty(); }
    int degree() const;        // largest exponent; requires nonzero
    int min_exponent() const;  // smallest exponent; requires nonzero
    long long coeff(int exponent) const;
    const std::map<int, long long>& terms() const { return c_; }

    /// Sum of |coefficients|.
    long long weight() const;

    /// Shifted by X^min so the smallest exponent is zero (ordinary form).
    IntPoly normalized() const;
    IntPoly shifted(int by) const;

    /// Evaluate at a residue; negative exponents need an invertible point.
    Residue eval_mod(const Residue& r) const;

    IntPoly operator-() const;
    friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator-(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
    friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.c_ == b.c_; }

    /// Human-readable form like "1 - X^2 + X^3".
    std::string str() const;

  private:
    void set(int exponent, long long coeff);
    std::map<int, long long> c_;
};

/// X^k - 1 as a convenience.
IntPoly x_pow_minus_one(int k);

/// The k-th cyclotomic polynomial over Z, computed by dividing X^k - 1 by
/// the cyclotomic polynomials of the proper divisors of k.
IntPoly cyclotomic(int k);

/// Exact division over Z: returns q/p if p divides q exactly, else nullopt.
/// Inputs are taken in ordinary (non-Laurent) form.
std::optional<IntPoly> exact_divide(const IntPoly& q, const IntPoly& p);

/// True iff q = p * s for an integer polynomial s, after both arguments are
/// normalized to ordinary form (a unit shift by a power of X, harmless here
/// because the divisors of interest never vanish at zero).
bool poly_divides(const IntPoly& p, const IntPoly& q);

}  // namespace dyb
