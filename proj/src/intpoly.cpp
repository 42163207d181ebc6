#include "dyb/intpoly.hpp"

#include <cstdlib>

namespace dyb {

void IntPoly::set(int exponent, long long coeff) {
    if (coeff == 0)
        c_.erase(exponent);
    else
        c_[exponent] = coeff;
}

IntPoly IntPoly::monomial(long long coeff, int exponent) {
    IntPoly p;
    p.set(exponent, coeff);
    return p;
}

int IntPoly::degree() const {
    if (is_zero()) throw Error("degree of zero polynomial");
    return c_.rbegin()->first;
}

int IntPoly::min_exponent() const {
    if (is_zero()) throw Error("min exponent of zero polynomial");
    return c_.begin()->first;
}

long long IntPoly::coeff(int exponent) const {
    auto it = c_.find(exponent);
    return it == c_.end() ? 0 : it->second;
}

long long IntPoly::weight() const {
    long long w = 0;
    for (auto& [e, c] : c_) w += std::llabs(c);
    return w;
}

IntPoly IntPoly::shifted(int by) const {
    IntPoly r;
    for (auto& [e, c] : c_) r.c_.emplace(e + by, c);
    return r;
}

IntPoly IntPoly::normalized() const {
    if (is_zero()) return *this;
    return shifted(-min_exponent());
}

Residue IntPoly::eval_mod(const Residue& r) const {
    Residue acc(0, r.modulus());
    for (auto& [e, c] : c_) acc = acc + Residue(c, r.modulus()) * r.pow(e);
    return acc;
}

IntPoly IntPoly::operator-() const {
    IntPoly r;
    for (auto& [e, c] : c_) r.c_.emplace(e, -c);
    return r;
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
    IntPoly r = a;
    for (auto& [e, c] : b.c_) r.set(e, r.coeff(e) + c);
    return r;
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) { return a + (-b); }

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    IntPoly r;
    for (auto& [ea, ca] : a.c_)
        for (auto& [eb, cb] : b.c_) r.set(ea + eb, r.coeff(ea + eb) + ca * cb);
    return r;
}

std::string IntPoly::str() const {
    if (is_zero()) return "0";
    std::string s;
    bool first = true;
    for (auto& [e, c] : c_) {
        long long mag = std::llabs(c);
        if (first) {
            if (c < 0) s += "-";
            first = false;
        } else {
            s += c < 0 ? " - " : " + ";
        }
        if (mag != 1 || e == 0) s += std::to_string(mag);
        if (e != 0) {
            s += "X";
            if (e != 1) s += "^" + std::to_string(e);
        }
    }
    return s;
}

IntPoly x_pow_minus_one(int k) {
    return IntPoly::monomial(1, k) - IntPoly::constant(1);
}

IntPoly cyclotomic(int k) {
    if (k < 1) throw Error("cyclotomic level must be >= 1");
    IntPoly p = x_pow_minus_one(k);
    for (int d = 1; d < k; ++d) {
        if (k % d != 0) continue;
        auto q = exact_divide(p, cyclotomic(d));
        if (!q) throw Error("cyclotomic recursion failed");  // unreachable
        p = *q;
    }
    return p;
}

std::optional<IntPoly> exact_divide(const IntPoly& q, const IntPoly& p) {
    if (p.is_zero()) throw ZeroDivisor();
    IntPoly rem = q;
    IntPoly quot;
    long long lead = p.coeff(p.degree());
    while (!rem.is_zero() && rem.degree() >= p.degree()) {
        long long c = rem.coeff(rem.degree());
        if (c % lead != 0) return std::nullopt;
        IntPoly t = IntPoly::monomial(c / lead, rem.degree() - p.degree());
        quot = quot + t;
        rem = rem - t * p;
    }
    if (!rem.is_zero()) return std::nullopt;
    return quot;
}

bool poly_divides(const IntPoly& p, const IntPoly& q) {
    if (p.is_zero()) throw ZeroDivisor();
    if (q.is_zero()) return true;
    return exact_divide(q.normalized(), p.normalized()).has_value();
}

}  // namespace dyb
