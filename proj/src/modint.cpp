#include "dyb/modint.hpp"

namespace dyb {

namespace {

// Returns (g, s) with g = gcd(a, n) and s*a == g (mod n).
std::pair<long long, long long> ext_gcd_mod(long long a, long long n) {
    long long old_r = a, r = n;
    long long old_s = 1, s = 0;
    while (r != 0) {
        long long q = old_r / r;
        long long tr = old_r - q * r;
        old_r = r;
        r = tr;
        long long ts = old_s - q * s;
        old_s = s;
        s = ts;
    }
    return {old_r, old_s};
}

}  // namespace

bool Residue::is_invertible() const {
    return ext_gcd_mod(v_, m_.value()).first == 1;
}

Residue Residue::inverse() const {
    auto [g, s] = ext_gcd_mod(v_, m_.value());
    if (g != 1) throw NotInvertible(v_, m_.value());
    return Residue(s, m_);
}

Residue Residue::pow(long long e) const {
    Residue base = e < 0 ? inverse() : *this;
    unsigned long long k = e < 0 ? static_cast<unsigned long long>(-(e + 1)) + 1
                                 : static_cast<unsigned long long>(e);
    Residue acc(1, m_);
    while (k != 0) {
        if (k & 1) acc = acc * base;
        base = base * base;
        k >>= 1;
    }
    return acc;
}

Residue residue_inverse(const Residue& x) { return x.inverse(); }

ModuleVec::ModuleVec(std::vector<long long> coords, Modulus m) : m_(m), c_(std::move(coords)) {
    if (c_.empty()) throw Error("module vector must have dimension >= 1");
    long long n = m_.value();
    for (auto& v : c_) {
        v %= n;
        if (v < 0) v += n;
    }
}

ModuleVec ModuleVec::from_index(long long index, Modulus m, int k) {
    long long n = m.value();
    std::vector<long long> c(static_cast<std::size_t>(k));
    for (int i = k - 1; i >= 0; --i) {
        c[static_cast<std::size_t>(i)] = index % n;
        index /= n;
    }
    return ModuleVec(std::move(c), m);
}

long long ModuleVec::to_index() const {
    long long idx = 0;
    for (long long v : c_) idx = idx * m_.value() + v;
    return idx;
}

ModuleVec operator+(const ModuleVec& a, const ModuleVec& b) {
    assert(a.m_ == b.m_ && a.dim() == b.dim());
    std::vector<long long> c(a.c_.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.c_[i] + b.c_[i];
    return ModuleVec(std::move(c), a.m_);
}

ModuleVec operator*(Residue s, const ModuleVec& v) {
    assert(s.modulus() == v.m_);
    std::vector<long long> c(v.c_.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = s.value() * v.c_[i];
    return ModuleVec(std::move(c), v.m_);
}

}  // namespace dyb
