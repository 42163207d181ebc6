#pragma once

#include <cassert>
#include <cstdint>
#include <vector>

#include "dyb/errors.hpp"

namespace dyb {

/// Modulus of the ring Z/nZ.  Always >= 2.
class Modulus {
  public:
    explicit Modulus(long long n) : n_(n) {
        if (n < 2) throw Error("modulus must be >= 2, got " + std::to_string(n));
    }
    long long value() const { return n_; }
    friend bool operator==(Modulus a, Modulus b) { return a.n_ == b.n_; }

  private:
    long long n_;
};

/// An element of Z/nZ.  Stored reduced to [0, n).
class Residue {
  public:
    Residue(long long v, Modulus m) : m_(m) {
        long long n = m.value();
        v_ = v % n;
        if (v_ < 0) v_ += n;
    }

    long long value() const { return v_; }
    Modulus modulus() const { return m_; }

    bool is_invertible() const;
    /// Multiplicative inverse via the extended Euclidean algorithm.
    Residue inverse() const;
    /// r^e, with negative e routed through the inverse.
    Residue pow(long long e) const;

    friend Residue operator+(Residue a, Residue b) {
        assert(a.m_ == b.m_);
        return Residue(a.v_ + b.v_, a.m_);
    }
    friend Residue operator-(Residue a, Residue b) {
        assert(a.m_ == b.m_);
        return Residue(a.v_ - b.v_, a.m_);
    }
    friend Residue operator*(Residue a, Residue b) {
        assert(a.m_ == b.m_);
        return Residue(a.v_ * b.v_, a.m_);
    }
    Residue operator-() const { return Residue(-v_, m_); }
    friend bool operator==(Residue a, Residue b) { return a.v_ == b.v_ && a.m_ == b.m_; }

  private:
    long long v_;
    Modulus m_;
};

/// Same contract as Residue::inverse; kept as a free function for callers
/// that read better with one.
Residue residue_inverse(const Residue& x);

/// Element of the free module (Z/nZ)^k, k >= 1.
class ModuleVec {
  public:
    ModuleVec(std::vector<long long> coords, Modulus m);

    int dim() const { return static_cast<int>(c_.size()); }
    Modulus modulus() const { return m_; }
    long long coord(int i) const { return c_[static_cast<std::size_t>(i)]; }

    /// Mixed-radix enumeration of the carrier, last coordinate fastest.
    static ModuleVec from_index(long long index, Modulus m, int k);
    long long to_index() const;

    friend ModuleVec operator+(const ModuleVec& a, const ModuleVec& b);
    friend ModuleVec operator*(Residue s, const ModuleVec& v);
    friend bool operator==(const ModuleVec& a, const ModuleVec& b) {
        return a.m_ == b.m_ && a.c_ == b.c_;
    }

  private:
    Modulus m_;
    std::vector<long long> c_;  // each in [0, n)
};

}  // namespace dyb
