#pragma once

#include <stdexcept>
#include <string>

namespace dyb {

/// Base class for all structured errors thrown by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// gcd(value, modulus) != 1, so no multiplicative inverse exists.
struct NotInvertible : Error {
    long long value;
    long long modulus;
    NotInvertible(long long v, long long m)
        : Error("not invertible: " + std::to_string(v) + " mod " + std::to_string(m)),
          value(v), modulus(m) {}
};

/// Division by the zero polynomial.
struct ZeroDivisor : Error {
    ZeroDivisor() : Error("division by zero polynomial") {}
};

/// Exponent sequences must have at least two entries to define an
/// alternating polynomial.
struct WordTooShort : Error {
    std::size_t length;
    explicit WordTooShort(std::size_t l)
        : Error("word too short: length " + std::to_string(l) + " < 2"), length(l) {}
};

/// A multiplication table is not a Latin square.  Carries the first
/// offending line (row or column), its index and the duplicated value.
struct NotLatin : Error {
    enum class Axis { Row, Column };
    Axis axis;
    int index;
    int value;
    NotLatin(Axis a, int idx, int val)
        : Error(std::string("not a Latin square: duplicated value ") + std::to_string(val) +
                (a == Axis::Row ? " in row " : " in column ") + std::to_string(idx)),
          axis(a), index(idx), value(val) {}
};

/// A claimed family of bijections has a non-bijective member.
struct NotBijective : Error {
    int row;
    explicit NotBijective(int r)
        : Error("map s_" + std::to_string(r) + " is not a bijection"), row(r) {}
};

/// The defining symmetry s_x . s_y = s_{s_x(y)} . s_x fails at (x, y, z).
struct SymmetryFails : Error {
    int x, y, z;
    SymmetryFails(int x_, int y_, int z_)
        : Error("s-set symmetry fails at (" + std::to_string(x_) + ", " +
                std::to_string(y_) + ", " + std::to_string(z_) + ")"),
          x(x_), y(y_), z(z_) {}
};

/// Input table is not a group (conjugation construction needs one).
struct NotAGroup : Error {
    std::string reason;
    explicit NotAGroup(std::string r) : Error("not a group: " + r), reason(std::move(r)) {}
};

/// Carrier sizes of two structures that must be in bijection differ.
struct SizeMismatch : Error {
    std::size_t lhs, rhs;
    SizeMismatch(std::size_t a, std::size_t b)
        : Error("size mismatch: " + std::to_string(a) + " vs " + std::to_string(b)),
          lhs(a), rhs(b) {}
};

/// A construction refused to run because a required check failed first.
struct PrerequisiteFailed : Error {
    std::string check;
    explicit PrerequisiteFailed(std::string c)
        : Error("prerequisite check failed: " + c), check(std::move(c)) {}
};

/// Internal consistency failure: the tabulated ternary operation disagrees
/// with its affine closed form.  Must never fire.
struct ClosedFormMismatch : Error {
    int x, y, z;
    ClosedFormMismatch(int x_, int y_, int z_)
        : Error("closed form disagrees with table at (" + std::to_string(x_) + ", " +
                std::to_string(y_) + ", " + std::to_string(z_) + ")"),
          x(x_), y(y_), z(z_) {}
};

}  // namespace dyb
