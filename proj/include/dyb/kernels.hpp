#pragma once

#include <cstdint>

namespace dyb::kernels {

/// The exhaustive table scans below exist in two equivalent
/// implementations: a scalar reference and an AVX2 variant built on
/// 8-wide int32 gathers.  `Auto` picks AVX2 when the CPU supports it.
/// Both backends return bit-identical results (same verdict, same first
/// failing index), which the test suite asserts on random tables.
enum class Backend { Auto, Scalar, Avx2 };

void set_backend(Backend b);  // throws Error if the backend is unavailable
Backend backend();            // the configured value
Backend resolved_backend();   // what Auto resolves to on this machine
bool avx2_supported();

/// Worker threads for the scans, split over the outermost index.
/// 0 means one thread per hardware core.  Results are independent of the
/// thread count: the reported failure is always the lexicographically
/// first one.
void set_threads(int t);
int threads();

struct Scan {
    bool failed = false;
    std::uint64_t index = 0;  // flattened position of the first failing tuple
};

// All tables are flattened row-major int32 arrays with entries in [0, n):
// ternary tables hold n^3 values indexed (x*n + y)*n + z, map-pair tables
// hold the two output components separately, and `mul` is an n^2
// multiplication table.  Scans run in lexicographic tuple order.

/// eta(x,y,eta(u,v,w)) == eta(eta(x,y,u), eta(x,y,v), eta(x,y,w));
/// tuple (x, y, u, v, w).
Scan axiom4_scan(const std::int32_t* eta, int n);

/// eta(x,y,z) == eta(w, eta(x,y,w), z); tuple (x, y, z, w).
Scan displacement_scan(const std::int32_t* eta, int n);

/// mu(a, mu(a,b,c), mu(mu(a,b,c), c, d)) == mu(a, b, mu(b,c,d));
/// tuple (a, b, c, d).
Scan mu_identity1_scan(const std::int32_t* mu, int n);

/// mu(mu(a,b,c), c, d) == mu(mu(a,b,mu(b,c,d)), mu(b,c,d), d);
/// tuple (a, b, c, d).
Scan mu_identity2_scan(const std::int32_t* mu, int n);

/// Dynamical braid relation for sigma given by component tables
/// (sig_a, sig_c) indexed (lambda*n + u)*n + v, with the parameter shifted
/// through `mul`; tuple (lambda, x, y, z).
Scan dybe_scan(const std::int32_t* sig_a, const std::int32_t* sig_c, const std::int32_t* mul,
               int n);

/// Quantum dynamical Yang-Baxter equation for the R-form tables
/// (r_a, r_c); tuple (lambda, x, y, z).
Scan qdybe_scan(const std::int32_t* r_a, const std::int32_t* r_c, const std::int32_t* mul,
                int n);

}  // namespace dyb::kernels
