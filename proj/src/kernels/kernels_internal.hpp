#pragma once

#include <cstdint>

#include "dyb/kernels.hpp"

// Per-backend range implementations.  Each scans the given slice of the
// outermost index (pairs (x,y) resp. (a,b) flattened to [0, n^2), or
// lambda in [0, n)) and returns the first failure with its *global*
// flattened tuple index, so chunked results can be merged by taking the
// minimum.

namespace dyb::kernels::detail {

Scan axiom4_range_scalar(const std::int32_t* eta, int n, int xy_begin, int xy_end);
Scan displacement_range_scalar(const std::int32_t* eta, int n, int xy_begin, int xy_end);
Scan mu1_range_scalar(const std::int32_t* mu, int n, int ab_begin, int ab_end);
Scan mu2_range_scalar(const std::int32_t* mu, int n, int ab_begin, int ab_end);
Scan dybe_range_scalar(const std::int32_t* sa, const std::int32_t* sc, const std::int32_t* mul,
                       int n, int l_begin, int l_end);
Scan qdybe_range_scalar(const std::int32_t* ra, const std::int32_t* rc, const std::int32_t* mul,
                        int n, int l_begin, int l_end);

#if defined(DYB_HAVE_AVX2)
Scan axiom4_range_avx2(const std::int32_t* eta, int n, int xy_begin, int xy_end);
Scan displacement_range_avx2(const std::int32_t* eta, int n, int xy_begin, int xy_end);
Scan mu1_range_avx2(const std::int32_t* mu, int n, int ab_begin, int ab_end);
Scan mu2_range_avx2(const std::int32_t* mu, int n, int ab_begin, int ab_end);
Scan dybe_range_avx2(const std::int32_t* sa, const std::int32_t* sc, const std::int32_t* mul,
                     int n, int l_begin, int l_end);
Scan qdybe_range_avx2(const std::int32_t* ra, const std::int32_t* rc, const std::int32_t* mul,
                      int n, int l_begin, int l_end);
#endif

}  // namespace dyb::kernels::detail
