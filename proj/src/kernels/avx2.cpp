#if defined(DYB_HAVE_AVX2)

#include <immintrin.h>

#include "kernels_internal.hpp"

// 8-wide int32 variants of the scalar range scans.  The innermost loop
// dimension rides in the vector lanes; chained table lookups become
// gathers, lookups contiguous in the innermost index become plain loads.
// Tails (n mod 8) fall back to the scalar expressions.  Lane order equals
// scan order, so "lowest failing lane" preserves the first-witness
// contract.

namespace dyb::kernels::detail {

namespace {

inline std::uint64_t u64(long long v) { return static_cast<std::uint64_t>(v); }

inline __m256i gather(const std::int32_t* base, __m256i idx) {
    return _mm256_i32gather_epi32(base, idx, 4);
}

// Bitmask of lanes where a and b DIFFER.
inline int neq_mask(__m256i a, __m256i b) {
    return (~_mm256_movemask_ps(_mm256_castsi256_ps(_mm256_cmpeq_epi32(a, b)))) & 0xFF;
}

const __m256i kIota = _mm256_setr_epi32(0, 1, 2, 3, 4, 5, 6, 7);

}  // namespace

Scan axiom4_range_avx2(const std::int32_t* eta, int n, int xy_begin, int xy_end) {
    const long long N = n;
    const int vend = n - n % 8;
    for (long long xy = xy_begin; xy < xy_end; ++xy) {
        const std::int32_t* exy = eta + xy * N;
        const __m256i vxyb = _mm256_set1_epi32(static_cast<int>(xy * N));
        for (long long u = 0; u < N; ++u) {
            const std::int32_t a = exy[u];
            for (long long v = 0; v < N; ++v) {
                const std::int32_t b = exy[v];
                const std::int32_t* euv = eta + (u * N + v) * N;
                const long long abb = (static_cast<long long>(a) * N + b) * N;
                const __m256i vabb = _mm256_set1_epi32(static_cast<int>(abb));
                int w = 0;
                for (; w < vend; w += 8) {
                    __m256i in1 = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(euv + w));
                    __m256i lhs = gather(eta, _mm256_add_epi32(vxyb, in1));
                    __m256i in2 = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(exy + w));
                    __m256i rhs = gather(eta, _mm256_add_epi32(vabb, in2));
                    if (int m = neq_mask(lhs, rhs)) {
                        int lane = __builtin_ctz(static_cast<unsigned>(m));
                        return {true, u64(((xy * N + u) * N + v) * N + w + lane)};
                    }
                }
                for (; w < n; ++w) {
                    if (exy[euv[w]] != eta[abb + exy[w]])
                        return {true, u64(((xy * N + u) * N + v) * N + w)};
                }
            }
        }
    }
    return {};
}

Scan displacement_range_avx2(const std::int32_t* eta, int n, int xy_begin, int xy_end) {
    const long long N = n;
    const int vend = n - n % 8;
    const __m256i vn = _mm256_set1_epi32(n);
    const __m256i vn2 = _mm256_set1_epi32(n * n);
    for (long long xy = xy_begin; xy < xy_end; ++xy) {
        const std::int32_t* exy = eta + xy * N;
        for (long long z = 0; z < N; ++z) {
            const __m256i vlhs = _mm256_set1_epi32(exy[z]);
            const __m256i vz = _mm256_set1_epi32(static_cast<int>(z));
            int w = 0;
            for (; w < vend; w += 8) {
                __m256i wv = _mm256_add_epi32(_mm256_set1_epi32(w), kIota);
                __m256i hw = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(exy + w));
                __m256i idx = _mm256_add_epi32(
                    _mm256_add_epi32(_mm256_mullo_epi32(wv, vn2), _mm256_mullo_epi32(hw, vn)),
                    vz);
                __m256i rhs = gather(eta, idx);
                if (int m = neq_mask(vlhs, rhs)) {
                    int lane = __builtin_ctz(static_cast<unsigned>(m));
                    return {true, u64((xy * N + z) * N + w + lane)};
                }
            }
            for (; w < n; ++w) {
                if (eta[(static_cast<long long>(w) * N + exy[w]) * N + z] != exy[z])
                    return {true, u64((xy * N + z) * N + w)};
            }
        }
    }
    return {};
}

Scan mu1_range_avx2(const std::int32_t* mu, int n, int ab_begin, int ab_end) {
    const long long N = n;
    const int vend = n - n % 8;
    for (long long ab = ab_begin; ab < ab_end; ++ab) {
        const long long a = ab / N, b = ab % N;
        const std::int32_t* mab = mu + ab * N;
        const __m256i vabb = _mm256_set1_epi32(static_cast<int>(ab * N));
        for (long long c = 0; c < N; ++c) {
            const std::int32_t m1 = mab[c];
            const std::int32_t* m1c = mu + (static_cast<long long>(m1) * N + c) * N;
            const std::int32_t* mbc = mu + (b * N + c) * N;
            const long long am1 = (a * N + m1) * N;
            const __m256i vam1 = _mm256_set1_epi32(static_cast<int>(am1));
            int d = 0;
            for (; d < vend; d += 8) {
                __m256i m2 = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(m1c + d));
                __m256i lhs = gather(mu, _mm256_add_epi32(vam1, m2));
                __m256i m3 = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(mbc + d));
                __m256i rhs = gather(mu, _mm256_add_epi32(vabb, m3));
                if (int m = neq_mask(lhs, rhs)) {
                    int lane = __builtin_ctz(static_cast<unsigned>(m));
                    return {true, u64((ab * N + c) * N + d + lane)};
                }
            }
            for (; d < n; ++d) {
                if (mu[am1 + m1c[d]] != mab[mbc[d]]) return {true, u64((ab * N + c) * N + d)};
            }
        }
    }
    return {};
}

Scan mu2_range_avx2(const std::int32_t* mu, int n, int ab_begin, int ab_end) {
    const long long N = n;
    const int vend = n - n % 8;
    const __m256i vn = _mm256_set1_epi32(n);
    const __m256i vn2 = _mm256_set1_epi32(n * n);
    for (long long ab = ab_begin; ab < ab_end; ++ab) {
        const long long b = ab % N;
        const std::int32_t* mab = mu + ab * N;
        const __m256i vabb = _mm256_set1_epi32(static_cast<int>(ab * N));
        for (long long c = 0; c < N; ++c) {
            const std::int32_t m1 = mab[c];
            const std::int32_t* lhs_row = mu + (static_cast<long long>(m1) * N + c) * N;
            const std::int32_t* mbc = mu + (b * N + c) * N;
            int d = 0;
            for (; d < vend; d += 8) {
                __m256i lhs = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(lhs_row + d));
                __m256i m3 = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(mbc + d));
                __m256i t = gather(mu, _mm256_add_epi32(vabb, m3));
                __m256i dv = _mm256_add_epi32(_mm256_set1_epi32(d), kIota);
                __m256i idx = _mm256_add_epi32(
                    _mm256_add_epi32(_mm256_mullo_epi32(t, vn2), _mm256_mullo_epi32(m3, vn)), dv);
                __m256i rhs = gather(mu, idx);
                if (int m = neq_mask(lhs, rhs)) {
                    int lane = __builtin_ctz(static_cast<unsigned>(m));
                    return {true, u64((ab * N + c) * N + d + lane)};
                }
            }
            for (; d < n; ++d) {
                const std::int32_t m3 = mbc[d];
                const std::int32_t t = mab[m3];
                if (lhs_row[d] != mu[(static_cast<long long>(t) * N + m3) * N + d])
                    return {true, u64((ab * N + c) * N + d)};
            }
        }
    }
    return {};
}

Scan dybe_range_avx2(const std::int32_t* sa, const std::int32_t* sc, const std::int32_t* mul,
                     int n, int l_begin, int l_end) {
    const long long N = n;
    const int vend = n - n % 8;
    const __m256i vn = _mm256_set1_epi32(n);
    const __m256i vn2 = _mm256_set1_epi32(n * n);
    for (long long l = l_begin; l < l_end; ++l) {
        const std::int32_t* lrow = mul + l * N;
        const __m256i vlrow = _mm256_set1_epi32(static_cast<int>(l * N));
        const __m256i vln2 = _mm256_set1_epi32(static_cast<int>(l * N * N));
        for (long long x = 0; x < N; ++x) {
            const __m256i vxn = _mm256_set1_epi32(static_cast<int>(x * N));
            for (long long y = 0; y < N; ++y) {
                const __m256i vxny = _mm256_set1_epi32(static_cast<int>(x * N + y));
                const std::int32_t* ca = sa + (l * N + y) * N;
                const std::int32_t* cc = sc + (l * N + y) * N;
                int z = 0;
                for (; z < vend; z += 8) {
                    __m256i zv = _mm256_add_epi32(_mm256_set1_epi32(z), kIota);
                    __m256i lz = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(lrow + z));
                    __m256i i1 = _mm256_add_epi32(_mm256_mullo_epi32(lz, vn2), vxny);
                    __m256i a1 = gather(sa, i1), b1 = gather(sc, i1);
                    __m256i i2 =
                        _mm256_add_epi32(_mm256_add_epi32(vln2, _mm256_mullo_epi32(b1, vn)), zv);
                    __m256i a2 = gather(sa, i2), b2 = gather(sc, i2);
                    __m256i lb2 = gather(mul, _mm256_add_epi32(vlrow, b2));
                    __m256i i3 = _mm256_add_epi32(
                        _mm256_add_epi32(_mm256_mullo_epi32(lb2, vn2), _mm256_mullo_epi32(a1, vn)),
                        a2);
                    __m256i a3 = gather(sa, i3), b3 = gather(sc, i3);

                    __m256i c1 = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(ca + z));
                    __m256i d1 = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(cc + z));
                    __m256i ld1 = gather(mul, _mm256_add_epi32(vlrow, d1));
                    __m256i j2 = _mm256_add_epi32(
                        _mm256_add_epi32(_mm256_mullo_epi32(ld1, vn2), vxn), c1);
                    __m256i c2 = gather(sa, j2), d2 = gather(sc, j2);
                    __m256i j3 =
                        _mm256_add_epi32(_mm256_add_epi32(vln2, _mm256_mullo_epi32(d2, vn)), d1);
                    __m256i c3 = gather(sa, j3), d3 = gather(sc, j3);

                    int m = neq_mask(a3, c2) | neq_mask(b3, c3) | neq_mask(b2, d3);
                    if (m) {
                        int lane = __builtin_ctz(static_cast<unsigned>(m));
                        return {true, u64(((l * N + x) * N + y) * N + z + lane)};
                    }
                }
                for (; z < n; ++z) {
                    const long long i1 = (static_cast<long long>(lrow[z]) * N + x) * N + y;
                    const std::int32_t a1 = sa[i1], b1 = sc[i1];
                    const long long i2 = (l * N + b1) * N + z;
                    const std::int32_t a2 = sa[i2], b2 = sc[i2];
                    const long long i3 = (static_cast<long long>(lrow[b2]) * N + a1) * N + a2;
                    const std::int32_t a3 = sa[i3], b3 = sc[i3];
                    const std::int32_t c1 = ca[z], d1 = cc[z];
                    const long long j2 = (static_cast<long long>(lrow[d1]) * N + x) * N + c1;
                    const std::int32_t c2 = sa[j2], d2 = sc[j2];
                    const long long j3 = (l * N + d2) * N + d1;
                    const std::int32_t c3 = sa[j3], d3 = sc[j3];
                    if (a3 != c2 || b3 != c3 || b2 != d3)
                        return {true, u64(((l * N + x) * N + y) * N + z)};
                }
            }
        }
    }
    return {};
}

Scan qdybe_range_avx2(const std::int32_t* ra, const std::int32_t* rc, const std::int32_t* mul,
                      int n, int l_begin, int l_end) {
    const long long N = n;
    const int vend = n - n % 8;
    const __m256i vn = _mm256_set1_epi32(n);
    const __m256i vn2 = _mm256_set1_epi32(n * n);
    for (long long l = l_begin; l < l_end; ++l) {
        const std::int32_t* lrow = mul + l * N;
        const __m256i vlrow = _mm256_set1_epi32(static_cast<int>(l * N));
        for (long long x = 0; x < N; ++x) {
            const std::int32_t lx = lrow[x];
            const __m256i vlxn = _mm256_set1_epi32(static_cast<int>((l * N + x) * N));
            for (long long y = 0; y < N; ++y) {
                const long long i1 = (l * N + x) * N + y;
                const std::int32_t a = ra[i1], b = rc[i1];
                const std::int32_t lb = lrow[b];
                const std::int32_t* pa = ra + (static_cast<long long>(lb) * N + a) * N;
                const std::int32_t* pz = rc + (static_cast<long long>(lb) * N + a) * N;
                const std::int32_t* cr = ra + (static_cast<long long>(lx) * N + y) * N;
                const std::int32_t* dr = rc + (static_cast<long long>(lx) * N + y) * N;
                const __m256i vlb = _mm256_set1_epi32(static_cast<int>((l * N + b) * N));
                int z = 0;
                for (; z < vend; z += 8) {
                    __m256i p = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(pa + z));
                    __m256i zp = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(pz + z));
                    __m256i i3 = _mm256_add_epi32(vlb, zp);
                    __m256i q = gather(ra, i3), r2 = gather(rc, i3);

                    __m256i c = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(cr + z));
                    __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dr + z));
                    __m256i j2 = _mm256_add_epi32(vlxn, d);
                    __m256i xp = gather(ra, j2), dp = gather(rc, j2);
                    __m256i ldp = gather(mul, _mm256_add_epi32(vlrow, dp));
                    __m256i j3 = _mm256_add_epi32(
                        _mm256_add_epi32(_mm256_mullo_epi32(ldp, vn2), _mm256_mullo_epi32(xp, vn)),
                        c);
                    __m256i x2 = gather(ra, j3), c2 = gather(rc, j3);

                    int m = neq_mask(p, x2) | neq_mask(q, c2) | neq_mask(r2, dp);
                    if (m) {
                        int lane = __builtin_ctz(static_cast<unsigned>(m));
                        return {true, u64(((l * N + x) * N + y) * N + z + lane)};
                    }
                }
                for (; z < n; ++z) {
                    const std::int32_t pp = pa[z], zpp = pz[z];
                    const long long i3 = (l * N + b) * N + zpp;
                    const std::int32_t qq = ra[i3], rr2 = rc[i3];
                    const std::int32_t cc = cr[z], dd = dr[z];
                    const long long j2 = (l * N + x) * N + dd;
                    const std::int32_t xpp = ra[j2], dpp = rc[j2];
                    const long long j3 = (static_cast<long long>(lrow[dpp]) * N + xpp) * N + cc;
                    if (pp != ra[j3] || qq != rc[j3] || rr2 != dpp)
                        return {true, u64(((l * N + x) * N + y) * N + z)};
                }
            }
        }
    }
    return {};
}

}  // namespace dyb::kernels::detail

#endif  // DYB_HAVE_AVX2
