#include "kernels_internal.hpp"

namespace dyb::kernels::detail {

namespace {
inline std::uint64_t u64(long long v) { return static_cast<std::uint64_t>(v); }
}

Scan axiom4_range_scalar(const std::int32_t* eta, int n, int xy_begin, int xy_end) {
    const long long N = n;
    for (long long xy = xy_begin; xy < xy_end; ++xy) {
        const std::int32_t* exy = eta + xy * N;
        for (long long u = 0; u < N; ++u) {
            const std::int32_t a = exy[u];
            for (long long v = 0; v < N; ++v) {
                const std::int32_t b = exy[v];
                const std::int32_t* euv = eta + (u * N + v) * N;
                const std::int32_t* eab = eta + (a * N + b) * N;
                for (long long w = 0; w < N; ++w) {
                    if (exy[euv[w]] != eab[exy[w]])
                        return {true, u64(((xy * N + u) * N + v) * N + w)};
                }
            }
        }
    }
    return {};
}

Scan displacement_range_scalar(const std::int32_t* eta, int n, int xy_begin, int xy_end) {
    const long long N = n;
    for (long long xy = xy_begin; xy < xy_end; ++xy) {
        const std::int32_t* exy = eta + xy * N;
        for (long long z = 0; z < N; ++z) {
            const std::int32_t lhs = exy[z];
            for (long long w = 0; w < N; ++w) {
                if (eta[(w * N + exy[w]) * N + z] != lhs)
                    return {true, u64((xy * N + z) * N + w)};
            }
        }
    }
    return {};
}

Scan mu1_range_scalar(const std::int32_t* mu, int n, int ab_begin, int ab_end) {
    const long long N = n;
    for (long long ab = ab_begin; ab < ab_end; ++ab) {
        const long long a = ab / N, b = ab % N;
        const std::int32_t* mab = mu + ab * N;
        for (long long c = 0; c < N; ++c) {
            const std::int32_t m1 = mab[c];
            const std::int32_t* m1c = mu + (m1 * N + c) * N;
            const std::int32_t* mbc = mu + (b * N + c) * N;
            const std::int32_t* am1 = mu + (a * N + m1) * N;
            for (long long d = 0; d < N; ++d) {
                if (am1[m1c[d]] != mab[mbc[d]]) return {true, u64((ab * N + c) * N + d)};
            }
        }
    }
    return {};
}

Scan mu2_range_scalar(const std::int32_t* mu, int n, int ab_begin, int ab_end) {
    const long long N = n;
    for (long long ab = ab_begin; ab < ab_end; ++ab) {
        const long long b = ab % N;
        const std::int32_t* mab = mu + ab * N;
        for (long long c = 0; c < N; ++c) {
            const std::int32_t m1 = mab[c];
            const std::int32_t* lhs_row = mu + (m1 * N + c) * N;
            const std::int32_t* mbc = mu + (b * N + c) * N;
            for (long long d = 0; d < N; ++d) {
                const std::int32_t m3 = mbc[d];
                const std::int32_t t = mab[m3];  // mu(a, b, m3)
                if (lhs_row[d] != mu[(t * N + m3) * N + d])
                    return {true, u64((ab * N + c) * N + d)};
            }
        }
    }
    return {};
}

Scan dybe_range_scalar(const std::int32_t* sa, const std::int32_t* sc, const std::int32_t* mul,
                       int n, int l_begin, int l_end) {
    const long long N = n;
    for (long long l = l_begin; l < l_end; ++l) {
        const std::int32_t* lrow = mul + l * N;
        for (long long x = 0; x < N; ++x) {
            for (long long y = 0; y < N; ++y) {
                for (long long z = 0; z < N; ++z) {
                    // left side: sigma_12(l z), sigma_23(l), sigma_12(l .)
                    const long long i1 = (static_cast<long long>(lrow[z]) * N + x) * N + y;
                    const std::int32_t a1 = sa[i1], b1 = sc[i1];
                    const long long i2 = (l * N + b1) * N + z;
                    const std::int32_t a2 = sa[i2], b2 = sc[i2];
                    const long long i3 = (static_cast<long long>(lrow[b2]) * N + a1) * N + a2;
                    const std::int32_t a3 = sa[i3], b3 = sc[i3];
                    // right side: sigma_23(l), sigma_12(l .), sigma_23(l)
                    const long long j1 = (l * N + y) * N + z;
                    const std::int32_t c1 = sa[j1], d1 = sc[j1];
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

Scan qdybe_range_scalar(const std::int32_t* ra, const std::int32_t* rc, const std::int32_t* mul,
                        int n, int l_begin, int l_end) {
    const long long N = n;
    for (long long l = l_begin; l < l_end; ++l) {
        const std::int32_t* lrow = mul + l * N;
        for (long long x = 0; x < N; ++x) {
            const std::int32_t lx = lrow[x];
            for (long long y = 0; y < N; ++y) {
                // left side: R_23(l) R_13(l .) R_12(l)
                const long long i1 = (l * N + x) * N + y;
                const std::int32_t a = ra[i1], b = rc[i1];
                const std::int32_t lb = lrow[b];
                const std::int32_t* pa = ra + (static_cast<long long>(lb) * N + a) * N;
                const std::int32_t* pz = rc + (static_cast<long long>(lb) * N + a) * N;
                // right side: R_12(l .) R_13(l) R_23(l x)
                const std::int32_t* cr = ra + (static_cast<long long>(lx) * N + y) * N;
                const std::int32_t* dr = rc + (static_cast<long long>(lx) * N + y) * N;
                for (long long z = 0; z < N; ++z) {
                    const std::int32_t p = pa[z], zp = pz[z];
                    const long long i3 = (l * N + b) * N + zp;
                    const std::int32_t q = ra[i3], r2 = rc[i3];

                    const std::int32_t c = cr[z], d = dr[z];
                    const long long j2 = (l * N + x) * N + d;
                    const std::int32_t xp = ra[j2], dp = rc[j2];
                    const long long j3 = (static_cast<long long>(lrow[dp]) * N + xp) * N + c;
                    const std::int32_t x2 = ra[j3], c2 = rc[j3];
                    if (p != x2 || q != c2 || r2 != dp)
                        return {true, u64(((l * N + x) * N + y) * N + z)};
                }
            }
        }
    }
    return {};
}

}  // namespace dyb::kernels::detail
