#include <atomic>
#include <thread>
#include <vector>

#include "dyb/errors.hpp"
#include "kernels_internal.hpp"

namespace dyb::kernels {

namespace {

std::atomic<Backend> g_backend{Backend::Auto};
std::atomic<int> g_threads{1};

bool cpu_has_avx2() {
#if defined(DYB_HAVE_AVX2)
    return __builtin_cpu_supports("avx2");
#else
    return false;
#endif
}

// Splits [0, outer) into chunks, runs `fn(begin, end)` per chunk and keeps
// the smallest failing index.  `inner` is the per-outer-step work estimate
// used to skip thread spawn for tiny scans.
template <typename F>
Scan run_chunked(int outer, std::uint64_t inner, F&& fn) {
    int want = g_threads.load();
    if (want == 0) want = static_cast<int>(std::thread::hardware_concurrency());
    if (want < 1) want = 1;
    if (want > outer) want = outer;
    if (static_cast<std::uint64_t>(outer) * inner < (1u << 15)) want = 1;

    if (want <= 1) return fn(0, outer);

    std::vector<Scan> results(static_cast<std::size_t>(want));
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(want));
    for (int t = 0; t < want; ++t) {
        int begin = static_cast<int>(static_cast<long long>(outer) * t / want);
        int end = static_cast<int>(static_cast<long long>(outer) * (t + 1) / want);
        pool.emplace_back([&results, t, begin, end, &fn] {
            results[static_cast<std::size_t>(t)] = fn(begin, end);
        });
    }
    for (auto& th : pool) th.join();

    Scan best;
    for (auto& r : results)
        if (r.failed && (!best.failed || r.index < best.index)) best = r;
    return best;
}

bool use_avx2() {
    Backend b = g_backend.load();
    if (b == Backend::Scalar) return false;
    if (b == Backend::Avx2) return true;
    return cpu_has_avx2();
}

}  // namespace

bool avx2_supported() { return cpu_has_avx2(); }

void set_backend(Backend b) {
    if (b == Backend::Avx2 && !cpu_has_avx2())
        throw Error("AVX2 backend requested but not available on this CPU");
    g_backend.store(b);
}

Backend backend() { return g_backend.load(); }

Backend resolved_backend() { return use_avx2() ? Backend::Avx2 : Backend::Scalar; }

void set_threads(int t) {
    if (t < 0) throw Error("thread count must be >= 0");
    g_threads.store(t);
}

int threads() { return g_threads.load(); }

Scan axiom4_scan(const std::int32_t* eta, int n) {
    std::uint64_t inner = static_cast<std::uint64_t>(n) * n * n;
    return run_chunked(n * n, inner, [&](int b, int e) {
#if defined(DYB_HAVE_AVX2)
        if (use_avx2()) return detail::axiom4_range_avx2(eta, n, b, e);
#endif
        return detail::axiom4_range_scalar(eta, n, b, e);
    });
}

Scan displacement_scan(const std::int32_t* eta, int n) {
    std::uint64_t inner = static_cast<std::uint64_t>(n) * n;
    return run_chunked(n * n, inner, [&](int b, int e) {
#if defined(DYB_HAVE_AVX2)
        if (use_avx2()) return detail::displacement_range_avx2(eta, n, b, e);
#endif
        return detail::displacement_range_scalar(eta, n, b, e);
    });
}

Scan mu_identity1_scan(const std::int32_t* mu, int n) {
    std::uint64_t inner = static_cast<std::uint64_t>(n) * n;
    return run_chunked(n * n, inner, [&](int b, int e) {
#if defined(DYB_HAVE_AVX2)
        if (use_avx2()) return detail::mu1_range_avx2(mu, n, b, e);
#endif
        return detail::mu1_range_scalar(mu, n, b, e);
    });
}

Scan mu_identity2_scan(const std::int32_t* mu, int n) {
    std::uint64_t inner = static_cast<std::uint64_t>(n) * n;
    return run_chunked(n * n, inner, [&](int b, int e) {
#if defined(DYB_HAVE_AVX2)
        if (use_avx2()) return detail::mu2_range_avx2(mu, n, b, e);
#endif
        return detail::mu2_range_scalar(mu, n, b, e);
    });
}

Scan dybe_scan(const std::int32_t* sig_a, const std::int32_t* sig_c, const std::int32_t* mul,
               int n) {
    std::uint64_t inner = static_cast<std::uint64_t>(n) * n * n;
    return run_chunked(n, inner, [&](int b, int e) {
#if defined(DYB_HAVE_AVX2)
        if (use_avx2()) return detail::dybe_range_avx2(sig_a, sig_c, mul, n, b, e);
#endif
        return detail::dybe_range_scalar(sig_a, sig_c, mul, n, b, e);
    });
}

Scan qdybe_scan(const std::int32_t* r_a, const std::int32_t* r_c, const std::int32_t* mul,
                int n) {
    std::uint64_t inner = static_cast<std::uint64_t>(n) * n * n;
    return run_chunked(n, inner, [&](int b, int e) {
#if defined(DYB_HAVE_AVX2)
        if (use_avx2()) return detail::qdybe_range_avx2(r_a, r_c, mul, n, b, e);
#endif
        return detail::qdybe_range_scalar(r_a, r_c, mul, n, b, e);
    });
}

}  // namespace dyb::kernels
