// Times the scalar and AVX2 backends of each exhaustive scan on valid
// inputs (full scans, no early exit).  Manual tool; not part of ctest.

#include <chrono>
#include <cstdio>
#include <string>

#include "dyb/dybm.hpp"
#include "dyb/kernels.hpp"

using namespace dyb;
namespace k = dyb::kernels;

namespace {

double time_ms(const std::function<k::Scan()>& fn, int reps) {
    // warm up once, then take the best of `reps`
    if (fn().failed) std::puts("warning: scan failed; timing an early exit");
    double best = 1e300;
    for (int i = 0; i < reps; ++i) {
        auto t0 = std::chrono::steady_clock::now();
        fn();
        auto t1 = std::chrono::steady_clock::now();
        best = std::min(best, std::chrono::duration<double, std::milli>(t1 - t0).count());
    }
    return best;
}

void row(const std::string& name, std::uint64_t tuples, const std::function<k::Scan()>& fn,
         int reps) {
    k::set_backend(k::Backend::Scalar);
    double scalar = time_ms(fn, reps);
    double vec = -1;
    if (k::avx2_supported()) {
        k::set_backend(k::Backend::Avx2);
        vec = time_ms(fn, reps);
    }
    k::set_backend(k::Backend::Auto);
    if (vec >= 0)
        std::printf("%-16s %12llu tuples   scalar %8.2f ms   avx2 %8.2f ms   speedup %.2fx\n",
                    name.c_str(), static_cast<unsigned long long>(tuples), scalar, vec,
                    scalar / vec);
    else
        std::printf("%-16s %12llu tuples   scalar %8.2f ms   (no avx2)\n", name.c_str(),
                    static_cast<unsigned long long>(tuples), scalar);
}

}  // namespace

int main(int argc, char** argv) {
    int n = argc > 1 ? std::atoi(argv[1]) : 32;
    int threads = argc > 2 ? std::atoi(argv[2]) : 1;
    k::set_threads(threads);
    std::printf("carrier size %d, %d thread(s)\n", n, threads);

    // valid inputs so every scan runs to completion
    TernaryOp eta = TernaryOp::from_affine(AffineCoeffs{n, 1, n - 3, 1, 3});
    TernaryOp mu = mu_from_eta(eta);
    DynamicalMap sigma = build_sigma(eta, cyclic_group(n), Bijection::identity(n));
    DynamicalMap r = to_R_form(sigma);

    std::uint64_t n4 = static_cast<std::uint64_t>(n) * n * n * n;
    std::uint64_t n5 = n4 * static_cast<std::uint64_t>(n);

    row("axiom4", n5, [&] { return k::axiom4_scan(eta.table().data(), n); }, 3);
    row("displacement", n4, [&] { return k::displacement_scan(eta.table().data(), n); }, 5);
    row("mu_identity1", n4, [&] { return k::mu_identity1_scan(mu.table().data(), n); }, 5);
    row("mu_identity2", n4, [&] { return k::mu_identity2_scan(mu.table().data(), n); }, 5);
    row("dybe", n4,
        [&] {
            return k::dybe_scan(sigma.a_table().data(), sigma.c_table().data(),
                                sigma.quasigroup().mul_table().data(), n);
        },
        5);
    row("qdybe", n4,
        [&] {
            return k::qdybe_scan(r.a_table().data(), r.c_table().data(),
                                 r.quasigroup().mul_table().data(), n);
        },
        5);
    return 0;
}
