#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "dyb/dybm.hpp"
#include "dyb/kernels.hpp"

// Every scan has a scalar reference and an AVX2 variant.  They must return
// bit-identical results (verdict and first failing index) on any table, so
// each suite runs the same inputs through both backends plus a brute-force
// reimplementation built from the *_sides evaluators.

using namespace dyb;
namespace k = dyb::kernels;

namespace {

struct BackendGuard {
    ~BackendGuard() {
        k::set_backend(k::Backend::Auto);
        k::set_threads(1);
    }
};

std::vector<std::int32_t> random_table(std::mt19937_64& rng, int n, int arity) {
    std::size_t total = 1;
    for (int i = 0; i < arity; ++i) total *= static_cast<std::size_t>(n);
    std::vector<std::int32_t> t(total);
    for (auto& v : t) v = static_cast<std::int32_t>(rng() % static_cast<std::uint64_t>(n));
    return t;
}

k::Scan brute_axiom4(const TernaryOp& t) {
    int n = t.size();
    std::uint64_t idx = 0;
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int u = 0; u < n; ++u)
                for (int v = 0; v < n; ++v)
                    for (int w = 0; w < n; ++w, ++idx) {
                        auto [l, r] = axiom4_sides(t, x, y, u, v, w);
                        if (l != r) return {true, idx};
                    }
    return {};
}

k::Scan brute_displacement(const TernaryOp& t) {
    int n = t.size();
    std::uint64_t idx = 0;
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z)
                for (int w = 0; w < n; ++w, ++idx) {
                    auto [l, r] = displacement_sides(t, x, y, z, w);
                    if (l != r) return {true, idx};
                }
    return {};
}

k::Scan brute_mu(const TernaryOp& t, int which) {
    int n = t.size();
    std::uint64_t idx = 0;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                for (int d = 0; d < n; ++d, ++idx) {
                    auto [l, r] = which == 1 ? mu_identity1_sides(t, a, b, c, d)
                                             : mu_identity2_sides(t, a, b, c, d);
                    if (l != r) return {true, idx};
                }
    return {};
}

k::Scan brute_braid(const DynamicalMap& m, bool r_form) {
    int n = m.size();
    std::uint64_t idx = 0;
    for (int l = 0; l < n; ++l)
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y)
                for (int z = 0; z < n; ++z, ++idx) {
                    auto [lhs, rhs] = r_form ? qdybe_sides(m, l, x, y, z) : dybe_sides(m, l, x, y, z);
                    if (lhs != rhs) return {true, idx};
                }
    return {};
}

template <typename Fn>
void check_all_backends(Fn&& run, const k::Scan& expect) {
    BackendGuard guard;
    for (int threads : {1, 2, 0}) {
        k::set_threads(threads);
        k::set_backend(k::Backend::Scalar);
        k::Scan s = run();
        CHECK(s.failed == expect.failed);
        if (expect.failed) CHECK(s.index == expect.index);
        if (k::avx2_supported()) {
            k::set_backend(k::Backend::Avx2);
            k::Scan v = run();
            CHECK(v.failed == expect.failed);
            if (expect.failed) CHECK(v.index == expect.index);
        }
    }
}

}  // namespace

TEST_CASE("backend plumbing") {
    BackendGuard guard;
    k::set_backend(k::Backend::Scalar);
    CHECK(k::resolved_backend() == k::Backend::Scalar);
    k::set_backend(k::Backend::Auto);
    if (k::avx2_supported())
        CHECK(k::resolved_backend() == k::Backend::Avx2);
    else {
        CHECK(k::resolved_backend() == k::Backend::Scalar);
        CHECK_THROWS_AS(k::set_backend(k::Backend::Avx2), Error);
    }
    CHECK_THROWS_AS(k::set_threads(-1), Error);
}

TEST_CASE("ternary scans agree across backends and with brute force") {
    std::mt19937_64 rng(1234);
    // sizes straddle the 8-lane width; include passing tables
    for (int n : {1, 2, 3, 5, 7, 8, 9, 11, 13}) {
        for (int iter = 0; iter < 6; ++iter) {
            TernaryOp t = TernaryOp::from_table(n, random_table(rng, n, 3));
            check_all_backends([&] { return k::axiom4_scan(t.table().data(), n); },
                               brute_axiom4(t));
            check_all_backends([&] { return k::displacement_scan(t.table().data(), n); },
                               brute_displacement(t));
            check_all_backends([&] { return k::mu_identity1_scan(t.table().data(), n); },
                               brute_mu(t, 1));
            check_all_backends([&] { return k::mu_identity2_scan(t.table().data(), n); },
                               brute_mu(t, 2));
        }
    }
    // passing tables exercise the full-scan path
    TernaryOp good = TernaryOp::from_affine(AffineCoeffs{11, 1, 11 - 3, 1, 3});
    CHECK_FALSE(brute_axiom4(good).failed);
    check_all_backends([&] { return k::axiom4_scan(good.table().data(), 11); }, k::Scan{});
    check_all_backends([&] { return k::displacement_scan(good.table().data(), 11); }, k::Scan{});

    TernaryOp good_mu = mu_from_eta(good);
    CHECK_FALSE(brute_mu(good_mu, 1).failed);
    CHECK_FALSE(brute_mu(good_mu, 2).failed);
    check_all_backends([&] { return k::mu_identity1_scan(good_mu.table().data(), 11); },
                       k::Scan{});
    check_all_backends([&] { return k::mu_identity2_scan(good_mu.table().data(), 11); },
                       k::Scan{});
}

TEST_CASE("a parameter-dependent valid map passes the braid scans at width-crossing size") {
    // any eta of the form -t x + y + t z with t invertible gives a valid
    // construction over any same-size quasigroup
    TernaryOp eta = TernaryOp::from_affine(AffineCoeffs{9, 1, 7, 1, 2});
    Quasigroup q = random_latin_square(9, 17);
    DynamicalMap sigma = build_sigma(eta, q, Bijection::identity(9));
    CHECK_FALSE(brute_braid(sigma, false).failed);
    check_all_backends(
        [&] {
            return k::dybe_scan(sigma.a_table().data(), sigma.c_table().data(),
                                sigma.quasigroup().mul_table().data(), 9);
        },
        k::Scan{});
    DynamicalMap r = to_R_form(sigma);
    CHECK_FALSE(brute_braid(r, true).failed);
    check_all_backends(
        [&] {
            return k::qdybe_scan(r.a_table().data(), r.c_table().data(),
                                 r.quasigroup().mul_table().data(), 9);
        },
        k::Scan{});
}

TEST_CASE("braid scans agree across backends and with brute force") {
    std::mt19937_64 rng(99);
    for (int n : {2, 3, 5, 8, 9, 12}) {
        for (int iter = 0; iter < 6; ++iter) {
            Quasigroup q = random_latin_square(n, rng());
            std::vector<std::int32_t> sa = random_table(rng, n, 3);
            std::vector<std::int32_t> sc = random_table(rng, n, 3);
            DynamicalMap m = DynamicalMap::from_table(q, sa, sc);
            check_all_backends(
                [&] {
                    return k::dybe_scan(m.a_table().data(), m.c_table().data(),
                                        m.quasigroup().mul_table().data(), n);
                },
                brute_braid(m, false));
            check_all_backends(
                [&] {
                    return k::qdybe_scan(m.a_table().data(), m.c_table().data(),
                                         m.quasigroup().mul_table().data(), n);
                },
                brute_braid(m, true));
        }
    }

    // identity maps of awkward sizes pass under every backend, and their
    // R-form (the flip) passes the quantum-equation scan
    for (int n : {9, 10}) {
        std::vector<std::int32_t> a_tab, c_tab;
        for (int l = 0; l < n; ++l)
            for (int u = 0; u < n; ++u)
                for (int v = 0; v < n; ++v) {
                    a_tab.push_back(static_cast<std::int32_t>(u));
                    c_tab.push_back(static_cast<std::int32_t>(v));
                }
        DynamicalMap m = DynamicalMap::from_table(random_latin_square(n, 3), a_tab, c_tab);
        check_all_backends(
            [&] {
                return k::dybe_scan(m.a_table().data(), m.c_table().data(),
                                    m.quasigroup().mul_table().data(), n);
            },
            k::Scan{});
        DynamicalMap r = to_R_form(m);
        CHECK_FALSE(brute_braid(r, true).failed);
        check_all_backends(
            [&] {
                return k::qdybe_scan(r.a_table().data(), r.c_table().data(),
                                     r.quasigroup().mul_table().data(), n);
            },
            k::Scan{});
    }
}
