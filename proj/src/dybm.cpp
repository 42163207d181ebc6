#include "dyb/dybm.hpp"

#include "dyb/kernels.hpp"

namespace dyb {

namespace {

std::vector<int> decode(std::uint64_t index, int n, int arity) {
    std::vector<int> tuple(static_cast<std::size_t>(arity));
    for (int i = arity - 1; i >= 0; --i) {
        tuple[static_cast<std::size_t>(i)] = static_cast<int>(index % static_cast<std::uint64_t>(n));
        index /= static_cast<std::uint64_t>(n);
    }
    return tuple;
}

}  // namespace

TernaryOp mu_from_eta(const TernaryOp& eta) {
    int n = eta.size();
    std::vector<std::int32_t> flat(eta.table().size());
    std::size_t pos = 0;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c) flat[pos++] = static_cast<std::int32_t>(eta.eval(b, a, c));
    TernaryOp mu = TernaryOp::from_table(n, std::move(flat));
    if (eta.affine()) {
        const AffineCoeffs& e = *eta.affine();
        TernaryOp closed =
            TernaryOp::from_affine(AffineCoeffs{e.modulus, e.dim, e.beta, e.alpha, e.gamma});
        if (closed.table() != mu.table()) throw ClosedFormMismatch(0, 0, 0);
        return closed;
    }
    return mu;
}

Report check_mu_identities(const TernaryOp& mu) {
    Report rep;
    kernels::Scan s1 = kernels::mu_identity1_scan(mu.table().data(), mu.size());
    CheckResult r1{"mu_identity1", !s1.failed, {}};
    if (s1.failed) r1.witness = decode(s1.index, mu.size(), 4);
    rep.parts.push_back(std::move(r1));

    kernels::Scan s2 = kernels::mu_identity2_scan(mu.table().data(), mu.size());
    CheckResult r2{"mu_identity2", !s2.failed, {}};
    if (s2.failed) r2.witness = decode(s2.index, mu.size(), 4);
    rep.parts.push_back(std::move(r2));
    return rep;
}

std::pair<int, int> mu_identity1_sides(const TernaryOp& mu, int a, int b, int c, int d) {
    int m1 = mu.eval(a, b, c);
    int lhs = mu.eval(a, m1, mu.eval(m1, c, d));
    int rhs = mu.eval(a, b, mu.eval(b, c, d));
    return {lhs, rhs};
}

std::pair<int, int> mu_identity2_sides(const TernaryOp& mu, int a, int b, int c, int d) {
    int m1 = mu.eval(a, b, c);
    int m3 = mu.eval(b, c, d);
    int lhs = mu.eval(m1, c, d);
    int rhs = mu.eval(mu.eval(a, b, m3), m3, d);
    return {lhs, rhs};
}

Report check_unique_solvability(const TernaryOp& mu) {
    Report rep;
    int n = mu.size();
    for (int pos = 0; pos < 3; ++pos) {
        CheckResult part{"solvability_pos" + std::to_string(pos + 1), true, {}};
        std::vector<int> hit(static_cast<std::size_t>(n));
        for (int f1 = 0; f1 < n && part.pass; ++f1) {
            for (int f2 = 0; f2 < n && part.pass; ++f2) {
                std::fill(hit.begin(), hit.end(), -1);
                for (int s = 0; s < n; ++s) {
                    int val = pos == 0   ? mu.eval(s, f1, f2)
                              : pos == 1 ? mu.eval(f1, s, f2)
                                         : mu.eval(f1, f2, s);
                    if (hit[static_cast<std::size_t>(val)] >= 0) {
                        part.pass = false;
                        part.witness = {f1, f2, hit[static_cast<std::size_t>(val)], s};
                        break;
                    }
                    hit[static_cast<std::size_t>(val)] = s;
                }
            }
        }
        rep.parts.push_back(std::move(part));
    }
    return rep;
}

Bijection Bijection::identity(int n) {
    Bijection b;
    b.pi = identity_perm(n);
    b.pi_inv = b.pi;
    return b;
}

Bijection Bijection::from_perm(Perm p) {
    if (!is_permutation(p)) throw Error("pi must be a bijection");
    Bijection b;
    b.pi_inv = inverse_perm(p);
    b.pi = std::move(p);
    return b;
}

DynamicalMap DynamicalMap::from_table(Quasigroup q, std::vector<std::int32_t> a_tab,
                                      std::vector<std::int32_t> c_tab) {
    int n = q.order();
    std::size_t expect = static_cast<std::size_t>(n) * static_cast<std::size_t>(n) *
                         static_cast<std::size_t>(n);
    if (a_tab.size() != expect || c_tab.size() != expect)
        throw SizeMismatch(a_tab.size(), expect);
    for (std::size_t i = 0; i < expect; ++i)
        if (a_tab[i] < 0 || a_tab[i] >= n || c_tab[i] < 0 || c_tab[i] >= n)
            throw Error("sigma table entry out of range");
    DynamicalMap m(std::move(q));
    m.a_ = std::move(a_tab);
    m.c_ = std::move(c_tab);
    return m;
}

DynamicalMap DynamicalMap::with_entry(int lambda, int u, int v, int a, int c) const {
    DynamicalMap m = *this;
    m.a_[idx(lambda, u, v)] = static_cast<std::int32_t>(a);
    m.c_[idx(lambda, u, v)] = static_cast<std::int32_t>(c);
    return m;
}

DynamicalMap build_sigma(const TernaryOp& eta, const Quasigroup& q, const Bijection& pi) {
    if (eta.size() != q.order())
        throw SizeMismatch(static_cast<std::size_t>(eta.size()),
                           static_cast<std::size_t>(q.order()));
    if (static_cast<int>(pi.pi.size()) != q.order())
        throw SizeMismatch(pi.pi.size(), static_cast<std::size_t>(q.order()));

    Report hps = check_hps(eta);
    if (!hps.pass()) {
        for (auto& p : hps.parts)
            if (!p.pass) throw PrerequisiteFailed(p.check);
    }
    if (!check_displacement(eta).pass()) throw PrerequisiteFailed("displacement");

    TernaryOp mu = mu_from_eta(eta);
    int n = q.order();
    std::size_t total = static_cast<std::size_t>(n) * static_cast<std::size_t>(n) *
                        static_cast<std::size_t>(n);
    std::vector<std::int32_t> a_tab(total), c_tab(total);
    std::size_t pos = 0;
    for (int l = 0; l < n; ++l)
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v) {
                int lv = q.mul(l, v);
                int lvu = q.mul(lv, u);
                int h = pi.pi_inv[static_cast<std::size_t>(
                    mu.eval(pi.pi[static_cast<std::size_t>(l)], pi.pi[static_cast<std::size_t>(lv)],
                            pi.pi[static_cast<std::size_t>(lvu)]))];
                int a = q.left_div(h, lvu);
                int c = q.left_div(l, h);
                if (q.mul(q.mul(l, c), a) != lvu)
                    throw Error("weight-zero identity violated during construction");
                a_tab[pos] = static_cast<std::int32_t>(a);
                c_tab[pos] = static_cast<std::int32_t>(c);
                ++pos;
            }
    return DynamicalMap::from_table(q, std::move(a_tab), std::move(c_tab));
}

Report check_dybe(const DynamicalMap& sigma) {
    kernels::Scan s = kernels::dybe_scan(sigma.a_table().data(), sigma.c_table().data(),
                                         sigma.quasigroup().mul_table().data(), sigma.size());
    CheckResult r{"dybe", !s.failed, {}};
    if (s.failed) r.witness = decode(s.index, sigma.size(), 4);
    return Report{{std::move(r)}};
}

DynamicalMap to_R_form(const DynamicalMap& sigma) {
    int n = sigma.size();
    std::vector<std::int32_t> a_tab(sigma.a_table().size()), c_tab(sigma.c_table().size());
    std::size_t pos = 0;
    for (int l = 0; l < n; ++l)
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y) {
                auto [a, c] = sigma.apply(l, y, x);
                a_tab[pos] = static_cast<std::int32_t>(a);
                c_tab[pos] = static_cast<std::int32_t>(c);
                ++pos;
            }
    return DynamicalMap::from_table(sigma.quasigroup(), std::move(a_tab), std::move(c_tab));
}

Report check_qdybe(const DynamicalMap& r) {
    kernels::Scan s = kernels::qdybe_scan(r.a_table().data(), r.c_table().data(),
                                          r.quasigroup().mul_table().data(), r.size());
    CheckResult res{"qdybe", !s.failed, {}};
    if (s.failed) res.witness = decode(s.index, r.size(), 4);
    return Report{{std::move(res)}};
}

Report check_bijective(const DynamicalMap& sigma) {
    int n = sigma.size();
    CheckResult r{"bijective", true, {}};
    std::vector<int> seen(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
    for (int l = 0; l < n && r.pass; ++l) {
        std::fill(seen.begin(), seen.end(), -1);
        for (int u = 0; u < n && r.pass; ++u)
            for (int v = 0; v < n; ++v) {
                auto [a, c] = sigma.apply(l, u, v);
                std::size_t key = static_cast<std::size_t>(a) * static_cast<std::size_t>(n) +
                                  static_cast<std::size_t>(c);
                if (seen[key] >= 0) {
                    int prev = seen[key];
                    r.pass = false;
                    r.witness = {l, prev / n, prev % n, u, v};
                    break;
                }
                seen[key] = u * n + v;
            }
    }
    return Report{{std::move(r)}};
}

std::pair<std::array<int, 3>, std::array<int, 3>> dybe_sides(const DynamicalMap& sigma, int lambda,
                                                             int x, int y, int z) {
    const Quasigroup& q = sigma.quasigroup();
    // left: sigma_12 at the shifted parameter, sigma_23, sigma_12 again
    auto [a1, b1] = sigma.apply(q.mul(lambda, z), x, y);
    auto [a2, b2] = sigma.apply(lambda, b1, z);
    auto [a3, b3] = sigma.apply(q.mul(lambda, b2), a1, a2);
    std::array<int, 3> lhs{a3, b3, b2};
    // right: sigma_23, sigma_12 at the shifted parameter, sigma_23
    auto [c1, d1] = sigma.apply(lambda, y, z);
    auto [c2, d2] = sigma.apply(q.mul(lambda, d1), x, c1);
    auto [c3, d3] = sigma.apply(lambda, d2, d1);
    std::array<int, 3> rhs{c2, c3, d3};
    return {lhs, rhs};
}

std::pair<std::array<int, 3>, std::array<int, 3>> qdybe_sides(const DynamicalMap& r, int lambda,
                                                              int x, int y, int z) {
    const Quasigroup& q = r.quasigroup();
    // left: R_12(l), R_13(l shifted by component 2), R_23(l)
    auto [a, b] = r.apply(lambda, x, y);
    auto [p, zp] = r.apply(q.mul(lambda, b), a, z);
    auto [qq, r2] = r.apply(lambda, b, zp);
    std::array<int, 3> lhs{p, qq, r2};
    // right: R_23(l shifted by component 1), R_13(l), R_12(l shifted by 3)
    auto [c, d] = r.apply(q.mul(lambda, x), y, z);
    auto [xp, dp] = r.apply(lambda, x, d);
    auto [x2, c2] = r.apply(q.mul(lambda, dp), xp, c);
    std::array<int, 3> rhs{x2, c2, dp};
    return {lhs, rhs};
}

}  // namespace dyb
