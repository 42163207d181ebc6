#include "dyb/ternary.hpp"

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

TernaryOp TernaryOp::from_table(int n, std::vector<std::int32_t> flat) {
    if (n < 1) throw Error("ternary carrier must be nonempty");
    std::size_t expect = static_cast<std::size_t>(n) * static_cast<std::size_t>(n) *
                         static_cast<std::size_t>(n);
    if (flat.size() != expect) throw Error("ternary table has wrong size");
    for (auto v : flat)
        if (v < 0 || v >= n) throw Error("ternary table entry out of range");
    TernaryOp t;
    t.n_ = n;
    t.t_ = std::move(flat);
    return t;
}

TernaryOp TernaryOp::from_affine(const AffineCoeffs& a) {
    Modulus m(a.modulus);
    if (a.dim < 1) throw Error("module dimension must be >= 1");
    long long size = 1;
    for (int i = 0; i < a.dim; ++i) size *= a.modulus;

    Residue al(a.alpha, m), be(a.beta, m), ga(a.gamma, m);
    std::vector<std::int32_t> flat(
        static_cast<std::size_t>(size) * static_cast<std::size_t>(size) *
        static_cast<std::size_t>(size));
    std::size_t pos = 0;
    for (long long x = 0; x < size; ++x) {
        ModuleVec xv = ModuleVec::from_index(x, m, a.dim);
        ModuleVec ax = al * xv;
        for (long long y = 0; y < size; ++y) {
            ModuleVec sum = ax + be * ModuleVec::from_index(y, m, a.dim);
            for (long long z = 0; z < size; ++z) {
                flat[pos++] = static_cast<std::int32_t>(
                    (sum + ga * ModuleVec::from_index(z, m, a.dim)).to_index());
            }
        }
    }
    TernaryOp t = from_table(static_cast<int>(size), std::move(flat));
    t.affine_ = a;
    return t;
}

TernaryOp eta_table(const FiniteSSet& s, const Word& w) {
    int n = s.size();
    std::vector<std::int32_t> flat(static_cast<std::size_t>(n) * static_cast<std::size_t>(n) *
                                   static_cast<std::size_t>(n));
    std::size_t pos = 0;
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            Perm p = s.word_perm(w, x, y);
            for (int z = 0; z < n; ++z) flat[pos++] = p[static_cast<std::size_t>(z)];
        }
    TernaryOp t = TernaryOp::from_table(n, std::move(flat));

    if (s.affine_spec()) {
        const AffineSpec& spec = *s.affine_spec();
        Modulus m(spec.modulus);
        Residue r(spec.r, m);
        // single-letter words have the empty alternating sum, phi = 1
        Residue phi = w.length() >= 2 ? phi_of_word(w).eval_mod(r) : Residue(1, m);
        Residue rd = r.pow(w.degree_sum());
        AffineCoeffs coeffs{spec.modulus, spec.dim, (phi - rd).value(), (Residue(1, m) - phi).value(),
                            rd.value()};
        TernaryOp closed = TernaryOp::from_affine(coeffs);
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y)
                for (int z = 0; z < n; ++z)
                    if (closed.eval(x, y, z) != t.eval(x, y, z)) throw ClosedFormMismatch(x, y, z);
        t.affine_ = coeffs;
    }
    return t;
}

Report check_hps(const TernaryOp& t) {
    Report rep;
    int n = t.size();

    CheckResult a3{"hps_axiom3", true, {}};
    for (int x = 0; x < n && a3.pass; ++x)
        for (int y = 0; y < n; ++y)
            if (t.eval(x, y, x) != y) {
                a3.pass = false;
                a3.witness = {x, y};
                break;
            }
    rep.parts.push_back(std::move(a3));

    kernels::Scan s = kernels::axiom4_scan(t.table().data(), n);
    CheckResult a4{"hps_axiom4", !s.failed, {}};
    if (s.failed) a4.witness = decode(s.index, n, 5);
    rep.parts.push_back(std::move(a4));
    return rep;
}

Report check_displacement(const TernaryOp& t) {
    kernels::Scan s = kernels::displacement_scan(t.table().data(), t.size());
    CheckResult r{"displacement", !s.failed, {}};
    if (s.failed) r.witness = decode(s.index, t.size(), 4);
    return Report{{std::move(r)}};
}

std::pair<int, int> axiom4_sides(const TernaryOp& t, int x, int y, int u, int v, int w) {
    int lhs = t.eval(x, y, t.eval(u, v, w));
    int rhs = t.eval(t.eval(x, y, u), t.eval(x, y, v), t.eval(x, y, w));
    return {lhs, rhs};
}

std::pair<int, int> displacement_sides(const TernaryOp& t, int x, int y, int z, int w) {
    return {t.eval(x, y, z), t.eval(w, t.eval(x, y, w), z)};
}

}  // namespace dyb
