#include "dyb/sset.hpp"

namespace dyb {

FiniteSSet FiniteSSet::validate(std::vector<Perm> rows) {
    int n = static_cast<int>(rows.size());
    if (n == 0) throw Error("s-set carrier must be nonempty");
    for (int x = 0; x < n; ++x) {
        if (static_cast<int>(rows[static_cast<std::size_t>(x)].size()) != n)
            throw Error("s-set row length mismatch");
        if (!is_permutation(rows[static_cast<std::size_t>(x)])) throw NotBijective(x);
    }

    FiniteSSet s;
    s.n_ = n;
    s.s_ = std::move(rows);
    s.s_inv_.reserve(static_cast<std::size_t>(n));
    for (auto& r : s.s_) s.s_inv_.push_back(inverse_perm(r));

    for (int x = 0; x < n; ++x) {
        const Perm& sx = s.row(x);
        for (int y = 0; y < n; ++y) {
            const Perm& sy = s.row(y);
            const Perm& sxy = s.row(sx[static_cast<std::size_t>(y)]);
            for (int z = 0; z < n; ++z) {
                int lhs = sx[static_cast<std::size_t>(sy[static_cast<std::size_t>(z)])];
                int rhs = sxy[static_cast<std::size_t>(sx[static_cast<std::size_t>(z)])];
                if (lhs != rhs) throw SymmetryFails(x, y, z);
            }
        }
    }
    return s;
}

FiniteSSet FiniteSSet::conjugation(const Quasigroup& g) {
    int n = g.order();
    if (auto w = g.associativity_counterexample())
        throw NotAGroup("not associative at (" + std::to_string(w->u) + ", " +
                        std::to_string(w->v) + ", " + std::to_string(w->w) + ")");

    int e = -1;
    for (int c = 0; c < n && e < 0; ++c) {
        bool ok = true;
        for (int x = 0; x < n; ++x)
            if (g.mul(c, x) != x || g.mul(x, c) != x) {
                ok = false;
                break;
            }
        if (ok) e = c;
    }
    if (e < 0) throw NotAGroup("no two-sided identity");

    std::vector<int> inv(static_cast<std::size_t>(n), -1);
    for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y)
            if (g.mul(x, y) == e && g.mul(y, x) == e) {
                inv[static_cast<std::size_t>(x)] = y;
                break;
            }
        if (inv[static_cast<std::size_t>(x)] < 0)
            throw NotAGroup("no inverse for element " + std::to_string(x));
    }

    std::vector<Perm> rows(static_cast<std::size_t>(n), Perm(static_cast<std::size_t>(n)));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            rows[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] =
                static_cast<std::int32_t>(g.mul(g.mul(x, y), inv[static_cast<std::size_t>(x)]));
    return validate(std::move(rows));
}

FiniteSSet FiniteSSet::affine(long long n, int k, long long r) {
    Modulus m(n);
    Residue rr(r, m);
    if (!rr.is_invertible()) throw NotInvertible(rr.value(), n);
    if (k < 1) throw Error("module dimension must be >= 1");

    long long size = 1;
    for (int i = 0; i < k; ++i) size *= n;
    Residue one_minus_r = Residue(1, m) - rr;

    std::vector<Perm> rows(static_cast<std::size_t>(size), Perm(static_cast<std::size_t>(size)));
    for (long long xi = 0; xi < size; ++xi) {
        ModuleVec x = ModuleVec::from_index(xi, m, k);
        ModuleVec shift = one_minus_r * x;
        for (long long yi = 0; yi < size; ++yi) {
            ModuleVec y = ModuleVec::from_index(yi, m, k);
            rows[static_cast<std::size_t>(xi)][static_cast<std::size_t>(yi)] =
                static_cast<std::int32_t>((shift + rr * y).to_index());
        }
    }
    FiniteSSet s = validate(std::move(rows));
    s.affine_ = AffineSpec{n, k, rr.value()};
    return s;
}

Perm FiniteSSet::word_perm(const Word& w, int x, int y) const {
    return apply_word(w, row(x), row(y));
}

int FiniteSSet::eval_word(const Word& w, int x, int y, int z) const {
    // Apply factor by factor right-to-left; cheaper than materializing the
    // composite when only one value is needed.  Large exponents go through
    // the squaring path.
    int v = z;
    for (std::size_t m = w.exps.size(); m-- > 0;) {
        long long e = w.exps[m];
        int base = (m % 2 == 0) ? x : y;
        if (e > 16 || e < -16) {
            v = perm_pow(row(base), e)[static_cast<std::size_t>(v)];
            continue;
        }
        const Perm& p = e >= 0 ? row(base) : inv_row(base);
        for (long long t = e >= 0 ? e : -e; t > 0; --t) v = p[static_cast<std::size_t>(v)];
    }
    return v;
}

}  // namespace dyb
