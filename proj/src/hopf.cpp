#include "dyb/hopf.hpp"

#include <algorithm>

namespace dyb {

std::vector<std::vector<int>> shift_operator(const Quasigroup& q, int a) {
    int n = q.order();
    if (a < 0 || a >= n) throw Error("shift operator index out of range");
    std::vector<std::vector<int>> m(static_cast<std::size_t>(n),
                                    std::vector<int>(static_cast<std::size_t>(n), 0));
    for (int i = 0; i < n; ++i)
        m[static_cast<std::size_t>(i)][static_cast<std::size_t>(q.mul(i, a))] = 1;
    return m;
}

SigmaIndicator::SigmaIndicator(const DynamicalMap& sigma)
    : n_(sigma.size()), a_(sigma.a_table()), c_(sigma.c_table()) {
    inv_.resize(static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_));
    for (int l = 0; l < n_; ++l)
        for (int x = 0; x < n_; ++x)
            for (int y = 0; y < n_; ++y) {
                auto [a, c] = sigma.apply(l, x, y);
                inv_[static_cast<std::size_t>(a) * static_cast<std::size_t>(n_) +
                     static_cast<std::size_t>(c)]
                    .push_back({l, x, y});
            }
    for (auto& v : inv_) std::sort(v.begin(), v.end());
}

bool SigmaIndicator::value(int x, int y, int a, int c, int lambda) const {
    std::size_t i = (static_cast<std::size_t>(lambda) * static_cast<std::size_t>(n_) +
                     static_cast<std::size_t>(x)) *
                        static_cast<std::size_t>(n_) +
                    static_cast<std::size_t>(y);
    return a_[i] == a && c_[i] == c;
}

const std::vector<std::array<int, 3>>& SigmaIndicator::preimages(int a, int c) const {
    return inv_[static_cast<std::size_t>(a) * static_cast<std::size_t>(n_) +
                static_cast<std::size_t>(c)];
}

std::string GenId::name() const {
    const char* k = kind == Kind::B ? "B" : kind == Kind::L ? "L" : "Linv";
    return std::string(k) + "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

int Presentation::count_family(int family) const {
    int c = 0;
    for (auto& r : relations)
        if (r.family == family) ++c;
    return c;
}

bool operator==(const Presentation& a, const Presentation& b) {
    if (a.n != b.n || a.generators.size() != b.generators.size() ||
        a.relations.size() != b.relations.size())
        return false;
    for (std::size_t i = 0; i < a.generators.size(); ++i)
        if (!(a.generators[i] == b.generators[i])) return false;
    for (std::size_t i = 0; i < a.relations.size(); ++i) {
        auto& ra = a.relations[i];
        auto& rb = b.relations[i];
        if (ra.family != rb.family || ra.terms.size() != rb.terms.size()) return false;
        for (std::size_t t = 0; t < ra.terms.size(); ++t)
            if (ra.terms[t].num != rb.terms[t].num || ra.terms[t].den != rb.terms[t].den ||
                ra.terms[t].gens != rb.terms[t].gens)
                return false;
    }
    return true;
}

namespace {

// Combines like words (same generator sequence) and drops zero terms,
// keeping the first-emission order otherwise.  Emission order is already
// canonical, so this only collapses genuine coincidences (one-element
// carriers, parameter-independent maps).
void combine_terms(PresRelation& rel) {
    std::vector<PresTerm> out;
    for (auto& t : rel.terms) {
        bool merged = false;
        for (auto& o : out)
            if (o.gens == t.gens && o.den == t.den) {
                o.num += t.num;
                merged = true;
                break;
            }
        if (!merged) out.push_back(t);
    }
    out.erase(std::remove_if(out.begin(), out.end(), [](const PresTerm& t) { return t.num == 0; }),
              out.end());
    rel.terms = std::move(out);
}

}  // namespace

Presentation emit_presentation(const Quasigroup& q, const DynamicalMap& sigma) {
    if (q.order() != sigma.size())
        throw SizeMismatch(static_cast<std::size_t>(q.order()),
                           static_cast<std::size_t>(sigma.size()));
    if (!check_bijective(sigma).pass()) throw PrerequisiteFailed("bijective");

    int n = q.order();
    Presentation p;
    p.n = n;

    // Generators: all B, then all L, then all Linv, row-major.
    auto gen_index = [n](GenId::Kind k, int i, int j) {
        int block = k == GenId::Kind::B ? 0 : k == GenId::Kind::L ? 1 : 2;
        return block * n * n + i * n + j;
    };
    for (auto kind : {GenId::Kind::B, GenId::Kind::L, GenId::Kind::Linv})
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) p.generators.push_back(GenId{kind, i, j});

    auto B = [&](int i, int j) { return gen_index(GenId::Kind::B, i, j); };
    auto L = [&](int i, int j) { return gen_index(GenId::Kind::L, i, j); };
    auto Li = [&](int i, int j) { return gen_index(GenId::Kind::Linv, i, j); };
    auto push = [&](PresRelation rel) {
        combine_terms(rel);
        p.relations.push_back(std::move(rel));
    };

    // Family 1: structure constants of the commutative coefficient algebra
    // on the delta basis, then one unit-decomposition relation per basis
    // element: B(i,j) * sum B(i',j') = B(i,j).
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int i2 = 0; i2 < n; ++i2)
                for (int j2 = 0; j2 < n; ++j2) {
                    PresRelation rel{1, {}};
                    rel.terms.push_back({1, 1, {B(i, j), B(i2, j2)}});
                    if (i == i2 && j == j2) rel.terms.push_back({-1, 1, {B(i, j)}});
                    push(std::move(rel));
                }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            PresRelation rel{1, {}};
            for (int i2 = 0; i2 < n; ++i2)
                for (int j2 = 0; j2 < n; ++j2)
                    rel.terms.push_back({1, 1, {B(i, j), B(i2, j2)}});
            rel.terms.push_back({-1, 1, {B(i, j)}});
            push(std::move(rel));
        }

    // Family 2: sum_c L(a,c) Linv(c,b) = delta_ab * empty word, then the
    // products in the other order.
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            PresRelation rel{2, {}};
            for (int c = 0; c < n; ++c) rel.terms.push_back({1, 1, {L(a, c), Li(c, b)}});
            if (a == b) rel.terms.push_back({-1, 1, {}});
            push(std::move(rel));
        }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            PresRelation rel{2, {}};
            for (int c = 0; c < n; ++c) rel.terms.push_back({1, 1, {Li(a, c), L(c, b)}});
            if (a == b) rel.terms.push_back({-1, 1, {}});
            push(std::move(rel));
        }

    // Family 3: shift-exchange relations, f running over the delta basis.
    // T_a(delta_t) = delta_{t'} with t' * a = t, and delta_t tensor 1 (resp.
    // 1 tensor delta_t) expands to sum_m B(t, m) (resp. B(m, t)).
    // Four shapes, each n^2 * n relations:
    //   (T_a f x 1) L(a,b)  = L(a,b) (f x 1)
    //   (1 x T_b f) L(a,b)  = L(a,b) (1 x f)
    //   (f x 1) Linv(a,b)   = Linv(a,b) (T_b f x 1)
    //   (1 x f) Linv(a,b)   = Linv(a,b) (1 x T_a f)
    for (int shape = 0; shape < 4; ++shape)
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                for (int t = 0; t < n; ++t) {
                    PresRelation rel{3, {}};
                    int ta = q.right_div(a, t);  // T_a(delta_t) = delta_{ta}
                    int tb = q.right_div(b, t);
                    switch (shape) {
                        case 0:
                            for (int m = 0; m < n; ++m)
                                rel.terms.push_back({1, 1, {B(ta, m), L(a, b)}});
                            for (int m = 0; m < n; ++m)
                                rel.terms.push_back({-1, 1, {L(a, b), B(t, m)}});
                            break;
                        case 1:
                            for (int m = 0; m < n; ++m)
                                rel.terms.push_back({1, 1, {B(m, tb), L(a, b)}});
                            for (int m = 0; m < n; ++m)
                                rel.terms.push_back({-1, 1, {L(a, b), B(m, t)}});
                            break;
                        case 2:
                            for (int m = 0; m < n; ++m)
                                rel.terms.push_back({1, 1, {B(t, m), Li(a, b)}});
                            for (int m = 0; m < n; ++m)
                                rel.terms.push_back({-1, 1, {Li(a, b), B(tb, m)}});
                            break;
                        default:
                            for (int m = 0; m < n; ++m)
                                rel.terms.push_back({1, 1, {B(m, t), Li(a, b)}});
                            for (int m = 0; m < n; ++m)
                                rel.terms.push_back({-1, 1, {Li(a, b), B(m, ta)}});
                            break;
                    }
                    push(std::move(rel));
                }

    // Family 4: exchange relations weighted by the indicator functions.
    // Only the n^3 nonzero indicators contribute terms.
    SigmaIndicator ind(sigma);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                for (int d = 0; d < n; ++d) {
                    PresRelation rel{4, {}};
                    // sum_{x,y} (sigma^{xy}_{ac} x 1) L(y,d) L(x,b)
                    for (auto& [l, x, y] : ind.preimages(a, c))
                        for (int m = 0; m < n; ++m)
                            rel.terms.push_back({1, 1, {B(l, m), L(y, d), L(x, b)}});
                    // - sum_{x,y} (1 x sigma^{bd}_{xy}) L(c,y) L(a,x)
                    for (int m = 0; m < n; ++m) {
                        auto [x, y] = sigma.apply(m, b, d);
                        for (int l = 0; l < n; ++l)
                            rel.terms.push_back({-1, 1, {B(l, m), L(c, y), L(a, x)}});
                    }
                    push(std::move(rel));
                }

    // Family 5: the empty word equals the decomposition of the unit.
    {
        PresRelation rel{5, {}};
        rel.terms.push_back({1, 1, {}});
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) rel.terms.push_back({-1, 1, {B(i, j)}});
        push(std::move(rel));
    }

    return p;
}

GradedSetMap graded_identity(const Quasigroup& q, int arity) {
    int n = q.order();
    std::size_t tuples = 1;
    for (int i = 0; i < arity; ++i) tuples *= static_cast<std::size_t>(n);
    GradedSetMap m;
    m.n = n;
    m.arity = arity;
    m.at.assign(static_cast<std::size_t>(n), std::vector<std::int32_t>(tuples));
    for (auto& row : m.at)
        for (std::size_t t = 0; t < tuples; ++t) row[t] = static_cast<std::int32_t>(t);
    return m;
}

GradedSetMap graded_sigma(const DynamicalMap& sigma) {
    int n = sigma.size();
    GradedSetMap m;
    m.n = n;
    m.arity = 2;
    m.at.assign(static_cast<std::size_t>(n),
                std::vector<std::int32_t>(static_cast<std::size_t>(n) * static_cast<std::size_t>(n)));
    for (int l = 0; l < n; ++l)
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v) {
                auto [a, c] = sigma.apply(l, u, v);
                m.at[static_cast<std::size_t>(l)][static_cast<std::size_t>(u * n + v)] =
                    static_cast<std::int32_t>(a * n + c);
            }
    return m;
}

GradedSetMap graded_tensor(const Quasigroup& q, const GradedSetMap& f, const GradedSetMap& g) {
    int n = q.order();
    GradedSetMap m;
    m.n = n;
    m.arity = f.arity + g.arity;
    std::size_t ft = f.at[0].size(), gt = g.at[0].size();
    m.at.assign(static_cast<std::size_t>(n), std::vector<std::int32_t>(ft * gt));
    for (int l = 0; l < n; ++l)
        for (std::size_t tf = 0; tf < ft; ++tf)
            for (std::size_t tg = 0; tg < gt; ++tg) {
                // grade of the right-hand basis tuple, evaluated at lambda
                int shift = l;
                std::size_t rest = tg;
                std::size_t radix = gt;
                for (int comp = 0; comp < g.arity; ++comp) {
                    radix /= static_cast<std::size_t>(n);
                    shift = q.mul(shift, static_cast<int>(rest / radix));
                    rest %= radix;
                }
                std::size_t out_f =
                    static_cast<std::size_t>(f.at[static_cast<std::size_t>(shift)][tf]);
                std::size_t out_g = static_cast<std::size_t>(g.at[static_cast<std::size_t>(l)][tg]);
                m.at[static_cast<std::size_t>(l)][tf * gt + tg] =
                    static_cast<std::int32_t>(out_f * gt + out_g);
            }
    return m;
}

GradedSetMap graded_compose(const GradedSetMap& f, const GradedSetMap& g) {
    GradedSetMap m;
    m.n = f.n;
    m.arity = f.arity;
    m.at.assign(f.at.size(), {});
    for (std::size_t l = 0; l < f.at.size(); ++l) {
        m.at[l].resize(g.at[l].size());
        for (std::size_t t = 0; t < g.at[l].size(); ++t)
            m.at[l][t] = f.at[l][static_cast<std::size_t>(g.at[l][t])];
    }
    return m;
}

Report check_fundamental_L(const DynamicalMap& sigma) {
    const Quasigroup& q = sigma.quasigroup();
    GradedSetMap s = graded_sigma(sigma);
    GradedSetMap id1 = graded_identity(q, 1);
    GradedSetMap s12 = graded_tensor(q, s, id1);
    GradedSetMap s23 = graded_tensor(q, id1, s);

    GradedSetMap lhs = graded_compose(s12, graded_compose(s23, s12));
    GradedSetMap rhs = graded_compose(s23, graded_compose(s12, s23));

    int n = sigma.size();
    CheckResult r{"fundamental_l", true, {}};
    for (int l = 0; l < n && r.pass; ++l)
        for (std::size_t t = 0; t < lhs.at[static_cast<std::size_t>(l)].size(); ++t)
            if (lhs.at[static_cast<std::size_t>(l)][t] != rhs.at[static_cast<std::size_t>(l)][t]) {
                int z = static_cast<int>(t) % n;
                int y = (static_cast<int>(t) / n) % n;
                int x = static_cast<int>(t) / (n * n);
                r.pass = false;
                r.witness = {l, x, y, z};
                break;
            }
    return Report{{std::move(r)}};
}

Report check_sigma_morphism(const DynamicalMap& sigma) {
    const Quasigroup& q = sigma.quasigroup();
    int n = sigma.size();
    CheckResult r{"sigma_morphism", true, {}};
    for (int l = 0; l < n && r.pass; ++l)
        for (int u = 0; u < n && r.pass; ++u)
            for (int v = 0; v < n; ++v) {
                auto [a, c] = sigma.apply(l, u, v);
                if (q.mul(q.mul(l, c), a) != q.mul(q.mul(l, v), u)) {
                    r.pass = false;
                    r.witness = {l, u, v};
                    break;
                }
            }
    return Report{{std::move(r)}};
}

}  // namespace dyb
