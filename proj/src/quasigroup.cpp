#include "dyb/quasigroup.hpp"

#include <algorithm>
#include <random>

#include "dyb/perm.hpp"

namespace dyb {

Quasigroup Quasigroup::validate(const std::vector<std::vector<int>>& table) {
    int n = static_cast<int>(table.size());
    if (n == 0) throw Error("empty multiplication table");
    for (auto& row : table)
        if (static_cast<int>(row.size()) != n) throw Error("multiplication table is not square");

    for (int r = 0; r < n; ++r) {
        std::vector<bool> seen(static_cast<std::size_t>(n), false);
        for (int c = 0; c < n; ++c) {
            int v = table[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
            if (v < 0 || v >= n) throw Error("table entry out of range");
            if (seen[static_cast<std::size_t>(v)]) throw NotLatin(NotLatin::Axis::Row, r, v);
            seen[static_cast<std::size_t>(v)] = true;
        }
    }
    for (int c = 0; c < n; ++c) {
        std::vector<bool> seen(static_cast<std::size_t>(n), false);
        for (int r = 0; r < n; ++r) {
            int v = table[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
            if (seen[static_cast<std::size_t>(v)]) throw NotLatin(NotLatin::Axis::Column, c, v);
            seen[static_cast<std::size_t>(v)] = true;
        }
    }

    Quasigroup q;
    q.n_ = n;
    std::size_t nn = static_cast<std::size_t>(n) * static_cast<std::size_t>(n);
    q.mul_.resize(nn);
    q.ldiv_.resize(nn);
    q.rdiv_.resize(nn);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) {
            int w = table[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)];
            q.mul_[q.idx(u, v)] = static_cast<std::int32_t>(w);
            q.ldiv_[q.idx(u, w)] = static_cast<std::int32_t>(v);
            q.rdiv_[q.idx(v, w)] = static_cast<std::int32_t>(u);
        }
    return q;
}

std::optional<Quasigroup::AssocWitness> Quasigroup::associativity_counterexample() const {
    for (int u = 0; u < n_; ++u)
        for (int v = 0; v < n_; ++v)
            for (int w = 0; w < n_; ++w) {
                int lhs = mul(mul(u, v), w);
                int rhs = mul(u, mul(v, w));
                if (lhs != rhs) return AssocWitness{u, v, w, lhs, rhs};
            }
    return std::nullopt;
}

std::vector<std::vector<int>> Quasigroup::table() const {
    std::vector<std::vector<int>> t(static_cast<std::size_t>(n_),
                                    std::vector<int>(static_cast<std::size_t>(n_)));
    for (int u = 0; u < n_; ++u)
        for (int v = 0; v < n_; ++v) t[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = mul(u, v);
    return t;
}

Quasigroup cyclic_group(int n) {
    std::vector<std::vector<int>> t(static_cast<std::size_t>(n),
                                    std::vector<int>(static_cast<std::size_t>(n)));
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) t[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = (u + v) % n;
    return Quasigroup::validate(t);
}

Quasigroup symmetric_group(int m) {
    std::vector<Perm> elems;
    Perm p = identity_perm(m);
    do {
        elems.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));

    int n = static_cast<int>(elems.size());
    auto index_of = [&](const Perm& q) {
        return static_cast<int>(std::lower_bound(elems.begin(), elems.end(), q) - elems.begin());
    };
    std::vector<std::vector<int>> t(static_cast<std::size_t>(n),
                                    std::vector<int>(static_cast<std::size_t>(n)));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            t[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] =
                index_of(compose(elems[static_cast<std::size_t>(a)], elems[static_cast<std::size_t>(b)]));
    return Quasigroup::validate(t);
}

Quasigroup random_latin_square(int n, std::uint64_t seed) {
    if (n < 1) throw Error("latin square order must be >= 1");
    std::mt19937_64 rng(seed);

    std::size_t total = static_cast<std::size_t>(n) * static_cast<std::size_t>(n);
    std::vector<int> cell(total, -1);
    std::vector<std::vector<int>> cand(total);
    std::vector<std::size_t> pos_in_cand(total, 0);

    auto allowed = [&](std::size_t pos, int v) {
        std::size_t r = pos / static_cast<std::size_t>(n), c = pos % static_cast<std::size_t>(n);
        for (std::size_t j = 0; j < c; ++j)
            if (cell[r * static_cast<std::size_t>(n) + j] == v) return false;
        for (std::size_t i = 0; i < r; ++i)
            if (cell[i * static_cast<std::size_t>(n) + c] == v) return false;
        return true;
    };

    std::size_t pos = 0;
    while (pos < total) {
        if (pos_in_cand[pos] == 0) {
            auto& cs = cand[pos];
            cs.clear();
            for (int v = 0; v < n; ++v)
                if (allowed(pos, v)) cs.push_back(v);
            // Fisher-Yates with our own draws, for reproducibility.
            for (std::size_t i = cs.size(); i > 1; --i) {
                std::size_t j = static_cast<std::size_t>(rng() % i);
                std::swap(cs[i - 1], cs[j]);
            }
        }
        if (pos_in_cand[pos] < cand[pos].size()) {
            cell[pos] = cand[pos][pos_in_cand[pos]++];
            ++pos;
            if (pos < total) pos_in_cand[pos] = 0;
        } else {
            // exhausted: backtrack
            pos_in_cand[pos] = 0;
            cell[pos] = -1;
            if (pos == 0) throw Error("latin square backtracking failed");  // unreachable
            --pos;
            cell[pos] = -1;
        }
    }

    std::vector<std::vector<int>> t(static_cast<std::size_t>(n),
                                    std::vector<int>(static_cast<std::size_t>(n)));
    for (std::size_t p = 0; p < total; ++p)
        t[p / static_cast<std::size_t>(n)][p % static_cast<std::size_t>(n)] = cell[p];
    return Quasigroup::validate(t);
}

}  // namespace dyb
