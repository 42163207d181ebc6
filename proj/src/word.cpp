#include "dyb/word.hpp"

#include <cstdlib>

namespace dyb {

long long Word::degree_sum() const {
    long long d = 0;
    for (long long i : exps) d += i;
    return d;
}

Perm apply_word(const Word& w, const Perm& a, const Perm& b) {
    Perm acc = identity_perm(static_cast<int>(a.size()));
    // Left-to-right product, so multiply factors onto the accumulator from
    // the last one backwards: acc = F_1 . F_2 . ... . F_l.
    for (std::size_t m = w.exps.size(); m-- > 0;) {
        const Perm& base = (m % 2 == 0) ? a : b;  // position m+1: odd -> X
        acc = compose(perm_pow(base, w.exps[m]), acc);
    }
    return acc;
}

IntPoly phi_of_word(const Word& w) {
    if (w.length() < 2) throw WordTooShort(w.length());
    std::size_t terms = w.length() % 2 == 0 ? w.length() : w.length() - 1;
    IntPoly phi = IntPoly::constant(1);
    long long e = 0;
    for (std::size_t j = 1; j <= terms; ++j) {
        e += w.exps[j - 1];
        if (e > (1 << 30) || e < -(1 << 30)) throw Error("word exponents too large");
        long long sign = (j % 2 == 1) ? -1 : 1;
        phi = phi + IntPoly::monomial(sign, static_cast<int>(e));
    }
    return phi;
}

std::vector<long long> search_roots(const Word& w, const Modulus& n) {
    IntPoly phi = phi_of_word(w);
    std::vector<long long> roots;
    for (long long r = 1; r < n.value(); ++r) {
        Residue x(r, n);
        if (!x.is_invertible()) continue;
        if (phi.eval_mod(x).value() == 0) roots.push_back(r);
    }
    return roots;
}

namespace {

// Depth-first enumeration with an incremental evaluation filter: if
// phi_k | phi_I then phi_I(2) = 0 mod |phi_k(2)|, and phi_k(2) is odd for
// every k, so 2 is invertible and negative exponents are harmless.  The
// filter rejects almost everything; survivors get the exact division.
struct WordSearch {
    int max_abs_exp;
    long long mod = 0;                  // |phi_k(2)|, or 1 (filter disabled)
    std::vector<long long> pow2;        // 2^e mod `mod` for e in [-off, off]
    int off = 0;
    IntPoly phi_k;
    long long limit;
    std::vector<Word> out;

    std::vector<long long> exps;

    bool full() const { return limit >= 0 && static_cast<long long>(out.size()) >= limit; }

    long long p2(long long e) const { return pow2[static_cast<std::size_t>(e + off)]; }

    // value = 1 + sum over the first `depth` terms, exponent = partial sum
    void dfs(std::size_t depth, std::size_t len, long long exponent, long long value) {
        if (full()) return;
        if (depth == len) {
            if (value % mod != 0) return;
            Word w{exps};
            if (poly_divides(phi_k, phi_of_word(w))) out.push_back(w);
            return;
        }
        bool counted = (depth + 1 <= (len % 2 == 0 ? len : len - 1));
        long long sign = ((depth + 1) % 2 == 1) ? -1 : 1;
        for (int i = -max_abs_exp; i <= max_abs_exp; ++i) {
            long long e = exponent + i;
            long long v = counted ? (value + sign * p2(e)) % mod : value;
            exps[depth] = i;
            dfs(depth + 1, len, e, v);
            if (full()) return;
        }
    }
};

}  // namespace

std::vector<Word> search_words(int k, int max_len, int max_abs_exp, long long limit) {
    if (k < 1 || max_len < 1 || max_abs_exp < 1) throw Error("search bounds must be >= 1");

    WordSearch s;
    s.max_abs_exp = max_abs_exp;
    s.phi_k = cyclotomic(k);
    s.limit = limit;
    s.off = max_len * max_abs_exp;

    // phi_k(2) as the filter modulus; skip the filter for degrees where it
    // would overflow (the exact division still decides)
    if (s.phi_k.degree() <= 60) {
        long long m = 0;
        for (auto& [e, c] : s.phi_k.terms()) {
            long long t = c;
            for (int i = 0; i < e; ++i) t *= 2;
            m += t;
        }
        s.mod = std::llabs(m);
    }
    if (s.mod == 0) s.mod = 1;  // k = 1 or huge k: every word reaches the oracle

    s.pow2.assign(static_cast<std::size_t>(2 * s.off + 1), 0);
    if (s.mod > 1) {
        Modulus mm(s.mod);
        Residue two(2, mm);
        for (int e = -s.off; e <= s.off; ++e)
            s.pow2[static_cast<std::size_t>(e + s.off)] = two.pow(e).value();
    }

    for (int len = 2; len <= max_len; ++len) {
        if (s.full()) break;
        s.exps.assign(static_cast<std::size_t>(len), 0);
        s.dfs(0, static_cast<std::size_t>(len), 0, 1 % s.mod);
    }
    return s.out;
}

}  // namespace dyb
