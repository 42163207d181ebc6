#pragma once

#include <functional>
#include <vector>

#include "dyb/intpoly.hpp"
#include "dyb/perm.hpp"

namespace dyb {

/// Integer exponent sequence I = (i_1, ..., i_l), l >= 1, encoding the
/// alternating expression X^{i_1} Y^{i_2} X^{i_3} ...  (odd positions X,
/// even positions Y).  Zero exponents are allowed and act as identity
/// factors.
struct Word {
    std::vector<long long> exps;

    explicit Word(std::vector<long long> e) : exps(std::move(e)) {
        if (exps.empty()) throw Error("word must have length >= 1");
    }
    std::size_t length() const { return exps.size(); }
    long long degree_sum() const;  // i_1 + ... + i_l

    friend bool operator==(const Word& a, const Word& b) { return a.exps == b.exps; }
};

/// w_I(A, B) as a permutation: the alternating product of powers of A and
/// B, rightmost factor applied first.
Perm apply_word(const Word& w, const Perm& a, const Perm& b);

/// The alternating Laurent polynomial attached to a word:
///   1 + sum_{j=1}^{L} (-1)^j X^{i_1 + ... + i_j},
/// where L = l for even l and L = l - 1 for odd l.  Requires l >= 2.
IntPoly phi_of_word(const Word& w);

/// All invertible residues r mod n with phi(r) = 0, by exhaustive scan.
/// Returned in increasing order.
std::vector<long long> search_roots(const Word& w, const Modulus& n);

/// All words I with 2 <= length <= max_len and |i_m| <= max_abs_exp whose
/// alternating polynomial is divisible by the k-th cyclotomic polynomial.
/// Enumeration is deterministic: lengths ascending, then lexicographic with
/// components ordered -max_abs_exp < ... < max_abs_exp.  A non-negative
/// `limit` stops the search after that many results.
std::vector<Word> search_words(int k, int max_len, int max_abs_exp, long long limit = -1);

}  // namespace dyb
