#include "dyb/perm.hpp"

namespace dyb {

bool is_permutation(const Perm& p) {
    std::vector<bool> seen(p.size(), false);
    for (auto v : p) {
        if (v < 0 || static_cast<std::size_t>(v) >= p.size() || seen[static_cast<std::size_t>(v)])
            return false;
        seen[static_cast<std::size_t>(v)] = true;
    }
    return true;
}

Perm identity_perm(int n) {
    Perm p(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) p[static_cast<std::size_t>(i)] = i;
    return p;
}

Perm compose(const Perm& p, const Perm& q) {
    Perm r(q.size());
    for (std::size_t i = 0; i < q.size(); ++i) r[i] = p[static_cast<std::size_t>(q[i])];
    return r;
}

Perm inverse_perm(const Perm& p) {
    Perm r(p.size());
    for (std::size_t i = 0; i < p.size(); ++i)
        r[static_cast<std::size_t>(p[i])] = static_cast<std::int32_t>(i);
    return r;
}

Perm perm_pow(const Perm& p, long long e) {
    Perm base = e < 0 ? inverse_perm(p) : p;
    unsigned long long k = e < 0 ? static_cast<unsigned long long>(-(e + 1)) + 1
                                 : static_cast<unsigned long long>(e);
    Perm acc = identity_perm(static_cast<int>(p.size()));
    while (k != 0) {
        if (k & 1) acc = compose(base, acc);
        base = compose(base, base);
        k >>= 1;
    }
    return acc;
}

}  // namespace dyb
