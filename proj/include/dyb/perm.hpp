#pragma once

#include <cstdint>
#include <vector>

namespace dyb {

/// Permutation of {0, ..., n-1} in one-line notation.
using Perm = std::vector<std::int32_t>;

bool is_permutation(const Perm& p);
Perm identity_perm(int n);
/// p after q: (p * q)(i) = p[q[i]].
Perm compose(const Perm& p, const Perm& q);
Perm inverse_perm(const Perm& p);
/// p^e by repeated squaring; negative e through the inverse.
Perm perm_pow(const Perm& p, long long e);

}  // namespace dyb
