#pragma once

// Decoder parameter selection from monomial counting.
//
// G(i) = 1 iff i is a pole order at P_inf, i.e. i lies in the semigroup
// generated by q and q+1.  C(i) = sum_{j <= i/u} G(i - u j) counts monomials
// x^r y^j z^k of weighted degree exactly i.  With N = n m(m+1)/2 + 1, the
// smallest w whose cumulative count reaches N bounds deg_u(Q), l = floor(w/u)
// bounds its z-degree, and ceil(n - w/m) - 1 errors are always corrected.

#include <string>

#include "hermes/code.hpp"
#include "hermes/errors.hpp"

namespace hermes {

inline int gap_indicator(int i, int q) {
    if (i < 0) throw ParameterError("gap_indicator needs i >= 0");
    for (int a = 0; a * q <= i; ++a) {
        if ((i - a * q) % (q + 1) == 0) return 1;
    }
    return 0;
}

inline long long count_monomials(int i, int q, int u) {
    if (i < 0 || u < 1) throw ParameterError("count_monomials needs i >= 0 and u >= 1");
    long long c = 0;
    for (int j = 0; j <= i / u; ++j) c += gap_indicator(i - u * j, q);
    return c;
}

struct DecoderParams {
    int m = 1;
    long long N = 0;
    int w = 0;
    int l = 0;
    int tau = 0;  // may be <= 0 for weak parameter choices
};

// ceil(a / b) for b > 0
inline long long ceil_div(long long a, long long b) { return a >= 0 ? (a + b - 1) / b : -((-a) / b); }

inline DecoderParams choose_params(const HermitianCode& code, int m) {
    if (m < 1) throw ParameterError("multiplicity m must be at least 1");
    const long long n = code.n();
    DecoderParams p;
    p.m = m;
    p.N = n * m * (m + 1) / 2 + 1;
    long long total = 0;
    int w = -1;
    while (total < p.N) {
        ++w;
        total += count_monomials(w, code.q(), code.u());
    }
    p.w = w;
    p.l = w / code.u();
    // ceil(n - w/m) = ceil((n m - w) / m)
    p.tau = static_cast<int>(ceil_div(n * m - w, m) - 1);
    return p;
}

}  // namespace hermes
