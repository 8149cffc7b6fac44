#pragma once

// Text forms.
//
//   field element   "0", "1" (alpha^0), "a^e" (alpha^e); "a" is accepted on input
//   vector          comma-separated elements, e.g. "a^2,0,0,a^2,0,0,0,0"
//   polynomial      terms "c*x^r*y^j*z^i" joined by " + ", grouped by
//                   descending z-exponent and, within a group, by
//                   descending pole order q r + (q+1) j; unit factors and
//                   exponents are omitted, and zero prints as "0"

#include <algorithm>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "hermes/code.hpp"
#include "hermes/errors.hpp"
#include "hermes/galois.hpp"
#include "hermes/hermitian.hpp"

namespace hermes {

inline std::string format_vector(const GaloisField& f, const Vec& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ',';
        out += f.token(v[i]);
    }
    return out;
}

inline Vec parse_vector(const GaloisField& f, std::string_view text) {
    Vec out;
    if (text.find_first_not_of(" \t") == std::string_view::npos) return out;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = text.find(',', start);
        out.push_back(f.parse(text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start)));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

namespace detail {

inline void append_power(std::string& s, char var, int e) {
    if (e == 0) return;
    if (!s.empty()) s += '*';
    s += var;
    if (e > 1) s += '^' + std::to_string(e);
}

}  // namespace detail

inline std::string format_poly(const GaloisField& f, const ModElem& g) {
    struct Term {
        Monomial mono;
        Elem coeff;
    };
    std::vector<Term> terms;
    for (int i = 0; i <= g.l(); ++i) {
        for (int j = 0; j < g.q(); ++j) {
            const XPoly& c = g.at(i, j);
            for (int r = 0; r <= c.degree(); ++r) {
                if (!c[r].is_zero()) terms.push_back(Term{Monomial{r, j, i}, c[r]});
            }
        }
    }
    if (terms.empty()) return "0";
    const int q = g.q();
    std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
        if (a.mono.i != b.mono.i) return a.mono.i > b.mono.i;
        return a.mono.deg_u(q, 0) > b.mono.deg_u(q, 0);
    });
    std::string out;
    for (const Term& t : terms) {
        std::string s;
        const bool unit_mono = t.mono.r == 0 && t.mono.j == 0 && t.mono.i == 0;
        if (unit_mono || t.coeff != f.one()) s = f.token(t.coeff);
        detail::append_power(s, 'x', t.mono.r);
        detail::append_power(s, 'y', t.mono.j);
        detail::append_power(s, 'z', t.mono.i);
        if (!out.empty()) out += " + ";
        out += s;
    }
    return out;
}

inline std::string format_ring(const GaloisField& f, const RingElem& a) {
    ModElem g(static_cast<int>(a.y.size()), 0, 0);
    g[0] = a;
    return format_poly(f, g);
}

}  // namespace hermes
