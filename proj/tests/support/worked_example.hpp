#pragma once

// The q = 2, u = 4 running example: C_4 over GF(4), received word
// v = (a^2,0,0,a^2,0,0,0,0), m = 2, l = 2.

#include <string>
#include <tuple>
#include <vector>

#include "hermes/hermes.hpp"

namespace hermes::testing {

struct Term {
    std::string coeff;  // field token
    int r = 0;          // x
    int j = 0;          // y
    int i = 0;          // z
};

inline RingElem ring_from_terms(const HermitianRing& R, const std::vector<Term>& terms) {
    RingElem a = R.zero();
    for (const Term& t : terms) a = R.add(a, R.monomial(R.field().parse(t.coeff), t.r, t.j));
    return a;
}

inline ModElem mod_from_terms(const HermitianRing& R, int l, int u, const std::vector<Term>& terms) {
    ModElem f = R.mod_zero(l, u);
    for (const Term& t : terms) f[t.i] = R.add(f[t.i], R.monomial(R.field().parse(t.coeff), t.r, t.j));
    return f;
}

struct WorkedExample {
    HermitianCode code = HermitianCode::make(2, 4);
    Vec v = parse_vector(code.field(), "a^2,0,0,a^2,0,0,0,0");
    Vec message = parse_vector(code.field(), "a^2,a^2,0,a^2");
    int m = 2;
    int l = 2;

    const HermitianRing& ring() const { return code.ring(); }
    const GaloisField& field() const { return code.field(); }

    // mu = a^2 + a^2 x + a^2 x^2
    RingElem mu() const { return ring_from_terms(ring(), {{"a^2", 0, 0}, {"a^2", 1, 0}, {"a^2", 2, 0}}); }

    // Q = (x^2 + x) z^2 + (a^2 x^4 + a^2 x) z
    ModElem Q() const {
        return mod_from_terms(ring(), l, code.u(), {{"1", 2, 0, 2}, {"1", 1, 0, 2}, {"a^2", 4, 0, 1}, {"a^2", 1, 0, 1}});
    }
};

}  // namespace hermes::testing
