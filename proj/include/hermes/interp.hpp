#pragma once

// Interpolation step of list decoding: the module I_{v,m,l} of elements of
// R[z]_l lying in <z - h_v, eta>^m, its F[x]-generators y^j G_i, and the
// element with the smallest leading term (the Q-polynomial), computed by
// running the Groebner engine on the F[x]-module view of R[z]_l.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "hermes/code.hpp"
#include "hermes/errors.hpp"
#include "hermes/gbasis.hpp"
#include "hermes/hermitian.hpp"

namespace hermes {

struct InterpInstance {
    int m = 1;
    int l = 1;
    Vec v;
    RingElem hv;
    std::vector<ModElem> G;     // G_0..G_l
    std::vector<ModElem> gens;  // y^j G_i at position i*q + j
};

// Coordinate of y^j z^i in the F[x]-module view; lexicographic on (i,j).
inline int basis_position(int q, BasisIndex t) { return t.i * q + t.j; }
inline BasisIndex basis_index_at(int q, int pos) { return BasisIndex{pos / q, pos % q}; }

// Upper bound on deg_u(y^j G_i) for i <= m.
inline int generator_degree_bound(int q, int m) { return m * (q * q * q + q * q - q - 1) + q * q - 1; }

inline InterpInstance build_instance(const HermitianCode& code, const Vec& v, int m, int l) {
    if (m < 1) throw ParameterError("multiplicity m must be at least 1");
    if (l < m) throw ParameterError("list size l=" + std::to_string(l) + " must be at least m=" + std::to_string(m));
    code.check_length(v);
    const HermitianRing& R = code.ring();
    const PolyOps ops = R.px();
    const int q = code.q();
    const int u = code.u();

    InterpInstance inst;
    inst.m = m;
    inst.l = l;
    inst.v = v;
    inst.hv = code.h_v(v);

    const XPoly eta = code.eta_poly();
    std::vector<XPoly> eta_pow(static_cast<std::size_t>(m) + 1);
    eta_pow[0] = XPoly::constant(code.field().one());
    for (int e = 1; e <= m; ++e) eta_pow[static_cast<std::size_t>(e)] = ops.mul(eta_pow[static_cast<std::size_t>(e - 1)], eta);

    const ModElem lin = R.z_minus(inst.hv, l, u);
    ModElem power = R.mod_from_ring(R.one(), l, u);  // (z - h_v)^i
    for (int i = 0; i <= m; ++i) {
        ModElem gi(q, l, u);
        for (int k = 0; k <= i; ++k) gi[k] = R.mul_x(power[k], eta_pow[static_cast<std::size_t>(m - i)]);
        inst.G.push_back(std::move(gi));
        if (i < m) power = R.mod_mul(power, lin).resized(l);
    }
    for (int i = m + 1; i <= l; ++i) {
        ModElem gi(q, l, u);
        for (int k = 0; k <= m; ++k) gi[k + i - m] = power[k];
        inst.G.push_back(std::move(gi));
    }

    const int bound = generator_degree_bound(q, m);
    const RingElem y = R.y();
    for (int i = 0; i <= l; ++i) {
        ModElem yj = inst.G[static_cast<std::size_t>(i)];
        for (int j = 0; j < q; ++j) {
            if (j > 0) yj = R.mod_mul_ring(yj, y);
            if (R.index(yj) != BasisIndex{i, j}) throw InternalError("generator y^j G_i has the wrong index");
            if (i <= m && R.deg_u(yj) > bound) throw InternalError("generator exceeds the weighted-degree bound");
            inst.gens.push_back(yj);
        }
    }
    return inst;
}

struct EngineInput {
    std::vector<ModuleVec> gens;
    WeightedOrder order;
};

inline ModuleVec to_module_vec(const ModElem& f) {
    const int q = f.q();
    ModuleVec out(static_cast<std::size_t>((f.l() + 1) * q));
    for (int i = 0; i <= f.l(); ++i) {
        for (int j = 0; j < q; ++j) out[static_cast<std::size_t>(basis_position(q, {i, j}))] = f.at(i, j);
    }
    return out;
}

inline ModElem from_module_vec(const ModuleVec& g, int q, int u) {
    const int l = static_cast<int>(g.size()) / q - 1;
    ModElem f(q, l, u);
    for (int pos = 0; pos < static_cast<int>(g.size()); ++pos) {
        const BasisIndex t = basis_index_at(q, pos);
        f.at(t.i, t.j) = g[static_cast<std::size_t>(pos)];
    }
    return f;
}

// Weights: x -> q, y^j z^i -> u i + (q+1) j.  Equal-weight monomials differ in
// their z-exponent, so the engine's "larger index wins" tie-break agrees with
// "larger z-degree wins".
inline WeightedOrder interpolation_order(int q, int u, int l) {
    WeightedOrder ord;
    ord.ux = q;
    for (int i = 0; i <= l; ++i) {
        for (int j = 0; j < q; ++j) ord.weights.push_back(u * i + (q + 1) * j);
    }
    return ord;
}

inline EngineInput to_engine(const InterpInstance& inst, int q, int u) {
    EngineInput in;
    in.order = interpolation_order(q, u, inst.l);
    for (const ModElem& g : inst.gens) in.gens.push_back(to_module_vec(g));
    return in;
}

struct InterpResult {
    ModElem Q;                   // monic in its leading term
    std::vector<ModElem> basis;  // Groebner basis, position i*q + j
    OpCounter counter;
    std::uint64_t counter_bound = 0;
    std::size_t updates = 0;
    int m = 1;
    int l = 1;
};

inline InterpResult interpolate(const HermitianCode& code, const Vec& v, int m, int l, const GOptions& opt = {}) {
    const InterpInstance inst = build_instance(code, v, m, l);
    const EngineInput in = to_engine(inst, code.q(), code.u());

    InterpResult out;
    out.m = m;
    out.l = l;
    out.counter_bound = counter_bound(in.gens, in.order);
    GResult g = algorithm_g(code.field(), in.gens, in.order, opt);
    out.counter = g.counter;
    out.updates = g.updates;
    const std::size_t best = smallest_element(g.basis, in.order);
    for (const ModuleVec& row : g.basis) out.basis.push_back(from_module_vec(row, code.q(), code.u()));

    const HermitianRing& R = code.ring();
    const ModElem& raw = out.basis[best];
    out.Q = R.mod_scale(raw, code.field().inv(R.leading_coefficient(raw)));
    return out;
}

// f in <z - h_v, eta>^m  iff  writing f = sum_k c_k (z - h_v)^k, eta^{m-k}
// divides c_k for every k < m.
inline bool membership(const ModElem& f, const HermitianCode& code, const Vec& v, int m) {
    if (m < 1) throw ParameterError("multiplicity m must be at least 1");
    const HermitianRing& R = code.ring();
    const PolyOps ops = R.px();
    const std::vector<RingElem> c = R.taylor_in_z(f, code.h_v(v));
    const XPoly eta = code.eta_poly();
    XPoly divisor = XPoly::constant(code.field().one());
    for (int k = m - 1; k >= 0; --k) {
        divisor = ops.mul(divisor, eta);  // eta^{m-k}
        if (k >= static_cast<int>(c.size())) continue;
        for (const XPoly& coord : c[static_cast<std::size_t>(k)].y) {
            if (!ops.divmod(coord, divisor).second.is_zero()) return false;
        }
    }
    return true;
}

}  // namespace hermes
