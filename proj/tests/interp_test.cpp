#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "hermes/hermes.hpp"
#include "support/oracles.hpp"
#include "support/worked_example.hpp"

using namespace hermes;
using namespace hermes::testing;

namespace {

TEST(BuildInstance, WorkedGenerators) {
    const WorkedExample ex;
    const HermitianRing& R = ex.ring();
    const int u = ex.code.u();
    const InterpInstance inst = build_instance(ex.code, ex.v, ex.m, ex.l);
    ASSERT_EQ(inst.G.size(), 3u);
    ASSERT_EQ(inst.gens.size(), 6u);

    const ModElem G0 = mod_from_terms(R, 2, u, {{"1", 8, 0, 0}, {"1", 2, 0, 0}});
    const ModElem G1 = mod_from_terms(R, 2, u,
                                      {{"1", 4, 0, 1},   {"1", 1, 0, 1},   {"a^2", 6, 1, 0}, {"a^2", 5, 1, 0}, {"a^2", 4, 1, 0},
                                       {"a^2", 3, 1, 0}, {"a^2", 2, 1, 0}, {"a^2", 1, 1, 0}, {"a", 7, 0, 0},   {"1", 6, 0, 0},
                                       {"1", 5, 0, 0},   {"1", 4, 0, 0},   {"1", 3, 0, 0},   {"1", 2, 0, 0},   {"a^2", 1, 0, 0}});
    const ModElem G2 = mod_from_terms(R, 2, u,
                                      {{"1", 0, 0, 2}, {"a", 4, 1, 0}, {"a", 2, 1, 0}, {"a", 0, 1, 0}, {"a", 7, 0, 0}, {"a^2", 6, 0, 0},
                                       {"a", 5, 0, 0}, {"1", 4, 0, 0}, {"a", 3, 0, 0}, {"1", 2, 0, 0}, {"a", 0, 0, 0}});
    EXPECT_EQ(inst.G[0], G0);
    EXPECT_EQ(inst.G[1], G1);
    EXPECT_EQ(inst.G[2], G2);

    const ModElem yG0 = mod_from_terms(R, 2, u, {{"1", 8, 1, 0}, {"1", 2, 1, 0}});
    const ModElem yG1 = mod_from_terms(
        R, 2, u,
        {{"1", 4, 1, 1},   {"1", 1, 1, 1},   {"a", 7, 1, 0},   {"a", 6, 1, 0},   {"a", 5, 1, 0},   {"a", 4, 1, 0},   {"a", 3, 1, 0},
         {"a", 2, 1, 0},   {"a^2", 9, 0, 0}, {"a^2", 8, 0, 0}, {"a^2", 7, 0, 0}, {"a^2", 6, 0, 0}, {"a^2", 5, 0, 0}, {"a^2", 4, 0, 0}});
    const ModElem yG2 = mod_from_terms(R, 2, u,
                                       {{"1", 0, 1, 2},   {"a", 7, 1, 0}, {"a^2", 6, 1, 0}, {"a", 5, 1, 0}, {"a^2", 4, 1, 0},
                                        {"a", 3, 1, 0},   {"a^2", 2, 1, 0}, {"a", 7, 0, 0}, {"a", 5, 0, 0}, {"a", 3, 0, 0}});
    EXPECT_EQ(inst.gens[1], yG0);
    EXPECT_EQ(inst.gens[3], yG1);
    EXPECT_EQ(inst.gens[5], yG2);
}

TEST(BuildInstance, MultiplicityOne) {
    const WorkedExample ex;
    const HermitianRing& R = ex.ring();
    const InterpInstance inst = build_instance(ex.code, ex.v, 1, 1);
    ASSERT_EQ(inst.G.size(), 2u);
    EXPECT_EQ(inst.G[0], R.mod_from_ring(ex.code.eta(), 1, 4));
    EXPECT_EQ(inst.G[1], R.z_minus(ex.code.h_v(ex.v), 1, 4));
}

TEST(BuildInstance, Preconditions) {
    const WorkedExample ex;
    EXPECT_THROW(build_instance(ex.code, ex.v, 2, 1), ParameterError);
    EXPECT_THROW(build_instance(ex.code, ex.v, 0, 1), ParameterError);
    EXPECT_THROW(build_instance(ex.code, Vec(5, ex.field().zero()), 1, 1), ParameterError);
}

TEST(BuildInstance, GeneratorIndicesAndDegreeBound) {
    std::mt19937_64 rng(3);
    for (int q : {2, 3}) {
        const auto code = HermitianCode::make(q, q + 1);
        for (int m = 1; m <= 3; ++m) {
            const Vec v = random_vec(code.field(), rng, code.n());
            const int l = m + 1;
            const InterpInstance inst = build_instance(code, v, m, l);
            for (int pos = 0; pos < static_cast<int>(inst.gens.size()); ++pos) {
                const ModElem& g = inst.gens[static_cast<std::size_t>(pos)];
                const BasisIndex t = basis_index_at(q, pos);
                EXPECT_EQ(code.ring().index(g), t);
                if (t.i <= m) {
                    EXPECT_LE(code.ring().deg_u(g), generator_degree_bound(q, m));
                }
                EXPECT_TRUE(membership(g, code, v, m));
            }
        }
    }
}

TEST(ToEngine, PositionsAndWeights) {
    EXPECT_EQ(basis_position(2, {0, 0}), 0);
    EXPECT_EQ(basis_position(2, {1, 1}), 3);  // e_4
    const WeightedOrder ord = interpolation_order(2, 4, 2);
    EXPECT_EQ(ord.ux, 2);
    EXPECT_EQ(ord.weights[0], 0);
    EXPECT_EQ(ord.weights[3], 7);
    EXPECT_EQ(ord.weights[static_cast<std::size_t>(basis_position(2, {2, 1}))], 11);
    for (int pos = 0; pos < 6; ++pos) EXPECT_EQ(basis_position(2, basis_index_at(2, pos)), pos);
}

TEST(ToEngine, ModuleVecRoundTrip) {
    const WorkedExample ex;
    const ModElem Q = ex.Q();
    EXPECT_EQ(from_module_vec(to_module_vec(Q), 2, 4), Q);
}

TEST(ToEngine, EngineOrderAgreesWithMonomialOrder) {
    for (int q : {2, 3}) {
        for (int u = 1; u < q * q * q; u += 2) {
            const int l = 3;
            const WeightedOrder ord = interpolation_order(q, u, l);
            std::vector<Monomial> monos;
            for (int i = 0; i <= l; ++i)
                for (int j = 0; j < q; ++j)
                    for (int r = 0; r < 8; ++r) monos.push_back({r, j, i});
            for (const Monomial& a : monos) {
                for (const Monomial& b : monos) {
                    if (a == b) continue;
                    const LeadingTerm la{ord.ux * a.r + ord.weights[static_cast<std::size_t>(basis_position(q, {a.i, a.j}))],
                                         basis_position(q, {a.i, a.j})};
                    const LeadingTerm lb{ord.ux * b.r + ord.weights[static_cast<std::size_t>(basis_position(q, {b.i, b.j}))],
                                         basis_position(q, {b.i, b.j})};
                    ASSERT_EQ(la.deg, a.deg_u(q, u));
                    if (la.deg == lb.deg) {
                        ASSERT_NE(a.i, b.i);
                    }
                    ASSERT_EQ(lb < la, monomial_greater(a, b, q, u));
                }
            }
        }
    }
}

TEST(Interpolate, WorkedExample) {
    const WorkedExample ex;
    GOptions opt;
    opt.check_termination = true;
    const InterpResult res = interpolate(ex.code, ex.v, ex.m, ex.l, opt);
    EXPECT_EQ(res.Q, ex.Q());
    EXPECT_EQ(ex.ring().leading_coefficient(res.Q), ex.field().one());
    EXPECT_EQ(format_poly(ex.field(), res.Q), "x^2*z^2 + x*z^2 + a^2*x^4*z + a^2*x*z");
    EXPECT_LE(res.counter.mult_count, res.counter_bound);

    std::vector<int> diag;
    for (int pos = 0; pos < 6; ++pos) {
        const BasisIndex t = basis_index_at(2, pos);
        const ModElem& g = res.basis[static_cast<std::size_t>(pos)];
        EXPECT_EQ(ex.ring().lt_index(g), t);
        diag.push_back(g.at(t.i, t.j).degree());
    }
    std::sort(diag.begin(), diag.end());
    EXPECT_EQ(diag, (std::vector<int>{1, 2, 4, 5, 5, 7}));
}

TEST(Interpolate, ErrorFreeWordHasItsMessageAsRoot) {
    std::mt19937_64 rng(12);
    for (int q : {2, 3}) {
        const auto code = HermitianCode::make(q, q + 1);
        for (int t = 0; t < 5; ++t) {
            const auto enc = code.encode(random_vec(code.field(), rng, code.k()));
            const InterpResult res = interpolate(code, enc.codeword, 1, 1);
            EXPECT_TRUE(code.ring().substitute(res.Q, enc.mu).is_zero());
            EXPECT_LE(code.ring().deg_u(res.Q), code.u());
        }
    }
}

TEST(Interpolate, ZeroWordGivesZ) {
    const auto code = HermitianCode::make(2, 4);
    const InterpResult res = interpolate(code, Vec(8, code.field().zero()), 1, 1);
    ModElem z = code.ring().mod_zero(1, 4);
    z[1] = code.ring().one();
    EXPECT_EQ(res.Q, z);
    const LocalConditions oracle(code, Vec(8, code.field().zero()), 1);
    EXPECT_EQ(oracle.smallest_leading_monomial(1, 40), (Monomial{0, 0, 1}));
}

TEST(Membership, Examples) {
    const WorkedExample ex;
    const HermitianRing& R = ex.ring();
    EXPECT_TRUE(membership(ex.Q(), ex.code, ex.v, 2));
    EXPECT_FALSE(membership(R.mod_from_ring(R.one(), 2, 4), ex.code, ex.v, 2));
    EXPECT_TRUE(membership(R.mod_from_ring(R.pow(ex.code.eta(), 2), 2, 4), ex.code, ex.v, 2));
    EXPECT_FALSE(membership(R.mod_from_ring(ex.code.eta(), 2, 4), ex.code, ex.v, 2));
    EXPECT_TRUE(membership(R.mod_from_ring(ex.code.eta(), 2, 4), ex.code, ex.v, 1));
}

TEST(Membership, AgreesWithLocalExpansion) {
    std::mt19937_64 rng(77);
    for (int q : {2, 3}) {
        const auto code = HermitianCode::make(q, q);
        for (int m = 1; m <= 2; ++m) {
            const Vec v = random_vec(code.field(), rng, code.n());
            const LocalConditions oracle(code, v, m);
            const InterpInstance inst = build_instance(code, v, m, m + 1);
            for (int t = 0; t < 10; ++t) {
                // random combination of generators, plus an optional perturbation
                ModElem f = code.ring().mod_zero(m + 1, code.u());
                for (const ModElem& g : inst.gens) f = code.ring().mod_add(f, code.ring().mod_mul_ring(g, random_ring(code.field(), rng, 2)));
                if (t % 2 == 1) f[0] = code.ring().add(f[0], code.ring().one());
                if (f.is_zero()) continue;
                EXPECT_EQ(membership(f, code, v, m), oracle.contains(f));
                EXPECT_EQ(membership(f, code, v, m), t % 2 == 0);
            }
        }
    }
}

TEST(Interpolate, RandomInstancesAreMinimal) {
    std::mt19937_64 rng(99);
    for (int t = 0; t < 16; ++t) {
        const int q = t % 2 == 0 ? 2 : 3;
        const auto code = HermitianCode::make(q, 1 + static_cast<int>(rng() % static_cast<unsigned>(q * q)));
        const int m = 1 + static_cast<int>(rng() % 2);
        const int l = m + static_cast<int>(rng() % 2);
        const Vec v = random_vec(code.field(), rng, code.n());
        const InterpResult res = interpolate(code, v, m, l);
        for (const ModElem& g : res.basis) EXPECT_TRUE(membership(g, code, v, m));
        const LocalConditions oracle(code, v, m);
        const auto best = oracle.smallest_leading_monomial(l, code.ring().deg_u(res.Q));
        ASSERT_TRUE(best.has_value());
        EXPECT_EQ(*best, code.ring().leading_monomial(res.Q));
    }
}

}  // namespace
