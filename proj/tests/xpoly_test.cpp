#include <gtest/gtest.h>

#include <random>

#include "hermes/xpoly.hpp"
#include "support/oracles.hpp"

using namespace hermes;
using hermes::testing::random_elem;
using hermes::testing::random_xpoly;

namespace {

TEST(XPoly, ZeroHasSentinelDegree) {
    XPoly z;
    EXPECT_TRUE(z.is_zero());
    EXPECT_EQ(z.degree(), kNegInf);
    EXPECT_LT(z.degree(), -1000000);
    const auto f = GaloisField::make(2);
    EXPECT_TRUE(XPoly(std::vector<Elem>{f->zero(), f->zero()}).is_zero());
}

TEST(XPoly, SetTrimsAndGrows) {
    const auto f = GaloisField::make(2);
    XPoly p;
    p.set(3, f->one());
    EXPECT_EQ(p.degree(), 3);
    p.set(3, f->zero());
    EXPECT_TRUE(p.is_zero());
}

TEST(XPoly, DivisionWithRemainderReconstructs) {
    std::mt19937_64 rng(11);
    for (int q : {2, 3, 4}) {
        const auto f = GaloisField::make(q);
        const PolyOps ops{*f};
        for (int t = 0; t < 100; ++t) {
            const XPoly a = random_xpoly(*f, rng, 12);
            XPoly b = random_xpoly(*f, rng, 5);
            if (b.is_zero()) continue;
            const auto [quot, rem] = ops.divmod(a, b);
            EXPECT_LT(rem.degree(), b.degree());
            EXPECT_EQ(ops.add(ops.mul(quot, b), rem), a);
        }
        EXPECT_THROW(ops.divmod(XPoly::constant(f->one()), XPoly{}), DomainError);
    }
}

TEST(XPoly, EvalMatchesTermwiseSum) {
    std::mt19937_64 rng(5);
    const auto f = GaloisField::make(3);
    const PolyOps ops{*f};
    for (int t = 0; t < 50; ++t) {
        const XPoly a = random_xpoly(*f, rng, 8);
        const Elem x = random_elem(*f, rng);
        Elem acc = f->zero();
        for (int k = 0; k <= a.degree(); ++k) acc = f->add(acc, f->mul(a[k], f->pow(x, k)));
        EXPECT_EQ(ops.eval(a, x), acc);
    }
}

TEST(XPoly, SubScaledShiftCountsNonzeroTerms) {
    const auto f = GaloisField::make(2);
    const PolyOps ops{*f};
    XPoly dst = XPoly::monomial(f->one(), 5);
    const XPoly src(std::vector<Elem>{f->one(), f->zero(), f->one()});  // x^2 + 1
    const auto mults = ops.sub_scaled_shift(dst, f->one(), 3, src);     // x^5 - x^3 (x^2 + 1)
    EXPECT_EQ(mults, 2u);
    EXPECT_EQ(dst, XPoly::monomial(f->one(), 3));
}

}  // namespace
