#include <gtest/gtest.h>

#include "hermes/hermes.hpp"

using namespace hermes;

namespace {

TEST(Bounds, GapIndicatorForQ2) {
    EXPECT_EQ(gap_indicator(0, 2), 1);
    EXPECT_EQ(gap_indicator(1, 2), 0);
    for (int i = 2; i < 40; ++i) EXPECT_EQ(gap_indicator(i, 2), 1) << i;
    EXPECT_THROW(gap_indicator(-1, 2), ParameterError);
}

TEST(Bounds, NumberOfGapsIsTheGenus) {
    for (int q : {2, 3, 4, 5, 7}) {
        int gaps = 0;
        for (int i = 0; i < 2 * q * q; ++i) gaps += 1 - gap_indicator(i, q);
        EXPECT_EQ(gaps, q * (q - 1) / 2) << "q=" << q;
    }
}

TEST(Bounds, MonomialCountTable) {
    const std::vector<long long> C = {1, 0, 1, 1, 2, 1, 2, 2, 3, 2, 3, 3, 4, 3, 4, 4};
    const std::vector<long long> cumulative = {1, 1, 2, 3, 5, 6, 8, 10, 13, 15, 18, 21, 25, 28, 32, 36};
    long long total = 0;
    for (int i = 0; i < 16; ++i) {
        EXPECT_EQ(count_monomials(i, 2, 4), C[static_cast<std::size_t>(i)]) << i;
        total += count_monomials(i, 2, 4);
        EXPECT_EQ(total, cumulative[static_cast<std::size_t>(i)]) << i;
    }
}

TEST(Bounds, MonomialCountMatchesEnumeration) {
    // monomials x^r y^j z^k with j < q and q r + (q+1) j + u k = i
    for (int q : {2, 3}) {
        for (int u : {1, q + 1, 2 * q + 1}) {
            for (int i = 0; i < 60; ++i) {
                long long c = 0;
                for (int k = 0; u * k <= i; ++k)
                    for (int j = 0; j < q; ++j)
                        for (int r = 0; q * r + (q + 1) * j + u * k <= i; ++r)
                            if (q * r + (q + 1) * j + u * k == i) ++c;
                EXPECT_EQ(count_monomials(i, q, u), c) << "q=" << q << " u=" << u << " i=" << i;
            }
        }
    }
}

TEST(Bounds, ParametersForC4) {
    const auto code = HermitianCode::make(2, 4);
    const DecoderParams p2 = choose_params(code, 2);
    EXPECT_EQ(p2.N, 25);
    EXPECT_EQ(p2.w, 12);
    EXPECT_EQ(p2.l, 3);
    EXPECT_EQ(p2.tau, 1);

    const DecoderParams p6 = choose_params(code, 6);
    EXPECT_EQ(p6.l, 8);
    EXPECT_EQ(p6.tau, 2);

    const DecoderParams p1 = choose_params(code, 1);
    EXPECT_EQ(p1.N, 9);
    EXPECT_EQ(p1.w, 7);
    EXPECT_EQ(p1.l, 1);
    EXPECT_EQ(p1.tau, 0);

    EXPECT_THROW(choose_params(code, 0), ParameterError);
}

TEST(Bounds, RadiusDoesNotShrinkWithMultiplicity) {
    const auto code = HermitianCode::make(2, 4);
    int prev = choose_params(code, 1).tau;
    for (int m = 2; m <= 6; ++m) {
        const int tau = choose_params(code, m).tau;
        EXPECT_GE(tau, prev) << "m=" << m;
        prev = tau;
    }
}

TEST(Bounds, CeilDiv) {
    EXPECT_EQ(ceil_div(7, 2), 4);
    EXPECT_EQ(ceil_div(8, 2), 4);
    EXPECT_EQ(ceil_div(-7, 2), -3);
    EXPECT_EQ(ceil_div(0, 5), 0);
}

}  // namespace
