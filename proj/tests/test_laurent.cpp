#include <gtest/gtest.h>

#include <random>

#include "epsmac/laurent.hpp"
#include "oracles.hpp"

using namespace epsmac;

namespace {

/// c * x^(doubled exponents)
Laurent term(std::vector<int> e2, RatFuncQ c = RatFuncQ(1)) { return Laurent::monomial(ExpVec::doubled(e2), c); }

Laurent x1() { return Laurent::var(1, 0); }
Laurent x1inv() { return term({-2}); }
Laurent one1() { return Laurent::one(1); }

}  // namespace

TEST(LaurentArith, Examples) {
    EXPECT_EQ(l_arith(RingOp::mul, x1(), x1inv()), one1());
    // (1 + x)(1 + 1/x) = 2 + x + 1/x
    EXPECT_EQ(l_arith(RingOp::mul, one1() + x1(), one1() + x1inv()), one1() * RatFuncQ(2) + x1() + x1inv());
    EXPECT_TRUE(l_arith(RingOp::add, x1(), -x1()).is_zero());
}

TEST(LaurentArith, DimensionMismatchThrows) {
    EXPECT_THROW(Laurent::one(1) + Laurent::one(2), MathError);
    EXPECT_THROW(Laurent::one(1) * Laurent::one(2), MathError);
}

TEST(LaurentArith, ZeroCoefficientsArePurged) {
    Laurent f = x1() + one1();
    f -= x1();
    EXPECT_EQ(f.size(), 1u);
    EXPECT_EQ(f, one1());
}

TEST(LaurentBar, Examples) {
    EXPECT_EQ(l_bar(x1()), x1inv());
    const Laurent sym = one1() * RatFuncQ(2) + x1() + x1inv();
    EXPECT_EQ(l_bar(sym), sym);
    EXPECT_EQ(l_bar(term({2, -2}, RatFuncQ::q())), term({-2, 2}, RatFuncQ::q()));
}

TEST(LaurentConstTerm, Examples) {
    EXPECT_EQ(l_const_term(one1() * RatFuncQ(2) + x1() + x1inv()), RatFuncQ(2));
    EXPECT_TRUE(l_const_term(term({2, 2})).is_zero());
    EXPECT_EQ(l_const_term(Laurent(1, RatFuncQ(7))), RatFuncQ(7));
}

TEST(LaurentAct, Examples) {
    EXPECT_EQ(l_act(WeylElem::flip(1, 0), x1()), x1inv());
    EXPECT_EQ(l_act(WeylElem::transposition(2, 0, 1), term({2, 4})), term({4, 2}));
}

TEST(LaurentExactDiv, Examples) {
    // (x^(3/2) + x^(-3/2)) / (x^(1/2) + x^(-1/2)) = x - 1 + 1/x
    const Laurent num = term({3}) + term({-3});
    const Laurent den = term({1}) + term({-1});
    const Laurent quot = l_exact_div(num, den);
    EXPECT_EQ(quot, x1() - one1() + x1inv());
    EXPECT_EQ(quot * den, num);

    const Laurent f = term({2, -4}, RatFuncQ::q()) + Laurent::one(2);
    EXPECT_EQ(l_exact_div(f, Laurent::one(2)), f);

    try {
        l_exact_div(Laurent::one(2) + Laurent::var(2, 0), Laurent::one(2) + Laurent::var(2, 1));
        FAIL();
    } catch (const MathError& e) {
        EXPECT_STREQ(e.what(), "not divisible");
    }
    EXPECT_THROW(l_exact_div(x1(), Laurent(1)), MathError);
}

TEST(LaurentExactDiv, NonDivisibleSameSupportBox) {
    // 1 + x^2 is not a multiple of 1 + x even though the supports are compatible.
    EXPECT_THROW(l_exact_div(one1() + term({4}), one1() + x1()), MathError);
}

TEST(LaurentNegateVars, Examples) {
    EXPECT_EQ(l_negate_vars(x1() + x1inv()), -x1() - x1inv());
    EXPECT_EQ(l_negate_vars(term({2, 2})), term({2, 2}));
    try {
        l_negate_vars(term({1}));
        FAIL();
    } catch (const MathError& e) {
        EXPECT_STREQ(e.what(), "substitution undefined on half-lattice");
    }
}

TEST(LaurentEvalOnes, Examples) {
    EXPECT_EQ(l_eval_ones(x1() + one1() + x1inv()), RatFuncQ(3));
    EXPECT_EQ(l_eval_ones(x1() - one1() + x1inv()), RatFuncQ(1));
    EXPECT_TRUE(l_eval_ones(Laurent(1)).is_zero());
}

TEST(LaurentText, Rendering) {
    EXPECT_EQ(to_text(x1() - one1() + x1inv()), "x1 - 1 + x1^-1");
    EXPECT_EQ(to_text(term({3, -1}, RatFuncQ(2))), "2 * x1^3/2 x2^-1/2");
    EXPECT_EQ(to_text(term({2}, RatFuncQ(PolyQ({1, 1})))), "(q + 1) * x1");
    EXPECT_EQ(to_text(Laurent(1)), "0");
    EXPECT_EQ(to_text(-x1()), "-x1");
}

// -- properties ---------------------------------------------------------------

TEST(LaurentProperty, BarIsInvolution) {
    std::mt19937 rng(21);
    for (int i = 0; i < 100; ++i) {
        Laurent f = oracle::random_laurent(rng, 2, 5, 2, true);
        EXPECT_EQ(l_bar(l_bar(f)), f);
    }
}

TEST(LaurentProperty, ActionRespectsGroupLaw) {
    std::mt19937 rng(22);
    for (int n = 1; n <= 3; ++n) {
        const auto ws = weyl_elements(n);
        const Laurent f = oracle::random_laurent(rng, n, 6, 2, true);
        for (const auto& a : ws)
            for (const auto& b : ws) EXPECT_EQ(l_act(a, l_act(b, f)), l_act(a * b, f));
    }
}

TEST(LaurentProperty, ActionIsAutomorphism) {
    std::mt19937 rng(23);
    for (const auto& w : weyl_elements(2)) {
        Laurent f = oracle::random_laurent(rng, 2), g = oracle::random_laurent(rng, 2);
        EXPECT_EQ(l_act(w, f * g), l_act(w, f) * l_act(w, g));
        EXPECT_EQ(l_act(w, f + g), l_act(w, f) + l_act(w, g));
    }
}

TEST(LaurentProperty, ConstantTermIsWInvariant) {
    std::mt19937 rng(24);
    for (int n = 1; n <= 3; ++n) {
        const Laurent f = oracle::random_laurent(rng, n, 8, 1);
        for (const auto& w : weyl_elements(n)) EXPECT_EQ(l_const_term(l_act(w, f)), l_const_term(f));
    }
}

TEST(LaurentProperty, ExactDivisionUndoesMultiplication) {
    std::mt19937 rng(25);
    for (int i = 0; i < 60; ++i) {
        const int n = 1 + i % 3;
        Laurent f = oracle::random_laurent(rng, n, 4, 2, true);
        Laurent g = oracle::random_laurent(rng, n, 3, 2, true);
        if (g.is_zero()) continue;
        EXPECT_EQ(l_exact_div(f * g, g), f);
    }
}

TEST(LaurentProperty, RingAxioms) {
    std::mt19937 rng(26);
    for (int i = 0; i < 40; ++i) {
        Laurent a = oracle::random_laurent(rng, 2), b = oracle::random_laurent(rng, 2), c = oracle::random_laurent(rng, 2);
        EXPECT_EQ(a * b, b * a);
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a * (b + c), a * b + a * c);
    }
}
