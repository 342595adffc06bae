#include <gtest/gtest.h>

#include "epsmac/characters.hpp"
#include "epsmac/macdonald.hpp"
#include "oracles.hpp"

using namespace epsmac;

namespace {

Laurent x(std::vector<int> e, long c = 1) { return Laurent::monomial(ExpVec::integral(e), RatFuncQ(c)); }

}  // namespace

TEST(Character, RankOne) {
    // o(3): x^m + ... + x^-m.  osp(1|2): the same with alternating signs.
    for (int m = 0; m <= 4; ++m) {
        Laurent o(1), osp(1);
        for (int j = -m; j <= m; ++j) {
            o += x({j});
            osp += x({j}, (m - j) % 2 == 0 ? 1 : -1);
        }
        EXPECT_EQ(character(DominantWeight({m}), 1, Algebra::o_odd), o);
        EXPECT_EQ(character(DominantWeight({m}), 1, Algebra::osp), osp);
    }
}

TEST(Character, RankTwoVector) {
    // The natural module of o(5): x1^±1, x2^±1 and 1.
    EXPECT_EQ(character(DominantWeight({1, 0}), 2, Algebra::o_odd), x({1, 0}) + x({-1, 0}) + x({0, 1}) + x({0, -1}) + x({0, 0}));
}

TEST(Character, SpinWeightsRejected) {
    EXPECT_THROW(integral_dominant({1, 1}), MathError);
    EXPECT_EQ(integral_dominant({4, 2}).parts(), (std::vector<int>{2, 1}));
}

TEST(Correspondence, RankOneSign) {
    for (int m = 0; m <= 5; ++m) {
        const Correspondence c = correspondence(DominantWeight({m}), 1);
        EXPECT_TRUE(c.match);
        EXPECT_EQ(c.sign, m % 2 == 0 ? 1 : -1);
    }
}

// -- properties ---------------------------------------------------------------

TEST(CharacterProperty, DimensionsMatchWeylFormula) {
    for (int n = 1; n <= 3; ++n)
        for (const auto& lam : dominant_weights(n, 4))
            EXPECT_EQ(l_eval_ones(character<Rational>(lam, n, Algebra::o_odd)), oracle::weyl_dimension(lam))
                << lam.to_string();
}

TEST(CharacterProperty, WInvariantWithUnitLeadingTerm) {
    for (int n = 1; n <= 3; ++n)
        for (Algebra alg : {Algebra::o_odd, Algebra::osp})
            for (const auto& lam : dominant_weights(n, 3)) {
                const auto ch = character<Rational>(lam, n, alg);
                for (const WeylElem& w : weyl_elements(n)) EXPECT_EQ(l_act(w, ch), ch);
                EXPECT_EQ(ch.coeff(lam.exp2()), Rational(1));
                EXPECT_EQ(ch * build_weyl_denominator<Rational>(n, algebra_eps(alg)),
                          alternant<Rational>(lam, n, algebra_eps(alg)));
            }
}

TEST(CharacterProperty, CorrespondenceHoldsWithParitySign) {
    for (int n = 1; n <= 3; ++n)
        for (const auto& lam : dominant_weights(n, 4)) {
            const Correspondence c = correspondence(lam, n);
            EXPECT_TRUE(c.match) << lam.to_string();
            EXPECT_EQ(c.sign, lam.size() % 2 == 0 ? 1 : -1) << lam.to_string();
        }
}

TEST(CharacterProperty, MacdonaldAtKOneIsCharacter) {
    for (int n = 1; n <= 2; ++n)
        for (Algebra alg : {Algebra::o_odd, Algebra::osp}) {
            const Config cfg{n, 1, algebra_eps(alg)};
            for (const auto& e : gram_schmidt(cfg, 3)) EXPECT_EQ(e.F, character(e.lam, n, alg)) << e.lam.to_string();
        }
}
