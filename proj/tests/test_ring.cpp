#include <gtest/gtest.h>

#include <zpzp2/combinatorics.hpp>
#include <zpzp2/ring.hpp>

using namespace zpzp2;

TEST(Prime, AcceptsOddPrimesUpToThirteen) {
    for (unsigned p : {3u, 5u, 7u, 11u, 13u}) EXPECT_EQ(Prime(p).value(), p);
    for (unsigned bad : {0u, 1u, 2u, 4u, 9u, 15u, 17u}) EXPECT_THROW(Prime{bad}, std::invalid_argument);
    EXPECT_EQ(Prime(5).square(), 25u);
}

TEST(Digits, ExpandComposeRoundTrip) {
    for (unsigned pv : {3u, 5u, 7u}) {
        const Prime p(pv);
        for (Residue u = 0; u < p.square(); ++u) {
            const Digits d = pary_expand(u, p);
            EXPECT_LT(d.low, pv);
            EXPECT_LT(d.high, pv);
            EXPECT_EQ(pary_compose(d, p), u);
        }
    }
    EXPECT_EQ(pary_expand(4, Prime(3)), (Digits{1, 1}));
}

TEST(InverseMod, UnitsOnlyAgainstBruteForce) {
    for (unsigned m : {3u, 9u, 25u, 49u, 169u}) {
        for (Residue a = 1; a < m; ++a) {
            Residue brute = 0;
            for (Residue b = 1; b < m; ++b)
                if (a * b % m == 1) brute = b;
            if (brute == 0) {
                EXPECT_THROW(inverse_mod(a, m), std::domain_error) << a << " mod " << m;
            } else {
                EXPECT_EQ(inverse_mod(a, m), brute);
            }
        }
    }
}

TEST(MixedWordArithmetic, GroupLaws) {
    const Prime p(5);
    const MixedWord u({1, 4}, {7, 24, 0});
    const MixedWord v({3, 2}, {23, 5, 11});
    EXPECT_EQ(add(u, v, p), MixedWord({4, 1}, {5, 4, 11}));
    EXPECT_EQ(add(u, v, p), add(v, u, p));
    EXPECT_TRUE(add(u, negate(u, p), p).is_zero());
    EXPECT_EQ(subtract(add(u, v, p), v, p), u);
    EXPECT_EQ(scale(u, 25, p), MixedWord::zero(2, 3));
    EXPECT_EQ(scale(u, 3, p), add(add(u, u, p), u, p));
    EXPECT_THROW(add(u, MixedWord::zero(1, 3), p), std::invalid_argument);
}

TEST(MixedWordArithmetic, StarProducts) {
    const Prime p(3);
    const MixedWord u({2}, {4, 8});
    EXPECT_EQ(star(u, u, p), MixedWord({1}, {7, 1}));
    EXPECT_EQ(star_power(u, 1, p), u);
    EXPECT_EQ(star_power(u, 3, p), star(star(u, u, p), u, p));
    EXPECT_THROW(star_power(u, 0, p), std::invalid_argument);
}

TEST(MixedWordArithmetic, OrderMatchesSmallestAnnihilator) {
    const Prime p(3);
    for (Residue a = 0; a < 3; ++a)
        for (Residue b = 0; b < 9; ++b) {
            const MixedWord w({a}, {b});
            unsigned brute = 1;
            while (!scale(w, brute, p).is_zero()) ++brute;
            EXPECT_EQ(order_of(w, p), brute);
        }
}

TEST(MixedWordArithmetic, ReduceWordHandlesNegatives) {
    EXPECT_EQ(reduce_word({-1, 7}, {-1, 50}, Prime(5)), MixedWord({4, 2}, {24, 0}));
    EXPECT_THROW(require_reduced(MixedWord({5}, {}), Prime(5)), std::invalid_argument);
    EXPECT_THROW(require_reduced(MixedWord({}, {25}), Prime(5)), std::invalid_argument);
}

TEST(Combinatorics, BinomialPascal) {
    for (std::uint64_t a = 1; a <= 30; ++a)
        for (std::uint64_t b = 1; b <= a; ++b) EXPECT_EQ(binomial(a, b), binomial(a - 1, b - 1) + binomial(a - 1, b));
    EXPECT_EQ(binomial(3, 5), 0u);
    EXPECT_EQ(binomial(0, 0), 1u);
}

TEST(Combinatorics, SubsetsAndMultisetsLexicographic) {
    const auto s = subsets_lex(4, 2);
    ASSERT_EQ(s.size(), 6u);
    EXPECT_EQ(s.front(), (std::vector<std::size_t>{0, 1}));
    EXPECT_EQ(s.back(), (std::vector<std::size_t>{2, 3}));
    EXPECT_TRUE(std::is_sorted(s.begin(), s.end()));
    for (std::size_t n = 0; n <= 5; ++n)
        for (std::size_t l = 1; l <= 5; ++l) {
            const auto m = multisets_lex(n, l);
            EXPECT_EQ(m.size(), n == 0 ? 0u : binomial(n + l - 1, l));
            EXPECT_TRUE(std::is_sorted(m.begin(), m.end()));
            for (const auto& v : m) EXPECT_TRUE(std::is_sorted(v.begin(), v.end()));
        }
    EXPECT_TRUE(subsets_lex(2, 3).empty());
    EXPECT_THROW(checked_pow(13, 30), std::overflow_error);
}
