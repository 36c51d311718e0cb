#include <gtest/gtest.h>

#include <random>
#include <set>

#include <zpzp2/gray.hpp>

using namespace zpzp2;

namespace {

// s(i,j) through the symmetric polynomials of {0,...,p-1} minus one point.
Residue s_sigma(unsigned i, unsigned j, Prime p) {
    const unsigned q = p.value();
    long long sum = 0;
    for (unsigned k = 1; k < q; ++k)
        for (unsigned l = q - k; l < q; ++l) sum += symmetric_sigma_hat(i, k, p) * symmetric_sigma_hat(j, l, p);
    if ((i + j) % 2) sum = -sum;
    return static_cast<Residue>(((sum % q) + q) % q);
}

// Elementary symmetric polynomial by subset enumeration.
Residue e_brute(unsigned i, unsigned k, unsigned q) {
    std::vector<unsigned> xs;
    for (unsigned m = 0; m < q; ++m)
        if (m != k) xs.push_back(m);
    long long total = 0;
    for (unsigned mask = 0; mask < (1u << xs.size()); ++mask) {
        if (static_cast<unsigned>(__builtin_popcount(mask)) != i) continue;
        long long prod = 1;
        for (std::size_t b = 0; b < xs.size(); ++b)
            if (mask >> b & 1u) prod = prod * xs[b] % q;
        total += prod;
    }
    return static_cast<Residue>(total % q);
}

const std::vector<unsigned> kPrimes{3, 5, 7, 11, 13};

}  // namespace

TEST(Phi, SmallExamples) {
    const Prime p(3);
    EXPECT_EQ(phi(0, p).entries, (std::vector<Residue>{0, 0, 0}));
    EXPECT_EQ(phi(4, p).entries, (std::vector<Residue>{1, 2, 0}));
    EXPECT_EQ(phi(3, p).entries, (std::vector<Residue>{1, 1, 1}));
}

TEST(Phi, TableMatchesFormulaAndIsInjective) {
    for (unsigned pv : kPrimes) {
        const Prime p(pv);
        const GrayTable t(p);
        ASSERT_EQ(t.size(), pv * pv);
        std::set<GrayWord> seen;
        for (Residue u = 0; u < p.square(); ++u) {
            for (unsigned j = 0; j < pv; ++j) EXPECT_EQ(t[u].entries[j], (u / pv + (u % pv) * t.columns()[j]) % pv);
            seen.insert(t[u]);
        }
        EXPECT_EQ(seen.size(), pv * pv);
        for (unsigned j = 0; j < pv; ++j) EXPECT_EQ(t.columns()[j], j);
    }
}

TEST(BigPhi, Concatenation) {
    const Prime p(3);
    EXPECT_EQ(big_phi(MixedWord({2}, {4}), p).entries, (std::vector<Residue>{2, 1, 2, 0}));
    EXPECT_TRUE(big_phi(MixedWord::zero(2, 3), p).is_zero());
    const Prime p5(5);
    const MixedWord w({}, {13, 21});
    const auto g = big_phi(w, p5);
    ASSERT_EQ(g.size(), 10u);
    for (std::size_t b = 0; b < 2; ++b)
        for (unsigned j = 0; j < 5; ++j) EXPECT_EQ(g.entries[5 * b + j], phi(w.y[b], p5).entries[j]);
}

TEST(Carry, DirectExamples) {
    EXPECT_EQ(carry_direct(2, 2, Prime(3)), 3u);
    EXPECT_EQ(carry_direct(7, 23, Prime(5)), 5u);
    for (Residue u = 0; u < 25; ++u) EXPECT_EQ(carry_direct(u, 0, Prime(5)), 0u);
    EXPECT_EQ(carry_word(MixedWord({1}, {2, 5}), MixedWord({2}, {2, 4}), Prime(3)), MixedWord({0}, {3, 3}));
    EXPECT_EQ(carry_word(MixedWord({}, {7}), MixedWord({}, {23}), Prime(5)), MixedWord({}, {5}));
}

TEST(Carry, AdditivityIdentityExhaustiveSingleCoordinate) {
    for (unsigned pv : {3u, 5u, 7u}) {
        const Prime p(pv);
        for (Residue u = 0; u < p.square(); ++u)
            for (Residue v = 0; v < p.square(); ++v) {
                const MixedWord a({}, {u}), b({}, {v});
                EXPECT_EQ(big_phi(add(a, b, p), p),
                          add(add(big_phi(a, p), big_phi(b, p), p), big_phi(carry_word(a, b, p), p), p));
            }
    }
}

TEST(Carry, AdditivityIdentityRandomWords) {
    std::mt19937_64 rng(7);
    for (unsigned pv : kPrimes) {
        const Prime p(pv);
        for (int trial = 0; trial < 200; ++trial) {
            MixedWord a = MixedWord::zero(3, 4), b = MixedWord::zero(3, 4);
            for (auto* w : {&a, &b}) {
                for (auto& r : w->x) r = rng() % pv;
                for (auto& r : w->y) r = rng() % (pv * pv);
            }
            const MixedWord c = carry_word(a, b, p);
            EXPECT_LE(order_of(c, p), pv);
            EXPECT_EQ(big_phi(add(a, b, p), p), add(add(big_phi(a, p), big_phi(b, p), p), big_phi(c, p), p));
        }
    }
}

TEST(Carry, OrderPWordsAreAdditive) {
    const Prime p(5);
    for (Residue a = 0; a < 5; ++a)
        for (Residue b = 0; b < 5; ++b) {
            const MixedWord u({a}, {5 * a}), v({b}, {5 * b});
            EXPECT_EQ(big_phi(add(u, v, p), p), add(big_phi(u, p), big_phi(v, p), p));
        }
}

TEST(Sigma, ElementarySymmetricAgainstSubsets) {
    for (unsigned pv : {3u, 5u, 7u, 11u}) {
        const Prime p(pv);
        for (unsigned i = 0; i <= pv - 2; ++i)
            for (unsigned k = 0; k < pv; ++k) {
                EXPECT_EQ(symmetric_sigma_hat(i, k, p), e_brute(i, k, pv));
                if (k >= 1) {
                    // sigma_i with x_k omitted is (-k)^i mod p.
                    long long v = 1;
                    for (unsigned t = 0; t < i; ++t) v = v * (pv - k) % pv;
                    EXPECT_EQ(symmetric_sigma_hat(i, k, p), static_cast<Residue>(v));
                }
            }
    }
    EXPECT_EQ(symmetric_sigma_hat(1, 2, Prime(5)), 3u);
    EXPECT_EQ(symmetric_sigma_hat(0, 4, Prime(5)), 1u);
    EXPECT_THROW(symmetric_sigma_hat(4, 0, Prime(5)), std::out_of_range);
    EXPECT_THROW(symmetric_sigma_hat(0, 5, Prime(5)), std::out_of_range);
}

TEST(SCoeff, TwoFormsAgreeAndNonzeroSetIsT) {
    for (unsigned pv : kPrimes) {
        const Prime p(pv);
        const auto t = nonzero_index_set(p);
        std::set<std::pair<unsigned, unsigned>> nonzero;
        for (unsigned i = 0; i <= pv - 2; ++i)
            for (unsigned j = 0; j <= pv - 2; ++j) {
                EXPECT_EQ(s_coeff(i, j, p), s_sigma(i, j, p)) << "p=" << pv << " (" << i << "," << j << ")";
                if (s_coeff(i, j, p) != 0) nonzero.emplace(i, j);
            }
        if (pv > 3) { EXPECT_EQ(nonzero, t) << "p=" << pv; }
        EXPECT_EQ(s_coeff(0, 0, p), 0u);
        EXPECT_EQ(s_coeff(0, pv - 2, p), pv - 1);
    }
    EXPECT_THROW(s_coeff(4, 0, Prime(5)), std::out_of_range);
}

TEST(StarDegrees, MatchDefinition) {
    EXPECT_EQ(star_degrees(Prime(3)), (std::vector<unsigned>{2, 3}));
    EXPECT_EQ(star_degrees(Prime(5)), (std::vector<unsigned>{3, 4, 5}));
    EXPECT_EQ(star_degrees(Prime(7)), (std::vector<unsigned>{3, 5, 6, 7}));
}

TEST(CarryPoly, FiveCoefficientTable) {
    const CarryCoeffs cc = CarryCoeffs::build(Prime(5));
    const std::map<std::pair<unsigned, unsigned>, Residue> expected{
        {{4, 1}, 20}, {{3, 2}, 15}, {{2, 3}, 15}, {{1, 4}, 20}, {{3, 1}, 15},
        {{2, 2}, 10}, {{1, 3}, 15}, {{2, 1}, 20}, {{1, 2}, 20}};
    EXPECT_EQ(cc.terms, expected);
}

TEST(CarryPoly, MatchesDirectCarryEverywhere) {
    for (unsigned pv : {3u, 5u, 7u, 11u}) {
        const Prime p(pv);
        const CarryCoeffs cc = CarryCoeffs::build(p);
        for (Residue u = 0; u < p.square(); ++u)
            for (Residue v = 0; v < p.square(); ++v)
                ASSERT_EQ(carry_poly(u, v, cc), carry_direct(u, v, p)) << "p=" << pv << " u=" << u << " v=" << v;
        for (const auto& [e, c] : cc.terms) {
            EXPECT_GE(e.first, 1u);
            EXPECT_GE(e.second, 1u);
            EXPECT_EQ(c % pv, 0u);
        }
    }
}
