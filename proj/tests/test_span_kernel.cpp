#include <gtest/gtest.h>

#include <numeric>
#include <random>
#include <set>

#include <zpzp2/construct.hpp>
#include <zpzp2/span_kernel.hpp>

#include "support/oracle.hpp"

using namespace zpzp2;

namespace {

struct Truth {
    std::size_t rank = 0;
    std::set<std::vector<Residue>> kernel;
    std::size_t kernel_dim = 0;
};

// Rank and kernel straight from the Gray image set.
Truth brute(const AdditiveCode& code) {
    const unsigned q = code.prime().value();
    std::set<std::vector<Residue>> image;
    for (const auto& w : oracle::closure(code.rows(), code.prime())) image.insert(oracle::gray(w, q));
    Truth t;
    std::vector<std::vector<Residue>> rows(image.begin(), image.end());
    t.rank = oracle::rank_mod(rows, q);
    for (const auto& x : image) {
        bool in = true;
        for (auto it = image.begin(); in && it != image.end(); ++it) {
            auto s = x;
            for (std::size_t i = 0; i < s.size(); ++i) s[i] = (s[i] + (*it)[i]) % q;
            in = image.count(s) != 0;
        }
        if (in) t.kernel.insert(x);
    }
    std::vector<std::vector<Residue>> krows(t.kernel.begin(), t.kernel.end());
    t.kernel_dim = oracle::rank_mod(krows, q);
    return t;
}

std::set<std::vector<Residue>> as_set(const std::vector<GrayWord>& g) {
    std::set<std::vector<Residue>> s;
    for (const auto& w : g) s.insert(w.entries);
    return s;
}

std::vector<CodeType> instance_types() {
    std::vector<CodeType> out;
    for (unsigned pv : {3u, 5u})
        for (std::size_t a = 0; a <= 1; ++a)
            for (std::size_t b = 1; b <= 4; ++b)
                for (std::size_t g = 0; g <= 1; ++g)
                    for (std::size_t d = 1; d <= 2; ++d)
                        for (std::size_t k = 0; k <= std::min(a, g); ++k) {
                            CodeType t{Prime(pv), a, b, g, d, k};
                            if (t.violation() || t.log_size() > (pv == 3 ? 5u : 4u)) continue;
                            out.push_back(t);
                        }
    return out;
}

const CodeType kShowcase{Prime(5), 2, 20, 1, 2, 1};

}  // namespace

TEST(SpanGenerators, RowCounts) {
    std::mt19937_64 rng(1);
    for (std::size_t g : {0u, 1u}) {
        const CodeType lin{Prime(5), 1, 3, g + 1, 0, std::min<std::size_t>(1, g + 1)};
        EXPECT_EQ(span_generators(AdditiveCode::from_rows(lin.p, 1, 3, oracle::standard_rows(lin, rng))).row_count(),
                  g + 1);
        const CodeType d1{Prime(5), 1, 6, g, 1, 0};
        EXPECT_EQ(span_generators(AdditiveCode::from_rows(d1.p, 1, 6, oracle::standard_rows(d1, rng))).row_count(),
                  g + 4);
        const CodeType d2{Prime(5), 1, 8, g, 2, 0};
        EXPECT_EQ(span_generators(AdditiveCode::from_rows(d2.p, 1, 8, oracle::standard_rows(d2, rng))).row_count(),
                  g + 17);
    }
}

TEST(RankBounds, Arithmetic) {
    const auto b = rank_bounds(kShowcase);
    EXPECT_EQ(b.lower, 5u);
    EXPECT_EQ(b.generator_bound, 18u);
    EXPECT_EQ(b.upper(), 18u);
    EXPECT_EQ(b.beta_gamma_kappa, 22u);
    EXPECT_EQ(star_span_count(Prime(5), 1), 3u);
    EXPECT_EQ(star_span_count(Prime(5), 2), 15u);
    EXPECT_EQ(pair_rbar_max(Prime(5), 1), 2u);
    EXPECT_EQ(pair_rbar_max(Prime(5), 2), 13u);
}

TEST(RankAndKernel, RoutesMatchBruteForce) {
    std::mt19937_64 rng(2);
    for (const auto& t : instance_types()) {
        for (int rep = 0; rep < 2; ++rep) {
            const auto code = AdditiveCode::from_rows(t.p, t.alpha, t.beta, oracle::standard_rows(t, rng));
            const Truth truth = brute(code);
            const auto rg = rank_of(code, RankMethod::GeneratorSet);
            const auto re = rank_of(code, RankMethod::Exhaustive);
            EXPECT_EQ(rg.rank, truth.rank) << t.to_string();
            EXPECT_EQ(re.rank, truth.rank) << t.to_string();
            EXPECT_EQ(rg.basis, re.basis);
            EXPECT_LE(rg.rank, rank_bounds(t).upper());
            EXPECT_GE(rg.rank, t.log_size());

            const auto kc = kernel_members(code, KernelMethod::CarryMembership);
            const auto kd = kernel_members(code, KernelMethod::Definition);
            EXPECT_EQ(as_set(kc), truth.kernel) << t.to_string();
            EXPECT_EQ(as_set(kd), truth.kernel) << t.to_string();
            const auto kr = kernel_of(code, KernelMethod::CarryMembership);
            EXPECT_EQ(kr.dimension, truth.kernel_dim);
            EXPECT_TRUE(kr.closed);
            EXPECT_LE(kr.kbar, t.delta);
            EXPECT_EQ(kr.kbar == 0, rg.rbar == 0) << t.to_string();

            const auto cd = coset_decomposition(code, kr);
            EXPECT_TRUE(cd.cardinality_ok);
            EXPECT_TRUE(cd.verified) << t.to_string();
            EXPECT_EQ(cd.reps.size(), kr.kbar);

            // Order-p codewords lie in the kernel.
            for (const auto& w : enumerate(code))
                if (scale(w, t.p.value(), t.p).is_zero()) { EXPECT_TRUE(truth.kernel.count(oracle::gray(w, t.p.value()))); }
        }
    }
}

TEST(RankAndKernel, LinearImage) {
    std::mt19937_64 rng(3);
    const CodeType t{Prime(3), 2, 3, 2, 0, 1};
    const auto code = AdditiveCode::from_rows(t.p, 2, 3, oracle::standard_rows(t, rng));
    EXPECT_EQ(rank_of(code, RankMethod::Exhaustive).rank, 2u);
    const auto kr = kernel_of(code, KernelMethod::Definition);
    EXPECT_EQ(kr.kbar, 0u);
    EXPECT_EQ(kr.size, code.size());
    const auto cd = coset_decomposition(code, kr);
    EXPECT_EQ(cd.coset_count, 1u);
    EXPECT_TRUE(cd.reps.empty());
    EXPECT_EQ(span_code(code).rows(), code.rows());
}

TEST(RankAndKernel, PermutationInvariance) {
    std::mt19937_64 rng(4);
    for (const auto& t : instance_types()) {
        const auto code = AdditiveCode::from_rows(t.p, t.alpha, t.beta, oracle::standard_rows(t, rng));
        std::vector<std::size_t> xp(t.alpha), yp(t.beta);
        std::iota(xp.begin(), xp.end(), 0);
        std::iota(yp.begin(), yp.end(), 0);
        std::shuffle(xp.begin(), xp.end(), rng);
        std::shuffle(yp.begin(), yp.end(), rng);
        const auto perm = permute_code(code, xp, yp);
        const auto a = analyze(code), b = analyze(perm);
        EXPECT_EQ(a.rank_generator.rank, b.rank_generator.rank);
        EXPECT_EQ(a.kernel_carry->dimension, b.kernel_carry->dimension);
    }
}

TEST(SpanCode, ImageIsLinearSpan) {
    std::mt19937_64 rng(5);
    for (const auto& t : instance_types()) {
        if (t.log_size() > 4) continue;
        const auto code = AdditiveCode::from_rows(t.p, t.alpha, t.beta, oracle::standard_rows(t, rng));
        const auto rr = rank_of(code, RankMethod::GeneratorSet);
        const auto sc = span_code(code);
        EXPECT_EQ(sc.type().gamma, t.gamma + rr.rbar);
        EXPECT_EQ(sc.type().delta, t.delta);
        EXPECT_EQ(sc.type().kappa, t.kappa);
        // Phi(S_C) is linear with p^rank words, and contains Phi(C).
        std::set<std::vector<Residue>> img;
        for (const auto& w : enumerate(sc)) img.insert(oracle::gray(w, t.p.value()));
        EXPECT_EQ(img.size(), checked_pow(t.p.value(), rr.rank));
        std::vector<std::vector<Residue>> rows(img.begin(), img.end());
        EXPECT_EQ(oracle::rank_mod(rows, t.p.value()), rr.rank);
        for (const auto& w : enumerate(code)) EXPECT_TRUE(img.count(oracle::gray(w, t.p.value())));
    }
}

TEST(Analyze, ConstructedInstances) {
    const auto r5 = analyze(realize(assemble_rank_plan(kShowcase, 0)));
    EXPECT_EQ(r5.rank_generator.rank, 5u);
    EXPECT_TRUE(r5.method_agreement());

    const auto k1 = analyze(realize(assemble_pair_plan(kShowcase, 1, 1)));
    EXPECT_EQ(k1.kernel_carry->dimension, 4u);
    EXPECT_TRUE(k1.kernel_sets_equal);

    const auto k2 = analyze(realize(assemble_pair_plan(kShowcase, 2, 13)));
    EXPECT_EQ(k2.kernel_carry->kbar, 2u);
    EXPECT_EQ(k2.rank_exhaustive->rank, 18u);
    ASSERT_TRUE(k2.cosets);
    EXPECT_EQ(k2.cosets->coset_count, 25u);
    EXPECT_TRUE(k2.cosets->verified);
    EXPECT_TRUE(k2.method_agreement());
}

TEST(Analyze, CapsMarkSkippedRoutes) {
    const auto code = realize(assemble_rank_plan(kShowcase, 3));
    const auto r = analyze(code, 1000, 1000);
    EXPECT_FALSE(r.rank_exhaustive);
    EXPECT_FALSE(r.kernel_carry);
    EXPECT_EQ(r.skipped, (std::vector<std::string>{"rank.exhaustive", "kernel.carry-membership", "kernel.definition"}));
    EXPECT_EQ(r.rank_generator.rank, 8u);
    EXPECT_THROW(kernel_members(code, KernelMethod::Definition, 100), SizeCapExceeded);
}
