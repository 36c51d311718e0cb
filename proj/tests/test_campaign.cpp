#include <gtest/gtest.h>

#include <set>

#include <zpzp2/campaign.hpp>

using namespace zpzp2;

namespace {

CampaignConfig small_config() {
    CampaignConfig c;
    c.primes = {3, 5};
    c.alpha = {0, 1};
    c.beta = {1, 2};
    c.gamma = {0, 1};
    c.delta = {0, 1};
    c.kappa = {0, 1};
    c.instance_size_limit = 243;
    c.removal_trials = 2;
    c.showcase = {CodeType{Prime(3), 1, 8, 1, 2, 1}, CodeType{Prime(5), 1, 5, 1, 1, 1}};
    return c;
}

}  // namespace

TEST(Campaign, SigmaFormMatchesPowerSumForm) {
    for (unsigned pv : {3u, 5u, 7u, 11u, 13u})
        for (unsigned i = 0; i <= pv - 2; ++i)
            for (unsigned j = 0; j <= pv - 2; ++j)
                EXPECT_EQ(detail::s_coeff_sigma_form(i, j, Prime(pv)), s_coeff(i, j, Prime(pv)));
}

TEST(Campaign, SmallRunPassesAndIsDeterministic) {
    const auto a = run_campaign(small_config());
    const auto b = run_campaign(small_config());
    EXPECT_EQ(a.doc.dump(), b.doc.dump());
    EXPECT_TRUE(a.ok()) << a.doc.at("summary").dump(2);
    EXPECT_EQ(a.exploratory_failed, 0u);
    const auto& s = a.doc.at("summary");
    EXPECT_EQ(s.at("records").get<std::size_t>(), a.doc.at("records").size());
    EXPECT_EQ(s.at("passed").get<std::size_t>(), a.doc.at("records").size());

    auto other = small_config();
    other.seed = 2;
    EXPECT_NE(run_campaign(other).doc.at("records").dump(), a.doc.at("records").dump());
}

TEST(Campaign, RecordsCarryFastAndOracleValues) {
    const auto rep = run_campaign(small_config());
    std::set<std::string> checks;
    for (const auto& r : rep.doc.at("records")) {
        checks.insert(r.at("check").get<std::string>());
        EXPECT_TRUE(r.contains("fast")) << r.dump();
        EXPECT_TRUE(r.contains("oracle")) << r.dump();
        if (r.at("p") == 3) {
            EXPECT_EQ(r.at("scope"), kExploratoryBanner);
        } else {
            EXPECT_FALSE(r.contains("scope"));
        }
        if (r.contains("kbar")) {
            EXPECT_LE(r.at("kbar").get<std::size_t>(), r.at("type").at("delta").get<std::size_t>());
            EXPECT_EQ(r.at("fast").at("rank"), r.at("oracle").at("rank"));
            EXPECT_EQ(r.at("fast").at("ker"), r.at("oracle").at("ker"));
        }
    }
    for (const char* c : {"gray.additivity", "gray.carry_polynomial", "gray.nonzero_set", "construct.binomial_identities",
                          "construct.families", "construct.rank", "construct.pair", "construct.rejects_inadmissible",
                          "construct.removal", "span.random"})
        EXPECT_TRUE(checks.count(c)) << c;
    ASSERT_EQ(rep.doc.at("banners").size(), 1u);
    EXPECT_EQ(rep.doc.at("banners")[0].at("banner"), kExploratoryBanner);
}

TEST(Campaign, GridSkipsInvalidTypesWithReasons) {
    const auto rep = run_campaign(small_config());
    bool saw_invalid = false;
    for (const auto& s : rep.doc.at("skipped")) {
        EXPECT_TRUE(s.contains("reason"));
        if (s.at("check") == "span.random" && s.at("reason").get<std::string>().find("must") != std::string::npos)
            saw_invalid = true;
    }
    EXPECT_TRUE(saw_invalid);
    const auto pts = grid_points(small_config(), Prime(5));
    for (const auto& g : pts)
        if (!g.skip_reason) { EXPECT_FALSE(g.type.violation()); }
}

TEST(Campaign, ConfigRoundTrip) {
    const auto c = small_config();
    const json j = config_to_json(c);
    EXPECT_EQ(config_to_json(config_from_json(json::parse(j.dump()))).dump(), j.dump());
    json bad = j;
    bad["primes"] = {4};
    EXPECT_THROW(config_from_json(bad), std::invalid_argument);
}

TEST(Campaign, MixSeedSpreadsIndices) {
    std::set<std::uint64_t> seen;
    for (std::uint64_t i = 0; i < 1000; ++i) seen.insert(detail::mix_seed(1, i));
    EXPECT_EQ(seen.size(), 1000u);
    EXPECT_NE(detail::mix_seed(1, 0), detail::mix_seed(2, 0));
}

TEST(Campaign, CsvSummary) {
    auto c = small_config();
    c.primes = {5};
    c.constructions = false;
    const auto rep = run_campaign(c);
    const auto csv = summary_csv(rep);
    EXPECT_EQ(csv.rfind("check,p,passed,failed\n", 0), 0u);
    EXPECT_NE(csv.find("gray.additivity,5,1,0"), std::string::npos);
}

TEST(Campaign, RandomCodeHasRequestedType) {
    for (unsigned pv : {3u, 5u}) {
        std::mt19937_64 rng(pv);
        const CodeType t{Prime(pv), 2, 4, 2, 1, 1};
        for (int i = 0; i < 10; ++i) EXPECT_EQ(random_code(t, rng).type(), t);
    }
}
