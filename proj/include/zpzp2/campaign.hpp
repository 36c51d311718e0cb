#pragma once

// Verification campaigns: every identity, bound and construction claim as a
// named check, each record carrying the fast-path result next to an
// independent oracle. Reports are a pure function of (config, seed).

#include <cstdint>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <string>
#include <unordered_set>
#include <vector>

#include "code.hpp"
#include "combinatorics.hpp"
#include "construct.hpp"
#include "gray.hpp"
#include "serialize.hpp"
#include "span_kernel.hpp"

namespace zpzp2 {

inline constexpr const char* kExploratoryBanner = "exploratory (p>3 caveat)";

struct Range {
    std::size_t lo = 0, hi = 0;
};

struct CampaignConfig {
    std::vector<unsigned> primes{5};
    Range alpha{1, 2}, beta{2, 3}, gamma{0, 2}, delta{0, 2}, kappa{0, 1};
    std::size_t random_per_type = 1;
    std::uint64_t instance_size_limit = 3125;  // p^(gamma+2delta) for random grid instances
    std::size_t removal_trials = 6;
    std::uint64_t cap = kDefaultSizeCap;
    std::uint64_t kernel_cap = kDefaultKernelCap;
    std::uint64_t seed = 1;
    bool identities = true;
    bool constructions = true;
    std::vector<CodeType> showcase;  // empty: one default type per prime
    bool progress = false;
};

inline json range_to_json(const Range& r) { return json::array({r.lo, r.hi}); }

inline json config_to_json(const CampaignConfig& c) {
    json sc = json::array();
    for (const auto& t : c.showcase) sc.push_back(type_to_json(t));
    return {{"primes", c.primes},
            {"grid",
             {{"alpha", range_to_json(c.alpha)},
              {"beta", range_to_json(c.beta)},
              {"gamma", range_to_json(c.gamma)},
              {"delta", range_to_json(c.delta)},
              {"kappa", range_to_json(c.kappa)}}},
            {"random_per_type", c.random_per_type},
            {"instance_size_limit", c.instance_size_limit},
            {"removal_trials", c.removal_trials},
            {"cap", c.cap},
            {"kernel_cap", c.kernel_cap},
            {"seed", c.seed},
            {"identities", c.identities},
            {"constructions", c.constructions},
            {"showcase", std::move(sc)}};
}

/// Reads a config; absent members keep their defaults.
inline CampaignConfig config_from_json(const json& j) {
    CampaignConfig c;
    try {
        auto range = [](const json& r) {
            const auto v = r.get<std::vector<std::size_t>>();
            if (v.size() != 2 || v[0] > v[1]) throw FormatError("grid ranges are [lo, hi] with lo <= hi");
            return Range{v[0], v[1]};
        };
        if (j.contains("primes")) c.primes = j.at("primes").get<std::vector<unsigned>>();
        if (j.contains("grid")) {
            const auto& g = j.at("grid");
            if (g.contains("alpha")) c.alpha = range(g.at("alpha"));
            if (g.contains("beta")) c.beta = range(g.at("beta"));
            if (g.contains("gamma")) c.gamma = range(g.at("gamma"));
            if (g.contains("delta")) c.delta = range(g.at("delta"));
            if (g.contains("kappa")) c.kappa = range(g.at("kappa"));
        }
        c.random_per_type = j.value("random_per_type", c.random_per_type);
        c.instance_size_limit = j.value("instance_size_limit", c.instance_size_limit);
        c.removal_trials = j.value("removal_trials", c.removal_trials);
        c.cap = j.value("cap", c.cap);
        c.kernel_cap = j.value("kernel_cap", c.kernel_cap);
        c.seed = j.value("seed", c.seed);
        c.identities = j.value("identities", c.identities);
        c.constructions = j.value("constructions", c.constructions);
        if (j.contains("showcase"))
            for (const auto& t : j.at("showcase")) c.showcase.push_back(type_from_json(t));
    } catch (const json::exception& e) {
        throw FormatError(std::string("bad campaign config: ") + e.what());
    }
    for (unsigned p : c.primes) (void)Prime(p);
    return c;
}

namespace detail {

/// splitmix64, so each instance gets a seed independent of evaluation order.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// s(i, j) from the symmetric-polynomial definition.
inline Residue s_coeff_sigma_form(unsigned i, unsigned j, Prime p) {
    const unsigned q = p.value();
    unsigned long long sum = 0;
    for (unsigned k = 1; k < q; ++k)
        for (unsigned l = q - k; l < q; ++l)
            sum += static_cast<unsigned long long>(symmetric_sigma_hat(i, k, p)) * symmetric_sigma_hat(j, l, p);
    sum %= q;
    if ((i + j) % 2 == 1) sum = (q - sum) % q;
    return static_cast<Residue>(sum);
}

}  // namespace detail

/// A random code of the given type: the standard-form shape with uniformly
/// random free blocks, then random block-respecting column permutations.
inline AdditiveCode random_code(const CodeType& ty, std::mt19937_64& rng) {
    ty.validate();
    const unsigned q = ty.p.value(), q2 = ty.p.square();
    const std::size_t w = ty.free_width(), gk = ty.gamma - ty.kappa;
    auto draw = [&](unsigned m) { return static_cast<Residue>(rng() % m); };
    std::vector<MixedWord> gp, gp2;
    for (std::size_t i = 0; i < ty.kappa; ++i) {
        MixedWord m = MixedWord::zero(ty.alpha, ty.beta);
        m.x[i] = 1;
        for (std::size_t c = ty.kappa; c < ty.alpha; ++c) m.x[c] = draw(q);
        for (std::size_t c = 0; c < w; ++c) m.y[c] = q * draw(q);
        gp.push_back(std::move(m));
    }
    for (std::size_t i = 0; i < gk; ++i) {
        MixedWord m = MixedWord::zero(ty.alpha, ty.beta);
        for (std::size_t c = 0; c < w; ++c) m.y[c] = q * draw(q);
        m.y[w + i] = q;
        gp.push_back(std::move(m));
    }
    for (std::size_t i = 0; i < ty.delta; ++i) {
        MixedWord m = MixedWord::zero(ty.alpha, ty.beta);
        for (std::size_t c = ty.kappa; c < ty.alpha; ++c) m.x[c] = draw(q);
        for (std::size_t c = 0; c < w; ++c) m.y[c] = draw(q2);
        for (std::size_t c = 0; c < gk; ++c) m.y[w + c] = draw(q);
        m.y[w + gk + i] = 1;
        gp2.push_back(std::move(m));
    }
    auto shuffle = [&](std::size_t n) {
        std::vector<std::size_t> perm = detail::identity_order(n);
        for (std::size_t i = n; i > 1; --i) std::swap(perm[i - 1], perm[rng() % i]);
        return perm;
    };
    const auto xp = shuffle(ty.alpha), yp = shuffle(ty.beta);
    for (auto& g : gp) g = permute_word(g, xp, yp);
    for (auto& g : gp2) g = permute_word(g, xp, yp);
    return AdditiveCode(ty, std::move(gp), std::move(gp2));
}

/// All grid points of the config for prime p, with invalid ones reported.
struct GridPoint {
    CodeType type;
    std::optional<std::string> skip_reason;
};

inline std::vector<GridPoint> grid_points(const CampaignConfig& c, Prime p) {
    std::vector<GridPoint> out;
    for (std::size_t a = c.alpha.lo; a <= c.alpha.hi; ++a)
        for (std::size_t b = c.beta.lo; b <= c.beta.hi; ++b)
            for (std::size_t g = c.gamma.lo; g <= c.gamma.hi; ++g)
                for (std::size_t d = c.delta.lo; d <= c.delta.hi; ++d)
                    for (std::size_t k = c.kappa.lo; k <= c.kappa.hi; ++k) {
                        GridPoint gp{{p, a, b, g, d, k}, std::nullopt};
                        if (auto v = gp.type.violation()) {
                            gp.skip_reason = *v;
                        } else if (!within_cap(gp.type, std::min(c.instance_size_limit, c.kernel_cap))) {
                            gp.skip_reason = "size p^(gamma+2delta) above the instance limit";
                        }
                        out.push_back(gp);
                    }
    return out;
}

/// Default showcase type for p: (2, 20; 1, 2; 1) when its kernel fits the cap, else delta = 1.
inline CodeType default_showcase(Prime p, std::uint64_t kernel_cap) {
    CodeType t{p, 2, 20, 1, 2, 1};
    if (!within_cap(t, kernel_cap)) t.delta = 1;
    return t;
}

struct CampaignReport {
    json doc;
    std::size_t failed = 0;              // in-scope failures (decide the exit code)
    std::size_t exploratory_failed = 0;  // p = 3 failures, reported only
    bool ok() const { return failed == 0; }
};

class Campaign {
  public:
    explicit Campaign(CampaignConfig c) : cfg_(std::move(c)) {}

    CampaignReport run() {
        records_ = json::array();
        findings_ = json::array();
        skipped_ = json::array();
        by_check_.clear();
        binding_.clear();
        failed_ = exploratory_failed_ = 0;
        instance_index_ = 0;

        json banners = json::array();
        for (unsigned pv : cfg_.primes) {
            const Prime p(pv);
            if (pv == 3) banners.push_back({{"p", 3}, {"banner", kExploratoryBanner}});
            if (cfg_.identities) run_identities(p);
            if (cfg_.constructions) run_constructions(p);
            run_grid(p);
        }

        json summary;
        std::size_t passed = 0;
        for (const auto& r : records_)
            if (r.at("pass").get<bool>()) ++passed;
        summary["records"] = records_.size();
        summary["passed"] = passed;
        summary["failed"] = failed_;
        summary["exploratory_failed"] = exploratory_failed_;
        json checks = json::object();
        for (const auto& [name, counts] : by_check_)
            checks[name] = {{"passed", counts.first}, {"failed", counts.second}};
        summary["by_check"] = std::move(checks);
        json bind = json::object();
        for (const auto& [name, n] : binding_) bind[name] = n;
        summary["binding_bound"] = std::move(bind);
        summary["findings"] = findings_.size();

        CampaignReport rep;
        rep.doc = {{"tool", "zpzp2 verify"},
                   {"config", config_to_json(cfg_)},
                   {"banners", std::move(banners)},
                   {"records", std::move(records_)},
                   {"findings", std::move(findings_)},
                   {"skipped", std::move(skipped_)},
                   {"summary", std::move(summary)}};
        rep.failed = failed_;
        rep.exploratory_failed = exploratory_failed_;
        return rep;
    }

  private:
    void progress(const std::string& msg) const {
        if (cfg_.progress) std::cerr << "[verify] " << msg << '\n';
    }

    void add(json rec, bool pass, Prime p) {
        const std::string check = rec.at("check").get<std::string>();
        rec["p"] = p.value();
        if (p.value() == 3) rec["scope"] = kExploratoryBanner;
        rec["pass"] = pass;
        auto& counts = by_check_[check];
        if (pass) {
            ++counts.first;
        } else {
            ++counts.second;
            (p.value() == 3 ? exploratory_failed_ : failed_) += 1;
        }
        records_.push_back(std::move(rec));
    }

    void run_identities(Prime p) {
        progress("identities for p=" + std::to_string(p.value()));
        const unsigned q = p.value(), q2 = p.square();
        const GrayTable table(p);
        {
            // Phi(u+v) - Phi(u) - Phi(v) against Phi(carry) on every pair.
            std::size_t fast_bad = 0, oracle_bad = 0;
            for (Residue u = 0; u < q2; ++u)
                for (Residue v = 0; v < q2; ++v) {
                    const GrayWord lhs = table[(u + v) % q2];
                    const GrayWord sum = zpzp2::add(table[u], table[v], p);
                    if (zpzp2::add(sum, table[carry_direct(u, v, p)], p) != lhs) ++fast_bad;
                    // Oracle: recompute from the integer definition of phi.
                    const Residue w = (u + v) % q2;
                    for (unsigned j = 0; j < q; ++j) {
                        const unsigned lhs_j = (w / q + (w % q) * j) % q;
                        const unsigned c = (u % q) + (v % q) >= q ? 1 : 0;
                        const unsigned rhs_j = (u / q + (u % q) * j + v / q + (v % q) * j + c) % q;
                        if (lhs_j != rhs_j) {
                            ++oracle_bad;
                            break;
                        }
                    }
                }
            add({{"check", "gray.additivity"},
                 {"fast", {{"violations", fast_bad}}},
                 {"oracle", {{"violations", oracle_bad}}},
                 {"pairs", q2 * q2}},
                fast_bad == 0 && oracle_bad == 0, p);
        }
        {
            const CarryCoeffs cc = CarryCoeffs::build(p);
            std::size_t mismatches = 0;
            for (Residue u = 0; u < q2; ++u)
                for (Residue v = 0; v < q2; ++v)
                    if (carry_poly(u, v, cc) != carry_direct(u, v, p)) ++mismatches;
            json terms = json::object();
            for (const auto& [e, c] : cc.terms) terms["u^" + std::to_string(e.first) + "v^" + std::to_string(e.second)] = c;
            add({{"check", "gray.carry_polynomial"},
                 {"fast", {{"terms", std::move(terms)}}},
                 {"oracle", {{"mismatches_vs_direct", mismatches}}},
                 {"pairs", q2 * q2}},
                mismatches == 0, p);
        }
        {
            std::size_t disagree = 0;
            json outside = json::array();
            for (unsigned i = 0; i <= q - 2; ++i)
                for (unsigned j = 0; j <= q - 2; ++j) {
                    const Residue a = s_coeff(i, j, p), b = detail::s_coeff_sigma_form(i, j, p);
                    if (a != b) ++disagree;
                    const bool in_t = nonzero_index_set(p).count({i, j}) != 0;
                    if ((a != 0) != in_t) outside.push_back({i, j, a});
                }
            const bool ends = s_coeff(0, 0, p) == 0 && s_coeff(0, q - 2, p) == q - 1;
            add({{"check", "gray.nonzero_set"},
                 {"fast", {{"mismatches_vs_T", outside}, {"s00_and_s0pm2", ends}}},
                 {"oracle", {{"power_sum_vs_sigma_disagreements", disagree}}}},
                disagree == 0 && outside.empty() && ends, p);
        }
        {
            const auto rep = binom_identity_check(p, 12);
            std::size_t bad_rows = 0, literal_rows = 0;
            for (const auto& r : rep.rows) {
                if (!r.holds) ++bad_rows;
                if (r.holds_without_delta) ++literal_rows;
            }
            add({{"check", "construct.binomial_identities"},
                 {"fast", {{"coefficients", rep.coefficients}}},
                 {"oracle",
                  {{"pascal_checked", rep.pascal_checked},
                   {"pascal_failures", rep.pascal_failures.size()},
                   {"expansion_failures", bad_rows}}},
                 {"literal_form_holds_for_deltas", literal_rows}},
                rep.ok(), p);
        }
        {
            const auto viol = a_entry_violations(p);
            std::size_t count_bad = 0, gamma_bad = 0;
            for (unsigned j = 1; j <= q - 1; ++j)
                for (unsigned i = 1; i <= j; ++i)
                    if (build_A_raw(i, j, p).size() != binomial(j, i)) ++count_bad;
            json gamma_sizes = json::array();
            if (viol.empty()) {
                for (unsigned i = 1; i <= q - 2; ++i) {
                    const auto g = build_gamma(i, p);
                    gamma_sizes.push_back(g.size());
                    if (g.size() != expansion_coefficient(i, p)) ++gamma_bad;
                }
            }
            std::size_t width_bad = 0;
            for (std::size_t d = 0; d <= 6 && viol.empty(); ++d)
                if (full_family_width(p, d) != star_span_count(p, d) - d) ++width_bad;
            add({{"check", "construct.families"},
                 {"fast", {{"gamma_sizes", std::move(gamma_sizes)}}},
                 {"oracle",
                  {{"entry_violations", viol.size()},
                   {"row_count_mismatches", count_bad},
                   {"gamma_size_mismatches", gamma_bad},
                   {"width_mismatches", width_bad}}}},
                viol.empty() && count_bad == 0 && gamma_bad == 0 && width_bad == 0, p);
        }
    }

    /// Full record for one code: both rank routes, both kernel routes, cosets, bounds.
    json instance(const std::string& check, const AdditiveCode& code, bool& pass, json target = nullptr) {
        const AnalysisReport a = analyze(code, cfg_.cap, cfg_.kernel_cap);
        if (!a.rank_exhaustive || !a.kernel_carry || !a.kernel_definition)
            throw std::logic_error("campaign instance above the size caps: " + code.type().to_string());
        const auto& t = code.type();
        const std::size_t rank = a.rank_generator.rank;
        const std::size_t kbar = a.kernel_carry->kbar;
        const std::size_t rbar = a.rank_generator.rbar;
        pass = a.method_agreement() && a.kernel_carry->closed && a.kernel_definition->closed && kbar <= t.delta &&
               a.cosets->cardinality_ok && a.cosets->verified && a.within_upper_bound() && ((rbar == 0) == (kbar == 0));
        if (kbar > 0) pass = pass && rbar <= pair_rbar_max(t.p, kbar);

        json bounds = bounds_to_json(a.bounds);
        bounds["within_upper"] = a.within_upper_bound();
        bounds["exceeds_beta_gamma_kappa"] = rank > a.bounds.beta_gamma_kappa;
        bounds["exceeds_beta_delta_kappa"] = rank > a.bounds.beta_delta_kappa;
        const std::uint64_t span_part = star_span_count(t.p, t.delta) - t.delta;
        const std::string binding = t.free_width() < span_part   ? "free_width"
                                    : t.free_width() > span_part ? "span_count"
                                                                 : "both";
        bounds["binding"] = binding;
        ++binding_[binding];

        json rec{{"check", check},
                 {"type", type_to_json(t)},
                 {"target", std::move(target)},
                 {"fast", {{"rank", rank}, {"ker", a.kernel_carry->dimension}, {"method", "generator-set/carry-membership"}}},
                 {"oracle",
                  {{"rank", a.rank_exhaustive->rank},
                   {"ker", a.kernel_definition->dimension},
                   {"method", "exhaustive/definition"}}},
                 {"kernel_sets_equal", a.kernel_sets_equal},
                 {"rbar", rbar},
                 {"kbar", kbar},
                 {"cosets",
                  {{"count", a.cosets->coset_count},
                   {"cardinality_ok", a.cosets->cardinality_ok},
                   {"verified", a.cosets->verified},
                   {"generator_indices", a.cosets->generator_indices}}},
                 {"bounds", std::move(bounds)}};

        if (rank > a.bounds.beta_gamma_kappa)
            findings_.push_back({{"kind", "rank_exceeds_beta_gamma_kappa"},
                                 {"check", check},
                                 {"type", type_to_json(t)},
                                 {"rank", rank},
                                 {"beta_gamma_kappa", a.bounds.beta_gamma_kappa}});
        if (!a.cosets->verified)
            findings_.push_back({{"kind", "no_coset_reps_among_generator_rows"}, {"check", check}, {"type", type_to_json(t)}});
        return rec;
    }

    void add_instance(const std::string& check, const AdditiveCode& code, json target, std::optional<std::size_t> want_rbar,
                      std::optional<std::size_t> want_kbar, const ConstructionPlan* plan = nullptr) {
        bool pass = false;
        json rec = instance(check, code, pass, std::move(target));
        if (want_rbar) pass = pass && rec.at("rbar").get<std::size_t>() == *want_rbar;
        if (want_kbar) pass = pass && rec.at("kbar").get<std::size_t>() == *want_kbar;
        if (!pass) {
            rec["replay"] = {{"code", code_to_json(code)}};
            if (plan) rec["replay"]["plan"] = plan_to_json(*plan);
        }
        add(std::move(rec), pass, code.prime());
    }

    void run_constructions(Prime p) {
        std::vector<CodeType> types;
        for (const auto& t : cfg_.showcase)
            if (t.p == p) types.push_back(t);
        if (types.empty()) types.push_back(default_showcase(p, cfg_.kernel_cap));
        for (const auto& ty : types) {
            if (!within_cap(ty, std::min(cfg_.cap, cfg_.kernel_cap))) {
                skipped_.push_back({{"check", "construct"}, {"type", type_to_json(ty)}, {"reason", "above size cap"}});
                continue;
            }
            progress("rank targets for " + ty.to_string());
            const auto rr = admissible_rank_range(ty);
            for (std::size_t r = rr.lo; r <= rr.hi; ++r) {
                const auto plan = assemble_rank_plan(ty, r - rr.lo);
                add_instance("construct.rank", realize(plan), {{"r", r}}, r - rr.lo, std::nullopt, &plan);
            }

            progress("pair targets for " + ty.to_string());
            for (std::size_t kb = 0; kb <= ty.delta; ++kb) {
                const auto range = admissible_rbar_for_kbar(ty, kb);
                for (std::size_t rb = range.lo; rb <= range.hi; ++rb) {
                    const auto plan = assemble_pair_plan(ty, kb, rb);
                    add_instance("construct.pair", realize(plan), {{"kbar", kb}, {"rbar", rb}}, rb, kb, &plan);
                }
            }
            run_rejections(ty);
            run_removals(ty);
        }
    }

    void run_rejections(const CodeType& ty) {
        std::vector<std::pair<std::size_t, std::size_t>> bad{{0, 1}, {ty.delta + 1, 1}};
        for (std::size_t kb = 1; kb <= ty.delta; ++kb) {
            bad.emplace_back(kb, 0);
            bad.emplace_back(kb, admissible_rbar_for_kbar(ty, kb).hi + 1);
        }
        std::size_t accepted = 0;
        json tried = json::array();
        for (auto [kb, rb] : bad) {
            bool rejected = false;
            try {
                (void)assemble_pair_plan(ty, kb, rb);
            } catch (const InadmissibleTarget&) {
                rejected = true;
            }
            if (!rejected) ++accepted;
            tried.push_back({{"kbar", kb}, {"rbar", rb}, {"rejected", rejected}});
        }
        bool rank_rejected = false;
        try {
            (void)assemble_rank_plan(ty, admissible_rank_range(ty).hi - admissible_rank_range(ty).lo + 1);
        } catch (const InadmissibleTarget&) {
            rank_rejected = true;
        }
        add({{"check", "construct.rejects_inadmissible"},
             {"type", type_to_json(ty)},
             {"fast", {{"pairs", std::move(tried)}, {"rank_above_max_rejected", rank_rejected}}},
             {"oracle", {{"accepted_inadmissible", accepted}}}},
            accepted == 0 && rank_rejected, ty.p);
    }

    /// Random subsets of columns removed from the full rank plan.
    void run_removals(const CodeType& ty) {
        const std::size_t full = full_family_width(ty.p, ty.delta);
        const auto rr = admissible_rank_range(ty);
        if (full == 0 || rr.hi - rr.lo != full) {
            skipped_.push_back({{"check", "construct.removal"},
                                {"type", type_to_json(ty)},
                                {"reason", "full family does not fit the free width"}});
            return;
        }
        for (std::size_t trial = 0; trial < cfg_.removal_trials; ++trial) {
            const std::uint64_t seed = detail::mix_seed(cfg_.seed, instance_index_++);
            std::mt19937_64 rng(seed);
            // Single removals first, then random sizes.
            const std::size_t t = trial < cfg_.removal_trials / 2 ? 1 : 1 + rng() % full;
            std::vector<std::size_t> cols = detail::identity_order(full);
            for (std::size_t i = full; i > 1; --i) std::swap(cols[i - 1], cols[rng() % i]);
            cols.resize(t);
            std::sort(cols.begin(), cols.end());
            const auto plan = assemble_rank_plan(ty, full - t, &cols);
            add_instance("construct.removal", realize(plan), {{"removed", cols}, {"seed", seed}}, full - t, std::nullopt,
                         &plan);
        }
    }

    void run_grid(Prime p) {
        progress("random instances for p=" + std::to_string(p.value()));
        for (const auto& gp : grid_points(cfg_, p)) {
            if (gp.skip_reason) {
                skipped_.push_back({{"check", "span.random"}, {"type", type_to_json(gp.type)}, {"reason", *gp.skip_reason}});
                continue;
            }
            for (std::size_t k = 0; k < cfg_.random_per_type; ++k) {
                const std::uint64_t seed = detail::mix_seed(cfg_.seed, instance_index_++);
                std::mt19937_64 rng(seed);
                const AdditiveCode code = random_code(gp.type, rng);
                add_instance("span.random", code, {{"seed", seed}}, std::nullopt, std::nullopt);
            }
        }
    }

    CampaignConfig cfg_;
    json records_, findings_, skipped_;
    std::map<std::string, std::pair<std::size_t, std::size_t>> by_check_;
    std::map<std::string, std::size_t> binding_;
    std::size_t failed_ = 0, exploratory_failed_ = 0;
    std::uint64_t instance_index_ = 0;
};

inline CampaignReport run_campaign(const CampaignConfig& cfg) { return Campaign(cfg).run(); }

/// One CSV line per check: check, p, passed, failed.
inline std::string summary_csv(const CampaignReport& rep) {
    std::map<std::pair<std::string, unsigned>, std::pair<std::size_t, std::size_t>> rows;
    for (const auto& r : rep.doc.at("records")) {
        auto& c = rows[{r.at("check").get<std::string>(), r.at("p").get<unsigned>()}];
        (r.at("pass").get<bool>() ? c.first : c.second) += 1;
    }
    std::string out = "check,p,passed,failed\n";
    for (const auto& [k, v] : rows)
        out += k.first + "," + std::to_string(k.second) + "," + std::to_string(v.first) + "," + std::to_string(v.second) + "\n";
    return out;
}

}  // namespace zpzp2
