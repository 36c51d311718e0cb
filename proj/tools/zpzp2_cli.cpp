// zpzp2: construct and analyze Z_p Z_{p^2}-additive codes and their Gray images.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or input error.

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <zpzp2/zpzp2.hpp>

using namespace zpzp2;

namespace {

constexpr int kOk = 0;
constexpr int kVerifyFailed = 1;
constexpr int kUsage = 2;

std::vector<std::size_t> parse_list(const std::string& s, const std::string& what) {
    std::vector<std::size_t> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos)
            throw std::invalid_argument("bad " + what + ": '" + s + "'");
        out.push_back(std::stoull(item));
    }
    return out;
}

CodeType parse_type(unsigned p, const std::string& s) {
    const auto v = parse_list(s, "--type");
    if (v.size() != 5) throw std::invalid_argument("--type expects a,b,g,d,k");
    CodeType t{Prime(p), v[0], v[1], v[2], v[3], v[4]};
    t.validate();
    return t;
}

std::string join(const std::vector<Residue>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i]);
    return s;
}

std::string monomial(unsigned a, unsigned b) {
    auto pw = [](const char* x, unsigned e) { return e == 1 ? std::string(x) : std::string(x) + "^" + std::to_string(e); };
    return pw("u", a) + pw("v", b);
}

/// Terms by descending total degree, then descending power of u.
std::vector<std::pair<std::pair<unsigned, unsigned>, Residue>> ordered_terms(const CarryCoeffs& cc) {
    std::vector<std::pair<std::pair<unsigned, unsigned>, Residue>> t(cc.terms.begin(), cc.terms.end());
    std::sort(t.begin(), t.end(), [](const auto& x, const auto& y) {
        const unsigned dx = x.first.first + x.first.second, dy = y.first.first + y.first.second;
        return dx != dy ? dx > dy : x.first.first > y.first.first;
    });
    return t;
}

void print_coeff_table(const CarryCoeffs& cc) {
    for (const auto& [e, c] : ordered_terms(cc)) std::cout << monomial(e.first, e.second) << ": " << c << '\n';
}

std::string plan_path_for(const std::string& out) {
    const std::string ext = ".json";
    if (out.size() > ext.size() && out.compare(out.size() - ext.size(), ext.size(), ext) == 0)
        return out.substr(0, out.size() - ext.size()) + ".plan.json";
    return out + ".plan.json";
}

struct GrayArgs {
    unsigned p = 0;
    std::optional<Residue> u, v;
    bool check_identity = false, coeffs = false;
};

int cmd_gray(const GrayArgs& a) {
    const Prime p(a.p);
    if (a.check_identity) {
        const GrayTable table(p);
        const unsigned q2 = p.square();
        std::size_t bad = 0;
        for (Residue u = 0; u < q2; ++u)
            for (Residue v = 0; v < q2; ++v)
                if (add(add(table[u], table[v], p), table[carry_direct(u, v, p)], p) != table[(u + v) % q2]) ++bad;
        std::cout << "checked " << q2 * q2 << " pairs, " << bad << " violations\n";
        return bad == 0 ? kOk : kVerifyFailed;
    }
    if (a.coeffs) {
        print_coeff_table(CarryCoeffs::build(p));
        return kOk;
    }
    if (!a.u) throw std::invalid_argument("gray needs --u, --check-identity or --coeffs");
    auto check = [&](Residue x) {
        if (x >= p.square()) throw std::invalid_argument("element " + std::to_string(x) + " not in Z_{p^2}");
    };
    check(*a.u);
    if (!a.v) {
        std::cout << join(phi(*a.u, p).entries) << '\n';
        return kOk;
    }
    check(*a.v);
    const Residue s = (*a.u + *a.v) % p.square();
    const Residue c = carry_direct(*a.u, *a.v, p);
    const bool holds = add(add(phi(*a.u, p), phi(*a.v, p), p), phi(c, p), p) == phi(s, p);
    std::cout << "phi(u)     = " << join(phi(*a.u, p).entries) << '\n'
              << "phi(v)     = " << join(phi(*a.v, p).entries) << '\n'
              << "phi(u+v)   = " << join(phi(s, p).entries) << '\n'
              << "carry      = " << c << '\n'
              << "phi(carry) = " << join(phi(c, p).entries) << '\n'
              << "identity   = " << (holds ? "holds" : "fails") << '\n';
    return holds ? kOk : kVerifyFailed;
}

int cmd_coeffs(unsigned pv, bool as_json) {
    const Prime p(pv);
    const unsigned q = p.value();
    const CarryCoeffs cc = CarryCoeffs::build(p);
    json s = json::array();
    for (unsigned i = 0; i <= q - 2; ++i) {
        json row = json::array();
        for (unsigned j = 0; j <= q - 2; ++j) row.push_back(s_coeff(i, j, p));
        s.push_back(std::move(row));
    }
    json t = json::array();
    for (const auto& [i, j] : cc.T) t.push_back({i, j});
    json terms = json::object();
    for (const auto& [e, c] : ordered_terms(cc)) terms[monomial(e.first, e.second)] = c;
    const auto rep = binom_identity_check(p, 0);
    json doc{{"p", q}, {"L", cc.L}, {"T", std::move(t)}, {"s", std::move(s)}, {"carry_terms", std::move(terms)},
             {"expansion_coefficients", rep.coefficients}};
    if (as_json) {
        std::cout << doc.dump(2) << '\n';
        return kOk;
    }
    std::cout << "p = " << q << "\nL = " << doc["L"].dump() << "\nT = " << doc["T"].dump() << "\ns(i,j):\n";
    for (const auto& row : doc["s"]) std::cout << "  " << row.dump() << '\n';
    std::cout << "carry polynomial (coefficients mod p^2):\n";
    for (const auto& [e, c] : ordered_terms(cc)) std::cout << "  " << monomial(e.first, e.second) << ": " << c << '\n';
    std::cout << "expansion coefficients of C(delta, i+1): " << doc["expansion_coefficients"].dump() << '\n';
    return kOk;
}

struct ConstructArgs {
    unsigned p = 0;
    std::string type, pair, out, plan_out;
    std::optional<std::size_t> rank;
};

int cmd_construct(const ConstructArgs& a) {
    const CodeType ty = parse_type(a.p, a.type);
    const auto rr = admissible_rank_range(ty);
    std::optional<ConstructionPlan> plan;
    if (a.rank) {
        if (*a.rank < rr.lo || *a.rank > rr.hi)
            throw InadmissibleTarget("rank " + std::to_string(*a.rank) + " is not admissible for type " + ty.to_string() +
                                     "; valid ranks are " + range_string(rr.lo, rr.hi));
        plan = assemble_rank_plan(ty, *a.rank - rr.lo);
    } else if (!a.pair.empty()) {
        const auto kv = parse_list(a.pair, "--pair");
        if (kv.size() == 1) {
            const auto r = admissible_rbar_for_kbar(ty, kv[0]);
            std::cout << "type " << ty.to_string() << ", kbar " << kv[0] << ": rbar range " << range_string(r.lo, r.hi)
                      << '\n';
            return kOk;
        }
        if (kv.size() != 2) throw std::invalid_argument("--pair expects K,R (kbar, rbar)");
        plan = assemble_pair_plan(ty, kv[0], kv[1]);
    } else {
        std::cout << "type " << ty.to_string() << '\n'
                  << "rank range " << range_string(rr.lo, rr.hi) << '\n';
        for (std::size_t k = 0; k <= ty.delta; ++k) {
            const auto r = admissible_rbar_for_kbar(ty, k);
            std::cout << "kbar " << k << ": rbar range " << range_string(r.lo, r.hi) << '\n';
        }
        return kOk;
    }
    const AdditiveCode code = realize(*plan);
    const json spec = code_to_json(code);
    json plan_json = plan_to_json(*plan);
    if (a.out.empty()) {
        std::cout << json{{"code", spec}, {"plan", plan_json}}.dump(2) << '\n';
        return kOk;
    }
    const std::string plan_path = a.plan_out.empty() ? plan_path_for(a.out) : a.plan_out;
    write_json_file(a.out, spec);
    write_json_file(plan_path, plan_json);
    std::cout << "wrote " << a.out << " and " << plan_path << " (target rank " << plan->rank() << ")\n";
    return kOk;
}

struct AnalyzeArgs {
    std::string file, out;
    std::uint64_t cap = kDefaultSizeCap, kernel_cap = kDefaultKernelCap;
    bool no_bases = false;
};

int cmd_analyze(const AnalyzeArgs& a) {
    const AdditiveCode code = code_from_json(read_json_file(a.file));
    const AnalysisReport rep = analyze(code, a.cap, a.kernel_cap);
    const json j = report_to_json(rep, !a.no_bases);
    if (a.out.empty())
        std::cout << j.dump(2) << '\n';
    else
        write_json_file(a.out, j);
    return rep.method_agreement() ? kOk : kVerifyFailed;
}

struct VerifyArgs {
    std::string primes, config, out, format = "json", plan, code;
    std::optional<std::uint64_t> seed, cap;
    bool progress = false;
};

/// Rebuilds the code from a plan and checks a code spec against it.
int cmd_replay(const VerifyArgs& a) {
    const ConstructionPlan plan = plan_from_json(read_json_file(a.plan));
    const AdditiveCode expected = realize(plan);
    const AdditiveCode given = code_from_json(read_json_file(a.code));
    const bool same_matrix = given.type() == expected.type() && given.rows() == expected.rows();
    const auto gen = rank_of(given, RankMethod::GeneratorSet);
    const auto ex = rank_of(given, RankMethod::Exhaustive, a.cap.value_or(kDefaultSizeCap));
    json j{{"matrix_matches_plan", same_matrix},
           {"target_rank", plan.rank()},
           {"rank", {{"generator-set", gen.rank}, {"exhaustive", ex.rank}}}};
    bool ok = same_matrix && gen.rank == plan.rank() && ex.rank == plan.rank();
    if (plan.target == ConstructionPlan::Target::Pair) {
        const auto k = kernel_of(given, KernelMethod::Definition);
        j["target_kbar"] = plan.kbar;
        j["kbar"] = k.kbar;
        ok = ok && k.kbar == plan.kbar;
    }
    j["pass"] = ok;
    std::cout << j.dump(2) << '\n';
    if (gen.rank != plan.rank() || ex.rank != plan.rank())
        std::cerr << "rank mismatch: plan targets " << plan.rank() << ", code has rank " << ex.rank << '\n';
    if (!same_matrix) std::cerr << "generator matrix differs from the plan\n";
    return ok ? kOk : kVerifyFailed;
}

int cmd_verify(const VerifyArgs& a) {
    if (!a.plan.empty() || !a.code.empty()) {
        if (a.plan.empty() || a.code.empty()) throw std::invalid_argument("replay needs both --plan and --code");
        return cmd_replay(a);
    }
    CampaignConfig cfg = a.config.empty() ? CampaignConfig{} : config_from_json(read_json_file(a.config));
    if (!a.primes.empty()) {
        cfg.primes.clear();
        for (auto v : parse_list(a.primes, "--p")) cfg.primes.push_back(static_cast<unsigned>(v));
        for (unsigned p : cfg.primes) (void)Prime(p);
    }
    if (a.seed) cfg.seed = *a.seed;
    if (a.cap) cfg.cap = *a.cap;
    cfg.progress = a.progress;
    if (a.format != "json" && a.format != "csv") throw std::invalid_argument("--format must be json or csv");
    for (unsigned p : cfg.primes)
        if (p == 3) std::cerr << "note: p=3 results are " << kExploratoryBanner << '\n';

    const CampaignReport rep = run_campaign(cfg);
    const std::string text = rep.doc.dump(2) + "\n";
    if (!a.out.empty()) {
        std::ofstream f(a.out);
        if (!f) throw FormatError("cannot write " + a.out);
        f << text;
    }
    if (a.format == "csv")
        std::cout << summary_csv(rep);
    else if (a.out.empty())
        std::cout << text;
    const auto& s = rep.doc.at("summary");
    std::cerr << "verify: " << s.at("passed") << "/" << s.at("records") << " records passed, " << s.at("failed")
              << " failed, " << s.at("findings") << " findings\n";
    return rep.ok() ? kOk : kVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Rank and kernel of Z_p Z_{p^2}-linear codes"};
    app.require_subcommand(1);

    GrayArgs ga;
    auto* gray = app.add_subcommand("gray", "Gray map images and the carry identity");
    gray->add_option("--p", ga.p, "prime")->required();
    gray->add_option("--u", ga.u, "element of Z_{p^2}");
    gray->add_option("--v", ga.v, "second element; prints the carry decomposition of u + v");
    gray->add_flag("--check-identity", ga.check_identity, "exhaustive carry identity check");
    gray->add_flag("--coeffs", ga.coeffs, "carry polynomial coefficients");

    unsigned cp = 0;
    bool cjson = false;
    auto* coeffs = app.add_subcommand("coeffs", "s(i,j), L, T and the carry polynomial");
    coeffs->add_option("--p", cp, "prime")->required();
    coeffs->add_flag("--json", cjson, "JSON output");

    ConstructArgs ca;
    auto* construct = app.add_subcommand("construct", "build a code with a target rank or (kbar, rbar) pair");
    construct->add_option("--p", ca.p, "prime")->required();
    construct->add_option("--type", ca.type, "alpha,beta,gamma,delta,kappa")->required();
    auto* rank_opt = construct->add_option("--rank", ca.rank, "target rank r");
    construct->add_option("--pair", ca.pair, "K,R: target kbar and rbar (K alone prints the rbar range)")->excludes(rank_opt);
    construct->add_option("--out", ca.out, "code-spec output path");
    construct->add_option("--plan-out", ca.plan_out, "plan output path (default derived from --out)");

    AnalyzeArgs aa;
    auto* analyze_cmd = app.add_subcommand("analyze", "rank, kernel and bounds of a code spec");
    analyze_cmd->add_option("file", aa.file, "code-spec JSON")->required();
    analyze_cmd->add_option("--cap", aa.cap, "enumeration size cap");
    analyze_cmd->add_option("--kernel-cap", aa.kernel_cap, "kernel size cap");
    analyze_cmd->add_option("--out", aa.out, "report path (default stdout)");
    analyze_cmd->add_flag("--no-bases", aa.no_bases, "omit echelon bases");

    VerifyArgs va;
    auto* verify = app.add_subcommand("verify", "run a verification campaign or replay a plan");
    verify->add_option("--p", va.primes, "comma-separated primes");
    verify->add_option("--config", va.config, "campaign config JSON");
    verify->add_option("--seed", va.seed, "random seed");
    verify->add_option("--cap", va.cap, "enumeration size cap");
    verify->add_option("--out", va.out, "report path");
    verify->add_option("--format", va.format, "json or csv (summary table)");
    verify->add_option("--plan", va.plan, "plan JSON to replay");
    verify->add_option("--code", va.code, "code-spec JSON checked against --plan");
    verify->add_flag("--progress", va.progress, "progress on stderr");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kOk : kUsage;
    }

    try {
        if (*gray) return cmd_gray(ga);
        if (*coeffs) return cmd_coeffs(cp, cjson);
        if (*construct) return cmd_construct(ca);
        if (*analyze_cmd) return cmd_analyze(aa);
        if (*verify) return cmd_verify(va);
    } catch (const SizeCapExceeded& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const FormatError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}
