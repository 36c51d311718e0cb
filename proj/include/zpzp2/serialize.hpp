#pragma once

// JSON forms of code specs, construction plans and analysis reports.

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "code.hpp"
#include "construct.hpp"
#include "span_kernel.hpp"

namespace zpzp2 {

using json = nlohmann::ordered_json;

class FormatError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

inline json type_to_json(const CodeType& t) {
    return {{"p", t.p.value()}, {"alpha", t.alpha}, {"beta", t.beta},
            {"gamma", t.gamma}, {"delta", t.delta}, {"kappa", t.kappa}};
}

inline CodeType type_from_json(const json& j) {
    try {
        CodeType t{Prime(j.at("p").get<unsigned>()), j.at("alpha").get<std::size_t>(), j.at("beta").get<std::size_t>(),
                   j.at("gamma").get<std::size_t>(), j.at("delta").get<std::size_t>(), j.at("kappa").get<std::size_t>()};
        t.validate();
        return t;
    } catch (const json::exception& e) {
        throw FormatError(std::string("bad code type: ") + e.what());
    }
}

/// Each row lists alpha residues mod p, then beta residues mod p^2.
inline json code_to_json(const AdditiveCode& code) {
    const auto& t = code.type();
    json rows = json::array();
    for (const auto& r : code.rows()) {
        json row = json::array();
        for (Residue v : r.x) row.push_back(v);
        for (Residue v : r.y) row.push_back(v);
        rows.push_back(std::move(row));
    }
    return {{"p", t.p.value()}, {"alpha", t.alpha}, {"beta", t.beta}, {"rows", std::move(rows)},
            {"type", type_to_json(t)}};
}

/// Parses a code spec and infers its type. A "type" member, if present, must match.
inline AdditiveCode code_from_json(const json& j) {
    try {
        const Prime p(j.at("p").get<unsigned>());
        const auto alpha = j.at("alpha").get<std::size_t>();
        const auto beta = j.at("beta").get<std::size_t>();
        std::vector<MixedWord> rows;
        for (const auto& jr : j.at("rows")) {
            const auto vals = jr.get<std::vector<long long>>();
            if (vals.size() != alpha + beta)
                throw FormatError("row has " + std::to_string(vals.size()) + " entries, expected " +
                                  std::to_string(alpha + beta));
            MixedWord w = MixedWord::zero(alpha, beta);
            for (std::size_t i = 0; i < alpha + beta; ++i) {
                const long long mod = i < alpha ? p.value() : p.square();
                if (vals[i] < 0 || vals[i] >= mod)
                    throw FormatError("entry " + std::to_string(vals[i]) + " out of range mod " + std::to_string(mod));
                (i < alpha ? w.x[i] : w.y[i - alpha]) = static_cast<Residue>(vals[i]);
            }
            rows.push_back(std::move(w));
        }
        AdditiveCode code = AdditiveCode::from_rows(p, alpha, beta, rows);
        if (j.contains("type")) {
            const CodeType claimed = type_from_json(j.at("type"));
            if (!(claimed == code.type())) throw TypeMismatch(claimed, code.type());
        }
        return code;
    } catch (const json::exception& e) {
        throw FormatError(std::string("bad code spec: ") + e.what());
    }
}

inline json block_to_json(const ColumnBlock& b) {
    json j{{"kind", to_string(b.kind)}, {"source", b.source}};
    if (b.kind == ColumnBlock::Kind::Placement)
        j["x"] = b.x;
    else
        j["scale"] = b.scale;
    return j;
}

inline ColumnBlock block_from_json(const json& j) {
    ColumnBlock b;
    const auto kind = j.at("kind").get<std::string>();
    if (kind == "scaled_identity")
        b.kind = ColumnBlock::Kind::ScaledIdentity;
    else if (kind == "placement")
        b.kind = ColumnBlock::Kind::Placement;
    else if (kind == "constant")
        b.kind = ColumnBlock::Kind::Constant;
    else
        throw FormatError("unknown block kind " + kind);
    b.source = j.value("source", "");
    if (b.kind == ColumnBlock::Kind::Placement)
        b.x = j.at("x").get<std::vector<Residue>>();
    else
        b.scale = j.at("scale").get<Residue>();
    return b;
}

inline json plan_to_json(const ConstructionPlan& plan) {
    json target;
    if (plan.target == ConstructionPlan::Target::Rank) {
        target = {{"kind", "rank"}, {"r", plan.rank()}, {"rbar", plan.rbar}};
    } else {
        target = {{"kind", "pair"}, {"r", plan.rank()}, {"k", plan.kernel_dimension()},
                  {"rbar", plan.rbar}, {"kbar", plan.kbar}};
    }
    json blocks = json::array();
    for (const auto& b : plan.blocks) blocks.push_back(block_to_json(b));
    return {{"type", type_to_json(plan.type)},
            {"target", std::move(target)},
            {"height", plan.height},
            {"first_column", plan.first_column},
            {"blocks", std::move(blocks)},
            {"removed", plan.removed},
            {"width", plan.width}};
}

inline ConstructionPlan plan_from_json(const json& j) {
    try {
        ConstructionPlan plan;
        plan.type = type_from_json(j.at("type"));
        const auto& t = j.at("target");
        const auto kind = t.at("kind").get<std::string>();
        if (kind == "rank") {
            plan.target = ConstructionPlan::Target::Rank;
        } else if (kind == "pair") {
            plan.target = ConstructionPlan::Target::Pair;
            plan.kbar = t.at("kbar").get<std::size_t>();
        } else {
            throw FormatError("unknown target kind " + kind);
        }
        plan.rbar = t.at("rbar").get<std::size_t>();
        plan.height = j.at("height").get<std::size_t>();
        plan.first_column = j.at("first_column").get<bool>();
        for (const auto& b : j.at("blocks")) plan.blocks.push_back(block_from_json(b));
        plan.removed = j.at("removed").get<std::vector<std::size_t>>();
        plan.width = j.at("width").get<std::size_t>();
        if (plan.height > plan.type.delta) throw FormatError("plan height exceeds delta");
        return plan;
    } catch (const json::exception& e) {
        throw FormatError(std::string("bad plan: ") + e.what());
    }
}

inline json matrix_to_json(const GFpMatrix& m) {
    json rows = json::array();
    for (const auto& r : m.rows()) rows.push_back(r);
    return rows;
}

inline json word_to_json(const MixedWord& w) {
    json row = json::array();
    for (Residue v : w.x) row.push_back(v);
    for (Residue v : w.y) row.push_back(v);
    return row;
}

inline json bounds_to_json(const RankBounds& b) {
    return {{"lower", b.lower},
            {"upper", b.upper()},
            {"generator_bound", b.generator_bound},
            {"beta_gamma_kappa", b.beta_gamma_kappa},
            {"beta_delta_kappa", b.beta_delta_kappa},
            {"rbar_max", b.rbar_max}};
}

/// Report of analyze(). With `with_bases` false the echelon bases are omitted.
inline json report_to_json(const AnalysisReport& r, bool with_bases = true) {
    json j;
    j["type"] = type_to_json(r.type);
    j["rank"] = r.rank_generator.rank;
    j["rbar"] = r.rank_generator.rbar;
    if (r.kernel_carry) {
        j["ker"] = r.kernel_carry->dimension;
        j["kbar"] = r.kernel_carry->kbar;
    } else {
        j["ker"] = nullptr;
        j["kbar"] = nullptr;
    }
    j["bounds"] = bounds_to_json(r.bounds);
    j["method_agreement"] = r.method_agreement();

    json methods;
    methods["rank"] = {{"generator-set", r.rank_generator.rank},
                       {"exhaustive", r.rank_exhaustive ? json(r.rank_exhaustive->rank) : json("skipped")}};
    if (r.kernel_carry && r.kernel_definition) {
        methods["kernel"] = {{"carry-membership", r.kernel_carry->dimension},
                             {"definition", r.kernel_definition->dimension},
                             {"sets_equal", r.kernel_sets_equal}};
    } else {
        methods["kernel"] = {{"carry-membership", "skipped"}, {"definition", "skipped"}};
    }
    j["methods"] = std::move(methods);
    if (r.cosets) {
        json reps = json::array();
        for (const auto& w : r.cosets->reps) reps.push_back(word_to_json(w));
        j["cosets"] = {{"count", r.cosets->coset_count},
                       {"generator_indices", r.cosets->generator_indices},
                       {"cardinality_ok", r.cosets->cardinality_ok},
                       {"verified", r.cosets->verified},
                       {"reps", std::move(reps)}};
    }
    if (with_bases) {
        j["rank_basis"] = matrix_to_json(r.rank_generator.basis);
        if (r.kernel_carry) j["kernel_basis"] = matrix_to_json(r.kernel_carry->basis);
    }
    j["skipped"] = r.skipped;
    return j;
}

inline json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw FormatError("cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw FormatError(path + ": " + e.what());
    }
}

inline void write_json_file(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw FormatError("cannot write " + path);
    out << j.dump(2) << '\n';
}

}  // namespace zpzp2
