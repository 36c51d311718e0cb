#pragma once

// Generator matrices with a prescribed rank, or a prescribed (rank, kernel)
// pair, for the Gray image. The free block S of the standard form is filled
// with scaled identities and placement matrices built from the row families
// A_i^j; all other free blocks are zero.

#include <algorithm>
#include <cstdint>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "code.hpp"
#include "combinatorics.hpp"
#include "gray.hpp"
#include "ring.hpp"
#include "span_kernel.hpp"

namespace zpzp2 {

/// Rows of A_i^j, each of length i + 1.
using RowFamily = std::vector<std::vector<Residue>>;

/// Raw recursion without range checks on the entries.
inline std::vector<std::vector<long>> build_A_raw(unsigned i, unsigned j, Prime p) {
    const long q = p.value();
    if (i < 1 || i > j || j > q - 1) throw std::out_of_range("A_i^j needs 1 <= i <= j <= p-1");
    std::vector<std::vector<long>> out;
    if (i == 1) {
        for (unsigned t = 0; t < j; ++t) out.push_back({q - j, q - j + t});
        return out;
    }
    for (unsigned jj = i - 1; jj <= j - 1; ++jj) {
        for (auto row : build_A_raw(i - 1, jj, p)) {
            std::vector<long> r{q - j + 1};
            r.insert(r.end(), row.begin(), row.end());
            for (long& v : r) v -= 1;
            out.push_back(std::move(r));
        }
    }
    return out;
}

/// A_i^j with entries as residues; throws std::domain_error if any entry
/// falls outside 1..p-1.
inline RowFamily build_A(unsigned i, unsigned j, Prime p) {
    RowFamily out;
    for (const auto& row : build_A_raw(i, j, p)) {
        std::vector<Residue> r;
        for (long v : row) {
            if (v <= 0 || v >= static_cast<long>(p.value()))
                throw std::domain_error("A_" + std::to_string(i) + "^" + std::to_string(j) + " has entry " +
                                        std::to_string(v) + " outside 1..p-1");
            r.push_back(static_cast<Residue>(v));
        }
        out.push_back(std::move(r));
    }
    return out;
}

/// Every (i, j, entry) with an A-family entry outside 1..p-1; empty when the recursion is well formed.
struct AEntryViolation {
    unsigned i, j;
    long entry;
};

inline std::vector<AEntryViolation> a_entry_violations(Prime p) {
    std::vector<AEntryViolation> out;
    const long q = p.value();
    for (unsigned j = 1; j <= q - 1; ++j)
        for (unsigned i = 1; i <= j; ++i)
            for (const auto& row : build_A_raw(i, j, p))
                for (long v : row)
                    if (v <= 0 || v >= q) out.push_back({i, j, v});
    return out;
}

inline unsigned gamma_parity_index(unsigned i) { return i % 2 == 0 ? i : i + 1; }

/// Gamma_i: rows of A_i^{ibar + 2m} for m ascending, then rows of A_i^{p-2}.
inline RowFamily build_gamma(unsigned i, Prime p) {
    const unsigned q = p.value();
    if (i < 1 || i > q - 2) throw std::out_of_range("Gamma_i needs 1 <= i <= p-2");
    const unsigned ib = gamma_parity_index(i);
    RowFamily out;
    for (unsigned j = ib; j <= q - 1; j += 2) {
        auto a = build_A(i, j, p);
        out.insert(out.end(), a.begin(), a.end());
    }
    auto a = build_A(i, q - 2, p);
    out.insert(out.end(), a.begin(), a.end());
    return out;
}

/// Columns of M^delta(x): one per s-subset of rows (lexicographic), carrying
/// x_1, ..., x_s top-down on the support.
inline Matrix build_placement(std::size_t delta, const std::vector<Residue>& x, Prime p) {
    if (x.empty() || x.size() > delta) throw std::invalid_argument("placement needs 1 <= len(x) <= delta");
    for (Residue v : x)
        if (v % p.square() == 0) throw std::invalid_argument("placement entries must be nonzero mod p^2");
    Matrix cols;
    for (const auto& support : subsets_lex(delta, x.size())) {
        std::vector<Residue> c(delta, 0);
        for (std::size_t k = 0; k < support.size(); ++k) c[support[k]] = x[k] % p.square();
        cols.push_back(std::move(c));
    }
    return cols;
}

/// One group of columns of S, all of the same height.
struct ColumnBlock {
    enum class Kind { ScaledIdentity, Placement, Constant };
    Kind kind = Kind::Placement;
    Residue scale = 0;           // ScaledIdentity: c I; Constant: the repeated value
    std::vector<Residue> x;      // Placement: M(x)
    std::string source;          // e.g. "Gamma_2" or "ones"

    friend bool operator==(const ColumnBlock&, const ColumnBlock&) = default;
};

inline std::string to_string(ColumnBlock::Kind k) {
    switch (k) {
        case ColumnBlock::Kind::ScaledIdentity: return "scaled_identity";
        case ColumnBlock::Kind::Placement: return "placement";
        case ColumnBlock::Kind::Constant: return "constant";
    }
    return "?";
}

inline Matrix block_columns(const ColumnBlock& b, std::size_t height, Prime p) {
    Matrix cols;
    switch (b.kind) {
        case ColumnBlock::Kind::ScaledIdentity:
            for (std::size_t i = 0; i < height; ++i) {
                std::vector<Residue> c(height, 0);
                c[i] = b.scale % p.square();
                cols.push_back(std::move(c));
            }
            break;
        case ColumnBlock::Kind::Placement:
            if (b.x.size() <= height) cols = build_placement(height, b.x, p);
            break;
        case ColumnBlock::Kind::Constant:
            cols.push_back(std::vector<Residue>(height, b.scale % p.square()));
            break;
    }
    return cols;
}

/// Blocks in the fixed order: 2I, ..., ((p+1)/2)I, then M(x) for x in
/// Gamma_1, ..., Gamma_{p-2}, then M(1, ..., 1).
inline std::vector<ColumnBlock> full_block_family(Prime p) {
    const unsigned q = p.value();
    std::vector<ColumnBlock> blocks;
    for (unsigned c = 2; c <= (q + 1) / 2; ++c) blocks.push_back({ColumnBlock::Kind::ScaledIdentity, c, {}, "identity"});
    for (unsigned i = 1; i <= q - 2; ++i)
        for (auto& x : build_gamma(i, p))
            blocks.push_back({ColumnBlock::Kind::Placement, 0, x, "Gamma_" + std::to_string(i)});
    blocks.push_back({ColumnBlock::Kind::Placement, 0, std::vector<Residue>(q, 1), "ones"});
    return blocks;
}

/// Column count of the full family on `height` rows.
inline std::size_t full_family_width(Prime p, std::size_t height) {
    std::size_t n = 0;
    for (const auto& b : full_block_family(p)) {
        if (b.kind == ColumnBlock::Kind::ScaledIdentity)
            n += height;
        else
            n += binomial(height, b.x.size());
    }
    return n;
}

struct ConstructionPlan {
    enum class Target { Rank, Pair };
    CodeType type;
    Target target = Target::Rank;
    std::size_t rbar = 0;
    std::size_t kbar = 0;         // Pair only
    std::size_t height = 0;       // rows of S the blocks occupy (delta, or kbar for pairs)
    bool first_column = false;    // Pair: leading all-(p-1) column
    std::vector<ColumnBlock> blocks;
    std::vector<std::size_t> removed;  // indices into the concatenated block columns
    std::size_t width = 0;        // free_width of the type, after zero padding

    std::size_t rank() const { return type.log_size() + rbar; }
    std::size_t kernel_dimension() const { return type.log_size() - kbar; }

    friend bool operator==(const ConstructionPlan&, const ConstructionPlan&) = default;
};

class InadmissibleTarget : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

inline std::string range_string(std::size_t lo, std::size_t hi) {
    if (lo > hi) return "{}";
    if (lo == hi) return "{" + std::to_string(lo) + "}";
    return "{" + std::to_string(lo) + ",...," + std::to_string(hi) + "}";
}

/// Admissible r for a type: gamma + 2 delta up to gamma + 2 delta + rbar_max.
struct RankRange {
    std::size_t lo = 0, hi = 0;
};

inline RankRange admissible_rank_range(const CodeType& ty) {
    ty.validate();
    const auto b = rank_bounds(ty);
    return {b.lower, b.upper()};
}

/// Admissible rbar for a given kbar: {0} for kbar = 0, else
/// {1, ..., min(free width, star_span_count(kbar) - kbar)}; empty when kbar > delta.
inline RankRange admissible_rbar_for_kbar(const CodeType& ty, std::size_t kbar) {
    ty.validate();
    if (kbar == 0) return {0, 0};
    if (kbar > ty.delta) return {1, 0};
    const std::size_t hi = std::min<std::uint64_t>(ty.free_width(), pair_rbar_max(ty.p, kbar));
    return {1, hi};
}

namespace detail {

inline void check_plan_type(const CodeType& ty) {
    ty.validate();
    if (ty.kappa > ty.alpha || ty.gamma < ty.kappa) throw std::invalid_argument("kappa out of range");
}

}  // namespace detail

/// The columns of S (delta rows, width = free_width), before any type-level padding check.
inline Matrix plan_columns(const ConstructionPlan& plan) {
    const Prime p = plan.type.p;
    Matrix cols;
    if (plan.first_column) cols.push_back(std::vector<Residue>(plan.height, p.value() - 1));
    Matrix body;
    for (const auto& b : plan.blocks) {
        auto c = block_columns(b, plan.height, p);
        body.insert(body.end(), c.begin(), c.end());
    }
    std::set<std::size_t> removed(plan.removed.begin(), plan.removed.end());
    if (removed.size() != plan.removed.size()) throw std::invalid_argument("duplicate removed column index");
    for (std::size_t idx : removed)
        if (idx >= body.size()) throw std::invalid_argument("removed column index out of range");
    for (std::size_t i = 0; i < body.size(); ++i)
        if (!removed.count(i)) cols.push_back(std::move(body[i]));
    if (cols.size() > plan.width) throw std::invalid_argument("plan needs more columns than the type provides");
    // Extend to delta rows and pad to the full width with zero columns.
    for (auto& c : cols) c.resize(plan.type.delta, 0);
    while (cols.size() < plan.width) cols.emplace_back(plan.type.delta, 0);
    return cols;
}

/// S as a delta x width row-major matrix.
inline Matrix plan_matrix(const ConstructionPlan& plan) {
    const Matrix cols = plan_columns(plan);
    Matrix s(plan.type.delta, std::vector<Residue>(plan.width, 0));
    for (std::size_t c = 0; c < cols.size(); ++c)
        for (std::size_t r = 0; r < plan.type.delta; ++r) s[r][c] = cols[c][r];
    return s;
}

/// Rows of
///   [ I_kappa  0 | 0  0          0   ]
///   [ 0        0 | 0  p I_{g-k}  0   ]
///   [ 0        0 | S  0          I_d ]
inline AdditiveCode realize(const ConstructionPlan& plan) {
    const CodeType& ty = plan.type;
    detail::check_plan_type(ty);
    if (plan.width != ty.free_width()) throw std::invalid_argument("plan width does not match the type");
    const unsigned q = ty.p.value();
    const std::size_t w = ty.free_width(), gk = ty.gamma - ty.kappa;
    const Matrix s = plan_matrix(plan);
    std::vector<MixedWord> gp, gp2;
    for (std::size_t i = 0; i < ty.kappa; ++i) {
        MixedWord m = MixedWord::zero(ty.alpha, ty.beta);
        m.x[i] = 1;
        gp.push_back(std::move(m));
    }
    for (std::size_t i = 0; i < gk; ++i) {
        MixedWord m = MixedWord::zero(ty.alpha, ty.beta);
        m.y[w + i] = q;
        gp.push_back(std::move(m));
    }
    for (std::size_t i = 0; i < ty.delta; ++i) {
        MixedWord m = MixedWord::zero(ty.alpha, ty.beta);
        for (std::size_t c = 0; c < w; ++c) m.y[c] = s[i][c];
        m.y[w + gk + i] = 1;
        gp2.push_back(std::move(m));
    }
    return AdditiveCode(ty, std::move(gp), std::move(gp2));
}

/// Rank target with the full family on delta rows; columns removed from the
/// tail unless `removed` is given explicitly.
inline ConstructionPlan assemble_rank_plan(const CodeType& ty, std::size_t rbar,
                                           const std::vector<std::size_t>* removed = nullptr) {
    detail::check_plan_type(ty);
    const auto range = admissible_rank_range(ty);
    const std::size_t rbar_max = range.hi - range.lo;
    if (rbar > rbar_max)
        throw InadmissibleTarget("rank " + std::to_string(range.lo + rbar) + " is not admissible for type " +
                                 ty.to_string() + "; valid ranks are " + range_string(range.lo, range.hi));
    ConstructionPlan plan;
    plan.type = ty;
    plan.target = ConstructionPlan::Target::Rank;
    plan.rbar = rbar;
    plan.kbar = 0;
    plan.height = ty.delta;
    plan.width = ty.free_width();
    if (rbar == 0) return plan;
    plan.blocks = full_block_family(ty.p);
    const std::size_t full = full_family_width(ty.p, ty.delta);
    if (removed) {
        if (full - removed->size() != rbar)
            throw std::invalid_argument("removing " + std::to_string(removed->size()) + " of " +
                                        std::to_string(full) + " columns cannot give rbar " + std::to_string(rbar));
        plan.removed = *removed;
        std::sort(plan.removed.begin(), plan.removed.end());
    } else {
        for (std::size_t i = rbar; i < full; ++i) plan.removed.push_back(i);
    }
    return plan;
}

/// Index of the family column (height kbar) made redundant by a leading
/// all-(p-1) column: scanning from the tail, the first column whose removal
/// keeps rbar at the full family width. Found on an auxiliary code
/// of type (0, w + 1 + kbar; 0, kbar; 0) using the generator-set rank.
inline std::size_t redundant_family_column(Prime p, std::size_t kbar) {
    if (kbar == 0) throw std::invalid_argument("kbar must be positive");
    const std::size_t full = full_family_width(p, kbar);
    const CodeType aux{p, 0, full + 1 + kbar, 0, kbar, 0};
    ConstructionPlan plan;
    plan.type = aux;
    plan.target = ConstructionPlan::Target::Pair;
    plan.kbar = kbar;
    plan.height = kbar;
    plan.first_column = true;
    plan.blocks = full_block_family(p);
    plan.width = aux.free_width();
    for (std::size_t j = full; j-- > 0;) {
        plan.removed = {j};
        if (rank_of(realize(plan), RankMethod::GeneratorSet).rbar == full) return j;
    }
    throw std::logic_error("no redundant column for p=" + std::to_string(p.value()) + ", kbar=" +
                           std::to_string(kbar));
}

/// Pair target: S has kbar nonzero rows; its columns are an all-(p-1)
/// column followed by the full family on kbar rows with the redundant column
/// dropped, trimmed from the tail to rbar columns in total.
inline ConstructionPlan assemble_pair_plan(const CodeType& ty, std::size_t kbar, std::size_t rbar) {
    detail::check_plan_type(ty);
    const auto range = admissible_rbar_for_kbar(ty, kbar);
    const bool ok = kbar <= ty.delta && rbar >= range.lo && rbar <= range.hi;
    if (!ok) {
        std::ostringstream os;
        os << "pair (kbar=" << kbar << ", rbar=" << rbar << ") is not admissible for type " << ty.to_string()
           << "; ";
        if (kbar > ty.delta)
            os << "kbar must lie in {0,...," << ty.delta << "}";
        else
            os << "for kbar=" << kbar << " valid rbar are " << range_string(range.lo, range.hi);
        throw InadmissibleTarget(os.str());
    }
    ConstructionPlan plan;
    plan.type = ty;
    plan.target = ConstructionPlan::Target::Pair;
    plan.rbar = rbar;
    plan.kbar = kbar;
    plan.height = kbar;
    plan.width = ty.free_width();
    if (kbar == 0) return plan;
    plan.first_column = true;
    plan.blocks = full_block_family(ty.p);
    const std::size_t full = full_family_width(ty.p, kbar);
    const std::size_t skip = redundant_family_column(ty.p, kbar);
    std::size_t kept = 1;
    for (std::size_t i = 0; i < full; ++i) {
        if (i != skip && kept < rbar) {
            ++kept;
            continue;
        }
        plan.removed.push_back(i);
    }
    return plan;
}

/// Coefficient of C(delta, i+1) in the binomial re-expansion of
/// delta + star_span_count(delta), for 0 <= i <= p-2.
inline std::uint64_t expansion_coefficient(unsigned i, Prime p) {
    const unsigned q = p.value();
    if (i > q - 2) throw std::out_of_range("expansion index must lie in [0, p-2]");
    if (i == 0) return (q + 3) / 2;
    const unsigned ib = gamma_parity_index(i);
    std::uint64_t c = binomial(q - 2, i);
    for (unsigned j = ib; j <= q - 1; j += 2) c += binomial(j, i);
    return c;
}

struct BinomialIdentityReport {
    struct Row {
        std::size_t delta = 0;
        std::uint64_t span = 0;       // sum_{l in L} C(delta+l-1, l)
        std::uint64_t odd_form = 0;   // sum_m C(delta+2m, 2m+1) + C(delta+p-2, p-1)
        std::uint64_t expansion = 0;  // sum_i coef_i C(delta, i+1) + C(delta, p)
        bool holds = false;           // delta + span == odd_form == expansion
        bool holds_without_delta = false;  // span == expansion
    };
    std::size_t pascal_checked = 0;
    std::vector<std::pair<std::size_t, std::size_t>> pascal_failures;  // (i, k)
    std::vector<std::uint64_t> coefficients;  // coef_0 .. coef_{p-2}, then 1 for C(delta, p)
    std::vector<Row> rows;

    bool ok() const {
        if (!pascal_failures.empty()) return false;
        return std::all_of(rows.begin(), rows.end(), [](const Row& r) { return r.holds; });
    }
};

/// C(k, i) = sum_{j=i-1}^{k-1} C(j, i-1) for 1 <= i <= k <= 2p, and the
/// re-expansion of the star span count for delta = 0, ..., delta_max.
inline BinomialIdentityReport binom_identity_check(Prime p, std::size_t delta_max) {
    const unsigned q = p.value();
    BinomialIdentityReport rep;
    for (std::size_t k = 1; k <= 2 * q; ++k) {
        for (std::size_t i = 1; i <= k; ++i) {
            std::uint64_t sum = 0;
            for (std::size_t j = i - 1; j <= k - 1; ++j) sum += binomial(j, i - 1);
            ++rep.pascal_checked;
            if (sum != binomial(k, i)) rep.pascal_failures.emplace_back(i, k);
        }
    }
    for (unsigned i = 0; i <= q - 2; ++i) rep.coefficients.push_back(expansion_coefficient(i, p));
    rep.coefficients.push_back(1);
    for (std::size_t d = 0; d <= delta_max; ++d) {
        BinomialIdentityReport::Row row;
        row.delta = d;
        row.span = star_span_count(p, d);
        for (unsigned m = 0; m <= (q - 1) / 2; ++m) row.odd_form += binomial(d + 2 * m, 2 * m + 1);
        row.odd_form += binomial(d + q - 2, q - 1);
        for (unsigned i = 0; i <= q - 1; ++i) row.expansion += rep.coefficients[i] * binomial(d, i + 1);
        row.holds = d + row.span == row.odd_form && row.odd_form == row.expansion;
        row.holds_without_delta = row.span == row.expansion;
        rep.rows.push_back(row);
    }
    return rep;
}

}  // namespace zpzp2
