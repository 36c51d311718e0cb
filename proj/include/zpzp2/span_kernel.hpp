#pragma once

// Rank and kernel of the Gray image Phi(C). Every quantity has a fast path
// and an independent brute-force path so the two can be compared.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <unordered_set>
#include <vector>

#include "code.hpp"
#include "combinatorics.hpp"
#include "gfp_matrix.hpp"
#include "gray.hpp"
#include "ring.hpp"

namespace zpzp2 {

/// Kernel computations cost O(|C|^2); this is their default size guard.
inline constexpr std::uint64_t kDefaultKernelCap = 50'000;

enum class RankMethod { GeneratorSet, Exhaustive };
enum class KernelMethod { CarryMembership, Definition };

inline std::string to_string(RankMethod m) { return m == RankMethod::GeneratorSet ? "generator-set" : "exhaustive"; }
inline std::string to_string(KernelMethod m) {
    return m == KernelMethod::CarryMembership ? "carry-membership" : "definition";
}

/// sum over l in L of C(d + l - 1, l): the number of star-product span generators on d rows.
inline std::uint64_t star_span_count(Prime p, std::uint64_t d) {
    std::uint64_t s = 0;
    for (unsigned l : star_degrees(p)) s += binomial(d + l - 1, l);
    return s;
}

/// Largest rank excess compatible with kernel excess kbar >= 1.
inline std::uint64_t pair_rbar_max(Prime p, std::uint64_t kbar) { return star_span_count(p, kbar) - kbar; }

struct RankBounds {
    std::size_t lower = 0;             // gamma + 2 delta
    std::size_t generator_bound = 0;   // gamma + delta + star_span_count
    std::size_t beta_gamma_kappa = 0;  // beta + gamma + kappa
    std::size_t beta_delta_kappa = 0;  // beta + delta + kappa
    std::size_t rbar_max = 0;          // min(free width, star_span_count - delta)
    std::size_t upper() const { return lower + rbar_max; }
};

inline RankBounds rank_bounds(const CodeType& t) {
    RankBounds b;
    const std::uint64_t span = star_span_count(t.p, t.delta);
    b.lower = t.gamma + 2 * t.delta;
    b.generator_bound = t.gamma + t.delta + span;
    b.beta_gamma_kappa = t.beta + t.gamma + t.kappa;
    b.beta_delta_kappa = t.beta + t.delta + t.kappa;
    b.rbar_max = std::min<std::uint64_t>(t.free_width(), span - t.delta);
    return b;
}

/// Rows Phi(u_i), Phi(v_j) and Phi(p v_{i_1} * ... * v_{i_l}) for every
/// multiset i_1 <= ... <= i_l and l in L (ascending), multisets in lexicographic order.
inline GFpMatrix span_generators(const AdditiveCode& code) {
    const Prime p = code.prime();
    GFpMatrix m(p, code.type().gray_length());
    for (const auto& u : code.gens_p()) m.push_row(big_phi(u, p).entries);
    const auto& v = code.gens_p2();
    for (const auto& g : v) m.push_row(big_phi(g, p).entries);
    for (unsigned l : star_degrees(p)) {
        for (const auto& ms : multisets_lex(v.size(), l)) {
            MixedWord w = v[ms[0]];
            for (std::size_t k = 1; k < ms.size(); ++k) w = star(w, v[ms[k]], p);
            m.push_row(big_phi(scale(w, p.value(), p), p).entries);
        }
    }
    return m;
}

struct RankReport {
    std::size_t rank = 0;
    std::size_t rbar = 0;
    GFpMatrix basis;
    RankMethod method = RankMethod::GeneratorSet;
};

inline RankReport rank_of(const AdditiveCode& code, RankMethod method, std::uint64_t cap = kDefaultSizeCap) {
    const Prime p = code.prime();
    const std::size_t n = code.type().gray_length();
    IncrementalBasis basis(p, n);
    if (method == RankMethod::GeneratorSet) {
        const GFpMatrix gens = span_generators(code);
        for (const auto& row : gens.rows()) basis.insert(row);
    } else {
        for_each_codeword(code, [&](const MixedWord& c) { basis.insert(big_phi(c, p).entries); }, cap);
    }
    const std::size_t lower = code.type().log_size();
    if (basis.rank() < lower) throw std::logic_error("rank below log_p |C|; enumeration is inconsistent");
    return {basis.rank(), basis.rank() - lower, basis.echelon(), method};
}

namespace detail {

inline std::string pack(const std::vector<Residue>& v) {
    std::string s(v.size(), '\0');
    for (std::size_t i = 0; i < v.size(); ++i) s[i] = static_cast<char>(v[i]);
    return s;
}

}  // namespace detail

/// Gray images of K(C), sorted.
///
/// CarryMembership keeps Phi(u) when the carry word of (u, v) lies in C for
/// every v in C, testing membership by linear solve. Definition keeps Phi(u)
/// when Phi(u) + Phi(C) = Phi(C), checked against a hash set of images.
inline std::vector<GrayWord> kernel_members(const AdditiveCode& code, KernelMethod method,
                                            std::uint64_t cap = kDefaultKernelCap) {
    require_under_cap(code, cap);
    const Prime p = code.prime();
    const unsigned q = p.value();
    const auto words = enumerate(code, cap);
    const std::size_t count = words.size();
    std::vector<GrayWord> out;

    if (method == KernelMethod::CarryMembership) {
        // The carry word depends only on the low p-ary digits of u and v, so
        // codewords are grouped by their low-digit vector and each pair of
        // classes is tested once.
        const auto& red = code.reduction();
        const std::size_t alpha = code.type().alpha, beta = code.type().beta;
        std::map<std::vector<Residue>, std::size_t> class_of;
        std::vector<std::vector<Residue>> lows;
        std::vector<std::size_t> cls(count);
        for (std::size_t c = 0; c < count; ++c) {
            std::vector<Residue> low(beta);
            for (std::size_t i = 0; i < beta; ++i) low[i] = words[c].y[i] % q;
            auto [it, fresh] = class_of.emplace(low, lows.size());
            if (fresh) lows.push_back(std::move(low));
            cls[c] = it->second;
        }
        const std::size_t nc = lows.size();
        std::vector<char> class_ok(nc, 1);
        std::vector<Residue> e(alpha + beta);
        for (std::size_t a = 0; a < nc; ++a) {
            for (std::size_t b = 0; b < nc && class_ok[a]; ++b) {
                std::fill(e.begin(), e.end(), 0);
                bool any = false;
                for (std::size_t i = 0; i < beta; ++i) {
                    const bool carry = lows[a][i] + lows[b][i] >= q;
                    e[alpha + i] = carry ? q : 0;
                    any = any || carry;
                }
                if (any) class_ok[a] = red.contains_embedded(e);
            }
        }
        for (std::size_t u = 0; u < count; ++u)
            if (class_ok[cls[u]]) out.push_back(big_phi(words[u], p));
    } else {
        std::vector<std::vector<Residue>> images;
        images.reserve(count);
        std::unordered_set<std::string> image_set;
        image_set.reserve(count * 2);
        for (const auto& w : words) {
            images.push_back(big_phi(w, p).entries);
            image_set.insert(detail::pack(images.back()));
        }
        const std::size_t n = code.type().gray_length();
        std::string probe(n, '\0');
        for (std::size_t a = 0; a < count; ++a) {
            bool in_kernel = true;
            for (std::size_t b = 0; b < count && in_kernel; ++b) {
                for (std::size_t k = 0; k < n; ++k)
                    probe[k] = static_cast<char>((images[a][k] + images[b][k]) % q);
                in_kernel = image_set.count(probe) != 0;
            }
            if (in_kernel) out.push_back(GrayWord{images[a]});
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// Representatives v_i (order p^2 generator rows) whose combinations
/// Phi(sum a_i v_i), a_i in Z_p, tile C by cosets of K(C).
struct CosetDecomposition {
    std::vector<std::size_t> generator_indices;  // into gens_p2()
    std::vector<MixedWord> reps;
    std::size_t coset_count = 0;
    bool cardinality_ok = false;  // |C| = |K(C)| p^kbar
    bool verified = false;        // cosets pairwise distinct and covering C
};

struct KernelReport {
    std::size_t dimension = 0;
    std::size_t kbar = 0;
    std::size_t size = 0;
    GFpMatrix basis;
    std::vector<MixedWord> coset_reps;
    bool closed = false;  // |K| = p^dimension
    KernelMethod method = KernelMethod::CarryMembership;
};

inline CosetDecomposition coset_decomposition(const AdditiveCode& code, const KernelReport& kr,
                                              std::uint64_t cap = kDefaultKernelCap) {
    require_under_cap(code, cap);
    const Prime p = code.prime();
    const unsigned q = p.value();
    const std::size_t n = code.type().gray_length();
    IncrementalBasis kernel(p, n);
    for (const auto& row : kr.basis.rows()) kernel.insert(row);

    CosetDecomposition d;
    d.cardinality_ok = checked_pow(q, kr.dimension) * checked_pow(q, kr.kbar) == code.size();

    std::vector<std::vector<Residue>> canon_c;
    for_each_codeword(code, [&](const MixedWord& c) { canon_c.push_back(kernel.reduce(big_phi(c, p).entries)); }, cap);

    const auto& v = code.gens_p2();
    std::vector<std::size_t> candidates;
    for (std::size_t j = 0; j < v.size(); ++j)
        if (!kernel.contains(big_phi(v[j], p).entries)) candidates.push_back(j);

    if (kr.kbar > candidates.size()) return d;
    for (const auto& subset : subsets_lex(candidates.size(), kr.kbar)) {
        std::set<std::vector<Residue>> canon_reps;
        std::vector<unsigned> a(kr.kbar, 0);
        const std::uint64_t combos = checked_pow(q, kr.kbar);
        for (std::uint64_t t = 0; t < combos; ++t) {
            MixedWord w = MixedWord::zero(code.type().alpha, code.type().beta);
            for (std::size_t i = 0; i < kr.kbar; ++i) w = add(w, scale(v[candidates[subset[i]]], a[i], p), p);
            canon_reps.insert(kernel.reduce(big_phi(w, p).entries));
            for (std::size_t i = 0; i < kr.kbar; ++i) {
                if (++a[i] < q) break;
                a[i] = 0;
            }
        }
        bool ok = canon_reps.size() == combos;
        for (std::size_t c = 0; ok && c < canon_c.size(); ++c) ok = canon_reps.count(canon_c[c]) != 0;
        if (ok) {
            for (std::size_t i : subset) {
                d.generator_indices.push_back(candidates[i]);
                d.reps.push_back(v[candidates[i]]);
            }
            d.coset_count = combos;
            d.verified = true;
            return d;
        }
    }
    return d;
}

/// Dimension, basis and coset representatives of a computed kernel member set.
inline KernelReport summarize_kernel(const AdditiveCode& code, const std::vector<GrayWord>& members,
                                     KernelMethod method) {
    const Prime p = code.prime();
    IncrementalBasis basis(p, code.type().gray_length());
    for (const auto& g : members) basis.insert(g.entries);
    KernelReport kr;
    kr.method = method;
    kr.dimension = basis.rank();
    kr.size = members.size();
    kr.closed = checked_pow(p.value(), kr.dimension) == members.size();
    if (kr.dimension > code.type().log_size()) throw std::logic_error("kernel larger than the code");
    kr.kbar = code.type().log_size() - kr.dimension;
    kr.basis = basis.echelon();
    return kr;
}

inline KernelReport kernel_of(const AdditiveCode& code, KernelMethod method, std::uint64_t cap = kDefaultKernelCap) {
    KernelReport kr = summarize_kernel(code, kernel_members(code, method, cap), method);
    kr.coset_reps = coset_decomposition(code, kr, cap).reps;
    return kr;
}

/// The additive code generated by the u_i, v_j and p v_{i_1} * ... * v_{i_l}
/// (l in L); its Gray image is the linear span of Phi(C).
inline AdditiveCode span_code(const AdditiveCode& code) {
    const Prime p = code.prime();
    std::vector<MixedWord> rows = code.rows();
    const auto& v = code.gens_p2();
    for (unsigned l : star_degrees(p)) {
        for (const auto& ms : multisets_lex(v.size(), l)) {
            MixedWord w = v[ms[0]];
            for (std::size_t k = 1; k < ms.size(); ++k) w = star(w, v[ms[k]], p);
            w = scale(w, p.value(), p);
            if (!w.is_zero()) rows.push_back(std::move(w));
        }
    }
    return AdditiveCode::from_rows(p, code.type().alpha, code.type().beta, rows);
}

/// Both rank routes and both kernel routes, plus bounds. Routes whose
/// enumeration would exceed a cap are skipped and marked as such.
struct AnalysisReport {
    CodeType type;
    RankBounds bounds;
    RankReport rank_generator;
    std::optional<RankReport> rank_exhaustive;
    std::optional<KernelReport> kernel_carry;
    std::optional<KernelReport> kernel_definition;
    bool kernel_sets_equal = false;
    std::optional<CosetDecomposition> cosets;
    std::vector<std::string> skipped;

    bool rank_agreement() const { return !rank_exhaustive || rank_exhaustive->rank == rank_generator.rank; }
    bool kernel_agreement() const {
        if (!kernel_carry || !kernel_definition) return true;
        return kernel_sets_equal && kernel_carry->dimension == kernel_definition->dimension;
    }
    bool method_agreement() const { return rank_agreement() && kernel_agreement(); }
    bool within_upper_bound() const { return rank_generator.rank <= bounds.upper(); }
    bool within_beta_gamma_kappa() const { return rank_generator.rank <= bounds.beta_gamma_kappa; }
};

inline AnalysisReport analyze(const AdditiveCode& code, std::uint64_t cap = kDefaultSizeCap,
                              std::uint64_t kernel_cap = kDefaultKernelCap) {
    AnalysisReport r{code.type(), rank_bounds(code.type()), rank_of(code, RankMethod::GeneratorSet), {}, {}, {},
                     false, {}, {}};
    if (within_cap(code.type(), cap)) {
        r.rank_exhaustive = rank_of(code, RankMethod::Exhaustive, cap);
    } else {
        r.skipped.push_back("rank.exhaustive");
    }
    const std::uint64_t kcap = std::min(cap, kernel_cap);
    if (within_cap(code.type(), kcap)) {
        const auto carry = kernel_members(code, KernelMethod::CarryMembership, kcap);
        const auto defn = kernel_members(code, KernelMethod::Definition, kcap);
        r.kernel_sets_equal = carry == defn;
        r.kernel_carry = summarize_kernel(code, carry, KernelMethod::CarryMembership);
        r.kernel_definition = summarize_kernel(code, defn, KernelMethod::Definition);
        r.cosets = coset_decomposition(code, *r.kernel_carry, kcap);
        r.kernel_carry->coset_reps = r.cosets->reps;
        r.kernel_definition->coset_reps = r.cosets->reps;
    } else {
        r.skipped.push_back("kernel.carry-membership");
        r.skipped.push_back("kernel.definition");
    }
    return r;
}

}  // namespace zpzp2
