#pragma once

// Z_p Z_{p^2}-additive codes: type parameters, generator matrices,
// codeword enumeration, membership and the block standard form.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <memory>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "combinatorics.hpp"
#include "gfp_matrix.hpp"
#include "ring.hpp"

namespace zpzp2 {

using Matrix = std::vector<std::vector<Residue>>;

inline constexpr std::uint64_t kDefaultSizeCap = 1'000'000;

/// (p; alpha, beta; gamma, delta; kappa).
struct CodeType {
    Prime p;
    std::size_t alpha = 0;
    std::size_t beta = 0;
    std::size_t gamma = 0;
    std::size_t delta = 0;
    std::size_t kappa = 0;

    /// Reason the parameters cannot be the type of any additive code, if any.
    std::optional<std::string> violation() const {
        if (alpha + beta == 0) return "alpha + beta must be positive";
        if (gamma + delta == 0) return "gamma + delta must be positive";
        if (gamma + delta > beta + kappa) return "gamma + delta must not exceed beta + kappa";
        if (kappa > std::min(alpha, gamma)) return "kappa must not exceed min(alpha, gamma)";
        return std::nullopt;
    }

    void validate() const {
        if (auto v = violation()) throw std::invalid_argument("invalid code type " + to_string() + ": " + *v);
    }

    std::size_t log_size() const { return gamma + 2 * delta; }
    std::uint64_t size() const { return checked_pow(p.value(), log_size()); }
    std::size_t gray_length() const { return alpha + p.value() * beta; }
    /// Number of free Z_{p^2} columns between the p I_{gamma-kappa} and I_delta blocks.
    std::size_t free_width() const { return beta + kappa - gamma - delta; }

    std::string to_string() const {
        std::ostringstream os;
        os << "(p=" << p.value() << "; " << alpha << "," << beta << "; " << gamma << "," << delta << "; " << kappa
           << ")";
        return os.str();
    }

    friend bool operator==(const CodeType&, const CodeType&) = default;
};

class SizeCapExceeded : public std::runtime_error {
  public:
    SizeCapExceeded(std::uint64_t size, std::uint64_t cap)
        : std::runtime_error("code has " + std::to_string(size) + " codewords, above the cap of " +
                             std::to_string(cap)),
          size_(size),
          cap_(cap) {}
    std::uint64_t size() const { return size_; }
    std::uint64_t cap() const { return cap_; }

  private:
    std::uint64_t size_;
    std::uint64_t cap_;
};

class TypeMismatch : public std::invalid_argument {
  public:
    TypeMismatch(const CodeType& claimed, const CodeType& computed)
        : std::invalid_argument("claimed type " + claimed.to_string() + " does not match computed type " +
                                computed.to_string()),
          computed_(computed) {}
    const CodeType& computed() const { return computed_; }

  private:
    CodeType computed_;
};

namespace detail {

/// A submodule of Z_{p^2}^{alpha+beta} after embedding Z_p coordinates as
/// x -> p*x. Unit rows carry a pivot 1 that is zero in every other row; the
/// torsion part is an echelon basis over GF(p) of the rows divisible by p,
/// stored divided by p.
struct ModuleReduction {
    unsigned p = 0;
    std::size_t alpha = 0;
    std::size_t beta = 0;
    Matrix unit_rows;
    std::vector<std::size_t> unit_pivots;
    Matrix torsion_rows;
    std::vector<std::size_t> torsion_pivots;

    std::size_t width() const { return alpha + beta; }
    std::size_t delta() const { return unit_rows.size(); }
    std::size_t gamma() const { return torsion_rows.size(); }
    std::size_t kappa() const {
        return static_cast<std::size_t>(
            std::count_if(torsion_pivots.begin(), torsion_pivots.end(), [&](std::size_t c) { return c < alpha; }));
    }

    std::vector<Residue> embed(const MixedWord& w) const {
        std::vector<Residue> e(width());
        for (std::size_t i = 0; i < alpha; ++i) e[i] = w.x[i] * p;
        for (std::size_t i = 0; i < beta; ++i) e[alpha + i] = w.y[i];
        return e;
    }

    /// Membership of an embedded vector; `e` is consumed as scratch space.
    bool contains_embedded(std::vector<Residue>& e) const {
        const unsigned q2 = p * p;
        const std::size_t n = width();
        for (std::size_t r = 0; r < unit_rows.size(); ++r) {
            const Residue a = e[unit_pivots[r]];
            if (a == 0) continue;
            const auto& row = unit_rows[r];
            const Residue f = q2 - a;
            for (std::size_t k = 0; k < n; ++k) e[k] = (e[k] + f * row[k]) % q2;
        }
        for (std::size_t k = 0; k < n; ++k) {
            if (e[k] % p != 0) return false;
            e[k] /= p;
        }
        for (std::size_t r = 0; r < torsion_rows.size(); ++r) {
            const Residue a = e[torsion_pivots[r]];
            if (a == 0) continue;
            const auto& row = torsion_rows[r];
            const Residue f = p - a;
            for (std::size_t k = 0; k < n; ++k) e[k] = (e[k] + f * row[k]) % p;
        }
        for (std::size_t k = 0; k < n; ++k)
            if (e[k] != 0) return false;
        return true;
    }

    MixedWord unit_generator(std::size_t r) const {
        MixedWord w = MixedWord::zero(alpha, beta);
        for (std::size_t i = 0; i < alpha; ++i) w.x[i] = unit_rows[r][i] / p;
        for (std::size_t i = 0; i < beta; ++i) w.y[i] = unit_rows[r][alpha + i];
        return w;
    }

    MixedWord torsion_generator(std::size_t r) const {
        MixedWord w = MixedWord::zero(alpha, beta);
        for (std::size_t i = 0; i < alpha; ++i) w.x[i] = torsion_rows[r][i];
        for (std::size_t i = 0; i < beta; ++i) w.y[i] = torsion_rows[r][alpha + i] * p;
        return w;
    }
};

inline std::vector<std::size_t> identity_order(std::size_t n) {
    std::vector<std::size_t> v(n);
    std::iota(v.begin(), v.end(), 0);
    return v;
}

/// Row reduction over the mixed moduli. Unit pivots are searched over
/// `unit_order`; the torsion echelon form scans `torsion_order`.
inline ModuleReduction reduce_module(Prime prime, std::size_t alpha, std::size_t beta,
                                     const std::vector<MixedWord>& rows,
                                     const std::vector<std::size_t>& unit_order,
                                     const std::vector<std::size_t>& torsion_order) {
    ModuleReduction m;
    m.p = prime.value();
    m.alpha = alpha;
    m.beta = beta;
    const unsigned q = m.p, q2 = q * q;
    const std::size_t n = alpha + beta;

    Matrix a;
    a.reserve(rows.size());
    for (const MixedWord& w : rows) {
        if (w.alpha() != alpha || w.beta() != beta) throw std::invalid_argument("generator row has wrong shape");
        require_reduced(w, prime);
        a.push_back(m.embed(w));
    }

    std::size_t top = 0;
    for (std::size_t c : unit_order) {
        if (top == a.size()) break;
        std::size_t r = top;
        while (r < a.size() && a[r][c] % q == 0) ++r;
        if (r == a.size()) continue;
        std::swap(a[top], a[r]);
        const Residue inv = inverse_mod(a[top][c], q2);
        for (Residue& v : a[top]) v = v * inv % q2;
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (i == top || a[i][c] == 0) continue;
            const Residue f = q2 - a[i][c];
            for (std::size_t k = 0; k < n; ++k) a[i][k] = (a[i][k] + f * a[top][k]) % q2;
        }
        m.unit_pivots.push_back(c);
        ++top;
    }

    GFpMatrix rest(prime, n);
    for (std::size_t i = top; i < a.size(); ++i) {
        std::vector<Residue> v(n);
        for (std::size_t k = 0; k < n; ++k) v[k] = a[i][k] / q;
        rest.push_row(std::move(v));
    }
    Echelon ech = row_reduce(rest, torsion_order);
    m.torsion_rows = ech.reduced.rows();
    m.torsion_pivots = ech.pivots;

    a.resize(top);
    for (auto& row : a) {
        for (std::size_t t = 0; t < m.torsion_rows.size(); ++t) {
            const Residue hi = row[m.torsion_pivots[t]] / q;
            if (hi == 0) continue;
            const auto& tr = m.torsion_rows[t];
            for (std::size_t k = 0; k < n; ++k) row[k] = (row[k] + q2 - (q * hi * tr[k]) % q2) % q2;
        }
    }
    m.unit_rows = std::move(a);
    return m;
}

inline ModuleReduction reduce_module(Prime prime, std::size_t alpha, std::size_t beta,
                                     const std::vector<MixedWord>& rows) {
    const auto order = identity_order(alpha + beta);
    return reduce_module(prime, alpha, beta, rows, order, order);
}

}  // namespace detail

/// A subgroup of Z_p^alpha x Z_{p^2}^beta given by gamma generators of order p
/// and delta generators of order p^2 that express every codeword uniquely.
class AdditiveCode {
  public:
    AdditiveCode(CodeType ty, std::vector<MixedWord> gens_p, std::vector<MixedWord> gens_p2)
        : ty_(ty), gens_p_(std::move(gens_p)), gens_p2_(std::move(gens_p2)) {
        ty_.validate();
        if (gens_p_.size() != ty_.gamma || gens_p2_.size() != ty_.delta)
            throw std::invalid_argument("expected " + std::to_string(ty_.gamma) + " order-p and " +
                                        std::to_string(ty_.delta) + " order-p^2 generators");
        for (const auto& g : gens_p_)
            if (order_of(g, ty_.p) != ty_.p.value()) throw std::invalid_argument("order-p generator has wrong order");
        for (const auto& g : gens_p2_)
            if (order_of(g, ty_.p) != ty_.p.square())
                throw std::invalid_argument("order-p^2 generator has wrong order");
        std::vector<MixedWord> rows = gens_p_;
        rows.insert(rows.end(), gens_p2_.begin(), gens_p2_.end());
        auto red = std::make_shared<detail::ModuleReduction>(detail::reduce_module(ty_.p, ty_.alpha, ty_.beta, rows));
        CodeType computed{ty_.p, ty_.alpha, ty_.beta, red->gamma(), red->delta(), red->kappa()};
        if (!(computed == ty_)) throw TypeMismatch(ty_, computed);
        reduction_ = std::move(red);
    }

    /// Builds a code from arbitrary rows. The rows are kept as the generator
    /// matrix when they already form a basis; otherwise a minimal generating
    /// set from the reduction is used.
    static AdditiveCode from_rows(Prime p, std::size_t alpha, std::size_t beta, const std::vector<MixedWord>& rows) {
        if (rows.empty()) throw std::invalid_argument("generator matrix has no rows");
        const detail::ModuleReduction red = detail::reduce_module(p, alpha, beta, rows);
        CodeType ty{p, alpha, beta, red.gamma(), red.delta(), red.kappa()};
        if (ty.gamma + ty.delta == 0) throw std::invalid_argument("generator rows span the zero code");
        std::vector<MixedWord> gp, gp2;
        for (const auto& r : rows) {
            const unsigned ord = order_of(r, p);
            if (ord == p.value())
                gp.push_back(r);
            else if (ord == p.square())
                gp2.push_back(r);
        }
        if (gp.size() + gp2.size() != rows.size() || gp.size() != ty.gamma || gp2.size() != ty.delta) {
            gp.clear();
            gp2.clear();
            for (std::size_t i = 0; i < red.gamma(); ++i) gp.push_back(red.torsion_generator(i));
            for (std::size_t i = 0; i < red.delta(); ++i) gp2.push_back(red.unit_generator(i));
        }
        return AdditiveCode(ty, std::move(gp), std::move(gp2));
    }

    const CodeType& type() const { return ty_; }
    Prime prime() const { return ty_.p; }
    const std::vector<MixedWord>& gens_p() const { return gens_p_; }
    const std::vector<MixedWord>& gens_p2() const { return gens_p2_; }
    std::uint64_t size() const { return ty_.size(); }
    const detail::ModuleReduction& reduction() const { return *reduction_; }

    /// All generator rows, order p first.
    std::vector<MixedWord> rows() const {
        std::vector<MixedWord> r = gens_p_;
        r.insert(r.end(), gens_p2_.begin(), gens_p2_.end());
        return r;
    }

    bool contains(const MixedWord& w) const {
        if (w.alpha() != ty_.alpha || w.beta() != ty_.beta) throw std::invalid_argument("word shape mismatch");
        require_reduced(w, ty_.p);
        auto e = reduction_->embed(w);
        return reduction_->contains_embedded(e);
    }

  private:
    CodeType ty_;
    std::vector<MixedWord> gens_p_;
    std::vector<MixedWord> gens_p2_;
    std::shared_ptr<const detail::ModuleReduction> reduction_;
};

inline bool within_cap(const CodeType& ty, std::uint64_t cap) {
    const long double approx = std::pow(static_cast<long double>(ty.p.value()), static_cast<long double>(ty.log_size()));
    return approx <= static_cast<long double>(cap);
}

inline void require_under_cap(const AdditiveCode& code, std::uint64_t cap) {
    if (!within_cap(code.type(), cap)) {
        const bool huge = code.type().log_size() * std::log2(static_cast<double>(code.prime().value())) >= 63.0;
        throw SizeCapExceeded(huge ? UINT64_MAX : code.size(), cap);
    }
}

/// Visits sum lambda_i u_i + sum nu_j v_j for every coefficient vector, once each.
inline void for_each_codeword(const AdditiveCode& code, const std::function<void(const MixedWord&)>& visit,
                              std::uint64_t cap = kDefaultSizeCap) {
    require_under_cap(code, cap);
    const Prime p = code.prime();
    const auto gens = code.rows();
    std::vector<unsigned> base;
    for (std::size_t i = 0; i < code.gens_p().size(); ++i) base.push_back(p.value());
    for (std::size_t i = 0; i < code.gens_p2().size(); ++i) base.push_back(p.square());
    std::vector<unsigned> digit(gens.size(), 0);
    MixedWord w = MixedWord::zero(code.type().alpha, code.type().beta);
    while (true) {
        visit(w);
        std::size_t i = 0;
        for (; i < gens.size(); ++i) {
            w = add(w, gens[i], p);
            if (++digit[i] < base[i]) break;
            digit[i] = 0;
        }
        if (i == gens.size()) break;
    }
}

inline std::vector<MixedWord> enumerate(const AdditiveCode& code, std::uint64_t cap = kDefaultSizeCap) {
    std::vector<MixedWord> out;
    require_under_cap(code, cap);
    out.reserve(code.size());
    for_each_codeword(code, [&](const MixedWord& w) { out.push_back(w); }, cap);
    return out;
}

/// {c in C : p c = 0}, generated by the u_i and the p v_j.
inline AdditiveCode order_p_subcode(const AdditiveCode& code) {
    std::vector<MixedWord> rows = code.gens_p();
    for (const auto& v : code.gens_p2()) rows.push_back(scale(v, code.prime().value(), code.prime()));
    const CodeType& t = code.type();
    CodeType ty{t.p, t.alpha, t.beta, t.gamma + t.delta, 0, t.kappa};
    return AdditiveCode(ty, std::move(rows), {});
}

/// The Z_p coordinates of the order-p subcode, as an echelon basis over GF(p).
inline GFpMatrix puncture_X(const AdditiveCode& code) {
    if (code.type().alpha == 0) throw std::invalid_argument("code has no Z_p coordinates");
    GFpMatrix m(code.prime(), code.type().alpha);
    for (const auto& u : code.gens_p()) m.push_row(u.x);
    return row_reduce(m).reduced;
}

/// Computes (gamma, delta, kappa) of the group generated by `rows`.
inline CodeType infer_type(Prime p, std::size_t alpha, std::size_t beta, const std::vector<MixedWord>& rows) {
    if (rows.empty()) throw std::invalid_argument("generator matrix has no rows");
    const auto red = detail::reduce_module(p, alpha, beta, rows);
    return {p, alpha, beta, red.gamma(), red.delta(), red.kappa()};
}

/// new.x[i] = old.x[x_perm[i]], likewise for y.
inline MixedWord permute_word(const MixedWord& w, const std::vector<std::size_t>& x_perm,
                              const std::vector<std::size_t>& y_perm) {
    MixedWord out = MixedWord::zero(w.alpha(), w.beta());
    for (std::size_t i = 0; i < x_perm.size(); ++i) out.x[i] = w.x.at(x_perm[i]);
    for (std::size_t i = 0; i < y_perm.size(); ++i) out.y[i] = w.y.at(y_perm[i]);
    return out;
}

inline std::vector<std::size_t> invert_permutation(const std::vector<std::size_t>& perm) {
    std::vector<std::size_t> inv(perm.size());
    for (std::size_t i = 0; i < perm.size(); ++i) inv.at(perm[i]) = i;
    return inv;
}

inline AdditiveCode permute_code(const AdditiveCode& code, const std::vector<std::size_t>& x_perm,
                                 const std::vector<std::size_t>& y_perm) {
    std::vector<MixedWord> gp, gp2;
    for (const auto& g : code.gens_p()) gp.push_back(permute_word(g, x_perm, y_perm));
    for (const auto& g : code.gens_p2()) gp2.push_back(permute_word(g, x_perm, y_perm));
    return AdditiveCode(code.type(), std::move(gp), std::move(gp2));
}

/// Block form
///   [ I_kappa  T' | p T2   0          0   ]
///   [ 0        0  | p T1   p I_{g-k}  0   ]
///   [ 0        S' | S      R          I_d ]
/// reached by row operations and column permutations inside each block.
struct StandardForm {
    AdditiveCode code;
    std::vector<std::size_t> x_perm;
    std::vector<std::size_t> y_perm;
    Matrix t_prime;  // kappa x (alpha - kappa), over Z_p
    Matrix t2;       // kappa x free_width, over Z_p
    Matrix t1;       // (gamma - kappa) x free_width, over Z_p
    Matrix s_prime;  // delta x (alpha - kappa), over Z_p
    Matrix s;        // delta x free_width, over Z_{p^2}
    Matrix r;        // delta x (gamma - kappa), entries < p
};

/// Z_{p^2} pivots are searched from the rightmost column so that a matrix
/// already in standard form is returned unchanged with identity permutations.
inline StandardForm standard_form(const AdditiveCode& code) {
    const CodeType& ty = code.type();
    const Prime p = ty.p;
    const std::size_t alpha = ty.alpha, beta = ty.beta;

    std::vector<std::size_t> unit_order, torsion_order;
    for (std::size_t i = 0; i < alpha; ++i) torsion_order.push_back(i);
    for (std::size_t i = beta; i-- > 0;) {
        unit_order.push_back(alpha + i);
        torsion_order.push_back(alpha + i);
    }
    const auto red = detail::reduce_module(p, alpha, beta, code.rows(), unit_order, torsion_order);
    CodeType computed{p, alpha, beta, red.gamma(), red.delta(), red.kappa()};
    if (!(computed == ty)) throw TypeMismatch(ty, computed);

    const std::size_t kappa = ty.kappa, gk = ty.gamma - ty.kappa, delta = ty.delta;

    std::vector<std::size_t> tx, ty_rows;  // torsion rows pivoting in x / in y
    for (std::size_t r = 0; r < red.torsion_rows.size(); ++r)
        (red.torsion_pivots[r] < alpha ? tx : ty_rows).push_back(r);
    auto by_pivot = [&](const std::vector<std::size_t>& piv) {
        return [&piv](std::size_t a, std::size_t b) { return piv[a] < piv[b]; };
    };
    std::sort(tx.begin(), tx.end(), by_pivot(red.torsion_pivots));
    std::sort(ty_rows.begin(), ty_rows.end(), by_pivot(red.torsion_pivots));
    std::vector<std::size_t> ur(red.unit_rows.size());
    std::iota(ur.begin(), ur.end(), 0);
    std::sort(ur.begin(), ur.end(), by_pivot(red.unit_pivots));

    StandardForm sf{code, {}, {}, {}, {}, {}, {}, {}, {}};
    std::vector<bool> x_used(alpha, false), y_used(beta, false);
    for (std::size_t r : tx) {
        sf.x_perm.push_back(red.torsion_pivots[r]);
        x_used[red.torsion_pivots[r]] = true;
    }
    for (std::size_t i = 0; i < alpha; ++i)
        if (!x_used[i]) sf.x_perm.push_back(i);

    std::vector<std::size_t> tail;
    for (std::size_t r : ty_rows) {
        tail.push_back(red.torsion_pivots[r] - alpha);
        y_used[red.torsion_pivots[r] - alpha] = true;
    }
    for (std::size_t r : ur) {
        tail.push_back(red.unit_pivots[r] - alpha);
        y_used[red.unit_pivots[r] - alpha] = true;
    }
    for (std::size_t i = 0; i < beta; ++i)
        if (!y_used[i]) sf.y_perm.push_back(i);
    sf.y_perm.insert(sf.y_perm.end(), tail.begin(), tail.end());

    std::vector<MixedWord> gp, gp2;
    for (std::size_t r : tx) gp.push_back(permute_word(red.torsion_generator(r), sf.x_perm, sf.y_perm));
    for (std::size_t r : ty_rows) gp.push_back(permute_word(red.torsion_generator(r), sf.x_perm, sf.y_perm));
    for (std::size_t r : ur) gp2.push_back(permute_word(red.unit_generator(r), sf.x_perm, sf.y_perm));

    const std::size_t w = ty.free_width();
    const unsigned q = p.value();
    auto slice = [](const std::vector<Residue>& v, std::size_t from, std::size_t count, unsigned div) {
        std::vector<Residue> out;
        for (std::size_t i = 0; i < count; ++i) out.push_back(v[from + i] / div);
        return out;
    };
    for (std::size_t i = 0; i < kappa; ++i) {
        sf.t_prime.push_back(slice(gp[i].x, kappa, alpha - kappa, 1));
        sf.t2.push_back(slice(gp[i].y, 0, w, q));
    }
    for (std::size_t i = kappa; i < kappa + gk; ++i) sf.t1.push_back(slice(gp[i].y, 0, w, q));
    for (std::size_t i = 0; i < delta; ++i) {
        sf.s_prime.push_back(slice(gp2[i].x, kappa, alpha - kappa, 1));
        sf.s.push_back(slice(gp2[i].y, 0, w, 1));
        sf.r.push_back(slice(gp2[i].y, w, gk, 1));
    }
    sf.code = AdditiveCode(ty, std::move(gp), std::move(gp2));
    return sf;
}

}  // namespace zpzp2
