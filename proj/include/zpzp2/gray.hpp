#pragma once

// The Gray map Z_{p^2} -> Z_p^p, its coordinatewise extension to mixed
// words, and the carry term that measures how far the extension is from
// being additive.

#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ring.hpp"

namespace zpzp2 {

/// phi(u) = (u1, ..., u1) + u0 * (0, 1, ..., p-1) mod p.
inline GrayWord phi(Residue u, Prime p) {
    const Digits d = pary_expand(u, p);
    const unsigned q = p.value();
    GrayWord g;
    g.entries.resize(q);
    for (unsigned j = 0; j < q; ++j) g.entries[j] = (d.high + d.low * j) % q;
    return g;
}

/// Identity on the Z_p block, phi on every Z_{p^2} coordinate.
inline GrayWord big_phi(const MixedWord& w, Prime p) {
    const unsigned q = p.value();
    GrayWord g;
    g.entries.reserve(w.alpha() + q * w.beta());
    g.entries.insert(g.entries.end(), w.x.begin(), w.x.end());
    for (Residue u : w.y) {
        const Digits d = pary_expand(u, p);
        for (unsigned j = 0; j < q; ++j) g.entries.push_back((d.high + d.low * j) % q);
    }
    return g;
}

inline GrayWord add(const GrayWord& a, const GrayWord& b, Prime p) {
    if (a.size() != b.size()) throw std::invalid_argument("Gray word length mismatch");
    GrayWord g = a;
    for (std::size_t i = 0; i < g.entries.size(); ++i) g.entries[i] = (g.entries[i] + b.entries[i]) % p.value();
    return g;
}

inline GrayWord subtract(const GrayWord& a, const GrayWord& b, Prime p) {
    if (a.size() != b.size()) throw std::invalid_argument("Gray word length mismatch");
    GrayWord g = a;
    for (std::size_t i = 0; i < g.entries.size(); ++i)
        g.entries[i] = (g.entries[i] + p.value() - b.entries[i]) % p.value();
    return g;
}

/// Precomputed images of every element of Z_{p^2}.
class GrayTable {
  public:
    explicit GrayTable(Prime p) : p_(p) {
        for (unsigned j = 0; j < p.value(); ++j) columns_.push_back(j);
        for (Residue u = 0; u < p.square(); ++u) images_.push_back(phi(u, p));
    }

    Prime prime() const { return p_; }
    const std::vector<Residue>& columns() const { return columns_; }
    const GrayWord& operator[](Residue u) const { return images_.at(u); }
    std::size_t size() const { return images_.size(); }

  private:
    Prime p_;
    std::vector<Residue> columns_;
    std::vector<GrayWord> images_;
};

/// p if the low p-ary digits of u and v overflow, else 0.
inline Residue carry_direct(Residue u, Residue v, Prime p) {
    const unsigned q = p.value();
    return (u % q) + (v % q) >= q ? q : 0;
}

/// The correction word with Phi(u + v) = Phi(u) + Phi(v) + Phi(carry_word(u, v)).
inline MixedWord carry_word(const MixedWord& u, const MixedWord& v, Prime p) {
    require_same_shape(u, v);
    MixedWord w = MixedWord::zero(u.alpha(), u.beta());
    for (std::size_t i = 0; i < u.beta(); ++i) w.y[i] = carry_direct(u.y[i], v.y[i], p);
    return w;
}

/// Elementary symmetric polynomial of degree i in {0, ..., p-1} \ {k}, mod p.
inline Residue symmetric_sigma_hat(unsigned i, unsigned k, Prime p) {
    const unsigned q = p.value();
    if (i > q - 2) throw std::out_of_range("sigma degree must be in [0, p-2]");
    if (k > q - 1) throw std::out_of_range("omitted index must be in [0, p-1]");
    std::vector<Residue> e(i + 1, 0);
    e[0] = 1;
    for (unsigned m = 0; m < q; ++m) {
        if (m == k) continue;
        for (unsigned d = i; d >= 1; --d) e[d] = (e[d] + e[d - 1] * m) % q;
    }
    return e[i];
}

inline Residue pow_mod(Residue base, unsigned exp, unsigned m) {
    unsigned long long r = 1 % m, b = base % m;
    while (exp) {
        if (exp & 1U) r = r * b % m;
        b = b * b % m;
        exp >>= 1U;
    }
    return static_cast<Residue>(r);
}

/// Carry-expansion coefficient: sum_{k=1}^{p-1} sum_{l=p-k}^{p-1} k^i l^j mod p.
inline Residue s_coeff(unsigned i, unsigned j, Prime p) {
    const unsigned q = p.value();
    if (i > q - 2 || j > q - 2) throw std::out_of_range("s_coeff indices must lie in [0, p-2]");
    unsigned long long sum = 0;
    for (unsigned k = 1; k < q; ++k)
        for (unsigned l = q - k; l < q; ++l) sum += static_cast<unsigned long long>(pow_mod(k, i, q)) * pow_mod(l, j, q);
    return static_cast<Residue>(sum % q);
}

/// Star-power degrees {3, 5, ..., p} together with p-1, ascending.
inline std::vector<unsigned> star_degrees(Prime p) {
    std::set<unsigned> s;
    for (unsigned m = 1; m <= (p.value() - 1) / 2; ++m) s.insert(1 + 2 * m);
    s.insert(p.value() - 1);
    return {s.begin(), s.end()};
}

/// Index pairs (i, j) at which s(i, j) is claimed nonzero mod p.
inline std::set<std::pair<unsigned, unsigned>> nonzero_index_set(Prime p) {
    const int q = static_cast<int>(p.value());
    std::set<std::pair<unsigned, unsigned>> t;
    for (int i = 1; i <= q - 2; ++i) t.emplace(i, q - 1 - i);
    for (int m = 0; m <= (q - 3) / 2; ++m) {
        const int total = q + 2 * (m - 1);
        for (int i = 2 * m; i <= q - 2; ++i) {
            const int j = total - i;
            if (j >= 0 && j <= q - 2) t.emplace(i, j);
        }
    }
    return t;
}

/// Polynomial form of the carry: coefficient of u^a v^b (1 <= a, b <= p-1) in Z_{p^2}.
struct CarryCoeffs {
    unsigned p = 0;
    std::map<std::pair<unsigned, unsigned>, Residue> terms;
    std::vector<unsigned> L;
    std::set<std::pair<unsigned, unsigned>> T;

    static CarryCoeffs build(Prime p) {
        const unsigned q = p.value();
        CarryCoeffs c;
        c.p = q;
        c.L = star_degrees(p);
        c.T = nonzero_index_set(p);
        auto put = [&](unsigned i, unsigned j, unsigned a, unsigned b) {
            const Residue coeff = (q * s_coeff(i, j, p)) % p.square();
            if (coeff != 0) c.terms[{a, b}] = coeff;
        };
        for (unsigned i = 0; i <= q - 2; ++i) put(i, q - 2 - i, q - 1 - i, i + 1);
        for (unsigned i = 1; i <= q - 2; ++i) put(i, q - 1 - i, q - 1 - i, i);
        for (unsigned j = 1; j <= (q - 3) / 2; ++j)
            for (unsigned i = 2 * j; i <= q - 2; ++i) put(i, q + 2 * j - i - 2, q - 1 - i, i - 2 * j + 1);
        return c;
    }
};

/// Evaluates the carry polynomial at (u, v) mod p^2.
inline Residue carry_poly(Residue u, Residue v, const CarryCoeffs& coeffs) {
    const unsigned m = coeffs.p * coeffs.p;
    unsigned long long sum = 0;
    for (const auto& [exps, c] : coeffs.terms)
        sum += static_cast<unsigned long long>(c) * pow_mod(u, exps.first, m) % m * pow_mod(v, exps.second, m) % m;
    return static_cast<Residue>(sum % m);
}

}  // namespace zpzp2
