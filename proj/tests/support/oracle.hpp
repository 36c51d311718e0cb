#pragma once

// Independent helpers for the tests: brute-force group closure, Gray images
// and a hand-rolled standard-form generator.

#include <random>
#include <set>
#include <string>
#include <vector>

#include <zpzp2/code.hpp>
#include <zpzp2/gray.hpp>

namespace oracle {

using zpzp2::MixedWord;
using zpzp2::Prime;
using zpzp2::Residue;

/// Closure of {0} under adding the rows; does not rely on AdditiveCode.
inline std::set<MixedWord> closure(const std::vector<MixedWord>& rows, Prime p) {
    std::set<MixedWord> seen;
    if (rows.empty()) return seen;
    std::vector<MixedWord> frontier{MixedWord::zero(rows[0].alpha(), rows[0].beta())};
    seen.insert(frontier[0]);
    while (!frontier.empty()) {
        std::vector<MixedWord> next;
        for (const auto& w : frontier)
            for (const auto& r : rows) {
                MixedWord s = zpzp2::add(w, r, p);
                if (seen.insert(s).second) next.push_back(std::move(s));
            }
        frontier = std::move(next);
    }
    return seen;
}

/// Gray image computed straight from the digit formula.
inline std::vector<Residue> gray(const MixedWord& w, unsigned q) {
    std::vector<Residue> out(w.x.begin(), w.x.end());
    for (Residue u : w.y)
        for (unsigned j = 0; j < q; ++j) out.push_back((u / q + (u % q) * j) % q);
    return out;
}

/// Rank over GF(q) by plain Gaussian elimination.
inline std::size_t rank_mod(std::vector<std::vector<Residue>> a, unsigned q) {
    std::size_t r = 0;
    const std::size_t n = a.empty() ? 0 : a[0].size();
    for (std::size_t c = 0; c < n && r < a.size(); ++c) {
        std::size_t piv = r;
        while (piv < a.size() && a[piv][c] % q == 0) ++piv;
        if (piv == a.size()) continue;
        std::swap(a[piv], a[r]);
        Residue inv = 1;
        while (a[r][c] * inv % q != 1) ++inv;
        for (auto& v : a[r]) v = v * inv % q;
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (i == r || a[i][c] % q == 0) continue;
            const Residue f = a[i][c] % q;
            for (std::size_t k = 0; k < n; ++k) a[i][k] = (a[i][k] + (q - f) * a[r][k]) % q;
        }
        ++r;
    }
    return r;
}

/// Rows of a standard-form generator matrix with random free blocks:
///   [ I_k  T' | p T2  0        0   ]
///   [ 0    0  | p T1  p I_g-k  0   ]
///   [ 0    S' | S     R        I_d ]
inline std::vector<MixedWord> standard_rows(const zpzp2::CodeType& t, std::mt19937_64& rng) {
    const unsigned q = t.p.value();
    const std::size_t w = t.free_width(), gk = t.gamma - t.kappa;
    std::vector<MixedWord> rows;
    for (std::size_t i = 0; i < t.kappa; ++i) {
        MixedWord m = MixedWord::zero(t.alpha, t.beta);
        m.x[i] = 1;
        for (std::size_t c = t.kappa; c < t.alpha; ++c) m.x[c] = rng() % q;
        for (std::size_t c = 0; c < w; ++c) m.y[c] = q * (rng() % q);
        rows.push_back(m);
    }
    for (std::size_t i = 0; i < gk; ++i) {
        MixedWord m = MixedWord::zero(t.alpha, t.beta);
        for (std::size_t c = 0; c < w; ++c) m.y[c] = q * (rng() % q);
        m.y[w + i] = q;
        rows.push_back(m);
    }
    for (std::size_t i = 0; i < t.delta; ++i) {
        MixedWord m = MixedWord::zero(t.alpha, t.beta);
        for (std::size_t c = t.kappa; c < t.alpha; ++c) m.x[c] = rng() % q;
        for (std::size_t c = 0; c < w; ++c) m.y[c] = rng() % (q * q);
        for (std::size_t c = 0; c < gk; ++c) m.y[w + c] = rng() % q;
        m.y[w + gk + i] = 1;
        rows.push_back(m);
    }
    return rows;
}

}  // namespace oracle
