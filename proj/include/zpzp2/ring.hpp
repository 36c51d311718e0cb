#pragma once

// Runtime-parameterized arithmetic over Z_p and Z_{p^2}, and the mixed
// words of Z_p^alpha x Z_{p^2}^beta.

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace zpzp2 {

using Residue = std::uint32_t;

inline bool is_prime(unsigned n) {
    if (n < 2) return false;
    for (unsigned d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

/// An odd prime in [3, 13]. The upper cap keeps Gray lengths and exhaustive
/// enumerations small enough to run on a desk machine.
class Prime {
  public:
    static constexpr unsigned kMin = 3;
    static constexpr unsigned kMax = 13;

    /// Defaults to 3 so aggregates holding a Prime stay default-constructible.
    Prime() = default;
    explicit Prime(unsigned p) : p_(p) {
        if (p < kMin || p > kMax || !is_prime(p))
            throw std::invalid_argument("p must be an odd prime in [3, 13], got " + std::to_string(p));
    }

    unsigned value() const { return p_; }
    unsigned square() const { return p_ * p_; }

    friend bool operator==(Prime a, Prime b) { return a.p_ == b.p_; }

  private:
    unsigned p_ = kMin;
};

/// u = low + high * p with 0 <= low, high < p.
struct Digits {
    Residue low;
    Residue high;
    friend bool operator==(const Digits&, const Digits&) = default;
};

inline Digits pary_expand(Residue u, Prime p) {
    const unsigned q = p.value();
    return {u % q, (u / q) % q};
}

inline Residue pary_compose(Digits d, Prime p) { return d.low + d.high * p.value(); }

/// Inverse of a unit modulo m (m = p or p^2).
inline Residue inverse_mod(Residue a, unsigned m) {
    long long t = 0, new_t = 1;
    long long r = m, new_r = a % m;
    while (new_r != 0) {
        const long long q = r / new_r;
        t -= q * new_t;
        std::swap(t, new_t);
        r -= q * new_r;
        std::swap(r, new_r);
    }
    if (r != 1) throw std::domain_error(std::to_string(a) + " is not a unit mod " + std::to_string(m));
    if (t < 0) t += m;
    return static_cast<Residue>(t);
}

/// Element (x, y) of Z_p^alpha x Z_{p^2}^beta. Entries are always stored reduced.
struct MixedWord {
    std::vector<Residue> x;
    std::vector<Residue> y;

    MixedWord() = default;
    MixedWord(std::vector<Residue> zp_part, std::vector<Residue> zp2_part)
        : x(std::move(zp_part)), y(std::move(zp2_part)) {}

    static MixedWord zero(std::size_t alpha, std::size_t beta) {
        return {std::vector<Residue>(alpha, 0), std::vector<Residue>(beta, 0)};
    }
    static MixedWord ones(std::size_t alpha, std::size_t beta) {
        return {std::vector<Residue>(alpha, 1), std::vector<Residue>(beta, 1)};
    }

    std::size_t alpha() const { return x.size(); }
    std::size_t beta() const { return y.size(); }
    bool is_zero() const {
        for (Residue r : x)
            if (r) return false;
        for (Residue r : y)
            if (r) return false;
        return true;
    }

    friend bool operator==(const MixedWord&, const MixedWord&) = default;
    friend auto operator<=>(const MixedWord&, const MixedWord&) = default;
};

/// Element of Z_p^n, n = alpha + p * beta.
struct GrayWord {
    std::vector<Residue> entries;

    std::size_t size() const { return entries.size(); }
    bool is_zero() const {
        for (Residue r : entries)
            if (r) return false;
        return true;
    }

    friend bool operator==(const GrayWord&, const GrayWord&) = default;
    friend auto operator<=>(const GrayWord&, const GrayWord&) = default;
};

inline void require_same_shape(const MixedWord& u, const MixedWord& v) {
    if (u.alpha() != v.alpha() || u.beta() != v.beta())
        throw std::invalid_argument("word shape mismatch: (" + std::to_string(u.alpha()) + "," +
                                    std::to_string(u.beta()) + ") vs (" + std::to_string(v.alpha()) + "," +
                                    std::to_string(v.beta()) + ")");
}

/// Throws if any entry is not reduced for p.
inline void require_reduced(const MixedWord& w, Prime p) {
    for (Residue r : w.x)
        if (r >= p.value()) throw std::invalid_argument("Z_p entry " + std::to_string(r) + " out of range");
    for (Residue r : w.y)
        if (r >= p.square()) throw std::invalid_argument("Z_p^2 entry " + std::to_string(r) + " out of range");
}

/// Reduces arbitrary non-negative integers into a word.
inline MixedWord reduce_word(std::vector<long long> x, std::vector<long long> y, Prime p) {
    MixedWord w;
    const long long q = p.value(), q2 = p.square();
    for (long long v : x) w.x.push_back(static_cast<Residue>(((v % q) + q) % q));
    for (long long v : y) w.y.push_back(static_cast<Residue>(((v % q2) + q2) % q2));
    return w;
}

inline MixedWord add(const MixedWord& u, const MixedWord& v, Prime p) {
    require_same_shape(u, v);
    MixedWord w = u;
    for (std::size_t i = 0; i < w.x.size(); ++i) w.x[i] = (w.x[i] + v.x[i]) % p.value();
    for (std::size_t i = 0; i < w.y.size(); ++i) w.y[i] = (w.y[i] + v.y[i]) % p.square();
    return w;
}

inline MixedWord negate(const MixedWord& u, Prime p) {
    MixedWord w = u;
    for (Residue& r : w.x) r = (p.value() - r) % p.value();
    for (Residue& r : w.y) r = (p.square() - r) % p.square();
    return w;
}

inline MixedWord subtract(const MixedWord& u, const MixedWord& v, Prime p) { return add(u, negate(v, p), p); }

/// Integer multiple k * u.
inline MixedWord scale(const MixedWord& u, unsigned long long k, Prime p) {
    MixedWord w = u;
    const unsigned long long kp = k % p.value(), kp2 = k % p.square();
    for (Residue& r : w.x) r = static_cast<Residue>((r * kp) % p.value());
    for (Residue& r : w.y) r = static_cast<Residue>((r * kp2) % p.square());
    return w;
}

/// Component-wise product u * v.
inline MixedWord star(const MixedWord& u, const MixedWord& v, Prime p) {
    require_same_shape(u, v);
    MixedWord w = u;
    for (std::size_t i = 0; i < w.x.size(); ++i) w.x[i] = (w.x[i] * v.x[i]) % p.value();
    for (std::size_t i = 0; i < w.y.size(); ++i) w.y[i] = (w.y[i] * v.y[i]) % p.square();
    return w;
}

/// m-fold star product u * ... * u.
inline MixedWord star_power(const MixedWord& u, unsigned m, Prime p) {
    if (m == 0) throw std::invalid_argument("star_power requires m >= 1");
    MixedWord w = u;
    for (unsigned k = 1; k < m; ++k) w = star(w, u, p);
    return w;
}

/// Additive order of c: 1, p or p^2.
inline unsigned order_of(const MixedWord& c, Prime p) {
    if (c.is_zero()) return 1;
    for (Residue r : c.y)
        if (r % p.value() != 0) return p.square();
    return p.value();
}

}  // namespace zpzp2
