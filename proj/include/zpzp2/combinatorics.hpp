#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace zpzp2 {

/// C(a, b), zero when a < b.
inline std::uint64_t binomial(std::uint64_t a, std::uint64_t b) {
    if (b > a) return 0;
    if (b > a - b) b = a - b;
    std::uint64_t r = 1;
    for (std::uint64_t i = 1; i <= b; ++i) {
        r = r * (a - b + i) / i;
    }
    return r;
}

inline std::uint64_t checked_pow(std::uint64_t base, std::uint64_t exp) {
    std::uint64_t r = 1;
    for (std::uint64_t i = 0; i < exp; ++i) {
        if (r > UINT64_MAX / base) throw std::overflow_error("power overflows 64 bits");
        r *= base;
    }
    return r;
}

/// All s-subsets of {0, ..., n-1}, each sorted, in lexicographic order.
inline std::vector<std::vector<std::size_t>> subsets_lex(std::size_t n, std::size_t s) {
    std::vector<std::vector<std::size_t>> out;
    if (s > n) return out;
    std::vector<std::size_t> c(s);
    for (std::size_t i = 0; i < s; ++i) c[i] = i;
    while (true) {
        out.push_back(c);
        std::size_t i = s;
        while (i > 0 && c[i - 1] == n - s + i - 1) --i;
        if (i == 0) break;
        ++c[i - 1];
        for (std::size_t j = i; j < s; ++j) c[j] = c[j - 1] + 1;
    }
    return out;
}

/// All multisets i_1 <= ... <= i_l over {0, ..., n-1}, in lexicographic order.
inline std::vector<std::vector<std::size_t>> multisets_lex(std::size_t n, std::size_t l) {
    std::vector<std::vector<std::size_t>> out;
    if (n == 0) {
        if (l == 0) out.emplace_back();
        return out;
    }
    std::vector<std::size_t> c(l, 0);
    while (true) {
        out.push_back(c);
        std::size_t i = l;
        while (i > 0 && c[i - 1] == n - 1) --i;
        if (i == 0) break;
        ++c[i - 1];
        for (std::size_t j = i; j < l; ++j) c[j] = c[i - 1];
    }
    return out;
}

}  // namespace zpzp2
