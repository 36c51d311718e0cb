#pragma once

// Dense matrices over GF(p) and Gaussian elimination.

#include <cstddef>
#include <numeric>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "ring.hpp"

namespace zpzp2 {

class GFpMatrix {
  public:
    GFpMatrix() = default;
    GFpMatrix(Prime p, std::size_t cols) : p_(p), cols_(cols) {}
    GFpMatrix(Prime p, std::size_t cols, std::vector<std::vector<Residue>> rows) : p_(p), cols_(cols) {
        for (auto& r : rows) push_row(std::move(r));
    }

    Prime prime() const { return p_; }
    std::size_t cols() const { return cols_; }
    std::size_t row_count() const { return rows_.size(); }
    const std::vector<std::vector<Residue>>& rows() const { return rows_; }
    const std::vector<Residue>& row(std::size_t i) const { return rows_.at(i); }

    void push_row(std::vector<Residue> r) {
        if (r.size() != cols_)
            throw std::invalid_argument("row length " + std::to_string(r.size()) + " != " + std::to_string(cols_));
        for (Residue& v : r) v %= p_.value();
        rows_.push_back(std::move(r));
    }

    friend bool operator==(const GFpMatrix& a, const GFpMatrix& b) {
        return a.p_ == b.p_ && a.cols_ == b.cols_ && a.rows_ == b.rows_;
    }

  private:
    Prime p_;
    std::size_t cols_ = 0;
    std::vector<std::vector<Residue>> rows_;
};

struct Echelon {
    GFpMatrix reduced;  // nonzero rows only, reduced row echelon form
    std::size_t rank = 0;
    std::vector<std::size_t> pivots;
};

/// Reduced row echelon form. Columns are scanned in `column_order`; within a
/// column the topmost remaining row with a nonzero entry becomes the pivot.
inline Echelon row_reduce(const GFpMatrix& m, std::span<const std::size_t> column_order) {
    const unsigned q = m.prime().value();
    std::vector<std::vector<Residue>> a = m.rows();
    std::vector<std::size_t> pivots;
    std::size_t top = 0;
    for (std::size_t c : column_order) {
        if (top == a.size()) break;
        std::size_t r = top;
        while (r < a.size() && a[r][c] == 0) ++r;
        if (r == a.size()) continue;
        std::swap(a[top], a[r]);
        const Residue inv = inverse_mod(a[top][c], q);
        for (Residue& v : a[top]) v = v * inv % q;
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (i == top || a[i][c] == 0) continue;
            const Residue f = a[i][c];
            for (std::size_t k = 0; k < m.cols(); ++k) a[i][k] = (a[i][k] + (q - f) * a[top][k]) % q;
        }
        pivots.push_back(c);
        ++top;
    }
    a.resize(top);
    return {GFpMatrix(m.prime(), m.cols(), std::move(a)), top, std::move(pivots)};
}

inline Echelon row_reduce(const GFpMatrix& m) {
    std::vector<std::size_t> order(m.cols());
    std::iota(order.begin(), order.end(), 0);
    return row_reduce(m, order);
}

/// A row space grown one vector at a time, kept in reduced echelon form.
class IncrementalBasis {
  public:
    IncrementalBasis(Prime p, std::size_t cols) : p_(p), cols_(cols), pivot_row_(cols, npos) {}

    std::size_t rank() const { return rows_.size(); }
    std::size_t cols() const { return cols_; }

    /// Residue of v after eliminating every pivot column.
    std::vector<Residue> reduce(std::vector<Residue> v) const {
        const unsigned q = p_.value();
        for (std::size_t c = 0; c < cols_; ++c) {
            const std::size_t r = pivot_row_[c];
            if (r == npos || v[c] == 0) continue;
            const Residue f = v[c];
            const auto& row = rows_[r];
            for (std::size_t k = c; k < cols_; ++k) v[k] = (v[k] + (q - f) * row[k]) % q;
        }
        return v;
    }

    bool contains(const std::vector<Residue>& v) const {
        for (Residue r : reduce(v))
            if (r) return false;
        return true;
    }

    /// Adds v to the span; returns true if the rank grew.
    bool insert(std::vector<Residue> v) {
        if (v.size() != cols_) throw std::invalid_argument("vector length mismatch");
        const unsigned q = p_.value();
        for (Residue& r : v) r %= q;
        v = reduce(std::move(v));
        std::size_t c = 0;
        while (c < cols_ && v[c] == 0) ++c;
        if (c == cols_) return false;
        const Residue inv = inverse_mod(v[c], q);
        for (Residue& r : v) r = r * inv % q;
        for (auto& row : rows_) {
            if (row[c] == 0) continue;
            const Residue f = row[c];
            for (std::size_t k = c; k < cols_; ++k) row[k] = (row[k] + (q - f) * v[k]) % q;
        }
        pivot_row_[c] = rows_.size();
        rows_.push_back(std::move(v));
        return true;
    }

    /// The basis in reduced echelon form, rows sorted by pivot column.
    GFpMatrix echelon() const {
        GFpMatrix m(p_, cols_);
        for (std::size_t c = 0; c < cols_; ++c)
            if (pivot_row_[c] != npos) m.push_row(rows_[pivot_row_[c]]);
        return m;
    }

  private:
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);
    Prime p_;
    std::size_t cols_;
    std::vector<std::vector<Residue>> rows_;
    std::vector<std::size_t> pivot_row_;
};

}  // namespace zpzp2
