#pragma once

#include "dskrv/rational.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace dskrv {

// Dense exact-rational matrix. Small systems only; elimination keeps every
// entry exact.
class RationalMatrix {
public:
    RationalMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    static RationalMatrix from_rows(const std::vector<std::vector<Rational>>& rows) {
        const std::size_t r = rows.size();
        const std::size_t c = r == 0 ? 0 : rows.front().size();
        RationalMatrix m(r, c);
        for (std::size_t i = 0; i < r; ++i) {
            if (rows[i].size() != c)
                throw std::invalid_argument("ragged rows");
            for (std::size_t j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
        }
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& at(std::size_t r, std::size_t c) const {
        return data_[r * cols_ + c];
    }

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t j = 0; j < cols_; ++j)
            std::swap(at(a, j), at(b, j));
    }

    friend bool operator==(const RationalMatrix& a, const RationalMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    std::size_t rows_, cols_;
    std::vector<Rational> data_;
};

struct RrefResult {
    RationalMatrix matrix;
    std::vector<std::size_t> pivots;  // pivot column per pivot row
};

// Reduced row echelon form with deterministic pivoting: columns left to
// right, first usable row.
inline RrefResult rref(RationalMatrix m) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t p = row;
        while (p < m.rows() && m.at(p, col) == 0) ++p;
        if (p == m.rows()) continue;
        m.swap_rows(p, row);
        const Rational inv = Rational(1) / m.at(row, col);
        for (std::size_t j = col; j < m.cols(); ++j) m.at(row, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == row || m.at(i, col) == 0) continue;
            const Rational f = m.at(i, col);
            for (std::size_t j = col; j < m.cols(); ++j)
                m.at(i, j) -= f * m.at(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return {std::move(m), std::move(pivots)};
}

inline std::size_t rank(const RationalMatrix& m) { return rref(m).pivots.size(); }

// Canonical basis of the right kernel: one vector per free column, the free
// variable set to 1 and pivot entries read off the reduced form, then the
// sign flipped if needed so the first nonzero entry is positive.
inline std::vector<std::vector<Rational>> nullspace(const RationalMatrix& m) {
    auto [r, pivots] = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t p : pivots) is_pivot[p] = true;

    std::vector<std::vector<Rational>> basis;
    for (std::size_t j = 0; j < m.cols(); ++j) {
        if (is_pivot[j]) continue;
        std::vector<Rational> v(m.cols(), Rational(0));
        v[j] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -r.at(i, j);
        for (const Rational& e : v) {
            if (e == 0) continue;
            if (e < 0)
                for (Rational& f : v) f = -f;
            break;
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

// One exact solution of A x = b when the system is consistent (free
// variables set to 0); nothing when it is not.
inline std::optional<std::vector<Rational>> solve(const RationalMatrix& a,
                                                  const std::vector<Rational>& b) {
    if (b.size() != a.rows()) throw std::invalid_argument("size mismatch");
    RationalMatrix aug(a.rows(), a.cols() + 1);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
        aug.at(i, a.cols()) = b[i];
    }
    auto [r, pivots] = rref(std::move(aug));
    for (std::size_t p : pivots)
        if (p == a.cols()) return std::nullopt;
    std::vector<Rational> x(a.cols(), Rational(0));
    for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = r.at(i, a.cols());
    return x;
}

inline std::vector<Rational> mat_vec(const RationalMatrix& m,
                                     const std::vector<Rational>& v) {
    if (v.size() != m.cols()) throw std::invalid_argument("size mismatch");
    std::vector<Rational> out(m.rows(), Rational(0));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out[i] += m.at(i, j) * v[j];
    return out;
}

}  // namespace dskrv
