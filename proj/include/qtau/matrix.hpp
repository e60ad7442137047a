#pragma once

// Dense matrices over Q with exact Gaussian elimination. Shapes with zero
// rows or columns are first-class citizens: representations routinely have
// empty fibers and every routine here must survive them.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "qtau/rational.hpp"

namespace qtau {

class QMat {
public:
    QMat() : rows_(0), cols_(0) {}
    QMat(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols) {
        QTAU_CHECK(rows >= 0 && cols >= 0, "negative matrix shape");
    }

    static QMat identity(int n) {
        QMat m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rational& at(int i, int j) {
        QTAU_CHECK(i >= 0 && i < rows_ && j >= 0 && j < cols_, "matrix index out of range");
        return a_[size_t(i) * cols_ + j];
    }
    const Rational& at(int i, int j) const {
        QTAU_CHECK(i >= 0 && i < rows_ && j >= 0 && j < cols_, "matrix index out of range");
        return a_[size_t(i) * cols_ + j];
    }

    bool operator==(const QMat& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }

    bool is_zero() const {
        for (const auto& x : a_)
            if (!qtau::is_zero(x)) return false;
        return true;
    }

    QMat operator*(const QMat& o) const {
        QTAU_CHECK(cols_ == o.rows_, "matrix product shape mismatch");
        QMat r(rows_, o.cols_);
        for (int i = 0; i < rows_; ++i)
            for (int k = 0; k < cols_; ++k) {
                const Rational& x = at(i, k);
                if (qtau::is_zero(x)) continue;
                for (int j = 0; j < o.cols_; ++j) r.at(i, j) += x * o.at(k, j);
            }
        return r;
    }

    QMat operator+(const QMat& o) const {
        QTAU_CHECK(rows_ == o.rows_ && cols_ == o.cols_, "matrix sum shape mismatch");
        QMat r = *this;
        for (size_t i = 0; i < a_.size(); ++i) r.a_[i] += o.a_[i];
        return r;
    }

    QMat operator-(const QMat& o) const {
        QTAU_CHECK(rows_ == o.rows_ && cols_ == o.cols_, "matrix difference shape mismatch");
        QMat r = *this;
        for (size_t i = 0; i < a_.size(); ++i) r.a_[i] -= o.a_[i];
        return r;
    }

    QMat operator*(const Rational& c) const {
        QMat r = *this;
        for (auto& x : r.a_) x *= c;
        return r;
    }

    QMat transpose() const {
        QMat r(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
        return r;
    }

    QMat columns(const std::vector<int>& idx) const {
        QMat r(rows_, int(idx.size()));
        for (int j = 0; j < int(idx.size()); ++j)
            for (int i = 0; i < rows_; ++i) r.at(i, j) = at(i, idx[j]);
        return r;
    }

    QMat rows_of(const std::vector<int>& idx) const {
        QMat r(int(idx.size()), cols_);
        for (int i = 0; i < int(idx.size()); ++i)
            for (int j = 0; j < cols_; ++j) r.at(i, j) = at(idx[i], j);
        return r;
    }

    void set_block(int i0, int j0, const QMat& b) {
        QTAU_CHECK(i0 + b.rows() <= rows_ && j0 + b.cols() <= cols_, "block out of range");
        for (int i = 0; i < b.rows(); ++i)
            for (int j = 0; j < b.cols(); ++j) at(i0 + i, j0 + j) = b.at(i, j);
    }

    // Column vector of all entries, row-major. Used to treat morphisms as
    // vectors when solving linear systems over Hom spaces.
    std::vector<Rational> flatten() const { return a_; }

    std::string to_string() const {
        std::string s = "[";
        for (int i = 0; i < rows_; ++i) {
            s += i ? "; " : "";
            for (int j = 0; j < cols_; ++j) s += (j ? "," : "") + rat_to_string(at(i, j));
        }
        return s + "]";
    }

private:
    int rows_, cols_;
    std::vector<Rational> a_;
};

inline QMat hstack(const QMat& a, const QMat& b) {
    QTAU_CHECK(a.rows() == b.rows(), "hstack row mismatch");
    QMat r(a.rows(), a.cols() + b.cols());
    r.set_block(0, 0, a);
    r.set_block(0, a.cols(), b);
    return r;
}

inline QMat vstack(const QMat& a, const QMat& b) {
    QTAU_CHECK(a.cols() == b.cols(), "vstack column mismatch");
    QMat r(a.rows() + b.rows(), a.cols());
    r.set_block(0, 0, a);
    r.set_block(a.rows(), 0, b);
    return r;
}

// In-place reduced row echelon form; returns the pivot columns.
inline std::vector<int> rref(QMat& m) {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
        int p = -1;
        for (int i = row; i < m.rows(); ++i)
            if (!is_zero(m.at(i, col))) { p = i; break; }
        if (p < 0) continue;
        if (p != row)
            for (int j = 0; j < m.cols(); ++j) std::swap(m.at(p, j), m.at(row, j));
        Rational inv = 1 / m.at(row, col);
        for (int j = col; j < m.cols(); ++j) m.at(row, j) *= inv;
        for (int i = 0; i < m.rows(); ++i) {
            if (i == row || is_zero(m.at(i, col))) continue;
            Rational f = m.at(i, col);
            for (int j = col; j < m.cols(); ++j) m.at(i, j) -= f * m.at(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

inline int rank(QMat m) { return int(rref(m).size()); }

// Basis of { x : m x = 0 }, one column per basis vector, from the standard
// free-variable parametrization of the rref. Deterministic.
inline QMat nullspace(const QMat& m) {
    QMat r = m;
    std::vector<int> pivots = rref(r);
    std::vector<bool> is_pivot(m.cols(), false);
    for (int p : pivots) is_pivot[p] = true;
    std::vector<int> free_cols;
    for (int j = 0; j < m.cols(); ++j)
        if (!is_pivot[j]) free_cols.push_back(j);
    QMat ker(m.cols(), int(free_cols.size()));
    for (int k = 0; k < int(free_cols.size()); ++k) {
        int fc = free_cols[k];
        ker.at(fc, k) = 1;
        for (int i = 0; i < int(pivots.size()); ++i) ker.at(pivots[i], k) = -r.at(i, fc);
    }
    return ker;
}

// Solve a X = b (matrix right-hand side). Empty optional when inconsistent.
inline std::optional<QMat> solve(const QMat& a, const QMat& b) {
    QTAU_CHECK(a.rows() == b.rows(), "solve shape mismatch");
    QMat aug = hstack(a, b);
    std::vector<int> pivots = rref(aug);
    for (int p : pivots)
        if (p >= a.cols()) return std::nullopt;
    QMat x(a.cols(), b.cols());
    for (int i = 0; i < int(pivots.size()); ++i)
        for (int j = 0; j < b.cols(); ++j) x.at(pivots[i], j) = aug.at(i, a.cols() + j);
    return x;
}

inline std::optional<QMat> inverse(const QMat& a) {
    QTAU_CHECK(a.rows() == a.cols(), "inverse of non-square matrix");
    auto x = solve(a, QMat::identity(a.rows()));
    return x;
}

inline bool is_invertible(const QMat& a) {
    return a.rows() == a.cols() && rank(a) == a.rows();
}

// Indices of a maximal linearly independent subset of the columns.
inline std::vector<int> column_basis(const QMat& m) {
    QMat r = m;
    return rref(r);
}

}  // namespace qtau
