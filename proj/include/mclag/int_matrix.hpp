#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <initializer_list>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "mclag/errors.hpp"

namespace mclag {

// Exact arbitrary-precision integer. All linear algebra in this library is
// over Z; floating point never enters.
using Int = boost::multiprecision::cpp_int;

// Dense integer matrix, row-major. 0xN and Nx0 matrices are legal and act as
// empty maps. Values are immutable by convention once built by the algebraic
// layers; the class itself is a plain value type.
class IntMatrix {
public:
    IntMatrix() = default;

    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols) {}

    static IntMatrix identity(std::size_t n) {
        IntMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    // Convenience for tests and small literals.
    static IntMatrix from_rows(std::initializer_list<std::initializer_list<long long>> rows) {
        const std::size_t r = rows.size();
        const std::size_t c = r == 0 ? 0 : rows.begin()->size();
        IntMatrix m(r, c);
        std::size_t i = 0;
        for (const auto& row : rows) {
            if (row.size() != c) throw DimensionMismatch("ragged row list");
            std::size_t j = 0;
            for (long long x : row) m(i, j++) = x;
            ++i;
        }
        return m;
    }

    static IntMatrix column_vector(const std::vector<Int>& v) {
        IntMatrix m(v.size(), 1);
        for (std::size_t i = 0; i < v.size(); ++i) m(i, 0) = v[i];
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    Int& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const Int& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

    bool operator==(const IntMatrix&) const = default;

    bool is_zero() const {
        for (const Int& e : entries_)
            if (e != 0) return false;
        return true;
    }

    IntMatrix transpose() const {
        IntMatrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    std::vector<Int> column(std::size_t j) const {
        std::vector<Int> v(rows_);
        for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
        return v;
    }

    void set_column(std::size_t j, const std::vector<Int>& v) {
        if (v.size() != rows_) throw DimensionMismatch("set_column: wrong height");
        for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
    }

    // Rows [r0, r1) as a new matrix.
    IntMatrix row_slice(std::size_t r0, std::size_t r1) const {
        IntMatrix out(r1 - r0, cols_);
        for (std::size_t i = r0; i < r1; ++i)
            for (std::size_t j = 0; j < cols_; ++j) out(i - r0, j) = (*this)(i, j);
        return out;
    }

    IntMatrix hstack(const IntMatrix& other) const {
        if (other.rows_ != rows_) throw DimensionMismatch("hstack: row counts differ");
        IntMatrix out(rows_, cols_ + other.cols_);
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t j = 0; j < cols_; ++j) out(i, j) = (*this)(i, j);
            for (std::size_t j = 0; j < other.cols_; ++j) out(i, cols_ + j) = other(i, j);
        }
        return out;
    }

    friend IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionMismatch("matrix add");
        IntMatrix c(a.rows_, a.cols_);
        for (std::size_t i = 0; i < a.entries_.size(); ++i) c.entries_[i] = a.entries_[i] + b.entries_[i];
        return c;
    }

    friend IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionMismatch("matrix sub");
        IntMatrix c(a.rows_, a.cols_);
        for (std::size_t i = 0; i < a.entries_.size(); ++i) c.entries_[i] = a.entries_[i] - b.entries_[i];
        return c;
    }

    friend IntMatrix operator-(const IntMatrix& a) {
        IntMatrix c(a.rows_, a.cols_);
        for (std::size_t i = 0; i < a.entries_.size(); ++i) c.entries_[i] = -a.entries_[i];
        return c;
    }

    friend IntMatrix operator*(const Int& s, const IntMatrix& a) {
        IntMatrix c(a.rows_, a.cols_);
        for (std::size_t i = 0; i < a.entries_.size(); ++i) c.entries_[i] = s * a.entries_[i];
        return c;
    }

    // Zero entries of the left factor are skipped; the matrices showing up in
    // chain complexes and relation stacks are sparse in practice.
    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
        if (a.cols_ != b.rows_) throw DimensionMismatch("matrix mul");
        IntMatrix c(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i) {
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const Int& aik = a(i, k);
                if (aik == 0) continue;
                const Int* brow = &b.entries_[k * b.cols_];
                Int* crow = &c.entries_[i * b.cols_];
                for (std::size_t j = 0; j < b.cols_; ++j) {
                    if (brow[j] != 0) crow[j] += aik * brow[j];
                }
            }
        }
        return c;
    }

    std::vector<Int> apply(const std::vector<Int>& x) const {
        if (x.size() != cols_) throw DimensionMismatch("matrix-vector mul");
        std::vector<Int> y(rows_);
        for (std::size_t j = 0; j < cols_; ++j) {
            if (x[j] == 0) continue;
            for (std::size_t i = 0; i < rows_; ++i) {
                const Int& aij = (*this)(i, j);
                if (aij != 0) y[i] += aij * x[j];
            }
        }
        return y;
    }

    // Exact determinant by fraction-free (Bareiss) elimination.
    Int determinant() const {
        if (rows_ != cols_) throw DimensionMismatch("determinant of non-square matrix");
        const std::size_t n = rows_;
        if (n == 0) return 1;
        IntMatrix a = *this;
        Int prev = 1;
        int sign = 1;
        for (std::size_t k = 0; k + 1 < n; ++k) {
            if (a(k, k) == 0) {
                std::size_t p = k + 1;
                while (p < n && a(p, k) == 0) ++p;
                if (p == n) return 0;
                for (std::size_t j = k; j < n; ++j) std::swap(a(k, j), a(p, j));
                sign = -sign;
            }
            for (std::size_t i = k + 1; i < n; ++i)
                for (std::size_t j = k + 1; j < n; ++j)
                    a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
            prev = a(k, k);
        }
        return sign * a(n - 1, n - 1);
    }

    // Text format: first line "rows cols", then one line per row of
    // space-separated decimal integers. Written and parsed bit-exactly.
    std::string to_text() const {
        std::ostringstream out;
        out << rows_ << ' ' << cols_ << '\n';
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t j = 0; j < cols_; ++j) {
                if (j) out << ' ';
                out << (*this)(i, j);
            }
            out << '\n';
        }
        return out.str();
    }

    static IntMatrix from_text(std::istream& in) {
        long long r = -1, c = -1;
        if (!(in >> r >> c) || r < 0 || c < 0) throw ParseError("matrix text: bad header");
        IntMatrix m(static_cast<std::size_t>(r), static_cast<std::size_t>(c));
        for (std::size_t i = 0; i < m.rows_; ++i)
            for (std::size_t j = 0; j < m.cols_; ++j)
                if (!(in >> m(i, j))) throw ParseError("matrix text: truncated entries");
        return m;
    }

    static IntMatrix from_text(const std::string& text) {
        std::istringstream in(text);
        return from_text(in);
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Int> entries_;
};

inline std::ostream& operator<<(std::ostream& os, const IntMatrix& m) { return os << m.to_text(); }

} // namespace mclag
