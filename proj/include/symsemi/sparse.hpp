#pragma once

#include "symsemi/errors.hpp"
#include "symsemi/rational.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace symsemi {

inline bool is_zero(const Rational& x) { return x.is_zero(); }
inline bool is_zero(double x) { return x == 0.0; }

/// Row-major sparse matrix with explicit shape. Each row is a vector of
/// (column, value) entries sorted by column; stored values are never zero.
template <class T>
class SparseMatrix {
public:
    struct Entry {
        std::size_t col;
        T val;
    };
    using Row = std::vector<Entry>;

    SparseMatrix() = default;
    SparseMatrix(std::size_t rows, std::size_t cols) : cols_(cols), data_(rows) {}

    static SparseMatrix identity(std::size_t n) {
        SparseMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.data_[i].push_back({i, T(1)});
        return m;
    }

    static SparseMatrix from_dense(const std::vector<std::vector<T>>& rows, std::size_t cols) {
        SparseMatrix m(rows.size(), cols);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != cols) throw ShapeMismatch("ragged dense matrix");
            for (std::size_t j = 0; j < cols; ++j)
                if (!is_zero(rows[i][j])) m.data_[i].push_back({j, rows[i][j]});
        }
        return m;
    }

    [[nodiscard]] std::size_t rows() const { return data_.size(); }
    [[nodiscard]] std::size_t cols() const { return cols_; }
    [[nodiscard]] bool square() const { return rows() == cols(); }

    [[nodiscard]] std::size_t nnz() const {
        std::size_t n = 0;
        for (const auto& r : data_) n += r.size();
        return n;
    }

    [[nodiscard]] bool is_zero_matrix() const {
        return std::all_of(data_.begin(), data_.end(), [](const Row& r) { return r.empty(); });
    }

    [[nodiscard]] std::span<const Entry> row(std::size_t i) const { return data_[i]; }

    /// Replaces row i; entries must be sorted by column and nonzero.
    void set_row(std::size_t i, Row r) { data_[i] = std::move(r); }

    [[nodiscard]] T at(std::size_t i, std::size_t j) const {
        check_index(i, j);
        const auto& r = data_[i];
        auto it = std::lower_bound(r.begin(), r.end(), j, [](const Entry& e, std::size_t c) { return e.col < c; });
        if (it != r.end() && it->col == j) return it->val;
        return T(0);
    }

    void set(std::size_t i, std::size_t j, const T& v) {
        check_index(i, j);
        auto& r = data_[i];
        auto it = std::lower_bound(r.begin(), r.end(), j, [](const Entry& e, std::size_t c) { return e.col < c; });
        if (it != r.end() && it->col == j) {
            if (is_zero(v)) r.erase(it);
            else it->val = v;
        } else if (!is_zero(v)) {
            r.insert(it, Entry{j, v});
        }
    }

    void add_to(std::size_t i, std::size_t j, const T& v) {
        if (is_zero(v)) return;
        check_index(i, j);
        auto& r = data_[i];
        auto it = std::lower_bound(r.begin(), r.end(), j, [](const Entry& e, std::size_t c) { return e.col < c; });
        if (it != r.end() && it->col == j) {
            it->val += v;
            if (is_zero(it->val)) r.erase(it);
        } else {
            r.insert(it, Entry{j, v});
        }
    }

    [[nodiscard]] SparseMatrix transpose() const {
        SparseMatrix t(cols_, rows());
        for (std::size_t i = 0; i < rows(); ++i)
            for (const auto& e : data_[i]) t.data_[e.col].push_back({i, e.val});
        return t;
    }

    [[nodiscard]] std::vector<T> apply(std::span<const T> v) const {
        if (v.size() != cols_) throw ShapeMismatch("apply: vector length " + std::to_string(v.size()) +
                                                   " vs " + std::to_string(cols_) + " columns");
        std::vector<T> out(rows(), T(0));
        for (std::size_t i = 0; i < rows(); ++i)
            for (const auto& e : data_[i])
                if (!is_zero(v[e.col])) out[i] += e.val * v[e.col];
        return out;
    }

    /// Column j as a dense vector.
    [[nodiscard]] std::vector<T> column(std::size_t j) const {
        std::vector<T> out(rows(), T(0));
        for (std::size_t i = 0; i < rows(); ++i) out[i] = at(i, j);
        return out;
    }

    [[nodiscard]] std::vector<std::vector<T>> to_dense() const {
        std::vector<std::vector<T>> d(rows(), std::vector<T>(cols_, T(0)));
        for (std::size_t i = 0; i < rows(); ++i)
            for (const auto& e : data_[i]) d[i][e.col] = e.val;
        return d;
    }

    /// Copies `block` into this matrix with its (0,0) at (r0, c0), scaled by `s`.
    void place(const SparseMatrix& block, std::size_t r0, std::size_t c0, const T& s = T(1)) {
        if (r0 + block.rows() > rows() || c0 + block.cols() > cols_)
            throw ShapeMismatch("block does not fit");
        for (std::size_t i = 0; i < block.rows(); ++i)
            for (const auto& e : block.data_[i]) add_to(r0 + i, c0 + e.col, s * e.val);
    }

    SparseMatrix& operator*=(const T& s) {
        if (is_zero(s)) {
            for (auto& r : data_) r.clear();
            return *this;
        }
        for (auto& r : data_)
            for (auto& e : r) e.val *= s;
        return *this;
    }

    friend SparseMatrix operator*(SparseMatrix a, const T& s) { return a *= s; }
    friend SparseMatrix operator*(const T& s, SparseMatrix a) { return a *= s; }

    friend SparseMatrix operator+(const SparseMatrix& a, const SparseMatrix& b) { return combine(a, b, T(1)); }
    friend SparseMatrix operator-(const SparseMatrix& a, const SparseMatrix& b) { return combine(a, b, T(-1)); }
    friend SparseMatrix operator-(const SparseMatrix& a) { return a * T(-1); }

    friend SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b) {
        if (a.cols_ != b.rows())
            throw ShapeMismatch("product of " + a.shape_str() + " and " + b.shape_str());
        SparseMatrix out(a.rows(), b.cols_);
        std::vector<T> acc(b.cols_, T(0));
        std::vector<char> used(b.cols_, 0);
        std::vector<std::size_t> touched;
        for (std::size_t i = 0; i < a.rows(); ++i) {
            touched.clear();
            for (const auto& ea : a.data_[i]) {
                for (const auto& eb : b.data_[ea.col]) {
                    if (!used[eb.col]) {
                        used[eb.col] = 1;
                        touched.push_back(eb.col);
                        acc[eb.col] = ea.val * eb.val;
                    } else {
                        acc[eb.col] += ea.val * eb.val;
                    }
                }
            }
            std::sort(touched.begin(), touched.end());
            Row r;
            r.reserve(touched.size());
            for (auto c : touched) {
                if (!is_zero(acc[c])) r.push_back({c, acc[c]});
                used[c] = 0;
            }
            out.data_[i] = std::move(r);
        }
        return out;
    }

    friend bool operator==(const SparseMatrix& a, const SparseMatrix& b) {
        if (a.rows() != b.rows() || a.cols_ != b.cols_) return false;
        for (std::size_t i = 0; i < a.rows(); ++i) {
            const auto& ra = a.data_[i];
            const auto& rb = b.data_[i];
            if (ra.size() != rb.size()) return false;
            for (std::size_t k = 0; k < ra.size(); ++k)
                if (ra[k].col != rb[k].col || !(ra[k].val == rb[k].val)) return false;
        }
        return true;
    }

    [[nodiscard]] std::string shape_str() const {
        return std::to_string(rows()) + "x" + std::to_string(cols_);
    }

private:
    void check_index(std::size_t i, std::size_t j) const {
        if (i >= rows() || j >= cols_)
            throw ShapeMismatch("index (" + std::to_string(i) + "," + std::to_string(j) + ") outside " + shape_str());
    }

    static SparseMatrix combine(const SparseMatrix& a, const SparseMatrix& b, const T& sb) {
        if (a.rows() != b.rows() || a.cols_ != b.cols_)
            throw ShapeMismatch("sum of " + a.shape_str() + " and " + b.shape_str());
        SparseMatrix out(a.rows(), a.cols_);
        for (std::size_t i = 0; i < a.rows(); ++i) {
            const auto& ra = a.data_[i];
            const auto& rb = b.data_[i];
            Row r;
            std::size_t p = 0, q = 0;
            while (p < ra.size() || q < rb.size()) {
                if (q == rb.size() || (p < ra.size() && ra[p].col < rb[q].col)) {
                    r.push_back(ra[p++]);
                } else if (p == ra.size() || rb[q].col < ra[p].col) {
                    r.push_back({rb[q].col, sb * rb[q].val});
                    ++q;
                } else {
                    T v = ra[p].val + sb * rb[q].val;
                    if (!is_zero(v)) r.push_back({ra[p].col, v});
                    ++p;
                    ++q;
                }
            }
            out.data_[i] = std::move(r);
        }
        return out;
    }

    std::size_t cols_ = 0;
    std::vector<Row> data_;
};

using SparseMat = SparseMatrix<Rational>;
using SparseMatD = SparseMatrix<double>;

/// Largest absolute entry of a - b (float-mode residuals).
inline double max_abs_diff(const SparseMatD& a, const SparseMatD& b) {
    const SparseMatD d = a - b;
    double m = 0.0;
    for (std::size_t i = 0; i < d.rows(); ++i)
        for (const auto& e : d.row(i)) m = std::max(m, std::fabs(e.val));
    return m;
}

inline SparseMatD to_double(const SparseMat& m) {
    SparseMatD out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        SparseMatD::Row r;
        r.reserve(m.row(i).size());
        for (const auto& e : m.row(i)) r.push_back({e.col, e.val.to_double()});
        out.set_row(i, std::move(r));
    }
    return out;
}

} // namespace symsemi
