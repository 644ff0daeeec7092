#pragma once

// Dense row-major matrices and the exact linear algebra used everywhere else:
// reduced row echelon form, kernels, solving, inversion.

#include <cassert>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "sheafalg/field.hpp"

namespace sheafalg {

template <class T>
class Matrix {
  public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, const T& fill)
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    T& operator()(std::size_t r, std::size_t c) {
        assert(r < rows_ && c < cols_);
        return data_[r * cols_ + c];
    }
    const T& operator()(std::size_t r, std::size_t c) const {
        assert(r < rows_ && c < cols_);
        return data_[r * cols_ + c];
    }

    std::span<T> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
    std::span<const T> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

    std::vector<T> row_vector(std::size_t r) const {
        auto s = row(r);
        return {s.begin(), s.end()};
    }
    std::vector<T> column(std::size_t c) const {
        std::vector<T> out(rows_);
        for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
        return out;
    }
    void set_column(std::size_t c, std::span<const T> v) {
        assert(v.size() == rows_);
        for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = v[r];
    }
    void append_row(std::span<const T> v) {
        if (rows_ == 0 && cols_ == 0) cols_ = v.size();
        assert(v.size() == cols_);
        data_.insert(data_.end(), v.begin(), v.end());
        ++rows_;
    }

    const std::vector<T>& data() const { return data_; }

    friend bool operator==(const Matrix&, const Matrix&) = default;

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

template <Field F>
using Vec = std::vector<typename F::value_type>;

template <Field F>
using Mat = Matrix<typename F::value_type>;

template <Field F>
Vec<F> zero_vector(const F& f, std::size_t n) {
    return Vec<F>(n, f.zero());
}

template <Field F>
Vec<F> unit_vector(const F& f, std::size_t n, std::size_t i) {
    Vec<F> v(n, f.zero());
    v[i] = f.one();
    return v;
}

template <Field F>
bool is_zero_vector(const F& f, std::span<const typename F::value_type> v) {
    for (const auto& x : v)
        if (!f.is_zero(x)) return false;
    return true;
}

template <Field F>
bool is_zero_vector(const F& f, const Vec<F>& v) {
    return is_zero_vector(f, std::span<const typename F::value_type>(v));
}

template <Field F>
Vec<F> add(const F& f, const Vec<F>& a, const Vec<F>& b) {
    assert(a.size() == b.size());
    Vec<F> out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = f.add(a[i], b[i]);
    return out;
}

template <Field F>
Vec<F> sub(const F& f, const Vec<F>& a, const Vec<F>& b) {
    assert(a.size() == b.size());
    Vec<F> out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = f.sub(a[i], b[i]);
    return out;
}

template <Field F>
Vec<F> scale(const F& f, const typename F::value_type& c, const Vec<F>& a) {
    Vec<F> out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = f.mul(c, a[i]);
    return out;
}

/// y += c * x
template <Field F>
void axpy(const F& f, const typename F::value_type& c, std::span<const typename F::value_type> x,
          std::span<typename F::value_type> y) {
    assert(x.size() == y.size());
    if (f.is_zero(c)) return;
    for (std::size_t i = 0; i < x.size(); ++i)
        if (!f.is_zero(x[i])) y[i] = f.add(y[i], f.mul(c, x[i]));
}

template <Field F>
Mat<F> zero_matrix(const F& f, std::size_t rows, std::size_t cols) {
    return Mat<F>(rows, cols, f.zero());
}

template <Field F>
Mat<F> identity_matrix(const F& f, std::size_t n) {
    Mat<F> m(n, n, f.zero());
    for (std::size_t i = 0; i < n; ++i) m(i, i) = f.one();
    return m;
}

template <Field F>
bool is_zero_matrix(const F& f, const Mat<F>& m) {
    return is_zero_vector(f, std::span<const typename F::value_type>(m.data()));
}

template <Field F>
Vec<F> mat_vec(const F& f, const Mat<F>& m, std::span<const typename F::value_type> v) {
    assert(m.cols() == v.size());
    Vec<F> out(m.rows(), f.zero());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        auto acc = f.zero();
        for (std::size_t c = 0; c < m.cols(); ++c)
            if (!f.is_zero(v[c]) && !f.is_zero(m(r, c))) acc = f.add(acc, f.mul(m(r, c), v[c]));
        out[r] = acc;
    }
    return out;
}

template <Field F>
Mat<F> mat_mul(const F& f, const Mat<F>& a, const Mat<F>& b) {
    assert(a.cols() == b.rows());
    Mat<F> out(a.rows(), b.cols(), f.zero());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const auto& aik = a(i, k);
            if (f.is_zero(aik)) continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                if (!f.is_zero(b(k, j))) out(i, j) = f.add(out(i, j), f.mul(aik, b(k, j)));
        }
    return out;
}

template <Field F>
Mat<F> mat_add(const F& f, const Mat<F>& a, const Mat<F>& b) {
    assert(a.rows() == b.rows() && a.cols() == b.cols());
    Mat<F> out = a;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = f.add(a(i, j), b(i, j));
    return out;
}

template <Field F>
Mat<F> mat_sub(const F& f, const Mat<F>& a, const Mat<F>& b) {
    assert(a.rows() == b.rows() && a.cols() == b.cols());
    Mat<F> out = a;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = f.sub(a(i, j), b(i, j));
    return out;
}

template <Field F>
Mat<F> mat_scale(const F& f, const typename F::value_type& c, const Mat<F>& a) {
    Mat<F> out = a;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = f.mul(c, a(i, j));
    return out;
}

template <class T>
Matrix<T> transpose(const Matrix<T>& m) {
    Matrix<T> out(m.cols(), m.rows(), T{});
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out(j, i) = m(i, j);
    return out;
}

/// Matrix whose columns are the given vectors (all of length `rows`).
template <Field F>
Mat<F> from_columns(const F& f, std::size_t rows, const std::vector<Vec<F>>& cols) {
    Mat<F> m(rows, cols.size(), f.zero());
    for (std::size_t c = 0; c < cols.size(); ++c) m.set_column(c, cols[c]);
    return m;
}

template <Field F>
Mat<F> from_rows(const F& f, std::size_t cols, const std::vector<Vec<F>>& rows) {
    Mat<F> m(rows.size(), cols, f.zero());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        assert(rows[r].size() == cols);
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
    }
    return m;
}

/// In-place reduced row echelon form. Returns pivot columns; rows past the
/// rank are zero and are dropped.
template <Field F>
std::vector<std::size_t> rref(const F& f, Mat<F>& m) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    const std::size_t rows = m.rows(), cols = m.cols();
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t sel = r;
        while (sel < rows && f.is_zero(m(sel, c))) ++sel;
        if (sel == rows) continue;
        if (sel != r)
            for (std::size_t j = 0; j < cols; ++j) std::swap(m(sel, j), m(r, j));
        const auto inv = f.inv(m(r, c));
        for (std::size_t j = c; j < cols; ++j) m(r, j) = f.mul(inv, m(r, j));
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || f.is_zero(m(i, c))) continue;
            const auto factor = f.neg(m(i, c));
            for (std::size_t j = c; j < cols; ++j)
                if (!f.is_zero(m(r, j))) m(i, j) = f.add(m(i, j), f.mul(factor, m(r, j)));
        }
        pivots.push_back(c);
        ++r;
    }
    Mat<F> trimmed(r, cols, f.zero());
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < cols; ++j) trimmed(i, j) = m(i, j);
    m = std::move(trimmed);
    return pivots;
}

template <Field F>
std::size_t rank(const F& f, Mat<F> m) {
    return rref(f, m).size();
}

/// Basis (as rows) of {v : m v = 0}, in reduced echelon form.
template <Field F>
Mat<F> kernel(const F& f, Mat<F> m) {
    const std::size_t n = m.cols();
    auto pivots = rref(f, m);
    std::vector<bool> is_pivot(n, false);
    for (auto p : pivots) is_pivot[p] = true;
    Mat<F> out(0, n, f.zero());
    std::vector<Vec<F>> basis;
    for (std::size_t free = 0; free < n; ++free) {
        if (is_pivot[free]) continue;
        Vec<F> v(n, f.zero());
        v[free] = f.one();
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = f.neg(m(r, free));
        basis.push_back(std::move(v));
    }
    Mat<F> k = from_rows(f, n, basis);
    rref(f, k);
    return k;
}

/// Some solution x of m x = b, if one exists.
template <Field F>
std::optional<Vec<F>> solve(const F& f, const Mat<F>& m, std::span<const typename F::value_type> b) {
    assert(b.size() == m.rows());
    const std::size_t n = m.cols();
    Mat<F> aug(m.rows(), n + 1, f.zero());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n) = b[i];
    }
    auto pivots = rref(f, aug);
    if (!pivots.empty() && pivots.back() == n) return std::nullopt;
    Vec<F> x(n, f.zero());
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug(r, n);
    return x;
}

template <Field F>
std::optional<Mat<F>> inverse(const F& f, const Mat<F>& m) {
    if (m.rows() != m.cols()) return std::nullopt;
    const std::size_t n = m.rows();
    Mat<F> aug(n, 2 * n, f.zero());
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = f.one();
    }
    auto pivots = rref(f, aug);
    if (pivots.size() < n || (n > 0 && pivots[n - 1] != n - 1)) return std::nullopt;
    Mat<F> out(n, n, f.zero());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out(i, j) = aug(i, n + j);
    return out;
}

template <Field F>
bool is_invertible(const F& f, const Mat<F>& m) {
    return m.rows() == m.cols() && rank(f, m) == m.rows();
}

template <Field F>
Mat<F> mat_pow(const F& f, Mat<F> base, std::uint64_t e) {
    Mat<F> acc = identity_matrix(f, base.rows());
    while (e > 0) {
        if (e & 1) acc = mat_mul(f, acc, base);
        e >>= 1;
        if (e) base = mat_mul(f, base, base);
    }
    return acc;
}

/// Vertical concatenation.
template <class T>
Matrix<T> stack(const Matrix<T>& top, const Matrix<T>& bottom) {
    if (top.rows() == 0) return bottom;
    if (bottom.rows() == 0) return top;
    assert(top.cols() == bottom.cols());
    Matrix<T> out = top;
    for (std::size_t r = 0; r < bottom.rows(); ++r) out.append_row(bottom.row(r));
    return out;
}

}  // namespace sheafalg
