#pragma once

#include <algorithm>
#include <compare>
#include <vector>

#include "sheafalg/matrix.hpp"

namespace sheafalg {

/// A linear subspace of F^n stored by its reduced row echelon basis, so two
/// equal subspaces always compare equal element by element.
template <Field F>
class Subspace {
  public:
    using value_type = typename F::value_type;

    Subspace(F field, std::size_t parent_dim)
        : field_(field), parent_dim_(parent_dim), basis_(0, parent_dim, field.zero()) {}

    static Subspace span(const F& f, std::size_t n, const std::vector<Vec<F>>& vectors) {
        Subspace s(f, n);
        Mat<F> m(0, n, f.zero());
        for (const auto& v : vectors) {
            if (v.size() != n) throw InputError("vector of dimension " + std::to_string(v.size()) +
                                                " in a space of dimension " + std::to_string(n));
            m.append_row(v);
        }
        s.pivots_ = rref(f, m);
        s.basis_ = std::move(m);
        if (s.basis_.rows() == 0) s.basis_ = Mat<F>(0, n, f.zero());
        return s;
    }

    /// Row space of m.
    static Subspace row_space(const F& f, Mat<F> m) {
        const std::size_t n = m.cols();
        Subspace s(f, n);
        s.pivots_ = rref(f, m);
        s.basis_ = m.rows() == 0 ? Mat<F>(0, n, f.zero()) : std::move(m);
        return s;
    }

    static Subspace full(const F& f, std::size_t n) { return row_space(f, identity_matrix(f, n)); }

    const F& field() const { return field_; }
    std::size_t parent_dim() const { return parent_dim_; }
    std::size_t dim() const { return basis_.rows(); }
    bool is_zero() const { return dim() == 0; }
    bool is_full() const { return dim() == parent_dim_; }
    const Mat<F>& basis() const { return basis_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }
    Vec<F> basis_vector(std::size_t i) const { return basis_.row_vector(i); }
    std::vector<Vec<F>> basis_vectors() const {
        std::vector<Vec<F>> out;
        for (std::size_t i = 0; i < dim(); ++i) out.push_back(basis_vector(i));
        return out;
    }

    /// v minus its projection along the echelon basis; zero iff v lies in the subspace.
    Vec<F> reduce(std::span<const value_type> v) const {
        check_dim(v.size());
        Vec<F> r(v.begin(), v.end());
        for (std::size_t k = 0; k < pivots_.size(); ++k) {
            const auto c = r[pivots_[k]];
            if (field_.is_zero(c)) continue;
            axpy(field_, field_.neg(c), basis_.row(k), std::span<value_type>(r));
        }
        return r;
    }

    bool contains(std::span<const value_type> v) const { return is_zero_vector(field_, reduce(v)); }

    bool contains(const Subspace& other) const {
        for (std::size_t i = 0; i < other.dim(); ++i)
            if (!contains(other.basis_.row(i))) return false;
        return true;
    }

    /// Coordinates of v (which must lie in the subspace) in the echelon basis.
    Vec<F> coordinates(std::span<const value_type> v) const {
        check_dim(v.size());
        if (!contains(v)) throw InvariantViolation("coordinates requested for a vector outside the subspace");
        Vec<F> c(dim());
        for (std::size_t k = 0; k < dim(); ++k) c[k] = v[pivots_[k]];
        return c;
    }

    Vec<F> from_coordinates(std::span<const value_type> c) const {
        Vec<F> v(parent_dim_, field_.zero());
        for (std::size_t k = 0; k < dim(); ++k) axpy(field_, c[k], basis_.row(k), std::span<value_type>(v));
        return v;
    }

    /// Standard coordinates not used as pivots: a basis of a complement.
    std::vector<std::size_t> complement_indices() const {
        std::vector<bool> piv(parent_dim_, false);
        for (auto p : pivots_) piv[p] = true;
        std::vector<std::size_t> out;
        for (std::size_t i = 0; i < parent_dim_; ++i)
            if (!piv[i]) out.push_back(i);
        return out;
    }

    /// Coordinates of the class of v in the quotient F^n / this, relative to
    /// the complement basis.
    Vec<F> quotient_coordinates(std::span<const value_type> v) const {
        auto r = reduce(v);
        auto idx = complement_indices();
        Vec<F> out(idx.size());
        for (std::size_t k = 0; k < idx.size(); ++k) out[k] = r[idx[k]];
        return out;
    }

    /// Matrix of v -> quotient_coordinates(v).
    Mat<F> quotient_map() const {
        auto idx = complement_indices();
        Mat<F> m(idx.size(), parent_dim_, field_.zero());
        for (std::size_t j = 0; j < parent_dim_; ++j) {
            auto q = quotient_coordinates(unit_vector(field_, parent_dim_, j));
            for (std::size_t i = 0; i < idx.size(); ++i) m(i, j) = q[i];
        }
        return m;
    }

    Subspace operator+(const Subspace& o) const {
        check_dim(o.parent_dim_);
        return row_space(field_, stack(basis_, o.basis_));
    }

    Subspace intersect(const Subspace& o) const {
        check_dim(o.parent_dim_);
        if (is_zero() || o.is_zero()) return Subspace(field_, parent_dim_);
        // x = sum_i a_i u_i lies in o iff o.reduce(x) = 0; reduction is linear.
        Mat<F> m(parent_dim_, dim(), field_.zero());
        for (std::size_t i = 0; i < dim(); ++i) m.set_column(i, o.reduce(basis_.row(i)));
        Mat<F> k = kernel(field_, m);
        std::vector<Vec<F>> vecs;
        for (std::size_t r = 0; r < k.rows(); ++r) vecs.push_back(from_coordinates(k.row(r)));
        return span(field_, parent_dim_, vecs);
    }

    /// Image of this subspace under a linear map given by a matrix.
    Subspace image(const Mat<F>& m) const {
        if (m.cols() != parent_dim_) throw InputError("image: matrix width does not match subspace");
        std::vector<Vec<F>> vecs;
        for (std::size_t i = 0; i < dim(); ++i) vecs.push_back(mat_vec(field_, m, basis_.row(i)));
        return span(field_, m.rows(), vecs);
    }

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.parent_dim_ == b.parent_dim_ && a.basis_ == b.basis_;
    }

    /// Canonical order: by dimension, then lexicographically by echelon basis.
    friend bool operator<(const Subspace& a, const Subspace& b) {
        if (a.parent_dim_ != b.parent_dim_) return a.parent_dim_ < b.parent_dim_;
        if (a.dim() != b.dim()) return a.dim() < b.dim();
        return std::lexicographical_compare(a.basis_.data().begin(), a.basis_.data().end(),
                                            b.basis_.data().begin(), b.basis_.data().end());
    }

  private:
    void check_dim(std::size_t n) const {
        if (n != parent_dim_)
            throw InputError("dimension " + std::to_string(n) + " does not match ambient dimension " +
                             std::to_string(parent_dim_));
    }

    F field_;
    std::size_t parent_dim_;
    Mat<F> basis_;
    std::vector<std::size_t> pivots_;
};

/// Incrementally grown echelon basis. Rows are kept reduced against earlier
/// pivots only, which is enough for membership tests.
template <Field F>
class EchelonBuilder {
  public:
    using value_type = typename F::value_type;

    EchelonBuilder(F f, std::size_t n) : f_(f), n_(n) {}

    /// Adds v if it is not already in the span; returns whether it was new.
    bool insert(std::span<const value_type> v) {
        auto r = reduce(v);
        std::size_t p = 0;
        while (p < n_ && f_.is_zero(r[p])) ++p;
        if (p == n_) return false;
        const auto inv = f_.inv(r[p]);
        for (auto& x : r) x = f_.mul(inv, x);
        rows_.push_back(std::move(r));
        pivots_.push_back(p);
        return true;
    }

    Vec<F> reduce(std::span<const value_type> v) const {
        Vec<F> r(v.begin(), v.end());
        for (std::size_t k = 0; k < rows_.size(); ++k) {
            const auto c = r[pivots_[k]];
            if (f_.is_zero(c)) continue;
            axpy(f_, f_.neg(c), std::span<const value_type>(rows_[k]), std::span<value_type>(r));
        }
        return r;
    }

    bool contains(std::span<const value_type> v) const { return is_zero_vector(f_, reduce(v)); }
    std::size_t dim() const { return rows_.size(); }
    const std::vector<Vec<F>>& rows() const { return rows_; }

    Subspace<F> subspace() const { return Subspace<F>::span(f_, n_, rows_); }

  private:
    F f_;
    std::size_t n_;
    std::vector<Vec<F>> rows_;
    std::vector<std::size_t> pivots_;
};

}  // namespace sheafalg
