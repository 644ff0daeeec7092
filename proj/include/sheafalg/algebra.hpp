#pragma once

// Finite-dimensional associative algebras given by structure constants.

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sheafalg/subspace.hpp"

namespace sheafalg {

template <Field F>
class FDAlgebra {
  public:
    using value_type = typename F::value_type;

    /// `table[i * dim + j]` holds the coordinates of b_i * b_j.
    FDAlgebra(F field, std::vector<std::string> labels, std::vector<Vec<F>> table, std::optional<Vec<F>> unit)
        : field_(field), labels_(std::move(labels)), table_(std::move(table)), unit_(std::move(unit)) {
        const std::size_t n = labels_.size();
        if (table_.size() != n * n)
            throw InputError("structure constant table has " + std::to_string(table_.size()) +
                             " entries, expected " + std::to_string(n * n));
        for (std::size_t k = 0; k < table_.size(); ++k)
            if (table_[k].size() != n)
                throw InputError("product b_" + std::to_string(k / (n ? n : 1)) + "*b_" +
                                 std::to_string(k % (n ? n : 1)) + " has wrong length");
        if (unit_ && unit_->size() != n) throw InputError("unit vector has wrong length");
        sparse_.resize(table_.size());
        for (std::size_t k = 0; k < table_.size(); ++k)
            for (std::size_t c = 0; c < n; ++c)
                if (!field_.is_zero(table_[k][c])) sparse_[k].emplace_back(c, table_[k][c]);
    }

    const F& field() const { return field_; }
    std::size_t dim() const { return labels_.size(); }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(std::size_t i) const { return labels_[i]; }
    const Vec<F>& product(std::size_t i, std::size_t j) const { return table_[i * dim() + j]; }
    const std::optional<Vec<F>>& unit() const { return unit_; }
    bool is_unital() const { return unit_.has_value(); }

    Vec<F> basis(std::size_t i) const { return unit_vector(field_, dim(), i); }
    Vec<F> zero() const { return zero_vector(field_, dim()); }

    Vec<F> multiply(std::span<const value_type> a, std::span<const value_type> b) const {
        const std::size_t n = dim();
        Vec<F> out(n, field_.zero());
        for (std::size_t i = 0; i < n; ++i) {
            if (field_.is_zero(a[i])) continue;
            for (std::size_t j = 0; j < n; ++j) {
                if (field_.is_zero(b[j])) continue;
                const auto c = field_.mul(a[i], b[j]);
                for (const auto& [k, v] : sparse_[i * n + j]) out[k] = field_.add(out[k], field_.mul(c, v));
            }
        }
        return out;
    }

    /// Matrix of x -> a x.
    Mat<F> left_multiplication(std::span<const value_type> a) const {
        const std::size_t n = dim();
        Mat<F> m(n, n, field_.zero());
        for (std::size_t j = 0; j < n; ++j) m.set_column(j, multiply(a, basis(j)));
        return m;
    }

    /// Matrix of x -> x a.
    Mat<F> right_multiplication(std::span<const value_type> a) const {
        const std::size_t n = dim();
        Mat<F> m(n, n, field_.zero());
        for (std::size_t j = 0; j < n; ++j) m.set_column(j, multiply(basis(j), a));
        return m;
    }

    std::string format(std::span<const value_type> v) const {
        std::string s;
        for (std::size_t i = 0; i < dim(); ++i) {
            if (field_.is_zero(v[i])) continue;
            if (!s.empty()) s += " + ";
            if (v[i] != field_.one()) s += field_.to_string(v[i]) + "*";
            s += labels_[i];
        }
        return s.empty() ? "0" : s;
    }

  private:
    F field_;
    std::vector<std::string> labels_;
    std::vector<Vec<F>> table_;
    std::optional<Vec<F>> unit_;
    std::vector<std::vector<std::pair<std::size_t, value_type>>> sparse_;
};

template <Field F>
using AlgebraPtr = std::shared_ptr<const FDAlgebra<F>>;

template <Field F>
AlgebraPtr<F> share(FDAlgebra<F> a) {
    return std::make_shared<const FDAlgebra<F>>(std::move(a));
}

/// Associativity on basis triples and the unit law; reports the first failure.
template <Field F>
Validation validate_algebra(const FDAlgebra<F>& a) {
    const std::size_t n = a.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const auto& ij = a.product(i, j);
            for (std::size_t k = 0; k < n; ++k) {
                auto lhs = a.multiply(ij, a.basis(k));
                auto rhs = a.multiply(a.basis(i), a.product(j, k));
                if (lhs != rhs)
                    return Violation{"associativity", "(" + a.label(i) + "*" + a.label(j) + ")*" + a.label(k) +
                                                          " != " + a.label(i) + "*(" + a.label(j) + "*" +
                                                          a.label(k) + ") at basis triple (" + std::to_string(i) +
                                                          "," + std::to_string(j) + "," + std::to_string(k) + ")"};
            }
        }
    if (a.unit()) {
        for (std::size_t i = 0; i < n; ++i) {
            auto e = a.basis(i);
            if (a.multiply(*a.unit(), e) != e || a.multiply(e, *a.unit()) != e)
                return Violation{"unit", "claimed unit is not a two-sided identity on " + a.label(i)};
        }
    }
    return std::nullopt;
}

template <Field F>
bool is_commutative(const FDAlgebra<F>& a) {
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = i + 1; j < a.dim(); ++j)
            if (a.product(i, j) != a.product(j, i)) return false;
    return true;
}

/// A two-sided identity, found by solving u b_j = b_j = b_j u for all j.
template <Field F>
std::optional<Vec<F>> find_unit(const FDAlgebra<F>& a) {
    const F& f = a.field();
    const std::size_t n = a.dim();
    if (n == 0) return Vec<F>{};
    Mat<F> eqs(0, n, f.zero());
    Vec<F> rhs;
    for (std::size_t j = 0; j < n; ++j) {
        eqs = stack(eqs, a.right_multiplication(a.basis(j)));
        eqs = stack(eqs, a.left_multiplication(a.basis(j)));
        for (int side = 0; side < 2; ++side) {
            auto e = a.basis(j);
            rhs.insert(rhs.end(), e.begin(), e.end());
        }
    }
    auto u = solve(f, eqs, rhs);
    if (!u) return std::nullopt;
    for (std::size_t j = 0; j < n; ++j)
        if (a.multiply(*u, a.basis(j)) != a.basis(j) || a.multiply(a.basis(j), *u) != a.basis(j)) return std::nullopt;
    return u;
}

/// The same algebra with its unit recorded, if it has one.
template <Field F>
FDAlgebra<F> with_found_unit(const FDAlgebra<F>& a) {
    if (a.unit()) return a;
    std::vector<Vec<F>> table;
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j) table.push_back(a.product(i, j));
    return FDAlgebra<F>(a.field(), a.labels(), std::move(table), find_unit(a));
}

// ---------------------------------------------------------------------------
// Standard constructions

/// The field itself as a one-dimensional algebra.
template <Field F>
FDAlgebra<F> ground_field_algebra(const F& f) {
    return FDAlgebra<F>(f, {"1"}, {Vec<F>{f.one()}}, Vec<F>{f.one()});
}

/// M_n(F) on matrix units e_ij (row-major order), e_ij e_kl = delta_jk e_il.
template <Field F>
FDAlgebra<F> matrix_algebra(const F& f, std::size_t n) {
    const std::size_t d = n * n;
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) labels.push_back("e" + std::to_string(i + 1) + std::to_string(j + 1));
    std::vector<Vec<F>> table(d * d, zero_vector(f, d));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t l = 0; l < n; ++l) table[(i * n + j) * d + (j * n + l)][i * n + l] = f.one();
    Vec<F> unit = zero_vector(f, d);
    for (std::size_t i = 0; i < n; ++i) unit[i * n + i] = f.one();
    return FDAlgebra<F>(f, std::move(labels), std::move(table), std::move(unit));
}

/// F[u]/(monic polynomial) on the basis 1, u, ..., u^{deg-1}. `coeffs` lists
/// c_0..c_{deg-1} of u^deg + c_{deg-1} u^{deg-1} + ... + c_0.
template <Field F>
FDAlgebra<F> monogenic_algebra(const F& f, const std::vector<typename F::value_type>& coeffs,
                               const std::string& var = "u") {
    const std::size_t d = coeffs.size();
    if (d == 0) throw InputError("monogenic algebra needs a polynomial of degree at least 1");
    // multiplication-by-u matrix (companion)
    auto times_u = [&](const Vec<F>& v) {
        Vec<F> out(d, f.zero());
        for (std::size_t k = 0; k + 1 < d; ++k) out[k + 1] = v[k];
        const auto top = v[d - 1];
        for (std::size_t k = 0; k < d; ++k) out[k] = f.sub(out[k], f.mul(top, coeffs[k]));
        return out;
    };
    std::vector<Vec<F>> powers;  // u^0 .. u^{2d-2}
    powers.push_back(unit_vector(f, d, 0));
    for (std::size_t k = 1; k + 1 < 2 * d; ++k) powers.push_back(times_u(powers.back()));
    std::vector<std::string> labels;
    for (std::size_t k = 0; k < d; ++k)
        labels.push_back(k == 0 ? "1" : (k == 1 ? var : var + "^" + std::to_string(k)));
    std::vector<Vec<F>> table;
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) table.push_back(powers[i + j]);
    return FDAlgebra<F>(f, std::move(labels), std::move(table), unit_vector(f, d, 0));
}

/// Componentwise product A x B on the concatenated basis.
template <Field F>
FDAlgebra<F> product_algebra(const FDAlgebra<F>& a, const FDAlgebra<F>& b) {
    const F& f = a.field();
    const std::size_t n = a.dim(), m = b.dim(), d = n + m;
    std::vector<std::string> labels;
    for (const auto& l : a.labels()) labels.push_back("(" + l + ",0)");
    for (const auto& l : b.labels()) labels.push_back("(0," + l + ")");
    std::vector<Vec<F>> table(d * d, zero_vector(f, d));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) table[i * d + j][k] = a.product(i, j)[k];
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            for (std::size_t k = 0; k < m; ++k) table[(n + i) * d + n + j][n + k] = b.product(i, j)[k];
    std::optional<Vec<F>> unit;
    if (a.unit() && b.unit()) {
        unit = zero_vector(f, d);
        for (std::size_t k = 0; k < n; ++k) (*unit)[k] = (*a.unit())[k];
        for (std::size_t k = 0; k < m; ++k) (*unit)[n + k] = (*b.unit())[k];
    }
    return FDAlgebra<F>(f, std::move(labels), std::move(table), std::move(unit));
}

/// Structure constants of a subalgebra relative to its echelon basis.
template <Field F>
FDAlgebra<F> subalgebra(const FDAlgebra<F>& a, const Subspace<F>& s, std::vector<std::string> labels = {}) {
    const std::size_t d = s.dim();
    if (labels.empty())
        for (std::size_t i = 0; i < d; ++i) labels.push_back(a.format(s.basis_vector(i)));
    std::vector<Vec<F>> table;
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            auto p = a.multiply(s.basis().row(i), s.basis().row(j));
            if (!s.contains(p)) throw InputError("subspace is not closed under multiplication");
            table.push_back(s.coordinates(p));
        }
    std::optional<Vec<F>> unit;
    if (a.unit() && s.contains(*a.unit())) unit = s.coordinates(*a.unit());
    return FDAlgebra<F>(a.field(), std::move(labels), std::move(table), std::move(unit));
}

/// A / I for a two-sided ideal I, on the complement basis; also returns the
/// projection matrix A -> A/I.
template <Field F>
struct QuotientAlgebra {
    FDAlgebra<F> algebra;
    Mat<F> projection;
};

template <Field F>
QuotientAlgebra<F> quotient_algebra(const FDAlgebra<F>& a, const Subspace<F>& ideal) {
    auto idx = ideal.complement_indices();
    std::vector<std::string> labels;
    for (auto i : idx) labels.push_back("[" + a.label(i) + "]");
    std::vector<Vec<F>> table;
    for (auto i : idx)
        for (auto j : idx) table.push_back(ideal.quotient_coordinates(a.product(i, j)));
    std::optional<Vec<F>> unit;
    if (a.unit()) unit = ideal.quotient_coordinates(*a.unit());
    return {FDAlgebra<F>(a.field(), std::move(labels), std::move(table), std::move(unit)), ideal.quotient_map()};
}

}  // namespace sheafalg
