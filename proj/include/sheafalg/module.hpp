#pragma once

// Finite-dimensional left modules over structure-constant algebras, given by
// one action matrix per algebra basis element.

#include "sheafalg/ideals.hpp"

namespace sheafalg {

template <Field F>
class AlgebraModule {
  public:
    using value_type = typename F::value_type;

    AlgebraModule(AlgebraPtr<F> algebra, std::size_t dim, std::vector<Mat<F>> action)
        : algebra_(std::move(algebra)), dim_(dim), action_(std::move(action)) {
        if (action_.size() != algebra_->dim())
            throw InputError("module needs one action matrix per algebra basis element (" +
                             std::to_string(algebra_->dim()) + "), got " + std::to_string(action_.size()));
        for (std::size_t i = 0; i < action_.size(); ++i)
            if (action_[i].rows() != dim_ || action_[i].cols() != dim_)
                throw InputError("action matrix for " + algebra_->label(i) + " is not " + std::to_string(dim_) + "x" +
                                 std::to_string(dim_));
    }

    const FDAlgebra<F>& algebra() const { return *algebra_; }
    const AlgebraPtr<F>& algebra_ptr() const { return algebra_; }
    const F& field() const { return algebra_->field(); }
    std::size_t dim() const { return dim_; }
    const Mat<F>& action(std::size_t i) const { return action_[i]; }
    const std::vector<Mat<F>>& actions() const { return action_; }

    /// Matrix by which an algebra element acts.
    Mat<F> act(std::span<const value_type> a) const {
        const F& f = field();
        Mat<F> m = zero_matrix(f, dim_, dim_);
        for (std::size_t i = 0; i < action_.size(); ++i)
            if (!f.is_zero(a[i])) m = mat_add(f, m, mat_scale(f, a[i], action_[i]));
        return m;
    }

  private:
    AlgebraPtr<F> algebra_;
    std::size_t dim_;
    std::vector<Mat<F>> action_;
};

/// rho(b_i) rho(b_j) = rho(b_i b_j) on all basis pairs, and rho(1) = I.
template <Field F>
Validation validate_module(const AlgebraModule<F>& m) {
    const auto& a = m.algebra();
    const F& f = a.field();
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j)
            if (mat_mul(f, m.action(i), m.action(j)) != m.act(a.product(i, j)))
                return Violation{"module action", "rho(" + a.label(i) + ")rho(" + a.label(j) + ") != rho(" +
                                                      a.label(i) + "*" + a.label(j) + ")"};
    if (a.unit() && m.act(*a.unit()) != identity_matrix(f, m.dim()))
        return Violation{"unitary", "the unit does not act as the identity"};
    return std::nullopt;
}

template <Field F>
AlgebraModule<F> regular_module(const AlgebraPtr<F>& a) {
    std::vector<Mat<F>> act;
    for (std::size_t i = 0; i < a->dim(); ++i) act.push_back(a->left_multiplication(a->basis(i)));
    return AlgebraModule<F>(a, a->dim(), std::move(act));
}

template <Field F>
AlgebraModule<F> zero_module(const AlgebraPtr<F>& a) {
    return AlgebraModule<F>(a, 0, std::vector<Mat<F>>(a->dim(), Mat<F>(0, 0, a->field().zero())));
}

template <Field F>
bool is_submodule(const AlgebraModule<F>& m, const Subspace<F>& s) {
    for (const auto& rho : m.actions())
        for (std::size_t r = 0; r < s.dim(); ++r)
            if (!s.contains(mat_vec(m.field(), rho, s.basis().row(r)))) return false;
    return true;
}

/// The submodule as a module in its own right, on its echelon basis.
template <Field F>
AlgebraModule<F> submodule(const AlgebraModule<F>& m, const Subspace<F>& s) {
    if (!is_submodule(m, s)) throw InputError("subspace is not a submodule");
    const F& f = m.field();
    std::vector<Mat<F>> act;
    for (const auto& rho : m.actions()) {
        Mat<F> r(s.dim(), s.dim(), f.zero());
        for (std::size_t j = 0; j < s.dim(); ++j) r.set_column(j, s.coordinates(mat_vec(f, rho, s.basis().row(j))));
        act.push_back(std::move(r));
    }
    return AlgebraModule<F>(m.algebra_ptr(), s.dim(), std::move(act));
}

/// M / N on the complement basis of N.
template <Field F>
AlgebraModule<F> quotient_module(const AlgebraModule<F>& m, const Subspace<F>& n) {
    if (!is_submodule(m, n)) throw InputError("quotient by a subspace that is not a submodule");
    const F& f = m.field();
    const Mat<F> proj = n.quotient_map();
    const auto idx = n.complement_indices();
    std::vector<Mat<F>> act;
    for (const auto& rho : m.actions()) {
        Mat<F> r(idx.size(), idx.size(), f.zero());
        for (std::size_t j = 0; j < idx.size(); ++j)
            r.set_column(j, mat_vec(f, proj, mat_vec(f, rho, unit_vector(f, m.dim(), idx[j]))));
        act.push_back(std::move(r));
    }
    return AlgebraModule<F>(m.algebra_ptr(), idx.size(), std::move(act));
}

template <Field F>
AlgebraModule<F> direct_sum(const AlgebraModule<F>& a, const AlgebraModule<F>& b) {
    if (a.algebra_ptr() != b.algebra_ptr() && !(a.algebra().labels() == b.algebra().labels()))
        throw InputError("direct sum of modules over different algebras");
    const F& f = a.field();
    const std::size_t n = a.dim() + b.dim();
    std::vector<Mat<F>> act;
    for (std::size_t i = 0; i < a.actions().size(); ++i) {
        Mat<F> r(n, n, f.zero());
        for (std::size_t p = 0; p < a.dim(); ++p)
            for (std::size_t q = 0; q < a.dim(); ++q) r(p, q) = a.action(i)(p, q);
        for (std::size_t p = 0; p < b.dim(); ++p)
            for (std::size_t q = 0; q < b.dim(); ++q) r(a.dim() + p, a.dim() + q) = b.action(i)(p, q);
        act.push_back(std::move(r));
    }
    return AlgebraModule<F>(a.algebra_ptr(), n, std::move(act));
}

/// Smallest submodule containing `vecs`.
template <Field F>
Subspace<F> submodule_generated(const AlgebraModule<F>& m, const std::vector<Vec<F>>& vecs) {
    const F& f = m.field();
    EchelonBuilder<F> builder(f, m.dim());
    std::deque<Vec<F>> queue;
    for (const auto& v : vecs) {
        if (v.size() != m.dim()) throw InputError("vector of wrong dimension for module");
        if (builder.insert(v)) queue.push_back(v);
    }
    while (!queue.empty()) {
        auto v = std::move(queue.front());
        queue.pop_front();
        for (const auto& rho : m.actions()) {
            auto w = mat_vec(f, rho, v);
            if (builder.insert(w)) queue.push_back(std::move(w));
        }
    }
    return builder.subspace();
}

/// M != 0 and every projective point generates M. Witness: a vector
/// generating a proper submodule.
template <FiniteField F>
Decision<F> is_simple_module(const AlgebraModule<F>& m, const Caps& caps = {}) {
    if (m.dim() == 0) return {false, std::nullopt};
    std::optional<Vec<F>> witness;
    for_each_projective_point(Subspace<F>::full(m.field(), m.dim()), caps.projective_points, [&](const Vec<F>& v) {
        if (!submodule_generated(m, {v}).is_full()) {
            witness = v;
            return false;
        }
        return true;
    });
    return {!witness.has_value(), witness};
}

/// {a in A : a M = 0}: the kernel of a -> rho(a). Always a two-sided ideal;
/// this is checked.
template <Field F>
Subspace<F> annihilator(const AlgebraModule<F>& m) {
    const auto& a = m.algebra();
    const F& f = a.field();
    if (m.dim() == 0) return Subspace<F>::full(f, a.dim());
    Mat<F> flat(m.dim() * m.dim(), a.dim(), f.zero());
    for (std::size_t i = 0; i < a.dim(); ++i) flat.set_column(i, m.action(i).data());
    auto ann = Subspace<F>::row_space(f, kernel(f, flat));
    if (!is_two_sided_ideal(a, ann)) throw InvariantViolation("annihilator is not a two-sided ideal");
    return ann;
}

/// Basis of Hom_A(M, N) as dim N x dim M matrices.
template <Field F>
std::vector<Mat<F>> hom_space(const AlgebraModule<F>& m, const AlgebraModule<F>& n) {
    const F& f = m.field();
    const std::size_t rows = n.dim(), cols = m.dim(), unknowns = rows * cols;
    if (unknowns == 0) return {};
    // X rho_M(b) - rho_N(b) X = 0; unknown X(r, c) at index r * cols + c.
    Mat<F> eqs(0, unknowns, f.zero());
    for (std::size_t i = 0; i < m.actions().size(); ++i) {
        const auto& rm = m.action(i);
        const auto& rn = n.action(i);
        Mat<F> block(unknowns, unknowns, f.zero());
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t c = 0; c < cols; ++c) {
                const std::size_t eq = r * cols + c;
                // (X rm)(r,c) = sum_k X(r,k) rm(k,c)
                for (std::size_t k = 0; k < cols; ++k) block(eq, r * cols + k) = f.add(block(eq, r * cols + k), rm(k, c));
                // (rn X)(r,c) = sum_k rn(r,k) X(k,c)
                for (std::size_t k = 0; k < rows; ++k) block(eq, k * cols + c) = f.sub(block(eq, k * cols + c), rn(r, k));
            }
        eqs = stack(eqs, block);
    }
    Mat<F> k = eqs.rows() == 0 ? identity_matrix(f, unknowns) : kernel(f, eqs);
    std::vector<Mat<F>> out;
    for (std::size_t s = 0; s < k.rows(); ++s) {
        Mat<F> x(rows, cols, f.zero());
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t c = 0; c < cols; ++c) x(r, c) = k(s, r * cols + c);
        out.push_back(std::move(x));
    }
    return out;
}

/// A linear map phi: M -> N (dim N x dim M) commuting with every action matrix.
template <Field F>
bool is_module_hom(const AlgebraModule<F>& m, const AlgebraModule<F>& n, const Mat<F>& phi) {
    const F& f = m.field();
    if (phi.rows() != n.dim() || phi.cols() != m.dim()) return false;
    for (std::size_t i = 0; i < m.actions().size(); ++i)
        if (mat_mul(f, phi, m.action(i)) != mat_mul(f, n.action(i), phi)) return false;
    return true;
}

}  // namespace sheafalg
