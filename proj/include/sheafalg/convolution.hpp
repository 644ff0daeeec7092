#pragma once

// The convolution algebra Gamma_c(G, O) of a finite groupoid with
// coefficients in a G-sheaf. Basis: a delta_g for g an arrow and a running
// over the basis of O_r(g), labelled "a@g". On point masses
//   (a delta_b)(c delta_e) = (a alpha_b(c)) delta_be   if d(b) = r(e), else 0.

#include "sheafalg/bisection.hpp"
#include "sheafalg/sheaf.hpp"

namespace sheafalg {

template <Field F>
class ConvAlgebra {
  public:
    using value_type = typename F::value_type;

    explicit ConvAlgebra(GSheaf<F> sheaf) : sheaf_(std::move(sheaf)) {
        const auto& g = sheaf_.groupoid();
        const F& f = sheaf_.field();
        std::vector<std::string> labels;
        for (std::size_t a = 0; a < g.arrow_count(); ++a) {
            offset_.push_back(labels.size());
            const auto& s = sheaf_.stalk(g.dst(a));
            for (std::size_t i = 0; i < s.dim(); ++i) {
                labels.push_back(s.label(i) + "@" + g.arrow_id(a));
                arrow_of_.push_back(a);
            }
        }
        offset_.push_back(labels.size());
        const std::size_t n = labels.size();
        std::vector<Vec<F>> table(n * n, zero_vector(f, n));
        for (std::size_t b = 0; b < g.arrow_count(); ++b)
            for (std::size_t e = 0; e < g.arrow_count(); ++e) {
                auto be = g.compose(b, e);
                if (!be) continue;
                const auto& rb = sheaf_.stalk(g.dst(b));
                const auto& re = sheaf_.stalk(g.dst(e));
                for (std::size_t j = 0; j < re.dim(); ++j) {
                    const auto moved = sheaf_.alpha(b).column(j);
                    for (std::size_t i = 0; i < rb.dim(); ++i) {
                        const auto prod = rb.multiply(rb.basis(i), moved);
                        auto& cell = table[(offset_[b] + i) * n + offset_[e] + j];
                        for (std::size_t k = 0; k < rb.dim(); ++k) cell[offset_[*be] + k] = prod[k];
                    }
                }
            }
        Vec<F> unit = zero_vector(f, n);
        for (std::size_t x = 0; x < g.unit_count(); ++x) {
            const auto& one = *sheaf_.stalk(x).unit();
            const auto off = offset_[g.unit_arrow(x)];
            for (std::size_t k = 0; k < one.size(); ++k) unit[off + k] = one[k];
        }
        algebra_ = share(FDAlgebra<F>(f, std::move(labels), std::move(table), std::move(unit)));
    }

    const GSheaf<F>& sheaf() const { return sheaf_; }
    const FiniteGroupoid& groupoid() const { return sheaf_.groupoid(); }
    const F& field() const { return sheaf_.field(); }
    const FDAlgebra<F>& algebra() const { return *algebra_; }
    const AlgebraPtr<F>& algebra_ptr() const { return algebra_; }
    std::size_t dim() const { return algebra_->dim(); }

    /// First basis index of the block of arrow a.
    std::size_t offset(std::size_t a) const { return offset_[a]; }
    std::size_t arrow_of(std::size_t basis_index) const { return arrow_of_[basis_index]; }

    /// a delta_g for a in O_r(g).
    Vec<F> point_mass(std::size_t arrow, std::span<const value_type> a) const {
        Vec<F> out = algebra_->zero();
        for (std::size_t k = 0; k < a.size(); ++k) out[offset_[arrow] + k] = a[k];
        return out;
    }

    /// f(g) as an element of O_r(g).
    Vec<F> value_at(std::span<const value_type> fn, std::size_t arrow) const {
        return Vec<F>(fn.begin() + static_cast<std::ptrdiff_t>(offset_[arrow]),
                      fn.begin() + static_cast<std::ptrdiff_t>(offset_[arrow + 1]));
    }

    /// The characteristic function of a bisection: sum of 1_r(g) delta_g.
    Vec<F> chi(const Bisection& u) const {
        Vec<F> out = algebra_->zero();
        for (auto a : u) {
            const auto& one = *sheaf_.stalk(groupoid().dst(a)).unit();
            for (std::size_t k = 0; k < one.size(); ++k) out[offset_[a] + k] = one[k];
        }
        return out;
    }

    /// Gamma_c(G^(0), O): elements supported on identity arrows.
    Subspace<F> diagonal() const { return supported_on(unit_arrows()); }

    /// span{a delta_g : g in arrows}.
    Subspace<F> supported_on(const std::vector<std::size_t>& arrows) const {
        std::vector<Vec<F>> gens;
        for (auto a : arrows)
            for (std::size_t k = offset_[a]; k < offset_[a + 1]; ++k) gens.push_back(algebra_->basis(k));
        return Subspace<F>::span(field(), dim(), gens);
    }

    /// Arrows on which f is nonzero.
    std::vector<std::size_t> support(std::span<const value_type> fn) const {
        std::vector<std::size_t> out;
        for (std::size_t a = 0; a < groupoid().arrow_count(); ++a)
            if (!is_zero_vector(field(), value_at(fn, a))) out.push_back(a);
        return out;
    }

  private:
    std::vector<std::size_t> unit_arrows() const {
        std::vector<std::size_t> out;
        for (std::size_t x = 0; x < groupoid().unit_count(); ++x) out.push_back(groupoid().unit_arrow(x));
        std::sort(out.begin(), out.end());
        return out;
    }

    GSheaf<F> sheaf_;
    std::vector<std::size_t> offset_;
    std::vector<std::size_t> arrow_of_;
    AlgebraPtr<F> algebra_;
};

/// Gamma_c(G, O), validated.
template <Field F>
ConvAlgebra<F> build_conv_algebra(const GSheaf<F>& sheaf) {
    if (auto v = validate_groupoid(sheaf.groupoid())) throw InputError("groupoid: " + v->message());
    if (auto v = validate_sheaf(sheaf)) throw InputError("sheaf: " + v->message());
    ConvAlgebra<F> c(sheaf);
    if (auto v = validate_algebra(c.algebra()))
        throw InvariantViolation("convolution algebra fails validation: " + v->message());
    return c;
}

/// The diagonal as an algebra in its own right.
template <Field F>
FDAlgebra<F> diagonal_algebra(const ConvAlgebra<F>& c) {
    auto d = c.diagonal();
    std::vector<std::string> labels;
    for (std::size_t k = 0; k < d.dim(); ++k) labels.push_back(c.algebra().label(d.pivots()[k]));
    return subalgebra(c.algebra(), d, std::move(labels));
}

template <Field F>
Subspace<F> centralizer_of_diagonal(const ConvAlgebra<F>& c) {
    return centralizer(c.algebra(), c.diagonal());
}

template <Field F>
bool is_diagonal_masa(const ConvAlgebra<F>& c) {
    return centralizer_of_diagonal(c) == c.diagonal();
}

}  // namespace sheafalg
