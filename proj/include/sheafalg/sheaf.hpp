#pragma once

// G-sheaves of rings over a finite discrete groupoid: one stalk algebra per
// unit and one ring isomorphism alpha(g): O_d(g) -> O_r(g) per arrow.
// alpha(g) is a dim O_r x dim O_d matrix whose columns are the images of the
// basis of O_d.

#include "sheafalg/groupoid.hpp"
#include "sheafalg/ideals.hpp"

namespace sheafalg {

template <Field F>
class GSheaf {
  public:
    GSheaf(FiniteGroupoid groupoid, std::vector<AlgebraPtr<F>> stalks, std::vector<Mat<F>> alpha)
        : groupoid_(std::move(groupoid)), stalks_(std::move(stalks)), alpha_(std::move(alpha)) {
        if (stalks_.size() != groupoid_.unit_count())
            throw InputError("sheaf needs one stalk per unit (" + std::to_string(groupoid_.unit_count()) + "), got " +
                             std::to_string(stalks_.size()));
        if (alpha_.size() != groupoid_.arrow_count())
            throw InputError("sheaf needs one alpha per arrow (" + std::to_string(groupoid_.arrow_count()) + "), got " +
                             std::to_string(alpha_.size()));
        for (std::size_t x = 1; x < stalks_.size(); ++x)
            if (!(stalks_[x]->field() == stalks_[0]->field()))
                throw InputError("all stalks must share one base field");
        for (std::size_t a = 0; a < alpha_.size(); ++a) {
            const auto rows = stalks_[groupoid_.dst(a)]->dim(), cols = stalks_[groupoid_.src(a)]->dim();
            if (alpha_[a].rows() != rows || alpha_[a].cols() != cols)
                throw InputError("alpha(" + groupoid_.arrow_id(a) + ") must be " + std::to_string(rows) + "x" +
                                 std::to_string(cols));
        }
    }

    const FiniteGroupoid& groupoid() const { return groupoid_; }
    const F& field() const { return stalks_.front()->field(); }
    const FDAlgebra<F>& stalk(std::size_t x) const { return *stalks_[x]; }
    const AlgebraPtr<F>& stalk_ptr(std::size_t x) const { return stalks_[x]; }
    const std::vector<AlgebraPtr<F>>& stalks() const { return stalks_; }
    const Mat<F>& alpha(std::size_t a) const { return alpha_[a]; }
    const std::vector<Mat<F>>& alphas() const { return alpha_; }

  private:
    FiniteGroupoid groupoid_;
    std::vector<AlgebraPtr<F>> stalks_;
    std::vector<Mat<F>> alpha_;
};

/// How each sheaf axiom is handled in the finite discrete setting.
struct AxiomStatus {
    std::string axiom;
    bool checked;  // false: holds automatically
    std::string note;
};

inline std::vector<AxiomStatus> sheaf_axiom_audit() {
    return {
        {"S1", true, "alpha of an identity arrow is the identity"},
        {"S2", false, "automatic: every map out of a finite discrete space is a local homeomorphism"},
        {"S3", true, "alpha(b) alpha(c) = alpha(bc) on composable pairs"},
        {"SR1", false, "automatic: addition is continuous on discrete stalks"},
        {"SR2", false, "automatic: multiplication is continuous on discrete stalks"},
        {"SR3", false, "automatic: the zero and unit sections are continuous"},
        {"SR4", true, "each alpha is a unital ring isomorphism"},
    };
}

template <Field F>
Validation validate_sheaf(const GSheaf<F>& o) {
    const auto& g = o.groupoid();
    const F& f = o.field();
    for (std::size_t x = 0; x < g.unit_count(); ++x) {
        if (auto v = validate_algebra(o.stalk(x)))
            return Violation{"stalk algebra", "stalk at " + g.unit_id(x) + ": " + v->message()};
        if (!o.stalk(x).is_unital()) return Violation{"stalk algebra", "stalk at " + g.unit_id(x) + " has no unit"};
    }
    for (std::size_t x = 0; x < g.unit_count(); ++x)
        if (o.alpha(g.unit_arrow(x)) != identity_matrix(f, o.stalk(x).dim()))
            return Violation{"S1", "alpha(" + g.arrow_id(g.unit_arrow(x)) + ") is not the identity"};
    for (std::size_t a = 0; a < g.arrow_count(); ++a)
        if (auto why = ring_iso_failure(o.stalk(g.src(a)), o.stalk(g.dst(a)), o.alpha(a)))
            return Violation{"SR4", "alpha(" + g.arrow_id(a) + "): " + *why};
    for (std::size_t b = 0; b < g.arrow_count(); ++b)
        for (std::size_t c = 0; c < g.arrow_count(); ++c)
            if (auto bc = g.compose(b, c))
                if (mat_mul(f, o.alpha(b), o.alpha(c)) != o.alpha(*bc))
                    return Violation{"S3", "alpha(" + g.arrow_id(b) + ") alpha(" + g.arrow_id(c) + ") != alpha(" +
                                               g.arrow_id(*bc) + ")"};
    for (std::size_t a = 0; a < g.arrow_count(); ++a)
        if (mat_mul(f, o.alpha(g.inverse(a)), o.alpha(a)) != identity_matrix(f, o.stalk(g.src(a)).dim()))
            throw InvariantViolation("alpha(g^-1) != alpha(g)^-1 although S1 and S3 hold");
    return std::nullopt;
}

/// Delta(A): every stalk A, every alpha the identity.
template <Field F>
GSheaf<F> constant_sheaf(const FiniteGroupoid& g, const AlgebraPtr<F>& a) {
    if (!a->is_unital()) throw InputError("constant sheaf needs a unital algebra");
    return GSheaf<F>(g, std::vector<AlgebraPtr<F>>(g.unit_count(), a),
                     std::vector<Mat<F>>(g.arrow_count(), identity_matrix(a->field(), a->dim())));
}

/// ker O = {g in Iso(G) : alpha(g) = id}, checked to be a subgroupoid.
template <Field F>
std::vector<std::size_t> ker_sheaf(const GSheaf<F>& o) {
    const auto& g = o.groupoid();
    std::vector<std::size_t> out;
    for (auto a : iso_arrows(g))
        if (o.alpha(a) == identity_matrix(o.field(), o.stalk(g.src(a)).dim())) out.push_back(a);
    auto member = [&](std::size_t a) { return std::binary_search(out.begin(), out.end(), a); };
    for (std::size_t x = 0; x < g.unit_count(); ++x)
        if (!member(g.unit_arrow(x))) throw InvariantViolation("ker O misses an identity arrow");
    for (auto a : out) {
        if (!member(g.inverse(a))) throw InvariantViolation("ker O is not closed under inverse");
        for (auto b : out)
            if (auto ab = g.compose(a, b); ab && !member(*ab))
                throw InvariantViolation("ker O is not closed under composition");
    }
    return out;
}

/// Int(ker O) = G^(0); the interior is the set itself here.
template <Field F>
bool int_ker_is_units(const GSheaf<F>& o) {
    return ker_sheaf(o).size() == o.groupoid().unit_count();
}

template <Field F>
bool stalks_commutative(const GSheaf<F>& o) {
    for (const auto& s : o.stalks())
        if (!is_commutative(*s)) return false;
    return true;
}

/// A sheaf-level decision with the offending unit and element, if any.
template <Field F>
struct SheafDecision {
    bool value;
    std::optional<std::size_t> unit;
    std::optional<Vec<F>> witness;
};

/// Every stalk a field. Exhaustive over F_p. Over Q only one-dimensional
/// stalks (and non-commutative ones) are decided; otherwise nullopt.
template <Field F>
std::optional<SheafDecision<F>> is_sheaf_of_fields(const GSheaf<F>& o, std::uint64_t order_cap = std::uint64_t{1} << 16) {
    for (std::size_t x = 0; x < o.groupoid().unit_count(); ++x) {
        const auto& s = o.stalk(x);
        if constexpr (F::is_finite) {
            auto d = is_field_algebra(s, order_cap);
            if (!d.value) return SheafDecision<F>{false, x, d.witness};
        } else {
            if (s.dim() == 1) continue;
            if (!is_commutative(s)) return SheafDecision<F>{false, x, std::nullopt};
            return std::nullopt;
        }
    }
    return SheafDecision<F>{true, std::nullopt, std::nullopt};
}

/// Every stalk has no central idempotents besides 0 and 1 (|stalk| <= 2^12).
template <FiniteField F>
SheafDecision<F> is_sheaf_of_indecomposables(const GSheaf<F>& o, std::uint64_t order_cap = std::uint64_t{1} << 12) {
    for (std::size_t x = 0; x < o.groupoid().unit_count(); ++x) {
        auto d = is_indecomposable(o.stalk(x), order_cap);
        if (!d.value) return {false, x, d.witness};
    }
    return {true, std::nullopt, std::nullopt};
}

}  // namespace sheafalg
