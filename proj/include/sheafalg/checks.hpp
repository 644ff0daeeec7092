#pragma once

// Property checks on Gamma_c(G, O) and the dictionary statements relating
// them to the groupoid and the sheaf.
//
// Finite discrete conventions used throughout: "dense orbit" means an orbit
// equal to the whole unit space, Int is the identity on subsets, and a finite
// dimensional algebra is primitive exactly when it is simple (a primitive
// Artinian ring is simple by Wedderburn).

#include "sheafalg/convolution.hpp"
#include "sheafalg/meataxe.hpp"
#include "sheafalg/report.hpp"

namespace sheafalg {

namespace detail {

inline constexpr const char* kPrimitiveNote =
    "primitivity decided as simplicity: a left primitive finite-dimensional algebra is simple";
inline constexpr const char* kDenseOrbitNote = "finite discrete unit space: an orbit is dense iff it is everything";

template <Field F>
std::optional<bool> fields_hypothesis(const GSheaf<F>& o) {
    auto d = is_sheaf_of_fields(o);
    if (!d) return std::nullopt;
    return d->value;
}

template <Field F>
Report property_report(std::string check, std::string key, bool value) {
    Report r;
    r.check = std::move(check);
    r.lhs[key] = value;
    r.rhs[key] = true;
    r.status = value ? Status::pass : Status::fail;
    return r;
}

}  // namespace detail

// ---- single properties (pass iff the property holds) -----------------------

template <FiniteField F>
Report check_simple(const ConvAlgebra<F>& c, const Caps& caps = {}) {
    auto d = is_simple(c.algebra(), caps);
    auto r = detail::property_report<F>("simple", "simple", d.value);
    if (d.witness) {
        r.witnesses["proper_ideal_generator"] = c.algebra().format(*d.witness);
        r.witnesses["ideal_dim"] = ideal_generated(c.algebra(), {*d.witness}, Side::two_sided).dim();
    }
    return r;
}

template <FiniteField F>
Report check_primitive(const ConvAlgebra<F>& c, const Caps& caps = {}) {
    auto r = check_simple(c, caps);
    r.check = "primitive";
    r.lhs = Json{{"primitive", r.lhs["simple"]}};
    r.rhs = Json{{"primitive", true}};
    r.notes.push_back(detail::kPrimitiveNote);
    return r;
}

template <Field F>
Report check_semiprimitive(const ConvAlgebra<F>& c, const Caps& caps = {}) {
    auto j = jacobson_radical(c.algebra_ptr(), caps);
    Report r;
    r.check = "semiprimitive";
    r.lhs["radical_dim"] = j.dim();
    r.rhs["radical_dim"] = 0;
    r.status = j.is_zero() ? Status::pass : Status::fail;
    if (!j.is_zero()) r.witnesses["radical_element"] = c.algebra().format(j.basis_vector(0));
    return r;
}

template <FiniteField F>
Report check_vnr_diagonal(const ConvAlgebra<F>& c, const Caps& caps = {}) {
    auto d = is_von_neumann_regular(diagonal_algebra(c), caps.order);
    auto r = detail::property_report<F>("vnr-diagonal", "diagonal_vnr", d.value);
    if (d.witness) r.witnesses["non_regular_element"] = c.algebra().format(c.diagonal().from_coordinates(*d.witness));
    return r;
}

template <Field F>
Report check_masa(const ConvAlgebra<F>& c) {
    const auto cen = centralizer_of_diagonal(c);
    const auto diag = c.diagonal();
    auto r = detail::property_report<F>("masa", "diagonal_masa", cen == diag);
    r.lhs["centralizer_dim"] = cen.dim();
    r.lhs["diagonal_dim"] = diag.dim();
    if (!(cen == diag))
        for (std::size_t k = 0; k < cen.dim(); ++k)
            if (!diag.contains(cen.basis().row(k))) {
                r.witnesses["centralizing_off_diagonal"] = c.algebra().format(cen.basis_vector(k));
                break;
            }
    return r;
}

inline Report check_minimal(const FiniteGroupoid& g) {
    auto r = detail::property_report<PrimeField>("minimal", "minimal", is_minimal(g));
    r.lhs["orbit_count"] = orbits(g).size();
    return r;
}

inline Report check_effective(const FiniteGroupoid& g) {
    auto r = detail::property_report<PrimeField>("effective", "effective", is_effective(g));
    for (auto a : iso_arrows(g))
        if (!g.is_identity(a)) {
            r.witnesses["nontrivial_isotropy"] = g.arrow_id(a);
            break;
        }
    return r;
}

template <Field F>
Report check_int_ker(const GSheaf<F>& o) {
    auto ker = ker_sheaf(o);
    auto r = detail::property_report<F>("int-ker", "int_ker_is_units", ker.size() == o.groupoid().unit_count());
    Json ids = Json::array();
    for (auto a : ker) ids.push_back(o.groupoid().arrow_id(a));
    r.lhs["ker"] = ids;
    return r;
}

// ---- dictionary statements -------------------------------------------------

/// Diagonal masa <=> Int(ker O) = G^(0), for sheaves of integral domains.
template <Field F>
Report check_masa_criterion(const ConvAlgebra<F>& c) {
    Report r;
    r.check = "masa-criterion";
    r.hypothesis("commutative_stalks", stalks_commutative(c.sheaf()));
    r.hypothesis("stalks_integral_domains", detail::fields_hypothesis(c.sheaf()));
    const bool masa = is_diagonal_masa(c);
    const bool ik = int_ker_is_units(c.sheaf());
    r.lhs["diagonal_masa"] = masa;
    r.rhs["int_ker_is_units"] = ik;
    r.notes.push_back("finite stalks: integral domain iff field");
    return r.conclude(masa == ik);
}

/// The centralizer of the diagonal is supported on Iso(G); for stalks that
/// are domains it is exactly the span of sections supported on ker O.
template <Field F>
Report check_centralizer_support(const ConvAlgebra<F>& c) {
    Report r;
    r.check = "centralizer-support";
    r.hypothesis("commutative_stalks", stalks_commutative(c.sheaf()));
    const auto cen = centralizer_of_diagonal(c);
    const auto iso = c.supported_on(iso_arrows(c.groupoid()));
    const bool in_iso = iso.contains(cen);
    r.lhs["centralizer_in_iso"] = in_iso;
    r.rhs["centralizer_in_iso"] = true;
    bool ok = in_iso;
    if (auto fields = detail::fields_hypothesis(c.sheaf()); fields && *fields) {
        const bool eq = cen == c.supported_on(ker_sheaf(c.sheaf()));
        r.lhs["centralizer_equals_ker_sections"] = eq;
        r.rhs["centralizer_equals_ker_sections"] = true;
        ok = ok && eq;
    }
    if (!in_iso)
        for (std::size_t k = 0; k < cen.dim(); ++k)
            if (!iso.contains(cen.basis().row(k))) {
                r.witnesses["off_isotropy"] = c.algebra().format(cen.basis_vector(k));
                break;
            }
    return r.conclude(ok);
}

/// Every nonzero two-sided ideal meets the centralizer of the diagonal.
template <FiniteField F>
Report check_uniqueness(const ConvAlgebra<F>& c, const Caps& caps = {}) {
    Report r;
    r.check = "uniqueness";
    const auto cen = centralizer_of_diagonal(c);
    const auto ideals = enumerate_two_sided_ideals(c.algebra(), caps);
    std::size_t checked = 0, meeting = 0;
    for (const auto& i : ideals) {
        if (i.is_zero()) continue;
        ++checked;
        if (!i.intersect(cen).is_zero())
            ++meeting;
        else if (!r.witnesses.contains("ideal_missing_centralizer"))
            r.witnesses["ideal_missing_centralizer"] = c.algebra().format(i.basis_vector(0));
    }
    r.lhs["nonzero_ideals"] = checked;
    r.rhs["ideals_meeting_centralizer"] = meeting;
    return r.conclude(checked == meeting);
}

/// simple <=> (minimal and Int(ker O) = G^(0)), for sheaves of fields.
template <FiniteField F>
Report check_simplelife(const ConvAlgebra<F>& c, const Caps& caps = {}) {
    Report r;
    r.check = "simplelife";
    r.hypothesis("sheaf_of_fields", detail::fields_hypothesis(c.sheaf()));
    const auto simple = is_simple(c.algebra(), caps);
    const bool minimal = is_minimal(c.groupoid());
    const bool ik = int_ker_is_units(c.sheaf());
    r.lhs["simple"] = simple.value;
    r.rhs["minimal"] = minimal;
    r.rhs["int_ker_is_units"] = ik;
    r.rhs["minimal_and_int_ker"] = minimal && ik;
    if (simple.witness) r.witnesses["proper_ideal_generator"] = c.algebra().format(*simple.witness);
    return r.conclude(simple.value == (minimal && ik));
}

/// primitive <=> dense orbit, when the diagonal is a masa in a sheaf of fields.
template <FiniteField F>
Report check_primitivity(const ConvAlgebra<F>& c, const Caps& caps = {}) {
    Report r;
    r.check = "primitivity";
    r.hypothesis("sheaf_of_fields", detail::fields_hypothesis(c.sheaf()));
    r.hypothesis("diagonal_masa", is_diagonal_masa(c));
    const auto simple = is_simple(c.algebra(), caps);
    const bool dense = is_minimal(c.groupoid());
    r.lhs["primitive"] = simple.value;
    r.rhs["dense_orbit"] = dense;
    r.notes.push_back(detail::kPrimitiveNote);
    r.notes.push_back(detail::kDenseOrbitNote);
    return r.conclude(simple.value == dense);
}

/// J(Gamma_c) = 0 when the stalks are fields and the diagonal is a masa.
template <Field F>
Report check_semiprimitivity(const ConvAlgebra<F>& c, const Caps& caps = {}) {
    Report r;
    r.check = "semiprimitivity";
    r.hypothesis("sheaf_of_fields", detail::fields_hypothesis(c.sheaf()));
    r.hypothesis("diagonal_masa", is_diagonal_masa(c));
    const auto j = jacobson_radical(c.algebra_ptr(), caps);
    r.lhs["radical_dim"] = j.dim();
    r.rhs["radical_dim"] = 0;
    if (!j.is_zero()) r.witnesses["radical_element"] = c.algebra().format(j.basis_vector(0));
    return r.conclude(j.is_zero());
}

/// Diagonal von Neumann regular <=> every stalk a field, for sheaves of
/// commutative indecomposable stalks.
template <FiniteField F>
Report check_vnr_dictionary(const ConvAlgebra<F>& c, const Caps& caps = {}) {
    Report r;
    r.check = "vnr-dictionary";
    r.hypothesis("commutative_stalks", stalks_commutative(c.sheaf()));
    r.hypothesis("indecomposable_stalks", is_sheaf_of_indecomposables(c.sheaf()).value);
    const auto vnr = is_von_neumann_regular(diagonal_algebra(c), caps.order);
    const auto fields = is_sheaf_of_fields(c.sheaf(), caps.order);
    r.lhs["diagonal_vnr"] = vnr.value;
    r.rhs["stalks_fields"] = fields->value;
    if (vnr.witness) r.witnesses["non_regular_element"] = c.algebra().format(c.diagonal().from_coordinates(*vnr.witness));
    if (fields->witness)
        r.witnesses["non_invertible_stalk_element"] =
            c.sheaf().stalk(*fields->unit).format(*fields->witness) + " at " + c.groupoid().unit_id(*fields->unit);
    return r.conclude(vnr.value == fields->value);
}

}  // namespace sheafalg
