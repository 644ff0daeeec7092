#pragma once

// The fixture catalog: small groupoids, sheaves and actions together with the
// values every check is expected to reproduce. Each expected value names the
// independent computation that established it.

#include <functional>
#include <variant>

#include "sheafalg/induction.hpp"
#include "sheafalg/partial_action.hpp"
#include "sheafalg/pierce.hpp"

namespace sheafalg {

// ---- standard building blocks -------------------------------------------------

/// F_4 = F_2[w]/(w^2 + w + 1).
inline FDAlgebra<PrimeField> f4_algebra() { return monogenic_algebra(PrimeField(2), {1, 1}, "w"); }

/// Frobenius w -> w^2 = w + 1 on the basis 1, w.
inline Mat<PrimeField> frobenius_matrix() {
    return from_columns(PrimeField(2), 2, {Vec<PrimeField>{1, 0}, Vec<PrimeField>{1, 1}});
}

/// One-object Z/2 with stalk F_4 and the generator acting by Frobenius.
inline GSheaf<PrimeField> gal_sheaf() {
    auto g = group_groupoid(cyclic_group(2));
    const PrimeField f(2);
    std::vector<Mat<PrimeField>> alpha(g.arrow_count());
    for (std::size_t a = 0; a < g.arrow_count(); ++a)
        alpha[a] = g.is_identity(a) ? identity_matrix(f, 2) : frobenius_matrix();
    return GSheaf<PrimeField>(g, {share(f4_algebra())}, alpha);
}

/// Constant sheaf of F_2[u]/(u^2).
inline GSheaf<PrimeField> dual_sheaf(const FiniteGroupoid& g) {
    return constant_sheaf(g, share(monogenic_algebra(PrimeField(2), {0, 0})));
}

template <Field F>
GSheaf<F> delta_sheaf(const FiniteGroupoid& g, const F& f) {
    return constant_sheaf(g, share(ground_field_algebra(f)));
}

inline FiniteGroupoid mixed_groupoid() {
    return disjoint_union(pair_groupoid(2), group_groupoid(cyclic_group(2), "3"));
}

inline SpaceAction swap_action() {
    return group_space_action(cyclic_group(2), {"a", "b"}, {{0, 1}, {1, 0}});
}

inline SpaceAction trivial_z2_action() { return group_space_action(cyclic_group(2), {"a"}, {{0}, {0}}); }

inline PartialGroupAction pswap_action() {
    return {cyclic_group(2), {"a", "b", "c"}, {{0, 1, 2}, {1, 0, -1}}};
}

inline PartialGroupAction global_swap_action() { return {cyclic_group(2), {"a", "b"}, {{0, 1}, {1, 0}}}; }

/// F_2^2 with Z/2 swapping the coordinates.
inline SpectralRingAction<PrimeField> pierce_swap_action() {
    const PrimeField f(2);
    auto a = share(product_algebra(ground_field_algebra(f), ground_field_algebra(f)));
    return global_action(cyclic_group(2), a, {identity_matrix(f, 2), from_columns(f, 2, {Vec<PrimeField>{0, 1}, Vec<PrimeField>{1, 0}})});
}

/// F_2^2 with the trivial one-element semigroup.
inline SpectralRingAction<PrimeField> pierce_trivial_action() {
    const PrimeField f(2);
    auto a = share(product_algebra(ground_field_algebra(f), ground_field_algebra(f)));
    return global_action(cyclic_group(1), a, {identity_matrix(f, 2)});
}

/// F_4 with Z/2 acting by Frobenius.
inline SpectralRingAction<PrimeField> pierce_frobenius_action() {
    return global_action(cyclic_group(2), share(f4_algebra()), {identity_matrix(PrimeField(2), 2), frobenius_matrix()});
}

// ---- catalog ------------------------------------------------------------------

using FixtureSubject = std::variant<GSheaf<PrimeField>, GSheaf<RationalField>, SpaceAction,
                                    SpectralRingAction<PrimeField>, PartialGroupAction>;

struct Expectation {
    std::string check;
    Json value;
    std::string oracle;  // the independent computation behind the value
};

struct Fixture {
    std::string name;
    std::string description;
    std::function<FixtureSubject()> build;
    std::vector<Expectation> expected;
};

namespace detail {

inline std::vector<Expectation> matrix_expectations(std::size_t n) {
    return {{"dim", n * n, "n^2 matrix units"},
            {"simple", true, "M_n over a field"},
            {"ideals", 2, "M_n over a field"},
            {"radical_dim", 0, "M_n over a field"},
            {"minimal", true, "one orbit"},
            {"effective", true, "trivial isotropy"},
            {"int_ker", true, "trivial isotropy"},
            {"masa", true, "diagonal matrices are self-centralizing"},
            {"vnr_diagonal", true, "diagonal is a product of fields"}};
}

inline std::vector<Expectation> without(std::vector<Expectation> e, const std::set<std::string>& drop) {
    std::erase_if(e, [&](const Expectation& x) { return drop.count(x.check) > 0; });
    return e;
}

}  // namespace detail

inline std::vector<Fixture> catalog() {
    const PrimeField f2(2), f3(3);
    const RationalField q;
    std::vector<Fixture> out;
    auto sheaf2 = [](auto fn) { return [fn]() -> FixtureSubject { return fn(); }; };

    for (std::size_t n = 1; n <= 3; ++n) {
        std::vector<Expectation> e{{"dim", n, "one point mass per unit"},
                                   {"simple", n == 1, "F^n is simple iff n = 1"},
                                   {"ideals", std::size_t{1} << n, "subsets of coordinates"},
                                   {"radical_dim", 0, "product of fields"},
                                   {"minimal", n == 1, "n singleton orbits"},
                                   {"effective", true, "no arrows besides units"},
                                   {"int_ker", true, "no arrows besides units"},
                                   {"masa", true, "commutative and equal to its diagonal"},
                                   {"vnr_diagonal", true, "product of fields"}};
        out.push_back({"t1-" + std::to_string(n) + "-f2", "trivial groupoid on " + std::to_string(n) + " units, F_2",
                       sheaf2([n, f2] { return delta_sheaf(trivial_groupoid(n), f2); }), e});
    }
    for (std::size_t n = 2; n <= 3; ++n) {
        const auto sn = std::to_string(n);
        auto e = detail::matrix_expectations(n);
        if (n == 3) e = detail::without(e, {"ideals"});  // beyond the ideal-dimension cap
        out.push_back({"p" + sn + "-f2", "pair groupoid on " + sn + " units, F_2",
                       sheaf2([n, f2] { return delta_sheaf(pair_groupoid(n), f2); }), e});
        out.push_back({"p" + sn + "-f3", "pair groupoid on " + sn + " units, F_3",
                       sheaf2([n, f3] { return delta_sheaf(pair_groupoid(n), f3); }), e});
        out.push_back({"p" + sn + "-q", "pair groupoid on " + sn + " units, Q",
                       sheaf2([n, q] { return delta_sheaf(pair_groupoid(n), q); }),
                       detail::without(detail::matrix_expectations(n), {"simple", "ideals", "vnr_diagonal"})});
    }

    out.push_back({"group-z2-f2", "one-object Z/2, F_2", sheaf2([f2] { return delta_sheaf(group_groupoid(cyclic_group(2)), f2); }),
                   {{"dim", 2, "group order"},
                    {"simple", false, "F_2[Z/2] = F_2[u]/(u^2)"},
                    {"ideals", 3, "chain 0 < (u) < A"},
                    {"radical_dim", 1, "(u) with u = 1 + g"},
                    {"minimal", true, "one unit"},
                    {"effective", false, "isotropy Z/2"},
                    {"int_ker", false, "constant sheaf: g acts trivially"},
                    {"masa", false, "commutative algebra larger than its diagonal"},
                    {"vnr_diagonal", true, "diagonal is F_2"}}});
    out.push_back({"group-z3-f3", "one-object Z/3, F_3", sheaf2([f3] { return delta_sheaf(group_groupoid(cyclic_group(3)), f3); }),
                   {{"dim", 3, "group order"},
                    {"simple", false, "F_3[Z/3] = F_3[u]/(u^3)"},
                    {"ideals", 4, "chain of powers of u = g - 1"},
                    {"radical_dim", 2, "(u)"},
                    {"minimal", true, "one unit"},
                    {"effective", false, "isotropy Z/3"},
                    {"int_ker", false, "constant sheaf"},
                    {"masa", false, "commutative algebra larger than its diagonal"},
                    {"vnr_diagonal", true, "diagonal is F_3"}}});
    out.push_back({"group-s3-f2", "one-object S_3, F_2", sheaf2([f2] { return delta_sheaf(group_groupoid(symmetric_group(3)), f2); }),
                   {{"dim", 6, "group order"},
                    {"simple", false, "F_2[S_3] = F_2[Z/2] x M_2(F_2)"},
                    {"ideals", 6, "3 ideals of F_2[Z/2] times 2 of M_2(F_2)"},
                    {"radical_dim", 1, "radical of the F_2[Z/2] block"},
                    {"minimal", true, "one unit"},
                    {"effective", false, "isotropy S_3"},
                    {"int_ker", false, "constant sheaf"},
                    {"masa", false, "the whole algebra centralizes the scalar diagonal"},
                    {"vnr_diagonal", true, "diagonal is F_2"}}});
    out.push_back({"gal", "one-object Z/2, stalk F_4, generator acts by Frobenius", sheaf2(gal_sheaf),
                   {{"dim", 4, "two arrows, stalk of dimension 2"},
                    {"simple", true, "isomorphic to M_2(F_2) by the regular representation of F_4"},
                    {"ideals", 2, "M_2(F_2)"},
                    {"radical_dim", 0, "M_2(F_2)"},
                    {"minimal", true, "one unit"},
                    {"effective", false, "isotropy Z/2"},
                    {"int_ker", true, "Frobenius is not the identity on F_4"},
                    {"masa", true, "commutator with w has kernel F_4"},
                    {"vnr_diagonal", true, "F_4 is a field"},
                    {"fields", true, "F_4 is a field"}}});
    out.push_back({"dual-t1", "F_2[u]/(u^2) over one unit", sheaf2([] { return dual_sheaf(trivial_groupoid(1)); }),
                   {{"dim", 2, "stalk dimension"},
                    {"simple", false, "(u) is a proper ideal"},
                    {"ideals", 3, "chain 0 < (u) < A"},
                    {"radical_dim", 1, "(u)"},
                    {"minimal", true, "one unit"},
                    {"effective", true, "no isotropy"},
                    {"int_ker", true, "no isotropy"},
                    {"masa", true, "commutative and equal to its diagonal"},
                    {"vnr_diagonal", false, "u is not regular: u x u = 0"},
                    {"fields", false, "u is a nonzero nilpotent"}}});
    out.push_back({"dual-p2", "F_2[u]/(u^2) constant over the pair groupoid", sheaf2([] { return dual_sheaf(pair_groupoid(2)); }),
                   {{"dim", 8, "4 arrows, stalk of dimension 2"},
                    {"simple", false, "M_2(R) with R local, not a field"},
                    {"ideals", 3, "ideals of M_2(R) match ideals of R"},
                    {"radical_dim", 4, "M_2(uR)"},
                    {"minimal", true, "one orbit"},
                    {"effective", true, "trivial isotropy"},
                    {"int_ker", true, "trivial isotropy"},
                    {"masa", true, "diagonal matrices over R are self-centralizing"},
                    {"vnr_diagonal", false, "u is not regular"},
                    {"fields", false, "u is a nonzero nilpotent"}}});
    out.push_back({"mixed-p2-z2", "pair groupoid on {1,2} disjoint from one-object Z/2 at 3, F_2",
                   sheaf2([f2] { return delta_sheaf(mixed_groupoid(), f2); }),
                   {{"dim", 6, "4 + 2 arrows"},
                    {"simple", false, "product of two algebras"},
                    {"ideals", 6, "2 ideals of M_2(F_2) times 3 of F_2[Z/2]"},
                    {"radical_dim", 1, "radical of F_2[Z/2]"},
                    {"minimal", false, "orbits {1,2} and {3}"},
                    {"effective", false, "isotropy Z/2 at 3"},
                    {"int_ker", false, "constant sheaf on nontrivial isotropy"},
                    {"masa", false, "the Z/2 block centralizes the diagonal"},
                    {"vnr_diagonal", true, "diagonal is F_2^3"}}});
    out.push_back({"product-p2-z2", "pair groupoid times Z/2, F_2",
                   sheaf2([f2] { return delta_sheaf(product_groupoid(pair_groupoid(2), group_groupoid(cyclic_group(2))), f2); }),
                   {{"dim", 8, "8 arrows"},
                    {"simple", false, "M_2(F_2[Z/2])"},
                    {"ideals", 3, "ideals of M_2(R) match ideals of R = F_2[Z/2]"},
                    {"radical_dim", 4, "M_2 of the radical of F_2[Z/2]"},
                    {"minimal", true, "one orbit"},
                    {"effective", false, "isotropy Z/2"},
                    {"int_ker", false, "constant sheaf on nontrivial isotropy"},
                    {"masa", false, "isotropy sections centralize the diagonal"},
                    {"vnr_diagonal", true, "diagonal is F_2^2"}}});

    auto act = [](auto fn) { return [fn]() -> FixtureSubject { return fn(); }; };
    out.push_back({"action-swap", "Z/2 swapping {a,b}", act(swap_action),
                   {{"topfree", true, "the generator has no fixed points"},
                    {"minimal", true, "one orbit"},
                    {"germ_arrows", 4, "no collapse in a group"},
                    {"germ_effective", true, "germ groupoid is the pair groupoid"},
                    {"simple", true, "Gamma_c is M_2(F_2)"}}});
    out.push_back({"action-trivial-z2", "Z/2 fixing a single point", act(trivial_z2_action),
                   {{"topfree", false, "a is fixed by g but g dominates no idempotent"},
                    {"minimal", true, "one point"},
                    {"germ_arrows", 2, "germ groupoid is one-object Z/2"},
                    {"germ_effective", false, "isotropy Z/2"}}});
    out.push_back({"action-identity", "the one-element semigroup on {a,b}",
                   act([] { return identity_action({"a", "b"}); }),
                   {{"topfree", true, "only idempotents"},
                    {"minimal", false, "two fixed points"},
                    {"germ_arrows", 2, "units only"},
                    {"germ_effective", true, "units only"},
                    {"simple", false, "Gamma_c is F_2^2"}}});
    out.push_back({"action-i2", "symmetric inverse monoid I(2) on {1,2}", act([] { return natural_action(2); }),
                   {{"topfree", true, "fixed points of partial injections lie in idempotent domains"},
                    {"minimal", true, "one orbit"},
                    {"germ_arrows", 4, "germs collapse to the graphs of the pair groupoid"},
                    {"germ_effective", true, "pair groupoid"},
                    {"simple", true, "Gamma_c is M_2(F_2)"}}});

    out.push_back({"partial-pswap", "Z/2 swapping a and b, undefined at c", act(pswap_action),
                   {{"groupoid_arrows", 5, "3 units plus 2 swaps"},
                    {"crossed_product_dim", 5, "dim D_1 + dim D_g = 3 + 2"}}});
    out.push_back({"partial-swap", "Z/2 swapping {a,b} globally", act(global_swap_action),
                   {{"groupoid_arrows", 4, "pair groupoid"}, {"crossed_product_dim", 4, "M_2(Q)"}}});

    out.push_back({"pierce-swap", "F_2^2 with Z/2 swapping the factors", act(pierce_swap_action),
                   {{"atoms", 2, "two minimal central idempotents"},
                    {"germ_arrows", 4, "pair groupoid"},
                    {"skew_dim", 4, "M_2(F_2)"}}});
    out.push_back({"pierce-trivial", "F_2^2 with the trivial semigroup", act(pierce_trivial_action),
                   {{"atoms", 2, "two minimal central idempotents"},
                    {"germ_arrows", 2, "trivial groupoid"},
                    {"skew_dim", 2, "A itself"}}});
    out.push_back({"pierce-frobenius", "F_4 with Z/2 acting by Frobenius", act(pierce_frobenius_action),
                   {{"atoms", 1, "F_4 is a field"},
                    {"germ_arrows", 2, "one-object Z/2"},
                    {"skew_dim", 4, "M_2(F_2)"}}});

    std::sort(out.begin(), out.end(), [](const Fixture& a, const Fixture& b) { return a.name < b.name; });
    return out;
}

inline const Fixture& find_fixture(const std::vector<Fixture>& fixtures, const std::string& name) {
    for (const auto& f : fixtures)
        if (f.name == name) return f;
    throw InputError("unknown fixture '" + name + "'");
}

// ---- running ------------------------------------------------------------------

struct ExpectationResult {
    Expectation expected;
    Json actual;
    bool pass;
};

struct FixtureResult {
    std::string name;
    std::vector<ExpectationResult> expectations;
    std::vector<Report> reports;

    /// Every expectation reproduced and no report failed.
    bool passed() const {
        for (const auto& e : expectations)
            if (!e.pass) return false;
        for (const auto& r : reports)
            if (r.status == Status::fail) return false;
        return true;
    }
};

namespace detail {

/// Actual values for every measurable property of a sheaf fixture.
template <Field F>
Json measure_sheaf(const ConvAlgebra<F>& c, const std::set<std::string>& wanted, const Caps& caps) {
    Json out = Json::object();
    const auto& a = c.algebra();
    auto want = [&](const char* k) { return wanted.count(k) > 0; };
    if (want("dim")) out["dim"] = c.dim();
    if (want("minimal")) out["minimal"] = is_minimal(c.groupoid());
    if (want("effective")) out["effective"] = is_effective(c.groupoid());
    if (want("int_ker")) out["int_ker"] = int_ker_is_units(c.sheaf());
    if (want("masa")) out["masa"] = is_diagonal_masa(c);
    if (want("radical_dim")) out["radical_dim"] = jacobson_radical(c.algebra_ptr(), caps).dim();
    if constexpr (F::is_finite) {
        if (want("simple")) out["simple"] = is_simple(a, caps).value;
        if (want("ideals")) out["ideals"] = enumerate_two_sided_ideals(a, caps).size();
        if (want("vnr_diagonal")) out["vnr_diagonal"] = is_von_neumann_regular(diagonal_algebra(c), caps.order).value;
    }
    if (want("fields")) {
        auto d = is_sheaf_of_fields(c.sheaf(), caps.order);
        out["fields"] = d ? Json(d->value) : Json(nullptr);
    }
    return out;
}

template <Field F>
std::vector<Report> sheaf_reports(const ConvAlgebra<F>& c, const Caps& caps) {
    std::vector<Report> out;
    out.push_back(check_masa_criterion(c));
    out.push_back(check_centralizer_support(c));
    out.push_back(check_semiprimitivity(c, caps));
    if constexpr (F::is_finite) {
        out.push_back(check_simplelife(c, caps));
        out.push_back(check_primitivity(c, caps));
        out.push_back(check_vnr_dictionary(c, caps));
        if (c.dim() <= caps.ideal_dim) {
            out.push_back(check_uniqueness(c, caps));
            out.push_back(verify_effros_hahn(c, caps));
        }
    }
    if (c.groupoid().arrow_count() <= caps.arrows) out.push_back(verify_siri(c, caps));
    out.push_back(verify_disintegration(c, regular_module(c.algebra_ptr())));
    return out;
}

}  // namespace detail

inline FixtureResult run_fixture(const Fixture& fx, const Caps& caps = {}) {
    FixtureResult res{fx.name, {}, {}};
    std::set<std::string> wanted;
    for (const auto& e : fx.expected) wanted.insert(e.check);
    Json actual = Json::object();
    const auto subject = fx.build();

    std::visit(
        [&](const auto& s) {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, GSheaf<PrimeField>> || std::is_same_v<T, GSheaf<RationalField>>) {
                const auto c = build_conv_algebra(s);
                actual = detail::measure_sheaf(c, wanted, caps);
                res.reports = detail::sheaf_reports(c, caps);
            } else if constexpr (std::is_same_v<T, SpaceAction>) {
                const auto g = germ_groupoid(s);
                actual["topfree"] = is_topologically_free(s);
                actual["minimal"] = is_minimal_action(s);
                actual["germ_arrows"] = g.groupoid.arrow_count();
                actual["germ_effective"] = is_effective(g.groupoid);
                res.reports.push_back(check_cinza(s));
                res.reports.push_back(check_action_orbits(s));
                const auto stalk = share(ground_field_algebra(PrimeField(2)));
                res.reports.push_back(check_simpleaction(s, stalk, caps));
                if (wanted.count("simple"))
                    actual["simple"] = is_simple(build_conv_algebra(constant_sheaf(g.groupoid, stalk)).algebra(), caps).value;
            } else if constexpr (std::is_same_v<T, SpectralRingAction<PrimeField>>) {
                auto p = pierce_comparison(s, caps);
                actual["atoms"] = p.atoms.size();
                actual["germ_arrows"] = p.germs.groupoid.arrow_count();
                actual["skew_dim"] = p.skew.algebra.dim();
                res.reports.push_back(std::move(p.report));
            } else {
                const auto tg = transformation_groupoid(s);
                const RationalField q;
                actual["groupoid_arrows"] = tg.groupoid.arrow_count();
                actual["crossed_product_dim"] = partial_crossed_product(s.group, dual_ring_action(s, q)).algebra.dim();
                res.reports.push_back(verify_partial_crossed(s, q, caps));
            }
        },
        subject);

    for (const auto& e : fx.expected) {
        const Json got = actual.contains(e.check) ? actual[e.check] : Json(nullptr);
        res.expectations.push_back({e, got, got == e.value});
    }
    return res;
}

inline Json to_json(const FixtureResult& r) {
    Json j = Json::object();
    j["fixture"] = r.name;
    j["pass"] = r.passed();
    Json ex = Json::array();
    for (const auto& e : r.expectations)
        ex.push_back(Json{{"check", e.expected.check},
                          {"expected", e.expected.value},
                          {"actual", e.actual},
                          {"oracle", e.expected.oracle},
                          {"pass", e.pass}});
    j["expectations"] = ex;
    Json reps = Json::array();
    for (const auto& rep : r.reports) reps.push_back(to_json(rep));
    j["reports"] = reps;
    return j;
}

}  // namespace sheafalg
