#include <catch_amalgamated.hpp>

#include "sheafalg/fixtures.hpp"

using namespace sheafalg;

namespace {

const PrimeField F2{2};

// Z/3 acting on F_4 by Frobenius: F^3 = F, so alpha(g) alpha(g^2) != alpha(1).
GSheaf<PrimeField> frobenius_over_z3() {
    auto g = group_groupoid(cyclic_group(3));
    std::vector<Mat<PrimeField>> alpha(g.arrow_count());
    for (std::size_t a = 0; a < g.arrow_count(); ++a)
        alpha[a] = g.is_identity(a) ? identity_matrix(F2, 2) : frobenius_matrix();
    return GSheaf<PrimeField>(g, {share(f4_algebra())}, alpha);
}

}  // namespace

TEST_CASE("every sheaf fixture validates") {
    for (const auto& fx : catalog()) {
        auto subject = fx.build();
        if (auto* s = std::get_if<GSheaf<PrimeField>>(&subject)) {
            INFO(fx.name);
            CHECK_FALSE(validate_sheaf(*s));
        } else if (auto* q = std::get_if<GSheaf<RationalField>>(&subject)) {
            INFO(fx.name);
            CHECK_FALSE(validate_sheaf(*q));
        }
    }
}

TEST_CASE("a non-unital alpha is rejected as SR4") {
    auto o = gal_sheaf();
    auto alpha = o.alphas();
    const auto g = o.groupoid();
    for (std::size_t a = 0; a < g.arrow_count(); ++a)
        if (!g.is_identity(a)) alpha[a] = from_columns(F2, 2, {Vec<PrimeField>{0, 1}, Vec<PrimeField>{1, 0}});
    auto v = validate_sheaf(GSheaf<PrimeField>(g, o.stalks(), alpha));
    REQUIRE(v);
    CHECK(v->axiom == "SR4");
}

TEST_CASE("a non-functorial alpha is rejected as S3") {
    auto v = validate_sheaf(frobenius_over_z3());
    REQUIRE(v);
    CHECK(v->axiom == "S3");
}

TEST_CASE("alpha of an identity arrow must be the identity") {
    auto o = gal_sheaf();
    auto alpha = o.alphas();
    alpha[o.groupoid().unit_arrow(0)] = frobenius_matrix();
    auto v = validate_sheaf(GSheaf<PrimeField>(o.groupoid(), o.stalks(), alpha));
    REQUIRE(v);
    CHECK(v->axiom == "S1");
}

TEST_CASE("sheaf shapes are checked on construction") {
    auto g = pair_groupoid(2);
    auto k = share(ground_field_algebra(F2));
    CHECK_THROWS_AS(GSheaf<PrimeField>(g, {k}, std::vector<Mat<PrimeField>>(4, identity_matrix(F2, 1))), InputError);
    CHECK_THROWS_AS(GSheaf<PrimeField>(g, {k, k}, std::vector<Mat<PrimeField>>(3, identity_matrix(F2, 1))), InputError);
    CHECK_THROWS_AS(GSheaf<PrimeField>(g, {k, k}, std::vector<Mat<PrimeField>>(4, identity_matrix(F2, 2))), InputError);
}

TEST_CASE("the axiom audit marks the automatic axioms") {
    std::size_t automatic = 0;
    for (const auto& a : sheaf_axiom_audit())
        if (!a.checked) ++automatic;
    CHECK(automatic == 4);
}

TEST_CASE("ker O and its interior") {
    SECTION("constant sheaf over Z/2: every isotropy arrow acts trivially") {
        auto o = delta_sheaf(group_groupoid(cyclic_group(2)), F2);
        CHECK(ker_sheaf(o).size() == 2);
        CHECK_FALSE(int_ker_is_units(o));
    }
    SECTION("Frobenius acts nontrivially") {
        auto o = gal_sheaf();
        CHECK(ker_sheaf(o).size() == 1);
        CHECK(int_ker_is_units(o));
    }
    SECTION("pair groupoid has trivial isotropy") {
        CHECK(int_ker_is_units(delta_sheaf(pair_groupoid(3), PrimeField(3))));
    }
    SECTION("mixed groupoid: the Z/2 component is in the kernel") {
        auto o = delta_sheaf(mixed_groupoid(), F2);
        CHECK(ker_sheaf(o).size() == 4);
        CHECK_FALSE(int_ker_is_units(o));
    }
}

TEST_CASE("sheaves of fields") {
    auto gal = is_sheaf_of_fields(gal_sheaf());
    REQUIRE(gal);
    CHECK(gal->value);

    auto dual = is_sheaf_of_fields(dual_sheaf(pair_groupoid(2)));
    REQUIRE(dual);
    CHECK_FALSE(dual->value);
    REQUIRE(dual->witness);
    // the only nonzero non-unit of F_2[u]/(u^2) is u
    CHECK(*dual->witness == Vec<PrimeField>{0, 1});

    auto q = is_sheaf_of_fields(delta_sheaf(pair_groupoid(2), RationalField{}));
    REQUIRE(q);
    CHECK(q->value);
}

TEST_CASE("constant sheaves have identity transition maps") {
    auto o = dual_sheaf(pair_groupoid(2));
    for (std::size_t a = 0; a < o.groupoid().arrow_count(); ++a) CHECK(o.alpha(a) == identity_matrix(F2, 2));
    CHECK(stalks_commutative(o));
}

TEST_CASE("indecomposable stalks") {
    CHECK(is_sheaf_of_indecomposables(dual_sheaf(trivial_groupoid(1))).value);
    auto o = constant_sheaf(trivial_groupoid(1), share(product_algebra(ground_field_algebra(F2), ground_field_algebra(F2))));
    CHECK_FALSE(is_sheaf_of_indecomposables(o).value);
}
