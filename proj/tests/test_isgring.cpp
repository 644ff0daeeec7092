#include <catch_amalgamated.hpp>

#include "sheafalg/fixtures.hpp"
#include "support/oracles.hpp"

using namespace sheafalg;

namespace {

const PrimeField F2{2};
const RationalField QQ{};

void check_natural_order(const FiniteInverseSemigroup& s) {
    const std::size_t n = s.size();
    for (std::size_t a = 0; a < n; ++a) {
        REQUIRE(s.leq(a, a));
        for (std::size_t b = 0; b < n; ++b) {
            if (a != b && s.leq(a, b)) REQUIRE_FALSE(s.leq(b, a));
            if (!s.leq(a, b)) continue;
            REQUIRE(s.leq(s.star(a), s.star(b)));
            for (auto e : s.idempotents()) REQUIRE(s.leq(s.mul(a, e), s.mul(b, e)));
            for (std::size_t c = 0; c < n; ++c)
                if (s.leq(b, c)) REQUIRE(s.leq(a, c));
        }
    }
}

std::size_t count_arrows_between(const FiniteGroupoid& g, std::size_t x, std::size_t y) {
    std::size_t k = 0;
    for (std::size_t a = 0; a < g.arrow_count(); ++a)
        if (g.src(a) == x && g.dst(a) == y) ++k;
    return k;
}

}  // namespace

TEST_CASE("symmetric inverse monoids") {
    for (std::size_t n = 1; n <= 3; ++n) {
        const auto s = symmetric_inverse_monoid(n);
        CHECK_FALSE(validate_inverse_semigroup(s));
        CHECK(s.size() == oracle::partial_injection_count(n));
    }
    const auto i2 = symmetric_inverse_monoid(2);
    CHECK(i2.size() == 7);
    CHECK(i2.idempotents().size() == 4);
}

TEST_CASE("a corrupted star is rejected") {
    const auto s = symmetric_inverse_monoid(2);
    std::vector<std::size_t> mul, star;
    for (std::size_t a = 0; a < s.size(); ++a) {
        star.push_back(s.star(a));
        for (std::size_t b = 0; b < s.size(); ++b) mul.push_back(s.mul(a, b));
    }
    // send some non-idempotent to itself
    for (std::size_t a = 0; a < s.size(); ++a)
        if (!s.is_idempotent(a)) {
            star[a] = a;
            break;
        }
    CHECK(validate_inverse_semigroup(FiniteInverseSemigroup(s.labels(), mul, star)));
}

TEST_CASE("the natural partial order") {
    check_natural_order(symmetric_inverse_monoid(2));
    check_natural_order(symmetric_inverse_monoid(3));
    check_natural_order(semigroup_from_group(symmetric_group(3)));
    check_natural_order(bisection_semigroup(mixed_groupoid()).semigroup);
    check_natural_order(bisection_semigroup(pair_groupoid(2)).semigroup);
}

TEST_CASE("the natural order on a group is equality") {
    const auto s = semigroup_from_group(symmetric_group(3));
    for (std::size_t a = 0; a < s.size(); ++a)
        for (std::size_t b = 0; b < s.size(); ++b) CHECK(s.leq(a, b) == (a == b));
}

TEST_CASE("spectral action validation") {
    CHECK_FALSE(validate_spectral_action(pierce_swap_action()));
    CHECK_FALSE(validate_spectral_action(pierce_frobenius_action()));

    auto bad = pierce_swap_action();
    bad.alpha[1] = from_columns(F2, 2, {Vec<PrimeField>{1, 1}, Vec<PrimeField>{0, 1}});
    CHECK(validate_spectral_action(bad));
    CHECK_THROWS_AS(skew_isg_ring(bad), InputError);
}

TEST_CASE("group actions have N = 0") {
    for (const auto& act : {pierce_swap_action(), pierce_trivial_action(), pierce_frobenius_action()}) {
        const auto skew = skew_isg_ring(act);
        CHECK(skew.relations.is_zero());
        CHECK(skew.algebra.dim() == act.semigroup.size() * act.algebra->dim());
    }
}

TEST_CASE("skew ring of the diagonal action on T1(2)") {
    const auto c = build_conv_algebra(delta_sheaf(trivial_groupoid(2), F2));
    const auto res = siri_comparison(c);
    CHECK(res.action.semigroup.size() == 4);
    CHECK(res.skew.big.dim() == 4);
    CHECK(res.skew.relations.dim() == 2);
    CHECK(res.skew.algebra.dim() == 2);
    CHECK(res.report.passed());
}

TEST_CASE("siri on the listed groupoids") {
    for (const auto& g : {trivial_groupoid(2), group_groupoid(cyclic_group(2)), pair_groupoid(2)}) {
        const auto c = build_conv_algebra(delta_sheaf(g, F2));
        const auto r = verify_siri(c);
        INFO(to_text(r));
        CHECK(r.passed());
        CHECK(r.lhs["map_kills_N"] == true);
        CHECK(r.lhs["diagonal_onto_diagonal"] == true);
        CHECK(r.lhs["chi_to_chi"] == true);
    }
    CHECK(verify_siri(build_conv_algebra(gal_sheaf())).passed());
    CHECK(verify_siri(build_conv_algebra(delta_sheaf(pair_groupoid(2), QQ))).passed());
}

TEST_CASE("germ groupoids") {
    SECTION("natural action of I(2) gives the pair groupoid") {
        const auto act = natural_action(2);
        CHECK_FALSE(validate_space_action(act));
        const auto g = germ_groupoid(act).groupoid;
        CHECK(g.arrow_count() == 4);
        for (std::size_t x = 0; x < 2; ++x)
            for (std::size_t y = 0; y < 2; ++y) CHECK(count_arrows_between(g, x, y) == 1);
    }
    SECTION("swap gives a free transitive groupoid") {
        const auto g = germ_groupoid(swap_action()).groupoid;
        CHECK(g.arrow_count() == 4);
        CHECK(is_effective(g));
        CHECK(is_minimal(g));
    }
    SECTION("trivial Z/2 keeps its isotropy") {
        const auto g = germ_groupoid(trivial_z2_action()).groupoid;
        CHECK(g.unit_count() == 1);
        CHECK(g.arrow_count() == 2);
        CHECK_FALSE(is_effective(g));
    }
    SECTION("identity action has only units") {
        const auto g = germ_groupoid(identity_action({"a", "b"})).groupoid;
        CHECK(g.arrow_count() == 2);
        CHECK_FALSE(is_minimal(g));
    }
}

TEST_CASE("germ orbits are action orbits") {
    for (const auto& act : {natural_action(2), natural_action(3), swap_action(), trivial_z2_action(), identity_action({"a", "b"})}) {
        const auto gg = germ_groupoid(act);
        CHECK_FALSE(validate_groupoid(gg.groupoid));
        CHECK(orbits(gg.groupoid) == action_orbits(act));
        CHECK(check_action_orbits(act).passed());
    }
}

TEST_CASE("dynamics dictionary") {
    CHECK(is_topologically_free(swap_action()));
    CHECK_FALSE(is_topologically_free(trivial_z2_action()));
    CHECK(check_cinza(swap_action()).passed());
    CHECK(check_cinza(trivial_z2_action()).passed());

    const auto f2 = share(ground_field_algebra(F2));
    const auto swap = check_simpleaction(swap_action(), f2);
    CHECK(swap.passed());
    CHECK(swap.lhs["minimal"] == true);
    const auto ident = check_simpleaction(identity_action({"a", "b"}), f2);
    CHECK(ident.passed());
    CHECK(ident.lhs["minimal"] == false);
    CHECK(check_simpleaction(trivial_z2_action(), f2).status == Status::hypothesis_skip);
}

TEST_CASE("pierce comparison on the action fixtures") {
    for (const auto& act : {pierce_swap_action(), pierce_trivial_action(), pierce_frobenius_action()}) {
        const auto res = pierce_comparison(act);
        INFO(to_text(res.report));
        CHECK(res.report.passed());
        CHECK(check_ring_iso(res.skew.algebra, res.conv.algebra(), res.map));
    }
}

TEST_CASE("Frobenius on F_4 lands on the GAL sheaf") {
    const auto res = pierce_comparison(pierce_frobenius_action());
    CHECK(res.atoms.size() == 1);
    const auto& o = res.conv.sheaf();
    CHECK(o.groupoid().unit_count() == 1);
    CHECK(o.groupoid().arrow_count() == 2);
    CHECK(o.stalk(0).dim() == 2);
    CHECK(int_ker_is_units(o));
    CHECK(is_simple(res.conv.algebra()).value);
}

TEST_CASE("swap on F_2^2: two atoms exchanged") {
    const auto res = pierce_comparison(pierce_swap_action());
    CHECK(res.atoms.size() == 2);
    CHECK(is_minimal(res.germs.groupoid));
    CHECK(res.conv.dim() == 4);
}

TEST_CASE("on a discrete spectrum the Pierce sheaf is the constant sheaf") {
    const auto res = pierce_comparison(dual_ring_action(global_swap_action(), F2));
    const auto& o = res.conv.sheaf();
    for (std::size_t x = 0; x < o.groupoid().unit_count(); ++x) CHECK(o.stalk(x).dim() == 1);
    for (std::size_t a = 0; a < o.groupoid().arrow_count(); ++a) CHECK(o.alpha(a) == identity_matrix(F2, 1));
}

TEST_CASE("pierce and siri are mutually consistent") {
    // Gamma_c(G) -> L/N (siri inverse) -> Gamma_c(germs) (pierce) is an isomorphism
    for (const auto& g : {trivial_groupoid(2), pair_groupoid(2), group_groupoid(cyclic_group(2))}) {
        const auto c = build_conv_algebra(delta_sheaf(g, F2));
        const auto siri = siri_comparison(c);
        REQUIRE(siri.report.passed());
        const auto pierce = pierce_comparison(siri.action);
        REQUIRE(pierce.report.passed());
        const auto back = inverse(F2, siri.map);
        REQUIRE(back);
        CHECK(check_ring_iso(c.algebra(), pierce.conv.algebra(), mat_mul(F2, pierce.map, *back)));
    }
}

TEST_CASE("partial actions") {
    CHECK_FALSE(validate_partial_action(pswap_action()));
    auto bad = pswap_action();
    bad.theta[0][2] = -1;
    CHECK(validate_partial_action(bad));

    const auto tg = transformation_groupoid(pswap_action());
    CHECK(tg.groupoid.unit_count() == 3);
    CHECK(tg.groupoid.arrow_count() == 5);
    CHECK_FALSE(is_minimal(tg.groupoid));

    const auto act = dual_ring_action(pswap_action(), QQ);
    CHECK_FALSE(validate_partial_ring_action(pswap_action().group, act));
    // D_g = span{e_a, e_b} differs from D_{gg^-1} = everything
    CHECK(validate_spectral_action(act));
}

TEST_CASE("partial crossed products") {
    SECTION("PSWAP over Q") {
        const auto r = verify_partial_crossed(pswap_action(), QQ);
        INFO(to_text(r));
        CHECK(r.passed());
        CHECK(r.lhs["crossed_product_dim"] == 5);
        CHECK(r.rhs["conv_dim"] == 5);
    }
    SECTION("global swap recovers M_2(Q)") {
        const auto r = verify_partial_crossed(global_swap_action(), QQ);
        CHECK(r.passed());
        CHECK(r.lhs["crossed_product_dim"] == 4);
        const auto conv = build_conv_algebra(delta_sheaf(transformation_groupoid(global_swap_action()).groupoid, QQ));
        CHECK(center(conv.algebra()).dim() == 1);
        CHECK(jacobson_radical(conv.algebra_ptr()).is_zero());
    }
    SECTION("over F_2 as well") {
        CHECK(verify_partial_crossed(pswap_action(), F2).passed());
    }
}
