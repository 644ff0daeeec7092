#include <catch_amalgamated.hpp>

#include <random>

#include "sheafalg/bisection.hpp"
#include "support/oracles.hpp"

using namespace sheafalg;

namespace {

FiniteGroupoid z2() { return group_groupoid(cyclic_group(2)); }

FiniteGroupoid p2_union_t1() {
    return disjoint_union(pair_groupoid(2), trivial_groupoid(std::vector<std::string>{"3"}));
}

FiniteGroupoid p2_union_z2() { return disjoint_union(pair_groupoid(2), group_groupoid(cyclic_group(2), "3")); }

std::vector<std::vector<std::string>> orbit_ids(const FiniteGroupoid& g) {
    std::vector<std::vector<std::string>> out;
    for (const auto& b : orbits(g)) {
        out.emplace_back();
        for (auto x : b) out.back().push_back(g.unit_id(x));
    }
    return out;
}

}  // namespace

TEST_CASE("standard groupoids validate") {
    for (std::size_t n = 1; n <= 3; ++n) {
        CHECK_FALSE(validate_groupoid(trivial_groupoid(n)));
        CHECK_FALSE(validate_groupoid(pair_groupoid(n)));
        CHECK(pair_groupoid(n).arrow_count() == n * n);
    }
    CHECK_FALSE(validate_groupoid(z2()));
    CHECK_FALSE(validate_groupoid(group_groupoid(cyclic_group(3))));
    CHECK_FALSE(validate_groupoid(group_groupoid(symmetric_group(3))));
    CHECK_FALSE(validate_groupoid(p2_union_z2()));
    CHECK_FALSE(validate_groupoid(product_groupoid(pair_groupoid(2), z2())));
    CHECK_FALSE(validate_group(symmetric_group(3)));
    CHECK(symmetric_group(3).order() == 6);
}

TEST_CASE("pair groupoid composition") {
    auto p = pair_groupoid(3);
    auto a = p.arrow_index("1->2"), b = p.arrow_index("2->3");
    CHECK(p.arrow_id(*p.compose(b, a)) == "1->3");
    CHECK_FALSE(p.compose(a, b).has_value());
    CHECK(p.arrow_id(p.inverse(a)) == "2->1");
    CHECK(p.arrow_id(*p.compose(p.inverse(a), a)) == "1");
}

TEST_CASE("validate_groupoid names the corrupted inverse") {
    auto spec = pair_groupoid(2).spec();
    for (auto& [a, b] : spec.inverse)
        if (a == "1->2") b = "1->2";
    auto v = validate_groupoid(FiniteGroupoid(spec));
    REQUIRE(v);
    CHECK(v->axiom == "inverse");
    CHECK(v->detail.find("1->2") != std::string::npos);
}

TEST_CASE("validate_groupoid catches missing and misplaced products") {
    auto spec = pair_groupoid(2).spec();
    std::erase_if(spec.compose, [](const auto& t) { return t[0] == "2->1" && t[1] == "1->2"; });
    auto v = validate_groupoid(FiniteGroupoid(spec));
    REQUIRE(v);
    CHECK(v->axiom == "composition domain");

    auto spec2 = pair_groupoid(2).spec();
    spec2.compose.push_back({"1->2", "1->2", "1->2"});
    REQUIRE(validate_groupoid(FiniteGroupoid(spec2)));

    GroupoidSpec bad;
    bad.units = {"a"};
    bad.arrows = {{"g", "a", "b"}};
    CHECK_THROWS_AS(FiniteGroupoid(bad), InputError);
}

TEST_CASE("orbits and minimality") {
    CHECK(orbit_ids(pair_groupoid(3)) == std::vector<std::vector<std::string>>{{"1", "2", "3"}});
    CHECK(orbit_ids(trivial_groupoid(3)) == std::vector<std::vector<std::string>>{{"1"}, {"2"}, {"3"}});
    CHECK(orbit_ids(p2_union_t1()) == std::vector<std::vector<std::string>>{{"1", "2"}, {"3"}});
    CHECK(is_minimal(pair_groupoid(2)));
    CHECK_FALSE(is_minimal(trivial_groupoid(2)));
    CHECK_FALSE(is_minimal(p2_union_t1()));
    CHECK(orbit_of(pair_groupoid(3), 1) == std::vector<std::size_t>{0, 1, 2});
}

TEST_CASE("orbit blocks are invariant") {
    for (const auto& g : {pair_groupoid(3), p2_union_z2(), product_groupoid(pair_groupoid(2), z2())}) {
        auto blocks = orbits(g);
        std::vector<std::size_t> block_of(g.unit_count());
        for (std::size_t b = 0; b < blocks.size(); ++b)
            for (auto x : blocks[b]) block_of[x] = b;
        for (std::size_t a = 0; a < g.arrow_count(); ++a) CHECK(block_of[g.src(a)] == block_of[g.dst(a)]);
    }
}

TEST_CASE("isotropy and effectiveness") {
    auto g = isotropy_group(z2(), 0);
    CHECK(g.order() == 2);
    CHECK_FALSE(is_effective(z2()));
    CHECK(is_effective(pair_groupoid(3)));
    CHECK(isotropy_group(pair_groupoid(3), 2).order() == 1);
    CHECK_FALSE(is_effective(p2_union_z2()));
    CHECK(isotropy_group(group_groupoid(symmetric_group(3)), 0).order() == 6);
}

TEST_CASE("minimality and effectiveness survive relabeling") {
    std::mt19937_64 rng(0x5eed);
    for (const auto& g : {pair_groupoid(3), p2_union_z2(), p2_union_t1(), z2(), trivial_groupoid(3),
                          product_groupoid(pair_groupoid(2), z2())}) {
        std::vector<std::size_t> units(g.unit_count()), arrows(g.arrow_count());
        std::iota(units.begin(), units.end(), 0);
        std::iota(arrows.begin(), arrows.end(), 0);
        std::shuffle(units.begin(), units.end(), rng);
        std::shuffle(arrows.begin(), arrows.end(), rng);
        auto h = relabeled(g, units, arrows, [](const std::string& s) { return "r" + s; });
        REQUIRE_FALSE(validate_groupoid(h));
        CHECK(is_minimal(h) == is_minimal(g));
        CHECK(is_effective(h) == is_effective(g));
        CHECK(orbits(h).size() == orbits(g).size());
    }
}

TEST_CASE("bisection semigroups") {
    auto t = bisection_semigroup(trivial_groupoid(2));
    CHECK(t.sets.size() == 4);
    CHECK(t.semigroup.idempotents().size() == 4);

    auto z = bisection_semigroup(z2());
    REQUIRE(z.sets.size() == 3);
    CHECK(z.semigroup.labels() == std::vector<std::string>{"{}", "{1}", "{g}"});
    CHECK(z.semigroup.mul(2, 2) == 1);

    auto p = bisection_semigroup(pair_groupoid(2));
    CHECK(p.sets.size() == oracle::partial_injection_count(2));
    CHECK(p.sets.size() == 7);
    CHECK(bisection_semigroup(pair_groupoid(3), 9).sets.size() == oracle::partial_injection_count(3));

    CHECK_THROWS_AS(bisection_semigroup(pair_groupoid(3)), CapExceeded);
}

TEST_CASE("bisection semigroups are inverse semigroups with Boolean idempotents") {
    for (const auto& g : {trivial_groupoid(3), pair_groupoid(2), z2(), p2_union_z2(), group_groupoid(cyclic_group(3)),
                          product_groupoid(pair_groupoid(2), z2())}) {
        auto b = bisection_semigroup(g);
        CHECK_FALSE(validate_inverse_semigroup(b.semigroup));
        CHECK(b.semigroup.idempotents().size() == (std::size_t{1} << g.unit_count()));
        // the order on idempotents is inclusion of unit sets
        for (auto e : b.semigroup.idempotents())
            for (auto f : b.semigroup.idempotents()) {
                const auto& se = b.sets[e];
                const auto& sf = b.sets[f];
                CHECK(b.semigroup.leq(e, f) == std::includes(sf.begin(), sf.end(), se.begin(), se.end()));
            }
    }
}

TEST_CASE("generated bisection subsemigroups") {
    auto g = pair_groupoid(2);
    Bisection swap{g.arrow_index("1->2"), g.arrow_index("2->1")};
    Bisection one{g.arrow_index("1")};
    auto s = generated_bisection_semigroup(g, {swap, one});
    CHECK_FALSE(validate_inverse_semigroup(s.semigroup));
    // {}, {1}, {2}, {1,2}, swap, {1->2}, {2->1}: here everything is generated
    CHECK(s.sets.size() == 7);
    CHECK(generated_bisection_semigroup(g, {swap}).sets.size() == 3);  // {}, {1,2}, swap
    auto u = p2_union_t1();
    CHECK_THROWS_AS(generated_bisection_semigroup(u, {{u.arrow_index("1->2"), u.arrow_index("2->1")}}), InputError);
    CHECK_THROWS_AS(generated_bisection_semigroup(g, {one}), InputError);
}
