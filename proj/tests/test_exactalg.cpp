#include <catch_amalgamated.hpp>

#include <random>

#include "sheafalg/meataxe.hpp"
#include "support/oracles.hpp"

using namespace sheafalg;

namespace {

const PrimeField F2{2};
const PrimeField F3{3};

// F_2[u]/(u^2); also F_2[Z/2] via u = 1 + g.
FDAlgebra<PrimeField> dual_numbers() { return monogenic_algebra(F2, {0, 0}); }
// F_4 = F_2[w]/(w^2 + w + 1)
FDAlgebra<PrimeField> f4() { return monogenic_algebra(F2, {1, 1}, "w"); }
FDAlgebra<PrimeField> f2xf2() { return product_algebra(ground_field_algebra(F2), ground_field_algebra(F2)); }

// F_4 x| Z/2 with Frobenius, basis (1,e), (w,e), (1,g), (w,g).
FDAlgebra<PrimeField> galois_crossed_product() {
    auto k = f4();
    Mat<PrimeField> frob = from_columns(F2, 2, {Vec<PrimeField>{1, 0}, Vec<PrimeField>{1, 1}});
    std::vector<Vec<PrimeField>> table;
    for (int d1 = 0; d1 < 2; ++d1)
        for (std::size_t a = 0; a < 2; ++a)
            for (int d2 = 0; d2 < 2; ++d2)
                for (std::size_t b = 0; b < 2; ++b) {
                    auto bb = k.basis(b);
                    if (d1 == 1) bb = mat_vec(F2, frob, bb);
                    auto prod = k.multiply(k.basis(a), bb);
                    Vec<PrimeField> v(4, 0);
                    const int d = d1 ^ d2;
                    v[2 * d] = prod[0];
                    v[2 * d + 1] = prod[1];
                    table.push_back(v);
                }
    // basis index = 2*delta + a; reorder table from (d1,a,d2,b) loops
    std::vector<Vec<PrimeField>> ordered(16);
    std::size_t t = 0;
    for (int d1 = 0; d1 < 2; ++d1)
        for (std::size_t a = 0; a < 2; ++a)
            for (int d2 = 0; d2 < 2; ++d2)
                for (std::size_t b = 0; b < 2; ++b) ordered[(2 * d1 + a) * 4 + (2 * d2 + b)] = table[t++];
    return FDAlgebra<PrimeField>(F2, {"1", "w", "g", "wg"}, ordered, Vec<PrimeField>{1, 0, 0, 0});
}

}  // namespace

TEST_CASE("validate_algebra accepts fields and matrix algebras") {
    CHECK_FALSE(validate_algebra(ground_field_algebra(F2)));
    CHECK_FALSE(validate_algebra(matrix_algebra(F2, 2)));
    CHECK_FALSE(validate_algebra(matrix_algebra(F3, 3)));
    CHECK_FALSE(validate_algebra(f4()));
    CHECK_FALSE(validate_algebra(galois_crossed_product()));
}

TEST_CASE("validate_algebra names the corrupted triple") {
    // b1 = u in F_2[u]/(u^3); corrupt u*u^2 so that u(uu) != (uu)u.
    auto good = monogenic_algebra(F2, {0, 0, 0});
    std::vector<Vec<PrimeField>> table;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) table.push_back(good.product(i, j));
    table[1 * 3 + 2] = {1, 0, 0};  // u * u^2 := 1 (really 0)
    FDAlgebra<PrimeField> bad(F2, good.labels(), table, std::nullopt);
    auto v = validate_algebra(bad);
    REQUIRE(v);
    CHECK(v->axiom == "associativity");
    CHECK(v->detail.find("(1,1,1)") != std::string::npos);
}

TEST_CASE("structure constant tables are dimension checked") {
    CHECK_THROWS_AS(FDAlgebra<PrimeField>(F2, {"a", "b"}, {Vec<PrimeField>{1, 0}}, std::nullopt), InputError);
    CHECK_THROWS_AS(FDAlgebra<PrimeField>(F2, {"a"}, {Vec<PrimeField>{1, 0}}, std::nullopt), InputError);
}

TEST_CASE("ideal_generated") {
    auto m2 = matrix_algebra(F2, 2);
    CHECK(ideal_generated(m2, {m2.basis(0)}, Side::two_sided).is_full());
    // left ideal of e11 is the first column {e11, e21}
    auto left = ideal_generated(m2, {m2.basis(0)}, Side::left);
    CHECK(left == Subspace<PrimeField>::span(F2, 4, {m2.basis(0), m2.basis(2)}));

    auto d = dual_numbers();
    auto u = ideal_generated(d, {d.basis(1)}, Side::two_sided);
    CHECK(u.dim() == 1);
    CHECK(u.contains(d.basis(1)));

    CHECK(ideal_generated(d, {}, Side::two_sided).is_zero());
    CHECK_THROWS_AS(ideal_generated(d, {Vec<PrimeField>{1, 0, 0}}, Side::left), InputError);
}

TEST_CASE("principal ideals of M2(F2) match the explicit e_i1 e_11 e_1j listing") {
    auto m2 = matrix_algebra(F2, 2);
    std::vector<Vec<PrimeField>> products;
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            products.push_back(m2.multiply(m2.multiply(m2.basis(i * 2), m2.basis(0)), m2.basis(j)));
    CHECK(Subspace<PrimeField>::span(F2, 4, products).is_full());
}

TEST_CASE("enumerate_two_sided_ideals agrees with the exhaustive subspace filter") {
    auto d = dual_numbers();
    auto ideals = enumerate_two_sided_ideals(d);
    REQUIRE(ideals.size() == 3);
    CHECK(ideals[0].is_zero());
    CHECK(ideals[1] == Subspace<PrimeField>::span(F2, 2, {d.basis(1)}));
    CHECK(ideals[2].is_full());
    CHECK(oracle::all_subspaces(F2, 2).size() == 5);

    for (const auto& alg : {dual_numbers(), matrix_algebra(F2, 2), ground_field_algebra(F2), f2xf2(), f4(),
                            galois_crossed_product(), monogenic_algebra(F2, {0, 0, 0})}) {
        CHECK(enumerate_two_sided_ideals(alg) == oracle::ideals_by_subspace_filter(alg));
    }
    CHECK(enumerate_two_sided_ideals(matrix_algebra(F2, 2)).size() == 2);
    CHECK(enumerate_two_sided_ideals(ground_field_algebra(F2)).size() == 2);
    CHECK(enumerate_two_sided_ideals(monogenic_algebra(F3, {0, 0})) ==
          oracle::ideals_by_subspace_filter(monogenic_algebra(F3, {0, 0})));
}

TEST_CASE("ideal lattice is closed under sum and intersection") {
    auto alg = product_algebra(dual_numbers(), f2xf2());
    auto ideals = enumerate_two_sided_ideals(alg);
    for (const auto& i : ideals)
        for (const auto& j : ideals) {
            CHECK(std::find(ideals.begin(), ideals.end(), i + j) != ideals.end());
            CHECK(std::find(ideals.begin(), ideals.end(), i.intersect(j)) != ideals.end());
        }
}

TEST_CASE("ideal enumeration respects its cap") {
    Caps caps;
    caps.ideal_dim = 3;
    CHECK_THROWS_AS(enumerate_two_sided_ideals(matrix_algebra(F2, 2), caps), CapExceeded);
}

TEST_CASE("is_simple") {
    CHECK(is_simple(matrix_algebra(F2, 2)).value);
    CHECK(projective_point_count(2, 4) == 15);
    auto d = is_simple(dual_numbers());
    CHECK_FALSE(d.value);
    REQUIRE(d.witness);
    CHECK(*d.witness == Vec<PrimeField>{0, 1});
    CHECK(is_simple(ground_field_algebra(F3)).value);
    CHECK(is_simple(galois_crossed_product()).value);
    CHECK_FALSE(is_simple(f2xf2()).value);

    Caps tiny;
    tiny.projective_points = 10;
    CHECK_THROWS_AS(is_simple(matrix_algebra(F2, 2), tiny), CapExceeded);
}

TEST_CASE("is_simple agrees with ideal counting") {
    for (const auto& alg : {dual_numbers(), matrix_algebra(F2, 2), ground_field_algebra(F2), f2xf2(), f4(),
                            galois_crossed_product(), matrix_algebra(F3, 2)})
        CHECK(is_simple(alg).value == (enumerate_two_sided_ideals(alg).size() == 2));
}

TEST_CASE("jacobson_radical matches the quasi-invertibility oracle") {
    auto d = share(dual_numbers());
    auto j = jacobson_radical(d);
    CHECK(j == Subspace<PrimeField>::span(F2, 2, {d->basis(1)}));
    CHECK(j == oracle::quasi_invertible_radical(*d));

    auto m2 = share(matrix_algebra(F2, 2));
    CHECK(jacobson_radical(m2).is_zero());
    CHECK(oracle::quasi_invertible_radical(*m2).is_zero());

    CHECK(jacobson_radical(share(ground_field_algebra(F3))).is_zero());
    CHECK(jacobson_radical(share(f4())).is_zero());

    for (const auto& alg : {monogenic_algebra(F2, {0, 0, 0}), product_algebra(dual_numbers(), matrix_algebra(F2, 2)),
                            galois_crossed_product(), monogenic_algebra(F3, {0, 0}), f2xf2(),
                            monogenic_algebra(F3, {1, 0})}) {
        auto p = share(alg);
        CHECK(jacobson_radical(p) == oracle::quasi_invertible_radical(alg));
    }
}

TEST_CASE("jacobson_radical over Q uses the trace form") {
    RationalField q;
    auto d = share(monogenic_algebra(q, {q.zero(), q.zero()}));
    CHECK(jacobson_radical(d) == Subspace<RationalField>::span(q, 2, {d->basis(1)}));
    CHECK(jacobson_radical(share(matrix_algebra(q, 2))).is_zero());
}

TEST_CASE("von Neumann regularity") {
    auto d = is_von_neumann_regular(dual_numbers());
    CHECK_FALSE(d.value);
    REQUIRE(d.witness);
    CHECK(*d.witness == Vec<PrimeField>{0, 1});
    CHECK(is_von_neumann_regular(f4()).value);
    CHECK(is_von_neumann_regular(f2xf2()).value);
    CHECK(is_von_neumann_regular(matrix_algebra(F2, 2)).value);
    CHECK_THROWS_AS(is_von_neumann_regular(matrix_algebra(F2, 3), 1u << 8), CapExceeded);
}

TEST_CASE("annihilators") {
    auto m2 = share(matrix_algebra(F2, 2));
    CHECK(annihilator(regular_module(m2)).is_zero());
    CHECK(annihilator(zero_module(m2)).is_full());

    auto d = share(dual_numbers());
    auto u = Subspace<PrimeField>::span(F2, 2, {d->basis(1)});
    auto quotient = quotient_module(regular_module(d), u);
    CHECK(quotient.dim() == 1);
    CHECK(annihilator(quotient) == u);
}

TEST_CASE("annihilator of a direct sum is the intersection") {
    auto alg = share(product_algebra(dual_numbers(), f2xf2()));
    auto reg = regular_module(alg);
    auto simples = simple_modules(alg);
    for (const auto& s : simples) {
        auto sum = direct_sum(reg, s);
        CHECK(annihilator(sum) == annihilator(reg).intersect(annihilator(s)));
    }
    for (std::size_t i = 0; i < simples.size(); ++i)
        for (std::size_t j = 0; j < simples.size(); ++j)
            CHECK(annihilator(direct_sum(simples[i], simples[j])) ==
                  annihilator(simples[i]).intersect(annihilator(simples[j])));
}

TEST_CASE("module simplicity") {
    auto m2 = share(matrix_algebra(F2, 2));
    // natural column module: e_ij acts as the matrix unit
    std::vector<Mat<PrimeField>> act;
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) {
            Mat<PrimeField> e(2, 2, 0);
            e(i, j) = 1;
            act.push_back(e);
        }
    AlgebraModule<PrimeField> natural(m2, 2, act);
    CHECK_FALSE(validate_module(natural));
    CHECK(is_simple_module(natural).value);

    auto d = share(dual_numbers());
    auto r = is_simple_module(regular_module(d));
    CHECK_FALSE(r.value);
    CHECK(*r.witness == Vec<PrimeField>{0, 1});

    auto k = share(ground_field_algebra(F3));
    CHECK(is_simple_module(regular_module(k)).value);
}

TEST_CASE("meataxe_simple_quotients") {
    auto d = share(dual_numbers());
    auto q = meataxe_simple_quotients(regular_module(d));
    REQUIRE(q.size() == 1);
    CHECK(q[0].dim() == 1);

    auto m2 = share(matrix_algebra(F2, 2));
    auto reg = regular_module(m2);
    MeatAxe<PrimeField> axe;
    auto factors = axe.composition_factors(reg);
    REQUIRE(factors.size() == 2);
    CHECK(factors[0].dim() == 2);
    CHECK(are_isomorphic_simples(factors[0], factors[1]));
    auto sq = meataxe_simple_quotients(reg);
    REQUIRE(sq.size() == 1);
    CHECK(sq[0].dim() == 2);
    CHECK(is_simple_module(sq[0]).value);

    auto simple = sq[0];
    auto again = meataxe_simple_quotients(simple);
    REQUIRE(again.size() == 1);
    CHECK(are_isomorphic_simples(again[0], simple));
}

TEST_CASE("meataxe Norton path splits and certifies larger modules") {
    // regular module of M_3(F_2) (dim 9, 511 points) pushed through the Norton branch
    auto m3 = share(matrix_algebra(F2, 3));
    auto reg = direct_sum(regular_module(m3), regular_module(m3));  // dim 18
    MeatAxe<PrimeField> axe;
    auto factors = axe.composition_factors(reg);
    CHECK(factors.size() == 6);
    for (const auto& s : factors) {
        CHECK(s.dim() == 3);
        CHECK(is_simple_module(s).value);
    }
}

TEST_CASE("centralizer") {
    auto m2 = matrix_algebra(F2, 2);
    auto diag = Subspace<PrimeField>::span(F2, 4, {m2.basis(0), m2.basis(3)});
    CHECK(centralizer(m2, diag) == diag);
    auto one = Subspace<PrimeField>::span(F2, 4, {*m2.unit()});
    CHECK(centralizer(m2, one).is_full());
    auto d = dual_numbers();
    CHECK(centralizer(d, Subspace<PrimeField>::span(F2, 2, {d.basis(0)})).is_full());
    auto not_closed = Subspace<PrimeField>::span(F2, 4, {m2.basis(1)});
    auto not_sub = Subspace<PrimeField>::span(F2, 4, {m2.basis(1), m2.basis(2)});
    CHECK_NOTHROW(centralizer(m2, not_closed));  // e12 e12 = 0 stays inside
    CHECK_THROWS_AS(centralizer(m2, not_sub), InputError);
}

TEST_CASE("check_ring_iso") {
    auto m2 = matrix_algebra(F2, 2);
    CHECK(check_ring_iso(m2, m2, identity_matrix(F2, 4)));
    CHECK_THROWS_AS(check_ring_iso(m2, m2, identity_matrix(F2, 3)), InputError);

    // no isomorphism F_2[u]/(u^2) -> F_2 x F_2: exhaust all invertible 2x2 maps
    auto d = dual_numbers();
    auto p = f2xf2();
    int invertible = 0;
    oracle::all_elements(F2, 4);
    for_each_vector(F2, 4, [&](const Vec<PrimeField>& e) {
        Mat<PrimeField> m(2, 2, 0);
        m(0, 0) = e[0], m(0, 1) = e[1], m(1, 0) = e[2], m(1, 1) = e[3];
        if (!is_invertible(F2, m)) return true;
        ++invertible;
        CHECK_FALSE(check_ring_iso(d, p, m));
        return true;
    });
    CHECK(invertible == 6);

    // F_4 x| Gal -> M_2(F_2) through the action on F_4 = span{1, w}
    auto gal = galois_crossed_product();
    Mat<PrimeField> mult_w = from_columns(F2, 2, {Vec<PrimeField>{0, 1}, Vec<PrimeField>{1, 1}});
    Mat<PrimeField> frob = from_columns(F2, 2, {Vec<PrimeField>{1, 0}, Vec<PrimeField>{1, 1}});
    std::vector<Mat<PrimeField>> images = {identity_matrix(F2, 2), mult_w, frob, mat_mul(F2, mult_w, frob)};
    Mat<PrimeField> map(4, 4, 0);
    for (std::size_t c = 0; c < 4; ++c)
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 2; ++j) map(i * 2 + j, c) = images[c](i, j);
    CHECK(check_ring_iso(gal, m2, map));
    CHECK(ring_iso_failure(gal, m2, identity_matrix(F2, 4)).has_value());
}

TEST_CASE("subspaces are canonical") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> bit(0, 2);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<Vec<PrimeField>> gens;
        for (int g = 0; g < 3; ++g) {
            Vec<PrimeField> v(5);
            for (auto& x : v) x = F3.from_int(bit(rng));
            gens.push_back(v);
        }
        auto s = Subspace<PrimeField>::span(F3, 5, gens);
        // any other spanning set of the same space gives the same echelon form
        std::vector<Vec<PrimeField>> mixed;
        for (std::size_t i = 0; i < gens.size(); ++i)
            mixed.push_back(add(F3, gens[i], scale(F3, F3.from_int(2), gens[(i + 1) % gens.size()])));
        mixed.push_back(gens[0]);
        CHECK(Subspace<PrimeField>::span(F3, 5, mixed) == s);
        CHECK((s + s) == s);
        CHECK(s.intersect(s) == s);
    }
}

TEST_CASE("associativity holds on random structure-constant algebras built from matrices") {
    // random subalgebras of M_3(F_3) generated by two matrices: validate_algebra must accept them
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> tri(0, 2);
    auto m3 = matrix_algebra(F3, 3);
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<Vec<PrimeField>> gens;
        for (int g = 0; g < 2; ++g) {
            Vec<PrimeField> v(9);
            for (auto& x : v) x = F3.from_int(tri(rng));
            gens.push_back(v);
        }
        gens.push_back(*m3.unit());
        // close under products
        EchelonBuilder<PrimeField> b(F3, 9);
        std::vector<Vec<PrimeField>> queue = gens;
        std::vector<Vec<PrimeField>> basis;
        while (!queue.empty()) {
            auto v = queue.back();
            queue.pop_back();
            if (!b.insert(v)) continue;
            basis.push_back(v);
            for (const auto& w : std::vector<Vec<PrimeField>>(basis)) {
                queue.push_back(m3.multiply(v, w));
                queue.push_back(m3.multiply(w, v));
            }
        }
        auto sub = subalgebra(m3, b.subspace());
        CHECK_FALSE(validate_algebra(sub));
    }
}
