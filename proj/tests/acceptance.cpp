// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.
// Usage: acceptance [path-to-sheafalg-cli]

#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>

#include "sheafalg/fixtures.hpp"
#include "support/conv_oracle.hpp"
#include "support/oracles.hpp"

using namespace sheafalg;

namespace {

const PrimeField F2{2};
const PrimeField F3{3};
const RationalField QQ{};

struct Failure {
    std::string what;
};

void expect(bool ok, const std::string& what) {
    if (!ok) throw Failure{what};
}

struct Named {
    std::string name;
    GSheaf<PrimeField> sheaf;
};

std::vector<Named> finite_sheaves() {
    std::vector<Named> out;
    for (const auto& fx : catalog()) {
        auto subject = fx.build();
        if (auto* s = std::get_if<GSheaf<PrimeField>>(&subject)) out.push_back({fx.name, *s});
    }
    return out;
}

bool fields_sheaf(const GSheaf<PrimeField>& o) {
    const auto d = is_sheaf_of_fields(o);
    return d && d->value;
}

std::uint64_t order_of(const ConvAlgebra<PrimeField>& c) {
    std::uint64_t n = 1;
    for (std::size_t i = 0; i < c.dim(); ++i) {
        n *= c.field().characteristic();
        if (n > (std::uint64_t{1} << 20)) break;
    }
    return n;
}

template <Field F>
void pointwise(const std::string& name, const GSheaf<F>& o) {
    const auto c = build_conv_algebra(o);
    for (std::size_t i = 0; i < c.dim(); ++i)
        for (std::size_t j = 0; j < c.dim(); ++j)
            expect(c.algebra().product(i, j) == oracle::convolve(o, c.algebra().basis(i), c.algebra().basis(j)),
                   name + ": " + c.algebra().label(i) + " * " + c.algebra().label(j));
    if (o.groupoid().arrow_count() > 8) return;
    const auto bs = bisection_semigroup(c.groupoid(), 8);
    for (const auto& u : bs.sets)
        for (const auto& v : bs.sets)
            expect(c.algebra().multiply(c.chi(u), c.chi(v)) == c.chi(bisection_product(c.groupoid(), u, v)),
                   name + ": chi product");
}

std::string ac1() {
    std::size_t n = 0;
    for (const auto& fx : catalog()) {
        auto subject = fx.build();
        if (auto* s = std::get_if<GSheaf<PrimeField>>(&subject))
            pointwise(fx.name, *s), ++n;
        else if (auto* q = std::get_if<GSheaf<RationalField>>(&subject))
            pointwise(fx.name, *q), ++n;
    }
    return std::to_string(n) + " sheaf fixtures";
}

std::string ac2() {
    for (const PrimeField& f : {F2, F3})
        for (std::size_t n = 1; n <= 3; ++n) {
            const auto c = build_conv_algebra(delta_sheaf(pair_groupoid(n), f));
            const auto& g = c.groupoid();
            const std::string tag = "P" + std::to_string(n) + " over F_" + std::to_string(f.characteristic());
            auto e = [&](std::size_t i, std::size_t j) {
                for (std::size_t a = 0; a < g.arrow_count(); ++a)
                    if (g.dst(a) == i && g.src(a) == j) return c.point_mass(a, Vec<PrimeField>{f.one()});
                throw Failure{tag + ": missing arrow"};
            };
            auto sum = c.algebra().zero();
            for (std::size_t i = 0; i < n; ++i) {
                sum = add(f, sum, e(i, i));
                for (std::size_t j = 0; j < n; ++j)
                    for (std::size_t k = 0; k < n; ++k)
                        for (std::size_t l = 0; l < n; ++l)
                            expect(c.algebra().multiply(e(i, j), e(k, l)) == (j == k ? e(i, l) : c.algebra().zero()),
                                   tag + ": matrix units");
            }
            expect(sum == *c.algebra().unit(), tag + ": units sum to 1");
            expect(is_simple(c.algebra()).value, tag + ": not simple");
            if (n == 2) {
                expect(oracle::ideals_by_subspace_filter(c.algebra()).size() == 2, tag + ": oracle ideal count");
                expect(enumerate_two_sided_ideals(c.algebra()).size() == 2, tag + ": ideal count");
            }
        }
    return "n <= 3, p in {2, 3}";
}

std::string ac3() {
    std::size_t n = 0;
    for (const auto& [name, o] : finite_sheaves()) {
        const auto c = build_conv_algebra(o);
        if (c.dim() > 8) continue;
        expect(verify_effros_hahn(c).passed(), name + ": effros-hahn");
        for (std::size_t x = 0; x < c.groupoid().unit_count(); ++x) {
            const Induction<PrimeField> ind(c, x);
            for (const auto& s : simple_modules(ind.ring().algebra))
                expect(annihilator(ind.induce(s)) == ind.annihilator_by_criterion(s), name + ": criterion");
        }
        ++n;
    }
    return std::to_string(n) + " fixtures of dimension <= 8";
}

std::string ac4() {
    std::size_t n = 0;
    for (const auto& [name, o] : finite_sheaves()) {
        const auto c = build_conv_algebra(o);
        for (std::size_t x = 0; x < c.groupoid().unit_count(); ++x) {
            const Induction<PrimeField> ind(c, x);
            for (const auto& s : simple_modules(ind.ring().algebra)) {
                expect(is_simple_module(ind.induce(s)).value, name + ": induced module not simple");
                ++n;
            }
        }
    }
    for (const auto& g : {pair_groupoid(2), pair_groupoid(3), mixed_groupoid(),
                          product_groupoid(pair_groupoid(2), group_groupoid(cyclic_group(2)))}) {
        const auto c = build_conv_algebra(delta_sheaf(g, F2));
        for (std::size_t x = 0; x < g.unit_count(); ++x) {
            const Induction<PrimeField> one(c, canonical_transversal(g, x));
            const auto alt = alternative_transversal(g, x);
            const Induction<PrimeField> two(c, alt);
            for (const auto& s : simple_modules(one.ring().algebra)) {
                const auto a = one.induce(s), b = two.induce(s);
                const auto t = one.transversal_change(alt, s);
                expect(is_invertible(F2, t), "transversal change not invertible");
                for (std::size_t k = 0; k < c.dim(); ++k)
                    expect(mat_mul(F2, t, a.action(k)) == mat_mul(F2, b.action(k), t), "transversal change not a hom");
            }
        }
    }
    return std::to_string(n) + " induced simples";
}

std::string ac5() {
    std::size_t n = 0;
    for (const auto& [name, o] : finite_sheaves()) {
        const auto c = build_conv_algebra(o);
        if (c.dim() > 8 || order_of(c) > 4096) continue;
        const auto ideals = oracle::ideals_by_subspace_filter(c.algebra());
        std::vector<Subspace<PrimeField>> inventory;
        for (std::size_t x = 0; x < c.groupoid().unit_count(); ++x) {
            const Induction<PrimeField> ind(c, x);
            for (const auto& s : simple_modules(ind.ring().algebra)) inventory.push_back(annihilator(ind.induce(s)));
        }
        for (const auto& i : ideals) {
            if (i.is_full()) continue;
            bool maximal = true;
            for (const auto& j : ideals)
                if (!j.is_full() && !(j == i) && j.contains(i)) maximal = false;
            if (!maximal) continue;
            expect(std::find(inventory.begin(), inventory.end(), i) != inventory.end(), name + ": maximal ideal missing");
            ++n;
        }
    }
    return std::to_string(n) + " maximal ideals located";
}

std::string ac6() {
    std::size_t n = 0;
    for (const auto& [name, o] : finite_sheaves()) {
        if (!fields_sheaf(o)) continue;
        const auto r = check_simplelife(build_conv_algebra(o));
        expect(r.passed(), name + ": simplelife");
        ++n;
    }
    const auto gal = check_simplelife(build_conv_algebra(gal_sheaf()));
    expect(gal.passed() && gal.lhs["simple"] == true, "gal");
    const auto z2 = check_simplelife(build_conv_algebra(delta_sheaf(group_groupoid(cyclic_group(2)), F2)));
    expect(z2.passed() && z2.lhs["simple"] == false && z2.rhs["int_ker_is_units"] == false, "Z/2");
    return std::to_string(n) + " sheaves of fields, GAL simple, Z/2 not";
}

std::string ac7() {
    std::size_t n = 0;
    for (const auto& [name, o] : finite_sheaves()) {
        const auto c = build_conv_algebra(o);
        if (fields_sheaf(o)) {
            expect(is_diagonal_masa(c) == int_ker_is_units(o), name + ": masa vs int_ker");
            expect(check_masa_criterion(c).passed(), name + ": masa criterion");
        }
        if (check_centralizer_support(c).hypotheses.front().holds.value_or(false)) {
            const auto cen = centralizer_of_diagonal(c);
            const auto& g = c.groupoid();
            for (std::size_t k = 0; k < cen.dim(); ++k)
                for (auto a : c.support(cen.basis_vector(k)))
                    expect(g.src(a) == g.dst(a), name + ": centralizer off isotropy");
            expect(check_centralizer_support(c).passed(), name + ": centralizer support");
        }
        ++n;
    }
    return std::to_string(n) + " fixtures";
}

std::string ac8() {
    for (const auto& [name, o] : finite_sheaves()) {
        if (!fields_sheaf(o)) continue;
        const auto c = build_conv_algebra(o);
        expect(check_vnr_diagonal(c).passed(), name + ": diagonal not regular");
        expect(check_vnr_dictionary(c).passed(), name + ": vnr dictionary");
    }
    const auto dual = check_vnr_diagonal(build_conv_algebra(dual_sheaf(trivial_groupoid(1))));
    expect(!dual.passed(), "DUAL diagonal regular");
    expect(dual.witnesses.value("non_regular_element", "") == "u@1", "DUAL witness " + dual.witnesses.dump());
    return "fields regular, DUAL witness u";
}

std::string ac9() {
    std::size_t n = 0;
    for (const auto& [name, o] : finite_sheaves()) {
        const auto c = build_conv_algebra(o);
        if (fields_sheaf(o) && is_diagonal_masa(c)) {
            expect(jacobson_radical(c.algebra_ptr()).is_zero(), name + ": radical nonzero");
            expect(check_semiprimitivity(c).passed(), name + ": semiprimitivity");
        }
        if (order_of(c) <= 4096) {
            expect(jacobson_radical(c.algebra_ptr()) == oracle::quasi_invertible_radical(c.algebra()),
                   name + ": radical oracle");
            ++n;
        }
    }
    return std::to_string(n) + " radicals matched";
}

std::string ac10() {
    std::size_t n = 0;
    for (const auto& [name, o] : finite_sheaves()) {
        const auto c = build_conv_algebra(o);
        if (c.dim() > Caps{}.ideal_dim) continue;
        expect(check_uniqueness(c).passed(), name + ": uniqueness");
        ++n;
    }
    return std::to_string(n) + " fixtures";
}

std::string ac11() {
    for (const auto& g : {trivial_groupoid(2), group_groupoid(cyclic_group(2)), pair_groupoid(2)}) {
        const auto r = verify_siri(build_conv_algebra(delta_sheaf(g, F2)));
        expect(r.passed(), "siri: " + to_text(r));
    }
    return "T1(2), Z/2, P2";
}

std::string ac12() {
    for (const auto& act : {pierce_swap_action(), pierce_trivial_action(), pierce_frobenius_action()}) {
        const auto res = pierce_comparison(act);
        expect(res.report.passed(), "pierce: " + to_text(res.report));
        expect(check_ring_iso(res.skew.algebra, res.conv.algebra(), res.map), "pierce map not an isomorphism");
    }
    const auto res = pierce_comparison(pierce_frobenius_action());
    const auto& o = res.conv.sheaf();
    const auto& g = o.groupoid();
    expect(g.unit_count() == 1 && g.arrow_count() == 2 && o.stalk(0).dim() == 2, "Frobenius: wrong shape");
    expect(fields_sheaf(o) && int_ker_is_units(o), "Frobenius: stalk not F_4 acted on faithfully");
    expect(res.conv.dim() == 4 && is_simple(res.conv.algebra()).value, "Frobenius: not M_2(F_2)");
    return "swap, trivial, Frobenius";
}

std::string ac13() {
    const auto f2 = share(ground_field_algebra(F2));
    for (const auto& act : {swap_action(), trivial_z2_action()}) expect(check_cinza(act).passed(), "cinza");
    for (const auto& act : {swap_action(), identity_action({"a", "b"})})
        expect(check_simpleaction(act, f2).passed(), "simpleaction");
    for (const auto& act : {natural_action(2), natural_action(3), swap_action(), trivial_z2_action(), identity_action({"a", "b"})}) {
        expect(orbits(germ_groupoid(act).groupoid) == action_orbits(act), "germ orbits");
        expect(check_action_orbits(act).passed(), "orbits");
    }
    return "swap, trivial Z/2, identity, I(2), I(3)";
}

std::string ac14() {
    const auto p = verify_partial_crossed(pswap_action(), QQ);
    expect(p.passed() && p.lhs["crossed_product_dim"] == 5 && p.rhs["conv_dim"] == 5, "PSWAP: " + to_text(p));
    const auto s = verify_partial_crossed(global_swap_action(), QQ);
    expect(s.passed() && s.lhs["crossed_product_dim"] == 4, "global swap: " + to_text(s));
    const auto conv = build_conv_algebra(delta_sheaf(transformation_groupoid(global_swap_action()).groupoid, QQ));
    expect(center(conv.algebra()).dim() == 1 && jacobson_radical(conv.algebra_ptr()).is_zero(), "global swap not M_2(Q)");
    return "PSWAP dim 5, global swap M_2(Q)";
}

std::string ac15() {
    std::size_t n = 0;
    for (const auto& [name, o] : finite_sheaves()) {
        const auto c = build_conv_algebra(o);
        expect(verify_disintegration(c, regular_module(c.algebra_ptr())).passed(), name + ": regular module");
        ++n;
        for (std::size_t x = 0; x < c.groupoid().unit_count(); ++x) {
            const Induction<PrimeField> ind(c, x);
            for (const auto& s : simple_modules(ind.ring().algebra)) {
                expect(verify_disintegration(c, ind.induce(s)).passed(), name + ": induced module");
                ++n;
            }
        }
    }
    return std::to_string(n) + " modules";
}

std::string capture(const std::string& cmd) {
    std::string out;
    FILE* p = ::popen(cmd.c_str(), "r");
    if (!p) throw Failure{"cannot run " + cmd};
    char buf[4096];
    for (std::size_t k; (k = std::fread(buf, 1, sizeof buf, p)) > 0;) out.append(buf, k);
    expect(::pclose(p) == 0, cmd + " exited nonzero");
    return out;
}

std::string ac16(const std::string& cli) {
    if (cli.empty()) {
        for (const auto& fx : catalog())
            expect(to_json(run_fixture(fx)).dump() == to_json(run_fixture(fx)).dump(), fx.name);
        return "in process";
    }
    const auto a = capture(cli + " --seed 7 fixtures run");
    const auto b = capture(cli + " --seed 7 fixtures run --jobs 4");
    expect(!a.empty() && a == b, "fixture reports differ");
    return std::to_string(a.size()) + " identical bytes";
}

}  // namespace

int main(int argc, char** argv) {
    const std::string cli = argc > 1 ? argv[1] : "";
    const std::vector<std::pair<std::string, std::function<std::string()>>> criteria{
        {"convolution agrees with the pointwise formula", ac1},
        {"pair groupoid algebras are matrix algebras", ac2},
        {"effros-hahn inventory", ac3},
        {"induction preserves simplicity", ac4},
        {"maximal ideals are annihilators of induced simples", ac5},
        {"simplicity dictionary", ac6},
        {"masa and centralizer support", ac7},
        {"regular diagonal dictionary", ac8},
        {"semiprimitivity and radical", ac9},
        {"ideals meet the centralizer of the diagonal", ac10},
        {"skew ring of the spectral action", ac11},
        {"pierce comparison", ac12},
        {"dynamics dictionary", ac13},
        {"partial crossed products", ac14},
        {"disintegration", ac15},
        {"determinism", [&] { return ac16(cli); }},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto& [title, run] = criteria[i];
        std::ostringstream line;
        line << "AC" << i + 1 << ' ';
        try {
            const auto detail = run();
            line << "PASS " << title << " (" << detail << ")";
        } catch (const Failure& f) {
            line << "FAIL " << title << ": " << f.what;
            ++failed;
        } catch (const std::exception& e) {
            line << "FAIL " << title << ": " << e.what();
            ++failed;
        }
        std::cout << line.str() << std::endl;
    }
    return failed == 0 ? 0 : 1;
}
