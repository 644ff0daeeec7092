#include <catch_amalgamated.hpp>

#include "sheafalg/fixtures.hpp"

using namespace sheafalg;

TEST_CASE("the catalog covers the required fixtures") {
    const auto cat = catalog();
    CHECK(cat.size() >= 14);
    for (const char* name : {"t1-1-f2", "t1-2-f2", "t1-3-f2", "p2-f2", "p2-f3", "p2-q", "p3-f2", "p3-f3", "p3-q",
                             "group-z2-f2", "group-z3-f3", "group-s3-f2", "gal", "dual-t1", "dual-p2", "action-swap",
                             "action-trivial-z2", "partial-pswap", "action-i2", "mixed-p2-z2"})
        CHECK_NOTHROW(find_fixture(cat, name));
    CHECK_THROWS_AS(find_fixture(cat, "nope"), InputError);
}

TEST_CASE("fixture names are unique and sorted") {
    const auto cat = catalog();
    for (std::size_t i = 1; i < cat.size(); ++i) CHECK(cat[i - 1].name < cat[i].name);
}

TEST_CASE("every expected value names its oracle") {
    for (const auto& fx : catalog())
        for (const auto& e : fx.expected) {
            INFO(fx.name << "/" << e.check);
            CHECK_FALSE(e.oracle.empty());
        }
}

TEST_CASE("every fixture reproduces its expected values") {
    for (const auto& fx : catalog()) {
        const auto r = run_fixture(fx);
        INFO(to_json(r).dump(2));
        CHECK(r.passed());
        CHECK(r.expectations.size() == fx.expected.size());
    }
}

TEST_CASE("GAL and DUAL expectations") {
    const auto cat = catalog();
    auto expected = [&](const std::string& fx, const std::string& check) {
        for (const auto& e : find_fixture(cat, fx).expected)
            if (e.check == check) return e.value;
        return Json(nullptr);
    };
    CHECK(expected("gal", "simple") == true);
    CHECK(expected("gal", "masa") == true);
    CHECK(expected("gal", "effective") == false);
    CHECK(expected("gal", "int_ker") == true);
    CHECK(expected("dual-t1", "vnr_diagonal") == false);
    CHECK(expected("dual-t1", "ideals") == 3);
}

TEST_CASE("fixture reports are deterministic") {
    for (const auto& fx : catalog()) {
        if (fx.name == "p3-f3" || fx.name == "p3-q") continue;
        CHECK(to_json(run_fixture(fx)).dump() == to_json(run_fixture(fx)).dump());
    }
}

TEST_CASE("caps are respected by fixture runs") {
    Caps tight;
    tight.ideal_dim = 2;
    const auto r = run_fixture(find_fixture(catalog(), "t1-2-f2"), tight);
    CHECK(r.passed());
    CHECK_THROWS_AS(run_fixture(find_fixture(catalog(), "group-z3-f3"), tight), CapExceeded);
}
