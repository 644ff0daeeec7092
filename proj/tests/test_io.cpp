#include <catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>

#include "sheafalg/fixtures.hpp"
#include "sheafalg/io.hpp"

using namespace sheafalg;
namespace fs = std::filesystem;

namespace {

const PrimeField F2{2};

Json subject_to_json(const FixtureSubject& subject) {
    return std::visit(
        [](const auto& x) -> Json {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, SpaceAction>)
                return io::space_action_to_json(x);
            else if constexpr (std::is_same_v<T, PartialGroupAction>)
                return io::partial_action_to_json(x);
            else if constexpr (std::is_same_v<T, SpectralRingAction<PrimeField>>)
                return io::ring_action_to_json(x);
            else
                return io::sheaf_to_json(x);
        },
        subject);
}

Json reparse(const Json& j) {
    const auto kind = j.at("kind").get<std::string>();
    if (kind == "sheaf") return std::visit([](const auto& s) { return io::sheaf_to_json(s); }, io::parse_sheaf(j));
    if (kind == "space_action") return io::space_action_to_json(io::parse_space_action(j));
    if (kind == "partial_group_action") return io::partial_action_to_json(io::parse_partial_action(j));
    return std::visit([](const auto& a) { return io::ring_action_to_json(a); }, io::parse_ring_action(j));
}

struct TempDir {
    fs::path path;
    TempDir() : path(fs::temp_directory_path() / ("sheafalg-io-" + std::to_string(::getpid()))) {
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    void write(const std::string& name, const Json& j) const { std::ofstream(path / name) << j.dump(2); }
};

Json gal_json() {
    return Json::parse(R"({
      "kind": "sheaf",
      "groupoid": {"kind": "groupoid", "units": ["x"],
                   "arrows": [{"id": "x", "src": "x", "dst": "x"}, {"id": "g", "src": "x", "dst": "x"}],
                   "compose": [["g", "g", "x"]], "inverse": [["g", "g"]]},
      "field": {"p": 2},
      "stalks": {"x": {"dim": 2, "labels": ["1", "w"], "one": [1, 0],
                       "mul": [[0, 0, [1, 0]], [0, 1, [0, 1]], [1, 0, [0, 1]], [1, 1, [1, 1]]]}},
      "alpha": {"g": [[1, 1], [0, 1]]}
    })");
}

}  // namespace

TEST_CASE("every fixture survives a JSON round trip") {
    for (const auto& fx : catalog()) {
        INFO(fx.name);
        const auto j = subject_to_json(fx.build());
        const auto back = reparse(Json::parse(j.dump()));
        CHECK(back == j);
    }
}

TEST_CASE("round-tripped sheaves build the same algebra") {
    for (const auto& fx : catalog()) {
        auto subject = fx.build();
        auto* s = std::get_if<GSheaf<PrimeField>>(&subject);
        if (!s) continue;
        const auto back = std::get<GSheaf<PrimeField>>(io::parse_sheaf(io::sheaf_to_json(*s)));
        const auto a = build_conv_algebra(*s), b = build_conv_algebra(back);
        CHECK(a.algebra().labels() == b.algebra().labels());
        for (std::size_t i = 0; i < a.dim(); ++i)
            for (std::size_t j = 0; j < a.dim(); ++j) CHECK(a.algebra().product(i, j) == b.algebra().product(i, j));
    }
}

TEST_CASE("a hand-written GAL document") {
    const auto o = std::get<GSheaf<PrimeField>>(io::parse_sheaf(gal_json()));
    CHECK_FALSE(validate_sheaf(o));
    const auto c = build_conv_algebra(o);
    CHECK(c.dim() == 4);
    CHECK(is_simple(c.algebra()).value);
}

TEST_CASE("identity alpha and identity products may be omitted") {
    auto j = gal_json();
    CHECK(j["alpha"].size() == 1);
    const auto o = std::get<GSheaf<PrimeField>>(io::parse_sheaf(j));
    CHECK(o.alpha(o.groupoid().unit_arrow(0)) == identity_matrix(F2, 2));
}

TEST_CASE("rational coefficients") {
    const RationalField q;
    CHECK(io::parse_coeff(q, Json("3/6")) == q.parse("1/2"));
    CHECK(io::parse_coeff(q, Json(2)) == q.from_int(2));
    CHECK(io::coeff_to_json(q, q.parse("-2/4")) == "-1/2");
    CHECK_THROWS_AS(io::parse_coeff(q, Json(0.5)), InputError);
}

TEST_CASE("schema errors are input errors") {
    SECTION("coefficient out of range") {
        auto j = gal_json();
        j["alpha"]["g"][0][0] = 2;
        CHECK_THROWS_AS(io::parse_sheaf(j), InputError);
    }
    SECTION("unknown arrow in alpha") {
        auto j = gal_json();
        j["alpha"]["h"] = Json::array({Json::array({1, 0}), Json::array({0, 1})});
        CHECK_THROWS_AS(io::parse_sheaf(j), InputError);
    }
    SECTION("missing stalk") {
        auto j = gal_json();
        j["stalks"].erase("x");
        CHECK_THROWS_AS(io::parse_sheaf(j), InputError);
    }
    SECTION("wrong matrix shape") {
        auto j = gal_json();
        j["alpha"]["g"] = Json::array({Json::array({1, 1})});
        CHECK_THROWS_AS(io::parse_sheaf(j), InputError);
    }
    SECTION("wrong kind") {
        auto j = gal_json();
        j["kind"] = "groupoid";
        CHECK_THROWS_AS(io::parse_sheaf(j), InputError);
    }
    SECTION("bad field") {
        auto j = gal_json();
        j["field"] = "R";
        CHECK_THROWS_AS(io::parse_sheaf(j), InputError);
    }
}

TEST_CASE("nested documents are resolved relative to the referencing file") {
    TempDir dir;
    fs::create_directories(dir.path / "sub");
    auto j = gal_json();
    dir.write("sub/z2.json", j["groupoid"]);
    j["groupoid"] = "z2.json";
    dir.write("sub/gal.json", j);
    dir.write("mod.json", Json{{"kind", "module"},
                               {"algebra", "sub/gal.json"},
                               {"dim", 2},
                               {"action", {{"1@x", {{1, 0}, {0, 1}}},
                                           {"w@x", {{0, 1}, {1, 1}}},
                                           {"1@g", {{1, 1}, {0, 1}}},
                                           {"w@g", {{0, 1}, {1, 0}}}}}});

    const auto loaded = io::load_json(dir.path / "sub" / "gal.json");
    const auto o = std::get<GSheaf<PrimeField>>(io::parse_sheaf(loaded, dir.path / "sub"));
    CHECK(o.groupoid().arrow_count() == 2);

    const auto doc = io::parse_module_document(io::load_json(dir.path / "mod.json"), dir.path);
    CHECK_FALSE(doc.isotropy_unit);
    const auto c = build_conv_algebra(std::get<GSheaf<PrimeField>>(doc.sheaf));
    const auto m = io::build_module(c.algebra_ptr(), doc.dim, doc.action);
    CHECK(m.dim() == 2);
    // w acts by multiplication on F_4 and g by Frobenius: the natural simple M_2(F_2)-module
    CHECK_FALSE(validate_module(m));

    CHECK_THROWS_AS(io::load_json(dir.path / "missing.json"), InputError);
    std::ofstream(dir.path / "broken.json") << "{";
    CHECK_THROWS_AS(io::load_json(dir.path / "broken.json"), InputError);
}

TEST_CASE("semigroup sugar") {
    CHECK(io::parse_semigroup(Json{{"partial_injections", 2}}).size() == 7);
    CHECK(io::parse_semigroup(Json{{"group", {{"cyclic", 3}}}}).size() == 3);
    CHECK(io::parse_semigroup(Json{{"group", {{"symmetric", 3}}}}).size() == 6);
    const auto s = io::parse_semigroup(io::semigroup_to_json(symmetric_inverse_monoid(2)));
    CHECK_FALSE(validate_inverse_semigroup(s));
    CHECK(s.size() == 7);
}

TEST_CASE("natural space actions") {
    const auto act = io::parse_space_action(
        Json{{"kind", "space_action"}, {"semigroup", {{"partial_injections", 2}}}, {"natural", true}});
    CHECK(act.points.size() == 2);
    CHECK_FALSE(validate_space_action(act));
}

TEST_CASE("ring action defaults") {
    // F_2^2 with Z/2 swapping coordinates; identity alpha, domain and unit omitted
    const Json j{{"kind", "ring_action"},
                 {"semigroup", {{"group", {{"cyclic", 2}}}}},
                 {"field", {{"p", 2}}},
                 {"algebra", {{"dim", 2}, {"one", {1, 1}}, {"mul", {{0, 0, {1, 0}}, {1, 1, {0, 1}}}}}},
                 {"alpha", {{"g", {{0, 1}, {1, 0}}}}}};
    const auto act = std::get<SpectralRingAction<PrimeField>>(io::parse_ring_action(j));
    CHECK_FALSE(validate_spectral_action(act));
    CHECK(pierce_verification(act).passed());
}

TEST_CASE("partial group actions default the identity") {
    const Json j{{"kind", "partial_group_action"},
                 {"group", {{"cyclic", 2}}},
                 {"points", {"a", "b", "c"}},
                 {"theta", {{"g", {{"a", "b"}, {"b", "a"}}}}}};
    const auto act = io::parse_partial_action(j);
    CHECK_FALSE(validate_partial_action(act));
    CHECK(act.theta == pswap_action().theta);
}

TEST_CASE("algebra documents") {
    const auto j = io::algebra_to_json(f4_algebra());
    CHECK(j["kind"] == "algebra");
    const auto a = std::get<FDAlgebra<PrimeField>>(io::parse_algebra(j));
    CHECK(io::algebra_to_json(a) == j);
}
