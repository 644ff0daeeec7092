// sheafalg: build convolution algebras of finite groupoids and check their
// structure from JSON descriptions.
//
// Exit codes: 0 pass (or hypothesis skipped), 1 check failed, 2 input or
// usage error, 3 enumeration cap exceeded.

#include <future>
#include <iostream>

#include <CLI11.hpp>

#include "sheafalg/fixtures.hpp"
#include "sheafalg/io.hpp"

using namespace sheafalg;
namespace fs = std::filesystem;

namespace {

enum Exit { kPass = 0, kFail = 1, kInput = 2, kCap = 3 };

struct Options {
    Caps caps;
    bool text = false;
    std::string out;
};

void emit(const Options& opt, const Json& j) {
    if (opt.out.empty()) {
        std::cout << j.dump(2) << "\n";
        return;
    }
    std::ofstream f(opt.out);
    if (!f) throw InputError("cannot write '" + opt.out + "'");
    f << j.dump(2) << "\n";
}

int emit_report(const Options& opt, const Report& r) {
    if (opt.text)
        std::cout << to_text(r) << "\n";
    else
        emit(opt, to_json(r));
    return r.status == Status::fail ? kFail : kPass;
}

Report needs_finite_field(const std::string& check) {
    Report r;
    r.check = check;
    r.hypothesis("finite_field", false);
    r.notes.push_back("this check enumerates elements or ideals and needs coefficients in F_p");
    return r.conclude(false);
}

struct Document {
    Json json;
    fs::path dir;
    std::string kind;
};

Document load(const std::string& path) {
    Document d{io::load_json(path), fs::path(path).parent_path(), {}};
    if (d.dir.empty()) d.dir = ".";
    d.kind = io::require(d.json, "kind", path).get<std::string>();
    return d;
}

Document load_kind(const std::string& path, const std::string& kind) {
    auto d = load(path);
    if (d.kind != kind) throw InputError(path + ": expected a \"" + kind + "\" document, got \"" + d.kind + "\"");
    return d;
}

io::AnySheaf load_sheaf(const std::string& path) {
    auto d = load_kind(path, "sheaf");
    return io::parse_sheaf(d.json, d.dir);
}

Json validation_json(const std::string& kind, const Validation& v) {
    Json j{{"kind", kind}, {"valid", !v.has_value()}};
    if (v) {
        j["axiom"] = v->axiom;
        j["detail"] = v->detail;
    }
    return j;
}

// ---- subcommands ---------------------------------------------------------------

int cmd_validate(const Options& opt, const std::string& path) {
    const auto d = load(path);
    Validation v;
    if (d.kind == "groupoid") {
        v = validate_groupoid(io::parse_groupoid(d.json));
    } else if (d.kind == "sheaf") {
        const auto g = io::parse_groupoid(io::resolve(io::require(d.json, "groupoid", "sheaf"), d.dir));
        v = validate_groupoid(g);
        if (!v) v = std::visit([](const auto& o) { return validate_sheaf(o); }, io::parse_sheaf(d.json, d.dir));
    } else if (d.kind == "algebra") {
        v = std::visit([](const auto& a) { return validate_algebra(a); }, io::parse_algebra(d.json));
    } else if (d.kind == "inverse_semigroup") {
        v = validate_inverse_semigroup(io::parse_semigroup(d.json));
    } else if (d.kind == "space_action") {
        v = validate_space_action(io::parse_space_action(d.json, d.dir));
    } else if (d.kind == "ring_action") {
        v = std::visit([](const auto& a) { return validate_spectral_action(a); }, io::parse_ring_action(d.json, d.dir));
    } else if (d.kind == "partial_group_action") {
        v = validate_partial_action(io::parse_partial_action(d.json));
    } else if (d.kind == "module") {
        const auto doc = io::parse_module_document(d.json, d.dir);
        v = std::visit(
            [&](const auto& o) -> Validation {
                if (doc.isotropy_unit) {
                    const auto ring = isotropy_ring(o, o.groupoid().unit_index(*doc.isotropy_unit));
                    return validate_module(io::build_module(ring.algebra, doc.dim, doc.action));
                }
                const auto c = build_conv_algebra(o);
                return validate_module(io::build_module(c.algebra_ptr(), doc.dim, doc.action));
            },
            doc.sheaf);
    } else {
        throw InputError("unknown document kind \"" + d.kind + "\"");
    }
    emit(opt, validation_json(d.kind, v));
    if (v) {
        std::cerr << path << ": " << v->message() << "\n";
        return kInput;
    }
    return kPass;
}

int cmd_algebra(const Options& opt, const std::string& path) {
    const auto j = std::visit(
        [](const auto& o) {
            const auto c = build_conv_algebra(o);
            const auto& a = c.algebra();
            Json table = Json::array();
            for (std::size_t i = 0; i < a.dim(); ++i)
                for (std::size_t k = 0; k < a.dim(); ++k)
                    if (!is_zero_vector(a.field(), a.product(i, k)))
                        table.push_back(Json::array({i, k, io::vector_to_json(a.field(), a.product(i, k))}));
            return Json{{"field", io::field_to_json(a.field())},
                        {"dim", a.dim()},
                        {"labels", a.labels()},
                        {"table", table},
                        {"unit", io::vector_to_json(a.field(), *a.unit())}};
        },
        load_sheaf(path));
    emit(opt, j);
    return kPass;
}

int cmd_check(const Options& opt, const std::string& name, const std::string& path) {
    if (name == "topfree") {
        const auto d = load_kind(path, "space_action");
        return emit_report(opt, check_topfree(io::parse_space_action(d.json, d.dir)));
    }
    const auto sheaf = load_sheaf(path);
    const auto r = std::visit(
        [&](const auto& o) -> Report {
            using F = std::decay_t<decltype(o.field())>;
            if (name == "minimal") return check_minimal(o.groupoid());
            if (name == "effective") return check_effective(o.groupoid());
            if (name == "int-ker") return check_int_ker(o);
            const auto c = build_conv_algebra(o);
            if (name == "masa") return check_masa(c);
            if (name == "semiprimitive") return check_semiprimitive(c, opt.caps);
            if constexpr (F::is_finite) {
                if (name == "simple") return check_simple(c, opt.caps);
                if (name == "primitive") return check_primitive(c, opt.caps);
                if (name == "vnr-diagonal") return check_vnr_diagonal(c, opt.caps);
                if (name == "uniqueness") return check_uniqueness(c, opt.caps);
            } else {
                if (name == "simple" || name == "primitive" || name == "vnr-diagonal" || name == "uniqueness")
                    return needs_finite_field(name);
            }
            throw InputError("unknown check '" + name + "'");
        },
        sheaf);
    return emit_report(opt, r);
}

/// A sheaf file (its convolution algebra) or an algebra file.
template <class Fn>
Json with_algebra(const std::string& path, Fn fn) {
    const auto d = load(path);
    if (d.kind == "algebra")
        return std::visit([&](const auto& a) { return fn(share(a)); }, io::parse_algebra(d.json));
    if (d.kind == "sheaf")
        return std::visit([&](const auto& o) { return fn(build_conv_algebra(o).algebra_ptr()); }, io::parse_sheaf(d.json, d.dir));
    throw InputError(path + ": expected a sheaf or algebra document, got \"" + d.kind + "\"");
}

int cmd_ideals(const Options& opt, const std::string& path) {
    const auto j = with_algebra(path, [&](const auto& a) -> Json {
        using F = std::decay_t<decltype(a->field())>;
        if constexpr (F::is_finite) {
            const auto ideals = enumerate_two_sided_ideals(*a, opt.caps);
            Json list = Json::array();
            for (const auto& i : ideals) list.push_back(io::subspace_to_json(i));
            return Json{{"dim", a->dim()}, {"labels", a->labels()}, {"count", ideals.size()}, {"ideals", list}};
        } else {
            throw InputError("ideal enumeration needs coefficients in F_p");
        }
    });
    emit(opt, j);
    return kPass;
}

int cmd_radical(const Options& opt, const std::string& path) {
    const auto j = with_algebra(path, [&](const auto& a) {
        const auto r = jacobson_radical(a, opt.caps);
        Json out = io::subspace_to_json(r);
        out["labels"] = a->labels();
        return out;
    });
    emit(opt, j);
    return kPass;
}

int cmd_induce(const Options& opt, const std::string& sheaf_path, const std::string& unit, const std::string& module_path) {
    const auto m = load_kind(module_path, "module").json;
    const auto dim = io::require(m, "dim", "module").get<std::size_t>();
    const auto& action = io::require(m, "action", "module");
    const auto j = std::visit(
        [&](const auto& o) -> Json {
            using F = std::decay_t<decltype(o.field())>;
            const auto c = build_conv_algebra(o);
            const auto x = o.groupoid().unit_index(unit);
            const Induction ind(c, x);
            const auto mod = io::build_module(ind.ring().algebra, dim, action);
            if (auto v = validate_module(mod)) throw InputError("module over B_" + unit + ": " + v->message());
            const auto induced = ind.induce(mod);
            Json orbit = Json::array();
            for (auto y : ind.orbit()) orbit.push_back(o.groupoid().unit_id(y));
            Json out{{"unit", unit}, {"orbit", orbit}, {"dim", induced.dim()}};
            if constexpr (F::is_finite) {
                out["simple_input"] = is_simple_module(mod, opt.caps).value;
                out["simple"] = is_simple_module(induced, opt.caps).value;
            }
            out["action"] = io::module_action_to_json(induced);
            out["annihilator"] = io::subspace_to_json(ind.annihilator_induced(mod));
            return out;
        },
        load_sheaf(sheaf_path));
    emit(opt, j);
    return kPass;
}

int cmd_verify(const Options& opt, const std::string& thm, const std::string& path, std::uint32_t stalk_p) {
    const auto d = load(path);
    Report r;
    if (thm == "cinza" || thm == "simpleaction" || thm == "orbits" || thm == "topfree") {
        if (d.kind != "space_action") throw InputError(thm + " takes a space_action document");
        const auto act = io::parse_space_action(d.json, d.dir);
        if (thm == "cinza") r = check_cinza(act);
        if (thm == "orbits") r = check_action_orbits(act);
        if (thm == "topfree") r = check_topfree(act);
        if (thm == "simpleaction") r = check_simpleaction(act, share(ground_field_algebra(PrimeField(stalk_p))), opt.caps);
    } else if (thm == "pierce") {
        if (d.kind != "ring_action") throw InputError("pierce takes a ring_action document");
        r = std::visit(
            [&](const auto& act) -> Report {
                using F = std::decay_t<decltype(act.algebra->field())>;
                if constexpr (F::is_finite)
                    return pierce_verification(act, opt.caps);
                else
                    return needs_finite_field("pierce");
            },
            io::parse_ring_action(d.json, d.dir));
    } else if (thm == "partial-crossed") {
        if (d.kind != "partial_group_action") throw InputError("partial-crossed takes a partial_group_action document");
        const auto act = io::parse_partial_action(d.json);
        const auto field = d.json.contains("field") ? io::parse_field(d.json.at("field")) : io::AnyField(RationalField{});
        r = std::visit([&](const auto& f) { return verify_partial_crossed(act, f, opt.caps); }, field);
    } else if (thm == "disintegration" && d.kind == "module") {
        const auto doc = io::parse_module_document(d.json, d.dir);
        if (doc.isotropy_unit) throw InputError("disintegration needs a module over the convolution algebra");
        r = std::visit(
            [&](const auto& o) {
                const auto c = build_conv_algebra(o);
                return verify_disintegration(c, io::build_module(c.algebra_ptr(), doc.dim, doc.action));
            },
            doc.sheaf);
    } else {
        if (d.kind != "sheaf") throw InputError(thm + " takes a sheaf document");
        r = std::visit(
            [&](const auto& o) -> Report {
                using F = std::decay_t<decltype(o.field())>;
                const auto c = build_conv_algebra(o);
                if (thm == "siri") return verify_siri(c, opt.caps);
                if (thm == "disintegration") return verify_disintegration(c, regular_module(c.algebra_ptr()));
                if (thm == "semiprimitivity") return check_semiprimitivity(c, opt.caps);
                if (thm == "masa-criterion") return check_masa_criterion(c);
                if (thm == "centralizer-support") return check_centralizer_support(c);
                if constexpr (F::is_finite) {
                    if (thm == "effros-hahn") return verify_effros_hahn(c, opt.caps);
                    if (thm == "simplelife") return check_simplelife(c, opt.caps);
                    if (thm == "primitivity") return check_primitivity(c, opt.caps);
                    if (thm == "vnr-dictionary") return check_vnr_dictionary(c, opt.caps);
                    if (thm == "uniqueness") return check_uniqueness(c, opt.caps);
                } else {
                    for (const char* n : {"effros-hahn", "simplelife", "primitivity", "vnr-dictionary", "uniqueness"})
                        if (thm == n) return needs_finite_field(thm);
                }
                throw InputError("unknown theorem '" + thm + "'");
            },
            io::parse_sheaf(d.json, d.dir));
    }
    return emit_report(opt, r);
}

int cmd_fixtures(const Options& opt, const std::string& filter, unsigned jobs) {
    std::vector<Fixture> selected;
    for (auto& fx : catalog())
        if (filter.empty() || fx.name.find(filter) != std::string::npos) selected.push_back(std::move(fx));
    if (selected.empty()) throw InputError("no fixture matches '" + filter + "'");

    std::vector<FixtureResult> results(selected.size());
    std::vector<std::future<void>> running;
    jobs = std::max(1u, jobs);
    for (std::size_t i = 0; i < selected.size(); ++i) {
        if (running.size() == jobs) {
            running.front().get();
            running.erase(running.begin());
        }
        running.push_back(std::async(std::launch::async, [&, i] { results[i] = run_fixture(selected[i], opt.caps); }));
    }
    for (auto& f : running) f.get();

    bool all = true;
    Json list = Json::array();
    for (const auto& r : results) {
        all = all && r.passed();
        if (opt.text) {
            std::cout << (r.passed() ? "PASS " : "FAIL ") << r.name << "\n";
            for (const auto& e : r.expectations)
                if (!e.pass)
                    std::cout << "  " << e.expected.check << ": expected " << e.expected.value.dump() << " ("
                              << e.expected.oracle << "), got " << e.actual.dump() << "\n";
            for (const auto& rep : r.reports)
                if (rep.status == Status::fail) std::cout << "  " << to_text(rep) << "\n";
        }
        list.push_back(to_json(r));
    }
    if (!opt.text) emit(opt, Json{{"pass", all}, {"fixtures", list}});
    return all ? kPass : kFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Convolution algebras of finite groupoids with coefficients in a sheaf of rings"};
    app.require_subcommand(1);
    Options opt;
    app.add_option("--seed", opt.caps.seed, "Seed for the randomized MeatAxe fallback");
    app.add_option("--cap-arrows", opt.caps.arrows, "Largest groupoid whose bisections are enumerated");
    app.add_option("--cap-ideal-dim", opt.caps.ideal_dim, "Largest algebra whose ideals are enumerated");
    app.add_option("--cap-order", opt.caps.order, "Largest algebra enumerated element by element");
    app.add_flag("--text", opt.text, "Print line-oriented text instead of JSON");

    std::string file, name, unit, module_file, filter;
    std::uint32_t stalk_p = 2;
    unsigned jobs = 1;

    auto* validate = app.add_subcommand("validate", "Run the validator for a document");
    validate->add_option("file", file)->required();

    auto* algebra = app.add_subcommand("algebra", "Emit the structure constants of the convolution algebra");
    algebra->add_option("file", file)->required();
    algebra->add_option("--out", opt.out, "Write to a file instead of stdout");

    auto* check = app.add_subcommand("check", "Decide one property");
    check->add_option("name", name)
        ->required()
        ->check(CLI::IsMember({"simple", "semiprimitive", "primitive", "vnr-diagonal", "masa", "uniqueness", "minimal",
                               "effective", "int-ker", "topfree"}));
    check->add_option("file", file)->required();

    auto* ideals = app.add_subcommand("ideals", "Enumerate two-sided ideals");
    ideals->add_option("file", file)->required();

    auto* radical = app.add_subcommand("radical", "Compute the Jacobson radical");
    radical->add_option("file", file)->required();

    auto* induce = app.add_subcommand("induce", "Induce a module from an isotropy ring");
    induce->add_option("file", file)->required();
    induce->add_option("--unit", unit)->required();
    induce->add_option("--module", module_file)->required();

    auto* verify = app.add_subcommand("verify", "Verify a structural statement on a finite instance");
    verify->add_option("thm", name)
        ->required()
        ->check(CLI::IsMember({"effros-hahn", "simplelife", "siri", "pierce", "cinza", "simpleaction", "partial-crossed",
                               "disintegration", "primitivity", "semiprimitivity", "vnr-dictionary", "uniqueness",
                               "masa-criterion", "centralizer-support", "orbits", "topfree"}));
    verify->add_option("file", file)->required();
    verify->add_option("--stalk-p", stalk_p, "Prime for the constant stalk in simpleaction");

    auto* fixtures = app.add_subcommand("fixtures", "Work with the built-in fixture catalog");
    fixtures->require_subcommand(1);
    auto* run = fixtures->add_subcommand("run", "Run the catalog");
    run->add_option("--filter", filter, "Only fixtures whose name contains this string");
    run->add_option("--jobs", jobs, "Fixtures to run concurrently");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kPass : kInput;
    }

    try {
        if (*validate) return cmd_validate(opt, file);
        if (*algebra) return cmd_algebra(opt, file);
        if (*check) return cmd_check(opt, name, file);
        if (*ideals) return cmd_ideals(opt, file);
        if (*radical) return cmd_radical(opt, file);
        if (*induce) return cmd_induce(opt, file, unit, module_file);
        if (*verify) return cmd_verify(opt, name, file, stalk_p);
        if (*run) return cmd_fixtures(opt, filter, jobs);
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kInput;
    } catch (const Json::exception& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kInput;
    } catch (const CapExceeded& e) {
        std::cerr << "cap exceeded: " << e.what() << "\n";
        return kCap;
    } catch (const InvariantViolation& e) {
        std::cerr << "internal invariant violated: " << e.what() << "\n";
        return kFail;
    }
    return kInput;
}
