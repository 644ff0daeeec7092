#pragma once

// JSON documents. Every document has a top-level "kind". Coefficients over F_p
// are integers 0..p-1; over Q they are "num/den" strings (plain integers are
// also accepted on input). Nested documents ("groupoid", "semigroup",
// "algebra") may be given inline or as a path relative to the referencing file.

#include <filesystem>
#include <fstream>
#include <variant>

#include "sheafalg/induction.hpp"
#include "sheafalg/partial_action.hpp"
#include "sheafalg/pierce.hpp"

namespace sheafalg::io {

namespace fs = std::filesystem;

using AnyField = std::variant<PrimeField, RationalField>;
using AnySheaf = std::variant<GSheaf<PrimeField>, GSheaf<RationalField>>;
using AnyRingAction = std::variant<SpectralRingAction<PrimeField>, SpectralRingAction<RationalField>>;
using AnyAlgebra = std::variant<FDAlgebra<PrimeField>, FDAlgebra<RationalField>>;

// ---- plumbing -------------------------------------------------------------------

inline Json load_json(const fs::path& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open '" + path.string() + "'");
    try {
        return Json::parse(in);
    } catch (const Json::exception& e) {
        throw InputError("'" + path.string() + "' is not valid JSON: " + e.what());
    }
}

inline const Json& require(const Json& j, const char* key, const std::string& ctx) {
    if (!j.is_object() || !j.contains(key)) throw InputError(ctx + ": missing \"" + key + "\"");
    return j.at(key);
}

inline std::string require_kind(const Json& j, const std::string& kind) {
    const auto k = require(j, "kind", "document").get<std::string>();
    if (k != kind) throw InputError("expected a document of kind \"" + kind + "\", got \"" + k + "\"");
    return k;
}

/// An inline object, or a path to a JSON file relative to base.
inline Json resolve(const Json& j, const fs::path& base, fs::path* where = nullptr) {
    if (j.is_string()) {
        const auto p = base / j.get<std::string>();
        if (where) *where = p.parent_path();
        return load_json(p);
    }
    if (where) *where = base;
    return j;
}

inline std::size_t index_in(const std::vector<std::string>& names, const std::string& id, const std::string& what) {
    for (std::size_t i = 0; i < names.size(); ++i)
        if (names[i] == id) return i;
    throw InputError("unknown " + what + " '" + id + "'");
}

// ---- coefficients -----------------------------------------------------------------

inline AnyField parse_field(const Json& j) {
    if (j.is_string() && j.get<std::string>() == "Q") return RationalField{};
    if (j.is_object() && j.contains("p")) return PrimeField(j.at("p").get<std::uint32_t>());
    throw InputError("field must be \"Q\" or {\"p\": prime}");
}

inline Json field_to_json(const PrimeField& f) { return Json{{"p", f.characteristic()}}; }
inline Json field_to_json(const RationalField&) { return "Q"; }

inline PrimeField::value_type parse_coeff(const PrimeField& f, const Json& j) {
    if (!j.is_number_integer()) throw InputError("F_p coefficients must be integers, got " + j.dump());
    const auto v = j.get<long long>();
    if (v < 0 || static_cast<std::uint64_t>(v) >= f.order())
        throw InputError("coefficient " + std::to_string(v) + " is not in 0.." + std::to_string(f.order() - 1));
    return static_cast<PrimeField::value_type>(v);
}

inline RationalField::value_type parse_coeff(const RationalField& f, const Json& j) {
    if (j.is_number_integer()) return f.from_int(j.get<long long>());
    if (j.is_string()) return f.parse(j.get<std::string>());
    throw InputError("Q coefficients must be \"num/den\" strings, got " + j.dump());
}

inline Json coeff_to_json(const PrimeField&, PrimeField::value_type v) { return v; }
inline Json coeff_to_json(const RationalField& f, const RationalField::value_type& v) { return f.to_string(v); }

template <Field F>
Vec<F> parse_vector(const F& f, const Json& j, std::size_t n, const std::string& ctx) {
    if (!j.is_array() || j.size() != n) throw InputError(ctx + ": expected a vector of length " + std::to_string(n));
    Vec<F> v;
    for (const auto& c : j) v.push_back(parse_coeff(f, c));
    return v;
}

template <Field F>
Json vector_to_json(const F& f, const Vec<F>& v) {
    Json out = Json::array();
    for (const auto& c : v) out.push_back(coeff_to_json(f, c));
    return out;
}

/// A matrix given as a list of rows.
template <Field F>
Mat<F> parse_matrix(const F& f, const Json& j, std::size_t rows, std::size_t cols, const std::string& ctx) {
    if (!j.is_array() || j.size() != rows)
        throw InputError(ctx + ": expected a " + std::to_string(rows) + "x" + std::to_string(cols) + " matrix");
    Mat<F> m(rows, cols, f.zero());
    for (std::size_t r = 0; r < rows; ++r) {
        const auto row = parse_vector(f, j[r], cols, ctx);
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = row[c];
    }
    return m;
}

template <Field F>
Json matrix_to_json(const F& f, const Mat<F>& m) {
    Json out = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(vector_to_json(f, m.row_vector(r)));
    return out;
}

// ---- algebras -----------------------------------------------------------------------

/// {dim, labels?, one?, mul: [[i, j, [coeffs]]]}; omitted products are zero.
template <Field F>
FDAlgebra<F> parse_algebra_body(const F& f, const Json& j, const std::string& ctx) {
    const auto n = require(j, "dim", ctx).get<std::size_t>();
    std::vector<std::string> labels;
    if (j.contains("labels")) {
        labels = j.at("labels").get<std::vector<std::string>>();
        if (labels.size() != n) throw InputError(ctx + ": need " + std::to_string(n) + " labels");
    } else {
        for (std::size_t i = 0; i < n; ++i) labels.push_back("b" + std::to_string(i));
    }
    std::vector<Vec<F>> table(n * n, zero_vector(f, n));
    if (j.contains("mul"))
        for (const auto& e : j.at("mul")) {
            if (!e.is_array() || e.size() != 3) throw InputError(ctx + ": mul entries are [i, j, [coeffs]]");
            const auto a = e[0].get<std::size_t>(), b = e[1].get<std::size_t>();
            if (a >= n || b >= n) throw InputError(ctx + ": mul index out of range");
            table[a * n + b] = parse_vector(f, e[2], n, ctx);
        }
    std::optional<Vec<F>> one;
    if (j.contains("one")) one = parse_vector(f, j.at("one"), n, ctx + " unit");
    return FDAlgebra<F>(f, std::move(labels), std::move(table), std::move(one));
}

template <Field F>
Json algebra_body_to_json(const FDAlgebra<F>& a) {
    const F& f = a.field();
    Json j = Json::object();
    j["dim"] = a.dim();
    j["labels"] = a.labels();
    if (a.unit()) j["one"] = vector_to_json(f, *a.unit());
    Json mul = Json::array();
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t k = 0; k < a.dim(); ++k)
            if (!is_zero_vector(f, a.product(i, k))) mul.push_back(Json::array({i, k, vector_to_json(f, a.product(i, k))}));
    j["mul"] = mul;
    return j;
}

/// {kind: "algebra", field, dim, labels?, one?, mul}
inline AnyAlgebra parse_algebra(const Json& j) {
    require_kind(j, "algebra");
    return std::visit([&](const auto& f) -> AnyAlgebra { return parse_algebra_body(f, j, "algebra"); },
                      parse_field(require(j, "field", "algebra")));
}

template <Field F>
Json algebra_to_json(const FDAlgebra<F>& a) {
    Json j = Json::object();
    j["kind"] = "algebra";
    j["field"] = field_to_json(a.field());
    const auto body = algebra_body_to_json(a);
    for (const auto& [k, v] : body.items()) j[k] = v;
    return j;
}

// ---- groupoids ------------------------------------------------------------------------

inline FiniteGroupoid parse_groupoid(const Json& j) {
    require_kind(j, "groupoid");
    GroupoidSpec spec;
    spec.units = require(j, "units", "groupoid").get<std::vector<std::string>>();
    for (const auto& a : require(j, "arrows", "groupoid"))
        spec.arrows.push_back({require(a, "id", "arrow").get<std::string>(), require(a, "src", "arrow").get<std::string>(),
                               require(a, "dst", "arrow").get<std::string>()});
    if (j.contains("compose"))
        for (const auto& t : j.at("compose")) {
            if (!t.is_array() || t.size() != 3) throw InputError("groupoid: compose entries are [b, c, bc]");
            spec.compose.push_back({t[0].get<std::string>(), t[1].get<std::string>(), t[2].get<std::string>()});
        }
    if (j.contains("inverse"))
        for (const auto& t : j.at("inverse")) {
            if (!t.is_array() || t.size() != 2) throw InputError("groupoid: inverse entries are [a, a^-1]");
            spec.inverse.emplace_back(t[0].get<std::string>(), t[1].get<std::string>());
        }
    return FiniteGroupoid(spec);
}

/// Identity arrows are listed; products and inverses involving them are left
/// implicit.
inline Json groupoid_to_json(const FiniteGroupoid& g) {
    Json j = Json::object();
    j["kind"] = "groupoid";
    j["units"] = g.units();
    Json arrows = Json::array();
    for (std::size_t a = 0; a < g.arrow_count(); ++a)
        arrows.push_back(Json{{"id", g.arrow_id(a)}, {"src", g.unit_id(g.src(a))}, {"dst", g.unit_id(g.dst(a))}});
    j["arrows"] = arrows;
    Json compose = Json::array(), inverse = Json::array();
    for (std::size_t b = 0; b < g.arrow_count(); ++b) {
        if (g.is_identity(b)) continue;
        inverse.push_back(Json::array({g.arrow_id(b), g.arrow_id(g.inverse(b))}));
        for (std::size_t c = 0; c < g.arrow_count(); ++c)
            if (auto bc = g.compose(b, c); bc && !g.is_identity(c))
                compose.push_back(Json::array({g.arrow_id(b), g.arrow_id(c), g.arrow_id(*bc)}));
    }
    j["compose"] = compose;
    j["inverse"] = inverse;
    return j;
}

// ---- sheaves ----------------------------------------------------------------------------

/// {kind: "sheaf", groupoid, field, stalks: {unit: algebra body}, alpha: {arrow: rows}}.
/// alpha may be omitted for identity arrows.
template <Field F>
GSheaf<F> parse_sheaf_over(const F& f, const FiniteGroupoid& g, const Json& j) {
    const auto& stalks_j = require(j, "stalks", "sheaf");
    std::vector<AlgebraPtr<F>> stalks;
    for (std::size_t x = 0; x < g.unit_count(); ++x) {
        const auto& id = g.unit_id(x);
        if (!stalks_j.contains(id)) throw InputError("sheaf: no stalk for unit '" + id + "'");
        stalks.push_back(share(parse_algebra_body(f, stalks_j.at(id), "stalk " + id)));
    }
    for (const auto& [k, v] : stalks_j.items()) g.unit_index(k);
    const Json alpha_j = j.contains("alpha") ? j.at("alpha") : Json::object();
    for (const auto& [k, v] : alpha_j.items()) g.arrow_index(k);
    std::vector<Mat<F>> alpha;
    for (std::size_t a = 0; a < g.arrow_count(); ++a) {
        const auto& id = g.arrow_id(a);
        const auto rows = stalks[g.dst(a)]->dim(), cols = stalks[g.src(a)]->dim();
        if (alpha_j.contains(id))
            alpha.push_back(parse_matrix(f, alpha_j.at(id), rows, cols, "alpha(" + id + ")"));
        else if (g.is_identity(a))
            alpha.push_back(identity_matrix(f, rows));
        else
            throw InputError("sheaf: no alpha for arrow '" + id + "'");
    }
    return GSheaf<F>(g, std::move(stalks), std::move(alpha));
}

inline AnySheaf parse_sheaf(const Json& j, const fs::path& base = ".") {
    require_kind(j, "sheaf");
    const auto g = parse_groupoid(resolve(require(j, "groupoid", "sheaf"), base));
    return std::visit([&](const auto& f) -> AnySheaf { return parse_sheaf_over(f, g, j); },
                      parse_field(require(j, "field", "sheaf")));
}

template <Field F>
Json sheaf_to_json(const GSheaf<F>& o) {
    const auto& g = o.groupoid();
    Json j = Json::object();
    j["kind"] = "sheaf";
    j["groupoid"] = groupoid_to_json(g);
    j["field"] = field_to_json(o.field());
    Json stalks = Json::object();
    for (std::size_t x = 0; x < g.unit_count(); ++x) stalks[g.unit_id(x)] = algebra_body_to_json(o.stalk(x));
    j["stalks"] = stalks;
    Json alpha = Json::object();
    for (std::size_t a = 0; a < g.arrow_count(); ++a)
        if (!g.is_identity(a)) alpha[g.arrow_id(a)] = matrix_to_json(o.field(), o.alpha(a));
    j["alpha"] = alpha;
    return j;
}

// ---- groups and inverse semigroups ---------------------------------------------------

/// {"cyclic": n} | {"symmetric": n} | {"elements": [...], "mul": [[label]]}
inline FiniteGroup parse_group(const Json& j) {
    if (j.contains("cyclic")) return cyclic_group(j.at("cyclic").get<std::size_t>());
    if (j.contains("symmetric")) return symmetric_group(j.at("symmetric").get<std::size_t>());
    const auto elements = require(j, "elements", "group").get<std::vector<std::string>>();
    const auto& rows = require(j, "mul", "group");
    if (!rows.is_array() || rows.size() != elements.size()) throw InputError("group: mul must be an n x n table");
    std::vector<std::size_t> mul;
    for (const auto& row : rows) {
        if (!row.is_array() || row.size() != elements.size()) throw InputError("group: mul must be an n x n table");
        for (const auto& e : row) mul.push_back(index_in(elements, e.get<std::string>(), "group element"));
    }
    return FiniteGroup(elements, mul);
}

inline Json group_to_json(const FiniteGroup& g) {
    Json rows = Json::array();
    for (std::size_t a = 0; a < g.order(); ++a) {
        Json row = Json::array();
        for (std::size_t b = 0; b < g.order(); ++b) row.push_back(g.label(g.mul(a, b)));
        rows.push_back(row);
    }
    return Json{{"elements", g.labels()}, {"mul", rows}};
}

/// {kind: "inverse_semigroup", elements, mul: [[label]], star: [label]}, or
/// the sugar {"partial_injections": n} / {"group": group}.
inline FiniteInverseSemigroup parse_semigroup(const Json& j) {
    if (j.contains("kind")) require_kind(j, "inverse_semigroup");
    if (j.contains("partial_injections")) return symmetric_inverse_monoid(j.at("partial_injections").get<std::size_t>());
    if (j.contains("group")) return semigroup_from_group(parse_group(j.at("group")));
    const auto elements = require(j, "elements", "inverse_semigroup").get<std::vector<std::string>>();
    const auto& rows = require(j, "mul", "inverse_semigroup");
    if (!rows.is_array() || rows.size() != elements.size()) throw InputError("inverse_semigroup: mul must be n x n");
    std::vector<std::size_t> mul, star;
    for (const auto& row : rows) {
        if (!row.is_array() || row.size() != elements.size()) throw InputError("inverse_semigroup: mul must be n x n");
        for (const auto& e : row) mul.push_back(index_in(elements, e.get<std::string>(), "element"));
    }
    const auto& st = require(j, "star", "inverse_semigroup");
    if (!st.is_array() || st.size() != elements.size()) throw InputError("inverse_semigroup: star needs n entries");
    for (const auto& e : st) star.push_back(index_in(elements, e.get<std::string>(), "element"));
    return FiniteInverseSemigroup(elements, mul, star);
}

inline Json semigroup_to_json(const FiniteInverseSemigroup& s) {
    Json rows = Json::array(), star = Json::array();
    for (std::size_t a = 0; a < s.size(); ++a) {
        Json row = Json::array();
        for (std::size_t b = 0; b < s.size(); ++b) row.push_back(s.label(s.mul(a, b)));
        rows.push_back(row);
        star.push_back(s.label(s.star(a)));
    }
    return Json{{"kind", "inverse_semigroup"}, {"elements", s.labels()}, {"mul", rows}, {"star", star}};
}

// ---- actions ------------------------------------------------------------------------------

namespace detail {

inline std::vector<std::vector<int>> parse_partial_maps(const Json& j, const std::vector<std::string>& elements,
                                                        const std::vector<std::string>& points) {
    std::vector<std::vector<int>> theta(elements.size(), std::vector<int>(points.size(), -1));
    for (const auto& [s, map] : j.items()) {
        const auto i = index_in(elements, s, "element");
        for (const auto& [x, y] : map.items())
            theta[i][index_in(points, x, "point")] = static_cast<int>(index_in(points, y.get<std::string>(), "point"));
    }
    return theta;
}

inline Json partial_maps_to_json(const std::vector<std::vector<int>>& theta, const std::vector<std::string>& elements,
                                 const std::vector<std::string>& points) {
    Json out = Json::object();
    for (std::size_t i = 0; i < elements.size(); ++i) {
        Json map = Json::object();
        for (std::size_t x = 0; x < points.size(); ++x)
            if (theta[i][x] >= 0) map[points[x]] = points[static_cast<std::size_t>(theta[i][x])];
        out[elements[i]] = map;
    }
    return out;
}

}  // namespace detail

/// {kind: "space_action", semigroup, points, theta: {element: {x: y}}}, or
/// {"natural": true} with a partial_injections semigroup.
inline SpaceAction parse_space_action(const Json& j, const fs::path& base = ".") {
    require_kind(j, "space_action");
    const auto sj = resolve(require(j, "semigroup", "space_action"), base);
    auto s = parse_semigroup(sj);
    if (j.value("natural", false)) {
        if (!sj.contains("partial_injections")) throw InputError("space_action: \"natural\" needs a partial_injections semigroup");
        return natural_action(sj.at("partial_injections").get<std::size_t>());
    }
    const auto points = require(j, "points", "space_action").get<std::vector<std::string>>();
    auto theta = detail::parse_partial_maps(require(j, "theta", "space_action"), s.labels(), points);
    return {std::move(s), points, std::move(theta)};
}

inline Json space_action_to_json(const SpaceAction& act) {
    return Json{{"kind", "space_action"},
                {"semigroup", semigroup_to_json(act.semigroup)},
                {"points", act.points},
                {"theta", detail::partial_maps_to_json(act.theta, act.semigroup.labels(), act.points)}};
}

/// {kind: "partial_group_action", group, points, theta: {g: {x: y}}}; the
/// identity may be omitted from theta.
inline PartialGroupAction parse_partial_action(const Json& j) {
    require_kind(j, "partial_group_action");
    auto g = parse_group(require(j, "group", "partial_group_action"));
    const auto points = require(j, "points", "partial_group_action").get<std::vector<std::string>>();
    auto theta = detail::parse_partial_maps(require(j, "theta", "partial_group_action"), g.labels(), points);
    if (!require(j, "theta", "partial_group_action").contains(g.label(g.identity())))
        for (std::size_t x = 0; x < points.size(); ++x) theta[g.identity()][x] = static_cast<int>(x);
    return {std::move(g), points, std::move(theta)};
}

inline Json partial_action_to_json(const PartialGroupAction& act) {
    return Json{{"kind", "partial_group_action"},
                {"group", group_to_json(act.group)},
                {"points", act.points},
                {"theta", detail::partial_maps_to_json(act.theta, act.group.labels(), act.points)}};
}

/// {kind: "ring_action", semigroup, field, algebra (inline body or path),
///  domains: {s: [spanning vectors]}, units: {s: vector}, alpha: {s: rows}}.
/// Omitted domains are all of A, omitted units are the unit of A, and an
/// omitted alpha is the identity.
template <Field F>
SpectralRingAction<F> parse_ring_action_over(const F& f, FiniteInverseSemigroup s, const Json& j, const fs::path& base) {
    auto aj = resolve(require(j, "algebra", "ring_action"), base);
    auto a = share(parse_algebra_body(f, aj, "ring_action algebra"));
    const std::size_t n = a->dim();
    const Json none = Json::object();
    const auto& dj = j.contains("domains") ? j.at("domains") : none;
    const auto& uj = j.contains("units") ? j.at("units") : none;
    const auto& mj = j.contains("alpha") ? j.at("alpha") : none;
    for (const Json* t : {&dj, &uj, &mj})
        for (const auto& [k, v] : t->items()) s.index_of(k);
    SpectralRingAction<F> act{s, a, {}, {}, {}};
    for (std::size_t i = 0; i < s.size(); ++i) {
        const auto& id = s.label(i);
        if (dj.contains(id)) {
            std::vector<Vec<F>> gens;
            for (const auto& v : dj.at(id)) gens.push_back(parse_vector(f, v, n, "domain " + id));
            act.domain.push_back(Subspace<F>::span(f, n, gens));
        } else {
            act.domain.push_back(Subspace<F>::full(f, n));
        }
        if (uj.contains(id))
            act.unit.push_back(parse_vector(f, uj.at(id), n, "unit " + id));
        else if (a->unit())
            act.unit.push_back(*a->unit());
        else
            throw InputError("ring_action: no unit for '" + id + "'");
        act.alpha.push_back(mj.contains(id) ? parse_matrix(f, mj.at(id), n, n, "alpha " + id) : identity_matrix(f, n));
    }
    return act;
}

inline AnyRingAction parse_ring_action(const Json& j, const fs::path& base = ".") {
    require_kind(j, "ring_action");
    auto s = parse_semigroup(resolve(require(j, "semigroup", "ring_action"), base));
    return std::visit([&](const auto& f) -> AnyRingAction { return parse_ring_action_over(f, s, j, base); },
                      parse_field(require(j, "field", "ring_action")));
}

template <Field F>
Json ring_action_to_json(const SpectralRingAction<F>& act) {
    const F& f = act.algebra->field();
    Json domains = Json::object(), units = Json::object(), alpha = Json::object();
    for (std::size_t i = 0; i < act.semigroup.size(); ++i) {
        const auto& id = act.semigroup.label(i);
        Json gens = Json::array();
        for (const auto& v : act.domain[i].basis_vectors()) gens.push_back(vector_to_json(f, v));
        domains[id] = gens;
        units[id] = vector_to_json(f, act.unit[i]);
        alpha[id] = matrix_to_json(f, act.alpha[i]);
    }
    return Json{{"kind", "ring_action"},  {"semigroup", semigroup_to_json(act.semigroup)},
                {"field", field_to_json(f)}, {"algebra", algebra_body_to_json(*act.algebra)},
                {"domains", domains},        {"units", units},
                {"alpha", alpha}};
}

// ---- modules ------------------------------------------------------------------------------

/// {kind: "module", algebra: sheaf (inline or path), isotropy_unit?: id, dim,
///  action: {basis label: rows}}. Without isotropy_unit the module is over
/// Gamma_c of the sheaf; with it, over the isotropy ring B_x.
struct ModuleDocument {
    AnySheaf sheaf;
    std::optional<std::string> isotropy_unit;
    std::size_t dim;
    Json action;
};

inline ModuleDocument parse_module_document(const Json& j, const fs::path& base = ".") {
    require_kind(j, "module");
    fs::path where;
    const auto sj = resolve(require(j, "algebra", "module"), base, &where);
    std::optional<std::string> unit;
    if (j.contains("isotropy_unit")) unit = j.at("isotropy_unit").get<std::string>();
    return {parse_sheaf(sj, where), unit, require(j, "dim", "module").get<std::size_t>(), require(j, "action", "module")};
}

template <Field F>
AlgebraModule<F> build_module(const AlgebraPtr<F>& a, std::size_t dim, const Json& action) {
    const F& f = a->field();
    for (const auto& [k, v] : action.items()) index_in(a->labels(), k, "basis label");
    std::vector<Mat<F>> mats;
    for (std::size_t i = 0; i < a->dim(); ++i) {
        const auto& l = a->label(i);
        if (!action.contains(l)) throw InputError("module: no action for basis element '" + l + "'");
        mats.push_back(parse_matrix(f, action.at(l), dim, dim, "action of " + l));
    }
    return AlgebraModule<F>(a, dim, std::move(mats));
}

template <Field F>
Json module_action_to_json(const AlgebraModule<F>& m) {
    Json action = Json::object();
    for (std::size_t i = 0; i < m.algebra().dim(); ++i)
        action[m.algebra().label(i)] = matrix_to_json(m.algebra().field(), m.action(i));
    return action;
}

// ---- algebra output -------------------------------------------------------------------------

template <Field F>
Json subspace_to_json(const Subspace<F>& s) {
    Json basis = Json::array();
    for (const auto& v : s.basis_vectors()) basis.push_back(vector_to_json(s.field(), v));
    return Json{{"dim", s.dim()}, {"basis", basis}};
}

}  // namespace sheafalg::io
