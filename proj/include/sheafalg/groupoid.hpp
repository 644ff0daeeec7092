#pragma once

// Finite groupoids with the discrete topology. Every subset of arrows is
// compact open, so interiors and closures are the sets themselves.
//
// Conventions: an arrow g goes from src(g) = d(g) to dst(g) = r(g), and
// compose(b, c) is b after c, defined when src(b) == dst(c). The identity
// arrow of a unit carries the unit's id.

#include <array>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "sheafalg/group.hpp"

namespace sheafalg {

struct ArrowSpec {
    std::string id, src, dst;
};

/// Raw groupoid description by ids, as read from input. Composition and
/// inverse entries involving identity arrows may be omitted.
struct GroupoidSpec {
    std::vector<std::string> units;
    std::vector<ArrowSpec> arrows;
    std::vector<std::array<std::string, 3>> compose;  // {b, c, b*c}
    std::vector<std::pair<std::string, std::string>> inverse;
};

class FiniteGroupoid {
  public:
    struct Arrow {
        std::string id;
        std::size_t src, dst;
    };
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    /// Resolves ids only; the axioms are checked by validate_groupoid.
    explicit FiniteGroupoid(const GroupoidSpec& spec) {
        for (const auto& u : spec.units) {
            if (unit_index_.count(u)) throw InputError("duplicate unit id '" + u + "'");
            unit_index_[u] = units_.size();
            units_.push_back(u);
        }
        std::set<std::string> listed;
        for (const auto& a : spec.arrows) listed.insert(a.id);
        for (const auto& u : units_)
            if (!listed.count(u)) add_arrow(u, u, u);
        for (const auto& a : spec.arrows) add_arrow(a.id, a.src, a.dst);
        unit_arrow_.resize(units_.size());
        for (std::size_t x = 0; x < units_.size(); ++x) {
            const auto a = arrow_index(units_[x]);
            if (arrows_[a].src != x || arrows_[a].dst != x)
                throw InputError("arrow '" + units_[x] + "' shares a unit id but is not a loop at that unit");
            unit_arrow_[x] = a;
        }

        const std::size_t n = arrows_.size();
        compose_.assign(n * n, npos);
        inverse_.assign(n, npos);
        for (std::size_t a = 0; a < n; ++a) {
            compose_[unit_arrow_[arrows_[a].dst] * n + a] = a;
            compose_[a * n + unit_arrow_[arrows_[a].src]] = a;
        }
        for (auto x : unit_arrow_) inverse_[x] = x;
        for (const auto& [b, c, bc] : spec.compose) compose_[arrow_index(b) * n + arrow_index(c)] = arrow_index(bc);
        for (const auto& [a, b] : spec.inverse) inverse_[arrow_index(a)] = arrow_index(b);
    }

    std::size_t unit_count() const { return units_.size(); }
    std::size_t arrow_count() const { return arrows_.size(); }
    const std::vector<std::string>& units() const { return units_; }
    const std::string& unit_id(std::size_t x) const { return units_[x]; }
    const Arrow& arrow(std::size_t a) const { return arrows_[a]; }
    const std::string& arrow_id(std::size_t a) const { return arrows_[a].id; }
    std::size_t src(std::size_t a) const { return arrows_[a].src; }
    std::size_t dst(std::size_t a) const { return arrows_[a].dst; }
    std::size_t unit_arrow(std::size_t x) const { return unit_arrow_[x]; }
    bool is_identity(std::size_t a) const { return unit_arrow_[arrows_[a].src] == a && arrows_[a].src == arrows_[a].dst; }

    /// Raw table entry; npos when undefined.
    std::size_t compose_entry(std::size_t b, std::size_t c) const { return compose_[b * arrow_count() + c]; }
    std::size_t inverse_entry(std::size_t a) const { return inverse_[a]; }

    /// b*c on a validated groupoid; nullopt when not composable.
    std::optional<std::size_t> compose(std::size_t b, std::size_t c) const {
        if (arrows_[b].src != arrows_[c].dst) return std::nullopt;
        return compose_entry(b, c);
    }
    std::size_t inverse(std::size_t a) const { return inverse_[a]; }

    std::size_t unit_index(const std::string& id) const {
        auto it = unit_index_.find(id);
        if (it == unit_index_.end()) throw InputError("unknown unit id '" + id + "'");
        return it->second;
    }
    std::size_t arrow_index(const std::string& id) const {
        auto it = arrow_index_.find(id);
        if (it == arrow_index_.end()) throw InputError("unknown arrow id '" + id + "'");
        return it->second;
    }
    bool has_arrow(const std::string& id) const { return arrow_index_.count(id) > 0; }

    /// Inverse of the constructor: a full description (every composable pair listed).
    GroupoidSpec spec() const {
        GroupoidSpec s;
        s.units = units_;
        for (const auto& a : arrows_) s.arrows.push_back({a.id, units_[a.src], units_[a.dst]});
        const std::size_t n = arrow_count();
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c)
                if (compose_entry(b, c) != npos)
                    s.compose.push_back({arrows_[b].id, arrows_[c].id, arrows_[compose_entry(b, c)].id});
        for (std::size_t a = 0; a < n; ++a)
            if (inverse_[a] != npos) s.inverse.emplace_back(arrows_[a].id, arrows_[inverse_[a]].id);
        return s;
    }

  private:
    void add_arrow(const std::string& id, const std::string& src, const std::string& dst) {
        if (arrow_index_.count(id)) throw InputError("duplicate arrow id '" + id + "'");
        arrow_index_[id] = arrows_.size();
        arrows_.push_back({id, unit_index(src), unit_index(dst)});
    }

    std::vector<std::string> units_;
    std::map<std::string, std::size_t> unit_index_;
    std::vector<Arrow> arrows_;
    std::map<std::string, std::size_t> arrow_index_;
    std::vector<std::size_t> unit_arrow_;
    std::vector<std::size_t> compose_;
    std::vector<std::size_t> inverse_;
};

inline Validation validate_groupoid(const FiniteGroupoid& g) {
    using G = FiniteGroupoid;
    const std::size_t n = g.arrow_count();
    auto pair = [&](std::size_t b, std::size_t c) { return "(" + g.arrow_id(b) + "," + g.arrow_id(c) + ")"; };
    if (g.unit_count() == 0) return Violation{"units", "no units"};
    for (std::size_t b = 0; b < n; ++b)
        for (std::size_t c = 0; c < n; ++c) {
            const bool composable = g.src(b) == g.dst(c);
            const auto e = g.compose_entry(b, c);
            if (composable && e == G::npos) return Violation{"composition domain", "missing product " + pair(b, c)};
            if (!composable && e != G::npos)
                return Violation{"composition domain", "product given for non-composable pair " + pair(b, c)};
            if (!composable) continue;
            if (g.src(e) != g.src(c) || g.dst(e) != g.dst(b))
                return Violation{"source/range of composite", pair(b, c) + " -> " + g.arrow_id(e)};
        }
    for (std::size_t a = 0; a < n; ++a)
        if (g.compose_entry(g.unit_arrow(g.dst(a)), a) != a || g.compose_entry(a, g.unit_arrow(g.src(a))) != a)
            return Violation{"identity", "identities are not neutral on " + g.arrow_id(a)};
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            if (g.src(a) != g.dst(b)) continue;
            const auto ab = g.compose_entry(a, b);
            for (std::size_t c = 0; c < n; ++c) {
                if (g.src(b) != g.dst(c)) continue;
                if (g.compose_entry(ab, c) != g.compose_entry(a, g.compose_entry(b, c)))
                    return Violation{"associativity",
                                     "(" + g.arrow_id(a) + "," + g.arrow_id(b) + "," + g.arrow_id(c) + ")"};
            }
        }
    for (std::size_t a = 0; a < n; ++a) {
        const auto inv = g.inverse_entry(a);
        if (inv == G::npos) return Violation{"inverse", "arrow " + g.arrow_id(a) + " has no inverse"};
        if (g.src(inv) != g.dst(a) || g.dst(inv) != g.src(a) ||
            g.compose_entry(a, inv) != g.unit_arrow(g.dst(a)) || g.compose_entry(inv, a) != g.unit_arrow(g.src(a)))
            return Violation{"inverse", "arrow " + g.arrow_id(a) + " with listed inverse " + g.arrow_id(inv)};
    }
    return std::nullopt;
}

/// Orbits as sorted unit-index blocks, ordered by their least unit.
inline std::vector<std::vector<std::size_t>> orbits(const FiniteGroupoid& g) {
    const std::size_t m = g.unit_count();
    std::vector<std::size_t> root(m);
    for (std::size_t x = 0; x < m; ++x) root[x] = x;
    auto find = [&](std::size_t x) {
        while (root[x] != x) x = root[x] = root[root[x]];
        return x;
    };
    for (std::size_t a = 0; a < g.arrow_count(); ++a) {
        auto s = find(g.src(a)), t = find(g.dst(a));
        if (s != t) root[std::max(s, t)] = std::min(s, t);
    }
    std::map<std::size_t, std::vector<std::size_t>> blocks;
    for (std::size_t x = 0; x < m; ++x) blocks[find(x)].push_back(x);
    std::vector<std::vector<std::size_t>> out;
    for (auto& [r, b] : blocks) out.push_back(std::move(b));
    return out;
}

inline std::vector<std::size_t> orbit_of(const FiniteGroupoid& g, std::size_t x) {
    std::vector<std::size_t> out;
    for (std::size_t a = 0; a < g.arrow_count(); ++a)
        if (g.src(a) == x) out.push_back(g.dst(a));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

/// Finite discrete: every subset is open, so minimal means one orbit.
inline bool is_minimal(const FiniteGroupoid& g) { return orbits(g).size() == 1; }

inline std::vector<std::size_t> isotropy_arrows(const FiniteGroupoid& g, std::size_t x) {
    std::vector<std::size_t> out;
    for (std::size_t a = 0; a < g.arrow_count(); ++a)
        if (g.src(a) == x && g.dst(a) == x) out.push_back(a);
    return out;
}

/// Iso(G): all arrows with equal source and range.
inline std::vector<std::size_t> iso_arrows(const FiniteGroupoid& g) {
    std::vector<std::size_t> out;
    for (std::size_t a = 0; a < g.arrow_count(); ++a)
        if (g.src(a) == g.dst(a)) out.push_back(a);
    return out;
}

/// G_x^x as a group labelled by arrow ids (checked to be a group).
inline FiniteGroup isotropy_group(const FiniteGroupoid& g, std::size_t x) {
    const auto arrows = isotropy_arrows(g, x);
    const std::size_t n = arrows.size();
    std::vector<std::string> labels;
    for (auto a : arrows) labels.push_back(g.arrow_id(a));
    std::vector<std::size_t> mul(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            mul[i * n + j] = static_cast<std::size_t>(
                std::find(arrows.begin(), arrows.end(), *g.compose(arrows[i], arrows[j])) - arrows.begin());
    FiniteGroup grp(std::move(labels), std::move(mul));
    if (auto v = validate_group(grp)) throw InvariantViolation("isotropy is not a group: " + v->message());
    return grp;
}

/// Effective: Int(Iso(G)) = G^(0), i.e. every isotropy group is trivial.
inline bool is_effective(const FiniteGroupoid& g) { return iso_arrows(g).size() == g.unit_count(); }

// ---- constructors ---------------------------------------------------------

inline FiniteGroupoid trivial_groupoid(const std::vector<std::string>& units) {
    GroupoidSpec s;
    s.units = units;
    return FiniteGroupoid(s);
}

/// T1(n): units "1".."n", identities only.
inline FiniteGroupoid trivial_groupoid(std::size_t n) {
    std::vector<std::string> ids;
    for (std::size_t i = 1; i <= n; ++i) ids.push_back(std::to_string(i));
    return trivial_groupoid(ids);
}

/// Pair groupoid on the given units; the arrow i -> j is named "i->j".
inline FiniteGroupoid pair_groupoid(const std::vector<std::string>& units) {
    GroupoidSpec s;
    s.units = units;
    auto name = [&](std::size_t i, std::size_t j) { return i == j ? units[i] : units[i] + "->" + units[j]; };
    const std::size_t n = units.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j) s.arrows.push_back({name(i, j), units[i], units[j]});
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            s.inverse.emplace_back(name(i, j), name(j, i));
            for (std::size_t k = 0; k < n; ++k) s.compose.push_back({name(j, k), name(i, j), name(i, k)});
        }
    return FiniteGroupoid(s);
}

/// P_n on units "1".."n".
inline FiniteGroupoid pair_groupoid(std::size_t n) {
    std::vector<std::string> ids;
    for (std::size_t i = 1; i <= n; ++i) ids.push_back(std::to_string(i));
    return pair_groupoid(ids);
}

/// A group as a one-object groupoid; the identity arrow is renamed to the unit id.
inline FiniteGroupoid group_groupoid(const FiniteGroup& grp, const std::string& unit = "1") {
    GroupoidSpec s;
    s.units = {unit};
    auto name = [&](std::size_t a) { return a == grp.identity() ? unit : grp.label(a); };
    for (std::size_t a = 0; a < grp.order(); ++a)
        if (a != grp.identity()) s.arrows.push_back({name(a), unit, unit});
    for (std::size_t a = 0; a < grp.order(); ++a) {
        s.inverse.emplace_back(name(a), name(grp.inverse(a)));
        for (std::size_t b = 0; b < grp.order(); ++b) s.compose.push_back({name(a), name(b), name(grp.mul(a, b))});
    }
    return FiniteGroupoid(s);
}

/// G followed by H; ids must not clash.
inline FiniteGroupoid disjoint_union(const FiniteGroupoid& g, const FiniteGroupoid& h) {
    auto s = g.spec();
    auto t = h.spec();
    s.units.insert(s.units.end(), t.units.begin(), t.units.end());
    s.arrows.insert(s.arrows.end(), t.arrows.begin(), t.arrows.end());
    s.compose.insert(s.compose.end(), t.compose.begin(), t.compose.end());
    s.inverse.insert(s.inverse.end(), t.inverse.begin(), t.inverse.end());
    return FiniteGroupoid(s);
}

/// G x H with ids "a,b"; pairs of identity arrows are the identities.
inline FiniteGroupoid product_groupoid(const FiniteGroupoid& g, const FiniteGroupoid& h) {
    GroupoidSpec s;
    auto join = [](const std::string& a, const std::string& b) { return a + "," + b; };
    for (const auto& x : g.units())
        for (const auto& y : h.units()) s.units.push_back(join(x, y));
    for (std::size_t a = 0; a < g.arrow_count(); ++a)
        for (std::size_t b = 0; b < h.arrow_count(); ++b) {
            if (g.is_identity(a) && h.is_identity(b)) continue;
            s.arrows.push_back({join(g.arrow_id(a), h.arrow_id(b)), join(g.unit_id(g.src(a)), h.unit_id(h.src(b))),
                                join(g.unit_id(g.dst(a)), h.unit_id(h.dst(b)))});
        }
    for (std::size_t a = 0; a < g.arrow_count(); ++a)
        for (std::size_t b = 0; b < h.arrow_count(); ++b) {
            s.inverse.emplace_back(join(g.arrow_id(a), h.arrow_id(b)),
                                   join(g.arrow_id(g.inverse(a)), h.arrow_id(h.inverse(b))));
            for (std::size_t c = 0; c < g.arrow_count(); ++c)
                for (std::size_t d = 0; d < h.arrow_count(); ++d) {
                    auto ac = g.compose(a, c);
                    auto bd = h.compose(b, d);
                    if (ac && bd)
                        s.compose.push_back({join(g.arrow_id(a), h.arrow_id(b)), join(g.arrow_id(c), h.arrow_id(d)),
                                             join(g.arrow_id(*ac), h.arrow_id(*bd))});
                }
        }
    return FiniteGroupoid(s);
}

/// The same groupoid with units and arrows listed in a new order and every id
/// rewritten by `rename`. `unit_order[k]` is the old index of the k-th unit.
template <class Rename>
FiniteGroupoid relabeled(const FiniteGroupoid& g, const std::vector<std::size_t>& unit_order,
                         const std::vector<std::size_t>& arrow_order, Rename&& rename) {
    GroupoidSpec s;
    for (auto x : unit_order) s.units.push_back(rename(g.unit_id(x)));
    for (auto a : arrow_order)
        s.arrows.push_back({rename(g.arrow_id(a)), rename(g.unit_id(g.src(a))), rename(g.unit_id(g.dst(a)))});
    for (auto b : arrow_order) {
        s.inverse.emplace_back(rename(g.arrow_id(b)), rename(g.arrow_id(g.inverse(b))));
        for (auto c : arrow_order)
            if (auto bc = g.compose(b, c))
                s.compose.push_back({rename(g.arrow_id(b)), rename(g.arrow_id(c)), rename(g.arrow_id(*bc))});
    }
    return FiniteGroupoid(s);
}

}  // namespace sheafalg
