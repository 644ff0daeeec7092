#pragma once

// Finite inverse semigroups by multiplication and involution tables.

#include <algorithm>
#include <deque>
#include <map>
#include <string>
#include <vector>

#include "sheafalg/group.hpp"

namespace sheafalg {

class FiniteInverseSemigroup {
  public:
    /// `mul[a * n + b]` is the index of ab, `star[a]` the index of a*.
    FiniteInverseSemigroup(std::vector<std::string> labels, std::vector<std::size_t> mul, std::vector<std::size_t> star)
        : labels_(std::move(labels)), mul_(std::move(mul)), star_(std::move(star)) {
        const std::size_t n = labels_.size();
        if (n == 0) throw InputError("inverse semigroup must be nonempty");
        if (mul_.size() != n * n) throw InputError("multiplication table must be n x n");
        if (star_.size() != n) throw InputError("star table must have one entry per element");
        for (auto v : mul_)
            if (v >= n) throw InputError("multiplication table entry out of range");
        for (auto v : star_)
            if (v >= n) throw InputError("star table entry out of range");
        for (std::size_t i = 0; i < n; ++i)
            if (!index_.emplace(labels_[i], i).second) throw InputError("duplicate element label '" + labels_[i] + "'");
    }

    std::size_t size() const { return labels_.size(); }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(std::size_t a) const { return labels_[a]; }
    std::size_t mul(std::size_t a, std::size_t b) const { return mul_[a * size() + b]; }
    std::size_t star(std::size_t a) const { return star_[a]; }
    bool is_idempotent(std::size_t a) const { return mul(a, a) == a; }

    std::size_t index_of(const std::string& label) const {
        auto it = index_.find(label);
        if (it == index_.end()) throw InputError("unknown semigroup element '" + label + "'");
        return it->second;
    }

    std::vector<std::size_t> idempotents() const {
        std::vector<std::size_t> out;
        for (std::size_t a = 0; a < size(); ++a)
            if (is_idempotent(a)) out.push_back(a);
        return out;
    }

    /// Natural partial order: u <= s iff u = u u* s.
    bool leq(std::size_t u, std::size_t s) const { return mul(mul(u, star(u)), s) == u; }

  private:
    std::vector<std::string> labels_;
    std::vector<std::size_t> mul_;
    std::vector<std::size_t> star_;
    std::map<std::string, std::size_t> index_;
};

inline Validation validate_inverse_semigroup(const FiniteInverseSemigroup& s) {
    const std::size_t n = s.size();
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c)
                if (s.mul(s.mul(a, b), c) != s.mul(a, s.mul(b, c)))
                    return Violation{"associativity", "(" + s.label(a) + "," + s.label(b) + "," + s.label(c) + ")"};
    for (std::size_t a = 0; a < n; ++a) {
        const auto as = s.star(a);
        if (s.mul(s.mul(a, as), a) != a) return Violation{"s s* s = s", "fails for " + s.label(a)};
        if (s.mul(s.mul(as, a), as) != as) return Violation{"s* s s* = s*", "fails for " + s.label(a)};
    }
    const auto e = s.idempotents();
    for (auto x : e)
        for (auto y : e)
            if (s.mul(x, y) != s.mul(y, x))
                return Violation{"idempotents commute", s.label(x) + " and " + s.label(y)};
    return std::nullopt;
}

/// A group with star = inverse.
inline FiniteInverseSemigroup semigroup_from_group(const FiniteGroup& g) {
    const std::size_t n = g.order();
    std::vector<std::size_t> mul(n * n), star(n);
    for (std::size_t a = 0; a < n; ++a) {
        star[a] = g.inverse(a);
        for (std::size_t b = 0; b < n; ++b) mul[a * n + b] = g.mul(a, b);
    }
    return FiniteInverseSemigroup(g.labels(), std::move(mul), std::move(star));
}

/// Partial injections of {0..n-1} as image lists (-1 = undefined), ordered by
/// domain size and then lexicographically.
inline std::vector<std::vector<int>> partial_injections(std::size_t n) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(n, -1);
    std::vector<bool> used(n, false);
    auto rec = [&](auto&& self, std::size_t i) -> void {
        if (i == n) {
            out.push_back(cur);
            return;
        }
        cur[i] = -1;
        self(self, i + 1);
        for (std::size_t j = 0; j < n; ++j) {
            if (used[j]) continue;
            used[j] = true;
            cur[i] = static_cast<int>(j);
            self(self, i + 1);
            used[j] = false;
        }
        cur[i] = -1;
    };
    rec(rec, 0);
    auto size = [](const std::vector<int>& m) { return std::count_if(m.begin(), m.end(), [](int v) { return v >= 0; }); };
    std::stable_sort(out.begin(), out.end(), [&](const auto& a, const auto& b) {
        if (size(a) != size(b)) return size(a) < size(b);
        return a < b;
    });
    return out;
}

/// "1->2,2->1" on 1-based symbols; the empty map is "0".
inline std::string partial_injection_label(const std::vector<int>& m) {
    std::string out;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i] < 0) continue;
        if (!out.empty()) out += ",";
        out += std::to_string(i + 1) + "->" + std::to_string(m[i] + 1);
    }
    return out.empty() ? "0" : out;
}

/// I(n) with (st)(x) = s(t(x)).
inline FiniteInverseSemigroup symmetric_inverse_monoid(std::size_t n) {
    const auto maps = partial_injections(n);
    const std::size_t m = maps.size();
    auto index = [&](const std::vector<int>& p) {
        return static_cast<std::size_t>(std::find(maps.begin(), maps.end(), p) - maps.begin());
    };
    std::vector<std::string> labels;
    std::vector<std::size_t> mul(m * m), star(m);
    for (std::size_t a = 0; a < m; ++a) {
        labels.push_back(partial_injection_label(maps[a]));
        std::vector<int> inv(n, -1);
        for (std::size_t i = 0; i < n; ++i)
            if (maps[a][i] >= 0) inv[static_cast<std::size_t>(maps[a][i])] = static_cast<int>(i);
        star[a] = index(inv);
        for (std::size_t b = 0; b < m; ++b) {
            std::vector<int> c(n, -1);
            for (std::size_t i = 0; i < n; ++i)
                if (maps[b][i] >= 0) c[i] = maps[a][static_cast<std::size_t>(maps[b][i])];
            mul[a * m + b] = index(c);
        }
    }
    return FiniteInverseSemigroup(std::move(labels), std::move(mul), std::move(star));
}

/// Closure of `gens` under products and star, as sorted element indices.
inline std::vector<std::size_t> generated_inverse_subsemigroup(const FiniteInverseSemigroup& s,
                                                               const std::vector<std::size_t>& gens) {
    std::vector<bool> in(s.size(), false);
    std::vector<std::size_t> members;
    std::deque<std::size_t> queue;
    auto offer = [&](std::size_t a) {
        if (in[a]) return;
        in[a] = true;
        members.push_back(a);
        queue.push_back(a);
    };
    for (auto g : gens) offer(g);
    while (!queue.empty()) {
        const auto a = queue.front();
        queue.pop_front();
        offer(s.star(a));
        for (std::size_t k = 0, sz = members.size(); k < sz; ++k) {
            const auto b = members[k];
            offer(s.mul(a, b));
            offer(s.mul(b, a));
        }
    }
    std::sort(members.begin(), members.end());
    return members;
}

/// The restriction of S to a closed subset, relabelled in the subset order.
inline FiniteInverseSemigroup restrict_semigroup(const FiniteInverseSemigroup& s, const std::vector<std::size_t>& subset) {
    const std::size_t m = subset.size();
    auto pos = [&](std::size_t a) {
        auto it = std::find(subset.begin(), subset.end(), a);
        if (it == subset.end()) throw InputError("subset is not closed under the semigroup operations");
        return static_cast<std::size_t>(it - subset.begin());
    };
    std::vector<std::string> labels;
    std::vector<std::size_t> mul(m * m), star(m);
    for (std::size_t i = 0; i < m; ++i) {
        labels.push_back(s.label(subset[i]));
        star[i] = pos(s.star(subset[i]));
        for (std::size_t j = 0; j < m; ++j) mul[i * m + j] = pos(s.mul(subset[i], subset[j]));
    }
    return FiniteInverseSemigroup(std::move(labels), std::move(mul), std::move(star));
}

}  // namespace sheafalg
