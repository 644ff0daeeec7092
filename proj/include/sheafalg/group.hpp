#pragma once

// Small finite groups given by a multiplication table.

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "sheafalg/error.hpp"

namespace sheafalg {

class FiniteGroup {
  public:
    /// `mul[a * n + b]` is the index of a*b.
    FiniteGroup(std::vector<std::string> labels, std::vector<std::size_t> mul)
        : labels_(std::move(labels)), mul_(std::move(mul)) {
        const std::size_t n = labels_.size();
        if (n == 0) throw InputError("group must be nonempty");
        if (mul_.size() != n * n) throw InputError("group table must be n x n");
        for (auto v : mul_)
            if (v >= n) throw InputError("group table entry out of range");
        identity_ = n;
        for (std::size_t e = 0; e < n && identity_ == n; ++e) {
            bool ok = true;
            for (std::size_t a = 0; a < n && ok; ++a) ok = mul_[e * n + a] == a && mul_[a * n + e] == a;
            if (ok) identity_ = e;
        }
        inverse_.assign(n, n);
        if (identity_ == n) return;
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b)
                if (mul_[a * n + b] == identity_ && mul_[b * n + a] == identity_) inverse_[a] = b;
    }

    std::size_t order() const { return labels_.size(); }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(std::size_t a) const { return labels_[a]; }
    std::size_t mul(std::size_t a, std::size_t b) const { return mul_[a * order() + b]; }
    std::size_t identity() const { return identity_; }
    std::size_t inverse(std::size_t a) const { return inverse_[a]; }

  private:
    std::vector<std::string> labels_;
    std::vector<std::size_t> mul_;
    std::size_t identity_ = 0;
    std::vector<std::size_t> inverse_;
};

inline Validation validate_group(const FiniteGroup& g) {
    const std::size_t n = g.order();
    if (g.identity() >= n) return Violation{"identity", "no two-sided identity element"};
    for (std::size_t a = 0; a < n; ++a)
        if (g.inverse(a) >= n) return Violation{"inverse", "element " + g.label(a) + " has no inverse"};
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c)
                if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c)))
                    return Violation{"associativity",
                                     "(" + g.label(a) + "," + g.label(b) + "," + g.label(c) + ")"};
    return std::nullopt;
}

/// Z/n with elements 1, g, g2, ...
inline FiniteGroup cyclic_group(std::size_t n) {
    std::vector<std::string> labels;
    for (std::size_t k = 0; k < n; ++k) labels.push_back(k == 0 ? "1" : k == 1 ? "g" : "g" + std::to_string(k));
    std::vector<std::size_t> mul(n * n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) mul[a * n + b] = (a + b) % n;
    return FiniteGroup(std::move(labels), std::move(mul));
}

namespace detail {

inline std::string cycle_label(const std::vector<std::size_t>& perm) {
    std::string out;
    std::vector<bool> seen(perm.size(), false);
    for (std::size_t i = 0; i < perm.size(); ++i) {
        if (seen[i] || perm[i] == i) continue;
        out += "(";
        for (std::size_t j = i; !seen[j]; j = perm[j]) {
            seen[j] = true;
            out += std::to_string(j + 1);
        }
        out += ")";
    }
    return out.empty() ? "1" : out;
}

}  // namespace detail

/// S_n on {1..n}, elements in lexicographic order of their image lists and
/// labelled in cycle notation. (a*b)(i) = a(b(i)).
inline FiniteGroup symmetric_group(std::size_t n) {
    std::vector<std::vector<std::size_t>> perms;
    std::vector<std::size_t> p(n);
    std::iota(p.begin(), p.end(), 0);
    do perms.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    const std::size_t m = perms.size();
    std::vector<std::string> labels;
    for (const auto& q : perms) labels.push_back(detail::cycle_label(q));
    std::vector<std::size_t> mul(m * m);
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b) {
            std::vector<std::size_t> c(n);
            for (std::size_t i = 0; i < n; ++i) c[i] = perms[a][perms[b][i]];
            mul[a * m + b] = static_cast<std::size_t>(std::find(perms.begin(), perms.end(), c) - perms.begin());
        }
    return FiniteGroup(std::move(labels), std::move(mul));
}

}  // namespace sheafalg
