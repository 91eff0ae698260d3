/*
   Copyright 2026 The cartan-algebra authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef CARTAN_GROUP_HPP
#define CARTAN_GROUP_HPP

#include <algorithm>
#include <cstddef>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "algebra.hpp"

namespace cartan {

/// A finite group as a Cayley table over indices 0 .. order-1.
/// Tag for tables whose associativity is inherited (e.g. from an algebra).
struct KnownAssociative {};

class GroupTable {
  public:
    GroupTable() = default;

    GroupTable(std::vector<std::vector<std::size_t>> mul, std::size_t identity, std::vector<std::string> names = {})
        : GroupTable(std::move(mul), identity, std::move(names), true) {}

    /// Skips the cubic associativity check.
    GroupTable(std::vector<std::vector<std::size_t>> mul, std::size_t identity, std::vector<std::string> names,
               KnownAssociative)
        : GroupTable(std::move(mul), identity, std::move(names), false) {}

  private:
    GroupTable(std::vector<std::vector<std::size_t>> mul, std::size_t identity, std::vector<std::string> names,
               bool check_associativity)
        : mul_(std::move(mul)), identity_(identity), names_(std::move(names)) {
        const std::size_t n = mul_.size();
        if (n == 0) throw Error(Errc::InvalidOrder, "empty group table");
        if (names_.empty())
            for (std::size_t i = 0; i < n; ++i) names_.push_back("g" + std::to_string(i));
        if (names_.size() != n) throw Error(Errc::ValidationError, "group name count differs from order");
        if (identity_ >= n) throw Error(Errc::ValidationError, "identity index out of range");
        for (const auto& row : mul_) {
            if (row.size() != n) throw Error(Errc::ValidationError, "group table is not square");
            for (auto v : row)
                if (v >= n) throw Error(Errc::ValidationError, "group table entry out of range");
        }
        for (std::size_t g = 0; g < n; ++g)
            if (mul_[identity_][g] != g || mul_[g][identity_] != g)
                throw Error(Errc::ValidationError, "identity does not act trivially on " + names_[g]);
        inv_.assign(n, n);
        for (std::size_t g = 0; g < n; ++g)
            for (std::size_t h = 0; h < n && inv_[g] == n; ++h)
                if (mul_[g][h] == identity_ && mul_[h][g] == identity_) inv_[g] = h;
        for (std::size_t g = 0; g < n; ++g)
            if (inv_[g] == n) throw Error(Errc::ValidationError, names_[g] + " has no inverse");
        if (!check_associativity) return;
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b)
                for (std::size_t c = 0; c < n; ++c)
                    if (mul_[mul_[a][b]][c] != mul_[a][mul_[b][c]])
                        throw Error(Errc::ValidationError, "group table is not associative");
    }

  public:
    std::size_t order() const noexcept { return mul_.size(); }
    std::size_t identity() const noexcept { return identity_; }
    const std::vector<std::string>& element_names() const noexcept { return names_; }
    const std::vector<std::vector<std::size_t>>& table() const noexcept { return mul_; }

    std::size_t multiply(std::size_t g, std::size_t h) const { return mul_[g][h]; }
    std::size_t inverse(std::size_t g) const { return inv_[g]; }

    /// g^{-1} h^{-1} g h
    std::size_t commutator(std::size_t g, std::size_t h) const {
        return mul_[mul_[inv_[g]][inv_[h]]][mul_[g][h]];
    }

    std::size_t element_order(std::size_t g) const {
        std::size_t k = 1;
        for (std::size_t x = g; x != identity_; x = mul_[x][g]) ++k;
        return k;
    }

    bool is_abelian() const {
        for (std::size_t g = 0; g < order(); ++g)
            for (std::size_t h = g + 1; h < order(); ++h)
                if (mul_[g][h] != mul_[h][g]) return false;
        return true;
    }

  private:
    std::vector<std::vector<std::size_t>> mul_;
    std::size_t identity_ = 0;
    std::vector<std::string> names_;
    std::vector<std::size_t> inv_;
};

namespace detail {
inline std::string power_name(const std::string& base, std::size_t k) {
    if (k == 0) return "";
    return k == 1 ? base : base + "^" + std::to_string(k);
}
}  // namespace detail

/// D_{2n} = <a, b | a^n = b^2 = 1, b a b = a^{-1}>, ordered
/// 1, a, ..., a^{n-1}, b, ab, ..., a^{n-1}b (index n + i is a^i b).
inline GroupTable dihedral(std::size_t n) {
    if (n < 1) throw Error(Errc::InvalidOrder, "dihedral group needs n >= 1");
    const std::size_t order = 2 * n;
    std::vector<std::vector<std::size_t>> mul(order, std::vector<std::size_t>(order));
    for (std::size_t x = 0; x < order; ++x)
        for (std::size_t y = 0; y < order; ++y) {
            const std::size_t i = x % n, j = y % n;
            const bool xb = x >= n, yb = y >= n;
            // a^i b^s * a^j b^t = a^{i + (-1)^s j} b^{s+t}
            const std::size_t e = xb ? (i + n - j) % n : (i + j) % n;
            mul[x][y] = e + ((xb != yb) ? n : 0);
        }
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) names.push_back(i == 0 ? "1" : detail::power_name("a", i));
    for (std::size_t i = 0; i < n; ++i) names.push_back(detail::power_name("a", i) + "b");
    return GroupTable(std::move(mul), 0, std::move(names));
}

/// Z/n with generator c, ordered 1, c, ..., c^{n-1}.
inline GroupTable cyclic(std::size_t n) {
    if (n < 1) throw Error(Errc::InvalidOrder, "cyclic group needs n >= 1");
    std::vector<std::vector<std::size_t>> mul(n, std::vector<std::size_t>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) mul[i][j] = (i + j) % n;
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) names.push_back(i == 0 ? "1" : detail::power_name("c", i));
    return GroupTable(std::move(mul), 0, std::move(names));
}

/// G × H, index g * |H| + h.
inline GroupTable direct_product(const GroupTable& g, const GroupTable& h) {
    const std::size_t m = h.order(), n = g.order() * m;
    std::vector<std::vector<std::size_t>> mul(n, std::vector<std::size_t>(n));
    std::vector<std::string> names;
    for (std::size_t x = 0; x < n; ++x) {
        names.push_back("(" + g.element_names()[x / m] + "," + h.element_names()[x % m] + ")");
        for (std::size_t y = 0; y < n; ++y) mul[x][y] = g.multiply(x / m, y / m) * m + h.multiply(x % m, y % m);
    }
    return GroupTable(std::move(mul), g.identity() * m + h.identity(), std::move(names));
}

/// Subgroup generated by `gens`, as a sorted index list.
inline std::vector<std::size_t> generated_subgroup(const GroupTable& g, const std::vector<std::size_t>& gens) {
    std::vector<bool> in(g.order(), false);
    std::vector<std::size_t> elems{g.identity()};
    in[g.identity()] = true;
    std::vector<std::size_t> uniq;
    for (auto x : gens)
        if (std::find(uniq.begin(), uniq.end(), x) == uniq.end()) uniq.push_back(x);
    for (std::size_t k = 0; k < elems.size(); ++k)
        for (auto s : uniq) {
            const std::size_t y = g.multiply(elems[k], s);
            if (!in[y]) {
                in[y] = true;
                elems.push_back(y);
            }
        }
    std::sort(elems.begin(), elems.end());
    return elems;
}

inline bool is_subgroup(const GroupTable& g, const std::vector<std::size_t>& s) {
    if (s.empty()) return false;
    std::vector<bool> in(g.order(), false);
    for (auto x : s) {
        if (x >= g.order()) return false;
        in[x] = true;
    }
    for (auto x : s)
        for (auto y : s)
            if (!in[g.multiply(x, y)]) return false;
    return true;
}

/// [H, K] = <h^{-1} k^{-1} h k>.
inline std::vector<std::size_t> commutator_subgroup(const GroupTable& g, const std::vector<std::size_t>& h,
                                                    const std::vector<std::size_t>& k) {
    std::set<std::size_t> gens;
    for (auto x : h)
        for (auto y : k) gens.insert(g.commutator(x, y));
    return generated_subgroup(g, {gens.begin(), gens.end()});
}

inline std::vector<std::size_t> all_elements(const GroupTable& g) {
    std::vector<std::size_t> v(g.order());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = i;
    return v;
}

inline std::vector<std::size_t> derived_subgroup(const GroupTable& g) {
    const auto all = all_elements(g);
    return commutator_subgroup(g, all, all);
}

/// All subgroups, sorted by order and then lexicographically by element list.
inline std::vector<std::vector<std::size_t>> all_subgroups(const GroupTable& g) {
    std::set<std::vector<std::size_t>> seen;
    std::vector<std::vector<std::size_t>> queue{{g.identity()}};
    seen.insert(queue.front());
    for (std::size_t k = 0; k < queue.size(); ++k) {
        const auto cur = queue[k];
        for (std::size_t x = 0; x < g.order(); ++x) {
            if (std::binary_search(cur.begin(), cur.end(), x)) continue;
            auto gens = cur;
            gens.push_back(x);
            auto sub = generated_subgroup(g, gens);
            if (seen.insert(sub).second) queue.push_back(std::move(sub));
        }
    }
    std::vector<std::vector<std::size_t>> out(seen.begin(), seen.end());
    std::stable_sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.size() < y.size(); });
    return out;
}

/// |S| is a power of p (so, by Lagrange and Cauchy, every element order is).
inline bool is_p_group(const GroupTable&, const std::vector<std::size_t>& s, std::size_t p) {
    std::size_t n = s.size();
    while (n % p == 0) n /= p;
    return n == 1;
}

/// KG with basis G: structure constants are the permutation tensor of the table.
inline Algebra group_algebra(const FieldSpec& f, const GroupTable& g) {
    const std::size_t n = g.order();
    std::vector<std::vector<Vector>> table(n, std::vector<Vector>(n));
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) table[x][y] = unit_vector(f, n, g.multiply(x, y));
    return Algebra(f, std::move(table), unit_vector(f, n, g.identity()), g.element_names());
}

/// Span of the group elements in `s` inside KG.
inline Subspace group_span(const Algebra& kg, const std::vector<std::size_t>& s) {
    std::vector<Element> gens;
    for (auto x : s) gens.push_back(kg.basis(x));
    return span_of(kg, gens);
}

/// KG · Aug(KP) = span{ g (x - 1) : g in G, 1 != x in P }.
inline Subspace augmentation_left_ideal(const Algebra& kg, const GroupTable& g, const std::vector<std::size_t>& p) {
    if (kg.dim() != g.order()) throw Error(Errc::DimensionMismatch, "group algebra does not match the group");
    if (!is_subgroup(g, p)) throw Error(Errc::NotSubgroup, "index set is not a subgroup");
    Matrix gens(kg.field(), 0, kg.dim());
    for (std::size_t h = 0; h < g.order(); ++h)
        for (auto x : p) {
            if (x == g.identity()) continue;
            Element v = kg.zero();
            v[g.multiply(h, x)] += Scalar::one(kg.field());
            v[h] -= Scalar::one(kg.field());
            gens.append_row(v);
        }
    return Subspace(std::move(gens));
}

/// Group algebras K H of all subgroups H, ordered as all_subgroups; offered
/// to radical_complement as preferred complements.
inline std::vector<Subspace> subgroup_algebra_candidates(const Algebra& kg, const GroupTable& g) {
    std::vector<Subspace> out;
    for (const auto& h : all_subgroups(g)) out.push_back(group_span(kg, h));
    return out;
}

}  // namespace cartan

#endif
