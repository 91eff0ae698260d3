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

#ifndef CARTAN_UNITS_HPP
#define CARTAN_UNITS_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "enumerate.hpp"
#include "group.hpp"
#include "radical.hpp"

namespace cartan {

/// E(A) as an abstract table plus the element each index stands for.
struct UnitGroup {
    GroupTable group;
    std::vector<Element> embedding;
    std::vector<std::uint64_t> codes;  // base-p index of each unit
};

/// Cayley tables of more than this many entries are refused.
inline constexpr std::uint64_t kUnitTableBound = std::uint64_t{1} << 24;

namespace detail {

// Rank of a dense matrix over GF(p), destroying it.
inline std::size_t rank_mod_p(std::vector<std::uint64_t>& m, std::size_t n, std::uint64_t p) {
    std::size_t r = 0;
    for (std::size_t c = 0; c < n && r < n; ++c) {
        std::size_t sel = r;
        while (sel < n && m[sel * n + c] == 0) ++sel;
        if (sel == n) continue;
        for (std::size_t j = 0; j < n; ++j) std::swap(m[sel * n + j], m[r * n + j]);
        const std::uint64_t inv = Scalar::pow_mod(m[r * n + c], p - 2, p);
        for (std::size_t j = 0; j < n; ++j) m[r * n + j] = m[r * n + j] * inv % p;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == r || m[i * n + c] == 0) continue;
            const std::uint64_t f = m[i * n + c];
            for (std::size_t j = 0; j < n; ++j) m[i * n + j] = (m[i * n + j] + (p - f) * m[r * n + j]) % p;
        }
        ++r;
    }
    return r;
}

}  // namespace detail

/// Enumerates all of A and keeps the elements whose left multiplication is
/// invertible; in a finite-dimensional unital algebra these are the units.
inline UnitGroup unit_group(const Algebra& a, std::uint64_t bound = kEnumerationBound) {
    const std::uint64_t total = element_count(a, bound);
    const std::uint64_t p = a.field().characteristic();
    const std::size_t n = a.dim();
    // c[(i*n + j)*n + k] = structure constant of e_i e_j at e_k
    std::vector<std::uint64_t> c(n * n * n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (const auto& t : a.basis_product_terms(i, j)) c[(i * n + j) * n + t.index] = t.coeff.residue();

    std::vector<std::uint64_t> digits(n);
    auto decode = [&](std::uint64_t idx) {
        for (std::size_t i = 0; i < n; ++i) {
            digits[i] = idx % p;
            idx /= p;
        }
    };
    // L_x as row-major n x n: column j is x e_j.
    auto left_matrix = [&](std::vector<std::uint64_t>& m) {
        std::fill(m.begin(), m.end(), 0);
        for (std::size_t i = 0; i < n; ++i) {
            if (digits[i] == 0) continue;
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t k = 0; k < n; ++k) {
                    const std::uint64_t v = c[(i * n + j) * n + k];
                    if (v) m[k * n + j] = (m[k * n + j] + digits[i] * v) % p;
                }
        }
    };

    UnitGroup out;
    std::vector<std::vector<std::uint64_t>> mats;
    std::vector<std::int64_t> position(total, -1);
    std::vector<std::uint64_t> m(n * n), scratch(n * n);
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        decode(idx);
        left_matrix(m);
        scratch = m;
        if (detail::rank_mod_p(scratch, n, p) != n) continue;
        position[idx] = static_cast<std::int64_t>(out.codes.size());
        out.codes.push_back(idx);
        mats.push_back(m);
    }
    const std::size_t order = out.codes.size();
    if (static_cast<std::uint64_t>(order) * order > kUnitTableBound)
        throw Error(Errc::EnumerationTooLarge, "unit group table too large: " + std::to_string(order) + " units");

    std::vector<std::vector<std::size_t>> mul(order, std::vector<std::size_t>(order));
    std::vector<std::uint64_t> y(n), prod(n);
    for (std::size_t v = 0; v < order; ++v) {
        decode(out.codes[v]);
        y = digits;
        for (std::size_t u = 0; u < order; ++u) {
            const auto& lu = mats[u];
            std::uint64_t code = 0;
            for (std::size_t k = n; k-- > 0;) {
                std::uint64_t s = 0;
                for (std::size_t j = 0; j < n; ++j) s += lu[k * n + j] * y[j];
                code = code * p + s % p;
            }
            mul[u][v] = static_cast<std::size_t>(position[code]);
        }
    }
    std::vector<std::string> names;
    for (auto code : out.codes) {
        const Element e = element_at(a, code);
        std::string s = "[";
        for (std::size_t i = 0; i < n; ++i) s += (i ? "," : "") + e[i].to_string();
        names.push_back(s + "]");
        out.embedding.push_back(e);
    }
    const std::size_t id = static_cast<std::size_t>(position[index_of(a.one(), p)]);
    out.group = GroupTable(std::move(mul), id, std::move(names), KnownAssociative{});
    return out;
}

struct GroupNilpotency {
    bool nilpotent = false;
    std::size_t nilpotency_class = 0;
    std::vector<std::vector<std::size_t>> series;  // G = γ1 ⊇ γ2 ⊇ ... (stable term last)
};

/// Lower central series γ_{k+1} = [γ_k, G].
inline GroupNilpotency group_nilpotency(const GroupTable& g) {
    GroupNilpotency r;
    const auto all = all_elements(g);
    r.series.push_back(all);
    while (r.series.back().size() > 1) {
        auto next = commutator_subgroup(g, r.series.back(), all);
        if (next == r.series.back()) break;
        r.series.push_back(std::move(next));
    }
    r.nilpotent = r.series.back().size() == 1;
    r.nilpotency_class = r.nilpotent ? r.series.size() - 1 : 0;
    return r;
}

struct UnitsDecomposition {
    bool units_nilpotent = false;
    std::size_t units_order = 0;
    std::size_t one_plus_radical_order = 0;
    std::size_t complement_units_order = 0;
    bool order_product_matches = false;
    bool trivial_intersection = false;
    bool complement_units_central = false;

    bool holds() const noexcept {
        return units_nilpotent && order_product_matches && trivial_intersection && complement_units_central;
    }
};

/// E(A) = (1 + rad(A)) × E(T) for the computed complement T, checked by enumeration.
inline UnitsDecomposition units_decomposition_check(const Algebra& a, const std::vector<Subspace>& preferred = {},
                                                    std::uint64_t bound = kEnumerationBound) {
    UnitsDecomposition r;
    const UnitGroup u = unit_group(a, bound);
    r.units_order = u.group.order();
    r.units_nilpotent = group_nilpotency(u.group).nilpotent;
    const RadicalDecomposition d = radical_decomposition(a, preferred);
    std::vector<std::size_t> one_plus_rad, complement_units;
    for (std::size_t i = 0; i < u.embedding.size(); ++i) {
        const Element& e = u.embedding[i];
        if (d.radical.contains(e - a.one())) one_plus_rad.push_back(i);
        if (d.complement.contains(e)) complement_units.push_back(i);
    }
    r.one_plus_radical_order = one_plus_rad.size();
    r.complement_units_order = complement_units.size();
    r.order_product_matches = r.one_plus_radical_order * r.complement_units_order == r.units_order;
    std::size_t common = 0;
    for (auto x : one_plus_rad)
        if (std::binary_search(complement_units.begin(), complement_units.end(), x)) ++common;
    r.trivial_intersection = common == 1;
    r.complement_units_central = true;
    for (auto t : complement_units)
        for (std::size_t g = 0; g < r.units_order && r.complement_units_central; ++g)
            if (u.group.multiply(t, g) != u.group.multiply(g, t)) r.complement_units_central = false;
    return r;
}

}  // namespace cartan

#endif
