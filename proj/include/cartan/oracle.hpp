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

#ifndef CARTAN_ORACLE_HPP
#define CARTAN_ORACLE_HPP

// Brute-force ground truth for tiny algebras over GF(2) and GF(3). Nothing
// here calls the radical or torus code; it only uses definitions.

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "enumerate.hpp"

namespace cartan::oracle {

/// (alpha, beta): increasing, disjoint, nonempty, covering {1, ..., n}.
struct Bipartition {
    std::vector<std::size_t> alpha;
    std::vector<std::size_t> beta;
};

/// The index set T_n, ordered by the bitmask of alpha.
inline std::vector<Bipartition> ordered_bipartitions(std::size_t n) {
    if (n < 2 || n > 20) throw Error(Errc::InvalidN, "ordered bipartitions need 2 <= n <= 20");
    std::vector<Bipartition> out;
    for (std::uint64_t mask = 1; mask + 1 < (std::uint64_t{1} << n); ++mask) {
        Bipartition b;
        for (std::size_t i = 0; i < n; ++i) (mask >> i & 1 ? b.alpha : b.beta).push_back(i + 1);
        out.push_back(std::move(b));
    }
    return out;
}

inline constexpr std::size_t kMaxOracleDim = 4;

inline void check_eligible(const Algebra& a) {
    const auto p = a.field().characteristic();
    if ((p != 2 && p != 3) || a.dim() > kMaxOracleDim)
        throw Error(Errc::TooLarge, "oracle needs GF(2) or GF(3) and dimension <= 4");
}

/// Every subspace of GF(p)^n, one reduced row-echelon matrix per subspace,
/// generated from pivot profiles and free-entry assignments.
inline std::vector<Subspace> enumerate_subspaces(const FieldSpec& f, std::size_t n) {
    const std::uint64_t p = f.characteristic();
    std::vector<Subspace> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        std::vector<std::size_t> piv;
        for (std::size_t j = 0; j < n; ++j)
            if (mask >> j & 1) piv.push_back(j);
        // free slots: (row, col) with col > pivot of row and col not a pivot
        std::vector<std::pair<std::size_t, std::size_t>> slots;
        for (std::size_t r = 0; r < piv.size(); ++r)
            for (std::size_t j = piv[r] + 1; j < n; ++j)
                if (!(mask >> j & 1)) slots.emplace_back(r, j);
        std::uint64_t count = 1;
        for (std::size_t k = 0; k < slots.size(); ++k) count *= p;
        for (std::uint64_t code = 0; code < count; ++code) {
            Matrix m(f, piv.size(), n);
            for (std::size_t r = 0; r < piv.size(); ++r) m(r, piv[r]) = Scalar::one(f);
            std::uint64_t c = code;
            for (const auto& [r, j] : slots) {
                m(r, j) = Scalar::from_int(f, static_cast<long long>(c % p));
                c /= p;
            }
            out.emplace_back(std::move(m));
        }
    }
    return out;
}

/// All nilpotent, self-normalizing Lie subalgebras of A∘.
inline std::vector<Subspace> enumerate_cartans_bruteforce(const Algebra& a) {
    check_eligible(a);
    std::vector<Subspace> out;
    for (auto& s : enumerate_subspaces(a.field(), a.dim())) {
        if (!is_lie_closed(a, s)) continue;
        if (!lower_central_series(a, s).nilpotent) continue;
        if (lie_normalizer(a, s) != s) continue;
        out.push_back(std::move(s));
    }
    return out;
}

namespace detail {
inline bool nilpotent_by_powers(const Algebra& a, const Element& x) {
    Element y = x;
    for (std::size_t k = 0; k <= a.dim(); ++k) {
        if (is_zero(y)) return true;
        y = a.multiply(y, x);
    }
    return is_zero(y);
}
}  // namespace detail

/// Largest two-sided ideal consisting of nilpotent elements.
inline Subspace radical_bruteforce(const Algebra& a) {
    check_eligible(a);
    Subspace best = Subspace::zero(a.field(), a.dim());
    for (auto& s : enumerate_subspaces(a.field(), a.dim())) {
        if (s.dim() <= best.dim() || !is_two_sided_ideal(a, s)) continue;
        bool nil = true;
        for_each_in_subspace(s, [&](const Element& x) { nil = nil && detail::nilpotent_by_powers(a, x); });
        if (nil) best = std::move(s);
    }
    return best;
}

}  // namespace cartan::oracle

#endif
