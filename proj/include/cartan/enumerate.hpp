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

#ifndef CARTAN_ENUMERATE_HPP
#define CARTAN_ENUMERATE_HPP

#include <cstddef>
#include <cstdint>

#include "algebra.hpp"

namespace cartan {

/// Default cap on brute-force element enumeration.
inline constexpr std::uint64_t kEnumerationBound = std::uint64_t{1} << 16;

/// |A| = p^dim, or throws if A is infinite or |A| exceeds `bound`.
inline std::uint64_t element_count(const Algebra& a, std::uint64_t bound = kEnumerationBound) {
    if (!a.field().is_finite()) throw Error(Errc::NotFiniteField, "enumeration needs a finite base field");
    const std::uint64_t p = a.field().characteristic();
    std::uint64_t n = 1;
    for (std::size_t i = 0; i < a.dim(); ++i) {
        if (n > bound / p) throw Error(Errc::EnumerationTooLarge, "algebra has more than " + std::to_string(bound) + " elements");
        n *= p;
    }
    return n;
}

/// Element whose coordinates are the base-p digits of `index` (coordinate 0 least significant).
inline Element element_at(const Algebra& a, std::uint64_t index) {
    const std::uint64_t p = a.field().characteristic();
    Element x = a.zero();
    for (std::size_t i = 0; i < a.dim(); ++i) {
        x[i] = Scalar::from_int(a.field(), static_cast<long long>(index % p));
        index /= p;
    }
    return x;
}

inline std::uint64_t index_of(const Element& x, std::uint64_t p) {
    std::uint64_t idx = 0;
    for (std::size_t i = x.size(); i-- > 0;) idx = idx * p + x[i].residue();
    return idx;
}

/// Every element of a subspace over GF(p), in coefficient-counter order.
template <class F>
void for_each_in_subspace(const Subspace& s, F&& fn) {
    const std::uint64_t p = s.field().characteristic();
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < s.dim(); ++i) total *= p;
    Vector coeffs = zero_vector(s.field(), s.dim());
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        std::uint64_t r = idx;
        for (std::size_t i = 0; i < s.dim(); ++i) {
            coeffs[i] = Scalar::from_int(s.field(), static_cast<long long>(r % p));
            r /= p;
        }
        fn(s.combine(coeffs));
    }
}

}  // namespace cartan

#endif
