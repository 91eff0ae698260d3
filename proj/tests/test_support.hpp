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

#ifndef CARTAN_TESTS_SUPPORT_HPP
#define CARTAN_TESTS_SUPPORT_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "cartan/cartan.hpp"

namespace cartan::testing {

inline Scalar random_scalar(const FieldSpec& f, std::mt19937_64& rng) {
    if (f.is_finite()) return Scalar::from_int(f, static_cast<long long>(rng() % f.characteristic()));
    std::uniform_int_distribution<int> num(-5, 5), den(1, 4);
    return Scalar::fraction(f, num(rng), den(rng));
}

inline Element random_element(const Algebra& a, std::mt19937_64& rng) {
    Element x = a.zero();
    for (auto& c : x) c = random_scalar(a.field(), rng);
    return x;
}

inline Element element_of(const Algebra& a, const std::vector<std::pair<std::size_t, long long>>& terms) {
    Element x = a.zero();
    for (const auto& [i, c] : terms) x[i] += Scalar::from_int(a.field(), c);
    return x;
}

inline Element group_element(const Algebra& kg, std::size_t g) { return kg.basis(g); }

/// Index of a^i b^s in the dihedral ordering 1, a, ..., a^{n-1}, b, ab, ...
inline std::size_t dihedral_index(std::size_t n, std::size_t i, std::size_t s) { return s * n + i % n; }

/// Sum of all group elements.
inline Element group_sum(const Algebra& kg) {
    Element x = kg.zero();
    for (auto& c : x) c = Scalar::one(kg.field());
    return x;
}

/// A seeded random unital subalgebra of M_n(GF(p)), returned as a
/// structure-constant algebra in its own right.
inline Algebra random_matrix_subalgebra(const FieldSpec& f, std::size_t n, std::size_t gens, std::mt19937_64& rng) {
    const Algebra m = matrix_algebra(f, n);
    std::vector<Element> g;
    for (std::size_t i = 0; i < gens; ++i) g.push_back(random_element(m, rng));
    return restrict_to_subalgebra(m, associative_closure(m, g, true));
}

/// Random unital subalgebras of M2/M3 over GF(p) with dimension in [lo, hi].
inline std::vector<Algebra> random_algebra_family(const FieldSpec& f, std::size_t count, std::size_t lo,
                                                  std::size_t hi, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<Algebra> out;
    for (std::size_t attempts = 0; out.size() < count && attempts < 200 * count; ++attempts) {
        const std::size_t n = 2 + rng() % 2;
        Algebra a = random_matrix_subalgebra(f, n, 1 + rng() % 2, rng);
        if (a.dim() >= lo && a.dim() <= hi) out.push_back(std::move(a));
    }
    return out;
}

/// Hand-built oracle-eligible algebras (dim <= 4) followed by seeded random ones.
inline std::vector<Algebra> oracle_pool(const FieldSpec& f, std::size_t random_count, std::uint64_t seed) {
    std::vector<Algebra> pool{matrix_algebra(f, 1),
                              dual_numbers(f),
                              truncated_polynomial(f, 3),
                              truncated_polynomial(f, 4),
                              upper_triangular(f, 2),
                              matrix_algebra(f, 2),
                              split_product(f, 2),
                              split_product(f, 3),
                              direct_product(matrix_algebra(f, 1), dual_numbers(f)),
                              direct_product(dual_numbers(f), dual_numbers(f)),
                              polynomial_quotient(f, {1, 0}),
                              group_algebra(f, cyclic(2)),
                              group_algebra(f, cyclic(3)),
                              group_algebra(f, cyclic(4)),
                              group_algebra(f, direct_product(cyclic(2), cyclic(2))),
                              tensor_product(dual_numbers(f), dual_numbers(f))};
    for (auto& a : random_algebra_family(f, random_count, 1, 4, seed)) pool.push_back(std::move(a));
    return pool;
}

}  // namespace cartan::testing

#endif
