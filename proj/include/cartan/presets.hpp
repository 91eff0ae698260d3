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

#ifndef CARTAN_PRESETS_HPP
#define CARTAN_PRESETS_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "algebra.hpp"

namespace cartan {

/// M_n(K) on matrix units E_ij, index i*n + j.
inline Algebra matrix_algebra(const FieldSpec& f, std::size_t n) {
    const std::size_t d = n * n;
    std::vector<std::vector<Vector>> table(d, std::vector<Vector>(d, zero_vector(f, d)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t l = 0; l < n; ++l) table[i * n + j][j * n + l][i * n + l] = Scalar::one(f);
    Vector one = zero_vector(f, d);
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) {
        one[i * n + i] = Scalar::one(f);
        for (std::size_t j = 0; j < n; ++j) names.push_back("E" + std::to_string(i + 1) + std::to_string(j + 1));
    }
    return Algebra(f, std::move(table), std::move(one), std::move(names));
}

/// Upper triangular n x n matrices, on E_ij with i <= j in row-major order.
inline Algebra upper_triangular(const FieldSpec& f, std::size_t n) {
    std::vector<std::pair<std::size_t, std::size_t>> units;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) units.emplace_back(i, j);
    const std::size_t d = units.size();
    auto index = [&](std::size_t i, std::size_t j) {
        for (std::size_t k = 0; k < d; ++k)
            if (units[k].first == i && units[k].second == j) return k;
        return d;
    };
    std::vector<std::vector<Vector>> table(d, std::vector<Vector>(d, zero_vector(f, d)));
    Vector one = zero_vector(f, d);
    std::vector<std::string> names;
    for (std::size_t x = 0; x < d; ++x) {
        const auto [i, j] = units[x];
        if (i == j) one[x] = Scalar::one(f);
        names.push_back("E" + std::to_string(i + 1) + std::to_string(j + 1));
        for (std::size_t y = 0; y < d; ++y)
            if (units[y].first == j) table[x][y][index(i, units[y].second)] = Scalar::one(f);
    }
    return Algebra(f, std::move(table), std::move(one), std::move(names));
}

/// K[x]/(x^k) on 1, x, ..., x^{k-1}.
inline Algebra truncated_polynomial(const FieldSpec& f, std::size_t k) {
    std::vector<std::vector<Vector>> table(k, std::vector<Vector>(k, zero_vector(f, k)));
    std::vector<std::string> names;
    for (std::size_t i = 0; i < k; ++i) {
        names.push_back(i == 0 ? "1" : (i == 1 ? "x" : "x^" + std::to_string(i)));
        for (std::size_t j = 0; i + j < k; ++j) table[i][j][i + j] = Scalar::one(f);
    }
    return Algebra(f, std::move(table), unit_vector(f, k, 0), std::move(names));
}

/// K[x]/(x^2)
inline Algebra dual_numbers(const FieldSpec& f) { return truncated_polynomial(f, 2); }

/// K[x]/(m(x)) for a monic m given by its coefficients (lowest first, leading 1 omitted).
inline Algebra polynomial_quotient(const FieldSpec& f, const std::vector<long long>& lower_coeffs) {
    const std::size_t k = lower_coeffs.size();
    // reduction of x^t for t < 2k-1 in the basis 1..x^{k-1}
    std::vector<Vector> pow(2 * k, zero_vector(f, k));
    for (std::size_t t = 0; t < k; ++t) pow[t][t] = Scalar::one(f);
    for (std::size_t t = k; t < 2 * k; ++t) {
        // x^t = x * x^{t-1}
        const Vector& prev = pow[t - 1];
        Vector v = zero_vector(f, k);
        for (std::size_t i = 0; i + 1 < k; ++i) v[i + 1] = prev[i];
        const Scalar top = prev[k - 1];
        for (std::size_t i = 0; i < k; ++i) v[i] -= top * Scalar::from_int(f, lower_coeffs[i]);
        pow[t] = v;
    }
    std::vector<std::vector<Vector>> table(k, std::vector<Vector>(k));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) table[i][j] = pow[i + j];
    std::vector<std::string> names;
    for (std::size_t i = 0; i < k; ++i) names.push_back(i == 0 ? "1" : (i == 1 ? "x" : "x^" + std::to_string(i)));
    return Algebra(f, std::move(table), unit_vector(f, k, 0), std::move(names));
}

/// K^m with componentwise product.
inline Algebra split_product(const FieldSpec& f, std::size_t m) {
    std::vector<std::vector<Vector>> table(m, std::vector<Vector>(m, zero_vector(f, m)));
    Vector one = zero_vector(f, m);
    std::vector<std::string> names;
    for (std::size_t i = 0; i < m; ++i) {
        table[i][i][i] = Scalar::one(f);
        one[i] = Scalar::one(f);
        names.push_back("u" + std::to_string(i + 1));
    }
    return Algebra(f, std::move(table), std::move(one), std::move(names));
}

/// The rational quaternions (-1,-1/Q): i^2 = j^2 = -1, ij = k = -ji.
inline Algebra quaternion_algebra() {
    const FieldSpec f = FieldSpec::rationals();
    // basis 1, i, j, k; mult[x][y] = (sign, index)
    const int sign[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
    const std::size_t idx[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    std::vector<std::vector<Vector>> table(4, std::vector<Vector>(4, zero_vector(f, 4)));
    for (std::size_t x = 0; x < 4; ++x)
        for (std::size_t y = 0; y < 4; ++y) table[x][y][idx[x][y]] = Scalar::from_int(f, sign[x][y]);
    return Algebra(f, std::move(table), unit_vector(f, 4, 0), {"1", "i", "j", "k"});
}

}  // namespace cartan

#endif
