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

#include <gtest/gtest.h>

#include <random>

#include "test_support.hpp"

namespace cartan {
namespace {

const FieldSpec Q = FieldSpec::rationals();
const FieldSpec GF3 = FieldSpec::prime(3);

Matrix random_matrix(const FieldSpec& f, std::size_t r, std::size_t c, std::mt19937_64& rng, int zero_bias = 0) {
    Matrix m(f, r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j)
            m(i, j) = (zero_bias > 0 && rng() % (zero_bias + 1) != 0) ? Scalar::zero(f) : testing::random_scalar(f, rng);
    return m;
}

bool is_rref(const Matrix& m) {
    long last = -1;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        std::size_t p = 0;
        while (p < m.cols() && m(i, p).is_zero()) ++p;
        if (p == m.cols() || static_cast<long>(p) <= last || !m(i, p).is_one()) return false;
        for (std::size_t k = 0; k < m.rows(); ++k)
            if (k != i && !m(k, p).is_zero()) return false;
        last = static_cast<long>(p);
    }
    return true;
}

TEST(Rref, KnownExample) {
    Matrix m = Matrix::from_rows(Q, 3, {{Scalar::from_int(Q, 2), Scalar::from_int(Q, 4), Scalar::from_int(Q, 2)},
                                        {Scalar::from_int(Q, 1), Scalar::from_int(Q, 2), Scalar::from_int(Q, 3)},
                                        {Scalar::from_int(Q, 3), Scalar::from_int(Q, 6), Scalar::from_int(Q, 5)}});
    const auto piv = rref_in_place(m);
    ASSERT_EQ(piv, (std::vector<std::size_t>{0, 2}));
    EXPECT_EQ(m.rows(), 2u);
    EXPECT_EQ(m(0, 1), Scalar::from_int(Q, 2));
    EXPECT_TRUE(m(0, 2).is_zero());
    EXPECT_TRUE(m(1, 2).is_one());
}

TEST(Rref, CanonicalUnderRowOperations) {
    std::mt19937_64 rng(11);
    for (const FieldSpec& f : {Q, GF3}) {
        for (int t = 0; t < 40; ++t) {
            const Matrix m = random_matrix(f, 4, 6, rng, 1);
            // Mix the rows by a random invertible matrix.
            Matrix g = random_matrix(f, 4, 4, rng);
            while (!inverse(g)) g = random_matrix(f, 4, 4, rng);
            const Subspace a(m), b(g * m);
            EXPECT_EQ(a, b);
            EXPECT_TRUE(is_rref(a.basis()));
        }
    }
}

TEST(Nullspace, RankNullityAndKernel) {
    std::mt19937_64 rng(12);
    for (const FieldSpec& f : {Q, GF3}) {
        for (int t = 0; t < 40; ++t) {
            const std::size_t r = 1 + rng() % 5, c = 1 + rng() % 6;
            const Matrix m = random_matrix(f, r, c, rng, 1);
            const Matrix k = nullspace(m);
            EXPECT_EQ(rank(m) + k.rows(), c);
            EXPECT_EQ(rank(k), k.rows());
            for (std::size_t i = 0; i < k.rows(); ++i) EXPECT_TRUE(is_zero(m.apply(k.row(i))));
        }
    }
}

TEST(Solve, ConsistentAndInconsistent) {
    std::mt19937_64 rng(13);
    for (int t = 0; t < 40; ++t) {
        const Matrix m = random_matrix(GF3, 4, 3, rng);
        Vector x(3, Scalar::zero(GF3));
        for (auto& s : x) s = testing::random_scalar(GF3, rng);
        const Vector b = m.apply(x);
        const auto sol = solve(m, b);
        ASSERT_TRUE(sol.has_value());
        EXPECT_EQ(m.apply(*sol), b);
    }
    const Matrix z = Matrix::from_rows(Q, 1, {{Scalar::zero(Q)}});
    EXPECT_FALSE(solve(z, Vector{Scalar::one(Q)}).has_value());
}

TEST(Inverse, TimesSelfIsIdentity) {
    std::mt19937_64 rng(14);
    int found = 0;
    for (int t = 0; t < 60; ++t) {
        const Matrix m = random_matrix(Q, 4, 4, rng);
        const auto inv = inverse(m);
        if (!inv) {
            EXPECT_LT(rank(m), 4u);
            continue;
        }
        ++found;
        EXPECT_EQ(m * *inv, Matrix::identity(Q, 4));
        EXPECT_EQ(*inv * m, Matrix::identity(Q, 4));
    }
    EXPECT_GT(found, 0);
}

TEST(SubspaceOps, SumIntersectionDimensions) {
    std::mt19937_64 rng(15);
    for (const FieldSpec& f : {Q, GF3}) {
        for (int t = 0; t < 40; ++t) {
            const Subspace a(random_matrix(f, 1 + rng() % 4, 6, rng, 1));
            const Subspace b(random_matrix(f, 1 + rng() % 4, 6, rng, 1));
            const Subspace s = a + b, i = intersect(a, b);
            EXPECT_EQ(s.dim() + i.dim(), a.dim() + b.dim());
            EXPECT_TRUE(a.contains(i));
            EXPECT_TRUE(b.contains(i));
            EXPECT_TRUE(s.contains(a));
            EXPECT_TRUE(s.contains(b));
        }
    }
}

TEST(SubspaceOps, CoordinatesRoundTrip) {
    std::mt19937_64 rng(16);
    const Subspace s(random_matrix(GF3, 3, 5, rng));
    for (int t = 0; t < 20; ++t) {
        Vector c(s.dim(), Scalar::zero(GF3));
        for (auto& x : c) x = testing::random_scalar(GF3, rng);
        const Vector v = s.combine(c);
        EXPECT_TRUE(s.contains(v));
        EXPECT_EQ(s.coordinates(v), c);
    }
}

TEST(SubspaceOps, AnnihilatorCutsOutSubspace) {
    std::mt19937_64 rng(17);
    const Subspace s(random_matrix(Q, 2, 5, rng));
    const Matrix ann = s.annihilator();
    EXPECT_EQ(ann.rows() + s.dim(), 5u);
    EXPECT_EQ(Subspace(nullspace(ann)), s);
}

TEST(SubspaceOps, DimensionMismatch) {
    EXPECT_THROW((void)(Subspace::full(Q, 2) + Subspace::full(Q, 3)), Error);
}

}  // namespace
}  // namespace cartan
