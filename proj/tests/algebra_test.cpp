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

#include <cmath>
#include <random>

#include "test_support.hpp"

namespace cartan {
namespace {

using testing::dihedral_index;
using testing::element_of;
using testing::random_element;

const FieldSpec Q = FieldSpec::rationals();
const FieldSpec GF2 = FieldSpec::prime(2);
const FieldSpec GF3 = FieldSpec::prime(3);

// Matrix units of M_n: E_ij has index (i-1)n + (j-1).
std::size_t E(std::size_t n, std::size_t i, std::size_t j) { return (i - 1) * n + (j - 1); }

Subspace span(const Algebra& a, const std::vector<Element>& xs) { return span_of(a, xs); }


/// 1 plus the strictly upper triangular 3x3 matrices: Lie class 2.
Algebra unitriangular_span(const FieldSpec& f) {
    const Algebra m = matrix_algebra(f, 3);
    return restrict_to_subalgebra(m, span(m, {m.one(), m.basis(E(3, 1, 2)), m.basis(E(3, 1, 3)), m.basis(E(3, 2, 3))}));
}

TEST(Multiply, GroupBasis) {
    const GroupTable g = dihedral(4);
    const Algebra kg = group_algebra(GF3, g);
    for (std::size_t x = 0; x < g.order(); ++x)
        for (std::size_t y = 0; y < g.order(); ++y) EXPECT_EQ(multiply(kg, kg.basis(x), kg.basis(y)), kg.basis(g.multiply(x, y)));
}

TEST(Multiply, MatrixUnits) {
    const Algebra m = matrix_algebra(Q, 2);
    EXPECT_EQ(multiply(m, m.basis(E(2, 1, 1)), m.basis(E(2, 1, 2))), m.basis(E(2, 1, 2)));
    EXPECT_EQ(multiply(m, m.basis(E(2, 1, 2)), m.basis(E(2, 1, 1))), m.zero());
}

TEST(Multiply, DihedralSquare) {
    const Algebra kg = group_algebra(GF3, dihedral(3));
    const Element a_minus_1 = element_of(kg, {{dihedral_index(3, 1, 0), 1}, {0, -1}});
    const Element expected = element_of(kg, {{dihedral_index(3, 2, 0), 1}, {dihedral_index(3, 1, 0), 1}, {0, 1}});
    EXPECT_EQ(multiply(kg, a_minus_1, a_minus_1), expected);
}

TEST(Multiply, DimensionMismatch) {
    const Algebra m = matrix_algebra(Q, 2);
    try {
        (void)multiply(m, m.one(), Element(3, Scalar::zero(Q)));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::DimensionMismatch);
    }
}

TEST(Construction, RejectsNonAssociativeTable) {
    // Dual numbers with the wrong identity, then a genuinely non-associative table.
    std::vector<std::vector<Vector>> t(2, std::vector<Vector>(2));
    auto v = [](long long x, long long y) { return Vector{Scalar::from_int(Q, x), Scalar::from_int(Q, y)}; };
    t[0][0] = v(1, 0);
    t[0][1] = v(0, 1);
    t[1][0] = v(0, 1);
    t[1][1] = v(0, 0);
    EXPECT_NO_THROW(Algebra(Q, t, v(1, 0)));
    try {
        Algebra(Q, t, v(0, 1));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::ValidationError);
    }
    std::vector<std::vector<Vector>> u(3, std::vector<Vector>(3, Vector(3, Scalar::zero(Q))));
    for (std::size_t i = 0; i < 3; ++i) {
        u[0][i][i] = Scalar::one(Q);
        u[i][0][i] = Scalar::one(Q);
    }
    u[1][1][2] = Scalar::one(Q);  // x^2 = y
    u[1][2][1] = Scalar::one(Q);  // x y = x, but y x = 0: (xx)x = yx = 0 != x(xx) = xy = x
    const Vector one{Scalar::one(Q), Scalar::zero(Q), Scalar::zero(Q)};
    EXPECT_THROW(Algebra(Q, u, one), Error);
}

TEST(LieBracket, SelfIsZero) {
    std::mt19937_64 rng(31);
    const Algebra m = matrix_algebra(Q, 3);
    for (int t = 0; t < 10; ++t) {
        const Element x = random_element(m, rng);
        EXPECT_EQ(lie_bracket(m, x, x), m.zero());
    }
}

TEST(LieBracket, CommutativeIsZero) {
    std::mt19937_64 rng(32);
    const Algebra c = group_algebra(GF3, cyclic(5));
    for (int t = 0; t < 10; ++t) EXPECT_EQ(lie_bracket(c, random_element(c, rng), random_element(c, rng)), c.zero());
}

TEST(LieBracket, MatrixUnits) {
    const Algebra m = matrix_algebra(Q, 2);
    EXPECT_EQ(lie_bracket(m, m.basis(E(2, 1, 1)), m.basis(E(2, 1, 2))), m.basis(E(2, 1, 2)));
}

TEST(LieBracket, BilinearAnticommutativeJacobi) {
    std::mt19937_64 rng(33);
    for (const Algebra& a : {matrix_algebra(Q, 2), quaternion_algebra(), group_algebra(GF3, dihedral(3))}) {
        for (int t = 0; t < 20; ++t) {
            const Element x = random_element(a, rng), y = random_element(a, rng), z = random_element(a, rng);
            const Scalar c = testing::random_scalar(a.field(), rng);
            EXPECT_EQ(lie_bracket(a, x + c * y, z), lie_bracket(a, x, z) + c * lie_bracket(a, y, z));
            EXPECT_EQ(lie_bracket(a, x, y), -lie_bracket(a, y, x));
            const Element jac = lie_bracket(a, lie_bracket(a, x, y), z) + lie_bracket(a, lie_bracket(a, y, z), x) +
                                lie_bracket(a, lie_bracket(a, z, x), y);
            EXPECT_EQ(jac, a.zero());
        }
    }
}

TEST(AdMatrix, OneAndCentralAreZero) {
    const Algebra m = matrix_algebra(GF3, 2);
    EXPECT_TRUE(ad_matrix(m, m.one()).matrix.is_zero());
    const Algebra kg = group_algebra(GF3, dihedral(3));
    EXPECT_TRUE(ad_matrix(kg, testing::group_sum(kg)).matrix.is_zero());
}

TEST(AdMatrix, MatrixUnitAction) {
    const Algebra m = matrix_algebra(Q, 2);
    const LinearMap ad = ad_matrix(m, m.basis(E(2, 1, 1)));
    EXPECT_EQ(ad(m.basis(E(2, 1, 2))), -m.basis(E(2, 1, 2)));
    EXPECT_EQ(ad(m.basis(E(2, 2, 1))), m.basis(E(2, 2, 1)));
    EXPECT_EQ(ad(m.basis(E(2, 1, 1))), m.zero());
    EXPECT_EQ(ad(m.basis(E(2, 2, 2))), m.zero());
}

TEST(AdMatrix, AgreesWithBracket) {
    std::mt19937_64 rng(34);
    const Algebra a = group_algebra(GF3, dihedral(4));
    for (int t = 0; t < 10; ++t) {
        const Element l = random_element(a, rng), x = random_element(a, rng);
        EXPECT_EQ(ad_matrix(a, l)(x), lie_bracket(a, x, l));
    }
}

TEST(Centralizer, FullIsCenter) {
    const Algebra m = matrix_algebra(GF3, 2);
    const Subspace full = Subspace::full(GF3, 4);
    EXPECT_EQ(centralizer(m, full), span(m, {m.one()}));
    EXPECT_EQ(center(m), span(m, {m.one()}));
}

TEST(Centralizer, OfOneIsEverything) {
    const Algebra m = matrix_algebra(GF3, 2);
    EXPECT_EQ(centralizer(m, span(m, {m.one()})), Subspace::full(GF3, 4));
}

TEST(Centralizer, DihedralReflectionInRadical) {
    const Algebra kg = group_algebra(GF3, dihedral(3));
    const Subspace c = centralizer(kg, span(kg, {kg.one(), kg.basis(dihedral_index(3, 0, 1))}));
    EXPECT_EQ(intersect(c, radical(kg)).dim(), 2u);
}

TEST(Centralizer, ContainsCenter) {
    std::mt19937_64 rng(35);
    const Algebra a = group_algebra(GF3, dihedral(4));
    const Subspace z = center(a);
    for (int t = 0; t < 10; ++t) {
        const Subspace s = span(a, {random_element(a, rng), random_element(a, rng)});
        EXPECT_TRUE(centralizer(a, s).contains(z));
        const Subspace c = centralizer(a, s);
        for (std::size_t i = 0; i < c.dim(); ++i)
            for (std::size_t j = 0; j < s.dim(); ++j) EXPECT_EQ(lie_bracket(a, c.vector(i), s.vector(j)), a.zero());
    }
}

TEST(Normalizer, OfWholeAlgebra) {
    const Algebra m = matrix_algebra(GF3, 2);
    EXPECT_EQ(lie_normalizer(m, Subspace::full(GF3, 4)), Subspace::full(GF3, 4));
}

TEST(Normalizer, OfMatrixUnit) {
    const Algebra m = matrix_algebra(GF3, 2);
    const Subspace n = lie_normalizer(m, span(m, {m.basis(E(2, 1, 2))}));
    EXPECT_EQ(n, span(m, {m.basis(E(2, 1, 1)), m.basis(E(2, 1, 2)), m.basis(E(2, 2, 2))}));
}

TEST(Normalizer, RejectsNonSubalgebra) {
    const Algebra m = matrix_algebra(Q, 2);
    try {
        (void)lie_normalizer(m, span(m, {m.basis(E(2, 1, 2)), m.basis(E(2, 2, 1))}));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::NotLieClosed);
    }
}

TEST(Normalizer, ContainsSubalgebraAndMatchesDefinition) {
    std::mt19937_64 rng(36);
    const Algebra a = matrix_algebra(GF3, 2);
    for (int t = 0; t < 20; ++t) {
        const Subspace c = associative_closure(a, {random_element(a, rng)}, true);
        const Subspace n = lie_normalizer(a, c);
        EXPECT_TRUE(n.contains(c));
        // Brute force over all of M2(GF(3)).
        std::size_t count = 0;
        for (std::uint64_t k = 0; k < element_count(a); ++k) {
            const Element x = element_at(a, k);
            bool in = true;
            for (std::size_t i = 0; i < c.dim() && in; ++i) in = c.contains(lie_bracket(a, x, c.vector(i)));
            EXPECT_EQ(in, n.contains(x));
            count += in;
        }
        EXPECT_EQ(count, static_cast<std::size_t>(std::pow(3, n.dim())));
    }
}

TEST(LowerCentral, CommutativeHasClassOne) {
    const auto s = lower_central_series(group_algebra(GF3, cyclic(4)));
    EXPECT_TRUE(s.nilpotent);
    EXPECT_EQ(s.nilpotency_class, 1u);
}

TEST(LowerCentral, GeneralLinearNotNilpotent) {
    EXPECT_FALSE(lower_central_series(matrix_algebra(GF3, 2)).nilpotent);
    EXPECT_FALSE(lower_central_series(matrix_algebra(Q, 3)).nilpotent);
}

TEST(LowerCentral, RadicalIsNilpotent) {
    const Algebra kg = group_algebra(GF3, dihedral(3));
    EXPECT_TRUE(lower_central_series(kg, radical(kg)).nilpotent);
}

TEST(LowerCentral, UnitriangularClassTwo) {
    const auto s = lower_central_series(unitriangular_span(Q));
    EXPECT_TRUE(s.nilpotent);
    EXPECT_EQ(s.nilpotency_class, 2u);
}

TEST(LowerCentral, RejectsNonSubalgebra) {
    const Algebra m = matrix_algebra(Q, 2);
    EXPECT_THROW((void)lower_central_series(m, span(m, {m.basis(E(2, 1, 2)), m.basis(E(2, 2, 1))})), Error);
}

TEST(Closure, OfOne) {
    const Algebra m = matrix_algebra(Q, 2);
    EXPECT_EQ(associative_closure(m, {m.one()}, false), span(m, {m.one()}));
}

TEST(Closure, DihedralRotation) {
    const Algebra kg = group_algebra(GF3, dihedral(3));
    const Subspace c = associative_closure(kg, {kg.basis(1)}, true);
    EXPECT_EQ(c, span(kg, {kg.basis(0), kg.basis(1), kg.basis(2)}));
}

TEST(Closure, MatrixUnitsGenerate) {
    const Algebra m = matrix_algebra(Q, 2);
    EXPECT_EQ(associative_closure(m, {m.basis(E(2, 1, 2)), m.basis(E(2, 2, 1))}, false), Subspace::full(Q, 4));
}

TEST(QuotientTest, ByZero) {
    const Algebra m = matrix_algebra(GF3, 2);
    const Quotient q = quotient(m, Subspace::zero(GF3, 4));
    EXPECT_EQ(q.algebra.dim(), 4u);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) EXPECT_EQ(q.algebra.basis_product(i, j), m.basis_product(i, j));
}

TEST(QuotientTest, DualNumbersModuloNilpotent) {
    const Algebra d = dual_numbers(Q);
    const Quotient q = quotient(d, span(d, {d.basis(1)}));
    EXPECT_EQ(q.algebra.dim(), 1u);
    EXPECT_EQ(q.algebra.basis_product(0, 0), q.algebra.one());
}

TEST(QuotientTest, DihedralModRadical) {
    const Algebra kg = group_algebra(GF3, dihedral(3));
    const Subspace rad = radical(kg);
    const Quotient q = quotient(kg, rad);
    EXPECT_EQ(q.algebra.dim(), 2u);
    EXPECT_TRUE(q.algebra.is_commutative());
    // Image of b squares to 1.
    const Element b = q.project(kg.basis(dihedral_index(3, 0, 1)));
    EXPECT_EQ(q.algebra.multiply(b, b), q.algebra.one());
}

TEST(QuotientTest, ProjectionIsMultiplicative) {
    std::mt19937_64 rng(37);
    const Algebra a = upper_triangular(GF3, 3);
    const Quotient q = quotient(a, radical(a));
    for (int t = 0; t < 20; ++t) {
        const Element x = random_element(a, rng), y = random_element(a, rng);
        EXPECT_EQ(q.project(a.multiply(x, y)), q.algebra.multiply(q.project(x), q.project(y)));
        EXPECT_EQ(q.projection.apply(x), q.project(x));
    }
}

TEST(QuotientTest, RejectsNonIdeal) {
    const Algebra m = matrix_algebra(Q, 2);
    try {
        (void)quotient(m, span(m, {m.basis(E(2, 1, 2))}));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::NotIdeal);
    }
}

TEST(DirectProduct, DimensionAndBracket) {
    std::mt19937_64 rng(38);
    const Algebra a = matrix_algebra(GF3, 2), b = group_algebra(GF3, dihedral(3));
    const Algebra ab = direct_product(a, b);
    EXPECT_EQ(ab.dim(), a.dim() + b.dim());
    for (int t = 0; t < 20; ++t) {
        const Element a1 = random_element(a, rng), a2 = random_element(a, rng);
        const Element b1 = random_element(b, rng), b2 = random_element(b, rng);
        auto cat = [](Element x, const Element& y) {
            x.insert(x.end(), y.begin(), y.end());
            return x;
        };
        EXPECT_EQ(lie_bracket(ab, cat(a1, b1), cat(a2, b2)), cat(lie_bracket(a, a1, a2), lie_bracket(b, b1, b2)));
    }
}

TEST(DirectProduct, TwoIdempotents) {
    const Algebra k = matrix_algebra(GF3, 1);
    const Algebra kk = direct_product(k, k);
    EXPECT_EQ(kk.dim(), 2u);
    EXPECT_TRUE(kk.is_commutative());
    for (std::size_t i = 0; i < 2; ++i) EXPECT_EQ(kk.multiply(kk.basis(i), kk.basis(i)), kk.basis(i));
    EXPECT_EQ(kk.multiply(kk.basis(0), kk.basis(1)), kk.zero());
}

TEST(DirectProduct, FieldMismatch) {
    EXPECT_THROW((void)direct_product(matrix_algebra(GF3, 1), matrix_algebra(Q, 1)), Error);
}

void expect_same_table(const Algebra& a, const Algebra& b) {
    ASSERT_EQ(a.dim(), b.dim());
    EXPECT_EQ(a.one(), b.one());
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j) EXPECT_EQ(a.basis_product(i, j), b.basis_product(i, j));
}

TEST(TensorProduct, ScalarsAreNeutral) {
    const Algebra a = group_algebra(GF3, dihedral(3));
    expect_same_table(tensor_product(matrix_algebra(GF3, 1), a), a);
    expect_same_table(tensor_product(a, matrix_algebra(GF3, 1)), a);
}

TEST(TensorProduct, Dimension) {
    EXPECT_EQ(tensor_product(matrix_algebra(Q, 2), quaternion_algebra()).dim(), 16u);
}

TEST(TensorProduct, GroupAlgebraOfProduct) {
    const Algebra c2 = group_algebra(GF3, cyclic(2));
    expect_same_table(tensor_product(c2, c2), group_algebra(GF3, direct_product(cyclic(2), cyclic(2))));
}

TEST(TensorProduct, MatrixAlgebrasMultiply) {
    // M2 ⊗ M2 is central simple of dimension 16, so its center is span{1}.
    const Algebra t = tensor_product(matrix_algebra(GF2, 2), matrix_algebra(GF2, 2));
    EXPECT_EQ(center(t).dim(), 1u);
}

TEST(Properties, DerivationRule) {
    std::mt19937_64 rng(39);
    for (const Algebra& a : {matrix_algebra(Q, 3), group_algebra(GF3, dihedral(4)), quaternion_algebra()}) {
        for (int t = 0; t < 20; ++t) {
            const Element x = random_element(a, rng), y = random_element(a, rng), h = random_element(a, rng);
            const LinearMap ad = ad_matrix(a, h);
            EXPECT_EQ(ad(a.multiply(x, y)), a.multiply(ad(x), y) + a.multiply(x, ad(y)));
        }
    }
}

Element apply_ads(const Algebra& a, Element x, const std::vector<Element>& h, const std::vector<std::size_t>& idx) {
    for (auto i : idx) x = lie_bracket(a, x, h[i - 1]);
    return x;
}

TEST(Properties, GeneralizedLeibniz) {
    std::mt19937_64 rng(40);
    for (const Algebra& a : {matrix_algebra(GF3, 2), group_algebra(GF3, dihedral(3)), matrix_algebra(Q, 2)}) {
        for (std::size_t n = 2; n <= 4; ++n) {
            for (int t = 0; t < 5; ++t) {
                const Element x = random_element(a, rng), y = random_element(a, rng);
                std::vector<Element> h;
                std::vector<std::size_t> all;
                for (std::size_t i = 0; i < n; ++i) {
                    h.push_back(random_element(a, rng));
                    all.push_back(i + 1);
                }
                Element rhs = a.multiply(apply_ads(a, x, h, all), y) + a.multiply(x, apply_ads(a, y, h, all));
                for (const auto& bp : oracle::ordered_bipartitions(n))
                    rhs = rhs + a.multiply(apply_ads(a, x, h, bp.alpha), apply_ads(a, y, h, bp.beta));
                EXPECT_EQ(apply_ads(a, a.multiply(x, y), h, all), rhs);
            }
        }
    }
}

void check_centralizer_splits(const Algebra& a, const Subspace& ideal, const Subspace& sub, std::mt19937_64& rng) {
    ASSERT_TRUE(is_two_sided_ideal(a, ideal));
    ASSERT_TRUE(is_multiplication_closed(a, sub));
    ASSERT_EQ(intersect(ideal, sub).dim(), 0u);
    ASSERT_EQ((ideal + sub).dim(), a.dim());
    for (int t = 0; t < 10; ++t) {
        std::vector<Element> xs;
        for (std::size_t k = 0, m = 1 + rng() % 2; k < m; ++k) {
            Vector c(sub.dim(), Scalar::zero(a.field()));
            for (auto& s : c) s = testing::random_scalar(a.field(), rng);
            xs.push_back(sub.combine(c));
        }
        const Subspace c = centralizer(a, span(a, xs));
        EXPECT_EQ(c, intersect(c, ideal) + intersect(c, sub));
    }
}

TEST(Properties, CentralizerSplitsOverIdealPlusSubalgebra) {
    std::mt19937_64 rng(41);
    const Algebra ut = upper_triangular(GF3, 3);
    std::vector<Element> diag;
    for (std::size_t i = 0; i < ut.dim(); ++i) {
        const Element e = ut.basis(i);
        if (ut.multiply(e, e) == e) diag.push_back(e);
    }
    check_centralizer_splits(ut, radical(ut), span(ut, diag), rng);
    const Algebra kg = group_algebra(GF3, dihedral(6));
    const auto d = radical_decomposition(kg, subgroup_algebra_candidates(kg, dihedral(6)));
    check_centralizer_splits(kg, d.radical, d.complement, rng);
}

TEST(Properties, TensorWithCommutativeKeepsClass) {
    for (const FieldSpec& f : {Q, GF3}) {
        const Algebra a = unitriangular_span(f);
        const auto base = lower_central_series(a);
        ASSERT_TRUE(base.nilpotent);
        for (const Algebra& b : {truncated_polynomial(f, 3), split_product(f, 2)}) {
            const auto s = lower_central_series(tensor_product(a, b));
            EXPECT_TRUE(s.nilpotent);
            EXPECT_EQ(s.nilpotency_class, base.nilpotency_class);
        }
    }
    const Algebra d8 = group_algebra(GF2, dihedral(4));
    const auto base = lower_central_series(d8);
    ASSERT_TRUE(base.nilpotent);
    const auto s = lower_central_series(tensor_product(d8, group_algebra(GF2, cyclic(2))));
    EXPECT_TRUE(s.nilpotent);
    EXPECT_EQ(s.nilpotency_class, base.nilpotency_class);
}

TEST(Ideals, GeneratedIdealAndPowers) {
    const Algebra ut = upper_triangular(Q, 3);
    const Subspace rad = radical(ut);
    const auto chain = ideal_power_chain(ut, rad);
    ASSERT_EQ(chain.size(), 3u);
    EXPECT_EQ(chain[0].dim(), 3u);
    EXPECT_EQ(chain[1].dim(), 1u);
    EXPECT_EQ(chain[2].dim(), 0u);
    EXPECT_TRUE(is_two_sided_ideal(ut, generated_ideal(ut, rad.vector(0))));
}

}  // namespace
}  // namespace cartan
