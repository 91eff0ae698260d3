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

#include "test_support.hpp"

namespace cartan {
namespace {

const FieldSpec Q = FieldSpec::rationals();
const FieldSpec GF2 = FieldSpec::prime(2);
const FieldSpec GF3 = FieldSpec::prime(3);

std::size_t brute_unit_count(const Algebra& a) {
    std::size_t n = 0;
    for (std::uint64_t i = 0; i < element_count(a); ++i) {
        const Element x = element_at(a, i);
        bool unit = false;
        for (std::uint64_t j = 0; j < element_count(a) && !unit; ++j)
            unit = a.multiply(x, element_at(a, j)) == a.one();
        n += unit;
    }
    return n;
}

TEST(UnitGroupTest, PrimeField) {
    const UnitGroup u = unit_group(matrix_algebra(GF3, 1));
    EXPECT_EQ(u.group.order(), 2u);
}

TEST(UnitGroupTest, DualNumbersGF2) {
    const Algebra d = dual_numbers(GF2);
    const UnitGroup u = unit_group(d);
    ASSERT_EQ(u.group.order(), 2u);
    EXPECT_EQ(u.embedding[0], d.one());
    EXPECT_EQ(u.embedding[1], d.one() + d.basis(1));
}

TEST(UnitGroupTest, DualNumbersGF3) {
    EXPECT_EQ(unit_group(dual_numbers(GF3)).group.order(), 6u);
}

TEST(UnitGroupTest, GeneralLinear) {
    EXPECT_EQ(unit_group(matrix_algebra(GF3, 2)).group.order(), 48u);
    EXPECT_EQ(unit_group(matrix_algebra(GF2, 2)).group.order(), 6u);
}

TEST(UnitGroupTest, TableIsRestrictedMultiplication) {
    const Algebra a = upper_triangular(GF3, 2);
    const UnitGroup u = unit_group(a);
    EXPECT_EQ(u.group.order(), brute_unit_count(a));
    for (std::size_t i = 0; i < u.group.order(); ++i)
        for (std::size_t j = 0; j < u.group.order(); ++j)
            EXPECT_EQ(u.embedding[u.group.multiply(i, j)], a.multiply(u.embedding[i], u.embedding[j]));
}

TEST(UnitGroupTest, CountsAgreeWithBruteForce) {
    for (const FieldSpec& f : {GF2, GF3})
        for (const Algebra& a : testing::random_algebra_family(f, 10, 1, 4, 900 + f.characteristic()))
            EXPECT_EQ(unit_group(a).group.order(), brute_unit_count(a));
}

TEST(UnitGroupTest, Errors) {
    try {
        (void)unit_group(dual_numbers(Q));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::NotFiniteField);
    }
    try {
        (void)unit_group(group_algebra(GF3, dihedral(6)));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::EnumerationTooLarge);
    }
}

TEST(GroupNilpotencyTest, Examples) {
    const auto c = group_nilpotency(cyclic(6));
    EXPECT_TRUE(c.nilpotent);
    EXPECT_EQ(c.nilpotency_class, 1u);
    const auto s3 = group_nilpotency(dihedral(3));
    EXPECT_FALSE(s3.nilpotent);
    EXPECT_EQ(s3.series.back(), generated_subgroup(dihedral(3), {1}));
    const auto d8 = group_nilpotency(dihedral(4));
    EXPECT_TRUE(d8.nilpotent);
    EXPECT_EQ(d8.nilpotency_class, 2u);
    EXPECT_EQ(group_nilpotency(cyclic(1)).nilpotency_class, 0u);
}

TEST(Decomposition, DualNumbersGF3) {
    const auto r = units_decomposition_check(dual_numbers(GF3));
    EXPECT_EQ(r.one_plus_radical_order, 3u);
    EXPECT_EQ(r.complement_units_order, 2u);
    EXPECT_EQ(r.units_order, 6u);
    EXPECT_TRUE(r.complement_units_central);
    EXPECT_TRUE(r.holds());
}

TEST(Decomposition, SplitSemisimple) {
    const auto r = units_decomposition_check(split_product(GF3, 2));
    EXPECT_EQ(r.one_plus_radical_order, 1u);
    EXPECT_EQ(r.complement_units_order, r.units_order);
    EXPECT_TRUE(r.holds());
}

TEST(Decomposition, GeneralLinearNotNilpotent) {
    const auto r = units_decomposition_check(matrix_algebra(GF3, 2));
    EXPECT_EQ(r.units_order, 48u);
    EXPECT_FALSE(r.units_nilpotent);
    EXPECT_FALSE(r.holds());
}

std::vector<Algebra> sweep_pool(const FieldSpec& f, std::size_t count, std::uint64_t seed) {
    std::vector<Algebra> pool = testing::random_algebra_family(f, count, 1, 7, seed);
    pool.push_back(dual_numbers(f));
    pool.push_back(truncated_polynomial(f, 3));
    pool.push_back(upper_triangular(f, 2));
    pool.push_back(matrix_algebra(f, 2));
    pool.push_back(group_algebra(f, dihedral(3)));
    pool.push_back(group_algebra(f, cyclic(4)));
    pool.push_back(tensor_product(dual_numbers(f), dual_numbers(f)));
    return pool;
}

TEST(Properties, UnitsNilpotentIffCentralComplementIffLieNilpotent) {
    std::size_t checked = 0, nilpotent = 0;
    for (const Algebra& a : sweep_pool(GF3, 30, 1000)) {
        if (element_count(a, std::uint64_t{1} << 20) > (std::uint64_t{1} << 12)) continue;
        const bool units = group_nilpotency(unit_group(a).group).nilpotent;
        const bool central = center(a).contains(radical_complement(a));
        const bool lie = lower_central_series(a).nilpotent;
        EXPECT_EQ(units, central);
        EXPECT_EQ(central, lie);
        ++checked;
        nilpotent += lie;
    }
    EXPECT_GE(checked, 30u);
    EXPECT_GT(nilpotent, 5u);
    EXPECT_GT(checked - nilpotent, 5u);
}

TEST(Properties, NilpotentUnitsImplySoluble) {
    for (const FieldSpec& f : {GF2, GF3})
        for (const Algebra& a : sweep_pool(f, 20, 1100 + f.characteristic())) {
            if (element_count(a, std::uint64_t{1} << 20) > (std::uint64_t{1} << 12)) continue;
            if (group_nilpotency(unit_group(a).group).nilpotent) {
                EXPECT_TRUE(is_soluble(a));
            }
        }
}

TEST(Properties, OnePlusRadicalIsSubgroup) {
    for (const FieldSpec& f : {GF2, GF3})
        for (const Algebra& a : sweep_pool(f, 15, 1200 + f.characteristic())) {
            if (element_count(a, std::uint64_t{1} << 20) > (std::uint64_t{1} << 12)) continue;
            const UnitGroup u = unit_group(a);
            const Subspace rad = radical(a);
            std::vector<std::size_t> s;
            for (std::size_t i = 0; i < u.embedding.size(); ++i)
                if (rad.contains(u.embedding[i] - a.one())) s.push_back(i);
            EXPECT_TRUE(is_subgroup(u.group, s));
            std::size_t expected = 1;
            for (std::size_t i = 0; i < rad.dim(); ++i) expected *= f.characteristic();
            EXPECT_EQ(s.size(), expected);
        }
}

TEST(Properties, GeneralLinearOverTwoElements) {
    const Algebra m = matrix_algebra(GF2, 2);
    const UnitGroup u = unit_group(m);
    ASSERT_EQ(u.group.order(), 6u);
    EXPECT_FALSE(u.group.is_abelian());
    EXPECT_FALSE(group_nilpotency(u.group).nilpotent);
    // Soluble as a group: the derived series reaches 1.
    const auto d1 = derived_subgroup(u.group);
    EXPECT_EQ(d1.size(), 3u);
    EXPECT_EQ(commutator_subgroup(u.group, d1, d1).size(), 1u);
    EXPECT_FALSE(lower_central_series(m).nilpotent);
}

}  // namespace
}  // namespace cartan
