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

#ifndef CARTAN_RADICAL_HPP
#define CARTAN_RADICAL_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "polynomial.hpp"

namespace cartan {

namespace detail {

// Trace of left multiplication by each basis vector; x -> Tr(L_x) is linear.
inline Vector left_traces(const Algebra& a) {
    Vector t = zero_vector(a.field(), a.dim());
    for (std::size_t k = 0; k < a.dim(); ++k)
        for (std::size_t j = 0; j < a.dim(); ++j) t[k] += a.basis_product(k, j)[j];
    return t;
}

// Integer matrix power modulo m, entries in [0, m).
using IntMatrix = std::vector<std::vector<std::uint64_t>>;

inline IntMatrix int_mat_mul(const IntMatrix& x, const IntMatrix& y, std::uint64_t m) {
    const std::size_t n = x.size();
    IntMatrix z(n, std::vector<std::uint64_t>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            if (x[i][k] == 0) continue;
            for (std::size_t j = 0; j < n; ++j) z[i][j] = (z[i][j] + x[i][k] * y[k][j]) % m;
        }
    return z;
}

// g_i(z) = (Tr(Z^{p^i}) mod p^{i+1}) / p^i with Z an integer lift of L_z.
inline Scalar lifted_power_trace(const Algebra& a, const Element& z, std::size_t i) {
    const std::uint64_t p = a.field().characteristic();
    std::uint64_t pi = 1;
    for (std::size_t k = 0; k < i; ++k) pi *= p;
    const std::uint64_t mod = pi * p;
    const Matrix lz = a.left_multiplication(z);
    const std::size_t n = a.dim();
    IntMatrix base(n, std::vector<std::uint64_t>(n));
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) base[r][c] = lz(r, c).residue();
    IntMatrix acc(n, std::vector<std::uint64_t>(n, 0));
    for (std::size_t r = 0; r < n; ++r) acc[r][r] = 1 % mod;
    for (std::uint64_t e = pi; e; e >>= 1) {
        if (e & 1) acc = int_mat_mul(acc, base, mod);
        if (e > 1) base = int_mat_mul(base, base, mod);
    }
    std::uint64_t tr = 0;
    for (std::size_t r = 0; r < n; ++r) tr = (tr + acc[r][r]) % mod;
    if (tr % pi != 0) throw Error(Errc::VerificationFailed, "p-power trace not divisible by p^i");
    return Scalar::from_int(a.field(), static_cast<long long>(tr / pi));
}

inline Subspace radical_char0(const Algebra& a) {
    const Vector t = left_traces(a);
    Matrix gram(a.field(), a.dim(), a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j)
            for (const auto& term : a.basis_product_terms(i, j)) gram(i, j) += term.coeff * t[term.index];
    return Subspace(nullspace(std::move(gram)));
}

// Descent I_{-1} = A, I_i = { x in I_{i-1} : g_i(x y) = 0 for all y }, for
// i = 0 .. floor(log_p dim); the last term is the radical.
inline Subspace radical_charp(const Algebra& a) {
    const std::uint64_t p = a.field().characteristic();
    std::size_t levels = 0;
    for (std::uint64_t q = p; q <= a.dim(); q *= p) ++levels;
    Subspace current = Subspace::full(a.field(), a.dim());
    const Vector t = left_traces(a);
    for (std::size_t i = 0; i <= levels && current.dim() > 0; ++i) {
        Matrix sys(a.field(), a.dim(), current.dim());
        for (std::size_t k = 0; k < current.dim(); ++k) {
            const Element bk = current.vector(k);
            for (std::size_t j = 0; j < a.dim(); ++j) {
                const Element z = a.multiply(bk, a.basis(j));
                if (i == 0) {
                    Scalar s = Scalar::zero(a.field());
                    for (std::size_t c = 0; c < a.dim(); ++c)
                        if (!z[c].is_zero()) s += z[c] * t[c];
                    sys(j, k) = s;
                } else {
                    sys(j, k) = lifted_power_trace(a, z, i);
                }
            }
        }
        const Matrix ker = nullspace(std::move(sys));
        Matrix gens(a.field(), 0, a.dim());
        for (std::size_t r = 0; r < ker.rows(); ++r) gens.append_row(current.combine(ker.row(r)));
        current = Subspace(std::move(gens));
    }
    return current;
}

}  // namespace detail

/// Jacobson radical (the largest nilpotent two-sided ideal). The result is
/// checked to be a nilpotent ideal before it is returned.
inline Subspace radical(const Algebra& a) {
    Subspace r = a.field().is_finite() ? detail::radical_charp(a) : detail::radical_char0(a);
    if (!is_two_sided_ideal(a, r) || !is_nilpotent_subspace(a, r))
        throw Error(Errc::VerificationFailed, "computed radical is not a nilpotent ideal");
    return r;
}

/// Minimal polynomial is t^k.
inline bool is_nilpotent_element(const Algebra& a, const Element& x) {
    const Polynomial m = minimal_polynomial(a, x);
    for (long i = 0; i < m.degree(); ++i)
        if (!m.coeff(static_cast<std::size_t>(i)).is_zero()) return false;
    return true;
}

struct RadicalDecomposition {
    Subspace radical;
    Subspace complement;
};

/// Checks rad ∩ C = 0, rad + C = A, C a unital subalgebra, rad a nilpotent ideal.
inline bool is_valid_decomposition(const Algebra& a, const RadicalDecomposition& d) {
    return d.radical.dim() + d.complement.dim() == a.dim() && intersect(d.radical, d.complement).dim() == 0 &&
           contains_one(a, d.complement) && is_multiplication_closed(a, d.complement) &&
           is_two_sided_ideal(a, d.radical) && is_nilpotent_subspace(a, d.radical);
}

namespace detail {

// Lift a linear section of A -> A/rad to an algebra section, one layer of
// the chain rad ⊇ rad^2 ⊇ ... at a time.
inline Subspace lift_complement(const Algebra& a, const Subspace& rad) {
    const FieldSpec& f = a.field();
    const Quotient q = quotient(a, rad);
    const std::size_t m = q.lift_columns.size();
    std::vector<Element> sigma;
    for (auto c : q.lift_columns) sigma.push_back(a.basis(c));

    auto defect = [&](std::size_t i, std::size_t j) {
        Element d = a.multiply(sigma[i], sigma[j]);
        for (const auto& t : q.algebra.basis_product_terms(i, j)) axpy(d, -t.coeff, sigma[t.index]);
        return d;
    };

    const auto chain = ideal_power_chain(a, rad);
    for (std::size_t level = 0; level + 1 < chain.size(); ++level) {
        const Subspace& upper = chain[level];
        const Subspace& lower = chain[level + 1];
        std::vector<Element> defects(m * m);
        bool clean = true;
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j) {
                defects[i * m + j] = defect(i, j);
                if (!upper.contains(defects[i * m + j]))
                    throw Error(Errc::VerificationFailed, "multiplicativity defect escaped the radical layer");
                if (!lower.contains(defects[i * m + j])) clean = false;
            }
        if (clean) continue;

        // Canonical complement W of `lower` inside `upper`; coordinates of
        // v in upper modulo lower are read off W's pivots after reduction.
        Matrix wgens(f, 0, a.dim());
        for (std::size_t r = 0; r < upper.dim(); ++r) wgens.append_row(lower.reduce(upper.vector(r)));
        const Subspace w(std::move(wgens));
        const std::size_t d = w.dim();
        auto coords = [&](const Element& v) { return w.coordinates(lower.reduce(v)); };

        std::vector<std::vector<Vector>> left(m, std::vector<Vector>(d)), right(m, std::vector<Vector>(d));
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t t = 0; t < d; ++t) {
                left[i][t] = coords(a.multiply(sigma[i], w.vector(t)));
                right[i][t] = coords(a.multiply(w.vector(t), sigma[i]));
            }

        // Unknown correction tau_i = sum_t x[i*d + t] w_t with
        // sigma_i tau_j + tau_i sigma_j - sum_k c_ij^k tau_k = -defect_ij (mod lower).
        Matrix sys(f, m * m * d, m * d);
        Vector rhs = zero_vector(f, m * m * d);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j) {
                const Vector dc = coords(defects[i * m + j]);
                for (std::size_t s = 0; s < d; ++s) {
                    const std::size_t row = (i * m + j) * d + s;
                    rhs[row] = -dc[s];
                    for (std::size_t t = 0; t < d; ++t) {
                        sys(row, j * d + t) += left[i][t][s];
                        sys(row, i * d + t) += right[j][t][s];
                    }
                    for (const auto& term : q.algebra.basis_product_terms(i, j)) sys(row, term.index * d + s) -= term.coeff;
                }
            }
        const auto x = solve(sys, rhs);
        if (!x) throw Error(Errc::VerificationFailed, "no multiplicative lift at a radical layer");
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t t = 0; t < d; ++t) axpy(sigma[i], (*x)[i * d + t], w.basis().row(t));
    }
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            if (!is_zero(defect(i, j))) throw Error(Errc::VerificationFailed, "lifted section is not multiplicative");
    return span_of(a, sigma);
}

}  // namespace detail

/// A unital subalgebra C with C ⊕ rad(A) = A. The first entry of `preferred`
/// that is such a complement is returned unchanged; otherwise the lifted one.
inline Subspace radical_complement(const Algebra& a, const Subspace& rad, const std::vector<Subspace>& preferred = {}) {
    for (const auto& c : preferred) {
        a.check(c);
        if (is_valid_decomposition(a, {rad, c})) return c;
    }
    if (rad.dim() == 0) return Subspace::full(a.field(), a.dim());
    Subspace c = detail::lift_complement(a, rad);
    if (!is_valid_decomposition(a, {rad, c})) throw Error(Errc::VerificationFailed, "lifted complement is invalid");
    return c;
}

inline Subspace radical_complement(const Algebra& a, const std::vector<Subspace>& preferred = {}) {
    return radical_complement(a, radical(a), preferred);
}

inline RadicalDecomposition radical_decomposition(const Algebra& a, const std::vector<Subspace>& preferred = {}) {
    Subspace r = radical(a);
    Subspace c = radical_complement(a, r, preferred);
    return {std::move(r), std::move(c)};
}

/// A/rad(A) is commutative.
inline bool is_soluble(const Algebra& a, const Subspace& rad) { return quotient(a, rad).algebra.is_commutative(); }
inline bool is_soluble(const Algebra& a) { return is_soluble(a, radical(a)); }

enum class Reducedness { reduced, not_reduced, undetermined };

inline std::string to_string(Reducedness r) {
    switch (r) {
        case Reducedness::reduced: return "reduced";
        case Reducedness::not_reduced: return "not_reduced";
        case Reducedness::undetermined: return "undetermined";
    }
    return "undetermined";
}

/// Over GF(p) every finite division ring is a field, so A is reduced exactly
/// when A/rad(A) is commutative. Over Q a noncommutative quotient may still
/// be a product of division algebras, which is not decided here.
inline Reducedness is_reduced(const Algebra& a) {
    if (is_soluble(a)) return Reducedness::reduced;
    return a.field().is_finite() ? Reducedness::not_reduced : Reducedness::undetermined;
}

/// (1 + r)^{-1} for r nilpotent, as the finite geometric series.
inline Element unipotent_inverse(const Algebra& a, const Element& r) {
    Element sum = a.one();
    Element term = a.one();
    const Element minus_r = -r;
    for (std::size_t k = 0; k <= a.dim(); ++k) {
        term = a.multiply(term, minus_r);
        if (is_zero(term)) return sum;
        sum = sum + term;
    }
    throw Error(Errc::NotInRadical, "element is not nilpotent");
}

/// (1+r)^{-1} S (1+r) for r in rad.
inline Subspace conjugate_subalgebra(const Algebra& a, const Subspace& s, const Element& r, const Subspace& rad) {
    a.check(s);
    a.check(r);
    if (!rad.contains(r)) throw Error(Errc::NotInRadical, "conjugating element must lie in the radical");
    const Element u = a.one() + r;
    const Element uinv = unipotent_inverse(a, r);
    Matrix gens(a.field(), 0, a.dim());
    for (std::size_t i = 0; i < s.dim(); ++i) gens.append_row(a.multiply(a.multiply(uinv, s.vector(i)), u));
    return Subspace(std::move(gens));
}

inline Subspace conjugate_subalgebra(const Algebra& a, const Subspace& s, const Element& r) {
    return conjugate_subalgebra(a, s, r, radical(a));
}

}  // namespace cartan

#endif
