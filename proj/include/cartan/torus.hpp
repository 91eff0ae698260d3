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

#ifndef CARTAN_TORUS_HPP
#define CARTAN_TORUS_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "enumerate.hpp"
#include "radical.hpp"

namespace cartan {

/// Squarefree minimal polynomial.
inline bool is_separable_element(const Algebra& a, const Element& x) { return is_squarefree(minimal_polynomial(a, x)); }

/// Nondegenerate trace form (x, y) -> Tr(L_{xy}).
inline bool has_nondegenerate_trace_form(const Algebra& a) {
    const Vector t = detail::left_traces(a);
    Matrix gram(a.field(), a.dim(), a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j)
            for (const auto& term : a.basis_product_terms(i, j)) gram(i, j) += term.coeff * t[term.index];
    return rank(std::move(gram)) == a.dim();
}

/// Commutative unital subalgebra whose elements are all separable; the last
/// condition is tested as nondegeneracy of the trace form of T on its own.
inline bool is_torus(const Algebra& a, const Subspace& t) {
    a.check(t);
    if (!contains_one(a, t) || !is_multiplication_closed(a, t) || !is_commutative_subspace(a, t)) return false;
    return has_nondegenerate_trace_form(restrict_to_subalgebra(a, t));
}

struct CartanOptions {
    std::uint64_t seed = 0;
    /// Complements tried before lifting (e.g. group algebras of a complement subgroup).
    std::vector<Subspace> preferred_complements;
    /// Torus to grow from instead of span{1}; must lie in the chosen complement.
    std::optional<Subspace> start_torus;
};

struct TorusCertificate {
    Subspace torus;
    Subspace radical;
    Subspace complement;
    /// Set when C_C(T) = T was confirmed for the complement C.
    std::optional<Subspace> self_centralizing_in;
};

namespace detail {

inline Scalar random_scalar(const FieldSpec& f, std::mt19937_64& rng) {
    if (f.is_finite()) {
        std::uniform_int_distribution<std::uint64_t> d(0, f.characteristic() - 1);
        return Scalar::from_int(f, static_cast<long long>(d(rng)));
    }
    std::uniform_int_distribution<int> d(-3, 3);
    return Scalar::from_int(f, d(rng));
}

inline constexpr std::size_t kRandomProbes = 256;

// A separable element of `space` outside `torus`: basis vectors first, then
// pairwise sums, then seeded random combinations.
inline std::optional<Element> find_separable_outside(const Algebra& a, const Subspace& space, const Subspace& torus,
                                                     std::mt19937_64& rng) {
    auto good = [&](const Element& x) { return !torus.contains(x) && is_separable_element(a, x); };
    const auto basis = space.vectors();
    for (const auto& v : basis)
        if (good(v)) return v;
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = i + 1; j < basis.size(); ++j) {
            Element s = basis[i] + basis[j];
            if (good(s)) return s;
        }
    Vector coeffs = zero_vector(a.field(), space.dim());
    for (std::size_t k = 0; k < kRandomProbes; ++k) {
        for (auto& c : coeffs) c = random_scalar(a.field(), rng);
        Element x = space.combine(coeffs);
        if (good(x)) return x;
    }
    return std::nullopt;
}

}  // namespace detail

/// Greedy maximal torus inside a radical complement C: starting from span{1}
/// (or the given start), adjoin separable elements of C_C(T) not in T until
/// none is found.
inline TorusCertificate maximal_torus(const Algebra& a, const CartanOptions& opts = {}) {
    TorusCertificate cert;
    cert.radical = radical(a);
    cert.complement = radical_complement(a, cert.radical, opts.preferred_complements);
    Subspace t = span_of(a, {a.one()});
    if (opts.start_torus) {
        if (!is_torus(a, *opts.start_torus)) throw Error(Errc::NotTorus, "starting subspace is not a torus");
        if (!cert.complement.contains(*opts.start_torus))
            throw Error(Errc::NotTorus, "starting torus is not inside the radical complement");
        t = *opts.start_torus;
    }
    std::mt19937_64 rng(opts.seed);
    for (;;) {
        const Subspace inside = intersect(centralizer(a, t), cert.complement);
        if (inside == t) {
            cert.self_centralizing_in = cert.complement;
            break;
        }
        const auto x = detail::find_separable_outside(a, inside, t, rng);
        if (!x) break;
        std::vector<Element> gens = t.vectors();
        gens.push_back(*x);
        t = associative_closure(a, gens, true);
    }
    cert.torus = std::move(t);
    return cert;
}

inline TorusCertificate maximal_torus(const Algebra& a, std::uint64_t seed) {
    CartanOptions o;
    o.seed = seed;
    return maximal_torus(a, o);
}

struct CartanVerification {
    bool lie_closed = false;
    bool lie_nilpotent = false;
    bool self_normalizing = false;
    bool multiplication_closed = false;
    bool contains_one = false;
    std::size_t nilpotency_class = 0;

    bool ok() const noexcept { return lie_closed && lie_nilpotent && self_normalizing; }
};

/// Direct check of the Cartan property: a nilpotent Lie subalgebra equal to
/// its own normalizer. Also reports the associative facts that must follow.
inline CartanVerification verify_cartan(const Algebra& a, const Subspace& c) {
    a.check(c);
    CartanVerification v;
    v.multiplication_closed = is_multiplication_closed(a, c);
    v.contains_one = contains_one(a, c);
    v.lie_closed = is_lie_closed(a, c);
    if (!v.lie_closed) return v;
    const auto lcs = lower_central_series(a, c);
    v.lie_nilpotent = lcs.nilpotent;
    v.nilpotency_class = lcs.nilpotency_class;
    v.self_normalizing = lie_normalizer(a, c) == c;
    return v;
}

struct CartanCertificate {
    Subspace cartan;
    TorusCertificate torus;
    std::size_t nilpotency_class = 0;
    Subspace radical_part;  // C_{rad(A)}(T)
    bool splits_over_torus = false;  // cartan = C_rad(T) ⊕ T
    CartanVerification verification;
};

/// C_A(T) for a maximal torus T of a radical complement.
inline CartanCertificate cartan_subalgebra(const Algebra& a, const CartanOptions& opts = {}) {
    CartanCertificate cert;
    cert.torus = maximal_torus(a, opts);
    const Subspace& t = cert.torus.torus;
    cert.cartan = centralizer(a, t);
    cert.radical_part = intersect(cert.cartan, cert.torus.radical);
    cert.splits_over_torus =
        intersect(cert.radical_part, t).dim() == 0 && cert.radical_part + t == cert.cartan;
    cert.verification = verify_cartan(a, cert.cartan);
    cert.nilpotency_class = cert.verification.nilpotency_class;
    if (!cert.splits_over_torus || !cert.verification.ok() || !cert.verification.multiplication_closed ||
        !cert.verification.contains_one)
        throw Error(Errc::VerificationFailed, "computed centralizer failed the Cartan checks");
    return cert;
}

inline CartanCertificate cartan_subalgebra(const Algebra& a, std::uint64_t seed) {
    CartanOptions o;
    o.seed = seed;
    return cartan_subalgebra(a, o);
}

/// Index of a central simple algebra, read off as the Cartan dimension.
inline std::size_t index_of_central_simple(const Algebra& a, std::uint64_t seed = 0) {
    if (radical(a).dim() != 0) throw Error(Errc::NotCentralSimple, "algebra has a nonzero radical");
    if (center(a) != span_of(a, {a.one()})) throw Error(Errc::NotCentralSimple, "center is larger than the scalars");
    const Subspace all = Subspace::full(a.field(), a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i)
        if (generated_ideal(a, a.basis(i)) != all) throw Error(Errc::NotCentralSimple, "proper two-sided ideal found");
    return cartan_subalgebra(a, seed).cartan.dim();
}

/// rad(A) ⊕ T.
inline Subspace soluble_hull(const Algebra& a, const Subspace& torus, const Subspace& rad) {
    if (!is_torus(a, torus)) throw Error(Errc::NotTorus, "soluble hull needs a torus");
    Subspace s = rad + torus;
    if (!is_multiplication_closed(a, s)) throw Error(Errc::VerificationFailed, "rad(A) + T is not a subalgebra");
    return s;
}

inline Subspace soluble_hull(const Algebra& a, const TorusCertificate& t) { return soluble_hull(a, t.torus, t.radical); }

struct NilpotencyReport {
    bool lie_nilpotent = false;             // (i)
    bool central_complement = false;        // (ii)
    bool soluble_unique_complement = false; // (iii)
    std::optional<bool> separables_form_complement;  // (iv), finite fields only
    std::optional<bool> separables_form_subspace;    // (v), finite fields only
    std::string skipped;                    // why (iv)/(v) were not evaluated
    std::size_t lie_class = 0;

    /// All computed verdicts coincide.
    bool consistent() const {
        const bool v = lie_nilpotent;
        if (central_complement != v || soluble_unique_complement != v) return false;
        if (separables_form_complement && *separables_form_complement != v) return false;
        if (separables_form_subspace && *separables_form_subspace != v) return false;
        return true;
    }
};

inline constexpr std::size_t kConjugationProbes = 32;

/// Every probed conjugate (1+r)^{-1} C (1+r), r in rad, equals C.
inline bool complement_is_conjugation_stable(const Algebra& a, const RadicalDecomposition& d, std::uint64_t seed) {
    const auto rb = d.radical.vectors();
    auto stable = [&](const Element& r) { return conjugate_subalgebra(a, d.complement, r, d.radical) == d.complement; };
    for (const auto& r : rb)
        if (!stable(r)) return false;
    for (std::size_t i = 0; i < rb.size(); ++i)
        for (std::size_t j = i + 1; j < rb.size(); ++j)
            if (!stable(rb[i] + rb[j])) return false;
    if (d.radical.dim() == 0) return true;
    std::mt19937_64 rng(seed);
    Vector coeffs = zero_vector(a.field(), d.radical.dim());
    for (std::size_t k = 0; k < kConjugationProbes; ++k) {
        for (auto& c : coeffs) c = detail::random_scalar(a.field(), rng);
        if (!stable(d.radical.combine(coeffs))) return false;
    }
    return true;
}

/// The five equivalent Lie-nilpotency conditions, evaluated independently.
inline NilpotencyReport lie_nilpotency_report(const Algebra& a, const CartanOptions& opts = {},
                                              std::uint64_t bound = kEnumerationBound) {
    NilpotencyReport r;
    const auto lcs = lower_central_series(a);
    r.lie_nilpotent = lcs.nilpotent;
    r.lie_class = lcs.nilpotency_class;
    const RadicalDecomposition d = radical_decomposition(a, opts.preferred_complements);
    const Subspace z = center(a);
    r.central_complement = z.contains(d.complement);
    const bool soluble = is_soluble(a, d.radical);
    r.soluble_unique_complement = soluble && complement_is_conjugation_stable(a, d, opts.seed);
    if (!a.field().is_finite()) {
        r.skipped = "infinite base field";
        return r;
    }
    std::uint64_t total = 0;
    try {
        total = element_count(a, bound);
    } catch (const Error& e) {
        r.skipped = e.what();
        return r;
    }
    Subspace span = Subspace::zero(a.field(), a.dim());
    std::uint64_t count = 0;
    for (std::uint64_t i = 0; i < total; ++i) {
        const Element x = element_at(a, i);
        if (!is_separable_element(a, x)) continue;
        ++count;
        if (!span.contains(x)) span = span + Subspace::span(a.field(), a.dim(), {x});
    }
    std::uint64_t span_size = 1;
    for (std::size_t i = 0; i < span.dim(); ++i) span_size *= a.field().characteristic();
    const bool subspace = span_size == count;
    r.separables_form_subspace = soluble && subspace;
    r.separables_form_complement = soluble && subspace && is_valid_decomposition(a, {d.radical, span});
    return r;
}

}  // namespace cartan

#endif
