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

#ifndef CARTAN_ALGEBRA_HPP
#define CARTAN_ALGEBRA_HPP

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "linalg.hpp"

namespace cartan {

/// Coordinates of an algebra element in the ambient basis.
using Element = Vector;

/// A finite-dimensional associative unital algebra given by structure
/// constants: e_i * e_j = sum_k table[i][j][k] e_k.
class Algebra {
  public:
    struct Term {
        std::size_t index;
        Scalar coeff;
    };

    Algebra() = default;

    /// `table` is indexed [i][j] -> coordinates of e_i e_j. Associativity and
    /// the identity are checked; failures raise ValidationError.
    Algebra(FieldSpec f, std::vector<std::vector<Vector>> table, Vector one, std::vector<std::string> names = {})
        : field_(f), dim_(table.size()), one_(std::move(one)), names_(std::move(names)) {
        if (one_.size() != dim_) throw Error(Errc::ValidationError, "identity has wrong length");
        if (names_.empty())
            for (std::size_t i = 0; i < dim_; ++i) names_.push_back("e" + std::to_string(i));
        if (names_.size() != dim_) throw Error(Errc::ValidationError, "basis name count differs from dimension");
        dense_.reserve(dim_ * dim_);
        sparse_.resize(dim_ * dim_);
        for (std::size_t i = 0; i < dim_; ++i) {
            if (table[i].size() != dim_) throw Error(Errc::ValidationError, "structure table is not square");
            for (std::size_t j = 0; j < dim_; ++j) {
                Vector& v = table[i][j];
                if (v.size() != dim_) throw Error(Errc::ValidationError, "structure table entry has wrong length");
                for (std::size_t k = 0; k < dim_; ++k) {
                    if (v[k].characteristic() != f.characteristic())
                        throw Error(Errc::FieldMismatch, "structure constant from another field");
                    if (!v[k].is_zero()) sparse_[i * dim_ + j].push_back({k, v[k]});
                }
                dense_.push_back(std::move(v));
            }
        }
        for (const auto& s : one_)
            if (s.characteristic() != f.characteristic()) throw Error(Errc::FieldMismatch, "identity from another field");
        validate();
    }

    const FieldSpec& field() const noexcept { return field_; }
    std::size_t dim() const noexcept { return dim_; }
    const Element& one() const noexcept { return one_; }
    const std::vector<std::string>& basis_names() const noexcept { return names_; }

    /// Coordinates of e_i e_j.
    const Vector& basis_product(std::size_t i, std::size_t j) const { return dense_[i * dim_ + j]; }
    const std::vector<Term>& basis_product_terms(std::size_t i, std::size_t j) const { return sparse_[i * dim_ + j]; }

    Element zero() const { return zero_vector(field_, dim_); }
    Element basis(std::size_t i) const { return unit_vector(field_, dim_, i); }
    Element scalar(const Scalar& c) const { return c * one_; }

    Element multiply(const Element& x, const Element& y) const {
        check(x);
        check(y);
        Element out = zero();
        for (std::size_t i = 0; i < dim_; ++i) {
            if (x[i].is_zero()) continue;
            for (std::size_t j = 0; j < dim_; ++j) {
                if (y[j].is_zero()) continue;
                const Scalar c = x[i] * y[j];
                for (const auto& t : sparse_[i * dim_ + j]) out[t.index] += c * t.coeff;
            }
        }
        return out;
    }

    Element power(const Element& x, std::size_t k) const {
        Element r = one_;
        for (std::size_t i = 0; i < k; ++i) r = multiply(r, x);
        return r;
    }

    /// Matrix of y -> x y (columns are images of basis vectors).
    Matrix left_multiplication(const Element& x) const {
        Matrix m(field_, dim_, dim_);
        for (std::size_t j = 0; j < dim_; ++j) m.set_column(j, multiply(x, basis(j)));
        return m;
    }

    /// Matrix of y -> y x.
    Matrix right_multiplication(const Element& x) const {
        Matrix m(field_, dim_, dim_);
        for (std::size_t j = 0; j < dim_; ++j) m.set_column(j, multiply(basis(j), x));
        return m;
    }

    bool is_commutative() const {
        for (std::size_t i = 0; i < dim_; ++i)
            for (std::size_t j = i + 1; j < dim_; ++j)
                if (basis_product(i, j) != basis_product(j, i)) return false;
        return true;
    }

    void check(const Element& x) const {
        if (x.size() != dim_) throw Error(Errc::DimensionMismatch, "element length " + std::to_string(x.size()) +
                                                                     " in algebra of dimension " + std::to_string(dim_));
    }

    void check(const Subspace& s) const {
        if (s.ambient_dim() != dim_ || (dim_ > 0 && s.field() != field_))
            throw Error(Errc::DimensionMismatch, "subspace does not live in this algebra");
    }

  private:
    void validate() const {
        for (std::size_t i = 0; i < dim_; ++i) {
            const Element ei = basis(i);
            if (multiply(one_, ei) != ei || multiply(ei, one_) != ei)
                throw Error(Errc::ValidationError, "identity coordinates do not act as 1 on " + names_[i]);
        }
        for (std::size_t i = 0; i < dim_; ++i)
            for (std::size_t j = 0; j < dim_; ++j)
                for (std::size_t k = 0; k < dim_; ++k) {
                    Element left = zero();
                    for (const auto& t : sparse_[i * dim_ + j])
                        for (const auto& u : sparse_[t.index * dim_ + k]) left[u.index] += t.coeff * u.coeff;
                    Element right = zero();
                    for (const auto& t : sparse_[j * dim_ + k])
                        for (const auto& u : sparse_[i * dim_ + t.index]) right[u.index] += t.coeff * u.coeff;
                    if (left != right)
                        throw Error(Errc::ValidationError, "structure constants are not associative at (" + names_[i] +
                                                               ", " + names_[j] + ", " + names_[k] + ")");
                }
    }

    FieldSpec field_ = FieldSpec::rationals();
    std::size_t dim_ = 0;
    Element one_;
    std::vector<std::string> names_;
    std::vector<Vector> dense_;
    std::vector<std::vector<Term>> sparse_;
};

/// A linear endomorphism of the algebra acting on coordinate columns.
struct LinearMap {
    Matrix matrix;

    Element operator()(const Element& x) const { return matrix.apply(x); }
};

inline Element multiply(const Algebra& a, const Element& x, const Element& y) { return a.multiply(x, y); }

/// x∘y = xy - yx
inline Element lie_bracket(const Algebra& a, const Element& x, const Element& y) {
    return a.multiply(x, y) - a.multiply(y, x);
}

/// ad(l) acting on the right: x -> x∘l.
inline LinearMap ad_matrix(const Algebra& a, const Element& l) {
    a.check(l);
    Matrix m(a.field(), a.dim(), a.dim());
    for (std::size_t j = 0; j < a.dim(); ++j) m.set_column(j, lie_bracket(a, a.basis(j), l));
    return {std::move(m)};
}

inline Subspace span_of(const Algebra& a, const std::vector<Element>& xs) { return Subspace::span(a.field(), a.dim(), xs); }

/// span{ x∘y : x in U, y in W }
inline Subspace bracket_span(const Algebra& a, const Subspace& u, const Subspace& w) {
    Matrix gens(a.field(), 0, a.dim());
    for (std::size_t i = 0; i < u.dim(); ++i)
        for (std::size_t j = 0; j < w.dim(); ++j) gens.append_row(lie_bracket(a, u.vector(i), w.vector(j)));
    return Subspace(std::move(gens));
}

/// span{ x y : x in U, y in W }
inline Subspace product_span(const Algebra& a, const Subspace& u, const Subspace& w) {
    Matrix gens(a.field(), 0, a.dim());
    for (std::size_t i = 0; i < u.dim(); ++i)
        for (std::size_t j = 0; j < w.dim(); ++j) gens.append_row(a.multiply(u.vector(i), w.vector(j)));
    return Subspace(std::move(gens));
}

inline bool is_lie_closed(const Algebra& a, const Subspace& s) { return s.contains(bracket_span(a, s, s)); }
inline bool is_multiplication_closed(const Algebra& a, const Subspace& s) { return s.contains(product_span(a, s, s)); }
inline bool contains_one(const Algebra& a, const Subspace& s) { return s.contains(a.one()); }

inline bool is_commutative_subspace(const Algebra& a, const Subspace& s) {
    for (std::size_t i = 0; i < s.dim(); ++i)
        for (std::size_t j = i + 1; j < s.dim(); ++j)
            if (!is_zero(lie_bracket(a, s.vector(i), s.vector(j)))) return false;
    return true;
}

/// C_A(S) = { x : x∘s = 0 for all s in S }
inline Subspace centralizer(const Algebra& a, const Subspace& s) {
    a.check(s);
    Matrix sys(a.field(), 0, a.dim());
    for (std::size_t i = 0; i < s.dim(); ++i) sys.append_rows(ad_matrix(a, s.vector(i)).matrix);
    return Subspace(nullspace(std::move(sys)));
}

inline Subspace center(const Algebra& a) { return centralizer(a, Subspace::full(a.field(), a.dim())); }

/// N_{A∘}(C) = { x : x∘c in C for all c in C }
inline Subspace lie_normalizer(const Algebra& a, const Subspace& c) {
    a.check(c);
    if (!is_lie_closed(a, c)) throw Error(Errc::NotLieClosed, "normalizer requires a Lie subalgebra");
    const Matrix ann = c.annihilator();
    Matrix sys(a.field(), 0, a.dim());
    for (std::size_t i = 0; i < c.dim(); ++i) sys.append_rows(ann * ad_matrix(a, c.vector(i)).matrix);
    return Subspace(nullspace(std::move(sys)));
}

struct LowerCentralSeries {
    std::vector<Subspace> terms;  // L, [L,L], [[L,L],L], ... up to the stable term
    bool nilpotent = false;
    std::size_t nilpotency_class = 0;  // least c with L^{c+1} = 0; meaningful only when nilpotent
};

/// Left-normed lower central series L^1 = L, L^{k+1} = L^k ∘ L.
inline LowerCentralSeries lower_central_series(const Algebra& a, const Subspace& l) {
    a.check(l);
    if (!is_lie_closed(a, l)) throw Error(Errc::NotLieClosed, "lower central series requires a Lie subalgebra");
    LowerCentralSeries out;
    out.terms.push_back(l);
    while (out.terms.back().dim() > 0) {
        Subspace next = bracket_span(a, out.terms.back(), l);
        if (next == out.terms.back()) break;
        out.terms.push_back(std::move(next));
    }
    out.nilpotent = out.terms.back().dim() == 0;
    out.nilpotency_class = out.nilpotent ? out.terms.size() - 1 : 0;
    return out;
}

inline LowerCentralSeries lower_central_series(const Algebra& a) {
    return lower_central_series(a, Subspace::full(a.field(), a.dim()));
}

/// Smallest multiplication-closed subspace containing `gens` (and 1 if asked).
inline Subspace associative_closure(const Algebra& a, const std::vector<Element>& gens, bool with_one) {
    Matrix m(a.field(), 0, a.dim());
    for (const auto& g : gens) {
        a.check(g);
        m.append_row(g);
    }
    if (with_one) m.append_row(a.one());
    Subspace s(std::move(m));
    for (;;) {
        Subspace next = s + product_span(a, s, s);
        if (next.dim() == s.dim()) return s;
        s = std::move(next);
    }
}

inline bool is_two_sided_ideal(const Algebra& a, const Subspace& i) {
    a.check(i);
    for (std::size_t k = 0; k < a.dim(); ++k) {
        const Element ek = a.basis(k);
        for (std::size_t r = 0; r < i.dim(); ++r) {
            const Element v = i.vector(r);
            if (!i.contains(a.multiply(ek, v)) || !i.contains(a.multiply(v, ek))) return false;
        }
    }
    return true;
}

/// Two-sided ideal generated by x.
inline Subspace generated_ideal(const Algebra& a, const Element& x) {
    Subspace s = span_of(a, {x});
    const Subspace all = Subspace::full(a.field(), a.dim());
    for (;;) {
        Subspace next = s + product_span(a, all, s) + product_span(a, s, all);
        if (next.dim() == s.dim()) return s;
        s = std::move(next);
    }
}

/// Powers I, I^2, I^3, ... until stable (the last entry is 0 iff I is nilpotent).
inline std::vector<Subspace> ideal_power_chain(const Algebra& a, const Subspace& i) {
    std::vector<Subspace> chain{i};
    while (chain.back().dim() > 0) {
        Subspace next = product_span(a, chain.back(), i);
        if (next == chain.back()) break;
        chain.push_back(std::move(next));
    }
    return chain;
}

inline bool is_nilpotent_subspace(const Algebra& a, const Subspace& i) { return ideal_power_chain(a, i).back().dim() == 0; }

/// A/I with its linear, multiplicative projection.
struct Quotient {
    Algebra algebra;
    Subspace ideal;
    std::vector<std::size_t> lift_columns;  // basis vector e_{lift_columns[k]} maps to the k-th quotient basis vector
    Matrix projection;                      // dim(A/I) x dim(A)

    Element project(const Element& x) const {
        const Element r = ideal.reduce(x);
        Element out;
        out.reserve(lift_columns.size());
        for (auto c : lift_columns) out.push_back(r[c]);
        return out;
    }

    Element lift(const Element& y) const {
        Element x = zero_vector(ideal.field(), ideal.ambient_dim());
        for (std::size_t k = 0; k < lift_columns.size(); ++k) x[lift_columns[k]] = y[k];
        return x;
    }
};

inline Quotient quotient(const Algebra& a, const Subspace& ideal) {
    a.check(ideal);
    if (!is_two_sided_ideal(a, ideal)) throw Error(Errc::NotIdeal, "quotient requires a two-sided ideal");
    Quotient q;
    q.ideal = ideal;
    q.lift_columns = ideal.free_columns();
    const std::size_t m = q.lift_columns.size();
    std::vector<std::vector<Vector>> table(m, std::vector<Vector>(m));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            table[i][j] = q.project(a.basis_product(q.lift_columns[i], q.lift_columns[j]));
    std::vector<std::string> names;
    for (auto c : q.lift_columns) names.push_back(a.basis_names()[c]);
    q.algebra = Algebra(a.field(), std::move(table), q.project(a.one()), std::move(names));
    q.projection = Matrix(a.field(), m, a.dim());
    for (std::size_t j = 0; j < a.dim(); ++j) q.projection.set_column(j, q.project(a.basis(j)));
    return q;
}

/// A × B on the concatenated basis.
inline Algebra direct_product(const Algebra& a, const Algebra& b) {
    if (a.field() != b.field()) throw Error(Errc::FieldMismatch, "direct product over different fields");
    const std::size_t n = a.dim() + b.dim();
    std::vector<std::vector<Vector>> table(n, std::vector<Vector>(n, zero_vector(a.field(), n)));
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j)
            for (std::size_t k = 0; k < a.dim(); ++k) table[i][j][k] = a.basis_product(i, j)[k];
    for (std::size_t i = 0; i < b.dim(); ++i)
        for (std::size_t j = 0; j < b.dim(); ++j)
            for (std::size_t k = 0; k < b.dim(); ++k) table[a.dim() + i][a.dim() + j][a.dim() + k] = b.basis_product(i, j)[k];
    Vector one = a.one();
    one.insert(one.end(), b.one().begin(), b.one().end());
    std::vector<std::string> names;
    for (const auto& s : a.basis_names()) names.push_back("(" + s + ";0)");
    for (const auto& s : b.basis_names()) names.push_back("(0;" + s + ")");
    return Algebra(a.field(), std::move(table), std::move(one), std::move(names));
}

/// A ⊗ B on the Kronecker basis e_i ⊗ f_j, index i * dim(B) + j.
inline Algebra tensor_product(const Algebra& a, const Algebra& b) {
    if (a.field() != b.field()) throw Error(Errc::FieldMismatch, "tensor product over different fields");
    const std::size_t m = b.dim(), n = a.dim() * b.dim();
    std::vector<std::vector<Vector>> table(n, std::vector<Vector>(n, zero_vector(a.field(), n)));
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t k = 0; k < a.dim(); ++k)
            for (const auto& ta : a.basis_product_terms(i, k))
                for (std::size_t j = 0; j < m; ++j)
                    for (std::size_t l = 0; l < m; ++l)
                        for (const auto& tb : b.basis_product_terms(j, l))
                            table[i * m + j][k * m + l][ta.index * m + tb.index] += ta.coeff * tb.coeff;
    Vector one = zero_vector(a.field(), n);
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < m; ++j) one[i * m + j] = a.one()[i] * b.one()[j];
    std::vector<std::string> names;
    for (const auto& s : a.basis_names())
        for (const auto& t : b.basis_names()) names.push_back(s + "⊗" + t);
    return Algebra(a.field(), std::move(table), std::move(one), std::move(names));
}

/// Embedding of A into A × B (first factor) or B (second factor) at the subspace level.
inline Subspace product_subspace(const Subspace& s, const Subspace& t) {
    const std::size_t n = s.ambient_dim() + t.ambient_dim();
    const FieldSpec f = s.dim() ? s.field() : t.field();
    Matrix m(f, 0, n);
    for (std::size_t i = 0; i < s.dim(); ++i) {
        Vector v = s.vector(i);
        v.resize(n, Scalar::zero(f));
        m.append_row(v);
    }
    for (std::size_t i = 0; i < t.dim(); ++i) {
        Vector v = zero_vector(f, s.ambient_dim());
        const Vector w = t.vector(i);
        v.insert(v.end(), w.begin(), w.end());
        m.append_row(v);
    }
    return Subspace(std::move(m));
}

/// A multiplication-closed subspace S (containing 1) as an algebra in its own
/// right, on the canonical basis of S.
inline Algebra restrict_to_subalgebra(const Algebra& a, const Subspace& s) {
    a.check(s);
    if (!is_multiplication_closed(a, s)) throw Error(Errc::ValidationError, "subspace is not multiplication-closed");
    if (!contains_one(a, s)) throw Error(Errc::NotUnital, "subalgebra does not contain 1");
    const std::size_t r = s.dim();
    std::vector<std::vector<Vector>> table(r, std::vector<Vector>(r));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) table[i][j] = s.coordinates(a.multiply(s.vector(i), s.vector(j)));
    return Algebra(a.field(), std::move(table), s.coordinates(a.one()));
}

/// Re-expresses a subspace T ⊆ S in the coordinates of S's canonical basis.
inline Subspace coordinates_in(const Subspace& s, const Subspace& t) {
    Matrix m(s.field(), 0, s.dim());
    for (std::size_t i = 0; i < t.dim(); ++i) m.append_row(s.coordinates(t.vector(i)));
    return Subspace(std::move(m));
}

/// Inverse of coordinates_in.
inline Subspace embed_from(const Subspace& s, const Subspace& t) {
    Matrix m(s.field(), 0, s.ambient_dim());
    for (std::size_t i = 0; i < t.dim(); ++i) m.append_row(s.combine(t.basis().row(i)));
    return Subspace(std::move(m));
}

}  // namespace cartan

#endif
