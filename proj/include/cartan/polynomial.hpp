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

#ifndef CARTAN_POLYNOMIAL_HPP
#define CARTAN_POLYNOMIAL_HPP

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "algebra.hpp"

namespace cartan {

/// Univariate polynomial, coefficients lowest degree first, no trailing zeros.
class Polynomial {
  public:
    explicit Polynomial(FieldSpec f) : field_(f) {}
    Polynomial(FieldSpec f, std::vector<Scalar> coeffs) : field_(f), c_(std::move(coeffs)) {
        for (const auto& s : c_)
            if (s.characteristic() != f.characteristic()) throw Error(Errc::FieldMismatch, "coefficient from another field");
        trim();
    }
    static Polynomial from_ints(FieldSpec f, const std::vector<long long>& cs) {
        std::vector<Scalar> v;
        for (auto c : cs) v.push_back(Scalar::from_int(f, c));
        return {f, std::move(v)};
    }
    /// t^k
    static Polynomial monomial(FieldSpec f, std::size_t k) {
        std::vector<Scalar> v(k + 1, Scalar::zero(f));
        v[k] = Scalar::one(f);
        return {f, std::move(v)};
    }

    const FieldSpec& field() const noexcept { return field_; }
    const std::vector<Scalar>& coefficients() const noexcept { return c_; }
    bool is_zero() const noexcept { return c_.empty(); }
    /// -1 for the zero polynomial.
    long degree() const noexcept { return static_cast<long>(c_.size()) - 1; }
    const Scalar& leading() const { return c_.back(); }

    Scalar coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Scalar::zero(field_); }

    Polynomial monic() const {
        if (is_zero()) return *this;
        const Scalar inv = leading().inverse();
        std::vector<Scalar> v = c_;
        for (auto& s : v) s *= inv;
        return {field_, std::move(v)};
    }

    Polynomial derivative() const {
        std::vector<Scalar> v;
        for (std::size_t i = 1; i < c_.size(); ++i) v.push_back(Scalar::from_int(field_, static_cast<long long>(i)) * c_[i]);
        return {field_, std::move(v)};
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        a.check(b);
        std::vector<Scalar> v(std::max(a.c_.size(), b.c_.size()), Scalar::zero(a.field_));
        for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.coeff(i) + b.coeff(i);
        return {a.field_, std::move(v)};
    }
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
        a.check(b);
        std::vector<Scalar> v(std::max(a.c_.size(), b.c_.size()), Scalar::zero(a.field_));
        for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.coeff(i) - b.coeff(i);
        return {a.field_, std::move(v)};
    }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        a.check(b);
        if (a.is_zero() || b.is_zero()) return Polynomial(a.field_);
        std::vector<Scalar> v(a.c_.size() + b.c_.size() - 1, Scalar::zero(a.field_));
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
        return {a.field_, std::move(v)};
    }

    /// Quotient and remainder of Euclidean division.
    friend std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
        a.check(b);
        if (b.is_zero()) throw Error(Errc::DivisionByZero, "polynomial division by zero");
        std::vector<Scalar> r = a.c_;
        const std::size_t db = b.c_.size() - 1;
        if (r.size() <= db) return {Polynomial(a.field_), a};
        std::vector<Scalar> q(r.size() - db, Scalar::zero(a.field_));
        const Scalar inv = b.leading().inverse();
        for (std::size_t k = r.size(); k-- > db;) {
            const Scalar c = r[k] * inv;
            q[k - db] = c;
            if (c.is_zero()) continue;
            for (std::size_t j = 0; j <= db; ++j) r[k - db + j] -= c * b.c_[j];
        }
        r.resize(db);
        return {Polynomial(a.field_, std::move(q)), Polynomial(a.field_, std::move(r))};
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.field_ == b.field_ && a.c_ == b.c_; }

    std::string to_string() const {
        if (is_zero()) return "0";
        std::string s;
        for (std::size_t i = c_.size(); i-- > 0;) {
            if (c_[i].is_zero()) continue;
            if (!s.empty()) s += " + ";
            const bool unit = c_[i].is_one() && i > 0;
            if (!unit) s += c_[i].to_string();
            if (i > 0) s += (unit ? "" : "*") + std::string("t") + (i > 1 ? "^" + std::to_string(i) : "");
        }
        return s;
    }

  private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    void check(const Polynomial& o) const {
        if (field_ != o.field_) throw Error(Errc::FieldMismatch, "polynomials over different fields");
    }

    FieldSpec field_;
    std::vector<Scalar> c_;
};

/// Monic gcd; gcd(0, 0) = 0.
inline Polynomial poly_gcd(Polynomial f, Polynomial g) {
    if (f.field() != g.field()) throw Error(Errc::FieldMismatch, "gcd of polynomials over different fields");
    while (!g.is_zero()) {
        auto r = divmod(f, g).second;
        f = std::move(g);
        g = std::move(r);
    }
    return f.monic();
}

/// gcd(f, f') = 1. Over a perfect field this is equivalent to f being a
/// product of distinct separable irreducibles.
inline bool is_squarefree(const Polynomial& f) {
    if (f.is_zero()) throw Error(Errc::ZeroPolynomial, "squarefreeness of the zero polynomial");
    return poly_gcd(f, f.derivative()).degree() == 0;
}

/// p(x) evaluated in the algebra by Horner's rule.
inline Element evaluate(const Algebra& a, const Polynomial& p, const Element& x) {
    Element r = a.zero();
    const auto& c = p.coefficients();
    for (std::size_t i = c.size(); i-- > 0;) r = a.multiply(r, x) + a.scalar(c[i]);
    return r;
}

/// Minimal polynomial from the first linear dependence in the Krylov
/// sequence 1, x, x^2, ...
inline Polynomial minimal_polynomial(const Algebra& a, const Element& x) {
    a.check(x);
    const FieldSpec& f = a.field();
    if (is_zero(a.one())) throw Error(Errc::NotUnital, "minimal polynomial needs a nonzero identity");
    struct Row {
        std::size_t pivot;
        Vector v;
        std::vector<Scalar> comb;  // v = sum comb[i] x^i
    };
    std::vector<Row> rows;
    Element power = a.one();
    for (std::size_t k = 0;; ++k) {
        Vector v = power;
        std::vector<Scalar> comb(k + 1, Scalar::zero(f));
        comb[k] = Scalar::one(f);
        for (const auto& r : rows) {
            const Scalar c = v[r.pivot];
            if (c.is_zero()) continue;
            axpy(v, -c, r.v);
            for (std::size_t i = 0; i < r.comb.size(); ++i) comb[i] -= c * r.comb[i];
        }
        std::size_t piv = 0;
        while (piv < v.size() && v[piv].is_zero()) ++piv;
        if (piv == v.size()) return Polynomial(f, std::move(comb));
        const Scalar inv = v[piv].inverse();
        for (auto& s : v) s *= inv;
        for (auto& s : comb) s *= inv;
        rows.push_back({piv, std::move(v), std::move(comb)});
        power = a.multiply(power, x);
    }
}

}  // namespace cartan

#endif
