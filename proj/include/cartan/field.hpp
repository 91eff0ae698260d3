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

#ifndef CARTAN_FIELD_HPP
#define CARTAN_FIELD_HPP

#include <gmpxx.h>

#include <cstdint>
#include <ostream>
#include <string>
#include <utility>
#include <variant>

#include "error.hpp"

namespace cartan {

/// The base field: either the rationals or a prime field GF(p).
/// Both are perfect, so separability of an element reduces to squarefreeness
/// of its minimal polynomial.
class FieldSpec {
  public:
    enum class Kind { Rationals, PrimeField };

    static FieldSpec rationals() noexcept { return FieldSpec(Kind::Rationals, 0); }

    static FieldSpec prime(std::uint64_t p) {
        if (!is_prime(p)) throw Error(Errc::ValidationError, "GF(p) requires a prime p, got " + std::to_string(p));
        if (p >= (std::uint64_t{1} << 31)) throw Error(Errc::ValidationError, "prime too large: " + std::to_string(p));
        return FieldSpec(Kind::PrimeField, p);
    }

    Kind kind() const noexcept { return kind_; }
    bool is_finite() const noexcept { return kind_ == Kind::PrimeField; }
    std::uint64_t characteristic() const noexcept { return p_; }

    std::string to_string() const { return is_finite() ? "GF(" + std::to_string(p_) + ")" : "Q"; }

    friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

    static constexpr bool is_prime(std::uint64_t n) noexcept {
        if (n < 2) return false;
        for (std::uint64_t d = 2; d * d <= n; ++d)
            if (n % d == 0) return false;
        return true;
    }

  private:
    friend class Scalar;
    FieldSpec(Kind k, std::uint64_t p) noexcept : kind_(k), p_(p) {}

    Kind kind_ = Kind::Rationals;
    std::uint64_t p_ = 0;
};

inline std::ostream& operator<<(std::ostream& os, const FieldSpec& f) { return os << f.to_string(); }

/// An element of a FieldSpec in canonical form: a residue in [0, p) or a
/// fraction in lowest terms with positive denominator.
class Scalar {
  public:
    /// Rational zero. Prefer the named constructors, which carry the field.
    Scalar() = default;

    static Scalar zero(const FieldSpec& f) { return from_int(f, 0); }
    static Scalar one(const FieldSpec& f) { return from_int(f, 1); }

    static Scalar from_int(const FieldSpec& f, long long v) {
        Scalar s;
        s.p_ = f.characteristic();
        if (s.p_ == 0) {
            s.v_ = mpq_class(mpz_class(static_cast<long>(v)));
        } else {
            long long m = v % static_cast<long long>(s.p_);
            if (m < 0) m += static_cast<long long>(s.p_);
            s.v_ = static_cast<std::uint64_t>(m);
        }
        return s;
    }

    static Scalar from_rational(mpq_class q) {
        q.canonicalize();
        Scalar s;
        s.v_ = std::move(q);
        return s;
    }

    /// n/d in the given field; in GF(p) this is n * d^{-1}.
    static Scalar fraction(const FieldSpec& f, long long n, long long d) {
        if (d == 0) throw Error(Errc::DivisionByZero, "zero denominator");
        return from_int(f, n) / from_int(f, d);
    }

    FieldSpec field() const { return p_ == 0 ? FieldSpec::rationals() : FieldSpec(FieldSpec::Kind::PrimeField, p_); }
    std::uint64_t characteristic() const noexcept { return p_; }

    bool is_zero() const noexcept {
        if (p_) return std::get<std::uint64_t>(v_) == 0;
        return sgn(std::get<mpq_class>(v_)) == 0;
    }
    bool is_one() const noexcept {
        if (p_) return std::get<std::uint64_t>(v_) == 1;
        return std::get<mpq_class>(v_) == 1;
    }

    std::uint64_t residue() const { return std::get<std::uint64_t>(v_); }
    const mpq_class& rational() const { return std::get<mpq_class>(v_); }

    Scalar& operator+=(const Scalar& o) {
        check(o);
        if (p_) {
            auto& r = std::get<std::uint64_t>(v_);
            r += o.residue();
            if (r >= p_) r -= p_;
        } else {
            std::get<mpq_class>(v_) += o.rational();
        }
        return *this;
    }
    Scalar& operator-=(const Scalar& o) {
        check(o);
        if (p_) {
            auto& r = std::get<std::uint64_t>(v_);
            r = r >= o.residue() ? r - o.residue() : r + p_ - o.residue();
        } else {
            std::get<mpq_class>(v_) -= o.rational();
        }
        return *this;
    }
    Scalar& operator*=(const Scalar& o) {
        check(o);
        if (p_) {
            auto& r = std::get<std::uint64_t>(v_);
            r = (r * o.residue()) % p_;
        } else {
            std::get<mpq_class>(v_) *= o.rational();
        }
        return *this;
    }
    Scalar& operator/=(const Scalar& o) {
        check(o);
        return *this *= o.inverse();
    }

    Scalar inverse() const {
        if (is_zero()) throw Error(Errc::DivisionByZero, "inverse of zero");
        Scalar s = *this;
        if (p_) {
            s.v_ = pow_mod(residue(), p_ - 2, p_);
        } else {
            mpq_class q = 1 / rational();
            s.v_ = std::move(q);
        }
        return s;
    }

    Scalar operator-() const {
        Scalar s = *this;
        if (p_) {
            auto r = residue();
            s.v_ = r == 0 ? 0 : p_ - r;
        } else {
            s.v_ = mpq_class(-rational());
        }
        return s;
    }

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

    friend bool operator==(const Scalar& a, const Scalar& b) {
        if (a.p_ != b.p_) return false;
        if (a.p_) return a.residue() == b.residue();
        return a.rational() == b.rational();
    }

    /// Total order used for lexicographic tie-breaking; not a field order.
    friend bool operator<(const Scalar& a, const Scalar& b) {
        if (a.p_ != b.p_) return a.p_ < b.p_;
        if (a.p_) return a.residue() < b.residue();
        return a.rational() < b.rational();
    }

    /// "n/d" for rationals (always with a denominator), decimal residue otherwise.
    std::string to_string() const {
        if (p_) return std::to_string(residue());
        const auto& q = rational();
        return q.get_str();
    }

    static std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
        std::uint64_t r = 1 % m;
        b %= m;
        while (e) {
            if (e & 1) r = (r * b) % m;
            b = (b * b) % m;
            e >>= 1;
        }
        return r;
    }

  private:
    void check(const Scalar& o) const {
        if (p_ != o.p_) throw Error(Errc::FieldMismatch, "scalars from different fields");
    }

    std::uint64_t p_ = 0;
    std::variant<std::uint64_t, mpq_class> v_ = mpq_class(0);
};

inline std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

enum class ArithOp { add, sub, mul, div };

inline Scalar scalar_arith(const Scalar& a, const Scalar& b, ArithOp op) {
    switch (op) {
        case ArithOp::add: return a + b;
        case ArithOp::sub: return a - b;
        case ArithOp::mul: return a * b;
        case ArithOp::div: return a / b;
    }
    return a;
}

inline std::uint64_t characteristic(const FieldSpec& f) noexcept { return f.characteristic(); }

}  // namespace cartan

#endif
