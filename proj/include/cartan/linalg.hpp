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

#ifndef CARTAN_LINALG_HPP
#define CARTAN_LINALG_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "field.hpp"

namespace cartan {

using Vector = std::vector<Scalar>;

inline Vector zero_vector(const FieldSpec& f, std::size_t n) { return Vector(n, Scalar::zero(f)); }

inline Vector unit_vector(const FieldSpec& f, std::size_t n, std::size_t i) {
    Vector v = zero_vector(f, n);
    v[i] = Scalar::one(f);
    return v;
}

inline bool is_zero(std::span<const Scalar> v) {
    for (const auto& s : v)
        if (!s.is_zero()) return false;
    return true;
}

inline Vector operator+(Vector a, const Vector& b) {
    if (a.size() != b.size()) throw Error(Errc::DimensionMismatch, "vector sizes differ");
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
    return a;
}

inline Vector operator-(Vector a, const Vector& b) {
    if (a.size() != b.size()) throw Error(Errc::DimensionMismatch, "vector sizes differ");
    for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
    return a;
}

inline Vector operator-(Vector a) {
    for (auto& s : a) s = -s;
    return a;
}

inline Vector operator*(const Scalar& c, Vector v) {
    for (auto& s : v) s *= c;
    return v;
}

/// a += c * b
inline void axpy(Vector& a, const Scalar& c, std::span<const Scalar> b) {
    if (c.is_zero()) return;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!b[i].is_zero()) a[i] += c * b[i];
}

/// Dense row-major matrix over one field.
class Matrix {
  public:
    Matrix() = default;
    Matrix(const FieldSpec& f, std::size_t rows, std::size_t cols)
        : field_(f), rows_(rows), cols_(cols), data_(rows * cols, Scalar::zero(f)) {}

    static Matrix identity(const FieldSpec& f, std::size_t n) {
        Matrix m(f, n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar::one(f);
        return m;
    }

    static Matrix from_rows(const FieldSpec& f, std::size_t cols, const std::vector<Vector>& rows) {
        Matrix m(f, rows.size(), cols);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != cols) throw Error(Errc::DimensionMismatch, "row length differs from column count");
            for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
        }
        return m;
    }

    const FieldSpec& field() const noexcept { return field_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::span<Scalar> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
    std::span<const Scalar> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
    Vector row_vector(std::size_t i) const { return {row(i).begin(), row(i).end()}; }

    Vector column(std::size_t j) const {
        Vector v;
        v.reserve(rows_);
        for (std::size_t i = 0; i < rows_; ++i) v.push_back((*this)(i, j));
        return v;
    }

    void set_column(std::size_t j, std::span<const Scalar> v) {
        for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
    }

    void append_row(std::span<const Scalar> v) {
        if (v.size() != cols_) throw Error(Errc::DimensionMismatch, "row length differs from column count");
        data_.insert(data_.end(), v.begin(), v.end());
        ++rows_;
    }

    /// Vertical concatenation.
    void append_rows(const Matrix& m) {
        if (m.rows_ == 0) return;
        if (m.cols_ != cols_) throw Error(Errc::DimensionMismatch, "column counts differ");
        data_.insert(data_.end(), m.data_.begin(), m.data_.end());
        rows_ += m.rows_;
    }

    Matrix transpose() const {
        Matrix t(field_, cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    bool is_zero() const { return cartan::is_zero(data_); }

    Scalar trace() const {
        Scalar t = Scalar::zero(field_);
        for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
        return t;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw Error(Errc::DimensionMismatch, "matrix product shape mismatch");
        Matrix c(a.field_, a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const Scalar& aik = a(i, k);
                if (aik.is_zero()) continue;
                for (std::size_t j = 0; j < b.cols_; ++j)
                    if (!b(k, j).is_zero()) c(i, j) += aik * b(k, j);
            }
        return c;
    }

    friend Matrix operator+(Matrix a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error(Errc::DimensionMismatch, "matrix sum shape mismatch");
        for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] += b.data_[i];
        return a;
    }

    friend Matrix operator-(Matrix a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error(Errc::DimensionMismatch, "matrix sum shape mismatch");
        for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] -= b.data_[i];
        return a;
    }

    /// M v with v a column vector.
    Vector apply(std::span<const Scalar> v) const {
        if (v.size() != cols_) throw Error(Errc::DimensionMismatch, "matrix-vector shape mismatch");
        Vector out = zero_vector(field_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                if (!v[j].is_zero() && !(*this)(i, j).is_zero()) out[i] += (*this)(i, j) * v[j];
        return out;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

  private:
    FieldSpec field_ = FieldSpec::rationals();
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Scalar> data_;
};

/// Gauss-Jordan elimination in place. Pivots are taken at the first nonzero
/// entry scanning rows top-down, so results are reproducible. Zero rows are
/// dropped; returns the pivot columns.
inline std::vector<std::size_t> rref_in_place(Matrix& m) {
    std::vector<std::size_t> pivots;
    const std::size_t rows = m.rows(), cols = m.cols();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t sel = r;
        while (sel < rows && m(sel, c).is_zero()) ++sel;
        if (sel == rows) continue;
        if (sel != r)
            for (std::size_t j = 0; j < cols; ++j) std::swap(m(sel, j), m(r, j));
        const Scalar inv = m(r, c).inverse();
        for (std::size_t j = c; j < cols; ++j) m(r, j) *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m(i, c).is_zero()) continue;
            const Scalar f = m(i, c);
            for (std::size_t j = c; j < cols; ++j)
                if (!m(r, j).is_zero()) m(i, j) -= f * m(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    Matrix trimmed(m.field(), r, cols);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < cols; ++j) trimmed(i, j) = std::move(m(i, j));
    m = std::move(trimmed);
    return pivots;
}

inline std::size_t rank(Matrix m) { return rref_in_place(m).size(); }

/// Basis (as rows) of {x : M x = 0}. One vector per free column, with that
/// coordinate set to 1.
inline Matrix nullspace(Matrix m) {
    const std::size_t cols = m.cols();
    const auto pivots = rref_in_place(m);
    std::vector<bool> is_pivot(cols, false);
    for (auto p : pivots) is_pivot[p] = true;
    Matrix k(m.field(), 0, cols);
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        Vector v = zero_vector(m.field(), cols);
        v[f] = Scalar::one(m.field());
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -m(i, f);
        k.append_row(v);
    }
    return k;
}

/// A solution of M x = b with free variables set to zero, if one exists.
inline std::optional<Vector> solve(const Matrix& m, std::span<const Scalar> b) {
    if (b.size() != m.rows()) throw Error(Errc::DimensionMismatch, "right-hand side length mismatch");
    Matrix aug(m.field(), m.rows(), m.cols() + 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
        aug(i, m.cols()) = b[i];
    }
    const auto pivots = rref_in_place(aug);
    if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
    Vector x = zero_vector(m.field(), m.cols());
    for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug(i, m.cols());
    return x;
}

inline std::optional<Matrix> inverse(const Matrix& m) {
    if (m.rows() != m.cols()) throw Error(Errc::DimensionMismatch, "inverse of a non-square matrix");
    const std::size_t n = m.rows();
    Matrix aug(m.field(), n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = Scalar::one(m.field());
    }
    const auto pivots = rref_in_place(aug);
    if (pivots.size() < n || pivots[n - 1] != n - 1) return std::nullopt;
    Matrix inv(m.field(), n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
    return inv;
}

/// A subspace of K^n held as its reduced row-echelon basis, so equal
/// subspaces have identical representations.
class Subspace {
  public:
    Subspace() = default;

    /// Span of the rows of `generators`.
    explicit Subspace(Matrix generators) : basis_(std::move(generators)) {
        pivots_ = rref_in_place(basis_);
    }

    static Subspace span(const FieldSpec& f, std::size_t n, const std::vector<Vector>& vs) {
        return Subspace(Matrix::from_rows(f, n, vs));
    }
    static Subspace zero(const FieldSpec& f, std::size_t n) { return Subspace(Matrix(f, 0, n)); }
    static Subspace full(const FieldSpec& f, std::size_t n) { return Subspace(Matrix::identity(f, n)); }

    const FieldSpec& field() const noexcept { return basis_.field(); }
    std::size_t dim() const noexcept { return basis_.rows(); }
    std::size_t ambient_dim() const noexcept { return basis_.cols(); }
    const Matrix& basis() const noexcept { return basis_; }
    const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }
    Vector vector(std::size_t i) const { return basis_.row_vector(i); }

    std::vector<Vector> vectors() const {
        std::vector<Vector> out;
        for (std::size_t i = 0; i < dim(); ++i) out.push_back(vector(i));
        return out;
    }

    /// v minus its component along this subspace, eliminating pivot columns.
    Vector reduce(Vector v) const {
        check(v.size());
        for (std::size_t i = 0; i < pivots_.size(); ++i) {
            const Scalar c = v[pivots_[i]];
            if (!c.is_zero()) axpy(v, -c, basis_.row(i));
        }
        return v;
    }

    bool contains(const Vector& v) const { return cartan::is_zero(reduce(v)); }

    bool contains(const Subspace& s) const {
        for (std::size_t i = 0; i < s.dim(); ++i)
            if (!contains(s.vector(i))) return false;
        return true;
    }

    /// Coefficients of v in the canonical basis; v must lie in the subspace.
    Vector coordinates(const Vector& v) const {
        if (!contains(v)) throw Error(Errc::DimensionMismatch, "vector is not in the subspace");
        Vector c;
        c.reserve(dim());
        for (auto p : pivots_) c.push_back(v[p]);
        return c;
    }

    /// Linear combination of the canonical basis.
    Vector combine(std::span<const Scalar> coeffs) const {
        Vector v = zero_vector(field(), ambient_dim());
        for (std::size_t i = 0; i < dim(); ++i) axpy(v, coeffs[i], basis_.row(i));
        return v;
    }

    /// Standard basis columns not used as pivots: a canonical complement.
    std::vector<std::size_t> free_columns() const {
        std::vector<bool> used(ambient_dim(), false);
        for (auto p : pivots_) used[p] = true;
        std::vector<std::size_t> out;
        for (std::size_t j = 0; j < ambient_dim(); ++j)
            if (!used[j]) out.push_back(j);
        return out;
    }

    /// Linear functionals (rows) whose common kernel is this subspace.
    Matrix annihilator() const { return nullspace(basis_); }

    friend Subspace operator+(const Subspace& a, const Subspace& b) {
        a.check(b.ambient_dim());
        Matrix m = a.basis_;
        m.append_rows(b.basis_);
        return Subspace(std::move(m));
    }

    friend Subspace intersect(const Subspace& a, const Subspace& b) {
        a.check(b.ambient_dim());
        const Matrix ann = b.annihilator();
        // x ranges over coefficient vectors for a's basis; require ann * (x a) = 0.
        Matrix sys(a.field(), ann.rows(), a.dim());
        for (std::size_t j = 0; j < ann.rows(); ++j)
            for (std::size_t i = 0; i < a.dim(); ++i) {
                Scalar s = Scalar::zero(a.field());
                for (std::size_t k = 0; k < a.ambient_dim(); ++k)
                    if (!a.basis_(i, k).is_zero() && !ann(j, k).is_zero()) s += a.basis_(i, k) * ann(j, k);
                sys(j, i) = s;
            }
        const Matrix ker = nullspace(std::move(sys));
        Matrix gens(a.field(), 0, a.ambient_dim());
        for (std::size_t r = 0; r < ker.rows(); ++r) gens.append_row(a.combine(ker.row(r)));
        return Subspace(std::move(gens));
    }

    friend bool operator==(const Subspace& a, const Subspace& b) { return a.basis_ == b.basis_; }

  private:
    void check(std::size_t n) const {
        if (n != ambient_dim()) throw Error(Errc::DimensionMismatch, "ambient dimensions differ");
    }

    Matrix basis_;
    std::vector<std::size_t> pivots_;
};

}  // namespace cartan

#endif
