#pragma once

#include "nilext/scalar.hpp"

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

namespace nilext {

using Vec = std::vector<Scalar>;

inline Vec zero_vec(FieldSpec const &f, std::size_t n) { return Vec(n, Scalar::zero(f)); }

inline Vec unit_vec(FieldSpec const &f, std::size_t n, std::size_t i)
{
    auto v = zero_vec(f, n);
    v.at(i) = Scalar::one(f);
    return v;
}

inline bool is_zero(Vec const &v)
{
    return std::all_of(v.begin(), v.end(), [](Scalar const &s) { return s.is_zero(); });
}

inline Vec add(Vec a, Vec const &b)
{
    if (a.size() != b.size())
        throw Error("vector length mismatch");
    for (std::size_t i = 0; i < a.size(); ++i)
        a[i] += b[i];
    return a;
}

inline Vec scale(Scalar const &c, Vec v)
{
    for (auto &x : v)
        x = c * x;
    return v;
}

// a += c * b
inline void axpy(Vec &a, Scalar const &c, Vec const &b)
{
    if (c.is_zero())
        return;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!b[i].is_zero())
            a[i] += c * b[i];
}

/// Dense row-major matrix of scalars over one field.
class Matrix
{
public:
    Matrix() = default;
    Matrix(FieldSpec const &f, std::size_t rows, std::size_t cols)
        : field_(f), rows_(rows), cols_(cols), data_(rows * cols, Scalar::zero(f))
    {
    }

    static Matrix identity(FieldSpec const &f, std::size_t n)
    {
        Matrix m(f, n, n);
        for (std::size_t i = 0; i < n; ++i)
            m(i, i) = Scalar::one(f);
        return m;
    }

    static Matrix from_rows(FieldSpec const &f, std::size_t cols, std::vector<Vec> const &rows)
    {
        Matrix m(f, rows.size(), cols);
        for (std::size_t i = 0; i < rows.size(); ++i)
        {
            if (rows[i].size() != cols)
                throw Error("row length mismatch");
            for (std::size_t j = 0; j < cols; ++j)
                m(i, j) = rows[i][j];
        }
        return m;
    }

    static Matrix from_columns(FieldSpec const &f, std::size_t rows, std::vector<Vec> const &cols)
    {
        Matrix m(f, rows, cols.size());
        for (std::size_t j = 0; j < cols.size(); ++j)
        {
            if (cols[j].size() != rows)
                throw Error("column length mismatch");
            for (std::size_t i = 0; i < rows; ++i)
                m(i, j) = cols[j][i];
        }
        return m;
    }

    FieldSpec const &field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Scalar &operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    Scalar const &operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    Vec row(std::size_t i) const { return Vec(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_); }

    Vec column(std::size_t j) const
    {
        Vec c;
        c.reserve(rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            c.push_back((*this)(i, j));
        return c;
    }

    Matrix transpose() const
    {
        Matrix t(field_, cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                t(j, i) = (*this)(i, j);
        return t;
    }

    friend Matrix operator*(Matrix const &a, Matrix const &b)
    {
        if (a.cols_ != b.rows_)
            throw Error("matrix dimension mismatch");
        Matrix c(a.field_, a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k)
            {
                auto const &aik = a(i, k);
                if (aik.is_zero())
                    continue;
                for (std::size_t j = 0; j < b.cols_; ++j)
                    if (!b(k, j).is_zero())
                        c(i, j) += aik * b(k, j);
            }
        return c;
    }

    Vec apply(Vec const &x) const
    {
        if (x.size() != cols_)
            throw Error("matrix-vector dimension mismatch");
        auto y = zero_vec(field_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                if (!x[j].is_zero() && !(*this)(i, j).is_zero())
                    y[i] += (*this)(i, j) * x[j];
        return y;
    }

    friend bool operator==(Matrix const &a, Matrix const &b)
    {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    FieldSpec field_;
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Scalar> data_;
};

/// In-place reduced row echelon form. Returns pivot columns; zero rows are dropped.
inline std::vector<std::size_t> rref_rows(std::vector<Vec> &rows, std::size_t cols)
{
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows.size(); ++c)
    {
        std::size_t sel = r;
        while (sel < rows.size() && rows[sel][c].is_zero())
            ++sel;
        if (sel == rows.size())
            continue;
        std::swap(rows[r], rows[sel]);
        auto inv = rows[r][c].inverse();
        for (std::size_t j = c; j < cols; ++j)
            if (!rows[r][j].is_zero())
                rows[r][j] *= inv;
        for (std::size_t i = 0; i < rows.size(); ++i)
        {
            if (i == r || rows[i][c].is_zero())
                continue;
            auto factor = -rows[i][c];
            axpy(rows[i], factor, rows[r]);
        }
        pivots.push_back(c);
        ++r;
    }
    rows.resize(r);
    return pivots;
}

inline std::size_t rank(std::vector<Vec> rows, std::size_t cols) { return rref_rows(rows, cols).size(); }

inline std::size_t rank(Matrix const &m)
{
    std::vector<Vec> rows;
    for (std::size_t i = 0; i < m.rows(); ++i)
        rows.push_back(m.row(i));
    return rank(std::move(rows), m.cols());
}

/// Basis of {x : M x = 0}, one vector per free column, in column order.
inline std::vector<Vec> nullspace(FieldSpec const &f, std::vector<Vec> rows, std::size_t cols)
{
    auto pivots = rref_rows(rows, cols);
    std::vector<bool> is_pivot(cols, false);
    for (auto c : pivots)
        is_pivot[c] = true;
    std::vector<Vec> basis;
    for (std::size_t free = 0; free < cols; ++free)
    {
        if (is_pivot[free])
            continue;
        auto v = zero_vec(f, cols);
        v[free] = Scalar::one(f);
        for (std::size_t i = 0; i < pivots.size(); ++i)
            v[pivots[i]] = -rows[i][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

inline std::vector<Vec> nullspace(Matrix const &m)
{
    std::vector<Vec> rows;
    for (std::size_t i = 0; i < m.rows(); ++i)
        rows.push_back(m.row(i));
    return nullspace(m.field(), std::move(rows), m.cols());
}

inline std::optional<Matrix> inverse(Matrix const &m)
{
    if (m.rows() != m.cols())
        throw Error("inverse of non-square matrix");
    auto n = m.rows();
    std::vector<Vec> rows;
    for (std::size_t i = 0; i < n; ++i)
    {
        auto r = m.row(i);
        auto e = unit_vec(m.field(), n, i);
        r.insert(r.end(), e.begin(), e.end());
        rows.push_back(std::move(r));
    }
    auto pivots = rref_rows(rows, 2 * n);
    if (pivots.size() < n || pivots[n - 1] != n - 1)
        return std::nullopt;
    Matrix inv(m.field(), n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            inv(i, j) = rows[i][n + j];
    return inv;
}

/// A linear subspace of F^n stored by its reduced row echelon basis, so that
/// two equal subspaces have identical representations.
class Subspace
{
public:
    Subspace() = default;

    Subspace(FieldSpec const &f, std::size_t ambient, std::vector<Vec> vectors)
        : field_(f), ambient_(ambient), basis_(std::move(vectors))
    {
        for (auto const &v : basis_)
            if (v.size() != ambient_)
                throw Error("subspace vector length mismatch");
        pivots_ = rref_rows(basis_, ambient_);
    }

    static Subspace zero(FieldSpec const &f, std::size_t n) { return Subspace(f, n, {}); }

    static Subspace full(FieldSpec const &f, std::size_t n)
    {
        std::vector<Vec> vs;
        for (std::size_t i = 0; i < n; ++i)
            vs.push_back(unit_vec(f, n, i));
        return Subspace(f, n, std::move(vs));
    }

    FieldSpec const &field() const { return field_; }
    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dim() const { return basis_.size(); }
    std::vector<Vec> const &basis() const { return basis_; }
    std::vector<std::size_t> const &pivots() const { return pivots_; }

    /// Reduces v modulo the subspace; the result vanishes on all pivot coordinates.
    Vec reduce(Vec v) const
    {
        for (std::size_t i = 0; i < basis_.size(); ++i)
        {
            auto c = v[pivots_[i]];
            if (!c.is_zero())
                axpy(v, -c, basis_[i]);
        }
        return v;
    }

    bool contains(Vec const &v) const { return is_zero(reduce(v)); }

    bool contains(Subspace const &o) const
    {
        return std::all_of(o.basis_.begin(), o.basis_.end(), [&](Vec const &v) { return contains(v); });
    }

    /// Coordinates of v in the echelon basis; v must lie in the subspace.
    Vec coordinates(Vec const &v) const
    {
        if (!contains(v))
            throw Error("vector not in subspace");
        Vec c;
        for (auto p : pivots_)
            c.push_back(v[p]);
        return c;
    }

    Subspace sum(Subspace const &o) const
    {
        auto vs = basis_;
        vs.insert(vs.end(), o.basis_.begin(), o.basis_.end());
        return Subspace(field_, ambient_, std::move(vs));
    }

    Subspace intersect(Subspace const &o) const
    {
        // x = sum a_i u_i lies in o iff its reduction modulo o vanishes
        std::vector<Vec> reduced;
        for (auto const &u : basis_)
            reduced.push_back(o.reduce(u));
        // columns of the reduced images; solve sum a_i reduced_i = 0
        std::vector<Vec> eqs(ambient_, zero_vec(field_, basis_.size()));
        for (std::size_t i = 0; i < basis_.size(); ++i)
            for (std::size_t k = 0; k < ambient_; ++k)
                eqs[k][i] = reduced[i][k];
        auto coeffs = nullspace(field_, std::move(eqs), basis_.size());
        std::vector<Vec> vs;
        for (auto const &a : coeffs)
        {
            auto x = zero_vec(field_, ambient_);
            for (std::size_t i = 0; i < a.size(); ++i)
                axpy(x, a[i], basis_[i]);
            vs.push_back(std::move(x));
        }
        return Subspace(field_, ambient_, std::move(vs));
    }

    friend bool operator==(Subspace const &a, Subspace const &b)
    {
        return a.field_ == b.field_ && a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
    }

    std::string to_string() const
    {
        std::string s = "<";
        for (std::size_t i = 0; i < basis_.size(); ++i)
        {
            if (i)
                s += ", ";
            s += "(";
            for (std::size_t j = 0; j < ambient_; ++j)
            {
                if (j)
                    s += ",";
                s += basis_[i][j].to_string();
            }
            s += ")";
        }
        return s + ">";
    }

private:
    FieldSpec field_;
    std::size_t ambient_ = 0;
    std::vector<Vec> basis_;
    std::vector<std::size_t> pivots_;
};

} // namespace nilext
