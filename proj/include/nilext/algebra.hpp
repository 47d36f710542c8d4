#pragma once

#include "nilext/linalg.hpp"

#include <string>
#include <utility>
#include <vector>

namespace nilext {

/// A finite-dimensional algebra given by structure constants:
/// e_i e_j = sum_k c[i][j][k] e_k (indices 0-based internally).
class Algebra
{
public:
    Algebra() = default;
    Algebra(FieldSpec const &f, std::size_t dim, std::string name = {})
        : field_(f), dim_(dim), name_(std::move(name)), sc_(dim * dim * dim, Scalar::zero(f))
    {
    }

    FieldSpec const &field() const { return field_; }
    std::size_t dim() const { return dim_; }
    std::string const &name() const { return name_; }
    void set_name(std::string n) { name_ = std::move(n); }

    Scalar const &coeff(std::size_t i, std::size_t j, std::size_t k) const { return sc_[index(i, j, k)]; }

    void set_coeff(std::size_t i, std::size_t j, std::size_t k, Scalar c)
    {
        if (!(c.field() == field_))
            throw Error("structure constant over the wrong field");
        sc_[index(i, j, k)] = std::move(c);
    }

    /// e_i e_j as a coordinate vector.
    Vec product(std::size_t i, std::size_t j) const
    {
        Vec v;
        v.reserve(dim_);
        for (std::size_t k = 0; k < dim_; ++k)
            v.push_back(coeff(i, j, k));
        return v;
    }

    Vec multiply(Vec const &x, Vec const &y) const
    {
        if (x.size() != dim_ || y.size() != dim_)
            throw Error("multiply: vector length does not match algebra dimension");
        for (std::size_t i = 0; i < dim_; ++i)
            if (!(x[i].field() == field_) || !(y[i].field() == field_))
                throw Error("multiply: field mismatch");
        auto out = zero_vec(field_, dim_);
        for (std::size_t i = 0; i < dim_; ++i)
        {
            if (x[i].is_zero())
                continue;
            for (std::size_t j = 0; j < dim_; ++j)
            {
                if (y[j].is_zero())
                    continue;
                auto xy = x[i] * y[j];
                for (std::size_t k = 0; k < dim_; ++k)
                    if (!coeff(i, j, k).is_zero())
                        out[k] += xy * coeff(i, j, k);
            }
        }
        return out;
    }

    bool is_zero_algebra() const
    {
        return std::all_of(sc_.begin(), sc_.end(), [](Scalar const &s) { return s.is_zero(); });
    }

    /// Structural equality: same field, dimension and structure constants.
    friend bool operator==(Algebra const &a, Algebra const &b)
    {
        return a.field_ == b.field_ && a.dim_ == b.dim_ && a.sc_ == b.sc_;
    }

private:
    FieldSpec field_;
    std::size_t dim_ = 0;
    std::string name_;
    std::vector<Scalar> sc_;

    std::size_t index(std::size_t i, std::size_t j, std::size_t k) const
    {
        if (i >= dim_ || j >= dim_ || k >= dim_)
            throw Error("structure constant index out of range");
        return (i * dim_ + j) * dim_ + k;
    }
};

inline Algebra zero_algebra(FieldSpec const &f, std::size_t n) { return Algebra(f, n); }

inline Algebra direct_sum(Algebra const &a, Algebra const &b)
{
    if (!(a.field() == b.field()))
        throw Error("direct_sum: field mismatch");
    auto n = a.dim(), m = b.dim();
    Algebra s(a.field(), n + m);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                s.set_coeff(i, j, k, a.coeff(i, j, k));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            for (std::size_t k = 0; k < m; ++k)
                s.set_coeff(n + i, n + j, n + k, b.coeff(i, j, k));
    return s;
}

struct IdentityViolation
{
    enum class Identity
    {
        RightCommutative, // (xy)z = (xz)y
        LeftCommutative   // x(yz) = y(xz)
    } identity;
    std::size_t x, y, z; // basis indices, 0-based
    Vec lhs, rhs;
};

/// All basis triples violating right- or left-commutativity.
inline std::vector<IdentityViolation> check_bicommutative(Algebra const &a)
{
    std::vector<IdentityViolation> out;
    auto n = a.dim();
    auto const &f = a.field();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
            {
                auto ei = unit_vec(f, n, i), ej = unit_vec(f, n, j), ek = unit_vec(f, n, k);
                auto l = a.multiply(a.product(i, j), ek);
                auto r = a.multiply(a.product(i, k), ej);
                if (l != r)
                    out.push_back({IdentityViolation::Identity::RightCommutative, i, j, k, l, r});
                l = a.multiply(ei, a.product(j, k));
                r = a.multiply(ej, a.product(i, k));
                if (l != r)
                    out.push_back({IdentityViolation::Identity::LeftCommutative, i, j, k, l, r});
            }
    return out;
}

inline bool is_bicommutative(Algebra const &a) { return check_bicommutative(a).empty(); }

/// span{u w : u in U, w in W}
inline Subspace product_space(Algebra const &a, Subspace const &u, Subspace const &w)
{
    std::vector<Vec> vs;
    for (auto const &x : u.basis())
        for (auto const &y : w.basis())
        {
            auto p = a.multiply(x, y);
            if (!is_zero(p))
                vs.push_back(std::move(p));
        }
    return Subspace(a.field(), a.dim(), std::move(vs));
}

/// [A^1, A^2, ...] with A^k = sum_{i+j=k} A^i A^j, ending at the first zero
/// term, or at the term where the sequence has become constant.
inline std::vector<Subspace> power_filtration(Algebra const &a)
{
    std::vector<Subspace> powers{Subspace::full(a.field(), a.dim())};
    auto const cap = 3 * a.dim() + 3;
    while (powers.back().dim() != 0 && powers.size() < cap)
    {
        auto k = powers.size() + 1; // building A^k
        auto next = Subspace::zero(a.field(), a.dim());
        for (std::size_t i = 1; i < k; ++i)
            next = next.sum(product_space(a, powers[i - 1], powers[k - i - 1]));
        powers.push_back(std::move(next));
    }
    if (a.dim() == 0)
        powers.push_back(Subspace::zero(a.field(), 0));
    while (powers.size() >= 2 && powers.back().dim() != 0 && powers.back() == powers[powers.size() - 2])
        powers.pop_back();
    return powers;
}

inline bool is_nilpotent(Algebra const &a) { return power_filtration(a).back().dim() == 0; }

inline Subspace square(Algebra const &a)
{
    auto full = Subspace::full(a.field(), a.dim());
    return product_space(a, full, full);
}

/// Smallest subalgebra containing v.
inline Subspace generated_subalgebra(Algebra const &a, Vec const &v)
{
    auto s = Subspace(a.field(), a.dim(), {v});
    for (;;)
    {
        auto next = s.sum(product_space(a, s, s));
        if (next.dim() == s.dim())
            return s;
        s = std::move(next);
    }
}

/// dim(A/A^2) == 1. Requires a nilpotent algebra of positive dimension.
inline bool is_one_generated(Algebra const &a)
{
    if (a.dim() == 0)
        throw PreconditionError("is_one_generated: algebra has dimension 0");
    if (!is_nilpotent(a))
        throw PreconditionError("is_one_generated: algebra is not nilpotent");
    return a.dim() - square(a).dim() == 1;
}

namespace detail {

// kernel of x -> (x e_j, e_j x)_j restricted to the requested sides
inline Subspace annihilator_impl(Algebra const &a, bool left, bool right)
{
    auto n = a.dim();
    std::vector<Vec> eqs;
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k)
        {
            if (left)
            {
                Vec row;
                for (std::size_t i = 0; i < n; ++i)
                    row.push_back(a.coeff(i, j, k));
                eqs.push_back(std::move(row));
            }
            if (right)
            {
                Vec row;
                for (std::size_t i = 0; i < n; ++i)
                    row.push_back(a.coeff(j, i, k));
                eqs.push_back(std::move(row));
            }
        }
    return Subspace(a.field(), n, nullspace(a.field(), std::move(eqs), n));
}

} // namespace detail

/// {x : xA + Ax = 0}
inline Subspace annihilator(Algebra const &a) { return detail::annihilator_impl(a, true, true); }
/// {x : xA = 0}
inline Subspace left_annihilator(Algebra const &a) { return detail::annihilator_impl(a, true, false); }
/// {x : Ax = 0}
inline Subspace right_annihilator(Algebra const &a) { return detail::annihilator_impl(a, false, true); }

inline bool is_ideal(Algebra const &a, Subspace const &i)
{
    auto full = Subspace::full(a.field(), a.dim());
    return i.contains(product_space(a, full, i)) && i.contains(product_space(a, i, full));
}

struct Quotient
{
    Algebra algebra;
    Matrix projection; // (n - dim I) x n
    std::vector<std::size_t> complement; // standard basis indices spanning the complement
};

/// A/I on the complement spanned by the standard basis vectors at the
/// non-pivot coordinates of I.
inline Quotient quotient(Algebra const &a, Subspace const &ideal)
{
    if (ideal.ambient_dim() != a.dim() || !(ideal.field() == a.field()))
        throw Error("quotient: subspace does not live in this algebra");
    if (!is_ideal(a, ideal))
        throw PreconditionError("quotient: subspace is not an ideal");
    std::vector<bool> pivot(a.dim(), false);
    for (auto p : ideal.pivots())
        pivot[p] = true;
    std::vector<std::size_t> comp;
    for (std::size_t i = 0; i < a.dim(); ++i)
        if (!pivot[i])
            comp.push_back(i);
    auto m = comp.size();
    Matrix proj(a.field(), m, a.dim());
    for (std::size_t c = 0; c < a.dim(); ++c)
    {
        auto r = ideal.reduce(unit_vec(a.field(), a.dim(), c));
        for (std::size_t i = 0; i < m; ++i)
            proj(i, c) = r[comp[i]];
    }
    Algebra q(a.field(), m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
        {
            auto r = ideal.reduce(a.product(comp[i], comp[j]));
            for (std::size_t k = 0; k < m; ++k)
                q.set_coeff(i, j, k, r[comp[k]]);
        }
    return {std::move(q), std::move(proj), std::move(comp)};
}

} // namespace nilext
