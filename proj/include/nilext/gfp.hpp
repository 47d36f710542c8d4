#pragma once

// Fixed-size residue arithmetic for the exhaustive searches over GF(p).
// Everything here mirrors an operation on Algebra/Scalar and is cross-checked
// against it in the tests.

#include "nilext/algebra.hpp"

#include <array>
#include <cstdint>
#include <vector>

namespace nilext::gfp {

inline constexpr std::size_t kMaxDim = 10;

using Residue = std::uint32_t;
using RVec = std::array<Residue, kMaxDim>;

/// Structure constants of an algebra over GF(p) as residues, with a sparse
/// list of nonzero (i, j, k, c) for fast products.
class Table
{
public:
    struct Entry
    {
        std::uint8_t i, j, k;
        Residue c;
    };

    Table() = default;

    explicit Table(Algebra const &a) : p_(static_cast<Residue>(a.field().p)), n_(a.dim())
    {
        if (!a.field().is_prime_field())
            throw Error("gfp::Table requires an algebra over GF(p)");
        if (a.dim() > kMaxDim)
            throw PreconditionError("gfp::Table: dimension above " + std::to_string(kMaxDim));
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j)
                for (std::size_t k = 0; k < n_; ++k)
                {
                    auto c = a.coeff(i, j, k);
                    if (!c.is_zero())
                        entries_.push_back({static_cast<std::uint8_t>(i), static_cast<std::uint8_t>(j),
                                            static_cast<std::uint8_t>(k), static_cast<Residue>(c.residue())});
                }
    }

    Residue p() const { return p_; }
    std::size_t dim() const { return n_; }
    std::vector<Entry> const &entries() const { return entries_; }

    Residue mul(Residue a, Residue b) const { return static_cast<Residue>(std::uint64_t{a} * b % p_); }
    Residue add(Residue a, Residue b) const { return (a + b) % p_; }

    RVec multiply(RVec const &x, RVec const &y) const
    {
        RVec out{};
        for (auto const &e : entries_)
        {
            if (x[e.i] == 0 || y[e.j] == 0)
                continue;
            out[e.k] = add(out[e.k], mul(mul(x[e.i], y[e.j]), e.c));
        }
        return out;
    }

private:
    Residue p_ = 2;
    std::size_t n_ = 0;
    std::vector<Entry> entries_;
};

inline RVec to_rvec(Vec const &v)
{
    if (v.size() > kMaxDim)
        throw PreconditionError("gfp: vector too long");
    RVec r{};
    for (std::size_t i = 0; i < v.size(); ++i)
        r[i] = static_cast<Residue>(v[i].residue());
    return r;
}

inline Vec to_vec(FieldSpec const &f, RVec const &r, std::size_t n)
{
    Vec v;
    for (std::size_t i = 0; i < n; ++i)
        v.push_back(Scalar::from_residue(f, r[i]));
    return v;
}

/// Decodes index -> vector with the first coordinate most significant, so
/// increasing indices enumerate vectors in lexicographic order.
inline RVec decode(std::uint64_t index, std::size_t n, Residue p)
{
    RVec v{};
    for (std::size_t i = n; i-- > 0;)
    {
        v[i] = static_cast<Residue>(index % p);
        index /= p;
    }
    return v;
}

inline std::uint64_t power(std::uint64_t p, std::size_t n)
{
    std::uint64_t r = 1;
    for (std::size_t i = 0; i < n; ++i)
        r *= p;
    return r;
}

/// Echelon basis of a subspace over GF(p) for fast membership tests.
class Echelon
{
public:
    Echelon() = default;
    Echelon(Subspace const &s) : n_(s.ambient_dim())
    {
        if (s.field().is_prime_field())
            p_ = static_cast<Residue>(s.field().p);
        for (auto const &b : s.basis())
            rows_.push_back(to_rvec(b));
        pivots_ = s.pivots();
    }

    bool contains(RVec v) const
    {
        for (std::size_t r = 0; r < rows_.size(); ++r)
        {
            auto c = v[pivots_[r]];
            if (c == 0)
                continue;
            auto neg = p_ - c;
            for (std::size_t k = 0; k < n_; ++k)
                v[k] = static_cast<Residue>((v[k] + std::uint64_t{neg} * rows_[r][k]) % p_);
        }
        for (std::size_t k = 0; k < n_; ++k)
            if (v[k] != 0)
                return false;
        return true;
    }

private:
    std::size_t n_ = 0;
    Residue p_ = 2;
    std::vector<RVec> rows_;
    std::vector<std::size_t> pivots_;
};

} // namespace nilext::gfp
