#pragma once

// Test-side brute force over GF(p) with plain integers. Nothing here calls the
// library's linear algebra, cohomology, morphism or orbit code.

#include "nilext/nilext.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <vector>

namespace naive {

struct Alg
{
    int n = 0, p = 2;
    std::vector<int> c; // c[(i*n+j)*n+k]

    int at(int i, int j, int k) const { return c[(i * n + j) * n + k]; }

    static Alg from(nilext::Algebra const &a)
    {
        Alg r;
        r.n = static_cast<int>(a.dim());
        r.p = static_cast<int>(a.field().p);
        for (int i = 0; i < r.n; ++i)
            for (int j = 0; j < r.n; ++j)
                for (int k = 0; k < r.n; ++k)
                    r.c.push_back(static_cast<int>(a.coeff(i, j, k).residue()));
        return r;
    }

    std::vector<int> mul(std::vector<int> const &x, std::vector<int> const &y) const
    {
        std::vector<int> z(n, 0);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (x[i] && y[j])
                    for (int k = 0; k < n; ++k)
                        z[k] = (z[k] + x[i] * y[j] * at(i, j, k)) % p;
        return z;
    }
};

inline std::vector<int> unit(int n, int i)
{
    std::vector<int> v(n, 0);
    v[i] = 1;
    return v;
}

inline std::vector<int> digits(std::uint64_t code, int len, int p)
{
    std::vector<int> d(len);
    for (int i = len - 1; i >= 0; --i)
    {
        d[i] = static_cast<int>(code % p);
        code /= p;
    }
    return d;
}

inline std::uint64_t ipow(std::uint64_t b, int e)
{
    std::uint64_t r = 1;
    while (e-- > 0)
        r *= b;
    return r;
}

inline bool bicommutative(Alg const &a)
{
    for (int x = 0; x < a.n; ++x)
        for (int y = 0; y < a.n; ++y)
            for (int z = 0; z < a.n; ++z)
            {
                auto X = unit(a.n, x), Y = unit(a.n, y), Z = unit(a.n, z);
                if (a.mul(a.mul(X, Y), Z) != a.mul(a.mul(X, Z), Y))
                    return false;
                if (a.mul(X, a.mul(Y, Z)) != a.mul(Y, a.mul(X, Z)))
                    return false;
            }
    return true;
}

/// theta as an n*n table; theta(u, v) for coordinate vectors.
inline int form(std::vector<int> const &t, int n, int p, std::vector<int> const &u, std::vector<int> const &v)
{
    int s = 0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            s = (s + u[i] * v[j] * t[i * n + j]) % p;
    return s;
}

inline bool is_cocycle(Alg const &a, std::vector<int> const &t)
{
    for (int x = 0; x < a.n; ++x)
        for (int y = 0; y < a.n; ++y)
            for (int z = 0; z < a.n; ++z)
            {
                auto X = unit(a.n, x), Y = unit(a.n, y), Z = unit(a.n, z);
                if (form(t, a.n, a.p, a.mul(X, Y), Z) != form(t, a.n, a.p, a.mul(X, Z), Y))
                    return false;
                if (form(t, a.n, a.p, X, a.mul(Y, Z)) != form(t, a.n, a.p, Y, a.mul(X, Z)))
                    return false;
            }
    return true;
}

/// All cocycles, by testing every bilinear form.
inline std::vector<std::vector<int>> cocycles(Alg const &a)
{
    std::vector<std::vector<int>> out;
    for (std::uint64_t code = 0; code < ipow(a.p, a.n * a.n); ++code)
    {
        auto t = digits(code, a.n * a.n, a.p);
        if (is_cocycle(a, t))
            out.push_back(t);
    }
    return out;
}

/// delta f (x, y) = f(xy) for every functional f; returned as a set.
inline std::set<std::vector<int>> coboundaries(Alg const &a)
{
    std::set<std::vector<int>> out;
    for (std::uint64_t code = 0; code < ipow(a.p, a.n); ++code)
    {
        auto f = digits(code, a.n, a.p);
        std::vector<int> t(a.n * a.n, 0);
        for (int i = 0; i < a.n; ++i)
            for (int j = 0; j < a.n; ++j)
                for (int k = 0; k < a.n; ++k)
                    t[i * a.n + j] = (t[i * a.n + j] + a.at(i, j, k) * f[k]) % a.p;
        out.insert(t);
    }
    return out;
}

inline int logp(std::size_t count, int p)
{
    int e = 0;
    while (count > 1)
    {
        count /= p;
        ++e;
    }
    return e;
}

inline bool invertible(std::vector<int> m, int n, int p)
{
    for (int c = 0, r = 0; c < n; ++c, ++r)
    {
        int piv = -1;
        for (int i = r; i < n; ++i)
            if (m[i * n + c])
                piv = i;
        if (piv < 0)
            return false;
        for (int j = 0; j < n; ++j)
            std::swap(m[r * n + j], m[piv * n + j]);
        int inv = 1;
        while (m[r * n + c] * inv % p != 1)
            ++inv;
        for (int i = 0; i < n; ++i)
            if (i != r && m[i * n + c])
            {
                int f = m[i * n + c] * inv % p;
                for (int j = 0; j < n; ++j)
                    m[i * n + j] = ((m[i * n + j] - f * m[r * n + j]) % p + p) % p;
            }
    }
    return true;
}

/// Column i of m (row-major n*n) is the image of e_i.
inline std::vector<int> apply(std::vector<int> const &m, int n, int p, std::vector<int> const &v)
{
    std::vector<int> r(n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            r[i] = (r[i] + m[i * n + j] * v[j]) % p;
    return r;
}

/// Every invertible matrix that is a homomorphism a -> b.
inline std::vector<std::vector<int>> isomorphisms(Alg const &a, Alg const &b)
{
    std::vector<std::vector<int>> out;
    int n = a.n, p = a.p;
    for (std::uint64_t code = 0; code < ipow(p, n * n); ++code)
    {
        auto m = digits(code, n * n, p);
        bool hom = true;
        for (int i = 0; i < n && hom; ++i)
            for (int j = 0; j < n && hom; ++j)
            {
                auto lhs = apply(m, n, p, a.mul(unit(n, i), unit(n, j)));
                auto rhs = b.mul(apply(m, n, p, unit(n, i)), apply(m, n, p, unit(n, j)));
                hom = lhs == rhs;
            }
        if (hom && invertible(m, n, p))
            out.push_back(std::move(m));
    }
    return out;
}

/// (phi theta)(x, y) = theta(phi x, phi y).
inline std::vector<int> act(std::vector<int> const &m, int n, int p, std::vector<int> const &t)
{
    std::vector<int> r(n * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            r[i * n + j] = form(t, n, p, apply(m, n, p, unit(n, i)), apply(m, n, p, unit(n, j)));
    return r;
}

/// Number of classes of non-split one-dimensional extensions with
/// Ann(theta) ∩ Ann(A) = 0, up to theta ~ c phi theta + delta f.
inline std::size_t extension_orbits(Alg const &a)
{
    int n = a.n, p = a.p;
    auto z = cocycles(a);
    auto b = coboundaries(a);
    auto autos = isomorphisms(a, a);
    std::map<std::vector<int>, std::size_t> index;
    for (std::size_t i = 0; i < z.size(); ++i)
        index[z[i]] = i;
    std::vector<std::size_t> parent(z.size());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
        return parent[x] == x ? x : parent[x] = find(parent[x]);
    };
    auto unite = [&](std::size_t x, std::size_t y) { parent[find(x)] = find(y); };
    for (std::size_t i = 0; i < z.size(); ++i)
    {
        for (auto const &m : autos)
            for (int c = 1; c < p; ++c)
            {
                auto t = act(m, n, p, z[i]);
                for (auto &v : t)
                    v = v * c % p;
                unite(i, index.at(t));
            }
        for (auto const &d : b)
        {
            auto t = z[i];
            for (int k = 0; k < n * n; ++k)
                t[k] = (t[k] + d[k]) % p;
            unite(i, index.at(t));
        }
    }
    // annihilator of A and of theta, tested vector by vector
    auto in_ann = [&](std::vector<int> const &x) {
        for (int j = 0; j < n; ++j)
        {
            auto l = a.mul(x, unit(n, j)), r = a.mul(unit(n, j), x);
            if (std::any_of(l.begin(), l.end(), [](int v) { return v; }) ||
                std::any_of(r.begin(), r.end(), [](int v) { return v; }))
                return false;
        }
        return true;
    };
    std::set<std::size_t> classes;
    for (std::size_t i = 0; i < z.size(); ++i)
    {
        if (b.count(z[i]))
            continue;
        bool ok = true;
        for (std::uint64_t code = 1; code < ipow(p, n) && ok; ++code)
        {
            auto x = digits(code, n, p);
            if (!in_ann(x))
                continue;
            bool kills = true;
            for (int j = 0; j < n && kills; ++j)
                kills = form(z[i], n, p, x, unit(n, j)) == 0 && form(z[i], n, p, unit(n, j), x) == 0;
            if (kills)
                ok = false;
        }
        if (ok)
            classes.insert(find(i));
    }
    return classes.size();
}

/// Smallest subalgebra containing v, as a set of vectors (closure under
/// sums, scalar multiples and products).
inline bool one_generated(Alg const &a)
{
    int n = a.n, p = a.p;
    for (std::uint64_t code = 1; code < ipow(p, n); ++code)
    {
        std::set<std::vector<int>> s{digits(code, n, p)};
        bool grew = true;
        while (grew)
        {
            grew = false;
            std::vector<std::vector<int>> cur(s.begin(), s.end());
            for (auto const &x : cur)
                for (auto const &y : cur)
                {
                    std::vector<int> sum(n);
                    for (int k = 0; k < n; ++k)
                        sum[k] = (x[k] + y[k]) % p;
                    grew |= s.insert(sum).second;
                    grew |= s.insert(a.mul(x, y)).second;
                }
        }
        if (s.size() == ipow(p, n))
            return true;
    }
    return false;
}

/// A random invertible matrix and its inverse, built from elementary operations.
template <class Rng>
std::pair<std::vector<int>, std::vector<int>> random_gl(int n, int p, Rng &rng)
{
    std::vector<int> m(n * n, 0), inv(n * n, 0);
    for (int i = 0; i < n; ++i)
        m[i * n + i] = inv[i * n + i] = 1;
    for (int step = 0; step < 4 * n; ++step)
    {
        int i = static_cast<int>(rng() % n), j = static_cast<int>(rng() % n);
        int c = 1 + static_cast<int>(rng() % (p - 1));
        if (i == j)
        {
            // scale row i of m by c, column i of inv by c^-1
            int ci = 1;
            while (c * ci % p != 1)
                ++ci;
            for (int k = 0; k < n; ++k)
            {
                m[i * n + k] = m[i * n + k] * c % p;
                inv[k * n + i] = inv[k * n + i] * ci % p;
            }
        }
        else
        {
            // row_i += c row_j on m; column_j -= c column_i on inv
            for (int k = 0; k < n; ++k)
            {
                m[i * n + k] = (m[i * n + k] + c * m[j * n + k]) % p;
                inv[k * n + j] = ((inv[k * n + j] - c * inv[k * n + i]) % p + p) % p;
            }
        }
    }
    return {m, inv};
}

/// The table of a transported along m: b(x, y) = m a(m^-1 x, m^-1 y).
inline Alg transport(Alg const &a, std::vector<int> const &m, std::vector<int> const &inv)
{
    Alg b{a.n, a.p, std::vector<int>(a.c.size(), 0)};
    for (int i = 0; i < a.n; ++i)
        for (int j = 0; j < a.n; ++j)
        {
            auto v = apply(m, a.n, a.p, a.mul(apply(inv, a.n, a.p, unit(a.n, i)), apply(inv, a.n, a.p, unit(a.n, j))));
            for (int k = 0; k < a.n; ++k)
                b.c[(i * a.n + j) * a.n + k] = v[k];
        }
    return b;
}

inline nilext::Algebra to_algebra(Alg const &a)
{
    auto f = nilext::FieldSpec::prime(a.p);
    nilext::Algebra r(f, a.n);
    for (int i = 0; i < a.n; ++i)
        for (int j = 0; j < a.n; ++j)
            for (int k = 0; k < a.n; ++k)
                r.set_coeff(i, j, k, nilext::Scalar(f, static_cast<long>(a.at(i, j, k))));
    return r;
}

inline std::vector<int> residues(nilext::Matrix const &m)
{
    std::vector<int> r;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            r.push_back(static_cast<int>(m(i, j).residue()));
    return r;
}

inline bool is_isomorphism(Alg const &a, Alg const &b, std::vector<int> const &m)
{
    int n = a.n, p = a.p;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (apply(m, n, p, a.mul(unit(n, i), unit(n, j))) !=
                b.mul(apply(m, n, p, unit(n, i)), apply(m, n, p, unit(n, j))))
                return false;
    return invertible(m, n, p);
}

/// Number of s-dimensional subspaces of GF(p)^h.
inline std::uint64_t gaussian_binomial(int h, int s, std::uint64_t p)
{
    if (s < 0 || s > h)
        return 0;
    std::uint64_t num = 1, den = 1;
    for (int i = 0; i < s; ++i)
    {
        num *= ipow(p, h - i) - 1;
        den *= ipow(p, i + 1) - 1;
    }
    return num / den;
}

} // namespace naive
