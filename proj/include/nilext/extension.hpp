#pragma once

#include "nilext/morphism.hpp"

#include <map>
#include <memory>

namespace nilext {

/// Parent algebra plus s cocycles theta_1..theta_s; the extension has the new
/// basis vectors e_{n+1}..e_{n+s}, with theta_i landing on e_{n+i}.
struct ExtensionSpec
{
    Algebra parent;
    std::vector<BilinearForm> theta;

    std::size_t s() const { return theta.size(); }
};

/// A_theta without checking that the forms are cocycles.
inline Algebra extension_table(Algebra const &parent, std::vector<BilinearForm> const &theta)
{
    auto n = parent.dim();
    auto s = theta.size();
    Algebra e(parent.field(), n + s);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
        {
            for (std::size_t k = 0; k < n; ++k)
                e.set_coeff(i, j, k, parent.coeff(i, j, k));
            for (std::size_t t = 0; t < s; ++t)
            {
                if (theta[t].dim() != n || !(theta[t].field() == parent.field()))
                    throw Error("extension: form does not match the parent algebra");
                e.set_coeff(i, j, n + t, theta[t].at(i, j));
            }
        }
    return e;
}

inline Algebra central_extension(ExtensionSpec const &spec)
{
    if (spec.s() == 0)
        throw PreconditionError("central_extension: s must be at least 1");
    auto z = span_of(spec.parent.field(), spec.parent.dim(), cocycle_space(spec.parent));
    for (std::size_t t = 0; t < spec.s(); ++t)
    {
        if (spec.theta[t].dim() != spec.parent.dim())
            throw Error("central_extension: form does not match the parent algebra");
        if (!z.contains(spec.theta[t].vector()))
            throw PreconditionError("central_extension: theta_" + std::to_string(t + 1) + " is not a cocycle");
    }
    return extension_table(spec.parent, spec.theta);
}

/// Whether classes given by coordinates over space.h2_reps() are independent.
inline bool classes_independent(CohomologySpace const &space, std::vector<Vec> const &coords)
{
    if (coords.empty())
        return true;
    return rank(coords, space.h2_dim()) == coords.size();
}

/// Ann(theta_1) ∩ ... ∩ Ann(theta_s) ∩ Ann(A) = 0, for independent classes.
inline bool in_T_s(CohomologySpace const &space, std::vector<Vec> const &coords)
{
    if (!classes_independent(space, coords))
        throw PreconditionError("in_T_s: classes are linearly dependent");
    std::vector<BilinearForm> forms;
    for (auto const &c : coords)
        forms.push_back(space.form_of(c));
    auto const &a = space.algebra();
    return cocycle_annihilator(forms, a).intersect(annihilator(a)).dim() == 0;
}

inline bool in_T_s(std::vector<CohomologyClass> const &classes)
{
    if (classes.empty())
        throw PreconditionError("in_T_s: no classes given");
    std::vector<Vec> coords;
    for (auto const &c : classes)
    {
        if (&c.space() != &classes[0].space())
            throw Error("in_T_s: classes from different cohomology spaces");
        coords.push_back(c.coords());
    }
    return in_T_s(classes[0].space(), coords);
}

/// A_theta = B ⊕ C with C a nonzero ideal inside the annihilator. Decided
/// structurally: such a C exists iff Ann(A_theta) is not contained in A_theta^2.
inline bool has_annihilator_component(Algebra const &a) { return !square(a).contains(annihilator(a)); }

inline bool has_annihilator_component(ExtensionSpec const &spec)
{
    return has_annihilator_component(central_extension(spec));
}

/// The class-dependence criterion: under Ann(theta) ∩ Ann(A) = 0, A_theta has
/// an annihilator component iff [theta_1], ..., [theta_s] are dependent.
inline bool classes_dependent(ExtensionSpec const &spec)
{
    auto space = cohomology(spec.parent);
    if (cocycle_annihilator(spec.theta, spec.parent).intersect(annihilator(spec.parent)).dim() != 0)
        throw PreconditionError("classes_dependent: Ann(theta) ∩ Ann(A) is not zero");
    std::vector<Vec> coords;
    for (auto const &t : spec.theta)
        coords.push_back(space.class_coordinates(t));
    return !classes_independent(space, coords);
}

struct Decomposition
{
    ExtensionSpec spec;                  // spec.parent = A / Ann(A)
    std::vector<std::size_t> complement; // standard basis indices of A spanning the parent
    Subspace ann;                        // Ann(A); theta_t lands on its t-th echelon vector
};

/// A = A' ⊕ Ann(A) as a central extension of A' = A / Ann(A).
inline Decomposition decompose(Algebra const &a)
{
    auto ann = annihilator(a);
    if (ann.dim() == 0)
        throw PreconditionError("decompose: Ann(A) is zero");
    auto q = quotient(a, ann);
    auto m = q.complement.size();
    std::vector<BilinearForm> theta(ann.dim(), BilinearForm(a.field(), m));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
        {
            auto prod = a.product(q.complement[i], q.complement[j]);
            auto r = ann.reduce(prod);
            auto diff = add(prod, scale(-Scalar::one(a.field()), r));
            auto c = ann.coordinates(diff);
            for (std::size_t t = 0; t < c.size(); ++t)
                theta[t].at(i, j) = c[t];
        }
    return {{q.algebra, std::move(theta)}, q.complement, ann};
}

// ---------------------------------------------------------------- orbits over GF(p)

namespace detail {

using RRow = std::vector<gfp::Residue>;

inline RRow row_residues(Vec const &v)
{
    RRow r;
    for (auto const &s : v)
        r.push_back(static_cast<gfp::Residue>(s.residue()));
    return r;
}

// in-place RREF over GF(p); returns rank (rows truncated)
inline std::size_t rref_residues(std::vector<RRow> &rows, std::size_t cols, gfp::Residue p)
{
    auto inv = [p](gfp::Residue a) { return static_cast<gfp::Residue>(Scalar::from_residue(FieldSpec::prime(p), a).inverse().residue()); };
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows.size(); ++c)
    {
        std::size_t sel = r;
        while (sel < rows.size() && rows[sel][c] == 0)
            ++sel;
        if (sel == rows.size())
            continue;
        std::swap(rows[r], rows[sel]);
        auto iv = inv(rows[r][c]);
        for (auto &x : rows[r])
            x = static_cast<gfp::Residue>(std::uint64_t{x} * iv % p);
        for (std::size_t i = 0; i < rows.size(); ++i)
        {
            if (i == r || rows[i][c] == 0)
                continue;
            auto f = p - rows[i][c];
            for (std::size_t k = 0; k < cols; ++k)
                rows[i][k] = static_cast<gfp::Residue>((rows[i][k] + std::uint64_t{f} * rows[r][k]) % p);
        }
        ++r;
    }
    rows.resize(r);
    return r;
}

// Class coordinates of forms given as residue vectors, mirroring
// CohomologySpace::class_coordinates.
class ClassReducer
{
public:
    explicit ClassReducer(CohomologySpace const &space) : p_(static_cast<gfp::Residue>(space.algebra().field().p))
    {
        auto const &b = space.b2_span();
        for (std::size_t i = 0; i < b.dim(); ++i)
        {
            b_rows_.push_back(row_residues(b.basis()[i]));
            b_piv_.push_back(b.pivots()[i]);
        }
        for (auto const &r : space.h2_reps())
        {
            reps_.push_back(row_residues(r.vector()));
            std::size_t piv = 0;
            while (reps_.back()[piv] == 0)
                ++piv;
            rep_piv_.push_back(piv);
        }
    }

    RRow coordinates(RRow v) const
    {
        auto sub = [&](RRow const &row, gfp::Residue c) {
            auto f = p_ - c;
            for (std::size_t k = 0; k < v.size(); ++k)
                if (row[k])
                    v[k] = static_cast<gfp::Residue>((v[k] + std::uint64_t{f} * row[k]) % p_);
        };
        for (std::size_t i = 0; i < b_rows_.size(); ++i)
            if (auto c = v[b_piv_[i]])
                sub(b_rows_[i], c);
        RRow coords;
        for (std::size_t i = 0; i < reps_.size(); ++i)
        {
            auto c = v[rep_piv_[i]];
            coords.push_back(c);
            if (c)
                sub(reps_[i], c);
        }
        for (auto x : v)
            if (x)
                throw Error("class reduction: form is not a cocycle");
        return coords;
    }

private:
    gfp::Residue p_;
    std::vector<RRow> b_rows_, reps_;
    std::vector<std::size_t> b_piv_, rep_piv_;
};

// phi^T M phi with phi, M n x n row-major residues
inline RRow transform_form(RRow const &phi, RRow const &m, std::size_t n, gfp::Residue p)
{
    RRow tmp(n * n, 0), out(n * n, 0);
    for (std::size_t i = 0; i < n; ++i) // tmp = M phi
        for (std::size_t k = 0; k < n; ++k)
            if (auto mik = m[i * n + k])
                for (std::size_t j = 0; j < n; ++j)
                    tmp[i * n + j] = static_cast<gfp::Residue>((tmp[i * n + j] + std::uint64_t{mik} * phi[k * n + j]) % p);
    for (std::size_t k = 0; k < n; ++k) // out = phi^T tmp
        for (std::size_t i = 0; i < n; ++i)
            if (auto pki = phi[k * n + i])
                for (std::size_t j = 0; j < n; ++j)
                    out[i * n + j] = static_cast<gfp::Residue>((out[i * n + j] + std::uint64_t{pki} * tmp[k * n + j]) % p);
    return out;
}

} // namespace detail

/// All s-dimensional subspaces of GF(p)^h as RREF row lists, in increasing
/// order of their flattened rows.
inline std::vector<std::vector<detail::RRow>> grassmannian(std::size_t h, std::size_t s, std::uint64_t p,
                                                           std::uint64_t bound = 1'000'000)
{
    std::vector<std::vector<detail::RRow>> out;
    if (s > h)
        return out;
    std::vector<std::size_t> piv(s);
    for (std::size_t i = 0; i < s; ++i)
        piv[i] = i;
    for (;;)
    {
        // free positions: row r, columns > piv[r] that are not pivots
        std::vector<std::pair<std::size_t, std::size_t>> free;
        for (std::size_t r = 0; r < s; ++r)
            for (std::size_t c = piv[r] + 1; c < h; ++c)
                if (std::find(piv.begin(), piv.end(), c) == piv.end())
                    free.emplace_back(r, c);
        auto count = gfp::power(p, free.size());
        if (out.size() + count > bound)
            throw PreconditionError("grassmannian: more than " + std::to_string(bound) + " subspaces");
        for (std::uint64_t idx = 0; idx < count; ++idx)
        {
            std::vector<detail::RRow> rows(s, detail::RRow(h, 0));
            for (std::size_t r = 0; r < s; ++r)
                rows[r][piv[r]] = 1;
            auto rest = idx;
            for (std::size_t f = free.size(); f-- > 0;)
            {
                rows[free[f].first][free[f].second] = static_cast<gfp::Residue>(rest % p);
                rest /= p;
            }
            out.push_back(std::move(rows));
        }
        // next pivot combination
        std::size_t i = s;
        while (i > 0 && piv[i - 1] == h - s + i - 1)
            --i;
        if (i == 0)
            break;
        ++piv[i - 1];
        for (std::size_t j = i; j < s; ++j)
            piv[j] = piv[j - 1] + 1;
    }
    std::sort(out.begin(), out.end());
    return out;
}

struct Orbit
{
    std::vector<Vec> coords;               // RREF basis of the representative subspace of H^2
    std::vector<BilinearForm> forms;       // theta_i = form_of(coords_i)
    std::uint64_t size = 0;
    Algebra extension;
};

struct OrbitReport
{
    Algebra parent;
    std::size_t s = 0;
    std::vector<BilinearForm> h2_reps;
    std::size_t aut_order = 0;
    std::uint64_t subspaces = 0, in_T_s = 0;
    std::vector<Orbit> orbits;

    std::string to_string() const
    {
        std::ostringstream os;
        os << "orbits " << (parent.name().empty() ? "A" : parent.name()) << " over " << parent.field().name()
           << " s=" << s << "\n";
        os << "H2 dim " << h2_reps.size() << "\n";
        for (std::size_t i = 0; i < h2_reps.size(); ++i)
            os << "  [" << i + 1 << "] " << h2_reps[i].to_string() << "\n";
        os << "automorphisms " << aut_order << "\n";
        os << "subspaces " << subspaces << " in T_s " << in_T_s << "\n";
        for (std::size_t o = 0; o < orbits.size(); ++o)
        {
            os << "orbit " << o + 1 << " size " << orbits[o].size << " basis";
            for (auto const &c : orbits[o].coords)
            {
                os << " (";
                for (std::size_t k = 0; k < c.size(); ++k)
                    os << (k ? "," : "") << c[k].to_string();
                os << ")";
            }
            os << "\n";
            for (std::size_t t = 0; t < orbits[o].forms.size(); ++t)
                os << "  theta_" << t + 1 << " = " << orbits[o].forms[t].to_string() << "\n";
        }
        os << "total orbits " << orbits.size() << "\n";
        return os.str();
    }
};

/// Aut(A)-orbits on T_s(A) over GF(p), with the least subspace of each orbit
/// as representative and its extension.
inline OrbitReport enumerate_orbits(Algebra const &a, std::size_t s, unsigned threads = 1)
{
    if (!a.field().is_prime_field())
        throw PreconditionError("enumerate_orbits: requires a prime field");
    if (s == 0)
        throw PreconditionError("enumerate_orbits: s must be at least 1");
    auto const &f = a.field();
    auto p = static_cast<gfp::Residue>(f.p);
    auto n = a.dim();
    auto space = cohomology(a);
    auto h = space.h2_dim();
    OrbitReport rep;
    rep.parent = a;
    rep.s = s;
    rep.h2_reps = space.h2_reps();
    auto autos = automorphism_residues(a, threads);
    rep.aut_order = autos.size();
    auto subs = grassmannian(h, s, p);
    rep.subspaces = subs.size();

    // action of each automorphism on H^2 coordinates: column r = image of rep r
    detail::ClassReducer reducer(space);
    std::vector<detail::RRow> rep_mats;
    for (auto const &r : space.h2_reps())
        rep_mats.push_back(detail::row_residues(r.vector()));
    std::vector<detail::RRow> actions(autos.size(), detail::RRow(h * h, 0));
    parallel_blocks(autos.size(), threads, 64, [&](std::uint64_t, std::uint64_t lo, std::uint64_t hi) {
        for (auto g = lo; g < hi; ++g)
            for (std::size_t r = 0; r < h; ++r)
            {
                auto c = reducer.coordinates(detail::transform_form(autos[g], rep_mats[r], n, p));
                for (std::size_t i = 0; i < h; ++i)
                    actions[g][i * h + r] = c[i];
            }
    });

    auto to_vecs = [&](std::vector<detail::RRow> const &rows) {
        std::vector<Vec> vs;
        for (auto const &r : rows)
            vs.push_back(gfp::to_vec(f, [&] {
                gfp::RVec v{};
                for (std::size_t i = 0; i < h; ++i)
                    v[i] = r[i];
                return v;
            }(), h));
        return vs;
    };
    if (h > gfp::kMaxDim)
    {
        // to_vecs uses fixed-size vectors
        throw PreconditionError("enumerate_orbits: dim H^2 above " + std::to_string(gfp::kMaxDim));
    }

    std::vector<char> in_ts(subs.size(), 0);
    parallel_blocks(subs.size(), threads, 64, [&](std::uint64_t, std::uint64_t lo, std::uint64_t hi) {
        for (auto i = lo; i < hi; ++i)
            in_ts[i] = in_T_s(space, to_vecs(subs[i])) ? 1 : 0;
    });
    std::map<std::vector<detail::RRow>, std::size_t> index;
    for (std::size_t i = 0; i < subs.size(); ++i)
        if (in_ts[i])
        {
            index.emplace(subs[i], i);
            ++rep.in_T_s;
        }

    std::vector<char> seen(subs.size(), 0);
    for (std::size_t i = 0; i < subs.size(); ++i)
    {
        if (!in_ts[i] || seen[i])
            continue;
        std::set<std::size_t> orbit;
        for (auto const &g : actions)
        {
            std::vector<detail::RRow> img;
            for (auto const &w : subs[i])
            {
                detail::RRow x(h, 0);
                for (std::size_t r = 0; r < h; ++r)
                    for (std::size_t c = 0; c < h; ++c)
                        x[r] = static_cast<gfp::Residue>((x[r] + std::uint64_t{g[r * h + c]} * w[c]) % p);
                img.push_back(std::move(x));
            }
            detail::rref_residues(img, h, p);
            auto it = index.find(img);
            if (it == index.end())
                throw Error("enumerate_orbits: T_s is not invariant under the computed action");
            orbit.insert(it->second);
        }
        for (auto j : orbit)
            seen[j] = 1;
        Orbit o;
        o.coords = to_vecs(subs[i]);
        for (auto const &c : o.coords)
            o.forms.push_back(space.form_of(c));
        o.size = orbit.size();
        o.extension = central_extension({a, o.forms});
        rep.orbits.push_back(std::move(o));
    }
    return rep;
}

} // namespace nilext
