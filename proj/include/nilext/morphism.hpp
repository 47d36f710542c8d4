#pragma once

#include "nilext/cohom.hpp"
#include "nilext/gfp.hpp"
#include "nilext/parallel.hpp"

#include <atomic>
#include <functional>
#include <limits>
#include <optional>
#include <random>
#include <set>
#include <sstream>

namespace nilext {

/// Linear map between algebras; column i of `matrix` is the image of e_i.
struct Morphism
{
    Algebra source;
    Algebra target;
    Matrix matrix; // target.dim() x source.dim()
};

inline Morphism identity_morphism(Algebra const &a) { return {a, a, Matrix::identity(a.field(), a.dim())}; }

inline bool is_homomorphism(Morphism const &phi)
{
    auto const &s = phi.source;
    auto const &t = phi.target;
    if (!(s.field() == t.field()) || phi.matrix.rows() != t.dim() || phi.matrix.cols() != s.dim())
        throw Error("is_homomorphism: matrix shape or field does not match the algebras");
    std::vector<Vec> cols;
    for (std::size_t i = 0; i < s.dim(); ++i)
        cols.push_back(phi.matrix.column(i));
    for (std::size_t i = 0; i < s.dim(); ++i)
        for (std::size_t j = 0; j < s.dim(); ++j)
            if (phi.matrix.apply(s.product(i, j)) != t.multiply(cols[i], cols[j]))
                return false;
    return true;
}

inline bool is_invertible(Matrix const &m) { return m.rows() == m.cols() && rank(m) == m.rows(); }

inline bool is_automorphism(Morphism const &phi)
{
    return phi.source == phi.target && is_invertible(phi.matrix) && is_homomorphism(phi);
}

/// phi after psi.
inline Morphism compose(Morphism const &phi, Morphism const &psi)
{
    if (!(psi.target == phi.source))
        throw Error("compose: target of the inner map is not the source of the outer map");
    return {psi.source, phi.target, phi.matrix * psi.matrix};
}

/// Basis of a one-generated nilpotent algebra by products of a generator g.
/// Word 0 is g, the first standard basis vector outside A^2. Words are then
/// added by increasing degree; within a degree, pairs (a, b) of existing words
/// are tried in lexicographic order and w_a w_b is kept when it is independent
/// of the words found so far.
class WordBasis
{
public:
    static constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

    WordBasis() = default;

    explicit WordBasis(Algebra const &a) : field_(a.field()), n_(a.dim())
    {
        if (!is_one_generated(a))
            throw PreconditionError("word basis: algebra is not one-generated");
        auto sq = square(a);
        std::size_t g = 0;
        while (sq.contains(unit_vec(field_, n_, g)))
            ++g;
        generator_ = g;
        words_.push_back(unit_vec(field_, n_, g));
        shape_.push_back({npos, npos});
        degree_.push_back(1);
        std::vector<Vec> echelon{words_[0]};
        rref_rows(echelon, n_);
        for (std::size_t d = 2; words_.size() < n_; ++d)
        {
            if (d > 2 * n_ + 2)
                throw Error("word basis: products of the generator do not span the algebra");
            auto count = words_.size();
            for (std::size_t x = 0; x < count && words_.size() < n_; ++x)
                for (std::size_t y = 0; y < count && words_.size() < n_; ++y)
                {
                    if (degree_[x] + degree_[y] != d)
                        continue;
                    auto w = a.multiply(words_[x], words_[y]);
                    auto trial = echelon;
                    trial.push_back(w);
                    if (rref_rows(trial, n_).size() > echelon.size())
                    {
                        echelon = std::move(trial);
                        words_.push_back(std::move(w));
                        shape_.push_back({x, y});
                        degree_.push_back(d);
                    }
                }
        }
        auto w = Matrix::from_columns(field_, n_, words_);
        auto inv = inverse(w);
        if (!inv)
            throw Error("word basis: words are dependent");
        to_words_ = *inv;
        table_.assign(n_, std::vector<Vec>(n_));
        for (std::size_t x = 0; x < n_; ++x)
            for (std::size_t y = 0; y < n_; ++y)
                table_[x][y] = to_words_.apply(a.multiply(words_[x], words_[y]));
    }

    std::size_t dim() const { return n_; }
    std::size_t generator() const { return generator_; }
    /// (a, b) with word_k = word_a * word_b; (npos, npos) for the generator.
    std::vector<std::pair<std::size_t, std::size_t>> const &shape() const { return shape_; }
    std::vector<std::size_t> const &degrees() const { return degree_; }
    std::vector<Vec> const &words() const { return words_; }
    /// Standard coordinates -> word coordinates.
    Matrix const &to_words() const { return to_words_; }
    /// word_a word_b in word coordinates.
    Vec const &structure(std::size_t a, std::size_t b) const { return table_[a][b]; }

    /// The images of the words under the map sending the generator to v.
    std::vector<Vec> images(Algebra const &b, Vec const &v) const
    {
        std::vector<Vec> u{v};
        for (std::size_t k = 1; k < n_; ++k)
            u.push_back(b.multiply(u[shape_[k].first], u[shape_[k].second]));
        return u;
    }

    /// Whether the map sending word_k to u_k respects every product of words.
    bool respects_products(Algebra const &b, std::vector<Vec> const &u) const
    {
        for (std::size_t x = 0; x < n_; ++x)
            for (std::size_t y = 0; y < n_; ++y)
            {
                auto lhs = b.multiply(u[x], u[y]);
                auto rhs = zero_vec(b.field(), b.dim());
                for (std::size_t c = 0; c < n_; ++c)
                    axpy(rhs, table_[x][y][c], u[c]);
                if (lhs != rhs)
                    return false;
            }
        return true;
    }

private:
    FieldSpec field_;
    std::size_t n_ = 0;
    std::size_t generator_ = 0;
    std::vector<std::pair<std::size_t, std::size_t>> shape_;
    std::vector<std::size_t> degree_;
    std::vector<Vec> words_;
    Matrix to_words_;
    std::vector<std::vector<Vec>> table_;
};

/// The homomorphism A -> B sending A's word-basis generator to v, if any.
inline std::optional<Morphism> extend_generator_image(Algebra const &a, Algebra const &b, Vec const &v,
                                                      WordBasis const *basis = nullptr)
{
    if (!(a.field() == b.field()))
        throw Error("extend_generator_image: field mismatch");
    if (v.size() != b.dim())
        throw Error("extend_generator_image: vector length does not match target dimension");
    std::optional<WordBasis> own;
    if (!basis)
        basis = &own.emplace(a);
    auto u = basis->images(b, v);
    if (!basis->respects_products(b, u))
        return std::nullopt;
    auto m = Matrix::from_columns(a.field(), b.dim(), u) * basis->to_words();
    return Morphism{a, b, std::move(m)};
}

namespace detail {

// The generator-image search over GF(p) on fixed-size residue vectors.
class FastSearch
{
public:
    FastSearch(Algebra const &a, Algebra const &b)
        : basis_(a), target_(b), n_(a.dim()), m_(b.dim()), square_(square(b))
    {
        if (!a.field().is_prime_field() || !(a.field() == b.field()))
            throw Error("generator search requires algebras over the same GF(p)");
        p_ = target_.p();
        auto const &shape = basis_.shape();
        for (std::size_t x = 0; x < n_; ++x)
            for (std::size_t y = 0; y < n_; ++y)
            {
                bool defining = false;
                for (std::size_t k = 1; k < n_; ++k)
                    if (shape[k] == std::pair{x, y})
                        defining = true;
                if (defining)
                    continue;
                Relation r{x, y, {}};
                auto const &t = basis_.structure(x, y);
                for (std::size_t c = 0; c < n_; ++c)
                    if (!t[c].is_zero())
                        r.rhs.push_back({c, static_cast<gfp::Residue>(t[c].residue())});
                relations_.push_back(std::move(r));
            }
        // cheap relations first
        std::stable_sort(relations_.begin(), relations_.end(), [](Relation const &l, Relation const &r) {
            return std::max(l.x, l.y) < std::max(r.x, r.y);
        });
    }

    WordBasis const &basis() const { return basis_; }
    std::uint64_t candidates() const { return gfp::power(p_, m_); }

    /// Whether v (given by its lexicographic index) extends to a homomorphism;
    /// candidates inside B^2 are skipped when only bijections are wanted.
    bool test(gfp::RVec const &v, bool bijective_only) const
    {
        if (bijective_only && square_.contains(v))
            return false;
        std::array<gfp::RVec, gfp::kMaxDim> u;
        u[0] = v;
        auto const &shape = basis_.shape();
        for (std::size_t k = 1; k < n_; ++k)
            u[k] = target_.multiply(u[shape[k].first], u[shape[k].second]);
        for (auto const &r : relations_)
        {
            auto lhs = target_.multiply(u[r.x], u[r.y]);
            gfp::RVec rhs{};
            for (auto const &[c, coeff] : r.rhs)
                for (std::size_t i = 0; i < m_; ++i)
                    rhs[i] = static_cast<gfp::Residue>((rhs[i] + std::uint64_t{coeff} * u[c][i]) % p_);
            if (lhs != rhs)
                return false;
        }
        return true;
    }

    /// Indices of all passing candidates in increasing order, or only the
    /// first one when first_only is set.
    std::vector<std::uint64_t> search(bool bijective_only, bool first_only, unsigned threads) const
    {
        auto total = candidates();
        std::uint64_t blocks = std::min<std::uint64_t>(total, 256);
        std::vector<std::vector<std::uint64_t>> found(blocks);
        std::atomic<std::uint64_t> best{std::numeric_limits<std::uint64_t>::max()};
        parallel_blocks(total, threads, blocks, [&](std::uint64_t blk, std::uint64_t lo, std::uint64_t hi) {
            for (auto idx = lo; idx < hi; ++idx)
            {
                if (first_only && idx > best.load(std::memory_order_relaxed))
                    return;
                if (test(gfp::decode(idx, m_, p_), bijective_only))
                {
                    found[blk].push_back(idx);
                    if (first_only)
                    {
                        auto cur = best.load();
                        while (idx < cur && !best.compare_exchange_weak(cur, idx))
                        {
                        }
                        return;
                    }
                }
            }
        });
        std::vector<std::uint64_t> out;
        for (auto &f : found)
            out.insert(out.end(), f.begin(), f.end());
        if (first_only && !out.empty())
            out = {*std::min_element(out.begin(), out.end())};
        return out;
    }

    /// Matrix (standard coordinates, column i = image of e_i) as residues, row-major.
    std::vector<gfp::Residue> matrix_residues(gfp::RVec const &v) const
    {
        std::array<gfp::RVec, gfp::kMaxDim> u;
        u[0] = v;
        auto const &shape = basis_.shape();
        for (std::size_t k = 1; k < n_; ++k)
            u[k] = target_.multiply(u[shape[k].first], u[shape[k].second]);
        auto const &tw = basis_.to_words();
        std::vector<gfp::Residue> out(m_ * n_, 0);
        for (std::size_t r = 0; r < m_; ++r)
            for (std::size_t c = 0; c < n_; ++c)
            {
                std::uint64_t s = 0;
                for (std::size_t k = 0; k < n_; ++k)
                    s = (s + std::uint64_t{u[k][r]} * tw(k, c).residue()) % p_;
                out[r * n_ + c] = static_cast<gfp::Residue>(s);
            }
        return out;
    }

private:
    struct Relation
    {
        std::size_t x, y;
        std::vector<std::pair<std::size_t, gfp::Residue>> rhs;
    };

    WordBasis basis_;
    gfp::Table target_;
    std::size_t n_, m_;
    gfp::Residue p_ = 2;
    gfp::Echelon square_;
    std::vector<Relation> relations_;
};

inline Matrix residues_to_matrix(FieldSpec const &f, std::size_t rows, std::size_t cols,
                                 std::vector<gfp::Residue> const &r)
{
    Matrix m(f, rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            m(i, j) = Scalar::from_residue(f, r[i * cols + j]);
    return m;
}

inline void require_enumerable(Algebra const &a, char const *what)
{
    if (!a.field().is_prime_field())
        throw PreconditionError(std::string(what) + ": requires a prime field");
    if (!is_one_generated(a))
        throw PreconditionError(std::string(what) + ": algebra is not one-generated");
    if (a.dim() > gfp::kMaxDim || gfp::power(a.field().p, a.dim()) > 10'000'000)
        throw PreconditionError(std::string(what) + ": search space p^n exceeds 10^7");
}

} // namespace detail

/// Aut(A) over GF(p) as row-major residue matrices, ordered lexicographically
/// by the image of the generator.
inline std::vector<std::vector<gfp::Residue>> automorphism_residues(Algebra const &a, unsigned threads = 1)
{
    detail::require_enumerable(a, "enumerate_automorphisms");
    detail::FastSearch s(a, a);
    std::vector<std::vector<gfp::Residue>> out;
    for (auto idx : s.search(true, false, threads))
        out.push_back(s.matrix_residues(gfp::decode(idx, a.dim(), static_cast<gfp::Residue>(a.field().p))));
    return out;
}

inline std::vector<Morphism> enumerate_automorphisms(Algebra const &a, unsigned threads = 1)
{
    std::vector<Morphism> out;
    for (auto const &r : automorphism_residues(a, threads))
        out.push_back({a, a, detail::residues_to_matrix(a.field(), a.dim(), a.dim(), r)});
    return out;
}

/// phi theta (x, y) = theta(phi x, phi y): matrix phi^T M phi.
inline BilinearForm act_on_form(Morphism const &phi, BilinearForm const &theta)
{
    auto n = theta.dim();
    if (phi.matrix.rows() != n || phi.matrix.cols() != n)
        throw Error("act_on_form: dimension mismatch");
    return BilinearForm::from_matrix(phi.matrix.transpose() * theta.matrix() * phi.matrix);
}

inline CohomologyClass act_on_class(Morphism const &phi, CohomologyClass const &c)
{
    auto const &space = c.space();
    if (!(phi.source == space.algebra()) || !is_automorphism(phi))
        throw PreconditionError("act_on_class: map is not an automorphism of the algebra");
    return CohomologyClass::of(space, act_on_form(phi, c.representative()));
}

// ---------------------------------------------------------------- invariants

/// Isomorphism invariants used to rule out isomorphism cheaply.
struct Invariants
{
    std::vector<std::size_t> filtration;
    std::size_t ann = 0, left_ann = 0, right_ann = 0;
    std::size_t z2 = 0, b2 = 0, h2 = 0;
    std::size_t a_a2 = 0, a2_a = 0;

    friend bool operator==(Invariants const &, Invariants const &) = default;

    std::string to_string() const
    {
        std::ostringstream os;
        os << "filtration [";
        for (std::size_t i = 0; i < filtration.size(); ++i)
            os << (i ? "," : "") << filtration[i];
        os << "] ann " << ann << " left_ann " << left_ann << " right_ann " << right_ann << " Z2 " << z2 << " B2 "
           << b2 << " H2 " << h2 << " dim(A.A2) " << a_a2 << " dim(A2.A) " << a2_a;
        return os.str();
    }
};

inline Invariants invariants(Algebra const &a)
{
    Invariants inv;
    for (auto const &s : power_filtration(a))
        inv.filtration.push_back(s.dim());
    inv.ann = annihilator(a).dim();
    inv.left_ann = left_annihilator(a).dim();
    inv.right_ann = right_annihilator(a).dim();
    inv.z2 = cocycle_space(a).size();
    inv.b2 = coboundary_space(a).size();
    inv.h2 = inv.z2 - inv.b2;
    auto full = Subspace::full(a.field(), a.dim());
    auto sq = square(a);
    inv.a_a2 = product_space(a, full, sq).dim();
    inv.a2_a = product_space(a, sq, full).dim();
    return inv;
}

// ---------------------------------------------------------------- isomorphism

enum class IsoAnswer
{
    Yes,
    No,
    Unknown
};

inline char const *to_string(IsoAnswer a)
{
    switch (a)
    {
    case IsoAnswer::Yes:
        return "yes";
    case IsoAnswer::No:
        return "no";
    case IsoAnswer::Unknown:
        return "unknown";
    }
    return "?";
}

struct IsoResult
{
    IsoAnswer answer = IsoAnswer::Unknown;
    std::optional<Morphism> witness; // A -> B when answer is Yes
    std::string reason;
};

/// Candidate coordinates for the bounded search over Q.
inline std::vector<Scalar> rational_search_box(FieldSpec const &f)
{
    return {Scalar(f, 0L),  Scalar(f, 1L), Scalar(f, -1L), Scalar(f, 2L), Scalar(f, -2L),
            Scalar(f, mpq_class(1, 2)), Scalar(f, mpq_class(-1, 2))};
}

inline IsoResult is_isomorphic(Algebra const &a, Algebra const &b, unsigned threads = 1)
{
    if (!(a.field() == b.field()))
        throw Error("is_isomorphic: field mismatch");
    if (a.dim() == 0 || b.dim() == 0 || !is_one_generated(a) || !is_one_generated(b))
        throw PreconditionError("is_isomorphic: both algebras must be nilpotent and one-generated");
    if (a.dim() != b.dim())
        return {IsoAnswer::No, std::nullopt, "dimensions differ"};
    auto ia = invariants(a), ib = invariants(b);
    if (!(ia == ib))
        return {IsoAnswer::No, std::nullopt, "invariants differ: " + ia.to_string() + " vs " + ib.to_string()};
    auto const &f = a.field();
    auto n = a.dim();
    if (f.is_prime_field())
    {
        if (n > gfp::kMaxDim || gfp::power(f.p, n) > 10'000'000)
            return {IsoAnswer::Unknown, std::nullopt, "search space p^n exceeds 10^7"};
        detail::FastSearch s(a, b);
        auto hit = s.search(true, true, threads);
        if (hit.empty())
            return {IsoAnswer::No, std::nullopt, "exhaustive generator-image search found no isomorphism"};
        auto v = gfp::to_vec(f, gfp::decode(hit[0], n, static_cast<gfp::Residue>(f.p)), n);
        auto phi = extend_generator_image(a, b, v, &s.basis());
        if (!phi || !is_homomorphism(*phi) || !is_invertible(phi->matrix))
            throw Error("is_isomorphic: fast search and exact check disagree");
        return {IsoAnswer::Yes, std::move(phi), "generator image found by exhaustive search"};
    }
    // Q: bounded search over small coordinates
    WordBasis basis(a);
    auto box = rational_search_box(f);
    auto sq = square(b);
    std::uint64_t total = gfp::power(box.size(), n);
    if (total > 200'000)
        total = 200'000;
    for (std::uint64_t idx = 0; idx < total; ++idx)
    {
        Vec v;
        auto rest = idx;
        for (std::size_t i = 0; i < n; ++i)
        {
            v.push_back(box[rest % box.size()]);
            rest /= box.size();
        }
        if (sq.contains(v))
            continue;
        auto u = basis.images(b, v);
        if (!basis.respects_products(b, u))
            continue;
        auto m = Matrix::from_columns(f, n, u) * basis.to_words();
        if (!is_invertible(m))
            continue;
        return {IsoAnswer::Yes, Morphism{a, b, std::move(m)}, "generator image found by bounded search"};
    }
    return {IsoAnswer::Unknown, std::nullopt,
            "invariants agree and bounded generator-image search over small rationals found no isomorphism"};
}

// ---------------------------------------------------------------- Aut families

/// A parametrized automorphism matrix as printed for a catalog algebra.
/// Entries are expressions in pattern_params and in the family parameters.
struct AutFamily
{
    std::string parent_name;
    std::vector<std::string> family_params;                // e.g. {"lambda"}
    std::map<std::string, std::string> parent_bindings;    // parent param -> expression in family params
    std::vector<std::string> family_nonzero;               // expressions that must not vanish
    std::vector<std::string> pattern_params;               // e.g. {"x", "y", "z"}
    std::vector<std::vector<std::string>> pattern;         // rows of entries, column i = image of e_i
};

/// Resolves (catalog name, parameter bindings, field) to a concrete algebra.
using ParentResolver = std::function<Algebra(std::string const &, Bindings const &, FieldSpec const &)>;

struct AutFamilyReport
{
    std::string parent_name;
    std::size_t samples = 0, samples_passed = 0;
    struct FieldCheck
    {
        std::uint64_t p;
        std::string family_values;
        std::size_t enumerated = 0, pattern = 0;
        std::size_t missing_from_pattern = 0; // automorphisms not produced by the pattern
        std::size_t not_automorphisms = 0;    // pattern instances that are not automorphisms
        bool ok() const { return missing_from_pattern == 0 && not_automorphisms == 0; }
    };
    std::vector<FieldCheck> field_checks;
    std::vector<std::string> failures;

    bool ok() const
    {
        return samples_passed == samples && failures.empty() &&
               std::all_of(field_checks.begin(), field_checks.end(), [](FieldCheck const &c) { return c.ok(); });
    }
};

namespace detail {

inline std::optional<Bindings> family_bindings(AutFamily const &fam, FieldSpec const &f, Bindings fb)
{
    try
    {
        for (auto const &e : fam.family_nonzero)
            if (Expr::parse(e).eval(f, fb).is_zero())
                return std::nullopt;
        Bindings parent;
        for (auto const &[k, e] : fam.parent_bindings)
            parent.emplace(k, Expr::parse(e).eval(f, fb));
        return parent;
    }
    catch (Error const &)
    {
        return std::nullopt;
    }
}

inline Matrix instantiate_pattern(std::vector<std::vector<Expr>> const &pat, FieldSpec const &f, Bindings const &b)
{
    Matrix m(f, pat.size(), pat.size());
    for (std::size_t i = 0; i < pat.size(); ++i)
        for (std::size_t j = 0; j < pat[i].size(); ++j)
            m(i, j) = pat[i][j].eval(f, b);
    return m;
}

inline Scalar random_rational(FieldSpec const &f, std::mt19937_64 &rng)
{
    std::uniform_int_distribution<long> num(-6, 6), den(1, 4);
    return Scalar(f, mpq_class(num(rng), den(rng)));
}

} // namespace detail

/// (a) random instantiations over Q are automorphisms; (b) over GF(2) and
/// GF(3), for every admissible value of the family parameters, the enumerated
/// automorphism group equals the set of invertible pattern instances.
inline AutFamilyReport verify_aut_family(AutFamily const &fam, ParentResolver const &resolve, std::size_t samples,
                                         std::uint64_t seed = 1, std::vector<std::uint64_t> primes = {2, 3})
{
    AutFamilyReport rep;
    rep.parent_name = fam.parent_name;
    std::vector<std::vector<Expr>> pat;
    for (auto const &row : fam.pattern)
    {
        pat.emplace_back();
        for (auto const &e : row)
            pat.back().push_back(Expr::parse(e));
    }
    auto q = FieldSpec::rationals();
    std::mt19937_64 rng(seed);
    for (std::size_t s = 0; s < samples; ++s)
    {
        ++rep.samples;
        std::optional<Bindings> parent;
        Bindings fb;
        for (int attempt = 0; attempt < 1000 && !parent; ++attempt)
        {
            fb.clear();
            for (auto const &p : fam.family_params)
                fb.insert_or_assign(p, detail::random_rational(q, rng));
            parent = detail::family_bindings(fam, q, fb);
        }
        if (!parent)
        {
            rep.failures.push_back("no admissible family parameters sampled");
            continue;
        }
        auto a = resolve(fam.parent_name, *parent, q);
        std::optional<Matrix> m;
        for (int attempt = 0; attempt < 1000 && !m; ++attempt)
        {
            auto b = fb;
            for (auto const &p : fam.pattern_params)
                b.insert_or_assign(p, detail::random_rational(q, rng));
            auto cand = detail::instantiate_pattern(pat, q, b);
            if (is_invertible(cand))
                m = std::move(cand);
        }
        if (!m)
        {
            rep.failures.push_back("no invertible pattern instance sampled");
            continue;
        }
        if (is_homomorphism({a, a, *m}))
            ++rep.samples_passed;
        else
            rep.failures.push_back("sample " + std::to_string(s) + " is not a homomorphism");
    }
    for (auto p : primes)
    {
        auto f = FieldSpec::prime(p);
        auto k = fam.family_params.size();
        for (std::uint64_t fi = 0; fi < gfp::power(p, k); ++fi)
        {
            auto fv = gfp::decode(fi, k, static_cast<gfp::Residue>(p));
            Bindings fb;
            std::string desc;
            for (std::size_t i = 0; i < k; ++i)
            {
                fb.insert_or_assign(fam.family_params[i], Scalar::from_residue(f, fv[i]));
                desc += (i ? "," : "") + fam.family_params[i] + "=" + std::to_string(fv[i]);
            }
            auto parent = detail::family_bindings(fam, f, fb);
            if (!parent)
                continue;
            auto a = resolve(fam.parent_name, *parent, f);
            AutFamilyReport::FieldCheck fc{p, desc};
            std::set<std::vector<gfp::Residue>> enumerated;
            for (auto &r : automorphism_residues(a))
                enumerated.insert(std::move(r));
            fc.enumerated = enumerated.size();
            std::set<std::vector<gfp::Residue>> from_pattern;
            auto np = fam.pattern_params.size();
            for (std::uint64_t pi = 0; pi < gfp::power(p, np); ++pi)
            {
                auto pv = gfp::decode(pi, np, static_cast<gfp::Residue>(p));
                auto b = fb;
                for (std::size_t i = 0; i < np; ++i)
                    b.insert_or_assign(fam.pattern_params[i], Scalar::from_residue(f, pv[i]));
                Matrix m;
                try
                {
                    m = detail::instantiate_pattern(pat, f, b);
                }
                catch (Error const &)
                {
                    continue;
                }
                if (!is_invertible(m))
                    continue;
                std::vector<gfp::Residue> r;
                for (std::size_t i = 0; i < m.rows(); ++i)
                    for (std::size_t j = 0; j < m.cols(); ++j)
                        r.push_back(static_cast<gfp::Residue>(m(i, j).residue()));
                from_pattern.insert(std::move(r));
            }
            fc.pattern = from_pattern.size();
            for (auto const &r : enumerated)
                if (!from_pattern.count(r))
                    ++fc.missing_from_pattern;
            for (auto const &r : from_pattern)
                if (!enumerated.count(r))
                    ++fc.not_automorphisms;
            rep.field_checks.push_back(std::move(fc));
        }
    }
    return rep;
}

} // namespace nilext
