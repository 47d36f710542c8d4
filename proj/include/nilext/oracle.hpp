#pragma once

// Brute-force ground truth: every structure-constant table of a tiny algebra,
// filtered by predicates and grouped into isomorphism classes by applying the
// whole of GL_n(GF(p)). Nothing here uses cohomology or generator images.

#include "nilext/extension.hpp"

#include <cmath>
#include <fstream>
#include <unordered_set>

namespace nilext {

struct EnumerationTask
{
    FieldSpec field = FieldSpec::prime(2);
    std::size_t dim = 2;
    bool bicommutative = true;
    bool nilpotent = true;
    bool one_generated = true;
    /// Relabels the basis of every enumerated table (e_i -> e_{perm[i]});
    /// empty means no relabeling. The result must not depend on it.
    std::vector<std::size_t> permutation;
    unsigned threads = 1;
    std::uint64_t chunk = std::uint64_t{1} << 20;
    std::string checkpoint; // file path; empty disables checkpointing
    bool force_generic = false;
};

struct OracleClass
{
    std::uint64_t code = 0; // lexicographically least table of the class
    Algebra algebra;
    std::uint64_t tables = 0; // number of tables in the class
};

struct OracleResult
{
    std::uint64_t total = 0, survivors = 0;
    std::vector<OracleClass> classes;
};

namespace oracle_detail {

using Table = std::vector<gfp::Residue>; // c[(i*n+j)*n+k]

inline std::uint64_t encode(Table const &t, std::uint64_t p)
{
    std::uint64_t code = 0;
    for (auto c : t)
        code = code * p + c;
    return code;
}

inline Table decode(std::uint64_t code, std::size_t len, std::uint64_t p)
{
    Table t(len);
    for (std::size_t d = len; d-- > 0;)
    {
        t[d] = static_cast<gfp::Residue>(code % p);
        code /= p;
    }
    return t;
}

inline Algebra to_algebra(Table const &t, std::size_t n, FieldSpec const &f)
{
    Algebra a(f, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                a.set_coeff(i, j, k, Scalar::from_residue(f, t[(i * n + j) * n + k]));
    return a;
}

inline Table from_algebra(Algebra const &a)
{
    auto n = a.dim();
    Table t(n * n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                t[(i * n + j) * n + k] = static_cast<gfp::Residue>(a.coeff(i, j, k).residue());
    return t;
}

struct GLElement
{
    std::vector<gfp::Residue> g, ginv; // row-major n x n, column i = image of e_i
};

/// GL_n(GF(p)) by exhaustive enumeration of matrices.
inline std::vector<GLElement> general_linear_group(std::size_t n, std::uint64_t p)
{
    auto f = FieldSpec::prime(p);
    std::vector<GLElement> out;
    auto total = gfp::power(p, n * n);
    if (total > 50'000'000)
        throw PreconditionError("general_linear_group: too many matrices");
    for (std::uint64_t idx = 0; idx < total; ++idx)
    {
        auto rest = idx;
        Matrix m(f, n, n);
        std::vector<gfp::Residue> g(n * n);
        for (std::size_t d = n * n; d-- > 0;)
        {
            g[d] = static_cast<gfp::Residue>(rest % p);
            rest /= p;
        }
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                m(i, j) = Scalar::from_residue(f, g[i * n + j]);
        auto inv = inverse(m);
        if (!inv)
            continue;
        std::vector<gfp::Residue> gi(n * n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                gi[i * n + j] = static_cast<gfp::Residue>((*inv)(i, j).residue());
        out.push_back({std::move(g), std::move(gi)});
    }
    return out;
}

/// The table of the same algebra in the basis g e_1, ..., g e_n:
/// c'[i][j] = g^{-1}((g e_i)(g e_j)).
inline Table transform(Table const &t, std::size_t n, std::uint64_t p, GLElement const &el)
{
    auto col = [&](std::size_t i) {
        std::vector<std::uint64_t> v(n);
        for (std::size_t r = 0; r < n; ++r)
            v[r] = el.g[r * n + i];
        return v;
    };
    Table out(n * n * n, 0);
    for (std::size_t i = 0; i < n; ++i)
    {
        auto x = col(i);
        for (std::size_t j = 0; j < n; ++j)
        {
            auto y = col(j);
            std::vector<std::uint64_t> prod(n, 0);
            for (std::size_t a = 0; a < n; ++a)
                for (std::size_t b = 0; b < n; ++b)
                {
                    auto xy = x[a] * y[b] % p;
                    if (!xy)
                        continue;
                    for (std::size_t k = 0; k < n; ++k)
                        prod[k] = (prod[k] + xy * t[(a * n + b) * n + k]) % p;
                }
            for (std::size_t k = 0; k < n; ++k)
            {
                std::uint64_t s = 0;
                for (std::size_t l = 0; l < n; ++l)
                    s = (s + std::uint64_t{el.ginv[k * n + l]} * prod[l]) % p;
                out[(i * n + j) * n + k] = static_cast<gfp::Residue>(s);
            }
        }
    }
    return out;
}

inline bool passes(Algebra const &a, EnumerationTask const &task, bool bicommutativity_known)
{
    if (task.bicommutative && !bicommutativity_known && !is_bicommutative(a))
        return false;
    bool nil = is_nilpotent(a);
    if ((task.nilpotent || task.one_generated) && !nil)
        return false;
    if (task.one_generated && (a.dim() == 0 || !is_one_generated(a)))
        return false;
    return true;
}

// GF(2) fast filter on bit-packed tables: P[i][j] is the mask of e_i e_j.
struct BitTable
{
    std::size_t n;
    std::uint32_t P[3][3];

    std::uint32_t mul_basis_left(std::size_t i, std::uint32_t v) const // e_i v
    {
        std::uint32_t r = 0;
        for (std::size_t l = 0; l < n; ++l)
            if (v >> l & 1)
                r ^= P[i][l];
        return r;
    }
    std::uint32_t mul_basis_right(std::uint32_t v, std::size_t k) const // v e_k
    {
        std::uint32_t r = 0;
        for (std::size_t l = 0; l < n; ++l)
            if (v >> l & 1)
                r ^= P[l][k];
        return r;
    }

    bool bicommutative() const
    {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t k = 0; k < n; ++k)
                {
                    if (mul_basis_right(P[i][j], k) != mul_basis_right(P[i][k], j))
                        return false;
                    if (mul_basis_left(i, P[j][k]) != mul_basis_left(j, P[i][k]))
                        return false;
                }
        return true;
    }
};

inline std::string task_header(EnumerationTask const &t)
{
    std::ostringstream os;
    os << "nilext-oracle-checkpoint " << t.field.name() << " " << t.dim << " " << t.bicommutative << t.nilpotent
       << t.one_generated << " " << t.chunk << " perm";
    for (auto x : t.permutation)
        os << " " << x;
    return os.str();
}

} // namespace oracle_detail

/// All tables of the task, filtered and grouped into isomorphism classes.
/// Classes are listed by increasing code of their least table.
inline OracleResult enumerate_bruteforce(EnumerationTask const &task)
{
    using namespace oracle_detail;
    if (!task.field.is_prime_field())
        throw PreconditionError("oracle: requires GF(p)");
    auto n = task.dim;
    auto p = task.field.p;
    auto len = n * n * n;
    if (n == 0 || n > 3)
        throw PreconditionError("oracle: dimension must be 1, 2 or 3");
    auto total = gfp::power(p, len);
    if (len * std::log2(static_cast<double>(p)) > 30.0 + 1e-9)
        throw PreconditionError("oracle: p^(n^3) exceeds 2^30");
    std::vector<std::size_t> perm = task.permutation;
    if (perm.empty())
        for (std::size_t i = 0; i < n; ++i)
            perm.push_back(i);
    if (perm.size() != n || std::set<std::size_t>(perm.begin(), perm.end()).size() != n ||
        *std::max_element(perm.begin(), perm.end()) >= n)
        throw Error("oracle: invalid basis permutation");
    // digit d of a code -> entry (perm i, perm j, perm k)
    std::vector<std::size_t> target(len);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                target[(i * n + j) * n + k] = (perm[i] * n + perm[j]) * n + perm[k];

    auto chunk = std::max<std::uint64_t>(1, task.chunk);
    auto chunks = (total + chunk - 1) / chunk;
    std::uint64_t next_chunk = 0;
    std::vector<std::uint64_t> survivors; // codes after relabeling
    auto header = task_header(task);
    if (!task.checkpoint.empty())
    {
        std::ifstream in(task.checkpoint);
        std::string line;
        if (in && std::getline(in, line) && line == header)
        {
            in >> next_chunk;
            std::uint64_t c;
            while (in >> c)
                survivors.push_back(c);
        }
    }

    bool fast = p == 2 && !task.force_generic;
    auto scan = [&](std::uint64_t lo, std::uint64_t hi, std::vector<std::uint64_t> &out) {
        for (auto code = lo; code < hi; ++code)
        {
            if (fast)
            {
                BitTable bt{n, {}};
                std::uint64_t relabeled = 0;
                for (std::size_t d = 0; d < len; ++d)
                {
                    if (!(code >> (len - 1 - d) & 1))
                        continue;
                    auto t = target[d];
                    bt.P[t / (n * n)][t / n % n] |= 1u << (t % n);
                    relabeled |= std::uint64_t{1} << (len - 1 - t);
                }
                if (task.bicommutative && !bt.bicommutative())
                    continue;
                if (!passes(to_algebra(decode(relabeled, len, 2), n, task.field), task, true))
                    continue;
                out.push_back(relabeled);
            }
            else
            {
                auto raw = decode(code, len, p);
                Table t(len);
                for (std::size_t d = 0; d < len; ++d)
                    t[target[d]] = raw[d];
                if (!passes(to_algebra(t, n, task.field), task, false))
                    continue;
                out.push_back(encode(t, p));
            }
        }
    };

    auto const batch = std::max<unsigned>(1, task.threads);
    while (next_chunk < chunks)
    {
        auto upto = std::min<std::uint64_t>(chunks, next_chunk + batch);
        std::vector<std::vector<std::uint64_t>> found(upto - next_chunk);
        parallel_blocks(upto - next_chunk, task.threads, upto - next_chunk,
                        [&](std::uint64_t b, std::uint64_t, std::uint64_t) {
                            auto c = next_chunk + b;
                            scan(c * chunk, std::min(total, (c + 1) * chunk), found[b]);
                        });
        for (auto &f : found)
            survivors.insert(survivors.end(), f.begin(), f.end());
        next_chunk = upto;
        if (!task.checkpoint.empty())
        {
            std::ofstream out(task.checkpoint, std::ios::trunc);
            out << header << "\n" << next_chunk << "\n";
            for (auto c : survivors)
                out << c << "\n";
        }
    }

    std::sort(survivors.begin(), survivors.end());
    OracleResult res;
    res.total = total;
    res.survivors = survivors.size();
    auto gl = general_linear_group(n, p);
    std::unordered_set<std::uint64_t> seen;
    for (auto code : survivors)
    {
        if (seen.count(code))
            continue;
        auto t = decode(code, len, p);
        std::set<std::uint64_t> orbit;
        for (auto const &g : gl)
            orbit.insert(encode(transform(t, n, p, g), p));
        if (*orbit.begin() != code)
            throw Error("oracle: class minimum was not met first");
        for (auto c : orbit)
        {
            if (!std::binary_search(survivors.begin(), survivors.end(), c))
                throw Error("oracle: predicates are not invariant under change of basis");
            seen.insert(c);
        }
        auto a = to_algebra(t, n, task.field);
        a.set_name("O" + std::to_string(n) + "_" + std::to_string(res.classes.size() + 1));
        res.classes.push_back({code, std::move(a), orbit.size()});
    }
    return res;
}

/// Least table code over all bases of a (dim <= 3 over GF(p)).
inline std::uint64_t canonical_code(Algebra const &a)
{
    using namespace oracle_detail;
    auto n = a.dim();
    auto p = a.field().p;
    auto t = from_algebra(a);
    std::uint64_t best = std::numeric_limits<std::uint64_t>::max();
    for (auto const &g : general_linear_group(n, p))
        best = std::min(best, encode(transform(t, n, p, g), p));
    return best;
}

struct PipelineClass
{
    Algebra algebra;
    std::string provenance;
};

/// One-generated nilpotent bicommutative algebras of dimension n over GF(p)
/// produced by the extension method: extensions of every class of dimension
/// m < n by the Aut-orbit representatives on T_{n-m}, starting from the
/// one-dimensional zero algebra.
inline std::vector<PipelineClass> pipeline_classes(std::size_t n, FieldSpec const &f, unsigned threads = 1)
{
    std::vector<std::vector<PipelineClass>> by_dim(n + 1);
    if (n == 0)
        return {};
    by_dim[1].push_back({zero_algebra(f, 1), "zero algebra"});
    by_dim[1][0].algebra.set_name("P1_1");
    for (std::size_t d = 2; d <= n; ++d)
        for (std::size_t m = 1; m < d; ++m)
            for (auto const &parent : by_dim[m])
            {
                auto s = d - m;
                if (s > cohomology(parent.algebra).h2_dim())
                    continue;
                auto rep = enumerate_orbits(parent.algebra, s, threads);
                for (std::size_t o = 0; o < rep.orbits.size(); ++o)
                {
                    auto ext = rep.orbits[o].extension;
                    ext.set_name("P" + std::to_string(d) + "_" + std::to_string(by_dim[d].size() + 1));
                    std::string prov = parent.algebra.name() + " s=" + std::to_string(s) + " orbit " +
                                       std::to_string(o + 1);
                    for (auto const &th : rep.orbits[o].forms)
                        prov += " [" + th.to_string() + "]";
                    by_dim[d].push_back({std::move(ext), prov});
                }
            }
    return by_dim[n];
}

struct CrossValidation
{
    std::size_t dim = 0;
    FieldSpec field;
    std::size_t oracle_classes = 0, pipeline_classes = 0;
    std::vector<std::string> matched, unmatched_oracle, unmatched_pipeline, duplicates;

    bool ok() const
    {
        return oracle_classes == pipeline_classes && unmatched_oracle.empty() && unmatched_pipeline.empty() &&
               duplicates.empty();
    }

    std::string to_string() const
    {
        std::ostringstream os;
        os << "cross-validation dim " << dim << " over " << field.name() << "\n";
        os << "oracle classes " << oracle_classes << " pipeline classes " << pipeline_classes << "\n";
        for (auto const &m : matched)
            os << "  match " << m << "\n";
        for (auto const &m : unmatched_oracle)
            os << "  unmatched oracle class " << m << "\n";
        for (auto const &m : unmatched_pipeline)
            os << "  unmatched pipeline class " << m << "\n";
        for (auto const &m : duplicates)
            os << "  duplicate pipeline classes " << m << "\n";
        os << (ok() ? "PASS" : "FAIL") << "\n";
        return os.str();
    }
};

inline CrossValidation cross_validate(std::size_t dim, FieldSpec const &f, unsigned threads = 1,
                                      std::string checkpoint = {})
{
    EnumerationTask task;
    task.field = f;
    task.dim = dim;
    task.threads = threads;
    task.checkpoint = std::move(checkpoint);
    auto oracle = enumerate_bruteforce(task);
    auto pipe = pipeline_classes(dim, f, threads);
    CrossValidation cv;
    cv.dim = dim;
    cv.field = f;
    cv.oracle_classes = oracle.classes.size();
    cv.pipeline_classes = pipe.size();
    std::map<std::uint64_t, std::size_t> oracle_index;
    for (std::size_t i = 0; i < oracle.classes.size(); ++i)
        oracle_index.emplace(oracle.classes[i].code, i);
    std::map<std::uint64_t, std::string> pipe_codes;
    std::set<std::size_t> hit;
    for (auto const &pc : pipe)
    {
        auto code = canonical_code(pc.algebra);
        auto desc = pc.algebra.name() + " (" + pc.provenance + ")";
        if (auto it = pipe_codes.find(code); it != pipe_codes.end())
            cv.duplicates.push_back(it->second + " and " + desc);
        pipe_codes.emplace(code, desc);
        auto it = oracle_index.find(code);
        if (it == oracle_index.end())
        {
            cv.unmatched_pipeline.push_back(desc);
            continue;
        }
        hit.insert(it->second);
        cv.matched.push_back(oracle.classes[it->second].algebra.name() + " code " + std::to_string(code) + " <-> " +
                             desc);
    }
    for (std::size_t i = 0; i < oracle.classes.size(); ++i)
        if (!hit.count(i))
            cv.unmatched_oracle.push_back(oracle.classes[i].algebra.name() + " code " +
                                          std::to_string(oracle.classes[i].code));
    return cv;
}

} // namespace nilext
