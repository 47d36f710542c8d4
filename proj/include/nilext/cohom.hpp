#pragma once

#include "nilext/algebra.hpp"
#include "nilext/expr.hpp"

#include <regex>
#include <string>
#include <vector>

namespace nilext {

/// Scalar bilinear form sum m[i][j] Delta_ij, with Delta_ij(e_l, e_m) = [i=l][j=m].
class BilinearForm
{
public:
    BilinearForm() = default;
    BilinearForm(FieldSpec const &f, std::size_t n) : field_(f), dim_(n), m_(n * n, Scalar::zero(f)) {}

    static BilinearForm delta(FieldSpec const &f, std::size_t n, std::size_t i, std::size_t j)
    {
        BilinearForm b(f, n);
        b.at(i, j) = Scalar::one(f);
        return b;
    }

    /// From the row-major coefficient vector (i, j) -> i*n + j.
    static BilinearForm from_vector(FieldSpec const &f, std::size_t n, Vec const &v)
    {
        if (v.size() != n * n)
            throw Error("bilinear form vector has wrong length");
        BilinearForm b(f, n);
        b.m_ = v;
        return b;
    }

    FieldSpec const &field() const { return field_; }
    std::size_t dim() const { return dim_; }

    Scalar &at(std::size_t i, std::size_t j) { return m_.at(i * dim_ + j); }
    Scalar const &at(std::size_t i, std::size_t j) const { return m_.at(i * dim_ + j); }

    Vec const &vector() const { return m_; }

    Matrix matrix() const
    {
        Matrix m(field_, dim_, dim_);
        for (std::size_t i = 0; i < dim_; ++i)
            for (std::size_t j = 0; j < dim_; ++j)
                m(i, j) = at(i, j);
        return m;
    }

    static BilinearForm from_matrix(Matrix const &m)
    {
        BilinearForm b(m.field(), m.rows());
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j)
                b.at(i, j) = m(i, j);
        return b;
    }

    Scalar operator()(Vec const &x, Vec const &y) const
    {
        auto s = Scalar::zero(field_);
        for (std::size_t i = 0; i < dim_; ++i)
            for (std::size_t j = 0; j < dim_; ++j)
                if (!at(i, j).is_zero())
                    s += x[i] * at(i, j) * y[j];
        return s;
    }

    bool is_zero() const { return nilext::is_zero(m_); }

    friend BilinearForm operator+(BilinearForm a, BilinearForm const &b)
    {
        a.m_ = add(std::move(a.m_), b.m_);
        return a;
    }

    friend BilinearForm operator*(Scalar const &c, BilinearForm a)
    {
        a.m_ = scale(c, std::move(a.m_));
        return a;
    }

    friend bool operator==(BilinearForm const &a, BilinearForm const &b)
    {
        return a.field_ == b.field_ && a.dim_ == b.dim_ && a.m_ == b.m_;
    }

    /// "D(1,4) + 2*D(2,2)"; the zero form prints as "0".
    std::string to_string() const
    {
        std::string s;
        for (std::size_t i = 0; i < dim_; ++i)
            for (std::size_t j = 0; j < dim_; ++j)
            {
                auto const &c = at(i, j);
                if (c.is_zero())
                    continue;
                auto d = "D(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
                auto cs = c.to_string();
                bool negative = field_.is_rational() && sgn(c.rational()) < 0;
                if (negative)
                    cs = (-c).to_string();
                if (s.empty())
                    s += negative ? "-" : "";
                else
                    s += negative ? " - " : " + ";
                s += (cs == "1") ? d : cs + "*" + d;
            }
        return s.empty() ? "0" : s;
    }

private:
    FieldSpec field_;
    std::size_t dim_ = 0;
    Vec m_;
};

/// Parses "D(1,4) + 2*D(2,2) - lambda*D(3,1)" over `field`; coefficients are
/// expressions evaluated with `bindings`.
inline BilinearForm parse_form(std::string_view text, std::size_t n, FieldSpec const &field,
                               Bindings const &bindings = {})
{
    BilinearForm out(field, n);
    static std::regex const term_re(R"(^(.*?)\s*\*?\s*D\(\s*(\d+)\s*,\s*(\d+)\s*\)$)");
    auto terms = split_terms(text);
    if (terms.size() == 1 && terms[0] == "0")
        return out;
    for (auto const &t : terms)
    {
        std::smatch m;
        if (t.empty() || !std::regex_match(t, m, term_re))
            throw Error("malformed form term '" + t + "'");
        auto i = std::stoul(m[2]), j = std::stoul(m[3]);
        if (i < 1 || j < 1 || i > n || j > n)
            throw Error("form index out of range in '" + t + "'");
        std::string coeff = m[1];
        Scalar c = Scalar::one(field);
        if (coeff == "-")
            c = -c;
        else if (!coeff.empty())
            c = Expr::parse(coeff).eval(field, bindings);
        out.at(i - 1, j - 1) += c;
    }
    return out;
}

namespace detail {

inline std::vector<BilinearForm> forms_from_rows(FieldSpec const &f, std::size_t n, std::vector<Vec> const &rows)
{
    std::vector<BilinearForm> out;
    for (auto const &r : rows)
        out.push_back(BilinearForm::from_vector(f, n, r));
    return out;
}

} // namespace detail

/// Reduced echelon basis of Z^2: forms with theta(xy,z) = theta(xz,y) and
/// theta(x,yz) = theta(y,xz) on all basis triples.
inline std::vector<BilinearForm> cocycle_space(Algebra const &a)
{
    auto n = a.dim();
    auto const &f = a.field();
    auto col = [n](std::size_t i, std::size_t j) { return i * n + j; };
    std::vector<Vec> eqs;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
            {
                // sum_l c_ij^l m_lk - c_ik^l m_lj
                auto right = zero_vec(f, n * n);
                // sum_l c_jk^l m_il - c_ik^l m_jl
                auto left = zero_vec(f, n * n);
                for (std::size_t l = 0; l < n; ++l)
                {
                    right[col(l, k)] += a.coeff(i, j, l);
                    right[col(l, j)] -= a.coeff(i, k, l);
                    left[col(i, l)] += a.coeff(j, k, l);
                    left[col(j, l)] -= a.coeff(i, k, l);
                }
                if (!is_zero(right))
                    eqs.push_back(std::move(right));
                if (!is_zero(left))
                    eqs.push_back(std::move(left));
            }
    Subspace z(f, n * n, nullspace(f, std::move(eqs), n * n));
    return detail::forms_from_rows(f, n, z.basis());
}

/// delta f for the coordinate functional f = e_k^*: (i,j) -> c_ij^k.
inline BilinearForm coboundary(Algebra const &a, Vec const &functional)
{
    auto n = a.dim();
    BilinearForm b(a.field(), n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                if (!a.coeff(i, j, k).is_zero())
                    b.at(i, j) += a.coeff(i, j, k) * functional[k];
    return b;
}

/// Reduced echelon basis of B^2 = {delta f}.
inline std::vector<BilinearForm> coboundary_space(Algebra const &a)
{
    auto n = a.dim();
    std::vector<Vec> rows;
    for (std::size_t k = 0; k < n; ++k)
        rows.push_back(coboundary(a, unit_vec(a.field(), n, k)).vector());
    Subspace b(a.field(), n * n, std::move(rows));
    return detail::forms_from_rows(a.field(), n, b.basis());
}

inline Subspace span_of(FieldSpec const &f, std::size_t n, std::vector<BilinearForm> const &forms)
{
    std::vector<Vec> rows;
    for (auto const &b : forms)
        rows.push_back(b.vector());
    return Subspace(f, n * n, std::move(rows));
}

class CohomologyClass;

/// Z^2, B^2 and deterministic coset representatives of H^2 = Z^2 / B^2.
/// The representatives are the echelon rows of Z^2 whose pivots are not
/// pivots of B^2.
class CohomologySpace
{
public:
    CohomologySpace() = default;

    explicit CohomologySpace(Algebra const &a) : algebra_(a)
    {
        auto n = a.dim();
        z2_ = cocycle_space(a);
        b2_ = coboundary_space(a);
        z_span_ = span_of(a.field(), n, z2_);
        b_span_ = span_of(a.field(), n, b2_);
        if (!z_span_.contains(b_span_))
            throw PreconditionError("cohomology: B^2 is not contained in Z^2 (algebra not bicommutative?)");
        std::vector<bool> b_pivot(n * n, false);
        for (auto p : b_span_.pivots())
            b_pivot[p] = true;
        for (std::size_t r = 0; r < z2_.size(); ++r)
        {
            auto p = z_span_.pivots()[r];
            if (!b_pivot[p])
            {
                reps_.push_back(z2_[r]);
                rep_pivots_.push_back(p);
            }
        }
    }

    Algebra const &algebra() const { return algebra_; }
    std::vector<BilinearForm> const &z2() const { return z2_; }
    std::vector<BilinearForm> const &b2() const { return b2_; }
    std::vector<BilinearForm> const &h2_reps() const { return reps_; }
    Subspace const &z2_span() const { return z_span_; }
    Subspace const &b2_span() const { return b_span_; }
    std::size_t h2_dim() const { return reps_.size(); }

    bool is_cocycle(BilinearForm const &t) const { return z_span_.contains(t.vector()); }
    bool is_coboundary(BilinearForm const &t) const { return b_span_.contains(t.vector()); }

    /// Coordinates of [theta] over h2_reps.
    Vec class_coordinates(BilinearForm const &theta) const
    {
        if (!is_cocycle(theta))
            throw Error("class_coordinates: form is not a cocycle");
        auto v = b_span_.reduce(theta.vector());
        // v now vanishes on the B^2 pivots, so it is a combination of the
        // Z^2 echelon rows with pivots outside B^2, i.e. of the representatives
        Vec coords;
        for (std::size_t r = 0; r < reps_.size(); ++r)
        {
            auto c = v[rep_pivots_[r]];
            coords.push_back(c);
            if (!c.is_zero())
                axpy(v, -c, reps_[r].vector());
        }
        if (!nilext::is_zero(v))
            throw Error("class_coordinates: internal reduction failure");
        return coords;
    }

    BilinearForm form_of(Vec const &coords) const
    {
        if (coords.size() != reps_.size())
            throw Error("class coordinates have wrong length");
        BilinearForm t(algebra_.field(), algebra_.dim());
        for (std::size_t r = 0; r < reps_.size(); ++r)
            if (!coords[r].is_zero())
                t = t + coords[r] * reps_[r];
        return t;
    }

    /// Coordinates of [theta] over an arbitrary list of classes (given by
    /// cocycle representatives) that must be a basis of H^2.
    Vec coordinates_in(std::vector<BilinearForm> const &basis, BilinearForm const &theta) const
    {
        if (basis.size() != reps_.size())
            throw Error("coordinates_in: basis size differs from dim H^2");
        auto const &f = algebra_.field();
        auto h = reps_.size();
        std::vector<Vec> cols;
        for (auto const &b : basis)
            cols.push_back(class_coordinates(b));
        auto m = Matrix::from_columns(f, h, cols);
        auto inv = inverse(m);
        if (!inv)
            throw Error("coordinates_in: given classes are not a basis of H^2");
        return inv->apply(class_coordinates(theta));
    }

private:
    Algebra algebra_;
    std::vector<BilinearForm> z2_, b2_, reps_;
    std::vector<std::size_t> rep_pivots_;
    Subspace z_span_, b_span_;
};

inline CohomologySpace cohomology(Algebra const &a) { return CohomologySpace(a); }

/// An element of H^2 given by coordinates over CohomologySpace::h2_reps.
class CohomologyClass
{
public:
    CohomologyClass(CohomologySpace const &space, Vec coords) : space_(&space), coords_(std::move(coords))
    {
        if (coords_.size() != space.h2_dim())
            throw Error("cohomology class has wrong number of coordinates");
    }

    static CohomologyClass of(CohomologySpace const &space, BilinearForm const &theta)
    {
        return CohomologyClass(space, space.class_coordinates(theta));
    }

    CohomologySpace const &space() const { return *space_; }
    Vec const &coords() const { return coords_; }
    BilinearForm representative() const { return space_->form_of(coords_); }

    friend bool operator==(CohomologyClass const &a, CohomologyClass const &b) { return a.coords_ == b.coords_; }

private:
    CohomologySpace const *space_;
    Vec coords_;
};

/// Ann(theta_1) ∩ ... ∩ Ann(theta_s), Ann(t) = {x : t(x, A) + t(A, x) = 0}.
inline Subspace cocycle_annihilator(std::vector<BilinearForm> const &thetas, Algebra const &a)
{
    auto n = a.dim();
    std::vector<Vec> eqs;
    for (auto const &t : thetas)
    {
        if (t.dim() != n || !(t.field() == a.field()))
            throw Error("cocycle_annihilator: form does not match algebra");
        for (std::size_t j = 0; j < n; ++j)
        {
            Vec row, col;
            for (std::size_t i = 0; i < n; ++i)
            {
                row.push_back(t.at(i, j)); // t(x, e_j)
                col.push_back(t.at(j, i)); // t(e_j, x)
            }
            eqs.push_back(std::move(row));
            eqs.push_back(std::move(col));
        }
    }
    return Subspace(a.field(), n, nullspace(a.field(), std::move(eqs), n));
}

} // namespace nilext
