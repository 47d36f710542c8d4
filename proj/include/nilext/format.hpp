#pragma once

// Plain-text algebra files:
//
//   algebra B5_06
//   dim 5
//   field Q
//   params lambda        (optional)
//   table
//   e1 e1 = e2
//   e2 e1 = lambda e3 + e4
//   end
//
// Omitted products are zero. '#' starts a comment line.

#include "nilext/algebra.hpp"
#include "nilext/expr.hpp"

#include <regex>
#include <sstream>

namespace nilext {

class ParseError : public Error
{
public:
    ParseError(std::string const &msg, std::size_t line, std::size_t column)
        : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + msg), line_(line),
          column_(column)
    {
    }
    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    std::size_t line_, column_;
};

/// Raised when parameter values violate an entry's constraints.
class ConstraintViolation : public Error
{
public:
    using Error::Error;
};

struct ProductLine
{
    std::size_t i, j; // 0-based
    std::vector<std::pair<std::size_t, Expr>> terms;
};

/// A multiplication table whose coefficients may mention parameters.
struct ParametricAlgebra
{
    std::string name;
    std::size_t dim = 0;
    FieldSpec field;
    std::vector<std::string> params;
    std::vector<ProductLine> products;

    Algebra instantiate(Bindings const &b, std::optional<FieldSpec> over = std::nullopt) const
    {
        auto f = over.value_or(field);
        for (auto const &p : params)
            if (!b.count(p))
                throw UnboundName("parameter '" + p + "' is not bound");
        for (auto const &[k, v] : b)
            if (std::find(params.begin(), params.end(), k) == params.end())
                throw Error("'" + k + "' is not a parameter of " + name);
        Algebra a(f, dim, name);
        for (auto const &pl : products)
            for (auto const &[k, e] : pl.terms)
            {
                Scalar c;
                try
                {
                    c = e.eval(f, b);
                }
                catch (UnboundName const &)
                {
                    throw;
                }
                catch (Error const &err)
                {
                    throw ConstraintViolation(name + ": coefficient '" + e.text() + "': " + err.what());
                }
                a.set_coeff(pl.i, pl.j, k, a.coeff(pl.i, pl.j, k) + c);
            }
        return a;
    }
};

namespace detail {

inline std::string trim(std::string const &s)
{
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos)
        return "";
    auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

/// Parses "e<i> e<j> = <coeff> e<k> [+ ...]". Columns in errors are 1-based
/// positions within `line`; `line_no` is passed through to ParseError.
inline ProductLine parse_product_line(std::string const &line, std::size_t dim,
                                      std::vector<std::string> const &params, std::size_t line_no,
                                      FieldSpec const *field = nullptr)
{
    static std::regex const lhs_re(R"(^\s*e(\d+)\s+e(\d+)\s*=)");
    std::smatch m;
    if (!std::regex_search(line, m, lhs_re))
        throw ParseError("expected 'e<i> e<j> = ...'", line_no, line.find_first_not_of(" \t") + 1);
    auto index = [&](std::string const &s, std::size_t col) {
        auto v = std::stoul(s);
        if (v < 1 || v > dim)
            throw ParseError("basis index e" + s + " out of range 1.." + std::to_string(dim), line_no, col);
        return static_cast<std::size_t>(v - 1);
    };
    ProductLine pl{index(m[1], m.position(1) + 1), index(m[2], m.position(2) + 1), {}};
    auto rhs_start = static_cast<std::size_t>(m.position(0) + m.length(0));
    auto rhs = line.substr(rhs_start);
    if (trim(rhs).empty())
        throw ParseError("missing right-hand side", line_no, rhs_start + 1);
    static std::regex const term_re(R"(^(.*?)\s*\*?\s*e(\d+)$)");
    std::size_t search_from = 0;
    for (auto const &term : split_terms(rhs))
    {
        auto pos = rhs.find(term.empty() ? std::string(" ") : term.substr(0, 1), search_from);
        auto col = rhs_start + (pos == std::string::npos ? 0 : pos) + 1;
        if (pos != std::string::npos)
            search_from = pos + 1;
        std::smatch tm;
        if (term.empty() || !std::regex_match(term, tm, term_re))
            throw ParseError("expected '<coefficient> e<k>', got '" + term + "'", line_no, col);
        auto k = index(tm[2], col);
        auto coeff = trim(tm[1]);
        if (coeff.empty() || coeff == "+")
            coeff = "1";
        else if (coeff == "-")
            coeff = "-1";
        Expr e;
        try
        {
            e = Expr::parse(coeff);
        }
        catch (SyntaxError const &err)
        {
            throw ParseError(std::string("bad coefficient: ") + err.what(), line_no, col + err.column() - 1);
        }
        for (auto const &nm : e.names())
            if (std::find(params.begin(), params.end(), nm) == params.end())
                throw ParseError("unknown parameter '" + nm + "'", line_no, col);
        if (field && e.names().empty())
        {
            try
            {
                e.eval(*field);
            }
            catch (Error const &err)
            {
                throw ParseError("coefficient '" + e.text() + "': " + err.what(), line_no, col);
            }
        }
        pl.terms.emplace_back(k, std::move(e));
    }
    return pl;
}

} // namespace detail

inline ParametricAlgebra parse_algebra(std::string const &text)
{
    ParametricAlgebra pa;
    std::istringstream in(text);
    std::string raw;
    std::size_t line_no = 0;
    enum
    {
        Header,
        Table,
        Done
    } state = Header;
    bool have_name = false, have_dim = false, have_field = false;
    std::set<std::pair<std::size_t, std::size_t>> seen;
    while (std::getline(in, raw))
    {
        ++line_no;
        auto line = detail::trim(raw);
        if (line.empty() || line[0] == '#')
            continue;
        auto col = raw.find_first_not_of(" \t") + 1;
        if (state == Done)
            throw ParseError("text after 'end'", line_no, col);
        if (state == Table)
        {
            if (line == "end")
            {
                state = Done;
                continue;
            }
            auto pl = detail::parse_product_line(raw, pa.dim, pa.params, line_no, &pa.field);
            if (!seen.insert({pl.i, pl.j}).second)
                throw ParseError("duplicate product e" + std::to_string(pl.i + 1) + " e" + std::to_string(pl.j + 1),
                                 line_no, col);
            pa.products.push_back(std::move(pl));
            continue;
        }
        std::istringstream words(line);
        std::string key;
        words >> key;
        std::string rest;
        std::getline(words, rest);
        rest = detail::trim(rest);
        if (key == "algebra")
        {
            if (rest.empty() || rest.find_first_of(" \t") != std::string::npos)
                throw ParseError("expected 'algebra <name>'", line_no, col);
            pa.name = rest;
            have_name = true;
        }
        else if (key == "dim")
        {
            if (rest.empty() || rest.find_first_not_of("0123456789") != std::string::npos)
                throw ParseError("expected 'dim <n>'", line_no, col);
            pa.dim = std::stoul(rest);
            have_dim = true;
        }
        else if (key == "field")
        {
            try
            {
                pa.field = parse_field(rest);
            }
            catch (Error const &err)
            {
                throw ParseError(err.what(), line_no, col);
            }
            have_field = true;
        }
        else if (key == "params")
        {
            std::replace(rest.begin(), rest.end(), ',', ' ');
            std::istringstream ps(rest);
            std::string p;
            static std::regex const ident(R"([A-Za-z_][A-Za-z0-9_]*)");
            while (ps >> p)
            {
                if (!std::regex_match(p, ident))
                    throw ParseError("bad parameter name '" + p + "'", line_no, col);
                pa.params.push_back(p);
            }
        }
        else if (key == "table")
        {
            if (!have_name || !have_dim || !have_field)
                throw ParseError("'table' before 'algebra', 'dim' and 'field'", line_no, col);
            state = Table;
        }
        else
        {
            throw ParseError("unknown keyword '" + key + "'", line_no, col);
        }
    }
    if (state != Done)
        throw ParseError("missing 'end'", line_no + 1, 1);
    return pa;
}

namespace detail {

inline std::string coefficient_text(std::string const &c)
{
    static std::regex const simple(R"(^-?[A-Za-z0-9_/]+$)");
    if (c == "1")
        return "";
    if (c == "-1")
        return "-";
    if (std::regex_match(c, simple))
        return c + " ";
    return "(" + c + ") ";
}

inline std::string join_terms(std::vector<std::pair<std::size_t, std::string>> const &terms)
{
    std::string s;
    for (std::size_t t = 0; t < terms.size(); ++t)
    {
        auto c = coefficient_text(terms[t].second);
        if (t)
        {
            if (!c.empty() && c[0] == '-')
            {
                s += " - ";
                c = c.substr(1);
                if (c == " ")
                    c.clear();
            }
            else
                s += " + ";
        }
        s += c + "e" + std::to_string(terms[t].first + 1);
    }
    return s;
}

} // namespace detail

inline std::string print_algebra(ParametricAlgebra const &pa)
{
    std::ostringstream os;
    os << "algebra " << (pa.name.empty() ? "A" : pa.name) << "\n";
    os << "dim " << pa.dim << "\n";
    os << "field " << pa.field.name() << "\n";
    if (!pa.params.empty())
    {
        os << "params";
        for (auto const &p : pa.params)
            os << " " << p;
        os << "\n";
    }
    os << "table\n";
    for (auto const &pl : pa.products)
    {
        std::vector<std::pair<std::size_t, std::string>> terms;
        for (auto const &[k, e] : pl.terms)
            terms.emplace_back(k, e.text());
        os << "e" << pl.i + 1 << " e" << pl.j + 1 << " = " << detail::join_terms(terms) << "\n";
    }
    os << "end\n";
    return os.str();
}

inline std::string print_algebra(Algebra const &a)
{
    std::ostringstream os;
    os << "algebra " << (a.name().empty() ? "A" : a.name()) << "\n";
    os << "dim " << a.dim() << "\n";
    os << "field " << a.field().name() << "\n";
    os << "table\n";
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j)
        {
            std::vector<std::pair<std::size_t, std::string>> terms;
            for (std::size_t k = 0; k < a.dim(); ++k)
                if (!a.coeff(i, j, k).is_zero())
                    terms.emplace_back(k, a.coeff(i, j, k).to_string());
            if (!terms.empty())
                os << "e" << i + 1 << " e" << j + 1 << " = " << detail::join_terms(terms) << "\n";
        }
    os << "end\n";
    return os.str();
}

/// Parses a file without parameters straight to an Algebra.
inline Algebra parse_concrete_algebra(std::string const &text)
{
    auto pa = parse_algebra(text);
    if (!pa.params.empty())
        throw Error("algebra '" + pa.name + "' has parameters; bind them first");
    return pa.instantiate({});
}

} // namespace nilext
