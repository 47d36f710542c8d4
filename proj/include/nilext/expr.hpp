#pragma once

#include "nilext/scalar.hpp"

#include <cctype>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace nilext {

using Bindings = std::map<std::string, Scalar>;

/// Raised by the expression parser; carries the 1-based column of the problem.
class SyntaxError : public Error
{
public:
    SyntaxError(std::string const &msg, std::size_t column)
        : Error(msg + " at column " + std::to_string(column)), column_(column)
    {
    }
    std::size_t column() const { return column_; }

private:
    std::size_t column_;
};

/// Raised when an expression refers to a name that has no binding.
class UnboundName : public Error
{
public:
    using Error::Error;
};

/// A parsed arithmetic expression over named parameters: integers, identifiers,
/// + - * / ^ (integer exponents) and parentheses.
class Expr
{
public:
    Expr() : Expr(parse("0")) {}

    static Expr parse(std::string_view text)
    {
        Parser p{text, 0};
        auto node = p.parse_sum();
        p.skip_ws();
        if (p.pos != text.size())
            throw SyntaxError("unexpected '" + std::string(1, text[p.pos]) + "'", p.pos + 1);
        return Expr(std::move(node), std::string(text));
    }

    static Expr constant(long v) { return parse(std::to_string(v)); }

    Scalar eval(FieldSpec const &f, Bindings const &b = {}) const { return eval(*root_, f, b); }

    std::set<std::string> names() const
    {
        std::set<std::string> out;
        collect(*root_, out);
        return out;
    }

    std::string const &text() const { return text_; }

private:
    struct Node
    {
        enum class Kind
        {
            Number,
            Name,
            Neg,
            Add,
            Sub,
            Mul,
            Div,
            Pow
        } kind;
        std::string value;
        long exponent = 0;
        std::shared_ptr<Node const> lhs, rhs;
    };
    using NodePtr = std::shared_ptr<Node const>;

    NodePtr root_;
    std::string text_;

    Expr(NodePtr n, std::string text) : root_(std::move(n)), text_(std::move(text)) {}

    struct Parser
    {
        std::string_view s;
        std::size_t pos;

        void skip_ws()
        {
            while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])))
                ++pos;
        }

        bool eat(char c)
        {
            skip_ws();
            if (pos < s.size() && s[pos] == c)
            {
                ++pos;
                return true;
            }
            return false;
        }

        static NodePtr make(Node::Kind k, NodePtr l, NodePtr r)
        {
            auto n = std::make_shared<Node>();
            n->kind = k;
            n->lhs = std::move(l);
            n->rhs = std::move(r);
            return n;
        }

        NodePtr parse_sum()
        {
            auto lhs = parse_product();
            for (;;)
            {
                if (eat('+'))
                    lhs = make(Node::Kind::Add, lhs, parse_product());
                else if (eat('-'))
                    lhs = make(Node::Kind::Sub, lhs, parse_product());
                else
                    return lhs;
            }
        }

        NodePtr parse_product()
        {
            auto lhs = parse_unary();
            for (;;)
            {
                if (eat('*'))
                    lhs = make(Node::Kind::Mul, lhs, parse_unary());
                else if (eat('/'))
                    lhs = make(Node::Kind::Div, lhs, parse_unary());
                else
                    return lhs;
            }
        }

        NodePtr parse_unary()
        {
            if (eat('-'))
                return make(Node::Kind::Neg, parse_unary(), nullptr);
            if (eat('+'))
                return parse_unary();
            return parse_power();
        }

        NodePtr parse_power()
        {
            auto base = parse_atom();
            if (eat('^'))
            {
                skip_ws();
                bool neg = eat('-');
                skip_ws();
                auto start = pos;
                while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
                    ++pos;
                if (start == pos)
                    throw SyntaxError("expected integer exponent", pos + 1);
                auto n = std::make_shared<Node>();
                n->kind = Node::Kind::Pow;
                n->exponent = std::stol(std::string(s.substr(start, pos - start)));
                if (neg)
                    n->exponent = -n->exponent;
                n->lhs = base;
                return n;
            }
            return base;
        }

        NodePtr parse_atom()
        {
            skip_ws();
            if (pos >= s.size())
                throw SyntaxError("unexpected end of expression", pos + 1);
            char c = s[pos];
            if (c == '(')
            {
                ++pos;
                auto inner = parse_sum();
                if (!eat(')'))
                    throw SyntaxError("expected ')'", pos + 1);
                return inner;
            }
            auto n = std::make_shared<Node>();
            auto start = pos;
            if (std::isdigit(static_cast<unsigned char>(c)))
            {
                while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
                    ++pos;
                if (pos < s.size() && s[pos] == '.')
                    throw SyntaxError("floating point literals are not accepted", pos + 1);
                n->kind = Node::Kind::Number;
            }
            else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_')
            {
                while (pos < s.size() && (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
                    ++pos;
                n->kind = Node::Kind::Name;
            }
            else
            {
                throw SyntaxError("unexpected '" + std::string(1, c) + "'", pos + 1);
            }
            n->value = std::string(s.substr(start, pos - start));
            return n;
        }
    };

    static Scalar eval(Node const &n, FieldSpec const &f, Bindings const &b)
    {
        switch (n.kind)
        {
        case Node::Kind::Number:
            return parse_scalar(n.value, f);
        case Node::Kind::Name: {
            auto it = b.find(n.value);
            if (it == b.end())
                throw UnboundName("unbound name '" + n.value + "'");
            if (!(it->second.field() == f))
                throw Error("binding for '" + n.value + "' is over the wrong field");
            return it->second;
        }
        case Node::Kind::Neg:
            return -eval(*n.lhs, f, b);
        case Node::Kind::Add:
            return eval(*n.lhs, f, b) + eval(*n.rhs, f, b);
        case Node::Kind::Sub:
            return eval(*n.lhs, f, b) - eval(*n.rhs, f, b);
        case Node::Kind::Mul:
            return eval(*n.lhs, f, b) * eval(*n.rhs, f, b);
        case Node::Kind::Div:
            return eval(*n.lhs, f, b) / eval(*n.rhs, f, b);
        case Node::Kind::Pow:
            return eval(*n.lhs, f, b).pow(n.exponent);
        }
        throw Error("corrupt expression");
    }

    static void collect(Node const &n, std::set<std::string> &out)
    {
        if (n.kind == Node::Kind::Name)
            out.insert(n.value);
        if (n.lhs)
            collect(*n.lhs, out);
        if (n.rhs)
            collect(*n.rhs, out);
    }
};

/// Splits "a + b - c" at top-level additive operators. Each piece keeps its
/// sign as a leading "-" when negative. Binary minus is recognised only after
/// an operand, so "1/-2" or "-x" are left intact.
inline std::vector<std::string> split_terms(std::string_view text)
{
    std::vector<std::string> terms;
    std::string cur;
    int depth = 0;
    char last = 0; // last non-space character of the current term
    for (char c : text)
    {
        if (c == '(')
            ++depth;
        if (c == ')')
            --depth;
        bool after_operand = last != 0 && last != '*' && last != '/' && last != '^' && last != '(' &&
                             last != '+' && last != '-';
        if (depth == 0 && (c == '+' || c == '-') && after_operand)
        {
            terms.push_back(cur);
            cur = (c == '-') ? "-" : "";
            last = 0;
            continue;
        }
        cur += c;
        if (!std::isspace(static_cast<unsigned char>(c)))
            last = c;
    }
    terms.push_back(cur);
    for (auto &t : terms)
    {
        auto b = t.find_first_not_of(" \t");
        auto e = t.find_last_not_of(" \t");
        t = (b == std::string::npos) ? "" : t.substr(b, e - b + 1);
    }
    return terms;
}

} // namespace nilext
