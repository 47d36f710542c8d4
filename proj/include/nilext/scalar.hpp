#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace nilext {

/// Base class for every error raised by the library.
class Error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/// Raised when a documented precondition of an operation does not hold.
class PreconditionError : public Error
{
public:
    using Error::Error;
};

inline bool is_prime(std::uint64_t p)
{
    if (p < 2)
        return false;
    for (std::uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0)
            return false;
    return true;
}

/// The base field: the rationals or a prime field GF(p).
struct FieldSpec
{
    enum class Kind
    {
        Rationals,
        PrimeField
    };

    Kind kind = Kind::Rationals;
    std::uint64_t p = 0;

    static FieldSpec rationals() { return {}; }

    static FieldSpec prime(std::uint64_t p)
    {
        if (!is_prime(p))
            throw Error("GF(" + std::to_string(p) + "): modulus is not prime");
        if (p > (std::uint64_t{1} << 32))
            throw Error("GF(p): modulus above 2^32 is not supported");
        return {Kind::PrimeField, p};
    }

    bool is_rational() const { return kind == Kind::Rationals; }
    bool is_prime_field() const { return kind == Kind::PrimeField; }

    std::string name() const
    {
        return is_rational() ? "Q" : "GF(" + std::to_string(p) + ")";
    }

    friend bool operator==(FieldSpec const &a, FieldSpec const &b)
    {
        return a.kind == b.kind && a.p == b.p;
    }
};

/// Parses "Q" or "GF(p)".
inline FieldSpec parse_field(std::string_view text)
{
    std::string t;
    for (char c : text)
        if (c != ' ')
            t += c;
    if (t == "Q" || t == "QQ")
        return FieldSpec::rationals();
    if (t.size() > 4 && t.rfind("GF(", 0) == 0 && t.back() == ')')
    {
        auto digits = t.substr(3, t.size() - 4);
        if (!digits.empty() && digits.find_first_not_of("0123456789") == std::string::npos &&
            digits.size() < 12)
            return FieldSpec::prime(std::stoull(digits));
    }
    throw Error("unknown field '" + std::string(text) + "' (expected Q or GF(p))");
}

/// An exact element of a FieldSpec. Rationals are kept as reduced fractions,
/// prime-field elements as the canonical residue in [0, p).
class Scalar
{
public:
    /// Zero over the rationals.
    Scalar() = default;

    Scalar(FieldSpec const &field, long value) : field_(field)
    {
        if (field_.is_rational())
            q_ = value;
        else
            r_ = reduce_signed(value);
    }

    Scalar(FieldSpec const &field, mpq_class value) : field_(field)
    {
        value.canonicalize();
        if (field_.is_rational())
        {
            q_ = std::move(value);
        }
        else
        {
            auto num = residue(value.get_num());
            auto den = residue(value.get_den());
            if (den == 0)
                throw Error("division by zero");
            r_ = mulmod(num, invmod(den));
        }
    }

    static Scalar zero(FieldSpec const &f) { return Scalar(f, 0L); }
    static Scalar one(FieldSpec const &f) { return Scalar(f, 1L); }

    /// Residue r taken modulo p (prime fields only).
    static Scalar from_residue(FieldSpec const &f, std::uint64_t r)
    {
        Scalar s(f, 0L);
        if (f.is_rational())
            s.q_ = mpz_class(std::to_string(r));
        else
            s.r_ = r % f.p;
        return s;
    }

    FieldSpec const &field() const { return field_; }

    bool is_zero() const { return field_.is_rational() ? sgn(q_) == 0 : r_ == 0; }
    bool is_one() const { return field_.is_rational() ? q_ == 1 : r_ == 1; }

    /// Canonical residue (prime fields only).
    std::uint64_t residue() const { return r_; }
    mpq_class const &rational() const { return q_; }

    friend Scalar operator+(Scalar const &a, Scalar const &b)
    {
        a.require_same(b);
        Scalar r(a.field_, 0L);
        if (a.field_.is_rational())
            r.q_ = a.q_ + b.q_;
        else
            r.r_ = (a.r_ + b.r_) % a.field_.p;
        return r;
    }

    friend Scalar operator-(Scalar const &a, Scalar const &b)
    {
        a.require_same(b);
        Scalar r(a.field_, 0L);
        if (a.field_.is_rational())
            r.q_ = a.q_ - b.q_;
        else
            r.r_ = (a.r_ + a.field_.p - b.r_) % a.field_.p;
        return r;
    }

    friend Scalar operator*(Scalar const &a, Scalar const &b)
    {
        a.require_same(b);
        Scalar r(a.field_, 0L);
        if (a.field_.is_rational())
            r.q_ = a.q_ * b.q_;
        else
            r.r_ = a.mulmod(a.r_, b.r_);
        return r;
    }

    friend Scalar operator/(Scalar const &a, Scalar const &b)
    {
        a.require_same(b);
        if (b.is_zero())
            throw Error("division by zero");
        Scalar r(a.field_, 0L);
        if (a.field_.is_rational())
            r.q_ = a.q_ / b.q_;
        else
            r.r_ = a.mulmod(a.r_, a.invmod(b.r_));
        return r;
    }

    Scalar operator-() const { return zero(field_) - *this; }

    Scalar &operator+=(Scalar const &o) { return *this = *this + o; }
    Scalar &operator-=(Scalar const &o) { return *this = *this - o; }
    Scalar &operator*=(Scalar const &o) { return *this = *this * o; }
    Scalar &operator/=(Scalar const &o) { return *this = *this / o; }

    Scalar inverse() const { return one(field_) / *this; }

    Scalar pow(long e) const
    {
        if (e < 0)
            return inverse().pow(-e);
        Scalar result = one(field_);
        Scalar base = *this;
        while (e > 0)
        {
            if (e & 1)
                result *= base;
            base *= base;
            e >>= 1;
        }
        return result;
    }

    friend bool operator==(Scalar const &a, Scalar const &b)
    {
        if (!(a.field_ == b.field_))
            return false;
        return a.field_.is_rational() ? a.q_ == b.q_ : a.r_ == b.r_;
    }

    /// Total order on canonical encodings (used only for deterministic sorting).
    friend bool operator<(Scalar const &a, Scalar const &b)
    {
        a.require_same(b);
        return a.field_.is_rational() ? a.q_ < b.q_ : a.r_ < b.r_;
    }

    std::string to_string() const
    {
        if (field_.is_rational())
            return q_.get_str();
        return std::to_string(r_);
    }

    friend std::ostream &operator<<(std::ostream &os, Scalar const &s) { return os << s.to_string(); }

private:
    FieldSpec field_;
    mpq_class q_;
    std::uint64_t r_ = 0;

    void require_same(Scalar const &o) const
    {
        if (!(field_ == o.field_))
            throw Error("field mismatch: " + field_.name() + " vs " + o.field_.name());
    }

    std::uint64_t reduce_signed(long v) const
    {
        auto p = static_cast<long long>(field_.p);
        long long m = static_cast<long long>(v) % p;
        if (m < 0)
            m += p;
        return static_cast<std::uint64_t>(m);
    }

    std::uint64_t residue(mpz_class const &z) const
    {
        mpz_class m = z % mpz_class(std::to_string(field_.p));
        if (m < 0)
            m += mpz_class(std::to_string(field_.p));
        return std::stoull(m.get_str());
    }

    std::uint64_t mulmod(std::uint64_t a, std::uint64_t b) const
    {
        return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % field_.p);
    }

    // extended Euclid; a is nonzero modulo p
    std::uint64_t invmod(std::uint64_t a) const
    {
        long long t = 0, new_t = 1;
        long long r = static_cast<long long>(field_.p), new_r = static_cast<long long>(a % field_.p);
        while (new_r != 0)
        {
            long long q = r / new_r;
            long long tmp = t - q * new_t;
            t = new_t;
            new_t = tmp;
            tmp = r - q * new_r;
            r = new_r;
            new_r = tmp;
        }
        if (r != 1)
            throw Error("division by zero");
        if (t < 0)
            t += static_cast<long long>(field_.p);
        return static_cast<std::uint64_t>(t);
    }
};

/// Parses an integer "-3" or a fraction "3/2" into the given field.
/// Floating point literals are rejected.
inline Scalar parse_scalar(std::string_view text, FieldSpec const &field)
{
    std::string t;
    for (char c : text)
        if (c != ' ')
            t += c;
    auto valid_int = [](std::string const &s) {
        std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
        return i < s.size() && s.find_first_not_of("0123456789", i) == std::string::npos;
    };
    auto slash = t.find('/');
    if (slash == std::string::npos)
    {
        if (!valid_int(t))
            throw Error("invalid scalar literal '" + std::string(text) + "'");
        return Scalar(field, mpq_class(mpz_class(t[0] == '+' ? t.substr(1) : t)));
    }
    auto num = t.substr(0, slash);
    auto den = t.substr(slash + 1);
    if (!valid_int(num) || den.empty() || den.find_first_not_of("0123456789") != std::string::npos)
        throw Error("invalid scalar literal '" + std::string(text) + "'");
    mpz_class n(num[0] == '+' ? num.substr(1) : num), d(den);
    if (d == 0)
        throw Error("division by zero");
    return Scalar(field, mpq_class(n, d));
}

/// Some r with r^n = a, if one exists in the field.
///
/// Over GF(p) the smallest residue is returned; the search is exhaustive and
/// limited to p <= 10^4. Over Q only exact rational roots are found.
inline std::optional<Scalar> nth_root(Scalar const &a, unsigned n)
{
    if (n == 0)
        throw PreconditionError("nth_root: n must be positive");
    auto const &f = a.field();
    if (f.is_prime_field())
    {
        if (f.p > 10000)
            throw PreconditionError("nth_root: exhaustive search limited to p <= 10^4");
        for (std::uint64_t r = 0; r < f.p; ++r)
        {
            auto c = Scalar::from_residue(f, r);
            if (c.pow(n) == a)
                return c;
        }
        return std::nullopt;
    }
    mpq_class q = a.rational();
    bool negative = sgn(q) < 0;
    if (negative && n % 2 == 0)
        return std::nullopt;
    mpz_class num = abs(q.get_num()), den = q.get_den();
    mpz_class rn, rd;
    if (mpz_root(rn.get_mpz_t(), num.get_mpz_t(), n) == 0)
        return std::nullopt;
    if (mpz_root(rd.get_mpz_t(), den.get_mpz_t(), n) == 0)
        return std::nullopt;
    mpq_class r(rn, rd);
    if (negative)
        r = -r;
    return Scalar(f, r);
}

} // namespace nilext
