#include "support.hpp"

#include <catch_amalgamated.hpp>

#include <random>
#include <tuple>

using namespace nilext;

namespace {

Algebra entry(std::string const &name, FieldSpec const &f, Bindings b = {})
{
    return instantiate(name, b, f);
}

Matrix random_matrix(FieldSpec const &f, std::size_t r, std::size_t c, std::mt19937_64 &rng)
{
    Matrix m(f, r, c);
    std::uniform_int_distribution<long> d(-3, 3);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j)
            if (rng() % 3)
                m(i, j) = Scalar(f, d(rng));
    return m;
}

} // namespace

TEST_CASE("prime field arithmetic agrees with integer arithmetic", "[scalars]")
{
    for (long p : {2, 3, 5, 7, 101})
    {
        auto f = FieldSpec::prime(p);
        for (long a = -6; a <= 6; ++a)
            for (long b = -6; b <= 6; ++b)
            {
                auto m = [p](long v) { return ((v % p) + p) % p; };
                Scalar x(f, a), y(f, b);
                CHECK((x + y).residue() == static_cast<std::uint64_t>(m(a + b)));
                CHECK((x - y).residue() == static_cast<std::uint64_t>(m(a - b)));
                CHECK((x * y).residue() == static_cast<std::uint64_t>(m(a * b)));
                if (m(b))
                {
                    auto q = (x / y).residue();
                    CHECK(static_cast<long>(q) * m(b) % p == m(a));
                }
            }
    }
}

TEST_CASE("rational arithmetic is exact", "[scalars]")
{
    auto q = FieldSpec::rationals();
    Scalar a(q, mpq_class(1, 3)), b(q, mpq_class(-2, 7));
    CHECK((a + b).rational() == mpq_class(1, 21));
    CHECK((a * b).rational() == mpq_class(-2, 21));
    CHECK((a / b).rational() == mpq_class(-7, 6));
    CHECK(a.pow(-2).rational() == 9);
    CHECK(b.inverse().rational() == mpq_class(-7, 2));
    CHECK_THROWS_AS(Scalar::zero(q).inverse(), Error);
}

TEST_CASE("scalar literals and fields parse", "[scalars]")
{
    CHECK(parse_field("Q") == FieldSpec::rationals());
    CHECK(parse_field("GF(7)") == FieldSpec::prime(7));
    CHECK_THROWS_AS(parse_field("GF(8)"), Error);
    CHECK(parse_scalar("1/2", FieldSpec::prime(5)).residue() == 3);
    CHECK(parse_scalar("-3/4", FieldSpec::rationals()).rational() == mpq_class(-3, 4));
    CHECK_THROWS_AS(parse_scalar("1/2", FieldSpec::prime(2)), Error);
}

TEST_CASE("rank-nullity and nullspace vectors", "[linalg]")
{
    std::mt19937_64 rng(11);
    for (auto f : {FieldSpec::rationals(), FieldSpec::prime(2), FieldSpec::prime(5)})
        for (int t = 0; t < 40; ++t)
        {
            std::size_t r = 1 + rng() % 5, c = 1 + rng() % 6;
            auto m = random_matrix(f, r, c, rng);
            auto null = nullspace(m);
            CHECK(rank(m) + null.size() == c);
            for (auto const &v : null)
                CHECK(is_zero(m.apply(v)));
        }
}

TEST_CASE("inverse matches a naive invertibility test over GF(p)", "[linalg]")
{
    std::mt19937_64 rng(12);
    for (int p : {2, 3, 5})
    {
        auto f = FieldSpec::prime(p);
        for (int t = 0; t < 60; ++t)
        {
            std::size_t n = 1 + rng() % 4;
            auto m = random_matrix(f, n, n, rng);
            std::vector<int> raw;
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    raw.push_back(static_cast<int>(m(i, j).residue()));
            auto inv = inverse(m);
            REQUIRE(inv.has_value() == naive::invertible(raw, static_cast<int>(n), p));
            if (inv)
            {
                auto prod = m * *inv;
                for (std::size_t i = 0; i < n; ++i)
                    for (std::size_t j = 0; j < n; ++j)
                        CHECK(prod(i, j) == (i == j ? Scalar::one(f) : Scalar::zero(f)));
            }
        }
    }
}

TEST_CASE("subspace sum and intersection dimensions", "[linalg]")
{
    std::mt19937_64 rng(13);
    auto f = FieldSpec::rationals();
    for (int t = 0; t < 40; ++t)
    {
        std::size_t n = 2 + rng() % 4;
        auto u = Subspace(f, n, [&] {
            std::vector<Vec> v;
            for (std::size_t i = 0, k = rng() % (n + 1); i < k; ++i)
                v.push_back(random_matrix(f, 1, n, rng).row(0));
            return v;
        }());
        auto w = Subspace(f, n, [&] {
            std::vector<Vec> v;
            for (std::size_t i = 0, k = rng() % (n + 1); i < k; ++i)
                v.push_back(random_matrix(f, 1, n, rng).row(0));
            return v;
        }());
        auto s = u.sum(w), x = u.intersect(w);
        CHECK(s.dim() + x.dim() == u.dim() + w.dim());
        CHECK(s.contains(u));
        CHECK(u.contains(x));
        CHECK(w.contains(x));
    }
}

TEST_CASE("coefficient expressions", "[expr]")
{
    auto q = FieldSpec::rationals();
    Bindings b{{"lambda", Scalar(q, 2L)}, {"mu", Scalar(q, mpq_class(1, 3))}};
    CHECK(Expr::parse("2*lambda - 1/mu").eval(q, b).rational() == 1);
    CHECK(Expr::parse("lambda^3 + (lambda - 1)").eval(q, b).rational() == 9);
    CHECK(Expr::parse("-lambda").eval(q, b).rational() == -2);
    CHECK(Expr::parse("lambda*mu").names() == std::set<std::string>{"lambda", "mu"});
    CHECK_THROWS_AS(Expr::parse("nu + 1").eval(q, b), UnboundName);
    CHECK_THROWS_AS(Expr::parse("1/(lambda-2)").eval(q, b), Error);
    try
    {
        Expr::parse("2 * * lambda");
        FAIL("no syntax error");
    }
    catch (SyntaxError const &e)
    {
        CHECK(e.column() == 5);
    }
}

TEST_CASE("bicommutativity checker agrees with brute force", "[algebra]")
{
    auto f = FieldSpec::prime(3);
    std::mt19937_64 rng(21);
    int positives = 0;
    for (int t = 0; t < 200; ++t)
    {
        Algebra a(f, 3);
        for (std::size_t c = 0; c < 27; ++c)
            if (rng() % 10 == 0)
                a.set_coeff(c / 9, c / 3 % 3, c % 3, Scalar(f, static_cast<long>(1 + rng() % 2)));
        bool expect = naive::bicommutative(naive::Alg::from(a));
        positives += expect;
        CHECK(is_bicommutative(a) == expect);
    }
    CHECK(positives > 0);
    CHECK(positives < 200);
}

TEST_CASE("identity violations match brute force", "[algebra]")
{
    auto f = FieldSpec::prime(2);
    for (std::uint64_t code = 0; code < 256; ++code)
    {
        auto d = naive::digits(code, 8, 2);
        Algebra a(f, 2);
        for (std::size_t t = 0; t < 8; ++t)
            a.set_coeff(t / 4, t / 2 % 2, t % 2, Scalar(f, static_cast<long>(d[t])));
        auto na = naive::Alg::from(a);
        std::set<std::tuple<int, int, int, int>> expect, got;
        for (int x = 0; x < 2; ++x)
            for (int y = 0; y < 2; ++y)
                for (int z = 0; z < 2; ++z)
                {
                    auto X = naive::unit(2, x), Y = naive::unit(2, y), Z = naive::unit(2, z);
                    if (na.mul(na.mul(X, Y), Z) != na.mul(na.mul(X, Z), Y))
                        expect.insert({0, x, y, z});
                    if (na.mul(X, na.mul(Y, Z)) != na.mul(Y, na.mul(X, Z)))
                        expect.insert({1, x, y, z});
                }
        for (auto const &v : check_bicommutative(a))
            got.insert({v.identity == IdentityViolation::Identity::RightCommutative ? 0 : 1, static_cast<int>(v.x),
                        static_cast<int>(v.y), static_cast<int>(v.z)});
        CHECK(got == expect);
    }
}

TEST_CASE("annihilator and one-generation agree with brute force", "[algebra]")
{
    auto f = FieldSpec::prime(2);
    for (auto const &name : list_entries())
    {
        auto const &e = catalog_entry(name);
        if (e.dim > 4)
            continue;
        for (auto const &b : valid_samples(e, f, {Scalar(f, 0L), Scalar(f, 1L)}))
        {
            auto a = instantiate(name, b, f);
            auto na = naive::Alg::from(a);
            std::size_t count = 0;
            for (std::uint64_t code = 0; code < naive::ipow(2, na.n); ++code)
            {
                auto x = naive::digits(code, na.n, 2);
                bool in = true;
                for (int j = 0; j < na.n; ++j)
                {
                    auto l = na.mul(x, naive::unit(na.n, j)), r = na.mul(naive::unit(na.n, j), x);
                    for (int k = 0; k < na.n; ++k)
                        in = in && !l[k] && !r[k];
                }
                count += in;
            }
            INFO(name << " " << bindings_to_string(b));
            CHECK(naive::ipow(2, static_cast<int>(annihilator(a).dim())) == count);
            CHECK(is_one_generated(a) == naive::one_generated(na));
        }
    }
}

TEST_CASE("Z2 and B2 dimensions agree with exhaustive counts", "[cohom]")
{
    struct Case
    {
        int p;
        std::size_t max_dim;
    };
    for (auto c : {Case{2, 4}, Case{3, 3}})
    {
        auto f = FieldSpec::prime(c.p);
        for (auto const &name : list_entries())
        {
            auto const &e = catalog_entry(name);
            if (e.dim > c.max_dim)
                continue;
            for (auto const &b : valid_samples(e, f, {Scalar(f, 0L), Scalar(f, 1L), Scalar(f, -1L)}))
            {
                auto a = instantiate(name, b, f);
                auto na = naive::Alg::from(a);
                auto space = cohomology(a);
                INFO(name << " over " << f.name() << " " << bindings_to_string(b));
                CHECK(naive::ipow(c.p, static_cast<int>(space.z2().size())) == naive::cocycles(na).size());
                CHECK(naive::ipow(c.p, static_cast<int>(space.b2().size())) == naive::coboundaries(na).size());
                CHECK(space.h2_dim() == space.z2().size() - space.b2().size());
            }
        }
    }
}

TEST_CASE("cocycle membership agrees with the defining identities", "[cohom]")
{
    auto f = FieldSpec::prime(3);
    auto a = entry("B4_03", f);
    auto na = naive::Alg::from(a);
    auto space = cohomology(a);
    std::mt19937_64 rng(31);
    for (int t = 0; t < 300; ++t)
    {
        BilinearForm th(f, 4);
        std::vector<int> raw(16);
        for (int k = 0; k < 16; ++k)
        {
            raw[k] = static_cast<int>(rng() % 3);
            if (rng() % 2)
                raw[k] = 0;
            th.at(k / 4, k % 4) = Scalar(f, static_cast<long>(raw[k]));
        }
        CHECK(space.is_cocycle(th) == naive::is_cocycle(na, raw));
    }
}

TEST_CASE("Delta forms evaluate on basis vectors", "[cohom]")
{
    auto q = FieldSpec::rationals();
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
        {
            auto d = BilinearForm::delta(q, 3, i, j);
            for (std::size_t k = 0; k < 3; ++k)
                for (std::size_t l = 0; l < 3; ++l)
                    CHECK(d(unit_vec(q, 3, k), unit_vec(q, 3, l)) ==
                          (k == i && l == j ? Scalar::one(q) : Scalar::zero(q)));
        }
    auto th = parse_form("2*D(1,2) - D(3,1)", 3, q, {});
    CHECK(th.at(0, 1).rational() == 2);
    CHECK(th.at(2, 0).rational() == -1);
}

TEST_CASE("class coordinates invert form_of", "[cohom]")
{
    auto q = FieldSpec::rationals();
    auto space = cohomology(entry("B5_03", q, {{"lambda", Scalar(q, 2L)}, {"mu", Scalar(q, mpq_class(1, 2))}}));
    REQUIRE(space.h2_dim() == 3);
    Vec c{Scalar(q, 1L), Scalar(q, -2L), Scalar(q, mpq_class(1, 3))};
    auto th = space.form_of(c);
    CHECK(space.class_coordinates(th) == c);
    auto shifted = BilinearForm::from_vector(q, 5, add(th.vector(), space.b2()[0].vector()));
    CHECK(space.class_coordinates(shifted) == c);
}
