#include "support.hpp"

#include <catch_amalgamated.hpp>

using namespace nilext;

namespace {

ParseError parse_error(std::string const &text)
{
    try
    {
        parse_algebra(text);
    }
    catch (ParseError const &e)
    {
        return e;
    }
    FAIL("no parse error for:\n" << text);
    return ParseError("", 0, 0);
}

std::string header(std::string const &field = "Q", std::string const &extra = "")
{
    return "algebra T\ndim 3\nfield " + field + "\n" + extra + "table\n";
}

// Nonzero structure constants as (i, j, k) -> value text.
std::map<std::tuple<int, int, int>, std::string> table_of(Algebra const &a)
{
    std::map<std::tuple<int, int, int>, std::string> out;
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j)
            for (std::size_t k = 0; k < a.dim(); ++k)
                if (!a.coeff(i, j, k).is_zero())
                    out[{int(i + 1), int(j + 1), int(k + 1)}] = a.coeff(i, j, k).to_string();
    return out;
}

} // namespace

TEST_CASE("a five-line file parses to B5_06", "[format]")
{
    auto text = "algebra B5_06\n"
                "dim 5\n"
                "field Q\n"
                "table\n"
                "e1 e1 = e2\n"
                "e1 e2 = e5\n"
                "e2 e1 = e3\n"
                "e3 e1 = e4\n"
                "e4 e1 = e5\n"
                "end\n";
    auto a = parse_concrete_algebra(text);
    std::map<std::tuple<int, int, int>, std::string> expect{
        {{1, 1, 2}, "1"}, {{1, 2, 5}, "1"}, {{2, 1, 3}, "1"}, {{3, 1, 4}, "1"}, {{4, 1, 5}, "1"}};
    CHECK(table_of(a) == expect);
    CHECK(table_of(a) == table_of(instantiate("B5_06", {}, FieldSpec::rationals())));
}

TEST_CASE("parameters bind at instantiation", "[format]")
{
    auto pa = parse_algebra(header("Q", "params lambda\n") + "e1 e1 = e2\ne2 e1 = lambda e3\ne1 e2 = (lambda - 1)/2 e3\nend\n");
    REQUIRE(pa.params == std::vector<std::string>{"lambda"});
    auto q = FieldSpec::rationals();
    auto a = pa.instantiate({{"lambda", Scalar(q, 2L)}});
    CHECK(a.coeff(1, 0, 2).rational() == 2);
    CHECK(a.coeff(0, 1, 2).rational() == mpq_class(1, 2));
    CHECK_THROWS_AS(pa.instantiate({}), UnboundName);
    CHECK_THROWS_AS(pa.instantiate({{"lambda", Scalar(q, 1L)}, {"mu", Scalar(q, 1L)}}), Error);
}

TEST_CASE("parse errors carry line and column", "[format]")
{
    SECTION("1/2 over GF(2)")
    {
        auto e = parse_error(header("GF(2)") + "e1 e1 = 1/2 e2\nend\n");
        CHECK(e.line() == 5);
        CHECK(e.column() == 9);
    }
    SECTION("duplicate product")
    {
        auto e = parse_error(header() + "e1 e1 = e2\ne2 e1 = e3\ne1 e1 = e3\nend\n");
        CHECK(e.line() == 7);
        CHECK(std::string(e.what()).find("duplicate") != std::string::npos);
    }
    SECTION("index out of range")
    {
        auto e = parse_error(header() + "e1 e1 = e4\nend\n");
        CHECK(e.line() == 5);
        CHECK(e.column() == 9);
    }
    SECTION("left index out of range")
    {
        auto e = parse_error(header() + "e1 e7 = e2\nend\n");
        CHECK(e.column() == 5);
    }
    SECTION("unknown parameter")
    {
        auto e = parse_error(header("Q", "params lambda\n") + "e1 e1 = e2\ne2 e1 = mu e3\nend\n");
        CHECK(e.line() == 7);
        CHECK(e.column() == 9);
        CHECK(std::string(e.what()).find("mu") != std::string::npos);
    }
    SECTION("bad coefficient syntax")
    {
        auto e = parse_error(header() + "e1 e1 = 2 * * e2\nend\n");
        CHECK(e.line() == 5);
        CHECK(e.column() > 8);
    }
    SECTION("missing end")
    {
        auto e = parse_error(header() + "e1 e1 = e2\n");
        CHECK(e.line() == 6);
    }
    SECTION("unknown keyword")
    {
        auto e = parse_error("algebra T\nsize 3\n");
        CHECK(e.line() == 2);
        CHECK(e.column() == 1);
    }
    SECTION("text after end")
    {
        auto e = parse_error(header() + "e1 e1 = e2\nend\ne2 e1 = e3\n");
        CHECK(e.line() == 7);
    }
    SECTION("malformed product line")
    {
        auto e = parse_error(header() + "  e1 * e1 = e2\nend\n");
        CHECK(e.line() == 5);
        CHECK(e.column() == 3);
    }
}

TEST_CASE("comments, blank lines and signs", "[format]")
{
    auto a = parse_concrete_algebra(header("GF(5)") + "# comment\n\ne1 e1 = e2 - 2 e3\ne2 e1 = -e3\nend\n");
    CHECK(a.coeff(0, 0, 1).residue() == 1);
    CHECK(a.coeff(0, 0, 2).residue() == 3);
    CHECK(a.coeff(1, 0, 2).residue() == 4);
}

TEST_CASE("print and parse round-trip every catalog entry", "[format]")
{
    for (auto const &name : list_entries())
    {
        INFO(name);
        auto pa = catalog_table(catalog_entry(name));
        auto text = print_algebra(pa);
        auto again = parse_algebra(text);
        CHECK(print_algebra(again) == text);
        CHECK(again.params == pa.params);
        CHECK(again.products.size() == pa.products.size());
    }
    auto a = instantiate("B4_06", {{"lambda", Scalar(FieldSpec::prime(7), 3L)}}, FieldSpec::prime(7));
    CHECK(table_of(parse_concrete_algebra(print_algebra(a))) == table_of(a));
}

TEST_CASE("catalog sizes by dimension", "[catalog]")
{
    CHECK(list_entries().size() == 50);
    CHECK(list_entries(2).size() == 1);
    CHECK(list_entries(3).size() == 2);
    CHECK(list_entries(4).size() == 6);
    CHECK(list_entries(5).size() == 12);
    CHECK(list_entries(6).size() == 29);
}

TEST_CASE("catalog instantiation", "[catalog]")
{
    auto q = FieldSpec::rationals();
    auto b302 = instantiate("B3_02", {{"lambda", Scalar(q, 1L)}}, q);
    std::map<std::tuple<int, int, int>, std::string> expect{{{1, 1, 2}, "1"}, {{1, 2, 3}, "1"}, {{2, 1, 3}, "1"}};
    CHECK(table_of(b302) == expect);

    auto f5 = FieldSpec::prime(5);
    auto chain = instantiate("B5_07", {}, f5);
    std::map<std::tuple<int, int, int>, std::string> chain_expect{
        {{1, 1, 2}, "1"}, {{2, 1, 3}, "1"}, {{3, 1, 4}, "1"}, {{4, 1, 5}, "1"}};
    CHECK(table_of(chain) == chain_expect);

    CHECK_THROWS_AS(instantiate("B6_16", {{"lambda", Scalar(q, 0L)}}, q), ConstraintViolation);
    CHECK_NOTHROW(instantiate("B6_16", {{"lambda", Scalar(q, 2L)}}, q));
    CHECK_THROWS_AS(instantiate("B3_02", {}, q), UnboundName);
    CHECK_THROWS_AS(instantiate("B9_99", {}, q), Error);
}

TEST_CASE("catalog entries satisfy the defining predicates (brute force over GF(3))", "[catalog]")
{
    auto f = FieldSpec::prime(3);
    for (auto const &name : list_entries())
    {
        auto const &e = catalog_entry(name);
        for (auto const &b : valid_samples(e, f, {Scalar(f, 1L), Scalar(f, 2L)}))
        {
            INFO(name << bindings_to_string(b));
            auto na = naive::Alg::from(instantiate(name, b, f));
            CHECK(naive::bicommutative(na));
            if (e.dim <= 4)
                CHECK(naive::one_generated(na));
        }
    }
}

TEST_CASE("provenance reproduces entries bit-exactly", "[catalog]")
{
    auto q = FieldSpec::rationals();
    CHECK(provenance_check("B5_06", {}, q));
    CHECK(provenance_check("B6_22", {}, q));
    CHECK(provenance_check("B3_01", {}, q));
    CHECK(provenance_check("B6_16", {{"lambda", Scalar(q, mpq_class(1, 2))}}, q));

    auto spec = provenance_spec("B5_06", {}, q);
    CHECK(table_of(spec.parent) == table_of(instantiate("B4_03", {}, q)));
    REQUIRE(spec.theta.size() == 1);
    auto space = cohomology(spec.parent);
    CHECK(space.class_coordinates(spec.theta[0]) == space.class_coordinates(parse_form("D(1,2) + D(4,1)", 4, q, {})));

    auto b622 = provenance_spec("B6_22", {}, q);
    auto s5 = cohomology(b622.parent);
    CHECK(s5.class_coordinates(b622.theta[0]) == s5.class_coordinates(parse_form("D(5,1)", 5, q, {})));
}

TEST_CASE("provenance cocycle of B3_01 is recovered by decompose", "[catalog]")
{
    auto q = FieldSpec::rationals();
    auto spec = provenance_spec("B3_01", {}, q);
    auto d = decompose(instantiate("B3_01", {}, q));
    auto space = cohomology(spec.parent);
    CHECK(table_of(d.spec.parent) == table_of(spec.parent));
    CHECK(space.class_coordinates(d.spec.theta[0]) == space.class_coordinates(spec.theta[0]));
}

TEST_CASE("sampling skips constraint violations", "[catalog]")
{
    auto q = FieldSpec::rationals();
    auto pts = valid_samples(catalog_entry("B6_16"), q, rational_sample_values());
    CHECK(pts.size() == 4);
    for (auto const &b : pts)
        CHECK(!b.at("lambda").is_zero());
    CHECK(sample_points({"a", "b"}, rational_sample_values()).size() == 25);
}

TEST_CASE("verify report format", "[verify]")
{
    VerifyReport r;
    r.add("catalog", "B2_01 bicommutative", true, "true", "true");
    r.add("catalog", "B3_01 bicommutative", false, "true", "false");
    r.note("catalog", "sample note");
    auto s = r.to_string();
    CHECK(s.find("PASS catalog B2_01 bicommutative: expected true, computed true\n") != std::string::npos);
    CHECK(s.find("FAIL catalog B3_01 bicommutative: expected true, computed false\n") != std::string::npos);
    CHECK(s.find("NOTE catalog sample note\n") != std::string::npos);
    CHECK(s.find("summary catalog: 1/2 passed\n") != std::string::npos);
    CHECK(s.find("summary: 1/2 checks passed\n") != std::string::npos);
    CHECK(!r.ok());
}

TEST_CASE("dimension-four cohomology table matches", "[verify]")
{
    auto r = verify_cohomology(4);
    INFO(r.to_string());
    CHECK(r.ok());
    CHECK(r.checks.size() > 6);
}

TEST_CASE("catalog and provenance scopes pass", "[verify]")
{
    auto c = verify_catalog();
    INFO(c.to_string());
    CHECK(c.ok());
    auto p = verify_provenance();
    INFO(p.to_string());
    CHECK(p.ok());
}
