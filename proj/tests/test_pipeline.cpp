#include "support.hpp"

#include <catch_amalgamated.hpp>

#include <cstdio>
#include <filesystem>
#include <random>

using namespace nilext;

namespace {

struct Inst
{
    std::string label;
    Algebra algebra;
};

std::vector<Inst> small_instances(FieldSpec const &f, std::size_t max_dim)
{
    std::vector<Inst> out;
    for (auto const &name : list_entries())
    {
        auto const &e = catalog_entry(name);
        if (e.dim > max_dim)
            continue;
        std::vector<Scalar> vals;
        for (std::uint64_t r = 0; r < f.p; ++r)
            vals.push_back(Scalar::from_residue(f, r));
        for (auto const &b : valid_samples(e, f, vals))
            out.push_back({name + bindings_to_string(b), instantiate(name, b, f)});
    }
    return out;
}

std::set<std::vector<int>> residue_set(std::vector<Morphism> const &ms)
{
    std::set<std::vector<int>> out;
    for (auto const &m : ms)
        out.insert(naive::residues(m.matrix));
    return out;
}

} // namespace

TEST_CASE("automorphism groups equal exhaustive GL enumeration", "[morphism]")
{
    struct Case
    {
        int p;
        std::size_t max_dim;
    };
    for (auto c : {Case{2, 4}, Case{3, 3}, Case{5, 2}})
        for (auto const &inst : small_instances(FieldSpec::prime(c.p), c.max_dim))
        {
            INFO(inst.label << " over GF(" << c.p << ")");
            auto na = naive::Alg::from(inst.algebra);
            auto expect = naive::isomorphisms(na, na);
            auto got = enumerate_automorphisms(inst.algebra);
            CHECK(got.size() == expect.size());
            CHECK(residue_set(got) == std::set<std::vector<int>>(expect.begin(), expect.end()));
        }
}

TEST_CASE("automorphism counts from the documented examples", "[morphism]")
{
    CHECK(enumerate_automorphisms(instantiate("B4_03", {}, FieldSpec::prime(3))).size() == 54);
    CHECK(enumerate_automorphisms(zero_algebra(FieldSpec::prime(5), 1)).size() == 4);
    auto b201 = instantiate("B2_01", {}, FieldSpec::prime(2));
    auto na = naive::Alg::from(b201);
    CHECK(enumerate_automorphisms(b201).size() == naive::isomorphisms(na, na).size());
    CHECK_THROWS_AS(enumerate_automorphisms(instantiate("B2_01", {}, FieldSpec::rationals())), PreconditionError);
}

TEST_CASE("act_on_form is phi^T M phi", "[morphism]")
{
    std::mt19937_64 rng(41);
    auto f = FieldSpec::prime(5);
    auto a = instantiate("B4_03", {}, f);
    auto autos = enumerate_automorphisms(a);
    for (int t = 0; t < 30; ++t)
    {
        auto const &phi = autos[rng() % autos.size()];
        std::vector<int> raw(16);
        BilinearForm th(f, 4);
        for (int k = 0; k < 16; ++k)
        {
            raw[k] = static_cast<int>(rng() % 5);
            th.at(k / 4, k % 4) = Scalar(f, static_cast<long>(raw[k]));
        }
        auto got = act_on_form(phi, th);
        auto expect = naive::act(naive::residues(phi.matrix), 4, 5, raw);
        for (int k = 0; k < 16; ++k)
            CHECK(got.at(k / 4, k % 4).residue() == static_cast<std::uint64_t>(expect[k]));
    }
    auto q = FieldSpec::rationals();
    auto th = BilinearForm::delta(q, 4, 0, 1);
    CHECK(act_on_form(identity_morphism(instantiate("B4_03", {}, q)), th).vector() == th.vector());
}

TEST_CASE("B4_03 action on classes scales by x^3 and x^5", "[morphism]")
{
    auto q = FieldSpec::rationals();
    auto a = instantiate("B4_03", {}, q);
    auto ext = extend_generator_image(a, a, scale(Scalar(q, 2L), unit_vec(q, 4, 0)));
    REQUIRE(ext.has_value());
    auto space = cohomology(a);
    auto d12 = space.class_coordinates(parse_form("D(1,2)", 4, q, {}));
    auto d41 = space.class_coordinates(parse_form("D(4,1)", 4, q, {}));
    CHECK(space.class_coordinates(act_on_form(*ext, parse_form("D(1,2)", 4, q, {}))) == scale(Scalar(q, 8L), d12));
    CHECK(space.class_coordinates(act_on_form(*ext, parse_form("D(4,1)", 4, q, {}))) == scale(Scalar(q, 32L), d41));
}

TEST_CASE("isomorphism test agrees with exhaustive search and is symmetric", "[morphism]")
{
    std::mt19937_64 rng(42);
    auto f = FieldSpec::prime(2);
    auto pool = small_instances(f, 4);
    std::erase_if(pool, [](Inst const &i) { return i.algebra.dim() != 4; });
    REQUIRE(pool.size() >= 4);
    int yes = 0, no = 0;
    for (int t = 0; t < 30; ++t)
    {
        auto const &x = pool[rng() % pool.size()];
        auto na = naive::Alg::from(x.algebra);
        naive::Alg nb;
        std::string label;
        if (t % 2)
        {
            auto [m, inv] = naive::random_gl(4, 2, rng);
            nb = naive::transport(na, m, inv);
            label = "transported " + x.label;
        }
        else
        {
            auto const &y = pool[rng() % pool.size()];
            nb = naive::Alg::from(y.algebra);
            label = y.label;
        }
        auto b = naive::to_algebra(nb);
        bool expect = !naive::isomorphisms(na, nb).empty();
        INFO(x.label << " vs " << label);
        auto ab = is_isomorphic(x.algebra, b), ba = is_isomorphic(b, x.algebra);
        CHECK(ab.answer == (expect ? IsoAnswer::Yes : IsoAnswer::No));
        CHECK(ba.answer == ab.answer);
        if (ab.answer == IsoAnswer::Yes)
        {
            REQUIRE(ab.witness.has_value());
            CHECK(naive::is_isomorphism(na, nb, naive::residues(ab.witness->matrix)));
            REQUIRE(ba.witness.has_value());
            CHECK(naive::is_isomorphism(nb, na, naive::residues(ba.witness->matrix)));
        }
        (expect ? yes : no)++;
    }
    CHECK(yes > 0);
    CHECK(no > 0);
}

TEST_CASE("isomorphism over Q finds witnesses for rescaled tables", "[morphism]")
{
    auto q = FieldSpec::rationals();
    auto a = instantiate("B3_02", {{"lambda", Scalar(q, 2L)}}, q);
    // the table of B3_02(2) in the basis e1 + e2, e2, e3
    Algebra b(q, 3);
    b.set_coeff(0, 0, 1, Scalar(q, 1L));
    b.set_coeff(0, 0, 2, Scalar(q, 3L));
    b.set_coeff(0, 1, 2, Scalar(q, 1L));
    b.set_coeff(1, 0, 2, Scalar(q, 2L));
    auto r = is_isomorphic(a, b);
    REQUIRE(r.answer == IsoAnswer::Yes);
    CHECK(is_homomorphism(*r.witness));
    CHECK(is_invertible(r.witness->matrix));
    // same invariants, no witness in the search box: never a false yes
    auto c = instantiate("B3_02", {{"lambda", Scalar(q, 3L)}}, q);
    CHECK(is_isomorphic(a, c).answer == IsoAnswer::Unknown);
    auto f5 = FieldSpec::prime(5);
    CHECK(is_isomorphic(instantiate("B3_02", {{"lambda", Scalar(f5, 2L)}}, f5),
                        instantiate("B3_02", {{"lambda", Scalar(f5, 3L)}}, f5))
              .answer == IsoAnswer::No);
}

TEST_CASE("orbit counts equal union-find over all cocycles", "[extension]")
{
    struct Case
    {
        int p;
        std::size_t max_dim;
    };
    for (auto c : {Case{2, 4}, Case{3, 3}})
        for (auto const &inst : small_instances(FieldSpec::prime(c.p), c.max_dim))
        {
            INFO(inst.label << " over GF(" << c.p << ")");
            auto rep = enumerate_orbits(inst.algebra, 1);
            CHECK(rep.orbits.size() == naive::extension_orbits(naive::Alg::from(inst.algebra)));
            std::uint64_t total = 0;
            for (auto const &o : rep.orbits)
                total += o.size;
            CHECK(total == rep.in_T_s);
        }
}

TEST_CASE("subspace counts are Gaussian binomials", "[extension]")
{
    struct Case
    {
        std::string name;
        int p;
    };
    for (auto c : {Case{"B4_03", 3}, Case{"B5_01", 2}, Case{"B4_01", 2}, Case{"B5_07", 3}})
    {
        auto a = instantiate(c.name, {}, FieldSpec::prime(c.p));
        auto h = static_cast<int>(cohomology(a).h2_dim());
        for (int s = 1; s <= h; ++s)
        {
            INFO(c.name << " s=" << s);
            auto rep = enumerate_orbits(a, s);
            CHECK(rep.subspaces == naive::gaussian_binomial(h, s, c.p));
            if (s == h)
                CHECK(rep.orbits.size() <= 1);
        }
    }
}

TEST_CASE("B2_01 over GF(3) extends to the three-dimensional catalog", "[extension]")
{
    auto f = FieldSpec::prime(3);
    auto rep = enumerate_orbits(instantiate("B2_01", {}, f), 1);
    REQUIRE(!rep.orbits.empty());
    for (auto const &o : rep.orbits)
    {
        bool found = is_isomorphic(o.extension, instantiate("B3_01", {}, f)).answer == IsoAnswer::Yes;
        for (long l = 0; l < 3 && !found; ++l)
            found = is_isomorphic(o.extension, instantiate("B3_02", {{"lambda", Scalar(f, l)}}, f)).answer ==
                    IsoAnswer::Yes;
        CHECK(found);
    }
}

TEST_CASE("B4_03 over GF(2) gives B5_06 and B5_07", "[extension]")
{
    auto f = FieldSpec::prime(2);
    auto a = instantiate("B4_03", {}, f);
    auto rep = enumerate_orbits(a, 1);
    auto space = cohomology(a);
    auto d12 = space.class_coordinates(parse_form("D(1,2)", 4, f, {}));
    for (auto const &o : rep.orbits)
    {
        CHECK(o.coords.front() != d12);
        auto y6 = is_isomorphic(o.extension, instantiate("B5_06", {}, f)).answer == IsoAnswer::Yes;
        auto y7 = is_isomorphic(o.extension, instantiate("B5_07", {}, f)).answer == IsoAnswer::Yes;
        CHECK(y6 != y7);
    }
    CHECK(!rep.orbits.empty());
}

TEST_CASE("central extensions and the annihilator", "[extension]")
{
    auto q = FieldSpec::rationals();
    auto b201 = instantiate("B2_01", {}, q);
    auto ext = central_extension({b201, {parse_form("D(1,1)", 2, q, {})}});
    CHECK(ext.dim() == 3);
    CHECK(ext.coeff(0, 0, 1) == Scalar::one(q));
    CHECK(ext.coeff(0, 0, 2) == Scalar::one(q));
    auto split = direct_sum(b201, zero_algebra(q, 1));
    CHECK(has_annihilator_component(split));
    auto spec = decompose(split).spec;
    auto space = cohomology(spec.parent);
    std::vector<Vec> coords;
    for (auto const &th : spec.theta)
        coords.push_back(space.class_coordinates(th));
    CHECK(!classes_independent(space, coords));
}

TEST_CASE("decompose recovers the parent and class", "[extension]")
{
    auto q = FieldSpec::rationals();
    auto d = decompose(instantiate("B5_06", {}, q));
    auto b403 = instantiate("B4_03", {}, q);
    REQUIRE(d.spec.parent.dim() == 4);
    CHECK(is_isomorphic(d.spec.parent, b403).answer == IsoAnswer::Yes);
    auto space = cohomology(d.spec.parent);
    REQUIRE(d.spec.theta.size() == 1);
    CHECK(space.class_coordinates(d.spec.theta[0]) ==
          space.class_coordinates(parse_form("D(1,2) + D(4,1)", 4, q, {})));

    auto d301 = decompose(instantiate("B3_01", {}, q));
    auto s2 = cohomology(d301.spec.parent);
    CHECK(s2.class_coordinates(d301.spec.theta[0]) == s2.class_coordinates(parse_form("D(2,1)", 2, q, {})));
}

TEST_CASE("decompose then extend round-trips for dimension five", "[extension]")
{
    auto f = FieldSpec::prime(3);
    for (auto const &name : list_entries(5))
    {
        auto const &e = catalog_entry(name);
        for (auto const &b : valid_samples(e, f, {Scalar(f, 1L), Scalar(f, 2L)}))
        {
            INFO(name << bindings_to_string(b));
            auto a = instantiate(name, b, f);
            auto back = central_extension(decompose(a).spec);
            CHECK(is_isomorphic(a, back).answer == IsoAnswer::Yes);
        }
    }
}

TEST_CASE("preconditions are enforced", "[extension]")
{
    auto q = FieldSpec::rationals();
    Algebra idem(q, 1);
    idem.set_coeff(0, 0, 0, Scalar::one(q));
    CHECK_THROWS_AS(decompose(idem), PreconditionError);
    CHECK_THROWS_AS(enumerate_orbits(instantiate("B2_01", {}, q), 1), PreconditionError);
    CHECK_THROWS_AS(enumerate_orbits(instantiate("B2_01", {}, FieldSpec::prime(2)), 0), PreconditionError);
}

TEST_CASE("brute-force oracle in dimensions one and two", "[oracle]")
{
    EnumerationTask t;
    t.dim = 1;
    t.bicommutative = t.one_generated = false;
    CHECK(enumerate_bruteforce(t).classes.size() == 1);
    t = {};
    t.dim = 2;
    auto r = enumerate_bruteforce(t);
    CHECK(r.total == 256);
    REQUIRE(r.classes.size() == 1);
    CHECK(is_isomorphic(r.classes[0].algebra, instantiate("B2_01", {}, FieldSpec::prime(2))).answer ==
          IsoAnswer::Yes);
    // naive count of surviving tables: one-generated nilpotent bicommutative
    std::uint64_t survivors = 0;
    for (std::uint64_t code = 0; code < 256; ++code)
    {
        auto d = naive::digits(code, 8, 2);
        naive::Alg a{2, 2, d};
        bool nilp = true;
        // nilpotent: every product of three elements vanishes in dimension two
        for (int x = 0; x < 2 && nilp; ++x)
            for (int y = 0; y < 2 && nilp; ++y)
                for (int z = 0; z < 2 && nilp; ++z)
                {
                    auto X = naive::unit(2, x), Y = naive::unit(2, y), Z = naive::unit(2, z);
                    auto l = a.mul(a.mul(X, Y), Z), rr = a.mul(X, a.mul(Y, Z));
                    nilp = !l[0] && !l[1] && !rr[0] && !rr[1];
                }
        survivors += nilp && naive::bicommutative(a) && naive::one_generated(a);
    }
    CHECK(r.survivors == survivors);
}

TEST_CASE("oracle result does not depend on basis relabeling", "[oracle]")
{
    EnumerationTask t;
    t.field = FieldSpec::prime(3);
    t.dim = 2;
    auto plain = enumerate_bruteforce(t);
    t.permutation = {1, 0};
    auto perm = enumerate_bruteforce(t);
    REQUIRE(plain.classes.size() == perm.classes.size());
    for (std::size_t i = 0; i < plain.classes.size(); ++i)
    {
        CHECK(plain.classes[i].code == perm.classes[i].code);
        CHECK(plain.classes[i].tables == perm.classes[i].tables);
    }
    CHECK(plain.survivors == perm.survivors);
}

TEST_CASE("oracle resumes from a checkpoint", "[oracle]")
{
    auto path = (std::filesystem::temp_directory_path() / "nilext_oracle_test.ckpt").string();
    std::remove(path.c_str());
    EnumerationTask t;
    t.dim = 2;
    t.chunk = 16;
    auto ref = enumerate_bruteforce(t);
    t.checkpoint = path;
    auto first = enumerate_bruteforce(t);
    CHECK(std::filesystem::exists(path));
    auto resumed = enumerate_bruteforce(t);
    for (auto const *r : {&first, &resumed})
    {
        CHECK(r->survivors == ref.survivors);
        REQUIRE(r->classes.size() == ref.classes.size());
        CHECK(r->classes[0].code == ref.classes[0].code);
    }
    std::remove(path.c_str());
}

TEST_CASE("canonical code is invariant under change of basis", "[oracle]")
{
    std::mt19937_64 rng(51);
    auto f = FieldSpec::prime(3);
    std::set<std::uint64_t> codes;
    auto pool = small_instances(f, 3);
    for (auto const &inst : pool)
    {
        if (inst.algebra.dim() != 3)
            continue;
        auto code = canonical_code(inst.algebra);
        codes.insert(code);
        for (int t = 0; t < 3; ++t)
        {
            auto [m, inv] = naive::random_gl(3, 3, rng);
            auto moved = naive::to_algebra(naive::transport(naive::Alg::from(inst.algebra), m, inv));
            INFO(inst.label);
            CHECK(canonical_code(moved) == code);
        }
    }
    // distinct codes iff pairwise non-isomorphic (exhaustive)
    std::vector<naive::Alg> classes;
    for (auto const &inst : pool)
    {
        if (inst.algebra.dim() != 3)
            continue;
        auto na = naive::Alg::from(inst.algebra);
        bool fresh = std::none_of(classes.begin(), classes.end(),
                                  [&](naive::Alg const &c) { return !naive::isomorphisms(c, na).empty(); });
        if (fresh)
            classes.push_back(na);
    }
    CHECK(codes.size() == classes.size());
}

TEST_CASE("pipeline matches the oracle in dimension two", "[oracle]")
{
    auto cv = cross_validate(2, FieldSpec::prime(2));
    CHECK(cv.ok());
    CHECK(cv.oracle_classes == 1);
    CHECK(cv.pipeline_classes == 1);
}

TEST_CASE("B4_01 filtration and action factors", "[morphism]")
{
    auto q = FieldSpec::rationals();
    auto a = instantiate("B4_01", {}, q);
    std::vector<std::size_t> dims;
    for (auto const &s : power_filtration(a))
        dims.push_back(s.dim());
    CHECK(dims == std::vector<std::size_t>{4, 3, 2, 0});

    auto phi = extend_generator_image(a, a, scale(Scalar(q, 2L), unit_vec(q, 4, 0)));
    REQUIRE(phi.has_value());
    auto space = cohomology(a);
    for (auto const *text : {"D(1,4)", "D(3,1)", "D(1,3) + D(4,1) + D(2,2)"})
    {
        INFO(text);
        auto th = parse_form(text, 4, q, {});
        CHECK(space.class_coordinates(act_on_form(*phi, th)) == scale(Scalar(q, 16L), space.class_coordinates(th)));
    }
}

TEST_CASE("annihilator component criteria agree", "[extension]")
{
    std::mt19937_64 rng(61);
    auto f = FieldSpec::prime(3);
    int lemma_cases = 0, dependent = 0;
    for (auto const &name : list_entries())
    {
        auto const &e = catalog_entry(name);
        if (e.dim > 4)
            continue;
        for (auto const &b : valid_samples(e, f, {Scalar(f, 1L), Scalar(f, 2L)}))
        {
            auto a = instantiate(name, b, f);
            auto space = cohomology(a);
            for (int t = 0; t < 20; ++t)
            {
                ExtensionSpec spec{a, {}};
                for (std::size_t s = 0, k = 1 + rng() % 2; s < k; ++s)
                    spec.theta.push_back(detail::random_combination(f, a.dim(), space.z2(), rng));
                INFO(name << bindings_to_string(b));
                bool lemma_applies =
                    cocycle_annihilator(spec.theta, a).intersect(annihilator(a)).dim() == 0;
                if (!lemma_applies)
                {
                    CHECK_THROWS_AS(classes_dependent(spec), PreconditionError);
                    continue;
                }
                ++lemma_cases;
                bool dep = classes_dependent(spec);
                dependent += dep;
                CHECK(dep == has_annihilator_component(spec));
            }
        }
    }
    CHECK(lemma_cases > 0);
    CHECK(dependent > 0);
    CHECK(dependent < lemma_cases);
}
