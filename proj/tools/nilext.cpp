// nilext: command-line front end.
//
// Exit codes: 0 pass, 1 check failure, 2 usage or parse error,
// 3 inconclusive (isomorphism over Q undecided).

#include "nilext/nilext.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>

using namespace nilext;

namespace {

enum Exit
{
    Pass = 0,
    CheckFailed = 1,
    Usage = 2,
    Inconclusive = 3
};

struct Common
{
    std::string field;
    std::vector<std::string> sets;
    unsigned threads = default_threads();
};

void add_common(CLI::App *cmd, Common &c, bool with_field = true)
{
    if (with_field)
        cmd->add_option("--field", c.field, "Field: Q or GF(p); overrides the file's field");
    cmd->add_option("--set", c.sets, "Bind a parameter, <param>=<value>");
    cmd->add_option("--threads", c.threads, "Worker threads (default: NILEXT_THREADS or hardware)");
}

std::string read_file(std::string const &path)
{
    std::ifstream in(path);
    if (!in)
        throw Error("cannot read '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

Bindings parse_sets(std::vector<std::string> const &sets, FieldSpec const &field)
{
    Bindings b;
    for (auto const &s : sets)
    {
        auto eq = s.find('=');
        if (eq == std::string::npos)
            throw Error("--set expects <param>=<value>, got '" + s + "'");
        b.insert_or_assign(detail::trim(s.substr(0, eq)), parse_scalar(detail::trim(s.substr(eq + 1)), field));
    }
    return b;
}

bool is_catalog_name(std::string const &s)
{
    auto names = list_entries();
    return std::find(names.begin(), names.end(), s) != names.end();
}

/// An algebra file path, or a catalog name such as B5_06.
Algebra load(std::string const &source, Common const &c)
{
    if (!std::filesystem::exists(source) && is_catalog_name(source))
    {
        auto field = c.field.empty() ? FieldSpec::rationals() : parse_field(c.field);
        return instantiate(source, parse_sets(c.sets, field), field);
    }
    auto pa = parse_algebra(read_file(source));
    auto field = c.field.empty() ? pa.field : parse_field(c.field);
    return pa.instantiate(parse_sets(c.sets, field), field);
}

std::string subspace_basis(Subspace const &s)
{
    std::ostringstream os;
    os << "dim " << s.dim();
    for (auto const &v : s.basis())
    {
        os << " (";
        for (std::size_t i = 0; i < v.size(); ++i)
            os << (i ? "," : "") << v[i].to_string();
        os << ")";
    }
    return os.str();
}

std::string matrix_text(Matrix const &m)
{
    std::ostringstream os;
    for (std::size_t i = 0; i < m.rows(); ++i)
    {
        os << " ";
        for (std::size_t j = 0; j < m.cols(); ++j)
            os << " " << m(i, j).to_string();
        os << "\n";
    }
    return os.str();
}

int cmd_check(Algebra const &a)
{
    auto viol = check_bicommutative(a);
    bool nil = is_nilpotent(a), one = nil && a.dim() > 0 && is_one_generated(a);
    std::cout << "algebra " << a.name() << " dim " << a.dim() << " over " << a.field().name() << "\n";
    std::cout << "bicommutative " << (viol.empty() ? "yes" : "no") << "\n";
    for (std::size_t k = 0; k < std::min<std::size_t>(viol.size(), 10); ++k)
    {
        auto const &v = viol[k];
        bool right = v.identity == IdentityViolation::Identity::RightCommutative;
        auto e = [](std::size_t i) { return "e" + std::to_string(i + 1); };
        std::cout << "  violation " << (right ? "(xy)z = (xz)y" : "x(yz) = y(xz)") << " at x=" << e(v.x)
                  << " y=" << e(v.y) << " z=" << e(v.z) << "\n";
    }
    std::cout << "nilpotent " << (nil ? "yes" : "no") << "\n";
    std::cout << "one-generated " << (one ? "yes" : nil ? "no" : "n/a (not nilpotent)") << "\n";
    return viol.empty() && nil && one ? Pass : CheckFailed;
}

int cmd_cohomology(Algebra const &a)
{
    auto space = cohomology(a);
    std::cout << "cohomology " << a.name() << " over " << a.field().name() << "\n";
    std::cout << "Z2 dim " << space.z2().size() << "\n";
    for (auto const &f : space.z2())
        std::cout << "  " << f.to_string() << "\n";
    std::cout << "B2 dim " << space.b2().size() << "\n";
    for (auto const &f : space.b2())
        std::cout << "  " << f.to_string() << "\n";
    std::cout << "H2 dim " << space.h2_dim() << "\n";
    for (auto const &f : space.h2_reps())
        std::cout << "  [" << f.to_string() << "]\n";
    return Pass;
}

int cmd_autos(Algebra const &a, unsigned threads, bool list)
{
    auto autos = enumerate_automorphisms(a, threads);
    std::cout << "automorphisms " << a.name() << " over " << a.field().name() << ": " << autos.size() << "\n";
    if (list)
        for (std::size_t k = 0; k < autos.size(); ++k)
            std::cout << "phi " << k + 1 << "\n" << matrix_text(autos[k].matrix);
    return Pass;
}

int cmd_iso(Algebra const &a, Algebra const &b, unsigned threads)
{
    auto r = is_isomorphic(a, b, threads);
    std::cout << to_string(r.answer) << ": " << r.reason << "\n";
    if (r.witness)
        std::cout << "witness\n" << matrix_text(r.witness->matrix);
    return r.answer == IsoAnswer::Yes ? Pass : r.answer == IsoAnswer::No ? CheckFailed : Inconclusive;
}

int cmd_decompose(Algebra const &a)
{
    auto d = decompose(a);
    std::cout << "annihilator " << subspace_basis(d.ann) << "\n";
    std::cout << "complement e";
    for (std::size_t k = 0; k < d.complement.size(); ++k)
        std::cout << (k ? ",e" : "") << d.complement[k] + 1;
    std::cout << "\n";
    std::cout << "annihilator component " << (has_annihilator_component(a) ? "yes" : "no") << "\n";
    auto parent = d.spec.parent;
    parent.set_name((a.name().empty() ? std::string("A") : a.name()) + "_parent");
    std::cout << print_algebra(parent);
    for (std::size_t t = 0; t < d.spec.theta.size(); ++t)
        std::cout << "theta_" << t + 1 << " = " << d.spec.theta[t].to_string() << "\n";
    return Pass;
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Central extensions of nilpotent bicommutative algebras"};
    app.require_subcommand(1);

    Common common;
    std::string file, file2, name;
    bool list_autos = false;
    std::size_t ext_dim = 1;
    std::vector<std::string> cocycles;

    auto *check = app.add_subcommand("check", "Bicommutativity, nilpotency and one-generation");
    check->add_option("algebra", file, "Algebra file or catalog name")->required();
    add_common(check, common);

    auto *inv = app.add_subcommand("invariants", "Isomorphism invariants");
    inv->add_option("algebra", file, "Algebra file or catalog name")->required();
    add_common(inv, common);

    auto *coh = app.add_subcommand("cohomology", "Z2, B2 and H2 representatives");
    coh->add_option("algebra", file, "Algebra file or catalog name")->required();
    add_common(coh, common);

    auto *autos = app.add_subcommand("autos", "Enumerate automorphisms over GF(p)");
    autos->add_option("algebra", file, "Algebra file or catalog name")->required();
    autos->add_flag("--list", list_autos, "Print every automorphism matrix");
    add_common(autos, common);

    auto *extend = app.add_subcommand("extend", "Central extension by cocycles");
    extend->add_option("algebra", file, "Algebra file or catalog name")->required();
    extend->add_option("--cocycle", cocycles, "Cocycle such as 'D(1,2) + D(4,1)', one per new basis vector")
        ->required();
    add_common(extend, common);

    auto *orbits = app.add_subcommand("orbits", "Aut-orbits on the s-subspaces of H2 over GF(p)");
    orbits->add_option("algebra", file, "Algebra file or catalog name")->required();
    orbits->add_option("--ext-dim", ext_dim, "Extension dimension s")->check(CLI::PositiveNumber);
    add_common(orbits, common);

    auto *iso = app.add_subcommand("iso", "Isomorphism test");
    iso->add_option("first", file, "Algebra file or catalog name")->required();
    iso->add_option("second", file2, "Algebra file or catalog name")->required();
    add_common(iso, common);

    auto *dec = app.add_subcommand("decompose", "Split off the annihilator as a central extension");
    dec->add_option("algebra", file, "Algebra file or catalog name")->required();
    add_common(dec, common);

    auto *cat = app.add_subcommand("catalog", "Catalog entries");
    cat->require_subcommand(1);
    std::optional<std::size_t> cat_dim;
    auto *cat_list = cat->add_subcommand("list", "List entry names");
    cat_list->add_option("--dim", cat_dim, "Only this dimension");
    auto *cat_show = cat->add_subcommand("show", "Print an entry as an algebra file");
    cat_show->add_option("name", name, "Entry name, e.g. B5_09")->required();
    add_common(cat_show, common);
    bool prov_only = false;
    auto *cat_prov = cat->add_subcommand("provenance", "Check an entry's extension provenance");
    cat_prov->add_option("name", name, "Entry name")->required();
    cat_prov->add_flag("--only", prov_only, "Omit the parent and cocycles from the output");
    add_common(cat_prov, common);

    std::size_t oracle_dim = 2;
    std::string checkpoint;
    bool cross = false;
    auto *oracle = app.add_subcommand("oracle", "Brute-force enumeration of isomorphism classes");
    oracle->add_option("--dim", oracle_dim, "Dimension (at most 3)")->check(CLI::Range(1, 3));
    oracle->add_option("--checkpoint", checkpoint, "Resumable checkpoint file");
    oracle->add_flag("--cross-validate", cross, "Compare with classes built by central extensions");
    add_common(oracle, common);

    std::vector<std::string> scopes;
    std::vector<std::uint64_t> primes = {7, 11};
    auto *verify = app.add_subcommand("verify-paper", "Reproducible checks of the published results");
    verify->add_option("--scope", scopes, "Scopes (default: all)")
        ->check(CLI::IsMember(verify_scopes()))
        ->delimiter(',');
    verify->add_option("--primes", primes, "Primes for the distinctness scope")->delimiter(',');
    verify->add_option("--checkpoint", checkpoint, "Checkpoint file for the oracle scope");
    add_common(verify, common, false);

    try
    {
        app.parse(argc, argv);
    }
    catch (CLI::CallForHelp const &e)
    {
        return app.exit(e);
    }
    catch (CLI::CallForAllHelp const &e)
    {
        return app.exit(e);
    }
    catch (CLI::ParseError const &e)
    {
        app.exit(e);
        return Usage;
    }

    try
    {
        if (*check)
            return cmd_check(load(file, common));
        if (*inv)
        {
            auto a = load(file, common);
            std::cout << invariants(a).to_string() << "\n";
            return Pass;
        }
        if (*coh)
            return cmd_cohomology(load(file, common));
        if (*autos)
            return cmd_autos(load(file, common), common.threads, list_autos);
        if (*extend)
        {
            auto a = load(file, common);
            std::vector<BilinearForm> theta;
            for (auto const &c : cocycles)
                theta.push_back(parse_form(c, a.dim(), a.field()));
            auto ext = central_extension({a, theta});
            ext.set_name((a.name().empty() ? std::string("A") : a.name()) + "_ext");
            std::cout << print_algebra(ext);
            return Pass;
        }
        if (*orbits)
        {
            std::cout << enumerate_orbits(load(file, common), ext_dim, common.threads).to_string();
            return Pass;
        }
        if (*iso)
            return cmd_iso(load(file, common), load(file2, common), common.threads);
        if (*dec)
            return cmd_decompose(load(file, common));
        if (*cat_list)
        {
            for (auto const &n : list_entries(cat_dim))
            {
                auto const &e = catalog_entry(n);
                std::cout << n;
                if (!e.params.empty())
                {
                    std::cout << "(";
                    for (std::size_t i = 0; i < e.params.size(); ++i)
                        std::cout << (i ? "," : "") << e.params[i];
                    std::cout << ")";
                }
                std::cout << "\n";
            }
            return Pass;
        }
        if (*cat_show)
        {
            auto const &e = catalog_entry(name);
            auto field = common.field.empty() ? FieldSpec::rationals() : parse_field(common.field);
            if (common.sets.empty())
                std::cout << print_algebra(catalog_table(e, field));
            else
                std::cout << print_algebra(load(name, common));
            return Pass;
        }
        if (*cat_prov)
        {
            auto field = common.field.empty() ? FieldSpec::rationals() : parse_field(common.field);
            auto b = parse_sets(common.sets, field);
            auto spec = provenance_spec(name, b, field);
            if (!prov_only)
            {
                std::cout << "parent " << catalog_entry(name).provenance->parent << "\n";
                for (std::size_t t = 0; t < spec.theta.size(); ++t)
                    std::cout << "theta_" << t + 1 << " = " << spec.theta[t].to_string() << "\n";
            }
            bool ok = provenance_check(name, b, field);
            std::cout << "provenance " << name << " " << (ok ? "reproduced" : "differs") << "\n";
            return ok ? Pass : CheckFailed;
        }
        if (*oracle)
        {
            auto field = common.field.empty() ? FieldSpec::prime(2) : parse_field(common.field);
            if (cross)
            {
                auto cv = cross_validate(oracle_dim, field, common.threads, checkpoint);
                std::cout << cv.to_string();
                return cv.ok() ? Pass : CheckFailed;
            }
            EnumerationTask task;
            task.field = field;
            task.dim = oracle_dim;
            task.threads = common.threads;
            task.checkpoint = checkpoint;
            auto res = enumerate_bruteforce(task);
            std::cout << "oracle dim " << oracle_dim << " over " << field.name() << ": " << res.total << " tables, "
                      << res.survivors << " survivors, " << res.classes.size() << " classes\n";
            for (auto const &c : res.classes)
                std::cout << "class " << c.algebra.name() << " code " << c.code << " tables " << c.tables << "\n"
                          << print_algebra(c.algebra);
            return Pass;
        }
        if (*verify)
        {
            VerifyOptions opt;
            opt.primes = primes;
            opt.threads = common.threads;
            opt.oracle_checkpoint = checkpoint;
            auto rep = verify_paper(scopes.empty() ? verify_scopes() : scopes, opt);
            std::cout << rep.to_string();
            return rep.ok() ? Pass : CheckFailed;
        }
    }
    catch (ParseError const &e)
    {
        std::cerr << "parse error: " << e.what() << "\n";
        return Usage;
    }
    catch (PreconditionError const &e)
    {
        std::cerr << "precondition: " << e.what() << "\n";
        return Usage;
    }
    catch (Error const &e)
    {
        std::cerr << "error: " << e.what() << "\n";
        return Usage;
    }
    return Usage;
}
