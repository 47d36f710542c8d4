#pragma once

// The one-generated nilpotent bicommutative algebras of dimensions 2 to 6,
// their extension provenance, the published cohomology tables for dims 4 and 5,
// and the published automorphism groups with their actions on H^2.

#include "nilext/cohom.hpp"
#include "nilext/extension.hpp"
#include "nilext/format.hpp"
#include "nilext/morphism.hpp"

namespace nilext {

/// How an entry arises as a central extension. Each cocycle is either a
/// combination of the parent's published basis classes, written "lambda*N1 + N3"
/// (N<i> is the i-th class), or a plain form in D(i,j) syntax. Coefficients are
/// expressions in the entry's parameters; the class dictionary and the parent
/// bindings are evaluated with the parent's parameters.
struct Provenance
{
    std::string parent;
    std::map<std::string, std::string> parent_bindings; // parent param -> expression in entry params
    std::string dictionary;                             // ParentData key, empty for D(i,j) cocycles
    std::vector<std::string> cocycles;                  // one per new basis vector
};

struct CatalogEntry
{
    std::string name;
    std::size_t dim;
    std::vector<std::string> params;
    std::vector<std::string> nonzero; // expressions that must not vanish
    std::string table;                // product lines separated by ';'
    std::optional<Provenance> provenance;
};

/// Published Z^2, B^2, H^2 generators for one algebra (or one parameter regime).
struct PublishedCohomology
{
    std::string key;
    std::string name;
    std::vector<std::string> params;                    // regime parameters
    std::map<std::string, std::string> entry_bindings;  // entry param -> expression in regime params
    std::vector<std::string> nonzero;
    std::vector<std::string> z2, b2, h2;
};

/// Published data for an algebra whose central extensions are studied in
/// detail: automorphism group, basis of H^2 and action on its coordinates.
/// nabla and alpha_star are expressions in the parent's parameters; alpha_star
/// also uses the pattern parameters and alpha1, alpha2, ...
struct ParentData
{
    std::string key;
    AutFamily aut;
    std::vector<std::string> nabla;
    std::vector<std::string> alpha_star;
};

namespace catalog_data {

inline std::vector<CatalogEntry> const &entries()
{
    using P = Provenance;
    static std::vector<CatalogEntry> const data = {
        {"B2_01", 2, {}, {}, "e1 e1 = e2", std::nullopt},

        {"B3_01", 3, {}, {}, "e1 e1 = e2; e2 e1 = e3", P{"B2_01", {}, "", {"D(2,1)"}}},
        {"B3_02", 3, {"lambda"}, {}, "e1 e1 = e2; e1 e2 = e3; e2 e1 = lambda e3",
         P{"B2_01", {}, "", {"D(1,2) + lambda*D(2,1)"}}},

        {"B4_01", 4, {}, {}, "e1 e1 = e2; e1 e2 = e4; e2 e1 = e3", P{"B2_01", {}, "", {"D(2,1)", "D(1,2)"}}},
        {"B4_02", 4, {}, {}, "e1 e1 = e2; e1 e2 = e4; e2 e1 = e3; e3 e1 = e4",
         P{"B3_01", {}, "", {"D(1,2) + D(3,1)"}}},
        {"B4_03", 4, {}, {}, "e1 e1 = e2; e2 e1 = e3; e3 e1 = e4", P{"B3_01", {}, "", {"D(3,1)"}}},
        {"B4_04", 4, {}, {}, "e1 e1 = e2; e1 e2 = e3; e1 e3 = e4; e2 e1 = e4",
         P{"B3_02", {{"lambda", "0"}}, "", {"D(1,3) + D(2,1)"}}},
        {"B4_05", 4, {}, {},
         "e1 e1 = e2; e1 e2 = e3; e1 e3 = e4; e2 e1 = e3 + e4; e2 e2 = e4; e3 e1 = e4",
         P{"B3_02", {{"lambda", "1"}}, "", {"D(1,3) + D(2,1) + D(2,2) + D(3,1)"}}},
        {"B4_06", 4, {"lambda"}, {},
         "e1 e1 = e2; e1 e2 = e3; e1 e3 = e4; e2 e1 = lambda e3; e2 e2 = lambda e4; e3 e1 = lambda e4",
         P{"B3_02", {{"lambda", "lambda"}}, "", {"D(1,3) + lambda*D(2,2) + lambda*D(3,1)"}}},

        {"B5_01", 5, {}, {}, "e1 e1 = e2; e1 e2 = e4; e2 e1 = e3; e3 e1 = e5",
         P{"B3_01", {}, "", {"D(1,2)", "D(3,1)"}}},
        {"B5_02", 5, {"lambda"}, {},
         "e1 e1 = e2; e1 e2 = e3; e1 e3 = e5; e2 e1 = lambda e3 + e4; e2 e2 = lambda e5; e3 e1 = lambda e5",
         P{"B3_02", {{"lambda", "lambda"}}, "", {"D(2,1)", "D(1,3) + lambda*D(2,2) + lambda*D(3,1)"}}},
        {"B5_03", 5, {"lambda", "mu"}, {},
         "e1 e1 = e2; e1 e2 = e4; e1 e3 = e5; e1 e4 = lambda e5; e2 e1 = e3; e2 e2 = e5; e3 e1 = mu e5; "
         "e4 e1 = e5",
         P{"B4_01", {}, "B4_01", {"lambda*N1 + mu*N2 + N3"}}},
        {"B5_04", 5, {"lambda"}, {}, "e1 e1 = e2; e1 e2 = e4; e1 e4 = e5; e2 e1 = e3; e3 e1 = lambda e5",
         P{"B4_01", {}, "B4_01", {"N1 + lambda*N2"}}},
        {"B5_05", 5, {}, {},
         "e1 e1 = e2; e1 e2 = e4; e1 e3 = e5; e2 e1 = e3; e2 e2 = e5; e3 e1 = e4; e4 e1 = e5",
         P{"B4_02", {}, "B4_02", {"N2"}}},
        {"B5_06", 5, {}, {}, "e1 e1 = e2; e1 e2 = e5; e2 e1 = e3; e3 e1 = e4; e4 e1 = e5",
         P{"B4_03", {}, "B4_03", {"N1 + N2"}}},
        {"B5_07", 5, {}, {}, "e1 e1 = e2; e2 e1 = e3; e3 e1 = e4; e4 e1 = e5", P{"B4_03", {}, "B4_03", {"N2"}}},
        {"B5_08", 5, {}, {},
         "e1 e1 = e2; e1 e2 = e3; e1 e3 = e4; e1 e4 = e5; e2 e1 = e4; e2 e2 = e5; e3 e1 = e5",
         P{"B4_04", {}, "B4_04", {"N2"}}},
        {"B5_09", 5, {}, {},
         "e1 e1 = e2; e1 e2 = e3; e1 e3 = e4; e1 e4 = e5; e2 e1 = e3 + e4; e2 e2 = e4 + e5; e2 e3 = e5; "
         "e3 e1 = e4 + e5; e3 e2 = e5; e4 e1 = e5",
         P{"B4_05", {}, "B4_05", {"N2"}}},
        {"B5_10", 5, {"lambda"}, {},
         "e1 e1 = e2; e1 e2 = e3; e1 e3 = e4; e1 e4 = e5; e2 e1 = lambda e3; e2 e2 = lambda e4; "
         "e2 e3 = lambda e5; e3 e1 = lambda e4; e3 e2 = lambda e5; e4 e1 = lambda e5",
         P{"B4_06", {{"lambda", "lambda"}}, "B4_06", {"N2"}}},
        {"B5_11", 5, {}, {}, "e1 e1 = e2; e1 e2 = e3; e1 e3 = e4; e1 e4 = e5; e2 e1 = e5",
         P{"B4_06", {{"lambda", "0"}}, "B4_06", {"N1 + N2"}}},
        {"B5_12", 5, {}, {},
         "e1 e1 = e2; e1 e2 = e3; e1 e3 = e4; e1 e4 = e5; e2 e1 = e3 + e5; e2 e2 = e4; e2 e3 = e5; "
         "e3 e1 = e4; e3 e2 = e5; e4 e1 = e5",
         P{"B4_06", {{"lambda", "1"}}, "B4_06", {"N1 + N2"}}},

        {"B6_01", 6, {}, {}, "e1 e1 = e2; e1 e2 = e4; e1 e4 = e5; e2 e1 = e3; e3 e1 = e6",
         P{"B4_01", {}, "B4_01", {"N1", "N2"}}},
        {"B6_02", 6, {"lambda"}, {},
         "e1 e1 = e2; e1 e2 = e4; e1 e3 = e6; e1 e4 = e5; e2 e1 = e3; e2 e2 = e6; e3 e1 = lambda e6; "
         "e4 e1 = e6",
         P{"B4_01", {}, "B4_01", {"N1", "lambda*N2 + N3"}}},
        {"B6_03", 6, {"lambda", "mu"}, {},
         "e1 e1 = e2; e1 e2 = e4; e1 e3 = e6; e1 e4 = lambda e5 + mu e6; e2 e1 = e3; e2 e2 = e6; "
         "e3 e1 = e5; e4 e1 = e6",
         P{"B4_01", {}, "B4_01", {"lambda*N1 + N2", "mu*N1 + N3"}}},
        {"B6_04", 6, {}, {},
         "e1 e1 = e2; e1 e2 = e4; e1 e3 = e6; e2 e1 = e3; e2 e2 = e6; e3 e1 = e4 + e5; e4 e1 = e6",
         P{"B4_02", {}, "B4_02", {"N1", "N2"}}},
        {"B6_05", 6, {}, {}, "e1 e1 = e2; e1 e2 = e5; e2 e1 = e3; e3 e1 = e4; e4 e1 = e6",
         P{"B4_03", {}, "B4_03", {"N1", "N2"}}},
        {"B6_06", 6, {}, {},
         "e1 e1 = e2; e1 e2 = e3; e1 e3 = e4; e1 e4 = e6; e2 e1 = e4 + e5; e2 e2 = e6; e3 e1 = e6",
         P{"B4_04", {}, "B4_04", {"N1", "N2"}}},
        {"B6_07", 6, {}, {},
         "e1 e1 = e2; e1 e2 = e3; e1 e3 = e4; e1 e4 = e6; e2 e1 = e3 + e4 + e5; e2 e2 = e4 + e6; "
         "e2 e3 = e6; e3 e1 = e4 + e6; e3 e2 = e6; e4 e1 = e6",
         P{"B4_05", {}, "B4_05", {"N1", "N2"}}},
        {"B6_08", 6, {"lambda"}, {},
         "e1 e1 = e2; e1 e2 = e3; e1 e3 = e4; e1 e4 = e6; e2 e1 = lambda e3 + e5; e2 e2 = lambda e4; "
         "e2 e3 = lambda e6; e3 e1 = lambda e4; e3 e2 = lambda e6; e4 e1 = lambda e6",
         P{"B4_06", {{"lambda", "lambda"}}, "B4_06", {"N1", "N2"}}},
        {"B6_09", 6, {"lambda"}, {},
         "e1 e1 = e2; e1 e2 = e4; e1 e3 = e6; e1 e4 = lambda e6; e2 e1 = e3; e2 e2 = e6; e3 e1 = e5; "
         "e4 e1 = e6; e5 e1 = e6",
         P{"B5_01", {}, "B5_01", {"lambda*N1 + N2 + N3"}}},
        {"B6_10", 6, {}, {}, "e1 e1 = e2; e1 e2 = e4; e1 e4 = e6; e2 e1 = e3; e3 e1 = e5; e5 e1 = e6",
         P{"B5_01", {}, "B5_01", {"N1 + N2"}}},
        {"B6_11", 6, {}, {}, "e1 e1 = e2; e1 e2 = e4; e2 e1 = e3; e3 e1 = e5; e5 e1 = e6",
         P{"B5_01", {}, "B5_01", {"N2"}}},
        {"B6_12", 6, {"lambda"}, {},
         "e1 e1 = e2; e1 e2 = e3; e1 e3 = e5; e1 e5 = e6; e2 e1 = lambda e3 + e4; e2 e2 = lambda e5; "
         "e2 e3 = lambda e6; e3 e1 = lambda e5; e3 e2 = lambda e6; e5 e1 = lambda e6",
         P{"B5_02", {{"lambda", "lambda"}}, "B5_02", {"N3"}}},
        {"B6_13", 6, {"lambda"}, {},
         "e1 e1 = e2; e1 e2 = e3; e1 e3 = e5; e1 e5 = e6; e2 e1 = lambda e3 + e4; e2 e2 = lambda e5; "
         "e2 e3 = lambda e6; e3 e1 = lambda e5; e3 e2 = lambda e6; e4 e1 = e6; e5 e1 = lambda e6",
         P{"B5_02", {{"lambda", "lambda"}}, "B5_02", {"N1 + N3"}}},
        {"B6_14", 6, {"lambda"}, {},
         "e1 e1 = e2; e1 e2 = e3; e1 e3 = e5; e1 e4 = e6; e1 e5 = e6; e2 e1 = e4; e2 e2 = e6; e3 e1 = e6; "
         "e4 e1 = lambda e6",
         P{"B5_02", {{"lambda", "0"}}, "B5_02", {"lambda*N1 + N2 + N3"}}},
        {"B6_15", 6, {"lambda"}, {},
         "e1 e1 = e2; e1 e2 = e3; e1 e3 = e5; e1 e4 = e6; e1 e5 = e6; e2 e1 = e3 + e4; e2 e2 = e5 + e6; "
         "e2 e3 = e6; e3 e1 = e5 + e6; e3 e2 = e6; e4 e1 = lambda e6; e5 e1 = e6",
         P{"B5_02", {{"lambda", "1"}}, "B5_02", {"lambda*N1 + N2 + N3"}}},
        {"B6_16", 6, {"lambda"}, {"lambda"},
         "e1 e1 = e2; e1 e2 = e4; e1 e3 = e5; e1 e4 = lambda e5; e1 e5 = lambda e6; e2 e1 = e3; "
         "e2 e2 = e5; e2 e3 = e6; e2 e4 = lambda e6; e3 e1 = 1/lambda e5; e3 e2 = e6; e4 e1 = e5; "
         "e4 e2 = lambda e6; e5 e1 = e6",
         P{"B5_03", {{"lambda", "lambda"}, {"mu", "1/lambda"}}, "B5_03(lambda,1/lambda)", {"N3"}}},
        {"B6_17", 6, {"lambda"}, {"lambda"},
         "e1 e1 = e2; e1 e2 = e4; e1 e3 = e5; e1 e4 = lambda e5 + e6; e1 e5 = lambda e6; e2 e1 = e3; "
         "e2 e2 = e5; e2 e3 = e6; e2 e4 = lambda e6; e3 e1 = 1/lambda e5; e3 e2 = e6; e4 e1 = e5; "
         "e4 e2 = lambda e6; e5 e1 = e6",
         P{"B5_03", {{"lambda", "lambda"}, {"mu", "1/lambda"}}, "B5_03(lambda,1/lambda)", {"N1 + N3"}}},
        {"B6_18", 6, {"lambda"}, {},
         "e1 e1 = e2; e1 e2 = e4; e1 e3 = e5; e1 e4 = e5 + lambda e6; e1 e5 = e6; e2 e1 = e3; e2 e2 = e5; "
         "e2 e3 = e6; e2 e4 = e6; e3 e1 = e5 + e6; e3 e2 = e6; e4 e1 = e5; e4 e2 = e6; e5 e1 = e6",
         P{"B5_03", {{"lambda", "1"}, {"mu", "1"}}, "B5_03(lambda,1/lambda)", {"lambda*N1 + N2 + N3"}}},
        {"B6_19", 6, {}, {},
         "e1 e1 = e2; e1 e2 = e4; e1 e3 = e5; e1 e4 = e6; e2 e1 = e3; e2 e2 = e5; e2 e3 = e6; e3 e1 = e4; "
         "e3 e2 = e6; e4 e1 = e5; e5 e1 = e6",
         P{"B5_05", {}, "B5_05", {"N2"}}},
        {"B6_20", 6, {}, {},
         "e1 e1 = e2; e1 e2 = e5; e1 e3 = e6; e2 e1 = e3; e2 e2 = e6; e3 e1 = e4; e4 e1 = e5; e5 e1 = e6",
         P{"B5_06", {}, "B5_06", {"N2"}}},
        {"B6_21", 6, {}, {}, "e1 e1 = e2; e1 e2 = e6; e2 e1 = e3; e3 e1 = e4; e4 e1 = e5; e5 e1 = e6",
         P{"B5_07", {}, "B5_07", {"N1 + N2"}}},
        {"B6_22", 6, {}, {}, "e1 e1 = e2; e2 e1 = e3; e3 e1 = e4; e4 e1 = e5; e5 e1 = e6",
         P{"B5_07", {}, "B5_07", {"N2"}}},
        {"B6_23", 6, {}, {},
         "e1 e1 = e2; e1 e2 = e3; e1 e3 = e4; e1 e4 = e5; e1 e5 = e6; e2 e1 = e4; e2 e2 = e5; e2 e3 = e6; "
         "e3 e1 = e5; e3 e2 = e6; e4 e1 = e6",
         P{"B5_08", {}, "B5_08", {"N2"}}},
        {"B6_24", 6, {}, {},
         "e1 e1 = e2; e1 e2 = e3; e1 e3 = e4; e1 e4 = e5; e1 e5 = e6; e2 e1 = e3 + e4; e2 e2 = e4 + e5; "
         "e2 e3 = e5 + e6; e2 e4 = e6; e3 e1 = e4 + e5; e3 e2 = e5 + e6; e3 e3 = e6; e4 e1 = e5 + e6; "
         "e4 e2 = e6; e5 e1 = e6",
         P{"B5_09", {}, "B5_09", {"N2"}}},
        {"B6_25", 6, {"lambda"}, {},
         "e1 e1 = e2; e1 e2 = e3; e1 e3 = e4; e1 e4 = e5; e1 e5 = e6; e2 e1 = lambda e3; e2 e2 = lambda e4; "
         "e2 e3 = lambda e5; e2 e4 = lambda e6; e3 e1 = lambda e4; e3 e2 = lambda e5; e3 e3 = lambda e6; "
         "e4 e1 = lambda e5; e4 e2 = lambda e6; e5 e1 = lambda e6",
         P{"B5_10", {{"lambda", "lambda"}}, "B5_10", {"N2"}}},
        {"B6_26", 6, {}, {}, "e1 e1 = e2; e1 e2 = e3; e1 e3 = e4; e1 e4 = e5; e1 e5 = e6; e2 e1 = e6",
         P{"B5_10", {{"lambda", "0"}}, "B5_10", {"N1 + N2"}}},
        {"B6_27", 6, {}, {},
         "e1 e1 = e2; e1 e2 = e3; e1 e3 = e4; e1 e4 = e5; e1 e5 = e6; e2 e1 = e3 + e6; e2 e2 = e4; "
         "e2 e3 = e5; e2 e4 = e6; e3 e1 = e4; e3 e2 = e5; e3 e3 = e6; e4 e1 = e5; e4 e2 = e6; e5 e1 = e6",
         P{"B5_10", {{"lambda", "1"}}, "B5_10", {"N1 + N2"}}},
        {"B6_28", 6, {}, {},
         "e1 e1 = e2; e1 e2 = e3; e1 e3 = e4; e1 e4 = e5; e1 e5 = e6; e2 e1 = e5; e2 e2 = e6; e3 e1 = e6",
         P{"B5_11", {}, "B5_11", {"N2"}}},
        {"B6_29", 6, {}, {},
         "e1 e1 = e2; e1 e2 = e3; e1 e3 = e4; e1 e4 = e5; e1 e5 = e6; e2 e1 = e3 + e5; e2 e2 = e4 + e6; "
         "e2 e3 = e5; e2 e4 = e6; e3 e1 = e4 + e6; e3 e2 = e5; e3 e3 = e6; e4 e1 = e5; e4 e2 = e6; "
         "e5 e1 = e6",
         P{"B5_12", {}, "B5_12", {"N2"}}},
    };
    return data;
}

inline std::vector<PublishedCohomology> const &cohomology_tables()
{
    static std::vector<PublishedCohomology> const data = {
        {"B4_01", "B4_01", {}, {}, {},
         {"D(1,1)", "D(1,2)", "D(1,3) + D(2,2) + D(4,1)", "D(1,4)", "D(2,1)", "D(3,1)"},
         {"D(1,1)", "D(1,2)", "D(2,1)"},
         {"D(1,4)", "D(1,3) + D(2,2) + D(4,1)", "D(3,1)"}},
        {"B4_02", "B4_02", {}, {}, {},
         {"D(1,1)", "D(1,2)", "D(1,3) + D(2,2) + D(4,1)", "D(2,1)", "D(3,1)"},
         {"D(1,1)", "D(1,2) + D(3,1)", "D(2,1)"},
         {"D(1,3) + D(2,2) + D(4,1)", "D(3,1)"}},
        {"B4_03", "B4_03", {}, {}, {},
         {"D(1,1)", "D(1,2)", "D(2,1)", "D(3,1)", "D(4,1)"},
         {"D(1,1)", "D(2,1)", "D(3,1)"},
         {"D(1,2)", "D(4,1)"}},
        {"B4_04", "B4_04", {}, {}, {},
         {"D(1,1)", "D(1,2)", "D(1,3)", "D(1,4) + D(2,2) + D(3,1)", "D(2,1)"},
         {"D(1,1)", "D(1,2)", "D(1,3) + D(2,1)"},
         {"D(1,4) + D(2,2) + D(3,1)", "D(2,1)"}},
        {"B4_05", "B4_05", {}, {}, {},
         {"D(1,1)", "D(1,2)", "D(1,3) + D(2,2) + D(3,1)", "D(1,4) + D(2,2) + D(2,3) + D(3,1) + D(3,2) + D(4,1)",
          "D(2,1)"},
         {"D(1,1)", "D(1,2) + D(2,1)", "D(1,3) + D(2,1) + D(2,2) + D(3,1)"},
         {"D(1,4) + D(2,2) + D(2,3) + D(3,1) + D(3,2) + D(4,1)", "D(2,1)"}},
        {"B4_06", "B4_06", {"lambda"}, {{"lambda", "lambda"}}, {},
         {"D(1,1)", "D(1,2)", "D(1,3) + lambda*D(2,2) + lambda*D(3,1)",
          "D(1,4) + lambda*D(2,3) + lambda*D(3,2) + lambda*D(4,1)", "D(2,1)"},
         {"D(1,1)", "D(1,2) + lambda*D(2,1)", "D(1,3) + lambda*D(2,2) + lambda*D(3,1)"},
         {"D(1,4) + lambda*D(2,3) + lambda*D(3,2) + lambda*D(4,1)", "D(2,1)"}},

        {"B5_01", "B5_01", {}, {}, {},
         {"D(1,1)", "D(1,2)", "D(1,3) + D(2,2) + D(4,1)", "D(1,4)", "D(2,1)", "D(3,1)", "D(5,1)"},
         {"D(1,1)", "D(1,2)", "D(2,1)", "D(3,1)"},
         {"D(1,3) + D(2,2) + D(4,1)", "D(1,4)", "D(5,1)"}},
        {"B5_02", "B5_02", {"lambda"}, {{"lambda", "lambda"}}, {},
         {"D(1,1)", "D(1,2)", "D(1,3) - lambda*D(1,4)", "D(1,4) + D(2,2) + D(3,1)",
          "D(1,5) + lambda*D(2,3) + lambda*D(3,2) + lambda*D(5,1)", "D(2,1)", "D(4,1)"},
         {"D(1,1)", "D(1,2)", "D(1,3) + lambda*D(2,2) + lambda*D(3,1)", "D(2,1)"},
         {"D(1,4) + D(2,2) + D(3,1)", "D(1,5) + lambda*D(2,3) + lambda*D(3,2) + lambda*D(5,1)", "D(4,1)"}},
        {"B5_03", "B5_03", {"lambda", "mu"}, {{"lambda", "lambda"}, {"mu", "mu"}}, {"lambda*mu - 1"},
         {"D(1,1)", "D(1,2)", "D(1,3) + D(2,2) + D(4,1)", "D(1,4)", "D(2,1)", "D(3,1)"},
         {"D(1,1)", "D(1,2)", "D(1,3) + lambda*D(1,4) + D(2,2) + mu*D(3,1) + D(4,1)", "D(2,1)"},
         {"D(1,4)", "D(3,1)"}},
        {"B5_03(lambda,1/lambda)", "B5_03", {"lambda"}, {{"lambda", "lambda"}, {"mu", "1/lambda"}}, {"lambda"},
         {"D(1,1)", "D(1,2)", "D(1,3) + D(2,2) + D(4,1)", "D(1,4)",
          "lambda*D(1,5) + D(2,3) + lambda*D(2,4) + D(3,2) + lambda*D(4,2) + D(5,1)", "D(2,1)", "D(3,1)"},
         {"D(1,1)", "D(1,2)", "D(1,3) + lambda*D(1,4) + D(2,2) + (1/lambda)*D(3,1) + D(4,1)", "D(2,1)"},
         {"D(1,4)", "lambda*D(1,5) + D(2,3) + lambda*D(2,4) + D(3,2) + lambda*D(4,2) + D(5,1)", "D(3,1)"}},
        {"B5_04", "B5_04", {"lambda"}, {{"lambda", "lambda"}}, {},
         {"D(1,1)", "D(1,2)", "D(1,3) + D(2,2) + D(4,1)", "D(1,4)", "D(2,1)", "D(3,1)"},
         {"D(1,1)", "D(1,2)", "D(1,4) + lambda*D(3,1)", "D(2,1)"},
         {"D(1,3) + D(2,2) + D(4,1)", "D(3,1)"}},
        {"B5_05", "B5_05", {}, {}, {},
         {"D(1,1)", "D(1,2)", "D(1,3) + D(2,2) + D(4,1)", "D(1,4) + D(2,3) + D(3,2) + D(5,1)", "D(2,1)", "D(3,1)"},
         {"D(1,1)", "D(1,2) + D(3,1)", "D(1,3) + D(2,2) + D(4,1)", "D(2,1)"},
         {"D(1,4) + D(2,3) + D(3,2) + D(5,1)", "D(3,1)"}},
        {"B5_06", "B5_06", {}, {}, {},
         {"D(1,1)", "D(1,2)", "D(1,3) + D(2,2) + D(5,1)", "D(2,1)", "D(3,1)", "D(4,1)"},
         {"D(1,1)", "D(1,2) + D(4,1)", "D(2,1)", "D(3,1)"},
         {"D(1,3) + D(2,2) + D(5,1)", "D(4,1)"}},
        {"B5_07", "B5_07", {}, {}, {},
         {"D(1,1)", "D(1,2)", "D(2,1)", "D(3,1)", "D(4,1)", "D(5,1)"},
         {"D(1,1)", "D(2,1)", "D(3,1)", "D(4,1)"},
         {"D(1,2)", "D(5,1)"}},
        {"B5_08", "B5_08", {}, {}, {},
         {"D(1,1)", "D(1,2)", "D(1,3)", "D(1,4) + D(2,2) + D(3,1)", "D(1,5) + D(2,3) + D(3,2) + D(4,1)", "D(2,1)"},
         {"D(1,1)", "D(1,2)", "D(1,3) + D(2,1)", "D(1,4) + D(2,2) + D(3,1)"},
         {"D(1,5) + D(2,3) + D(3,2) + D(4,1)", "D(2,1)"}},
        {"B5_09", "B5_09", {}, {}, {},
         {"D(1,1)", "D(1,2)", "D(1,3) + D(2,2) + D(3,1)", "D(1,4) + D(2,2) + D(2,3) + D(3,1) + D(3,2) + D(4,1)",
          "D(1,5) + D(2,3) + D(2,4) + D(3,2) + D(3,3) + D(4,1) + D(4,2) + D(5,1)", "D(2,1)"},
         {"D(1,1)", "D(1,2) + D(2,1)", "D(1,3) + D(2,1) + D(2,2) + D(3,1)",
          "D(1,4) + D(2,2) + D(2,3) + D(3,1) + D(3,2) + D(4,1)"},
         {"D(1,5) + D(2,3) + D(2,4) + D(3,2) + D(3,3) + D(4,1) + D(4,2) + D(5,1)", "D(2,1)"}},
        {"B5_10", "B5_10", {"lambda"}, {{"lambda", "lambda"}}, {},
         {"D(1,1)", "D(1,2)", "D(1,3) + lambda*D(2,2) + lambda*D(3,1)",
          "D(1,4) + lambda*D(2,3) + lambda*D(3,2) + lambda*D(4,1)",
          "D(1,5) + lambda*D(2,4) + lambda*D(3,3) + lambda*D(4,2) + lambda*D(5,1)", "D(2,1)"},
         {"D(1,1)", "D(1,2) + lambda*D(2,1)", "D(1,3) + lambda*D(2,2) + lambda*D(3,1)",
          "D(1,4) + lambda*D(2,3) + lambda*D(3,2) + lambda*D(4,1)"},
         {"D(1,5) + lambda*D(2,4) + lambda*D(3,3) + lambda*D(4,2) + lambda*D(5,1)", "D(2,1)"}},
        {"B5_11", "B5_11", {}, {}, {},
         {"D(1,1)", "D(1,2)", "D(1,3)", "D(1,4)", "D(1,5) + D(2,2) + D(3,1)", "D(2,1)"},
         {"D(1,1)", "D(1,2)", "D(1,3)", "D(1,4) + D(2,1)"},
         {"D(1,5) + D(2,2) + D(3,1)", "D(2,1)"}},
        {"B5_12", "B5_12", {}, {}, {},
         {"D(1,1)", "D(1,2)", "D(1,3) + D(2,2) + D(3,1)", "D(1,4) + D(2,3) + D(3,2) + D(4,1)",
          "D(1,5) + D(2,2) + D(2,4) + D(3,1) + D(3,3) + D(4,2) + D(5,1)", "D(2,1)"},
         {"D(1,1)", "D(1,2) + D(2,1)", "D(1,3) + D(2,2) + D(3,1)", "D(1,4) + D(2,1) + D(2,3) + D(3,2) + D(4,1)"},
         {"D(1,5) + D(2,2) + D(2,4) + D(3,1) + D(3,3) + D(4,2) + D(5,1)", "D(2,1)"}},
    };
    return data;
}

inline std::vector<ParentData> const &parents()
{
    auto fam = [](std::string parent, std::vector<std::string> pp, std::vector<std::vector<std::string>> rows,
                  std::vector<std::string> fparams = {}, std::map<std::string, std::string> pb = {},
                  std::vector<std::string> nz = {}) {
        AutFamily f;
        f.parent_name = std::move(parent);
        f.family_params = std::move(fparams);
        f.parent_bindings = std::move(pb);
        f.family_nonzero = std::move(nz);
        f.pattern_params = std::move(pp);
        f.pattern = std::move(rows);
        return f;
    };
    std::map<std::string, std::string> const lam{{"lambda", "lambda"}};
    static std::vector<ParentData> const data = {
        {"B4_01",
         fam("B4_01", {"x", "y", "z", "t"},
             {{"x", "0", "0", "0"}, {"y", "x^2", "0", "0"}, {"z", "x*y", "x^3", "0"}, {"t", "x*y", "0", "x^3"}}),
         {"D(1,4)", "D(3,1)", "D(1,3) + D(4,1) + D(2,2)"},
         {"x^4*alpha1", "x^4*alpha2", "x^4*alpha3"}},
        {"B4_02",
         fam("B4_02", {"x", "y", "z"},
             {{"1", "0", "0", "0"}, {"x", "1", "0", "0"}, {"y", "x", "1", "0"}, {"z", "x+y", "x", "1"}}),
         {"D(3,1)", "D(1,3) + D(2,2) + D(4,1)"},
         {"alpha1 - x*alpha2", "alpha2"}},
        {"B4_03",
         fam("B4_03", {"x", "y", "z", "t"},
             {{"x", "0", "0", "0"}, {"y", "x^2", "0", "0"}, {"z", "x*y", "x^3", "0"}, {"t", "x*z", "x^2*y", "x^4"}}),
         {"D(1,2)", "D(4,1)"},
         {"x^3*alpha1", "x^5*alpha2"}},
        {"B4_04",
         fam("B4_04", {"x", "y", "z"},
             {{"1", "0", "0", "0"}, {"x", "1", "0", "0"}, {"y", "x", "1", "0"}, {"z", "x+y", "x", "1"}}),
         {"D(2,1)", "D(1,4) + D(2,2) + D(3,1)"},
         {"alpha1 + x*alpha2", "alpha2"}},
        {"B4_05",
         fam("B4_05", {"x", "y", "z"},
             {{"1", "0", "0", "0"}, {"x", "1", "0", "0"}, {"y", "2*x", "1", "0"}, {"z", "x^2+x+2*y", "3*x", "1"}}),
         {"D(2,1)", "D(1,4) + D(2,2) + D(2,3) + D(3,1) + D(3,2) + D(4,1)"},
         {"alpha1 - 2*x*alpha2", "alpha2"}},
        {"B4_06",
         fam("B4_06", {"x", "y", "z"},
             {{"x", "0", "0", "0"}, {"0", "x^2", "0", "0"}, {"y", "0", "x^3", "0"}, {"z", "(1+lambda)*x*y", "0", "x^4"}},
             {"lambda"}, lam),
         {"D(2,1)", "D(1,4) + lambda*D(2,3) + lambda*D(3,2) + lambda*D(4,1)"},
         {"x^3*alpha1 + (1-lambda)*lambda*x^2*y*alpha2", "x^5*alpha2"}},

        {"B5_01",
         fam("B5_01", {"x", "y", "z", "t", "s"},
             {{"x", "0", "0", "0", "0"},
              {"y", "x^2", "0", "0", "0"},
              {"z", "x*y", "x^3", "0", "0"},
              {"t", "x*y", "0", "x^3", "0"},
              {"s", "x*z", "x^2*y", "0", "x^4"}}),
         {"D(1,4)", "D(5,1)", "D(1,3) + D(2,2) + D(4,1)"},
         {"x^4*alpha1", "x^5*alpha2", "x^4*alpha3"}},
        {"B5_02",
         fam("B5_02", {"x", "y", "z", "t", "s"},
             {{"x", "0", "0", "0", "0"},
              {"y", "x^2", "0", "0", "0"},
              {"z", "(1+lambda)*x*y", "x^3", "0", "0"},
              {"t", "x*y", "0", "x^3", "0"},
              {"s", "lambda*y^2+(1+lambda)*x*z", "(1+2*lambda)*x^2*y", "lambda*(1-lambda)*x^2*y", "x^4"}},
             {"lambda"}, lam),
         {"D(4,1)", "D(1,4) + D(2,2) + D(3,1)", "D(1,5) + lambda*D(2,3) + lambda*D(3,2) + lambda*D(5,1)"},
         {"x^4*alpha1 + (1-lambda)*lambda^2*x^3*y*alpha3", "x^4*alpha2 + (1-lambda)*lambda*x^3*y*alpha3",
          "x^5*alpha3"}},
        {"B5_03(lambda,1/lambda)",
         fam("B5_03", {"x", "y", "z", "t", "s"},
             {{"x", "0", "0", "0", "0"},
              {"y", "x^2", "0", "0", "0"},
              {"z", "x*y", "x^3", "0", "0"},
              {"t", "x*y", "0", "x^3", "0"},
              {"s", "(1+1/lambda)*x*z+(1+lambda)*x*t+y^2", "(2+1/lambda)*x^2*y", "(2+lambda)*x^2*y", "x^4"}},
             {"lambda"}, {{"lambda", "lambda"}, {"mu", "1/lambda"}}, {"lambda"}),
         {"D(1,4)", "D(3,1)", "lambda*D(1,5) + D(2,3) + lambda*D(2,4) + D(3,2) + lambda*D(4,2) + D(5,1)"},
         {"x^4*alpha1 + (1-lambda)*lambda*x^3*y*alpha3", "x^4*alpha2 + (1-1/lambda)*x^3*y*alpha3",
          "x^5*alpha3"}},
        {"B5_05",
         fam("B5_05", {"x", "y", "z"},
             {{"1", "0", "0", "0", "0"},
              {"0", "1", "0", "0", "0"},
              {"x", "0", "1", "0", "0"},
              {"y", "x", "0", "1", "0"},
              {"z", "x+y", "x", "0", "1"}}),
         {"D(3,1)", "D(1,4) + D(2,3) + D(3,2) + D(5,1)"},
         {"alpha1 - x*alpha2", "alpha2"}},
        {"B5_06",
         fam("B5_06", {"x", "y", "z", "t"},
             {{"1", "0", "0", "0", "0"},
              {"x", "1", "0", "0", "0"},
              {"y", "x", "1", "0", "0"},
              {"z", "y", "x", "1", "0"},
              {"t", "x+z", "y", "x", "1"}}),
         {"D(4,1)", "D(1,3) + D(2,2) + D(5,1)"},
         {"alpha1 - x*alpha2", "alpha2"}},
        {"B5_07",
         fam("B5_07", {"x", "y", "z", "t", "s"},
             {{"x", "0", "0", "0", "0"},
              {"y", "x^2", "0", "0", "0"},
              {"z", "x*y", "x^3", "0", "0"},
              {"t", "x*z", "x^2*y", "x^4", "0"},
              {"s", "x*t", "x^2*z", "x^3*y", "x^5"}}),
         {"D(1,2)", "D(5,1)"},
         {"x^3*alpha1", "x^6*alpha2"}},
        {"B5_08",
         fam("B5_08", {"x", "y", "z"},
             {{"1", "0", "0", "0", "0"},
              {"0", "1", "0", "0", "0"},
              {"x", "0", "1", "0", "0"},
              {"y", "x", "0", "1", "0"},
              {"z", "x+y", "x", "0", "1"}}),
         {"D(2,1)", "D(1,5) + D(2,3) + D(3,2) + D(4,1)"},
         {"alpha1 + x*alpha2", "alpha2"}},
        {"B5_09",
         fam("B5_09", {"x", "y", "z"},
             {{"1", "0", "0", "0", "0"},
              {"0", "1", "0", "0", "0"},
              {"x", "0", "1", "0", "0"},
              {"y", "2*x", "0", "1", "0"},
              {"z", "x+2*y", "3*x", "0", "1"}}),
         {"D(2,1)", "D(1,5) + D(2,3) + D(2,4) + D(3,2) + D(3,3) + D(4,1) + D(4,2) + D(5,1)"},
         {"alpha1 - 2*x*alpha2", "alpha2"}},
        {"B5_10",
         fam("B5_10", {"x", "y", "z"},
             {{"x", "0", "0", "0", "0"},
              {"0", "x^2", "0", "0", "0"},
              {"0", "0", "x^3", "0", "0"},
              {"y", "0", "0", "x^4", "0"},
              {"z", "(1+lambda)*x*y", "0", "0", "x^5"}},
             {"lambda"}, lam),
         {"D(2,1)", "D(1,5) + lambda*D(2,4) + lambda*D(3,3) + lambda*D(4,2) + lambda*D(5,1)"},
         {"x^3*alpha1 + (1-lambda)*lambda*x^2*y*alpha2", "x^6*alpha2"}},
        {"B5_11",
         fam("B5_11", {"x", "y", "z", "t"},
             {{"1", "0", "0", "0", "0"},
              {"x", "1", "0", "0", "0"},
              {"y", "x", "1", "0", "0"},
              {"z", "y", "x", "1", "0"},
              {"t", "x+z", "y", "x", "1"}}),
         {"D(2,1)", "D(1,5) + D(2,2) + D(3,1)"},
         {"alpha1 + x*alpha2", "alpha2"}},
        {"B5_12",
         fam("B5_12", {"x", "y", "z", "t"},
             {{"1", "0", "0", "0", "0"},
              {"x", "1", "0", "0", "0"},
              {"y", "2*x", "1", "0", "0"},
              {"z", "x^2+2*y", "3*x", "1", "0"},
              {"t", "x*(1+2*y)+2*z", "3*x^2+3*y", "4*x", "1"}}),
         {"D(2,1)", "D(1,5) + D(2,2) + D(2,4) + D(3,1) + D(3,3) + D(4,2) + D(5,1)"},
         {"alpha1 - 3*x*alpha2", "alpha2"}},
    };
    return data;
}

} // namespace catalog_data

// ---------------------------------------------------------------- lookup

inline CatalogEntry const &catalog_entry(std::string const &name)
{
    for (auto const &e : catalog_data::entries())
        if (e.name == name)
            return e;
    throw Error("unknown catalog entry '" + name + "'");
}

inline ParentData const &parent_data(std::string const &key)
{
    for (auto const &p : catalog_data::parents())
        if (p.key == key)
            return p;
    throw Error("no automorphism data for '" + key + "'");
}

/// Sorted names, optionally restricted to one dimension.
inline std::vector<std::string> list_entries(std::optional<std::size_t> dim = std::nullopt)
{
    std::vector<std::string> out;
    for (auto const &e : catalog_data::entries())
        if (!dim || e.dim == *dim)
            out.push_back(e.name);
    std::sort(out.begin(), out.end());
    return out;
}

/// The entry as a parametric algebra file over `field`.
inline ParametricAlgebra catalog_table(CatalogEntry const &e, FieldSpec const &field = FieldSpec::rationals())
{
    ParametricAlgebra pa;
    pa.name = e.name;
    pa.dim = e.dim;
    pa.field = field;
    pa.params = e.params;
    std::size_t start = 0;
    std::size_t line = 0;
    while (start <= e.table.size())
    {
        auto end = e.table.find(';', start);
        if (end == std::string::npos)
            end = e.table.size();
        auto text = detail::trim(e.table.substr(start, end - start));
        ++line;
        if (!text.empty())
            pa.products.push_back(detail::parse_product_line(text, e.dim, e.params, line));
        start = end + 1;
    }
    return pa;
}

namespace detail {

inline void check_nonzero(std::string const &name, std::vector<std::string> const &nonzero, FieldSpec const &f,
                          Bindings const &b)
{
    for (auto const &c : nonzero)
    {
        Scalar v;
        try
        {
            v = Expr::parse(c).eval(f, b);
        }
        catch (UnboundName const &)
        {
            throw;
        }
        catch (Error const &err)
        {
            throw ConstraintViolation(name + ": constraint " + c + " != 0: " + err.what());
        }
        if (v.is_zero())
            throw ConstraintViolation(name + ": constraint " + c + " != 0 is violated");
    }
}

inline Bindings evaluate_bindings(std::map<std::string, std::string> const &exprs, FieldSpec const &f,
                                  Bindings const &b, std::string const &context)
{
    Bindings out;
    for (auto const &[k, e] : exprs)
    {
        try
        {
            out.emplace(k, Expr::parse(e).eval(f, b));
        }
        catch (UnboundName const &)
        {
            throw;
        }
        catch (Error const &err)
        {
            throw ConstraintViolation(context + ": " + k + " = " + e + ": " + err.what());
        }
    }
    return out;
}

inline void check_params(CatalogEntry const &e, Bindings const &b)
{
    for (auto const &p : e.params)
        if (!b.count(p))
            throw UnboundName(e.name + ": parameter '" + p + "' is not bound");
    for (auto const &[k, v] : b)
        if (std::find(e.params.begin(), e.params.end(), k) == e.params.end())
            throw Error(e.name + ": '" + k + "' is not a parameter");
}

} // namespace detail

inline Algebra instantiate(std::string const &name, Bindings const &bindings, FieldSpec const &field)
{
    auto const &e = catalog_entry(name);
    detail::check_params(e, bindings);
    detail::check_nonzero(name, e.nonzero, field, bindings);
    return catalog_table(e, field).instantiate(bindings, field);
}

/// Adapter for verify_aut_family and friends.
inline ParentResolver catalog_resolver()
{
    return [](std::string const &n, Bindings const &b, FieldSpec const &f) { return instantiate(n, b, f); };
}

/// Parses "lambda*N1 + N3" into coefficient per class index (1-based), using
/// linearity: the coefficient of N<i> is value(N<i>=1, others 0) - value(all 0).
inline Vec nabla_coordinates(std::string const &combo, std::size_t count, FieldSpec const &f, Bindings const &b)
{
    auto e = Expr::parse(combo);
    auto eval_with = [&](std::optional<std::size_t> hot) {
        Bindings bb = b;
        for (std::size_t i = 0; i < count; ++i)
            bb.insert_or_assign("N" + std::to_string(i + 1),
                                hot && *hot == i ? Scalar::one(f) : Scalar::zero(f));
        return e.eval(f, bb);
    };
    auto base = eval_with(std::nullopt);
    if (!base.is_zero())
        throw Error("class combination '" + combo + "' has a constant term");
    Vec out(count, Scalar::zero(f));
    for (std::size_t i = 0; i < count; ++i)
        out[i] = eval_with(i) - base;
    return out;
}

/// Parent algebra and cocycles of an entry's provenance at the given bindings.
inline ExtensionSpec provenance_spec(std::string const &name, Bindings const &bindings, FieldSpec const &field)
{
    auto const &e = catalog_entry(name);
    if (!e.provenance)
        throw PreconditionError(name + " has no provenance");
    detail::check_params(e, bindings);
    detail::check_nonzero(name, e.nonzero, field, bindings);
    auto const &pv = *e.provenance;
    auto pb = detail::evaluate_bindings(pv.parent_bindings, field, bindings, name);
    auto parent = instantiate(pv.parent, pb, field);
    std::vector<BilinearForm> theta;
    for (auto const &c : pv.cocycles)
    {
        if (pv.dictionary.empty())
        {
            theta.push_back(parse_form(c, parent.dim(), field, bindings));
            continue;
        }
        auto const &pd = parent_data(pv.dictionary);
        auto coords = nabla_coordinates(c, pd.nabla.size(), field, bindings);
        BilinearForm f(field, parent.dim());
        for (std::size_t i = 0; i < pd.nabla.size(); ++i)
            if (!coords[i].is_zero())
                f = f + coords[i] * parse_form(pd.nabla[i], parent.dim(), field, pb);
        theta.push_back(f);
    }
    return {parent, theta};
}

/// central_extension of the recorded parent and cocycles equals the entry
/// exactly, structure constant by structure constant.
inline bool provenance_check(std::string const &name, Bindings const &bindings, FieldSpec const &field)
{
    auto spec = provenance_spec(name, bindings, field);
    auto built = central_extension(spec);
    auto expected = instantiate(name, bindings, field);
    if (built.dim() != expected.dim())
        return false;
    for (std::size_t i = 0; i < built.dim(); ++i)
        for (std::size_t j = 0; j < built.dim(); ++j)
            for (std::size_t k = 0; k < built.dim(); ++k)
                if (built.coeff(i, j, k) != expected.coeff(i, j, k))
                    return false;
    return true;
}

// ---------------------------------------------------------------- sampling

/// Parameter values used for sampled checks over Q.
inline std::vector<Scalar> rational_sample_values()
{
    auto q = FieldSpec::rationals();
    return {Scalar(q, mpq_class(0)), Scalar(q, mpq_class(1)), Scalar(q, mpq_class(-1)), Scalar(q, mpq_class(2)),
            Scalar(q, mpq_class(1, 2))};
}

/// Every assignment of `values` to `params` (cartesian product, first
/// parameter varying slowest).
inline std::vector<Bindings> sample_points(std::vector<std::string> const &params, std::vector<Scalar> const &values)
{
    std::vector<Bindings> out{Bindings{}};
    for (auto const &p : params)
    {
        std::vector<Bindings> next;
        for (auto const &b : out)
            for (auto const &v : values)
            {
                auto nb = b;
                nb.insert_or_assign(p, v);
                next.push_back(std::move(nb));
            }
        out = std::move(next);
    }
    return out;
}

/// Sample points of an entry that satisfy its constraints.
inline std::vector<Bindings> valid_samples(CatalogEntry const &e, FieldSpec const &f, std::vector<Scalar> const &values)
{
    std::vector<Bindings> out;
    for (auto const &b : sample_points(e.params, values))
    {
        try
        {
            detail::check_nonzero(e.name, e.nonzero, f, b);
            catalog_table(e, f).instantiate(b, f);
            out.push_back(b);
        }
        catch (ConstraintViolation const &)
        {
        }
    }
    return out;
}

inline std::string bindings_to_string(Bindings const &b)
{
    std::string s;
    for (auto const &[k, v] : b)
        s += (s.empty() ? "" : ",") + k + "=" + v.to_string();
    return s.empty() ? "-" : s;
}

// ---------------------------------------------------------------- H^2 coordinates

/// Columns: coordinates of the published classes N_1.. in the computed H^2 basis.
inline Matrix nabla_change_of_coordinates(CohomologySpace const &space, std::vector<std::string> const &nabla,
                                          Bindings const &parent_bindings)
{
    auto const &a = space.algebra();
    Matrix m(a.field(), space.h2_dim(), nabla.size());
    for (std::size_t c = 0; c < nabla.size(); ++c)
    {
        auto form = parse_form(nabla[c], a.dim(), a.field(), parent_bindings);
        if (!space.is_cocycle(form))
            throw Error("published class " + nabla[c] + " is not a cocycle");
        auto coords = space.class_coordinates(form);
        for (std::size_t r = 0; r < coords.size(); ++r)
            m(r, c) = coords[r];
    }
    return m;
}

} // namespace nilext
