#include <doctest.h>

#include "varkit/catalog.hpp"
#include "varkit/hodge.hpp"
#include "varkit/ktheory.hpp"
#include "varkit/vdformat.hpp"

using namespace varkit;

TEST_CASE("a minimal file defines projective space") {
    VarietyDocument doc = parse_variety_document("P3 = projective 3\n");
    CHECK(doc.result_name == "P3");
    CHECK(doc.result->dim() == 3);
    CHECK(hodge(*doc.result) == HodgeDiamond::projective_space(3));
}

TEST_CASE("comments, blank lines, and custom generators") {
    VarietyDocument doc = parse_variety_document(
        "# a plane with a named hyperplane class\n"
        "\n"
        "P = projective 2 gen=H1   # trailing comment\n");
    CHECK(doc.result->lattice()->generators()[0].name == "H1");
}

TEST_CASE("the fourfold file reproduces the catalog construction") {
    VarietyDocument doc = parse_variety_document(
        "S  = atomic enriques\n"
        "G  = grassmannian 2 4\n"
        "Mb = blowup G S codim=2 E\n"
        "P3 = projective 3 gen=H'\n"
        "A  = product G P3\n"
        "Mz = zerolocus A bundle=3:(3,3)\n"
        "M  = identify Mb Mz\n");
    CHECK(doc.result->kind() == VarietyExpr::Kind::Identified);
    CHECK(hodge(*doc.result) == hodge(*catalog::reye_fourfold()));
    CHECK(k0(*doc.result) == k0(*catalog::reye_fourfold()));
    CHECK(doc.find("G") != nullptr);
    CHECK(doc.find("missing") == nullptr);
}

TEST_CASE("the sixfold file reproduces the catalog construction") {
    VarietyDocument doc = parse_variety_document(
        "S  = atomic enriques\n"
        "P1 = projective 2 gen=H1\n"
        "P2 = projective 2 gen=H2\n"
        "B  = product P1 P2\n"
        "J  = projbundle B [(-2,0),(0,-2)] H\n"
        "X  = universal J w=3 jump=S gen=H'\n");
    CHECK(hodge(*doc.result) == hodge(*catalog::enriques_sixfold()));
    CHECK(canonical(*doc.result).render() == "-H1 - H2 - H - 2H'");
}

TEST_CASE("split zero loci parse with tuple lists") {
    VarietyDocument doc = parse_variety_document(
        "P1 = projective 2 gen=H~1\n"
        "P2 = projective 2 gen=H~2\n"
        "B  = product P1 P2\n"
        "Jt = projbundle B [(-1,0),(0,-1)] H~\n"
        "St = zerolocus Jt bundle=[(0,0,2),(0,0,2),(0,0,2)]\n");
    CHECK(doc.result->dim() == 2);
    CHECK(canonical(*doc.result).render() == "-2H~1 - 2H~2 + 4H~");
}

TEST_CASE("parse errors carry line and column") {
    try {
        parse_variety_document("P = projective 2\nQ = projectve 3\n");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
        CHECK(std::string(e.what()).find("unknown constructor") != std::string::npos);
    }
    try {
        parse_variety_document("P = projective\n");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 1);
        CHECK(e.column() > 1);
    }
}

TEST_CASE("validation failures name the invariant and the line") {
    try {
        parse_variety_document(
            "S = atomic enriques\n"
            "G = grassmannian 2 4\n"
            "M = blowup G S codim=3 E\n");
        FAIL("expected a validation error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 3);
        CHECK(std::string(e.what()).find("codim") != std::string::npos);
    }
}

TEST_CASE("references must be defined and names unique") {
    CHECK_THROWS_AS(parse_variety_document("A = product B C\n"), ParseError);
    CHECK_THROWS_AS(parse_variety_document("A = projective 1\nA = projective 2\n"), ParseError);
    CHECK_THROWS_AS(parse_variety_document(""), ParseError);
    CHECK_THROWS_AS(parse_variety_document("A = projective 2 extra\n"), ParseError);
}

TEST_CASE("bundle tuples must match the lattice rank") {
    CHECK_THROWS_AS(parse_variety_document(
                        "P1 = projective 2 gen=H1\n"
                        "P2 = projective 2 gen=H2\n"
                        "B  = product P1 P2\n"
                        "J  = projbundle B [(-2),(0)] H\n"),
                    ParseError);
}

TEST_CASE("atomic names are checked") {
    CHECK_THROWS_AS(parse_variety_document("S = atomic abelian\n"), ParseError);
    VarietyDocument k3 = parse_variety_document("S = atomic k3\n");
    CHECK(hodge(*k3.result).h(2, 0) == 1);
    VarietyDocument pt = parse_variety_document("P = atomic point\n");
    CHECK(pt.result->dim() == 0);
}

TEST_CASE("divisor class parsing") {
    auto lat = PicardLattice::create({{"H1", GenKind::Hyperplane},
                                      {"H2", GenKind::Hyperplane},
                                      {"H", GenKind::RelativeClass},
                                      {"H'", GenKind::Hyperplane}});
    CHECK(parse_divisor_class("-H1 - H2 - H - 2H'", lat).render() == "-H1 - H2 - H - 2H'");
    CHECK(parse_divisor_class("H+H1+H2", lat).coeff("H") == 1);
    CHECK(parse_divisor_class("0", lat).is_zero());
    CHECK(parse_divisor_class("  3H' ", lat).coeff("H'") == 3);
    CHECK(parse_divisor_class("+2H - 17H2", lat).coeff("H2") == -17);
    CHECK_THROWS_AS(parse_divisor_class("H3", lat), std::invalid_argument);
    CHECK_THROWS_AS(parse_divisor_class("H1 H2", lat), std::invalid_argument);
    CHECK_THROWS_AS(parse_divisor_class("", lat), std::invalid_argument);
    CHECK_THROWS_AS(parse_divisor_class("5", lat), std::invalid_argument);
}

TEST_CASE("divisor class parsing with tilde names") {
    auto lat = PicardLattice::create({{"H~1", GenKind::Hyperplane},
                                      {"H~2", GenKind::Hyperplane},
                                      {"H~", GenKind::RelativeClass}});
    DivisorClass c = parse_divisor_class("-6H~", lat);
    CHECK(c.coeff("H~") == -6);
    CHECK(c.coeff("H~1") == 0);
    CHECK(parse_divisor_class("4H~ - 2H~1 - 2H~2", lat).render() == "-2H~1 - 2H~2 + 4H~");
}
