#include <doctest.h>

#include "varkit/catalog.hpp"
#include "varkit/geometry.hpp"
#include "varkit/hodge.hpp"
#include "varkit/ktheory.hpp"

using namespace varkit;

TEST_CASE("dimensions of the catalog varieties") {
    CHECK(dimension(*catalog::reye_fourfold()) == 4);
    CHECK(dimension(*catalog::join_resolution()) == 5);
    CHECK(dimension(*catalog::join_double_cover()) == 5);
    CHECK(dimension(*catalog::enriques_sixfold()) == 6);
    CHECK(dimension(*catalog::k3_cover_surface()) == 2);
    CHECK(dimension(*VarietyExpr::product(VarietyExpr::point(), VarietyExpr::point())) == 0);
    CHECK(dimension(*VarietyExpr::grassmannian24()) == 4);
}

TEST_CASE("construction validates dimension bookkeeping") {
    CHECK_THROWS_AS(
        VarietyExpr::blow_up(VarietyExpr::grassmannian24(), VarietyExpr::enriques(), 3, "E"),
        std::invalid_argument);
    CHECK_THROWS_AS(
        VarietyExpr::blow_up(VarietyExpr::grassmannian24(), VarietyExpr::enriques(), 1, "E"),
        std::invalid_argument);
    // exceptional divisor name must be fresh
    CHECK_THROWS_AS(
        VarietyExpr::blow_up(VarietyExpr::grassmannian24(), VarietyExpr::enriques(), 2, "s1"),
        std::invalid_argument);
    // name collision in a product lattice
    CHECK_THROWS_AS(VarietyExpr::product(VarietyExpr::projective_space(1),
                                         VarietyExpr::projective_space(2)),
                    std::invalid_argument);
}

TEST_CASE("hodge of the fourfold via the blowup model") {
    CHECK(hodge(*catalog::reye_fourfold()) == HodgeDiamond::diagonal({1, 2, 12, 2, 1}));
}

TEST_CASE("hodge of the sixfold via the universal-divisor rule") {
    CHECK(hodge(*catalog::enriques_sixfold()) ==
          HodgeDiamond::diagonal({1, 4, 9, 20, 9, 4, 1}));
}

TEST_CASE("hodge of projective space and products") {
    CHECK(hodge(*VarietyExpr::projective_space(3)) == HodgeDiamond::projective_space(3));
    CHECK(hodge(*catalog::plane_pair()) == HodgeDiamond::diagonal({1, 2, 3, 2, 1}));
    CHECK(hodge(*catalog::join_resolution()) == HodgeDiamond::diagonal({1, 3, 5, 5, 3, 1}));
}

TEST_CASE("hodge has no rule for zero loci") {
    CHECK_THROWS_WITH_AS(hodge(*catalog::k3_cover_surface()),
                         doctest::Contains("no Hodge rule"), std::domain_error);
}

TEST_CASE("the bundle diamond equals the Kuenneth product for every base") {
    // both pipelines compute the same sums of shifted copies
    for (std::size_t r = 1; r <= 3; ++r) {
        for (const auto& base :
             {VarietyExpr::enriques(), VarietyExpr::grassmannian24(), VarietyExpr::k3()}) {
            CHECK(projective_bundle_diamond(hodge(*base), r) ==
                  diamond_product(hodge(*base), HodgeDiamond::projective_space(r - 1)));
        }
    }
}

TEST_CASE("canonical classes of the catalog varieties") {
    CHECK(canonical(*catalog::enriques_sixfold()).render() == "-H1 - H2 - H - 2H'");
    CHECK(canonical(*catalog::join_resolution()).render() == "-H1 - H2 - 2H");
    CHECK(canonical(*catalog::join_double_cover()).render() == "-2H~1 - 2H~2 - 2H~");
    CHECK(canonical(*catalog::k3_cover_surface()).render() == "-2H~1 - 2H~2 + 4H~");
    CHECK(canonical(*VarietyExpr::projective_space(5, "p")).render() == "-6p");
    CHECK(canonical(*VarietyExpr::grassmannian24()).render() == "-4s1");
}

TEST_CASE("canonical of an identified variety comes from the first supporting model") {
    auto M = catalog::reye_fourfold();
    // first model is the blowup of the Grassmannian
    CHECK(canonical(*M).render() == "-4s1 + E");
}

TEST_CASE("atomic varieties without canonical data refuse the query") {
    CHECK_THROWS_AS(canonical(*VarietyExpr::enriques()), std::domain_error);
    CHECK(canonical(*VarietyExpr::k3()).is_zero());
    CHECK(canonical(*VarietyExpr::point()).is_zero());
}

TEST_CASE("universal divisor canonical needs a projective-bundle base") {
    auto bad = VarietyExpr::universal_divisor(catalog::plane_pair(), 3, VarietyExpr::point());
    CHECK_THROWS_AS(canonical(*bad), std::domain_error);
}

TEST_CASE("sod flattening rules") {
    SodSummary m = sod(*catalog::reye_fourfold());
    REQUIRE(m.size() == 2);
    CHECK(!m[0].atom);
    CHECK(m[0].count == 6);
    CHECK(m[1].atom->as_atomic().name == "enriques");
    CHECK(m[1].count == 1);
    CHECK(sod_exceptional_total(m) == 6);

    SodSummary x = sod(*catalog::enriques_sixfold());
    REQUIRE(x.size() == 3);
    CHECK(x[0].count == 18);
    CHECK(x[1].count == 18);
    CHECK(x[2].atom->as_atomic().name == "enriques");
    CHECK(sod_exceptional_total(x) == 36);

    SodSummary p2 = sod(*VarietyExpr::projective_space(2));
    REQUIRE(p2.size() == 1);
    CHECK(p2[0].count == 3);
}

TEST_CASE("sod multiplies through products and bundles") {
    auto p1xp2 = VarietyExpr::product(VarietyExpr::projective_space(1, "a"),
                                      VarietyExpr::projective_space(2, "b"));
    CHECK(sod_exceptional_total(sod(*p1xp2)) == 6);
    auto sxp1 = VarietyExpr::product(VarietyExpr::enriques(),
                                     VarietyExpr::projective_space(1));
    SodSummary s = sod(*sxp1);
    REQUIRE(s.size() == 1);
    CHECK(s[0].atom->as_atomic().name == "enriques");
    CHECK(s[0].count == 2);
    auto ss = VarietyExpr::product(VarietyExpr::enriques(), VarietyExpr::k3());
    CHECK_THROWS_AS(sod(*ss), std::domain_error);
    CHECK_THROWS_AS(sod(*catalog::k3_cover_surface()), std::domain_error);
}

TEST_CASE("k0 by SOD additivity") {
    CHECK(k0(*catalog::reye_fourfold()).render() == "Z^18 (+) Z/2");
    CHECK(k0(*catalog::enriques_sixfold()).render() == "Z^48 (+) Z/2");
    CHECK(k0(*VarietyExpr::projective_space(3)) == FgAbGroup::free(4));
    CHECK(k0(*VarietyExpr::grassmannian24()) == FgAbGroup::free(6));
    CHECK(k0(*catalog::join_resolution()) == FgAbGroup::free(18));
}

TEST_CASE("k0 rank equals the diamond total across the catalog") {
    for (const auto& v : {catalog::reye_fourfold(), catalog::enriques_sixfold(),
                          catalog::join_resolution(), catalog::plane_pair(),
                          VarietyExpr::enriques(), VarietyExpr::k3(),
                          VarietyExpr::grassmannian24()}) {
        CHECK(k0(*v).rank() == hodge(*v).total());
    }
}

TEST_CASE("diamond total equals the sum of component totals") {
    for (const auto& v : {catalog::reye_fourfold(), catalog::enriques_sixfold()}) {
        Integer total = 0;
        for (const auto& c : sod(*v)) {
            if (c.atom)
                total += hodge(*c.atom).total() * Integer(static_cast<long>(c.count));
            else
                total += Integer(static_cast<long>(c.count));
        }
        CHECK(total == hodge(*v).total());
    }
}

TEST_CASE("identified queries fall through to the first supporting model") {
    auto M = catalog::reye_fourfold();
    const auto& models = M->as_identified().models;
    // reversed order: the zero-locus model cannot answer diamond/SOD
    // queries, so they fall through to the blowup model
    auto reversed = VarietyExpr::identified({models[1], models[0]});
    CHECK(hodge(*reversed) == hodge(*M));
    CHECK(sod_exceptional_total(sod(*reversed)) == 6);
    CHECK(k0(*reversed) == k0(*M));
    // canonical comes from the first model, which now is the zero locus
    CHECK(canonical(*reversed).render() == "-s1 - H'");
    // a single unsupported model still reports the underlying error
    auto zl_only = VarietyExpr::identified({models[1]});
    CHECK_THROWS_AS(hodge(*zl_only), std::domain_error);
}

TEST_CASE("identified models must agree on dimension") {
    CHECK_THROWS_AS(
        VarietyExpr::identified({VarietyExpr::projective_space(2), VarietyExpr::point()}),
        std::invalid_argument);
    CHECK_THROWS_AS(VarietyExpr::identified({}), std::invalid_argument);
}

TEST_CASE("describe renders the construction tree") {
    CHECK(describe(*catalog::join_resolution()) ==
          "projbundle(product(P^2, P^2), [(-2,0),(0,-2)], H)");
    CHECK(describe(*VarietyExpr::enriques()) == "atomic enriques");
    CHECK(describe(*catalog::enriques_sixfold()) ==
          "universal(projbundle(product(P^2, P^2), [(-2,0),(0,-2)], H), w=3, "
          "jump=atomic enriques, H')");
}

TEST_CASE("projective_space_factors flattens product trees") {
    auto pp = catalog::plane_pair();
    auto f = projective_space_factors(*pp);
    REQUIRE(f.has_value());
    REQUIRE(f->size() == 2);
    CHECK((*f)[0].second == "H1");
    CHECK_FALSE(projective_space_factors(*VarietyExpr::grassmannian24()).has_value());
}
