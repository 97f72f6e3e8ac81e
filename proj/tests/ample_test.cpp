#include <doctest.h>

#include <algorithm>

#include "varkit/ample.hpp"
#include "varkit/catalog.hpp"
#include "varkit/cohomology.hpp"

using namespace varkit;

namespace {

bool trace_has(const std::vector<std::string>& trace, const std::string& needle) {
    return std::any_of(trace.begin(), trace.end(), [&](const std::string& t) {
        return t.find(needle) != std::string::npos;
    });
}

}  // namespace

TEST_CASE("ampleness on a product of projective spaces is coefficient positivity") {
    auto pp = catalog::plane_pair();
    auto lat = pp->lattice();
    CHECK(is_ample_on_pn_product(DivisorClass(lat, {Integer(3), Integer(1)})));
    CHECK_FALSE(is_ample_on_pn_product(DivisorClass(lat, {Integer(1), Integer(0)})));
    CHECK_FALSE(is_ample_on_pn_product(DivisorClass::zero(lat)));
}

TEST_CASE("foreign generators are rejected, not judged") {
    auto j = catalog::join_resolution();
    CHECK_THROWS_AS(is_ample_on_pn_product(DivisorClass::zero(j->lattice())),
                    std::invalid_argument);
}

TEST_CASE("split bundles are ample iff every summand is") {
    auto lat = catalog::plane_pair()->lattice();
    FormalBundle good = FormalBundle::split({DivisorClass(lat, {Integer(3), Integer(1)}),
                                             DivisorClass(lat, {Integer(1), Integer(3)})});
    CHECK(is_ample_split_bundle(good));
    FormalBundle bad = FormalBundle::split({DivisorClass(lat, {Integer(3), Integer(1)}),
                                            DivisorClass(lat, {Integer(1), Integer(0)})});
    CHECK_FALSE(is_ample_split_bundle(bad));
    CHECK(is_ample_split_bundle(FormalBundle::split({}, lat)));
    CHECK_THROWS_AS(is_ample_split_bundle(FormalBundle::formal(2, DivisorClass::zero(lat))),
                    std::invalid_argument);
}

TEST_CASE("pushforward criterion on the join resolution") {
    auto j = catalog::join_resolution();
    auto lat = j->lattice();
    // H + H1 + H2 pushes to O(3,1) (+) O(1,3)
    DivisorClass L(lat, {Integer(1), Integer(1), Integer(1)});
    std::vector<std::string> trace;
    CHECK(is_ample_on_proj_bundle(*j, L, &trace));
    CHECK(trace_has(trace, "O(3,1)"));
    CHECK(trace_has(trace, "O(1,3)"));
    // H alone pushes to O(2,0) (+) O(0,2): not ample
    CHECK_FALSE(is_ample_on_proj_bundle(*j, DivisorClass(lat, {Integer(0), Integer(0), Integer(1)})));
    // 2H + H1 + H2 pushes to O(5,1) (+) O(3,3) (+) O(1,5): ample
    std::vector<std::string> trace2;
    CHECK(is_ample_on_proj_bundle(*j, DivisorClass(lat, {Integer(1), Integer(1), Integer(2)}),
                                  &trace2));
    CHECK(trace_has(trace2, "O(5,1)"));
    CHECK(trace_has(trace2, "O(3,3)"));
    CHECK(trace_has(trace2, "O(1,5)"));
}

TEST_CASE("pushforward criterion is inapplicable for m <= 0") {
    auto j = catalog::join_resolution();
    auto lat = j->lattice();
    CHECK_THROWS_WITH_AS(
        is_ample_on_proj_bundle(*j, DivisorClass(lat, {Integer(1), Integer(1), Integer(0)})),
        doctest::Contains("inapplicable"), std::domain_error);
}

TEST_CASE("degree-one pushforward agrees with the cohomology-module pushforward") {
    auto j = catalog::join_resolution();
    const auto& E = j->as_proj_bundle().bundle;
    auto base_lat = E.c1().lattice();
    for (long a = -1; a <= 2; ++a)
        for (long b = -1; b <= 2; ++b) {
            DivisorClass D(base_lat, {Integer(a), Integer(b)});
            // route 1: (Sym^1 E)_dual (x) O(D); route 2: Sym^1 (E_dual) (x) O(D)
            FormalBundle r1 = sym_power_split(E, 1).dual().twist(D);
            FormalBundle r2 = pushforward_proj_bundle(1, E, D).bundle;
            auto key = [](const FormalBundle& f) {
                std::vector<std::vector<Integer>> k;
                for (const auto& s : f.summands())
                    k.push_back(s.coeffs());
                std::sort(k.begin(), k.end());
                return k;
            };
            CHECK(key(r1) == key(r2));
        }
}

TEST_CASE("fano verdicts for the catalog") {
    FanoVerdict m = is_fano(*catalog::reye_fourfold());
    CHECK(m.fano);
    CHECK_FALSE(m.trace.empty());
    CHECK(trace_has(m.trace, "restriction"));

    FanoVerdict x = is_fano(*catalog::enriques_sixfold());
    CHECK(x.fano);
    CHECK(trace_has(x.trace, "O(3,1)"));
    CHECK(trace_has(x.trace, "O(1,3)"));

    CHECK(is_fano(*VarietyExpr::projective_space(7)).fano);
    CHECK(is_fano(*VarietyExpr::grassmannian24()).fano);
    CHECK(is_fano(*catalog::plane_pair()).fano);
    CHECK(is_fano(*catalog::join_resolution()).fano);
}

TEST_CASE("non-certifiable inputs come back NotShown, never a false claim") {
    FanoVerdict k3 = is_fano(*VarietyExpr::k3());
    CHECK_FALSE(k3.fano);
    CHECK_FALSE(k3.reason.empty());
    FanoVerdict enriques = is_fano(*VarietyExpr::enriques());
    CHECK_FALSE(enriques.fano);
    CHECK(enriques.reason.find("canonical") != std::string::npos);
    // a blowup node alone has no ampleness criterion
    FanoVerdict bl = is_fano(*VarietyExpr::blow_up(VarietyExpr::grassmannian24(),
                                                   VarietyExpr::enriques(), 2, "E"));
    CHECK_FALSE(bl.fano);
    CHECK(bl.render().rfind("NotShown(", 0) == 0);
}

TEST_CASE("certified classes are closed under addition") {
    auto pp = catalog::plane_pair();
    auto ppl = pp->lattice();
    DivisorClass a(ppl, {Integer(3), Integer(1)});
    DivisorClass b(ppl, {Integer(1), Integer(2)});
    REQUIRE(is_ample_on_pn_product(a));
    REQUIRE(is_ample_on_pn_product(b));
    CHECK(is_ample_on_pn_product(a + b));

    auto j = catalog::join_resolution();
    auto jl = j->lattice();
    DivisorClass c(jl, {Integer(1), Integer(1), Integer(1)});
    DivisorClass d(jl, {Integer(1), Integer(1), Integer(2)});
    REQUIRE(is_ample_on_proj_bundle(*j, c));
    REQUIRE(is_ample_on_proj_bundle(*j, d));
    CHECK(is_ample_on_proj_bundle(*j, c + d));
}

TEST_CASE("the zero class is never certified") {
    auto pp = catalog::plane_pair();
    CHECK_FALSE(is_ample_on_pn_product(DivisorClass::zero(pp->lattice())));
    auto pt = VarietyExpr::product(VarietyExpr::point(), VarietyExpr::point());
    CHECK(pt->lattice()->rank() == 0);
}
