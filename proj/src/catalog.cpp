#include "varkit/catalog.hpp"

namespace varkit::catalog {

namespace {

VarietyPtr plane_pair_named(const std::string& g1, const std::string& g2) {
    return VarietyExpr::product(VarietyExpr::projective_space(2, g1),
                                VarietyExpr::projective_space(2, g2));
}

FormalBundle diagonal_pair_bundle(const VarietyPtr& base, long d1, long d2) {
    auto lat = base->lattice();
    return FormalBundle::split({DivisorClass(lat, {Integer(d1), Integer(0)}),
                                DivisorClass(lat, {Integer(0), Integer(d2)})},
                               lat);
}

}  // namespace

VarietyPtr plane_pair() { return plane_pair_named("H1", "H2"); }

VarietyPtr join_resolution() {
    auto base = plane_pair();
    return VarietyExpr::proj_bundle(base, diagonal_pair_bundle(base, -2, -2), "H");
}

VarietyPtr join_double_cover() {
    auto base = plane_pair_named("H~1", "H~2");
    return VarietyExpr::proj_bundle(base, diagonal_pair_bundle(base, -1, -1), "H~");
}

FormalBundle k3_cutting_bundle() {
    auto jt = join_double_cover();
    auto lat = jt->lattice();
    DivisorClass twoH = DivisorClass::generator(lat, "H~") * Integer(2);
    return FormalBundle::split({twoH, twoH, twoH}, lat);
}

VarietyPtr k3_cover_surface() {
    return VarietyExpr::zero_locus(join_double_cover(), k3_cutting_bundle());
}

VarietyPtr reye_fourfold() {
    auto gr = VarietyExpr::grassmannian24();
    auto blowup_model = VarietyExpr::blow_up(gr, VarietyExpr::enriques(), 2, "E");
    auto ambient = VarietyExpr::product(gr, VarietyExpr::projective_space(3, "H'"));
    auto lat = ambient->lattice();
    auto cut = FormalBundle::formal(3, DivisorClass(lat, {Integer(3), Integer(3)}));
    auto zero_locus_model = VarietyExpr::zero_locus(ambient, std::move(cut));
    return VarietyExpr::identified({std::move(blowup_model), std::move(zero_locus_model)});
}

VarietyPtr enriques_sixfold() {
    return VarietyExpr::universal_divisor(join_resolution(), 3, VarietyExpr::enriques(), "H'");
}

}  // namespace varkit::catalog
