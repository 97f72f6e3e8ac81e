#pragma once

#include "varkit/geometry.hpp"

namespace varkit::catalog {

/// The built-in constructions the verification suite replays. Generator
/// names follow the conventional ones: H1, H2 on P^2 x P^2, H for the
/// relative class of the join resolution, H' for the linear system, H~ on
/// the double cover, s1 for the Pluecker class.

/// P(V1) x P(V2) with hyperplane classes H1, H2.
VarietyPtr plane_pair();

/// J = P(O(-2,0) (+) O(0,-2)) over P^2 x P^2, the resolution of the join of
/// the two Veronese surfaces; relative class H.
VarietyPtr join_resolution();

/// J~ = P(O(-1,0) (+) O(0,-1)) over P^2 x P^2 (generators H~1, H~2, H~),
/// the double cover of J branched over the contracted divisors.
VarietyPtr join_double_cover();

/// S~ = zero locus of O(2H~)^{(+)3} on J~; a K3 surface for a general
/// section.
VarietyPtr k3_cover_surface();

/// M = Bl_S Gr(2,4), identified with the zero locus of a rank-3 bundle with
/// c1 = (3,3) on Gr(2,4) x P^3. The blowup model answers diamond/SOD/K0
/// queries, the zero-locus model the adjunction and ampleness ones.
VarietyPtr reye_fourfold();

/// X = universal divisor of the linear system |O_J(H)| in J x P(W).
VarietyPtr enriques_sixfold();

/// The O(2H~)^{(+)3} bundle on J~ whose zero locus is S~.
FormalBundle k3_cutting_bundle();

}  // namespace varkit::catalog
