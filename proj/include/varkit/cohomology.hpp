#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "varkit/geometry.hpp"
#include "varkit/numeric.hpp"
#include "varkit/picard.hpp"

namespace varkit {

/// h^0..h^d of a sheaf on a d-dimensional variety.
using CohomologyVector = std::vector<Integer>;

Integer euler_characteristic(const CohomologyVector& h);

/// Bott formula on P^n: cohomology of O(d) concentrates in degree 0 or n,
/// h^0 = C(n+d, n) for d >= 0 and h^n = C(-d-1, n) for d <= -n-1.
CohomologyVector bott_pn(std::size_t n, const Integer& d);

/// Graded convolution of Bott vectors for a product of projective spaces.
CohomologyVector kunneth(const std::vector<std::pair<std::size_t, Integer>>& factors);

/// Pushforward of O(mH + D) along a split projective bundle P(E) -> base in
/// the convention O(-H) into pi^*E: a split bundle on the base together with
/// the cohomological degree shift of the only nonzero derived pushforward.
struct PushforwardResult {
    FormalBundle bundle;
    std::size_t degree_shift = 0;
};

PushforwardResult pushforward_proj_bundle(const Integer& m, const FormalBundle& E,
                                          const DivisorClass& D);

/// Cohomology of a line bundle on a product of projective spaces or on a
/// split projective bundle over one (composes pushforward and Kuenneth).
CohomologyVector line_bundle_cohomology(const VarietyExpr& v, const DivisorClass& L);

/// One Koszul term Lambda^k F_dual with its ambient cohomology.
struct KoszulColumn {
    std::size_t k = 0;
    CohomologyVector term_cohomology;
};

struct KoszulResult {
    CohomologyVector h;  // h^*(Z, O_Z)
    std::vector<KoszulColumn> columns;
};

/// Hypercohomology of the Koszul resolution of O_Z for the zero locus Z of a
/// split bundle F, from the E1 page. Refuses (throws std::domain_error
/// naming the offending columns) whenever the spectral sequence is not
/// trivially degenerate, i.e. whenever any differential could be nonzero.
KoszulResult koszul_structure_cohomology(const VarietyExpr& ambient, const FormalBundle& F);

/// Alternating sum of the Koszul-term Euler characteristics; defined even
/// when the spectral sequence does not trivially degenerate.
Integer euler_characteristic_koszul(const VarietyExpr& ambient, const FormalBundle& F);

}  // namespace varkit
