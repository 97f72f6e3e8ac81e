#pragma once

#include <string>
#include <vector>

#include "varkit/geometry.hpp"
#include "varkit/picard.hpp"

namespace varkit {

/// Verdicts here are one-sided certificates: `true`/`Fano` means certified
/// ample by the applicable criterion; failure to certify is never a claim of
/// non-ampleness except on products of projective spaces, where positivity
/// of every coefficient is an exact criterion.

/// Exact criterion on a product of projective spaces: ample iff every
/// coefficient is positive. The lattice must consist of hyperplane
/// generators only; foreign generators are an error.
bool is_ample_on_pn_product(const DivisorClass& L);

/// A split bundle on a product of projective spaces is ample iff every
/// summand is (Hartshorne's criterion for direct sums).
bool is_ample_split_bundle(const FormalBundle& E);

/// Ampleness of O(mH + D) on a split projective bundle over a product of
/// projective spaces, via ampleness of the pushforward Sym^m E_dual (x) O(D).
/// Only applicable for m >= 1; m <= 0 throws std::domain_error ("criterion
/// inapplicable"), which is not a non-ampleness claim.
bool is_ample_on_proj_bundle(const FormalBundle& E, const Integer& m, const DivisorClass& D,
                             std::vector<std::string>* trace = nullptr);

/// Convenience form splitting L into its H-coefficient and base part.
bool is_ample_on_proj_bundle(const VarietyExpr& bundle_node, const DivisorClass& L,
                             std::vector<std::string>* trace = nullptr);

struct FanoVerdict {
    bool fano = false;
    std::string reason;              // set when not certified
    std::vector<std::string> trace;  // chain of criteria applied

    std::string render() const { return fano ? "Fano" : "NotShown(" + reason + ")"; }
};

/// Certifies -K ample by decomposing over product factors and applying the
/// per-shape criteria; returns NotShown (never a false negative) when no
/// criterion applies.
FanoVerdict is_fano(const VarietyExpr& v);

}  // namespace varkit
