#pragma once

#include <string>
#include <vector>

#include "varkit/numeric.hpp"

namespace varkit {

class VarietyExpr;  // geometry.hpp

using IntMatrix = std::vector<std::vector<Integer>>;

/// Diagonalization of an integer matrix under unimodular row/column
/// operations, with the transformation certificate: unimodular U, V such
/// that U * input * V = diag. Diagonal entries are non-negative and form a
/// divisibility chain d1 | d2 | ... followed by zeros.
struct SmithNormalForm {
    IntMatrix diag;
    IntMatrix U;
    IntMatrix V;

    /// The invariant factors > 1 (torsion of the cokernel presentation).
    std::vector<Integer> invariant_factors() const;
};

SmithNormalForm smith_normal_form(const IntMatrix& m);

/// True iff U * m * V = diag and both transforms have determinant +-1.
/// Used by tests to validate every certificate.
bool verify_certificate(const IntMatrix& m, const SmithNormalForm& snf);

IntMatrix identity_matrix(std::size_t n);
IntMatrix matrix_product(const IntMatrix& a, const IntMatrix& b);
/// Exact determinant by fraction-free (Bareiss) elimination.
Integer determinant(const IntMatrix& m);

/// Finitely generated abelian group in canonical form: free rank plus a
/// divisibility chain of invariant factors, each > 1.
class FgAbGroup {
public:
    /// Normalizes an arbitrary factor list (drops units, rebuilds the chain).
    FgAbGroup(Integer rank, std::vector<Integer> torsion_factors);
    static FgAbGroup free(Integer rank) { return FgAbGroup(std::move(rank), {}); }
    static FgAbGroup trivial() { return FgAbGroup(0, {}); }

    const Integer& rank() const { return rank_; }
    const std::vector<Integer>& torsion() const { return torsion_; }

    bool operator==(const FgAbGroup& o) const;
    bool operator!=(const FgAbGroup& o) const { return !(*this == o); }

    /// "Z^r (+) Z/d1 (+) ...", "Z" for rank one, "0" for the trivial group.
    std::string render() const;

private:
    Integer rank_;
    std::vector<Integer> torsion_;
};

FgAbGroup direct_sum(const FgAbGroup& a, const FgAbGroup& b);

/// Torsion in K0 rules out a full exceptional collection (K0 of a category
/// generated by n exceptional objects is Z^n, hence torsion free); absence
/// of torsion proves nothing.
struct ObstructionVerdict {
    bool obstructed = false;
    Integer factor = 0;  // smallest invariant factor when obstructed

    /// "Obstructed(2)" or "NoObstruction".
    std::string label() const;
    /// Label plus the one-line explanation.
    std::string render() const;
};

ObstructionVerdict fec_obstruction(const FgAbGroup& g);

/// K0 of a variety expression by SOD additivity: every exceptional object
/// contributes a free Z summand, atomic components contribute stored groups.
FgAbGroup k0(const VarietyExpr& v);

}  // namespace varkit
