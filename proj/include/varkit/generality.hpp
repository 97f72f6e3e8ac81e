#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "varkit/numeric.hpp"

namespace varkit {

/// Coefficients of a plane conic in the fixed monomial order
/// x^2, xy, xz, y^2, yz, z^2.
using ConicCoeffs = std::array<Rational, 6>;

/// A linear map W -> Sym^2 V1_dual (+) Sym^2 V2_dual as a 3 x 12 matrix of
/// exact rationals: one row per basis vector of W, columns 0..5 the first
/// symmetric square, columns 6..11 the second, each in the fixed monomial
/// order above.
struct SectionPhi {
    std::array<std::array<Rational, 12>, 3> entries;

    /// The three conics of block 0 (columns 0..5) or block 1 (columns 6..11).
    std::array<ConicCoeffs, 3> block(std::size_t which) const;
};

/// Reproducible section with small integer entries in -9..9; the same seed
/// always yields the same matrix (golden-file pinned).
SectionPhi random_section(std::uint64_t seed);

/// 3 x 12 matrix, one row per line, entries space-separated integers or
/// fractions "p/q".
std::string render_section(const SectionPhi& phi);
SectionPhi parse_section(const std::string& text);

/// Exact rank of a rational matrix: rows are scaled integral and eliminated
/// fraction-free (Bareiss).
std::size_t rational_matrix_rank(const std::vector<std::vector<Rational>>& m);

/// Multiplication matrix (S_2)^3 -> S_4, (a,b,c) |-> a q1 + b q2 + c q3,
/// over the degree-4 monomial basis: 18 rows, 15 columns. Exposed so tests
/// can replay the rank computation independently (e.g. over a prime field).
std::vector<std::vector<Rational>> conic_multiplication_matrix(const ConicCoeffs& q1,
                                                               const ConicCoeffs& q2,
                                                               const ConicCoeffs& q3);

/// True iff the degree-4 part of the ideal (q1,q2,q3) fills S_4, i.e. the
/// multiplication matrix has rank 15. Rank 15 proves the three conics have
/// empty common zero locus in P^2 (Artinian complete intersection with
/// Hilbert series 1 + 3t + 3t^2 + t^3); rank < 15 only means "not
/// certified" -- for a triple with a genuine common zero it is always the
/// outcome.
bool conics_common_zero_empty(const ConicCoeffs& q1, const ConicCoeffs& q2,
                              const ConicCoeffs& q3);

/// Emptiness certificates for both induced triples (phi_1, phi_2): the
/// section avoids the exceptional divisors iff both hold.
std::pair<bool, bool> check_disjoint_from_exceptional(const SectionPhi& phi);

/// Conic after the linear substitution x |-> A x (exact, via the symmetric
/// Gram matrix A^T Q A). Used by the coordinate-change invariance suite.
ConicCoeffs conic_linear_substitution(const ConicCoeffs& q,
                                      const std::array<std::array<Rational, 3>, 3>& A);

/// Constructed failure inputs: phi_1 = (x^2, xy, xz) shares the zero line
/// x = 0, so the first certificate must come back false.
SectionPhi degenerate_phi_block1();
/// Zero second block: all of P(V2) is a common zero, second slot false.
SectionPhi degenerate_phi_block2();

}  // namespace varkit
