#pragma once

#include <string>

#include "varkit/geometry.hpp"
#include "varkit/picard.hpp"

namespace varkit {

enum class ReportFormat { Text, Machine };

/// Full analysis report: dimension, Hodge diamond and diagonality, canonical
/// class per model, Fano verdict with its certificate trace, structure-sheaf
/// cohomology for zero loci of split bundles, SOD summary, K0, and the
/// torsion obstruction verdict. Byte-deterministic for a fixed input.
std::string render_analysis(const std::string& name, const VarietyExpr& v, ReportFormat format);

/// h^0..h^d and chi of a line bundle (class 0 on a zero locus routes through
/// the Koszul resolution of the structure sheaf).
std::string render_cohomology(const std::string& name, const VarietyExpr& v,
                              const DivisorClass& L, ReportFormat format);

}  // namespace varkit
