#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "varkit/geometry.hpp"
#include "varkit/picard.hpp"

namespace varkit {

/// Error in a variety-description file, with 1-based position.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, std::size_t column, const std::string& message)
        : std::runtime_error("line " + std::to_string(line) + ", column " +
                             std::to_string(column) + ": " + message),
          line_(line),
          column_(column) {}

    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    std::size_t line_, column_;
};

/// A parsed description file: named definitions in order; the last
/// definition is the variety of interest.
struct VarietyDocument {
    std::vector<std::pair<std::string, VarietyPtr>> definitions;
    std::string result_name;
    VarietyPtr result;

    VarietyPtr find(const std::string& name) const;
};

/// One construction per line, `name = constructor args`:
///
///   S  = atomic enriques            (enriques | k3 | point)
///   P  = projective 2 gen=H1        (gen optional, default h)
///   G  = grassmannian 2 4 gen=s1    (gen optional, default s1)
///   B  = product P1 P2
///   J  = projbundle B [(-2,0),(0,-2)] H
///   M  = blowup G S codim=2 E
///   Z  = zerolocus A bundle=[(2,0),(0,2)]     (split)
///   Z  = zerolocus A bundle=3:(3,3)           (formal: rank, c1)
///   X  = universal J w=3 jump=S gen=H'
///   V  = identify A B ...
///
/// `#` starts a comment; blank lines are skipped.
VarietyDocument parse_variety_document(const std::string& text);

/// Reads and parses; file errors become std::runtime_error.
VarietyDocument load_variety_document(const std::string& path);

/// Signed integer combination of generator names, e.g. "-H1 - H2 - H - 2H'"
/// or "0". Throws std::invalid_argument on unknown generators.
DivisorClass parse_divisor_class(const std::string& text, const PicardLattice::Ptr& lattice);

}  // namespace varkit
