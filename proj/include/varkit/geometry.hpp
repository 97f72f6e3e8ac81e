#pragma once

#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "varkit/hodge.hpp"
#include "varkit/ktheory.hpp"
#include "varkit/picard.hpp"

namespace varkit {

class VarietyExpr;
using VarietyPtr = std::shared_ptr<const VarietyExpr>;

/// Atomic input data: a variety the calculus does not look inside.
struct AtomicData {
    std::string name;
    std::size_t dim = 0;
    HodgeDiamond diamond = HodgeDiamond::point();
    FgAbGroup k0 = FgAbGroup::trivial();
    std::optional<DivisorClass> canonical;  // absent when not representable
};

struct ProjectiveSpaceData {
    std::size_t n = 0;
    std::string gen = "h";
};

struct Grassmannian24Data {
    std::string gen = "s1";
};

struct ProductData {
    VarietyPtr left, right;
};

struct ProjBundleData {
    VarietyPtr base;
    FormalBundle bundle;         // split, summands in the base lattice
    std::string relative_class;  // the Grothendieck class, O(-H) into pi^*E
};

struct BlowUpData {
    VarietyPtr ambient;
    VarietyPtr center;
    std::size_t codim = 2;
    std::string exceptional;
};

struct ZeroLocusData {
    VarietyPtr ambient;
    FormalBundle bundle;
};

struct UniversalDivisorData {
    VarietyPtr base;
    std::size_t linear_system_dim = 3;  // w; generic fiber P^{w-2}, jumps to P^{w-1}
    VarietyPtr jump;
    std::string hyperplane;  // class of the P(W) factor
};

/// Several construction models declared to present the same variety.
/// Queries are answered by the first model that supports them.
struct IdentifiedData {
    std::vector<VarietyPtr> models;
};

/// Expression tree of variety constructions. Each node knows its dimension
/// and Picard lattice at construction time; diamonds, canonical classes,
/// SOD summaries and K0 are computed on demand. Immutable once built.
class VarietyExpr {
public:
    enum class Kind {
        Atomic,
        ProjectiveSpace,
        Grassmannian24,
        Product,
        ProjBundle,
        BlowUp,
        ZeroLocus,
        UniversalDivisor,
        Identified,
    };

    static VarietyPtr atomic(AtomicData data);
    static VarietyPtr projective_space(std::size_t n, std::string gen = "h");
    static VarietyPtr grassmannian24(std::string gen = "s1");
    static VarietyPtr product(VarietyPtr left, VarietyPtr right);
    static VarietyPtr proj_bundle(VarietyPtr base, FormalBundle bundle,
                                  std::string relative_class);
    static VarietyPtr blow_up(VarietyPtr ambient, VarietyPtr center, std::size_t codim,
                              std::string exceptional);
    static VarietyPtr zero_locus(VarietyPtr ambient, FormalBundle bundle);
    static VarietyPtr universal_divisor(VarietyPtr base, std::size_t linear_system_dim,
                                        VarietyPtr jump, std::string hyperplane = "H'");
    static VarietyPtr identified(std::vector<VarietyPtr> models);

    // Built-in atoms with the standard data.
    static VarietyPtr enriques();
    static VarietyPtr k3();
    static VarietyPtr point();

    Kind kind() const { return kind_; }
    std::size_t dim() const { return dim_; }
    const PicardLattice::Ptr& lattice() const { return lattice_; }

    const AtomicData& as_atomic() const;
    const ProjectiveSpaceData& as_projective_space() const;
    const Grassmannian24Data& as_grassmannian24() const;
    const ProductData& as_product() const;
    const ProjBundleData& as_proj_bundle() const;
    const BlowUpData& as_blow_up() const;
    const ZeroLocusData& as_zero_locus() const;
    const UniversalDivisorData& as_universal_divisor() const;
    const IdentifiedData& as_identified() const;

protected:
    using Data = std::variant<AtomicData, ProjectiveSpaceData, Grassmannian24Data, ProductData,
                              ProjBundleData, BlowUpData, ZeroLocusData, UniversalDivisorData,
                              IdentifiedData>;
    VarietyExpr(Kind kind, Data data, std::size_t dim, PicardLattice::Ptr lattice);

private:
    Kind kind_;
    Data data_;
    std::size_t dim_;
    PicardLattice::Ptr lattice_;
};

std::size_t dimension(const VarietyExpr& v);

/// Hodge diamond by structural recursion. Zero-locus nodes have no Hodge
/// rule and report that as an error.
HodgeDiamond hodge(const VarietyExpr& v);

/// Canonical class in the node's lattice.
DivisorClass canonical(const VarietyExpr& v);

/// One flattened SOD component: either a block of exceptional objects
/// (atom == nullptr) or `count` copies of the derived category of an atom.
struct SodComponent {
    VarietyPtr atom;
    std::size_t count = 0;
};
using SodSummary = std::vector<SodComponent>;

/// Flattened semiorthogonal decomposition summary. Exceptional counts
/// multiply through products and projective bundles; blowups and universal
/// divisors append copies of the center/base lists.
SodSummary sod(const VarietyExpr& v);

std::size_t sod_exceptional_total(const SodSummary& s);

/// Compact structural description, e.g. "blowup(Gr(2,4), atomic enriques,
/// codim=2, E)".
std::string describe(const VarietyExpr& v);

/// (dimension, hyperplane generator) of every leaf when v is a product tree
/// of projective spaces (a single projective space counts); nullopt else.
std::optional<std::vector<std::pair<std::size_t, std::string>>> projective_space_factors(
    const VarietyExpr& v);

}  // namespace varkit
