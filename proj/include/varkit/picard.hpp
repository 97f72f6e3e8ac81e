#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "varkit/numeric.hpp"

namespace varkit {

/// What a lattice generator is geometrically. The ampleness criteria only
/// apply to specific generator kinds, so classes carry this provenance.
enum class GenKind {
    Hyperplane,     // hyperplane class of a projective-space factor
    Plucker,        // Pluecker O(1) of Gr(2,4); ampleness is atomic data
    RelativeClass,  // Grothendieck relative class of a projective bundle
    Exceptional,    // exceptional divisor of a blowup
    Other,
};

struct Generator {
    std::string name;
    GenKind kind = GenKind::Other;
};

/// Free abelian group of divisor classes with named, ordered generators.
/// Relation vectors are carried as declared data (the J~ lattice keeps its
/// exceptional-divisor relations as substitution rules instead, so vectors
/// stay canonical in the bundle coordinates).
class PicardLattice {
public:
    using Ptr = std::shared_ptr<const PicardLattice>;

    static Ptr create(std::vector<Generator> gens,
                      std::vector<std::vector<Integer>> relations = {});

    std::size_t rank() const { return gens_.size(); }
    const std::vector<Generator>& generators() const { return gens_; }
    const std::vector<std::vector<Integer>>& relations() const { return rels_; }
    std::optional<std::size_t> index_of(const std::string& name) const;

    /// New lattice with one extra generator appended.
    Ptr extend(Generator g) const;

    /// Structural equality: same generator names and kinds, in order.
    bool same_as(const PicardLattice& other) const;

private:
    PicardLattice() = default;
    std::vector<Generator> gens_;
    std::vector<std::vector<Integer>> rels_;
};

/// Lattice of a product: generators of both factors, names must not collide.
PicardLattice::Ptr product_lattice(const PicardLattice::Ptr& a, const PicardLattice::Ptr& b);

/// Integer vector over the generators of a lattice.
class DivisorClass {
public:
    DivisorClass(PicardLattice::Ptr lattice, std::vector<Integer> coeffs);

    static DivisorClass zero(PicardLattice::Ptr lattice);
    static DivisorClass generator(PicardLattice::Ptr lattice, const std::string& name);

    const PicardLattice::Ptr& lattice() const { return lattice_; }
    const std::vector<Integer>& coeffs() const { return coeffs_; }
    const Integer& coeff(const std::string& name) const;
    bool is_zero() const;

    DivisorClass operator+(const DivisorClass& o) const;
    DivisorClass operator-(const DivisorClass& o) const;
    DivisorClass operator-() const;
    DivisorClass operator*(const Integer& n) const;
    bool operator==(const DivisorClass& o) const;
    bool operator!=(const DivisorClass& o) const { return !(*this == o); }

    /// Reinterpret in a lattice containing this one's generators by name.
    DivisorClass pullback_to(const PicardLattice::Ptr& target) const;

    /// Signed combination of generator names, e.g. "-H1 - H2 - H - 2H'".
    std::string render() const;

private:
    PicardLattice::Ptr lattice_;
    std::vector<Integer> coeffs_;
};

inline DivisorClass operator*(const Integer& n, const DivisorClass& c) { return c * n; }

/// Vector bundle remembered only through its rank and first Chern class,
/// plus the full list of line-bundle summands when split.
class FormalBundle {
public:
    static FormalBundle split(std::vector<DivisorClass> summands, PicardLattice::Ptr lattice_if_empty = nullptr);
    static FormalBundle formal(std::size_t rank, DivisorClass c1);

    std::size_t rank() const { return rank_; }
    const DivisorClass& c1() const { return c1_; }
    bool is_split() const { return summands_.has_value(); }
    const std::vector<DivisorClass>& summands() const;

    /// Dual bundle; split only.
    FormalBundle dual() const;
    /// Tensor by the line bundle O(d).
    FormalBundle twist(const DivisorClass& d) const;
    /// Determinant line bundle class (= c1).
    DivisorClass det() const { return c1_; }

private:
    FormalBundle(std::size_t rank, DivisorClass c1, std::optional<std::vector<DivisorClass>> summands);
    std::size_t rank_;
    DivisorClass c1_;
    std::optional<std::vector<DivisorClass>> summands_;
};

/// Canonical class of P(E) over a base with canonical class K_base, in the
/// convention O(-H) into pi^*E:  pullback(K_base) - pullback(c1 E) - rank(E) H.
/// The result lives in the base lattice extended by H_name.
DivisorClass canonical_projective_bundle(const DivisorClass& K_base, const FormalBundle& E,
                                         const std::string& H_name);

/// Adjunction for the zero locus of a regular section of F:
/// K_Z = (K_ambient + c1 F) restricted.
DivisorClass adjunction_zero_locus(const DivisorClass& K_ambient, const FormalBundle& F);

/// Canonical class of a blowup: pullback(K_ambient) + (codim-1) E, in the
/// ambient lattice extended by E_name.
DivisorClass canonical_blowup(const DivisorClass& K_ambient, std::size_t codim,
                              const std::string& E_name);

/// Linear substitution of every generator of cls by its image under the
/// dictionary; all images must live in one common lattice.
DivisorClass substitute(const DivisorClass& cls,
                        const std::map<std::string, DivisorClass>& dictionary);

/// Sym^k of a split bundle: one summand per size-k multiset of E's summands.
FormalBundle sym_power_split(const FormalBundle& E, std::size_t k);

/// Lambda^k of a split bundle: one summand per size-k subset.
FormalBundle exterior_power_split(const FormalBundle& E, std::size_t k);

/// First Chern class of Sym^k of a rank-2 bundle with c1 = c1_E:
/// (k(k+1)/2) c1_E. Formal rule; agrees with sym_power_split on split inputs.
DivisorClass c1_sym_rank2(const DivisorClass& c1_E, std::size_t k);

}  // namespace varkit
