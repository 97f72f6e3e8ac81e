#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "varkit/numeric.hpp"

namespace varkit {

/// Full (dim+1) x (dim+1) table of Hodge numbers h^{p,q}. Stored unfolded;
/// the pretty-printer folds it into the centered diamond layout.
///
/// Invariants: every table is Hodge-symmetric (h^{p,q} = h^{q,p}). Serre
/// duality (h^{p,q} = h^{d-p,d-q}) and h^{0,0} = 1 are additionally enforced
/// when `connected` is set, i.e. when the table is the diamond of a connected
/// variety rather than a shifted summand.
class HodgeDiamond {
public:
    explicit HodgeDiamond(std::size_t dim, bool connected = false);

    static HodgeDiamond point();
    static HodgeDiamond projective_space(std::size_t n);
    /// Diamond with the given diagonal entries and zero elsewhere.
    static HodgeDiamond diagonal(const std::vector<Integer>& diag, bool connected = true);

    std::size_t dim() const { return dim_; }
    bool connected() const { return connected_; }
    void set_connected(bool c) { connected_ = c; }

    const Integer& h(std::size_t p, std::size_t q) const;
    void set_h(std::size_t p, std::size_t q, Integer value);

    /// Sum of all entries; equals the K0-rank of anything with an SOD shadow.
    Integer total() const;
    /// Topological Euler characteristic, sum of (-1)^{p+q} h^{p,q}.
    Integer euler_characteristic() const;

    bool operator==(const HodgeDiamond& other) const;
    bool operator!=(const HodgeDiamond& other) const { return !(*this == other); }

    /// Throws std::invalid_argument naming the first violated invariant.
    void validate() const;

private:
    std::size_t dim_;
    bool connected_;
    std::vector<Integer> h_;  // (dim+1)^2 entries, row-major in p
};

/// Entrywise sum of two tables of equal dimension.
HodgeDiamond diamond_sum(const HodgeDiamond& a, const HodgeDiamond& b);

/// Tate-type shift: result h^{p,q} = a.h^{p-k,q-k} inside a target_dim table.
/// The connected flag is dropped: the result is a summand, not a variety.
HodgeDiamond diamond_shift(const HodgeDiamond& a, std::size_t k, std::size_t target_dim);

/// Kuenneth product; dimensions add.
HodgeDiamond diamond_product(const HodgeDiamond& a, const HodgeDiamond& b);

/// Diamond of a projectivized rank-r bundle over the base,
/// h^{p,q} = sum_{i=0}^{r-1} base.h^{p-i,q-i}.
HodgeDiamond projective_bundle_diamond(const HodgeDiamond& base, std::size_t r);

/// Diamond of a blowup with the given center and codimension,
/// h^{p,q} = ambient.h^{p,q} + sum_{i=1}^{codim-1} center.h^{p-i,q-i}.
HodgeDiamond blowup_diamond(const HodgeDiamond& ambient, const HodgeDiamond& center,
                            std::size_t codim);

/// Diamond of a universal divisor whose generic fiber contributes
/// fiber_copies diagonal copies of the base and whose jump locus adds one
/// copy shifted by (fiber_copies, fiber_copies).
HodgeDiamond universal_divisor_diamond(const HodgeDiamond& base, std::size_t fiber_copies,
                                       const HodgeDiamond& jump_locus);

bool is_diagonal(const HodgeDiamond& a);

/// Centered diamond layout matching the usual figures: row p+q, entries
/// h^{p,q}. Used in golden-file tests, so the format is frozen.
std::string render_diamond(const HodgeDiamond& a);

}  // namespace varkit
