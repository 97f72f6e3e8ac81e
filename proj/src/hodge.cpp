#include "varkit/hodge.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace varkit {

HodgeDiamond::HodgeDiamond(std::size_t dim, bool connected)
    : dim_(dim), connected_(connected), h_((dim + 1) * (dim + 1), Integer(0)) {}

HodgeDiamond HodgeDiamond::point() {
    HodgeDiamond d(0, true);
    d.set_h(0, 0, 1);
    return d;
}

HodgeDiamond HodgeDiamond::projective_space(std::size_t n) {
    HodgeDiamond d(n, true);
    for (std::size_t p = 0; p <= n; ++p)
        d.set_h(p, p, 1);
    return d;
}

HodgeDiamond HodgeDiamond::diagonal(const std::vector<Integer>& diag, bool connected) {
    if (diag.empty())
        throw std::invalid_argument("diagonal diamond needs at least one entry");
    HodgeDiamond d(diag.size() - 1, connected);
    for (std::size_t p = 0; p < diag.size(); ++p)
        d.set_h(p, p, diag[p]);
    return d;
}

const Integer& HodgeDiamond::h(std::size_t p, std::size_t q) const {
    if (p > dim_ || q > dim_)
        throw std::invalid_argument("Hodge index out of range");
    return h_[p * (dim_ + 1) + q];
}

void HodgeDiamond::set_h(std::size_t p, std::size_t q, Integer value) {
    if (p > dim_ || q > dim_)
        throw std::invalid_argument("Hodge index out of range");
    if (value < 0)
        throw std::invalid_argument("Hodge numbers are non-negative");
    h_[p * (dim_ + 1) + q] = std::move(value);
}

Integer HodgeDiamond::total() const {
    Integer t = 0;
    for (const auto& v : h_)
        t += v;
    return t;
}

Integer HodgeDiamond::euler_characteristic() const {
    Integer e = 0;
    for (std::size_t p = 0; p <= dim_; ++p)
        for (std::size_t q = 0; q <= dim_; ++q)
            e += ((p + q) % 2 == 0) ? h(p, q) : -h(p, q);
    return e;
}

bool HodgeDiamond::operator==(const HodgeDiamond& other) const {
    return dim_ == other.dim_ && h_ == other.h_;
}

void HodgeDiamond::validate() const {
    for (std::size_t p = 0; p <= dim_; ++p)
        for (std::size_t q = 0; q <= dim_; ++q)
            if (h(p, q) != h(q, p))
                throw std::invalid_argument("Hodge symmetry violated at (" + std::to_string(p) +
                                            "," + std::to_string(q) + ")");
    if (!connected_)
        return;
    for (std::size_t p = 0; p <= dim_; ++p)
        for (std::size_t q = 0; q <= dim_; ++q)
            if (h(p, q) != h(dim_ - p, dim_ - q))
                throw std::invalid_argument("Serre duality violated at (" + std::to_string(p) +
                                            "," + std::to_string(q) + ")");
    if (h(0, 0) != 1)
        throw std::invalid_argument("connected variety diamond must have h^{0,0} = 1");
}

HodgeDiamond diamond_sum(const HodgeDiamond& a, const HodgeDiamond& b) {
    if (a.dim() != b.dim())
        throw std::invalid_argument("diamond_sum: dimension mismatch (" +
                                    std::to_string(a.dim()) + " vs " + std::to_string(b.dim()) +
                                    ")");
    HodgeDiamond out(a.dim(), false);
    for (std::size_t p = 0; p <= a.dim(); ++p)
        for (std::size_t q = 0; q <= a.dim(); ++q)
            out.set_h(p, q, a.h(p, q) + b.h(p, q));
    return out;
}

HodgeDiamond diamond_shift(const HodgeDiamond& a, std::size_t k, std::size_t target_dim) {
    if (a.dim() + k > target_dim)
        throw std::invalid_argument("diamond_shift: shift out of range");
    HodgeDiamond out(target_dim, false);
    for (std::size_t p = 0; p <= a.dim(); ++p)
        for (std::size_t q = 0; q <= a.dim(); ++q)
            out.set_h(p + k, q + k, a.h(p, q));
    return out;
}

HodgeDiamond diamond_product(const HodgeDiamond& a, const HodgeDiamond& b) {
    HodgeDiamond out(a.dim() + b.dim(), a.connected() && b.connected());
    for (std::size_t p = 0; p <= out.dim(); ++p) {
        for (std::size_t q = 0; q <= out.dim(); ++q) {
            Integer v = 0;
            for (std::size_t p1 = 0; p1 <= std::min(p, a.dim()); ++p1) {
                const std::size_t p2 = p - p1;
                if (p2 > b.dim())
                    continue;
                for (std::size_t q1 = 0; q1 <= std::min(q, a.dim()); ++q1) {
                    const std::size_t q2 = q - q1;
                    if (q2 > b.dim())
                        continue;
                    v += a.h(p1, q1) * b.h(p2, q2);
                }
            }
            out.set_h(p, q, v);
        }
    }
    return out;
}

HodgeDiamond projective_bundle_diamond(const HodgeDiamond& base, std::size_t r) {
    if (r == 0)
        throw std::invalid_argument("projective_bundle_diamond: bundle rank must be positive");
    HodgeDiamond out(base.dim() + r - 1, base.connected());
    for (std::size_t p = 0; p <= out.dim(); ++p) {
        for (std::size_t q = 0; q <= out.dim(); ++q) {
            Integer v = 0;
            for (std::size_t i = 0; i < r; ++i)
                if (p >= i && q >= i && p - i <= base.dim() && q - i <= base.dim())
                    v += base.h(p - i, q - i);
            out.set_h(p, q, v);
        }
    }
    return out;
}

HodgeDiamond blowup_diamond(const HodgeDiamond& ambient, const HodgeDiamond& center,
                            std::size_t codim) {
    if (codim < 2)
        throw std::invalid_argument("blowup_diamond: codimension must be at least 2");
    if (center.dim() + codim != ambient.dim())
        throw std::invalid_argument("blowup_diamond: center dim " + std::to_string(center.dim()) +
                                    " + codim " + std::to_string(codim) + " != ambient dim " +
                                    std::to_string(ambient.dim()));
    HodgeDiamond out = ambient;
    out.set_connected(ambient.connected());
    for (std::size_t i = 1; i < codim; ++i) {
        for (std::size_t p = 0; p <= center.dim(); ++p)
            for (std::size_t q = 0; q <= center.dim(); ++q)
                out.set_h(p + i, q + i, out.h(p + i, q + i) + center.h(p, q));
    }
    return out;
}

HodgeDiamond universal_divisor_diamond(const HodgeDiamond& base, std::size_t fiber_copies,
                                       const HodgeDiamond& jump_locus) {
    if (fiber_copies == 0)
        throw std::invalid_argument("universal_divisor_diamond: fiber_copies must be positive");
    const std::size_t target = base.dim() + fiber_copies - 1;
    if (jump_locus.dim() + fiber_copies > target)
        throw std::invalid_argument("universal_divisor_diamond: jump locus does not fit");
    HodgeDiamond out(target, base.connected());
    for (std::size_t i = 0; i < fiber_copies; ++i)
        for (std::size_t p = 0; p <= base.dim(); ++p)
            for (std::size_t q = 0; q <= base.dim(); ++q)
                out.set_h(p + i, q + i, out.h(p + i, q + i) + base.h(p, q));
    for (std::size_t p = 0; p <= jump_locus.dim(); ++p)
        for (std::size_t q = 0; q <= jump_locus.dim(); ++q)
            out.set_h(p + fiber_copies, q + fiber_copies,
                      out.h(p + fiber_copies, q + fiber_copies) + jump_locus.h(p, q));
    return out;
}

bool is_diagonal(const HodgeDiamond& a) {
    for (std::size_t p = 0; p <= a.dim(); ++p)
        for (std::size_t q = 0; q <= a.dim(); ++q)
            if (p != q && a.h(p, q) != 0)
                return false;
    return true;
}

std::string render_diamond(const HodgeDiamond& a) {
    const std::size_t d = a.dim();
    std::size_t width = 1;
    for (std::size_t p = 0; p <= d; ++p)
        for (std::size_t q = 0; q <= d; ++q)
            width = std::max(width, to_string(a.h(p, q)).size());

    // Row s holds h^{p,s-p}; consecutive rows interleave at half a cell pitch.
    std::ostringstream out;
    for (std::size_t s = 0; s <= 2 * d; ++s) {
        const std::size_t p_lo = s > d ? s - d : 0;
        const std::size_t p_hi = std::min(s, d);
        const std::size_t k = p_hi - p_lo + 1;
        std::string line((d + 1 - k) * width, ' ');
        for (std::size_t p = p_lo; p <= p_hi; ++p) {
            std::string cell = to_string(a.h(p, s - p));
            line += std::string(width - cell.size(), ' ') + cell;
            if (p != p_hi)
                line += std::string(width, ' ');
        }
        while (!line.empty() && line.back() == ' ')
            line.pop_back();
        out << line << '\n';
    }
    return out.str();
}

}  // namespace varkit
