#include "varkit/cohomology.hpp"

#include <algorithm>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace varkit {

Integer euler_characteristic(const CohomologyVector& h) {
    Integer chi = 0;
    for (std::size_t q = 0; q < h.size(); ++q)
        chi += (q % 2 == 0) ? h[q] : -h[q];
    return chi;
}

CohomologyVector bott_pn(std::size_t n, const Integer& d) {
    CohomologyVector h(n + 1, Integer(0));
    if (d >= 0)
        h[0] = binomial(d + Integer(static_cast<long>(n)), static_cast<unsigned long>(n));
    else if (d <= -Integer(static_cast<long>(n)) - 1)
        h[n] = binomial(-d - 1, static_cast<unsigned long>(n));
    return h;
}

CohomologyVector kunneth(const std::vector<std::pair<std::size_t, Integer>>& factors) {
    CohomologyVector acc{Integer(1)};
    for (const auto& [n, d] : factors) {
        CohomologyVector f = bott_pn(n, d);
        CohomologyVector next(acc.size() + f.size() - 1, Integer(0));
        for (std::size_t i = 0; i < acc.size(); ++i) {
            if (acc[i] == 0)
                continue;
            for (std::size_t j = 0; j < f.size(); ++j)
                next[i + j] += acc[i] * f[j];
        }
        acc = std::move(next);
    }
    return acc;
}

PushforwardResult pushforward_proj_bundle(const Integer& m, const FormalBundle& E,
                                          const DivisorClass& D) {
    if (!E.is_split())
        throw std::invalid_argument("pushforward_proj_bundle: bundle must be split");
    if (!E.c1().lattice()->same_as(*D.lattice()))
        throw std::invalid_argument("pushforward_proj_bundle: twist not in the base lattice");
    const Integer rank(static_cast<long>(E.rank()));
    if (m >= 0) {
        if (!m.fits_ulong_p())
            throw std::invalid_argument("pushforward_proj_bundle: power too large");
        FormalBundle sym = sym_power_split(E.dual(), m.get_ui());
        return {sym.twist(D), 0};
    }
    if (m > -rank) {
        // Vanishing window -rank < m < 0: all derived pushforwards are zero.
        return {FormalBundle::split({}, D.lattice()), 0};
    }
    const Integer k = -m - rank;
    if (!k.fits_ulong_p())
        throw std::invalid_argument("pushforward_proj_bundle: power too large");
    FormalBundle sym = sym_power_split(E, k.get_ui());
    return {sym.twist(E.det()).twist(D), E.rank() - 1};
}

namespace {

CohomologyVector product_cohomology(
    const std::vector<std::pair<std::size_t, std::string>>& factors, const DivisorClass& L) {
    std::vector<std::pair<std::size_t, Integer>> degrees;
    degrees.reserve(factors.size());
    for (const auto& [n, gen] : factors)
        degrees.emplace_back(n, L.coeff(gen));
    return kunneth(degrees);
}

}  // namespace

CohomologyVector line_bundle_cohomology(const VarietyExpr& v, const DivisorClass& L) {
    if (v.kind() == VarietyExpr::Kind::Identified) {
        const auto& models = v.as_identified().models;
        for (std::size_t i = 0; i < models.size(); ++i) {
            if (!models[i]->lattice()->same_as(*L.lattice()))
                continue;
            try {
                return line_bundle_cohomology(*models[i], L);
            } catch (const std::domain_error&) {
            }
        }
        throw std::domain_error("no identified model supports line-bundle cohomology");
    }
    if (!v.lattice()->same_as(*L.lattice()))
        throw std::invalid_argument("line_bundle_cohomology: class not in the variety's lattice");
    if (auto factors = projective_space_factors(v))
        return product_cohomology(*factors, L);
    if (v.kind() == VarietyExpr::Kind::ProjBundle) {
        const auto& d = v.as_proj_bundle();
        auto factors = projective_space_factors(*d.base);
        if (!factors)
            throw std::domain_error(
                "line-bundle cohomology supports projective bundles only over products of "
                "projective spaces");
        // Split L = m H + D with D pulled back from the base.
        const Integer m = L.coeff(d.relative_class);
        const auto base_lat = d.base->lattice();
        std::vector<Integer> base_coeffs;
        base_coeffs.reserve(base_lat->rank());
        for (const auto& g : base_lat->generators())
            base_coeffs.push_back(L.coeff(g.name));
        DivisorClass D(base_lat, std::move(base_coeffs));
        PushforwardResult push = pushforward_proj_bundle(m, d.bundle, D);
        CohomologyVector out(v.dim() + 1, Integer(0));
        if (push.bundle.rank() == 0)
            return out;
        for (const auto& summand : push.bundle.summands()) {
            CohomologyVector part = product_cohomology(*factors, summand);
            for (std::size_t q = 0; q < part.size(); ++q)
                out.at(q + push.degree_shift) += part[q];
        }
        return out;
    }
    throw std::domain_error("line-bundle cohomology: unsupported variety shape (" + describe(v) +
                            ")");
}

namespace {

std::vector<CohomologyVector> koszul_term_cohomology(const VarietyExpr& ambient,
                                                     const FormalBundle& F) {
    if (!F.is_split())
        throw std::invalid_argument("Koszul resolution needs a split bundle");
    if (F.rank() > ambient.dim())
        throw std::invalid_argument("Koszul resolution: bundle rank exceeds ambient dimension");
    FormalBundle Fd = F.dual();
    std::vector<CohomologyVector> terms;
    terms.reserve(F.rank() + 1);
    for (std::size_t k = 0; k <= F.rank(); ++k) {
        FormalBundle wedge = exterior_power_split(Fd, k);
        CohomologyVector vec(ambient.dim() + 1, Integer(0));
        for (const auto& summand : wedge.summands()) {
            CohomologyVector part = line_bundle_cohomology(ambient, summand);
            for (std::size_t q = 0; q < part.size(); ++q)
                vec[q] += part[q];
        }
        terms.push_back(std::move(vec));
    }
    return terms;
}

}  // namespace

KoszulResult koszul_structure_cohomology(const VarietyExpr& ambient, const FormalBundle& F) {
    const auto terms = koszul_term_cohomology(ambient, F);
    const std::size_t r = F.rank();
    const std::size_t dim_z = ambient.dim() - r;

    // Degeneration precondition: at most one nonzero degree per column.
    std::vector<std::optional<std::size_t>> degree(r + 1);
    for (std::size_t k = 0; k <= r; ++k) {
        for (std::size_t q = 0; q < terms[k].size(); ++q) {
            if (terms[k][q] == 0)
                continue;
            if (degree[k])
                throw std::domain_error(
                    "spectral sequence not trivially degenerate: Koszul column " +
                    std::to_string(k) + " has cohomology in degrees " +
                    std::to_string(*degree[k]) + " and " + std::to_string(q));
            degree[k] = q;
        }
    }
    // No differential d_i may connect two nonzero entries: a page-i map sends
    // column k to column k-i raising the degree defect by one.
    for (std::size_t k = 0; k <= r; ++k) {
        if (!degree[k])
            continue;
        for (std::size_t kp = 0; kp < k; ++kp) {
            if (!degree[kp])
                continue;
            const std::size_t i = k - kp;
            if (*degree[k] + 1 == *degree[kp] + i)
                throw std::domain_error(
                    "spectral sequence not trivially degenerate: possible differential between "
                    "Koszul columns " +
                    std::to_string(k) + " and " + std::to_string(kp));
        }
    }

    KoszulResult out;
    out.h.assign(dim_z + 1, Integer(0));
    for (std::size_t k = 0; k <= r; ++k) {
        out.columns.push_back({k, terms[k]});
        if (!degree[k])
            continue;
        const std::size_t q = *degree[k];
        if (q < k || q - k > dim_z)
            throw std::domain_error("Koszul hypercohomology lands outside degrees 0.." +
                                    std::to_string(dim_z) +
                                    "; the input is not a geometric zero locus");
        out.h[q - k] += terms[k][q];
    }
    return out;
}

Integer euler_characteristic_koszul(const VarietyExpr& ambient, const FormalBundle& F) {
    const auto terms = koszul_term_cohomology(ambient, F);
    Integer chi = 0;
    for (std::size_t k = 0; k < terms.size(); ++k) {
        const Integer c = euler_characteristic(terms[k]);
        chi += (k % 2 == 0) ? c : -c;
    }
    return chi;
}

}  // namespace varkit
