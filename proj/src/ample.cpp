#include "varkit/ample.hpp"

#include <algorithm>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace varkit {

namespace {

std::string tuple_form(const DivisorClass& L) {
    std::ostringstream out;
    out << "O(";
    for (std::size_t i = 0; i < L.coeffs().size(); ++i) {
        if (i)
            out << ',';
        out << to_string(L.coeffs()[i]);
    }
    out << ")";
    return out.str();
}

void note(std::vector<std::string>* trace, std::string line) {
    if (trace)
        trace->push_back(std::move(line));
}

bool certify_ample(const VarietyExpr& v, const DivisorClass& L, std::vector<std::string>* trace,
                   std::string* reason);

bool certify_on_product(const VarietyExpr& v, const DivisorClass& L,
                        std::vector<std::string>* trace, std::string* reason) {
    const auto& d = v.as_product();
    const std::size_t nl = d.left->lattice()->rank();
    std::vector<Integer> lc(L.coeffs().begin(), L.coeffs().begin() + nl);
    std::vector<Integer> rc(L.coeffs().begin() + nl, L.coeffs().end());
    DivisorClass left(d.left->lattice(), std::move(lc));
    DivisorClass right(d.right->lattice(), std::move(rc));
    return certify_ample(*d.left, left, trace, reason) &&
           certify_ample(*d.right, right, trace, reason);
}

bool certify_ample(const VarietyExpr& v, const DivisorClass& L, std::vector<std::string>* trace,
                   std::string* reason) {
    if (L.is_zero()) {
        if (reason)
            *reason = "the zero class is never certified";
        return false;
    }
    if (projective_space_factors(v)) {
        if (is_ample_on_pn_product(L)) {
            note(trace, L.render() + ": every coefficient positive on " + describe(v));
            return true;
        }
        if (reason)
            *reason = L.render() + " has a non-positive coefficient on " + describe(v);
        return false;
    }
    switch (v.kind()) {
        case VarietyExpr::Kind::Grassmannian24: {
            if (L.coeff(v.as_grassmannian24().gen) > 0) {
                note(trace, L.render() +
                                ": positive multiple of the Pluecker class O(1) on Gr(2,4) "
                                "(atomic certificate)");
                return true;
            }
            if (reason)
                *reason = L.render() + " is not a positive multiple of O(1) on Gr(2,4)";
            return false;
        }
        case VarietyExpr::Kind::Product:
            return certify_on_product(v, L, trace, reason);
        case VarietyExpr::Kind::ProjBundle: {
            const auto& d = v.as_proj_bundle();
            const Integer m = L.coeff(d.relative_class);
            if (m <= 0) {
                if (reason)
                    *reason = "pushforward criterion inapplicable: H-coefficient " +
                              to_string(m) + " is not positive";
                return false;
            }
            try {
                if (is_ample_on_proj_bundle(v, L, trace))
                    return true;
            } catch (const std::domain_error& e) {
                if (reason)
                    *reason = e.what();
                return false;
            }
            if (reason)
                *reason = "pushforward of " + L.render() + " has a non-ample summand";
            return false;
        }
        default:
            if (reason)
                *reason = "no ampleness criterion for " + describe(v);
            return false;
    }
}

}  // namespace

bool is_ample_on_pn_product(const DivisorClass& L) {
    for (const auto& g : L.lattice()->generators())
        if (g.kind != GenKind::Hyperplane)
            throw std::invalid_argument(
                "is_ample_on_pn_product: foreign generator '" + g.name +
                "' (lattice is not a pure product of projective spaces)");
    if (L.lattice()->rank() == 0)
        return false;
    return std::all_of(L.coeffs().begin(), L.coeffs().end(),
                       [](const Integer& c) { return c > 0; });
}

bool is_ample_split_bundle(const FormalBundle& E) {
    const auto& summands = E.summands();  // throws on non-split input
    return std::all_of(summands.begin(), summands.end(),
                       [](const DivisorClass& L) { return is_ample_on_pn_product(L); });
}

bool is_ample_on_proj_bundle(const FormalBundle& E, const Integer& m, const DivisorClass& D,
                             std::vector<std::string>* trace) {
    if (m <= 0)
        throw std::domain_error(
            "pushforward ampleness criterion inapplicable: the relative-class coefficient "
            "must be positive");
    if (!m.fits_ulong_p())
        throw std::invalid_argument("is_ample_on_proj_bundle: power too large");
    // (Sym^m E)_dual (x) O(D); the cohomology module computes Sym^m(E_dual)
    // instead, and tests pin the two expansions against each other.
    FormalBundle push = sym_power_split(E, m.get_ui()).dual().twist(D);
    std::string line = "pushforward to the base: ";
    for (std::size_t i = 0; i < push.summands().size(); ++i) {
        if (i)
            line += " (+) ";
        line += tuple_form(push.summands()[i]);
    }
    note(trace, line);
    if (!is_ample_split_bundle(push))
        return false;
    for (const auto& s : push.summands())
        note(trace, tuple_form(s) + ": every coefficient positive on the base");
    return true;
}

bool is_ample_on_proj_bundle(const VarietyExpr& bundle_node, const DivisorClass& L,
                             std::vector<std::string>* trace) {
    if (bundle_node.kind() != VarietyExpr::Kind::ProjBundle)
        throw std::invalid_argument("is_ample_on_proj_bundle: not a projective bundle node");
    const auto& d = bundle_node.as_proj_bundle();
    if (!projective_space_factors(*d.base))
        throw std::domain_error(
            "pushforward ampleness criterion needs a base that is a product of projective "
            "spaces");
    const Integer m = L.coeff(d.relative_class);
    const auto base_lat = d.base->lattice();
    std::vector<Integer> base_coeffs;
    base_coeffs.reserve(base_lat->rank());
    for (const auto& g : base_lat->generators())
        base_coeffs.push_back(L.coeff(g.name));
    note(trace, L.render() + " on " + describe(bundle_node) + ": reduce along the projection");
    return is_ample_on_proj_bundle(d.bundle, m, DivisorClass(base_lat, std::move(base_coeffs)),
                                   trace);
}

FanoVerdict is_fano(const VarietyExpr& v) {
    if (v.dim() == 0)
        return {true, "", {"zero-dimensional variety; every line bundle is ample"}};

    if (v.kind() == VarietyExpr::Kind::Identified) {
        std::string reasons;
        for (const auto& m : v.as_identified().models) {
            FanoVerdict verdict = is_fano(*m);
            if (verdict.fano) {
                verdict.trace.insert(verdict.trace.begin(), "model: " + describe(*m));
                return verdict;
            }
            if (!reasons.empty())
                reasons += "; ";
            reasons += verdict.reason;
        }
        return {false, reasons, {}};
    }

    std::optional<DivisorClass> maybe_K;
    try {
        maybe_K = canonical(v);
    } catch (const std::domain_error& e) {
        return {false, std::string("canonical class unavailable: ") + e.what(), {}};
    }
    const DivisorClass& K = *maybe_K;

    FanoVerdict out;
    std::string reason;
    switch (v.kind()) {
        case VarietyExpr::Kind::ZeroLocus: {
            const auto& d = v.as_zero_locus();
            out.trace.push_back("-K = " + (-K).render() +
                                " is the restriction of an ambient class to the zero locus");
            out.fano = certify_ample(*d.ambient, -K, &out.trace, &reason);
            break;
        }
        case VarietyExpr::Kind::UniversalDivisor: {
            const auto& d = v.as_universal_divisor();
            auto pw = VarietyExpr::projective_space(d.linear_system_dim - 1, d.hyperplane);
            auto ambient = VarietyExpr::product(d.base, pw);
            out.trace.push_back("-K = " + (-K).render() +
                                " is the restriction of an ambient class to the universal "
                                "divisor in " +
                                describe(*d.base) + " x P^" +
                                std::to_string(d.linear_system_dim - 1));
            out.fano = certify_ample(*ambient, (-K).pullback_to(ambient->lattice()), &out.trace,
                                     &reason);
            break;
        }
        default:
            out.fano = certify_ample(v, -K, &out.trace, &reason);
            break;
    }
    if (!out.fano) {
        out.trace.clear();
        out.reason = reason.empty() ? "no applicable ampleness criterion" : reason;
    }
    return out;
}

}  // namespace varkit
