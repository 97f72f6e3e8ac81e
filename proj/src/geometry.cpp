#include "varkit/geometry.hpp"

#include <sstream>
#include <stdexcept>

namespace varkit {

VarietyExpr::VarietyExpr(Kind kind, Data data, std::size_t dim, PicardLattice::Ptr lattice)
    : kind_(kind), data_(std::move(data)), dim_(dim), lattice_(std::move(lattice)) {}

namespace {

VarietyPtr make(VarietyExpr::Kind kind, auto data, std::size_t dim, PicardLattice::Ptr lattice) {
    struct Access : VarietyExpr {
        Access(Kind k, Data d, std::size_t dim, PicardLattice::Ptr lat)
            : VarietyExpr(k, std::move(d), dim, std::move(lat)) {}
    };
    return std::make_shared<const Access>(kind, std::move(data), dim, std::move(lattice));
}

}  // namespace

VarietyPtr VarietyExpr::atomic(AtomicData data) {
    if (data.diamond.dim() != data.dim)
        throw std::invalid_argument("atomic '" + data.name + "': diamond dimension mismatch");
    data.diamond.set_connected(true);
    data.diamond.validate();
    PicardLattice::Ptr lat =
        data.canonical ? data.canonical->lattice() : PicardLattice::create({});
    const std::size_t dim = data.dim;
    return make(Kind::Atomic, std::move(data), dim, std::move(lat));
}

VarietyPtr VarietyExpr::projective_space(std::size_t n, std::string gen) {
    auto lat = PicardLattice::create({{gen, GenKind::Hyperplane}});
    return make(Kind::ProjectiveSpace, ProjectiveSpaceData{n, std::move(gen)}, n, std::move(lat));
}

VarietyPtr VarietyExpr::grassmannian24(std::string gen) {
    auto lat = PicardLattice::create({{gen, GenKind::Plucker}});
    return make(Kind::Grassmannian24, Grassmannian24Data{std::move(gen)}, 4, std::move(lat));
}

VarietyPtr VarietyExpr::product(VarietyPtr left, VarietyPtr right) {
    if (!left || !right)
        throw std::invalid_argument("product: null factor");
    auto lat = product_lattice(left->lattice(), right->lattice());
    const std::size_t dim = left->dim() + right->dim();
    return make(Kind::Product, ProductData{std::move(left), std::move(right)}, dim,
                std::move(lat));
}

VarietyPtr VarietyExpr::proj_bundle(VarietyPtr base, FormalBundle bundle,
                                    std::string relative_class) {
    if (!base)
        throw std::invalid_argument("projbundle: null base");
    if (!bundle.is_split())
        throw std::invalid_argument("projbundle: bundle must be split");
    if (bundle.rank() == 0)
        throw std::invalid_argument("projbundle: bundle rank must be positive");
    if (!bundle.c1().lattice()->same_as(*base->lattice()))
        throw std::invalid_argument("projbundle: bundle summands not in the base lattice");
    auto lat = base->lattice()->extend({relative_class, GenKind::RelativeClass});
    const std::size_t dim = base->dim() + bundle.rank() - 1;
    return make(Kind::ProjBundle,
                ProjBundleData{std::move(base), std::move(bundle), std::move(relative_class)},
                dim, std::move(lat));
}

VarietyPtr VarietyExpr::blow_up(VarietyPtr ambient, VarietyPtr center, std::size_t codim,
                                std::string exceptional) {
    if (!ambient || !center)
        throw std::invalid_argument("blowup: null operand");
    if (codim < 2)
        throw std::invalid_argument("blowup: codimension must be at least 2");
    if (center->dim() + codim != ambient->dim())
        throw std::invalid_argument("blowup: center dim " + std::to_string(center->dim()) +
                                    " + codim " + std::to_string(codim) + " != ambient dim " +
                                    std::to_string(ambient->dim()));
    auto lat = ambient->lattice()->extend({exceptional, GenKind::Exceptional});
    const std::size_t dim = ambient->dim();
    return make(Kind::BlowUp,
                BlowUpData{std::move(ambient), std::move(center), codim, std::move(exceptional)},
                dim, std::move(lat));
}

VarietyPtr VarietyExpr::zero_locus(VarietyPtr ambient, FormalBundle bundle) {
    if (!ambient)
        throw std::invalid_argument("zerolocus: null ambient");
    if (!bundle.c1().lattice()->same_as(*ambient->lattice()))
        throw std::invalid_argument("zerolocus: bundle c1 not in the ambient lattice");
    if (bundle.rank() > ambient->dim())
        throw std::invalid_argument("zerolocus: bundle rank exceeds ambient dimension");
    auto lat = ambient->lattice();
    const std::size_t dim = ambient->dim() - bundle.rank();
    return make(Kind::ZeroLocus, ZeroLocusData{std::move(ambient), std::move(bundle)}, dim,
                std::move(lat));
}

VarietyPtr VarietyExpr::universal_divisor(VarietyPtr base, std::size_t linear_system_dim,
                                          VarietyPtr jump, std::string hyperplane) {
    if (!base || !jump)
        throw std::invalid_argument("universal: null operand");
    if (linear_system_dim < 2)
        throw std::invalid_argument("universal: linear system dimension must be at least 2");
    if (jump->dim() + 1 > base->dim())
        throw std::invalid_argument("universal: jump locus dimension too large for the base");
    auto lat = base->lattice()->extend({hyperplane, GenKind::Hyperplane});
    const std::size_t dim = base->dim() + linear_system_dim - 2;
    return make(Kind::UniversalDivisor,
                UniversalDivisorData{std::move(base), linear_system_dim, std::move(jump),
                                     std::move(hyperplane)},
                dim, std::move(lat));
}

VarietyPtr VarietyExpr::identified(std::vector<VarietyPtr> models) {
    if (models.empty())
        throw std::invalid_argument("identify: needs at least one model");
    for (const auto& m : models) {
        if (!m)
            throw std::invalid_argument("identify: null model");
        if (m->dim() != models[0]->dim())
            throw std::invalid_argument("identify: models have different dimensions (" +
                                        std::to_string(models[0]->dim()) + " vs " +
                                        std::to_string(m->dim()) + ")");
    }
    const std::size_t dim = models[0]->dim();
    auto lat = models[0]->lattice();
    return make(Kind::Identified, IdentifiedData{std::move(models)}, dim, std::move(lat));
}

VarietyPtr VarietyExpr::enriques() {
    return atomic(AtomicData{"enriques", 2, HodgeDiamond::diagonal({1, 10, 1}),
                             FgAbGroup(12, {2}), std::nullopt});
}

VarietyPtr VarietyExpr::k3() {
    HodgeDiamond d(2, true);
    d.set_h(0, 0, 1);
    d.set_h(2, 2, 1);
    d.set_h(2, 0, 1);
    d.set_h(0, 2, 1);
    d.set_h(1, 1, 20);
    auto lat = PicardLattice::create({});
    return atomic(AtomicData{"k3", 2, std::move(d), FgAbGroup::free(24),
                             DivisorClass::zero(lat)});
}

VarietyPtr VarietyExpr::point() {
    auto lat = PicardLattice::create({});
    return atomic(AtomicData{"point", 0, HodgeDiamond::point(), FgAbGroup::free(1),
                             DivisorClass::zero(lat)});
}

#define VARKIT_ACCESSOR(METHOD, TYPE)                                       \
    const TYPE& VarietyExpr::METHOD() const {                               \
        if (auto* p = std::get_if<TYPE>(&data_))                            \
            return *p;                                                      \
        throw std::logic_error("variety node is not of the expected kind"); \
    }

VARKIT_ACCESSOR(as_atomic, AtomicData)
VARKIT_ACCESSOR(as_projective_space, ProjectiveSpaceData)
VARKIT_ACCESSOR(as_grassmannian24, Grassmannian24Data)
VARKIT_ACCESSOR(as_product, ProductData)
VARKIT_ACCESSOR(as_proj_bundle, ProjBundleData)
VARKIT_ACCESSOR(as_blow_up, BlowUpData)
VARKIT_ACCESSOR(as_zero_locus, ZeroLocusData)
VARKIT_ACCESSOR(as_universal_divisor, UniversalDivisorData)
VARKIT_ACCESSOR(as_identified, IdentifiedData)

#undef VARKIT_ACCESSOR

std::size_t dimension(const VarietyExpr& v) { return v.dim(); }

HodgeDiamond hodge(const VarietyExpr& v) {
    switch (v.kind()) {
        case VarietyExpr::Kind::Atomic:
            return v.as_atomic().diamond;
        case VarietyExpr::Kind::ProjectiveSpace:
            return HodgeDiamond::projective_space(v.as_projective_space().n);
        case VarietyExpr::Kind::Grassmannian24:
            return HodgeDiamond::diagonal({1, 1, 2, 1, 1});
        case VarietyExpr::Kind::Product: {
            const auto& d = v.as_product();
            return diamond_product(hodge(*d.left), hodge(*d.right));
        }
        case VarietyExpr::Kind::ProjBundle: {
            const auto& d = v.as_proj_bundle();
            return projective_bundle_diamond(hodge(*d.base), d.bundle.rank());
        }
        case VarietyExpr::Kind::BlowUp: {
            const auto& d = v.as_blow_up();
            return blowup_diamond(hodge(*d.ambient), hodge(*d.center), d.codim);
        }
        case VarietyExpr::Kind::ZeroLocus:
            throw std::domain_error(
                "no Hodge rule for zero-locus nodes (their diamonds are not SOD-assembled)");
        case VarietyExpr::Kind::UniversalDivisor: {
            const auto& d = v.as_universal_divisor();
            return universal_divisor_diamond(hodge(*d.base), d.linear_system_dim - 1,
                                             hodge(*d.jump));
        }
        case VarietyExpr::Kind::Identified: {
            const auto& models = v.as_identified().models;
            for (std::size_t i = 0; i < models.size(); ++i) {
                try {
                    return hodge(*models[i]);
                } catch (const std::domain_error&) {
                    if (i + 1 == models.size())
                        throw;
                }
            }
            throw std::domain_error("no model supports a Hodge diamond");
        }
    }
    throw std::logic_error("unreachable variety kind");
}

DivisorClass canonical(const VarietyExpr& v) {
    switch (v.kind()) {
        case VarietyExpr::Kind::Atomic: {
            const auto& a = v.as_atomic();
            if (!a.canonical)
                throw std::domain_error("atomic '" + a.name +
                                        "' carries no canonical-class data");
            return *a.canonical;
        }
        case VarietyExpr::Kind::ProjectiveSpace: {
            const auto& d = v.as_projective_space();
            return DivisorClass::generator(v.lattice(), d.gen) *
                   -Integer(static_cast<long>(d.n) + 1);
        }
        case VarietyExpr::Kind::Grassmannian24:
            return DivisorClass::generator(v.lattice(), v.as_grassmannian24().gen) * Integer(-4);
        case VarietyExpr::Kind::Product: {
            const auto& d = v.as_product();
            return canonical(*d.left).pullback_to(v.lattice()) +
                   canonical(*d.right).pullback_to(v.lattice());
        }
        case VarietyExpr::Kind::ProjBundle: {
            const auto& d = v.as_proj_bundle();
            return canonical_projective_bundle(canonical(*d.base), d.bundle, d.relative_class);
        }
        case VarietyExpr::Kind::BlowUp: {
            const auto& d = v.as_blow_up();
            return canonical_blowup(canonical(*d.ambient), d.codim, d.exceptional);
        }
        case VarietyExpr::Kind::ZeroLocus: {
            const auto& d = v.as_zero_locus();
            return adjunction_zero_locus(canonical(*d.ambient), d.bundle);
        }
        case VarietyExpr::Kind::UniversalDivisor: {
            // Adjunction on base x P(W) with F = O(H (x) H'), H the base's
            // Grothendieck relative class.
            const auto& d = v.as_universal_divisor();
            if (d.base->kind() != VarietyExpr::Kind::ProjBundle)
                throw std::domain_error(
                    "canonical of a universal divisor needs a projective-bundle base");
            auto lat = v.lattice();
            DivisorClass K_base = canonical(*d.base).pullback_to(lat);
            DivisorClass Hp = DivisorClass::generator(lat, d.hyperplane);
            DivisorClass H =
                DivisorClass::generator(lat, d.base->as_proj_bundle().relative_class);
            const Integer w(static_cast<long>(d.linear_system_dim));
            // K_ambient = K_base - w H',  F = O(H + H')
            return K_base - Hp * w + H + Hp;
        }
        case VarietyExpr::Kind::Identified: {
            const auto& models = v.as_identified().models;
            for (std::size_t i = 0; i < models.size(); ++i) {
                try {
                    return canonical(*models[i]);
                } catch (const std::domain_error&) {
                    if (i + 1 == models.size())
                        throw;
                }
            }
            throw std::domain_error("no model supports a canonical class");
        }
    }
    throw std::logic_error("unreachable variety kind");
}

namespace {

SodSummary sod_scaled(const SodSummary& s, std::size_t factor) {
    SodSummary out;
    out.reserve(s.size());
    for (const auto& c : s)
        out.push_back({c.atom, c.count * factor});
    return out;
}

}  // namespace

SodSummary sod(const VarietyExpr& v) {
    switch (v.kind()) {
        case VarietyExpr::Kind::Atomic:
            return {SodComponent{std::make_shared<const VarietyExpr>(v), 1}};
        case VarietyExpr::Kind::ProjectiveSpace:
            return {SodComponent{nullptr, v.as_projective_space().n + 1}};
        case VarietyExpr::Kind::Grassmannian24:
            return {SodComponent{nullptr, 6}};
        case VarietyExpr::Kind::Product: {
            const auto& d = v.as_product();
            SodSummary left = sod(*d.left), right = sod(*d.right), out;
            for (const auto& a : left)
                for (const auto& b : right) {
                    if (a.atom && b.atom)
                        throw std::domain_error(
                            "no SOD rule for a product of two non-exceptional components");
                    out.push_back({a.atom ? a.atom : b.atom, a.count * b.count});
                }
            return out;
        }
        case VarietyExpr::Kind::ProjBundle: {
            const auto& d = v.as_proj_bundle();
            return sod_scaled(sod(*d.base), d.bundle.rank());
        }
        case VarietyExpr::Kind::BlowUp: {
            const auto& d = v.as_blow_up();
            SodSummary out = sod(*d.ambient);
            SodSummary center = sod(*d.center);
            for (std::size_t i = 1; i < d.codim; ++i)
                out.insert(out.end(), center.begin(), center.end());
            return out;
        }
        case VarietyExpr::Kind::ZeroLocus:
            throw std::domain_error("no SOD rule for zero-locus nodes");
        case VarietyExpr::Kind::UniversalDivisor: {
            const auto& d = v.as_universal_divisor();
            SodSummary base = sod(*d.base), out;
            for (std::size_t i = 1; i < d.linear_system_dim; ++i)
                out.insert(out.end(), base.begin(), base.end());
            SodSummary jump = sod(*d.jump);
            out.insert(out.end(), jump.begin(), jump.end());
            return out;
        }
        case VarietyExpr::Kind::Identified: {
            const auto& models = v.as_identified().models;
            for (std::size_t i = 0; i < models.size(); ++i) {
                try {
                    return sod(*models[i]);
                } catch (const std::domain_error&) {
                    if (i + 1 == models.size())
                        throw;
                }
            }
            throw std::domain_error("no model supports an SOD summary");
        }
    }
    throw std::logic_error("unreachable variety kind");
}

std::size_t sod_exceptional_total(const SodSummary& s) {
    std::size_t n = 0;
    for (const auto& c : s)
        if (!c.atom)
            n += c.count;
    return n;
}

FgAbGroup k0(const VarietyExpr& v) {
    FgAbGroup out = FgAbGroup::trivial();
    for (const auto& c : sod(v)) {
        if (!c.atom) {
            out = direct_sum(out, FgAbGroup::free(Integer(static_cast<long>(c.count))));
        } else {
            for (std::size_t i = 0; i < c.count; ++i)
                out = direct_sum(out, c.atom->as_atomic().k0);
        }
    }
    return out;
}

namespace {

std::string render_bundle(const FormalBundle& b) {
    std::ostringstream out;
    if (b.is_split()) {
        out << '[';
        const auto& s = b.summands();
        for (std::size_t i = 0; i < s.size(); ++i) {
            if (i)
                out << ',';
            out << '(';
            for (std::size_t j = 0; j < s[i].coeffs().size(); ++j) {
                if (j)
                    out << ',';
                out << to_string(s[i].coeffs()[j]);
            }
            out << ')';
        }
        out << ']';
    } else {
        out << "rank " << b.rank() << ", c1=" << b.c1().render();
    }
    return out.str();
}

}  // namespace

std::optional<std::vector<std::pair<std::size_t, std::string>>> projective_space_factors(
    const VarietyExpr& v) {
    switch (v.kind()) {
        case VarietyExpr::Kind::ProjectiveSpace:
            return std::vector<std::pair<std::size_t, std::string>>{
                {v.as_projective_space().n, v.as_projective_space().gen}};
        case VarietyExpr::Kind::Product: {
            auto left = projective_space_factors(*v.as_product().left);
            auto right = projective_space_factors(*v.as_product().right);
            if (!left || !right)
                return std::nullopt;
            left->insert(left->end(), right->begin(), right->end());
            return left;
        }
        default:
            return std::nullopt;
    }
}

std::string describe(const VarietyExpr& v) {
    switch (v.kind()) {
        case VarietyExpr::Kind::Atomic:
            return "atomic " + v.as_atomic().name;
        case VarietyExpr::Kind::ProjectiveSpace:
            return "P^" + std::to_string(v.as_projective_space().n);
        case VarietyExpr::Kind::Grassmannian24:
            return "Gr(2,4)";
        case VarietyExpr::Kind::Product: {
            const auto& d = v.as_product();
            return "product(" + describe(*d.left) + ", " + describe(*d.right) + ")";
        }
        case VarietyExpr::Kind::ProjBundle: {
            const auto& d = v.as_proj_bundle();
            return "projbundle(" + describe(*d.base) + ", " + render_bundle(d.bundle) + ", " +
                   d.relative_class + ")";
        }
        case VarietyExpr::Kind::BlowUp: {
            const auto& d = v.as_blow_up();
            return "blowup(" + describe(*d.ambient) + ", " + describe(*d.center) +
                   ", codim=" + std::to_string(d.codim) + ", " + d.exceptional + ")";
        }
        case VarietyExpr::Kind::ZeroLocus: {
            const auto& d = v.as_zero_locus();
            return "zerolocus(" + describe(*d.ambient) + ", " + render_bundle(d.bundle) + ")";
        }
        case VarietyExpr::Kind::UniversalDivisor: {
            const auto& d = v.as_universal_divisor();
            return "universal(" + describe(*d.base) +
                   ", w=" + std::to_string(d.linear_system_dim) + ", jump=" + describe(*d.jump) +
                   ", " + d.hyperplane + ")";
        }
        case VarietyExpr::Kind::Identified: {
            const auto& models = v.as_identified().models;
            std::string out = "identify(";
            for (std::size_t i = 0; i < models.size(); ++i) {
                if (i)
                    out += ", ";
                out += describe(*models[i]);
            }
            return out + ")";
        }
    }
    throw std::logic_error("unreachable variety kind");
}

}  // namespace varkit
