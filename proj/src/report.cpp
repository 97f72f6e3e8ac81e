#include "varkit/report.hpp"

#include <optional>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "varkit/ample.hpp"
#include "varkit/cohomology.hpp"
#include "varkit/hodge.hpp"
#include "varkit/ktheory.hpp"

namespace varkit {

namespace {

std::vector<VarietyPtr> models_of(const VarietyExpr& v) {
    if (v.kind() == VarietyExpr::Kind::Identified)
        return v.as_identified().models;
    return {};
}

/// The zero-locus model with a split bundle, if any: its structure sheaf
/// has a Koszul-computable cohomology.
const VarietyExpr* koszul_candidate(const VarietyExpr& v) {
    if (v.kind() == VarietyExpr::Kind::ZeroLocus && v.as_zero_locus().bundle.is_split())
        return &v;
    if (v.kind() == VarietyExpr::Kind::Identified)
        for (const auto& m : v.as_identified().models)
            if (const VarietyExpr* z = koszul_candidate(*m))
                return z;
    return nullptr;
}

std::string sod_component_label(const SodComponent& c) {
    if (!c.atom)
        return std::to_string(c.count) + " exceptional objects";
    if (c.count == 1)
        return "D(" + c.atom->as_atomic().name + ")";
    return std::to_string(c.count) + " x D(" + c.atom->as_atomic().name + ")";
}

class AnalysisWriter {
public:
    AnalysisWriter(const std::string& name, const VarietyExpr& v, ReportFormat format)
        : name_(name), v_(v), machine_(format == ReportFormat::Machine) {}

    std::string run() {
        if (machine_) {
            line("variety=" + name_);
            line("expr=" + describe(v_));
            line("dim=" + std::to_string(v_.dim()));
        } else {
            line("variety: " + name_ + " = " + describe(v_));
            line("dimension: " + std::to_string(v_.dim()));
        }
        hodge_section();
        canonical_section();
        fano_section();
        koszul_section();
        sod_section();
        return out_.str();
    }

private:
    void line(const std::string& s) { out_ << s << '\n'; }

    void hodge_section() {
        std::optional<HodgeDiamond> d;
        std::string error;
        try {
            d = hodge(v_);
        } catch (const std::domain_error& e) {
            error = e.what();
        }
        if (machine_) {
            line(std::string("hodge.supported=") + (d ? "true" : "false"));
            if (!d) {
                line("hodge.error=" + error);
                return;
            }
            line(std::string("hodge.diagonal=") + (is_diagonal(*d) ? "true" : "false"));
            for (std::size_t p = 0; p <= d->dim(); ++p)
                for (std::size_t q = p; q <= d->dim(); ++q)
                    if (d->h(p, q) != 0)
                        line("hodge.h." + std::to_string(p) + "." + std::to_string(q) + "=" +
                             to_string(d->h(p, q)));
            line("hodge.total=" + to_string(d->total()));
            return;
        }
        if (!d) {
            line("hodge diamond: not computed (" + error + ")");
            return;
        }
        line("hodge diamond:");
        out_ << render_diamond(*d);
        for (std::size_t p = 0; p <= d->dim(); ++p)
            for (std::size_t q = p; q <= d->dim(); ++q)
                if (d->h(p, q) != 0)
                    line("h^{" + std::to_string(p) + "," + std::to_string(q) +
                         "} = " + to_string(d->h(p, q)));
        line(std::string("diagonal: ") + (is_diagonal(*d) ? "yes" : "no"));
    }

    void canonical_section() {
        std::vector<std::pair<std::string, DivisorClass>> found;
        std::string error;
        auto models = models_of(v_);
        if (models.empty()) {
            try {
                found.emplace_back("", canonical(v_));
            } catch (const std::domain_error& e) {
                error = e.what();
            }
        } else {
            for (const auto& m : models) {
                try {
                    found.emplace_back(describe(*m), canonical(*m));
                } catch (const std::domain_error& e) {
                    if (error.empty())
                        error = e.what();
                }
            }
        }
        if (machine_) {
            line("canonical.count=" + std::to_string(found.size()));
            for (std::size_t i = 0; i < found.size(); ++i)
                line("canonical." + std::to_string(i + 1) + "=" + found[i].second.render());
            if (found.empty())
                line("canonical.error=" + error);
            return;
        }
        if (found.empty()) {
            line("canonical class: not computed (" + error + ")");
        } else if (found.size() == 1 && found[0].first.empty()) {
            line("canonical class: K = " + found[0].second.render());
        } else {
            line("canonical class:");
            for (const auto& [model, K] : found)
                line("  on " + model + ": K = " + K.render());
        }
    }

    void fano_section() {
        FanoVerdict verdict = is_fano(v_);
        if (machine_) {
            line(std::string("fano.certified=") + (verdict.fano ? "true" : "false"));
            if (!verdict.fano)
                line("fano.reason=" + verdict.reason);
            for (std::size_t i = 0; i < verdict.trace.size(); ++i)
                line("fano.trace." + std::to_string(i + 1) + "=" + verdict.trace[i]);
            return;
        }
        line("fano: " + verdict.render());
        for (const auto& t : verdict.trace)
            line("  " + t);
    }

    void koszul_section() {
        const VarietyExpr* z = koszul_candidate(v_);
        if (!z)
            return;
        const auto& d = z->as_zero_locus();
        try {
            KoszulResult k = koszul_structure_cohomology(*d.ambient, d.bundle);
            const Integer chi = euler_characteristic_koszul(*d.ambient, d.bundle);
            if (machine_) {
                for (std::size_t q = 0; q < k.h.size(); ++q)
                    line("koszul.h." + std::to_string(q) + "=" + to_string(k.h[q]));
                line("koszul.chi=" + to_string(chi));
                line("koszul.degeneration=satisfied");
            } else {
                line("structure sheaf cohomology (Koszul resolution on the ambient):");
                for (std::size_t q = 0; q < k.h.size(); ++q)
                    line("  h^" + std::to_string(q) + "(O) = " + to_string(k.h[q]));
                line("  chi(O) = " + to_string(chi));
                line("  degeneration precondition: satisfied");
            }
        } catch (const std::domain_error& e) {
            if (machine_)
                line("koszul.error=" + std::string(e.what()));
            else
                line("structure sheaf cohomology: not computed (" + std::string(e.what()) + ")");
        }
    }

    void sod_section() {
        std::optional<SodSummary> s;
        std::string error;
        try {
            s = sod(v_);
        } catch (const std::domain_error& e) {
            error = e.what();
        }
        if (machine_) {
            line(std::string("sod.supported=") + (s ? "true" : "false"));
            if (s) {
                line("sod.components=" + std::to_string(s->size()));
                for (std::size_t i = 0; i < s->size(); ++i) {
                    const auto& c = (*s)[i];
                    line("sod.component." + std::to_string(i + 1) + "=" +
                         (c.atom ? "atomic:" + c.atom->as_atomic().name + ":" +
                                       std::to_string(c.count)
                                 : "exceptional:" + std::to_string(c.count)));
                }
                line("sod.exceptional_total=" + std::to_string(sod_exceptional_total(*s)));
                line("k0=" + k0(v_).render());
                line("fec=" + fec_obstruction(k0(v_)).label());
            } else {
                line("sod.error=" + error);
            }
            return;
        }
        if (!s) {
            line("sod: not computed (" + error + ")");
            line("K0: not computed (no SOD summary)");
            return;
        }
        std::string parts;
        for (const auto& c : *s) {
            if (!parts.empty())
                parts += " (+) ";
            parts += sod_component_label(c);
        }
        line("sod: " + parts);
        line("sod exceptional total: " + std::to_string(sod_exceptional_total(*s)));
        FgAbGroup group = k0(v_);
        line("K0 = " + group.render());
        line("fec: " + fec_obstruction(group).render());
    }

    const std::string& name_;
    const VarietyExpr& v_;
    bool machine_;
    std::ostringstream out_;
};

}  // namespace

std::string render_analysis(const std::string& name, const VarietyExpr& v, ReportFormat format) {
    return AnalysisWriter(name, v, format).run();
}

std::string render_cohomology(const std::string& name, const VarietyExpr& v,
                              const DivisorClass& L, ReportFormat format) {
    CohomologyVector h;
    std::string route;
    if (v.kind() == VarietyExpr::Kind::ZeroLocus && L.is_zero() &&
        v.as_zero_locus().bundle.is_split()) {
        const auto& d = v.as_zero_locus();
        h = koszul_structure_cohomology(*d.ambient, d.bundle).h;
        route = "structure sheaf via the Koszul resolution on the ambient";
    } else {
        h = line_bundle_cohomology(v, L);
    }
    std::ostringstream out;
    const bool machine = format == ReportFormat::Machine;
    if (machine) {
        out << "variety=" << name << '\n';
        out << "class=" << L.render() << '\n';
        if (!route.empty())
            out << "route=koszul\n";
        for (std::size_t q = 0; q < h.size(); ++q)
            out << "h." << q << "=" << to_string(h[q]) << '\n';
        out << "chi=" << to_string(euler_characteristic(h)) << '\n';
    } else {
        out << "variety: " << name << " = " << describe(v) << '\n';
        out << "class: " << L.render() << '\n';
        if (!route.empty())
            out << "route: " << route << '\n';
        for (std::size_t q = 0; q < h.size(); ++q)
            out << "h^" << q << " = " << to_string(h[q]) << '\n';
        out << "chi = " << to_string(euler_characteristic(h)) << '\n';
    }
    return out.str();
}

}  // namespace varkit
