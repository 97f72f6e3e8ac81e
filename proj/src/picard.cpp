#include "varkit/picard.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace varkit {

PicardLattice::Ptr PicardLattice::create(std::vector<Generator> gens,
                                         std::vector<std::vector<Integer>> relations) {
    std::set<std::string> seen;
    for (const auto& g : gens) {
        if (g.name.empty())
            throw std::invalid_argument("generator name must be non-empty");
        if (!seen.insert(g.name).second)
            throw std::invalid_argument("duplicate generator name '" + g.name + "'");
    }
    for (const auto& r : relations)
        if (r.size() != gens.size())
            throw std::invalid_argument("relation vector length does not match generator count");
    auto lat = std::shared_ptr<PicardLattice>(new PicardLattice());
    lat->gens_ = std::move(gens);
    lat->rels_ = std::move(relations);
    return lat;
}

std::optional<std::size_t> PicardLattice::index_of(const std::string& name) const {
    for (std::size_t i = 0; i < gens_.size(); ++i)
        if (gens_[i].name == name)
            return i;
    return std::nullopt;
}

PicardLattice::Ptr PicardLattice::extend(Generator g) const {
    auto gens = gens_;
    gens.push_back(std::move(g));
    return create(std::move(gens));
}

bool PicardLattice::same_as(const PicardLattice& other) const {
    if (gens_.size() != other.gens_.size())
        return false;
    for (std::size_t i = 0; i < gens_.size(); ++i)
        if (gens_[i].name != other.gens_[i].name || gens_[i].kind != other.gens_[i].kind)
            return false;
    return true;
}

PicardLattice::Ptr product_lattice(const PicardLattice::Ptr& a, const PicardLattice::Ptr& b) {
    std::vector<Generator> gens = a->generators();
    for (const auto& g : b->generators())
        gens.push_back(g);
    return PicardLattice::create(std::move(gens));  // create() rejects collisions
}

DivisorClass::DivisorClass(PicardLattice::Ptr lattice, std::vector<Integer> coeffs)
    : lattice_(std::move(lattice)), coeffs_(std::move(coeffs)) {
    if (!lattice_)
        throw std::invalid_argument("divisor class needs a lattice");
    if (coeffs_.size() != lattice_->rank())
        throw std::invalid_argument("coefficient vector length does not match lattice rank");
}

DivisorClass DivisorClass::zero(PicardLattice::Ptr lattice) {
    std::size_t n = lattice->rank();
    return DivisorClass(std::move(lattice), std::vector<Integer>(n, Integer(0)));
}

DivisorClass DivisorClass::generator(PicardLattice::Ptr lattice, const std::string& name) {
    auto idx = lattice->index_of(name);
    if (!idx)
        throw std::invalid_argument("no generator named '" + name + "'");
    std::vector<Integer> c(lattice->rank(), Integer(0));
    c[*idx] = 1;
    return DivisorClass(std::move(lattice), std::move(c));
}

const Integer& DivisorClass::coeff(const std::string& name) const {
    auto idx = lattice_->index_of(name);
    if (!idx)
        throw std::invalid_argument("no generator named '" + name + "'");
    return coeffs_[*idx];
}

bool DivisorClass::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Integer& v) { return v == 0; });
}

static void require_same_lattice(const DivisorClass& a, const DivisorClass& b,
                                 const char* op) {
    if (!a.lattice()->same_as(*b.lattice()))
        throw std::invalid_argument(std::string(op) + ": lattice mismatch");
}

DivisorClass DivisorClass::operator+(const DivisorClass& o) const {
    require_same_lattice(*this, o, "divisor class sum");
    std::vector<Integer> c(coeffs_.size());
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] = coeffs_[i] + o.coeffs_[i];
    return DivisorClass(lattice_, std::move(c));
}

DivisorClass DivisorClass::operator-(const DivisorClass& o) const { return *this + (-o); }

DivisorClass DivisorClass::operator-() const {
    std::vector<Integer> c(coeffs_.size());
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] = -coeffs_[i];
    return DivisorClass(lattice_, std::move(c));
}

DivisorClass DivisorClass::operator*(const Integer& n) const {
    std::vector<Integer> c(coeffs_.size());
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] = coeffs_[i] * n;
    return DivisorClass(lattice_, std::move(c));
}

bool DivisorClass::operator==(const DivisorClass& o) const {
    return lattice_->same_as(*o.lattice_) && coeffs_ == o.coeffs_;
}

DivisorClass DivisorClass::pullback_to(const PicardLattice::Ptr& target) const {
    std::vector<Integer> c(target->rank(), Integer(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0)
            continue;
        auto idx = target->index_of(lattice_->generators()[i].name);
        if (!idx)
            throw std::invalid_argument("pullback: target lattice lacks generator '" +
                                        lattice_->generators()[i].name + "'");
        c[*idx] = coeffs_[i];
    }
    return DivisorClass(target, std::move(c));
}

std::string DivisorClass::render() const {
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        const Integer& v = coeffs_[i];
        if (v == 0)
            continue;
        const Integer mag = abs(v);
        if (first) {
            if (v < 0)
                out << '-';
            first = false;
        } else {
            out << (v < 0 ? " - " : " + ");
        }
        if (mag != 1)
            out << to_string(mag);
        out << lattice_->generators()[i].name;
    }
    if (first)
        return "0";
    return out.str();
}

FormalBundle::FormalBundle(std::size_t rank, DivisorClass c1,
                           std::optional<std::vector<DivisorClass>> summands)
    : rank_(rank), c1_(std::move(c1)), summands_(std::move(summands)) {}

FormalBundle FormalBundle::split(std::vector<DivisorClass> summands,
                                 PicardLattice::Ptr lattice_if_empty) {
    if (summands.empty()) {
        if (!lattice_if_empty)
            throw std::invalid_argument("empty split bundle needs an explicit lattice");
        return FormalBundle(0, DivisorClass::zero(std::move(lattice_if_empty)),
                            std::vector<DivisorClass>{});
    }
    const std::size_t rank = summands.size();
    DivisorClass c1 = summands[0];
    for (std::size_t i = 1; i < summands.size(); ++i)
        c1 = c1 + summands[i];
    return FormalBundle(rank, std::move(c1), std::move(summands));
}

FormalBundle FormalBundle::formal(std::size_t rank, DivisorClass c1) {
    return FormalBundle(rank, std::move(c1), std::nullopt);
}

const std::vector<DivisorClass>& FormalBundle::summands() const {
    if (!summands_)
        throw std::invalid_argument("bundle is not split");
    return *summands_;
}

FormalBundle FormalBundle::dual() const {
    if (!summands_)
        throw std::invalid_argument("dual of a non-split bundle is not supported");
    std::vector<DivisorClass> s;
    s.reserve(summands_->size());
    for (const auto& L : *summands_)
        s.push_back(-L);
    return split(std::move(s), c1_.lattice());
}

FormalBundle FormalBundle::twist(const DivisorClass& d) const {
    if (summands_) {
        std::vector<DivisorClass> s;
        s.reserve(summands_->size());
        for (const auto& L : *summands_)
            s.push_back(L + d);
        return split(std::move(s), c1_.lattice());
    }
    return formal(rank_, c1_ + d * Integer(static_cast<long>(rank_)));
}

DivisorClass canonical_projective_bundle(const DivisorClass& K_base, const FormalBundle& E,
                                         const std::string& H_name) {
    if (!K_base.lattice()->same_as(*E.c1().lattice()))
        throw std::invalid_argument("canonical_projective_bundle: c1(E) not in the base lattice");
    if (K_base.lattice()->index_of(H_name))
        throw std::invalid_argument("relative class name '" + H_name +
                                    "' collides with an existing generator");
    auto lat = K_base.lattice()->extend({H_name, GenKind::RelativeClass});
    DivisorClass H = DivisorClass::generator(lat, H_name);
    return K_base.pullback_to(lat) - E.c1().pullback_to(lat) -
           H * Integer(static_cast<long>(E.rank()));
}

DivisorClass adjunction_zero_locus(const DivisorClass& K_ambient, const FormalBundle& F) {
    if (!K_ambient.lattice()->same_as(*F.c1().lattice()))
        throw std::invalid_argument("adjunction_zero_locus: lattice mismatch");
    return K_ambient + F.c1();
}

DivisorClass canonical_blowup(const DivisorClass& K_ambient, std::size_t codim,
                              const std::string& E_name) {
    if (codim < 2)
        throw std::invalid_argument("canonical_blowup: codimension must be at least 2");
    if (K_ambient.lattice()->index_of(E_name))
        throw std::invalid_argument("exceptional divisor name '" + E_name +
                                    "' collides with an existing generator");
    auto lat = K_ambient.lattice()->extend({E_name, GenKind::Exceptional});
    DivisorClass E = DivisorClass::generator(lat, E_name);
    return K_ambient.pullback_to(lat) + E * Integer(static_cast<long>(codim - 1));
}

DivisorClass substitute(const DivisorClass& cls,
                        const std::map<std::string, DivisorClass>& dictionary) {
    if (dictionary.empty())
        throw std::invalid_argument("substitute: empty dictionary");
    const auto& target = dictionary.begin()->second.lattice();
    for (const auto& [name, image] : dictionary)
        if (!image.lattice()->same_as(*target))
            throw std::invalid_argument("substitute: image of '" + name +
                                        "' lives in a different lattice");
    DivisorClass out = DivisorClass::zero(target);
    const auto& gens = cls.lattice()->generators();
    for (std::size_t i = 0; i < gens.size(); ++i) {
        if (cls.coeffs()[i] == 0)
            continue;
        auto it = dictionary.find(gens[i].name);
        if (it == dictionary.end())
            throw std::invalid_argument("substitute: unbound generator '" + gens[i].name + "'");
        out = out + it->second * cls.coeffs()[i];
    }
    return out;
}

FormalBundle sym_power_split(const FormalBundle& E, std::size_t k) {
    const auto& base = E.summands();  // throws if not split
    const auto lat = E.c1().lattice();
    if (k == 0)
        return FormalBundle::split({DivisorClass::zero(lat)});
    if (base.empty())
        throw std::invalid_argument("sym_power_split: positive power of the zero bundle");
    const Integer count =
        binomial(Integer(static_cast<long>(k + base.size() - 1)),
                 static_cast<unsigned long>(base.size() - 1));
    if (count > 1000000)
        throw std::invalid_argument("sym_power_split: expansion would have " +
                                    to_string(count) + " summands");
    // Multisets of size k as non-decreasing index sequences, lexicographic.
    std::vector<DivisorClass> out;
    std::vector<std::size_t> idx(k, 0);
    while (true) {
        DivisorClass s = base[idx[0]];
        for (std::size_t j = 1; j < k; ++j)
            s = s + base[idx[j]];
        out.push_back(std::move(s));
        std::size_t j = k;
        while (j > 0 && idx[j - 1] == base.size() - 1)
            --j;
        if (j == 0)
            break;
        ++idx[j - 1];
        for (std::size_t t = j; t < k; ++t)
            idx[t] = idx[j - 1];
    }
    return FormalBundle::split(std::move(out));
}

FormalBundle exterior_power_split(const FormalBundle& E, std::size_t k) {
    const auto& base = E.summands();
    const auto lat = E.c1().lattice();
    if (k > base.size())
        return FormalBundle::split({}, lat);
    if (k == 0)
        return FormalBundle::split({DivisorClass::zero(lat)});
    std::vector<DivisorClass> out;
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i)
        idx[i] = i;
    while (true) {
        DivisorClass s = base[idx[0]];
        for (std::size_t j = 1; j < k; ++j)
            s = s + base[idx[j]];
        out.push_back(std::move(s));
        // next k-subset in lexicographic order
        std::size_t j = k;
        while (j > 0 && idx[j - 1] == base.size() - k + (j - 1))
            --j;
        if (j == 0)
            break;
        ++idx[j - 1];
        for (std::size_t t = j; t < k; ++t)
            idx[t] = idx[t - 1] + 1;
    }
    return FormalBundle::split(std::move(out));
}

DivisorClass c1_sym_rank2(const DivisorClass& c1_E, std::size_t k) {
    const Integer m = Integer(static_cast<long>(k)) * Integer(static_cast<long>(k + 1)) / 2;
    return c1_E * m;
}

}  // namespace varkit
