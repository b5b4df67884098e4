#include "charp/field_tower.hpp"

#include <algorithm>
#include <set>

namespace charp {

std::uint32_t FieldTower::base_rank() const {
    if (auto* r = std::get_if<RationalFunctionBase>(&base_)) return std::uint32_t(r->vars.size());
    return 0;
}

TowerPtr FieldTower::make(std::uint32_t p, BaseDescriptor base,
                          std::vector<std::string> laurent_vars,
                          std::int64_t default_precision) {
    if (!is_prime(p)) throw DomainError("characteristic must be prime, got " + std::to_string(p));
    if (default_precision < 1) throw DomainError("default precision must be >= 1");
    std::set<std::string> seen;
    auto claim = [&](const std::string& name) {
        if (name.empty()) throw DomainError("empty variable name");
        if (name == "w" || name == "O" || name == "dlog")
            throw DomainError("variable name '" + name + "' is reserved");
        if (!seen.insert(name).second)
            throw DomainError("duplicate variable name '" + name + "'");
    };
    if (auto* f = std::get_if<FiniteFieldBase>(&base)) {
        if (!f->field) throw DomainError("missing finite base field");
        if (f->field->p() != p) throw DomainError("base field characteristic differs from p");
    } else {
        auto& r = std::get<RationalFunctionBase>(base);
        if (r.vars.empty()) throw DomainError("rational-function base needs at least one variable");
        for (auto& v : r.vars) claim(v);
    }
    for (auto& v : laurent_vars) claim(v);
    return TowerPtr(new FieldTower(p, std::move(base), std::move(laurent_vars),
                                   default_precision));
}

const std::string& FieldTower::basis_name(std::uint32_t i) const {
    std::uint32_t s = base_rank();
    if (i < s) return std::get<RationalFunctionBase>(base_).vars[i];
    if (i - s < laurent_count()) return laurent_vars_[i - s];
    throw DomainError("p-basis index out of range");
}

std::optional<std::uint32_t> FieldTower::basis_index(const std::string& name) const {
    for (std::uint32_t i = 0; i < p_rank(); ++i)
        if (basis_name(i) == name) return i;
    return std::nullopt;
}

FieldElement FieldTower::zero() const {
    auto self = shared_from_this();
    if (base_is_finite()) return FieldElement::from_fq(self, 0);
    std::uint32_t s = base_rank();
    return FieldElement::from_rat(self, RatFunc::constant(p_, s, 0));
}

FieldElement FieldTower::one() const { return from_int(1); }

FieldElement FieldTower::from_int(std::int64_t n) const {
    auto self = shared_from_this();
    if (base_is_finite()) return FieldElement::from_fq(self, finite_base()->from_int(n));
    return FieldElement::from_rat(self, RatFunc::constant(p_, base_rank(), n));
}

FieldElement FieldTower::generator() const {
    if (!base_is_finite()) throw DomainError("generator only exists over a finite base");
    return FieldElement::from_fq(shared_from_this(), finite_base()->generator());
}

FieldElement FieldTower::basis_element(std::uint32_t i) const {
    auto self = shared_from_this();
    std::uint32_t s = base_rank();
    if (i < s) return FieldElement::from_rat(self, RatFunc::variable(p_, s, i));
    std::uint32_t layer = i - s;
    if (layer >= laurent_count()) throw DomainError("p-basis index out of range");
    return FieldElement::make_laurent(self, layer + 1, {{1, one()}}, std::nullopt);
}

FieldElement FieldTower::big_o(std::uint32_t level, std::int64_t prec) const {
    if (level == 0 || level > laurent_count())
        throw DomainError("big-O tag needs a Laurent layer");
    return FieldElement::make_laurent(shared_from_this(), level, {}, prec);
}

bool FieldTower::same_field(const FieldTower& other) const {
    if (this == &other) return true;
    if (p_ != other.p_) return false;
    if (laurent_vars_ != other.laurent_vars_) return false;
    if (base_is_finite() != other.base_is_finite()) return false;
    if (base_is_finite()) return finite_base()->same_field(*other.finite_base());
    return std::get<RationalFunctionBase>(base_).vars ==
           std::get<RationalFunctionBase>(other.base_).vars;
}

TowerPtr FieldTower::sub_tower(std::uint32_t levels) const {
    if (levels > laurent_count()) throw DomainError("sub-tower has too many layers");
    if (levels == laurent_count()) return shared_from_this();
    std::vector<std::string> lv(laurent_vars_.begin(), laurent_vars_.begin() + levels);
    return TowerPtr(new FieldTower(p_, base_, std::move(lv), default_precision_));
}

}  // namespace charp
