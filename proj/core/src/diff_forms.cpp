#include "charp/diff_forms.hpp"

namespace charp {

DifferentialForm zero_form(const TowerPtr& tower, std::uint32_t degree) {
    return DifferentialForm(TowerFormContext{tower}, degree);
}

DifferentialForm dlog(const FieldElement& x) {
    return DifferentialForm::dlog(TowerFormContext{x.tower()}, x);
}

DifferentialForm top_form(const FieldElement& lambda) {
    const TowerPtr& tower = lambda.tower();
    std::uint32_t r = tower->p_rank();
    if (r == 0) throw DomainError("tower has p-rank 0, no top form");
    BasisSubset full(r);
    for (std::uint32_t i = 0; i < r; ++i) full[i] = i;
    return DifferentialForm::from_terms(TowerFormContext{tower}, r, {{full, lambda}});
}

DifferentialForm express_in_basis(
    const TowerPtr& tower,
    const std::vector<std::pair<FieldElement, std::vector<FieldElement>>>& terms,
    std::uint32_t degree) {
    return DifferentialForm::express(TowerFormContext{tower}, terms, degree);
}

std::string QuotientFormTop::to_string() const {
    std::string basis;
    for (std::uint32_t i = 0; i < tower_->p_rank(); ++i) {
        if (!basis.empty()) basis += " ^ ";
        basis += "dlog(" + tower_->basis_name(i) + ")";
    }
    if (lambda_.is_zero()) return "0";
    std::string cs = lambda_.to_string();
    bool wrap = cs.find(' ') != std::string::npos || cs.find('/') != std::string::npos;
    if (lambda_.is_one()) return basis;
    return (wrap ? "(" + cs + ")" : cs) + " * " + basis;
}

QuotientFormTop reduce_mod_exact(const DifferentialForm& w) {
    const TowerPtr& tower = w.ctx().tower;
    std::uint32_t r = tower->p_rank();
    if (r < 1) throw DomainError("reduction needs p-rank >= 1");
    if (w.degree() != r) throw DomainError("reduction needs a top-degree form");
    BasisSubset full(r);
    for (std::uint32_t i = 0; i < r; ++i) full[i] = i;
    FieldElement lambda = w.coeff(full);
    if (lambda.is_zero()) return QuotientFormTop(tower, tower->zero());
    return QuotientFormTop(tower, theta_zero_part(lambda));
}

QuotientFormTop cartier_inverse_top(const DifferentialForm& w) {
    const TowerPtr& tower = w.ctx().tower;
    std::uint32_t r = tower->p_rank();
    if (r < 1) throw DomainError("Cartier at top degree needs p-rank >= 1");
    if (w.degree() != r) throw DomainError("Cartier at top degree needs a top-degree form");
    BasisSubset full(r);
    for (std::uint32_t i = 0; i < r; ++i) full[i] = i;
    return QuotientFormTop(tower, w.coeff(full).frobenius());
}

}  // namespace charp
