#include "charp/trace.hpp"

namespace charp {

bool RingTraits<FieldElement>::check_irreducible(const TowerPtr& tower,
                                                 const std::vector<FieldElement>& poly) {
    // Complete check only where it is cheap: constant coefficients over a
    // small finite base, degree <= 3 (no roots <=> irreducible there).
    // Elsewhere separability has already been verified and irreducibility is
    // the caller's precondition.
    if (poly.empty()) return true;
    if (!tower->base_is_finite() || tower->laurent_count() != 0) return true;
    std::uint32_t n = std::uint32_t(poly.size()) - 1;
    if (n < 2 || n > 3) return true;
    for (auto& c : poly)
        if (c.level() != 0) return true;
    const auto& f = tower->finite_base();
    if (f->q() > (1u << 16)) return true;
    for (std::uint64_t idx = 0; idx < f->q(); ++idx) {
        fq_repr x = f->element(idx);
        fq_repr v = 0;
        for (std::int32_t j = std::int32_t(n); j >= 0; --j)
            v = f->add(f->mul(v, x), poly[size_t(j)].base_fq().repr());
        if (v == 0) return false;
    }
    return true;
}

QuotientFormTop trace_hp(const ExtensionForm& w) {
    if (w.degree() != w.ctx().ext->rank())
        throw DomainError("induced trace on classes needs a top-degree form");
    return reduce_mod_exact(trace_form(w));
}

}  // namespace charp
