#include "charp/hp_groups.hpp"

#include <algorithm>

namespace charp {

namespace {

std::int64_t floor_mod(std::int64_t e, std::int64_t p) {
    std::int64_t r = e % p;
    return r < 0 ? r + p : r;
}

// Laurent view of `x` at a layer; lower-level elements appear as constants.
struct Terms {
    std::vector<LaurentTerm> terms;
    std::optional<std::int64_t> prec;
};

Terms terms_at(const FieldElement& x, std::uint32_t layer) {
    Terms t;
    if (x.level() == layer) {
        const LaurentPoly& L = x.laurent();
        t.terms = L.terms;
        t.prec = L.precision;
    } else if (!x.is_zero()) {
        t.terms.push_back({0, x});
    }
    return t;
}

FieldElement coeff_at(const Terms& t, std::int64_t e, const TowerPtr& tower) {
    for (auto& lt : t.terms)
        if (lt.exp == e) return lt.coeff;
    return tower->zero();
}

struct ReduceState {
    TowerPtr tower;
    bool quotient_theta;  // quotient by the nonzero-theta span as well as wp
    std::uint32_t layer;
    FieldElement current;
    FieldElement retained;
    bool base_theta_dropped = false;
    bool traced = false;
    std::uint32_t value = 0;
};

// Remove every big-O tag below the top of x. Sound only when the
// nonzero-theta span is quotiented: an unknown tail of inner valuation >= 1
// has all its theta-components either in the span outright or folding to
// terms at exponents prime to p, so it contributes nothing to the class.
FieldElement strip_inner_tags(const FieldElement& x) {
    if (x.level() == 0) return x;
    const LaurentPoly& L = x.laurent();
    std::vector<LaurentTerm> terms;
    for (auto& t : L.terms) terms.push_back({t.exp, strip_inner_tags(t.coeff)});
    return FieldElement::make_laurent(x.tower(), x.level(), std::move(terms), std::nullopt);
}

// Pure step selection; replay never calls this.
std::optional<ReductionStep> choose_step(const ReduceState& s) {
    if (s.traced) return std::nullopt;
    if (s.layer == 0) {
        if (!s.tower->base_is_finite()) {
            if (s.quotient_theta && !s.base_theta_dropped && s.tower->base_rank() > 0)
                return ReductionStep{ReductionStep::Rule::DropNonzeroTheta, 0, 0};
            return std::nullopt;
        }
        if (!s.quotient_theta && !s.retained.is_zero()) return std::nullopt;
        return ReductionStep{ReductionStep::Rule::BaseTrace, 0, 0};
    }
    Terms t = terms_at(s.current, s.layer);
    bool has_positive = t.prec.has_value();
    for (auto& lt : t.terms) {
        if (lt.exp > 0) has_positive = true;
        if (s.quotient_theta && !lt.coeff.is_exact()) has_positive = true;
        if (!s.quotient_theta && lt.exp < 0 && !lt.coeff.is_exact())
            throw PrecisionError(
                "degree-0 class of a pole with an inexact coefficient is below precision");
    }
    if (has_positive)
        return ReductionStep{ReductionStep::Rule::DropPositiveTail, s.layer, 0};
    std::optional<std::int64_t> min_neg;
    for (auto& lt : t.terms)
        if (lt.exp < 0) {
            min_neg = lt.exp;
            break;  // terms are sorted ascending
        }
    if (min_neg) {
        std::int64_t e = *min_neg;
        const std::int64_t p = s.tower->p();
        FieldElement c = coeff_at(t, e, s.tower);
        if (floor_mod(e, p) != 0) {
            return ReductionStep{s.quotient_theta ? ReductionStep::Rule::DropNonzeroTheta
                                                  : ReductionStep::Rule::RetainUndecidable,
                                 s.layer, e};
        }
        auto dec = p_component_decompose(c);
        if (dec.has_nonzero_positive_part()) {
            return ReductionStep{s.quotient_theta ? ReductionStep::Rule::DropNonzeroTheta
                                                  : ReductionStep::Rule::RetainUndecidable,
                                 s.layer, e};
        }
        return ReductionStep{ReductionStep::Rule::FoldPPower, s.layer, e};
    }
    return ReductionStep{ReductionStep::Rule::Descend, s.layer, 0};
}

// Mechanical application of one step; shared by reduction and replay.
void apply_step(ReduceState& s, const ReductionStep& st) {
    const std::int64_t p = s.tower->p();
    switch (st.rule) {
        case ReductionStep::Rule::DropPositiveTail: {
            Terms t = terms_at(s.current, st.layer);
            std::vector<LaurentTerm> kept;
            for (auto& lt : t.terms) {
                if (lt.exp > 0) continue;
                kept.push_back(s.quotient_theta ? LaurentTerm{lt.exp,
                                                              strip_inner_tags(lt.coeff)}
                                                : lt);
            }
            s.current = FieldElement::make_laurent(s.tower, st.layer, std::move(kept),
                                                   std::nullopt);
            break;
        }
        case ReductionStep::Rule::DropNonzeroTheta: {
            if (st.layer == 0) {
                s.current = theta_zero_part(s.current);
                s.base_theta_dropped = true;
                break;
            }
            Terms t = terms_at(s.current, st.layer);
            std::vector<LaurentTerm> kept;
            for (auto& lt : t.terms) {
                if (lt.exp != st.exponent) {
                    kept.push_back(lt);
                    continue;
                }
                if (floor_mod(lt.exp, p) != 0) continue;  // whole term spanned
                FieldElement z = theta_zero_part(lt.coeff);
                if (!z.is_zero()) kept.push_back({lt.exp, std::move(z)});
            }
            s.current = FieldElement::make_laurent(s.tower, st.layer, std::move(kept),
                                                   std::nullopt);
            break;
        }
        case ReductionStep::Rule::RetainUndecidable: {
            Terms t = terms_at(s.current, st.layer);
            std::vector<LaurentTerm> kept;
            for (auto& lt : t.terms) {
                if (lt.exp != st.exponent) {
                    kept.push_back(lt);
                    continue;
                }
                FieldElement moved = lt.coeff;
                if (floor_mod(lt.exp, p) == 0) {
                    FieldElement z = theta_zero_part(lt.coeff);
                    moved = lt.coeff - z;
                    if (!z.is_zero()) kept.push_back({lt.exp, std::move(z)});
                }
                if (!moved.is_zero()) {
                    s.retained = s.retained + FieldElement::make_laurent(
                                                  s.tower, st.layer, {{lt.exp, moved}},
                                                  std::nullopt);
                }
            }
            s.current = FieldElement::make_laurent(s.tower, st.layer, std::move(kept),
                                                   std::nullopt);
            break;
        }
        case ReductionStep::Rule::FoldPPower: {
            Terms t = terms_at(s.current, st.layer);
            const std::int64_t e = st.exponent;
            if (e >= 0 || floor_mod(e, p) != 0)
                throw DomainError("fold step needs a negative exponent divisible by p");
            const std::int64_t target = e / p;
            // Loop variant: the folded exponent strictly shrinks in absolute
            // value, which is what terminates the layer reduction.
            if (!(target > e))
                throw DomainError("fold step does not decrease the exponent");
            std::vector<LaurentTerm> kept;
            FieldElement root = s.tower->zero();
            for (auto& lt : t.terms) {
                if (lt.exp != e) {
                    kept.push_back(lt);
                    continue;
                }
                root = p_component_decompose(lt.coeff).theta_zero();
                FieldElement rest = lt.coeff - root.frobenius();
                if (!rest.is_zero()) kept.push_back({e, std::move(rest)});
            }
            if (!root.is_zero()) kept.push_back({target, std::move(root)});
            s.current = FieldElement::make_laurent(s.tower, st.layer, std::move(kept),
                                                   std::nullopt);
            break;
        }
        case ReductionStep::Rule::Descend: {
            Terms t = terms_at(s.current, st.layer);
            FieldElement c = s.tower->zero();
            for (auto& lt : t.terms) {
                if (lt.exp != 0)
                    throw DomainError("descend step applied to an unreduced layer");
                c = lt.coeff;
            }
            s.current = std::move(c);
            s.layer -= 1;
            break;
        }
        case ReductionStep::Rule::BaseTrace: {
            if (!s.tower->base_is_finite())
                throw DomainError("trace step needs a finite base field");
            if (s.current.level() != 0)
                throw DomainError("trace step applied above the base");
            s.value = s.tower->finite_base()->trace_to_prime(s.current.base_fq().repr());
            s.traced = true;
            break;
        }
    }
}

HpClassResult finalize(ReduceState& s, std::vector<ReductionStep> log) {
    HpClassResult r;
    r.log = std::move(log);
    if (s.traced) {
        r.state = Decision::Decided;
        r.value = s.value;
        r.representative = s.current + s.retained;
        return r;
    }
    r.representative = s.current + s.retained;
    if (!s.tower->base_is_finite()) {
        r.state = Decision::Unavailable;
        return r;
    }
    // Finite base without a trace step: a nonzero retained residue.
    r.state = Decision::UndecidedNonzero;
    return r;
}

HpClassResult reduce(const FieldElement& lambda, bool quotient_theta) {
    if (!lambda.known_to_layer_precision(1))
        throw PrecisionError("class reduction needs precision >= 1 at every Laurent layer");
    ReduceState s{lambda.tower(), quotient_theta, lambda.tower()->laurent_count(), lambda,
                  lambda.tower()->zero()};
    std::vector<ReductionStep> log;
    while (auto st = choose_step(s)) {
        apply_step(s, *st);
        log.push_back(*st);
    }
    return finalize(s, std::move(log));
}

FieldElement top_coefficient(const DifferentialForm& w) {
    const TowerPtr& tower = w.ctx().tower;
    std::uint32_t r = tower->p_rank();
    if (w.degree() != r) throw DomainError("class decision needs a top-degree form");
    BasisSubset full(r);
    for (std::uint32_t i = 0; i < r; ++i) full[i] = i;
    return w.coeff(full);
}

}  // namespace

const char* rule_name(ReductionStep::Rule r) {
    switch (r) {
        case ReductionStep::Rule::DropPositiveTail: return "drop-positive-tail";
        case ReductionStep::Rule::DropNonzeroTheta: return "drop-nonzero-theta";
        case ReductionStep::Rule::FoldPPower: return "fold-p-power";
        case ReductionStep::Rule::RetainUndecidable: return "retain-undecidable";
        case ReductionStep::Rule::Descend: return "descend";
        case ReductionStep::Rule::BaseTrace: return "base-trace";
    }
    return "?";
}

QuotientFormTop wp_map(const FieldElement& lambda) {
    const TowerPtr& tower = lambda.tower();
    if (tower->p_rank() < 1) throw DomainError("wp map at top degree needs p-rank >= 1");
    return QuotientFormTop(tower, theta_zero_part(artin_schreier(lambda)));
}

HpClassResult hp_class(const DifferentialForm& top) {
    return hp_class_coefficient(top_coefficient(top));
}

HpClassResult hp_class_coefficient(const FieldElement& lambda) {
    return reduce(lambda, /*quotient_theta=*/true);
}

HpClassResult hp1_class(const FieldElement& a) { return reduce(a, /*quotient_theta=*/false); }

HpRepresentative hp_top_representative(const FieldElement& lambda) {
    HpClassResult r = hp_class_coefficient(lambda);
    HpRepresentative rep;
    rep.tower = lambda.tower();
    rep.degree_index = lambda.tower()->p_rank();
    rep.lambda = r.representative;
    if (r.state == Decision::Decided) rep.decided = r.value;
    return rep;
}

HpRepresentative wedge_dlog_t(const HpRepresentative& c, const TowerPtr& extended) {
    if (extended->laurent_count() != c.tower->laurent_count() + 1)
        throw MismatchError("extended tower must add exactly one Laurent layer");
    if (!extended->sub_tower(c.tower->laurent_count())->same_field(*c.tower))
        throw MismatchError("extended tower does not extend the class's tower");
    HpRepresentative out;
    out.tower = extended;
    out.degree_index = extended->p_rank();
    out.lambda = c.lambda.retower(extended);
    out.decided = c.decided;
    return out;
}

HpClassResult replay_reduction(const FieldElement& lambda,
                               const std::vector<ReductionStep>& steps,
                               bool quotient_nonzero_theta) {
    ReduceState s{lambda.tower(), quotient_nonzero_theta, lambda.tower()->laurent_count(),
                  lambda, lambda.tower()->zero()};
    for (auto& st : steps) apply_step(s, st);
    return finalize(s, steps);
}

}  // namespace charp
