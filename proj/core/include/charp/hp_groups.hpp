#ifndef CHARP_HP_GROUPS_HPP
#define CHARP_HP_GROUPS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "charp/diff_forms.hpp"

namespace charp {

/// Outcome of a class decision. Unavailable is a typed result, not an
/// error: over rational-function bases the reduced representative is still
/// produced.
enum class Decision { Decided, UndecidedNonzero, Unavailable };

/// One mechanical rewrite applied during class reduction. The sequence of
/// steps fully determines the output: replaying them on the input
/// reproduces the result without re-deciding anything.
struct ReductionStep {
    enum class Rule {
        DropPositiveTail,   // discard terms of positive valuation and the big-O tag
        DropNonzeroTheta,   // discard the part lying in the span of b^theta, theta != 0
        FoldPPower,         // replace the theta=0 part z^p t^e by z t^(e/p)
        RetainUndecidable,  // move a non-reducible part into the retained residue
        Descend,            // step from a fully reduced layer into its constant term
        BaseTrace,          // finite-field base case: trace down to F_p
    };
    Rule rule;
    std::uint32_t layer;    // Laurent layer (1-based); 0 for base steps
    std::int64_t exponent;  // exponent the rule acts on (where applicable)
};

const char* rule_name(ReductionStep::Rule r);

struct HpClassResult {
    Decision state = Decision::Unavailable;
    std::uint32_t value = 0;      // decided value in F_p (valid when Decided)
    FieldElement representative;  // reduced representative
    std::vector<ReductionStep> log;
};

/// A class of H_p^{i+1}(k) for i = 0 or i = p-rank, held through a reduced
/// representative; decided_value is present exactly when the layer
/// reduction reached the finite-field base case.
struct HpRepresentative {
    TowerPtr tower;
    std::uint32_t degree_index;  // 0 or tower->p_rank()
    FieldElement lambda;
    std::optional<std::uint32_t> decided;
};

/// The map wp = 1 - C^{-1} on the coefficient of a top-degree form:
/// class of (lambda - lambda^p) dlog(b), already reduced.
QuotientFormTop wp_map(const FieldElement& lambda);

/// Decide the class of a top-degree form in H_p^{r+1}. Over a finite base
/// the result is the F_p value under the trace identification; over a
/// rational-function base the state is Unavailable and only the reduced
/// representative is returned.
HpClassResult hp_class(const DifferentialForm& top);
/// Same, acting directly on the top coefficient (also covers p-rank 0).
HpClassResult hp_class_coefficient(const FieldElement& lambda);

/// Class in H_p^1 = k / wp(k). Decided over finite fields and over
/// Laurent towers above them when the residue fully reduces; a nonzero
/// non-reducible residue is reported as UndecidedNonzero.
HpClassResult hp1_class(const FieldElement& a);

/// Package a top-class decision as a representative over its tower.
HpRepresentative hp_top_representative(const FieldElement& lambda);

/// Embedding H_p^{r+1}(k) -> H_p^{r+2}(k((t))): the class of w maps to the
/// class of w ^ dlog(t). `extended` must be the same tower family with one
/// more Laurent layer.
HpRepresentative wedge_dlog_t(const HpRepresentative& c, const TowerPtr& extended);

/// Re-run a recorded reduction mechanically (no step selection). Used to
/// check that reduction logs are replayable.
HpClassResult replay_reduction(const FieldElement& lambda,
                               const std::vector<ReductionStep>& steps,
                               bool quotient_nonzero_theta);

}  // namespace charp

#endif
