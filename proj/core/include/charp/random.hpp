#ifndef CHARP_RANDOM_HPP
#define CHARP_RANDOM_HPP

#include <random>

#include "charp/diff_forms.hpp"
#include "charp/trace.hpp"
#include "charp/weierstrass.hpp"

namespace charp {

/// Deterministic source for property tests and the check suites.
class RandomSource {
  public:
    explicit RandomSource(std::uint64_t seed) : gen_(seed) {}
    std::uint64_t operator()() { return gen_(); }
    std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : gen_() % n; }
    std::int64_t range(std::int64_t lo, std::int64_t hi) {  // inclusive
        return lo + std::int64_t(below(std::uint64_t(hi - lo + 1)));
    }

  private:
    std::mt19937_64 gen_;
};

inline MPoly random_mpoly(std::uint32_t p, std::uint32_t nvars, RandomSource& rng,
                          std::uint32_t max_deg, std::uint32_t max_terms) {
    std::vector<MPoly::Term> terms;
    std::uint32_t n = 1 + std::uint32_t(rng.below(max_terms));
    for (std::uint32_t i = 0; i < n; ++i) {
        Monomial m(nvars, 0);
        for (std::uint32_t v = 0; v < nvars; ++v) m[v] = std::uint32_t(rng.below(max_deg + 1));
        terms.push_back({std::move(m), std::uint32_t(rng.below(p))});
    }
    return MPoly::from_terms(p, nvars, std::move(terms));
}

/// Exact nonzero-denominator fraction with small degrees.
inline RatFunc random_ratfunc(std::uint32_t p, std::uint32_t nvars, RandomSource& rng,
                              std::uint32_t max_deg = 2) {
    MPoly num = random_mpoly(p, nvars, rng, max_deg, 3);
    MPoly den(p, nvars);
    do {
        den = random_mpoly(p, nvars, rng, 1, 2);
    } while (den.is_zero());
    return RatFunc(std::move(num), std::move(den));
}

/// Exact element of the base layer.
inline FieldElement random_base_element(const TowerPtr& tower, RandomSource& rng) {
    if (tower->base_is_finite()) {
        const auto& f = tower->finite_base();
        return FieldElement::from_fq(tower, f->element(rng.below(f->q())));
    }
    return FieldElement::from_rat(tower,
                                  random_ratfunc(tower->p(), tower->base_rank(), rng));
}

/// Exact Laurent polynomial at the given level with exponents in
/// [exp_lo, exp_hi] (level 0 = base element).
inline FieldElement random_element(const TowerPtr& tower, std::uint32_t level,
                                   RandomSource& rng, std::int64_t exp_lo = -6,
                                   std::int64_t exp_hi = 6, std::uint32_t max_terms = 4) {
    if (level == 0) return random_base_element(tower, rng);
    std::vector<LaurentTerm> terms;
    std::uint32_t n = 1 + std::uint32_t(rng.below(max_terms));
    for (std::uint32_t i = 0; i < n; ++i) {
        std::int64_t e = rng.range(exp_lo, exp_hi);
        terms.push_back(
            {e, random_element(tower, level - 1, rng, exp_lo, exp_hi, max_terms)});
    }
    return FieldElement::make_laurent(tower, level, std::move(terms), std::nullopt);
}

inline FieldElement random_tower_element(const TowerPtr& tower, RandomSource& rng,
                                         std::int64_t exp_lo = -6, std::int64_t exp_hi = 6) {
    return random_element(tower, tower->laurent_count(), rng, exp_lo, exp_hi);
}

inline DifferentialForm random_form(const TowerPtr& tower, std::uint32_t degree,
                                    RandomSource& rng, std::int64_t exp_lo = -4,
                                    std::int64_t exp_hi = 4) {
    std::vector<std::pair<BasisSubset, FieldElement>> terms;
    const std::uint32_t r = tower->p_rank();
    // Walk all degree-subsets, keeping each with probability ~1/2.
    BasisSubset cur;
    auto rec = [&](auto&& self, std::uint32_t start) -> void {
        if (cur.size() == degree) {
            if (rng.below(2) == 0 || terms.empty())
                terms.push_back(
                    {cur, random_element(tower, tower->laurent_count(), rng, exp_lo, exp_hi)});
            return;
        }
        for (std::uint32_t i = start; i < r; ++i) {
            cur.push_back(i);
            self(self, i + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    return DifferentialForm::from_terms(TowerFormContext{tower}, degree, std::move(terms));
}

inline TruncatedSeries random_series(const SeriesRingPtr& ring, RandomSource& rng,
                                     std::uint32_t max_terms = 8, std::uint32_t min_deg = 0) {
    TruncatedSeries s(ring);
    std::uint32_t n = 1 + std::uint32_t(rng.below(max_terms));
    const std::uint32_t D = ring->truncation();
    for (std::uint32_t i = 0; i < n; ++i) {
        std::vector<std::uint32_t> e(ring->nvars(), 0);
        std::uint32_t total = 0;
        for (auto& x : e) {
            x = std::uint32_t(rng.below(D));
            total += x;
        }
        if (total < min_deg || total >= D) continue;
        s = s + TruncatedSeries::monomial(ring, e,
                                          ring->coeff_field()->element(
                                              rng.below(ring->coeff_field()->q())));
    }
    return s;
}

/// Random series that is exactly k-regular in the distinguished variable.
inline TruncatedSeries random_regular_series(const SeriesRingPtr& ring, std::uint32_t k,
                                             RandomSource& rng) {
    TruncatedSeries s = random_series(ring, rng, 10);
    // Remove pure-T terms of degree < k, then force a unit coefficient at T^k.
    TruncatedSeries cleaned(ring);
    for (auto& [key, c] : s.terms()) {
        auto e = s.unpack(key);
        std::uint32_t total = 0;
        for (auto v : e) total += v;
        if (total == e[ring->t_index()] && e[ring->t_index()] < k) continue;
        cleaned.set_term(e, c);
    }
    std::vector<std::uint32_t> tk(ring->nvars(), 0);
    tk[ring->t_index()] = k;
    fq_repr unit = ring->coeff_field()->element(1 + rng.below(ring->coeff_field()->q() - 1));
    cleaned.set_term(tk, unit);
    return cleaned;
}

inline ExtElem random_ext_element(const ExtensionPtr& ext, RandomSource& rng,
                                  std::int64_t exp_lo = -3, std::int64_t exp_hi = 3) {
    std::vector<FieldElement> c;
    for (std::uint32_t i = 0; i < ext->degree(); ++i)
        c.push_back(random_element(ext->base(), ext->base()->laurent_count(), rng, exp_lo,
                                   exp_hi, 3));
    return ExtElem(ext, std::move(c));
}

inline ExtensionForm random_ext_form(const ExtensionPtr& ext, std::uint32_t degree,
                                     RandomSource& rng) {
    std::vector<std::pair<BasisSubset, ExtElem>> terms;
    BasisSubset cur;
    const std::uint32_t r = ext->rank();
    auto rec = [&](auto&& self, std::uint32_t start) -> void {
        if (cur.size() == degree) {
            if (rng.below(2) == 0 || terms.empty())
                terms.push_back({cur, random_ext_element(ext, rng)});
            return;
        }
        for (std::uint32_t i = start; i < r; ++i) {
            cur.push_back(i);
            self(self, i + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    return ExtensionForm::from_terms(ExtFormContext<FieldElement>{ext}, degree,
                                     std::move(terms));
}

}  // namespace charp

#endif
