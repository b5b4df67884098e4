#include <algorithm>
#include <limits>
#include <map>

#include "charp/field_tower.hpp"

namespace charp {

struct ElementPayload {
    std::variant<fq_repr, RatFunc, LaurentPoly> v;
};

namespace {

constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max();

std::int64_t floor_mod(std::int64_t e, std::int64_t p) {
    std::int64_t r = e % p;
    return r < 0 ? r + p : r;
}

void check_same_field(const FieldElement& a, const FieldElement& b) {
    if (!a.tower() || !b.tower()) throw DomainError("uninitialized field element");
    if (!a.tower()->same_field(*b.tower())) throw MismatchError("elements live in different towers");
}

// View of an element as a Laurent polynomial at a given level; lower-level
// elements appear as constants.
struct LView {
    std::vector<LaurentTerm> local;
    const std::vector<LaurentTerm>* terms;
    std::optional<std::int64_t> prec;
};

LView view_at(const FieldElement& x, std::uint32_t level) {
    LView v;
    if (x.level() == level) {
        const LaurentPoly& L = x.laurent();
        v.terms = &L.terms;
        v.prec = L.precision;
    } else {
        if (!x.is_zero()) v.local.push_back({0, x});
        v.terms = &v.local;
        v.prec = std::nullopt;
    }
    return v;
}

// Valuation proxy used by the big-O propagation rules: the lowest stored
// exponent, the tag for a tagged zero, +inf for the exact zero.
std::int64_t view_valuation(const LView& v) {
    if (!v.terms->empty()) return v.terms->front().exp;
    if (v.prec) return *v.prec;
    return kInf;
}

std::optional<std::int64_t> min_prec(std::optional<std::int64_t> a, std::optional<std::int64_t> b) {
    if (a && b) return std::min(*a, *b);
    return a ? a : b;
}

}  // namespace

// ---------------------------------------------------------------------------
// Factories and normalization

FieldElement FieldElement::from_fq(TowerPtr tower, fq_repr v) {
    FieldElement e;
    e.tower_ = std::move(tower);
    e.level_ = 0;
    e.payload_ = std::make_shared<const ElementPayload>(ElementPayload{v});
    return e;
}

FieldElement FieldElement::from_rat(TowerPtr tower, RatFunc v) {
    FieldElement e;
    e.tower_ = std::move(tower);
    e.level_ = 0;
    e.payload_ = std::make_shared<const ElementPayload>(ElementPayload{std::move(v)});
    return e;
}

FieldElement FieldElement::make_laurent(TowerPtr tower, std::uint32_t level,
                                        std::vector<LaurentTerm> terms,
                                        std::optional<std::int64_t> precision) {
    if (level == 0 || level > tower->laurent_count())
        throw DomainError("Laurent level out of range");
    std::sort(terms.begin(), terms.end(),
              [](const LaurentTerm& a, const LaurentTerm& b) { return a.exp < b.exp; });
    std::vector<LaurentTerm> out;
    for (auto& t : terms) {
        if (t.coeff.level() >= level) throw DomainError("Laurent coefficient level too high");
        FieldElement c = t.coeff.tower()->same_field(*tower) ? t.coeff : t.coeff.retower(tower);
        if (!out.empty() && out.back().exp == t.exp) {
            out.back().coeff = out.back().coeff + c;
        } else {
            out.push_back({t.exp, std::move(c)});
        }
    }
    std::vector<LaurentTerm> pruned;
    for (auto& t : out) {
        if (precision && t.exp >= *precision) continue;
        if (t.coeff.is_zero()) continue;
        pruned.push_back(std::move(t));
    }
    if (pruned.empty() && !precision) return tower->zero();
    if (pruned.size() == 1 && pruned[0].exp == 0 && !precision) return pruned[0].coeff;
    FieldElement e;
    e.tower_ = std::move(tower);
    e.level_ = level;
    e.payload_ = std::make_shared<const ElementPayload>(
        ElementPayload{LaurentPoly{std::move(pruned), precision}});
    return e;
}

FieldElement FieldElement::retower(const TowerPtr& to) const {
    if (tower_ == to) return *this;
    if (tower_->p() != to->p()) throw MismatchError("towers have different characteristic");
    if (tower_->base_is_finite() != to->base_is_finite() ||
        (tower_->base_is_finite()
             ? !tower_->finite_base()->same_field(*to->finite_base())
             : std::get<RationalFunctionBase>(tower_->base()).vars !=
                   std::get<RationalFunctionBase>(to->base()).vars))
        throw MismatchError("towers have different bases");
    if (level_ > to->laurent_count()) throw MismatchError("target tower has too few layers");
    for (std::uint32_t j = 0; j < level_; ++j)
        if (tower_->laurent_vars()[j] != to->laurent_vars()[j])
            throw MismatchError("Laurent layers do not match");
    if (level_ == 0) {
        FieldElement e = *this;
        e.tower_ = to;
        return e;
    }
    const LaurentPoly& L = laurent();
    std::vector<LaurentTerm> terms;
    terms.reserve(L.terms.size());
    for (auto& t : L.terms) terms.push_back({t.exp, t.coeff.retower(to)});
    return make_laurent(to, level_, std::move(terms), L.precision);
}

// ---------------------------------------------------------------------------
// Predicates and payload access

const LaurentPoly& FieldElement::laurent() const {
    if (level_ == 0) throw DomainError("not a Laurent-layer element");
    return std::get<LaurentPoly>(payload_->v);
}

Fq FieldElement::base_fq() const {
    return Fq(tower_->finite_base(), std::get<fq_repr>(payload_->v));
}

const RatFunc& FieldElement::base_rat() const { return std::get<RatFunc>(payload_->v); }

bool FieldElement::is_zero() const {
    if (!payload_) return true;
    if (level_ == 0) {
        if (tower_->base_is_finite()) return std::get<fq_repr>(payload_->v) == 0;
        return std::get<RatFunc>(payload_->v).is_zero();
    }
    const LaurentPoly& L = laurent();
    return L.terms.empty() && !L.precision;
}

bool FieldElement::is_one() const {
    if (level_ != 0) return false;
    if (tower_->base_is_finite()) return std::get<fq_repr>(payload_->v) == 1;
    const RatFunc& r = std::get<RatFunc>(payload_->v);
    return r.den().is_constant() && r.num().is_constant() && !r.is_zero() &&
           r.num().constant_value() == 1 && r.den().constant_value() == 1;
}

bool FieldElement::is_exact() const {
    if (level_ == 0) return true;
    const LaurentPoly& L = laurent();
    if (L.precision) return false;
    for (auto& t : L.terms)
        if (!t.coeff.is_exact()) return false;
    return true;
}

bool FieldElement::known_to_layer_precision(std::int64_t k) const {
    if (level_ == 0) return true;
    const LaurentPoly& L = laurent();
    if (L.precision && *L.precision < k) return false;
    for (auto& t : L.terms)
        if (!t.coeff.known_to_layer_precision(k)) return false;
    return true;
}

bool operator==(const FieldElement& a, const FieldElement& b) {
    if (!a.tower() || !b.tower()) return !a.tower() && !b.tower();
    if (!a.tower()->same_field(*b.tower())) return false;
    if (a.level_ != b.level_) return false;
    if (a.level_ == 0) {
        if (a.tower()->base_is_finite())
            return std::get<fq_repr>(a.payload_->v) == std::get<fq_repr>(b.payload_->v);
        return std::get<RatFunc>(a.payload_->v) == std::get<RatFunc>(b.payload_->v);
    }
    const LaurentPoly& la = a.laurent();
    const LaurentPoly& lb = b.laurent();
    if (la.precision != lb.precision || la.terms.size() != lb.terms.size()) return false;
    for (size_t i = 0; i < la.terms.size(); ++i)
        if (la.terms[i].exp != lb.terms[i].exp || !(la.terms[i].coeff == lb.terms[i].coeff))
            return false;
    return true;
}

// ---------------------------------------------------------------------------
// Ring operations

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
    check_same_field(a, b);
    std::uint32_t lvl = std::max(a.level(), b.level());
    if (lvl == 0) {
        if (a.tower()->base_is_finite()) {
            auto f = a.tower()->finite_base();
            return FieldElement::from_fq(a.tower(),
                                         f->add(std::get<fq_repr>(a.payload_->v),
                                                std::get<fq_repr>(b.payload_->v)));
        }
        return FieldElement::from_rat(a.tower(), a.base_rat() + b.base_rat());
    }
    LView va = view_at(a, lvl), vb = view_at(b, lvl);
    std::vector<LaurentTerm> terms(*va.terms);
    terms.insert(terms.end(), vb.terms->begin(), vb.terms->end());
    return FieldElement::make_laurent(a.tower()->laurent_count() >= lvl ? a.tower() : b.tower(),
                                      lvl, std::move(terms), min_prec(va.prec, vb.prec));
}

FieldElement FieldElement::operator-() const {
    if (level_ == 0) {
        if (tower_->base_is_finite())
            return from_fq(tower_, tower_->finite_base()->neg(std::get<fq_repr>(payload_->v)));
        return from_rat(tower_, -base_rat());
    }
    const LaurentPoly& L = laurent();
    std::vector<LaurentTerm> terms;
    terms.reserve(L.terms.size());
    for (auto& t : L.terms) terms.push_back({t.exp, -t.coeff});
    return make_laurent(tower_, level_, std::move(terms), L.precision);
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) { return a + (-b); }

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
    check_same_field(a, b);
    std::uint32_t lvl = std::max(a.level(), b.level());
    if (lvl == 0) {
        if (a.tower()->base_is_finite()) {
            auto f = a.tower()->finite_base();
            return FieldElement::from_fq(a.tower(),
                                         f->mul(std::get<fq_repr>(a.payload_->v),
                                                std::get<fq_repr>(b.payload_->v)));
        }
        return FieldElement::from_rat(a.tower(), a.base_rat() * b.base_rat());
    }
    if (a.is_zero() || b.is_zero()) return a.tower()->zero();
    LView va = view_at(a, lvl), vb = view_at(b, lvl);
    std::optional<std::int64_t> prec;
    if (va.prec && vb.prec) {
        prec = std::min({*va.prec + view_valuation(vb), *vb.prec + view_valuation(va),
                         *va.prec + *vb.prec});
    } else if (va.prec) {
        prec = *va.prec + view_valuation(vb);
    } else if (vb.prec) {
        prec = *vb.prec + view_valuation(va);
    }
    std::map<std::int64_t, FieldElement> acc;
    for (auto& ta : *va.terms)
        for (auto& tb : *vb.terms) {
            std::int64_t e = ta.exp + tb.exp;
            if (prec && e >= *prec) continue;
            FieldElement c = ta.coeff * tb.coeff;
            auto it = acc.find(e);
            if (it == acc.end())
                acc.emplace(e, std::move(c));
            else
                it->second = it->second + c;
        }
    std::vector<LaurentTerm> terms;
    terms.reserve(acc.size());
    for (auto& [e, c] : acc) terms.push_back({e, std::move(c)});
    return FieldElement::make_laurent(a.tower(), lvl, std::move(terms), prec);
}

namespace {

// Drop stored exponents >= bound; keeps tags out of internal series loops.
FieldElement truncate_below(const FieldElement& x, std::uint32_t level, std::int64_t bound) {
    if (x.level() < level) return x;
    const LaurentPoly& L = x.laurent();
    std::vector<LaurentTerm> terms;
    for (auto& t : L.terms)
        if (t.exp < bound) terms.push_back(t);
    return FieldElement::make_laurent(x.tower(), level, std::move(terms), L.precision);
}

}  // namespace

FieldElement FieldElement::inv(std::optional<std::int64_t> precision) const {
    if (precision && *precision < 1) throw DomainError("precision request must be >= 1");
    if (is_zero()) throw DomainError("division by zero");
    if (level_ == 0) {
        if (tower_->base_is_finite())
            return from_fq(tower_, tower_->finite_base()->inv(std::get<fq_repr>(payload_->v)));
        return from_rat(tower_, base_rat().inv());
    }
    const LaurentPoly& L = laurent();
    if (L.terms.empty())
        throw PrecisionError("cannot invert an element whose leading term is below precision");
    const std::int64_t v = L.terms.front().exp;
    const FieldElement& lead = L.terms.front().coeff;
    if (L.terms.size() == 1 && !L.precision) {
        FieldElement ci = lead.inv(precision);
        return make_laurent(tower_, level_, {{-v, std::move(ci)}}, std::nullopt);
    }
    std::int64_t n_res = precision ? *precision : tower_->default_precision();
    if (L.precision) n_res = std::min(n_res, *L.precision - 2 * v);
    if (n_res <= -v)
        throw PrecisionError("input precision too low to invert at this valuation");
    FieldElement lead_inv = lead.inv();
    // x = c_v t^v (1 + u); x^{-1} = c_v^{-1} t^{-v} sum (-u)^j.
    const std::int64_t series_bound = n_res + v;
    std::vector<LaurentTerm> u_terms;
    for (size_t i = 1; i < L.terms.size(); ++i) {
        if (L.terms[i].exp - v >= series_bound) continue;
        u_terms.push_back({L.terms[i].exp - v, L.terms[i].coeff * lead_inv});
    }
    FieldElement u = make_laurent(tower_, level_, std::move(u_terms), std::nullopt);
    FieldElement series = tower_->one();
    FieldElement term = tower_->one();
    FieldElement neg_u = -u;
    while (!term.is_zero()) {
        term = truncate_below(term * neg_u, level_, series_bound);
        if (term.is_zero()) break;
        series = series + term;
    }
    FieldElement shifted = make_laurent(tower_, level_, {{-v, lead_inv}}, std::nullopt);
    FieldElement out = series * shifted;
    // Re-tag at the computed precision.
    LView vo = view_at(out, level_);
    std::vector<LaurentTerm> out_terms(*vo.terms);
    return make_laurent(tower_, level_, std::move(out_terms), n_res);
}

FieldElement FieldElement::div(const FieldElement& x, const FieldElement& y,
                               std::optional<std::int64_t> precision) {
    check_same_field(x, y);
    if (y.is_zero()) throw DomainError("division by zero");
    if (x.is_zero()) return x.tower()->zero();
    bool y_exact_simple = y.level() == 0 || (y.laurent().terms.size() == 1 && y.is_exact());
    if (y_exact_simple) return x * y.inv(precision);
    std::int64_t n = precision ? *precision : x.tower()->default_precision();
    std::int64_t vx = 0;
    if (x.level() > 0) {
        LView v = view_at(x, x.level());
        vx = view_valuation(v);
    }
    return x * y.inv(std::max<std::int64_t>(n - vx, 1));
}

FieldElement operator/(const FieldElement& a, const FieldElement& b) {
    return FieldElement::div(a, b);
}

FieldElement FieldElement::pow(std::int64_t n) const {
    if (n == std::numeric_limits<std::int64_t>::min()) throw DomainError("exponent overflow");
    if (n < 0) return inv().pow(-n);
    FieldElement r = tower_->one();
    FieldElement base = *this;
    std::uint64_t e = std::uint64_t(n);
    while (e) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

FieldElement FieldElement::frobenius() const {
    if (level_ == 0) {
        if (tower_->base_is_finite())
            return from_fq(tower_,
                           tower_->finite_base()->frobenius(std::get<fq_repr>(payload_->v)));
        return from_rat(tower_, base_rat().frobenius());
    }
    const std::int64_t p = tower_->p();
    const LaurentPoly& L = laurent();
    std::vector<LaurentTerm> terms;
    terms.reserve(L.terms.size());
    for (auto& t : L.terms) terms.push_back({t.exp * p, t.coeff.frobenius()});
    std::optional<std::int64_t> prec;
    if (L.precision) prec = *L.precision * p;
    return make_laurent(tower_, level_, std::move(terms), prec);
}

std::optional<FieldElement> FieldElement::pth_root() const {
    if (level_ == 0) {
        if (tower_->base_is_finite())
            return from_fq(tower_,
                           tower_->finite_base()->pth_root(std::get<fq_repr>(payload_->v)));
        RatFunc out;
        if (!base_rat().pth_root(out)) return std::nullopt;
        return from_rat(tower_, std::move(out));
    }
    const std::int64_t p = tower_->p();
    const LaurentPoly& L = laurent();
    if (L.precision && *L.precision <= 0)
        throw PrecisionError("p-th root undecidable below precision O(t^0)");
    std::vector<LaurentTerm> terms;
    terms.reserve(L.terms.size());
    for (auto& t : L.terms) {
        if (floor_mod(t.exp, p) != 0) return std::nullopt;
        auto c = t.coeff.pth_root();
        if (!c) return std::nullopt;
        terms.push_back({t.exp / p, std::move(*c)});
    }
    std::optional<std::int64_t> prec;
    if (L.precision) prec = (*L.precision + p - 1) / p;
    return make_laurent(tower_, level_, std::move(terms), prec);
}

// ---------------------------------------------------------------------------
// p-component decomposition

namespace {

void decompose_rec(const FieldElement& x, std::map<Theta, FieldElement>& out,
                   const TowerPtr& tower) {
    const std::uint32_t rank = tower->p_rank();
    const std::uint32_t s = tower->base_rank();
    if (x.level() == 0) {
        if (tower->base_is_finite()) {
            if (x.is_zero()) return;
            auto root = x.pth_root();
            out.emplace(Theta(rank, 0), std::move(*root));
            return;
        }
        const RatFunc& r = x.base_rat();
        if (r.is_zero()) return;
        const std::uint32_t p = tower->p();
        // Clear the denominator by a p-th power: u/v = u v^(p-1) / v^p.
        MPoly cleared = r.num() * r.den().pow(p - 1);
        std::map<Theta, std::vector<MPoly::Term>> buckets;
        for (auto& t : cleared.terms()) {
            Theta th(rank, 0);
            Monomial m(t.m.size());
            for (size_t i = 0; i < t.m.size(); ++i) {
                th[i] = std::uint8_t(t.m[i] % p);
                m[i] = (t.m[i] - th[i]) / p;
            }
            buckets[th].push_back({std::move(m), t.c});
        }
        for (auto& [th, terms] : buckets) {
            MPoly comp = MPoly::from_terms(p, s, std::move(terms));
            RatFunc c(std::move(comp), r.den());
            if (c.is_zero()) continue;
            out.emplace(th, FieldElement::from_rat(tower, std::move(c)));
        }
        return;
    }
    const std::uint32_t j = x.level();
    const std::int64_t p = tower->p();
    const LaurentPoly& L = x.laurent();
    std::map<Theta, std::vector<LaurentTerm>> buckets;
    for (auto& t : L.terms) {
        std::int64_t i = floor_mod(t.exp, p);
        std::int64_t m = (t.exp - i) / p;
        std::map<Theta, FieldElement> sub;
        decompose_rec(t.coeff, sub, tower);
        for (auto& [th, comp] : sub) {
            Theta th2 = th;
            th2[s + j - 1] = std::uint8_t(i);
            buckets[th2].push_back({m, comp});
        }
    }
    for (auto& [th, terms] : buckets) {
        FieldElement comp =
            FieldElement::make_laurent(tower, j, std::move(terms), L.precision);
        if (comp.is_zero()) continue;
        auto it = out.find(th);
        if (it == out.end())
            out.emplace(th, std::move(comp));
        else
            it->second = it->second + comp;
    }
    if (L.precision && buckets.empty() && L.terms.empty()) {
        // Pure big-O input: record the tag on the theta = 0 component.
        out.emplace(Theta(rank, 0), tower->big_o(j, *L.precision));
    }
}

}  // namespace

PComponentDecomposition p_component_decompose(const FieldElement& x) {
    if (!x.known_to_layer_precision(1))
        throw PrecisionError("decomposition needs precision >= 1 at every Laurent layer");
    std::map<Theta, FieldElement> comps;
    decompose_rec(x, comps, x.tower());
    return PComponentDecomposition(x.tower(), std::move(comps));
}

FieldElement PComponentDecomposition::component(const Theta& t) const {
    auto it = comps_.find(t);
    if (it == comps_.end()) return tower_->zero();
    return it->second;
}

FieldElement PComponentDecomposition::theta_zero() const {
    return component(Theta(tower_->p_rank(), 0));
}

bool PComponentDecomposition::has_nonzero_positive_part() const {
    Theta zero(tower_->p_rank(), 0);
    for (auto& [th, c] : comps_)
        if (th != zero && !c.is_zero()) return true;
    return false;
}

FieldElement PComponentDecomposition::reassemble() const {
    FieldElement acc = tower_->zero();
    for (auto& [th, c] : comps_) {
        FieldElement term = c.frobenius();
        for (std::uint32_t i = 0; i < th.size(); ++i)
            if (th[i]) term = term * tower_->basis_element(i).pow(th[i]);
        acc = acc + term;
    }
    return acc;
}

FieldElement theta_zero_part(const FieldElement& x) {
    return p_component_decompose(x).theta_zero().frobenius();
}

FieldElement artin_schreier(const FieldElement& x) { return x - x.frobenius(); }

// ---------------------------------------------------------------------------
// Derivations

FieldElement FieldElement::partial(std::uint32_t basis_idx) const {
    const std::uint32_t s = tower_->base_rank();
    if (basis_idx >= tower_->p_rank())
        throw DomainError("derivation variable is not in the p-basis");
    if (basis_idx < s) {
        if (level_ == 0) return from_rat(tower_, base_rat().derivative(basis_idx));
        const LaurentPoly& L = laurent();
        std::vector<LaurentTerm> terms;
        for (auto& t : L.terms) terms.push_back({t.exp, t.coeff.partial(basis_idx)});
        return make_laurent(tower_, level_, std::move(terms), L.precision);
    }
    const std::uint32_t jv = basis_idx - s + 1;
    if (level_ < jv) return tower_->zero();
    const LaurentPoly& L = laurent();
    if (level_ == jv) {
        std::vector<LaurentTerm> terms;
        for (auto& t : L.terms) {
            FieldElement c = t.coeff * tower_->from_int(t.exp);
            if (c.is_zero()) continue;
            terms.push_back({t.exp - 1, std::move(c)});
        }
        std::optional<std::int64_t> prec;
        if (L.precision) prec = *L.precision - 1;
        return make_laurent(tower_, level_, std::move(terms), prec);
    }
    std::vector<LaurentTerm> terms;
    for (auto& t : L.terms) terms.push_back({t.exp, t.coeff.partial(basis_idx)});
    return make_laurent(tower_, level_, std::move(terms), L.precision);
}

// ---------------------------------------------------------------------------
// Trace on finite fields

Fq field_trace_finite(const Fq& x, const FqFieldPtr& down_to) {
    return Fq(down_to, x.field()->trace_to(x.repr(), down_to));
}

// ---------------------------------------------------------------------------
// Printing

std::string FieldElement::to_string() const {
    if (level_ == 0) {
        if (tower_->base_is_finite())
            return tower_->finite_base()->to_string(std::get<fq_repr>(payload_->v));
        return base_rat().to_string(std::get<RationalFunctionBase>(tower_->base()).vars);
    }
    const LaurentPoly& L = laurent();
    const std::string& var = tower_->laurent_vars()[level_ - 1];
    std::string s;
    for (auto& t : L.terms) {
        if (!s.empty()) s += " + ";
        std::string c = t.coeff.to_string();
        bool wrap = c.find(' ') != std::string::npos;
        std::string cs = wrap ? "(" + c + ")" : c;
        if (t.exp == 0) {
            s += cs;
        } else {
            std::string power = var;
            if (t.exp != 1) power += "^" + std::to_string(t.exp);
            if (t.coeff.is_one())
                s += power;
            else
                s += cs + "*" + power;
        }
    }
    if (L.precision) {
        if (!s.empty()) s += " + ";
        s += "O(" + var + "^" + std::to_string(*L.precision) + ")";
    }
    if (s.empty()) s = "0";
    return s;
}

}  // namespace charp
