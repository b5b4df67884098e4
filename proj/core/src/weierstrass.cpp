#include "charp/weierstrass.hpp"

#include <algorithm>

namespace charp {

namespace {

std::uint32_t key_total(std::uint64_t key, std::uint32_t nvars) {
    std::uint32_t s = 0;
    for (std::uint32_t i = 0; i < nvars; ++i) s += (key >> (8 * i)) & 0xff;
    return s;
}

std::uint32_t key_at(std::uint64_t key, std::uint32_t i) { return (key >> (8 * i)) & 0xff; }

// Binomial coefficients mod p, one row of Pascal's triangle.
std::vector<std::uint32_t> binomial_row(std::uint32_t n, std::uint32_t p) {
    std::vector<std::uint32_t> row(n + 1, 0);
    row[0] = 1;
    for (std::uint32_t i = 1; i <= n; ++i) {
        std::vector<std::uint32_t> next(n + 1, 0);
        next[0] = 1;
        for (std::uint32_t j = 1; j <= i; ++j) next[j] = (row[j - 1] + row[j]) % p;
        row = std::move(next);
    }
    return row;
}

}  // namespace

SeriesRingPtr SeriesRing::make(FqFieldPtr k, std::optional<std::string> u_name,
                               std::vector<std::string> x_names, std::string t_name,
                               std::uint32_t truncation) {
    if (!k) throw DomainError("missing coefficient field");
    if (truncation < 1 || truncation > kMaxTruncation)
        throw DomainError("truncation order must be in [1, " +
                          std::to_string(kMaxTruncation) + "]");
    std::vector<std::string> names;
    if (u_name) names.push_back(*u_name);
    for (auto& x : x_names) names.push_back(x);
    names.push_back(t_name);
    if (names.size() > kMaxVars) throw DomainError("too many series variables (limit 8)");
    for (size_t i = 0; i < names.size(); ++i) {
        if (names[i].empty()) throw DomainError("empty variable name");
        for (size_t j = i + 1; j < names.size(); ++j)
            if (names[i] == names[j])
                throw DomainError("duplicate variable name '" + names[i] + "'");
    }
    return SeriesRingPtr(new SeriesRing(std::move(k), u_name.has_value(), std::move(names),
                                        truncation));
}

std::optional<std::uint32_t> SeriesRing::find_var(const std::string& name) const {
    for (std::uint32_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name) return i;
    return std::nullopt;
}

bool SeriesRing::same(const SeriesRing& o) const {
    return same_vars(o) && trunc_ == o.trunc_;
}

bool SeriesRing::same_vars(const SeriesRing& o) const {
    return k_->same_field(*o.k_) && has_u_ == o.has_u_ && names_ == o.names_;
}

std::vector<std::uint32_t> TruncatedSeries::unpack(std::uint64_t key) const {
    std::vector<std::uint32_t> e(ring_->nvars());
    for (std::uint32_t i = 0; i < e.size(); ++i) e[i] = key_at(key, i);
    return e;
}

void TruncatedSeries::set_term(const std::vector<std::uint32_t>& exps, fq_repr c) {
    std::uint32_t total = 0;
    std::uint64_t key = 0;
    for (std::uint32_t i = 0; i < exps.size(); ++i) {
        total += exps[i];
        key |= std::uint64_t(exps[i] & 0xff) << (8 * i);
    }
    if (total >= ring_->truncation()) return;
    if (c == 0)
        terms_.erase(key);
    else
        terms_[key] = c;
}

TruncatedSeries TruncatedSeries::constant(SeriesRingPtr ring, fq_repr c) {
    TruncatedSeries s(std::move(ring));
    if (c != 0) s.terms_[0] = c;
    return s;
}

TruncatedSeries TruncatedSeries::from_int(SeriesRingPtr ring, std::int64_t n) {
    fq_repr c = ring->coeff_field()->from_int(n);
    return constant(std::move(ring), c);
}

TruncatedSeries TruncatedSeries::variable(SeriesRingPtr ring, std::uint32_t var) {
    TruncatedSeries s(ring);
    std::vector<std::uint32_t> e(ring->nvars(), 0);
    e[var] = 1;
    s.set_term(e, ring->coeff_field()->one());
    return s;
}

TruncatedSeries TruncatedSeries::monomial(SeriesRingPtr ring, std::vector<std::uint32_t> exps,
                                          fq_repr c) {
    TruncatedSeries s(ring);
    s.set_term(exps, c);
    return s;
}

bool TruncatedSeries::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first == 0 && terms_.begin()->second == 1;
}

fq_repr TruncatedSeries::constant_term() const {
    auto it = terms_.find(0);
    return it == terms_.end() ? 0 : it->second;
}

std::uint32_t TruncatedSeries::order() const {
    std::uint32_t best = ring_->truncation();
    for (auto& [k, c] : terms_) best = std::min(best, key_total(k, ring_->nvars()));
    return best;
}

std::uint32_t TruncatedSeries::m_order() const {
    std::uint32_t best = ring_->truncation();
    const std::uint32_t t = ring_->t_index();
    for (auto& [k, c] : terms_) {
        std::uint32_t s = key_total(k, ring_->nvars()) - key_at(k, t);
        best = std::min(best, s);
    }
    return best;
}

std::uint32_t TruncatedSeries::degree_in_t() const {
    std::uint32_t d = 0;
    for (auto& [k, c] : terms_) d = std::max(d, key_at(k, ring_->t_index()));
    return d;
}

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (!a.ring_->same(*b.ring_)) throw MismatchError("series rings differ");
    TruncatedSeries r = a;
    const auto& f = a.ring_->coeff_field();
    for (auto& [k, c] : b.terms_) {
        auto it = r.terms_.find(k);
        if (it == r.terms_.end()) {
            r.terms_[k] = c;
        } else {
            it->second = f->add(it->second, c);
            if (it->second == 0) r.terms_.erase(it);
        }
    }
    return r;
}

TruncatedSeries TruncatedSeries::operator-() const {
    TruncatedSeries r = *this;
    const auto& f = ring_->coeff_field();
    for (auto& [k, c] : r.terms_) c = f->neg(c);
    return r;
}

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
    return a + (-b);
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (!a.ring_->same(*b.ring_)) throw MismatchError("series rings differ");
    TruncatedSeries r(a.ring_);
    const auto& f = a.ring_->coeff_field();
    const std::uint32_t nv = a.ring_->nvars();
    const std::uint32_t D = a.ring_->truncation();
    for (auto& [ka, ca] : a.terms_) {
        std::uint32_t da = key_total(ka, nv);
        for (auto& [kb, cb] : b.terms_) {
            if (da + key_total(kb, nv) >= D) continue;
            std::uint64_t k = ka + kb;  // per-byte sums stay < D <= 120
            fq_repr c = f->mul(ca, cb);
            auto it = r.terms_.find(k);
            if (it == r.terms_.end()) {
                r.terms_[k] = c;
            } else {
                it->second = f->add(it->second, c);
                if (it->second == 0) r.terms_.erase(it);
            }
        }
    }
    return r;
}

TruncatedSeries TruncatedSeries::scalar_mul(fq_repr c) const {
    TruncatedSeries r(ring_);
    if (c == 0) return r;
    const auto& f = ring_->coeff_field();
    for (auto& [k, v] : terms_) {
        fq_repr nc = f->mul(v, c);
        if (nc != 0) r.terms_[k] = nc;
    }
    return r;
}

TruncatedSeries TruncatedSeries::pow(std::uint32_t n) const {
    TruncatedSeries r = constant(ring_, ring_->coeff_field()->one());
    TruncatedSeries base = *this;
    while (n) {
        if (n & 1) r = r * base;
        base = base * base;
        n >>= 1;
    }
    return r;
}

TruncatedSeries TruncatedSeries::inverse() const {
    const auto& f = ring_->coeff_field();
    fq_repr c0 = constant_term();
    if (c0 == 0) throw DomainError("series is not a unit (zero constant term)");
    fq_repr c0i = f->inv(c0);
    // f = c0 (1 - w) with ord(w) >= 1: inverse by Horner on the geometric sum.
    TruncatedSeries w = constant(ring_, f->one()) - scalar_mul(c0i);
    TruncatedSeries acc = constant(ring_, f->one());
    for (std::uint32_t i = 1; i < ring_->truncation(); ++i) {
        acc = acc * w + constant(ring_, f->one());
    }
    return acc.scalar_mul(c0i);
}

std::optional<TruncatedSeries> TruncatedSeries::pth_root() const {
    const auto& f = ring_->coeff_field();
    const std::uint32_t p = f->p();
    TruncatedSeries r(ring_);
    for (auto& [k, c] : terms_) {
        std::uint64_t nk = 0;
        for (std::uint32_t i = 0; i < ring_->nvars(); ++i) {
            std::uint32_t e = key_at(k, i);
            if (e % p != 0) return std::nullopt;
            nk |= std::uint64_t(e / p) << (8 * i);
        }
        r.terms_[nk] = f->pth_root(c);
    }
    return r;
}

TruncatedSeries TruncatedSeries::shift_x_by_t_power(std::uint32_t x_i, std::uint32_t n) const {
    const std::uint32_t var = ring_->x_index(x_i);
    const std::uint32_t t = ring_->t_index();
    const std::uint32_t p = ring_->coeff_field()->p();
    const auto& f = ring_->coeff_field();
    TruncatedSeries r(ring_);
    for (auto& [k, c] : terms_) {
        std::uint32_t e = key_at(k, var);
        if (e == 0) {
            auto it = r.terms_.find(k);
            fq_repr nc = it == r.terms_.end() ? c : f->add(it->second, c);
            if (nc == 0) {
                if (it != r.terms_.end()) r.terms_.erase(it);
            } else {
                r.terms_[k] = nc;
            }
            continue;
        }
        auto row = binomial_row(e, p);
        auto exps = unpack(k);
        for (std::uint32_t j = 0; j <= e; ++j) {
            if (row[j] == 0) continue;
            auto ne = exps;
            ne[var] = e - j;
            ne[t] = exps[t] + j * n;
            if (ne[t] > 0xff) continue;  // far above any admissible truncation
            fq_repr nc = f->scalar_mul(row[j], c);
            std::uint32_t total = 0;
            for (auto v : ne) total += v;
            if (total >= ring_->truncation() || nc == 0) continue;
            std::uint64_t nk = 0;
            for (std::uint32_t i = 0; i < ne.size(); ++i) nk |= std::uint64_t(ne[i]) << (8 * i);
            auto it = r.terms_.find(nk);
            if (it == r.terms_.end()) {
                r.terms_[nk] = nc;
            } else {
                it->second = f->add(it->second, nc);
                if (it->second == 0) r.terms_.erase(it);
            }
        }
    }
    return r;
}

void TruncatedSeries::split_t(std::uint32_t k, TruncatedSeries& low, TruncatedSeries& high) const {
    low = TruncatedSeries(ring_);
    high = TruncatedSeries(ring_);
    const std::uint32_t t = ring_->t_index();
    for (auto& [key, c] : terms_) {
        std::uint32_t e = key_at(key, t);
        if (e < k) {
            low.terms_[key] = c;
        } else {
            std::uint64_t nk = key - (std::uint64_t(k) << (8 * t));
            high.terms_[nk] = c;
        }
    }
}

TruncatedSeries TruncatedSeries::retruncate(const SeriesRingPtr& other) const {
    if (!ring_->same_vars(*other)) throw MismatchError("rings have different variables");
    TruncatedSeries r(other);
    for (auto& [k, c] : terms_)
        if (key_total(k, other->nvars()) < other->truncation()) r.terms_[k] = c;
    return r;
}

TruncatedSeries TruncatedSeries::truncate_at(std::uint32_t bound) const {
    TruncatedSeries r(ring_);
    for (auto& [k, c] : terms_)
        if (key_total(k, ring_->nvars()) < bound) r.terms_[k] = c;
    return r;
}

bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
    return a.ring_->same(*b.ring_) && a.terms_ == b.terms_;
}

std::string TruncatedSeries::to_string() const {
    if (terms_.empty()) return "0";
    std::vector<std::pair<std::uint64_t, fq_repr>> sorted(terms_.begin(), terms_.end());
    const std::uint32_t nv = ring_->nvars();
    std::sort(sorted.begin(), sorted.end(), [&](const auto& a, const auto& b) {
        std::uint32_t da = key_total(a.first, nv), db = key_total(b.first, nv);
        if (da != db) return da < db;
        return a.first < b.first;
    });
    const auto& f = ring_->coeff_field();
    std::string s;
    for (auto& [k, c] : sorted) {
        if (!s.empty()) s += " + ";
        std::string mono;
        for (std::uint32_t i = 0; i < nv; ++i) {
            std::uint32_t e = key_at(k, i);
            if (!e) continue;
            if (!mono.empty()) mono += "*";
            mono += ring_->var_name(i);
            if (e > 1) mono += "^" + std::to_string(e);
        }
        std::string cs = f->to_string(c);
        bool wrap = cs.find(' ') != std::string::npos;
        if (mono.empty()) {
            s += wrap ? "(" + cs + ")" : cs;
        } else if (c == 1) {
            s += mono;
        } else {
            s += (wrap ? "(" + cs + ")" : cs) + "*" + mono;
        }
    }
    return s;
}

// ---------------------------------------------------------------------------
// Weierstrass theory

std::optional<std::uint32_t> regularity_order(const TruncatedSeries& f) {
    const auto& ring = f.ring();
    const std::uint32_t t = ring->t_index();
    const std::uint32_t nv = ring->nvars();
    std::optional<std::uint32_t> best;
    for (auto& [k, c] : f.terms()) {
        std::uint32_t te = key_at(k, t);
        if (key_total(k, nv) != te) continue;  // some u or X exponent is nonzero
        if (!best || te < *best) best = te;
    }
    return best;
}

namespace {

// Univariate T-series helpers over F_q (dense coefficient vectors).
using TVec = std::vector<fq_repr>;

TVec tv_mul(const TVec& a, const TVec& b, const FqFieldPtr& f, std::uint32_t bound) {
    TVec out(bound, 0);
    for (std::uint32_t i = 0; i < a.size() && i < bound; ++i) {
        if (a[i] == 0) continue;
        for (std::uint32_t j = 0; j < b.size() && i + j < bound; ++j) {
            if (b[j] == 0) continue;
            out[i + j] = f->add(out[i + j], f->mul(a[i], b[j]));
        }
    }
    return out;
}

TVec tv_inverse(const TVec& a, const FqFieldPtr& f, std::uint32_t bound) {
    TVec out(bound, 0);
    fq_repr c0i = f->inv(a[0]);
    out[0] = c0i;
    for (std::uint32_t n = 1; n < bound; ++n) {
        fq_repr acc = 0;
        for (std::uint32_t j = 1; j <= n && j < a.size(); ++j)
            acc = f->add(acc, f->mul(a[j], out[n - j]));
        out[n] = f->neg(f->mul(c0i, acc));
    }
    return out;
}

}  // namespace

// Division is solved slice by slice over the (m, X)-multidegrees: the pure-T
// slice of a k-regular divisor is T^k times a one-variable unit, so each
// slice of the quotient is a univariate division once the contributions of
// the smaller slices are subtracted. Computing at an enlarged internal
// T-precision makes the result the truncation of the unique solution in the
// full ring, so different schedules and raised truncation orders agree on
// the nose.
DivisionResult weierstrass_divide(const TruncatedSeries& g, const TruncatedSeries& f,
                                  std::uint32_t k, DivisionSchedule schedule) {
    auto reg = regularity_order(f);
    if (!reg || *reg != k)
        throw DomainError("divisor is not " + std::to_string(k) + "-regular");
    const auto& ring = f.ring();
    if (!ring->same(*g.ring())) throw MismatchError("series rings differ");
    const auto& fq = ring->coeff_field();
    const std::uint32_t D = ring->truncation();
    const std::uint32_t t = ring->t_index();
    const std::uint32_t nv = ring->nvars();
    // A T^k shift per slice step can move information down k degrees, so
    // correctness below total degree D needs this much internal T-headroom.
    const std::uint32_t tbound = D * (k + 1) + 1;

    auto slice_of = [&](const TruncatedSeries& s) {
        std::map<std::uint64_t, TVec> slices;
        for (auto& [key, c] : s.terms()) {
            std::uint32_t te = key_at(key, t);
            std::uint64_t mkey = key - (std::uint64_t(te) << (8 * t));
            auto& vec = slices[mkey];
            if (vec.size() <= te) vec.resize(te + 1, 0);
            vec[te] = c;
        }
        return slices;
    };
    std::map<std::uint64_t, TVec> fs = slice_of(f);
    std::map<std::uint64_t, TVec> gs = slice_of(g);

    // Pure-T slice of f = T^k * e0 with e0 a unit.
    TVec e0;
    {
        auto it = fs.find(0);
        if (it == fs.end() || it->second.size() <= k)
            throw DomainError("divisor lost its regular part");
        e0.assign(it->second.begin() + k, it->second.end());
        fs.erase(it);
    }
    TVec e0_inv = tv_inverse(e0, fq, tbound);

    // All (m, X)-multidegrees below D, graded; the second schedule walks
    // each grade in reverse and propagates contributions eagerly.
    std::vector<std::uint64_t> alphas;
    {
        std::vector<std::uint32_t> exps(nv, 0);
        auto rec = [&](auto&& self, std::uint32_t var, std::uint32_t remaining) -> void {
            if (var == nv) {
                std::uint64_t key = 0;
                for (std::uint32_t i = 0; i < nv; ++i)
                    key |= std::uint64_t(exps[i]) << (8 * i);
                alphas.push_back(key);
                return;
            }
            if (var == t) {
                self(self, var + 1, remaining);
                return;
            }
            for (std::uint32_t e = 0; e <= remaining; ++e) {
                exps[var] = e;
                self(self, var + 1, remaining - e);
            }
            exps[var] = 0;
        };
        rec(rec, 0, D - 1);
        std::sort(alphas.begin(), alphas.end(), [&](std::uint64_t a, std::uint64_t b) {
            std::uint32_t da = key_total(a, nv), db = key_total(b, nv);
            if (da != db) return da < db;
            bool rev = false;
            return rev ? a > b : a < b;
        });
        if (schedule == DivisionSchedule::GradedByOrder) {
            std::stable_sort(alphas.begin(), alphas.end(),
                             [&](std::uint64_t a, std::uint64_t b) {
                                 std::uint32_t da = key_total(a, nv), db = key_total(b, nv);
                                 if (da != db) return da < db;
                                 return a > b;  // reverse within each grade
                             });
        }
    }

    std::map<std::uint64_t, TVec> rhs;  // eager-propagation buffer
    std::map<std::uint64_t, TVec> q_slices, r_slices;
    auto add_into = [&](TVec& dst, const TVec& src, bool negate) {
        if (dst.size() < src.size()) dst.resize(src.size(), 0);
        for (std::uint32_t i = 0; i < src.size(); ++i)
            dst[i] = negate ? fq->sub(dst[i], src[i]) : fq->add(dst[i], src[i]);
    };

    for (std::uint64_t alpha : alphas) {
        TVec v(tbound, 0);
        if (auto it = gs.find(alpha); it != gs.end()) add_into(v, it->second, false);
        if (schedule == DivisionSchedule::GradedByOrder) {
            if (auto it = rhs.find(alpha); it != rhs.end()) add_into(v, it->second, false);
        } else {
            // Lazy: subtract q_beta * f_gamma for gamma + beta = alpha.
            for (auto& [gamma, fvec] : fs) {
                bool fits = true;
                std::uint64_t beta = 0;
                for (std::uint32_t i = 0; i < nv; ++i) {
                    std::uint32_t ga = key_at(gamma, i), al = key_at(alpha, i);
                    if (ga > al) {
                        fits = false;
                        break;
                    }
                    beta |= std::uint64_t(al - ga) << (8 * i);
                }
                if (!fits) continue;
                auto qb = q_slices.find(beta);
                if (qb == q_slices.end()) continue;
                add_into(v, tv_mul(qb->second, fvec, fq, tbound), true);
            }
        }
        v.resize(tbound, 0);
        TVec rpart(v.begin(), v.begin() + std::min<std::uint32_t>(k, tbound));
        TVec hpart(v.begin() + std::min<std::uint32_t>(k, tbound), v.end());
        TVec qpart = tv_mul(hpart, e0_inv, fq, tbound);
        bool q_nonzero = false;
        for (auto c : qpart)
            if (c) q_nonzero = true;
        if (q_nonzero) {
            if (schedule == DivisionSchedule::GradedByOrder) {
                for (auto& [gamma, fvec] : fs) {
                    std::uint64_t target = alpha + gamma;  // disjoint bytes cannot carry
                    if (key_total(target, nv) >= D) continue;
                    add_into(rhs[target], tv_mul(qpart, fvec, fq, tbound), true);
                }
            }
            q_slices.emplace(alpha, std::move(qpart));
        }
        bool r_nonzero = false;
        for (auto c : rpart)
            if (c) r_nonzero = true;
        if (r_nonzero) r_slices.emplace(alpha, std::move(rpart));
    }

    TruncatedSeries q(ring), r(ring);
    auto assemble = [&](const std::map<std::uint64_t, TVec>& slices, TruncatedSeries& out) {
        for (auto& [mkey, vec] : slices) {
            std::uint32_t mdeg = key_total(mkey, nv);
            for (std::uint32_t te = 0; te < vec.size(); ++te) {
                if (vec[te] == 0 || mdeg + te >= D) continue;
                auto exps = out.unpack(mkey);
                exps[t] = te;
                out.set_term(exps, vec[te]);
            }
        }
    };
    assemble(q_slices, q);
    assemble(r_slices, r);
    return {std::move(q), std::move(r)};
}

PreparedFactorization weierstrass_prepare(const TruncatedSeries& f) {
    auto reg = regularity_order(f);
    if (!reg) throw DomainError("series is not T-regular at this truncation");
    const std::uint32_t k = *reg;
    const auto& ring = f.ring();
    std::vector<std::uint32_t> tk(ring->nvars(), 0);
    tk[ring->t_index()] = k;
    TruncatedSeries tpow(ring);
    tpow.set_term(tk, ring->coeff_field()->one());
    DivisionResult d = weierstrass_divide(tpow, f, k);
    TruncatedSeries P = tpow - d.remainder;
    TruncatedSeries unit = d.quotient.inverse();
    if (unit * P != f.truncate_at(ring->truncation()))
        throw DomainError("preparation failed to validate u*P = f");
    // Distinguished: no pure-T term of degree < k may appear in P - T^k.
    for (auto& [key, c] : d.remainder.terms()) {
        std::uint32_t te = key_at(key, ring->t_index());
        if (key_total(key, ring->nvars()) == te)
            throw DomainError("preparation produced a non-distinguished polynomial");
    }
    return {std::move(unit), std::move(P), k, ring->truncation()};
}

RegularizeResult regularize(const TruncatedSeries& f) {
    const auto& ring = f.ring();
    const std::uint32_t n = ring->x_count();
    // f must not vanish modulo the maximal ideal of A.
    bool nonzero_mod_m = false;
    for (auto& [key, c] : f.terms()) {
        if (!ring->has_u() || key_at(key, ring->u_index()) == 0) nonzero_mod_m = true;
    }
    if (!nonzero_mod_m) throw DomainError("series vanishes modulo the maximal ideal");
    if (auto k = regularity_order(f)) return {std::vector<std::uint32_t>(n, 0), *k};
    const std::uint32_t D = ring->truncation();
    for (std::uint32_t base = 2; base <= D; ++base) {
        for (std::uint32_t j = 0;; ++j) {
            std::vector<std::uint32_t> shifts(n);
            std::uint64_t v = 1;
            for (std::uint32_t s = 0; s < j; ++s) v *= base;
            bool in_range = true;
            for (std::uint32_t i = 0; i < n; ++i) {
                if (v >= D) in_range = false;
                shifts[i] = std::uint32_t(v);
                v *= base;
            }
            if (!in_range) break;
            TruncatedSeries g = f;
            for (std::uint32_t i = 0; i < n; ++i) g = g.shift_x_by_t_power(i, shifts[i]);
            if (auto k = regularity_order(g)) return {std::move(shifts), *k};
        }
    }
    throw TruncationTooSmall("no regularizing substitution below the truncation order");
}

TruncatedSeries artin_schreier_solve(const TruncatedSeries& a, std::uint32_t order) {
    const auto& ring = a.ring();
    if (order > ring->truncation())
        throw DomainError("requested order exceeds the ring truncation");
    if (a.constant_term() != 0)
        throw DomainError("right-hand side must lie in the maximal ideal");
    const std::uint32_t p = ring->coeff_field()->p();
    TruncatedSeries b(ring);
    TruncatedSeries powed = a;
    std::uint64_t deg = 1;
    while (deg < order) {
        b = b + powed;
        deg *= p;
        if (deg >= order) break;
        powed = powed.pow(p);
    }
    return b.truncate_at(order);
}

TruncatedSeries poly_eval(const std::vector<TruncatedSeries>& g, const TruncatedSeries& x) {
    if (g.empty()) throw DomainError("empty polynomial");
    TruncatedSeries acc = g.back();
    for (auto it = g.rbegin() + 1; it != g.rend(); ++it) acc = acc * x + *it;
    return acc;
}

TruncatedSeries hensel_lift(const std::vector<TruncatedSeries>& g, const TruncatedSeries& x0,
                            std::uint32_t order) {
    if (g.size() < 2) throw DomainError("polynomial must have degree >= 1");
    const auto& ring = x0.ring();
    if (order > ring->truncation())
        throw DomainError("requested order exceeds the ring truncation");
    std::vector<TruncatedSeries> dg;
    for (std::uint32_t j = 1; j < g.size(); ++j)
        dg.push_back(g[j].scalar_mul(ring->coeff_field()->from_int(j)));
    TruncatedSeries v0 = poly_eval(g, x0);
    if (v0.constant_term() != 0)
        throw DomainError("x0 is not a root modulo the maximal ideal");
    if (poly_eval(dg, x0).constant_term() == 0)
        throw NotSimpleRoot("derivative vanishes at x0 modulo the maximal ideal");
    TruncatedSeries x = x0;
    std::uint32_t val = v0.order();
    while (val < order) {
        TruncatedSeries gx = poly_eval(g, x);
        TruncatedSeries dgx = poly_eval(dg, x);
        x = x - gx * dgx.inverse();
        std::uint32_t nval = poly_eval(g, x).order();
        // Simple roots converge quadratically; anything less is a bug or a
        // non-simple root that slipped through.
        if (nval < std::min<std::uint32_t>(order, 2 * val))
            throw NotSimpleRoot("Newton iteration failed to double the valuation");
        val = nval;
    }
    return x;
}

std::optional<TruncatedSeries> unit_pth_root(const TruncatedSeries& u) {
    if (u.constant_term() != 1) return std::nullopt;
    return u.pth_root();
}

CongruenceReport unit_group_congruence_check(const SeriesRingPtr& ring, std::uint32_t n,
                                             std::uint32_t count, std::uint64_t seed) {
    if (n < 1) throw DomainError("congruence level must be >= 1");
    const std::uint32_t p = ring->coeff_field()->p();
    const std::uint32_t D = ring->truncation();
    const std::uint32_t lo = (n + p - 1) / p;  // ceil(N/p)
    std::mt19937_64 rng(seed);
    CongruenceReport rep;
    std::uniform_int_distribution<std::uint32_t> expd(0, D - 1);
    std::uniform_int_distribution<std::uint64_t> coeffd(0, ring->coeff_field()->q() - 1);
    for (std::uint32_t s = 0; s < count; ++s) {
        // v0 = 1 + (random element of m^lo); u = v0^p lies in 1 + m^n.
        TruncatedSeries v0 = TruncatedSeries::constant(ring, ring->coeff_field()->one());
        std::uint32_t terms = 1 + std::uint32_t(rng() % 6);
        for (std::uint32_t i = 0; i < terms; ++i) {
            std::vector<std::uint32_t> e(ring->nvars(), 0);
            std::uint32_t total = 0;
            for (std::uint32_t v = 0; v < ring->nvars(); ++v) {
                e[v] = expd(rng) % D;
                total += e[v];
            }
            if (total < lo || total >= D) continue;
            TruncatedSeries mono = TruncatedSeries::monomial(
                ring, e, ring->coeff_field()->element(coeffd(rng)));
            v0 = v0 + mono;
        }
        TruncatedSeries u = v0.pow(p);
        ++rep.total;
        auto v = unit_pth_root(u);
        if (!v || v->pow(p) != u) {
            rep.failures.push_back("sample " + std::to_string(s) + ": u = " + u.to_string());
            continue;
        }
        ++rep.successes;
    }
    return rep;
}

}  // namespace charp
