#include "charp/mpoly.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace charp {

namespace {

std::uint32_t mono_degree(const Monomial& m) {
    return std::accumulate(m.begin(), m.end(), 0u);
}

// Graded lex: compare total degree, then exponent vectors lexicographically.
bool mono_less(const Monomial& a, const Monomial& b) {
    std::uint32_t da = mono_degree(a), db = mono_degree(b);
    if (da != db) return da < db;
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

std::uint32_t mod_inv(std::uint32_t a, std::uint32_t p) {
    std::uint32_t r = 1;
    std::uint64_t base = a % p, e = p - 2;
    while (e) {
        if (e & 1) r = std::uint32_t(r * base % p);
        base = base * base % p;
        e >>= 1;
    }
    return r;
}

}  // namespace

void MPoly::normalize() {
    std::sort(terms_.begin(), terms_.end(),
              [](const Term& a, const Term& b) { return mono_less(a.m, b.m); });
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
        std::uint32_t c = t.c % p_;
        if (!out.empty() && out.back().m == t.m) {
            out.back().c = (out.back().c + c) % p_;
        } else {
            out.push_back({t.m, c});
        }
    }
    terms_.clear();
    for (auto& t : out)
        if (t.c != 0) terms_.push_back(std::move(t));
}

MPoly MPoly::constant(std::uint32_t p, std::uint32_t nvars, std::int64_t c) {
    MPoly r(p, nvars);
    std::int64_t v = c % std::int64_t(p);
    if (v < 0) v += p;
    if (v != 0) r.terms_.push_back({Monomial(nvars, 0), std::uint32_t(v)});
    return r;
}

MPoly MPoly::variable(std::uint32_t p, std::uint32_t nvars, std::uint32_t index) {
    if (index >= nvars) throw DomainError("variable index out of range");
    MPoly r(p, nvars);
    Monomial m(nvars, 0);
    m[index] = 1;
    r.terms_.push_back({std::move(m), 1});
    return r;
}

MPoly MPoly::from_terms(std::uint32_t p, std::uint32_t nvars, std::vector<Term> terms) {
    MPoly r(p, nvars);
    r.terms_ = std::move(terms);
    r.normalize();
    return r;
}

bool MPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && mono_degree(terms_[0].m) == 0);
}

std::uint32_t MPoly::constant_value() const {
    if (terms_.empty()) return 0;
    return terms_[0].c;
}

std::uint32_t MPoly::total_degree() const {
    return terms_.empty() ? 0 : mono_degree(terms_.back().m);
}

std::uint32_t MPoly::degree_in(std::uint32_t var) const {
    std::uint32_t d = 0;
    for (auto& t : terms_) d = std::max(d, t.m[var]);
    return d;
}

bool MPoly::depends_on(std::uint32_t var) const {
    for (auto& t : terms_)
        if (t.m[var] != 0) return true;
    return false;
}

const MPoly::Term& MPoly::leading_term() const {
    if (terms_.empty()) throw DomainError("leading term of zero polynomial");
    return terms_.back();
}

MPoly operator+(const MPoly& a, const MPoly& b) {
    if (a.nvars_ != b.nvars_ || a.p_ != b.p_) throw MismatchError("polynomial rings differ");
    MPoly r(a.p_, a.nvars_);
    r.terms_ = a.terms_;
    r.terms_.insert(r.terms_.end(), b.terms_.begin(), b.terms_.end());
    r.normalize();
    return r;
}

MPoly operator-(const MPoly& a, const MPoly& b) { return a + (-b); }

MPoly MPoly::operator-() const {
    MPoly r(p_, nvars_);
    r.terms_ = terms_;
    for (auto& t : r.terms_) t.c = (p_ - t.c) % p_;
    return r;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
    if (a.nvars_ != b.nvars_ || a.p_ != b.p_) throw MismatchError("polynomial rings differ");
    std::map<Monomial, std::uint32_t, bool (*)(const Monomial&, const Monomial&)> acc(mono_less);
    for (auto& ta : a.terms_)
        for (auto& tb : b.terms_) {
            Monomial m(a.nvars_);
            for (std::uint32_t i = 0; i < a.nvars_; ++i) m[i] = ta.m[i] + tb.m[i];
            auto [it, inserted] = acc.try_emplace(std::move(m), 0);
            it->second = std::uint32_t((it->second + std::uint64_t(ta.c) * tb.c) % a.p_);
        }
    MPoly r(a.p_, a.nvars_);
    for (auto& [m, c] : acc)
        if (c != 0) r.terms_.push_back({m, c});
    return r;
}

MPoly MPoly::scalar_mul(std::uint32_t c) const {
    c %= p_;
    MPoly r(p_, nvars_);
    if (c == 0) return r;
    r.terms_ = terms_;
    for (auto& t : r.terms_) t.c = std::uint32_t(std::uint64_t(t.c) * c % p_);
    return r;
}

MPoly MPoly::mul_monomial(const Monomial& m, std::uint32_t c) const {
    c %= p_;
    MPoly r(p_, nvars_);
    if (c == 0) return r;
    r.terms_ = terms_;
    for (auto& t : r.terms_) {
        for (std::uint32_t i = 0; i < nvars_; ++i) t.m[i] += m[i];
        t.c = std::uint32_t(std::uint64_t(t.c) * c % p_);
    }
    return r;
}

MPoly MPoly::pow(std::uint32_t n) const {
    MPoly r = MPoly::constant(p_, nvars_, 1);
    MPoly base = *this;
    while (n) {
        if (n & 1) r = r * base;
        base = base * base;
        n >>= 1;
    }
    return r;
}

bool operator==(const MPoly& a, const MPoly& b) {
    if (a.p_ != b.p_ || a.nvars_ != b.nvars_ || a.terms_.size() != b.terms_.size()) return false;
    for (size_t i = 0; i < a.terms_.size(); ++i)
        if (a.terms_[i].m != b.terms_[i].m || a.terms_[i].c != b.terms_[i].c) return false;
    return true;
}

MPoly MPoly::derivative(std::uint32_t var) const {
    MPoly r(p_, nvars_);
    for (auto& t : terms_) {
        std::uint32_t e = t.m[var];
        if (e % p_ == 0) continue;
        Term nt = t;
        nt.m[var] -= 1;
        nt.c = std::uint32_t(std::uint64_t(t.c) * (e % p_) % p_);
        if (nt.c) r.terms_.push_back(std::move(nt));
    }
    r.normalize();
    return r;
}

MPoly MPoly::frobenius() const {
    MPoly r(p_, nvars_);
    r.terms_ = terms_;
    for (auto& t : r.terms_)
        for (auto& e : t.m) e *= p_;
    // Coefficients are in F_p, fixed by Frobenius; term order is preserved.
    return r;
}

bool MPoly::pth_root(MPoly& out) const {
    MPoly r(p_, nvars_);
    r.terms_ = terms_;
    for (auto& t : r.terms_)
        for (auto& e : t.m) {
            if (e % p_ != 0) return false;
            e /= p_;
        }
    r.normalize();
    out = std::move(r);
    return true;
}

MPoly MPoly::div_exact(const MPoly& d) const {
    if (d.is_zero()) throw DomainError("division by zero polynomial");
    MPoly rem = *this;
    MPoly quot(p_, nvars_);
    const Term& lead = d.leading_term();
    std::uint32_t lead_inv = mod_inv(lead.c, p_);
    while (!rem.is_zero()) {
        const Term& lt = rem.leading_term();
        Monomial qm(nvars_);
        for (std::uint32_t i = 0; i < nvars_; ++i) {
            if (lt.m[i] < lead.m[i]) throw DomainError("inexact polynomial division");
            qm[i] = lt.m[i] - lead.m[i];
        }
        std::uint32_t qc = std::uint32_t(std::uint64_t(lt.c) * lead_inv % p_);
        quot.terms_.push_back({qm, qc});
        rem = rem - d.mul_monomial(qm, qc);
    }
    quot.normalize();
    return quot;
}

namespace {

// Coefficients of `a` viewed as a polynomial in `var` (dense, degree-indexed).
std::vector<MPoly> coeffs_in(const MPoly& a, std::uint32_t var) {
    std::vector<MPoly> out(a.degree_in(var) + 1, MPoly(a.p(), a.nvars()));
    std::vector<std::vector<MPoly::Term>> buckets(out.size());
    for (auto& t : a.terms()) {
        MPoly::Term nt = t;
        std::uint32_t e = nt.m[var];
        nt.m[var] = 0;
        buckets[e].push_back(std::move(nt));
    }
    for (size_t e = 0; e < buckets.size(); ++e)
        out[e] = MPoly::from_terms(a.p(), a.nvars(), std::move(buckets[e]));
    return out;
}

MPoly assemble_in(std::uint32_t p, std::uint32_t nvars, std::uint32_t var,
                  const std::vector<MPoly>& cs) {
    std::vector<MPoly::Term> terms;
    for (size_t e = 0; e < cs.size(); ++e)
        for (auto& t : cs[e].terms()) {
            MPoly::Term nt = t;
            nt.m[var] += std::uint32_t(e);
            terms.push_back(std::move(nt));
        }
    return MPoly::from_terms(p, nvars, std::move(terms));
}

MPoly make_monic(const MPoly& a) {
    if (a.is_zero()) return a;
    return a.scalar_mul(mod_inv(a.leading_term().c, a.p()));
}

MPoly gcd_rec(MPoly a, MPoly b);

// gcd of the coefficients of `a` in `var` (the content).
MPoly content_in(const MPoly& a, std::uint32_t var) {
    auto cs = coeffs_in(a, var);
    MPoly g(a.p(), a.nvars());
    for (auto& c : cs) {
        if (c.is_zero()) continue;
        g = g.is_zero() ? c : gcd_rec(g, c);
        if (g.is_constant()) break;
    }
    return make_monic(g);
}

// Pseudo-remainder of a by b in `var`: repeatedly eliminate the leading
// coefficient; equals lc(b)^k * a mod b up to that factor, which the
// primitive PRS strips anyway.
MPoly pseudo_rem(MPoly a, const MPoly& b, std::uint32_t var) {
    const std::uint32_t db = b.degree_in(var);
    auto bs = coeffs_in(b, var);
    const MPoly& lb = bs[db];
    while (!a.is_zero()) {
        std::uint32_t da = a.degree_in(var);
        if (da < db) break;
        auto as = coeffs_in(a, var);
        MPoly la = as[da];
        // a <- lb*a - la * x^(da-db) * b
        MPoly shifted(a.p(), a.nvars());
        {
            auto cs = bs;
            std::vector<MPoly> sh(da + 1, MPoly(a.p(), a.nvars()));
            for (std::uint32_t j = 0; j <= db; ++j) sh[da - db + j] = cs[j] * la;
            shifted = assemble_in(a.p(), a.nvars(), var, sh);
        }
        a = a * lb - shifted;
    }
    return a;
}

// Primitive pseudo-remainder sequence in `var`.
MPoly gcd_univariate_step(MPoly a, MPoly b, std::uint32_t var) {
    MPoly ca = content_in(a, var), cb = content_in(b, var);
    MPoly cont = gcd_rec(ca, cb);
    a = a.div_exact(ca);
    b = b.div_exact(cb);
    if (a.degree_in(var) < b.degree_in(var)) std::swap(a, b);
    while (!b.is_zero()) {
        MPoly r = pseudo_rem(a, b, var);
        a = std::move(b);
        if (r.is_zero()) {
            b = MPoly(a.p(), a.nvars());
        } else {
            MPoly cr = content_in(r, var);
            b = r.div_exact(cr);
        }
    }
    MPoly cres = content_in(a, var);
    a = a.div_exact(cres);
    return make_monic(a * cont);
}

MPoly gcd_rec(MPoly a, MPoly b) {
    if (a.is_zero()) return make_monic(b);
    if (b.is_zero()) return make_monic(a);
    if (a.is_constant() || b.is_constant()) return MPoly::constant(a.p(), a.nvars(), 1);
    std::uint32_t var = 0;
    bool found = false;
    for (std::uint32_t v = 0; v < a.nvars() && !found; ++v)
        if (a.depends_on(v) || b.depends_on(v)) {
            var = v;
            found = true;
        }
    if (!found) return MPoly::constant(a.p(), a.nvars(), 1);
    return gcd_univariate_step(std::move(a), std::move(b), var);
}

}  // namespace

MPoly MPoly::gcd(const MPoly& a, const MPoly& b) {
    if (a.p() != b.p() || a.nvars() != b.nvars()) throw MismatchError("polynomial rings differ");
    return make_monic(gcd_rec(a, b));
}

std::string MPoly::to_string(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::string s;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        if (!s.empty()) s += " + ";
        std::string mono;
        for (std::uint32_t i = 0; i < nvars_; ++i) {
            if (it->m[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += names[i];
            if (it->m[i] > 1) mono += "^" + std::to_string(it->m[i]);
        }
        if (mono.empty()) {
            s += std::to_string(it->c);
        } else if (it->c == 1) {
            s += mono;
        } else {
            s += std::to_string(it->c) + "*" + mono;
        }
    }
    return s;
}

RatFunc::RatFunc(MPoly num, MPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw DomainError("zero denominator");
    if (num_.is_zero()) {
        den_ = MPoly::constant(num_.p(), num_.nvars(), 1);
        return;
    }
    MPoly g = MPoly::gcd(num_, den_);
    if (!g.is_constant() || g.constant_value() != 1) {
        num_ = num_.div_exact(g);
        den_ = den_.div_exact(g);
    }
    // Monic denominator fixes the representative of the fraction.
    std::uint32_t lc = den_.leading_term().c;
    if (lc != 1) {
        std::uint32_t ic = mod_inv(lc, den_.p());
        num_ = num_.scalar_mul(ic);
        den_ = den_.scalar_mul(ic);
    }
}

RatFunc RatFunc::constant(std::uint32_t p, std::uint32_t nvars, std::int64_t c) {
    return RatFunc(MPoly::constant(p, nvars, c), MPoly::constant(p, nvars, 1));
}

RatFunc RatFunc::variable(std::uint32_t p, std::uint32_t nvars, std::uint32_t index) {
    return RatFunc(MPoly::variable(p, nvars, index), MPoly::constant(p, nvars, 1));
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
}

RatFunc RatFunc::operator-() const {
    RatFunc r = *this;
    r.num_ = -r.num_;
    return r;
}

RatFunc RatFunc::inv() const {
    if (num_.is_zero()) throw DomainError("division by zero");
    return RatFunc(den_, num_);
}

RatFunc RatFunc::frobenius() const { return RatFunc(num_.frobenius(), den_.frobenius()); }

bool RatFunc::pth_root(RatFunc& out) const {
    // x = u/v = u v^(p-1) / v^p, and v^p has an exact root.
    const std::uint32_t p = num_.p();
    MPoly cleared = num_ * den_.pow(p - 1);
    MPoly root(num_.p(), num_.nvars());
    if (!cleared.pth_root(root)) return false;
    out = RatFunc(root, den_);
    return true;
}

RatFunc RatFunc::derivative(std::uint32_t var) const {
    MPoly n = num_.derivative(var) * den_ - num_ * den_.derivative(var);
    return RatFunc(std::move(n), den_ * den_);
}

bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
}

std::string RatFunc::to_string(const std::vector<std::string>& names) const {
    std::string n = num_.to_string(names);
    if (den_.is_constant() && den_.constant_value() == 1) return n;
    std::string d = den_.to_string(names);
    bool n_atom = num_.terms().size() <= 1;
    bool d_atom = den_.terms().size() <= 1 && den_.leading_term().c == 1 &&
                  [&] {
                      std::uint32_t nz = 0;
                      for (auto e : den_.leading_term().m)
                          if (e) ++nz;
                      return nz <= 1;
                  }();
    std::string res = n_atom ? n : "(" + n + ")";
    res += "/";
    res += d_atom ? d : "(" + d + ")";
    return res;
}

}  // namespace charp
