#ifndef CHARP_TRACE_HPP
#define CHARP_TRACE_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "charp/diff_forms.hpp"

namespace charp {

// The two generating extension kinds. Composite extensions are explicit
// towers of descriptors; the machinery is generic over the coefficient ring
// R so an extension of an extension reuses the same code.

template <class R>
class ExtensionT;
template <class R>
class ExtElemT;
template <class R>
using ExtPtrT = std::shared_ptr<const ExtensionT<R>>;

/// Ring plumbing the extension machinery needs from its coefficients.
template <class R>
struct RingTraits;

template <>
struct RingTraits<FieldElement> {
    using Handle = TowerPtr;
    using FormCtx = TowerFormContext;
    static std::uint32_t p(const Handle& h) { return h->p(); }
    static std::uint32_t rank(const Handle& h) { return h->p_rank(); }
    static FieldElement zero(const Handle& h) { return h->zero(); }
    static FieldElement one(const Handle& h) { return h->one(); }
    static FieldElement from_int(const Handle& h, std::int64_t n) { return h->from_int(n); }
    static FieldElement basis_element(const Handle& h, std::uint32_t i) {
        return h->basis_element(i);
    }
    static const std::string& basis_name(const Handle& h, std::uint32_t i) {
        return h->basis_name(i);
    }
    static bool same(const Handle& a, const Handle& b) { return a->same_field(*b); }
    static FormCtx form_ctx(const Handle& h) { return FormCtx{h}; }
    /// Best-effort irreducibility check (finite constants of low degree);
    /// returns false only on a verified counterexample.
    static bool check_irreducible(const Handle& h, const std::vector<FieldElement>& poly);
};

template <class R>
struct EtaleMonogenicT {
    std::vector<R> min_poly;  // monic, coefficients c_0..c_n with c_n = 1
};

struct RadicialDescriptor {
    std::uint32_t basis_index;  // a^p = b, b the p-basis member at this index
};

/// k' = k(g) for one generator: etale monogenic (separable minimal
/// polynomial) or radicial of degree p (g^p a p-basis member of k). The
/// p-basis of k' is the p-basis of k, with the radicial case swapping the
/// designated member for g.
template <class R>
class ExtensionT : public std::enable_shared_from_this<ExtensionT<R>> {
  public:
    using Traits = RingTraits<R>;
    using Handle = typename Traits::Handle;

    static ExtPtrT<R> make_etale(Handle base, std::vector<R> min_poly, std::string gen_name);
    static ExtPtrT<R> make_radicial(Handle base, std::uint32_t basis_index,
                                    std::string gen_name);

    const Handle& base() const { return base_; }
    bool is_etale() const { return std::holds_alternative<EtaleMonogenicT<R>>(kind_); }
    const EtaleMonogenicT<R>& etale() const { return std::get<EtaleMonogenicT<R>>(kind_); }
    const RadicialDescriptor& radicial() const { return std::get<RadicialDescriptor>(kind_); }
    const std::string& gen_name() const { return gen_name_; }
    std::uint32_t degree() const { return degree_; }
    std::uint32_t p() const { return Traits::p(base_); }
    /// p-rank of k' (equal to the p-rank of k).
    std::uint32_t rank() const { return Traits::rank(base_); }
    const std::string& basis_name(std::uint32_t i) const;
    ExtElemT<R> basis_element(std::uint32_t i) const;
    ExtElemT<R> zero() const;
    ExtElemT<R> one() const;
    ExtElemT<R> from_int(std::int64_t n) const;
    ExtElemT<R> generator() const;

    bool same(const ExtensionT& other) const;

  private:
    ExtensionT(Handle base, std::variant<EtaleMonogenicT<R>, RadicialDescriptor> kind,
               std::string gen_name, std::uint32_t degree)
        : base_(std::move(base)), kind_(std::move(kind)), gen_name_(std::move(gen_name)),
          degree_(degree) {}

    Handle base_;
    std::variant<EtaleMonogenicT<R>, RadicialDescriptor> kind_;
    std::string gen_name_;
    std::uint32_t degree_;
};

/// Element of k': coordinates over k in the basis 1, g, ..., g^(d-1).
template <class R>
class ExtElemT {
  public:
    ExtElemT() = default;
    ExtElemT(ExtPtrT<R> ext, std::vector<R> coords);

    const ExtPtrT<R>& ext() const { return ext_; }
    const std::vector<R>& coords() const { return c_; }
    const R& coord(std::uint32_t i) const { return c_[i]; }

    bool is_zero() const;
    bool is_one() const;

    friend ExtElemT operator+(const ExtElemT& a, const ExtElemT& b) {
        a.check(b);
        std::vector<R> c;
        c.reserve(a.c_.size());
        for (size_t i = 0; i < a.c_.size(); ++i) c.push_back(a.c_[i] + b.c_[i]);
        return ExtElemT(a.ext_, std::move(c));
    }
    friend ExtElemT operator-(const ExtElemT& a, const ExtElemT& b) { return a + (-b); }
    ExtElemT operator-() const {
        std::vector<R> c;
        c.reserve(c_.size());
        for (auto& x : c_) c.push_back(-x);
        return ExtElemT(ext_, std::move(c));
    }

    friend ExtElemT operator*(const ExtElemT& a, const ExtElemT& b) {
        a.check(b);
        using Traits = RingTraits<R>;
        const auto& ext = a.ext_;
        const std::uint32_t d = ext->degree();
        std::vector<R> acc(2 * d - 1, Traits::zero(ext->base()));
        for (std::uint32_t i = 0; i < d; ++i) {
            if (a.c_[i].is_zero()) continue;
            for (std::uint32_t j = 0; j < d; ++j)
                acc[i + j] = acc[i + j] + a.c_[i] * b.c_[j];
        }
        if (ext->is_etale()) {
            const auto& f = ext->etale().min_poly;
            for (std::int32_t k = std::int32_t(2 * d - 2); k >= std::int32_t(d); --k) {
                R c = acc[size_t(k)];
                if (c.is_zero()) continue;
                acc[size_t(k)] = Traits::zero(ext->base());
                for (std::uint32_t i = 0; i < d; ++i)
                    acc[size_t(k) - d + i] = acc[size_t(k) - d + i] - c * f[i];
            }
        } else {
            R bval = Traits::basis_element(ext->base(), ext->radicial().basis_index);
            for (std::int32_t k = std::int32_t(2 * d - 2); k >= std::int32_t(d); --k) {
                R c = acc[size_t(k)];
                if (c.is_zero()) continue;
                acc[size_t(k)] = Traits::zero(ext->base());
                acc[size_t(k) - d] = acc[size_t(k) - d] + c * bval;
            }
        }
        acc.resize(d, Traits::zero(ext->base()));
        return ExtElemT(ext, std::move(acc));
    }

    ExtElemT inv() const;
    ExtElemT pow(std::uint64_t n) const;
    ExtElemT frobenius() const { return pow(ext_->p()); }
    /// Derivation along p-basis member i of k'.
    ExtElemT partial(std::uint32_t i) const;

    friend bool operator==(const ExtElemT& a, const ExtElemT& b) { return a.c_ == b.c_; }
    friend bool operator!=(const ExtElemT& a, const ExtElemT& b) { return !(a == b); }

    std::string to_string() const;

  private:
    void check(const ExtElemT& other) const {
        if (!ext_ || !other.ext_ || !ext_->same(*other.ext_))
            throw MismatchError("elements live in different extensions");
    }

    ExtPtrT<R> ext_;
    std::vector<R> c_;
};

template <class R>
struct ExtFormContext {
    ExtPtrT<R> ext;
    std::uint32_t rank() const { return ext->rank(); }
    ExtElemT<R> zero() const { return ext->zero(); }
    ExtElemT<R> basis_element(std::uint32_t i) const { return ext->basis_element(i); }
    const std::string& basis_name(std::uint32_t i) const { return ext->basis_name(i); }
    ExtElemT<R> partial(const ExtElemT<R>& x, std::uint32_t i) const { return x.partial(i); }
    ExtElemT<R> div(const ExtElemT<R>& a, const ExtElemT<R>& b) const { return a * b.inv(); }
    bool same(const ExtFormContext& o) const { return ext->same(*o.ext); }
};

using Extension = ExtensionT<FieldElement>;
using ExtensionPtr = ExtPtrT<FieldElement>;
using ExtElem = ExtElemT<FieldElement>;
using ExtensionForm = Form<ExtElem, ExtFormContext<FieldElement>>;

// Depth-two extensions, for explicit towers of descriptors.
using Extension2 = ExtensionT<ExtElem>;
using Extension2Ptr = ExtPtrT<ExtElem>;
using ExtElem2 = ExtElemT<ExtElem>;
using Extension2Form = Form<ExtElem2, ExtFormContext<ExtElem>>;

template <class R>
ExtElemT<R> lift_element(const ExtPtrT<R>& ext, const R& x);

/// Usual trace k' -> k at degree 0: power sums of the minimal polynomial in
/// the etale case, the zero map in the radicial case.
template <class R>
R trace_element(const ExtElemT<R>& x);

/// Contravariant functoriality on forms. In the radicial case dlog of the
/// replaced member maps to p dlog(g) = 0, so subsets containing it die.
template <class R>
Form<ExtElemT<R>, ExtFormContext<R>> lift_form(
    const Form<R, typename RingTraits<R>::FormCtx>& w, const ExtPtrT<R>& ext);

/// Trace on forms. Etale: coefficient-wise trace. Radicial: expand each
/// coefficient as sum c_j g^j; subsets containing g keep c_0 with dlog(g)
/// replaced by dlog(g^p), the rest vanish.
template <class R>
Form<R, typename RingTraits<R>::FormCtx> trace_form(
    const Form<ExtElemT<R>, ExtFormContext<R>>& w);

/// Induced trace on top-degree classes: trace_form then reduction.
QuotientFormTop trace_hp(const ExtensionForm& w);

// ---------------------------------------------------------------------------
// Implementation

namespace ext_detail {

// Dense univariate polynomials over R, for the minimal-polynomial algebra.
template <class R>
using KPoly = std::vector<R>;

template <class R>
void kp_trim(KPoly<R>& a) {
    while (!a.empty() && a.back().is_zero()) a.pop_back();
}

template <class R>
KPoly<R> kp_rem(KPoly<R> a, const KPoly<R>& b) {
    kp_trim(a);
    R lead_inv = b.back().inv();
    while (a.size() >= b.size()) {
        R f = a.back() * lead_inv;
        size_t shift = a.size() - b.size();
        for (size_t i = 0; i < b.size(); ++i) a[shift + i] = a[shift + i] - f * b[i];
        kp_trim(a);
        if (a.empty()) break;
    }
    return a;
}

}  // namespace ext_detail

template <class R>
ExtPtrT<R> ExtensionT<R>::make_etale(Handle base, std::vector<R> min_poly,
                                     std::string gen_name) {
    using ext_detail::kp_rem;
    using ext_detail::kp_trim;
    if (min_poly.size() < 2) throw DomainError("minimal polynomial must have degree >= 1");
    if (!min_poly.back().is_one()) throw DomainError("minimal polynomial must be monic");
    std::uint32_t n = std::uint32_t(min_poly.size()) - 1;
    // Separability: gcd(f, f') constant.
    ext_detail::KPoly<R> f = min_poly;
    ext_detail::KPoly<R> df;
    for (std::uint32_t j = 1; j <= n; ++j)
        df.push_back(Traits::from_int(base, j) * f[j]);
    kp_trim(df);
    if (df.empty()) throw DomainError("minimal polynomial is not separable");
    ext_detail::KPoly<R> a = f, b = df;
    while (!b.empty()) {
        auto r = kp_rem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (a.size() != 1) throw DomainError("minimal polynomial is not separable");
    if (!Traits::check_irreducible(base, /*poly=*/[&] {
            std::vector<FieldElement> out;
            if constexpr (std::is_same_v<R, FieldElement>) out = min_poly;
            return out;
        }()))
        throw DomainError("minimal polynomial is reducible");
    return ExtPtrT<R>(new ExtensionT(std::move(base),
                                     EtaleMonogenicT<R>{std::move(min_poly)},
                                     std::move(gen_name), n));
}

template <class R>
ExtPtrT<R> ExtensionT<R>::make_radicial(Handle base, std::uint32_t basis_index,
                                        std::string gen_name) {
    if (basis_index >= Traits::rank(base))
        throw DomainError("radicial generator must replace a p-basis member");
    std::uint32_t p = Traits::p(base);
    return ExtPtrT<R>(new ExtensionT(std::move(base), RadicialDescriptor{basis_index},
                                     std::move(gen_name), p));
}

template <class R>
const std::string& ExtensionT<R>::basis_name(std::uint32_t i) const {
    if (!is_etale() && i == radicial().basis_index) return gen_name_;
    return Traits::basis_name(base_, i);
}

template <class R>
ExtElemT<R> ExtensionT<R>::zero() const {
    std::vector<R> c(degree_, Traits::zero(base_));
    return ExtElemT<R>(this->shared_from_this(), std::move(c));
}

template <class R>
ExtElemT<R> ExtensionT<R>::one() const { return from_int(1); }

template <class R>
ExtElemT<R> ExtensionT<R>::from_int(std::int64_t n) const {
    std::vector<R> c(degree_, Traits::zero(base_));
    c[0] = Traits::from_int(base_, n);
    return ExtElemT<R>(this->shared_from_this(), std::move(c));
}

template <class R>
ExtElemT<R> ExtensionT<R>::generator() const {
    std::vector<R> c(degree_, Traits::zero(base_));
    c[1] = Traits::one(base_);
    return ExtElemT<R>(this->shared_from_this(), std::move(c));
}

template <class R>
ExtElemT<R> ExtensionT<R>::basis_element(std::uint32_t i) const {
    if (!is_etale() && i == radicial().basis_index) return generator();
    return lift_element(this->shared_from_this(), Traits::basis_element(base_, i));
}

template <class R>
bool ExtensionT<R>::same(const ExtensionT& other) const {
    if (this == &other) return true;
    if (!Traits::same(base_, other.base_) || degree_ != other.degree_) return false;
    if (is_etale() != other.is_etale()) return false;
    if (is_etale()) return etale().min_poly == other.etale().min_poly;
    return radicial().basis_index == other.radicial().basis_index;
}

template <class R>
ExtElemT<R>::ExtElemT(ExtPtrT<R> ext, std::vector<R> coords)
    : ext_(std::move(ext)), c_(std::move(coords)) {
    if (c_.size() != ext_->degree()) throw DomainError("wrong coordinate count");
}

template <class R>
bool ExtElemT<R>::is_zero() const {
    for (auto& x : c_)
        if (!x.is_zero()) return false;
    return true;
}

template <class R>
bool ExtElemT<R>::is_one() const {
    if (!c_[0].is_one()) return false;
    for (size_t i = 1; i < c_.size(); ++i)
        if (!c_[i].is_zero()) return false;
    return true;
}

template <class R>
ExtElemT<R> ExtElemT<R>::pow(std::uint64_t n) const {
    ExtElemT<R> r = ext_->one();
    ExtElemT<R> base = *this;
    while (n) {
        if (n & 1) r = r * base;
        base = base * base;
        n >>= 1;
    }
    return r;
}

template <class R>
ExtElemT<R> ExtElemT<R>::inv() const {
    using Traits = RingTraits<R>;
    using ext_detail::kp_trim;
    if (is_zero()) throw DomainError("division by zero in extension");
    const std::uint32_t d = ext_->degree();
    // Extended Euclid for u with a*u = 1 mod m.
    ext_detail::KPoly<R> m;
    if (ext_->is_etale()) {
        m = ext_->etale().min_poly;
    } else {
        m.assign(d + 1, Traits::zero(ext_->base()));
        m[0] = -Traits::basis_element(ext_->base(), ext_->radicial().basis_index);
        m[d] = Traits::one(ext_->base());
    }
    ext_detail::KPoly<R> r0 = m, r1 = c_;
    kp_trim(r1);
    ext_detail::KPoly<R> s0{Traits::zero(ext_->base())}, s1{Traits::one(ext_->base())};
    auto poly_sub_mul = [&](const ext_detail::KPoly<R>& a, const ext_detail::KPoly<R>& q,
                            const ext_detail::KPoly<R>& b) {
        // a - q*b
        ext_detail::KPoly<R> out = a;
        size_t need = q.empty() || b.empty() ? 0 : q.size() + b.size() - 1;
        if (out.size() < need) out.resize(need, Traits::zero(ext_->base()));
        for (size_t i = 0; i < q.size(); ++i) {
            if (q[i].is_zero()) continue;
            for (size_t j = 0; j < b.size(); ++j)
                out[i + j] = out[i + j] - q[i] * b[j];
        }
        kp_trim(out);
        return out;
    };
    while (!r1.empty() && r1.size() > 1) {
        // Divide r0 by r1.
        ext_detail::KPoly<R> q(r0.size() >= r1.size() ? r0.size() - r1.size() + 1 : 0,
                               Traits::zero(ext_->base()));
        ext_detail::KPoly<R> rem = r0;
        R li = r1.back().inv();
        while (rem.size() >= r1.size()) {
            R f = rem.back() * li;
            size_t shift = rem.size() - r1.size();
            q[shift] = q[shift] + f;
            for (size_t i = 0; i < r1.size(); ++i) rem[shift + i] = rem[shift + i] - f * r1[i];
            kp_trim(rem);
            if (rem.empty()) break;
        }
        ext_detail::KPoly<R> s2 = poly_sub_mul(s0, q, s1);
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    if (r1.empty()) throw DomainError("element is not invertible in the extension");
    // r1 is a nonzero constant: u = s1 / r1.
    R scale = r1[0].inv();
    std::vector<R> out(d, Traits::zero(ext_->base()));
    for (size_t i = 0; i < s1.size() && i < out.size(); ++i) out[i] = s1[i] * scale;
    return ExtElemT<R>(ext_, std::move(out));
}

template <class R>
ExtElemT<R> ExtElemT<R>::partial(std::uint32_t idx) const {
    using Traits = RingTraits<R>;
    const std::uint32_t d = ext_->degree();
    if (idx >= ext_->rank()) throw DomainError("derivation variable is not in the p-basis");
    if (!ext_->is_etale()) {
        if (idx == ext_->radicial().basis_index) {
            // d/dg kills k (g^p lies in k, as does the rest of the p-basis).
            std::vector<R> out(d, Traits::zero(ext_->base()));
            for (std::uint32_t j = 1; j < d; ++j)
                out[j - 1] = Traits::from_int(ext_->base(), j) * c_[j];
            return ExtElemT<R>(ext_, std::move(out));
        }
        std::vector<R> out;
        out.reserve(d);
        for (auto& c : c_) out.push_back(c.partial(idx));
        return ExtElemT<R>(ext_, std::move(out));
    }
    // Etale: the derivation extends uniquely; differentiate f(g) = 0.
    const auto& f = ext_->etale().min_poly;
    std::vector<R> dfc(d, Traits::zero(ext_->base()));  // (d_v f)(g), f monic so top term drops
    bool dv_zero = true;
    for (std::uint32_t j = 0; j < d; ++j) {
        dfc[j] = f[j].partial(idx);
        if (!dfc[j].is_zero()) dv_zero = false;
    }
    std::vector<R> fpc(d, Traits::zero(ext_->base()));  // f'(g)
    for (std::uint32_t j = 1; j <= d; ++j)
        fpc[j - 1] = Traits::from_int(ext_->base(), j) * f[j];
    ExtElemT<R> fprime(ext_, std::move(fpc));
    std::vector<R> out;
    out.reserve(d);
    for (auto& c : c_) out.push_back(c.partial(idx));
    ExtElemT<R> res(ext_, std::move(out));
    // Chain-rule term through the generator.
    std::vector<R> dc(d, Traits::zero(ext_->base()));
    bool any = false;
    for (std::uint32_t j = 1; j < d; ++j) {
        dc[j - 1] = Traits::from_int(ext_->base(), j) * c_[j];
        if (!dc[j - 1].is_zero()) any = true;
    }
    if (any && !dv_zero) {
        ExtElemT<R> dgen = -(ExtElemT<R>(ext_, std::move(dfc)) * fprime.inv());
        res = res + ExtElemT<R>(ext_, std::move(dc)) * dgen;
    }
    return res;
}

template <class R>
std::string ExtElemT<R>::to_string() const {
    std::string s;
    for (std::uint32_t j = 0; j < c_.size(); ++j) {
        if (c_[j].is_zero()) continue;
        if (!s.empty()) s += " + ";
        std::string cs = c_[j].to_string();
        bool wrap = cs.find(' ') != std::string::npos || cs.find('/') != std::string::npos;
        std::string power;
        if (j > 0) {
            power = ext_->gen_name();
            if (j > 1) power += "^" + std::to_string(j);
        }
        if (j == 0) {
            s += cs;
        } else if (c_[j].is_one()) {
            s += power;
        } else {
            s += (wrap ? "(" + cs + ")" : cs) + "*" + power;
        }
    }
    return s.empty() ? "0" : s;
}

template <class R>
ExtElemT<R> lift_element(const ExtPtrT<R>& ext, const R& x) {
    std::vector<R> c(ext->degree(), RingTraits<R>::zero(ext->base()));
    c[0] = x;
    return ExtElemT<R>(ext, std::move(c));
}

template <class R>
R trace_element(const ExtElemT<R>& x) {
    using Traits = RingTraits<R>;
    const auto& ext = x.ext();
    const auto& base = ext->base();
    if (!ext->is_etale()) return Traits::zero(base);
    const auto& f = ext->etale().min_poly;
    const std::uint32_t n = ext->degree();
    // Newton's identities: s_k = -k a_{n-k} - sum_{i<k} a_{n-i} s_{k-i}.
    std::vector<R> s(n, Traits::zero(base));
    s[0] = Traits::from_int(base, n);
    for (std::uint32_t k = 1; k < n; ++k) {
        R acc = -(Traits::from_int(base, k) * f[n - k]);
        for (std::uint32_t i = 1; i < k; ++i) acc = acc - f[n - i] * s[k - i];
        s[k] = acc;
    }
    R out = Traits::zero(base);
    for (std::uint32_t j = 0; j < n; ++j) out = out + x.coord(j) * s[j];
    return out;
}

template <class R>
Form<ExtElemT<R>, ExtFormContext<R>> lift_form(
    const Form<R, typename RingTraits<R>::FormCtx>& w, const ExtPtrT<R>& ext) {
    ExtFormContext<R> ctx{ext};
    Form<ExtElemT<R>, ExtFormContext<R>> out(ctx, w.degree());
    std::vector<std::pair<BasisSubset, ExtElemT<R>>> terms;
    for (auto& [s, c] : w.coeffs()) {
        if (!ext->is_etale()) {
            // dlog of the replaced member is dlog(g^p) = 0.
            bool dies = false;
            for (auto i : s)
                if (i == ext->radicial().basis_index) dies = true;
            if (dies) continue;
        }
        terms.push_back({s, lift_element(ext, c)});
    }
    return Form<ExtElemT<R>, ExtFormContext<R>>::from_terms(ctx, w.degree(), std::move(terms));
}

template <class R>
Form<R, typename RingTraits<R>::FormCtx> trace_form(
    const Form<ExtElemT<R>, ExtFormContext<R>>& w) {
    using Traits = RingTraits<R>;
    const auto& ext = w.ctx().ext;
    auto ctx = Traits::form_ctx(ext->base());
    std::vector<std::pair<BasisSubset, R>> terms;
    for (auto& [s, c] : w.coeffs()) {
        if (ext->is_etale()) {
            terms.push_back({s, trace_element(c)});
            continue;
        }
        bool has_gen = false;
        for (auto i : s)
            if (i == ext->radicial().basis_index) has_gen = true;
        if (!has_gen) continue;  // degree-0 trace of a radicial extension is zero
        terms.push_back({s, c.coord(0)});
    }
    return Form<R, typename RingTraits<R>::FormCtx>::from_terms(ctx, w.degree(),
                                                                std::move(terms));
}

template <>
struct RingTraits<ExtElem> {
    using Handle = ExtensionPtr;
    using FormCtx = ExtFormContext<FieldElement>;
    static std::uint32_t p(const Handle& h) { return h->p(); }
    static std::uint32_t rank(const Handle& h) { return h->rank(); }
    static ExtElem zero(const Handle& h) { return h->zero(); }
    static ExtElem one(const Handle& h) { return h->one(); }
    static ExtElem from_int(const Handle& h, std::int64_t n) { return h->from_int(n); }
    static ExtElem basis_element(const Handle& h, std::uint32_t i) { return h->basis_element(i); }
    static const std::string& basis_name(const Handle& h, std::uint32_t i) {
        return h->basis_name(i);
    }
    static bool same(const Handle& a, const Handle& b) { return a->same(*b); }
    static FormCtx form_ctx(const Handle& h) { return FormCtx{h}; }
    static bool check_irreducible(const Handle&, const std::vector<FieldElement>&) {
        return true;  // no factorization machinery above depth one
    }
};

}  // namespace charp

#endif
