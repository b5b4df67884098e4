#ifndef CHARP_DIFF_FORMS_HPP
#define CHARP_DIFF_FORMS_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "charp/field_tower.hpp"

namespace charp {

/// Strictly increasing indices into the ordered p-basis.
using BasisSubset = std::vector<std::uint32_t>;

/// Degree-i form in dlog coordinates: a finite map from i-subsets S of the
/// p-basis to coefficients, representing sum c_S dlog(b_S). Generic over the
/// coefficient ring so the same machinery serves towers and their finite
/// extensions; Ctx supplies the p-basis and the derivations.
template <class R, class Ctx>
class Form {
  public:
    Form(Ctx ctx, std::uint32_t degree) : ctx_(std::move(ctx)), degree_(degree) {
        if (degree_ > ctx_.rank()) throw DomainError("form degree exceeds the p-rank");
    }

    static Form from_terms(Ctx ctx, std::uint32_t degree,
                           std::vector<std::pair<BasisSubset, R>> terms) {
        Form f(std::move(ctx), degree);
        for (auto& [s, c] : terms) f.add_term(s, c);
        return f;
    }

    const Ctx& ctx() const { return ctx_; }
    std::uint32_t degree() const { return degree_; }
    const std::map<BasisSubset, R>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }

    R coeff(const BasisSubset& s) const {
        auto it = coeffs_.find(s);
        if (it == coeffs_.end()) return ctx_.zero();
        return it->second;
    }

    friend Form operator+(const Form& a, const Form& b) {
        a.check_compatible(b);
        if (a.degree_ != b.degree_) throw DomainError("cannot add forms of different degree");
        Form r = a;
        for (auto& [s, c] : b.coeffs_) r.add_term(s, c);
        return r;
    }

    friend Form operator-(const Form& a, const Form& b) { return a + (-b); }

    Form operator-() const {
        Form r(ctx_, degree_);
        for (auto& [s, c] : coeffs_) r.coeffs_.emplace(s, -c);
        return r;
    }

    /// Left multiplication by a ring element.
    Form scale(const R& x) const {
        Form r(ctx_, degree_);
        if (x.is_zero()) return r;
        for (auto& [s, c] : coeffs_) {
            R nc = x * c;
            if (!nc.is_zero()) r.coeffs_.emplace(s, std::move(nc));
        }
        return r;
    }

    friend bool operator==(const Form& a, const Form& b) {
        if (a.coeffs_.empty() && b.coeffs_.empty()) return true;  // zero in any degree
        if (a.degree_ != b.degree_ || a.coeffs_.size() != b.coeffs_.size()) return false;
        auto it = a.coeffs_.begin();
        auto jt = b.coeffs_.begin();
        for (; it != a.coeffs_.end(); ++it, ++jt)
            if (it->first != jt->first || !(it->second == jt->second)) return false;
        return true;
    }
    friend bool operator!=(const Form& a, const Form& b) { return !(a == b); }

    /// Exterior product; graded-anticommutative, basis wedges combine with
    /// the sign of the merge permutation.
    friend Form wedge(const Form& a, const Form& b) {
        a.check_compatible(b);
        std::uint32_t deg = a.degree_ + b.degree_;
        if (deg > a.ctx_.rank()) return Form(a.ctx_, a.ctx_.rank());  // zero of top degree
        Form r(a.ctx_, deg);
        for (auto& [sa, ca] : a.coeffs_)
            for (auto& [sb, cb] : b.coeffs_) {
                int sign;
                BasisSubset merged;
                if (!merge_subsets(sa, sb, merged, sign)) continue;
                R c = ca * cb;
                if (sign < 0) c = -c;
                r.add_term(merged, c);
            }
        return r;
    }

    /// Exterior derivative: d(c dlog b_S) = dc wedge dlog b_S, with
    /// dc expanded as sum_v (dc/dv) v dlog v.
    Form d() const {
        Form r(ctx_, std::min(degree_ + 1, ctx_.rank()));
        if (degree_ >= ctx_.rank()) return r;
        for (auto& [s, c] : coeffs_) {
            for (std::uint32_t v = 0; v < ctx_.rank(); ++v) {
                R dc = ctx_.partial(c, v);
                if (dc.is_zero()) continue;
                R coeff = dc * ctx_.basis_element(v);
                int sign;
                BasisSubset merged;
                if (!merge_subsets(BasisSubset{v}, s, merged, sign)) continue;
                if (sign < 0) coeff = -coeff;
                r.add_term(merged, coeff);
            }
        }
        return r;
    }

    /// dlog(x) = d(x)/x as a 1-form; additive on products.
    static Form dlog(Ctx ctx, const R& x) {
        if (x.is_zero()) throw DomainError("dlog of zero");
        Form r(ctx, 1);
        for (std::uint32_t v = 0; v < ctx.rank(); ++v) {
            R dx = ctx.partial(x, v);
            if (dx.is_zero()) continue;
            R c = ctx.div(dx * ctx.basis_element(v), x);
            if (!c.is_zero()) r.add_term(BasisSubset{v}, c);
        }
        return r;
    }

    /// sum_k x_k dlog(y_k1) ^ ... ^ dlog(y_ki) expanded in coordinates.
    static Form express(Ctx ctx, const std::vector<std::pair<R, std::vector<R>>>& terms,
                        std::uint32_t degree) {
        Form acc(ctx, degree);
        for (auto& [x, ys] : terms) {
            if (ys.size() != degree) throw DomainError("factor count differs from degree");
            Form t(ctx, 0);
            t.add_term(BasisSubset{}, x);
            for (auto& y : ys) t = wedge(t, dlog(ctx, y));
            acc = acc + t;
        }
        return acc;
    }

    std::string to_string() const {
        if (coeffs_.empty()) return "0";
        std::string s;
        for (auto& [sub, c] : coeffs_) {
            if (!s.empty()) s += " + ";
            std::string cs = c.to_string();
            bool wrap = cs.find(' ') != std::string::npos || cs.find('/') != std::string::npos;
            if (sub.empty()) {
                s += cs;
                continue;
            }
            std::string basis;
            for (auto i : sub) {
                if (!basis.empty()) basis += " ^ ";
                basis += "dlog(" + ctx_.basis_name(i) + ")";
            }
            if (c.is_one())
                s += basis;
            else
                s += (wrap ? "(" + cs + ")" : cs) + " * " + basis;
        }
        return s;
    }

  private:
    void check_compatible(const Form& other) const {
        if (!ctx_.same(other.ctx_)) throw MismatchError("forms live over different fields");
    }

    void add_term(const BasisSubset& s, const R& c) {
        if (s.size() != degree_) throw DomainError("subset size differs from form degree");
        if (c.is_zero()) return;
        auto it = coeffs_.find(s);
        if (it == coeffs_.end()) {
            coeffs_.emplace(s, c);
        } else {
            it->second = it->second + c;
            if (it->second.is_zero()) coeffs_.erase(it);
        }
    }

    /// Merge two disjoint increasing subsets, counting transpositions.
    /// Returns false when they intersect (the wedge vanishes).
    static bool merge_subsets(const BasisSubset& a, const BasisSubset& b, BasisSubset& out,
                              int& sign) {
        out.clear();
        out.reserve(a.size() + b.size());
        size_t i = 0, j = 0;
        std::uint32_t inversions = 0;
        while (i < a.size() && j < b.size()) {
            if (a[i] == b[j]) return false;
            if (a[i] < b[j]) {
                out.push_back(a[i++]);
            } else {
                // b[j] jumps over the remaining elements of a.
                inversions += std::uint32_t(a.size() - i);
                out.push_back(b[j++]);
            }
        }
        while (i < a.size()) out.push_back(a[i++]);
        while (j < b.size()) out.push_back(b[j++]);
        sign = (inversions % 2 == 0) ? 1 : -1;
        return true;
    }

    Ctx ctx_;
    std::uint32_t degree_;
    std::map<BasisSubset, R> coeffs_;
};

/// Form context over a tower: p-basis members and the tower derivations.
struct TowerFormContext {
    TowerPtr tower;

    std::uint32_t rank() const { return tower->p_rank(); }
    FieldElement zero() const { return tower->zero(); }
    FieldElement basis_element(std::uint32_t i) const { return tower->basis_element(i); }
    const std::string& basis_name(std::uint32_t i) const { return tower->basis_name(i); }
    FieldElement partial(const FieldElement& x, std::uint32_t i) const { return x.partial(i); }
    FieldElement div(const FieldElement& a, const FieldElement& b) const {
        return FieldElement::div(a, b);
    }
    bool same(const TowerFormContext& o) const { return tower->same_field(*o.tower); }
};

using DifferentialForm = Form<FieldElement, TowerFormContext>;

DifferentialForm zero_form(const TowerPtr& tower, std::uint32_t degree);
DifferentialForm dlog(const FieldElement& x);
/// The full-p-basis top form lambda * dlog(b_1) ^ ... ^ dlog(b_r).
DifferentialForm top_form(const FieldElement& lambda);
DifferentialForm express_in_basis(
    const TowerPtr& tower,
    const std::vector<std::pair<FieldElement, std::vector<FieldElement>>>& terms,
    std::uint32_t degree);

/// Class of lambda dlog(b) in Omega^r / d Omega^{r-1}, stored through its
/// reduced representative: the theta = 0 part of lambda. The components with
/// theta != 0 span the exact forms, so the representative determines the
/// class and reduction is idempotent.
class QuotientFormTop {
  public:
    QuotientFormTop(TowerPtr tower, FieldElement reduced_lambda)
        : tower_(std::move(tower)), lambda_(std::move(reduced_lambda)) {}

    const TowerPtr& tower() const { return tower_; }
    const FieldElement& lambda() const { return lambda_; }
    bool is_zero() const { return lambda_.is_zero(); }

    friend bool operator==(const QuotientFormTop& a, const QuotientFormTop& b) {
        return a.lambda_ == b.lambda_;
    }
    friend bool operator!=(const QuotientFormTop& a, const QuotientFormTop& b) {
        return !(a == b);
    }

    std::string to_string() const;

  private:
    TowerPtr tower_;
    FieldElement lambda_;
};

/// Reduce a top-degree form modulo the exact forms (degree must equal the
/// p-rank, which must be >= 1).
QuotientFormTop reduce_mod_exact(const DifferentialForm& w);

/// Inverse Cartier operator at top degree: lambda dlog(b) -> class of
/// lambda^p dlog(b), which is already reduced.
QuotientFormTop cartier_inverse_top(const DifferentialForm& w);

}  // namespace charp

#endif
