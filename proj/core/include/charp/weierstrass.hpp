#ifndef CHARP_WEIERSTRASS_HPP
#define CHARP_WEIERSTRASS_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "charp/fq.hpp"

namespace charp {

class SeriesRing;
using SeriesRingPtr = std::shared_ptr<const SeriesRing>;

/// A[[X_1..X_n, T]] truncated at total degree D, where A is a finite field
/// or a finite field with one formal variable u adjoined (A = F_q[[u]], so
/// the maximal ideal of A is (u)). Everything is graded by total degree
/// across all variables, u and T included.
class SeriesRing : public std::enable_shared_from_this<SeriesRing> {
  public:
    static constexpr std::uint32_t kMaxVars = 8;
    static constexpr std::uint32_t kMaxTruncation = 120;

    static SeriesRingPtr make(FqFieldPtr k, std::optional<std::string> u_name,
                              std::vector<std::string> x_names, std::string t_name,
                              std::uint32_t truncation);

    const FqFieldPtr& coeff_field() const { return k_; }
    bool has_u() const { return has_u_; }
    std::uint32_t x_count() const {
        return std::uint32_t(names_.size()) - (has_u_ ? 2u : 1u);
    }
    std::uint32_t nvars() const { return (has_u_ ? 1u : 0u) + x_count() + 1; }
    std::uint32_t u_index() const { return 0; }
    std::uint32_t x_index(std::uint32_t i) const { return (has_u_ ? 1u : 0u) + i; }
    std::uint32_t t_index() const { return nvars() - 1; }
    std::uint32_t truncation() const { return trunc_; }
    const std::string& var_name(std::uint32_t i) const { return names_[i]; }
    const std::vector<std::string>& var_names() const { return names_; }
    std::optional<std::uint32_t> find_var(const std::string& name) const;

    bool same(const SeriesRing& o) const;
    /// Same variables over the same field at a different truncation order.
    bool same_vars(const SeriesRing& o) const;

  private:
    SeriesRing(FqFieldPtr k, bool has_u, std::vector<std::string> names, std::uint32_t trunc)
        : k_(std::move(k)), has_u_(has_u), names_(std::move(names)), trunc_(trunc) {}

    FqFieldPtr k_;
    bool has_u_;
    std::vector<std::string> names_;  // [u,] X..., T
    std::uint32_t trunc_;
};

/// Element of the truncated ring: finite sum of monomials of total degree
/// < D with F_q coefficients, understood modulo degree D.
class TruncatedSeries {
  public:
    TruncatedSeries() = default;
    explicit TruncatedSeries(SeriesRingPtr ring) : ring_(std::move(ring)) {}

    static TruncatedSeries constant(SeriesRingPtr ring, fq_repr c);
    static TruncatedSeries from_int(SeriesRingPtr ring, std::int64_t n);
    static TruncatedSeries variable(SeriesRingPtr ring, std::uint32_t var);
    static TruncatedSeries monomial(SeriesRingPtr ring, std::vector<std::uint32_t> exps,
                                    fq_repr c);

    const SeriesRingPtr& ring() const { return ring_; }
    const std::map<std::uint64_t, fq_repr>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    fq_repr constant_term() const;
    /// Minimal total degree of a stored term; D for the zero element.
    std::uint32_t order() const;
    /// Minimal combined (u, X)-degree, i.e. the (m, X)-adic order; D if the
    /// element is zero.
    std::uint32_t m_order() const;
    std::uint32_t degree_in_t() const;

    friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
    friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b);
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
    TruncatedSeries operator-() const;
    TruncatedSeries scalar_mul(fq_repr c) const;
    TruncatedSeries pow(std::uint32_t n) const;
    /// Inverse of a unit (nonzero constant term).
    TruncatedSeries inverse() const;
    TruncatedSeries frobenius() const { return pow(ring_->coeff_field()->p()); }
    /// Term-by-term p-th root when every exponent is divisible by p.
    std::optional<TruncatedSeries> pth_root() const;

    /// X_i -> X_i + T^N (an A[[T]]-linear substitution).
    TruncatedSeries shift_x_by_t_power(std::uint32_t x_i, std::uint32_t n) const;
    /// Coefficients of T^0..T^(k-1) stay; the rest is divided by T^k.
    void split_t(std::uint32_t k, TruncatedSeries& low, TruncatedSeries& high) const;
    /// Same element in a ring with the same variables, other truncation.
    TruncatedSeries retruncate(const SeriesRingPtr& other) const;
    /// Drop all terms of total degree >= bound.
    TruncatedSeries truncate_at(std::uint32_t bound) const;

    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b);
    friend bool operator!=(const TruncatedSeries& a, const TruncatedSeries& b) {
        return !(a == b);
    }

    std::string to_string() const;

    std::vector<std::uint32_t> unpack(std::uint64_t key) const;
    void set_term(const std::vector<std::uint32_t>& exps, fq_repr c);

  private:
    SeriesRingPtr ring_;
    std::map<std::uint64_t, fq_repr> terms_;
};

/// f = unit * P with P = T^k + sum_{i<k} p_i T^i distinguished (every p_i
/// vanishes modulo the maximal ideal and the X's).
struct PreparedFactorization {
    TruncatedSeries unit;
    TruncatedSeries distinguished;
    std::uint32_t order = 0;
    std::uint32_t truncation = 0;
};

struct DivisionResult {
    TruncatedSeries quotient;
    TruncatedSeries remainder;
};

enum class DivisionSchedule { WholeResidual, GradedByOrder };

struct RegularizeResult {
    std::vector<std::uint32_t> shifts;  // exponent N_i per X variable (0 = untouched)
    std::uint32_t order = 0;
};

struct CongruenceReport {
    std::uint32_t total = 0;
    std::uint32_t successes = 0;
    std::vector<std::string> failures;
};

/// T-order of f modulo (m_A, X): nullopt when the reduction vanishes below
/// the truncation (order not determined).
std::optional<std::uint32_t> regularity_order(const TruncatedSeries& f);

/// Division with remainder by a k-regular series: g = q f + r with
/// deg_T r < k, everything modulo total degree D.
DivisionResult weierstrass_divide(const TruncatedSeries& g, const TruncatedSeries& f,
                                  std::uint32_t k,
                                  DivisionSchedule schedule = DivisionSchedule::WholeResidual);

PreparedFactorization weierstrass_prepare(const TruncatedSeries& f);

/// Find substitutions X_i -> X_i + T^(N_i) making f T-regular; deterministic
/// search over the power schedules N_i = B^(i-1+j).
RegularizeResult regularize(const TruncatedSeries& f);

/// b in the maximal ideal with b - b^p = a modulo total degree `order`
/// (a must have zero constant term); b is the unique such solution in m.
TruncatedSeries artin_schreier_solve(const TruncatedSeries& a, std::uint32_t order);

/// Newton lifting of a simple root: g(x) = 0 modulo total degree `order`,
/// x = x0 modulo the maximal ideal. Coefficients of g listed low to high.
TruncatedSeries hensel_lift(const std::vector<TruncatedSeries>& g, const TruncatedSeries& x0,
                            std::uint32_t order);

/// Evaluate a polynomial (coefficients low to high) at a series point.
TruncatedSeries poly_eval(const std::vector<TruncatedSeries>& g, const TruncatedSeries& x);

/// Solve v^p = u for a 1-unit u, when the term-by-term root exists.
std::optional<TruncatedSeries> unit_pth_root(const TruncatedSeries& u);

/// Sample `count` elements of (1 + m^ceil(N/p))^p  (a subset of 1 + m^N),
/// recover each p-th root independently and verify by multiplying back.
CongruenceReport unit_group_congruence_check(const SeriesRingPtr& ring, std::uint32_t n,
                                             std::uint32_t count, std::uint64_t seed);

}  // namespace charp

#endif
