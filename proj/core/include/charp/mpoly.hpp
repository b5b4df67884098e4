#ifndef CHARP_MPOLY_HPP
#define CHARP_MPOLY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "charp/errors.hpp"

namespace charp {

/// Exponent vector; one entry per variable of the ambient polynomial ring.
using Monomial = std::vector<std::uint32_t>;

/// Sparse multivariate polynomial over the prime field F_p.
/// Terms are kept sorted in graded-lex order, no zero coefficients.
class MPoly {
  public:
    struct Term {
        Monomial m;
        std::uint32_t c;
    };

    MPoly() : p_(2), nvars_(0) {}
    MPoly(std::uint32_t p, std::uint32_t nvars) : p_(p), nvars_(nvars) {}

    static MPoly constant(std::uint32_t p, std::uint32_t nvars, std::int64_t c);
    static MPoly variable(std::uint32_t p, std::uint32_t nvars, std::uint32_t index);
    static MPoly from_terms(std::uint32_t p, std::uint32_t nvars, std::vector<Term> terms);

    std::uint32_t p() const { return p_; }
    std::uint32_t nvars() const { return nvars_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    std::uint32_t constant_value() const;  // requires is_constant()
    std::uint32_t total_degree() const;    // 0 for the zero polynomial
    std::uint32_t degree_in(std::uint32_t var) const;
    bool depends_on(std::uint32_t var) const;

    const Term& leading_term() const;  // graded-lex largest

    friend MPoly operator+(const MPoly& a, const MPoly& b);
    friend MPoly operator-(const MPoly& a, const MPoly& b);
    friend MPoly operator*(const MPoly& a, const MPoly& b);
    MPoly operator-() const;
    MPoly scalar_mul(std::uint32_t c) const;
    MPoly mul_monomial(const Monomial& m, std::uint32_t c) const;
    MPoly pow(std::uint32_t n) const;

    friend bool operator==(const MPoly& a, const MPoly& b);
    friend bool operator!=(const MPoly& a, const MPoly& b) { return !(a == b); }

    /// Formal partial derivative.
    MPoly derivative(std::uint32_t var) const;

    /// p-th power: exponents scale by p, coefficients are fixed (F_p).
    MPoly frobenius() const;
    /// Inverse of frobenius when it exists (all exponents divisible by p).
    bool pth_root(MPoly& out) const;

    /// Exact division; throws DomainError if not divisible.
    MPoly div_exact(const MPoly& d) const;

    /// Monic gcd (recursive primitive PRS over the involved variables).
    static MPoly gcd(const MPoly& a, const MPoly& b);

    std::string to_string(const std::vector<std::string>& names) const;

  private:
    void normalize();

    std::uint32_t p_;
    std::uint32_t nvars_;
    std::vector<Term> terms_;
};

/// Fraction of MPoly in canonical form: gcd-reduced, monic denominator.
/// Equality is therefore structural.
class RatFunc {
  public:
    RatFunc() = default;
    RatFunc(MPoly num, MPoly den);  // normalizes

    static RatFunc constant(std::uint32_t p, std::uint32_t nvars, std::int64_t c);
    static RatFunc variable(std::uint32_t p, std::uint32_t nvars, std::uint32_t index);

    const MPoly& num() const { return num_; }
    const MPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    std::uint32_t p() const { return num_.p(); }

    friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
    RatFunc operator-() const;
    RatFunc inv() const;  // throws DomainError on zero
    RatFunc frobenius() const;
    bool pth_root(RatFunc& out) const;
    RatFunc derivative(std::uint32_t var) const;

    friend bool operator==(const RatFunc& a, const RatFunc& b);
    friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

    std::string to_string(const std::vector<std::string>& names) const;

  private:
    MPoly num_;
    MPoly den_;
};

}  // namespace charp

#endif
