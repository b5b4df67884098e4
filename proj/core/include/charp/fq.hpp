#ifndef CHARP_FQ_HPP
#define CHARP_FQ_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "charp/errors.hpp"

namespace charp {

class FqField;
using FqFieldPtr = std::shared_ptr<const FqField>;

/// Packed element of F_{p^e}: coordinate i over F_p sits in byte i.
/// Requires p < 256 and e <= 8.
using fq_repr = std::uint64_t;

/// F_{p^e} presented as F_p[x]/(modulus), modulus monic and irreducible.
/// All element arithmetic goes through the field object; elements are plain
/// packed words so series and towers can store them densely.
class FqField : public std::enable_shared_from_this<FqField> {
  public:
    static constexpr std::uint32_t kMaxPrime = 251;
    static constexpr std::uint32_t kMaxDegree = 8;

    /// Field with an explicit monic modulus, coefficients low-to-high
    /// (size e+1, last entry 1). Validates primality and irreducibility.
    static FqFieldPtr make(std::uint32_t p, const std::vector<std::uint32_t>& modulus);

    /// Field of size p^e with the canonical modulus: the first monic
    /// irreducible of degree e in counting order of the coefficient word.
    static FqFieldPtr make(std::uint32_t p, std::uint32_t e);

    std::uint32_t p() const { return p_; }
    std::uint32_t degree() const { return e_; }
    std::uint64_t q() const { return q_; }
    const std::vector<std::uint32_t>& modulus() const { return modulus_; }

    bool same_field(const FqField& other) const;

    fq_repr zero() const { return 0; }
    fq_repr one() const { return 1; }
    fq_repr from_int(std::int64_t n) const;
    /// Class of x; only defined for e >= 2.
    fq_repr generator() const;
    /// Element whose coordinate word equals `index` written base p (for
    /// exhaustive enumeration; index < q).
    fq_repr element(std::uint64_t index) const;
    std::uint64_t index_of(fq_repr a) const;

    std::uint32_t coord(fq_repr a, std::uint32_t i) const { return (a >> (8 * i)) & 0xff; }

    fq_repr add(fq_repr a, fq_repr b) const;
    fq_repr sub(fq_repr a, fq_repr b) const;
    fq_repr neg(fq_repr a) const;
    fq_repr mul(fq_repr a, fq_repr b) const;
    fq_repr scalar_mul(std::uint32_t c, fq_repr a) const;
    fq_repr pow(fq_repr a, std::uint64_t n) const;
    fq_repr inv(fq_repr a) const;
    fq_repr frobenius(fq_repr a) const { return pow(a, p_); }
    /// Inverse of Frobenius; total because finite fields are perfect.
    fq_repr pth_root(fq_repr a) const;

    /// Trace to the prime field, as an integer in [0, p).
    std::uint32_t trace_to_prime(fq_repr a) const;
    /// Trace down to a subfield given by its own presentation. Requires
    /// sub->degree() | degree() (and equal characteristic); the result is
    /// expressed in `sub` coordinates via a deterministic embedding.
    fq_repr trace_to(fq_repr a, const FqFieldPtr& sub) const;

    std::string to_string(fq_repr a, const std::string& gen_name = "w") const;

  private:
    FqField(std::uint32_t p, std::uint32_t e, std::vector<std::uint32_t> modulus);

    std::uint32_t p_;
    std::uint32_t e_;
    std::uint64_t q_;
    std::vector<std::uint32_t> modulus_;  // monic, length e_+1
};

/// Self-describing element; convenience wrapper used by the tower layer.
class Fq {
  public:
    Fq() = default;
    Fq(FqFieldPtr field, fq_repr v) : field_(std::move(field)), v_(v) {}

    const FqFieldPtr& field() const { return field_; }
    fq_repr repr() const { return v_; }
    bool is_zero() const { return v_ == 0; }

    friend Fq operator+(const Fq& a, const Fq& b) { return Fq(a.field_, a.field_->add(a.v_, b.v_)); }
    friend Fq operator-(const Fq& a, const Fq& b) { return Fq(a.field_, a.field_->sub(a.v_, b.v_)); }
    friend Fq operator*(const Fq& a, const Fq& b) { return Fq(a.field_, a.field_->mul(a.v_, b.v_)); }
    Fq operator-() const { return Fq(field_, field_->neg(v_)); }
    Fq inv() const { return Fq(field_, field_->inv(v_)); }
    Fq frobenius() const { return Fq(field_, field_->frobenius(v_)); }
    Fq pth_root() const { return Fq(field_, field_->pth_root(v_)); }

    friend bool operator==(const Fq& a, const Fq& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Fq& a, const Fq& b) { return a.v_ != b.v_; }

  private:
    FqFieldPtr field_;
    fq_repr v_ = 0;
};

bool is_prime(std::uint64_t n);

}  // namespace charp

#endif
