#ifndef CHARP_FIELD_TOWER_HPP
#define CHARP_FIELD_TOWER_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "charp/fq.hpp"
#include "charp/mpoly.hpp"

namespace charp {

class FieldTower;
using TowerPtr = std::shared_ptr<const FieldTower>;

struct FiniteFieldBase {
    FqFieldPtr field;
};

/// F_p(b_1, ..., b_s): rational functions over the prime field.
struct RationalFunctionBase {
    std::vector<std::string> vars;
};

using BaseDescriptor = std::variant<FiniteFieldBase, RationalFunctionBase>;

class FieldElement;
struct ElementPayload;
struct LaurentTerm;
struct LaurentPoly;

/// Exponent profile théta in [0, p-1]^{p-rank}, indexed by p-basis position.
using Theta = std::vector<std::uint8_t>;

/// A computable field of characteristic p with finite p-basis: a base layer
/// (finite field or rational functions over F_p) under a stack of Laurent
/// series layers. The p-basis is (b_1..b_s, t_1..t_m) in that order; the
/// p-rank is s + m.
class FieldTower : public std::enable_shared_from_this<FieldTower> {
  public:
    static TowerPtr make(std::uint32_t p, BaseDescriptor base,
                         std::vector<std::string> laurent_vars,
                         std::int64_t default_precision);

    std::uint32_t p() const { return p_; }
    const BaseDescriptor& base() const { return base_; }
    bool base_is_finite() const { return std::holds_alternative<FiniteFieldBase>(base_); }
    const FqFieldPtr& finite_base() const { return std::get<FiniteFieldBase>(base_).field; }
    std::uint32_t base_rank() const;
    std::uint32_t laurent_count() const { return std::uint32_t(laurent_vars_.size()); }
    std::uint32_t p_rank() const { return base_rank() + laurent_count(); }
    const std::vector<std::string>& laurent_vars() const { return laurent_vars_; }
    std::int64_t default_precision() const { return default_precision_; }

    /// Name of p-basis member i (base variables first, then Laurent ones).
    const std::string& basis_name(std::uint32_t i) const;
    /// p-basis member i as a field element.
    FieldElement basis_element(std::uint32_t i) const;
    std::optional<std::uint32_t> basis_index(const std::string& name) const;

    FieldElement zero() const;
    FieldElement one() const;
    FieldElement from_int(std::int64_t n) const;
    /// Multiplicative generator "w" of a non-prime finite base.
    FieldElement generator() const;
    /// Zero known modulo O(t^prec) at Laurent layer `level` (1-based).
    FieldElement big_o(std::uint32_t level, std::int64_t prec) const;

    /// Same underlying field (ignores default_precision).
    bool same_field(const FieldTower& other) const;

    /// Tower consisting of the base and the first `levels` Laurent layers.
    TowerPtr sub_tower(std::uint32_t levels) const;

  private:
    FieldTower(std::uint32_t p, BaseDescriptor base, std::vector<std::string> lv,
               std::int64_t prec)
        : p_(p), base_(std::move(base)), laurent_vars_(std::move(lv)),
          default_precision_(prec) {}

    std::uint32_t p_;
    BaseDescriptor base_;
    std::vector<std::string> laurent_vars_;
    std::int64_t default_precision_;
};

/// Exact element of a tower level. Base payloads are exact; Laurent layers
/// are finite Laurent polynomials with optional big-O tags. Values are
/// immutable; copies share payloads.
class FieldElement {
  public:
    FieldElement() = default;

    const TowerPtr& tower() const { return tower_; }
    std::uint32_t level() const { return level_; }

    bool is_zero() const;   // exactly zero (no stored part, no tag)
    bool is_exact() const;  // no precision tag at any layer
    bool is_one() const;

    /// Every precision tag at every layer is >= k (vacuously true if exact).
    bool known_to_layer_precision(std::int64_t k) const;

    friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
    FieldElement operator-() const;
    friend FieldElement operator/(const FieldElement& a, const FieldElement& b);

    /// Multiplicative inverse. Laurent layers: the result carries a tag N so
    /// that x*inv(x) = 1 + O(t^N); N from the argument or the tower default.
    FieldElement inv(std::optional<std::int64_t> precision = std::nullopt) const;
    /// x/y with the quotient reported modulo O(t^N) when it cannot be exact.
    static FieldElement div(const FieldElement& x, const FieldElement& y,
                            std::optional<std::int64_t> precision = std::nullopt);
    FieldElement pow(std::int64_t n) const;
    FieldElement frobenius() const;
    /// y with y^p = x, when x is a p-th power; nullopt otherwise.
    std::optional<FieldElement> pth_root() const;
    /// The unique derivation sending the p-basis member `basis_idx` to 1,
    /// the other members to 0, and killing p-th powers.
    FieldElement partial(std::uint32_t basis_idx) const;

    /// Payload access for Laurent levels (level() >= 1).
    const LaurentPoly& laurent() const;
    /// Fq payload (level 0 over a finite base).
    Fq base_fq() const;
    /// RatFunc payload (level 0 over a rational-function base).
    const RatFunc& base_rat() const;

    friend bool operator==(const FieldElement& a, const FieldElement& b);
    friend bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }

    std::string to_string() const;

    // Factories ------------------------------------------------------------
    static FieldElement from_fq(TowerPtr tower, fq_repr v);
    static FieldElement from_rat(TowerPtr tower, RatFunc v);
    /// Normalizing Laurent constructor: sorts, merges, prunes zeros,
    /// truncates above the tag and collapses trivial wrappers.
    static FieldElement make_laurent(TowerPtr tower, std::uint32_t level,
                                     std::vector<LaurentTerm> terms,
                                     std::optional<std::int64_t> precision);
    /// Same element over a compatible tower (same base/p, Laurent prefix).
    FieldElement retower(const TowerPtr& to) const;

  private:
    friend class FieldTower;
    TowerPtr tower_;
    std::uint32_t level_ = 0;
    std::shared_ptr<const ElementPayload> payload_;
};

struct LaurentTerm {
    std::int64_t exp;
    FieldElement coeff;
};

/// Finite Laurent polynomial in the layer variable, optionally known only
/// modulo O(t^precision). Terms sorted by strictly increasing exponent,
/// no exact-zero coefficients, all exponents < precision when tagged.
struct LaurentPoly {
    std::vector<LaurentTerm> terms;
    std::optional<std::int64_t> precision;
};

/// x = sum over theta of (component_theta)^p * b^theta: the p-th power
/// decomposition along the p-basis.
class PComponentDecomposition {
  public:
    PComponentDecomposition(TowerPtr tower, std::map<Theta, FieldElement> comps)
        : tower_(std::move(tower)), comps_(std::move(comps)) {}

    const std::map<Theta, FieldElement>& components() const { return comps_; }
    const TowerPtr& tower() const { return tower_; }

    FieldElement component(const Theta& t) const;
    FieldElement theta_zero() const;
    /// Whether any component with theta != 0 is nonzero.
    bool has_nonzero_positive_part() const;
    FieldElement reassemble() const;

  private:
    TowerPtr tower_;
    std::map<Theta, FieldElement> comps_;
};

/// Decompose x along the p-basis. Exact input, or precision >= 1 at every
/// Laurent layer (the stored finite part is decomposed and every component
/// inherits the input's tag).
PComponentDecomposition p_component_decompose(const FieldElement& x);

/// The theta = 0 part of x, i.e. (component_0)^p. This is the reduced
/// representative modulo the span of the b^theta with theta != 0.
FieldElement theta_zero_part(const FieldElement& x);

/// x - x^p.
FieldElement artin_schreier(const FieldElement& x);

/// Trace of an element of F_q down to the subfield F_{q'}.
Fq field_trace_finite(const Fq& x, const FqFieldPtr& down_to);

}  // namespace charp

#endif
