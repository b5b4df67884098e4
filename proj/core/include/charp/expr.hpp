#ifndef CHARP_EXPR_HPP
#define CHARP_EXPR_HPP

#include <string>
#include <vector>

#include "charp/diff_forms.hpp"
#include "charp/trace.hpp"
#include "charp/weierstrass.hpp"

namespace charp {

// Expression language shared by the CLI and the printers. Literals: p-basis
// members by name, `w` for the generator of a non-prime finite base,
// integers as prime-field constants, O(t^N) precision tags, dlog(expr),
// `^` as wedge on forms and as integer power on elements, `* / + -`,
// parentheses.

/// `GF(q)` or `Frac GF(p)[b1,...,bs]`, then zero or more `((name))` Laurent
/// layers, optionally `P=N` for the default precision.
TowerPtr parse_tower(const std::string& text);

/// `GF(q)` followed by `[[...]]` variable groups and `D=N`. With one group
/// the coefficient ring is the field and the last variable is the
/// distinguished one; with several, the first group is the single formal
/// variable of the coefficient ring.
SeriesRingPtr parse_series_ring(const std::string& text);

/// `radicial(a, b)` (a^p = b, b a p-basis member) or `etale(y, f(y))` with
/// f monic separable over the tower.
ExtensionPtr parse_extension(const std::string& text, const TowerPtr& tower);

FieldElement parse_element(const std::string& text, const TowerPtr& tower);
DifferentialForm parse_form(const std::string& text, const TowerPtr& tower);
ExtElem parse_ext_element(const std::string& text, const ExtensionPtr& ext);
ExtensionForm parse_ext_form(const std::string& text, const ExtensionPtr& ext);
TruncatedSeries parse_series(const std::string& text, const SeriesRingPtr& ring);
/// Polynomial in `var` with series coefficients, low to high degree.
std::vector<TruncatedSeries> parse_series_poly(const std::string& text,
                                               const SeriesRingPtr& ring,
                                               const std::string& var);
/// Polynomial in `var` with tower coefficients, low to high degree.
std::vector<FieldElement> parse_element_poly(const std::string& text, const TowerPtr& tower,
                                             const std::string& var);

/// Render a tower as a descriptor string that parses back to an equal tower.
std::string tower_to_string(const FieldTower& tower);
std::string series_ring_to_string(const SeriesRing& ring);

}  // namespace charp

#endif
