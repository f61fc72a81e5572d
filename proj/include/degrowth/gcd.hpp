#pragma once

#include "degrowth/poly.hpp"

#include <cstddef>
#include <span>
#include <utility>

namespace degrowth {

/// Greatest common divisor, normalized with normalize_unit. gcd(p, 0) is the
/// normalized p and gcd(0, 0) is 0.
///
/// Reduces recursively to univariate problems over the remaining variables:
/// monomial factors are split off first, a variable present in only one
/// argument is eliminated by taking that argument's content, and otherwise the
/// main variable is the common one of lowest maximal degree (lowest index on
/// ties) and the primitive parts go through a subresultant remainder sequence.
/// Trial division of one argument by the other is tried before any of that.
Poly gcd(const Poly& a, const Poly& b);

/// GCD of a list; zero entries are ignored. Stops early once the running GCD
/// is a unit.
Poly gcd_of(std::span<const Poly> polys);

/// p = content * primitive where content is the GCD of the coefficients of p
/// viewed as univariate in main_var (including the rational content) and the
/// primitive part has unit content. Throws DomainError on zero input.
std::pair<Poly, Poly> content_and_primitive(const Poly& p, std::size_t main_var);

}  // namespace degrowth
