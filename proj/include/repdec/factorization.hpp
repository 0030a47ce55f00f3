#pragma once

#include <vector>

#include "repdec/galois.hpp"
#include "repdec/polynomial.hpp"

namespace repdec {

/// Roots of a univariate polynomial by evaluation at every field element, ascending.
std::vector<Elem> univariate_roots(const Field& field, const UniPoly& p);

/// All h with deg h <= max_degree such that (y - h) divides q, sorted and
/// deduplicated. Digit-by-digit expansion in x: at depth t the roots of
/// q_t(0, y) give the candidate coefficient of x^t, and the search continues
/// on q_t(x, x*y + root) with its x-content removed. Every candidate is
/// confirmed with evaluate_y before it is returned.
/// Throws DomainError for q == 0.
std::vector<UniPoly> y_roots(const Field& field, const BiPoly& q, int max_degree);

}  // namespace repdec
