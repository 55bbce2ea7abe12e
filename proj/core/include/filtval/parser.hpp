#pragma once

#include <string>

#include "filtval/ring.hpp"

namespace filtval {

/// Parses the element grammar shared by CLI flags and JSON configs:
/// integer literals, rational literals `p/q`, and polynomial expressions in
/// `x` built from `+ - * ^` and parentheses, e.g. `3*x^2 - x + 1/2`.
/// Whitespace-insensitive; `^` takes a nonnegative integer exponent only.
///
/// The variable is rejected with a syntax_error in the scalar carriers;
/// a literal whose reduced denominator is not invertible in the target
/// ring raises coefficient_not_in_ring.
Element parse_element(const RingDescriptor& ring, const std::string& text);

}  // namespace filtval
