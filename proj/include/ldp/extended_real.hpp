#pragma once

#include <limits>

namespace ldp {

// Rate functions and CGF limits take values in R ∪ {+inf}. IEEE doubles model
// that set directly: kInf compares greater than every finite value and
// propagates absorbingly through the arithmetic we use. Library functions
// guard their domains before evaluating logs/roots, so +inf is the only
// non-finite value they ever return — never NaN.
inline constexpr double kInf = std::numeric_limits<double>::infinity();

}  // namespace ldp
