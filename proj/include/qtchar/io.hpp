#pragma once

#include <string>
#include <string_view>

#include "qtchar/ymonomial.hpp"

namespace qtchar {

// Parse a monomial in the grammar used by the command line:
//   "1"                      the unit monomial
//   "Y[i,p]"                 a generator
//   "Y[i,p]^e"               a power (e may be negative)
//   concatenation            product, e.g. "Y[1,1]Y[1,3]^2"
// Whitespace and '*' between factors are permitted.
YMonomial parseMonomial(int rank, std::string_view text);

}  // namespace qtchar
