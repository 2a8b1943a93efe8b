#pragma once

#include <string>

namespace granulex {

// Locale-independent formatting of doubles at 12 significant digits, the
// precision used for all numeric program output.
std::string sig12_string(double value);

// The double nearest to the 12-significant-digit decimal form of value.
double round_sig12(double value);

}  // namespace granulex
