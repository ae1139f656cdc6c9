#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

namespace rmm {

/// The first 100000 decimal digits of pi after the leading 3, as ASCII.
std::string_view pi_digit_table();

/// Signs derived from the decimal digits of pi: digit <= 4 maps to -1,
/// anything larger to +1. Throws std::out_of_range past the digit table.
std::vector<int> pi_signs(std::size_t count);

}  // namespace rmm
