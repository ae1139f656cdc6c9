#include <stdexcept>
#include <string>

#include "rmm/pi_digits.hpp"

namespace rmm {

std::vector<int> pi_signs(std::size_t count) {
  const auto table = pi_digit_table();
  if (count > table.size()) {
    throw std::out_of_range("pi_signs: requested " + std::to_string(count) +
                            " signs but only " + std::to_string(table.size()) +
                            " digits are available");
  }
  std::vector<int> signs(count);
  for (std::size_t i = 0; i < count; ++i) {
    signs[i] = (table[i] - '0') <= 4 ? -1 : +1;
  }
  return signs;
}

}  // namespace rmm
