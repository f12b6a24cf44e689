#pragma once

#include <cstddef>
#include <vector>

namespace catlim {

/// Advances a mixed-radix counter in place (last digit fastest).
/// Returns false once the counter wraps past the final assignment.
inline bool next_odometer(std::vector<std::size_t>& digits,
                          const std::vector<std::size_t>& radix) {
  std::size_t k = digits.size();
  while (k > 0) {
    --k;
    if (++digits[k] < radix[k]) return true;
    digits[k] = 0;
  }
  return false;
}

}  // namespace catlim
