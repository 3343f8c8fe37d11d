#include "kraus_symm/limits.hpp"

#include <charconv>
#include <cstdlib>
#include <string>
#include <string_view>

#include "kraus_symm/errors.hpp"

namespace kraus_symm {

std::size_t max_enumeration_degree() {
  const char* raw = std::getenv("KRAUS_SYMM_MAX_DEGREE");
  if (raw == nullptr) return kDefaultMaxDegree;
  std::string_view text(raw);
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || value == 0) return kDefaultMaxDegree;
  return value;
}

void check_enumeration_degree(std::size_t n, std::size_t cap) {
  if (n > cap) {
    throw SizeLimitExceeded("degree " + std::to_string(n) + " exceeds the enumeration cap " +
                            std::to_string(cap) + " (set KRAUS_SYMM_MAX_DEGREE to raise it)");
  }
}

}  // namespace kraus_symm
