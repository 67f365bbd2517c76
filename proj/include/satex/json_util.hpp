#pragma once

#include <cstdint>
#include <limits>

#include <json.hpp>

#include "satex/bigcount.hpp"

namespace satex {

/// JSON number when the count fits in 64 bits, decimal string otherwise.
inline nlohmann::ordered_json bigcount_to_json(const BigCount& x) {
  if (x >= 0 && x <= std::numeric_limits<std::uint64_t>::max()) return static_cast<std::uint64_t>(x);
  return to_string(x);
}

}  // namespace satex
