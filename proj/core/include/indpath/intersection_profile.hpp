#pragma once

#include <compare>
#include <cstdint>

namespace indpath {

// Shape of the overlap of two placed forest copies: s vertices and c
// components. The overlap of two forests is a forest, so it carries
// s - c edges.
struct IntersectionProfile {
  std::uint32_t s = 0;
  std::uint32_t c = 0;

  auto operator<=>(const IntersectionProfile&) const = default;
};

}  // namespace indpath
