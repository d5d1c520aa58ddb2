#pragma once

#include <cstdint>
#include <random>

#include "implab/errors.hpp"

namespace implab {

// std::uniform_int_distribution varies across standard libraries; plain
// modulo keeps seeded runs byte-identical everywhere.
inline std::uint64_t rand_below(std::mt19937_64& gen, std::uint64_t n) {
  if (n == 0) throw InternalInvariantBroken("rand_below(0)");
  return gen() % n;
}

}  // namespace implab
