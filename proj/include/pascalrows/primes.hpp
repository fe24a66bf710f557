#pragma once

#include <cstdint>
#include <string>

#include "errors.hpp"

namespace pascalrows {

/// Deterministic trial division; inputs here are small moduli.
constexpr bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d <= n / d; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

inline void require_prime(std::uint64_t p) {
  if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
}

}  // namespace pascalrows
