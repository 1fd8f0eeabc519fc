#pragma once

#include <cstddef>
#include <cstdint>

namespace toroidal {

// Deterministic primality test by trial division (2, 3, then 6k+-1).
bool is_prime(std::uint64_t n);

/// 1-based prime enumeration: nth_prime(1) == 2, nth_prime(3) == 5.
/// Backed by a growing cached table; safe for concurrent use.
std::uint64_t nth_prime(std::size_t index);

}  // namespace toroidal
