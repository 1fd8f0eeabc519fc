#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace toroidal {

/// Unsigned magnitude of unbounded size. Only the handful of operations the
/// exact sequence comparisons need: multiply, subtract, halve, compare.
class BigUint {
public:
    BigUint() = default;
    explicit BigUint(std::uint64_t v);

    bool is_zero() const { return limbs_.empty(); }
    bool is_even() const;

    BigUint& mul(std::uint64_t m);
    /// Exact subtraction; requires *this >= other.
    BigUint& sub(const BigUint& other);
    /// Exact halving; requires an even value.
    BigUint& half();

    std::strong_ordering compare(const BigUint& other) const;
    bool operator==(const BigUint& other) const { return limbs_ == other.limbs_; }

    /// Number of significant bits; 0 for the zero value.
    std::size_t bit_length() const;

    /// Decimal rendering (used in transcripts and error messages).
    std::string to_string() const;

private:
    // Little-endian base-2^32 limbs, no trailing zero limbs.
    std::vector<std::uint32_t> limbs_;
};

}  // namespace toroidal
