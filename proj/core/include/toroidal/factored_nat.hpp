#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "toroidal/big_uint.hpp"

namespace toroidal {

enum class Parity { Even, Odd, Zero };

/// A nonnegative integer stored by its prime factorization. The factor list
/// is sorted by prime and never carries zero exponents; the empty list with
/// the zero flag clear encodes 1. Values are immutable after construction,
/// and products are formed on the factor maps so they never overflow.
class FactoredNat {
public:
    using Factor = std::pair<std::uint64_t, std::uint32_t>;  // prime, exponent

    FactoredNat() = default;  // 1

    static FactoredNat zero();
    static FactoredNat one();
    /// Deterministic trial-division factorization of a machine word.
    static FactoredNat from_value(std::uint64_t n);
    /// Validated assembly from an explicit factor list (strictly increasing
    /// primes, exponents >= 1). Accepts values far beyond the word range.
    static FactoredNat from_factors(std::vector<Factor> factors);
    static FactoredNat prime(std::uint64_t p);

    bool is_zero() const { return zero_; }
    bool is_one() const { return !zero_ && factors_.empty(); }
    const std::vector<Factor>& factors() const { return factors_; }

    /// Exponent of p; zero input is rejected.
    std::uint32_t valuation(std::uint64_t p) const;
    /// Same prime support with all exponents 1; zero input is rejected.
    FactoredNat radical() const;
    Parity parity() const;
    bool divisible_by(std::uint64_t p) const;

    FactoredNat times(const FactoredNat& other) const;
    FactoredNat pow(std::uint32_t e) const;
    /// Exact quotient; throws unless other divides *this (both nonzero).
    FactoredNat divide_exact(const FactoredNat& other) const;

    /// The plain value when it fits in 64 bits.
    std::optional<std::uint64_t> value_u64() const;
    BigUint value_big() const;
    std::strong_ordering compare_value(const FactoredNat& other) const;

    /// Canonical text: "0", "1", or "p1^e1*p2^e2*..." with e == 1 omitted.
    std::string to_string() const;
    /// Accepts canonical text or a plain decimal literal (factored on entry).
    static FactoredNat parse(std::string_view text);

    bool operator==(const FactoredNat& other) const = default;

private:
    bool zero_ = false;
    std::vector<Factor> factors_;
};

}  // namespace toroidal
