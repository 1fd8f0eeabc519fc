#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace toroidal {

/// A finite or cofinite set of primes. Both flavours keep a sorted,
/// duplicate-free list: the elements themselves (finite) or the excluded
/// primes (cofinite). Membership, equality and finite-symmetric-difference
/// are all decidable on this class, which is why it is closed here.
class PrimeSet {
public:
    static PrimeSet finite(std::vector<std::uint64_t> primes);
    /// All primes.
    static PrimeSet all();
    static PrimeSet cofinite(std::vector<std::uint64_t> excluded);

    bool is_finite() const { return finite_; }
    bool is_empty() const { return finite_ && listed_.empty(); }
    /// Element count; rejected on cofinite (infinite) sets.
    std::size_t size() const;
    bool contains(std::uint64_t p) const;

    /// The stored list: elements of a finite set, exclusions of a cofinite
    /// one. Sorted and duplicate-free either way.
    const std::vector<std::uint64_t>& listed() const { return listed_; }

    /// 1-based enumeration in increasing order. Finite sets reject indices
    /// beyond their size; cofinite sets enumerate forever.
    std::uint64_t nth_element(std::size_t index) const;

    /// True iff the symmetric difference is a finite set, i.e. both sets are
    /// finite or both are cofinite.
    static bool sym_diff_finite(const PrimeSet& a, const PrimeSet& b);

    bool operator==(const PrimeSet& other) const = default;

    /// Text form: "{2,3,5}", "{}", "all", or "all\{2,3}".
    std::string to_string() const;
    static PrimeSet parse(std::string_view text);

private:
    bool finite_ = true;
    std::vector<std::uint64_t> listed_;
};

}  // namespace toroidal
