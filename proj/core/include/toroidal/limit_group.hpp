#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "toroidal/sequence_spec.hpp"

namespace toroidal {

/// Total p-adic content accumulated along a multiplier sequence, i.e. the
/// height of the reference generator in the direct limit. Primes fall into
/// four disjoint buckets: infinite total exponent, exponent exactly 1
/// (possibly cofinitely many), an explicit finite map for the rest, and
/// exponent 0 everywhere else.
struct HeightProfile {
    PrimeSet infinite_support = PrimeSet::finite({});
    PrimeSet unit_tail = PrimeSet::finite({});
    std::map<std::uint64_t, std::uint32_t> explicit_heights;

    bool operator==(const HeightProfile&) const = default;
};

enum class LimitVariant { Zero, FreeCyclic, NonFinitelyGenerated };

/// Isomorphism-class data for the direct limit of Z --m1--> Z --m2--> ...
struct DirectLimitClass {
    LimitVariant variant = LimitVariant::Zero;
    std::optional<HeightProfile> profile;  // present iff NonFinitelyGenerated
    /// Whether the class admits an eventually constant multiplier
    /// description; such a class is Z[1/m0] for the radical m0 below.
    bool number_like = false;
    std::optional<FactoredNat> radical;  // present iff number_like
    PrimeSet prime_divisors = PrimeSet::finite({});

    /// Group divisibility: every element divisible by p. Zero is divisible
    /// by everything, Z by nothing.
    bool divisible_by(std::uint64_t p) const;
    bool isomorphic_to(const DirectLimitClass& other) const;
    /// True exactly for the class of Z (number-like with radical 1).
    bool is_unit_class() const;
    /// Short human form: "0", "Z", "Z[1/6]", or a divisor-set description.
    std::string describe() const;
};

DirectLimitClass classify(const SequenceSpec& s);

/// The primes dividing infinitely many terms; rejected when the class is 0.
PrimeSet prime_divisors(const SequenceSpec& s);

/// The radical m0 with class Z[1/m0], when the class is number-like.
std::optional<FactoredNat> number_like_radical(const SequenceSpec& s);

bool isomorphic(const SequenceSpec& a, const SequenceSpec& b);

/// Rewrites a periodic description into one of the three exclusive shapes:
/// cycle [0], cycle [1], or empty preperiod with every term >= 2. The other
/// kinds are already canonical and are returned unchanged. The class of the
/// result is isomorphic to the class of the input.
SequenceSpec canonical_form(const SequenceSpec& s);

/// Removes the first k terms. Periodic specs are closed under this; an
/// enumerated-primes spec absorbs the dropped primes into its exclusion
/// list (k small); cumulative products are not closed under shifts.
SequenceSpec drop_prefix(const SequenceSpec& s, std::size_t k);

/// Block plan for grouping consecutive arrows: explicit prefix block sizes
/// followed by a constant tail size, which must cover whole cycle passes.
struct BlockPlan {
    std::vector<std::size_t> prefix;
    std::size_t tail = 1;
};

SequenceSpec group_blocks(const SequenceSpec& s, const BlockPlan& plan);

struct ParityProfile {
    enum class Tail { AllOdd, AllEven, Mixed, ZeroTailed };
    Tail tail = Tail::Mixed;
    /// For AllOdd/AllEven: the first index from which the tail parity holds.
    std::size_t from_index = 0;

    bool operator==(const ParityProfile&) const = default;
};

ParityProfile eventual_parity(const SequenceSpec& s);

/// Per-term factorization rule, aligned with a periodic spec: pairs
/// (M_j, M'_j) with M_j * M'_j equal to term j, one pair per preperiod term
/// and per cycle term.
struct SplitRule {
    std::vector<std::pair<FactoredNat, FactoredNat>> pre;
    std::vector<std::pair<FactoredNat, FactoredNat>> cycle;
};

/// Interleaves a split into [M1, M'1, M2, M'2, ...] and checks that pairing
/// the interleave from the start recovers the original class while pairing
/// after dropping one term yields the offset sequence N'_j = M'_j * M_{j+1}
/// with the same class again.
struct RefineReport {
    DirectLimitClass original;
    DirectLimitClass interleaved;
    DirectLimitClass offset;
    SequenceSpec interleaved_spec = SequenceSpec::constant(FactoredNat::one());
    SequenceSpec offset_spec = SequenceSpec::constant(FactoredNat::one());
    bool pass = false;
};

RefineReport refine_and_check(const SequenceSpec& s, const SplitRule& split);

}  // namespace toroidal
