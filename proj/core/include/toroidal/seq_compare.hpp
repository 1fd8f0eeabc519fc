#pragma once

#include <cstddef>
#include <optional>

#include "toroidal/sequence_spec.hpp"

namespace toroidal::seqrel {

/// First 1-based stage where the two sequences disagree mod 2 (a zero term
/// counts as even). Exact over the whole infinite sequence: both mod-2
/// streams are eventually periodic, so a finite window decides.
std::optional<std::size_t> first_parity_mismatch(const SequenceSpec& a, const SequenceSpec& b);

/// First 1-based stage where the terms differ as integers, or nothing when
/// the sequences agree everywhere.
std::optional<std::size_t> first_term_difference(const SequenceSpec& a, const SequenceSpec& b);

/// First 1-based stage where lower_j > upper_j, or nothing when lower stays
/// pointwise below upper forever.
std::optional<std::size_t> first_dominance_violation(const SequenceSpec& lower,
                                                     const SequenceSpec& upper);

}  // namespace toroidal::seqrel
