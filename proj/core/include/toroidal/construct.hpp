#pragma once

#include <string>
#include <utility>
#include <vector>

#include "toroidal/set_classify.hpp"

namespace toroidal {

enum class RealizationMode { Unknotted, TrivialGenusOne };

/// A request to realize a prescribed (cohomology, self-index) pair.
/// Unknotted mode needs the index class nonzero and not ~1 plus the
/// 2-consistency between both classes; trivial mode needs a nonzero index
/// class divisible by 2 and forces the cohomology to 0.
struct RealizationRequest {
    SequenceSpec target_h = SequenceSpec::constant(FactoredNat::one());
    SequenceSpec target_n = SequenceSpec::constant(FactoredNat::from_value(2));
    RealizationMode mode = RealizationMode::Unknotted;
};

/// A verified basis together with the materialized opening stage recipes and
/// the rewrite steps the builder applied to reach them.
struct RealizationResult {
    ToroidalBasisSpec basis;
    std::vector<StagePattern> stage_recipes;
    std::vector<std::string> transcript;
};

/// Realizes (H, N) by nested unknotted stages: after canonicalization,
/// parity normalization and dominance grouping, stage j places w_j strands
/// and (n_j - w_j)/2 clasps. The output carries genus 0.
RealizationResult construct_unknotted(const RealizationRequest& req);

/// Realizes (0, N) with genus 1: every stage is a single clasp composed
/// with n_j/2 monotone turns, riding inside a nontrivially knotted first
/// torus. Requires 2 | N.
RealizationResult construct_trivial(const RealizationRequest& req);

/// Checks a realization against its request: the basis validates, is not
/// cellular, reproduces both target classes up to isomorphism, carries the
/// genus its mode guarantees, and every recipe reproduces its stage.
bool verify_roundtrip(const RealizationResult& result, const RealizationRequest& req);

/// Named reference specimens: n-adic solenoid towers, prime-indexed and
/// pairwise-coprime towers, the factorial-style tower, the clasp tower, and
/// two non-realizable families.
std::vector<std::pair<std::string, ToroidalBasisSpec>> fixture_families();

}  // namespace toroidal
