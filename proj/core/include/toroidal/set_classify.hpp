#pragma once

#include <optional>
#include <string>
#include <vector>

#include "toroidal/basis_spec.hpp"
#include "toroidal/limit_group.hpp"

namespace toroidal {

struct Violation {
    std::string rule;    // "parity" | "dominance" | "pattern" | "tameness-contradiction"
    std::string detail;

    bool operator==(const Violation&) const = default;
};

/// Structural checks on a basis description. An empty list means: winding
/// and index agree in parity and satisfy winding <= index at every stage,
/// declared patterns reproduce both sequences, and the declared genus does
/// not put the two weak-tameness characterizations in contradiction.
/// Violations are data, not errors.
std::vector<Violation> validate(const ToroidalBasisSpec& b);

/// The intersection is cellular exactly when the index tower collapses,
/// i.e. the index class is 0.
bool is_cellular(const ToroidalBasisSpec& b);

/// Degree-1 cohomology class of the set: the class of the winding sequence.
/// Rejected on cellular input.
DirectLimitClass cech_h1(const ToroidalBasisSpec& b);
bool is_trivial(const ToroidalBasisSpec& b);

/// Self-index class: the class of the index sequence. Never 0 on toroidal
/// input. Rejected on cellular input.
DirectLimitClass self_index(const ToroidalBasisSpec& b);

/// Whether 2 divides the cohomology class exactly when it divides the
/// self-index class. The per-stage parity invariant forces this to hold on
/// every valid spec.
bool two_divides_consistency(const ToroidalBasisSpec& b);

enum class TriState { Yes, No, Undetermined };

struct TriVerdict {
    TriState state = TriState::Undetermined;
    std::string reason;

    bool operator==(const TriVerdict&) const = default;
};

/// Weak tameness from the declared genus, the cohomology class and the
/// self-index. With an unknown genus the verdict is settled only when every
/// possible genus declaration agrees. Rejected on cellular input.
TriVerdict is_weakly_tame(const ToroidalBasisSpec& b);

/// Realizability as an attractor for a flow; coincides with weak tameness.
TriVerdict flow_realizable(const ToroidalBasisSpec& b);

struct NecessaryVerdict {
    bool passes = false;
    std::string reason;

    bool operator==(const NecessaryVerdict&) const = default;
};

/// Necessary conditions for realizability as an attractor of a
/// homeomorphism: finite genus and a number-like self-index. Passing is not
/// a realizability proof.
NecessaryVerdict homeo_necessary(const ToroidalBasisSpec& b);

/// Necessary condition for realizability as an attractor of a local
/// homeomorphism of a 3-manifold: a number-like self-index. The genus plays
/// no role here.
NecessaryVerdict local_homeo_necessary(const ToroidalBasisSpec& b);

struct SolenoidVerdict {
    enum class Kind { NotGeneralizedSolenoid, NAdicEquivalent, NotHomeoRealizable };
    Kind kind = Kind::NotGeneralizedSolenoid;
    std::optional<FactoredNat> base;  // NAdicEquivalent only

    bool operator==(const SolenoidVerdict&) const = default;
};

/// Generalized-solenoid recognition: winding equal to index and >= 2 at
/// every stage with declared genus 0. Such a set is determined by its
/// self-index; a number-like one is the m0-adic solenoid for the radical
/// m0, and otherwise no homeomorphism can realize it as an attractor.
SolenoidVerdict classify_solenoid(const ToroidalBasisSpec& b);

struct SetClassification {
    bool cellular = false;
    // The remaining fields are meaningful only when not cellular.
    DirectLimitClass h1;
    bool trivial = false;
    DirectLimitClass self_index;
    TriVerdict weakly_tame;
    TriVerdict flow_realizable;
    NecessaryVerdict homeo_necessary;
    NecessaryVerdict local_homeo_necessary;
    SolenoidVerdict solenoid;
};

SetClassification classify_set(const ToroidalBasisSpec& b);

}  // namespace toroidal
