#include "toroidal/set_classify.hpp"

#include <algorithm>

#include "toroidal/error.hpp"
#include "toroidal/seq_compare.hpp"

namespace toroidal {

namespace {

void require_toroidal(const ToroidalBasisSpec& b) {
    if (is_cellular(b)) throw DomainError("not a toroidal set: the tower is cellular");
}

SequenceSpec pattern_winding_seq(const PatternSeq& ps) {
    std::vector<FactoredNat> pre, cycle;
    for (const auto& p : ps.pre) pre.push_back(FactoredNat::from_value(p.winding()));
    for (const auto& p : ps.cycle) cycle.push_back(FactoredNat::from_value(p.winding()));
    return SequenceSpec::periodic(std::move(pre), std::move(cycle));
}

SequenceSpec pattern_index_seq(const PatternSeq& ps) {
    std::vector<FactoredNat> pre, cycle;
    for (const auto& p : ps.pre) pre.push_back(FactoredNat::from_value(p.index()));
    for (const auto& p : ps.cycle) cycle.push_back(FactoredNat::from_value(p.index()));
    return SequenceSpec::periodic(std::move(pre), std::move(cycle));
}

bool has_zero_term(const SequenceSpec& s) {
    if (s.kind() != SequenceSpec::Kind::EventuallyPeriodic) return false;
    auto zero = [](const FactoredNat& t) { return t.is_zero(); };
    return std::any_of(s.preperiod().begin(), s.preperiod().end(), zero) ||
           std::any_of(s.cycle().begin(), s.cycle().end(), zero);
}

void check_patterns(const ToroidalBasisSpec& b, std::vector<Violation>& out) {
    const PatternSeq& ps = *b.patterns;
    switch (ps.kind) {
        case PatternSeq::Kind::Periodic: {
            if (ps.cycle.empty()) {
                out.push_back({"pattern", "periodic pattern list needs a nonempty cycle"});
                return;
            }
            if (auto j = seqrel::first_term_difference(pattern_winding_seq(ps), b.winding))
                out.push_back({"pattern", "stage " + std::to_string(*j) +
                                              ": pattern winding differs from declared winding"});
            if (auto j = seqrel::first_term_difference(pattern_index_seq(ps), b.index))
                out.push_back({"pattern", "stage " + std::to_string(*j) +
                                              ": pattern index differs from declared index"});
            return;
        }
        case PatternSeq::Kind::Solved:
            // The solved rule reproduces (w_j, N_j) exactly when parity and
            // dominance hold at every stage; those are reported separately.
            return;
        case PatternSeq::Kind::Whitehead: {
            if (auto j = seqrel::first_term_difference(
                    b.winding, SequenceSpec::constant(FactoredNat::zero())))
                out.push_back({"pattern", "stage " + std::to_string(*j) +
                                              ": clasp patterns force winding 0"});
            if (has_zero_term(b.index)) {
                out.push_back({"pattern", "clasp patterns need a nonzero index at every stage"});
            } else if (auto j = seqrel::first_parity_mismatch(
                           b.index, SequenceSpec::constant(FactoredNat::from_value(2)))) {
                out.push_back({"pattern", "stage " + std::to_string(*j) +
                                              ": clasp patterns force an even index"});
            }
            return;
        }
    }
}

}  // namespace

std::vector<Violation> validate(const ToroidalBasisSpec& b) {
    std::vector<Violation> out;
    if (auto j = seqrel::first_parity_mismatch(b.winding, b.index))
        out.push_back({"parity", "stage " + std::to_string(*j) +
                                     ": winding and index have different parity"});
    if (auto j = seqrel::first_dominance_violation(b.winding, b.index))
        out.push_back({"dominance", "stage " + std::to_string(*j) +
                                        ": winding exceeds the geometric index"});
    if (b.patterns) check_patterns(b, out);

    // A declared finite positive genus together with nontrivial cohomology
    // and a self-index that is not ~1 makes the two weak-tameness
    // characterizations disagree; no set carries such data.
    if (!is_cellular(b) && b.genus.is_known_finite() && b.genus.value >= 1) {
        DirectLimitClass h1 = classify(b.winding);
        DirectLimitClass n = classify(b.index);
        if (h1.variant != LimitVariant::Zero && !n.is_unit_class())
            out.push_back({"tameness-contradiction",
                           "finite positive genus with nontrivial cohomology and self-index not"
                           " ~1: the weak-tameness characterizations disagree"});
    }
    return out;
}

bool is_cellular(const ToroidalBasisSpec& b) {
    return classify(b.index).variant == LimitVariant::Zero;
}

DirectLimitClass cech_h1(const ToroidalBasisSpec& b) {
    require_toroidal(b);
    return classify(b.winding);
}

bool is_trivial(const ToroidalBasisSpec& b) {
    return cech_h1(b).variant == LimitVariant::Zero;
}

DirectLimitClass self_index(const ToroidalBasisSpec& b) {
    require_toroidal(b);
    return classify(b.index);
}

bool two_divides_consistency(const ToroidalBasisSpec& b) {
    return classify(b.winding).divisible_by(2) == classify(b.index).divisible_by(2);
}

TriVerdict is_weakly_tame(const ToroidalBasisSpec& b) {
    require_toroidal(b);
    const bool unit = self_index(b).is_unit_class();
    const bool trivial = is_trivial(b);
    switch (b.genus.kind) {
        case GenusKind::Known:
            if (b.genus.value == 0) {
                return unit ? TriVerdict{TriState::Yes, "genus 0 and self-index ~1"}
                            : TriVerdict{TriState::No, "genus 0 and self-index not ~1"};
            }
            return trivial ? TriVerdict{TriState::No,
                                        "trivial cohomology with finite positive genus"}
                           : TriVerdict{TriState::Yes,
                                        "finite positive genus with nontrivial cohomology"};
        case GenusKind::Infinite:
            return {TriState::No, "infinite genus"};
        case GenusKind::Unknown:
            // Case analysis over every possible genus declaration; a definite
            // verdict needs all branches to agree, and the infinite branch is
            // always No.
            if (!unit && trivial)
                return {TriState::No,
                        "trivial with self-index not ~1: no genus admits weak tameness"};
            return {TriState::Undetermined, "genus not declared"};
    }
    throw DomainError("unreachable genus kind");
}

TriVerdict flow_realizable(const ToroidalBasisSpec& b) {
    // Attractors of flows are exactly the weakly tame toroidal sets.
    return is_weakly_tame(b);
}

NecessaryVerdict homeo_necessary(const ToroidalBasisSpec& b) {
    require_toroidal(b);
    if (b.genus.kind == GenusKind::Infinite)
        return {false, "infinite genus"};
    if (!self_index(b).number_like)
        return {false, "self-index not number-like"};
    return {true, "necessary conditions hold; not a sufficiency claim"};
}

NecessaryVerdict local_homeo_necessary(const ToroidalBasisSpec& b) {
    require_toroidal(b);
    if (!self_index(b).number_like)
        return {false, "self-index not number-like"};
    return {true, "necessary condition holds; not a sufficiency claim"};
}

SolenoidVerdict classify_solenoid(const ToroidalBasisSpec& b) {
    if (!(b.genus == Genus::known(0)))
        return {SolenoidVerdict::Kind::NotGeneralizedSolenoid, std::nullopt};
    if (seqrel::first_term_difference(b.winding, b.index))
        return {SolenoidVerdict::Kind::NotGeneralizedSolenoid, std::nullopt};
    if (b.index.kind() == SequenceSpec::Kind::EventuallyPeriodic) {
        auto small = [](const FactoredNat& t) { return t.is_zero() || t.is_one(); };
        if (std::any_of(b.index.preperiod().begin(), b.index.preperiod().end(), small) ||
            std::any_of(b.index.cycle().begin(), b.index.cycle().end(), small))
            return {SolenoidVerdict::Kind::NotGeneralizedSolenoid, std::nullopt};
    }
    // Monotone winding >= 2 at every stage: the self-index determines the
    // set. Number-like means the m0-adic solenoid for the radical m0.
    DirectLimitClass n = classify(b.index);
    if (n.number_like) return {SolenoidVerdict::Kind::NAdicEquivalent, n.radical};
    return {SolenoidVerdict::Kind::NotHomeoRealizable, std::nullopt};
}

SetClassification classify_set(const ToroidalBasisSpec& b) {
    SetClassification out;
    out.cellular = is_cellular(b);
    if (out.cellular) return out;
    out.h1 = cech_h1(b);
    out.trivial = out.h1.variant == LimitVariant::Zero;
    out.self_index = self_index(b);
    out.weakly_tame = is_weakly_tame(b);
    out.flow_realizable = flow_realizable(b);
    out.homeo_necessary = homeo_necessary(b);
    out.local_homeo_necessary = local_homeo_necessary(b);
    out.solenoid = classify_solenoid(b);
    return out;
}

}  // namespace toroidal
