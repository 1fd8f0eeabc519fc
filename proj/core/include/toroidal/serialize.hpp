#pragma once

#include <string>

#include <json.hpp>

#include "toroidal/construct.hpp"
#include "toroidal/limit_group.hpp"
#include "toroidal/set_classify.hpp"

namespace toroidal::io {

using json = nlohmann::ordered_json;

/// Parses a JSON document, rewrapping syntax errors with their byte
/// position.
json parse_document(const std::string& text);

json to_json(const FactoredNat& n);
json to_json(const PrimeSet& s);
json to_json(const SequenceSpec& s);
json to_json(const Genus& g);
json to_json(const StagePattern& p);
json to_json(const PatternSeq& ps);
json to_json(const ToroidalBasisSpec& b);
json to_json(const HeightProfile& p);
json to_json(const DirectLimitClass& cls);
json to_json(const Violation& v);
json to_json(const TriVerdict& v);
json to_json(const NecessaryVerdict& v);
json to_json(const SolenoidVerdict& v);
json to_json(const SetClassification& c);
json to_json(const RefineReport& r);
json to_json(const RealizationResult& r);

FactoredNat factored_from_json(const json& j);
PrimeSet prime_set_from_json(const json& j);
SequenceSpec sequence_from_json(const json& j);
Genus genus_from_json(const json& j);
StagePattern pattern_from_json(const json& j);
PatternSeq patterns_from_json(const json& j);
ToroidalBasisSpec basis_from_json(const json& j);
SplitRule split_from_json(const json& j);

}  // namespace toroidal::io
