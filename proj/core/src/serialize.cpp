#include "toroidal/serialize.hpp"

#include "toroidal/error.hpp"

namespace toroidal::io {

namespace {

const json& field(const json& j, const char* key) {
    if (!j.is_object()) throw ParseError("expected an object with field '" + std::string(key) + "'");
    auto it = j.find(key);
    if (it == j.end()) throw ParseError("missing field '" + std::string(key) + "'");
    return *it;
}

std::string text_field(const json& j, const char* key) {
    const json& v = field(j, key);
    if (!v.is_string()) throw ParseError("field '" + std::string(key) + "' must be a string");
    return v.get<std::string>();
}

std::uint64_t count_field(const json& j, const char* key) {
    const json& v = field(j, key);
    if (!v.is_number_unsigned()) throw ParseError("field '" + std::string(key) + "' must be a nonnegative integer");
    return v.get<std::uint64_t>();
}

}  // namespace

json parse_document(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(e.what());
    }
}

json to_json(const FactoredNat& n) { return n.to_string(); }

json to_json(const PrimeSet& s) { return s.to_string(); }

json to_json(const SequenceSpec& s) {
    json out;
    switch (s.kind()) {
        case SequenceSpec::Kind::EventuallyPeriodic: {
            out["kind"] = "periodic";
            json pre = json::array(), cycle = json::array();
            for (const auto& t : s.preperiod()) pre.push_back(t.to_string());
            for (const auto& t : s.cycle()) cycle.push_back(t.to_string());
            out["pre"] = std::move(pre);
            out["cycle"] = std::move(cycle);
            return out;
        }
        case SequenceSpec::Kind::EnumeratedPrimes:
            out["kind"] = "primes";
            out["source"] = s.source().to_string();
            return out;
        case SequenceSpec::Kind::CumulativeProducts:
            out["kind"] = "cumulative";
            out["source"] = s.source().to_string();
            return out;
    }
    throw DomainError("unreachable sequence kind");
}

SequenceSpec sequence_from_json(const json& j) {
    const std::string kind = text_field(j, "kind");
    if (kind == "periodic") {
        const json& pre = field(j, "pre");
        const json& cycle = field(j, "cycle");
        if (!pre.is_array() || !cycle.is_array())
            throw ParseError("'pre' and 'cycle' must be arrays of integer texts");
        std::vector<FactoredNat> p, c;
        for (const auto& t : pre) p.push_back(factored_from_json(t));
        for (const auto& t : cycle) c.push_back(factored_from_json(t));
        return SequenceSpec::periodic(std::move(p), std::move(c));
    }
    if (kind == "primes")
        return SequenceSpec::enumerated_primes(PrimeSet::parse(text_field(j, "source")));
    if (kind == "cumulative")
        return SequenceSpec::cumulative_products(PrimeSet::parse(text_field(j, "source")));
    throw ParseError("unknown sequence kind '" + kind + "'");
}

json to_json(const Genus& g) {
    switch (g.kind) {
        case GenusKind::Unknown: return "unknown";
        case GenusKind::Infinite: return "infinite";
        case GenusKind::Known: return json{{"known", g.value}};
    }
    throw DomainError("unreachable genus kind");
}

Genus genus_from_json(const json& j) {
    if (j.is_string()) {
        const std::string s = j.get<std::string>();
        if (s == "unknown") return Genus::unknown();
        if (s == "infinite") return Genus::infinite();
        throw ParseError("unknown genus tag '" + s + "'");
    }
    if (j.is_object() && j.contains("known")) return Genus::known(count_field(j, "known"));
    throw ParseError("genus must be 'unknown', 'infinite' or {\"known\": g}");
}

json to_json(const StagePattern& p) {
    json out;
    out["strands"] = p.strands;
    out["clasps"] = p.clasps;
    if (p.factor) out["factor"] = *p.factor;
    return out;
}

StagePattern pattern_from_json(const json& j) {
    StagePattern p;
    p.strands = count_field(j, "strands");
    p.clasps = count_field(j, "clasps");
    if (j.contains("factor")) {
        p.factor = count_field(j, "factor");
        if (*p.factor == 0) throw ParseError("pattern factor must be >= 1");
    }
    return p;
}

json to_json(const PatternSeq& ps) {
    json out;
    switch (ps.kind) {
        case PatternSeq::Kind::Solved:
            out["kind"] = "solved";
            return out;
        case PatternSeq::Kind::Whitehead:
            out["kind"] = "whitehead";
            return out;
        case PatternSeq::Kind::Periodic: {
            out["kind"] = "periodic";
            json pre = json::array(), cycle = json::array();
            for (const auto& p : ps.pre) pre.push_back(to_json(p));
            for (const auto& p : ps.cycle) cycle.push_back(to_json(p));
            out["pre"] = std::move(pre);
            out["cycle"] = std::move(cycle);
            return out;
        }
    }
    throw DomainError("unreachable pattern kind");
}

PatternSeq patterns_from_json(const json& j) {
    const std::string kind = text_field(j, "kind");
    if (kind == "solved") return {PatternSeq::Kind::Solved, {}, {}};
    if (kind == "whitehead") return {PatternSeq::Kind::Whitehead, {}, {}};
    if (kind != "periodic") throw ParseError("unknown pattern kind '" + kind + "'");
    PatternSeq ps;
    ps.kind = PatternSeq::Kind::Periodic;
    for (const auto& p : field(j, "pre")) ps.pre.push_back(pattern_from_json(p));
    for (const auto& p : field(j, "cycle")) ps.cycle.push_back(pattern_from_json(p));
    if (ps.cycle.empty()) throw ParseError("periodic pattern list needs a nonempty cycle");
    return ps;
}

json to_json(const ToroidalBasisSpec& b) {
    json out;
    out["winding"] = to_json(b.winding);
    out["index"] = to_json(b.index);
    out["genus"] = to_json(b.genus);
    if (b.patterns) out["patterns"] = to_json(*b.patterns);
    if (!b.label.empty()) out["label"] = b.label;
    return out;
}

ToroidalBasisSpec basis_from_json(const json& j) {
    ToroidalBasisSpec b;
    b.winding = sequence_from_json(field(j, "winding"));
    b.index = sequence_from_json(field(j, "index"));
    b.genus = genus_from_json(field(j, "genus"));
    if (j.contains("patterns")) b.patterns = patterns_from_json(j.at("patterns"));
    if (j.contains("label")) b.label = text_field(j, "label");
    return b;
}

json to_json(const HeightProfile& p) {
    json out;
    out["infinite_support"] = p.infinite_support.to_string();
    out["unit_tail"] = p.unit_tail.to_string();
    json heights = json::object();
    for (const auto& [prime, e] : p.explicit_heights) heights[std::to_string(prime)] = e;
    out["explicit"] = std::move(heights);
    return out;
}

json to_json(const DirectLimitClass& cls) {
    json out;
    switch (cls.variant) {
        case LimitVariant::Zero: out["variant"] = "zero"; break;
        case LimitVariant::FreeCyclic: out["variant"] = "free-cyclic"; break;
        case LimitVariant::NonFinitelyGenerated: out["variant"] = "non-finitely-generated"; break;
    }
    out["display"] = cls.describe();
    out["number_like"] = cls.number_like;
    if (cls.radical) out["radical"] = cls.radical->to_string();
    out["prime_divisors"] = cls.prime_divisors.to_string();
    if (cls.profile) out["profile"] = to_json(*cls.profile);
    return out;
}

json to_json(const Violation& v) { return json{{"rule", v.rule}, {"detail", v.detail}}; }

json to_json(const TriVerdict& v) {
    const char* tag = v.state == TriState::Yes   ? "yes"
                      : v.state == TriState::No ? "no"
                                                : "undetermined";
    return json{{"verdict", tag}, {"reason", v.reason}};
}

json to_json(const NecessaryVerdict& v) {
    return json{{"verdict", v.passes ? "passes" : "obstructed"}, {"reason", v.reason}};
}

json to_json(const SolenoidVerdict& v) {
    json out;
    switch (v.kind) {
        case SolenoidVerdict::Kind::NotGeneralizedSolenoid:
            out["verdict"] = "not-generalized-solenoid";
            break;
        case SolenoidVerdict::Kind::NAdicEquivalent:
            out["verdict"] = "n-adic";
            out["base"] = v.base->to_string();
            break;
        case SolenoidVerdict::Kind::NotHomeoRealizable:
            out["verdict"] = "not-homeo-realizable";
            break;
    }
    return out;
}

json to_json(const SetClassification& c) {
    json out;
    out["cellular"] = c.cellular;
    if (c.cellular) {
        out["note"] = "cellular tower: not a toroidal set";
        return out;
    }
    out["h1"] = to_json(c.h1);
    out["trivial"] = c.trivial;
    out["self_index"] = to_json(c.self_index);
    out["weakly_tame"] = to_json(c.weakly_tame);
    out["flow_realizable"] = to_json(c.flow_realizable);
    out["homeo_necessary"] = to_json(c.homeo_necessary);
    out["local_homeo_necessary"] = to_json(c.local_homeo_necessary);
    out["solenoid"] = to_json(c.solenoid);
    return out;
}

json to_json(const RefineReport& r) {
    json out;
    out["original"] = to_json(r.original);
    out["interleaved"] = to_json(r.interleaved);
    out["offset"] = to_json(r.offset);
    out["interleaved_spec"] = to_json(r.interleaved_spec);
    out["offset_spec"] = to_json(r.offset_spec);
    out["pass"] = r.pass;
    return out;
}

json to_json(const RealizationResult& r) {
    json out;
    out["basis"] = to_json(r.basis);
    json recipes = json::array();
    for (const auto& p : r.stage_recipes) recipes.push_back(to_json(p));
    out["recipes"] = std::move(recipes);
    out["transcript"] = r.transcript;
    return out;
}

FactoredNat factored_from_json(const json& j) {
    if (!j.is_string()) throw ParseError("integer values are written as canonical text");
    return FactoredNat::parse(j.get<std::string>());
}

PrimeSet prime_set_from_json(const json& j) {
    if (!j.is_string()) throw ParseError("prime sets are written as text");
    return PrimeSet::parse(j.get<std::string>());
}

SplitRule split_from_json(const json& j) {
    auto pairs = [](const json& arr, const char* what) {
        if (!arr.is_array()) throw ParseError(std::string(what) + " must be an array of pairs");
        std::vector<std::pair<FactoredNat, FactoredNat>> out;
        for (const auto& e : arr) {
            if (!e.is_array() || e.size() != 2)
                throw ParseError(std::string(what) + " entries must be [M, M'] pairs");
            out.emplace_back(factored_from_json(e.at(0)), factored_from_json(e.at(1)));
        }
        return out;
    };
    SplitRule rule;
    rule.pre = pairs(field(j, "pre"), "split.pre");
    rule.cycle = pairs(field(j, "cycle"), "split.cycle");
    return rule;
}

}  // namespace toroidal::io
