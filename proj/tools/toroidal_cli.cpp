#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "toroidal/construct.hpp"
#include "toroidal/error.hpp"
#include "toroidal/serialize.hpp"

namespace {

using toroidal::io::json;

struct Options {
    std::string in_file;
    std::string inline_doc;
    std::string format = "table";
    std::uint64_t depth = 1000;
};

json load_document(const Options& opt) {
    if (!opt.inline_doc.empty()) return toroidal::io::parse_document(opt.inline_doc);
    if (opt.in_file.empty())
        throw toroidal::ParseError("no input document: pass --in FILE or --inline DOC");
    std::ifstream f(opt.in_file);
    if (!f) throw toroidal::ParseError("cannot open input file '" + opt.in_file + "'");
    std::string text((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
    return toroidal::io::parse_document(text);
}

void flatten(const json& j, const std::string& prefix,
             std::vector<std::pair<std::string, std::string>>& rows) {
    if (j.is_object()) {
        if (j.empty()) rows.emplace_back(prefix, "{}");
        for (const auto& [key, value] : j.items())
            flatten(value, prefix.empty() ? key : prefix + "." + key, rows);
        return;
    }
    if (j.is_array()) {
        if (j.empty()) rows.emplace_back(prefix, "[]");
        std::size_t i = 0;
        for (const auto& value : j) flatten(value, prefix + "[" + std::to_string(i++) + "]", rows);
        return;
    }
    rows.emplace_back(prefix, j.is_string() ? j.get<std::string>() : j.dump());
}

void emit_report(const json& report, const Options& opt) {
    if (opt.format == "structured") {
        std::cout << report.dump(2) << "\n";
        return;
    }
    std::vector<std::pair<std::string, std::string>> rows;
    flatten(report, "", rows);
    std::size_t width = 0;
    for (const auto& [key, value] : rows) width = std::max(width, key.size());
    for (const auto& [key, value] : rows)
        std::cout << key << std::string(width - key.size(), ' ') << "  " << value << "\n";
}

struct Outcome {
    json verdict;
    std::vector<std::string> warnings;
    int exit_code = 0;
};

using Handler = std::function<Outcome(const Options&)>;

int guarded(const std::string& verb, const Options& opt, const Handler& handler) {
    try {
        Outcome outcome = handler(opt);
        json report;
        report["schema"] = 1;
        report["verb"] = verb;
        report["verdict"] = std::move(outcome.verdict);
        report["warnings"] = outcome.warnings;
        report["exit_code"] = outcome.exit_code;
        emit_report(report, opt);
        return outcome.exit_code;
    } catch (const toroidal::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const toroidal::DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    }
}

Outcome classify_group(const Options& opt) {
    toroidal::SequenceSpec spec = toroidal::io::sequence_from_json(load_document(opt));
    return {toroidal::io::to_json(toroidal::classify(spec)), {}, 0};
}

Outcome iso(const Options& opt) {
    json doc = load_document(opt);
    if (!doc.is_object() || !doc.contains("a") || !doc.contains("b"))
        throw toroidal::ParseError("iso expects {\"a\": <sequence>, \"b\": <sequence>}");
    toroidal::SequenceSpec a = toroidal::io::sequence_from_json(doc.at("a"));
    toroidal::SequenceSpec b = toroidal::io::sequence_from_json(doc.at("b"));
    json verdict;
    verdict["isomorphic"] = toroidal::isomorphic(a, b);
    verdict["a"] = toroidal::io::to_json(toroidal::classify(a));
    verdict["b"] = toroidal::io::to_json(toroidal::classify(b));
    return {std::move(verdict), {}, 0};
}

Outcome classify_set(const Options& opt) {
    toroidal::ToroidalBasisSpec basis = toroidal::io::basis_from_json(load_document(opt));
    auto violations = toroidal::validate(basis);
    if (!violations.empty()) {
        json verdict;
        json list = json::array();
        for (const auto& v : violations) list.push_back(toroidal::io::to_json(v));
        verdict["violations"] = std::move(list);
        return {std::move(verdict), {}, 1};
    }
    toroidal::SetClassification cls = toroidal::classify_set(basis);
    std::vector<std::string> warnings;
    if (!cls.cellular && cls.weakly_tame.state == toroidal::TriState::Undetermined)
        warnings.push_back("weak tameness undetermined: " + cls.weakly_tame.reason);
    return {toroidal::io::to_json(cls), std::move(warnings), 0};
}

Outcome construct(const Options& opt, toroidal::RealizationMode mode) {
    json doc = load_document(opt);
    toroidal::RealizationRequest req;
    req.mode = mode;
    req.target_n = toroidal::io::sequence_from_json(
        doc.contains("n") ? doc.at("n") : throw toroidal::ParseError("missing field 'n'"));
    toroidal::RealizationResult result;
    if (mode == toroidal::RealizationMode::Unknotted) {
        if (!doc.contains("h")) throw toroidal::ParseError("missing field 'h'");
        req.target_h = toroidal::io::sequence_from_json(doc.at("h"));
        result = toroidal::construct_unknotted(req);
    } else {
        result = toroidal::construct_trivial(req);
    }
    json verdict = toroidal::io::to_json(result);
    verdict["roundtrip"] = toroidal::verify_roundtrip(result, req);
    return {std::move(verdict), {}, 0};
}

Outcome refine_check(const Options& opt) {
    json doc = load_document(opt);
    toroidal::SequenceSpec spec = toroidal::io::sequence_from_json(
        doc.contains("spec") ? doc.at("spec") : throw toroidal::ParseError("missing field 'spec'"));
    if (!doc.contains("split")) throw toroidal::ParseError("missing field 'split'");
    toroidal::SplitRule split = toroidal::io::split_from_json(doc.at("split"));
    return {toroidal::io::to_json(toroidal::refine_and_check(spec, split)), {}, 0};
}

Outcome materialize(const Options& opt) {
    json doc = load_document(opt);
    toroidal::SequenceSpec spec = toroidal::io::sequence_from_json(
        doc.contains("spec") ? doc.at("spec") : throw toroidal::ParseError("missing field 'spec'"));
    std::uint64_t count = 8;
    if (doc.contains("count")) {
        if (!doc.at("count").is_number_unsigned())
            throw toroidal::ParseError("'count' must be a nonnegative integer");
        count = doc.at("count").get<std::uint64_t>();
    }
    if (count > opt.depth)
        throw toroidal::DomainError("count exceeds the --depth bound of " +
                                    std::to_string(opt.depth));
    json terms = json::array();
    for (const auto& t : spec.materialize(count)) terms.push_back(t.to_string());
    return {json{{"terms", std::move(terms)}}, {}, 0};
}

Outcome fixtures(const Options&) {
    json list = json::array();
    for (const auto& [name, basis] : toroidal::fixture_families()) {
        json entry;
        entry["name"] = name;
        entry["spec"] = toroidal::io::to_json(basis);
        entry["classification"] = toroidal::io::to_json(toroidal::classify_set(basis));
        list.push_back(std::move(entry));
    }
    return {json{{"fixtures", std::move(list)}}, {}, 0};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact classification of nested-torus towers and their direct limits"};
    app.require_subcommand(1);

    Options opt;
    int rc = 0;

    auto add_verb = [&](const std::string& name, const std::string& help, Handler handler,
                        bool takes_input) {
        CLI::App* sub = app.add_subcommand(name, help);
        if (takes_input) {
            sub->add_option("--in", opt.in_file, "input document file");
            sub->add_option("--inline", opt.inline_doc, "inline input document");
        }
        sub->add_option("--format", opt.format, "output format: table|structured")
            ->check(CLI::IsMember({"table", "structured"}));
        sub->add_option("--depth", opt.depth, "bound for term materialization (default 1000)");
        sub->callback([&rc, &opt, name, handler]() { rc = guarded(name, opt, handler); });
        return sub;
    };

    add_verb("classify-group", "classify the direct limit of a multiplier sequence",
             classify_group, true);
    add_verb("iso", "decide isomorphism of two direct limits", iso, true);
    add_verb("classify-set", "validate and classify a nested-torus basis description",
             classify_set, true);
    add_verb("construct", "realize a prescribed (H, N) pair by an unknotted tower",
             [](const Options& o) { return construct(o, toroidal::RealizationMode::Unknotted); },
             true);
    add_verb("construct-trivial", "realize a prescribed N by a trivial genus-1 tower",
             [](const Options& o) {
                 return construct(o, toroidal::RealizationMode::TrivialGenusOne);
             },
             true);
    add_verb("refine-check", "interleave a term-splitting and compare the three limits",
             refine_check, true);
    add_verb("materialize", "print the opening terms of a sequence", materialize, true);
    add_verb("fixtures", "classify the built-in fixture catalog", fixtures, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }
    return rc;
}
