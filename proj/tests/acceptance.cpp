// Acceptance suite: runs every stated criterion at its stated strength and
// prints one PASS/FAIL line per criterion. Exits nonzero when any fails.
//
// usage: acceptance <path-to-cli> <golden-dir>

#include <sys/wait.h>

#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "test_support.hpp"
#include "toroidal/big_uint.hpp"
#include "toroidal/error.hpp"
#include "toroidal/primes.hpp"
#include "toroidal/seq_compare.hpp"
#include "toroidal/serialize.hpp"

using namespace toroidal;

namespace {

int g_failures = 0;

void criterion(const std::string& name, const std::function<bool(std::string&)>& body) {
    std::string detail;
    bool ok = false;
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    if (ok) {
        std::cout << "PASS " << name << "\n";
    } else {
        std::cout << "FAIL " << name << (detail.empty() ? "" : "  [" + detail + "]") << "\n";
        ++g_failures;
    }
}

SequenceSpec constant(std::uint64_t v) { return SequenceSpec::constant(FactoredNat::from_value(v)); }

SequenceSpec ep(std::vector<std::uint64_t> pre, std::vector<std::uint64_t> cycle) {
    std::vector<FactoredNat> p, c;
    for (auto v : pre) p.push_back(FactoredNat::from_value(v));
    for (auto v : cycle) c.push_back(FactoredNat::from_value(v));
    return SequenceSpec::periodic(std::move(p), std::move(c));
}

const ToroidalBasisSpec& fixture(const std::string& name) {
    static auto catalog = fixture_families();
    for (const auto& [n, b] : catalog)
        if (n == name) return b;
    throw DomainError("missing fixture " + name);
}

struct CliRun {
    std::string out;
    int exit_code = -1;
};

CliRun run_cli(const std::string& cli, const std::string& args) {
    CliRun result;
    std::string cmd = cli + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) throw DomainError("cannot launch " + cmd);
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) result.out.append(buf, got);
    int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

std::string read_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw DomainError("cannot read " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

// ---- criteria ---------------------------------------------------------------

bool dyadic_solenoid(std::string& detail) {
    SetClassification c = classify_set(fixture("solenoid-2"));
    bool ok = !c.cellular && c.h1.describe() == "Z[1/2]" && c.self_index.describe() == "Z[1/2]" &&
              c.self_index.number_like && *c.self_index.radical == FactoredNat::from_value(2) &&
              c.self_index.prime_divisors == PrimeSet::finite({2}) &&
              c.flow_realizable.state == TriState::No && c.homeo_necessary.passes &&
              c.weakly_tame.state == TriState::No &&
              c.solenoid.kind == SolenoidVerdict::Kind::NAdicEquivalent &&
              *c.solenoid.base == FactoredNat::from_value(2);
    if (!ok) detail = "dyadic solenoid classification mismatch";
    return ok;
}

bool whitehead_continuum(std::string& detail) {
    SetClassification c = classify_set(fixture("whitehead"));
    bool ok = !c.cellular && c.trivial && c.h1.variant == LimitVariant::Zero &&
              c.self_index.describe() == "Z[1/2]" &&
              c.flow_realizable.state == TriState::No && c.homeo_necessary.passes;
    if (!ok) detail = "whitehead classification mismatch";
    return ok;
}

bool jth_prime_solenoid(std::string& detail) {
    SetClassification c = classify_set(fixture("solenoid-jth-prime"));
    bool ok = !c.cellular && c.self_index.prime_divisors == PrimeSet::finite({}) &&
              !c.self_index.number_like && !c.homeo_necessary.passes &&
              !c.local_homeo_necessary.passes &&
              c.solenoid.kind == SolenoidVerdict::Kind::NotHomeoRealizable;
    if (!ok) detail = "j-th-prime solenoid classification mismatch";
    return ok;
}

bool divisor_oracle(std::string& detail) {
    std::mt19937_64 rng(9104);
    for (int i = 0; i < 1000; ++i) {
        SequenceSpec s = testgen::random_periodic(rng, {.zero_in_cycle = false});
        PrimeSet divisors = prime_divisors(s);
        auto terms = s.materialize(s.preperiod().size() + s.cycle().size());
        for (std::size_t k = 1; nth_prime(k) <= 97; ++k) {
            std::uint64_t p = nth_prime(k);
            bool scan = false;
            for (std::size_t j = s.preperiod().size(); j < terms.size(); ++j)
                scan = scan || terms[j].divisible_by(p);
            if (divisors.contains(p) != scan) {
                detail = "mismatch at p=" + std::to_string(p) + " case " + std::to_string(i);
                return false;
            }
        }
    }
    return true;
}

bool refine_and_block_invariance(std::string& detail) {
    std::mt19937_64 rng(9105);
    for (int i = 0; i < 1000; ++i) {
        SequenceSpec s = testgen::random_periodic(
            rng, {.zero_in_pre = false, .zero_in_cycle = false});
        if (!refine_and_check(s, testgen::random_split(rng, s)).pass) {
            detail = "refine failure at case " + std::to_string(i);
            return false;
        }
    }
    int done = 0;
    for (int i = 0; done < 1000 && i < 20000; ++i) {
        ToroidalBasisSpec b = testgen::random_valid_basis(rng);
        if (b.winding.kind() != SequenceSpec::Kind::EventuallyPeriodic ||
            b.index.kind() != SequenceSpec::Kind::EventuallyPeriodic)
            continue;
        ++done;
        BlockPlan plan = testgen::random_pair_plan(rng, b.winding, b.index);
        ToroidalBasisSpec blocked;
        blocked.winding = group_blocks(b.winding, plan);
        blocked.index = group_blocks(b.index, plan);
        blocked.genus = b.genus;
        if (!validate(blocked).empty() ||
            !testgen::equivalent(classify_set(b), classify_set(blocked))) {
            detail = "block-plan variance at case " + std::to_string(done);
            return false;
        }
    }
    if (done < 1000) {
        detail = "generator yielded too few periodic bases";
        return false;
    }
    return true;
}

bool number_like_normal_form(std::string& detail) {
    for (std::uint64_t m = 2; m <= 500; ++m) {
        FactoredNat fm = FactoredNat::from_value(m);
        if (!isomorphic(SequenceSpec::constant(fm), SequenceSpec::constant(fm.radical()))) {
            detail = "radical iso failed at m=" + std::to_string(m);
            return false;
        }
        auto r = number_like_radical(SequenceSpec::constant(fm));
        if (!r || !(*r == fm.radical())) {
            detail = "radical extraction failed at m=" + std::to_string(m);
            return false;
        }
    }
    return true;
}

bool construct_grid(std::string& detail) {
    std::vector<SequenceSpec> hs = {
        constant(0), constant(1), constant(2), constant(3), constant(4),
        ep({}, {2, 3}), ep({}, {3, 5}),
    };
    std::vector<SequenceSpec> ns = {
        constant(2),  constant(3), constant(6), constant(9),
        ep({}, {2, 4}), ep({}, {3, 5}),
        SequenceSpec::enumerated_primes(PrimeSet::all()),
        SequenceSpec::enumerated_primes(PrimeSet::cofinite({2})),
        SequenceSpec::enumerated_primes(PrimeSet::cofinite({2, 3})),
        SequenceSpec::cumulative_products(PrimeSet::all()),
        SequenceSpec::cumulative_products(PrimeSet::cofinite({2})),
    };
    int built = 0;
    bool used_kind[3] = {false, false, false};
    for (const auto& h : hs) {
        for (const auto& n : ns) {
            DirectLimitClass ch = classify(h), cn = classify(n);
            if (cn.variant == LimitVariant::Zero || cn.is_unit_class()) continue;
            if (ch.divisible_by(2) != cn.divisible_by(2)) continue;
            RealizationRequest req;
            req.target_h = h;
            req.target_n = n;
            req.mode = RealizationMode::Unknotted;
            RealizationResult r = construct_unknotted(req);
            if (!verify_roundtrip(r, req)) {
                detail = "roundtrip failed for pair " + std::to_string(built);
                return false;
            }
            for (std::size_t j = 1; j <= 40; ++j) {
                FactoredNat w = r.basis.winding.term(j), nn = r.basis.index.term(j);
                bool parity_ok = (w.parity() == Parity::Odd) == (nn.parity() == Parity::Odd);
                bool dom_ok = w.compare_value(nn) != std::strong_ordering::greater;
                BigUint twice_k = nn.value_big();
                twice_k.sub(w.value_big());
                if (!parity_ok || !dom_ok || !twice_k.is_even()) {
                    detail = "stage equation failed at stage " + std::to_string(j);
                    return false;
                }
            }
            used_kind[static_cast<int>(n.kind())] = true;
            ++built;
        }
    }
    if (built < 20) {
        detail = "only " + std::to_string(built) + " grid pairs";
        return false;
    }
    if (!(used_kind[0] && used_kind[1] && used_kind[2])) {
        detail = "grid missed a sequence kind";
        return false;
    }
    return true;
}

bool trivial_construction(std::string& detail) {
    std::vector<SequenceSpec> targets = {
        constant(2), constant(6), ep({}, {2, 4}),
        SequenceSpec::cumulative_products(PrimeSet::all()),
    };
    for (std::size_t i = 0; i < targets.size(); ++i) {
        RealizationRequest req;
        req.target_n = targets[i];
        req.mode = RealizationMode::TrivialGenusOne;
        RealizationResult r = construct_trivial(req);
        SetClassification c = classify_set(r.basis);
        if (!verify_roundtrip(r, req) || !c.trivial || !(r.basis.genus == Genus::known(1)) ||
            !c.self_index.isomorphic_to(classify(targets[i]))) {
            detail = "trivial target " + std::to_string(i) + " failed";
            return false;
        }
        if (i == 3 && c.homeo_necessary.passes) {
            detail = "cumulative tower should be obstructed";
            return false;
        }
    }
    return true;
}

bool consistency_lattice(std::string& detail) {
    std::mt19937_64 rng(9109);
    for (int i = 0; i < 1000; ++i) {
        ToroidalBasisSpec b = testgen::random_valid_basis(rng);
        if (!validate(b).empty()) {
            detail = "generator produced an invalid basis";
            return false;
        }
        if (!two_divides_consistency(b)) {
            detail = "2-divisibility mismatch at case " + std::to_string(i);
            return false;
        }
        if (self_index(b).is_unit_class() &&
            cech_h1(b).variant != LimitVariant::FreeCyclic) {
            detail = "unit self-index without free cyclic cohomology";
            return false;
        }
        if (!(flow_realizable(b) == is_weakly_tame(b))) {
            detail = "flow verdict diverged from weak tameness";
            return false;
        }
    }
    // Declared contradictory triples are always flagged.
    for (int i = 0; i < 250; ++i) {
        std::uint64_t n = 2 * testgen::pick(rng, 1, 20);
        ToroidalBasisSpec b;
        b.winding = constant(n);
        b.index = constant(n);
        b.genus = Genus::known(testgen::pick(rng, 1, 4));
        bool flagged = false;
        for (const auto& v : validate(b)) flagged = flagged || v.rule == "tameness-contradiction";
        if (!flagged) {
            detail = "contradictory triple not flagged";
            return false;
        }
    }
    return true;
}

bool cli_golden(const std::string& cli, const std::string& golden_dir, std::string& detail) {
    CliRun first = run_cli(cli, "fixtures --format structured");
    CliRun second = run_cli(cli, "fixtures --format structured");
    if (first.exit_code != 0 || second.exit_code != 0) {
        detail = "fixtures verb exited nonzero";
        return false;
    }
    if (first.out != second.out) {
        detail = "consecutive runs differ";
        return false;
    }
    std::string golden = read_file(golden_dir + "/fixtures_structured.json");
    if (first.out != golden) {
        detail = "output differs from the committed golden file";
        return false;
    }

    // Exit-code contract over the documented codes.
    if (run_cli(cli, "classify-group --inline "
                     "'{\"kind\":\"periodic\",\"pre\":[],\"cycle\":[\"2\"]}'")
            .exit_code != 0) {
        detail = "classify-group should exit 0";
        return false;
    }
    if (run_cli(cli, "classify-set --inline "
                     "'{\"winding\":{\"kind\":\"periodic\",\"pre\":[],\"cycle\":[\"1\"]},"
                     "\"index\":{\"kind\":\"periodic\",\"pre\":[],\"cycle\":[\"2\"]},"
                     "\"genus\":\"unknown\"}'")
            .exit_code != 1) {
        detail = "validation failure should exit 1";
        return false;
    }
    if (run_cli(cli, "construct --inline "
                     "'{\"h\":{\"kind\":\"periodic\",\"pre\":[],\"cycle\":[\"1\"]},"
                     "\"n\":{\"kind\":\"periodic\",\"pre\":[],\"cycle\":[\"1\"]}}'")
            .exit_code != 1) {
        detail = "precondition failure should exit 1";
        return false;
    }
    if (run_cli(cli, "classify-group --inline 'not json'").exit_code != 2) {
        detail = "parse failure should exit 2";
        return false;
    }
    if (run_cli(cli, "no-such-verb").exit_code != 2) {
        detail = "unknown verb should exit 2";
        return false;
    }
    return true;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 3) {
        std::cerr << "usage: acceptance <path-to-cli> <golden-dir>\n";
        return 2;
    }
    const std::string cli = argv[1];
    const std::string golden_dir = argv[2];

    criterion("criterion-01 dyadic solenoid fixture", dyadic_solenoid);
    criterion("criterion-02 whitehead continuum fixture", whitehead_continuum);
    criterion("criterion-03 j-th-prime solenoid obstructions", jth_prime_solenoid);
    criterion("criterion-04 divisor sets match period scans (1000 specs, p <= 97)",
              divisor_oracle);
    criterion("criterion-05 refine and block-plan invariance (1000 + 1000)",
              refine_and_block_invariance);
    criterion("criterion-06 number-like normal form for m = 2..500", number_like_normal_form);
    criterion("criterion-07 realization grid round-trips with exact stage equations",
              construct_grid);
    criterion("criterion-08 trivial genus-1 realizations", trivial_construction);
    criterion("criterion-09 consistency lattice on 1000 valid specs", consistency_lattice);
    criterion("criterion-10 CLI structured reports are byte-stable",
              [&](std::string& d) { return cli_golden(cli, golden_dir, d); });

    if (g_failures > 0) {
        std::cout << g_failures << " criterion(s) failed\n";
        return 1;
    }
    std::cout << "all criteria passed\n";
    return 0;
}
