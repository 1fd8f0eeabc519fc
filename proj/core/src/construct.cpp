#include "toroidal/construct.hpp"

#include <algorithm>
#include <map>

#include "toroidal/big_uint.hpp"
#include "toroidal/error.hpp"
#include "toroidal/seq_compare.hpp"

namespace toroidal {

namespace {

constexpr std::size_t kRecipePreview = 8;

bool all_even(const std::vector<FactoredNat>& terms) {
    return std::all_of(terms.begin(), terms.end(),
                       [](const FactoredNat& t) { return t.parity() != Parity::Odd; });
}

// Rotates the cycle to end at its last even term and folds each run ending
// in an even term into one block, so every output term is even. The input
// must contain an even term.
std::vector<FactoredNat> all_even_form(const std::vector<FactoredNat>& cycle,
                                       std::vector<std::string>& transcript) {
    if (all_even(cycle)) return cycle;
    std::size_t last_even = 0;
    for (std::size_t i = 0; i < cycle.size(); ++i)
        if (cycle[i].parity() != Parity::Odd) last_even = i;
    std::vector<FactoredNat> out;
    FactoredNat acc = FactoredNat::one();
    for (std::size_t i = 0; i < cycle.size(); ++i) {
        const FactoredNat& t = cycle[(last_even + 1 + i) % cycle.size()];
        acc = acc.times(t);
        if (t.parity() != Parity::Odd) {
            out.push_back(acc);
            acc = FactoredNat::one();
        }
    }
    transcript.push_back("parity normalization: grouped cycle blocks so every term is even");
    return out;
}

std::vector<StagePattern> preview_recipes(const ToroidalBasisSpec& basis, std::size_t count) {
    std::vector<StagePattern> out;
    for (std::size_t j = 1; j <= count; ++j) out.push_back(stage_pattern_at(basis, j));
    return out;
}

// For periodic pairs the preview covers the preperiod plus one whole cycle;
// for unbounded index kinds it covers a fixed opening window.
std::size_t preview_length(const ToroidalBasisSpec& basis) {
    if (basis.index.kind() == SequenceSpec::Kind::EventuallyPeriodic)
        return basis.index.preperiod().size() + basis.index.cycle().size();
    return kRecipePreview;
}

struct PairedStages {
    std::vector<FactoredNat> pre_w, pre_n, cyc_w, cyc_n;
};

// Greedy-minimal dominance grouping over one winding cycle against one index
// cycle: each stage takes the smallest block of index terms whose product
// reaches the winding term. The walk over (winding phase, index phase)
// states is deterministic and finite, so the paired output is eventually
// periodic.
PairedStages pair_stages(const std::vector<FactoredNat>& wc, const std::vector<FactoredNat>& nc,
                         std::vector<std::string>& transcript) {
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> seen;
    std::vector<std::pair<FactoredNat, FactoredNat>> pairs;
    std::size_t a = 0, b = 0;
    bool grouped = false;
    for (;;) {
        auto state = std::make_pair(a, b);
        auto it = seen.find(state);
        if (it != seen.end()) {
            PairedStages out;
            for (std::size_t i = 0; i < pairs.size(); ++i) {
                auto& dst_w = i < it->second ? out.pre_w : out.cyc_w;
                auto& dst_n = i < it->second ? out.pre_n : out.cyc_n;
                dst_w.push_back(pairs[i].first);
                dst_n.push_back(pairs[i].second);
            }
            if (grouped)
                transcript.push_back(
                    "dominance grouping: merged consecutive index terms until each block reaches"
                    " its winding term");
            return out;
        }
        seen.emplace(state, pairs.size());
        const FactoredNat& w = wc[a];
        FactoredNat block = FactoredNat::one();
        std::size_t taken = 0;
        do {
            block = block.times(nc[b]);
            b = (b + 1) % nc.size();
            ++taken;
        } while (block.compare_value(w) == std::strong_ordering::less);
        // Every index term is >= 2, so the block doubles per term and the
        // size stays within log2(w) + 1.
        if (taken > w.value_big().bit_length() + 1)
            throw DomainError("dominance block exceeded its size bound");
        if (taken > 1) grouped = true;
        pairs.emplace_back(w, block);
        a = (a + 1) % wc.size();
    }
}

void check_unknotted_preconditions(const RealizationRequest& req, const DirectLimitClass& cls_h,
                                   const DirectLimitClass& cls_n) {
    if (cls_n.variant == LimitVariant::Zero) throw DomainError("N is zero");
    if (cls_n.is_unit_class()) throw DomainError("N is ~1");
    if (cls_h.divisible_by(2) != cls_n.divisible_by(2))
        throw DomainError("2-consistency violated: 2 must divide both classes or neither");
    if (req.target_h.kind() != SequenceSpec::Kind::EventuallyPeriodic)
        throw DomainError("kind pair unsupported: the cohomology target must be periodic");
}

RealizationResult finish(ToroidalBasisSpec basis, std::vector<std::string> transcript) {
    RealizationResult result;
    result.stage_recipes = preview_recipes(basis, preview_length(basis));
    result.basis = std::move(basis);
    result.transcript = std::move(transcript);
    return result;
}

}  // namespace

RealizationResult construct_unknotted(const RealizationRequest& req) {
    const DirectLimitClass cls_h = classify(req.target_h);
    const DirectLimitClass cls_n = classify(req.target_n);
    check_unknotted_preconditions(req, cls_h, cls_n);

    std::vector<std::string> transcript;
    const bool even_branch = cls_n.divisible_by(2);

    SequenceSpec hc = canonical_form(req.target_h);
    if (!(hc == req.target_h))
        transcript.push_back("canonicalized the cohomology target to cycle " +
                             [&hc] {
                                 std::string s;
                                 for (const auto& t : hc.cycle()) s += (s.empty() ? "" : ",") + t.to_string();
                                 return "[" + s + "]";
                             }());
    std::vector<FactoredNat> wc = hc.cycle();
    if (even_branch) wc = all_even_form(wc, transcript);

    ToroidalBasisSpec basis;
    basis.genus = Genus::known(0);
    basis.patterns = PatternSeq{PatternSeq::Kind::Solved, {}, {}};
    basis.label = "unknotted realization";

    switch (req.target_n.kind()) {
        case SequenceSpec::Kind::EventuallyPeriodic: {
            SequenceSpec ncan = canonical_form(req.target_n);
            if (!(ncan == req.target_n))
                transcript.push_back("canonicalized the index target");
            std::vector<FactoredNat> nc = ncan.cycle();
            if (even_branch) nc = all_even_form(nc, transcript);
            PairedStages stages = pair_stages(wc, nc, transcript);
            basis.winding = SequenceSpec::periodic(stages.pre_w, stages.cyc_w);
            basis.index = SequenceSpec::periodic(stages.pre_n, stages.cyc_n);
            break;
        }
        case SequenceSpec::Kind::EnumeratedPrimes: {
            // Only an odd constant winding can ride a prime tower: the index
            // class has no prime divisors, so 2-consistency already forced
            // the odd branch here.
            FactoredNat w0 = FactoredNat::one();
            for (const auto& t : wc) w0 = w0.times(t);
            if (wc.size() > 1)
                transcript.push_back("grouped the winding cycle into the constant block " +
                                     w0.to_string());
            auto w_val = w0.value_u64();
            if (!w_val) throw DomainError("winding constant exceeds the supported range");
            std::vector<std::uint64_t> excluded = req.target_n.source().listed();
            if (req.target_n.source().contains(2)) {
                excluded.push_back(2);
                transcript.push_back(
                    "parity normalization: dropped the even prime 2 from the index source");
            }
            SequenceSpec pruned =
                SequenceSpec::enumerated_primes(PrimeSet::cofinite(excluded));
            bool dropped = false;
            for (std::size_t i = 1; pruned.source().nth_element(i) < *w_val;) {
                excluded.push_back(pruned.source().nth_element(i));
                pruned = SequenceSpec::enumerated_primes(PrimeSet::cofinite(excluded));
                dropped = true;
            }
            if (dropped)
                transcript.push_back(
                    "dominance: discarded index primes below the winding constant");
            basis.winding = SequenceSpec::constant(w0);
            basis.index = pruned;
            break;
        }
        case SequenceSpec::Kind::CumulativeProducts: {
            const FactoredNat pad_token = even_branch ? FactoredNat::zero() : FactoredNat::one();
            // Find the minimal padding after which every winding term sits
            // below its index term; the index grows strictly, so one window
            // of winding terms decides each candidate.
            std::vector<BigUint> n_values;
            auto n_value = [&](std::size_t j) -> const BigUint& {
                while (n_values.size() < j) {
                    BigUint next = n_values.empty() ? BigUint{1} : n_values.back();
                    n_values.push_back(
                        next.mul(req.target_n.source().nth_element(n_values.size() + 1)));
                }
                return n_values[j - 1];
            };
            std::size_t pad = 0;
            for (;; ++pad) {
                bool ok = true;
                for (std::size_t i = 0; i < wc.size() && ok; ++i)
                    ok = wc[i].value_big().compare(n_value(pad + 1 + i)) !=
                         std::strong_ordering::greater;
                if (ok) break;
            }
            if (pad > 0)
                transcript.push_back("dominance: padded the winding with " + std::to_string(pad) +
                                     (even_branch ? " leading zero-winding stages"
                                                  : " leading unit-winding stages"));
            basis.winding = SequenceSpec::periodic(
                std::vector<FactoredNat>(pad, pad_token), wc);
            basis.index = req.target_n;
            break;
        }
    }
    transcript.push_back("solved each stage as strands w_j with (n_j - w_j)/2 clasps");
    return finish(std::move(basis), std::move(transcript));
}

RealizationResult construct_trivial(const RealizationRequest& req) {
    const DirectLimitClass cls_n = classify(req.target_n);
    if (cls_n.variant == LimitVariant::Zero) throw DomainError("N is zero");
    if (!cls_n.divisible_by(2)) throw DomainError("construct_trivial requires 2 | N");

    std::vector<std::string> transcript;
    ToroidalBasisSpec basis;
    basis.winding = SequenceSpec::constant(FactoredNat::zero());
    basis.genus = Genus::known(1);
    basis.patterns = PatternSeq{PatternSeq::Kind::Whitehead, {}, {}};
    basis.label = "trivial genus-1 realization";

    if (req.target_n.kind() == SequenceSpec::Kind::EventuallyPeriodic) {
        SequenceSpec ncan = canonical_form(req.target_n);
        if (!(ncan == req.target_n)) transcript.push_back("canonicalized the index target");
        basis.index = SequenceSpec::periodic({}, all_even_form(ncan.cycle(), transcript));
    } else {
        // A prime tower has no prime divisors, so 2 | N already ruled it
        // out; a cumulative tower containing 2 is even from the first term.
        basis.index = req.target_n;
    }
    transcript.push_back(
        "each stage is one clasp followed by n_j/2 monotone turns; the first stage rides a"
        " nontrivially knotted companion torus, stamping genus 1");
    return finish(std::move(basis), std::move(transcript));
}

bool verify_roundtrip(const RealizationResult& result, const RealizationRequest& req) {
    const ToroidalBasisSpec& basis = result.basis;
    if (!validate(basis).empty()) return false;
    if (is_cellular(basis)) return false;
    if (!classify(basis.index).isomorphic_to(classify(req.target_n))) return false;
    if (req.mode == RealizationMode::Unknotted) {
        if (!(basis.genus == Genus::known(0))) return false;
        if (!classify(basis.winding).isomorphic_to(classify(req.target_h))) return false;
    } else {
        if (!(basis.genus == Genus::known(1))) return false;
        if (classify(basis.winding).variant != LimitVariant::Zero) return false;
    }
    if (!basis.patterns) return false;
    // Each materialized recipe must reproduce its stage, and the pattern
    // rule must keep doing so past the recipes.
    auto stage_matches = [&basis](const StagePattern& p, std::size_t j) {
        return BigUint{p.winding()} == basis.winding.term(j).value_big() &&
               BigUint{p.index()} == basis.index.term(j).value_big();
    };
    for (std::size_t i = 0; i < result.stage_recipes.size(); ++i)
        if (!stage_matches(result.stage_recipes[i], i + 1)) return false;
    for (std::size_t j = 1; j <= result.stage_recipes.size() + 4; ++j) {
        if (!stage_matches(stage_pattern_at(basis, j), j)) return false;
    }
    return true;
}

std::vector<std::pair<std::string, ToroidalBasisSpec>> fixture_families() {
    std::vector<std::pair<std::string, ToroidalBasisSpec>> out;

    auto solenoid = [](SequenceSpec seq, std::string label) {
        ToroidalBasisSpec b;
        b.winding = seq;
        b.index = std::move(seq);
        b.genus = Genus::known(0);
        b.patterns = PatternSeq{PatternSeq::Kind::Solved, {}, {}};
        b.label = std::move(label);
        return b;
    };
    for (std::uint64_t n : {2, 3, 6})
        out.emplace_back("solenoid-" + std::to_string(n),
                         solenoid(SequenceSpec::constant(FactoredNat::from_value(n)),
                                  std::to_string(n) + "-adic solenoid tower"));
    out.emplace_back("solenoid-jth-prime",
                     solenoid(SequenceSpec::enumerated_primes(PrimeSet::all()),
                              "tower winding by the j-th prime; no prime divides the self-index"));
    out.emplace_back("solenoid-coprime",
                     solenoid(SequenceSpec::enumerated_primes(PrimeSet::cofinite({2})),
                              "pairwise coprime odd windings"));
    out.emplace_back("solenoid-factorial",
                     solenoid(SequenceSpec::cumulative_products(PrimeSet::all()),
                              "factorial-style tower; every prime divides the self-index"));

    ToroidalBasisSpec whitehead;
    whitehead.winding = SequenceSpec::constant(FactoredNat::zero());
    whitehead.index = SequenceSpec::constant(FactoredNat::from_value(2));
    whitehead.genus = Genus::known(0);
    whitehead.patterns = PatternSeq{PatternSeq::Kind::Whitehead, {}, {}};
    whitehead.label = "clasp tower with dyadic self-index";
    out.emplace_back("whitehead", whitehead);

    RealizationRequest na1;
    na1.target_h = SequenceSpec::constant(FactoredNat::one());
    na1.target_n = SequenceSpec::cumulative_products(PrimeSet::cofinite({2}));
    na1.mode = RealizationMode::Unknotted;
    ToroidalBasisSpec na1_basis = construct_unknotted(na1).basis;
    na1_basis.label = "unknotted tower with H1 = Z and all odd primes dividing the self-index";
    out.emplace_back("nonattract-1", std::move(na1_basis));

    RealizationRequest na2;
    na2.target_n = SequenceSpec::cumulative_products(PrimeSet::all());
    na2.mode = RealizationMode::TrivialGenusOne;
    ToroidalBasisSpec na2_basis = construct_trivial(na2).basis;
    na2_basis.label = "trivial genus-1 tower with every prime dividing the self-index";
    out.emplace_back("nonattract-2", std::move(na2_basis));

    return out;
}

}  // namespace toroidal
