#include "toroidal/limit_group.hpp"

#include <algorithm>

#include "toroidal/error.hpp"

namespace toroidal {

namespace {

bool cycle_has_zero(const SequenceSpec& s) {
    for (const auto& t : s.cycle())
        if (t.is_zero()) return true;
    return false;
}

bool cycle_all_one(const SequenceSpec& s) {
    for (const auto& t : s.cycle())
        if (!t.is_one()) return false;
    return true;
}

// Preperiod terms at or before the last zero never reach the tail the limit
// is computed over, so they contribute no height.
std::vector<FactoredNat> effective_preperiod(const std::vector<FactoredNat>& pre) {
    std::size_t start = 0;
    for (std::size_t i = 0; i < pre.size(); ++i)
        if (pre[i].is_zero()) start = i + 1;
    return {pre.begin() + static_cast<std::ptrdiff_t>(start), pre.end()};
}

DirectLimitClass zero_class() {
    DirectLimitClass cls;
    cls.variant = LimitVariant::Zero;
    cls.number_like = false;
    // Every element of the zero group is divisible by every prime.
    cls.prime_divisors = PrimeSet::all();
    return cls;
}

DirectLimitClass free_cyclic_class() {
    DirectLimitClass cls;
    cls.variant = LimitVariant::FreeCyclic;
    cls.number_like = true;
    cls.radical = FactoredNat::one();
    cls.prime_divisors = PrimeSet::finite({});
    return cls;
}

}  // namespace

bool DirectLimitClass::divisible_by(std::uint64_t p) const {
    switch (variant) {
        case LimitVariant::Zero: return true;
        case LimitVariant::FreeCyclic: return false;
        case LimitVariant::NonFinitelyGenerated: return prime_divisors.contains(p);
    }
    return false;
}

bool DirectLimitClass::is_unit_class() const {
    return variant == LimitVariant::FreeCyclic;
}

bool DirectLimitClass::isomorphic_to(const DirectLimitClass& other) const {
    if (variant != other.variant) return false;
    if (variant != LimitVariant::NonFinitelyGenerated) return true;
    // Heights classify the limit up to isomorphism: the infinite supports
    // must agree exactly, and the finite heights may differ only at finitely
    // many primes. The explicit maps are finite, so only the unit tails can
    // produce an infinite discrepancy locus.
    return profile->infinite_support == other.profile->infinite_support &&
           PrimeSet::sym_diff_finite(profile->unit_tail, other.profile->unit_tail);
}

std::string DirectLimitClass::describe() const {
    switch (variant) {
        case LimitVariant::Zero: return "0";
        case LimitVariant::FreeCyclic: return "Z";
        case LimitVariant::NonFinitelyGenerated: break;
    }
    if (number_like) {
        const auto v = radical->value_u64();
        return "Z[1/" + (v ? std::to_string(*v) : radical->to_string()) + "]";
    }
    return "not finitely generated, not number-like; prime divisors " +
           prime_divisors.to_string();
}

DirectLimitClass classify(const SequenceSpec& s) {
    switch (s.kind()) {
        case SequenceSpec::Kind::EventuallyPeriodic: {
            if (cycle_has_zero(s)) return zero_class();
            if (cycle_all_one(s)) return free_cyclic_class();

            HeightProfile profile;
            std::vector<std::uint64_t> support;
            for (const auto& t : s.cycle())
                for (const auto& [p, e] : t.factors()) support.push_back(p);
            std::sort(support.begin(), support.end());
            support.erase(std::unique(support.begin(), support.end()), support.end());
            profile.infinite_support = PrimeSet::finite(support);

            for (const auto& t : effective_preperiod(s.preperiod())) {
                for (const auto& [p, e] : t.factors()) {
                    if (!profile.infinite_support.contains(p)) profile.explicit_heights[p] += e;
                }
            }

            DirectLimitClass cls;
            cls.variant = LimitVariant::NonFinitelyGenerated;
            cls.number_like = true;
            FactoredNat radical = FactoredNat::one();
            for (std::uint64_t p : support) radical = radical.times(FactoredNat::prime(p));
            cls.radical = radical;
            cls.prime_divisors = profile.infinite_support;
            cls.profile = std::move(profile);
            return cls;
        }
        case SequenceSpec::Kind::EnumeratedPrimes: {
            DirectLimitClass cls;
            cls.variant = LimitVariant::NonFinitelyGenerated;
            HeightProfile profile;
            profile.unit_tail = s.source();
            cls.profile = std::move(profile);
            cls.number_like = false;  // infinitely many primes of height one
            cls.prime_divisors = PrimeSet::finite({});
            return cls;
        }
        case SequenceSpec::Kind::CumulativeProducts: {
            DirectLimitClass cls;
            cls.variant = LimitVariant::NonFinitelyGenerated;
            HeightProfile profile;
            profile.infinite_support = s.source();
            cls.profile = std::move(profile);
            cls.number_like = false;  // infinite support
            cls.prime_divisors = s.source();
            return cls;
        }
    }
    throw DomainError("unreachable sequence kind");
}

PrimeSet prime_divisors(const SequenceSpec& s) {
    DirectLimitClass cls = classify(s);
    if (cls.variant == LimitVariant::Zero)
        throw DomainError("divisor set undefined for G = 0");
    return cls.prime_divisors;
}

std::optional<FactoredNat> number_like_radical(const SequenceSpec& s) {
    DirectLimitClass cls = classify(s);
    if (!cls.number_like) return std::nullopt;
    return cls.radical;
}

bool isomorphic(const SequenceSpec& a, const SequenceSpec& b) {
    return classify(a).isomorphic_to(classify(b));
}

SequenceSpec canonical_form(const SequenceSpec& s) {
    if (s.kind() != SequenceSpec::Kind::EventuallyPeriodic) return s;
    if (cycle_has_zero(s)) return SequenceSpec::constant(FactoredNat::zero());
    if (cycle_all_one(s)) return SequenceSpec::constant(FactoredNat::one());
    // Drop the preperiod, rotate the cycle to open at a term >= 2, and fold
    // each run of ones into the preceding term. Folding a one is a no-op on
    // the block product, so the result is just the terms >= 2 in rotated
    // cyclic order.
    const auto& cycle = s.cycle();
    std::size_t first = 0;
    while (cycle[first].is_one()) ++first;
    std::vector<FactoredNat> out;
    for (std::size_t i = 0; i < cycle.size(); ++i) {
        const auto& t = cycle[(first + i) % cycle.size()];
        if (!t.is_one()) out.push_back(t);
    }
    return SequenceSpec::periodic({}, std::move(out));
}

SequenceSpec drop_prefix(const SequenceSpec& s, std::size_t k) {
    constexpr std::size_t kMaxEnumeratedShift = 4096;
    if (k == 0) return s;
    switch (s.kind()) {
        case SequenceSpec::Kind::EventuallyPeriodic: {
            const auto& pre = s.preperiod();
            const auto& cycle = s.cycle();
            if (k <= pre.size()) {
                return SequenceSpec::periodic(
                    {pre.begin() + static_cast<std::ptrdiff_t>(k), pre.end()}, cycle);
            }
            std::size_t r = (k - pre.size()) % cycle.size();
            std::vector<FactoredNat> rotated;
            rotated.reserve(cycle.size());
            for (std::size_t i = 0; i < cycle.size(); ++i)
                rotated.push_back(cycle[(r + i) % cycle.size()]);
            return SequenceSpec::periodic({}, std::move(rotated));
        }
        case SequenceSpec::Kind::EnumeratedPrimes: {
            if (k > kMaxEnumeratedShift)
                throw DomainError("prefix drop of " + std::to_string(k) +
                                  " exceeds the supported shift bound");
            std::vector<std::uint64_t> excluded = s.source().listed();
            for (std::size_t i = 1; i <= k; ++i) excluded.push_back(s.source().nth_element(i));
            return SequenceSpec::enumerated_primes(PrimeSet::cofinite(std::move(excluded)));
        }
        case SequenceSpec::Kind::CumulativeProducts:
            throw DomainError("cumulative-products sequences are not closed under prefix drops");
    }
    throw DomainError("unreachable sequence kind");
}

SequenceSpec group_blocks(const SequenceSpec& s, const BlockPlan& plan) {
    if (s.kind() != SequenceSpec::Kind::EventuallyPeriodic)
        throw DomainError("block grouping is defined for periodic sequences only");
    if (plan.tail == 0) throw DomainError("tail block size must be positive");
    for (std::size_t sz : plan.prefix)
        if (sz == 0) throw DomainError("prefix block sizes must be positive");
    const std::size_t period = s.cycle().size();
    if (plan.tail % period != 0)
        throw DomainError("tail block must cover whole periods");

    auto product_at = [&s](std::size_t pos, std::size_t count) {
        FactoredNat acc = FactoredNat::one();
        for (std::size_t i = 0; i < count; ++i) acc = acc.times(s.term(pos + i));
        return acc;
    };

    std::vector<FactoredNat> out_pre;
    std::size_t pos = 1;
    for (std::size_t sz : plan.prefix) {
        out_pre.push_back(product_at(pos, sz));
        pos += sz;
    }
    // Tail blocks overlapping the preperiod are finite in number; emit them
    // explicitly. Once inside the pure cycle any window of tail length has
    // the same product regardless of phase.
    while (pos <= s.preperiod().size()) {
        out_pre.push_back(product_at(pos, plan.tail));
        pos += plan.tail;
    }
    FactoredNat cycle_product = FactoredNat::one();
    for (const auto& t : s.cycle()) cycle_product = cycle_product.times(t);
    FactoredNat tail_term = cycle_product.pow(static_cast<std::uint32_t>(plan.tail / period));
    return SequenceSpec::periodic(std::move(out_pre), {std::move(tail_term)});
}

ParityProfile eventual_parity(const SequenceSpec& s) {
    switch (s.kind()) {
        case SequenceSpec::Kind::EventuallyPeriodic: {
            if (cycle_has_zero(s)) return {ParityProfile::Tail::ZeroTailed, 0};
            Parity tail = s.cycle().front().parity();
            for (const auto& t : s.cycle())
                if (t.parity() != tail) return {ParityProfile::Tail::Mixed, 0};
            std::size_t from = s.preperiod().size() + 1;
            while (from > 1 && s.preperiod()[from - 2].parity() == tail) --from;
            return {tail == Parity::Even ? ParityProfile::Tail::AllEven
                                         : ParityProfile::Tail::AllOdd,
                    from};
        }
        case SequenceSpec::Kind::EnumeratedPrimes:
            // Only 2 is even, and when present it is the first term.
            return {ParityProfile::Tail::AllOdd, s.source().contains(2) ? std::size_t{2} : 1};
        case SequenceSpec::Kind::CumulativeProducts:
            if (s.source().contains(2)) return {ParityProfile::Tail::AllEven, 1};
            return {ParityProfile::Tail::AllOdd, 1};
    }
    throw DomainError("unreachable sequence kind");
}

RefineReport refine_and_check(const SequenceSpec& s, const SplitRule& split) {
    if (s.kind() != SequenceSpec::Kind::EventuallyPeriodic)
        throw DomainError("refine is defined for periodic sequences only");
    for (const auto& t : s.preperiod())
        if (t.is_zero()) throw DomainError("refine requires nonzero terms");
    if (cycle_has_zero(s)) throw DomainError("refine requires nonzero terms");
    if (split.pre.size() != s.preperiod().size() || split.cycle.size() != s.cycle().size())
        throw DomainError("split rule must pair every preperiod and cycle term");

    auto check_pair = [](const std::pair<FactoredNat, FactoredNat>& mm, const FactoredNat& term) {
        if (!(mm.first.times(mm.second) == term))
            throw DomainError("split factors do not multiply back to " + term.to_string());
    };
    for (std::size_t i = 0; i < split.pre.size(); ++i) check_pair(split.pre[i], s.preperiod()[i]);
    for (std::size_t i = 0; i < split.cycle.size(); ++i) check_pair(split.cycle[i], s.cycle()[i]);

    std::vector<FactoredNat> inter_pre, inter_cycle;
    for (const auto& [m, mp] : split.pre) {
        inter_pre.push_back(m);
        inter_pre.push_back(mp);
    }
    for (const auto& [m, mp] : split.cycle) {
        inter_cycle.push_back(m);
        inter_cycle.push_back(mp);
    }

    // Pairing after dropping one interleaved term gives N'_j = M'_j * M_{j+1}.
    const std::size_t cl = split.cycle.size();
    std::vector<FactoredNat> off_pre, off_cycle;
    for (std::size_t i = 0; i + 1 < split.pre.size(); ++i)
        off_pre.push_back(split.pre[i].second.times(split.pre[i + 1].first));
    if (!split.pre.empty())
        off_pre.push_back(split.pre.back().second.times(split.cycle.front().first));
    for (std::size_t i = 0; i < cl; ++i)
        off_cycle.push_back(split.cycle[i].second.times(split.cycle[(i + 1) % cl].first));

    RefineReport report;
    report.interleaved_spec = SequenceSpec::periodic(std::move(inter_pre), std::move(inter_cycle));
    report.offset_spec = SequenceSpec::periodic(std::move(off_pre), std::move(off_cycle));
    report.original = classify(s);
    report.interleaved = classify(report.interleaved_spec);
    report.offset = classify(report.offset_spec);
    report.pass = report.original.isomorphic_to(report.interleaved) &&
                  report.original.isomorphic_to(report.offset);
    return report;
}

}  // namespace toroidal
