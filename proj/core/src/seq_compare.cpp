#include "toroidal/seq_compare.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

#include "toroidal/big_uint.hpp"
#include "toroidal/error.hpp"
#include "toroidal/primes.hpp"

namespace toroidal::seqrel {

namespace {

using Kind = SequenceSpec::Kind;

// Hard stop for the handful of scans whose termination rests on growth
// arguments. Generously above anything the classifiers produce.
constexpr std::size_t kScanBudget = 20000;

[[noreturn]] void budget_exceeded(const char* what) {
    throw DomainError(std::string("exact ") + what + " check exceeded its scan budget");
}

// ---- mod-2 streams ---------------------------------------------------------

struct BitStream {
    std::vector<int> prefix;
    std::vector<int> cycle;  // nonempty
};

int bit_of(const FactoredNat& t) { return t.parity() == Parity::Odd ? 1 : 0; }

BitStream mod2_stream(const SequenceSpec& s) {
    switch (s.kind()) {
        case Kind::EventuallyPeriodic: {
            BitStream st;
            for (const auto& t : s.preperiod()) st.prefix.push_back(bit_of(t));
            for (const auto& t : s.cycle()) st.cycle.push_back(bit_of(t));
            return st;
        }
        case Kind::EnumeratedPrimes:
            // Only 2 is even, and when present it is the first term.
            if (s.source().contains(2)) return {{0}, {1}};
            return {{}, {1}};
        case Kind::CumulativeProducts:
            if (s.source().contains(2)) return {{}, {0}};
            return {{}, {1}};
    }
    throw DomainError("unreachable sequence kind");
}

int stream_at(const BitStream& st, std::size_t j) {
    if (j <= st.prefix.size()) return st.prefix[j - 1];
    return st.cycle[(j - 1 - st.prefix.size()) % st.cycle.size()];
}

// ---- value streams ---------------------------------------------------------

// Streams the terms of a spec as magnitudes, keeping the running product for
// cumulative kinds so each step stays cheap.
class ValueIter {
public:
    explicit ValueIter(const SequenceSpec& s) : s_(s) {}

    BigUint next() {
        ++j_;
        switch (s_.kind()) {
            case Kind::EventuallyPeriodic: return s_.term(j_).value_big();
            case Kind::EnumeratedPrimes: {
                last_prime_ = s_.source().nth_element(j_);
                return BigUint{last_prime_};
            }
            case Kind::CumulativeProducts:
                last_prime_ = s_.source().nth_element(j_);
                acc_.mul(last_prime_);
                return acc_;
        }
        throw DomainError("unreachable sequence kind");
    }

    // The source element consumed by the latest term (prime-backed kinds).
    std::uint64_t last_prime() const { return last_prime_; }

private:
    const SequenceSpec& s_;
    std::size_t j_ = 0;
    BigUint acc_{1};
    std::uint64_t last_prime_ = 0;
};

bool periodic(const SequenceSpec& s) { return s.kind() == Kind::EventuallyPeriodic; }
bool prime_backed(const SequenceSpec& s) { return !periodic(s); }

std::size_t joint_window(const SequenceSpec& a, const SequenceSpec& b) {
    return std::max(a.preperiod().size(), b.preperiod().size()) +
           std::lcm(a.cycle().size(), b.cycle().size());
}

BigUint max_term_value(const SequenceSpec& s) {
    BigUint best;
    auto consider = [&best](const FactoredNat& t) {
        BigUint v = t.value_big();
        if (v.compare(best) == std::strong_ordering::greater) best = std::move(v);
    };
    for (const auto& t : s.preperiod()) consider(t);
    for (const auto& t : s.cycle()) consider(t);
    return best;
}

std::uint64_t max_listed(const PrimeSet& source) {
    return source.listed().empty() ? 0 : source.listed().back();
}

}  // namespace

std::optional<std::size_t> first_parity_mismatch(const SequenceSpec& a, const SequenceSpec& b) {
    BitStream sa = mod2_stream(a);
    BitStream sb = mod2_stream(b);
    std::size_t window = std::max(sa.prefix.size(), sb.prefix.size()) +
                         std::lcm(sa.cycle.size(), sb.cycle.size());
    for (std::size_t j = 1; j <= window; ++j)
        if (stream_at(sa, j) != stream_at(sb, j)) return j;
    return std::nullopt;
}

std::optional<std::size_t> first_term_difference(const SequenceSpec& a, const SequenceSpec& b) {
    if (periodic(a) && periodic(b)) {
        // Two eventually periodic sequences agreeing through a joint window
        // agree forever. Periodicity also bounds where a periodic sequence
        // can track a strictly increasing one, handled below.
        std::size_t window = joint_window(a, b);
        for (std::size_t j = 1; j <= window; ++j)
            if (!(a.term(j) == b.term(j))) return j;
        return std::nullopt;
    }
    if (prime_backed(a) && prime_backed(b)) {
        if (a.kind() == b.kind()) {
            if (a.source() == b.source()) return std::nullopt;
            // Sources differ at some prime; the enumerations expose it.
            for (std::size_t j = 1; j <= kScanBudget; ++j)
                if (!(a.term(j) == b.term(j))) return j;
            budget_exceeded("term equality");
        }
        // Enumerated primes against cumulative products: by the second term
        // one side is prime and the other a product of two primes.
        for (std::size_t j = 1; j <= 2; ++j)
            if (!(a.term(j) == b.term(j))) return j;
        throw DomainError("unreachable: prime and two-prime product compared equal");
    }
    // Periodic against strictly increasing: a repeated cycle value cannot
    // match two distinct terms, so a difference appears within two periods
    // past the preperiod.
    const SequenceSpec& per = periodic(a) ? a : b;
    std::size_t window = per.preperiod().size() + 2 * per.cycle().size() + 1;
    for (std::size_t j = 1; j <= window; ++j)
        if (!(a.term(j) == b.term(j))) return j;
    throw DomainError("unreachable: increasing sequence tracked a periodic one");
}

std::optional<std::size_t> first_dominance_violation(const SequenceSpec& lower,
                                                     const SequenceSpec& upper) {
    const Kind kl = lower.kind();
    const Kind ku = upper.kind();

    if (kl == Kind::EventuallyPeriodic && ku == Kind::EventuallyPeriodic) {
        std::size_t window = joint_window(lower, upper);
        for (std::size_t j = 1; j <= window; ++j)
            if (lower.term(j).compare_value(upper.term(j)) == std::strong_ordering::greater)
                return j;
        return std::nullopt;
    }

    if (kl == Kind::EventuallyPeriodic) {
        // Upper is strictly increasing; once it clears every periodic value
        // no later stage can violate.
        BigUint bound = max_term_value(lower);
        ValueIter up(upper);
        for (std::size_t j = 1; j <= kScanBudget; ++j) {
            BigUint uv = up.next();
            if (lower.term(j).value_big().compare(uv) == std::strong_ordering::greater) return j;
            if (uv.compare(bound) != std::strong_ordering::less) return std::nullopt;
        }
        budget_exceeded("dominance");
    }

    if (ku == Kind::EventuallyPeriodic) {
        // Lower is strictly increasing and unbounded; it must eventually
        // clear the periodic bound, producing a violation on the way.
        ValueIter low(lower);
        for (std::size_t j = 1; j <= kScanBudget; ++j) {
            BigUint lv = low.next();
            if (lv.compare(upper.term(j).value_big()) == std::strong_ordering::greater) return j;
        }
        budget_exceeded("dominance");
    }

    // Both prime-backed. Past the largest exclusion of either source, term j
    // is determined by the fixed offsets e = |exclusions|.
    const std::uint64_t barrier = std::max(max_listed(lower.source()), max_listed(upper.source()));
    const std::size_t el = lower.source().listed().size();
    const std::size_t eu = upper.source().listed().size();
    ValueIter low(lower);
    ValueIter up(upper);
    for (std::size_t j = 1; j <= kScanBudget; ++j) {
        BigUint lv = low.next();
        BigUint uv = up.next();
        if (lv.compare(uv) == std::strong_ordering::greater) return j;
        const bool stable = low.last_prime() > barrier && up.last_prime() > barrier;
        if (!stable) continue;
        if (kl == Kind::EnumeratedPrimes && ku == Kind::EnumeratedPrimes) {
            // Tail terms are nth_prime(j + e); fewer exclusions on the lower
            // side keeps it pointwise below.
            return el <= eu ? std::optional<std::size_t>{} : std::optional<std::size_t>{j + 1};
        }
        if (kl == Kind::EnumeratedPrimes && ku == Kind::CumulativeProducts) {
            // Products at least double each step while consecutive primes
            // less than double (Bertrand), so once upper catches up it wins.
            if (uv.compare(lv) != std::strong_ordering::less) return std::nullopt;
            continue;
        }
        if (kl == Kind::CumulativeProducts && ku == Kind::EnumeratedPrimes) {
            continue;  // products outgrow primes; the violation is ahead
        }
        // Both cumulative: with equal-or-fewer exclusions below, every future
        // factor of lower stays below the matching factor of upper.
        if (el <= eu) return std::nullopt;
        // Otherwise the factor ratio favours lower without bound; keep going.
    }
    budget_exceeded("dominance");
}

}  // namespace toroidal::seqrel
