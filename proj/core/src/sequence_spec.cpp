#include "toroidal/sequence_spec.hpp"

#include "toroidal/error.hpp"

namespace toroidal {

SequenceSpec SequenceSpec::periodic(std::vector<FactoredNat> pre, std::vector<FactoredNat> cycle) {
    if (cycle.empty()) throw DomainError("periodic sequence needs a nonempty cycle");
    SequenceSpec s;
    s.kind_ = Kind::EventuallyPeriodic;
    s.pre_ = std::move(pre);
    s.cycle_ = std::move(cycle);
    s.source_ = PrimeSet::finite({});
    return s;
}

SequenceSpec SequenceSpec::constant(FactoredNat term) {
    return periodic({}, {std::move(term)});
}

SequenceSpec SequenceSpec::enumerated_primes(PrimeSet source) {
    if (source.is_finite())
        throw DomainError("enumerated-primes sequence needs an infinite (cofinite) source");
    SequenceSpec s;
    s.kind_ = Kind::EnumeratedPrimes;
    s.source_ = std::move(source);
    return s;
}

SequenceSpec SequenceSpec::cumulative_products(PrimeSet source) {
    if (source.is_finite())
        throw DomainError("cumulative-products sequence needs an infinite (cofinite) source");
    SequenceSpec s;
    s.kind_ = Kind::CumulativeProducts;
    s.source_ = std::move(source);
    return s;
}

FactoredNat SequenceSpec::term(std::size_t j) const {
    if (j == 0) throw DomainError("sequence terms are 1-based");
    switch (kind_) {
        case Kind::EventuallyPeriodic:
            if (j <= pre_.size()) return pre_[j - 1];
            return cycle_[(j - 1 - pre_.size()) % cycle_.size()];
        case Kind::EnumeratedPrimes:
            return FactoredNat::prime(source_.nth_element(j));
        case Kind::CumulativeProducts: {
            FactoredNat acc = FactoredNat::one();
            for (std::size_t i = 1; i <= j; ++i)
                acc = acc.times(FactoredNat::prime(source_.nth_element(i)));
            return acc;
        }
    }
    throw DomainError("unreachable sequence kind");
}

std::vector<FactoredNat> SequenceSpec::materialize(std::size_t n) const {
    std::vector<FactoredNat> out;
    out.reserve(n);
    if (kind_ == Kind::CumulativeProducts) {
        FactoredNat acc = FactoredNat::one();
        for (std::size_t i = 1; i <= n; ++i) {
            acc = acc.times(FactoredNat::prime(source_.nth_element(i)));
            out.push_back(acc);
        }
        return out;
    }
    for (std::size_t i = 1; i <= n; ++i) out.push_back(term(i));
    return out;
}

}  // namespace toroidal
