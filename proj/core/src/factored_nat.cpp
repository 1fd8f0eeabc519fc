#include "toroidal/factored_nat.hpp"

#include <charconv>

#include "toroidal/error.hpp"
#include "toroidal/primes.hpp"

namespace toroidal {

namespace {

// Primes in hand-written factor literals are validated by trial division;
// keep them below 2^32 so the validation cost stays trivial.
constexpr std::uint64_t kMaxLiteralPrime = (std::uint64_t{1} << 32) - 1;

void push_factor(std::vector<FactoredNat::Factor>& out, std::uint64_t p, std::uint32_t e) {
    if (e > 0) out.emplace_back(p, e);
}

}  // namespace

FactoredNat FactoredNat::zero() {
    FactoredNat n;
    n.zero_ = true;
    return n;
}

FactoredNat FactoredNat::one() { return FactoredNat{}; }

FactoredNat FactoredNat::prime(std::uint64_t p) {
    return from_factors({{p, 1}});
}

FactoredNat FactoredNat::from_value(std::uint64_t n) {
    if (n == 0) return zero();
    FactoredNat out;
    auto strip = [&n, &out](std::uint64_t d) {
        std::uint32_t e = 0;
        while (n % d == 0) {
            n /= d;
            ++e;
        }
        push_factor(out.factors_, d, e);
    };
    strip(2);
    strip(3);
    for (std::uint64_t d = 5; d <= n / d; d += 6) {
        if (n % d == 0) strip(d);
        if (n % (d + 2) == 0) strip(d + 2);
    }
    if (n > 1) push_factor(out.factors_, n, 1);
    return out;
}

FactoredNat FactoredNat::from_factors(std::vector<Factor> factors) {
    std::uint64_t prev = 0;
    for (const auto& [p, e] : factors) {
        if (p <= prev)
            throw ParseError("factor list must have strictly increasing primes");
        if (p > kMaxLiteralPrime)
            throw ParseError("prime " + std::to_string(p) + " exceeds the literal bound 2^32-1");
        if (!is_prime(p))
            throw ParseError(std::to_string(p) + " is not prime");
        if (e == 0) throw ParseError("factor exponents must be >= 1");
        prev = p;
    }
    FactoredNat out;
    out.factors_ = std::move(factors);
    return out;
}

std::uint32_t FactoredNat::valuation(std::uint64_t p) const {
    if (zero_) throw DomainError("valuation of zero undefined");
    for (const auto& [q, e] : factors_) {
        if (q == p) return e;
        if (q > p) break;
    }
    return 0;
}

FactoredNat FactoredNat::radical() const {
    if (zero_) throw DomainError("radical of zero undefined");
    FactoredNat out;
    out.factors_.reserve(factors_.size());
    for (const auto& [p, e] : factors_) out.factors_.emplace_back(p, 1);
    return out;
}

Parity FactoredNat::parity() const {
    if (zero_) return Parity::Zero;
    return divisible_by(2) ? Parity::Even : Parity::Odd;
}

bool FactoredNat::divisible_by(std::uint64_t p) const {
    if (zero_) return true;
    return valuation(p) > 0;
}

FactoredNat FactoredNat::times(const FactoredNat& other) const {
    if (zero_ || other.zero_) return zero();
    FactoredNat out;
    out.factors_.reserve(factors_.size() + other.factors_.size());
    std::size_t i = 0, j = 0;
    while (i < factors_.size() || j < other.factors_.size()) {
        if (j == other.factors_.size() ||
            (i < factors_.size() && factors_[i].first < other.factors_[j].first)) {
            out.factors_.push_back(factors_[i++]);
        } else if (i == factors_.size() || other.factors_[j].first < factors_[i].first) {
            out.factors_.push_back(other.factors_[j++]);
        } else {
            out.factors_.emplace_back(factors_[i].first,
                                      factors_[i].second + other.factors_[j].second);
            ++i;
            ++j;
        }
    }
    return out;
}

FactoredNat FactoredNat::pow(std::uint32_t e) const {
    if (zero_) return e == 0 ? one() : zero();
    if (e == 0) return one();
    FactoredNat out;
    out.factors_.reserve(factors_.size());
    for (const auto& [p, k] : factors_) out.factors_.emplace_back(p, k * e);
    return out;
}

FactoredNat FactoredNat::divide_exact(const FactoredNat& other) const {
    if (zero_ || other.zero_) throw DomainError("exact division is defined for nonzero values");
    FactoredNat out;
    std::size_t j = 0;
    for (const auto& [p, e] : factors_) {
        std::uint32_t sub = 0;
        if (j < other.factors_.size() && other.factors_[j].first == p) sub = other.factors_[j++].second;
        if (sub > e) throw DomainError("exact division with a non-divisor");
        push_factor(out.factors_, p, e - sub);
    }
    if (j < other.factors_.size()) throw DomainError("exact division with a non-divisor");
    return out;
}

std::optional<std::uint64_t> FactoredNat::value_u64() const {
    if (zero_) return 0;
    unsigned __int128 acc = 1;
    for (const auto& [p, e] : factors_) {
        for (std::uint32_t k = 0; k < e; ++k) {
            acc *= p;
            if (acc > UINT64_MAX) return std::nullopt;
        }
    }
    return static_cast<std::uint64_t>(acc);
}

BigUint FactoredNat::value_big() const {
    if (zero_) return BigUint{};
    BigUint acc{1};
    for (const auto& [p, e] : factors_) {
        for (std::uint32_t k = 0; k < e; ++k) acc.mul(p);
    }
    return acc;
}

std::strong_ordering FactoredNat::compare_value(const FactoredNat& other) const {
    if (zero_ || other.zero_) return (zero_ ? 0 : 1) <=> (other.zero_ ? 0 : 1);
    return value_big().compare(other.value_big());
}

std::string FactoredNat::to_string() const {
    if (zero_) return "0";
    if (factors_.empty()) return "1";
    std::string out;
    for (const auto& [p, e] : factors_) {
        if (!out.empty()) out += '*';
        out += std::to_string(p);
        if (e > 1) {
            out += '^';
            out += std::to_string(e);
        }
    }
    return out;
}

namespace {

std::uint64_t parse_u64(std::string_view text, const char* what) {
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size())
        throw ParseError(std::string("invalid ") + what + ": '" + std::string(text) + "'");
    return value;
}

}  // namespace

FactoredNat FactoredNat::parse(std::string_view text) {
    if (text.empty()) throw ParseError("empty integer literal");
    if (text.find_first_of("^*") == std::string_view::npos) {
        // Plain decimal, factored on entry (bounded by the word range).
        return from_value(parse_u64(text, "integer literal"));
    }
    std::vector<Factor> factors;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('*', start);
        if (end == std::string_view::npos) end = text.size();
        std::string_view part = text.substr(start, end - start);
        if (part.empty()) throw ParseError("empty factor in '" + std::string(text) + "'");
        std::uint64_t p;
        std::uint32_t e = 1;
        if (std::size_t caret = part.find('^'); caret != std::string_view::npos) {
            p = parse_u64(part.substr(0, caret), "prime");
            std::uint64_t raw = parse_u64(part.substr(caret + 1), "exponent");
            if (raw == 0 || raw > UINT32_MAX) throw ParseError("exponent out of range");
            e = static_cast<std::uint32_t>(raw);
        } else {
            p = parse_u64(part, "prime");
        }
        factors.emplace_back(p, e);
        if (end == text.size()) break;
        start = end + 1;
    }
    return from_factors(std::move(factors));
}

}  // namespace toroidal
