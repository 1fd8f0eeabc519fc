#include "toroidal/prime_set.hpp"

#include <algorithm>
#include <charconv>

#include "toroidal/error.hpp"
#include "toroidal/primes.hpp"

namespace toroidal {

namespace {

std::vector<std::uint64_t> validated(std::vector<std::uint64_t> primes) {
    std::sort(primes.begin(), primes.end());
    primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
    for (std::uint64_t p : primes) {
        if (!is_prime(p)) throw ParseError(std::to_string(p) + " is not prime");
    }
    return primes;
}

}  // namespace

PrimeSet PrimeSet::finite(std::vector<std::uint64_t> primes) {
    PrimeSet s;
    s.finite_ = true;
    s.listed_ = validated(std::move(primes));
    return s;
}

PrimeSet PrimeSet::all() { return cofinite({}); }

PrimeSet PrimeSet::cofinite(std::vector<std::uint64_t> excluded) {
    PrimeSet s;
    s.finite_ = false;
    s.listed_ = validated(std::move(excluded));
    return s;
}

std::size_t PrimeSet::size() const {
    if (!finite_) throw DomainError("size of a cofinite prime set is infinite");
    return listed_.size();
}

bool PrimeSet::contains(std::uint64_t p) const {
    bool listed = std::binary_search(listed_.begin(), listed_.end(), p);
    if (finite_) return listed;
    return is_prime(p) && !listed;
}

std::uint64_t PrimeSet::nth_element(std::size_t index) const {
    if (index == 0) throw DomainError("prime set enumeration is 1-based");
    if (finite_) {
        if (index > listed_.size())
            throw DomainError("index " + std::to_string(index) + " beyond finite prime set of size " +
                              std::to_string(listed_.size()));
        return listed_[index - 1];
    }
    // Walk the prime enumeration skipping exclusions.
    std::size_t seen = 0;
    for (std::size_t k = 1;; ++k) {
        std::uint64_t p = nth_prime(k);
        if (std::binary_search(listed_.begin(), listed_.end(), p)) continue;
        if (++seen == index) return p;
    }
}

bool PrimeSet::sym_diff_finite(const PrimeSet& a, const PrimeSet& b) {
    return a.finite_ == b.finite_;
}

std::string PrimeSet::to_string() const {
    std::string body;
    for (std::uint64_t p : listed_) {
        if (!body.empty()) body += ',';
        body += std::to_string(p);
    }
    if (finite_) return "{" + body + "}";
    if (listed_.empty()) return "all";
    return "all\\{" + body + "}";
}

namespace {

std::vector<std::uint64_t> parse_list(std::string_view body, std::string_view full) {
    std::vector<std::uint64_t> out;
    if (body.empty()) return out;
    std::size_t start = 0;
    while (start <= body.size()) {
        std::size_t end = body.find(',', start);
        if (end == std::string_view::npos) end = body.size();
        std::string_view tok = body.substr(start, end - start);
        std::uint64_t p = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), p);
        if (ec != std::errc{} || ptr != tok.data() + tok.size())
            throw ParseError("invalid prime '" + std::string(tok) + "' in '" + std::string(full) + "'");
        out.push_back(p);
        if (end == body.size()) break;
        start = end + 1;
    }
    return out;
}

}  // namespace

PrimeSet PrimeSet::parse(std::string_view text) {
    if (text == "all") return all();
    if (text.starts_with("all\\{") && text.ends_with("}"))
        return cofinite(parse_list(text.substr(5, text.size() - 6), text));
    if (text.starts_with("{") && text.ends_with("}"))
        return finite(parse_list(text.substr(1, text.size() - 2), text));
    throw ParseError("invalid prime set '" + std::string(text) +
                     "' (expected '{..}', 'all' or 'all\\{..}')");
}

}  // namespace toroidal
