#include "toroidal/primes.hpp"

#include <mutex>
#include <vector>

#include "toroidal/error.hpp"

namespace toroidal {

bool is_prime(std::uint64_t n) {
    if (n < 4) return n >= 2;
    if (n % 2 == 0 || n % 3 == 0) return false;
    for (std::uint64_t d = 5; d <= n / d; d += 6) {
        if (n % d == 0) return false;
        if (n % (d + 2) == 0) return false;
    }
    return true;
}

namespace {

std::mutex g_table_mutex;

std::vector<std::uint64_t>& table() {
    static std::vector<std::uint64_t> t = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31};
    return t;
}

// Extends by trial division against the cached primes; the table always
// holds every prime up to its last entry, so the divisor supply suffices.
void grow_to(std::vector<std::uint64_t>& t, std::size_t count) {
    while (t.size() < count) {
        std::uint64_t c = t.back() + 2;
        for (;; c += 2) {
            bool composite = false;
            for (std::uint64_t p : t) {
                if (p > c / p) break;
                if (c % p == 0) {
                    composite = true;
                    break;
                }
            }
            if (!composite) break;
        }
        t.push_back(c);
    }
}

}  // namespace

std::uint64_t nth_prime(std::size_t index) {
    if (index == 0) throw DomainError("prime enumeration is 1-based");
    std::scoped_lock lock(g_table_mutex);
    auto& t = table();
    grow_to(t, index);
    return t[index - 1];
}

}  // namespace toroidal
