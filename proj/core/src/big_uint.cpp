#include "toroidal/big_uint.hpp"

#include <algorithm>

#include "toroidal/error.hpp"

namespace toroidal {

BigUint::BigUint(std::uint64_t v) {
    if (v != 0) {
        limbs_.push_back(static_cast<std::uint32_t>(v));
        if (v >> 32) limbs_.push_back(static_cast<std::uint32_t>(v >> 32));
    }
}

bool BigUint::is_even() const { return limbs_.empty() || (limbs_[0] & 1u) == 0; }

BigUint& BigUint::mul(std::uint64_t m) {
    if (m == 0 || limbs_.empty()) {
        limbs_.clear();
        return *this;
    }
    unsigned __int128 carry = 0;
    for (auto& limb : limbs_) {
        unsigned __int128 cur = static_cast<unsigned __int128>(limb) * m + carry;
        limb = static_cast<std::uint32_t>(cur);
        carry = cur >> 32;
    }
    while (carry != 0) {
        limbs_.push_back(static_cast<std::uint32_t>(carry));
        carry >>= 32;
    }
    return *this;
}

BigUint& BigUint::sub(const BigUint& other) {
    if (compare(other) == std::strong_ordering::less)
        throw DomainError("BigUint subtraction would underflow");
    std::uint64_t borrow = 0;
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
        std::uint64_t rhs = (i < other.limbs_.size() ? other.limbs_[i] : 0) + borrow;
        std::uint64_t lhs = limbs_[i];
        if (lhs >= rhs) {
            limbs_[i] = static_cast<std::uint32_t>(lhs - rhs);
            borrow = 0;
        } else {
            limbs_[i] = static_cast<std::uint32_t>((lhs + (std::uint64_t{1} << 32)) - rhs);
            borrow = 1;
        }
    }
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
    return *this;
}

BigUint& BigUint::half() {
    if (!is_even()) throw DomainError("BigUint::half requires an even value");
    std::uint32_t carry = 0;
    for (std::size_t i = limbs_.size(); i-- > 0;) {
        std::uint32_t limb = limbs_[i];
        limbs_[i] = (limb >> 1) | (carry << 31);
        carry = limb & 1u;
    }
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
    return *this;
}

std::strong_ordering BigUint::compare(const BigUint& other) const {
    if (limbs_.size() != other.limbs_.size())
        return limbs_.size() <=> other.limbs_.size();
    for (std::size_t i = limbs_.size(); i-- > 0;) {
        if (limbs_[i] != other.limbs_[i]) return limbs_[i] <=> other.limbs_[i];
    }
    return std::strong_ordering::equal;
}

std::size_t BigUint::bit_length() const {
    if (limbs_.empty()) return 0;
    std::size_t bits = 32 * (limbs_.size() - 1);
    std::uint32_t top = limbs_.back();
    while (top != 0) {
        ++bits;
        top >>= 1;
    }
    return bits;
}

std::string BigUint::to_string() const {
    if (limbs_.empty()) return "0";
    std::vector<std::uint32_t> work(limbs_);
    std::string digits;
    while (!work.empty()) {
        std::uint64_t rem = 0;
        for (std::size_t i = work.size(); i-- > 0;) {
            std::uint64_t cur = (rem << 32) | work[i];
            work[i] = static_cast<std::uint32_t>(cur / 1000000000u);
            rem = cur % 1000000000u;
        }
        while (!work.empty() && work.back() == 0) work.pop_back();
        for (int i = 0; i < 9; ++i) {
            digits.push_back(static_cast<char>('0' + rem % 10));
            rem /= 10;
        }
    }
    while (digits.size() > 1 && digits.back() == '0') digits.pop_back();
    std::reverse(digits.begin(), digits.end());
    return digits;
}

}  // namespace toroidal
