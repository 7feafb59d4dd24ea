#ifndef FLEXICOLOR_BIGNAT_HPP
#define FLEXICOLOR_BIGNAT_HPP

#include <cstdint>
#include <string>
#include <vector>
#include <stdexcept>

namespace flexicolor {

// Minimal arbitrary-precision natural number: just enough for the exact
// evaluation of binomial sums (add, multiply/divide by machine words).
// Limbs are base 10^9, least significant first.
class BigNat {
public:
    BigNat() : limbs_{0} {}
    BigNat(std::uint64_t v) {
        do {
            limbs_.push_back(static_cast<std::uint32_t>(v % BASE));
            v /= BASE;
        } while (v > 0);
    }

    BigNat& operator+=(const BigNat& other) {
        std::uint64_t carry = 0;
        std::size_t len = std::max(limbs_.size(), other.limbs_.size());
        limbs_.resize(len, 0);
        for (std::size_t i = 0; i < len; ++i) {
            std::uint64_t sum = carry + limbs_[i] +
                                (i < other.limbs_.size() ? other.limbs_[i] : 0);
            limbs_[i] = static_cast<std::uint32_t>(sum % BASE);
            carry = sum / BASE;
        }
        if (carry)
            limbs_.push_back(static_cast<std::uint32_t>(carry));
        return *this;
    }

    BigNat& mul_small(std::uint64_t m) {
        std::uint64_t carry = 0;
        for (auto& limb : limbs_) {
            // limb < 10^9 and m <= 2^32 keeps the product within uint64 range
            // only for m < ~1.8*10^10; callers pass small factors.
            std::uint64_t prod = static_cast<std::uint64_t>(limb) * m + carry;
            limb = static_cast<std::uint32_t>(prod % BASE);
            carry = prod / BASE;
        }
        while (carry) {
            limbs_.push_back(static_cast<std::uint32_t>(carry % BASE));
            carry /= BASE;
        }
        trim();
        return *this;
    }

    // Exact division; throws if a remainder would be left.
    BigNat& div_small(std::uint64_t d) {
        if (d == 0)
            throw std::invalid_argument("BigNat: division by zero");
        std::uint64_t rem = 0;
        for (std::size_t i = limbs_.size(); i-- > 0;) {
            std::uint64_t cur = rem * BASE + limbs_[i];
            limbs_[i] = static_cast<std::uint32_t>(cur / d);
            rem = cur % d;
        }
        if (rem != 0)
            throw std::invalid_argument("BigNat: inexact division");
        trim();
        return *this;
    }

    bool fits_u64() const {
        // 3 limbs can exceed 2^64; compare against the decomposition of max.
        if (limbs_.size() > 3)
            return false;
        if (limbs_.size() < 3)
            return true;
        static const BigNat max64(UINT64_MAX);
        return !(max64 < *this);
    }

    std::uint64_t to_u64() const {
        std::uint64_t v = 0;
        for (std::size_t i = limbs_.size(); i-- > 0;)
            v = v * BASE + limbs_[i];
        return v;
    }

    friend bool operator<(const BigNat& a, const BigNat& b) {
        if (a.limbs_.size() != b.limbs_.size())
            return a.limbs_.size() < b.limbs_.size();
        for (std::size_t i = a.limbs_.size(); i-- > 0;)
            if (a.limbs_[i] != b.limbs_[i])
                return a.limbs_[i] < b.limbs_[i];
        return false;
    }
    friend bool operator==(const BigNat& a, const BigNat& b) {
        return a.limbs_ == b.limbs_;
    }
    friend bool operator<=(const BigNat& a, const BigNat& b) { return !(b < a); }

    std::string str() const {
        std::string out = std::to_string(limbs_.back());
        for (std::size_t i = limbs_.size() - 1; i-- > 0;) {
            std::string part = std::to_string(limbs_[i]);
            out += std::string(9 - part.size(), '0') + part;
        }
        return out;
    }

    // Exact binomial coefficient via the multiplicative formula.
    static BigNat binomial(std::uint64_t n, std::uint64_t k) {
        if (k > n)
            return BigNat(0);
        if (k > n - k)
            k = n - k;
        BigNat result(1);
        for (std::uint64_t j = 1; j <= k; ++j) {
            result.mul_small(n - k + j);
            result.div_small(j);
        }
        return result;
    }

private:
    static constexpr std::uint64_t BASE = 1000000000ULL;

    void trim() {
        while (limbs_.size() > 1 && limbs_.back() == 0)
            limbs_.pop_back();
    }

    std::vector<std::uint32_t> limbs_;
};

} // namespace flexicolor

#endif
