#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cgc/errors.hpp"

namespace cgc {

// Minimal arbitrary-precision unsigned integer. The degree thresholds and
// clustering bounds of the colouring lemmas overflow native integers from
// k = 3 on, so they are computed here and only ever compared, never used as
// loop bounds.
class BigUint {
  public:
    BigUint() : limbs_{0} {}
    BigUint(std::uint64_t v) : limbs_{static_cast<std::uint32_t>(v & 0xFFFFFFFFu),
                                      static_cast<std::uint32_t>(v >> 32)} {
        trim();
    }

    static BigUint pow(const BigUint& base, std::uint64_t exp) {
        BigUint r(1), b = base;
        while (exp) {
            if (exp & 1) r = r * b;
            b = b * b;
            exp >>= 1;
        }
        return r;
    }

    friend BigUint operator+(const BigUint& a, const BigUint& b) {
        BigUint r;
        r.limbs_.assign(std::max(a.limbs_.size(), b.limbs_.size()) + 1, 0);
        std::uint64_t carry = 0;
        for (std::size_t i = 0; i < r.limbs_.size(); ++i) {
            std::uint64_t s = carry;
            if (i < a.limbs_.size()) s += a.limbs_[i];
            if (i < b.limbs_.size()) s += b.limbs_[i];
            r.limbs_[i] = static_cast<std::uint32_t>(s);
            carry = s >> 32;
        }
        r.trim();
        return r;
    }

    friend BigUint operator*(const BigUint& a, const BigUint& b) {
        BigUint r;
        r.limbs_.assign(a.limbs_.size() + b.limbs_.size(), 0);
        for (std::size_t i = 0; i < a.limbs_.size(); ++i) {
            std::uint64_t carry = 0;
            for (std::size_t j = 0; j < b.limbs_.size(); ++j) {
                std::uint64_t cur = r.limbs_[i + j] +
                                    static_cast<std::uint64_t>(a.limbs_[i]) * b.limbs_[j] + carry;
                r.limbs_[i + j] = static_cast<std::uint32_t>(cur);
                carry = cur >> 32;
            }
            std::size_t j = i + b.limbs_.size();
            while (carry) {
                std::uint64_t cur = r.limbs_[j] + carry;
                r.limbs_[j] = static_cast<std::uint32_t>(cur);
                carry = cur >> 32;
                ++j;
            }
        }
        r.trim();
        return r;
    }

    friend bool operator==(const BigUint& a, const BigUint& b) { return a.limbs_ == b.limbs_; }
    friend bool operator<(const BigUint& a, const BigUint& b) {
        if (a.limbs_.size() != b.limbs_.size()) return a.limbs_.size() < b.limbs_.size();
        for (std::size_t i = a.limbs_.size(); i-- > 0;)
            if (a.limbs_[i] != b.limbs_[i]) return a.limbs_[i] < b.limbs_[i];
        return false;
    }
    friend bool operator<=(const BigUint& a, const BigUint& b) { return a < b || a == b; }
    friend bool operator>=(const BigUint& a, const BigUint& b) { return b <= a; }
    friend bool operator>(const BigUint& a, const BigUint& b) { return b < a; }

    bool fits_u64() const { return limbs_.size() <= 2; }
    std::uint64_t as_u64() const {
        if (!fits_u64()) throw InternalError("BigUint: value exceeds 64 bits");
        std::uint64_t v = limbs_[0];
        if (limbs_.size() == 2) v |= static_cast<std::uint64_t>(limbs_[1]) << 32;
        return v;
    }

    std::string str() const {
        // repeated division by 10^9; bounds printed in reports are modest
        std::vector<std::uint32_t> t = limbs_;
        std::string out;
        while (!(t.size() == 1 && t[0] == 0)) {
            std::uint64_t rem = 0;
            for (std::size_t i = t.size(); i-- > 0;) {
                std::uint64_t cur = (rem << 32) | t[i];
                t[i] = static_cast<std::uint32_t>(cur / 1000000000u);
                rem = cur % 1000000000u;
            }
            while (t.size() > 1 && t.back() == 0) t.pop_back();
            std::string chunk = std::to_string(rem);
            bool last = (t.size() == 1 && t[0] == 0);
            if (!last) chunk = std::string(9 - chunk.size(), '0') + chunk;
            out = chunk + out;
        }
        return out.empty() ? "0" : out;
    }

  private:
    std::vector<std::uint32_t> limbs_;  // little-endian base 2^32

    void trim() {
        while (limbs_.size() > 1 && limbs_.back() == 0) limbs_.pop_back();
        if (limbs_.empty()) limbs_.push_back(0);
    }
};

// High-degree threshold d(k) = (k+2) * k^k * (18 * k^(2k+1) + 1).
inline BigUint degree_threshold(int k) {
    BigUint kk(static_cast<std::uint64_t>(k));
    return BigUint(static_cast<std::uint64_t>(k + 2)) * BigUint::pow(kk, k) *
           (BigUint(18) * BigUint::pow(kk, 2 * static_cast<std::uint64_t>(k) + 1) + BigUint(1));
}

// Number of high-degree vertices that triggers the pattern-extraction pipeline:
// (k+2) * k^k.
inline BigUint high_degree_count_threshold(int k) {
    return BigUint(static_cast<std::uint64_t>(k + 2)) *
           BigUint::pow(BigUint(static_cast<std::uint64_t>(k)), k);
}

// Decide x <= mult * base^exp without materializing the power. exp may itself
// be astronomically large (it is a BigUint); the loop exits as soon as the
// partial product passes x, which for desk-scale x is after a handful of
// multiplications.
inline bool within_power_bound(const BigUint& x, const BigUint& mult, const BigUint& base,
                               const BigUint& exp) {
    if (x <= mult) return true;
    if (base <= BigUint(1)) return x <= mult;  // bound is just mult
    BigUint acc = mult, i(0);
    while (i < exp) {
        acc = acc * base;
        if (x <= acc) return true;
        i = i + BigUint(1);
    }
    return x <= acc;
}

} // namespace cgc
