#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <cstdio>
#include <string>
#include <string_view>
#include <vector>

#include "visipoly/errors.hpp"

namespace visipoly {

// Signed arbitrary-precision integer, sign + magnitude in base-1e9 limbs
// (little-endian). Supports exactly what exact set counting needs:
// add, subtract, multiply, compare, decimal I/O. No division.
//
// Zero is the empty limb vector with negative() == false.
class BigInt {
public:
    BigInt() = default;

    BigInt(long long v) {  // NOLINT: implicit by design, literals read naturally
        bool neg = v < 0;
        // avoid overflow on LLONG_MIN
        unsigned long long mag = neg ? ~static_cast<unsigned long long>(v) + 1ull
                                     : static_cast<unsigned long long>(v);
        while (mag) {
            limbs_.push_back(static_cast<std::uint32_t>(mag % kBase));
            mag /= kBase;
        }
        negative_ = neg && !limbs_.empty();
    }

    BigInt(int v) : BigInt(static_cast<long long>(v)) {}

    static BigInt from_uint64(std::uint64_t mag) {
        BigInt r;
        while (mag) {
            r.limbs_.push_back(static_cast<std::uint32_t>(mag % kBase));
            mag /= kBase;
        }
        return r;
    }

    static BigInt from_string(std::string_view s) {
        bool neg = false;
        if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
            neg = s.front() == '-';
            s.remove_prefix(1);
        }
        if (s.empty())
            throw validity_error("BigInt: empty decimal string");
        for (char c : s)
            if (c < '0' || c > '9')
                throw validity_error("BigInt: invalid decimal digit");
        BigInt r;
        for (std::size_t end = s.size(); end > 0;) {
            std::size_t begin = end >= 9 ? end - 9 : 0;
            std::uint32_t limb = 0;
            for (std::size_t i = begin; i < end; ++i)
                limb = limb * 10 + static_cast<std::uint32_t>(s[i] - '0');
            r.limbs_.push_back(limb);
            end = begin;
        }
        r.trim();
        r.negative_ = neg && !r.is_zero();
        return r;
    }

    bool is_zero() const { return limbs_.empty(); }
    bool negative() const { return negative_; }

    int signum() const { return is_zero() ? 0 : (negative_ ? -1 : 1); }

    std::string to_string() const {
        if (is_zero()) return "0";
        std::string out = negative_ ? "-" : "";
        out += std::to_string(limbs_.back());
        char buf[10];
        for (std::size_t i = limbs_.size() - 1; i-- > 0;) {
            std::snprintf(buf, sizeof buf, "%09u", limbs_[i]);
            out += buf;
        }
        return out;
    }

    friend bool operator==(const BigInt& a, const BigInt& b) {
        return a.negative_ == b.negative_ && a.limbs_ == b.limbs_;
    }

    friend std::strong_ordering operator<=>(const BigInt& a, const BigInt& b) {
        if (a.negative_ != b.negative_)
            return a.negative_ ? std::strong_ordering::less : std::strong_ordering::greater;
        auto mag = cmp_magnitude(a.limbs_, b.limbs_);
        return a.negative_ ? 0 <=> mag : mag <=> 0;
    }

    BigInt operator-() const {
        BigInt r = *this;
        if (!r.is_zero()) r.negative_ = !r.negative_;
        return r;
    }

    friend BigInt operator+(const BigInt& a, const BigInt& b) {
        if (a.negative_ == b.negative_) {
            BigInt r;
            r.limbs_ = add_magnitude(a.limbs_, b.limbs_);
            r.negative_ = a.negative_ && !r.limbs_.empty();
            return r;
        }
        // opposite signs: larger magnitude wins
        int mag = cmp_magnitude(a.limbs_, b.limbs_);
        if (mag == 0) return BigInt{};
        BigInt r;
        if (mag > 0) {
            r.limbs_ = sub_magnitude(a.limbs_, b.limbs_);
            r.negative_ = a.negative_;
        } else {
            r.limbs_ = sub_magnitude(b.limbs_, a.limbs_);
            r.negative_ = b.negative_;
        }
        r.negative_ = r.negative_ && !r.limbs_.empty();
        return r;
    }

    friend BigInt operator-(const BigInt& a, const BigInt& b) { return a + (-b); }

    friend BigInt operator*(const BigInt& a, const BigInt& b) {
        if (a.is_zero() || b.is_zero()) return BigInt{};
        BigInt r;
        r.limbs_.assign(a.limbs_.size() + b.limbs_.size(), 0);
        for (std::size_t i = 0; i < a.limbs_.size(); ++i) {
            std::uint64_t carry = 0;
            for (std::size_t j = 0; j < b.limbs_.size(); ++j) {
                std::uint64_t cur = r.limbs_[i + j] +
                                    static_cast<std::uint64_t>(a.limbs_[i]) * b.limbs_[j] + carry;
                r.limbs_[i + j] = static_cast<std::uint32_t>(cur % kBase);
                carry = cur / kBase;
            }
            std::size_t k = i + b.limbs_.size();
            while (carry) {
                std::uint64_t cur = r.limbs_[k] + carry;
                r.limbs_[k] = static_cast<std::uint32_t>(cur % kBase);
                carry = cur / kBase;
                ++k;
            }
        }
        r.trim();
        r.negative_ = a.negative_ != b.negative_;
        return r;
    }

    BigInt& operator+=(const BigInt& o) { return *this = *this + o; }
    BigInt& operator-=(const BigInt& o) { return *this = *this - o; }
    BigInt& operator*=(const BigInt& o) { return *this = *this * o; }

private:
    static constexpr std::uint32_t kBase = 1'000'000'000;

    void trim() {
        while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
        if (limbs_.empty()) negative_ = false;
    }

    static int cmp_magnitude(const std::vector<std::uint32_t>& a,
                             const std::vector<std::uint32_t>& b) {
        if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
        for (std::size_t i = a.size(); i-- > 0;)
            if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
        return 0;
    }

    static std::vector<std::uint32_t> add_magnitude(const std::vector<std::uint32_t>& a,
                                                    const std::vector<std::uint32_t>& b) {
        std::vector<std::uint32_t> r(std::max(a.size(), b.size()) + 1, 0);
        std::uint64_t carry = 0;
        for (std::size_t i = 0; i + 1 < r.size() || carry; ++i) {
            std::uint64_t cur = carry;
            if (i < a.size()) cur += a[i];
            if (i < b.size()) cur += b[i];
            r[i] = static_cast<std::uint32_t>(cur % kBase);
            carry = cur / kBase;
        }
        while (!r.empty() && r.back() == 0) r.pop_back();
        return r;
    }

    // requires magnitude(a) >= magnitude(b)
    static std::vector<std::uint32_t> sub_magnitude(const std::vector<std::uint32_t>& a,
                                                    const std::vector<std::uint32_t>& b) {
        std::vector<std::uint32_t> r = a;
        std::int64_t borrow = 0;
        for (std::size_t i = 0; i < r.size(); ++i) {
            std::int64_t cur = static_cast<std::int64_t>(r[i]) - borrow -
                               (i < b.size() ? static_cast<std::int64_t>(b[i]) : 0);
            if (cur < 0) {
                cur += kBase;
                borrow = 1;
            } else {
                borrow = 0;
            }
            r[i] = static_cast<std::uint32_t>(cur);
        }
        while (!r.empty() && r.back() == 0) r.pop_back();
        return r;
    }

    bool negative_ = false;
    std::vector<std::uint32_t> limbs_;
};

}  // namespace visipoly
