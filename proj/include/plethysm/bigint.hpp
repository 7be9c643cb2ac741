#pragma once

#include <compare>
#include <cstdint>
#include <cstdlib>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace plethysm {

// Arbitrary-precision signed integer, sign-magnitude with base 10^9 limbs.
// Covers coefficient sums, z-values and determinant cofactor growth at the
// scales this library targets; not a general bignum (no bit ops, no powmod).
class BigInt {
public:
    BigInt() = default;

    BigInt(long long v) {  // NOLINT: implicit by design, coefficients read naturally
        if (v == 0) return;
        sign_ = v < 0 ? -1 : 1;
        unsigned long long u = v < 0 ? 0ULL - static_cast<unsigned long long>(v)
                                     : static_cast<unsigned long long>(v);
        while (u != 0) {
            mag_.push_back(static_cast<uint32_t>(u % kBase));
            u /= kBase;
        }
    }

    bool is_zero() const { return sign_ == 0; }
    int signum() const { return sign_; }

    bool fits_int64() const {
        // |v| <= 2^63 - 1 = 9223372036854775807 has three base-1e9 limbs
        // (9,223372036,854775807).
        if (mag_.size() > 3) return false;
        if (mag_.size() < 3) return true;
        unsigned long long hi = mag_[2];
        if (hi > 9) return hi < 9;
        unsigned long long v =
            (hi * kBase + mag_[1]) * static_cast<unsigned long long>(kBase) + mag_[0];
        return sign_ < 0 ? v <= 9223372036854775808ULL : v <= 9223372036854775807ULL;
    }

    long long to_int64() const {
        if (!fits_int64()) throw std::overflow_error("BigInt: value does not fit in 64 bits");
        unsigned long long v = 0;
        for (size_t i = mag_.size(); i-- > 0;) v = v * kBase + mag_[i];
        if (sign_ < 0) return -static_cast<long long>(v - 1) - 1;
        return static_cast<long long>(v);
    }

    BigInt operator-() const {
        BigInt r = *this;
        r.sign_ = -r.sign_;
        return r;
    }

    BigInt abs() const {
        BigInt r = *this;
        if (r.sign_ < 0) r.sign_ = 1;
        return r;
    }

    friend BigInt operator+(const BigInt& a, const BigInt& b) {
        if (a.sign_ == 0) return b;
        if (b.sign_ == 0) return a;
        BigInt r;
        if (a.sign_ == b.sign_) {
            r.mag_ = add_mag(a.mag_, b.mag_);
            r.sign_ = a.sign_;
            return r;
        }
        int c = cmp_mag(a.mag_, b.mag_);
        if (c == 0) return BigInt{};
        if (c > 0) {
            r.mag_ = sub_mag(a.mag_, b.mag_);
            r.sign_ = a.sign_;
        } else {
            r.mag_ = sub_mag(b.mag_, a.mag_);
            r.sign_ = b.sign_;
        }
        return r;
    }

    friend BigInt operator-(const BigInt& a, const BigInt& b) { return a + (-b); }

    friend BigInt operator*(const BigInt& a, const BigInt& b) {
        if (a.sign_ == 0 || b.sign_ == 0) return BigInt{};
        BigInt r;
        r.sign_ = a.sign_ * b.sign_;
        r.mag_.assign(a.mag_.size() + b.mag_.size(), 0);
        for (size_t i = 0; i < a.mag_.size(); ++i) {
            unsigned long long carry = 0;
            for (size_t j = 0; j < b.mag_.size(); ++j) {
                unsigned long long cur = r.mag_[i + j] +
                                         static_cast<unsigned long long>(a.mag_[i]) * b.mag_[j] +
                                         carry;
                r.mag_[i + j] = static_cast<uint32_t>(cur % kBase);
                carry = cur / kBase;
            }
            size_t j = i + b.mag_.size();
            while (carry != 0) {
                unsigned long long cur = r.mag_[j] + carry;
                r.mag_[j] = static_cast<uint32_t>(cur % kBase);
                carry = cur / kBase;
                ++j;
            }
        }
        r.trim();
        return r;
    }

    // Truncated division (C++ semantics): quotient rounds toward zero, the
    // remainder carries the dividend's sign.
    friend BigInt operator/(const BigInt& a, const BigInt& b) { return divmod(a, b).first; }
    friend BigInt operator%(const BigInt& a, const BigInt& b) { return divmod(a, b).second; }

    static std::pair<BigInt, BigInt> divmod(const BigInt& a, const BigInt& b) {
        if (b.sign_ == 0) throw std::domain_error("BigInt: division by zero");
        if (a.sign_ == 0) return {BigInt{}, BigInt{}};
        int c = cmp_mag(a.mag_, b.mag_);
        if (c < 0) return {BigInt{}, a};
        BigInt q, r;
        divmod_mag(a.mag_, b.mag_, q.mag_, r.mag_);
        q.sign_ = q.mag_.empty() ? 0 : a.sign_ * b.sign_;
        r.sign_ = r.mag_.empty() ? 0 : a.sign_;
        return {q, r};
    }

    BigInt& operator+=(const BigInt& o) { return *this = *this + o; }
    BigInt& operator-=(const BigInt& o) { return *this = *this - o; }
    BigInt& operator*=(const BigInt& o) { return *this = *this * o; }
    BigInt& operator/=(const BigInt& o) { return *this = *this / o; }

    friend bool operator==(const BigInt& a, const BigInt& b) {
        return a.sign_ == b.sign_ && a.mag_ == b.mag_;
    }

    friend std::strong_ordering operator<=>(const BigInt& a, const BigInt& b) {
        if (a.sign_ != b.sign_) return a.sign_ <=> b.sign_;
        int c = cmp_mag(a.mag_, b.mag_) * a.sign_;
        return c <=> 0;
    }

    friend BigInt gcd(BigInt a, BigInt b) {
        a.sign_ = a.mag_.empty() ? 0 : 1;
        b.sign_ = b.mag_.empty() ? 0 : 1;
        // values fitting two limbs (< 10^18) take the word-sized loop
        while (!b.is_zero()) {
            if (a.mag_.size() <= 2 && b.mag_.size() <= 2) {
                unsigned long long x = a.to_u64(), y = b.to_u64();
                while (y != 0) {
                    unsigned long long t = x % y;
                    x = y;
                    y = t;
                }
                return BigInt{static_cast<long long>(x)};
            }
            BigInt t = a % b;
            a = b;
            b = t;
        }
        return a;
    }

    std::string to_string() const {
        if (sign_ == 0) return "0";
        std::string s = sign_ < 0 ? "-" : "";
        s += std::to_string(mag_.back());
        char buf[10];
        for (size_t i = mag_.size() - 1; i-- > 0;) {
            std::snprintf(buf, sizeof buf, "%09u", mag_[i]);
            s += buf;
        }
        return s;
    }

    friend std::ostream& operator<<(std::ostream& os, const BigInt& v) {
        return os << v.to_string();
    }

private:
    static constexpr uint32_t kBase = 1000000000;

    int sign_ = 0;                // -1, 0, +1; mag_ empty iff sign_ == 0
    std::vector<uint32_t> mag_;   // little-endian limbs, no leading zero limb

    void trim() {
        while (!mag_.empty() && mag_.back() == 0) mag_.pop_back();
        if (mag_.empty()) sign_ = 0;
    }

    unsigned long long to_u64() const {
        unsigned long long v = 0;
        for (size_t i = mag_.size(); i-- > 0;) v = v * kBase + mag_[i];
        return v;
    }

    static int cmp_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
        if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
        for (size_t i = a.size(); i-- > 0;)
            if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
        return 0;
    }

    static std::vector<uint32_t> add_mag(const std::vector<uint32_t>& a,
                                         const std::vector<uint32_t>& b) {
        const auto& big = a.size() >= b.size() ? a : b;
        const auto& small = a.size() >= b.size() ? b : a;
        std::vector<uint32_t> r(big.size() + 1, 0);
        uint32_t carry = 0;
        for (size_t i = 0; i < big.size(); ++i) {
            uint32_t cur = big[i] + carry + (i < small.size() ? small[i] : 0);
            if (cur >= kBase) {
                cur -= kBase;
                carry = 1;
            } else {
                carry = 0;
            }
            r[i] = cur;
        }
        r[big.size()] = carry;
        while (!r.empty() && r.back() == 0) r.pop_back();
        return r;
    }

    // requires |a| >= |b|
    static std::vector<uint32_t> sub_mag(const std::vector<uint32_t>& a,
                                         const std::vector<uint32_t>& b) {
        std::vector<uint32_t> r(a.size(), 0);
        int32_t borrow = 0;
        for (size_t i = 0; i < a.size(); ++i) {
            int64_t cur = static_cast<int64_t>(a[i]) - borrow - (i < b.size() ? b[i] : 0);
            if (cur < 0) {
                cur += kBase;
                borrow = 1;
            } else {
                borrow = 0;
            }
            r[i] = static_cast<uint32_t>(cur);
        }
        while (!r.empty() && r.back() == 0) r.pop_back();
        return r;
    }

    static std::vector<uint32_t> mul_small(const std::vector<uint32_t>& a, uint32_t d) {
        if (d == 0) return {};
        std::vector<uint32_t> r(a.size() + 1, 0);
        unsigned long long carry = 0;
        for (size_t i = 0; i < a.size(); ++i) {
            unsigned long long cur = static_cast<unsigned long long>(a[i]) * d + carry;
            r[i] = static_cast<uint32_t>(cur % kBase);
            carry = cur / kBase;
        }
        r[a.size()] = static_cast<uint32_t>(carry);
        while (!r.empty() && r.back() == 0) r.pop_back();
        return r;
    }

    // Schoolbook long division on magnitudes; each quotient limb found by
    // binary search (numbers here are a handful of limbs, speed is irrelevant).
    static void divmod_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b,
                           std::vector<uint32_t>& q, std::vector<uint32_t>& rem) {
        q.assign(a.size(), 0);
        rem.clear();
        for (size_t i = a.size(); i-- > 0;) {
            rem.insert(rem.begin(), a[i]);
            while (!rem.empty() && rem.back() == 0) rem.pop_back();
            uint32_t lo = 0, hi = kBase - 1, digit = 0;
            while (lo <= hi) {
                uint32_t mid = lo + (hi - lo) / 2;
                if (cmp_mag(mul_small(b, mid), rem) <= 0) {
                    digit = mid;
                    lo = mid + 1;
                } else {
                    if (mid == 0) break;
                    hi = mid - 1;
                }
            }
            q[i] = digit;
            if (digit != 0) rem = sub_mag(rem, mul_small(b, digit));
        }
        while (!q.empty() && q.back() == 0) q.pop_back();
    }
};

}  // namespace plethysm
