#pragma once

// Arbitrary-precision integers and exact rationals. All gradings and
// filtration levels in this library live in (1/2d)Z or (1/2k)Z; they are
// represented exactly, never as floating point.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <vector>

namespace floercone {

class bigint {
public:
    bigint() = default;
    bigint(long long v) {
        neg_ = v < 0;
        unsigned long long u = neg_ ? -static_cast<unsigned long long>(v) : static_cast<unsigned long long>(v);
        while (u) {
            mag_.push_back(static_cast<uint32_t>(u & 0xffffffffu));
            u >>= 32;
        }
    }

    static bigint from_string(const std::string& s) {
        if (s.empty()) throw std::invalid_argument("bigint: empty string");
        size_t pos = 0;
        bool neg = false;
        if (s[0] == '-' || s[0] == '+') {
            neg = (s[0] == '-');
            pos = 1;
        }
        if (pos == s.size()) throw std::invalid_argument("bigint: no digits");
        bigint r;
        for (; pos < s.size(); ++pos) {
            if (s[pos] < '0' || s[pos] > '9')
                throw std::invalid_argument("bigint: bad digit in \"" + s + "\"");
            r = r.mul_small(10);
            r = r.add_small(static_cast<uint32_t>(s[pos] - '0'));
        }
        r.neg_ = neg && !r.is_zero();
        return r;
    }

    bool is_zero() const { return mag_.empty(); }
    bool negative() const { return neg_; }
    int sign() const { return is_zero() ? 0 : (neg_ ? -1 : 1); }

    bigint operator-() const {
        bigint r = *this;
        if (!r.is_zero()) r.neg_ = !r.neg_;
        return r;
    }

    bigint abs() const {
        bigint r = *this;
        r.neg_ = false;
        return r;
    }

    friend bigint operator+(const bigint& a, const bigint& b) {
        if (a.neg_ == b.neg_) {
            bigint r;
            r.mag_ = add_mag(a.mag_, b.mag_);
            r.neg_ = a.neg_ && !r.mag_.empty();
            return r;
        }
        int c = cmp_mag(a.mag_, b.mag_);
        if (c == 0) return bigint();
        bigint r;
        if (c > 0) {
            r.mag_ = sub_mag(a.mag_, b.mag_);
            r.neg_ = a.neg_;
        } else {
            r.mag_ = sub_mag(b.mag_, a.mag_);
            r.neg_ = b.neg_;
        }
        if (r.mag_.empty()) r.neg_ = false;
        return r;
    }

    friend bigint operator-(const bigint& a, const bigint& b) { return a + (-b); }

    friend bigint operator*(const bigint& a, const bigint& b) {
        if (a.is_zero() || b.is_zero()) return bigint();
        bigint r;
        r.mag_.assign(a.mag_.size() + b.mag_.size(), 0);
        for (size_t i = 0; i < a.mag_.size(); ++i) {
            uint64_t carry = 0;
            for (size_t j = 0; j < b.mag_.size(); ++j) {
                uint64_t cur = static_cast<uint64_t>(a.mag_[i]) * b.mag_[j] + r.mag_[i + j] + carry;
                r.mag_[i + j] = static_cast<uint32_t>(cur & 0xffffffffu);
                carry = cur >> 32;
            }
            size_t k = i + b.mag_.size();
            while (carry) {
                uint64_t cur = r.mag_[k] + carry;
                r.mag_[k] = static_cast<uint32_t>(cur & 0xffffffffu);
                carry = cur >> 32;
                ++k;
            }
        }
        r.trim();
        r.neg_ = (a.neg_ != b.neg_);
        return r;
    }

    // Truncated division (quotient rounds toward zero, like C).
    static void divmod(const bigint& a, const bigint& b, bigint& q, bigint& r) {
        if (b.is_zero()) throw std::domain_error("bigint: division by zero");
        if (cmp_mag(a.mag_, b.mag_) < 0) {
            q = bigint();
            r = a;
            return;
        }
        // schoolbook long division on 32-bit limbs
        bigint rem;
        std::vector<uint32_t> quo(a.mag_.size(), 0);
        for (size_t i = a.mag_.size(); i-- > 0;) {
            rem.shift_limbs_left();
            rem.mag_.empty() ? void(rem.mag_.push_back(a.mag_[i])) : void(rem.mag_[0] = a.mag_[i]);
            rem.trim();
            // binary search the digit
            uint32_t lo = 0, hi = 0xffffffffu, digit = 0;
            while (lo <= hi) {
                uint32_t mid = lo + (hi - lo) / 2;
                bigint t = b.abs().mul_small(mid);
                if (cmp_mag(t.mag_, rem.mag_) <= 0) {
                    digit = mid;
                    if (mid == 0xffffffffu) break;
                    lo = mid + 1;
                } else {
                    if (mid == 0) break;
                    hi = mid - 1;
                }
            }
            quo[i] = digit;
            rem = rem - b.abs().mul_small(digit);
        }
        q.mag_ = std::move(quo);
        q.trim();
        q.neg_ = (a.neg_ != b.neg_) && !q.mag_.empty();
        r = rem;
        r.neg_ = a.neg_ && !r.mag_.empty();
    }

    friend bigint operator/(const bigint& a, const bigint& b) {
        bigint q, r;
        divmod(a, b, q, r);
        return q;
    }

    friend bigint operator%(const bigint& a, const bigint& b) {
        bigint q, r;
        divmod(a, b, q, r);
        return r;
    }

    friend bool operator==(const bigint& a, const bigint& b) {
        return a.neg_ == b.neg_ && a.mag_ == b.mag_;
    }
    friend bool operator!=(const bigint& a, const bigint& b) { return !(a == b); }
    friend bool operator<(const bigint& a, const bigint& b) {
        if (a.neg_ != b.neg_) return a.neg_;
        int c = cmp_mag(a.mag_, b.mag_);
        return a.neg_ ? c > 0 : c < 0;
    }
    friend bool operator>(const bigint& a, const bigint& b) { return b < a; }
    friend bool operator<=(const bigint& a, const bigint& b) { return !(b < a); }
    friend bool operator>=(const bigint& a, const bigint& b) { return !(a < b); }

    static bigint gcd(bigint a, bigint b) {
        a.neg_ = b.neg_ = false;
        while (!b.is_zero()) {
            bigint r = a % b;
            a = b;
            b = r;
        }
        return a;
    }

    std::string to_string() const {
        if (is_zero()) return "0";
        bigint t = abs();
        std::string out;
        bigint ten(10);
        while (!t.is_zero()) {
            bigint q, r;
            divmod(t, ten, q, r);
            out.push_back(static_cast<char>('0' + (r.mag_.empty() ? 0 : r.mag_[0])));
            t = q;
        }
        if (neg_) out.push_back('-');
        std::reverse(out.begin(), out.end());
        return out;
    }

    // Valid only when the value fits; callers use this for exponents and
    // indices that are small by construction.
    long long to_ll() const {
        unsigned long long v = 0;
        if (mag_.size() > 2) throw std::overflow_error("bigint: does not fit in long long");
        for (size_t i = mag_.size(); i-- > 0;) v = (v << 32) | mag_[i];
        if (!neg_ && v > 0x7fffffffffffffffull) throw std::overflow_error("bigint: does not fit in long long");
        if (neg_ && v > 0x8000000000000000ull) throw std::overflow_error("bigint: does not fit in long long");
        return neg_ ? -static_cast<long long>(v) : static_cast<long long>(v);
    }

private:
    std::vector<uint32_t> mag_;  // little-endian limbs, no trailing zeros
    bool neg_ = false;

    void trim() {
        while (!mag_.empty() && mag_.back() == 0) mag_.pop_back();
        if (mag_.empty()) neg_ = false;
    }

    void shift_limbs_left() {
        if (!mag_.empty()) mag_.insert(mag_.begin(), 0);
    }

    bigint mul_small(uint32_t m) const {
        bigint r;
        if (m == 0 || is_zero()) return r;
        uint64_t carry = 0;
        r.mag_.reserve(mag_.size() + 1);
        for (uint32_t limb : mag_) {
            uint64_t cur = static_cast<uint64_t>(limb) * m + carry;
            r.mag_.push_back(static_cast<uint32_t>(cur & 0xffffffffu));
            carry = cur >> 32;
        }
        if (carry) r.mag_.push_back(static_cast<uint32_t>(carry));
        r.neg_ = neg_;
        return r;
    }

    bigint add_small(uint32_t v) const {
        return *this + bigint(static_cast<long long>(v));
    }

    static int cmp_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
        if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
        for (size_t i = a.size(); i-- > 0;) {
            if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
        }
        return 0;
    }

    static std::vector<uint32_t> add_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
        const std::vector<uint32_t>& big = a.size() >= b.size() ? a : b;
        const std::vector<uint32_t>& small = a.size() >= b.size() ? b : a;
        std::vector<uint32_t> r = big;
        uint64_t carry = 0;
        for (size_t i = 0; i < r.size(); ++i) {
            uint64_t cur = static_cast<uint64_t>(r[i]) + (i < small.size() ? small[i] : 0) + carry;
            r[i] = static_cast<uint32_t>(cur & 0xffffffffu);
            carry = cur >> 32;
            if (carry == 0 && i >= small.size()) break;
        }
        if (carry) r.push_back(1);
        return r;
    }

    // requires |a| >= |b|
    static std::vector<uint32_t> sub_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
        std::vector<uint32_t> r = a;
        int64_t borrow = 0;
        for (size_t i = 0; i < r.size(); ++i) {
            int64_t cur = static_cast<int64_t>(r[i]) - (i < b.size() ? b[i] : 0) - borrow;
            if (cur < 0) {
                cur += (1ll << 32);
                borrow = 1;
            } else {
                borrow = 0;
            }
            r[i] = static_cast<uint32_t>(cur);
            if (borrow == 0 && i >= b.size()) break;
        }
        while (!r.empty() && r.back() == 0) r.pop_back();
        return r;
    }
};

// Exact rational number, always kept in lowest terms with positive denominator.
class rational {
public:
    rational() : num_(0), den_(1) {}
    rational(long long n) : num_(n), den_(1) {}
    rational(long long n, long long d) : num_(n), den_(d) { normalize(); }
    rational(bigint n, bigint d) : num_(std::move(n)), den_(std::move(d)) { normalize(); }

    // Accepts "p", "p/q", with optional sign. Rejects anything else.
    static rational parse(const std::string& s) {
        size_t slash = s.find('/');
        if (slash == std::string::npos)
            return rational(bigint::from_string(s), bigint(1));
        return rational(bigint::from_string(s.substr(0, slash)),
                        bigint::from_string(s.substr(slash + 1)));
    }

    const bigint& num() const { return num_; }
    const bigint& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_integer() const { return den_ == bigint(1); }
    int sign() const { return num_.sign(); }

    friend rational operator+(const rational& a, const rational& b) {
        return rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend rational operator-(const rational& a, const rational& b) {
        return rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend rational operator*(const rational& a, const rational& b) {
        return rational(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend rational operator/(const rational& a, const rational& b) {
        if (b.is_zero()) throw std::domain_error("rational: division by zero");
        return rational(a.num_ * b.den_, a.den_ * b.num_);
    }
    rational operator-() const { return rational(-num_, den_); }

    friend bool operator==(const rational& a, const rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const rational& a, const rational& b) { return !(a == b); }
    friend bool operator<(const rational& a, const rational& b) {
        return a.num_ * b.den_ < b.num_ * a.den_;
    }
    friend bool operator>(const rational& a, const rational& b) { return b < a; }
    friend bool operator<=(const rational& a, const rational& b) { return !(b < a); }
    friend bool operator>=(const rational& a, const rational& b) { return !(a < b); }

    bigint floor() const {
        bigint q, r;
        bigint::divmod(num_, den_, q, r);
        if (!r.is_zero() && num_.negative()) q = q - bigint(1);
        return q;
    }

    bigint ceil() const { return -(-*this).floor(); }

    // fractional part in [0, 1)
    rational mod1() const { return *this - rational(floor(), bigint(1)); }

    long long to_ll() const {
        if (!is_integer()) throw std::domain_error("rational: not an integer: " + to_string());
        return num_.to_ll();
    }

    std::string to_string() const {
        if (is_integer()) return num_.to_string();
        return num_.to_string() + "/" + den_.to_string();
    }

private:
    bigint num_, den_;

    void normalize() {
        if (den_.is_zero()) throw std::domain_error("rational: zero denominator");
        if (den_.negative()) {
            num_ = -num_;
            den_ = -den_;
        }
        if (num_.is_zero()) {
            den_ = bigint(1);
            return;
        }
        bigint g = bigint::gcd(num_, den_);
        num_ = num_ / g;
        den_ = den_ / g;
    }
};

inline rational rat(long long n, long long d = 1) { return rational(n, d); }

}  // namespace floercone
