#include "surg/bigint.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace surg {

namespace {
constexpr uint32_t kBase = 1u << 16;
}

BigInt::BigInt(long long v) {
    if (v == 0) return;
    sign_ = v < 0 ? -1 : 1;
    unsigned long long m = v < 0 ? -static_cast<unsigned long long>(v) : static_cast<unsigned long long>(v);
    while (m) {
        mag_.push_back(static_cast<uint32_t>(m & 0xffffu));
        m >>= 16;
    }
}

void BigInt::trim() {
    while (!mag_.empty() && mag_.back() == 0) mag_.pop_back();
    if (mag_.empty()) sign_ = 0;
}

int BigInt::cmp_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (size_t i = a.size(); i-- > 0;)
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    return 0;
}

std::vector<uint32_t> BigInt::add_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    std::vector<uint32_t> r;
    uint32_t carry = 0;
    for (size_t i = 0; i < std::max(a.size(), b.size()) || carry; ++i) {
        uint32_t s = carry;
        if (i < a.size()) s += a[i];
        if (i < b.size()) s += b[i];
        r.push_back(s & 0xffffu);
        carry = s >> 16;
    }
    return r;
}

std::vector<uint32_t> BigInt::sub_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    // requires |a| >= |b|
    std::vector<uint32_t> r;
    int32_t borrow = 0;
    for (size_t i = 0; i < a.size(); ++i) {
        int32_t s = static_cast<int32_t>(a[i]) - borrow - (i < b.size() ? static_cast<int32_t>(b[i]) : 0);
        if (s < 0) {
            s += kBase;
            borrow = 1;
        } else {
            borrow = 0;
        }
        r.push_back(static_cast<uint32_t>(s));
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

BigInt BigInt::abs() const {
    BigInt r = *this;
    if (r.sign_ < 0) r.sign_ = 1;
    return r;
}

BigInt BigInt::operator-() const {
    BigInt r = *this;
    r.sign_ = -r.sign_;
    return r;
}

BigInt BigInt::operator+(const BigInt& o) const {
    if (sign_ == 0) return o;
    if (o.sign_ == 0) return *this;
    BigInt r;
    if (sign_ == o.sign_) {
        r.sign_ = sign_;
        r.mag_ = add_mag(mag_, o.mag_);
    } else {
        int c = cmp_mag(mag_, o.mag_);
        if (c == 0) return BigInt();
        if (c > 0) {
            r.sign_ = sign_;
            r.mag_ = sub_mag(mag_, o.mag_);
        } else {
            r.sign_ = o.sign_;
            r.mag_ = sub_mag(o.mag_, mag_);
        }
    }
    r.trim();
    return r;
}

BigInt BigInt::operator-(const BigInt& o) const { return *this + (-o); }

BigInt BigInt::operator*(const BigInt& o) const {
    if (sign_ == 0 || o.sign_ == 0) return BigInt();
    BigInt r;
    r.sign_ = sign_ * o.sign_;
    r.mag_.assign(mag_.size() + o.mag_.size(), 0);
    for (size_t i = 0; i < mag_.size(); ++i) {
        uint32_t carry = 0;
        for (size_t j = 0; j < o.mag_.size() || carry; ++j) {
            uint64_t cur = r.mag_[i + j] + carry;
            if (j < o.mag_.size()) cur += static_cast<uint64_t>(mag_[i]) * o.mag_[j];
            r.mag_[i + j] = static_cast<uint32_t>(cur & 0xffffu);
            carry = static_cast<uint32_t>(cur >> 16);
        }
    }
    r.trim();
    return r;
}

void BigInt::divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
    if (b.sign_ == 0) throw std::domain_error("BigInt division by zero");
    if (cmp_mag(a.mag_, b.mag_) < 0) {
        q = BigInt();
        r = a;
        return;
    }
    // schoolbook long division on magnitudes, base 2^16
    std::vector<uint32_t> rem;
    std::vector<uint32_t> quot(a.mag_.size(), 0);
    auto cmp_rem = [&](const std::vector<uint32_t>& x) { return cmp_mag(rem, x); };
    for (size_t i = a.mag_.size(); i-- > 0;) {
        rem.insert(rem.begin(), a.mag_[i]);
        while (!rem.empty() && rem.back() == 0) rem.pop_back();
        if (cmp_rem(b.mag_) < 0) continue;
        // binary search the digit
        uint32_t lo = 1, hi = kBase - 1, digit = 0;
        while (lo <= hi) {
            uint32_t mid = lo + (hi - lo) / 2;
            // b.mag_ * mid
            std::vector<uint32_t> t;
            uint32_t carry = 0;
            for (size_t k = 0; k < b.mag_.size() || carry; ++k) {
                uint64_t cur = carry;
                if (k < b.mag_.size()) cur += static_cast<uint64_t>(b.mag_[k]) * mid;
                t.push_back(static_cast<uint32_t>(cur & 0xffffu));
                carry = static_cast<uint32_t>(cur >> 16);
            }
            while (!t.empty() && t.back() == 0) t.pop_back();
            if (cmp_rem(t) >= 0) {
                digit = mid;
                lo = mid + 1;
            } else {
                if (mid == 0) break;
                hi = mid - 1;
            }
        }
        if (digit) {
            std::vector<uint32_t> t;
            uint32_t carry = 0;
            for (size_t k = 0; k < b.mag_.size() || carry; ++k) {
                uint64_t cur = carry;
                if (k < b.mag_.size()) cur += static_cast<uint64_t>(b.mag_[k]) * digit;
                t.push_back(static_cast<uint32_t>(cur & 0xffffu));
                carry = static_cast<uint32_t>(cur >> 16);
            }
            while (!t.empty() && t.back() == 0) t.pop_back();
            rem = sub_mag(rem, t);
        }
        quot[i] = digit;
    }
    q.mag_ = std::move(quot);
    q.sign_ = a.sign_ * b.sign_;
    q.trim();
    r.mag_ = std::move(rem);
    r.sign_ = a.sign_;
    r.trim();
}

BigInt BigInt::operator/(const BigInt& o) const {
    BigInt q, r;
    divmod(*this, o, q, r);
    return q;
}

BigInt BigInt::operator%(const BigInt& o) const {
    BigInt q, r;
    divmod(*this, o, q, r);
    return r;
}

bool BigInt::operator<(const BigInt& o) const {
    if (sign_ != o.sign_) return sign_ < o.sign_;
    int c = cmp_mag(mag_, o.mag_);
    return sign_ >= 0 ? c < 0 : c > 0;
}

int BigInt::compare_magnitude(const BigInt& a, const BigInt& b) { return cmp_mag(a.mag_, b.mag_); }

std::string BigInt::to_string() const {
    if (sign_ == 0) return "0";
    // repeated division by 10^4
    std::vector<uint32_t> digits = mag_;
    std::string out;
    while (!digits.empty()) {
        uint64_t rem = 0;
        std::vector<uint32_t> next;
        for (size_t i = digits.size(); i-- > 0;) {
            uint64_t cur = (rem << 16) + digits[i];
            uint32_t d = static_cast<uint32_t>(cur / 10000);
            rem = cur % 10000;
            if (!next.empty() || d != 0) next.insert(next.begin(), d);
        }
        std::string chunk = std::to_string(rem);
        std::reverse(chunk.begin(), chunk.end());
        digits = std::move(next);
        if (digits.empty()) {
            out += chunk;
        } else {
            chunk.resize(4, '0');
            out += chunk;
        }
    }
    if (sign_ < 0) out += '-';
    std::reverse(out.begin(), out.end());
    return out;
}

long long BigInt::to_long_long() const {
    long long v = 0;
    for (size_t i = mag_.size(); i-- > 0;) {
        if (v > (std::numeric_limits<long long>::max() >> 16)) throw std::overflow_error("BigInt");
        v = (v << 16) + mag_[i];
    }
    return sign_ < 0 ? -v : v;
}

}  // namespace surg
