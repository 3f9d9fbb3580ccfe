#include "fmlimit/bigint.hpp"

#include <algorithm>
#include <stdexcept>

namespace fmlimit {

namespace {
constexpr uint64_t kBase = 1ull << 32;
}

BigInt::BigInt(long long v) {
    negative_ = v < 0;
    // careful with LLONG_MIN: negate in unsigned space
    uint64_t u = negative_ ? ~static_cast<uint64_t>(v) + 1 : static_cast<uint64_t>(v);
    while (u) {
        limbs_.push_back(static_cast<uint32_t>(u & 0xffffffffu));
        u >>= 32;
    }
}

BigInt::BigInt(const std::string& decimal) {
    size_t i = 0;
    bool neg = false;
    if (i < decimal.size() && (decimal[i] == '-' || decimal[i] == '+')) {
        neg = decimal[i] == '-';
        ++i;
    }
    if (i == decimal.size()) throw std::invalid_argument("BigInt: empty decimal string");
    BigInt acc;
    for (; i < decimal.size(); ++i) {
        char c = decimal[i];
        if (c < '0' || c > '9') throw std::invalid_argument("BigInt: bad digit in decimal string");
        acc = acc * BigInt(10) + BigInt(c - '0');
    }
    limbs_ = std::move(acc.limbs_);
    negative_ = neg && !limbs_.empty();
}

BigInt BigInt::factorial(unsigned n) {
    BigInt r(1);
    for (unsigned k = 2; k <= n; ++k) r *= BigInt(static_cast<long long>(k));
    return r;
}

void BigInt::trim() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
    if (limbs_.empty()) negative_ = false;
}

BigInt BigInt::operator-() const {
    BigInt r = *this;
    if (!r.limbs_.empty()) r.negative_ = !r.negative_;
    return r;
}

BigInt BigInt::abs() const {
    BigInt r = *this;
    r.negative_ = false;
    return r;
}

int BigInt::cmp_abs(const BigInt& a, const BigInt& b) {
    if (a.limbs_.size() != b.limbs_.size())
        return a.limbs_.size() < b.limbs_.size() ? -1 : 1;
    for (size_t i = a.limbs_.size(); i-- > 0;)
        if (a.limbs_[i] != b.limbs_[i]) return a.limbs_[i] < b.limbs_[i] ? -1 : 1;
    return 0;
}

BigInt BigInt::add_abs(const BigInt& a, const BigInt& b) {
    BigInt r;
    r.limbs_.resize(std::max(a.limbs_.size(), b.limbs_.size()) + 1, 0);
    uint64_t carry = 0;
    for (size_t i = 0; i < r.limbs_.size(); ++i) {
        uint64_t s = carry;
        if (i < a.limbs_.size()) s += a.limbs_[i];
        if (i < b.limbs_.size()) s += b.limbs_[i];
        r.limbs_[i] = static_cast<uint32_t>(s & 0xffffffffu);
        carry = s >> 32;
    }
    r.trim();
    return r;
}

BigInt BigInt::sub_abs(const BigInt& a, const BigInt& b) {
    BigInt r;
    r.limbs_.resize(a.limbs_.size(), 0);
    int64_t borrow = 0;
    for (size_t i = 0; i < a.limbs_.size(); ++i) {
        int64_t s = static_cast<int64_t>(a.limbs_[i]) - borrow -
                    (i < b.limbs_.size() ? static_cast<int64_t>(b.limbs_[i]) : 0);
        if (s < 0) {
            s += static_cast<int64_t>(kBase);
            borrow = 1;
        } else {
            borrow = 0;
        }
        r.limbs_[i] = static_cast<uint32_t>(s);
    }
    r.trim();
    return r;
}

BigInt BigInt::operator+(const BigInt& o) const {
    if (negative_ == o.negative_) {
        BigInt r = add_abs(*this, o);
        r.negative_ = negative_ && !r.limbs_.empty();
        return r;
    }
    int c = cmp_abs(*this, o);
    if (c == 0) return BigInt();
    BigInt r = c > 0 ? sub_abs(*this, o) : sub_abs(o, *this);
    r.negative_ = (c > 0 ? negative_ : o.negative_) && !r.limbs_.empty();
    return r;
}

BigInt BigInt::operator-(const BigInt& o) const { return *this + (-o); }

BigInt BigInt::operator*(const BigInt& o) const {
    if (is_zero() || o.is_zero()) return BigInt();
    BigInt r;
    r.limbs_.assign(limbs_.size() + o.limbs_.size(), 0);
    for (size_t i = 0; i < limbs_.size(); ++i) {
        uint64_t carry = 0;
        for (size_t j = 0; j < o.limbs_.size(); ++j) {
            uint64_t cur = static_cast<uint64_t>(limbs_[i]) * o.limbs_[j] +
                           r.limbs_[i + j] + carry;
            r.limbs_[i + j] = static_cast<uint32_t>(cur & 0xffffffffu);
            carry = cur >> 32;
        }
        r.limbs_[i + o.limbs_.size()] += static_cast<uint32_t>(carry);
    }
    r.negative_ = negative_ != o.negative_;
    r.trim();
    return r;
}

// Knuth algorithm D on 32-bit limbs, quotient truncated toward zero.
std::pair<BigInt, BigInt> BigInt::divmod(const BigInt& a, const BigInt& b) {
    if (b.is_zero()) throw std::domain_error("BigInt: division by zero");
    if (cmp_abs(a, b) < 0) return {BigInt(), a};

    // single-limb divisor fast path
    if (b.limbs_.size() == 1) {
        BigInt q;
        q.limbs_.resize(a.limbs_.size());
        uint64_t rem = 0, d = b.limbs_[0];
        for (size_t i = a.limbs_.size(); i-- > 0;) {
            uint64_t cur = (rem << 32) | a.limbs_[i];
            q.limbs_[i] = static_cast<uint32_t>(cur / d);
            rem = cur % d;
        }
        q.negative_ = a.negative_ != b.negative_;
        q.trim();
        BigInt r(static_cast<long long>(rem));
        if (a.negative_ && !r.is_zero()) r.negative_ = true;
        return {q, r};
    }

    // normalize so that the top divisor limb has its high bit set
    int shift = 0;
    for (uint32_t top = b.limbs_.back(); !(top & 0x80000000u); top <<= 1) ++shift;
    auto shl = [&](const std::vector<uint32_t>& v) {
        std::vector<uint32_t> w(v.size() + 1, 0);
        for (size_t i = 0; i < v.size(); ++i) {
            w[i] |= shift ? (v[i] << shift) : v[i];
            if (shift) w[i + 1] = v[i] >> (32 - shift);
        }
        return w;
    };
    std::vector<uint32_t> u = shl(a.limbs_), v = shl(b.limbs_);
    while (!v.empty() && v.back() == 0) v.pop_back();
    size_t n = v.size(), m = u.size() - n - 1;

    BigInt q;
    q.limbs_.assign(m + 1, 0);
    const uint64_t vtop = v[n - 1], vsec = v[n - 2];
    for (size_t j = m + 1; j-- > 0;) {
        uint64_t num = (static_cast<uint64_t>(u[j + n]) << 32) | u[j + n - 1];
        uint64_t qhat = num / vtop, rhat = num % vtop;
        if (qhat >= kBase) {        // u[j+n] <= vtop, so qhat exceeds by at most 2
            rhat += (qhat - (kBase - 1)) * vtop;
            qhat = kBase - 1;
        }
        while (rhat < kBase && qhat * vsec > ((rhat << 32) | u[j + n - 2])) {
            --qhat;
            rhat += vtop;
        }
        // multiply-subtract, with add-back on the rare overshoot
        int64_t borrow = 0;
        uint64_t carry = 0;
        for (size_t i = 0; i < n; ++i) {
            uint64_t p = qhat * v[i] + carry;
            carry = p >> 32;
            int64_t t = static_cast<int64_t>(u[i + j]) - static_cast<int64_t>(p & 0xffffffffu) - borrow;
            borrow = t < 0;
            u[i + j] = static_cast<uint32_t>(t + (borrow ? static_cast<int64_t>(kBase) : 0));
        }
        int64_t t = static_cast<int64_t>(u[j + n]) - static_cast<int64_t>(carry) - borrow;
        if (t < 0) {
            --qhat;
            uint64_t c2 = 0;
            for (size_t i = 0; i < n; ++i) {
                uint64_t s = static_cast<uint64_t>(u[i + j]) + v[i] + c2;
                u[i + j] = static_cast<uint32_t>(s & 0xffffffffu);
                c2 = s >> 32;
            }
            t += static_cast<int64_t>(c2);
        }
        u[j + n] = static_cast<uint32_t>(t);
        q.limbs_[j] = static_cast<uint32_t>(qhat);
    }

    BigInt r;
    r.limbs_.assign(u.begin(), u.begin() + n);
    r.trim();
    if (shift) {        // undo normalization of the remainder
        uint32_t carry = 0;
        for (size_t i = r.limbs_.size(); i-- > 0;) {
            uint32_t cur = r.limbs_[i];
            r.limbs_[i] = (cur >> shift) | carry;
            carry = cur << (32 - shift);
        }
        r.trim();
    }
    q.negative_ = a.negative_ != b.negative_;
    q.trim();
    r.negative_ = a.negative_ && !r.is_zero();
    return {q, r};
}

BigInt BigInt::operator/(const BigInt& o) const { return divmod(*this, o).first; }
BigInt BigInt::operator%(const BigInt& o) const { return divmod(*this, o).second; }

std::strong_ordering BigInt::operator<=>(const BigInt& o) const {
    if (sign() != o.sign()) return sign() <=> o.sign();
    int c = cmp_abs(*this, o);
    if (negative_) c = -c;
    return c <=> 0;
}

BigInt BigInt::gcd(BigInt a, BigInt b) {
    a.negative_ = b.negative_ = false;
    while (!b.is_zero()) {
        BigInt r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

BigInt BigInt::pow(unsigned e) const {
    BigInt base = *this, r(1);
    for (; e; e >>= 1) {
        if (e & 1) r *= base;
        if (e > 1) base *= base;
    }
    return r;
}

std::string BigInt::to_string() const {
    if (is_zero()) return "0";
    BigInt v = abs();
    std::string out;
    const BigInt chunk(1000000000);
    while (!v.is_zero()) {
        auto [q, r] = divmod(v, chunk);
        uint64_t part = r.limbs_.empty() ? 0 : r.limbs_[0];
        std::string s = std::to_string(part);
        v = std::move(q);
        if (v.is_zero())
            out.insert(0, s);
        else
            out.insert(0, std::string(9 - s.size(), '0') + s);
    }
    return negative_ ? "-" + out : out;
}

bool BigInt::fits_ll() const {
    if (limbs_.size() > 2) return false;
    if (limbs_.size() < 2) return true;
    uint64_t mag = (static_cast<uint64_t>(limbs_[1]) << 32) | limbs_[0];
    return negative_ ? mag <= (1ull << 63) : mag < (1ull << 63);
}

long long BigInt::to_ll() const {
    uint64_t mag = 0;
    if (limbs_.size() >= 1) mag |= limbs_[0];
    if (limbs_.size() >= 2) mag |= static_cast<uint64_t>(limbs_[1]) << 32;
    return negative_ ? -static_cast<long long>(mag) : static_cast<long long>(mag);
}

}  // namespace fmlimit
