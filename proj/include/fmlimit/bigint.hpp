#pragma once

#include <cstdint>
#include <compare>
#include <string>
#include <vector>

namespace fmlimit {

// Arbitrary-precision signed integer, sign-magnitude over 32-bit limbs
// (little-endian). Covers exactly the operations the rational layer needs:
// ring arithmetic, truncated division, gcd, powers and decimal I/O.
class BigInt {
public:
    BigInt() = default;
    BigInt(long long v);
    explicit BigInt(const std::string& decimal);

    static BigInt factorial(unsigned n);

    bool is_zero() const { return limbs_.empty(); }
    int sign() const { return limbs_.empty() ? 0 : (negative_ ? -1 : 1); }
    bool is_one() const { return !negative_ && limbs_.size() == 1 && limbs_[0] == 1; }

    BigInt operator-() const;
    BigInt abs() const;

    BigInt operator+(const BigInt& o) const;
    BigInt operator-(const BigInt& o) const;
    BigInt operator*(const BigInt& o) const;
    // Truncated toward zero, as in C++ integer division.
    BigInt operator/(const BigInt& o) const;
    BigInt operator%(const BigInt& o) const;

    BigInt& operator+=(const BigInt& o) { return *this = *this + o; }
    BigInt& operator-=(const BigInt& o) { return *this = *this - o; }
    BigInt& operator*=(const BigInt& o) { return *this = *this * o; }

    bool operator==(const BigInt& o) const = default;
    std::strong_ordering operator<=>(const BigInt& o) const;

    static BigInt gcd(BigInt a, BigInt b);
    BigInt pow(unsigned e) const;

    std::string to_string() const;

    // Value if it fits in long long (used by tests and small fast paths).
    bool fits_ll() const;
    long long to_ll() const;

private:
    static std::pair<BigInt, BigInt> divmod(const BigInt& a, const BigInt& b);
    static int cmp_abs(const BigInt& a, const BigInt& b);
    static BigInt add_abs(const BigInt& a, const BigInt& b);
    static BigInt sub_abs(const BigInt& a, const BigInt& b);  // needs |a| >= |b|
    void trim();

    // invariant: no leading zero limbs; zero is the empty limb vector with
    // negative_ == false
    std::vector<uint32_t> limbs_;
    bool negative_ = false;
};

}  // namespace fmlimit
