#pragma once

#include <string>

#include "fmlimit/bigint.hpp"

namespace fmlimit {

// Exact fraction over BigInt. Always reduced, denominator positive, zero is
// 0/1. This is the only scalar type of the engine; nothing here is ever
// rounded.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long v) : num_(v), den_(1) {}
    Rational(BigInt num, BigInt den = BigInt(1));

    // Parses "p", "p/q" with optional leading '-'.
    static Rational parse(const std::string& text);
    static Rational factorial_inverse(unsigned n);  // 1/n!

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_integer() const { return den_.is_one(); }
    int sign() const { return num_.sign(); }

    Rational operator-() const;
    Rational operator+(const Rational& o) const;
    Rational operator-(const Rational& o) const;
    Rational operator*(const Rational& o) const;
    Rational operator/(const Rational& o) const;
    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    // Integer powers; negative exponents invert (zero base rejected).
    Rational pow(int e) const;

    bool operator==(const Rational& o) const = default;
    std::strong_ordering operator<=>(const Rational& o) const;

    std::string to_string() const;            // "5", "-1/2"
    std::string to_canonical_string() const;  // always "p/q", e.g. "5/1"

private:
    void reduce();

    BigInt num_, den_;
};

}  // namespace fmlimit
