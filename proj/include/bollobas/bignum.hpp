#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace bollobas {

// Arbitrary-precision unsigned integer, little-endian base-2^32 limbs.
// Everything in this project that must be exact (multinomials, factorials,
// inequality sums) goes through this type; magnitudes stay in the low
// thousands of bits, so schoolbook arithmetic is plenty.
class BigUint {
public:
    BigUint() = default;
    BigUint(uint64_t v);

    bool is_zero() const { return d_.empty(); }
    bool fits_u64() const { return d_.size() <= 2; }
    uint64_t to_u64() const;  // throws std::overflow_error when it does not fit

    std::strong_ordering operator<=>(const BigUint& o) const;
    bool operator==(const BigUint& o) const = default;

    BigUint& operator+=(const BigUint& o);
    BigUint& operator-=(const BigUint& o);  // requires *this >= o
    BigUint operator*(const BigUint& o) const;
    BigUint& operator*=(const BigUint& o) { return *this = *this * o; }

    friend BigUint operator+(BigUint a, const BigUint& b) { return a += b; }
    friend BigUint operator-(BigUint a, const BigUint& b) { return a -= b; }

    // Quotient and remainder; throws std::domain_error on zero divisor.
    static void divmod(const BigUint& num, const BigUint& den, BigUint& q, BigUint& r);
    BigUint operator/(const BigUint& o) const;
    BigUint operator%(const BigUint& o) const;

    // In-place exact-ish division by a small divisor (returns remainder).
    uint32_t div_small(uint32_t divisor);

    static BigUint gcd(BigUint a, BigUint b);

    std::string to_string() const;

    size_t bit_length() const;
    bool bit(size_t i) const;

private:
    void trim();
    std::vector<uint32_t> d_;
};

BigUint factorial(unsigned n);
BigUint binomial(unsigned n, unsigned k);
// total! / (parts[0]! * ... * parts.back()!); requires sum(parts) == total.
BigUint multinomial(unsigned total, std::span<const int> parts);

// Nonnegative exact rational, kept reduced with positive denominator.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(BigUint num, BigUint den);
    Rational(uint64_t num, uint64_t den = 1);

    static Rational zero() { return Rational(); }
    static Rational one() { return Rational(1, 1); }

    const BigUint& num() const { return num_; }
    const BigUint& den() const { return den_; }

    Rational& operator+=(const Rational& o);
    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    Rational operator*(const BigUint& i) const;

    std::strong_ordering operator<=>(const Rational& o) const;
    bool operator==(const Rational& o) const;

    bool leq_one() const { return num_ <= den_; }
    bool is_one() const { return num_ == den_; }
    bool is_integer() const;

    double to_double() const;  // lossy, for reporting only
    std::string to_string() const;  // "p/q"

private:
    void reduce();
    BigUint num_, den_;
};

}  // namespace bollobas
