#include "bollobas/bignum.hpp"

#include <algorithm>
#include <stdexcept>

namespace bollobas {

BigUint::BigUint(uint64_t v) {
    if (v) d_.push_back(static_cast<uint32_t>(v));
    if (v >> 32) d_.push_back(static_cast<uint32_t>(v >> 32));
}

void BigUint::trim() {
    while (!d_.empty() && d_.back() == 0) d_.pop_back();
}

uint64_t BigUint::to_u64() const {
    if (!fits_u64()) throw std::overflow_error("BigUint::to_u64: value too large");
    uint64_t v = 0;
    if (d_.size() > 1) v = static_cast<uint64_t>(d_[1]) << 32;
    if (!d_.empty()) v |= d_[0];
    return v;
}

std::strong_ordering BigUint::operator<=>(const BigUint& o) const {
    if (auto c = d_.size() <=> o.d_.size(); c != 0) return c;
    for (size_t i = d_.size(); i-- > 0;)
        if (auto c = d_[i] <=> o.d_[i]; c != 0) return c;
    return std::strong_ordering::equal;
}

BigUint& BigUint::operator+=(const BigUint& o) {
    if (o.d_.size() > d_.size()) d_.resize(o.d_.size(), 0);
    uint64_t carry = 0;
    for (size_t i = 0; i < d_.size(); ++i) {
        uint64_t s = carry + d_[i] + (i < o.d_.size() ? o.d_[i] : 0);
        d_[i] = static_cast<uint32_t>(s);
        carry = s >> 32;
    }
    if (carry) d_.push_back(static_cast<uint32_t>(carry));
    return *this;
}

BigUint& BigUint::operator-=(const BigUint& o) {
    if (*this < o) throw std::underflow_error("BigUint: negative subtraction");
    int64_t borrow = 0;
    for (size_t i = 0; i < d_.size(); ++i) {
        int64_t s = static_cast<int64_t>(d_[i]) - borrow - (i < o.d_.size() ? o.d_[i] : 0);
        borrow = s < 0;
        if (s < 0) s += int64_t{1} << 32;
        d_[i] = static_cast<uint32_t>(s);
    }
    trim();
    return *this;
}

BigUint BigUint::operator*(const BigUint& o) const {
    BigUint r;
    if (is_zero() || o.is_zero()) return r;
    r.d_.assign(d_.size() + o.d_.size(), 0);
    for (size_t i = 0; i < d_.size(); ++i) {
        uint64_t carry = 0;
        for (size_t j = 0; j < o.d_.size(); ++j) {
            uint64_t cur = r.d_[i + j] + carry +
                           static_cast<uint64_t>(d_[i]) * o.d_[j];
            r.d_[i + j] = static_cast<uint32_t>(cur);
            carry = cur >> 32;
        }
        r.d_[i + o.d_.size()] += static_cast<uint32_t>(carry);
    }
    r.trim();
    return r;
}

size_t BigUint::bit_length() const {
    if (d_.empty()) return 0;
    uint32_t top = d_.back();
    size_t bits = 0;
    while (top) { ++bits; top >>= 1; }
    return (d_.size() - 1) * 32 + bits;
}

bool BigUint::bit(size_t i) const {
    size_t limb = i / 32;
    if (limb >= d_.size()) return false;
    return (d_[limb] >> (i % 32)) & 1;
}

// Shift-and-subtract long division: slow in theory, fine at these sizes.
void BigUint::divmod(const BigUint& num, const BigUint& den, BigUint& q, BigUint& r) {
    if (den.is_zero()) throw std::domain_error("BigUint: division by zero");
    q = BigUint();
    r = BigUint();
    if (num < den) { r = num; return; }
    size_t bits = num.bit_length();
    q.d_.assign((bits + 31) / 32, 0);
    for (size_t i = bits; i-- > 0;) {
        // r = (r << 1) | num.bit(i)
        uint32_t carry = num.bit(i) ? 1u : 0u;
        for (size_t j = 0; j < r.d_.size(); ++j) {
            uint32_t nc = r.d_[j] >> 31;
            r.d_[j] = (r.d_[j] << 1) | carry;
            carry = nc;
        }
        if (carry) r.d_.push_back(carry);
        if (r >= den) {
            r -= den;
            q.d_[i / 32] |= uint32_t{1} << (i % 32);
        }
    }
    q.trim();
    r.trim();
}

BigUint BigUint::operator/(const BigUint& o) const {
    BigUint q, r;
    divmod(*this, o, q, r);
    return q;
}

BigUint BigUint::operator%(const BigUint& o) const {
    BigUint q, r;
    divmod(*this, o, q, r);
    return r;
}

uint32_t BigUint::div_small(uint32_t divisor) {
    if (divisor == 0) throw std::domain_error("BigUint: division by zero");
    uint64_t rem = 0;
    for (size_t i = d_.size(); i-- > 0;) {
        uint64_t cur = (rem << 32) | d_[i];
        d_[i] = static_cast<uint32_t>(cur / divisor);
        rem = cur % divisor;
    }
    trim();
    return static_cast<uint32_t>(rem);
}

BigUint BigUint::gcd(BigUint a, BigUint b) {
    while (!b.is_zero()) {
        BigUint r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

std::string BigUint::to_string() const {
    if (is_zero()) return "0";
    BigUint tmp = *this;
    std::string out;
    while (!tmp.is_zero()) {
        uint32_t rem = tmp.div_small(1000000000u);
        std::string chunk = std::to_string(rem);
        if (!tmp.is_zero()) chunk.insert(0, 9 - chunk.size(), '0');
        out.insert(0, chunk);
    }
    return out;
}

BigUint factorial(unsigned n) {
    BigUint r(1);
    for (unsigned i = 2; i <= n; ++i) r *= BigUint(i);
    return r;
}

BigUint binomial(unsigned n, unsigned k) {
    if (k > n) return BigUint(0);
    if (k > n - k) k = n - k;
    BigUint r(1);
    // Each step divides exactly: r holds C(n-k+i, i).
    for (unsigned i = 1; i <= k; ++i) {
        r *= BigUint(n - k + i);
        r.div_small(i);
    }
    return r;
}

BigUint multinomial(unsigned total, std::span<const int> parts) {
    unsigned sum = 0;
    for (int p : parts) {
        if (p < 0) throw std::invalid_argument("multinomial: negative part");
        sum += static_cast<unsigned>(p);
    }
    if (sum != total)
        throw std::invalid_argument("multinomial: parts sum to " + std::to_string(sum) +
                                    ", expected " + std::to_string(total));
    BigUint r(1);
    unsigned used = 0;
    for (int p : parts) {
        used += static_cast<unsigned>(p);
        r *= binomial(used, static_cast<unsigned>(p));
    }
    return r;
}

Rational::Rational(BigUint num, BigUint den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("Rational: zero denominator");
    reduce();
}

Rational::Rational(uint64_t num, uint64_t den) : Rational(BigUint(num), BigUint(den)) {}

void Rational::reduce() {
    if (num_.is_zero()) { den_ = BigUint(1); return; }
    BigUint g = BigUint::gcd(num_, den_);
    if (g != BigUint(1)) {
        num_ = num_ / g;
        den_ = den_ / g;
    }
}

Rational& Rational::operator+=(const Rational& o) {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
    reduce();
    return *this;
}

Rational Rational::operator*(const BigUint& i) const {
    return Rational(num_ * i, den_);
}

std::strong_ordering Rational::operator<=>(const Rational& o) const {
    return (num_ * o.den_) <=> (o.num_ * den_);
}

bool Rational::operator==(const Rational& o) const {
    return num_ == o.num_ && den_ == o.den_;
}

bool Rational::is_integer() const { return den_ == BigUint(1); }

double Rational::to_double() const {
    // Good to ~double precision for the report sizes used here.
    if (num_.fits_u64() && den_.fits_u64())
        return static_cast<double>(num_.to_u64()) / static_cast<double>(den_.to_u64());
    BigUint q, r;
    BigUint::divmod(num_, den_, q, r);
    double frac = 0.0;
    if (!r.is_zero()) {
        BigUint scaled = r * BigUint(uint64_t{1} << 53);
        frac = static_cast<double>((scaled / den_).to_u64()) / static_cast<double>(uint64_t{1} << 53);
    }
    double head = 0.0;
    // q may exceed u64 in pathological report uses; saturate via string length.
    if (q.fits_u64()) head = static_cast<double>(q.to_u64());
    else head = std::stod(q.to_string());
    return head + frac;
}

std::string Rational::to_string() const {
    return num_.to_string() + "/" + den_.to_string();
}

}  // namespace bollobas
