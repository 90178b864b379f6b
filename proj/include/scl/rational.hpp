#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace scl {

using BigInt = mpz_class;

// Exact rational, always in lowest terms with a positive denominator.
class BigRational {
public:
    BigRational() = default;
    BigRational(long value) : q_(value) {}  // NOLINT(google-explicit-constructor)
    BigRational(const BigInt& value) : q_(value) {}  // NOLINT(google-explicit-constructor)
    BigRational(const BigInt& num, const BigInt& den);
    explicit BigRational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

    // Accepts "p" or "p/q" in decimal.
    static BigRational parse(std::string_view text);

    BigInt numerator() const { return q_.get_num(); }
    BigInt denominator() const { return q_.get_den(); }
    const mpq_class& raw() const { return q_; }

    int sign() const { return sgn(q_); }
    bool is_zero() const { return sgn(q_) == 0; }
    bool is_integer() const { return q_.get_den() == 1; }

    // "p/q", or "p" when the denominator is 1.
    std::string to_string() const;

    BigRational operator-() const { return BigRational(mpq_class(-q_)); }
    BigRational& operator+=(const BigRational& o) { q_ += o.q_; return *this; }
    BigRational& operator-=(const BigRational& o) { q_ -= o.q_; return *this; }
    BigRational& operator*=(const BigRational& o) { q_ *= o.q_; return *this; }
    BigRational& operator/=(const BigRational& o);

    friend BigRational operator+(BigRational a, const BigRational& b) { return a += b; }
    friend BigRational operator-(BigRational a, const BigRational& b) { return a -= b; }
    friend BigRational operator*(BigRational a, const BigRational& b) { return a *= b; }
    friend BigRational operator/(BigRational a, const BigRational& b) { return a /= b; }

    friend bool operator==(const BigRational& a, const BigRational& b) { return a.q_ == b.q_; }
    friend std::strong_ordering operator<=>(const BigRational& a, const BigRational& b) {
        const int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    friend std::ostream& operator<<(std::ostream& os, const BigRational& r) {
        return os << r.to_string();
    }

private:
    mpq_class q_;
};

using RationalVector = std::vector<BigRational>;

BigInt lcm_of_denominators(std::span<const BigRational> values);

// Converts to int64 or throws ResourceLimit when out of range.
std::int64_t to_int64(const BigInt& value);

}  // namespace scl
