#ifndef CONVSEQ_RATIONAL_HPP
#define CONVSEQ_RATIONAL_HPP

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

#include "convseq/errors.hpp"

namespace convseq {

// Arbitrary-precision signed integer.
using BigInt = mpz_class;

// n! served from a shared memoized table. Thread-safe; DomainError for n < 0.
BigInt factorial(int n);

enum class RationalFormat {
    plain,     // integers render without the "/1" suffix: "21", "-1/30"
    canonical, // always "numerator/denominator": "21/1", "-1/30"
};

// Exact rational number kept in canonical form at all times:
// denominator > 0, gcd(|numerator|, denominator) = 1, zero is 0/1.
class Rational {
public:
    Rational() : q_(0) {}
    Rational(long value) : q_(value) {}                    // NOLINT(google-explicit-constructor)
    Rational(const BigInt& value) : q_(value) {}           // NOLINT(google-explicit-constructor)

    // Reduces to canonical form; DomainError on a zero denominator.
    Rational(const BigInt& numerator, const BigInt& denominator);
    Rational(long numerator, long denominator)
        : Rational(BigInt(numerator), BigInt(denominator)) {}

    BigInt numerator() const { return q_.get_num(); }
    BigInt denominator() const { return q_.get_den(); }

    bool is_zero() const { return sign() == 0; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return mpq_sgn(q_.get_mpq_t()); }

    // True iff the stored representation satisfies the canonical-form
    // invariant. Exposed so tests can audit values after arithmetic.
    bool is_canonical() const;

    Rational& operator+=(const Rational& rhs) { q_ += rhs.q_; return *this; }
    Rational& operator-=(const Rational& rhs) { q_ -= rhs.q_; return *this; }
    Rational& operator*=(const Rational& rhs) { q_ *= rhs.q_; return *this; }

    // DomainError when dividing by zero.
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational lhs, const Rational& rhs) { lhs += rhs; return lhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { lhs -= rhs; return lhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { lhs *= rhs; return lhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { lhs /= rhs; return lhs; }

    friend Rational operator-(const Rational& value) {
        Rational r;
        r.q_ = -value.q_;
        return r;
    }

    friend bool operator==(const Rational& lhs, const Rational& rhs) {
        return mpq_equal(lhs.q_.get_mpq_t(), rhs.q_.get_mpq_t()) != 0;
    }
    friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
        int c = mpq_cmp(lhs.q_.get_mpq_t(), rhs.q_.get_mpq_t());
        return c <=> 0;
    }

    // base^exponent by exact integer powers of the (coprime) parts.
    friend Rational pow(const Rational& base, unsigned long exponent);

private:
    mpq_class q_;
};

// Parses "[-]digits[/digits]" with no whitespace or other decoration.
// "4/8" is accepted and normalized to 1/2. ParseError on anything else,
// DomainError never (a zero denominator is reported as a ParseError since
// it arrives as text).
Rational parse_rational(std::string_view text);

std::string format_rational(const Rational& value,
                            RationalFormat format = RationalFormat::plain);

// Streams the plain form.
std::ostream& operator<<(std::ostream& out, const Rational& value);

} // namespace convseq

#endif
