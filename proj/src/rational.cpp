#include "convseq/rational.hpp"

#include <cctype>
#include <mutex>
#include <ostream>
#include <vector>

namespace convseq {

BigInt factorial(int n) {
    if (n < 0) {
        throw DomainError("factorial(" + std::to_string(n) + "): argument must be non-negative");
    }
    static std::mutex mutex;
    static std::vector<BigInt> table{BigInt(1)}; // table[k] = k!
    std::scoped_lock lock(mutex);
    while (static_cast<int>(table.size()) <= n) {
        table.push_back(table.back() * static_cast<long>(table.size()));
    }
    return table[static_cast<std::size_t>(n)];
}

Rational::Rational(const BigInt& numerator, const BigInt& denominator) {
    if (denominator == 0) {
        throw DomainError("invalid fraction " + numerator.get_str() + "/0: zero denominator");
    }
    q_ = mpq_class(numerator, denominator);
    q_.canonicalize();
}

Rational& Rational::operator/=(const Rational& rhs) {
    if (rhs.is_zero()) {
        throw DomainError("division of " + format_rational(*this) + " by zero");
    }
    q_ /= rhs.q_;
    return *this;
}

bool Rational::is_canonical() const {
    if (q_.get_den() <= 0) return false;
    BigInt g;
    mpz_gcd(g.get_mpz_t(), q_.get_num().get_mpz_t(), q_.get_den().get_mpz_t());
    if (g != 1) return false;
    if (q_.get_num() == 0 && q_.get_den() != 1) return false;
    return true;
}

Rational pow(const Rational& base, unsigned long exponent) {
    if (exponent == 0) return Rational(1);
    Rational r;
    mpz_pow_ui(mpq_numref(r.q_.get_mpq_t()),
               mpq_numref(base.q_.get_mpq_t()), exponent);
    mpz_pow_ui(mpq_denref(r.q_.get_mpq_t()),
               mpq_denref(base.q_.get_mpq_t()), exponent);
    // Powers of coprime parts stay coprime and the denominator stays
    // positive, so the result is already canonical.
    return r;
}

namespace {

// [begin, end) must be non-empty and all digits; returns the next position.
std::size_t scan_digits(std::string_view text, std::size_t pos, const char* what) {
    std::size_t begin = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        ++pos;
    }
    if (pos == begin) {
        std::string found = pos < text.size()
                                ? "'" + std::string(1, text[pos]) + "'"
                                : "end of input";
        throw ParseError("rational \"" + std::string(text) + "\": expected " +
                             std::string(what) + " at position " + std::to_string(begin) +
                             ", found " + found,
                         begin);
    }
    return pos;
}

} // namespace

Rational parse_rational(std::string_view text) {
    if (text.empty()) {
        throw ParseError("rational literal is empty", 0);
    }
    std::size_t pos = 0;
    if (text[pos] == '-') ++pos;
    pos = scan_digits(text, pos, "numerator digits");
    BigInt numerator(std::string(text.substr(0, pos)), 10);
    if (pos == text.size()) {
        return Rational(numerator);
    }
    if (text[pos] != '/') {
        throw ParseError("rational \"" + std::string(text) + "\": unexpected character '" +
                             std::string(1, text[pos]) + "' at position " + std::to_string(pos),
                         pos);
    }
    std::size_t den_begin = ++pos;
    pos = scan_digits(text, pos, "denominator digits");
    if (pos != text.size()) {
        throw ParseError("rational \"" + std::string(text) + "\": unexpected character '" +
                             std::string(1, text[pos]) + "' at position " + std::to_string(pos),
                         pos);
    }
    BigInt denominator(std::string(text.substr(den_begin, pos - den_begin)), 10);
    if (denominator == 0) {
        throw ParseError("rational \"" + std::string(text) + "\": zero denominator", den_begin);
    }
    return Rational(numerator, denominator);
}

std::string format_rational(const Rational& value, RationalFormat format) {
    std::string out = value.numerator().get_str();
    if (format == RationalFormat::canonical || !value.is_integer()) {
        out += '/';
        out += value.denominator().get_str();
    }
    return out;
}

std::ostream& operator<<(std::ostream& out, const Rational& value) {
    return out << format_rational(value);
}

} // namespace convseq
