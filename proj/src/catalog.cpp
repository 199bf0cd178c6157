#include "convseq/catalog.hpp"

#include <utility>

namespace convseq {

namespace {

// Each rule returns 1 at n = 0: the sequences are normalized so that the
// convolution condition (which forces a_0 = b_0 = 1) applies verbatim.

Rational bernoulli_rule(int n) {
    // a_n = 1/(n+1)!  (the series of (e^x - 1)/x)
    return Rational(BigInt(1), factorial(n + 1));
}

Rational even_bernoulli_rule(int n) {
    // a_n = 2/(2n+2)!
    return Rational(BigInt(2), factorial(2 * n + 2));
}

Rational euler_rule(int n) {
    // a_n = (1 + (-1)^n) / (2 n!): the series of cosh x, odd terms vanish.
    return n % 2 == 0 ? Rational(BigInt(1), factorial(n)) : Rational(0);
}

Rational even_euler_rule(int n) {
    // a_n = 1/(2n)!
    return Rational(BigInt(1), factorial(2 * n));
}

Rational fibonacci_rule(int n) {
    // a_n = ((-1)^n - 1)/2 for n >= 1 (-1 at odd n, 0 at even), a_0 = 1.
    if (n == 0) return Rational(1);
    return n % 2 == 0 ? Rational(0) : Rational(-1);
}

Rational even_fibonacci_rule(int n) {
    // a_n = -n for n >= 1, a_0 = 1.
    if (n == 0) return Rational(1);
    return Rational(-n);
}

Rational factorial_transform(int n, const Rational& b) {
    // B_n = n! b_n and E_n = n! b_n share this shape.
    return Rational(factorial(n)) * b;
}

Rational even_bernoulli_transform(int n, const Rational& b) {
    // B_2n = -(2n)! b_n / (2n - 1)
    return Rational(-factorial(2 * n), BigInt(2 * n - 1)) * b;
}

Rational even_euler_transform(int n, const Rational& b) {
    // E_2n = (2n)! b_n
    return Rational(factorial(2 * n)) * b;
}

Rational identity_transform(int, const Rational& b) { return b; }

constexpr std::array<CatalogEntry, 6> kCatalog = {{
    {"bernoulli", "Bernoulli numbers from the reciprocal of (e^x - 1)/x",
     "B_n", 1, bernoulli_rule, factorial_transform},
    {"even_bernoulli", "even-index Bernoulli numbers from a cosh-style series",
     "B_2n", 1, even_bernoulli_rule, even_bernoulli_transform},
    {"euler", "Euler (secant) numbers from the reciprocal of cosh x",
     "E_n", 1, euler_rule, factorial_transform},
    {"even_euler", "even-index Euler numbers with the index halved",
     "E_2n", 1, even_euler_rule, even_euler_transform},
    {"fibonacci", "Fibonacci numbers, b_n = F_n directly",
     "F_n", 1, fibonacci_rule, identity_transform},
    {"even_fibonacci", "even-index Fibonacci numbers, b_n = F_2n",
     "F_2n", 1, even_fibonacci_rule, identity_transform},
}};

} // namespace

const std::array<CatalogEntry, 6>& catalog() { return kCatalog; }

const CatalogEntry* find_entry(std::string_view name) {
    for (const CatalogEntry& entry : kCatalog) {
        if (entry.name == name) return &entry;
    }
    return nullptr;
}

const CatalogEntry& entry(std::string_view name) {
    if (const CatalogEntry* found = find_entry(name)) return *found;
    std::string known;
    for (const CatalogEntry& e : kCatalog) {
        if (!known.empty()) known += ", ";
        known += e.name;
    }
    throw DomainError("unknown sequence \"" + std::string(name) + "\"; known names: " + known);
}

Rational catalog_coefficient(const CatalogEntry& entry, int n) {
    if (n < 0) {
        throw DomainError("sequence \"" + std::string(entry.name) +
                          "\": coefficient index " + std::to_string(n) + " is negative");
    }
    return entry.coefficient_rule(n);
}

CoefficientSequence make_sequence(const CatalogEntry& entry) {
    return CoefficientSequence(std::string(entry.name),
                               [rule = entry.coefficient_rule](int n) { return rule(n); });
}

Rational named_value(const CatalogEntry& entry, int n, MethodId method,
                     const EvalOptions& options) {
    if (n < entry.valid_from) {
        throw DomainError("sequence \"" + std::string(entry.name) + "\": " +
                          std::string(entry.value_label) + " is defined for n >= " +
                          std::to_string(entry.valid_from) + ", got n = " + std::to_string(n));
    }
    CoefficientSequence sequence = make_sequence(entry);
    return entry.transform(n, reciprocal_term(sequence, n, method, options));
}

Rational fibonacci_reference(int n) {
    if (n < 1) {
        throw DomainError("fibonacci_reference needs n >= 1, got " + std::to_string(n));
    }
    BigInt previous(0), current(1); // F_0, F_1
    for (int k = 1; k < n; ++k) {
        BigInt next = previous + current;
        previous = current;
        current = next;
    }
    return Rational(current);
}

bool IdentityReport::all_ok() const {
    for (const IdentityCheck& check : checks) {
        if (!check.ok) return false;
    }
    return true;
}

namespace {

Rational odd_indicator(int m) {
    // (1 - (-1)^m) / 2
    return m % 2 != 0 ? Rational(1) : Rational(0);
}

} // namespace

IdentityReport identity_suite(int n_max) {
    if (n_max < 1) {
        throw DomainError("identity suite needs n_max >= 1, got " + std::to_string(n_max));
    }
    IdentityReport report{n_max, {}};
    auto record = [&report](std::string name, int n, Rational expected, Rational got) {
        report.checks.push_back(
            {std::move(name), n, expected == got, std::move(expected), std::move(got)});
    };

    // One memoizing sequence per entry, shared across all n below.
    CoefficientSequence bernoulli = make_sequence(entry("bernoulli"));
    CoefficientSequence even_bernoulli = make_sequence(entry("even_bernoulli"));
    CoefficientSequence euler = make_sequence(entry("euler"));
    CoefficientSequence even_euler = make_sequence(entry("even_euler"));
    CoefficientSequence fibonacci = make_sequence(entry("fibonacci"));
    CoefficientSequence even_fibonacci = make_sequence(entry("even_fibonacci"));

    auto fib = [&fibonacci](int k) { return fibonacci.recursion_term(k); };

    for (int n = 1; n <= n_max; ++n) {
        // F_2n = sum of the first n odd-index Fibonacci numbers.
        Rational sum(0);
        for (int h = 1; h <= n; ++h) sum += fib(2 * h - 1);
        record("fib_even_from_odd", n, fib(2 * n), sum);

        // F_2n+1 = 1 + sum of the first n even-index Fibonacci numbers.
        sum = Rational(1);
        for (int h = 1; h <= n; ++h) sum += fib(2 * h);
        record("fib_odd_from_even", n, fib(2 * n + 1), sum);

        // F_2n = n + sum_{h=1..n-1} F_2h (n - h).
        sum = Rational(n);
        for (int h = 1; h < n; ++h) sum += fib(2 * h) * Rational(n - h);
        record("fib_even_weighted", n, fib(2 * n), sum);

        // F_n = odd(n) + sum_{h=1..n-1} F_h odd(n - h).
        sum = odd_indicator(n);
        for (int h = 1; h < n; ++h) sum += fib(h) * odd_indicator(n - h);
        record("fib_parity_convolution", n, fib(n), sum);

        // Odd Bernoulli numbers beyond B_1 vanish.
        const CatalogEntry& b_entry = entry("bernoulli");
        record("bernoulli_odd_zero", n, Rational(0),
               b_entry.transform(2 * n + 1, bernoulli.recursion_term(2 * n + 1)));

        // The even-index entries agree with their full-index counterparts.
        const CatalogEntry& eb_entry = entry("even_bernoulli");
        record("even_bernoulli_consistent", n,
               b_entry.transform(2 * n, bernoulli.recursion_term(2 * n)),
               eb_entry.transform(n, even_bernoulli.recursion_term(n)));

        const CatalogEntry& e_entry = entry("euler");
        const CatalogEntry& ee_entry = entry("even_euler");
        record("even_euler_consistent", n,
               e_entry.transform(2 * n, euler.recursion_term(2 * n)),
               ee_entry.transform(n, even_euler.recursion_term(n)));

        record("even_fibonacci_consistent", n, fib(2 * n),
               even_fibonacci.recursion_term(n));
    }
    return report;
}

} // namespace convseq
