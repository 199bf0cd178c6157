#ifndef CONVSEQ_CATALOG_HPP
#define CONVSEQ_CATALOG_HPP

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "convseq/recurrence.hpp"

namespace convseq {

// A named coefficient sequence whose reciprocal terms carry a classical
// meaning once transformed. coefficient_rule(0) is pinned to 1 for every
// entry (the normalization the convolution condition demands), and
// transform(n, b_n) turns the raw reciprocal term into the named value.
struct CatalogEntry {
    std::string_view name;
    std::string_view description;
    std::string_view value_label; // e.g. "B_n", "F_2n"
    int valid_from;               // transform defined for n >= valid_from
    Rational (*coefficient_rule)(int n);
    Rational (*transform)(int n, const Rational& b_n);
};

// The six built-in entries, in their stable CLI order:
// bernoulli, even_bernoulli, euler, even_euler, fibonacci, even_fibonacci.
const std::array<CatalogEntry, 6>& catalog();

// nullptr when the name is unknown.
const CatalogEntry* find_entry(std::string_view name);

// DomainError listing the known names when the name is unknown.
const CatalogEntry& entry(std::string_view name);

// entry.coefficient_rule(n) with the index validated. DomainError for n < 0.
Rational catalog_coefficient(const CatalogEntry& entry, int n);

// A fresh memoizing sequence for the entry.
CoefficientSequence make_sequence(const CatalogEntry& entry);

// The named value at index n: compute b_n by the requested method, then
// apply the entry transform. DomainError for n < entry.valid_from.
Rational named_value(const CatalogEntry& entry, int n, MethodId method,
                     const EvalOptions& options = {});

// F_n by the plain two-term recursion F_1 = F_2 = 1; the oracle the
// Fibonacci-flavoured entries and identities are checked against.
// DomainError for n < 1.
Rational fibonacci_reference(int n);

struct IdentityCheck {
    std::string identity; // stable name, e.g. "fib_even_from_odd"
    int n = 0;
    bool ok = false;
    Rational expected;
    Rational got;
};

struct IdentityReport {
    int n_max = 0;
    std::vector<IdentityCheck> checks;

    bool all_ok() const;
};

// Exercises the summation identities the reciprocal sequences satisfy:
//   fib_even_from_odd          F_2n   = sum_{h=1..n} F_{2h-1}
//   fib_odd_from_even          F_2n+1 = 1 + sum_{h=1..n} F_2h
//   fib_even_weighted          F_2n   = n + sum_{h=1..n-1} F_2h (n-h)
//   fib_parity_convolution     F_n    = odd(n) + sum_{h=1..n-1} F_h odd(n-h)
//                              with odd(m) = (1 - (-1)^m)/2
//   bernoulli_odd_zero         B_2n+1 = 0
//   even_bernoulli_consistent  even_bernoulli at n = bernoulli at 2n
//   even_euler_consistent      even_euler at n = euler at 2n
//   even_fibonacci_consistent  even_fibonacci at n = fibonacci at 2n
// for n = 1..n_max, everything compared exactly. DomainError for n_max < 1.
IdentityReport identity_suite(int n_max);

} // namespace convseq

#endif
