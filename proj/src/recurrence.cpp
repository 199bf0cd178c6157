#include "convseq/recurrence.hpp"

#include <utility>

namespace convseq {

std::string_view to_string(MethodId method) {
    switch (method) {
        case MethodId::recursion: return "recursion";
        case MethodId::composition: return "composition";
        case MethodId::partition: return "partition";
        case MethodId::diophantine: return "diophantine";
        case MethodId::determinant: return "determinant";
        case MethodId::series_reciprocal: return "series_reciprocal";
    }
    return "unknown";
}

std::optional<MethodId> parse_method(std::string_view name) {
    for (MethodId method : kAllMethods) {
        if (name == to_string(method)) return method;
    }
    return std::nullopt;
}

CoefficientSequence::CoefficientSequence(std::string name, Evaluator evaluator)
    : CoefficientSequence(std::move(name), std::move(evaluator), NoCheck{}) {
    Rational a0 = a(0);
    if (!(a0 == Rational(1))) {
        throw DomainError("sequence \"" + name_ + "\": a_0 = " + format_rational(a0) +
                          ", but the convolution condition requires a_0 = 1; divide "
                          "every coefficient by a_0 (see normalized_from)");
    }
}

CoefficientSequence::CoefficientSequence(std::string name, Evaluator evaluator, NoCheck)
    : name_(std::move(name)), evaluator_(std::move(evaluator)) {
    if (!evaluator_) {
        throw DomainError("sequence \"" + name_ + "\": evaluator is empty");
    }
}

CoefficientSequence::CoefficientSequence(CoefficientSequence&& other)
    : name_(std::move(other.name_)), evaluator_(std::move(other.evaluator_)) {
    std::scoped_lock lock(other.mutex_);
    a_cache_ = std::move(other.a_cache_);
    b_cache_ = std::move(other.b_cache_);
}

CoefficientSequence CoefficientSequence::normalized_from(std::string name,
                                                         Evaluator evaluator) {
    if (!evaluator) {
        throw DomainError("sequence \"" + name + "\": evaluator is empty");
    }
    Rational a0 = evaluator(0);
    if (a0.is_zero()) {
        throw DomainError("sequence \"" + name +
                          "\": a_0 = 0 cannot be normalized to 1");
    }
    return CoefficientSequence(
        std::move(name),
        [inner = std::move(evaluator), a0](int i) { return inner(i) / a0; });
}

Rational CoefficientSequence::a_locked(int i) const {
    while (static_cast<int>(a_cache_.size()) <= i) {
        a_cache_.push_back(evaluator_(static_cast<int>(a_cache_.size())));
    }
    return a_cache_[static_cast<std::size_t>(i)];
}

Rational CoefficientSequence::a(int i) const {
    if (i < 0) {
        throw DomainError("sequence \"" + name_ + "\": coefficient index " +
                          std::to_string(i) + " is negative");
    }
    std::scoped_lock lock(mutex_);
    return a_locked(i);
}

Rational CoefficientSequence::recursion_term(int n) const {
    if (n < 0) {
        throw DomainError("sequence \"" + name_ + "\": term index " +
                          std::to_string(n) + " is negative");
    }
    std::scoped_lock lock(mutex_);
    if (b_cache_.empty()) b_cache_.push_back(Rational(1));
    while (static_cast<int>(b_cache_.size()) <= n) {
        int m = static_cast<int>(b_cache_.size());
        Rational sum(0);
        for (int h = 0; h < m; ++h) {
            sum += a_locked(m - h) * b_cache_[static_cast<std::size_t>(h)];
        }
        b_cache_.push_back(-sum);
    }
    return b_cache_[static_cast<std::size_t>(n)];
}

namespace {

void require_positive_index(int n, const CoefficientSequence& a, const char* method) {
    if (n < 1) {
        throw DomainError("sequence \"" + a.name() + "\": the " + std::string(method) +
                          " method needs n >= 1, got n = " + std::to_string(n));
    }
}

// -a_1 .. -a_n as a flat table so the hot loops skip the mutex.
std::vector<Rational> negated_prefix(const CoefficientSequence& a, int n) {
    std::vector<Rational> neg(static_cast<std::size_t>(n) + 1);
    for (int i = 1; i <= n; ++i) {
        neg[static_cast<std::size_t>(i)] = -a.a(i);
    }
    return neg;
}

} // namespace

Rational composition_sum(const CoefficientSequence& a, int n, int composition_cap,
                         EvalStats* stats) {
    require_positive_index(n, a, "composition");
    ensure_composition_enumerable(n, composition_cap);
    std::vector<Rational> neg = negated_prefix(a, n);
    Rational total(0);
    std::uint64_t terms = 0;
    // Depth-first over the first part; `prefix` carries the product of
    // -a_part along the current branch, so each of the 2^(n-1) leaves costs
    // one multiplication instead of one per part.
    auto walk = [&](auto&& self, int remaining, const Rational& prefix) -> void {
        for (int first = 1; first <= remaining; ++first) {
            Rational branch = prefix * neg[static_cast<std::size_t>(first)];
            if (first == remaining) {
                total += branch;
                ++terms;
            } else {
                self(self, remaining - first, branch);
            }
        }
    };
    walk(walk, n, Rational(1));
    if (stats) stats->terms = terms;
    return total;
}

Rational partition_sum(const CoefficientSequence& a, int n, EvalStats* stats) {
    require_positive_index(n, a, "partition");
    std::vector<Rational> neg = negated_prefix(a, n);
    Rational total(0);
    std::uint64_t terms = 0;
    PartitionStream stream(n);
    while (auto partition = stream.next()) {
        Rational product(1);
        for (const auto& [value, count] : partition->runs()) {
            product *= pow(neg[static_cast<std::size_t>(value)],
                           static_cast<unsigned long>(count));
        }
        total += Rational(multiplicity(*partition)) * product;
        ++terms;
    }
    if (stats) stats->terms = terms;
    return total;
}

Rational diophantine_sum(const CoefficientSequence& a, int n, EvalStats* stats) {
    require_positive_index(n, a, "diophantine");
    std::vector<Rational> coefficients(static_cast<std::size_t>(n) + 1);
    for (int i = 1; i <= n; ++i) {
        coefficients[static_cast<std::size_t>(i)] = a.a(i);
    }
    Rational total(0);
    std::uint64_t terms = 0;
    DiophantineStream stream(n);
    while (auto solution = stream.next()) {
        const auto& q = solution->counts();
        int q_total = solution->total_count();
        // (-1)^(q_1+...+q_n) (q_1+...+q_n)! / (q_1! ... q_n!) a_1^{q_1} ... a_n^{q_n}
        BigInt weight = factorial(q_total);
        for (int i = 1; i <= n; ++i) {
            int qi = q[static_cast<std::size_t>(i - 1)];
            if (qi > 1) weight /= factorial(qi);
        }
        if (q_total % 2 != 0) weight = -weight;
        Rational term(weight);
        for (int i = 1; i <= n; ++i) {
            int qi = q[static_cast<std::size_t>(i - 1)];
            if (qi > 0) {
                term *= pow(coefficients[static_cast<std::size_t>(i)],
                            static_cast<unsigned long>(qi));
            }
        }
        total += term;
        ++terms;
    }
    if (stats) stats->terms = terms;
    return total;
}

Rational determinant_term(const CoefficientSequence& a, int n) {
    require_positive_index(n, a, "determinant");
    // d_k = determinant of the leading k-by-k block. Expanding along the
    // last column (one a-entry plus the unit superdiagonal above it) gives
    // d_k = sum_{j=1..k} (-1)^(k-j) a_{k-j+1} d_{j-1}, division-free.
    std::vector<Rational> d(static_cast<std::size_t>(n) + 1);
    d[0] = Rational(1);
    for (int k = 1; k <= n; ++k) {
        Rational sum(0);
        for (int j = 1; j <= k; ++j) {
            Rational term = a.a(k - j + 1) * d[static_cast<std::size_t>(j - 1)];
            if ((k - j) % 2 == 0) {
                sum += term;
            } else {
                sum -= term;
            }
        }
        d[static_cast<std::size_t>(k)] = sum;
    }
    return n % 2 == 0 ? d[static_cast<std::size_t>(n)] : -d[static_cast<std::size_t>(n)];
}

TruncatedSeries::TruncatedSeries(int order) {
    if (order < 0) {
        throw DomainError("series order " + std::to_string(order) + " is negative");
    }
    coefficients_.assign(static_cast<std::size_t>(order) + 1, Rational(0));
}

TruncatedSeries::TruncatedSeries(std::vector<Rational> coefficients)
    : coefficients_(std::move(coefficients)) {
    if (coefficients_.empty()) {
        throw DomainError("a truncated series needs at least the constant coefficient");
    }
}

void TruncatedSeries::check_index(int k) const {
    if (k < 0 || k > order()) {
        throw DomainError("series coefficient index " + std::to_string(k) +
                          " is outside the truncation window 0.." +
                          std::to_string(order()));
    }
}

const Rational& TruncatedSeries::at(int k) const {
    check_index(k);
    return coefficients_[static_cast<std::size_t>(k)];
}

void TruncatedSeries::set(int k, Rational value) {
    check_index(k);
    coefficients_[static_cast<std::size_t>(k)] = std::move(value);
}

TruncatedSeries truncated_coefficients(const CoefficientSequence& a, int order) {
    TruncatedSeries series(order);
    for (int k = 0; k <= order; ++k) {
        series.set(k, a.a(k));
    }
    return series;
}

TruncatedSeries cauchy_product(const TruncatedSeries& x, const TruncatedSeries& y,
                               int order) {
    if (order < 0) {
        throw DomainError("product order " + std::to_string(order) + " is negative");
    }
    if (x.order() < order || y.order() < order) {
        throw DomainError("cauchy_product at order " + std::to_string(order) +
                          " needs both factors truncated at or above that order, got " +
                          std::to_string(x.order()) + " and " + std::to_string(y.order()));
    }
    TruncatedSeries result(order);
    for (int k = 0; k <= order; ++k) {
        Rational sum(0);
        for (int h = 0; h <= k; ++h) {
            sum += x.at(k - h) * y.at(h);
        }
        result.set(k, std::move(sum));
    }
    return result;
}

TruncatedSeries series_reciprocal(const CoefficientSequence& a, int order) {
    TruncatedSeries coefficients = truncated_coefficients(a, order);
    TruncatedSeries reciprocal(order);
    reciprocal.set(0, Rational(1));
    for (int k = 1; k <= order; ++k) {
        Rational sum(0);
        for (int h = 0; h < k; ++h) {
            sum += coefficients.at(k - h) * reciprocal.at(h);
        }
        reciprocal.set(k, -sum);
    }
    return reciprocal;
}

Rational reciprocal_term(const CoefficientSequence& a, int n, MethodId method,
                         const EvalOptions& options) {
    auto count = [&](std::uint64_t terms) {
        if (options.stats) options.stats->terms = terms;
    };
    std::uint64_t triangle = n >= 0 ? std::uint64_t(n) * (std::uint64_t(n) + 1) / 2 : 0;
    switch (method) {
        case MethodId::recursion:
            count(triangle);
            return a.recursion_term(n);
        case MethodId::composition:
            return composition_sum(a, n, options.composition_cap, options.stats);
        case MethodId::partition:
            return partition_sum(a, n, options.stats);
        case MethodId::diophantine:
            return diophantine_sum(a, n, options.stats);
        case MethodId::determinant:
            require_positive_index(n, a, "determinant");
            count(triangle);
            return determinant_term(a, n);
        case MethodId::series_reciprocal:
            require_positive_index(n, a, "series_reciprocal");
            count(triangle);
            return series_reciprocal(a, n).at(n);
    }
    throw DomainError("unknown method id");
}

std::string_view to_string(CheckStatus status) {
    switch (status) {
        case CheckStatus::pass: return "pass";
        case CheckStatus::fail: return "fail";
        case CheckStatus::skipped: return "skipped";
    }
    return "unknown";
}

bool VerificationReport::all_ok() const {
    for (const MethodCheck& check : checks) {
        if (check.status == CheckStatus::fail) return false;
    }
    return true;
}

VerificationReport verify_all_methods(const CoefficientSequence& a, int n_max,
                                      int composition_cap) {
    if (n_max < 1) {
        throw DomainError("verification needs n_max >= 1, got " + std::to_string(n_max));
    }
    VerificationReport report{a.name(), n_max, {}};
    for (int n = 1; n <= n_max; ++n) {
        Rational expected = a.recursion_term(n);
        for (MethodId method : kAllMethods) {
            if (method == MethodId::recursion) continue;
            MethodCheck check;
            check.n = n;
            check.method = method;
            check.expected = expected;
            if (method == MethodId::composition &&
                (n > composition_cap || n > kCompositionMaskLimit)) {
                check.status = CheckStatus::skipped;
                check.note = "2^" + std::to_string(n - 1) +
                             " compositions exceed the cap " +
                             std::to_string(composition_cap);
                report.checks.push_back(std::move(check));
                continue;
            }
            auto begin = std::chrono::steady_clock::now();
            check.got = reciprocal_term(a, n, method, {composition_cap, nullptr});
            auto end = std::chrono::steady_clock::now();
            check.elapsed = std::chrono::duration_cast<std::chrono::microseconds>(end - begin);
            check.status = check.got == expected ? CheckStatus::pass : CheckStatus::fail;
            report.checks.push_back(std::move(check));
        }
    }
    return report;
}

} // namespace convseq
