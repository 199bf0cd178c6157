#ifndef CONVSEQ_RECURRENCE_HPP
#define CONVSEQ_RECURRENCE_HPP

#include <array>
#include <chrono>
#include <cstdint>
#include <functional>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "convseq/partitions.hpp"
#include "convseq/rational.hpp"

namespace convseq {

// The independent ways of computing the reciprocal-sequence term b_n.
enum class MethodId {
    recursion,
    composition,
    partition,
    diophantine,
    determinant,
    series_reciprocal,
};

inline constexpr std::array<MethodId, 6> kAllMethods = {
    MethodId::recursion,    MethodId::composition, MethodId::partition,
    MethodId::diophantine,  MethodId::determinant, MethodId::series_reciprocal,
};

std::string_view to_string(MethodId method);
std::optional<MethodId> parse_method(std::string_view name);

// A coefficient sequence a_0, a_1, a_2, ... with a_0 = 1, the defining
// datum of the convolution condition sum_{h=0..n} a_{n-h} b_h = [n = 0].
// Coefficients and the recursion terms b_i are memoized per instance;
// all public members are safe to call concurrently.
class CoefficientSequence {
public:
    using Evaluator = std::function<Rational(int)>;

    // DomainError unless evaluator(0) == 1; the message points at
    // normalized_from for sequences that merely start at a_0 != 0.
    CoefficientSequence(std::string name, Evaluator evaluator);

    // Rescales every coefficient by 1/a_0 so the sequence qualifies.
    // DomainError when a_0 = 0, which no rescaling can repair.
    static CoefficientSequence normalized_from(std::string name, Evaluator evaluator);

    // Movable (the caches come along, guarded by the source's mutex), but
    // not copyable: two instances sharing one evaluator is almost always a
    // mistake, and the memo caches make copies expensive.
    CoefficientSequence(CoefficientSequence&& other);
    CoefficientSequence(const CoefficientSequence&) = delete;
    CoefficientSequence& operator=(CoefficientSequence&&) = delete;
    CoefficientSequence& operator=(const CoefficientSequence&) = delete;

    const std::string& name() const noexcept { return name_; }

    // a_i; DomainError for i < 0, evaluator errors propagate unchanged.
    Rational a(int i) const;

    // b_n via the linear recurrence b_n = -sum_{h=0..n-1} a_{n-h} b_h with
    // b_0 = 1: the cheapest method and the reference the others are
    // checked against. DomainError for n < 0.
    Rational recursion_term(int n) const;

private:
    struct NoCheck {};
    CoefficientSequence(std::string name, Evaluator evaluator, NoCheck);

    Rational a_locked(int i) const;

    std::string name_;
    Evaluator evaluator_;
    mutable std::mutex mutex_;
    mutable std::vector<Rational> a_cache_;
    mutable std::vector<Rational> b_cache_;
};

// Term-count bookkeeping the benchmarking and verification layers report.
struct EvalStats {
    std::uint64_t terms = 0;
};

struct EvalOptions {
    int composition_cap = kDefaultCompositionCap;
    EvalStats* stats = nullptr;
};

// b_n as a sum over the 2^(n-1) compositions of n: each composition
// contributes the product of -a_part over its parts. Walks the composition
// tree depth-first with shared prefix products, so the summand count
// reported in stats is exactly 2^(n-1) while far fewer multiplications
// run. DomainError for n < 1; ResourceLimitError when n exceeds the cap.
Rational composition_sum(const CoefficientSequence& a, int n,
                         int composition_cap = kDefaultCompositionCap,
                         EvalStats* stats = nullptr);

// b_n as a sum over the p(n) partitions of n, each weighted by the number
// of compositions sharing its part multiset. DomainError for n < 1.
Rational partition_sum(const CoefficientSequence& a, int n, EvalStats* stats = nullptr);

// b_n as a multinomial-weighted sum of monomials a_1^{q_1} ... a_n^{q_n}
// over the solutions of q_1 + 2 q_2 + ... + n q_n = n, walked directly on
// the solution stream. DomainError for n < 1.
Rational diophantine_sum(const CoefficientSequence& a, int n, EvalStats* stats = nullptr);

// b_n = (-1)^n times the determinant of the n-by-n lower Hessenberg matrix
// with rows (a_1 1 0 ...), (a_2 a_1 1 0 ...), ..., (a_n a_{n-1} ... a_1),
// evaluated division-free by expanding along the last column. DomainError
// for n < 1.
Rational determinant_term(const CoefficientSequence& a, int n);

// A power series truncated at x^order: exactly the coefficients c_0..c_order.
// Reading or writing outside that window is a DomainError, which keeps the
// truncation honest - no code path can silently consult dropped terms.
class TruncatedSeries {
public:
    explicit TruncatedSeries(int order);                    // all zero
    explicit TruncatedSeries(std::vector<Rational> coefficients);

    int order() const noexcept { return static_cast<int>(coefficients_.size()) - 1; }

    const Rational& at(int k) const;
    void set(int k, Rational value);

    friend bool operator==(const TruncatedSeries& lhs, const TruncatedSeries& rhs) {
        return lhs.coefficients_ == rhs.coefficients_;
    }

private:
    void check_index(int k) const;
    std::vector<Rational> coefficients_;
};

// The series a_0 + a_1 x + ... + a_order x^order.
TruncatedSeries truncated_coefficients(const CoefficientSequence& a, int order);

// Coefficients 0..order of x*y. Both inputs must carry at least `order`
// coefficients (DomainError otherwise): a shorter input could not supply
// every term of the highest requested coefficient.
TruncatedSeries cauchy_product(const TruncatedSeries& x, const TruncatedSeries& y,
                               int order);

// The reciprocal series b with cauchy_product(a, b, order) = (1, 0, ..., 0),
// computed by forward substitution on the truncated coefficients. This is a
// separate code path from CoefficientSequence::recursion_term on purpose:
// the two serve as independent implementations of the same object.
TruncatedSeries series_reciprocal(const CoefficientSequence& a, int order);

// Uniform entry point used by the CLI and the verification harness.
// recursion accepts n >= 0, every other method n >= 1.
Rational reciprocal_term(const CoefficientSequence& a, int n, MethodId method,
                         const EvalOptions& options = {});

enum class CheckStatus { pass, fail, skipped };

std::string_view to_string(CheckStatus status);

struct MethodCheck {
    int n = 0;
    MethodId method = MethodId::recursion;
    CheckStatus status = CheckStatus::pass;
    Rational expected;
    Rational got;
    std::chrono::microseconds elapsed{0};
    std::string note; // skip reason, empty otherwise
};

struct VerificationReport {
    std::string sequence;
    int n_max = 0;
    std::vector<MethodCheck> checks;

    bool all_ok() const; // true when no check failed (skips are fine)
};

// Compares every non-recursion method against the recursion reference for
// n = 1..n_max. The composition method is skipped (not failed) for n above
// the cap. DomainError for n_max < 1.
VerificationReport verify_all_methods(const CoefficientSequence& a, int n_max,
                                      int composition_cap = kDefaultCompositionCap);

} // namespace convseq

#endif
