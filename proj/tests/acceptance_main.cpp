// Standalone acceptance harness. Drives the installed CLI binary (argv[1])
// end to end for the command-level criteria and the library directly for
// the numeric ones. Prints one [PASS]/[FAIL] line per criterion and exits
// non-zero if any criterion failed.

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <iomanip>
#include <iostream>
#include <memory>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "convseq/catalog.hpp"
#include "convseq/partitions.hpp"
#include "convseq/recurrence.hpp"
#include "convseq/sequence_io.hpp"

using namespace convseq;

namespace {

int g_failures = 0;

class Criterion {
public:
    Criterion(int index, std::string name)
        : index_(index), name_(std::move(name)),
          begin_(std::chrono::steady_clock::now()) {}

    void require(bool condition, const std::string& detail) {
        if (!condition && ok_) {
            ok_ = false;
            detail_ = detail;
        }
    }

    double elapsed_seconds() const {
        auto now = std::chrono::steady_clock::now();
        return std::chrono::duration<double>(now - begin_).count();
    }

    // Enforces the wall-clock budget and prints the verdict line.
    void finish(double budget_seconds) {
        double seconds = elapsed_seconds();
        if (seconds >= budget_seconds) {
            require(false, "took " + std::to_string(seconds) + "s, budget " +
                               std::to_string(budget_seconds) + "s");
        }
        std::cout << (ok_ ? "[PASS] " : "[FAIL] ") << "criterion " << index_ << " "
                  << name_ << " (" << std::fixed << std::setprecision(3) << seconds
                  << "s)";
        if (!ok_ && !detail_.empty()) std::cout << " -- " << detail_;
        std::cout << std::endl;
        if (!ok_) ++g_failures;
    }

private:
    int index_;
    std::string name_;
    bool ok_ = true;
    std::string detail_;
    std::chrono::steady_clock::time_point begin_;
};

struct ProcessResult {
    int status = -1;
    std::string output;
};

ProcessResult run_cli(const std::string& binary, const std::string& arguments) {
    std::string command = binary + " " + arguments + " 2>/dev/null";
    FILE* pipe = popen(command.c_str(), "r");
    if (!pipe) return {};
    std::string output;
    char buffer[4096];
    std::size_t got;
    while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0) {
        output.append(buffer, got);
    }
    int raw = pclose(pipe);
    ProcessResult result;
    result.output = std::move(output);
    result.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    return result;
}

// Independent p(n) counter (DP over the largest allowed part), kept apart
// from the streaming enumerator it cross-checks.
long long partition_count_oracle(int n) {
    std::vector<long long> ways(static_cast<std::size_t>(n) + 1, 0);
    ways[0] = 1;
    for (int part = 1; part <= n; ++part) {
        for (int total = part; total <= n; ++total) {
            ways[static_cast<std::size_t>(total)] +=
                ways[static_cast<std::size_t>(total - part)];
        }
    }
    return ways[static_cast<std::size_t>(n)];
}

constexpr std::uint64_t kRandomSeed = 20250817;

CoefficientSequence random_sequence(std::mt19937_64& rng, const std::string& name,
                                    int max_index) {
    auto values = std::make_shared<std::vector<Rational>>();
    values->push_back(Rational(1));
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 9);
    for (int i = 1; i <= max_index; ++i) {
        values->push_back(Rational(num(rng), den(rng)));
    }
    return CoefficientSequence(name, [values, name](int i) -> Rational {
        if (i >= static_cast<int>(values->size())) {
            throw DomainError(name + ": no coefficient at index " + std::to_string(i));
        }
        return (*values)[static_cast<std::size_t>(i)];
    });
}

void criterion_1(const std::string& binary) {
    Criterion c(1, "cli computes B_4 = -1/30 by the partition method");
    ProcessResult result =
        run_cli(binary, "compute --seq bernoulli --from 4 --to 4 --method partition");
    c.require(result.status == 0, "exit status " + std::to_string(result.status));
    c.require(result.output == "4  -1/720  -1/30  partition\n",
              "unexpected output: " + result.output);
    c.finish(1.0);
}

void criterion_2(const std::string& binary) {
    Criterion c(2, "every method reports F_8 = 21 for even_fibonacci at n = 4");
    for (MethodId method : kAllMethods) {
        std::string name(to_string(method));
        ProcessResult result = run_cli(
            binary, "compute --seq even_fibonacci --from 4 --to 4 --method " + name);
        c.require(result.status == 0,
                  name + ": exit status " + std::to_string(result.status));
        c.require(result.output == "4  21  21  " + name + "\n",
                  name + ": unexpected output: " + result.output);
    }
    // The composition route must have summed exactly 2^3 = 8 terms.
    EvalStats stats;
    CoefficientSequence seq = make_sequence(entry("even_fibonacci"));
    Rational value = composition_sum(seq, 4, kDefaultCompositionCap, &stats);
    c.require(value == Rational(21), "composition_sum gave " + format_rational(value));
    c.require(stats.terms == 8, "term count " + std::to_string(stats.terms));
    c.finish(1.0);
}

void criterion_3(const std::string& binary) {
    Criterion c(3, "cli enumerates the 5 partitions of 4 in order with sum_mu 8");
    ProcessResult result = run_cli(binary, "enum --n 4 --kind partitions");
    c.require(result.status == 0, "exit status " + std::to_string(result.status));
    c.require(result.output == "[4]\n[3,1]\n[2,2]\n[2,1,1]\n[1,1,1,1]\ncount 5 sum_mu 8\n",
              "unexpected output: " + result.output);
    c.finish(1.0);
}

void criterion_4() {
    Criterion c(4, "cross-method agreement on 6 catalog + 20 random sequences (seed " +
                       std::to_string(kRandomSeed) + ")");
    std::vector<CoefficientSequence> sequences;
    for (const CatalogEntry& entry : catalog()) {
        sequences.push_back(make_sequence(entry));
    }
    std::mt19937_64 rng(kRandomSeed);
    for (int i = 0; i < 20; ++i) {
        sequences.push_back(random_sequence(rng, "random_" + std::to_string(i), 20));
    }
    for (const CoefficientSequence& seq : sequences) {
        for (int n = 1; n <= 14; ++n) {
            Rational expected = seq.recursion_term(n);
            c.require(partition_sum(seq, n) == expected, seq.name() + " partition n=" +
                                                             std::to_string(n));
            c.require(diophantine_sum(seq, n) == expected, seq.name() + " diophantine n=" +
                                                               std::to_string(n));
            c.require(determinant_term(seq, n) == expected, seq.name() + " determinant n=" +
                                                                std::to_string(n));
            c.require(series_reciprocal(seq, n).at(n) == expected,
                      seq.name() + " series_reciprocal n=" + std::to_string(n));
        }
        // The exponential method gets the extended range.
        for (int n = 1; n <= 20; ++n) {
            c.require(composition_sum(seq, n, 20) == seq.recursion_term(n),
                      seq.name() + " composition n=" + std::to_string(n));
        }
    }
    c.finish(60.0);
}

void criterion_5() {
    Criterion c(5, "a times series_reciprocal(a, 30) is the delta sequence per entry");
    for (const CatalogEntry& entry : catalog()) {
        CoefficientSequence seq = make_sequence(entry);
        TruncatedSeries coefficients = truncated_coefficients(seq, 30);
        TruncatedSeries reciprocal = series_reciprocal(seq, 30);
        TruncatedSeries product = cauchy_product(coefficients, reciprocal, 30);
        std::string name(entry.name);
        c.require(product.at(0) == Rational(1), name + ": product term 0");
        for (int k = 1; k <= 30; ++k) {
            c.require(product.at(k) == Rational(0),
                      name + ": product term " + std::to_string(k));
        }
    }
    c.finish(60.0);
}

void criterion_6() {
    Criterion c(6, "bijection round-trips and counts match the independent counter");
    const long long frozen[] = {1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
    for (int n = 1; n <= 10; ++n) {
        c.require(partition_count_oracle(n) == frozen[n - 1],
                  "oracle p(" + std::to_string(n) + ")");
    }
    for (int n = 1; n <= 16; ++n) {
        long long streamed = 0;
        PartitionStream partitions(n);
        while (auto partition = partitions.next()) {
            ++streamed;
            DiophantineSolution solution = partition_to_diophantine(*partition);
            c.require(diophantine_to_partition(solution) == *partition,
                      "round-trip failed at n=" + std::to_string(n));
            c.require(solution.total_count() == partition->length(),
                      "count sum mismatch at n=" + std::to_string(n));
        }
        c.require(streamed == partition_count_oracle(n),
                  "partition count at n=" + std::to_string(n));

        long long solutions = 0;
        DiophantineStream stream(n);
        while (stream.next()) ++solutions;
        c.require(solutions == partition_count_oracle(n),
                  "solution count at n=" + std::to_string(n));
    }
    c.finish(60.0);
}

void criterion_7() {
    Criterion c(7, "summation identities, odd-bernoulli zeros and cross-entry matches");
    IdentityReport report = identity_suite(15);
    c.require(report.all_ok(), "identity suite reported a failure");
    c.require(report.checks.size() == 15 * 8, "unexpected identity check count");
    std::set<std::string> names;
    for (const IdentityCheck& check : report.checks) names.insert(check.identity);
    c.require(names.count("fib_even_from_odd") == 1, "missing fib_even_from_odd");
    c.require(names.count("fib_odd_from_even") == 1, "missing fib_odd_from_even");
    c.require(names.count("fib_even_weighted") == 1, "missing fib_even_weighted");
    c.require(names.count("fib_parity_convolution") == 1, "missing fib_parity_convolution");

    // Explicitly: B_{2n+1} = 0 for 1 <= n <= 10 ...
    const CatalogEntry& bernoulli = entry("bernoulli");
    for (int n = 1; n <= 10; ++n) {
        c.require(named_value(bernoulli, 2 * n + 1, MethodId::recursion) == Rational(0),
                  "B_" + std::to_string(2 * n + 1) + " != 0");
    }
    // ... and the even-index entries equal their full counterparts, n <= 12.
    const CatalogEntry& even_bernoulli = entry("even_bernoulli");
    const CatalogEntry& euler = entry("euler");
    const CatalogEntry& even_euler = entry("even_euler");
    const CatalogEntry& fibonacci = entry("fibonacci");
    const CatalogEntry& even_fibonacci = entry("even_fibonacci");
    for (int n = 1; n <= 12; ++n) {
        c.require(named_value(even_bernoulli, n, MethodId::recursion) ==
                      named_value(bernoulli, 2 * n, MethodId::recursion),
                  "even_bernoulli at n=" + std::to_string(n));
        c.require(named_value(even_euler, n, MethodId::recursion) ==
                      named_value(euler, 2 * n, MethodId::recursion),
                  "even_euler at n=" + std::to_string(n));
        c.require(named_value(even_fibonacci, n, MethodId::recursion) ==
                      fibonacci_reference(2 * n),
                  "even_fibonacci at n=" + std::to_string(n));
        c.require(named_value(fibonacci, 2 * n, MethodId::recursion) ==
                      fibonacci_reference(2 * n),
                  "fibonacci at n=" + std::to_string(2 * n));
    }
    c.finish(60.0);
}

void criterion_8() {
    Criterion c(8, "partition-method bernoulli b_40 over p(40) = 37338 terms");
    CoefficientSequence seq = make_sequence(entry("bernoulli"));
    EvalStats stats;
    Rational value = partition_sum(seq, 40, &stats);
    c.require(stats.terms == 37338, "streamed " + std::to_string(stats.terms) + " terms");
    c.require(static_cast<long long>(stats.terms) == partition_count_oracle(40),
              "term count disagrees with the independent counter");
    c.require(value == seq.recursion_term(40), "b_40 mismatch against the recursion");
    c.finish(5.0);
}

} // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: " << argv[0] << " <path-to-cli-binary>" << std::endl;
        return 2;
    }
    std::string binary = argv[1];

    criterion_1(binary);
    criterion_2(binary);
    criterion_3(binary);
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();

    if (g_failures > 0) {
        std::cout << g_failures << " criterion(s) failed" << std::endl;
        return 1;
    }
    std::cout << "all acceptance criteria passed" << std::endl;
    return 0;
}
