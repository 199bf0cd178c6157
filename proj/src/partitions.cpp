#include "convseq/partitions.hpp"

#include <algorithm>
#include <numeric>

namespace convseq {

namespace {

int checked_total(const std::vector<int>& parts, const char* kind) {
    long long sum = 0;
    for (int part : parts) {
        if (part < 1) {
            throw DomainError(std::string(kind) + " part " + std::to_string(part) +
                              " is not a positive integer");
        }
        sum += part;
    }
    if (parts.empty()) {
        throw DomainError(std::string(kind) + " must have at least one part");
    }
    if (sum > INT32_MAX) {
        throw DomainError(std::string(kind) + " total overflows int");
    }
    return static_cast<int>(sum);
}

} // namespace

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    n_ = checked_total(parts_, "partition");
    for (std::size_t i = 1; i < parts_.size(); ++i) {
        if (parts_[i] > parts_[i - 1]) {
            throw DomainError("partition parts must be non-increasing: " +
                              bracket_form(parts_));
        }
    }
    for (int part : parts_) {
        if (!runs_.empty() && runs_.back().first == part) {
            ++runs_.back().second;
        } else {
            runs_.emplace_back(part, 1);
        }
    }
}

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
    n_ = checked_total(parts_, "composition");
}

DiophantineSolution::DiophantineSolution(std::vector<int> counts)
    : counts_(std::move(counts)) {
    n_ = static_cast<int>(counts_.size());
    if (n_ < 1) {
        throw DomainError("diophantine solution must carry at least one count");
    }
    long long weighted = 0;
    for (int i = 1; i <= n_; ++i) {
        int q = counts_[static_cast<std::size_t>(i - 1)];
        if (q < 0) {
            throw DomainError("diophantine count q_" + std::to_string(i) + " = " +
                              std::to_string(q) + " is negative");
        }
        weighted += static_cast<long long>(i) * q;
    }
    if (weighted != n_) {
        throw DomainError("diophantine counts " + bracket_form(counts_) +
                          " weigh to " + std::to_string(weighted) +
                          ", expected " + std::to_string(n_));
    }
}

int DiophantineSolution::total_count() const noexcept {
    return std::accumulate(counts_.begin(), counts_.end(), 0);
}

PartitionStream::PartitionStream(int n) : n_(n) {
    if (n < 1) {
        throw DomainError("partitions of n = " + std::to_string(n) +
                          " are not defined; n must be >= 1");
    }
}

std::optional<Partition> PartitionStream::next() {
    if (exhausted_) return std::nullopt;
    if (!started_) {
        started_ = true;
        parts_.assign(1, n_);
        return Partition(parts_);
    }
    // Reverse-lexicographic successor: shrink the rightmost part that is
    // still > 1, then redistribute what that freed (the unit taken plus all
    // trailing ones) into the largest parts the new tail allows.
    int k = static_cast<int>(parts_.size()) - 1;
    while (k >= 0 && parts_[static_cast<std::size_t>(k)] == 1) --k;
    if (k < 0) {
        exhausted_ = true;
        return std::nullopt;
    }
    int freed = static_cast<int>(parts_.size()) - 1 - k + 1;
    int value = parts_[static_cast<std::size_t>(k)] - 1;
    parts_.resize(static_cast<std::size_t>(k) + 1);
    parts_[static_cast<std::size_t>(k)] = value;
    while (freed >= value) {
        parts_.push_back(value);
        freed -= value;
    }
    if (freed > 0) parts_.push_back(freed);
    return Partition(parts_);
}

void ensure_composition_enumerable(int n, int composition_cap) {
    if (n > kCompositionMaskLimit) {
        throw ResourceLimitError(
            "compositions of n = " + std::to_string(n) + " cannot be enumerated: 2^" +
            std::to_string(n - 1) + " items exceed the 63-bit index limit");
    }
    if (n > composition_cap) {
        throw ResourceLimitError(
            "enumerating the 2^" + std::to_string(n - 1) + " = " +
            std::to_string(std::uint64_t{1} << (n - 1)) + " compositions of n = " +
            std::to_string(n) + " exceeds the composition cap " +
            std::to_string(composition_cap) + "; raise the cap to force it");
    }
}

CompositionStream::CompositionStream(int n, int composition_cap) : n_(n), total_(0) {
    if (n < 1) {
        throw DomainError("compositions of n = " + std::to_string(n) +
                          " are not defined; n must be >= 1");
    }
    ensure_composition_enumerable(n, composition_cap);
    total_ = std::uint64_t{1} << (n - 1);
}

std::optional<Composition> CompositionStream::next() {
    if (mask_ == total_) return std::nullopt;
    std::vector<int> parts;
    int run = 0;
    for (int position = 1; position <= n_; ++position) {
        ++run;
        bool cut_here = position < n_ &&
                        (mask_ >> (n_ - 1 - position)) & std::uint64_t{1};
        if (position == n_ || cut_here) {
            parts.push_back(run);
            run = 0;
        }
    }
    ++mask_;
    return Composition(std::move(parts));
}

DiophantineStream::DiophantineStream(int n) : n_(n) {
    if (n < 1) {
        throw DomainError("solutions for n = " + std::to_string(n) +
                          " are not defined; n must be >= 1");
    }
}

std::optional<DiophantineSolution> DiophantineStream::next() {
    if (exhausted_) return std::nullopt;
    auto fill_greedily = [this](int budget, int from) {
        // Maximize q_from, then q_{from-1}, ...; whatever is left lands in q_1.
        for (int i = from; i >= 2; --i) {
            counts_[static_cast<std::size_t>(i - 1)] = budget / i;
            budget %= i;
        }
        counts_[0] = budget;
    };
    if (!started_) {
        started_ = true;
        counts_.assign(static_cast<std::size_t>(n_), 0);
        fill_greedily(n_, n_);
        return DiophantineSolution(counts_);
    }
    // Successor: release one unit of the smallest index >= 2 still in use
    // and re-pack everything below it as greedily as possible.
    int i = 2;
    while (i <= n_ && counts_[static_cast<std::size_t>(i - 1)] == 0) ++i;
    if (i > n_) {
        exhausted_ = true;
        return std::nullopt;
    }
    int budget = counts_[0] + i;
    --counts_[static_cast<std::size_t>(i - 1)];
    fill_greedily(budget, i - 1);
    return DiophantineSolution(counts_);
}

BigInt multiplicity(const Partition& partition) {
    BigInt denominator(1);
    for (const auto& [value, count] : partition.runs()) {
        (void)value;
        denominator *= factorial(count);
    }
    return factorial(partition.length()) / denominator;
}

DiophantineSolution partition_to_diophantine(const Partition& partition) {
    std::vector<int> counts(static_cast<std::size_t>(partition.n()), 0);
    for (const auto& [value, count] : partition.runs()) {
        counts[static_cast<std::size_t>(value - 1)] = count;
    }
    return DiophantineSolution(std::move(counts));
}

Partition diophantine_to_partition(const DiophantineSolution& solution) {
    std::vector<int> parts;
    const auto& counts = solution.counts();
    for (int value = solution.n(); value >= 1; --value) {
        for (int k = 0; k < counts[static_cast<std::size_t>(value - 1)]; ++k) {
            parts.push_back(value);
        }
    }
    return Partition(std::move(parts));
}

std::string bracket_form(const std::vector<int>& values) {
    std::string out = "[";
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i > 0) out += ',';
        out += std::to_string(values[i]);
    }
    out += ']';
    return out;
}

std::string to_string(const Partition& partition) { return bracket_form(partition.parts()); }
std::string to_string(const Composition& composition) { return bracket_form(composition.parts()); }
std::string to_string(const DiophantineSolution& solution) { return bracket_form(solution.counts()); }

} // namespace convseq
