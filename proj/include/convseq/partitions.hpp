#ifndef CONVSEQ_PARTITIONS_HPP
#define CONVSEQ_PARTITIONS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "convseq/rational.hpp"

namespace convseq {

// Default refusal threshold for composition enumeration: above this n the
// 2^(n-1) items are considered too many unless the caller raises the cap.
inline constexpr int kDefaultCompositionCap = 26;

// Hard ceiling: the enumerator indexes compositions by an n-1 bit cut mask.
inline constexpr int kCompositionMaskLimit = 63;

// An integer partition of n: parts in non-increasing order, each >= 1.
// Immutable after construction; DomainError on malformed input.
class Partition {
public:
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const noexcept { return parts_; }

    // Distinct part values paired with their multiplicities, largest first.
    const std::vector<std::pair<int, int>>& runs() const noexcept { return runs_; }

    int n() const noexcept { return n_; }
    int length() const noexcept { return static_cast<int>(parts_.size()); }

    friend bool operator==(const Partition& lhs, const Partition& rhs) {
        return lhs.parts_ == rhs.parts_;
    }

private:
    std::vector<int> parts_;
    std::vector<std::pair<int, int>> runs_;
    int n_ = 0;
};

// An ordered composition of n: parts >= 1, order significant.
class Composition {
public:
    explicit Composition(std::vector<int> parts);

    const std::vector<int>& parts() const noexcept { return parts_; }
    int n() const noexcept { return n_; }
    int length() const noexcept { return static_cast<int>(parts_.size()); }

    friend bool operator==(const Composition& lhs, const Composition& rhs) {
        return lhs.parts_ == rhs.parts_;
    }

private:
    std::vector<int> parts_;
    int n_ = 0;
};

// A solution of q_1 + 2 q_2 + ... + n q_n = n in non-negative integers,
// stored as the n counts q_1..q_n.
class DiophantineSolution {
public:
    explicit DiophantineSolution(std::vector<int> counts);

    // counts()[i-1] is q_i.
    const std::vector<int>& counts() const noexcept { return counts_; }
    int n() const noexcept { return n_; }

    // q_1 + q_2 + ... + q_n (the number of parts of the matching partition).
    int total_count() const noexcept;

    friend bool operator==(const DiophantineSolution& lhs, const DiophantineSolution& rhs) {
        return lhs.counts_ == rhs.counts_;
    }

private:
    std::vector<int> counts_;
    int n_ = 0;
};

// Yields the partitions of n one at a time in reverse-lexicographic order
// on the part lists: {n} first, {1,...,1} last. Single consumer per
// instance. DomainError for n < 1.
class PartitionStream {
public:
    explicit PartitionStream(int n);
    std::optional<Partition> next();

private:
    std::vector<int> parts_;
    int n_;
    bool started_ = false;
    bool exhausted_ = false;
};

// Yields the 2^(n-1) compositions of n by counting an (n-1)-bit cut mask
// upward from zero; bit k of the mask places a cut after position n-1-k,
// which makes {n} first and {1,...,1} last. Single consumer per instance.
// DomainError for n < 1; ResourceLimitError when n exceeds the cap (or the
// 63-bit mask ceiling, which no cap can lift).
class CompositionStream {
public:
    explicit CompositionStream(int n, int composition_cap = kDefaultCompositionCap);
    std::optional<Composition> next();

    // Total number of items this stream will yield: 2^(n-1).
    std::uint64_t total() const noexcept { return total_; }

private:
    int n_;
    std::uint64_t mask_ = 0;
    std::uint64_t total_;
};

// Yields every solution of q_1 + 2 q_2 + ... + n q_n = n, in the order
// induced by the partition stream under the counts-of-each-part bijection.
// Single consumer per instance. DomainError for n < 1.
class DiophantineStream {
public:
    explicit DiophantineStream(int n);
    std::optional<DiophantineSolution> next();

private:
    std::vector<int> counts_;
    int n_;
    bool started_ = false;
    bool exhausted_ = false;
};

// Throws ResourceLimitError unless 2^(n-1) compositions are within the cap.
void ensure_composition_enumerable(int n, int composition_cap);

// Number of compositions of n whose multiset of parts equals the given
// partition: length! / (product of multiplicity! over distinct values).
BigInt multiplicity(const Partition& partition);

// counts-of-each-part bijection between partitions of n and solutions of
// q_1 + 2 q_2 + ... + n q_n = n; the two maps are mutually inverse.
DiophantineSolution partition_to_diophantine(const Partition& partition);
Partition diophantine_to_partition(const DiophantineSolution& solution);

// "[3,1]" style rendering shared by the CLI and diagnostics.
std::string bracket_form(const std::vector<int>& values);
std::string to_string(const Partition& partition);
std::string to_string(const Composition& composition);
std::string to_string(const DiophantineSolution& solution);

} // namespace convseq

#endif
