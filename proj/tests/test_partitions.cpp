#include <doctest.h>

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <vector>

#include "convseq/partitions.hpp"

using namespace convseq;

namespace {

// ---------------------------------------------------------------------
// Independent oracles, written (and pinned by the frozen values below)
// before the streaming enumerators. Deliberately naive.
// ---------------------------------------------------------------------

// p(n) by dynamic programming over the largest allowed part.
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

void brute_partitions_into(int remaining, int max_part, std::vector<int>& prefix,
                           std::vector<std::vector<int>>& out) {
    if (remaining == 0) {
        out.push_back(prefix);
        return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
        prefix.push_back(part);
        brute_partitions_into(remaining - part, part, prefix, out);
        prefix.pop_back();
    }
}

std::vector<std::vector<int>> brute_partitions(int n) {
    std::vector<std::vector<int>> out;
    std::vector<int> prefix;
    brute_partitions_into(n, n, prefix, out);
    return out;
}

void brute_compositions_into(int remaining, std::vector<int>& prefix,
                             std::vector<std::vector<int>>& out) {
    if (remaining == 0) {
        out.push_back(prefix);
        return;
    }
    for (int part = 1; part <= remaining; ++part) {
        prefix.push_back(part);
        brute_compositions_into(remaining - part, prefix, out);
        prefix.pop_back();
    }
}

std::vector<std::vector<int>> brute_compositions(int n) {
    std::vector<std::vector<int>> out;
    std::vector<int> prefix;
    brute_compositions_into(n, prefix, out);
    return out;
}

std::vector<std::vector<int>> collect_partitions(int n) {
    std::vector<std::vector<int>> items;
    PartitionStream stream(n);
    while (auto partition = stream.next()) items.push_back(partition->parts());
    return items;
}

std::vector<std::vector<int>> collect_compositions(int n, int cap = kDefaultCompositionCap) {
    std::vector<std::vector<int>> items;
    CompositionStream stream(n, cap);
    while (auto composition = stream.next()) items.push_back(composition->parts());
    return items;
}

std::vector<std::vector<int>> collect_diophantine(int n) {
    std::vector<std::vector<int>> items;
    DiophantineStream stream(n);
    while (auto solution = stream.next()) items.push_back(solution->counts());
    return items;
}

} // namespace

TEST_CASE("partition counts match the DP oracle and the frozen table") {
    const long long expected[] = {1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
    for (int n = 1; n <= 10; ++n) {
        CHECK(partition_count_oracle(n) == expected[n - 1]);
        CHECK(static_cast<long long>(collect_partitions(n).size()) == expected[n - 1]);
    }
    for (int n = 11; n <= 25; ++n) {
        CHECK(static_cast<long long>(collect_partitions(n).size()) ==
              partition_count_oracle(n));
    }
    CHECK(partition_count_oracle(20) == 627);
    CHECK(partition_count_oracle(40) == 37338);
}

TEST_CASE("partition stream yields the documented order") {
    std::vector<std::vector<int>> expected = {
        {4}, {3, 1}, {2, 2}, {2, 1, 1}, {1, 1, 1, 1}};
    CHECK(collect_partitions(4) == expected);
    CHECK(collect_partitions(1) == std::vector<std::vector<int>>{{1}});

    // First {n}, last all-ones, strictly decreasing lexicographically.
    for (int n = 2; n <= 14; ++n) {
        auto items = collect_partitions(n);
        CHECK(items.front() == std::vector<int>{n});
        CHECK(items.back() == std::vector<int>(static_cast<std::size_t>(n), 1));
        for (std::size_t i = 0; i + 1 < items.size(); ++i) {
            CHECK(std::lexicographical_compare(items[i + 1].begin(), items[i + 1].end(),
                                               items[i].begin(), items[i].end()));
        }
    }
}

TEST_CASE("partition stream is complete and duplicate-free") {
    for (int n = 1; n <= 12; ++n) {
        auto items = collect_partitions(n);
        std::set<std::vector<int>> streamed(items.begin(), items.end());
        CHECK(streamed.size() == items.size());

        auto brute = brute_partitions(n);
        std::set<std::vector<int>> expected(brute.begin(), brute.end());
        CHECK(streamed == expected);
    }
}

TEST_CASE("partition invariants hold for every streamed item") {
    for (int n = 1; n <= 16; ++n) {
        PartitionStream stream(n);
        while (auto partition = stream.next()) {
            CHECK(partition->n() == n);
            CHECK(partition->length() >= 1);
            CHECK(partition->length() <= n);
            const auto& parts = partition->parts();
            int sum = 0;
            for (std::size_t i = 0; i < parts.size(); ++i) {
                sum += parts[i];
                if (i > 0) CHECK(parts[i] <= parts[i - 1]);
            }
            CHECK(sum == n);
            int run_total = 0;
            for (const auto& [value, count] : partition->runs()) {
                run_total += value * count;
            }
            CHECK(run_total == n);
        }
    }
}

TEST_CASE("two partition streams are byte-for-byte deterministic") {
    CHECK(collect_partitions(9) == collect_partitions(9));
}

TEST_CASE("partition constructor validates its input") {
    CHECK_THROWS_AS(Partition({1, 2}), DomainError);
    CHECK_THROWS_AS(Partition({3, 0}), DomainError);
    CHECK_THROWS_AS(Partition({-2}), DomainError);
    CHECK_THROWS_AS(Partition({}), DomainError);
    CHECK_THROWS_AS(PartitionStream(0), DomainError);
    CHECK_THROWS_AS(PartitionStream(-3), DomainError);

    Partition p({3, 2, 2, 1, 1, 1});
    CHECK(p.n() == 10);
    CHECK(p.length() == 6);
    std::vector<std::pair<int, int>> runs = {{3, 1}, {2, 2}, {1, 3}};
    CHECK(p.runs() == runs);
}

TEST_CASE("multiplicity fixtures") {
    CHECK(multiplicity(Partition({3, 1})) == 2);
    CHECK(multiplicity(Partition({2, 1, 1})) == 3);
    CHECK(multiplicity(Partition({5})) == 1);
    CHECK(multiplicity(Partition({2, 2})) == 1);
    CHECK(multiplicity(Partition({1, 1, 1, 1})) == 1);
    CHECK(multiplicity(Partition({2, 2, 1})) == 3);
}

TEST_CASE("multiplicity counts the compositions sharing a part multiset") {
    for (int n = 1; n <= 12; ++n) {
        // Group brute-force compositions by their sorted part multiset.
        auto compositions = brute_compositions(n);
        std::map<std::vector<int>, long long> grouped;
        for (auto parts : compositions) {
            std::sort(parts.begin(), parts.end(), std::greater<int>());
            grouped[parts] += 1;
        }
        PartitionStream stream(n);
        std::size_t seen = 0;
        while (auto partition = stream.next()) {
            auto found = grouped.find(partition->parts());
            REQUIRE(found != grouped.end());
            CHECK(BigInt(static_cast<long>(found->second)) == multiplicity(*partition));
            ++seen;
        }
        CHECK(seen == grouped.size());
    }
}

TEST_CASE("multiplicities over the partitions of n sum to 2^(n-1)") {
    for (int n = 1; n <= 20; ++n) {
        BigInt sum(0);
        PartitionStream stream(n);
        while (auto partition = stream.next()) sum += multiplicity(*partition);
        CHECK(sum == BigInt(1) << (n - 1));
    }
}

TEST_CASE("composition stream yields the documented order") {
    std::vector<std::vector<int>> expected = {{3}, {2, 1}, {1, 2}, {1, 1, 1}};
    CHECK(collect_compositions(3) == expected);
    CHECK(collect_compositions(1) == std::vector<std::vector<int>>{{1}});

    auto items = collect_compositions(4);
    CHECK(items.size() == 8);
    CHECK(items.front() == std::vector<int>{4});
    CHECK(items.back() == std::vector<int>(4, 1));
}

TEST_CASE("composition stream is complete and duplicate-free") {
    for (int n = 1; n <= 10; ++n) {
        auto items = collect_compositions(n);
        CHECK(items.size() == (std::uint64_t{1} << (n - 1)));
        std::set<std::vector<int>> streamed(items.begin(), items.end());
        CHECK(streamed.size() == items.size());

        auto brute = brute_compositions(n);
        std::set<std::vector<int>> expected(brute.begin(), brute.end());
        CHECK(streamed == expected);
    }
    for (int n = 11; n <= 16; ++n) {
        CompositionStream stream(n);
        CHECK(stream.total() == (std::uint64_t{1} << (n - 1)));
        std::uint64_t count = 0;
        while (auto composition = stream.next()) {
            int sum = 0;
            for (int part : composition->parts()) sum += part;
            CHECK(sum == n);
            ++count;
        }
        CHECK(count == stream.total());
    }
}

TEST_CASE("composition enumeration enforces the resource cap") {
    CHECK_THROWS_AS(CompositionStream(27), ResourceLimitError);
    try {
        CompositionStream beyond(27);
    } catch (const ResourceLimitError& error) {
        std::string message = error.what();
        CHECK(message.find("67108864") != std::string::npos);
        CHECK(message.find("cap") != std::string::npos);
    }
    // Raising the cap lifts the refusal (construction only; not consumed).
    CHECK_NOTHROW(CompositionStream(27, 27));
    // ... but nothing lifts the 63-bit mask ceiling.
    CHECK_THROWS_AS(CompositionStream(64, 1000), ResourceLimitError);
    CHECK_THROWS_AS(CompositionStream(0), DomainError);
    CHECK_THROWS_AS(Composition({}), DomainError);
    CHECK_THROWS_AS(Composition({2, 0}), DomainError);
}

TEST_CASE("diophantine stream matches the partition order under the bijection") {
    std::vector<std::vector<int>> expected = {
        {0, 0, 0, 1}, {1, 0, 1, 0}, {0, 2, 0, 0}, {2, 1, 0, 0}, {4, 0, 0, 0}};
    CHECK(collect_diophantine(4) == expected);
    CHECK(collect_diophantine(1) == std::vector<std::vector<int>>{{1}});

    for (int n = 1; n <= 12; ++n) {
        auto solutions = collect_diophantine(n);
        auto partitions = collect_partitions(n);
        REQUIRE(solutions.size() == partitions.size());
        for (std::size_t i = 0; i < solutions.size(); ++i) {
            CHECK(solutions[i] ==
                  partition_to_diophantine(Partition(partitions[i])).counts());
        }
    }
}

TEST_CASE("diophantine solutions are valid, unique and counted by p(n)") {
    for (int n = 1; n <= 20; ++n) {
        auto solutions = collect_diophantine(n);
        CHECK(static_cast<long long>(solutions.size()) == partition_count_oracle(n));
        std::set<std::vector<int>> unique(solutions.begin(), solutions.end());
        CHECK(unique.size() == solutions.size());
        for (const auto& counts : solutions) {
            long long weighted = 0;
            for (int i = 1; i <= n; ++i) {
                weighted += static_cast<long long>(i) * counts[static_cast<std::size_t>(i - 1)];
            }
            CHECK(weighted == n);
        }
    }
    CHECK_THROWS_AS(DiophantineStream(0), DomainError);
}

TEST_CASE("bijection fixtures and round-trips") {
    CHECK(partition_to_diophantine(Partition({2, 1, 1})).counts() ==
          std::vector<int>{2, 1, 0, 0});
    CHECK(partition_to_diophantine(Partition({4})).counts() ==
          std::vector<int>{0, 0, 0, 1});
    CHECK(diophantine_to_partition(DiophantineSolution({1, 0, 1, 0})).parts() ==
          std::vector<int>{3, 1});

    for (int n = 1; n <= 16; ++n) {
        PartitionStream stream(n);
        while (auto partition = stream.next()) {
            DiophantineSolution solution = partition_to_diophantine(*partition);
            CHECK(solution.total_count() == partition->length());
            CHECK(diophantine_to_partition(solution) == *partition);
        }
        DiophantineStream solutions(n);
        while (auto solution = solutions.next()) {
            CHECK(partition_to_diophantine(diophantine_to_partition(*solution)) == *solution);
        }
    }
}

TEST_CASE("diophantine constructor validates the weighted sum") {
    CHECK_THROWS_AS(DiophantineSolution({1, 1}), DomainError);   // weighs 3, n = 2
    CHECK_THROWS_AS(DiophantineSolution({-1, 1}), DomainError);  // negative count
    CHECK_THROWS_AS(DiophantineSolution({}), DomainError);
    CHECK_NOTHROW(DiophantineSolution({0, 1}));                  // 2*1 = 2 = n
}

TEST_CASE("bracket rendering") {
    CHECK(to_string(Partition({3, 1})) == "[3,1]");
    CHECK(to_string(Composition({1, 2})) == "[1,2]");
    CHECK(to_string(DiophantineSolution({4, 0, 0, 0})) == "[4,0,0,0]");
    CHECK(bracket_form({}) == "[]");
}
