#include <doctest.h>

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <set>

#include "apcore/partition.hpp"
#include "oracles.hpp"

using namespace apcore;

namespace {

std::vector<long> as_longs(const std::vector<BigInt>& v)
{
    std::vector<long> out;
    for (const auto& x : v)
        out.push_back(x.get_si());
    return out;
}

} // namespace

TEST_CASE("partition construction and parsing")
{
    CHECK(Partition().weight() == 0);
    CHECK(Partition({5, 3, 3}).weight() == 11);
    CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(Partition({3, 0}), std::invalid_argument);
    CHECK(Partition::parse("5,3,3") == Partition({5, 3, 3}));
    CHECK(Partition::parse("(5, 3, 3)") == Partition({5, 3, 3}));
    CHECK(Partition::parse("").empty());
    CHECK(Partition::parse("0").empty());
    CHECK_THROWS(Partition::parse("5,x"));
    CHECK_THROWS(Partition::parse("1,2"));
    CHECK(Partition({5, 3, 3}).to_string() == "(5,3,3)");
    CHECK(Partition({5, 3, 3}).conjugate() == Partition({3, 3, 3, 1, 1}));
}

TEST_CASE("hook progression membership")
{
    const HookProgression h(3, 4);
    CHECK(h.contains(3));
    CHECK(h.contains(7));
    CHECK(h.contains(403));
    CHECK_FALSE(h.contains(2));
    CHECK_FALSE(h.contains(5));

    const HookProgression single(5, 0);
    CHECK(single.contains(5));
    CHECK_FALSE(single.contains(10));

    const HookProgression cut(2, 3, 1);
    CHECK(cut.contains(2));
    CHECK(cut.contains(5));
    CHECK_FALSE(cut.contains(8));

    // the progression from s, not the residue class, when s > t
    const HookProgression four_two(4, 2);
    CHECK_FALSE(four_two.contains(2));
    CHECK(four_two.contains(6));

    CHECK(HookProgression(3, 4).finite());
    CHECK_FALSE(HookProgression(4, 2).finite());
    CHECK_FALSE(HookProgression(3, 4, 0).finite());
    CHECK(HookProgression(1, 6).finite());
    CHECK_THROWS(HookProgression(0, 1));
}

TEST_CASE("hook multiset examples")
{
    CHECK(hook_multiset(Partition()).empty());

    const auto h = hook_multiset(Partition({5, 3, 2, 2, 1, 1}));
    std::vector<std::uint64_t> expected{10, 7, 4, 2, 1, 7, 4, 1, 5, 2, 4, 1, 2, 1};
    std::sort(expected.begin(), expected.end(), std::greater<>());
    CHECK(h == expected);
    for (std::uint64_t missing : {3u, 6u, 8u, 9u, 11u, 12u})
        CHECK(std::find(h.begin(), h.end(), missing) == h.end());

    const Partition p({5, 3, 3});
    CHECK(hook_multiset(p).size() == 11);
    CHECK(p.first_column_hooks() == std::vector<std::uint64_t>{7, 4, 3});
}

TEST_CASE("is_core examples")
{
    CHECK(is_core(Partition(), HookProgression(1, 1)));
    CHECK(is_core(Partition({5, 3, 2, 2, 1, 1}), HookProgression(3, 3)));
    CHECK_FALSE(is_core(Partition({3, 2, 1}), HookProgression(2, 3)));
    CHECK(is_core(Partition({2, 1}), HookProgression(2, 3)));
}

TEST_CASE("hook computation agrees with the cell-walking oracle")
{
    for (std::uint32_t n = 0; n <= 25; ++n) {
        for (const auto& parts : oracle::partitions(n)) {
            const Partition lambda(parts);
            auto naive = oracle::hooks(parts);
            std::sort(naive.begin(), naive.end(), std::greater<>());
            REQUIRE(hook_multiset(lambda) == naive);
            const std::set<std::uint64_t> present(naive.begin(), naive.end());
            for (std::uint64_t s = 1; s <= 6; ++s) {
                for (std::uint64_t t = 0; t <= 6; ++t) {
                    const HookProgression hp(s, t);
                    bool hit = false;
                    for (auto y : present)
                        hit = hit || hp.contains(y);
                    REQUIRE(is_core(lambda, hp) == !hit);
                    REQUIRE(is_core(lambda, hp) == is_core(lambda.conjugate(), hp));
                }
            }
        }
    }
}

TEST_CASE("conjugation is an involution")
{
    for (std::uint32_t n = 0; n <= 18; ++n)
        for (const auto& parts : oracle::partitions(n)) {
            const Partition lambda(parts);
            REQUIRE(lambda.conjugate().conjugate() == lambda);
            REQUIRE(lambda.conjugate().weight() == lambda.weight());
        }
}

TEST_CASE("partition generation")
{
    CHECK(generate_partitions(0) == std::vector<Partition>{Partition()});
    CHECK(generate_partitions(4) == std::vector<Partition>{Partition({4}), Partition({3, 1}), Partition({2, 2}),
                                                           Partition({2, 1, 1}), Partition({1, 1, 1, 1})});
    CHECK(generate_partitions(10).size() == 42);

    const auto p = oracle::partition_counts(30);
    for (std::uint32_t n = 0; n <= 30; ++n) {
        const auto gen = generate_partitions(n);
        REQUIRE(gen.size() == p[n]);
        REQUIRE(std::is_sorted(gen.begin(), gen.end(), std::greater<>()));
        REQUIRE(std::set<Partition>(gen.begin(), gen.end()).size() == gen.size());
        for (const auto& lambda : gen)
            REQUIRE(lambda.weight() == n);
    }
}

TEST_CASE("enumerate_cores examples")
{
    CHECK(as_longs(enumerate_cores(HookProgression(2, 3), 5)) == std::vector<long>{1, 1, 0, 1, 0, 0});
    CHECK(as_longs(enumerate_cores(HookProgression(3, 4), 10)) ==
          std::vector<long>{1, 1, 2, 0, 2, 1, 2, 0, 0, 0, 2});
    for (std::uint64_t t = 1; t <= 5; ++t)
        CHECK(as_longs(enumerate_cores(HookProgression(1, t), 5)) == std::vector<long>{1, 0, 0, 0, 0, 0});
    CHECK(as_longs(enumerate_cores(HookProgression(2, 3), 0)) == std::vector<long>{1});
}

TEST_CASE("pruned enumeration matches exhaustive filtering")
{
    constexpr std::uint32_t n = 18;
    for (std::uint64_t s = 1; s <= 5; ++s) {
        for (std::uint64_t t = 0; t <= 5; ++t) {
            for (std::optional<std::uint64_t> p : {std::optional<std::uint64_t>{}, std::optional<std::uint64_t>{1},
                                                   std::optional<std::uint64_t>{2}}) {
                const HookProgression hp(s, t, p);
                const auto expected = oracle::filtered_counts(n, [&](std::uint64_t y) { return hp.contains(y); });
                const auto got = enumerate_cores(hp, n);
                for (std::uint32_t w = 0; w <= n; ++w)
                    REQUIRE(got[w] == static_cast<unsigned long>(expected[w]));
                const auto listed = list_cores(hp, n);
                REQUIRE(listed.size() == std::accumulate(expected.begin(), expected.end(), std::uint64_t{0}));
                for (const auto& lambda : listed)
                    REQUIRE(is_core(lambda, hp));
            }
        }
    }
}

TEST_CASE("enumeration is independent of the thread count")
{
    const HookProgression hp(5, 3);
    const auto many = enumerate_cores(hp, 40);
    ::setenv("APCORE_THREADS", "1", 1);
    const auto one = enumerate_cores(hp, 40);
    ::unsetenv("APCORE_THREADS");
    CHECK(many == one);
}

TEST_CASE("total core counts")
{
    CHECK(total_core_count(HookProgression(2, 3)) == 3);
    CHECK(total_core_count(HookProgression(1, 2)) == 1);
    CHECK(total_core_count(HookProgression(3, 4)) == 11);
    CHECK(total_core_count(HookProgression(2, 3, 1)) == 3); // the (2,5)-cores
    CHECK(total_core_count(HookProgression(3, 4, 1)) == 12); // the (3,7)-cores
    CHECK_THROWS_AS(total_core_count(HookProgression(4, 2)), std::invalid_argument);
    CHECK_THROWS_AS(total_core_count(HookProgression(3, 4, 0)), std::invalid_argument);
    CHECK(core_size_bound(3, 4) == 16);
}

TEST_CASE("containment of s (mod t)-cores in s (mod tj)-cores")
{
    for (std::uint64_t s = 1; s <= 4; ++s)
        for (std::uint64_t t = 1; t <= 4; ++t) {
            if (std::gcd(s, t) != 1)
                continue;
            const auto cores = list_cores(HookProgression(s, t), 30);
            for (std::uint64_t j = 1; j <= 4; ++j) {
                if (std::gcd(s, j) != 1)
                    continue;
                for (const auto& lambda : cores)
                    REQUIRE(is_core(lambda, HookProgression(s, t * j)));
            }
        }

    // 3 (mod 4) inside 3 (mod 8) and 3 (mod 20); chain 3 (mod 2^k) totally ordered
    const auto c4 = list_cores(HookProgression(3, 4), 60);
    for (const auto& lambda : c4) {
        CHECK(is_core(lambda, HookProgression(3, 8)));
        CHECK(is_core(lambda, HookProgression(3, 20)));
    }
    for (std::uint64_t k = 1; k <= 3; ++k)
        for (const auto& lambda : list_cores(HookProgression(3, 1ull << k), 60))
            REQUIRE(is_core(lambda, HookProgression(3, 1ull << (k + 1))));
}

TEST_CASE("3 (mod 8)-cores and 3 (mod 20)-cores are not nested")
{
    // every 3 (mod 8)-core turns out to be a 3 (mod 20)-core; the witness runs the other way
    const auto mod8 = list_cores(HookProgression(3, 8), core_size_bound(3, 8));
    CHECK(mod8.size() == 25);
    for (const auto& lambda : mod8)
        CHECK(is_core(lambda, HookProgression(3, 20)));

    std::optional<Partition> witness;
    for (const auto& lambda : list_cores(HookProgression(3, 20), core_size_bound(3, 20)))
        if (!is_core(lambda, HookProgression(3, 8))) {
            witness = lambda;
            break;
        }
    REQUIRE(witness.has_value());
    CHECK(is_core(*witness, HookProgression(3, 20)));
    CHECK_FALSE(is_core(*witness, HookProgression(3, 8)));
}

TEST_CASE("largest partition with all hooks below s")
{
    for (std::uint64_t s = 1; s <= 10; ++s) {
        const auto counts = enumerate_cores(HookProgression(s, 1), core_size_bound(s, 1));
        std::size_t top = 0;
        for (std::size_t w = 0; w < counts.size(); ++w)
            if (counts[w] != 0)
                top = w;
        CHECK(top == s * s / 4);
    }
}
