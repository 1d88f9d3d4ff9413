#include <doctest.h>

#include <algorithm>
#include <set>

#include "cumtree/partitions.hpp"
#include "oracles.hpp"

using namespace cumtree;

TEST_CASE("permutations")
{
    Permutation s = parse_permutation("2,3,1");
    CHECK(s(1) == 2);
    CHECK(s.descents() == std::vector<int>{2});
    CHECK(parse_permutation("231") == s);
    CHECK(parse_permutation("2 3 1") == s);
    CHECK(to_string(s) == "2,3,1");
    CHECK(Permutation::identity(3).des() == 0);
    CHECK_THROWS_AS(Permutation({1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(Permutation(std::vector<int>{}), std::invalid_argument);
    CHECK_THROWS_AS(parse_permutation("1,4"), std::invalid_argument);
    CHECK(all_permutations(4).size() == 24);
    auto perms = all_permutations(4);
    CHECK(std::is_sorted(perms.begin(), perms.end()));
}

TEST_CASE("set partitions canonicalize and validate")
{
    SetPartition p(4, {{4, 2}, {3, 1}});
    CHECK(to_string(p) == "{{1,3},{2,4}}");
    CHECK(p.block_of(4) == 1);
    CHECK(p.same_block(1, 3));
    CHECK(parse_partition(to_string(p)) == p);
    CHECK_THROWS_AS(SetPartition(3, {{1, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(SetPartition(3, {{1, 2}, {2, 3}}), std::invalid_argument);
    CHECK_THROWS_AS(SetPartition(2, {{1, 2}, {}}), std::invalid_argument);
    CHECK_THROWS_AS(parse_partition("{{1,2}"), std::invalid_argument);
}

TEST_CASE("classification")
{
    PartitionFlags one = classify(SetPartition(3, {{1, 2, 3}}));
    CHECK(one.interval);
    CHECK(one.noncrossing);
    CHECK(one.irreducible);
    CHECK_FALSE(classify(SetPartition(4, {{1, 3}, {2, 4}})).noncrossing);
    PartitionFlags nest = classify(SetPartition(3, {{1, 3}, {2}}));
    CHECK(nest.noncrossing);
    CHECK(nest.irreducible);
    CHECK_FALSE(nest.interval);
    CHECK(classify(SetPartition(1, {{1}})).irreducible);
}

TEST_CASE("partition enumeration counts")
{
    CHECK(enumerate_partitions(4, PartitionClass::all).size() == 15);
    CHECK(enumerate_partitions(4, PartitionClass::noncrossing).size() == 14);
    auto irr = enumerate_partitions(3, PartitionClass::nc_irreducible);
    REQUIRE(irr.size() == 2);
    CHECK(to_string(irr[0]) == "{{1,2,3}}");
    CHECK(to_string(irr[1]) == "{{1,3},{2}}");
    for (int n = 1; n <= 9; ++n) {
        CHECK(Rational(static_cast<long>(enumerate_partitions(n, PartitionClass::noncrossing).size())) == oracle::catalan(n));
        CHECK(enumerate_partitions(n, PartitionClass::interval).size() == std::size_t{1} << (n - 1));
    }
    for (int n = 1; n <= 8; ++n)
        CHECK(Rational(static_cast<long>(enumerate_partitions(n, PartitionClass::all).size())) == oracle::bell(n));
}

TEST_CASE("classification matches the brute-force definitions")
{
    for (int n = 1; n <= 7; ++n)
        oracle::all_partitions(n, [&](const oracle::Blocks& b) {
            SetPartition p(n, b);
            PartitionFlags f = classify(p);
            CHECK(f.noncrossing == !oracle::crossing(b));
            CHECK(f.interval == oracle::interval(b));
            CHECK(f.irreducible == (f.noncrossing && p.same_block(1, n)));
            if (f.interval)
                CHECK(f.noncrossing);
            bool min2 = std::all_of(b.begin(), b.end(), [](const auto& u) { return u.size() >= 2; });
            CHECK(in_class(p, PartitionClass::nc_irreducible_min2) == (f.irreducible && min2));
        });
}

TEST_CASE("partition class names")
{
    for (auto c : {PartitionClass::all, PartitionClass::interval, PartitionClass::noncrossing, PartitionClass::nc_irreducible,
                   PartitionClass::nc_irreducible_min2})
        CHECK(parse_partition_class(to_string(c)) == c);
    CHECK_THROWS_AS(parse_partition_class("bogus"), std::invalid_argument);
}

TEST_CASE("descending runs")
{
    CHECK(druns(parse_permutation("854791632")) == SetPartition(9, {{4, 5, 8}, {7}, {1, 9}, {2, 3, 6}}));
    CHECK(druns(parse_permutation("123")) == SetPartition(3, {{1}, {2}, {3}}));
    CHECK(druns(parse_permutation("321")) == SetPartition(3, {{1, 2, 3}}));
    CHECK(enumerate_D(3) == std::vector<Permutation>{parse_permutation("321")});
    CHECK(enumerate_D(2) == std::vector<Permutation>{parse_permutation("21")});
    CHECK(enumerate_first_max(4).size() == 6);
    for (int n = 2; n <= 7; ++n)
        for (const auto& s : enumerate_D(n)) {
            SetPartition runs = druns(s);
            const Block& first = runs.blocks()[runs.block_of(n)];
            CHECK(first.size() >= 2);
            for (const auto& b : runs.blocks())
                CHECK(b.size() >= 2);
        }
}

TEST_CASE("descending runs reassemble the permutation")
{
    for (int n = 1; n <= 6; ++n)
        for_each_permutation(n, [&](const Permutation& s) {
            SetPartition runs = druns(s);
            std::vector<std::pair<int, int>> by_position;  // (position of max, block index)
            for (std::size_t i = 0; i < runs.block_count(); ++i) {
                int m = runs.blocks()[i].back();
                int pos = static_cast<int>(std::find(s.images().begin(), s.images().end(), m) - s.images().begin());
                by_position.emplace_back(pos, static_cast<int>(i));
            }
            std::sort(by_position.begin(), by_position.end());
            std::vector<int> rebuilt;
            for (auto [pos, i] : by_position) {
                const Block& b = runs.blocks()[static_cast<std::size_t>(i)];
                rebuilt.insert(rebuilt.end(), b.rbegin(), b.rend());
            }
            CHECK(rebuilt == s.images());
        });
}
