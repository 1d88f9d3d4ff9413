#include <doctest.h>

#include <algorithm>
#include <stdexcept>

#include "cumtree/peaks.hpp"

using namespace cumtree;

namespace {

const std::vector<int> kWorked{15, 16, 10, 11, 6, 20, 18, 12, 1, 7, 13, 17, 8, 3, 2, 9, 5, 4, 14, 19};

}  // namespace

TEST_CASE("peaks")
{
    CHECK(peaks(Plot(kWorked)) == std::vector<int>{2, 4, 6, 12, 16});
    CHECK(peaks(Plot({1, 2, 3, 4})).empty());
    CHECK(peaks(Plot({1, 3, 2})) == std::vector<int>{2});
    CHECK(peaks(Plot({5})).empty());
    CHECK(peaks(Plot({-3, 10, 7})) == std::vector<int>{2});
    CHECK_THROWS_AS(Plot({1, 2, 1}), std::invalid_argument);
}

TEST_CASE("southeast decomposition")
{
    auto inc = southeast_decomposition(Plot({1, 2, 3}));
    REQUIRE(inc.size() == 1);
    CHECK(inc[0] == parse_permutation("123"));
    auto small = southeast_decomposition(Plot({1, 3, 2}));
    REQUIRE(small.size() == 2);
    CHECK(small[0] == parse_permutation("1"));
    CHECK(small[1] == parse_permutation("21"));
    Plot w(kWorked);
    auto regions = southeast_regions(w);
    REQUIRE(regions.size() == 6);
    CHECK(regions[0] == std::vector<int>{1});
    std::size_t total = 0;
    std::vector<int> seen;
    for (const auto& r : regions) {
        total += r.size();
        seen.insert(seen.end(), r.begin(), r.end());
    }
    CHECK(total == 20);
    std::sort(seen.begin(), seen.end());
    for (int i = 1; i <= 20; ++i)
        CHECK(seen[static_cast<std::size_t>(i - 1)] == i);
}

TEST_CASE("branches from inorder words")
{
    LabeledBranch b = branch_from_inorder({1, 3, 2});
    CHECK(to_string(b) == "3 R 2 L 1");
    CHECK(to_string(branch_from_inorder({4})) == "4");
    CHECK_THROWS_AS(branch_from_inorder({}), std::invalid_argument);
}

TEST_CASE("factors from the plot")
{
    for (auto w : {std::vector<int>{1, 3, 2}, std::vector<int>{4, 3, 2, 1}, kWorked}) {
        Plot p(w);
        CHECK(factors_from_plot(p) == labeled_insertion_factors(alpha_inverse(Permutation(w))));
    }
    auto dec = factors_from_plot(Plot({4, 3, 2, 1}));
    REQUIRE(dec.size() == 1);
    CHECK(to_string(dec[0]) == "4 R 3 R 2 R 1");
    auto f = factors_from_plot(Plot({1, 3, 2}));
    REQUIRE(f.size() == 2);
    CHECK(to_string(f[0]) == "1");
    CHECK(to_string(f[1]) == "2");
    CHECK_THROWS_AS(factors_from_plot(Plot({1, 5})), std::invalid_argument);
    for (int n = 1; n <= 7; ++n)
        for_each_permutation(n, [&](const Permutation& s) {
            CHECK(static_cast<int>(peaks(Plot(s)).size()) == two_child_vertices(alpha_inverse(s).tree()));
            std::size_t total = 0;
            for (const auto& part : southeast_decomposition(Plot(s)))
                total += static_cast<std::size_t>(part.size());
            CHECK(total == static_cast<std::size_t>(n));
        });
}
