#include <doctest.h>

#include <set>

#include "cumtree/bijections.hpp"
#include "cumtree/enumerate.hpp"
#include "oracles.hpp"

using namespace cumtree;

namespace {

ColoredTree T(const char* s) { return parse_tree(s); }

}  // namespace

TEST_CASE("psi on a single block is the branch itself")
{
    SetPartition one(3, {{1, 2, 3}});
    for (const char* b : {"0:(0 (0 . .) .)", "0:(0 . (0 . .))"}) {
        ColoredTree t = psi(PsiInput{one, {T(b)}});
        CHECK(canonical_encode(t) == b);
        CHECK(psi_inverse(t) == PsiInput{one, {T(b)}});
    }
}

TEST_CASE("psi vertices follow postorder")
{
    for (int n = 2; n <= 7; ++n)
        for (const auto& x : enumerate_psi_domain(uniform_word(n))) {
            ColoredTree t = psi(x);
            auto order = postorder(t);
            for (std::size_t k = 0; k < order.size(); ++k)
                CHECK(order[k] == static_cast<NodeId>(k));
        }
}

TEST_CASE("domain sizes")
{
    for (int n = 2; n <= 8; ++n) {
        ColorWord w = uniform_word(n - 1);
        CHECK(Rational(static_cast<long>(enumerate_psi_domain(w).size())) == oracle::catalan(n - 1));
        CHECK(Rational(static_cast<long>(enumerate_phi_domain(w).size())) == oracle::fact(n - 1));
    }
    CHECK(enumerate_psi_domain(uniform_word(0)).empty());
}

TEST_CASE("phi on small cases")
{
    Permutation s = parse_permutation("321");
    std::set<std::string> images;
    for (const char* b : {"0:(0 (0 . .) .)", "0:(0 . (0 . .))"}) {
        PhiInput x{s, {T(b)}};
        CHECK(to_string(phi_tilde(x)) == "0:(0 . (0 . .)) [2,1]");
        LabeledTree t = phi(x);
        images.insert(to_string(t));
        CHECK(phi_inverse(t) == x);
    }
    CHECK(images.size() == 2);
    PhiInput single = phi_inverse(parse_labeled_tree("0:(0 . .) [1]"));
    CHECK(single.sigma == parse_permutation("21"));
    REQUIRE(single.branches.size() == 1);
    CHECK(canonical_encode(single.branches[0]) == "0:(0 . .)");
}

TEST_CASE("bijections reject malformed input")
{
    SetPartition crossing(4, {{1, 3}, {2, 4}});
    CHECK_THROWS_AS(psi(PsiInput{crossing, {T("0:(0 . .)"), T("0:(0 . .)")}}), std::invalid_argument);
    SetPartition singleton(3, {{1, 3}, {2}});
    CHECK_THROWS_AS(psi(PsiInput{singleton, {T("0:(0 . .)"), T("0:(0 . .)")}}), std::invalid_argument);
    SetPartition one(3, {{1, 2, 3}});
    CHECK_THROWS_AS(psi(PsiInput{one, {T("0:(0 . .)")}}), std::invalid_argument);
    CHECK_THROWS_AS(psi(PsiInput{one, {}}), std::invalid_argument);
    CHECK_THROWS_AS(psi(PsiInput{one, {T("0:(0 (0 . .) (0 . .))")}}), std::invalid_argument);
    CHECK_THROWS_AS(phi(PhiInput{parse_permutation("312"), {T("0:(0 . .)")}}), std::invalid_argument);
    CHECK_THROWS_AS(phi(PhiInput{parse_permutation("231"), {T("0:(0 . .)")}}), std::invalid_argument);
    CHECK_THROWS_AS(psi_inverse(ColoredTree()), std::invalid_argument);
}

TEST_CASE("word of the branches")
{
    SetPartition pi(4, {{1, 4}, {2, 3}});
    std::vector<ColoredTree> bs{T("3:(1 . .)"), T("5:(2 . .)")};
    CHECK(word_of(pi, bs) == make_word({1, 2, 5, 3}));
    ColoredTree t = psi(PsiInput{pi, bs});
    CHECK(canonical_encode(t) == "3:(5 (1 . .) (2 . .))");
}

TEST_CASE("serialization round trips")
{
    for (const auto& x : enumerate_psi_domain(make_word({0, 1, 1, 0, 1})))
        CHECK(parse_psi_input(serialize(x)) == x);
    for (const auto& x : enumerate_phi_domain(make_word({1, 0, 1, 1, 0})))
        CHECK(parse_phi_input(serialize(x)) == x);
    CHECK(serialize(PsiInput{SetPartition(3, {{1, 2, 3}}), {T("0:(0 (0 . .) .)")}}) == "partition {{1,2,3}}\n1,2,3 -> 0:(0 (0 . .) .)\n");
    try {
        parse_psi_input("partition {{1,2,3}}\n1,2,3 0:(0 (0 . .) .)\n");
        FAIL("expected a parse error");
    } catch (const std::invalid_argument& e) {
        CHECK(std::string(e.what()).find("line 2") != std::string::npos);
    }
    CHECK_THROWS_AS(parse_psi_input("1,2,3 -> 0:(0 . .)\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_phi_input("permutation 3,2,1\n1,2 -> 0:(0 . .)\n"), std::invalid_argument);
}
