#include <doctest.h>

#include <algorithm>
#include <set>

#include "cumtree/enumerate.hpp"
#include "cumtree/tree.hpp"
#include "oracles.hpp"

using namespace cumtree;

namespace {

ColoredTree T(const char* text) { return parse_tree(text); }

// Root r9 with left subtree r4 (left r1, right r3 -> r2) and right subtree r8 (left r5, right r7 -> r6);
// vertices named by postorder.
const char* kFactorExample = "0:(0 (0 (0 . .) (0 (0 . .) .)) (0 (0 . .) (0 (0 . .) .)))";

}  // namespace

TEST_CASE("encoding round trips and rejects malformed text")
{
    CHECK(canonical_encode(ColoredTree()) == "0:.");
    CHECK(canonical_encode(ColoredTree::single(Color{1}, Color{0})) == "0:(1 . .)");
    for (const char* s : {"0:.", "2:(1 . .)", "0:(0 (1 . .) (2 . (3 . .)))", kFactorExample})
        CHECK(canonical_encode(T(s)) == s);
    CHECK_THROWS_AS(T("0:(0 . ."), std::invalid_argument);
    CHECK_THROWS_AS(T("(0 . .)"), std::invalid_argument);
    CHECK_THROWS_AS(T("0:(x . .)"), std::invalid_argument);
    CHECK_THROWS_AS(T("0:(0 . .) extra"), std::invalid_argument);
}

TEST_CASE("tree construction validates links")
{
    std::vector<Node> two_parents{{Color{0}, 1, 2}, {Color{0}, 2, kNoNode}, {Color{0}, kNoNode, kNoNode}};
    CHECK_THROWS_AS(ColoredTree(two_parents, 0, Color{0}), std::invalid_argument);
    std::vector<Node> cycle{{Color{0}, 1, kNoNode}, {Color{0}, 0, kNoNode}};
    CHECK_THROWS_AS(ColoredTree(cycle, 0, Color{0}), std::invalid_argument);
    std::vector<Node> disconnected{{Color{0}, kNoNode, kNoNode}, {Color{0}, kNoNode, kNoNode}};
    CHECK_THROWS_AS(ColoredTree(disconnected, 0, Color{0}), std::invalid_argument);
}

TEST_CASE("traversal labelings")
{
    ColoredTree one = T("0:(0 . .)");
    CHECK(traversal_labeling(one, Traversal::inorder) == std::vector<int>{1});
    CHECK(traversal_labeling(one, Traversal::postorder) == std::vector<int>{1});
    ColoredTree cherry = T("0:(0 (0 . .) (0 . .))");
    NodeId root = cherry.root();
    NodeId l = cherry.node(root).left;
    NodeId r = cherry.node(root).right;
    auto in = traversal_labeling(cherry, Traversal::inorder);
    auto post = traversal_labeling(cherry, Traversal::postorder);
    CHECK(in[static_cast<std::size_t>(l)] == 1);
    CHECK(in[static_cast<std::size_t>(root)] == 2);
    CHECK(in[static_cast<std::size_t>(r)] == 3);
    CHECK(post[static_cast<std::size_t>(l)] == 1);
    CHECK(post[static_cast<std::size_t>(r)] == 2);
    CHECK(post[static_cast<std::size_t>(root)] == 3);
    ColoredTree stick = T("0:(0 (0 . .) .)");
    auto pl = traversal_labeling(stick, Traversal::postorder);
    CHECK(pl[static_cast<std::size_t>(stick.root())] == 2);
    CHECK_THROWS(traversal_labeling(ColoredTree(), Traversal::inorder));
}

TEST_CASE("alpha, alpha inverse and stack sorting")
{
    CHECK(to_string(alpha(alpha_inverse(parse_permutation("1")))) == "1");
    CHECK(alpha(parse_labeled_tree("0:(0 . (0 . .)) [2,1]")) == parse_permutation("21"));
    CHECK(alpha(parse_labeled_tree("0:(0 (0 (0 . .) .) .) [3,2,1]")) == parse_permutation("123"));
    LabeledTree t = alpha_inverse(parse_permutation("231"));
    CHECK(to_string(t) == "0:(0 (0 . .) (0 . .)) [3,2,1]");
    CHECK(to_string(alpha_inverse(parse_permutation("123"))) == "0:(0 (0 (0 . .) .) .) [3,2,1]");
    CHECK(stack_sort(parse_permutation("123")) == parse_permutation("123"));
    CHECK(stack_sort(parse_permutation("231")) == parse_permutation("213"));
    CHECK(stack_sort(parse_permutation("321")) == parse_permutation("123"));
    for (int n = 1; n <= 7; ++n)
        for_each_permutation(n, [&](const Permutation& s) {
            LabeledTree lt = alpha_inverse(s);
            CHECK(alpha(lt) == s);
            CHECK(stack_sort(s).images() == oracle::stack_sort(s.images()));
            CHECK(beta(lt) == stack_sort(s));
        });
}

TEST_CASE("labeled trees validate the decreasing property")
{
    ColoredTree stick = T("0:(0 (0 . .) .)");
    NodeId child = stick.node(stick.root()).left;
    std::vector<int> bad(2);
    bad[static_cast<std::size_t>(stick.root())] = 1;
    bad[static_cast<std::size_t>(child)] = 2;
    CHECK_THROWS_AS(LabeledTree(stick, bad), std::invalid_argument);
    CHECK_THROWS_AS(LabeledTree(stick, {1, 1}), std::invalid_argument);
    LabeledTree ok = postorder_labeled(stick);
    CHECK(parse_labeled_tree(to_string(ok)) == ok);
    CHECK(ok.node_with_label(2) == stick.root());
}

TEST_CASE("insertion")
{
    ColoredTree t1 = ColoredTree::single(Color{1}, Color{3});
    ColoredTree t2 = ColoredTree::single(Color{2}, Color{4});
    ColoredTree t = insert(t1, 0, t2);
    CHECK(canonical_encode(t) == "3:(4 (1 . .) (2 . .))");
    CHECK_THROWS(insert(ColoredTree(), 0, t2));
    CHECK_THROWS(insert(t1, 0, ColoredTree()));
    CHECK_THROWS(insert(t1, 5, t2));
    // Sizes add up, and factors are the multiset union.
    ColoredTree a = T("1:(0 (2 . .) (0 (1 . .) .))");
    ColoredTree b = T("2:(1 . (0 (2 . .) .))");
    for (NodeId v = 0; v < a.size(); ++v) {
        ColoredTree c = insert(a, v, b);
        CHECK(c.size() == a.size() + b.size() + 1);
        auto expected = factor_multiset(a);
        auto fb = factor_multiset(b);
        expected.insert(expected.end(), fb.begin(), fb.end());
        std::sort(expected.begin(), expected.end());
        CHECK(factor_multiset(c) == expected);
    }
}

TEST_CASE("insertion factors")
{
    ColoredTree branch = T("1:(0 (2 . .) .)");
    CHECK(factor_multiset(branch) == std::vector<std::string>{canonical_encode(branch)});
    ColoredTree t = T(kFactorExample);
    auto blocks = insertion_factor_blocks(t);
    REQUIRE(blocks.size() == 4);
    std::multiset<std::size_t> sizes;
    for (const auto& b : blocks)
        sizes.insert(b.members.size() + 1);
    CHECK(sizes == std::multiset<std::size_t>{2, 2, 3, 3});
    auto f = factor_multiset(t);
    CHECK(std::count(f.begin(), f.end(), "0:(0 . .)") == 2);
    CHECK_THROWS(insertion_factors(ColoredTree()));
    // The box block comes first and holds the leftmost leaf.
    CHECK(blocks[0].anchor == kNoNode);
    CHECK(traversal_labeling(t, Traversal::postorder)[static_cast<std::size_t>(blocks[0].members[0])] == 1);
}

TEST_CASE("factor sizes account for every vertex")
{
    const ColorWord colors = make_word({0, 1, 2, 0, 1, 2, 0});
    for (int n = 1; n <= 6; ++n)
        for (const auto& t : enumerate_bpt(ColorWord(colors.begin(), colors.begin() + n + 1))) {
            auto factors = insertion_factors(t);
            CHECK(factors.size() == static_cast<std::size_t>(oracle::count_two(t) + 1));
            int total = 0;
            for (const auto& f : factors) {
                CHECK(is_branch(f));
                total += f.size();
            }
            CHECK(total + oracle::count_two(t) == t.size());
        }
}

TEST_CASE("swing")
{
    CHECK(canonical_encode(swing(T("0:(0 (0 . .) .)"), 0)) == "0:(0 . (0 . .))");
    ColoredTree ll = T("0:(0 (0 (0 . .) .) .)");
    ColoredTree swung = swing(ll, ll.root());
    CHECK(canonical_encode(swung) == "0:(0 . (0 (0 . .) .))");
    CHECK(canonical_encode(swing(swung, swung.root())) == canonical_encode(ll));
    ColoredTree cherry = T("0:(0 (0 . .) (0 . .))");
    CHECK_THROWS(swing(cherry, cherry.root()));
    CHECK_THROWS(swing(cherry, cherry.node(cherry.root()).left));
    // Swinging keeps a decreasing labeling decreasing.
    LabeledTree lt = postorder_labeled(ll);
    LabeledTree after(swing(ll, ll.root()), lt.labels());
    CHECK(after.size() == 3);
}

TEST_CASE("shape predicates")
{
    ColoredTree t = T(kFactorExample);
    CHECK(right_edges(t) == oracle::count_right(t));
    CHECK(two_child_vertices(t) == 3);
    CHECK_FALSE(is_branch(t));
    CHECK_FALSE(is_full(t));
    CHECK(is_full(T("0:(0 (0 . .) (0 . .))")));
    CHECK(is_reverse_motzkin(T("0:(0 . (0 . .))")));
    CHECK_FALSE(is_reverse_motzkin(T("0:(0 (0 . .) .)")));
}

TEST_CASE("enumeration counts and colorings")
{
    CHECK(enumerate_bpt(uniform_word(3)).size() == 5);
    CHECK(enumerate_branches(uniform_word(4)).size() == 8);
    CHECK(enumerate_dbpt(uniform_word(4)).size() == 24);
    CHECK(enumerate_bpt(uniform_word(0)).size() == 1);
    CHECK(enumerate_branches(uniform_word(0)).empty());
    for (int n = 0; n <= 8; ++n) {
        CHECK(Rational(static_cast<long>(shapes(n).size())) == oracle::catalan(n));
        CHECK(family_size(TreeFamily::bpt, n) == shapes(n).size());
    }
    for (int n = 1; n <= 6; ++n) {
        ColorWord w;
        for (int i = 0; i <= n; ++i)
            w.push_back(Color{static_cast<std::uint32_t>((i * 7 + 3) % 2)});
        auto trees = enumerate_bpt(w);
        CHECK(Rational(static_cast<long>(trees.size())) == oracle::catalan(n));
        std::set<std::string> distinct;
        for (const auto& t : trees) {
            distinct.insert(canonical_encode(t));
            auto order = postorder(t);
            for (std::size_t k = 0; k < order.size(); ++k)
                CHECK(t.node(order[k]).color == w[k]);
            CHECK(t.box_color() == w.back());
        }
        CHECK(distinct.size() == trees.size());
        for (const auto& lt : enumerate_dbpt(w))
            for (NodeId v = 0; v < lt.size(); ++v)
                CHECK(lt.tree().node(v).color == w[static_cast<std::size_t>(lt.label(v) - 1)]);
        for (const auto& b : enumerate_branches(w))
            CHECK(is_branch(b));
    }
}

TEST_CASE("enumeration is deterministic")
{
    auto a = enumerate_bpt(uniform_word(5));
    auto b = enumerate_bpt(uniform_word(5));
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        CHECK(canonical_encode(a[i]) == canonical_encode(b[i]));
    for (auto f : {TreeFamily::bpt, TreeFamily::branch, TreeFamily::dbpt})
        CHECK(parse_tree_family(to_string(f)) == f);
    CHECK_THROWS_AS(parse_tree_family("forest"), std::invalid_argument);
}
