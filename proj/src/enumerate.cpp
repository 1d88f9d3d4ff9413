#include "cumtree/enumerate.hpp"

#include <functional>
#include <map>
#include <mutex>
#include <stdexcept>

namespace cumtree {

TreeFamily parse_tree_family(std::string_view name)
{
    if (name == "bpt" || name == "BPT")
        return TreeFamily::bpt;
    if (name == "branch" || name == "Branch")
        return TreeFamily::branch;
    if (name == "dbpt" || name == "DBPT")
        return TreeFamily::dbpt;
    throw std::invalid_argument("unknown tree family: " + std::string(name));
}

std::string to_string(TreeFamily f)
{
    switch (f) {
    case TreeFamily::bpt: return "bpt";
    case TreeFamily::branch: return "branch";
    case TreeFamily::dbpt: return "dbpt";
    }
    return "?";
}

ColorWord uniform_word(int tree_size)
{
    if (tree_size < 0)
        throw std::invalid_argument("negative tree size");
    return ColorWord(static_cast<std::size_t>(tree_size) + 1, Color{0});
}

namespace {

// Root with the given subtrees; both subtrees are postorder-numbered, and so is the result.
ColoredTree join(const ColoredTree& left, const ColoredTree& right)
{
    std::vector<Node> nodes = left.nodes();
    const NodeId offset = left.size();
    for (const Node& n : right.nodes())
        nodes.push_back(Node{n.color, n.left == kNoNode ? kNoNode : n.left + offset, n.right == kNoNode ? kNoNode : n.right + offset});
    Node root;
    root.left = left.empty() ? kNoNode : left.root();
    root.right = right.empty() ? kNoNode : right.root() + offset;
    nodes.push_back(root);
    NodeId id = static_cast<NodeId>(nodes.size()) - 1;
    return ColoredTree(std::move(nodes), id, Color{});
}

std::vector<ColoredTree> build_shapes(int n, const std::function<const std::vector<ColoredTree>&(int)>& smaller)
{
    if (n == 0)
        return {ColoredTree()};
    std::vector<ColoredTree> out;
    for (int k = 0; k < n; ++k)
        for (const auto& l : smaller(k))
            for (const auto& r : smaller(n - 1 - k))
                out.push_back(join(l, r));
    return out;
}

// Branches of size n >= 1: the root has a right sub-branch (left size 0) or a left sub-branch.
const std::vector<ColoredTree>& branch_shapes(int n)
{
    static std::mutex mu;
    static std::map<int, std::vector<ColoredTree>> cache;
    std::lock_guard lock(mu);
    if (cache.empty())
        cache.emplace(1, std::vector<ColoredTree>{join(ColoredTree(), ColoredTree())});
    for (int m = cache.rbegin()->first + 1; m <= n; ++m) {
        const auto& prev = cache.at(m - 1);
        std::vector<ColoredTree> next;
        for (const auto& b : prev)
            next.push_back(join(ColoredTree(), b));
        for (const auto& b : prev)
            next.push_back(join(b, ColoredTree()));
        cache.emplace(m, std::move(next));
    }
    return cache.at(n);
}

ColoredTree recolor_postorder(ColoredTree t, const ColorWord& word)
{
    // Node id j is the (j+1)-th vertex in postorder.
    for (NodeId j = 0; j < t.size(); ++j)
        t.set_color(j, word[static_cast<std::size_t>(j)]);
    t.set_box_color(word.back());
    return t;
}

void require_word(const ColorWord& word)
{
    if (word.empty())
        throw std::invalid_argument("color word must have length >= 1");
}

}  // namespace

const std::vector<ColoredTree>& shapes(int n)
{
    if (n < 0)
        throw std::invalid_argument("negative tree size");
    static std::mutex mu;
    static std::map<int, std::vector<ColoredTree>> cache;
    {
        std::lock_guard lock(mu);
        if (auto it = cache.find(n); it != cache.end())
            return it->second;
    }
    std::vector<ColoredTree> built = build_shapes(n, [](int k) -> const std::vector<ColoredTree>& { return shapes(k); });
    std::lock_guard lock(mu);
    return cache.emplace(n, std::move(built)).first->second;
}

std::vector<ColoredTree> enumerate_bpt(const ColorWord& word)
{
    require_word(word);
    std::vector<ColoredTree> out;
    for (const auto& s : shapes(static_cast<int>(word.size()) - 1))
        out.push_back(recolor_postorder(s, word));
    return out;
}

std::vector<ColoredTree> enumerate_branches(const ColorWord& word)
{
    require_word(word);
    std::vector<ColoredTree> out;
    const int n = static_cast<int>(word.size()) - 1;
    if (n == 0)
        return out;
    for (const auto& s : branch_shapes(n))
        out.push_back(recolor_postorder(s, word));
    return out;
}

std::vector<LabeledTree> enumerate_dbpt(const ColorWord& word)
{
    require_word(word);
    const int n = static_cast<int>(word.size()) - 1;
    std::vector<LabeledTree> out;
    if (n == 0) {
        out.emplace_back(ColoredTree(word.back()), std::vector<int>{});
        return out;
    }
    for_each_permutation(n, [&](const Permutation& sigma) {
        LabeledTree lt = alpha_inverse(sigma);
        ColoredTree t = lt.tree();
        for (NodeId v = 0; v < t.size(); ++v)
            t.set_color(v, word[static_cast<std::size_t>(lt.label(v) - 1)]);
        t.set_box_color(word.back());
        out.emplace_back(std::move(t), lt.labels());
    });
    return out;
}

std::uint64_t family_size(TreeFamily f, int n)
{
    if (n < 0)
        throw std::invalid_argument("negative tree size");
    switch (f) {
    case TreeFamily::bpt: {
        std::uint64_t c = 1;
        for (int i = 0; i < n; ++i)
            c = c * 2 * (2 * static_cast<std::uint64_t>(i) + 1) / (static_cast<std::uint64_t>(i) + 2);
        return c;
    }
    case TreeFamily::branch: return n == 0 ? 0 : (std::uint64_t{1} << (n - 1));
    case TreeFamily::dbpt: {
        std::uint64_t f1 = 1;
        for (int i = 2; i <= n; ++i)
            f1 *= static_cast<std::uint64_t>(i);
        return f1;
    }
    }
    return 0;
}

}  // namespace cumtree
