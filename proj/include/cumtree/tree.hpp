#pragma once

// Colored binary plane trees, decreasing labelings, insertion and insertion factors.

#include "cumtree/partitions.hpp"

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace cumtree {

/// Element of the index set I. No upper bound is enforced, so I may be taken countably infinite.
struct Color {
    std::uint32_t index = 0;
    auto operator<=>(const Color&) const = default;
};

/// A word i_1 ... i_n over I.
using ColorWord = std::vector<Color>;

ColorWord make_word(std::initializer_list<std::uint32_t> letters);
/// `0,1,1`.
std::string to_string(const ColorWord& w);
ColorWord parse_word(std::string_view text);

using NodeId = std::int32_t;
inline constexpr NodeId kNoNode = -1;

enum class Side : std::uint8_t { left, right };

struct Node {
    Color color;
    NodeId left = kNoNode;
    NodeId right = kNoNode;
};

/// Binary plane tree with a color on every vertex and on the box symbol.
/// Node identity is positional; isomorphism goes through canonical_encode().
class ColoredTree {
public:
    /// The empty tree with box color 0.
    ColoredTree() = default;
    explicit ColoredTree(Color box) : box_(box) {}
    /// Validates that the links form a single rooted binary tree on all nodes.
    ColoredTree(std::vector<Node> nodes, NodeId root, Color box);

    static ColoredTree single(Color color, Color box);

    bool empty() const { return nodes_.empty(); }
    int size() const { return static_cast<int>(nodes_.size()); }
    NodeId root() const { return root_; }
    Color box_color() const { return box_; }
    const std::vector<Node>& nodes() const { return nodes_; }
    const Node& node(NodeId v) const { return nodes_.at(static_cast<std::size_t>(v)); }
    bool contains(NodeId v) const { return v >= 0 && v < size(); }

    int child_count(NodeId v) const;
    NodeId only_child(NodeId v) const;
    /// kNoNode for the root.
    NodeId parent(NodeId v) const;

    void set_color(NodeId v, Color c) { nodes_.at(static_cast<std::size_t>(v)).color = c; }
    void set_box_color(Color c) { box_ = c; }

private:
    std::vector<Node> nodes_;
    NodeId root_ = kNoNode;
    Color box_{};
};

std::vector<NodeId> inorder(const ColoredTree& t);
std::vector<NodeId> postorder(const ColoredTree& t);
std::vector<NodeId> preorder(const ColoredTree& t);

int right_edges(const ColoredTree& t);
int two_child_vertices(const ColoredTree& t);
bool is_branch(const ColoredTree& t);
/// No vertex with exactly one child.
bool is_full(const ColoredTree& t);
/// Every vertex with a left child also has a right child.
bool is_reverse_motzkin(const ColoredTree& t);

/// `box:(color L R)` with `.` for an absent subtree; the empty tree is `box:.`.
/// Equal strings iff the trees are isomorphic as colored plane trees.
std::string canonical_encode(const ColoredTree& t);
ColoredTree parse_tree(std::string_view text);

/// A tree with a standard decreasing labeling: labels[v] in 1..n, parent label > child label.
class LabeledTree {
public:
    LabeledTree() = default;
    /// Throws unless labels is a bijection onto [n] that decreases along every edge.
    LabeledTree(ColoredTree tree, std::vector<int> labels);

    const ColoredTree& tree() const { return tree_; }
    const std::vector<int>& labels() const { return labels_; }
    int label(NodeId v) const { return labels_.at(static_cast<std::size_t>(v)); }
    NodeId node_with_label(int k) const;
    int size() const { return tree_.size(); }

private:
    ColoredTree tree_;
    std::vector<int> labels_;
    std::vector<NodeId> by_label_;
};

/// Canonical tree encoding, then the labels in preorder: `0:(0 (0 . .) .) [2,1]`.
std::string to_string(const LabeledTree& t);
LabeledTree parse_labeled_tree(std::string_view text);
/// Same shape, colors and labels.
bool operator==(const LabeledTree& a, const LabeledTree& b);

enum class Traversal { inorder, postorder };

/// Standard labeling that numbers the vertices 1..n in the given traversal order.
std::vector<int> traversal_labeling(const ColoredTree& t, Traversal kind);

/// The tree equipped with its postorder labeling (always decreasing).
LabeledTree postorder_labeled(const ColoredTree& t);

/// Labels read in inorder.
Permutation alpha(const LabeledTree& t);
/// Labels read in postorder.
Permutation beta(const LabeledTree& t);
/// The decreasing tree whose inorder reading is sigma. All colors are 0.
LabeledTree alpha_inverse(const Permutation& sigma);
/// West's stack-sorting map, beta o alpha^{-1}.
Permutation stack_sort(const Permutation& sigma);

/// Insertion of t2 into t1 at v: a new vertex v* takes v's place, v becomes its left child and
/// t2 its right subtree. v* is colored by t2's box color; the result keeps t1's box color.
/// Node ids of t1 are kept, t2's are shifted by |t1|, and v* is the last node.
ColoredTree insert(const ColoredTree& t1, NodeId v, const ColoredTree& t2);

/// Flip the side of v's only child.
ColoredTree swing(const ColoredTree& t, NodeId v);

/// One block of the insertion-factor partition. The anchor is the two-child vertex (or the box
/// when anchor == kNoNode); members are the remaining block vertices from top to bottom.
struct FactorBlock {
    NodeId anchor = kNoNode;
    std::vector<NodeId> members;
    /// steps[i] is the side on which members[i + 1] hangs below members[i].
    std::vector<Side> steps;
    /// The factor as a branch; its node i is members[i].
    ColoredTree branch;
};

/// Blocks for the box first, then for each two-child vertex in postorder.
std::vector<FactorBlock> insertion_factor_blocks(const ColoredTree& t);
std::vector<ColoredTree> insertion_factors(const ColoredTree& t);
/// Sorted canonical encodings of the factors, i.e. the multiset IF(t).
std::vector<std::string> factor_multiset(const ColoredTree& t);

/// Branch from top-down vertex colors and the side of each step.
ColoredTree make_branch(const std::vector<Color>& colors_top_down, const std::vector<Side>& steps, Color box);
/// Nodes of a branch from the top, with the side of every step.
std::pair<std::vector<NodeId>, std::vector<Side>> branch_path(const ColoredTree& branch);

/// Decreasing labeled branch: labels from the top (strictly decreasing) and step sides.
struct LabeledBranch {
    std::vector<int> labels;
    std::vector<Side> steps;
    auto operator<=>(const LabeledBranch&) const = default;
};

std::string to_string(const LabeledBranch& b);
/// The insertion factors of a decreasing tree with the restricted labeling, sorted.
std::vector<LabeledBranch> labeled_insertion_factors(const LabeledTree& t);

}  // namespace cumtree
