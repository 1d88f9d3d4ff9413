#pragma once

// Deterministic enumerators for the tree families BPT, Branch and DBPT.
//
// A color word i_1 ... i_n selects trees of size n - 1: vertices are colored by i_1 ... i_{n-1}
// (in postorder for BPT/Branch, by label for DBPT) and the box by i_n.
//
// Order: shapes are listed left-subtree-size-major. A tree of size n is a root with a left subtree
// of size k and a right subtree of size n-1-k, for k = 0, 1, ..., n-1; within one k the left
// subtree varies slowest. Decreasing trees follow the lexicographic order of their inorder reading.

#include "cumtree/tree.hpp"

#include <cstdint>
#include <string_view>
#include <vector>

namespace cumtree {

enum class TreeFamily { bpt, branch, dbpt };

TreeFamily parse_tree_family(std::string_view name);
std::string to_string(TreeFamily f);

/// n + 1 copies of color 0: the singleton index set at tree size n.
ColorWord uniform_word(int tree_size);

/// Uncolored shapes of size n; node ids follow postorder.
const std::vector<ColoredTree>& shapes(int n);

std::vector<ColoredTree> enumerate_bpt(const ColorWord& word);
std::vector<ColoredTree> enumerate_branches(const ColorWord& word);
std::vector<LabeledTree> enumerate_dbpt(const ColorWord& word);

/// C_n, 2^{n-1} (0 at n = 0), n!.
std::uint64_t family_size(TreeFamily f, int tree_size);

}  // namespace cumtree
