#pragma once

// The bijections Psi : P(word) -> BPT(word) and Phi : Q(word) -> DBPT(word) that carry a tuple of
// branches to a tree whose insertion factors are exactly those branches.
//
// A branch attached to a block U lives on the vertex set U \ {max U}, labeled decreasingly from
// the top. Its vertex colors (top to bottom) are the letters at those positions in decreasing
// order and its box color is the letter at max U.

#include "cumtree/partitions.hpp"
#include "cumtree/tree.hpp"

#include <string>
#include <vector>

namespace cumtree {

/// (pi, (T_U)) with pi irreducible noncrossing, blocks of size >= 2; branches[i] belongs to
/// partition.blocks()[i].
struct PsiInput {
    SetPartition partition;
    std::vector<ColoredTree> branches;
};

/// (sigma, (T_U)) with sigma(1) = n and no descending run of size 1; branches[i] belongs to
/// druns(sigma).blocks()[i].
struct PhiInput {
    Permutation sigma;
    std::vector<ColoredTree> branches;
};

bool operator==(const PsiInput& a, const PsiInput& b);
bool operator==(const PhiInput& a, const PhiInput& b);

/// The color word i_1..i_n carried by the branches of a block family.
ColorWord word_of(const SetPartition& blocks, const std::vector<ColoredTree>& branches);

/// Direct construction on the vertices 1..n-1. The result's postorder is 1..n-1.
ColoredTree psi(const PsiInput& input);
/// Same tree built by iterated insertion of the branches, blocks taken by increasing minimum.
ColoredTree psi_by_insertion(const PsiInput& input);
/// Blocks of pi transported from the insertion-factor partition through the postorder labeling.
PsiInput psi_inverse(const ColoredTree& t);

/// Decreasing tree alpha^{-1}(sigma without its first entry), colored by label; before swings.
LabeledTree phi_tilde(const PhiInput& input);
LabeledTree phi(const PhiInput& input);
PhiInput phi_inverse(const LabeledTree& t);

/// All of P(word) / Q(word), blocks in canonical order, branches in enumeration order.
std::vector<PsiInput> enumerate_psi_domain(const ColorWord& word);
std::vector<PhiInput> enumerate_phi_domain(const ColorWord& word);

/// Sorted canonical encodings of the branches.
std::vector<std::string> branch_multiset(const std::vector<ColoredTree>& branches);

/// `partition` or `permutation` line, then `U -> <tree encoding>` per block.
std::string serialize(const PsiInput& x);
std::string serialize(const PhiInput& x);
PsiInput parse_psi_input(const std::string& text);
PhiInput parse_phi_input(const std::string& text);

}  // namespace cumtree
