#pragma once

// Insertion factors of a decreasing tree read directly off the plot of its inorder word.

#include "cumtree/tree.hpp"

#include <vector>

namespace cumtree {

/// A word of distinct integers w(1..n), viewed as the points (i, w(i)).
class Plot {
public:
    /// Throws on repeated entries.
    explicit Plot(std::vector<int> word);
    explicit Plot(const Permutation& sigma) : Plot(sigma.images()) {}

    int size() const { return static_cast<int>(word_.size()); }
    /// One-based access.
    int operator()(int i) const { return word_[static_cast<std::size_t>(i - 1)]; }
    const std::vector<int>& word() const { return word_; }

private:
    std::vector<int> word_;
};

/// Indices p in 2..n-1 with w(p-1) < w(p) > w(p+1), ascending.
std::vector<int> peaks(const Plot& w);

/// Positions (1-based, ascending) of the points in each region: index 0 holds the points below
/// no peak, index j the points weakly southeast of the j-th peak and of no later one.
std::vector<std::vector<int>> southeast_regions(const Plot& w);

/// The regions as normalized words w_0, w_1, ..., w_l.
std::vector<Permutation> southeast_decomposition(const Plot& w);

/// The decreasing branch whose inorder reading is `labels`.
LabeledBranch branch_from_inorder(const std::vector<int>& labels);

/// Labeled insertion factors of alpha^{-1}(w), sorted. w must be a permutation of [n].
std::vector<LabeledBranch> factors_from_plot(const Plot& w);

}  // namespace cumtree
