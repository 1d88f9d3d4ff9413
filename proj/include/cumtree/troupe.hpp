#pragma once

// Weighted troupes: ring-valued tree weights, multiplicative under insertion, presented by their
// values on branches and evaluated on arbitrary trees through insertion factors.

#include "cumtree/enumerate.hpp"
#include "cumtree/ring.hpp"
#include "cumtree/tree.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <string_view>

namespace cumtree {

using BranchWeight = std::function<RingElem(const ColoredTree& branch)>;

class WeightedTroupe {
public:
    WeightedTroupe(std::string name, BranchWeight weight);

    const std::string& name() const { return name_; }

    /// Memoized by canonical encoding; safe to call from several threads.
    RingElem branch_weight(const ColoredTree& branch) const;

    /// 0 on the empty tree, otherwise the product of the branch weights of the insertion factors.
    RingElem evaluate(const ColoredTree& t) const;

private:
    struct Memo;
    std::string name_;
    BranchWeight weight_;
    std::shared_ptr<Memo> memo_;
};

/// Every branch weighs 1: the troupe of all nonempty trees.
WeightedTroupe troupe_all();
/// Only single-vertex branches: full binary plane trees.
WeightedTroupe troupe_full();
/// Branches without right edges: Motzkin trees.
WeightedTroupe troupe_motzkin();
/// Branches whose box and every vertex with a left child are colored from J.
WeightedTroupe troupe_color_constrained(std::set<std::uint32_t> colors);
/// t1^{right+1} t2 on every branch, i.e. t1^{right(T)+1} t2^{two(T)+1} on every tree.
WeightedTroupe troupe_right_two_monomial(RingElem t1, RingElem t2);
/// t^{number of J-colored vertices, box included} on every branch.
WeightedTroupe troupe_color_count(std::set<std::uint32_t> colors, RingElem t = RingElem::q());
/// Finite table keyed by canonical encoding; branches not listed weigh `fallback`.
WeightedTroupe troupe_from_table(std::string name, std::map<std::string, RingElem> table, RingElem fallback = RingElem(0));
/// Small random rational weights on every branch of size <= max_branch_size over colors [0, num_colors).
WeightedTroupe random_troupe(std::uint64_t seed, std::uint32_t num_colors, int max_branch_size);

/// CLI names: all, full, motzkin, colorset:J, rightmono:t1,t2, colorcount:J, random:SEED.
/// J is a comma list of color indices; t1, t2 are ring elements such as `q` or `1/2`.
WeightedTroupe make_troupe(std::string_view desc);

/// Sum of tau over the family selected by the color word (trees of size |word| - 1).
/// Parallel over the enumerated trees.
RingElem weighted_sum(const WeightedTroupe& tau, TreeFamily family, const ColorWord& word);

namespace reference {
/// Serial version of weighted_sum.
RingElem weighted_sum(const WeightedTroupe& tau, TreeFamily family, const ColorWord& word);
}  // namespace reference

}  // namespace cumtree
