#include "cumtree/peaks.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace cumtree {

Plot::Plot(std::vector<int> word) : word_(std::move(word))
{
    std::set<int> seen(word_.begin(), word_.end());
    if (seen.size() != word_.size())
        throw std::invalid_argument("plot entries must be distinct");
}

std::vector<int> peaks(const Plot& w)
{
    std::vector<int> out;
    for (int p = 2; p < w.size(); ++p)
        if (w(p - 1) < w(p) && w(p) > w(p + 1))
            out.push_back(p);
    return out;
}

std::vector<std::vector<int>> southeast_regions(const Plot& w)
{
    const std::vector<int> ps = peaks(w);
    std::vector<std::vector<int>> regions(ps.size() + 1);
    for (int i = 1; i <= w.size(); ++i) {
        // The last peak whose quadrant contains the point wins.
        std::size_t owner = 0;
        for (std::size_t j = ps.size(); j-- > 0;)
            if (i >= ps[j] && w(i) <= w(ps[j])) {
                owner = j + 1;
                break;
            }
        regions[owner].push_back(i);
    }
    return regions;
}

namespace {

Permutation standardize(const std::vector<int>& values)
{
    std::vector<int> sorted = values;
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> images;
    for (int v : values)
        images.push_back(static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), v) - sorted.begin()) + 1);
    return Permutation(std::move(images));
}

}  // namespace

std::vector<Permutation> southeast_decomposition(const Plot& w)
{
    std::vector<Permutation> out;
    for (const auto& region : southeast_regions(w)) {
        if (region.empty())
            continue;
        std::vector<int> values;
        for (int i : region)
            values.push_back(w(i));
        out.push_back(standardize(values));
    }
    return out;
}

LabeledBranch branch_from_inorder(const std::vector<int>& labels)
{
    if (labels.empty())
        throw std::invalid_argument("a branch needs at least one vertex");
    std::vector<std::size_t> order(labels.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return labels[a] > labels[b]; });
    LabeledBranch b;
    for (std::size_t k = 0; k < order.size(); ++k) {
        b.labels.push_back(labels[order[k]]);
        if (k + 1 < order.size())
            b.steps.push_back(order[k + 1] < order[k] ? Side::left : Side::right);
    }
    return b;
}

std::vector<LabeledBranch> factors_from_plot(const Plot& w)
{
    std::vector<int> sorted = w.word();
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i)
        if (sorted[i] != static_cast<int>(i) + 1)
            throw std::invalid_argument("factors_from_plot: the word must be a permutation of [n]");
    const std::vector<int> ps = peaks(w);
    const auto regions = southeast_regions(w);
    std::vector<LabeledBranch> out;
    for (std::size_t j = 0; j < regions.size(); ++j) {
        // The peak point itself is the two-child vertex the factor is inserted at.
        std::vector<int> labels;
        for (int i : regions[j])
            if (j == 0 || i != ps[j - 1])
                labels.push_back(w(i));
        out.push_back(branch_from_inorder(labels));
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace cumtree
