#pragma once

// Permutations, set partitions of [n] and the partition classes used by the cumulant formulas.

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace cumtree {

/// One-line notation sigma(1) ... sigma(n), values in 1..n.
class Permutation {
public:
    Permutation() = default;
    /// Throws unless images is a bijection on [n], n >= 1.
    explicit Permutation(std::vector<int> images);

    static Permutation identity(int n);

    int size() const { return static_cast<int>(images_.size()); }
    /// One-based access.
    int operator()(int i) const { return images_[static_cast<std::size_t>(i - 1)]; }
    const std::vector<int>& images() const { return images_; }

    /// Descent positions i in [n-1] with sigma(i) > sigma(i+1).
    std::vector<int> descents() const;
    int des() const { return static_cast<int>(descents().size()); }

    auto operator<=>(const Permutation&) const = default;

private:
    std::vector<int> images_;
};

/// Comma-separated output, e.g. `2,3,1`.
std::string to_string(const Permutation& p);
/// Accepts `2,3,1`, `2 3 1`, or a bare digit string `231` (n <= 9).
Permutation parse_permutation(std::string_view text);

/// All permutations of [n] in lexicographic order.
void for_each_permutation(int n, const std::function<void(const Permutation&)>& visit);
std::vector<Permutation> all_permutations(int n);

using Block = std::vector<int>;

/// Partition of [n]; blocks sorted internally and ordered by minimum.
class SetPartition {
public:
    SetPartition() = default;
    /// Canonicalizes; throws unless the blocks are nonempty, disjoint and cover [n].
    SetPartition(int n, std::vector<Block> blocks);

    int n() const { return n_; }
    const std::vector<Block>& blocks() const { return blocks_; }
    std::size_t block_count() const { return blocks_.size(); }
    /// Index of the block containing element x (1-based element).
    std::size_t block_of(int x) const;
    bool same_block(int x, int y) const { return block_of(x) == block_of(y); }

    auto operator<=>(const SetPartition&) const = default;

private:
    int n_ = 0;
    std::vector<Block> blocks_;
    std::vector<std::uint32_t> owner_;
};

/// `{{1,3},{2}}`.
std::string to_string(const SetPartition& p);
SetPartition parse_partition(std::string_view text);

struct PartitionFlags {
    bool interval = false;
    bool noncrossing = false;
    /// noncrossing and 1 ~ n.
    bool irreducible = false;
};

PartitionFlags classify(const SetPartition& p);

enum class PartitionClass { all, interval, noncrossing, nc_irreducible, nc_irreducible_min2 };

PartitionClass parse_partition_class(std::string_view name);
std::string to_string(PartitionClass c);
bool in_class(const SetPartition& p, PartitionClass c);

/// Partitions of [n] in the class, ordered by restricted growth string.
void for_each_partition(int n, PartitionClass c, const std::function<void(const SetPartition&)>& visit);
std::vector<SetPartition> enumerate_partitions(int n, PartitionClass c);

/// Value sets of the maximal decreasing runs of sigma.
SetPartition druns(const Permutation& sigma);

/// sigma with sigma(1) = n and no descending run of size 1, in lexicographic order.
std::vector<Permutation> enumerate_D(int n);

/// All sigma in S_n with sigma(1) = n, in lexicographic order.
std::vector<Permutation> enumerate_first_max(int n);

}  // namespace cumtree
