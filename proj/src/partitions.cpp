#include "cumtree/partitions.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace cumtree {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images))
{
    const int n = size();
    if (n == 0)
        throw std::invalid_argument("permutation must have n >= 1");
    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    for (int v : images_) {
        if (v < 1 || v > n || seen[static_cast<std::size_t>(v)])
            throw std::invalid_argument("not a permutation of [" + std::to_string(n) + "]: " + to_string(*this));
        seen[static_cast<std::size_t>(v)] = true;
    }
}

Permutation Permutation::identity(int n)
{
    std::vector<int> v(static_cast<std::size_t>(n));
    std::iota(v.begin(), v.end(), 1);
    return Permutation(std::move(v));
}

std::vector<int> Permutation::descents() const
{
    std::vector<int> d;
    for (int i = 1; i < size(); ++i)
        if ((*this)(i) > (*this)(i + 1))
            d.push_back(i);
    return d;
}

std::string to_string(const Permutation& p)
{
    std::string out;
    for (std::size_t i = 0; i < p.images().size(); ++i) {
        if (i)
            out += ',';
        out += std::to_string(p.images()[i]);
    }
    return out;
}

Permutation parse_permutation(std::string_view text)
{
    std::vector<int> v;
    bool separated = text.find_first_of(", ") != std::string_view::npos;
    if (!separated) {
        for (char c : text) {
            if (!std::isdigit(static_cast<unsigned char>(c)))
                throw std::invalid_argument("malformed permutation: '" + std::string(text) + "'");
            v.push_back(c - '0');
        }
    } else {
        std::string token;
        auto flush = [&] {
            if (token.empty())
                return;
            if (!std::all_of(token.begin(), token.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
                throw std::invalid_argument("malformed permutation: '" + std::string(text) + "'");
            v.push_back(std::stoi(token));
            token.clear();
        };
        for (char c : text) {
            if (c == ',' || c == ' ')
                flush();
            else
                token += c;
        }
        flush();
    }
    return Permutation(std::move(v));
}

void for_each_permutation(int n, const std::function<void(const Permutation&)>& visit)
{
    std::vector<int> v(static_cast<std::size_t>(n));
    std::iota(v.begin(), v.end(), 1);
    do {
        visit(Permutation(v));
    } while (std::next_permutation(v.begin(), v.end()));
}

std::vector<Permutation> all_permutations(int n)
{
    std::vector<Permutation> out;
    for_each_permutation(n, [&](const Permutation& p) { out.push_back(p); });
    return out;
}

// ---------------------------------------------------------------------------

SetPartition::SetPartition(int n, std::vector<Block> blocks) : n_(n), blocks_(std::move(blocks))
{
    if (n_ < 1)
        throw std::invalid_argument("partition of [n] needs n >= 1");
    owner_.assign(static_cast<std::size_t>(n_) + 1, UINT32_MAX);
    for (auto& b : blocks_) {
        if (b.empty())
            throw std::invalid_argument("partition has an empty block");
        std::sort(b.begin(), b.end());
    }
    std::sort(blocks_.begin(), blocks_.end(), [](const Block& a, const Block& b) { return a.front() < b.front(); });
    for (std::size_t i = 0; i < blocks_.size(); ++i)
        for (int x : blocks_[i]) {
            if (x < 1 || x > n_ || owner_[static_cast<std::size_t>(x)] != UINT32_MAX)
                throw std::invalid_argument("blocks are not a partition of [" + std::to_string(n_) + "]");
            owner_[static_cast<std::size_t>(x)] = static_cast<std::uint32_t>(i);
        }
    for (int x = 1; x <= n_; ++x)
        if (owner_[static_cast<std::size_t>(x)] == UINT32_MAX)
            throw std::invalid_argument("blocks do not cover [" + std::to_string(n_) + "]");
}

std::size_t SetPartition::block_of(int x) const
{
    if (x < 1 || x > n_)
        throw std::out_of_range("element outside [n]");
    return owner_[static_cast<std::size_t>(x)];
}

std::string to_string(const SetPartition& p)
{
    std::string out = "{";
    for (std::size_t i = 0; i < p.blocks().size(); ++i) {
        if (i)
            out += ',';
        out += '{';
        for (std::size_t j = 0; j < p.blocks()[i].size(); ++j) {
            if (j)
                out += ',';
            out += std::to_string(p.blocks()[i][j]);
        }
        out += '}';
    }
    return out + "}";
}

SetPartition parse_partition(std::string_view text)
{
    auto bad = [&] { return std::invalid_argument("malformed partition: '" + std::string(text) + "'"); };
    std::vector<Block> blocks;
    std::size_t i = 0;
    auto skip = [&] {
        while (i < text.size() && text[i] == ' ')
            ++i;
    };
    skip();
    if (i >= text.size() || text[i] != '{')
        throw bad();
    ++i;
    int maxv = 0;
    while (true) {
        skip();
        if (i < text.size() && text[i] == '}') {
            ++i;
            break;
        }
        if (i >= text.size() || text[i] != '{')
            throw bad();
        ++i;
        Block b;
        std::string num;
        while (i < text.size() && text[i] != '}') {
            char c = text[i++];
            if (std::isdigit(static_cast<unsigned char>(c)))
                num += c;
            else if (c == ',' || c == ' ') {
                if (!num.empty()) {
                    b.push_back(std::stoi(num));
                    num.clear();
                }
            } else
                throw bad();
        }
        if (i >= text.size())
            throw bad();
        ++i;
        if (!num.empty())
            b.push_back(std::stoi(num));
        for (int x : b)
            maxv = std::max(maxv, x);
        blocks.push_back(std::move(b));
        skip();
        if (i < text.size() && text[i] == ',')
            ++i;
    }
    skip();
    if (i != text.size())
        throw bad();
    return SetPartition(maxv, std::move(blocks));
}

PartitionFlags classify(const SetPartition& p)
{
    const int n = p.n();
    PartitionFlags f;
    f.interval = true;
    f.noncrossing = true;
    // interval: no i < j < k with i ~ k but j not ~ k.
    for (const Block& b : p.blocks())
        if (b.back() - b.front() + 1 != static_cast<int>(b.size()))
            f.interval = false;
    // noncrossing: no i < j < k < l with i ~ k, j ~ l, i not ~ j.
    for (std::size_t a = 0; a < p.blocks().size() && f.noncrossing; ++a)
        for (std::size_t b = 0; b < p.blocks().size() && f.noncrossing; ++b) {
            if (a == b)
                continue;
            const Block& A = p.blocks()[a];
            const Block& B = p.blocks()[b];
            for (std::size_t x = 0; x + 1 < A.size() && f.noncrossing; ++x)
                for (int j : B)
                    if (A[x] < j && j < A[x + 1]) {
                        // j sits strictly inside a gap of A; B must not reach beyond that gap.
                        if (B.front() < A[x] || B.back() > A[x + 1])
                            f.noncrossing = false;
                        break;
                    }
        }
    f.irreducible = f.noncrossing && p.same_block(1, n);
    return f;
}

PartitionClass parse_partition_class(std::string_view name)
{
    if (name == "all")
        return PartitionClass::all;
    if (name == "interval")
        return PartitionClass::interval;
    if (name == "noncrossing")
        return PartitionClass::noncrossing;
    if (name == "nc_irreducible")
        return PartitionClass::nc_irreducible;
    if (name == "nc_irreducible_min2")
        return PartitionClass::nc_irreducible_min2;
    throw std::invalid_argument("unknown partition class: " + std::string(name));
}

std::string to_string(PartitionClass c)
{
    switch (c) {
    case PartitionClass::all: return "all";
    case PartitionClass::interval: return "interval";
    case PartitionClass::noncrossing: return "noncrossing";
    case PartitionClass::nc_irreducible: return "nc_irreducible";
    case PartitionClass::nc_irreducible_min2: return "nc_irreducible_min2";
    }
    return "?";
}

bool in_class(const SetPartition& p, PartitionClass c)
{
    if (c == PartitionClass::all)
        return true;
    PartitionFlags f = classify(p);
    switch (c) {
    case PartitionClass::interval: return f.interval;
    case PartitionClass::noncrossing: return f.noncrossing;
    case PartitionClass::nc_irreducible: return f.irreducible;
    case PartitionClass::nc_irreducible_min2:
        return f.irreducible && std::all_of(p.blocks().begin(), p.blocks().end(), [](const Block& b) { return b.size() >= 2; });
    default: return true;
    }
}

void for_each_partition(int n, PartitionClass c, const std::function<void(const SetPartition&)>& visit)
{
    if (n < 1)
        throw std::invalid_argument("enumerate_partitions needs n >= 1");
    // Restricted growth strings a_1 = 0, a_i <= 1 + max(a_1..a_{i-1}).
    std::vector<int> rgs(static_cast<std::size_t>(n), 0);
    std::vector<int> prefix_max(static_cast<std::size_t>(n), 0);
    while (true) {
        int k = *std::max_element(rgs.begin(), rgs.end()) + 1;
        std::vector<Block> blocks(static_cast<std::size_t>(k));
        for (int i = 0; i < n; ++i)
            blocks[static_cast<std::size_t>(rgs[static_cast<std::size_t>(i)])].push_back(i + 1);
        SetPartition p(n, std::move(blocks));
        if (in_class(p, c))
            visit(p);
        int i = n - 1;
        while (i > 0 && rgs[static_cast<std::size_t>(i)] > prefix_max[static_cast<std::size_t>(i - 1)])
            --i;
        if (i == 0)
            return;
        ++rgs[static_cast<std::size_t>(i)];
        prefix_max[static_cast<std::size_t>(i)] = std::max(prefix_max[static_cast<std::size_t>(i - 1)], rgs[static_cast<std::size_t>(i)]);
        for (int j = i + 1; j < n; ++j) {
            rgs[static_cast<std::size_t>(j)] = 0;
            prefix_max[static_cast<std::size_t>(j)] = prefix_max[static_cast<std::size_t>(i)];
        }
    }
}

std::vector<SetPartition> enumerate_partitions(int n, PartitionClass c)
{
    std::vector<SetPartition> out;
    for_each_partition(n, c, [&](const SetPartition& p) { out.push_back(p); });
    return out;
}

SetPartition druns(const Permutation& sigma)
{
    std::vector<Block> blocks;
    Block cur{sigma(1)};
    for (int i = 2; i <= sigma.size(); ++i) {
        if (sigma(i) < sigma(i - 1))
            cur.push_back(sigma(i));
        else {
            blocks.push_back(std::move(cur));
            cur = {sigma(i)};
        }
    }
    blocks.push_back(std::move(cur));
    return SetPartition(sigma.size(), std::move(blocks));
}

std::vector<Permutation> enumerate_first_max(int n)
{
    if (n < 1)
        throw std::invalid_argument("enumerate_first_max needs n >= 1");
    std::vector<Permutation> out;
    std::vector<int> rest(static_cast<std::size_t>(n - 1));
    std::iota(rest.begin(), rest.end(), 1);
    do {
        std::vector<int> v{n};
        v.insert(v.end(), rest.begin(), rest.end());
        out.emplace_back(std::move(v));
    } while (std::next_permutation(rest.begin(), rest.end()));
    return out;
}

std::vector<Permutation> enumerate_D(int n)
{
    std::vector<Permutation> out;
    for (auto& s : enumerate_first_max(n)) {
        SetPartition d = druns(s);
        if (std::all_of(d.blocks().begin(), d.blocks().end(), [](const Block& b) { return b.size() >= 2; }))
            out.push_back(std::move(s));
    }
    return out;
}

}  // namespace cumtree
