#include "cumtree/troupe.hpp"

#include <algorithm>
#include <mutex>
#include <random>
#include <shared_mutex>
#include <stdexcept>
#include <unordered_map>

namespace cumtree {

struct WeightedTroupe::Memo {
    std::shared_mutex mu;
    std::unordered_map<std::string, RingElem> values;
};

WeightedTroupe::WeightedTroupe(std::string name, BranchWeight weight)
    : name_(std::move(name)), weight_(std::move(weight)), memo_(std::make_shared<Memo>())
{
    if (!weight_)
        throw std::invalid_argument("troupe needs a branch weight rule");
}

RingElem WeightedTroupe::branch_weight(const ColoredTree& branch) const
{
    if (!is_branch(branch))
        throw std::invalid_argument("branch_weight: argument is not a branch");
    std::string key = canonical_encode(branch);
    {
        std::shared_lock lock(memo_->mu);
        if (auto it = memo_->values.find(key); it != memo_->values.end())
            return it->second;
    }
    RingElem w = weight_(branch);
    std::unique_lock lock(memo_->mu);
    return memo_->values.emplace(std::move(key), std::move(w)).first->second;
}

RingElem WeightedTroupe::evaluate(const ColoredTree& t) const
{
    if (t.empty())
        return RingElem(0);
    RingElem acc(1);
    for (const auto& f : insertion_factors(t)) {
        acc *= branch_weight(f);
        if (acc.is_zero())
            break;
    }
    return acc;
}

// ---------------------------------------------------------------------------

WeightedTroupe troupe_all()
{
    return WeightedTroupe("all", [](const ColoredTree&) { return RingElem(1); });
}

WeightedTroupe troupe_full()
{
    return WeightedTroupe("full", [](const ColoredTree& b) { return RingElem(b.size() == 1 ? 1 : 0); });
}

WeightedTroupe troupe_motzkin()
{
    return WeightedTroupe("motzkin", [](const ColoredTree& b) { return RingElem(right_edges(b) == 0 ? 1 : 0); });
}

namespace {

std::string color_set_name(const std::set<std::uint32_t>& colors)
{
    std::string s;
    for (auto c : colors) {
        if (!s.empty())
            s += ',';
        s += std::to_string(c);
    }
    return s;
}

std::set<std::uint32_t> parse_color_set(std::string_view text)
{
    std::set<std::uint32_t> out;
    if (text.empty())
        return out;
    for (Color c : parse_word(text))
        out.insert(c.index);
    return out;
}

}  // namespace

WeightedTroupe troupe_color_constrained(std::set<std::uint32_t> colors)
{
    std::string name = "colorset:" + color_set_name(colors);
    return WeightedTroupe(std::move(name), [colors = std::move(colors)](const ColoredTree& b) {
        if (!colors.contains(b.box_color().index))
            return RingElem(0);
        for (const Node& n : b.nodes())
            if (n.left != kNoNode && !colors.contains(n.color.index))
                return RingElem(0);
        return RingElem(1);
    });
}

WeightedTroupe troupe_right_two_monomial(RingElem t1, RingElem t2)
{
    std::string name = "rightmono:" + to_string(t1) + "," + to_string(t2);
    return WeightedTroupe(std::move(name), [t1 = std::move(t1), t2 = std::move(t2)](const ColoredTree& b) {
        return t1.pow(static_cast<unsigned>(right_edges(b) + 1)) * t2;
    });
}

WeightedTroupe troupe_color_count(std::set<std::uint32_t> colors, RingElem t)
{
    std::string name = "colorcount:" + color_set_name(colors);
    return WeightedTroupe(std::move(name), [colors = std::move(colors), t = std::move(t)](const ColoredTree& b) {
        unsigned k = colors.contains(b.box_color().index) ? 1u : 0u;
        for (const Node& n : b.nodes())
            k += colors.contains(n.color.index) ? 1u : 0u;
        return t.pow(k);
    });
}

WeightedTroupe troupe_from_table(std::string name, std::map<std::string, RingElem> table, RingElem fallback)
{
    return WeightedTroupe(std::move(name), [table = std::move(table), fallback = std::move(fallback)](const ColoredTree& b) {
        auto it = table.find(canonical_encode(b));
        return it == table.end() ? fallback : it->second;
    });
}

WeightedTroupe random_troupe(std::uint64_t seed, std::uint32_t num_colors, int max_branch_size)
{
    if (num_colors == 0)
        throw std::invalid_argument("random_troupe needs at least one color");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> num(-5, 5);
    std::uniform_int_distribution<long> den(1, 4);
    std::map<std::string, RingElem> table;
    for (int size = 1; size <= max_branch_size; ++size) {
        // Every color word of length size + 1 over [0, num_colors).
        ColorWord word(static_cast<std::size_t>(size) + 1, Color{0});
        while (true) {
            for (const auto& b : enumerate_branches(word))
                table.emplace(canonical_encode(b), RingElem(make_rational(num(rng), den(rng))));
            std::size_t i = 0;
            while (i < word.size() && word[i].index + 1 == num_colors)
                word[i++].index = 0;
            if (i == word.size())
                break;
            ++word[i].index;
        }
    }
    return troupe_from_table("random:" + std::to_string(seed), std::move(table));
}

WeightedTroupe make_troupe(std::string_view desc)
{
    auto colon = desc.find(':');
    std::string_view head = desc.substr(0, colon);
    std::string_view arg = colon == std::string_view::npos ? std::string_view() : desc.substr(colon + 1);
    auto no_arg = [&] {
        if (colon != std::string_view::npos)
            throw std::invalid_argument("troupe '" + std::string(head) + "' takes no parameters");
    };
    if (head == "all") {
        no_arg();
        return troupe_all();
    }
    if (head == "full") {
        no_arg();
        return troupe_full();
    }
    if (head == "motzkin") {
        no_arg();
        return troupe_motzkin();
    }
    if (head == "colorset")
        return troupe_color_constrained(parse_color_set(arg));
    if (head == "colorcount")
        return troupe_color_count(parse_color_set(arg));
    if (head == "rightmono") {
        auto comma = arg.find(',');
        if (comma == std::string_view::npos)
            throw std::invalid_argument("rightmono needs two parameters: rightmono:t1,t2");
        return troupe_right_two_monomial(parse_ring_elem(arg.substr(0, comma)), parse_ring_elem(arg.substr(comma + 1)));
    }
    if (head == "random") {
        if (arg.empty())
            throw std::invalid_argument("random troupe needs a seed: random:SEED");
        return random_troupe(std::stoull(std::string(arg)), 2, 7);
    }
    throw std::invalid_argument("unknown troupe: " + std::string(desc));
}

// ---------------------------------------------------------------------------

namespace {

template <typename Tree>
const ColoredTree& shape_of(const Tree& t)
{
    if constexpr (std::is_same_v<Tree, LabeledTree>)
        return t.tree();
    else
        return t;
}

template <typename Tree>
RingElem parallel_sum(const WeightedTroupe& tau, const std::vector<Tree>& trees)
{
    RingElem total(0);
    const auto count = static_cast<std::int64_t>(trees.size());
#pragma omp parallel
    {
        RingElem local(0);
#pragma omp for schedule(dynamic, 64) nowait
        for (std::int64_t i = 0; i < count; ++i)
            local += tau.evaluate(shape_of(trees[static_cast<std::size_t>(i)]));
#pragma omp critical(cumtree_weighted_sum)
        total += local;
    }
    return total;
}

template <typename Tree>
RingElem serial_sum(const WeightedTroupe& tau, const std::vector<Tree>& trees)
{
    RingElem total(0);
    for (const auto& t : trees)
        total += tau.evaluate(shape_of(t));
    return total;
}

}  // namespace

RingElem weighted_sum(const WeightedTroupe& tau, TreeFamily family, const ColorWord& word)
{
    switch (family) {
    case TreeFamily::bpt: return parallel_sum(tau, enumerate_bpt(word));
    case TreeFamily::branch: return parallel_sum(tau, enumerate_branches(word));
    case TreeFamily::dbpt: return parallel_sum(tau, enumerate_dbpt(word));
    }
    return RingElem(0);
}

namespace reference {

RingElem weighted_sum(const WeightedTroupe& tau, TreeFamily family, const ColorWord& word)
{
    switch (family) {
    case TreeFamily::bpt: return serial_sum(tau, enumerate_bpt(word));
    case TreeFamily::branch: return serial_sum(tau, enumerate_branches(word));
    case TreeFamily::dbpt: return serial_sum(tau, enumerate_dbpt(word));
    }
    return RingElem(0);
}

}  // namespace reference

}  // namespace cumtree
