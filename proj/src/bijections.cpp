#include "cumtree/bijections.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "cumtree/cumulants.hpp"
#include "cumtree/enumerate.hpp"

namespace cumtree {

namespace {

struct BlockBranch {
    Block elements_top_down;  // U \ {max U}, decreasing
    std::vector<Side> steps;
    std::vector<Color> colors_top_down;
    Color box;
};

BlockBranch attach(const Block& block, const ColoredTree& branch)
{
    if (!is_branch(branch))
        throw std::invalid_argument("each block needs a branch");
    if (branch.size() + 1 != static_cast<int>(block.size()))
        throw std::invalid_argument("branch size must be |U| - 1");
    auto [path, steps] = branch_path(branch);
    BlockBranch out;
    out.elements_top_down.assign(block.rbegin() + 1, block.rend());
    out.steps = std::move(steps);
    for (NodeId v : path)
        out.colors_top_down.push_back(branch.node(v).color);
    out.box = branch.box_color();
    return out;
}

void require_branch_count(const SetPartition& p, const std::vector<ColoredTree>& branches)
{
    if (branches.size() != p.block_count())
        throw std::invalid_argument("need exactly one branch per block");
}

}  // namespace

ColorWord word_of(const SetPartition& blocks, const std::vector<ColoredTree>& branches)
{
    require_branch_count(blocks, branches);
    ColorWord w(static_cast<std::size_t>(blocks.n()));
    for (std::size_t i = 0; i < blocks.block_count(); ++i) {
        const Block& u = blocks.blocks()[i];
        BlockBranch bb = attach(u, branches[i]);
        for (std::size_t k = 0; k < bb.elements_top_down.size(); ++k)
            w[static_cast<std::size_t>(bb.elements_top_down[k] - 1)] = bb.colors_top_down[k];
        w[static_cast<std::size_t>(u.back() - 1)] = bb.box;
    }
    return w;
}

std::vector<std::string> branch_multiset(const std::vector<ColoredTree>& branches)
{
    std::vector<std::string> out;
    for (const auto& b : branches)
        out.push_back(canonical_encode(b));
    std::sort(out.begin(), out.end());
    return out;
}

bool operator==(const PsiInput& a, const PsiInput& b)
{
    if (!(a.partition == b.partition) || a.branches.size() != b.branches.size())
        return false;
    for (std::size_t i = 0; i < a.branches.size(); ++i)
        if (canonical_encode(a.branches[i]) != canonical_encode(b.branches[i]))
            return false;
    return true;
}

bool operator==(const PhiInput& a, const PhiInput& b)
{
    if (a.sigma != b.sigma || a.branches.size() != b.branches.size())
        return false;
    for (std::size_t i = 0; i < a.branches.size(); ++i)
        if (canonical_encode(a.branches[i]) != canonical_encode(b.branches[i]))
            return false;
    return true;
}

// ---------------------------------------------------------------------------
// Psi

namespace {

void validate_psi(const PsiInput& x)
{
    if (!in_class(x.partition, PartitionClass::nc_irreducible_min2))
        throw std::invalid_argument("psi: partition " + to_string(x.partition) +
                                    " is not irreducible noncrossing with blocks of size >= 2");
    require_branch_count(x.partition, x.branches);
}

}  // namespace

ColoredTree psi(const PsiInput& input)
{
    validate_psi(input);
    const int n = input.partition.n();
    const ColorWord word = word_of(input.partition, input.branches);
    // Vertex j in [n-1] is node j-1.
    std::vector<Node> nodes(static_cast<std::size_t>(n - 1));
    auto id = [](int j) { return static_cast<NodeId>(j - 1); };
    for (std::size_t bi = 0; bi < input.partition.block_count(); ++bi) {
        const Block& u = input.partition.blocks()[bi];
        BlockBranch bb = attach(u, input.branches[bi]);
        const int lo = u.front();
        const int hi = u.back();
        for (std::size_t k = 0; k < bb.elements_top_down.size(); ++k) {
            int j = bb.elements_top_down[k];
            if (j == lo)
                continue;
            // j has a child in T_U, on side steps[k]; in the tree that child is j - 1.
            Node& nd = nodes[static_cast<std::size_t>(id(j))];
            (bb.steps[k] == Side::left ? nd.left : nd.right) = id(j - 1);
        }
        if (hi != n) {
            Node& nd = nodes[static_cast<std::size_t>(id(hi))];
            nd.right = id(hi - 1);
            nd.left = id(lo - 1);
        }
    }
    for (int j = 1; j < n; ++j)
        nodes[static_cast<std::size_t>(id(j))].color = word[static_cast<std::size_t>(j - 1)];
    return ColoredTree(std::move(nodes), id(n - 1), word.back());
}

ColoredTree psi_by_insertion(const PsiInput& input)
{
    validate_psi(input);
    const auto& blocks = input.partition.blocks();
    // labels[node id] for the tree built so far.
    auto branch_labels = [](const Block& u, const ColoredTree& b) {
        auto [path, steps] = branch_path(b);
        std::vector<int> labels(static_cast<std::size_t>(b.size()));
        for (std::size_t k = 0; k < path.size(); ++k)
            labels[static_cast<std::size_t>(path[k])] = u[u.size() - 2 - k];
        return labels;
    };
    ColoredTree acc = input.branches[0];
    std::vector<int> labels = branch_labels(blocks[0], acc);
    for (std::size_t i = 1; i < blocks.size(); ++i) {
        const Block& u = blocks[i];
        const int v = u.front() - 1;
        auto it = std::find(labels.begin(), labels.end(), v);
        if (it == labels.end())
            throw std::logic_error("psi_by_insertion: insertion vertex missing");
        acc = insert(acc, static_cast<NodeId>(it - labels.begin()), input.branches[i]);
        std::vector<int> added = branch_labels(u, input.branches[i]);
        labels.insert(labels.end(), added.begin(), added.end());
        labels.push_back(u.back());
    }
    return acc;
}

PsiInput psi_inverse(const ColoredTree& t)
{
    if (t.empty())
        throw std::invalid_argument("psi_inverse: tree must be nonempty");
    const int n = t.size() + 1;
    std::vector<int> label = traversal_labeling(t, Traversal::postorder);
    std::vector<std::pair<Block, ColoredTree>> parts;
    for (auto& blk : insertion_factor_blocks(t)) {
        Block u;
        for (NodeId m : blk.members)
            u.push_back(label[static_cast<std::size_t>(m)]);
        u.push_back(blk.anchor == kNoNode ? n : label[static_cast<std::size_t>(blk.anchor)]);
        std::sort(u.begin(), u.end());
        parts.emplace_back(std::move(u), std::move(blk.branch));
    }
    std::sort(parts.begin(), parts.end(), [](const auto& a, const auto& b) { return a.first.front() < b.first.front(); });
    std::vector<Block> blocks;
    std::vector<ColoredTree> branches;
    for (auto& [u, b] : parts) {
        blocks.push_back(std::move(u));
        branches.push_back(std::move(b));
    }
    return PsiInput{SetPartition(n, std::move(blocks)), std::move(branches)};
}

// ---------------------------------------------------------------------------
// Phi

namespace {

SetPartition validate_phi(const PhiInput& x)
{
    const int n = x.sigma.size();
    if (n < 2 || x.sigma(1) != n)
        throw std::invalid_argument("phi: sigma must start with its maximum: " + to_string(x.sigma));
    SetPartition runs = druns(x.sigma);
    for (const Block& b : runs.blocks())
        if (b.size() < 2)
            throw std::invalid_argument("phi: sigma has a descending run of size 1: " + to_string(x.sigma));
    require_branch_count(runs, x.branches);
    return runs;
}

}  // namespace

LabeledTree phi_tilde(const PhiInput& input)
{
    SetPartition runs = validate_phi(input);
    const ColorWord word = word_of(runs, input.branches);
    std::vector<int> rest(input.sigma.images().begin() + 1, input.sigma.images().end());
    LabeledTree lt = alpha_inverse(Permutation(std::move(rest)));
    ColoredTree t = lt.tree();
    for (NodeId v = 0; v < t.size(); ++v)
        t.set_color(v, word[static_cast<std::size_t>(lt.label(v) - 1)]);
    t.set_box_color(word.back());
    return LabeledTree(std::move(t), lt.labels());
}

LabeledTree phi(const PhiInput& input)
{
    LabeledTree base = phi_tilde(input);
    SetPartition runs = druns(input.sigma);
    ColoredTree t = base.tree();
    for (std::size_t bi = 0; bi < runs.block_count(); ++bi) {
        const Block& u = runs.blocks()[bi];
        BlockBranch bb = attach(u, input.branches[bi]);
        for (std::size_t k = 0; k < bb.steps.size(); ++k) {
            if (bb.steps[k] != Side::left)
                continue;
            NodeId v = base.node_with_label(bb.elements_top_down[k]);
            if (t.child_count(v) != 1)
                throw std::logic_error("phi: branch vertex does not match a one-child vertex");
            t = swing(t, v);
        }
    }
    return LabeledTree(std::move(t), base.labels());
}

PhiInput phi_inverse(const LabeledTree& t)
{
    const int n = t.size() + 1;
    if (t.size() == 0)
        throw std::invalid_argument("phi_inverse: tree must be nonempty");
    ColoredTree tilde = t.tree();
    for (NodeId v = 0; v < tilde.size(); ++v) {
        const Node& nd = tilde.node(v);
        if (nd.left != kNoNode && nd.right == kNoNode)
            tilde = swing(tilde, v);
    }
    std::vector<int> images{n};
    const Permutation reading = alpha(LabeledTree(tilde, t.labels()));
    images.insert(images.end(), reading.images().begin(), reading.images().end());
    Permutation sigma(std::move(images));
    SetPartition runs = druns(sigma);
    auto color_of_label = [&](int k) { return k == n ? t.tree().box_color() : t.tree().node(t.node_with_label(k)).color; };
    std::vector<ColoredTree> branches;
    for (const Block& u : runs.blocks()) {
        Block top_down(u.rbegin() + 1, u.rend());
        std::vector<Color> colors;
        std::vector<Side> steps;
        for (std::size_t k = 0; k < top_down.size(); ++k) {
            colors.push_back(color_of_label(top_down[k]));
            if (k + 1 < top_down.size()) {
                NodeId v = t.node_with_label(top_down[k]);
                if (t.tree().child_count(v) != 1)
                    throw std::logic_error("phi_inverse: interior run element without exactly one child");
                steps.push_back(t.tree().node(v).left != kNoNode ? Side::left : Side::right);
            }
        }
        branches.push_back(make_branch(colors, steps, color_of_label(u.back())));
    }
    return PhiInput{std::move(sigma), std::move(branches)};
}

// ---------------------------------------------------------------------------

namespace {

// Cartesian product of branch choices, last block varying fastest.
std::vector<std::vector<ColoredTree>> branch_choices(const SetPartition& p, const ColorWord& word)
{
    std::vector<std::vector<ColoredTree>> options;
    for (const Block& u : p.blocks())
        options.push_back(enumerate_branches(restrict_word(word, u)));
    std::vector<std::vector<ColoredTree>> out{{}};
    for (const auto& opt : options) {
        std::vector<std::vector<ColoredTree>> next;
        for (const auto& prefix : out)
            for (const auto& b : opt) {
                auto v = prefix;
                v.push_back(b);
                next.push_back(std::move(v));
            }
        out = std::move(next);
    }
    return out;
}

}  // namespace

std::vector<PsiInput> enumerate_psi_domain(const ColorWord& word)
{
    std::vector<PsiInput> out;
    const int n = static_cast<int>(word.size());
    for (const auto& p : enumerate_partitions(n, PartitionClass::nc_irreducible_min2))
        for (auto& bs : branch_choices(p, word))
            out.push_back(PsiInput{p, std::move(bs)});
    return out;
}

std::vector<PhiInput> enumerate_phi_domain(const ColorWord& word)
{
    std::vector<PhiInput> out;
    const int n = static_cast<int>(word.size());
    for (const auto& sigma : enumerate_D(n)) {
        SetPartition runs = druns(sigma);
        for (auto& bs : branch_choices(runs, word))
            out.push_back(PhiInput{sigma, std::move(bs)});
    }
    return out;
}

// ---------------------------------------------------------------------------

namespace {

std::string block_lines(const SetPartition& p, const std::vector<ColoredTree>& branches)
{
    std::string out;
    for (std::size_t i = 0; i < p.block_count(); ++i) {
        const Block& u = p.blocks()[i];
        for (std::size_t j = 0; j < u.size(); ++j) {
            if (j)
                out += ',';
            out += std::to_string(u[j]);
        }
        out += " -> " + canonical_encode(branches.at(i)) + "\n";
    }
    return out;
}

std::pair<std::string, std::vector<std::pair<Block, ColoredTree>>> parse_block_lines(const std::string& text, const std::string& keyword)
{
    std::istringstream in(text);
    std::string line;
    std::string header;
    std::vector<std::pair<Block, ColoredTree>> entries;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.find_first_not_of(" \t\r") == std::string::npos)
            continue;
        auto fail = [&](const std::string& why) {
            return std::invalid_argument("line " + std::to_string(lineno) + ": " + why + ": '" + line + "'");
        };
        if (header.empty()) {
            if (line.rfind(keyword + " ", 0) != 0)
                throw fail("expected '" + keyword + " ...'");
            header = line.substr(keyword.size() + 1);
            continue;
        }
        auto arrow = line.find(" -> ");
        if (arrow == std::string::npos)
            throw fail("expected 'U -> tree'");
        try {
            Block u;
            for (Color c : parse_word(line.substr(0, arrow)))
                u.push_back(static_cast<int>(c.index));
            entries.emplace_back(std::move(u), parse_tree(line.substr(arrow + 4)));
        } catch (const std::exception& e) {
            throw fail(e.what());
        }
    }
    if (header.empty())
        throw std::invalid_argument("missing '" + keyword + "' header");
    return {header, entries};
}

std::vector<ColoredTree> align(const SetPartition& p, std::vector<std::pair<Block, ColoredTree>> entries)
{
    std::vector<ColoredTree> out;
    for (const Block& u : p.blocks()) {
        auto it = std::find_if(entries.begin(), entries.end(), [&](const auto& e) { return e.first == u; });
        if (it == entries.end())
            throw std::invalid_argument("no branch given for block " + to_string(ColorWord(u.begin(), u.end())));
        out.push_back(it->second);
    }
    if (entries.size() != p.block_count())
        throw std::invalid_argument("branch lines do not match the blocks");
    return out;
}

}  // namespace

std::string serialize(const PsiInput& x) { return "partition " + to_string(x.partition) + "\n" + block_lines(x.partition, x.branches); }

std::string serialize(const PhiInput& x)
{
    return "permutation " + to_string(x.sigma) + "\n" + block_lines(druns(x.sigma), x.branches);
}

PsiInput parse_psi_input(const std::string& text)
{
    auto [header, entries] = parse_block_lines(text, "partition");
    SetPartition p = parse_partition(header);
    return PsiInput{p, align(p, std::move(entries))};
}

PhiInput parse_phi_input(const std::string& text)
{
    auto [header, entries] = parse_block_lines(text, "permutation");
    Permutation sigma = parse_permutation(header);
    return PhiInput{sigma, align(druns(sigma), std::move(entries))};
}

}  // namespace cumtree
