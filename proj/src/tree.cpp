#include "cumtree/tree.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <stdexcept>

namespace cumtree {

ColorWord make_word(std::initializer_list<std::uint32_t> letters)
{
    ColorWord w;
    for (auto c : letters)
        w.push_back(Color{c});
    return w;
}

std::string to_string(const ColorWord& w)
{
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i)
            out += ',';
        out += std::to_string(w[i].index);
    }
    return out;
}

ColorWord parse_word(std::string_view text)
{
    ColorWord w;
    std::string tok;
    auto flush = [&] {
        if (tok.empty())
            throw std::invalid_argument("malformed color word: '" + std::string(text) + "'");
        if (!std::all_of(tok.begin(), tok.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
            throw std::invalid_argument("malformed color word: '" + std::string(text) + "'");
        w.push_back(Color{static_cast<std::uint32_t>(std::stoul(tok))});
        tok.clear();
    };
    for (char c : text) {
        if (c == ',')
            flush();
        else if (c != ' ')
            tok += c;
    }
    flush();
    return w;
}

// ---------------------------------------------------------------------------

ColoredTree::ColoredTree(std::vector<Node> nodes, NodeId root, Color box) : nodes_(std::move(nodes)), root_(root), box_(box)
{
    if (nodes_.empty()) {
        if (root_ != kNoNode)
            throw std::invalid_argument("empty tree cannot have a root");
        return;
    }
    if (!contains(root_))
        throw std::invalid_argument("tree root is not a node");
    std::vector<int> parents(nodes_.size(), 0);
    for (const Node& n : nodes_)
        for (NodeId c : {n.left, n.right}) {
            if (c == kNoNode)
                continue;
            if (!contains(c))
                throw std::invalid_argument("child reference outside the node list");
            ++parents[static_cast<std::size_t>(c)];
        }
    if (parents[static_cast<std::size_t>(root_)] != 0)
        throw std::invalid_argument("root has a parent");
    for (std::size_t i = 0; i < nodes_.size(); ++i)
        if (static_cast<NodeId>(i) != root_ && parents[i] != 1)
            throw std::invalid_argument("node " + std::to_string(i) + " does not have exactly one parent");
    // With one parent per non-root node, reachability from the root rules out cycles.
    std::vector<bool> seen(nodes_.size(), false);
    std::vector<NodeId> stack{root_};
    std::size_t reached = 0;
    while (!stack.empty()) {
        NodeId v = stack.back();
        stack.pop_back();
        if (seen[static_cast<std::size_t>(v)])
            throw std::invalid_argument("tree links contain a cycle");
        seen[static_cast<std::size_t>(v)] = true;
        ++reached;
        for (NodeId c : {node(v).left, node(v).right})
            if (c != kNoNode)
                stack.push_back(c);
    }
    if (reached != nodes_.size())
        throw std::invalid_argument("tree links are not connected");
}

ColoredTree ColoredTree::single(Color color, Color box) { return ColoredTree({Node{color}}, 0, box); }

int ColoredTree::child_count(NodeId v) const
{
    const Node& n = node(v);
    return (n.left != kNoNode) + (n.right != kNoNode);
}

NodeId ColoredTree::only_child(NodeId v) const
{
    const Node& n = node(v);
    if ((n.left == kNoNode) == (n.right == kNoNode))
        throw std::invalid_argument("vertex does not have exactly one child");
    return n.left != kNoNode ? n.left : n.right;
}

NodeId ColoredTree::parent(NodeId v) const
{
    for (std::size_t i = 0; i < nodes_.size(); ++i)
        if (nodes_[i].left == v || nodes_[i].right == v)
            return static_cast<NodeId>(i);
    return kNoNode;
}

namespace {

void walk(const ColoredTree& t, NodeId v, Traversal kind, std::vector<NodeId>& out)
{
    if (v == kNoNode)
        return;
    const Node& n = t.node(v);
    walk(t, n.left, kind, out);
    if (kind == Traversal::inorder)
        out.push_back(v);
    walk(t, n.right, kind, out);
    if (kind == Traversal::postorder)
        out.push_back(v);
}

}  // namespace

std::vector<NodeId> inorder(const ColoredTree& t)
{
    std::vector<NodeId> out;
    walk(t, t.root(), Traversal::inorder, out);
    return out;
}

std::vector<NodeId> postorder(const ColoredTree& t)
{
    std::vector<NodeId> out;
    walk(t, t.root(), Traversal::postorder, out);
    return out;
}

std::vector<NodeId> preorder(const ColoredTree& t)
{
    std::vector<NodeId> out;
    std::function<void(NodeId)> rec = [&](NodeId v) {
        if (v == kNoNode)
            return;
        out.push_back(v);
        rec(t.node(v).left);
        rec(t.node(v).right);
    };
    rec(t.root());
    return out;
}

int right_edges(const ColoredTree& t)
{
    return static_cast<int>(std::count_if(t.nodes().begin(), t.nodes().end(), [](const Node& n) { return n.right != kNoNode; }));
}

int two_child_vertices(const ColoredTree& t)
{
    return static_cast<int>(std::count_if(t.nodes().begin(), t.nodes().end(),
                                          [](const Node& n) { return n.left != kNoNode && n.right != kNoNode; }));
}

bool is_branch(const ColoredTree& t) { return !t.empty() && two_child_vertices(t) == 0; }

bool is_full(const ColoredTree& t)
{
    return !t.empty() &&
           std::none_of(t.nodes().begin(), t.nodes().end(), [](const Node& n) { return (n.left == kNoNode) != (n.right == kNoNode); });
}

bool is_reverse_motzkin(const ColoredTree& t)
{
    return std::none_of(t.nodes().begin(), t.nodes().end(), [](const Node& n) { return n.left != kNoNode && n.right == kNoNode; });
}

// ---------------------------------------------------------------------------
// Encoding

namespace {

void encode_node(const ColoredTree& t, NodeId v, std::string& out)
{
    if (v == kNoNode) {
        out += '.';
        return;
    }
    const Node& n = t.node(v);
    out += '(';
    out += std::to_string(n.color.index);
    out += ' ';
    encode_node(t, n.left, out);
    out += ' ';
    encode_node(t, n.right, out);
    out += ')';
}

class TreeParser {
public:
    explicit TreeParser(std::string_view s) : s_(s) {}

    ColoredTree parse()
    {
        Color box{read_number()};
        expect(':');
        NodeId root = subtree();
        if (pos_ != s_.size())
            fail("trailing characters");
        return ColoredTree(std::move(nodes_), root, box);
    }

    std::size_t position() const { return pos_; }

private:
    NodeId subtree()
    {
        if (peek() == '.') {
            ++pos_;
            return kNoNode;
        }
        expect('(');
        NodeId id = static_cast<NodeId>(nodes_.size());
        nodes_.push_back(Node{Color{read_number()}});
        expect(' ');
        NodeId l = subtree();
        expect(' ');
        NodeId r = subtree();
        expect(')');
        nodes_[static_cast<std::size_t>(id)].left = l;
        nodes_[static_cast<std::size_t>(id)].right = r;
        return id;
    }

    std::uint32_t read_number()
    {
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
        if (start == pos_)
            fail("expected a color index");
        return static_cast<std::uint32_t>(std::stoul(std::string(s_.substr(start, pos_ - start))));
    }

    char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }

    void expect(char c)
    {
        if (peek() != c)
            fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    [[noreturn]] void fail(const std::string& why) const
    {
        throw std::invalid_argument("malformed tree encoding at column " + std::to_string(pos_ + 1) + " (" + why + "): '" +
                                    std::string(s_) + "'");
    }

    std::string_view s_;
    std::size_t pos_ = 0;
    std::vector<Node> nodes_;
};

}  // namespace

std::string canonical_encode(const ColoredTree& t)
{
    std::string out = std::to_string(t.box_color().index);
    out += ':';
    encode_node(t, t.root(), out);
    return out;
}

ColoredTree parse_tree(std::string_view text) { return TreeParser(text).parse(); }

// ---------------------------------------------------------------------------
// Labeled trees

LabeledTree::LabeledTree(ColoredTree tree, std::vector<int> labels) : tree_(std::move(tree)), labels_(std::move(labels))
{
    const int n = tree_.size();
    if (static_cast<int>(labels_.size()) != n)
        throw std::invalid_argument("labeling size does not match tree size");
    by_label_.assign(static_cast<std::size_t>(n) + 1, kNoNode);
    for (NodeId v = 0; v < n; ++v) {
        int k = labels_[static_cast<std::size_t>(v)];
        if (k < 1 || k > n || by_label_[static_cast<std::size_t>(k)] != kNoNode)
            throw std::invalid_argument("labeling is not standard");
        by_label_[static_cast<std::size_t>(k)] = v;
    }
    for (NodeId v = 0; v < n; ++v)
        for (NodeId c : {tree_.node(v).left, tree_.node(v).right})
            if (c != kNoNode && label(c) >= label(v))
                throw std::invalid_argument("labeling is not decreasing");
}

NodeId LabeledTree::node_with_label(int k) const
{
    if (k < 1 || k > size())
        throw std::out_of_range("label outside [n]");
    return by_label_[static_cast<std::size_t>(k)];
}

std::string to_string(const LabeledTree& t)
{
    std::string out = canonical_encode(t.tree()) + " [";
    auto pre = preorder(t.tree());
    for (std::size_t i = 0; i < pre.size(); ++i) {
        if (i)
            out += ',';
        out += std::to_string(t.label(pre[i]));
    }
    return out + "]";
}

LabeledTree parse_labeled_tree(std::string_view text)
{
    auto open = text.rfind(" [");
    if (open == std::string_view::npos || text.back() != ']')
        throw std::invalid_argument("malformed labeled tree: '" + std::string(text) + "'");
    ColoredTree t = parse_tree(text.substr(0, open));
    std::string_view inner = text.substr(open + 2, text.size() - open - 3);
    std::vector<int> pre_labels;
    if (!inner.empty()) {
        ColorWord w = parse_word(inner);
        for (Color c : w)
            pre_labels.push_back(static_cast<int>(c.index));
    }
    auto pre = preorder(t);
    if (pre.size() != pre_labels.size())
        throw std::invalid_argument("labeled tree: label count does not match size: '" + std::string(text) + "'");
    std::vector<int> labels(pre.size());
    for (std::size_t i = 0; i < pre.size(); ++i)
        labels[static_cast<std::size_t>(pre[i])] = pre_labels[i];
    return LabeledTree(std::move(t), std::move(labels));
}

bool operator==(const LabeledTree& a, const LabeledTree& b) { return to_string(a) == to_string(b); }

std::vector<int> traversal_labeling(const ColoredTree& t, Traversal kind)
{
    if (t.empty())
        throw std::invalid_argument("traversal labeling of the empty tree");
    std::vector<NodeId> order = kind == Traversal::inorder ? inorder(t) : postorder(t);
    std::vector<int> labels(order.size());
    for (std::size_t i = 0; i < order.size(); ++i)
        labels[static_cast<std::size_t>(order[i])] = static_cast<int>(i) + 1;
    return labels;
}

LabeledTree postorder_labeled(const ColoredTree& t)
{
    if (t.empty())
        return LabeledTree(t, {});
    return LabeledTree(t, traversal_labeling(t, Traversal::postorder));
}

Permutation alpha(const LabeledTree& t)
{
    std::vector<int> v;
    for (NodeId x : inorder(t.tree()))
        v.push_back(t.label(x));
    return Permutation(std::move(v));
}

Permutation beta(const LabeledTree& t)
{
    std::vector<int> v;
    for (NodeId x : postorder(t.tree()))
        v.push_back(t.label(x));
    return Permutation(std::move(v));
}

LabeledTree alpha_inverse(const Permutation& sigma)
{
    const int n = sigma.size();
    if (n == 0)
        throw std::invalid_argument("alpha_inverse of the empty permutation");
    // Node id = inorder position. The root of a segment is the position of its maximum.
    std::vector<Node> nodes(static_cast<std::size_t>(n));
    std::vector<int> labels(static_cast<std::size_t>(n));
    std::function<NodeId(int, int)> build = [&](int lo, int hi) -> NodeId {
        if (lo >= hi)
            return kNoNode;
        int best = lo;
        for (int i = lo + 1; i < hi; ++i)
            if (sigma(i + 1) > sigma(best + 1))
                best = i;
        labels[static_cast<std::size_t>(best)] = sigma(best + 1);
        nodes[static_cast<std::size_t>(best)].left = build(lo, best);
        nodes[static_cast<std::size_t>(best)].right = build(best + 1, hi);
        return best;
    };
    NodeId root = build(0, n);
    return LabeledTree(ColoredTree(std::move(nodes), root, Color{}), std::move(labels));
}

Permutation stack_sort(const Permutation& sigma) { return beta(alpha_inverse(sigma)); }

// ---------------------------------------------------------------------------
// Insertion, swing, factors

ColoredTree insert(const ColoredTree& t1, NodeId v, const ColoredTree& t2)
{
    if (t1.empty() || t2.empty())
        throw std::invalid_argument("insert: operands must be nonempty");
    if (!t1.contains(v))
        throw std::invalid_argument("insert: vertex is not in the host tree");
    const NodeId offset = t1.size();
    std::vector<Node> nodes = t1.nodes();
    for (const Node& n : t2.nodes())
        nodes.push_back(Node{n.color, n.left == kNoNode ? kNoNode : n.left + offset, n.right == kNoNode ? kNoNode : n.right + offset});
    const NodeId star = static_cast<NodeId>(nodes.size());
    nodes.push_back(Node{t2.box_color(), v, t2.root() + offset});
    NodeId root = t1.root();
    if (root == v)
        root = star;
    else {
        NodeId p = t1.parent(v);
        Node& pn = nodes[static_cast<std::size_t>(p)];
        (pn.left == v ? pn.left : pn.right) = star;
    }
    return ColoredTree(std::move(nodes), root, t1.box_color());
}

ColoredTree swing(const ColoredTree& t, NodeId v)
{
    if (!t.contains(v) || t.child_count(v) != 1)
        throw std::invalid_argument("swing: vertex must have exactly one child");
    std::vector<Node> nodes = t.nodes();
    Node& n = nodes[static_cast<std::size_t>(v)];
    std::swap(n.left, n.right);
    return ColoredTree(std::move(nodes), t.root(), t.box_color());
}

ColoredTree make_branch(const std::vector<Color>& colors_top_down, const std::vector<Side>& steps, Color box)
{
    if (colors_top_down.empty())
        throw std::invalid_argument("a branch is nonempty");
    if (steps.size() + 1 != colors_top_down.size())
        throw std::invalid_argument("branch needs one step per edge");
    std::vector<Node> nodes(colors_top_down.size());
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        nodes[i].color = colors_top_down[i];
        if (i + 1 < nodes.size())
            (steps[i] == Side::left ? nodes[i].left : nodes[i].right) = static_cast<NodeId>(i + 1);
    }
    return ColoredTree(std::move(nodes), 0, box);
}

std::pair<std::vector<NodeId>, std::vector<Side>> branch_path(const ColoredTree& branch)
{
    if (!is_branch(branch))
        throw std::invalid_argument("branch_path: not a branch");
    std::vector<NodeId> path;
    std::vector<Side> steps;
    NodeId v = branch.root();
    while (true) {
        path.push_back(v);
        const Node& n = branch.node(v);
        if (n.left != kNoNode) {
            steps.push_back(Side::left);
            v = n.left;
        } else if (n.right != kNoNode) {
            steps.push_back(Side::right);
            v = n.right;
        } else
            break;
    }
    return {path, steps};
}

namespace {

// Walk down from `start`, collecting the block members. Two-child vertices on the way belong to
// their own blocks; the walk passes through them to their left child.
FactorBlock collect_block(const ColoredTree& t, NodeId anchor, NodeId start, Color box)
{
    FactorBlock b;
    b.anchor = anchor;
    NodeId v = start;
    Side pending = Side::left;
    while (v != kNoNode) {
        const Node& n = t.node(v);
        int kids = t.child_count(v);
        if (kids == 2) {
            v = n.left;
            continue;
        }
        if (!b.members.empty())
            b.steps.push_back(pending);
        b.members.push_back(v);
        if (kids == 0)
            break;
        pending = n.left != kNoNode ? Side::left : Side::right;
        v = n.left != kNoNode ? n.left : n.right;
    }
    std::vector<Color> colors;
    for (NodeId m : b.members)
        colors.push_back(t.node(m).color);
    b.branch = make_branch(colors, b.steps, box);
    return b;
}

}  // namespace

std::vector<FactorBlock> insertion_factor_blocks(const ColoredTree& t)
{
    if (t.empty())
        throw std::invalid_argument("insertion factors of the empty tree");
    std::vector<FactorBlock> out;
    out.push_back(collect_block(t, kNoNode, t.root(), t.box_color()));
    for (NodeId v : postorder(t))
        if (t.child_count(v) == 2)
            out.push_back(collect_block(t, v, t.node(v).right, t.node(v).color));
    return out;
}

std::vector<ColoredTree> insertion_factors(const ColoredTree& t)
{
    std::vector<ColoredTree> out;
    for (auto& b : insertion_factor_blocks(t))
        out.push_back(std::move(b.branch));
    return out;
}

std::vector<std::string> factor_multiset(const ColoredTree& t)
{
    std::vector<std::string> out;
    for (const auto& f : insertion_factors(t))
        out.push_back(canonical_encode(f));
    std::sort(out.begin(), out.end());
    return out;
}

std::string to_string(const LabeledBranch& b)
{
    std::string out;
    for (std::size_t i = 0; i < b.labels.size(); ++i) {
        if (i)
            out += b.steps[i - 1] == Side::left ? " L " : " R ";
        out += std::to_string(b.labels[i]);
    }
    return out;
}

std::vector<LabeledBranch> labeled_insertion_factors(const LabeledTree& t)
{
    std::vector<LabeledBranch> out;
    for (const auto& blk : insertion_factor_blocks(t.tree())) {
        LabeledBranch b;
        for (NodeId m : blk.members)
            b.labels.push_back(t.label(m));
        b.steps = blk.steps;
        out.push_back(std::move(b));
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace cumtree
