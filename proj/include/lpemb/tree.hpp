#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace lpemb {

/// A node is a finite sequence of nonnegative integers; the empty sequence
/// is the root.
using TreeNode = std::vector<std::uint32_t>;

inline bool is_prefix(const TreeNode& a, const TreeNode& b) {
    if (a.size() > b.size()) return false;
    return std::equal(a.begin(), a.end(), b.begin());
}

inline bool incomparable(const TreeNode& a, const TreeNode& b) {
    return !is_prefix(a, b) && !is_prefix(b, a);
}

inline std::string node_label(const TreeNode& node) {
    std::string out = "(";
    for (std::size_t i = 0; i < node.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(node[i]);
    }
    out += ")";
    return out;
}

/// Finite prefix-closed set of nodes containing the root.
class FiniteTree {
public:
    FiniteTree() { nodes_.insert(TreeNode{}); }

    /// Validates prefix closure; throws if a node's parent is absent.
    static FiniteTree from_nodes(const std::vector<TreeNode>& nodes) {
        FiniteTree tree;
        tree.nodes_.insert(nodes.begin(), nodes.end());
        tree.nodes_.insert(TreeNode{});
        for (const TreeNode& node : tree.nodes_) {
            if (node.empty()) continue;
            TreeNode parent(node.begin(), node.end() - 1);
            if (!tree.nodes_.count(parent))
                throw std::invalid_argument("FiniteTree: not prefix-closed at " + node_label(node));
        }
        return tree;
    }

    /// Smallest tree containing the given nodes.
    static FiniteTree prefix_closure(const std::vector<TreeNode>& nodes) {
        FiniteTree tree;
        for (TreeNode node : nodes) {
            while (!node.empty()) {
                tree.nodes_.insert(node);
                node.pop_back();
            }
        }
        return tree;
    }

    static FiniteTree full_binary(int depth) {
        if (depth < 0) throw std::invalid_argument("full_binary: negative depth");
        FiniteTree tree;
        std::vector<TreeNode> frontier{TreeNode{}};
        for (int d = 0; d < depth; ++d) {
            std::vector<TreeNode> next;
            for (const TreeNode& node : frontier) {
                for (std::uint32_t bit : {0u, 1u}) {
                    TreeNode child = node;
                    child.push_back(bit);
                    tree.nodes_.insert(child);
                    next.push_back(std::move(child));
                }
            }
            frontier = std::move(next);
        }
        return tree;
    }

    bool contains(const TreeNode& node) const { return nodes_.count(node) > 0; }
    std::size_t size() const { return nodes_.size(); }

    std::vector<TreeNode> nodes() const { return {nodes_.begin(), nodes_.end()}; }

    std::vector<TreeNode> children(const TreeNode& node) const {
        std::vector<TreeNode> out;
        TreeNode lo = node;
        lo.push_back(0);
        for (auto it = nodes_.lower_bound(lo); it != nodes_.end() && is_prefix(node, *it); ++it)
            if (it->size() == node.size() + 1) out.push_back(*it);
        return out;
    }

    bool is_terminal(const TreeNode& node) const { return children(node).empty(); }

    std::vector<TreeNode> terminals() const {
        std::vector<TreeNode> out;
        for (const TreeNode& node : nodes_)
            if (is_terminal(node)) out.push_back(node);
        return out;
    }

    std::vector<TreeNode> descendants_terminal(const TreeNode& node) const {
        std::vector<TreeNode> out;
        for (auto it = nodes_.lower_bound(node); it != nodes_.end() && is_prefix(node, *it); ++it)
            if (is_terminal(*it)) out.push_back(*it);
        return out;
    }

    int height() const {
        std::size_t h = 0;
        for (const TreeNode& node : nodes_) h = std::max(h, node.size());
        return static_cast<int>(h);
    }

    friend bool operator==(const FiniteTree& a, const FiniteTree& b) { return a.nodes_ == b.nodes_; }

private:
    std::set<TreeNode> nodes_;
};

/// Lemma-of-sums collapse: for each terminal node nu of F returns
/// gamma_nu = sum of beta over the prefixes of nu, so that for any summative
/// phi, sum_F beta phi = sum_terminals gamma phi.
template <class Scalar>
std::map<TreeNode, Scalar> collapse_to_leaves(const FiniteTree& tree,
                                              const std::map<TreeNode, Scalar>& beta) {
    for (const TreeNode& node : tree.nodes())
        if (!beta.count(node))
            throw std::invalid_argument("collapse_to_leaves: beta missing at " + node_label(node));
    std::map<TreeNode, Scalar> gamma;
    for (const TreeNode& leaf : tree.terminals()) {
        Scalar total{};
        TreeNode prefix;
        total += beta.at(prefix);
        for (std::uint32_t step : leaf) {
            prefix.push_back(step);
            total += beta.at(prefix);
        }
        gamma[leaf] = total;
    }
    return gamma;
}

}  // namespace lpemb
