#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "lpemb/formal.hpp"
#include "lpemb/tree.hpp"

namespace lpemb {

/// Node-to-vector assignment over a finite tree, carrying the exponent p of
/// its formal identities.  V must support +, -, scalar*, and vector_norm(v, p).
template <class V>
struct Disintegration {
    FiniteTree tree;
    std::map<TreeNode, V> assign;
    double p = 1.0;

    const V& at(const TreeNode& node) const {
        auto it = assign.find(node);
        if (it == assign.end())
            throw std::invalid_argument("Disintegration: unassigned node " + node_label(node));
        return it->second;
    }
};

struct CheckReport {
    bool passed = true;
    double worst_residual = 0.0;
    std::vector<std::pair<std::string, double>> failures;

    void record(const std::string& what, double residual, double tol) {
        worst_residual = std::max(worst_residual, residual);
        if (residual > tol) {
            passed = false;
            failures.emplace_back(what, residual);
        }
    }
};

/// phi(nu) = sum of phi over the children of nu, for every non-terminal nu.
template <class V>
CheckReport check_summative(const Disintegration<V>& d, double tol) {
    CheckReport report;
    for (const TreeNode& node : d.tree.nodes()) {
        const auto kids = d.tree.children(node);
        if (kids.empty()) continue;
        V sum = d.at(kids[0]);
        for (std::size_t k = 1; k < kids.size(); ++k) sum = sum + d.at(kids[k]);
        const double residual = vector_norm(d.at(node) - sum, d.p);
        report.record("summative at " + node_label(node), residual, tol);
    }
    return report;
}

template <class V>
CheckReport check_never_zero(const Disintegration<V>& d) {
    CheckReport report;
    for (const TreeNode& node : d.tree.nodes()) {
        const double n = vector_norm(d.at(node), d.p);
        if (n <= 0.0) report.record("zero vector at " + node_label(node), 1.0, 0.0);
    }
    return report;
}

namespace detail {

// A maximal antichain drawn by randomly pruning the tree from the root.
inline std::vector<TreeNode> random_cut(const FiniteTree& tree, RngStream& rng) {
    std::vector<TreeNode> cut;
    std::vector<TreeNode> stack{TreeNode{}};
    while (!stack.empty()) {
        TreeNode node = stack.back();
        stack.pop_back();
        const auto kids = tree.children(node);
        if (kids.empty() || rng.next_unit_open() < 0.3)
            cut.push_back(node);
        else
            for (const auto& kid : kids) stack.push_back(kid);
    }
    return cut;
}

}  // namespace detail

/// Formal L^p separation on incomparable nodes: every incomparable pair is
/// checked when the tree has at most 64 nodes, and `trials` random maximal
/// antichains are checked in addition.
template <class V>
CheckReport check_formally_separating(const Disintegration<V>& d, int trials, double tol,
                                      std::uint64_t seed = 0x5eedULL) {
    CheckReport report;
    const std::function<double(const V&)> norm = [&](const V& v) { return vector_norm(v, d.p); };
    const auto nodes = d.tree.nodes();

    if (nodes.size() <= 64) {
        for (std::size_t i = 0; i < nodes.size(); ++i) {
            for (std::size_t j = i + 1; j < nodes.size(); ++j) {
                if (!incomparable(nodes[i], nodes[j])) continue;
                const std::vector<V> pair{d.at(nodes[i]), d.at(nodes[j])};
                const auto r = check_formal_disjointness<V>(pair, d.p, norm, 8, tol, seed);
                report.record("pair " + node_label(nodes[i]) + "," + node_label(nodes[j]),
                              r.worst_residual, tol);
            }
        }
    }

    RngStream rng(seed, 1);
    for (int t = 0; t < trials; ++t) {
        const auto cut = detail::random_cut(d.tree, rng);
        if (cut.size() < 2) continue;
        std::vector<V> vectors;
        vectors.reserve(cut.size());
        for (const auto& node : cut) vectors.push_back(d.at(node));
        const auto r = check_formal_disjointness<V>(vectors, d.p, norm, 8, tol,
                                                    seed + static_cast<std::uint64_t>(t) + 2);
        report.record("antichain trial " + std::to_string(t), r.worst_residual, tol);
    }
    return report;
}

/// Bijection between the node sets of two disintegrations.
struct TreeIso {
    std::map<TreeNode, TreeNode> map;

    const TreeNode& operator()(const TreeNode& node) const {
        auto it = map.find(node);
        if (it == map.end())
            throw std::invalid_argument("TreeIso: unmapped node " + node_label(node));
        return it->second;
    }

    static TreeIso identity(const FiniteTree& tree) {
        TreeIso iso;
        for (const TreeNode& node : tree.nodes()) iso.map[node] = node;
        return iso;
    }
};

/// Order isomorphism + per-node norm agreement.
template <class V0, class V1>
CheckReport tree_isomorphism_check(const Disintegration<V0>& d0, const Disintegration<V1>& d1,
                                   const TreeIso& iso, double tol) {
    CheckReport report;
    const auto nodes0 = d0.tree.nodes();
    const auto nodes1 = d1.tree.nodes();

    if (iso.map.size() != nodes0.size()) report.record("iso domain != tree0", 1.0, 0.0);
    std::map<TreeNode, int> image_count;
    for (const auto& [from, to] : iso.map) {
        if (!d0.tree.contains(from)) report.record("iso domain off tree0 at " + node_label(from), 1.0, 0.0);
        if (!d1.tree.contains(to)) report.record("iso image off tree1 at " + node_label(to), 1.0, 0.0);
        image_count[to] += 1;
    }
    if (image_count.size() != nodes1.size()) report.record("iso not onto tree1", 1.0, 0.0);
    for (const auto& [to, count] : image_count)
        if (count != 1) report.record("iso not injective at " + node_label(to), 1.0, 0.0);
    if (!report.passed) return report;

    for (std::size_t i = 0; i < nodes0.size(); ++i) {
        for (std::size_t j = 0; j < nodes0.size(); ++j) {
            if (i == j) continue;
            const bool before = is_prefix(nodes0[i], nodes0[j]);
            const bool after = is_prefix(iso(nodes0[i]), iso(nodes0[j]));
            if (before != after)
                report.record("order not preserved between " + node_label(nodes0[i]) + " and " +
                                  node_label(nodes0[j]),
                              1.0, 0.0);
        }
    }

    for (const TreeNode& node : nodes0) {
        const double n0 = vector_norm(d0.at(node), d0.p);
        const double n1 = vector_norm(d1.at(iso(node)), d1.p);
        report.record("norm mismatch at " + node_label(node), std::abs(n0 - n1), tol);
    }
    return report;
}

/// The isometric isomorphism induced by a disintegration isomorphism,
/// represented by its action on node vectors.  Inputs are span elements
/// written as node-coefficient maps; apply() uses the defining formula
/// T(sum alpha phi0) = sum alpha phi1(f(.)), while apply_via_leaves() first
/// collapses the coefficients to the terminal nodes (the canonical
/// representation), giving an independent evaluation route.
template <class V0, class V1>
class LiftedIsomorphism {
public:
    using Coefficients = std::map<TreeNode, double>;

    LiftedIsomorphism(Disintegration<V0> d0, Disintegration<V1> d1, TreeIso iso)
        : d0_(std::move(d0)), d1_(std::move(d1)), iso_(std::move(iso)) {}

    V0 source_eval(const Coefficients& alpha) const { return combine(d0_, alpha, nullptr); }

    V1 apply(const Coefficients& alpha) const { return combine(d1_, alpha, &iso_); }

    V1 apply_via_leaves(const Coefficients& alpha) const {
        std::vector<TreeNode> support;
        for (const auto& [node, coeff] : alpha) support.push_back(node);
        const FiniteTree closure = FiniteTree::prefix_closure(support);
        std::map<TreeNode, double> beta;
        for (const TreeNode& node : closure.nodes()) {
            auto it = alpha.find(node);
            beta[node] = (it == alpha.end()) ? 0.0 : it->second;
        }
        const auto gamma = collapse_to_leaves(closure, beta);
        Coefficients leaf_coeffs;
        for (const auto& [leaf, g] : gamma) leaf_coeffs[leaf] = g;
        return combine(d1_, leaf_coeffs, &iso_);
    }

    const Disintegration<V0>& source() const { return d0_; }
    const Disintegration<V1>& target() const { return d1_; }

private:
    template <class V>
    static V combine(const Disintegration<V>& d, const Coefficients& alpha, const TreeIso* iso) {
        V acc{};
        bool started = false;
        for (const auto& [node, coeff] : alpha) {
            const V term = coeff * d.at(iso ? (*iso)(node) : node);
            acc = started ? acc + term : term;
            started = true;
        }
        if (!started) throw std::invalid_argument("LiftedIsomorphism: empty combination");
        return acc;
    }

    Disintegration<V0> d0_;
    Disintegration<V1> d1_;
    TreeIso iso_;
};

/// Constructs the lift after verifying the theorem's hypotheses: both
/// disintegrations summative, formally separating, never zero, and the map a
/// norm-matching order isomorphism.  Throws std::invalid_argument when a
/// hypothesis fails.
template <class V0, class V1>
LiftedIsomorphism<V0, V1> lift_isomorphism(const Disintegration<V0>& d0,
                                           const Disintegration<V1>& d1, const TreeIso& iso,
                                           double tol) {
    const auto explain = [](const CheckReport& r) {
        return r.failures.empty() ? std::string("unknown") : r.failures.front().first;
    };
    if (const auto r = check_summative(d0, tol); !r.passed)
        throw std::invalid_argument("lift_isomorphism: source not summative (" + explain(r) + ")");
    if (const auto r = check_summative(d1, tol); !r.passed)
        throw std::invalid_argument("lift_isomorphism: target not summative (" + explain(r) + ")");
    if (const auto r = check_never_zero(d0); !r.passed)
        throw std::invalid_argument("lift_isomorphism: source has a zero node");
    if (const auto r = check_never_zero(d1); !r.passed)
        throw std::invalid_argument("lift_isomorphism: target has a zero node");
    if (const auto r = check_formally_separating(d0, 8, std::max(tol, 1e-9)); !r.passed)
        throw std::invalid_argument("lift_isomorphism: source not formally separating (" +
                                    explain(r) + ")");
    if (const auto r = check_formally_separating(d1, 8, std::max(tol, 1e-9)); !r.passed)
        throw std::invalid_argument("lift_isomorphism: target not formally separating (" +
                                    explain(r) + ")");
    if (const auto r = tree_isomorphism_check(d0, d1, iso, std::max(tol, 1e-9)); !r.passed)
        throw std::invalid_argument("lift_isomorphism: map is not a disintegration isomorphism (" +
                                    explain(r) + ")");
    return LiftedIsomorphism<V0, V1>(d0, d1, iso);
}

// ---------------------------------------------------------------------------
// Abstract span vectors: formal linear combinations of disjoint leaf atoms
// with prescribed norms.  The norm is the exact q-power formula, which makes
// these the reference model for disintegrations given only by node norms.

struct FormalSpan {
    std::vector<TreeNode> leaves;
    std::vector<double> leaf_norms;
    double exponent = 1.0;
};

class FormalLeafVector {
public:
    using scalar_type = double;

    FormalLeafVector() = default;
    FormalLeafVector(std::shared_ptr<const FormalSpan> span, std::vector<double> coeffs)
        : span_(std::move(span)), coeffs_(std::move(coeffs)) {}

    const std::vector<double>& coefficients() const { return coeffs_; }
    const FormalSpan& span() const { return *span_; }
    bool empty() const { return !span_; }

    friend FormalLeafVector operator+(const FormalLeafVector& a, const FormalLeafVector& b) {
        if (a.empty()) return b;
        if (b.empty()) return a;
        std::vector<double> out(a.coeffs_);
        for (std::size_t i = 0; i < out.size(); ++i) out[i] += b.coeffs_[i];
        return FormalLeafVector(a.span_, std::move(out));
    }
    friend FormalLeafVector operator-(const FormalLeafVector& a, const FormalLeafVector& b) {
        return a + (-1.0) * b;
    }
    friend FormalLeafVector operator*(double s, const FormalLeafVector& v) {
        std::vector<double> out(v.coeffs_);
        for (double& c : out) c *= s;
        return FormalLeafVector(v.span_, std::move(out));
    }

private:
    std::shared_ptr<const FormalSpan> span_;
    std::vector<double> coeffs_;
};

inline double vector_norm(const FormalLeafVector& v, double p) {
    if (v.empty()) return 0.0;
    double total = 0.0;
    for (std::size_t i = 0; i < v.coefficients().size(); ++i)
        total += std::pow(std::abs(v.coefficients()[i]) * v.span().leaf_norms[i], p);
    return std::pow(total, 1.0 / p);
}

/// Disintegration of the full binary tree given only by the prescribed node
/// norms 2^(-|sigma|/r): each node is the formal sum of its terminal
/// descendants, every leaf an atom of norm 2^(-depth/r).
inline Disintegration<FormalLeafVector> abstract_gamma_disintegration(double r, int depth) {
    Disintegration<FormalLeafVector> d;
    d.tree = FiniteTree::full_binary(depth);
    d.p = r;
    auto span = std::make_shared<FormalSpan>();
    span->leaves = d.tree.terminals();
    span->leaf_norms.assign(span->leaves.size(), std::pow(2.0, -depth / r));
    span->exponent = r;
    std::map<TreeNode, std::size_t> leaf_index;
    for (std::size_t i = 0; i < span->leaves.size(); ++i) leaf_index[span->leaves[i]] = i;
    for (const TreeNode& node : d.tree.nodes()) {
        std::vector<double> coeffs(span->leaves.size(), 0.0);
        for (const TreeNode& leaf : d.tree.descendants_terminal(node)) coeffs[leaf_index[leaf]] = 1.0;
        d.assign.emplace(node, FormalLeafVector(span, std::move(coeffs)));
    }
    return d;
}

}  // namespace lpemb
