// Evaluation trees, leaf replacement and the evaluators fe / se / ce.
#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "seqlogic/term.hpp"

namespace seqlogic {

// Leaf labels. Hole is the single hole, Hole1/Hole2 the numbered ones.
enum class Leaf : unsigned char { T = 0, F = 1, Hole = 2, Hole1 = 3, Hole2 = 4 };

constexpr unsigned leaf_bit(Leaf l) { return 1u << static_cast<unsigned>(l); }

// Immutable binary tree over atoms. Leaves carry T, F or a hole label, so
// the same type serves as evaluation tree and as decomposition context.
// Subtrees are shared; copying a Tree is cheap.
class Tree {
public:
    Tree();  // leaf T

    static Tree leaf(Leaf l);
    static Tree node(std::string atom, Tree left, Tree right);

    bool is_leaf() const { return n_->is_leaf; }
    Leaf label() const { return n_->label; }
    const std::string& atom() const { return n_->atom; }
    const Tree& left() const { return n_->kids->first; }
    const Tree& right() const { return n_->kids->second; }

    unsigned depth() const { return n_->depth; }
    std::uint64_t leaf_count() const { return n_->leaves; }
    bool is_perfect() const { return n_->perfect; }
    bool contains(Leaf l) const { return (n_->mask & leaf_bit(l)) != 0; }
    unsigned leaf_mask() const { return n_->mask; }
    // True iff every leaf carries label l.
    bool only(Leaf l) const { return n_->mask == leaf_bit(l); }
    bool has_holes() const { return (n_->mask & ~(leaf_bit(Leaf::T) | leaf_bit(Leaf::F))) != 0; }

    std::size_t hash() const { return n_->hash; }
    // Identity of the shared node, for memo tables.
    const void* id() const { return n_.get(); }

    friend bool operator==(const Tree& a, const Tree& b);
    friend bool operator!=(const Tree& a, const Tree& b) { return !(a == b); }

private:
    struct Node {
        bool is_leaf = true;
        Leaf label = Leaf::T;
        std::string atom;
        std::unique_ptr<const std::pair<Tree, Tree>> kids;
        unsigned depth = 0;
        std::uint64_t leaves = 1;
        unsigned mask = 0;
        bool perfect = true;
        std::size_t hash = 0;
    };
    explicit Tree(std::shared_ptr<const Node> n) : n_(std::move(n)) {}
    std::shared_ptr<const Node> n_;
};

using EvalTree = Tree;
using HoleTree = Tree;

// Map from leaf label to replacement; unlisted labels map to themselves.
class LeafMap {
public:
    LeafMap() = default;
    LeafMap(std::initializer_list<std::pair<Leaf, Tree>> entries);
    LeafMap& set(Leaf l, Tree t);
    const std::optional<Tree>& get(Leaf l) const { return img_[static_cast<unsigned>(l)]; }
    unsigned domain_mask() const { return mask_; }

private:
    std::array<std::optional<Tree>, 5> img_;
    unsigned mask_ = 0;
};

// Simultaneous leaf replacement x[l1 -> y1, l2 -> y2, ...].
Tree replace(const Tree& x, const LeafMap& m);

Tree leaf_t();
Tree leaf_f();
Tree hole();
// T <| a |> F
Tree atom_tree(const std::string& a);
// Swap T and F leaves.
Tree swap_leaves(const Tree& x);

EvalTree fe(const Term& t);  // FT-terms only
EvalTree se(const Term& t);  // ST-terms only
EvalTree ce(const Term& t);  // any term

struct Trace {
    std::vector<std::pair<std::string, bool>> path;
    bool yield = true;

    friend bool operator==(const Trace&, const Trace&) = default;
    friend auto operator<=>(const Trace& a, const Trace& b) {
        // T sorts before F at the same position, matching left-first order.
        std::size_t n = std::min(a.path.size(), b.path.size());
        for (std::size_t i = 0; i < n; ++i) {
            if (auto c = a.path[i].first <=> b.path[i].first; c != 0) return c;
            if (a.path[i].second != b.path[i].second)
                return a.path[i].second ? std::strong_ordering::less : std::strong_ordering::greater;
        }
        if (auto c = a.path.size() <=> b.path.size(); c != 0) return c;
        return a.yield == b.yield ? std::strong_ordering::equal
                                  : (a.yield ? std::strong_ordering::less : std::strong_ordering::greater);
    }
};

// One trace per leaf, in sorted order. Requires an EvalTree (no holes).
std::vector<Trace> traces(const EvalTree& x);
// Rebuild the tree from a trace set; throws std::invalid_argument if the set
// is inconsistent or not prefix-complete.
EvalTree from_traces(const std::vector<Trace>& ts);
std::string format_trace(const Trace& t);
// Follow a path from the root; nullopt when the path leaves the tree or
// disagrees with a node's atom.
std::optional<Tree> follow(const Tree& x, const std::vector<std::pair<std::string, bool>>& path);

EvalTree memorize(const EvalTree& x);

// Text format: T, F, [], [1], [2] for leaves, (L <| a |> R) for nodes.
std::string to_text(const Tree& x);
Tree parse_tree(std::string_view text);
std::string to_dot(const Tree& x);

}  // namespace seqlogic
