#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rainbow/rational.hpp"

namespace rainbow {

/// A self-similar description of a finite-rank subset of the rationals: a
/// node is a point together with, per child pattern, infinitely many
/// disjoint copies of that pattern converging to it; a forest places its
/// trees in disjoint closed intervals.
struct SetNode {
  std::vector<SetNode> children;
};

struct SetDescription {
  std::vector<SetNode> trees;

  bool empty() const { return trees.empty(); }
};

/// One Cantor-Bendixson derivative: leaves (isolated points) are deleted;
/// an internal node survives — copies of any child pattern still accumulate
/// at it — with the nonempty derivatives of its child patterns.
SetDescription derivative(const SetDescription& d);

/// Structural rank: empty 0, leaf 1, node 1 + max over child patterns,
/// forest max over trees. Coincides with the least k whose k-th derivative
/// is empty.
std::size_t cb_rank(const SetDescription& d);

/// The same rank computed by iterating derivative(); test oracle.
std::size_t cb_rank_by_derivative(const SetDescription& d);

/// Forest concatenation with fresh disjoint interval assignments; rank is
/// the maximum of the ranks.
SetDescription disjoint_union(const SetDescription& a, const SetDescription& b);

/// No node has children, i.e. cb_rank < 2.
bool is_discrete(const SetDescription& d);

/// Nested bracket term: "[]" a leaf, "[[][]]" a node with two leaf child
/// patterns; a forest is a concatenation of terms.
std::string to_brackets(const SetDescription& d);
SetDescription from_brackets(const std::string& s);

/// Finite truncation: each "infinitely many copies" becomes width copies at
/// dyadic offsets converging to the parent point; tree i occupies [i, i+1].
/// depth_res caps the denominator at 2^depth_res.
std::vector<Rational> materialize(const SetDescription& d, std::size_t width,
                                  unsigned depth_res);

enum class LevelLabel { A, B };

/// Uniform-height rooted tree with one label per level; internal nodes have
/// at least one successor.
struct LabeledTreeNode {
  std::vector<LabeledTreeNode> children;
};

struct LabeledTree {
  LabeledTreeNode root;
  std::vector<LevelLabel> levels;  // size = height + 1
};

/// Validates uniform leaf depth and the level/label alignment; returns the
/// height.
std::size_t tree_height(const LabeledTree& t);

struct LevelExtractResult {
  LevelLabel label;
  LabeledTree tree;
};

/// Level pigeonhole on a tree of height k+l: some k+1 levels share label A
/// or some l+1 share label B; returns the corresponding uniform-label
/// subtree of height k (resp. l), rebuilt by connecting each node to its
/// nearest selected-level ancestor.
LevelExtractResult level_extract(const LabeledTree& t, std::size_t k, std::size_t l);

}  // namespace rainbow
