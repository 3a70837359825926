#include "rainbow/cb.hpp"

#include <algorithm>
#include <set>

namespace rainbow {
namespace {

// empty result = pattern vanished (it was a leaf)
std::vector<SetNode> derive_node(const SetNode& node) {
  if (node.children.empty()) return {};
  SetNode out;
  for (const SetNode& child : node.children) {
    auto d = derive_node(child);
    if (!d.empty()) out.children.push_back(std::move(d.front()));
  }
  return {std::move(out)};
}

std::size_t rank_node(const SetNode& node) {
  std::size_t best = 0;
  for (const SetNode& child : node.children) best = std::max(best, rank_node(child));
  return best + 1;
}

}  // namespace

SetDescription derivative(const SetDescription& d) {
  SetDescription out;
  for (const SetNode& tree : d.trees) {
    auto dt = derive_node(tree);
    if (!dt.empty()) out.trees.push_back(std::move(dt.front()));
  }
  return out;
}

std::size_t cb_rank(const SetDescription& d) {
  std::size_t best = 0;
  for (const SetNode& tree : d.trees) best = std::max(best, rank_node(tree));
  return best;
}

std::size_t cb_rank_by_derivative(const SetDescription& d) {
  SetDescription cur = d;
  std::size_t k = 0;
  while (!cur.empty()) {
    cur = derivative(cur);
    ++k;
  }
  return k;
}

SetDescription disjoint_union(const SetDescription& a, const SetDescription& b) {
  SetDescription out = a;
  out.trees.insert(out.trees.end(), b.trees.begin(), b.trees.end());
  return out;
}

bool is_discrete(const SetDescription& d) {
  for (const SetNode& tree : d.trees)
    if (!tree.children.empty()) return false;
  return true;
}

namespace {

void print_node(const SetNode& n, std::string& out) {
  out += '[';
  for (const SetNode& c : n.children) print_node(c, out);
  out += ']';
}

SetNode parse_node(const std::string& s, std::size_t& at) {
  if (at >= s.size() || s[at] != '[') throw parse_error("bracket term: expected '['");
  ++at;
  SetNode node;
  while (at < s.size() && s[at] == '[') node.children.push_back(parse_node(s, at));
  if (at >= s.size() || s[at] != ']') throw parse_error("bracket term: expected ']'");
  ++at;
  return node;
}

}  // namespace

std::string to_brackets(const SetDescription& d) {
  std::string out;
  for (const SetNode& tree : d.trees) print_node(tree, out);
  return out;
}

SetDescription from_brackets(const std::string& s) {
  SetDescription d;
  std::size_t at = 0;
  while (at < s.size()) {
    if (s[at] == ' ') { ++at; continue; }
    d.trees.push_back(parse_node(s, at));
  }
  return d;
}

namespace {

void materialize_node(const SetNode& node, const Rational& lo, const Rational& hi,
                      std::size_t width, std::vector<Rational>& out) {
  out.push_back(lo);  // the node's own point, at the left end of its block
  if (node.children.empty()) return;
  const Rational w = hi - lo;
  std::size_t slot = 1;
  for (std::size_t ci = 0; ci < node.children.size(); ++ci) {
    for (std::size_t copy = 0; copy < width; ++copy, ++slot) {
      // copy block [lo + w/2^{slot+1}, lo + w/2^slot); recurse into its
      // left half so neighbouring blocks stay clear of each other
      Rational blo = lo + w / (BigInt(1) << (slot + 1));
      Rational bhi = lo + w / (BigInt(1) << slot);
      materialize_node(node.children[ci], blo, blo + (bhi - blo) / 2, width, out);
    }
  }
}

}  // namespace

std::vector<Rational> materialize(const SetDescription& d, std::size_t width,
                                  unsigned depth_res) {
  if (width < 1) throw precondition_error("materialize: width must be >= 1");
  std::vector<Rational> out;
  for (std::size_t i = 0; i < d.trees.size(); ++i)
    materialize_node(d.trees[i], Rational(i), Rational(i) + 1, width, out);

  const BigInt cap = BigInt(1) << depth_res;
  for (const Rational& q : out)
    if (denominator(q) > cap)
      throw precondition_error("materialize: precision exhausted (denominator beyond 2^" +
                               std::to_string(depth_res) + ")");
  std::set<Rational> distinct(out.begin(), out.end());
  if (distinct.size() != out.size())
    throw internal_error("materialize: points are not pairwise distinct");
  return out;
}

namespace {

std::size_t node_uniform_height(const LabeledTreeNode& n) {
  if (n.children.empty()) return 0;
  std::size_t h = node_uniform_height(n.children.front());
  for (const auto& c : n.children)
    if (node_uniform_height(c) != h)
      throw precondition_error("labeled tree: leaves must share one depth");
  return h + 1;
}

// nodes at depth `want` below `from` (depth counted from `from` itself)
void collect_at_depth(const LabeledTreeNode& from, std::size_t want,
                      std::vector<const LabeledTreeNode*>& out) {
  if (want == 0) { out.push_back(&from); return; }
  for (const auto& c : from.children) collect_at_depth(c, want - 1, out);
}

LabeledTreeNode rebuild(const LabeledTreeNode& at, const std::vector<std::size_t>& selected,
                        std::size_t idx) {
  LabeledTreeNode out;
  if (idx + 1 >= selected.size()) return out;
  std::vector<const LabeledTreeNode*> next;
  collect_at_depth(at, selected[idx + 1] - selected[idx], next);
  for (const LabeledTreeNode* child : next) out.children.push_back(rebuild(*child, selected, idx + 1));
  return out;
}

}  // namespace

std::size_t tree_height(const LabeledTree& t) {
  std::size_t h = node_uniform_height(t.root);
  if (t.levels.size() != h + 1)
    throw precondition_error("labeled tree: need one label per level");
  return h;
}

LevelExtractResult level_extract(const LabeledTree& t, std::size_t k, std::size_t l) {
  const std::size_t h = tree_height(t);
  if (h != k + l) throw precondition_error("level_extract: height must equal k + l");

  std::vector<std::size_t> as, bs;
  for (std::size_t lev = 0; lev <= h; ++lev)
    (t.levels[lev] == LevelLabel::A ? as : bs).push_back(lev);

  // k+l+1 levels: at least k+1 A-levels or l+1 B-levels.
  LevelLabel label;
  std::vector<std::size_t> selected;
  if (as.size() >= k + 1) {
    label = LevelLabel::A;
    selected.assign(as.begin(), as.begin() + (k + 1));
  } else {
    if (bs.size() < l + 1) throw internal_error("level_extract: pigeonhole failed");
    label = LevelLabel::B;
    selected.assign(bs.begin(), bs.begin() + (l + 1));
  }

  // Root: the leftmost node at the first selected level.
  std::vector<const LabeledTreeNode*> roots;
  collect_at_depth(t.root, selected.front(), roots);
  LabeledTree out;
  out.root = rebuild(*roots.front(), selected, 0);
  out.levels.assign(selected.size(), label);
  return {label, out};
}

}  // namespace rainbow
