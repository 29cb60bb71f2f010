#ifndef KAPPAQ_STRATA_HPP
#define KAPPAQ_STRATA_HPP

#include <optional>
#include <utility>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "kappaq/setcomb.hpp"

namespace kappaq {

// Stable n-marked tree: every vertex has valence >= 3, where valence counts
// incident edges plus attached legs (marks). Dimension of the corresponding
// stratum is sum over vertices of (valence - 3).
struct MarkedTree {
  std::vector<int> vertices;                 // vertex ids
  std::vector<std::pair<int, int>> edges;    // unordered pairs of vertex ids
  std::vector<int> leg_vertex;               // leg_vertex[mark-1] = vertex id

  int n_marks() const { return static_cast<int>(leg_vertex.size()); }
  int n_vertices() const { return static_cast<int>(vertices.size()); }
};

enum class TreeKind { Point, TypeI, TypeII };

// Zero, or the class of a boundary stratum encoded by a set partition with
// at least 4 parts.
struct StratumClass {
  std::optional<SetPartition> partition;  // nullopt encodes the zero class

  static StratumClass zero() { return StratumClass{std::nullopt}; }
  static StratumClass of(SetPartition p) { return StratumClass{std::move(p)}; }
  bool is_zero() const { return !partition.has_value(); }

  bool operator==(const StratumClass& o) const { return partition == o.partition; }
  bool operator!=(const StratumClass& o) const { return !(*this == o); }
};

// Throws std::invalid_argument if t is not a stable marked tree.
void validate_tree(const MarkedTree& t);

int valence(const MarkedTree& t, int v);
int dimension(const MarkedTree& t);

// Point: every vertex trivalent. TypeI: exactly one vertex of valence >= 4.
// TypeII: two or more such vertices.
TreeKind classify(const MarkedTree& t);

// Blocks = components of t minus v, by the marks they carry; marks attached
// to v itself become singletons. Number of blocks = valence(v).
SetPartition partition_at_vertex(const MarkedTree& t, int v);

// Requires dimension >= 1. TypeII trees map to the zero class; a TypeI tree
// maps to the partition at its unique big vertex.
StratumClass stratum_class(const MarkedTree& t);

// Removes the largest mark (which must equal `mark`) and stabilizes. Returns
// nullopt ("collapsed") when the dimension drops, i.e. when the removed leg
// sat on a vertex of valence >= 4; a leg on a trivalent vertex triggers
// exactly one contraction and preserves dimension.
std::optional<MarkedTree> forget_mark(const MarkedTree& t, int mark);

// All stable trees with marks [n], canonical vertex numbering, 3 <= n <= 8.
std::vector<MarkedTree> enumerate_stable_trees(int n);

// Edge splits: for each edge, the side of the induced mark bipartition not
// containing mark 1. Sorted; two trees are equal (as marked trees) iff their
// split lists agree.
std::vector<Subset> tree_splits(const MarkedTree& t);

bool same_tree(const MarkedTree& a, const MarkedTree& b);

// Deterministic vertex numbering: root at the vertex carrying mark 1,
// children ordered by the minimal mark in their subtree, preorder ids.
MarkedTree canonicalize(const MarkedTree& t);

// Relabels marks by g; the underlying tree shape is unchanged.
MarkedTree relabel(const Permutation& g, const MarkedTree& t);

nlohmann::json tree_to_json(const MarkedTree& t);

}  // namespace kappaq

#endif
