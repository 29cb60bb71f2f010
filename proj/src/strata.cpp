#include "kappaq/strata.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <map>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace kappaq {

namespace {

struct Adjacency {
  std::map<int, std::vector<int>> neighbors;  // vertex id -> adjacent ids
  std::map<int, std::vector<int>> legs;       // vertex id -> marks
};

Adjacency adjacency(const MarkedTree& t) {
  Adjacency a;
  for (int v : t.vertices) {
    a.neighbors[v];
    a.legs[v];
  }
  for (auto [x, y] : t.edges) {
    a.neighbors.at(x).push_back(y);
    a.neighbors.at(y).push_back(x);
  }
  for (int m = 1; m <= t.n_marks(); ++m) a.legs.at(t.leg_vertex[static_cast<std::size_t>(m - 1)]).push_back(m);
  return a;
}

}  // namespace

void validate_tree(const MarkedTree& t) {
  if (t.vertices.empty()) throw std::invalid_argument("tree has no vertices");
  std::vector<int> ids = t.vertices;
  std::sort(ids.begin(), ids.end());
  if (std::adjacent_find(ids.begin(), ids.end()) != ids.end())
    throw std::invalid_argument("duplicate vertex id");
  auto known = [&](int v) { return std::binary_search(ids.begin(), ids.end(), v); };

  if (t.edges.size() + 1 != t.vertices.size())
    throw std::invalid_argument("edge count must be vertex count minus one");
  std::vector<std::pair<int, int>> norm;
  for (auto [x, y] : t.edges) {
    if (!known(x) || !known(y)) throw std::invalid_argument("edge endpoint unknown");
    if (x == y) throw std::invalid_argument("self loop");
    norm.emplace_back(std::min(x, y), std::max(x, y));
  }
  std::sort(norm.begin(), norm.end());
  if (std::adjacent_find(norm.begin(), norm.end()) != norm.end())
    throw std::invalid_argument("duplicate edge");

  if (t.n_marks() < 3) throw std::invalid_argument("fewer than 3 marks");
  for (int v : t.leg_vertex)
    if (!known(v)) throw std::invalid_argument("leg attached to unknown vertex");

  // connectivity (|E| = |V|-1 then makes it a tree)
  Adjacency a = adjacency(t);
  std::vector<int> stack = {t.vertices.front()};
  std::map<int, bool> seen;
  seen[t.vertices.front()] = true;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : a.neighbors.at(v))
      if (!seen[w]) {
        seen[w] = true;
        stack.push_back(w);
      }
  }
  if (seen.size() != t.vertices.size()) throw std::invalid_argument("tree not connected");

  for (int v : t.vertices)
    if (valence(t, v) < 3) throw std::invalid_argument("vertex of valence < 3");
}

int valence(const MarkedTree& t, int v) {
  int val = 0;
  for (auto [x, y] : t.edges) val += (x == v) + (y == v);
  for (int w : t.leg_vertex) val += (w == v);
  return val;
}

int dimension(const MarkedTree& t) {
  int d = 0;
  for (int v : t.vertices) d += valence(t, v) - 3;
  return d;
}

TreeKind classify(const MarkedTree& t) {
  validate_tree(t);
  int big = 0;
  for (int v : t.vertices)
    if (valence(t, v) >= 4) ++big;
  if (big == 0) return TreeKind::Point;
  return big == 1 ? TreeKind::TypeI : TreeKind::TypeII;
}

SetPartition partition_at_vertex(const MarkedTree& t, int v) {
  validate_tree(t);
  const int n = t.n_marks();
  Adjacency a = adjacency(t);
  if (a.neighbors.find(v) == a.neighbors.end())
    throw std::invalid_argument("unknown vertex");

  std::vector<Subset> blocks;
  for (int m : a.legs.at(v)) blocks.push_back(Subset(n, std::vector<int>{m}));

  for (int start : a.neighbors.at(v)) {
    // marks in the component of t \ {v} containing `start`
    std::vector<int> stack = {start};
    std::map<int, bool> seen;
    seen[v] = true;
    seen[start] = true;
    std::uint32_t mask = 0;
    while (!stack.empty()) {
      int w = stack.back();
      stack.pop_back();
      for (int m : a.legs.at(w)) mask |= 1u << (m - 1);
      for (int u : a.neighbors.at(w))
        if (!seen[u]) {
          seen[u] = true;
          stack.push_back(u);
        }
    }
    blocks.emplace_back(n, mask);
  }
  return SetPartition(n, std::move(blocks));
}

StratumClass stratum_class(const MarkedTree& t) {
  const TreeKind kind = classify(t);
  if (dimension(t) < 1) throw std::invalid_argument("zero-dimensional tree");
  if (kind == TreeKind::TypeII) return StratumClass::zero();
  for (int v : t.vertices)
    if (valence(t, v) >= 4) return StratumClass::of(partition_at_vertex(t, v));
  throw std::logic_error("unreachable");
}

std::optional<MarkedTree> forget_mark(const MarkedTree& t, int mark) {
  validate_tree(t);
  const int m = t.n_marks();
  if (mark != m) throw std::invalid_argument("only the largest mark can be forgotten");
  if (m < 4) throw std::invalid_argument("result would have fewer than 3 marks");

  const int u = t.leg_vertex[static_cast<std::size_t>(m - 1)];
  if (valence(t, u) >= 4) return std::nullopt;  // dimension drops

  // u is trivalent; removing the leg leaves valence 2, so u gets contracted
  // into a neighbor. Exactly one contraction can occur.
  MarkedTree r;
  r.leg_vertex.assign(t.leg_vertex.begin(), t.leg_vertex.end() - 1);

  std::vector<int> adj;
  for (auto [x, y] : t.edges) {
    if (x == u) adj.push_back(y);
    if (y == u) adj.push_back(x);
  }
  assert(!adj.empty());  // a trivalent vertex with 3 legs needs marks >= 4 on one vertex

  if (adj.size() == 2) {
    // two edges at u: splice them together
    for (int v : t.vertices)
      if (v != u) r.vertices.push_back(v);
    for (auto [x, y] : t.edges)
      if (x != u && y != u) r.edges.emplace_back(x, y);
    r.edges.emplace_back(adj[0], adj[1]);
    for (int& v : r.leg_vertex)
      if (v == u) throw std::logic_error("leg left on contracted vertex");
  } else {
    // one edge and one remaining leg: move the leg to the neighbor
    const int w = adj[0];
    for (int v : t.vertices)
      if (v != u) r.vertices.push_back(v);
    for (auto [x, y] : t.edges)
      if (!(x == u || y == u)) r.edges.emplace_back(x, y);
    for (int& v : r.leg_vertex)
      if (v == u) v = w;
  }

  MarkedTree out = canonicalize(r);
  validate_tree(out);
  assert(dimension(out) == dimension(t));
  return out;
}

// Stable trees correspond bijectively to laminar families of subsets
// B ⊆ [n] \ {1} with 2 <= |B| <= n-2 (B = far side of an edge, viewed from
// mark 1); pairwise each two members are nested or disjoint. Enumerating the
// families is therefore duplicate-free.
std::vector<MarkedTree> enumerate_stable_trees(int n) {
  if (n < 3 || n > 8) throw std::invalid_argument("tree enumeration supports 3 <= n <= 8");

  std::vector<std::uint32_t> candidates;
  for (std::uint32_t m = 0; m < (1u << n); ++m) {
    if (m & 1u) continue;  // avoid mark 1
    const int sz = std::popcount(m);
    if (sz >= 2 && sz <= n - 2) candidates.push_back(m);
  }
  std::sort(candidates.begin(), candidates.end());

  auto compatible = [](std::uint32_t a, std::uint32_t b) {
    const std::uint32_t c = a & b;
    return c == 0 || c == a || c == b;
  };

  std::vector<MarkedTree> out;
  std::vector<std::uint32_t> family;

  auto build = [&]() {
    // parent of B = smallest member strictly containing it; vertex 0 = root
    std::vector<std::uint32_t> fam = family;
    std::sort(fam.begin(), fam.end(), [](std::uint32_t a, std::uint32_t b) {
      if (std::popcount(a) != std::popcount(b)) return std::popcount(a) < std::popcount(b);
      return a < b;
    });
    MarkedTree t;
    t.vertices.push_back(0);
    for (std::size_t i = 0; i < fam.size(); ++i) t.vertices.push_back(static_cast<int>(i) + 1);
    for (std::size_t i = 0; i < fam.size(); ++i) {
      int parent = 0;
      for (std::size_t j = i + 1; j < fam.size(); ++j)
        if ((fam[i] & fam[j]) == fam[i]) {
          parent = static_cast<int>(j) + 1;
          break;
        }
      t.edges.emplace_back(static_cast<int>(i) + 1, parent);
    }
    t.leg_vertex.assign(static_cast<std::size_t>(n), 0);
    for (int mark = 1; mark <= n; ++mark) {
      for (std::size_t i = 0; i < fam.size(); ++i)
        if ((fam[i] >> (mark - 1)) & 1u) {
          t.leg_vertex[static_cast<std::size_t>(mark - 1)] = static_cast<int>(i) + 1;
          break;
        }
    }
    out.push_back(canonicalize(t));
  };

  auto rec = [&](auto&& self, std::size_t from) -> void {
    build();
    for (std::size_t i = from; i < candidates.size(); ++i) {
      bool ok = true;
      for (std::uint32_t b : family)
        if (!compatible(candidates[i], b)) {
          ok = false;
          break;
        }
      if (!ok) continue;
      family.push_back(candidates[i]);
      self(self, i + 1);
      family.pop_back();
    }
  };
  rec(rec, 0);

  for (const auto& t : out) validate_tree(t);
  return out;
}

std::vector<Subset> tree_splits(const MarkedTree& t) {
  const int n = t.n_marks();
  std::vector<Subset> splits;
  for (std::size_t e = 0; e < t.edges.size(); ++e) {
    auto [x, y] = t.edges[e];
    // marks on y's side when edge e is removed
    Adjacency a = adjacency(t);
    std::vector<int> stack = {y};
    std::map<int, bool> seen;
    seen[x] = true;
    seen[y] = true;
    std::uint32_t mask = 0;
    while (!stack.empty()) {
      int w = stack.back();
      stack.pop_back();
      for (int m : a.legs.at(w)) mask |= 1u << (m - 1);
      for (int u : a.neighbors.at(w)) {
        if (w == y && u == x) continue;
        if (!seen[u]) {
          seen[u] = true;
          stack.push_back(u);
        }
      }
    }
    if (mask & 1u) mask = Subset::full(n).mask() & ~mask;  // side without mark 1
    splits.emplace_back(n, mask);
  }
  std::sort(splits.begin(), splits.end());
  return splits;
}

bool same_tree(const MarkedTree& a, const MarkedTree& b) {
  if (a.n_marks() != b.n_marks()) return false;
  return tree_splits(a) == tree_splits(b);
}

MarkedTree canonicalize(const MarkedTree& t) {
  validate_tree(t);
  Adjacency a = adjacency(t);
  const int root = t.leg_vertex[0];

  // minimal mark reachable in the subtree below each child
  std::map<int, int> min_mark;
  auto min_rec = [&](auto&& self, int v, int parent) -> int {
    int best = kMaxGround + 1;
    for (int m : a.legs.at(v)) best = std::min(best, m);
    for (int w : a.neighbors.at(v))
      if (w != parent) best = std::min(best, self(self, w, v));
    min_mark[v] = best;
    return best;
  };
  min_rec(min_rec, root, -1);

  MarkedTree out;
  out.leg_vertex.assign(t.leg_vertex.size(), -1);
  std::map<int, int> new_id;
  auto walk = [&](auto&& self, int v, int parent) -> void {
    const int id = static_cast<int>(out.vertices.size());
    new_id[v] = id;
    out.vertices.push_back(id);
    for (int m : a.legs.at(v)) out.leg_vertex[static_cast<std::size_t>(m - 1)] = id;
    std::vector<int> children;
    for (int w : a.neighbors.at(v))
      if (w != parent) children.push_back(w);
    std::sort(children.begin(), children.end(),
              [&](int x, int y) { return min_mark.at(x) < min_mark.at(y); });
    for (int w : children) {
      out.edges.emplace_back(id, static_cast<int>(out.vertices.size()));
      self(self, w, v);
    }
  };
  walk(walk, root, -1);
  std::sort(out.edges.begin(), out.edges.end());
  return out;
}

MarkedTree relabel(const Permutation& g, const MarkedTree& t) {
  if (g.degree() != t.n_marks()) throw std::invalid_argument("degree mismatch");
  MarkedTree r = t;
  for (int i = 1; i <= t.n_marks(); ++i)
    r.leg_vertex[static_cast<std::size_t>(g.apply(i) - 1)] =
        t.leg_vertex[static_cast<std::size_t>(i - 1)];
  return canonicalize(r);
}

nlohmann::json tree_to_json(const MarkedTree& t) {
  nlohmann::json j;
  j["vertices"] = t.vertices;
  nlohmann::json edges = nlohmann::json::array();
  for (auto [x, y] : t.edges) edges.push_back({x, y});
  j["edges"] = std::move(edges);
  nlohmann::json legs = nlohmann::json::object();
  for (int m = 1; m <= t.n_marks(); ++m)
    legs[std::to_string(m)] = t.leg_vertex[static_cast<std::size_t>(m - 1)];
  j["legs"] = std::move(legs);
  return j;
}

}  // namespace kappaq
