#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <nlohmann/json.hpp>
#include <random>
#include <set>

#include "kappaq/strata.hpp"
#include "oracle.hpp"

using namespace kappaq;

namespace {

MarkedTree corolla(int n) {
  MarkedTree t;
  t.vertices = {0};
  t.leg_vertex.assign(static_cast<std::size_t>(n), 0);
  return t;
}

// Independent generator: every stable (n)-tree arises from exactly one
// (n-1)-tree by one of three moves placing the new leg, so recursing over
// all moves enumerates without duplicates.
std::vector<MarkedTree> attach_all(int n) {
  if (n == 3) return {corolla(3)};
  std::vector<MarkedTree> out;
  for (const MarkedTree& t : attach_all(n - 1)) {
    int fresh = 0;
    for (int v : t.vertices) fresh = std::max(fresh, v + 1);

    for (int v : t.vertices) {  // new leg on an existing vertex
      MarkedTree s = t;
      s.leg_vertex.push_back(v);
      out.push_back(std::move(s));
    }
    for (std::size_t e = 0; e < t.edges.size(); ++e) {  // subdivide an edge
      MarkedTree s = t;
      auto [a, b] = s.edges[e];
      s.edges.erase(s.edges.begin() + static_cast<std::ptrdiff_t>(e));
      s.vertices.push_back(fresh);
      s.edges.emplace_back(a, fresh);
      s.edges.emplace_back(fresh, b);
      s.leg_vertex.push_back(fresh);
      out.push_back(std::move(s));
    }
    for (int mark = 1; mark < n; ++mark) {  // pull one old leg onto a new vertex
      MarkedTree s = t;
      const int v = s.leg_vertex[static_cast<std::size_t>(mark - 1)];
      s.vertices.push_back(fresh);
      s.edges.emplace_back(v, fresh);
      s.leg_vertex[static_cast<std::size_t>(mark - 1)] = fresh;
      s.leg_vertex.push_back(fresh);
      out.push_back(std::move(s));
    }
  }
  return out;
}

std::set<std::vector<Subset>> split_families(const std::vector<MarkedTree>& ts) {
  std::set<std::vector<Subset>> out;
  for (const auto& t : ts) out.insert(tree_splits(t));
  return out;
}

}  // namespace

TEST_CASE("classification and dimension of small trees") {
  CHECK(classify(corolla(3)) == TreeKind::Point);
  CHECK(dimension(corolla(3)) == 0);
  CHECK(classify(corolla(4)) == TreeKind::TypeI);
  CHECK(dimension(corolla(4)) == 1);
  CHECK(dimension(corolla(8)) == 5);

  // one edge, legs {1,2,3} and {4,5}
  MarkedTree t;
  t.vertices = {0, 1};
  t.edges = {{0, 1}};
  t.leg_vertex = {0, 0, 0, 1, 1};
  validate_tree(t);
  CHECK(valence(t, 0) == 4);
  CHECK(valence(t, 1) == 3);
  CHECK(classify(t) == TreeKind::TypeI);
  CHECK(dimension(t) == 1);
  CHECK(partition_at_vertex(t, 0) ==
        SetPartition(5, {Subset(5, std::vector<int>{1}), Subset(5, std::vector<int>{2}),
                         Subset(5, std::vector<int>{3}),
                         Subset(5, std::vector<int>{4, 5})}));
  CHECK(stratum_class(t) == StratumClass::of(partition_at_vertex(t, 0)));

  // two vertices of large valence vanish
  MarkedTree u;
  u.vertices = {0, 1};
  u.edges = {{0, 1}};
  u.leg_vertex = {0, 0, 0, 1, 1, 1, 1, 1};
  CHECK(classify(u) == TreeKind::TypeII);
  CHECK(stratum_class(u).is_zero());

  CHECK_THROWS_AS(stratum_class(corolla(3)), std::invalid_argument);
}

TEST_CASE("tree validation") {
  MarkedTree bad = corolla(2);
  CHECK_THROWS_AS(validate_tree(bad), std::invalid_argument);  // too few marks

  MarkedTree twocomp;
  twocomp.vertices = {0, 1};
  twocomp.edges = {{0, 0}};
  twocomp.leg_vertex = {0, 0, 1, 1, 1};
  CHECK_THROWS_AS(validate_tree(twocomp), std::invalid_argument);  // self loop

  MarkedTree sparse;
  sparse.vertices = {0, 1};
  sparse.edges = {{0, 1}};
  sparse.leg_vertex = {0, 0, 0, 1};  // vertex 1 has valence 2
  CHECK_THROWS_AS(validate_tree(sparse), std::invalid_argument);

  MarkedTree stray;
  stray.vertices = {0};
  stray.edges = {};
  stray.leg_vertex = {0, 0, 7};  // unknown vertex id
  CHECK_THROWS_AS(validate_tree(stray), std::invalid_argument);
}

TEST_CASE("forgetting the last mark") {
  // legs {4,5} sit on their own trivalent vertex: splice, keep dimension
  MarkedTree t;
  t.vertices = {0, 1};
  t.edges = {{0, 1}};
  t.leg_vertex = {0, 0, 0, 1, 1};
  auto f = forget_mark(t, 5);
  REQUIRE(f.has_value());
  CHECK(same_tree(*f, corolla(4)));
  CHECK(dimension(*f) == dimension(t));

  // leg on the big vertex: the stratum collapses
  CHECK(!forget_mark(corolla(5), 5).has_value());

  // moving a leg instead of splicing
  MarkedTree m;
  m.vertices = {0, 1};
  m.edges = {{0, 1}};
  m.leg_vertex = {0, 0, 0, 0, 1, 1};  // legs {5,6} on vertex 1
  auto g = forget_mark(m, 6);
  REQUIRE(g.has_value());
  CHECK(dimension(*g) == dimension(m));
  CHECK(classify(*g) == TreeKind::TypeI);
  CHECK(same_tree(*g, corolla(5)));

  CHECK_THROWS_AS(forget_mark(corolla(5), 3), std::invalid_argument);
  CHECK_THROWS_AS(forget_mark(corolla(3), 3), std::invalid_argument);
}

TEST_CASE("enumeration agrees with the attach recursion") {
  CHECK(enumerate_stable_trees(3).size() == 1);
  for (int n = 4; n <= 7; ++n) {
    auto trees = enumerate_stable_trees(n);
    auto reference = attach_all(n);
    CHECK(trees.size() == reference.size());
    if (n <= 6) CHECK(split_families(trees) == split_families(reference));

    // no duplicates
    CHECK(split_families(trees).size() == trees.size());

    long long points = 0, top = 0, one_edge = 0;
    for (const auto& t : trees) {
      if (dimension(t) == 0) ++points;
      if (dimension(t) == n - 3) ++top;
      if (t.edges.size() == 1) ++one_edge;
      validate_tree(t);
    }
    CHECK(points == oracle::double_factorial(2 * n - 5));
    CHECK(top == 1);
    CHECK(one_edge == (1LL << (n - 1)) - n - 1);
  }
  CHECK(enumerate_stable_trees(8).size() == attach_all(8).size());
  CHECK_THROWS_AS(enumerate_stable_trees(9), std::invalid_argument);
}

TEST_CASE("forgetting collapses exactly on big vertices") {
  for (int n = 5; n <= 6; ++n)
    for (const auto& t : enumerate_stable_trees(n)) {
      auto f = forget_mark(t, n);
      const bool on_big = valence(t, t.leg_vertex[static_cast<std::size_t>(n - 1)]) >= 4;
      CHECK(f.has_value() == !on_big);
      if (f) {
        validate_tree(*f);
        CHECK(dimension(*f) == dimension(t));
      }
    }
}

TEST_CASE("relabeling and canonical form") {
  std::mt19937_64 rng(31u);
  auto trees = enumerate_stable_trees(6);
  for (int trial = 0; trial < 40; ++trial) {
    const MarkedTree& t = trees[rng() % trees.size()];
    std::vector<int> img = {1, 2, 3, 4, 5, 6};
    for (int i = 5; i > 0; --i)
      std::swap(img[static_cast<std::size_t>(i)],
                img[rng() % static_cast<std::uint64_t>(i + 1)]);
    Permutation g(img);
    MarkedTree r = relabel(g, t);
    validate_tree(r);
    CHECK(classify(r) == classify(t));
    CHECK(dimension(r) == dimension(t));
    CHECK(same_tree(relabel(g.inverse(), r), t));
    CHECK(same_tree(canonicalize(t), t));
  }
}

TEST_CASE("json shape") {
  auto j = tree_to_json(corolla(4));
  CHECK(j.contains("vertices"));
  CHECK(j.contains("edges"));
  CHECK(j.contains("legs"));
  CHECK(j["legs"]["1"] == 0);
}
