#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "kappaq/kappa.hpp"
#include "oracle.hpp"

using namespace kappaq;

namespace {

SetPartition parts(int n, std::vector<std::vector<int>> blocks) {
  std::vector<Subset> b;
  for (auto& m : blocks) b.emplace_back(n, m);
  return SetPartition(n, std::move(b));
}

Subset sub(int n, std::vector<int> members) { return Subset(n, members); }

SPVector unit_sp(int n, int d, const SetPartition& p) {
  return SPVector{n, d, FormalSum<SetPartition>::unit(p)};
}

OrientedBipartition bip(int n, std::vector<int> first, std::vector<int> second) {
  return OrientedBipartition(Subset(n, first), Subset(n, second));
}

// Reference expansion: scan the whole index family and keep what pairs to 1.
KVector phi_by_scan(const SPVector& v) {
  KVector out{v.n, v.d, {}};
  for (const auto& [p, c] : v.sum.terms())
    for (const auto& t : enumerate_kappa_index(v.n, v.d))
      if (pair_value(p, t) == 1) out.sum.add_term(t, c);
  return out;
}

}  // namespace

TEST_CASE("pairing hits exactly the transversal index sets") {
  auto p = parts(4, {{1, 2}, {3}, {4}});
  CHECK(pair_value(p, sub(4, {1, 3, 4})) == 1);
  CHECK(pair_value(p, sub(4, {2, 3, 4})) == 1);
  CHECK(pair_value(p, sub(4, {3, 4})) == 0);       // misses {1,2}
  CHECK(pair_value(p, sub(4, {1, 2, 3})) == 0);    // misses {4}
  CHECK(pair_value(p, Subset::empty(4)) == 0);
  CHECK(pair_value(p, Subset::full(4)) == 1);
}

TEST_CASE("expansion base cases") {
  auto two = phi_tilde(unit_sp(2, -1, parts(2, {{1}, {2}})));
  CHECK(two.sum == FormalSum<Subset>::unit(Subset::full(2)));

  auto three = phi_tilde(unit_sp(3, 0, parts(3, {{1}, {2}, {3}})));
  CHECK(three.sum == FormalSum<Subset>::unit(Subset::full(3)));

  auto four = phi_tilde(unit_sp(4, 1, parts(4, {{1}, {2}, {3}, {4}})));
  CHECK(four.sum == FormalSum<Subset>::unit(Subset::full(4)));

  // 2-block partitions produce one term per transversal of matching parity
  auto v = phi_tilde(unit_sp(3, -1, parts(3, {{1, 2}, {3}})));
  FormalSum<Subset> expect;
  expect.add_term(sub(3, {1, 3}), Rational(1));
  expect.add_term(sub(3, {2, 3}), Rational(1));
  CHECK(v.sum == expect);
}

TEST_CASE("expansion equals the full scan") {
  std::mt19937_64 rng(4242u);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 5);  // up to 6
    const int d = -1 + static_cast<int>(rng() % static_cast<std::uint64_t>(n - 1));
    if (d > n - 3) continue;
    auto all = enumerate_partitions(n, d + 3);
    SPVector v{n, d, {}};
    for (int k = 0; k < 3; ++k)
      v.sum.add_term(all[rng() % all.size()], Rational(static_cast<int>(rng() % 5) - 2));
    CHECK(phi_tilde(v).sum == phi_by_scan(v).sum);
  }
  SPVector below{2, -2, FormalSum<SetPartition>::unit(parts(2, {{1, 2}}))};
  CHECK_THROWS_AS(phi_tilde(below), std::invalid_argument);
}

TEST_CASE("every relation generator is annihilated") {
  for (auto [n, d] : {std::pair{5, 1}, {6, 1}, {6, 2}, {7, 2}})
    for (const auto& g : relation_generators(n, d))
      CHECK(phi_tilde(g).sum.zero());
}

TEST_CASE("insertion and deletion on index vectors") {
  KVector v{4, 1, FormalSum<Subset>::unit(Subset::full(4))};
  KVector up = alpha(v);
  CHECK(up.n == 5);
  CHECK(up.d == 2);
  CHECK(up.sum == FormalSum<Subset>::unit(Subset::full(5)));
  CHECK(beta(up).sum.zero());

  KVector w{5, 1, {}};
  w.sum.add_term(sub(5, {1, 2, 3, 4}), Rational(2));
  w.sum.add_term(sub(5, {1, 2, 4, 5}), Rational(3));
  KVector down = beta(w);
  CHECK(down.n == 4);
  CHECK(down.sum == FormalSum<Subset>::unit(Subset::full(4), Rational(2)));

  KVector bad{4, 1, FormalSum<Subset>::unit(sub(4, {1, 2}))};
  CHECK_THROWS_AS(validate(bad), std::invalid_argument);
}

TEST_CASE("parity sums at the bottom") {
  auto o1 = odd_map(bip(1, {1}, {}));
  CHECK(o1.parity == Parity::Odd);
  CHECK(o1.sum == FormalSum<Subset>::unit(sub(1, {1}), Rational(-1)));

  auto e1 = even_map(bip(1, {1}, {}));
  CHECK(e1.sum == FormalSum<Subset>::unit(Subset::empty(1), Rational(-2)));

  auto o2 = odd_map(bip(2, {1}, {2}));
  FormalSum<Subset> expect_o2;
  expect_o2.add_term(sub(2, {1}), Rational(-1));
  expect_o2.add_term(sub(2, {2}), Rational(1));
  CHECK(o2.sum == expect_o2);

  auto e2 = even_map(bip(2, {1, 2}, {}));
  FormalSum<Subset> expect_e2;
  expect_e2.add_term(Subset::empty(2), Rational(-2));
  expect_e2.add_term(sub(2, {1, 2}), Rational(-1));
  CHECK(e2.sum == expect_e2);
}

TEST_CASE("parity sums span the full parity spaces") {
  for (int n = 1; n <= 5; ++n) {
    std::vector<Subset> odd_labels, even_labels;
    for (const auto& t : enumerate_subsets(n))
      (t.size() % 2 == 1 ? odd_labels : even_labels).push_back(t);
    std::vector<FormalSum<Subset>> odd_rows, even_rows;
    for (const auto& b : enumerate_bipartitions(n)) {
      odd_rows.push_back(odd_map(b).sum);
      even_rows.push_back(even_map(b).sum);
    }
    SparseMatrix<Subset> om(make_universe(odd_labels), odd_rows);
    SparseMatrix<Subset> em(make_universe(even_labels), even_rows);
    CHECK(rank(om) == 1 << (n - 1));
    CHECK(rank(em) == 1 << (n - 1));
    CHECK(oracle::dense_rank(oracle::densify(om)) == 1 << (n - 1));
  }
}

TEST_CASE("transfer maps") {
  auto b = bip(1, {1}, {});
  FormalSum<OrientedBipartition> g = gamma_bipartition(b);
  FormalSum<OrientedBipartition> expect;
  expect.add_term(bip(2, {1, 2}, {}), Rational(1));
  expect.add_term(bip(2, {1}, {2}), Rational(-1));
  CHECK(g == expect);

  CHECK(gamma_partition(b).sum ==
        FormalSum<SetPartition>::unit(parts(2, {{1}, {2}}), Rational(-1)));

  auto split = bip(2, {1}, {2});
  FormalSum<SetPartition> expect_sp;
  expect_sp.add_term(parts(3, {{1, 3}, {2}}), Rational(1));
  expect_sp.add_term(parts(3, {{1}, {2, 3}}), Rational(-1));
  CHECK(gamma_partition(split).sum == expect_sp);

  SUBCASE("forgetting kills the transfer") {
    for (int n = 1; n <= 5; ++n)
      for (const auto& x : enumerate_bipartitions(n)) {
        auto pushed = gamma_bipartition(x).mapped([](const OrientedBipartition& y) {
          return FormalSum<OrientedBipartition>::unit(bipartition_pushforward(y));
        });
        CHECK(pushed.zero());
        CHECK(pushforward_lift(gamma_partition(x)).sum.zero());
      }
  }
}

TEST_CASE("matrix of the expansion equals the pairing matrix") {
  for (auto [n, d] : {std::pair{4, 1}, {5, 1}, {6, 2}}) {
    QuotientCache cache;
    auto a = phi_matrix(n, d, cache);
    auto b = pairing_matrix(n, d, cache);
    CHECK(a.n_rows() == b.n_rows());
    CHECK(a.universe().labels() == b.universe().labels());
    for (std::size_t i = 0; i < a.n_rows(); ++i) CHECK(a.rows()[i] == b.rows()[i]);
  }
  QuotientCache cache;
  auto m = pairing_matrix(4, 1, cache);
  REQUIRE(m.n_rows() == 1);
  REQUIRE(m.n_cols() == 1);
  CHECK(m.rows()[0].coefficient(Subset::full(4)) == 1);
}

TEST_CASE("pairing all ten partitions against the five index sets") {
  auto u = make_universe(enumerate_kappa_index(5, 1));
  std::vector<FormalSum<Subset>> rows;
  for (const auto& p : enumerate_partitions(5, 4))
    rows.push_back(phi_tilde(unit_sp(5, 1, p)).sum);
  SparseMatrix<Subset> m(u, rows);
  CHECK(m.n_rows() == 10);
  CHECK(m.n_cols() == 5);
  CHECK(rank(m) == 5);
}
