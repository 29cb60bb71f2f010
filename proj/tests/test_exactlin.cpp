#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <string>
#include <vector>

#include "kappaq/exactlin.hpp"
#include "oracle.hpp"

using namespace kappaq;

namespace {

FormalSum<std::string> sum_of(std::vector<std::pair<std::string, int>> terms) {
  std::vector<FormalSum<std::string>::Term> t;
  for (auto& [l, c] : terms) t.emplace_back(l, Rational(c));
  return FormalSum<std::string>(std::move(t));
}

// Deterministic sparse matrix over integer column labels 0..cols-1.
SparseMatrix<int> random_matrix(std::mt19937_64& rng, int rows, int cols) {
  std::vector<int> labels(static_cast<std::size_t>(cols));
  for (int c = 0; c < cols; ++c) labels[static_cast<std::size_t>(c)] = c;
  auto universe = make_universe(std::move(labels));
  std::vector<FormalSum<int>> rvs;
  for (int r = 0; r < rows; ++r) {
    FormalSum<int> v;
    for (int c = 0; c < cols; ++c) {
      const int pick = static_cast<int>(rng() % 4);
      if (pick == 0) v.add_term(c, Rational(static_cast<int>(rng() % 7) - 3));
    }
    rvs.push_back(std::move(v));
  }
  return SparseMatrix<int>(universe, std::move(rvs));
}

}  // namespace

TEST_CASE("rational scalars stay normalized") {
  Rational q = Rational(6) / Rational(-4);
  CHECK(numerator(q) == -3);
  CHECK(denominator(q) == 2);
  CHECK(rational_str(q) == "-3/2");
  CHECK(rational_str(Rational(5)) == "5");
}

TEST_CASE("formal sums canonicalize") {
  auto v = sum_of({{"b", 2}, {"a", 1}, {"b", -2}, {"c", 0}});
  CHECK(v.n_terms() == 1);
  CHECK(v.coefficient("a") == 1);
  CHECK(v.coefficient("b") == 0);
  CHECK(v == FormalSum<std::string>::unit("a"));

  SUBCASE("add_term merges and erases") {
    v.add_term("a", Rational(-1));
    CHECK(v.zero());
  }
  SUBCASE("axpy is a sorted merge") {
    auto w = sum_of({{"a", 1}, {"z", 4}});
    v.axpy(Rational(-2), w);
    CHECK(v == sum_of({{"a", -1}, {"z", -8}}));
  }
  SUBCASE("mapped extends linearly") {
    auto doubled = v.mapped([](const std::string& l) {
      return FormalSum<std::string>::unit(l + l, Rational(2));
    });
    CHECK(doubled == sum_of({{"aa", 2}}));
  }
  SUBCASE("arithmetic") {
    auto w = sum_of({{"a", 3}});
    CHECK(v + w == sum_of({{"a", 4}}));
    CHECK(v - w == sum_of({{"a", -2}}));
    CHECK(-v == sum_of({{"a", -1}}));
    CHECK(v * Rational(0) == FormalSum<std::string>());
  }
}

TEST_CASE("universe rejects foreign labels") {
  auto u = make_universe<std::string>({"a", "b"});
  CHECK(u->index_of("a") == 0);
  CHECK(u->index_of("b") == 1);
  CHECK(!u->find("c").has_value());
  CHECK_THROWS_AS((void)u->index_of("c"), std::invalid_argument);
  CHECK_THROWS_AS(SparseMatrix<std::string>(u, {sum_of({{"q", 1}})}),
                  std::invalid_argument);
}

TEST_CASE("echelonization of collinear rows") {
  auto s = echelonize<std::string>({sum_of({{"a", 2}, {"b", 4}}),
                                    sum_of({{"a", 3}, {"b", 6}})});
  CHECK(s.rank() == 1);
  auto rows = s.echelon_rows();
  REQUIRE(rows.size() == 1);
  // leading coefficient normalized to 1
  CHECK(rows[0] == sum_of({{"a", 1}, {"b", 2}}));
  CHECK(s.leading_labels() == std::vector<std::string>{"a"});
  CHECK(s.free_labels() == std::vector<std::string>{"b"});
}

TEST_CASE("kernel of a difference row") {
  auto u = make_universe<std::string>({"a", "b"});
  SparseMatrix<std::string> m(u, {sum_of({{"a", 1}, {"b", -1}})});
  auto k = kernel(m);
  CHECK(k.rank() == 1);
  CHECK(k.echelon_rows()[0] == sum_of({{"a", 1}, {"b", 1}}));
}

TEST_CASE("reduction yields canonical representatives") {
  auto u = make_universe<std::string>({"a", "b", "c"});
  auto s = echelonize<std::string>({sum_of({{"a", 1}, {"c", 1}}),
                                    sum_of({{"b", 1}, {"c", -2}})},
                                   u);
  auto v = sum_of({{"a", 5}, {"b", 1}, {"c", 3}});
  auto r = s.reduce(v);
  // representative is supported on free labels only
  for (const auto& [label, coeff] : r.terms()) CHECK(label == "c");
  CHECK(s.reduce(r) == r);
  CHECK(s.contains(v - r));
  // linearity
  auto w = sum_of({{"c", 2}, {"a", -1}});
  CHECK(s.reduce(v + w) == s.reduce(v) + s.reduce(w));
}

TEST_CASE("rank agrees with dense elimination and transposition") {
  std::mt19937_64 rng(20240816u);
  for (int trial = 0; trial < 25; ++trial) {
    const int rows = 1 + static_cast<int>(rng() % 10);
    const int cols = 1 + static_cast<int>(rng() % 12);
    SparseMatrix<int> m = random_matrix(rng, rows, cols);
    const int rk = rank(m);
    CHECK(rk == oracle::dense_rank(oracle::densify(m)));
    CHECK(rk == rank(m.transposed()));

    // every kernel vector is orthogonal to every row
    auto k = kernel(m);
    CHECK(k.rank() == cols - rk);
    for (const auto& kv : k.echelon_rows())
      for (const auto& row : m.rows()) {
        Rational dot(0);
        for (const auto& [label, coeff] : row.terms())
          dot += coeff * kv.coefficient(label);
        CHECK(dot == 0);
      }
  }
}

TEST_CASE("echelon form is a fixed point") {
  std::mt19937_64 rng(7u);
  SparseMatrix<int> m = random_matrix(rng, 8, 9);
  EchelonBuilder<int> streaming(m.universe_ptr());
  for (const auto& r : m.rows()) streaming.add(r);
  auto s1 = std::move(streaming).finish();
  auto s2 = echelonize(s1.echelon_rows(), m.universe_ptr());
  CHECK(s1.rank() == s2.rank());
  CHECK(s1.echelon_rows() == s2.echelon_rows());
  // leading labels appear in exactly one row each
  auto rows = s1.echelon_rows();
  for (const auto& lead : s1.leading_labels()) {
    int appearances = 0;
    for (const auto& r : rows)
      if (r.coefficient(lead) != 0) ++appearances;
    CHECK(appearances == 1);
  }
}
