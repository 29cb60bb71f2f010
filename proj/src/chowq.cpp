#include "kappaq/chowq.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace kappaq {

void validate(const SPVector& v) {
  for (const auto& [p, c] : v.sum.terms()) {
    if (p.ground_size() != v.n) throw std::invalid_argument("partition over wrong ground set");
    if (p.num_blocks() != v.d + 3) throw std::invalid_argument("wrong block count");
  }
}

namespace {

void check_cell(int n, int d) {
  if (n < 4) throw std::invalid_argument("need n >= 4");
  if (d < 1) throw std::invalid_argument("need d >= 1");
  if (d > n - 2) throw std::invalid_argument("d too large for ground set");
}

SetPartition merge_blocks(const std::vector<Subset>& blocks, int i, int j, int n) {
  std::vector<Subset> out;
  out.reserve(blocks.size() - 1);
  for (int k = 0; k < static_cast<int>(blocks.size()); ++k)
    if (k != i && k != j) out.push_back(blocks[static_cast<std::size_t>(k)]);
  out.emplace_back(n, blocks[static_cast<std::size_t>(i)].mask() |
                          blocks[static_cast<std::size_t>(j)].mask());
  return SetPartition(n, std::move(out));
}

// Every relation element, one ordered choice (P1,P2,P3,P4) per symmetry
// orbit: the tuples (1,2,3,4), (2,1,4,3), (3,4,1,2), (4,3,2,1) produce the
// same formal sum, and exactly one of them puts the minimal part first.
template <class Fn>
void for_each_relation(int n, int d, Fn&& fn) {
  check_cell(n, d);
  if (d + 4 > n) return;  // no partitions with d+4 parts: R is empty here
  const int parts = d + 4;
  for (const auto& base : enumerate_partitions(n, parts)) {
    const auto& blocks = base.blocks();
    for (int i = 0; i < parts; ++i)
      for (int j = 0; j < parts; ++j) {
        if (j == i || j < i) continue;
        for (int a = 0; a < parts; ++a) {
          if (a == i || a == j || a < i) continue;
          for (int b = 0; b < parts; ++b) {
            if (b == i || b == j || b == a || b < i) continue;
            fn(merge_blocks(blocks, i, j, n), merge_blocks(blocks, a, b, n),
               merge_blocks(blocks, i, a, n), merge_blocks(blocks, j, b, n));
          }
        }
      }
  }
}

}  // namespace

std::vector<SPVector> relation_generators(int n, int d) {
  std::vector<SPVector> out;
  std::set<std::vector<FormalSum<SetPartition>::Term>> seen;
  for_each_relation(n, d, [&](SetPartition t1, SetPartition t2, SetPartition t3,
                              SetPartition t4) {
    FormalSum<SetPartition> sum({{std::move(t1), Rational(1)},
                                 {std::move(t2), Rational(1)},
                                 {std::move(t3), Rational(-1)},
                                 {std::move(t4), Rational(-1)}});
    if (seen.insert(sum.terms()).second)
      out.push_back(SPVector{n, d, std::move(sum)});
  });
  return out;
}

QuotientSpace::QuotientSpace(int n, int d, UniversePtr<SetPartition> universe,
                             Subspace<SetPartition> relations)
    : n_(n), d_(d), universe_(std::move(universe)), relations_(std::move(relations)) {
  basis_ = relations_.free_labels();
  basis_universe_ = make_universe(basis_);
}

QuotientSpace build_quotient(int n, int d) {
  check_cell(n, d);
  UniversePtr<SetPartition> universe =
      (d + 3 <= n) ? make_universe(enumerate_partitions(n, d + 3))
                   : make_universe(std::vector<SetPartition>{});
  EchelonBuilder<SetPartition> builder(universe);
  for_each_relation(n, d, [&](const SetPartition& t1, const SetPartition& t2,
                              const SetPartition& t3, const SetPartition& t4) {
    IndexVec v;
    v.emplace_back(universe->index_of(t1), Rational(1));
    v.emplace_back(universe->index_of(t2), Rational(1));
    v.emplace_back(universe->index_of(t3), Rational(-1));
    v.emplace_back(universe->index_of(t4), Rational(-1));
    std::sort(v.begin(), v.end(),
              [](const IndexTerm& a, const IndexTerm& b) { return a.first < b.first; });
    builder.add_indexed(std::move(v));
  });
  return QuotientSpace(n, d, universe, std::move(builder).finish());
}

void QuotientCache::put(int n, int d, QuotientPtr q) {
  if (!q) throw std::invalid_argument("null quotient");
  std::promise<QuotientPtr> promise;
  promise.set_value(std::move(q));
  std::lock_guard<std::mutex> lock(mu_);
  if (!cells_.emplace(std::make_pair(n, d), promise.get_future().share()).second)
    throw std::invalid_argument("cell already built");
}

QuotientPtr QuotientCache::get(int n, int d) {
  std::promise<QuotientPtr> promise;
  std::shared_future<QuotientPtr> fut;
  bool builder = false;
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = cells_.find({n, d});
    if (it == cells_.end()) {
      fut = promise.get_future().share();
      cells_.emplace(std::make_pair(n, d), fut);
      builder = true;
    } else {
      fut = it->second;
    }
  }
  if (builder) {
    try {
      promise.set_value(std::make_shared<const QuotientSpace>(build_quotient(n, d)));
    } catch (...) {
      promise.set_exception(std::current_exception());
    }
  }
  return fut.get();
}

SPVector pushforward_lift(const SPVector& v) {
  validate(v);
  if (v.n < 2) throw std::invalid_argument("nothing to forget");
  const int n = v.n;
  const Subset last_single(n, std::vector<int>{n});
  FormalSum<SetPartition> out = v.sum.mapped([&](const SetPartition& p) {
    if (p.has_block(last_single)) return FormalSum<SetPartition>();
    std::vector<Subset> blocks;
    blocks.reserve(p.blocks().size());
    for (const auto& b : p.blocks()) blocks.push_back(b.without(n).reground(n - 1));
    return FormalSum<SetPartition>::unit(SetPartition(n - 1, std::move(blocks)));
  });
  return SPVector{n - 1, v.d, std::move(out)};
}

SPVector pullback_lift(const SPVector& v) {
  validate(v);
  const int n = v.n;
  FormalSum<SetPartition> out = v.sum.mapped([&](const SetPartition& p) {
    std::vector<Subset> blocks;
    blocks.reserve(p.blocks().size() + 1);
    for (const auto& b : p.blocks()) blocks.push_back(b.reground(n + 1));
    blocks.push_back(Subset(n + 1, std::vector<int>{n + 1}));
    return FormalSum<SetPartition>::unit(SetPartition(n + 1, std::move(blocks)));
  });
  return SPVector{n + 1, v.d + 1, std::move(out)};
}

SparseMatrix<SetPartition> quotient_map_matrix(MapKind kind, int n, int d,
                                               QuotientCache& cache) {
  QuotientPtr src = cache.get(n, d);
  QuotientPtr dst = (kind == MapKind::Pushforward) ? cache.get(n - 1, d)
                                                   : cache.get(n + 1, d + 1);
  std::vector<FormalSum<SetPartition>> rows;
  rows.reserve(src->basis().size());
  for (const auto& p : src->basis()) {
    SPVector e{n, d, FormalSum<SetPartition>::unit(p)};
    SPVector image = (kind == MapKind::Pushforward) ? pushforward_lift(e) : pullback_lift(e);
    rows.push_back(dst->reduce(image.sum));
  }
  return SparseMatrix<SetPartition>(dst->basis_universe(), std::move(rows));
}

}  // namespace kappaq
