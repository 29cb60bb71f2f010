#include "kappaq/kappa.hpp"

#include <bit>
#include <stdexcept>

namespace kappaq {

void validate(const KVector& v) {
  const int min_size = v.d + 3;
  for (const auto& [t, c] : v.sum.terms()) {
    if (t.ground_size() != v.n) throw std::invalid_argument("subset over wrong ground set");
    if (t.size() < min_size || (t.size() - min_size) % 2 != 0)
      throw std::invalid_argument("label outside kappa index set");
  }
}

void validate(const ParityVector& v) {
  for (const auto& [t, c] : v.sum.terms()) {
    if (t.ground_size() != v.n) throw std::invalid_argument("subset over wrong ground set");
    if (t.size() % 2 != (v.parity == Parity::Odd ? 1 : 0))
      throw std::invalid_argument("label of wrong parity");
  }
}

int pair_value(const SetPartition& p, const Subset& t) {
  if (p.ground_size() != t.ground_size())
    throw std::invalid_argument("ground set mismatch");
  for (const auto& b : p.blocks())
    if (!b.meets(t)) return 0;
  return 1;
}

KVector phi_tilde(const SPVector& v) {
  validate(v);
  if (v.d < -1) throw std::invalid_argument("phi needs d >= -1");
  const int n = v.n;
  FormalSum<Subset> acc;
  for (const auto& [p, coeff] : v.sum.terms()) {
    const auto& blocks = p.blocks();
    const int parity = p.num_blocks() % 2;
    std::vector<std::pair<Subset, Rational>> terms;
    std::uint32_t t_mask = 0;
    auto rec = [&](auto&& self, std::size_t i) -> void {
      if (i == blocks.size()) {
        if (std::popcount(t_mask) % 2 == parity)
          terms.emplace_back(Subset(n, t_mask), coeff);
        return;
      }
      const std::uint32_t b = blocks[i].mask();
      for (std::uint32_t s = b;; s = (s - 1) & b) {
        if (s != 0) {
          t_mask |= s;
          self(self, i + 1);
          t_mask &= ~s;
        }
        if (s == 0) break;
      }
    };
    rec(rec, 0);
    acc += FormalSum<Subset>(std::move(terms));
  }
  return KVector{n, v.d, std::move(acc)};
}

namespace {

FormalSum<Subset> fs_alpha(const FormalSum<Subset>& sum, int n) {
  return sum.mapped([&](const Subset& t) {
    return FormalSum<Subset>::unit(t.reground(n + 1).with(n + 1));
  });
}

FormalSum<Subset> fs_beta(const FormalSum<Subset>& sum, int n) {
  return sum.mapped([&](const Subset& t) {
    if (t.contains(n)) return FormalSum<Subset>();
    return FormalSum<Subset>::unit(t.reground(n - 1));
  });
}

}  // namespace

KVector alpha(const KVector& v) {
  validate(v);
  return KVector{v.n + 1, v.d + 1, fs_alpha(v.sum, v.n)};
}

KVector beta(const KVector& v) {
  validate(v);
  if (v.n < 2) throw std::invalid_argument("nothing to forget");
  return KVector{v.n - 1, v.d, fs_beta(v.sum, v.n)};
}

ParityVector alpha(const ParityVector& v) {
  validate(v);
  return ParityVector{v.n + 1,
                      v.parity == Parity::Even ? Parity::Odd : Parity::Even,
                      fs_alpha(v.sum, v.n)};
}

ParityVector beta(const ParityVector& v) {
  validate(v);
  if (v.n < 2) throw std::invalid_argument("nothing to forget");
  return ParityVector{v.n - 1, v.parity, fs_beta(v.sum, v.n)};
}

namespace {

// Σ_{T ⊆ mask, |T| ≡ parity (mod 2)} coeff * T
void add_submasks(std::vector<std::pair<Subset, Rational>>& terms, int n,
                  std::uint32_t mask, int parity, const Rational& coeff) {
  for (std::uint32_t s = mask;; s = (s - 1) & mask) {
    if (std::popcount(s) % 2 == parity) terms.emplace_back(Subset(n, s), coeff);
    if (s == 0) break;
  }
}

}  // namespace

ParityVector odd_map(const OrientedBipartition& b) {
  const int n = b.ground_size();
  std::vector<std::pair<Subset, Rational>> terms;
  add_submasks(terms, n, b.first().mask(), 1, Rational(-1));
  add_submasks(terms, n, b.second().mask(), 1, Rational(1));
  return ParityVector{n, Parity::Odd, FormalSum<Subset>(std::move(terms))};
}

ParityVector even_map(const OrientedBipartition& b) {
  const int n = b.ground_size();
  std::vector<std::pair<Subset, Rational>> terms;
  add_submasks(terms, n, b.first().mask(), 0, Rational(-1));
  add_submasks(terms, n, b.second().mask(), 0, Rational(-1));
  return ParityVector{n, Parity::Even, FormalSum<Subset>(std::move(terms))};
}

FormalSum<OrientedBipartition> gamma_bipartition(const OrientedBipartition& b) {
  const int n = b.ground_size();
  const Subset f = b.first().reground(n + 1);
  const Subset s = b.second().reground(n + 1);
  FormalSum<OrientedBipartition> out;
  out.add_term(OrientedBipartition(f.with(n + 1), s), Rational(1));
  out.add_term(OrientedBipartition(f, s.with(n + 1)), Rational(-1));
  return out;
}

SPVector gamma_partition(const OrientedBipartition& b) {
  const int n = b.ground_size();
  const Subset f = b.first().reground(n + 1);
  const Subset s = b.second().reground(n + 1);
  FormalSum<SetPartition> out;
  if (!s.is_empty())
    out.add_term(SetPartition(n + 1, {f.with(n + 1), s}), Rational(1));
  out.add_term(SetPartition(n + 1, {f, s.with(n + 1)}), Rational(-1));
  return SPVector{n + 1, -1, std::move(out)};
}

OrientedBipartition bipartition_pushforward(const OrientedBipartition& b) {
  const int n = b.ground_size();
  if (n < 2) throw std::invalid_argument("nothing to forget");
  return OrientedBipartition(b.first().without(n).reground(n - 1),
                             b.second().without(n).reground(n - 1));
}

SparseMatrix<Subset> phi_matrix(int n, int d, QuotientCache& cache) {
  QuotientPtr q = cache.get(n, d);
  auto universe = make_universe(enumerate_kappa_index(n, d));
  std::vector<FormalSum<Subset>> rows;
  rows.reserve(q->basis().size());
  for (const auto& p : q->basis())
    rows.push_back(phi_tilde(SPVector{n, d, FormalSum<SetPartition>::unit(p)}).sum);
  return SparseMatrix<Subset>(std::move(universe), std::move(rows));
}

SparseMatrix<Subset> pairing_matrix(int n, int d, QuotientCache& cache) {
  QuotientPtr q = cache.get(n, d);
  const auto kappa = enumerate_kappa_index(n, d);
  auto universe = make_universe(kappa);
  std::vector<FormalSum<Subset>> rows;
  rows.reserve(q->basis().size());
  for (const auto& p : q->basis()) {
    std::vector<std::pair<Subset, Rational>> terms;
    for (const auto& t : kappa)
      if (pair_value(p, t) == 1) terms.emplace_back(t, Rational(1));
    rows.push_back(FormalSum<Subset>(std::move(terms)));
  }
  return SparseMatrix<Subset>(std::move(universe), std::move(rows));
}

}  // namespace kappaq
