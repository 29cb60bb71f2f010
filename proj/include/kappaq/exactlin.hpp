#ifndef KAPPAQ_EXACTLIN_HPP
#define KAPPAQ_EXACTLIN_HPP

#include <algorithm>
#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <vector>

#include "kappaq/formal_sum.hpp"
#include "kappaq/rational.hpp"

namespace kappaq {

using ColIndex = std::int32_t;
using IndexTerm = std::pair<ColIndex, Rational>;
// Sparse vector in column-index space: sorted by column, no zero coefficients.
using IndexVec = std::vector<IndexTerm>;

namespace detail {

// v + c*w, sorted merge.
IndexVec axpy(const IndexVec& v, const Rational& c, const IndexVec& w);

// Maintains the reduced row echelon form of the span of everything inserted.
// Invariants: every row's leading (smallest-column) coefficient is 1, and a
// leading column appears in no other row. Tails therefore live on free
// columns only, which keeps reduction of new vectors non-cascading.
class EchelonCore {
 public:
  explicit EchelonCore(ColIndex ncols);

  ColIndex ncols() const { return ncols_; }
  int rank() const { return static_cast<int>(rows_.size()); }

  IndexVec reduce(IndexVec v) const;
  bool insert(IndexVec v);  // true iff the rank grew

  // Rows sorted by leading column.
  std::vector<IndexVec> sorted_rows() const;
  std::vector<ColIndex> leading_columns() const;  // sorted
  std::vector<ColIndex> free_columns() const;     // sorted
  bool is_leading(ColIndex c) const { return row_of_lead_[c] >= 0; }

 private:
  ColIndex ncols_;
  std::vector<IndexVec> rows_;            // append-only slots
  std::vector<std::int32_t> row_of_lead_; // column -> slot, -1 if free
};

}  // namespace detail

// Ordered set of column labels; the order *is* the canonical column order.
template <class Label>
class Universe {
 public:
  Universe() = default;
  explicit Universe(std::vector<Label> labels) : labels_(std::move(labels)) {
    std::sort(labels_.begin(), labels_.end());
    labels_.erase(std::unique(labels_.begin(), labels_.end()), labels_.end());
  }

  std::size_t size() const { return labels_.size(); }
  const Label& label(ColIndex i) const { return labels_.at(static_cast<std::size_t>(i)); }
  const std::vector<Label>& labels() const { return labels_; }

  std::optional<ColIndex> find(const Label& l) const {
    auto it = std::lower_bound(labels_.begin(), labels_.end(), l);
    if (it == labels_.end() || !(*it == l)) return std::nullopt;
    return static_cast<ColIndex>(it - labels_.begin());
  }

  ColIndex index_of(const Label& l) const {
    auto i = find(l);
    if (!i) throw std::invalid_argument("label outside declared universe");
    return *i;
  }

 private:
  std::vector<Label> labels_;
};

template <class Label>
using UniversePtr = std::shared_ptr<const Universe<Label>>;

template <class Label>
UniversePtr<Label> make_universe(std::vector<Label> labels) {
  return std::make_shared<const Universe<Label>>(std::move(labels));
}

template <class Label>
IndexVec to_indices(const FormalSum<Label>& v, const Universe<Label>& u) {
  IndexVec out;
  out.reserve(v.n_terms());
  for (const auto& [label, coeff] : v.terms())
    out.emplace_back(u.index_of(label), coeff);
  // label order == column order, so the result is already sorted
  return out;
}

template <class Label>
FormalSum<Label> to_sum(const IndexVec& v, const Universe<Label>& u) {
  std::vector<typename FormalSum<Label>::Term> terms;
  terms.reserve(v.size());
  for (const auto& [col, coeff] : v) terms.emplace_back(u.label(col), coeff);
  return FormalSum<Label>(std::move(terms));
}

template <class Label>
class SparseMatrix {
 public:
  SparseMatrix(UniversePtr<Label> universe, std::vector<FormalSum<Label>> rows)
      : universe_(std::move(universe)), rows_(std::move(rows)) {
    if (!universe_) throw std::invalid_argument("null universe");
    for (const auto& r : rows_)
      for (const auto& t : r.terms()) universe_->index_of(t.first);
  }

  std::size_t n_rows() const { return rows_.size(); }
  std::size_t n_cols() const { return universe_->size(); }
  const std::vector<FormalSum<Label>>& rows() const { return rows_; }
  const Universe<Label>& universe() const { return *universe_; }
  UniversePtr<Label> universe_ptr() const { return universe_; }

  // Rows become columns; the new column labels are the old row indices.
  SparseMatrix<ColIndex> transposed() const {
    std::vector<ColIndex> row_ids(rows_.size());
    for (std::size_t i = 0; i < rows_.size(); ++i) row_ids[i] = static_cast<ColIndex>(i);
    std::vector<std::vector<typename FormalSum<ColIndex>::Term>> cols(universe_->size());
    for (std::size_t i = 0; i < rows_.size(); ++i)
      for (const auto& [label, coeff] : rows_[i].terms())
        cols[static_cast<std::size_t>(universe_->index_of(label))]
            .emplace_back(static_cast<ColIndex>(i), coeff);
    std::vector<FormalSum<ColIndex>> trows;
    trows.reserve(cols.size());
    for (auto& c : cols) trows.emplace_back(FormalSum<ColIndex>(std::move(c)));
    return SparseMatrix<ColIndex>(make_universe(std::move(row_ids)), std::move(trows));
  }

 private:
  UniversePtr<Label> universe_;
  std::vector<FormalSum<Label>> rows_;
};

// Row space in reduced echelon form: rows ordered by leading label, leading
// coefficients 1, each leading label absent from every other row.
template <class Label>
class Subspace {
 public:
  Subspace(UniversePtr<Label> universe, detail::EchelonCore core)
      : universe_(std::move(universe)), core_(std::move(core)) {}

  int rank() const { return core_.rank(); }
  const Universe<Label>& universe() const { return *universe_; }
  UniversePtr<Label> universe_ptr() const { return universe_; }

  std::vector<FormalSum<Label>> echelon_rows() const {
    std::vector<FormalSum<Label>> out;
    for (const auto& r : core_.sorted_rows()) out.push_back(to_sum(r, *universe_));
    return out;
  }

  std::vector<Label> leading_labels() const { return labels_for(core_.leading_columns()); }
  std::vector<Label> free_labels() const { return labels_for(core_.free_columns()); }

  // Canonical representative of v modulo this subspace.
  FormalSum<Label> reduce(const FormalSum<Label>& v) const {
    return to_sum(core_.reduce(to_indices(v, *universe_)), *universe_);
  }

  bool contains(const FormalSum<Label>& v) const {
    return core_.reduce(to_indices(v, *universe_)).empty();
  }

  const detail::EchelonCore& core() const { return core_; }

 private:
  std::vector<Label> labels_for(const std::vector<ColIndex>& cols) const {
    std::vector<Label> out;
    out.reserve(cols.size());
    for (ColIndex c : cols) out.push_back(universe_->label(c));
    return out;
  }

  UniversePtr<Label> universe_;
  detail::EchelonCore core_;
};

// Streaming echelonizer: feed generators one at a time, then finish().
template <class Label>
class EchelonBuilder {
 public:
  explicit EchelonBuilder(UniversePtr<Label> universe)
      : universe_(std::move(universe)),
        core_(static_cast<ColIndex>(universe_->size())) {}

  void add(const FormalSum<Label>& v) { core_.insert(to_indices(v, *universe_)); }
  void add_indexed(IndexVec v) { core_.insert(std::move(v)); }
  int rank() const { return core_.rank(); }
  Subspace<Label> finish() && { return Subspace<Label>(std::move(universe_), std::move(core_)); }

 private:
  UniversePtr<Label> universe_;
  detail::EchelonCore core_;
};

template <class Label>
Subspace<Label> echelonize(const std::vector<FormalSum<Label>>& generators,
                           UniversePtr<Label> universe) {
  EchelonBuilder<Label> b(std::move(universe));
  for (const auto& g : generators) b.add(g);
  return std::move(b).finish();
}

// Convenience: universe = union of the generators' labels.
template <class Label>
Subspace<Label> echelonize(const std::vector<FormalSum<Label>>& generators) {
  std::vector<Label> labels;
  for (const auto& g : generators)
    for (const auto& t : g.terms()) labels.push_back(t.first);
  return echelonize(generators, make_universe(std::move(labels)));
}

template <class Label>
int rank(const SparseMatrix<Label>& m) {
  EchelonBuilder<Label> b(m.universe_ptr());
  for (const auto& r : m.rows()) b.add(r);
  return b.rank();
}

// Right null space of m (solutions x with m*x = 0), as a Subspace over the
// same column universe.
template <class Label>
Subspace<Label> kernel(const SparseMatrix<Label>& m) {
  EchelonBuilder<Label> rowspace(m.universe_ptr());
  for (const auto& r : m.rows()) rowspace.add(r);
  Subspace<Label> rs = std::move(rowspace).finish();

  const auto rows = rs.core().sorted_rows();
  EchelonBuilder<Label> null(m.universe_ptr());
  for (ColIndex f : rs.core().free_columns()) {
    IndexVec entries;
    entries.emplace_back(f, Rational(1));
    for (const auto& row : rows) {
      auto it = std::lower_bound(
          row.begin(), row.end(), f,
          [](const IndexTerm& t, ColIndex c) { return t.first < c; });
      if (it != row.end() && it->first == f)
        entries.emplace_back(row.front().first, -it->second);
    }
    std::sort(entries.begin(), entries.end(),
              [](const IndexTerm& a, const IndexTerm& b) { return a.first < b.first; });
    null.add_indexed(std::move(entries));
  }
  return std::move(null).finish();
}

template <class Label>
FormalSum<Label> reduce_mod(const FormalSum<Label>& v, const Subspace<Label>& s) {
  return s.reduce(v);
}

}  // namespace kappaq

#endif
