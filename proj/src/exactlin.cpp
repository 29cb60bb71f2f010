#include "kappaq/exactlin.hpp"

namespace kappaq::detail {

IndexVec axpy(const IndexVec& v, const Rational& c, const IndexVec& w) {
  if (c == 0 || w.empty()) return v;
  IndexVec out;
  out.reserve(v.size() + w.size());
  std::size_t i = 0, j = 0;
  while (i < v.size() || j < w.size()) {
    if (j == w.size() || (i < v.size() && v[i].first < w[j].first)) {
      out.push_back(v[i++]);
    } else if (i == v.size() || w[j].first < v[i].first) {
      out.emplace_back(w[j].first, c * w[j].second);
      ++j;
    } else {
      Rational val = v[i].second + c * w[j].second;
      if (val != 0) out.emplace_back(v[i].first, std::move(val));
      ++i;
      ++j;
    }
  }
  return out;
}

EchelonCore::EchelonCore(ColIndex ncols)
    : ncols_(ncols), row_of_lead_(static_cast<std::size_t>(ncols), -1) {
  if (ncols < 0) throw std::invalid_argument("negative column count");
}

IndexVec EchelonCore::reduce(IndexVec v) const {
  // Entries added by an elimination sit on free columns only (RREF), so one
  // ascending sweep suffices; positions before the current column never need
  // another look.
  std::size_t i = 0;
  while (i < v.size()) {
    ColIndex c = v[i].first;
    std::int32_t r = row_of_lead_[c];
    if (r < 0) {
      ++i;
      continue;
    }
    v = axpy(v, -v[i].second, rows_[static_cast<std::size_t>(r)]);
    i = static_cast<std::size_t>(
        std::upper_bound(v.begin(), v.end(), c,
                         [](ColIndex col, const IndexTerm& t) { return col < t.first; }) -
        v.begin());
  }
  return v;
}

bool EchelonCore::insert(IndexVec v) {
  v = reduce(std::move(v));
  if (v.empty()) return false;

  const Rational lead_coeff = v.front().second;
  if (lead_coeff != 1)
    for (auto& t : v) t.second /= lead_coeff;
  const ColIndex lead = v.front().first;

  // Back-substitute so the new leading column vanishes from older rows.
  for (auto& row : rows_) {
    auto it = std::lower_bound(
        row.begin(), row.end(), lead,
        [](const IndexTerm& t, ColIndex c) { return t.first < c; });
    if (it != row.end() && it->first == lead) row = axpy(row, -it->second, v);
  }

  row_of_lead_[lead] = static_cast<std::int32_t>(rows_.size());
  rows_.push_back(std::move(v));
  return true;
}

std::vector<IndexVec> EchelonCore::sorted_rows() const {
  std::vector<IndexVec> out = rows_;
  std::sort(out.begin(), out.end(),
            [](const IndexVec& a, const IndexVec& b) { return a.front().first < b.front().first; });
  return out;
}

std::vector<ColIndex> EchelonCore::leading_columns() const {
  std::vector<ColIndex> out;
  for (ColIndex c = 0; c < ncols_; ++c)
    if (row_of_lead_[c] >= 0) out.push_back(c);
  return out;
}

std::vector<ColIndex> EchelonCore::free_columns() const {
  std::vector<ColIndex> out;
  for (ColIndex c = 0; c < ncols_; ++c)
    if (row_of_lead_[c] < 0) out.push_back(c);
  return out;
}

}  // namespace kappaq::detail
