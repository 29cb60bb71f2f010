#ifndef KAPPAQ_FORMAL_SUM_HPP
#define KAPPAQ_FORMAL_SUM_HPP

#include <algorithm>
#include <type_traits>
#include <utility>
#include <vector>

#include "kappaq/rational.hpp"

namespace kappaq {

// Finite formal rational combination of basis labels. Terms are kept sorted
// by label and never carry a zero coefficient, so operator== is semantic
// equality.
template <class Label>
class FormalSum {
 public:
  using Term = std::pair<Label, Rational>;

  FormalSum() = default;

  // Canonicalizes: sorts, merges equal labels, drops zeros.
  explicit FormalSum(std::vector<Term> terms) : terms_(std::move(terms)) {
    std::sort(terms_.begin(), terms_.end(),
              [](const Term& a, const Term& b) { return a.first < b.first; });
    std::size_t out = 0;
    for (std::size_t i = 0; i < terms_.size();) {
      Label lab = terms_[i].first;
      Rational c = terms_[i].second;
      for (++i; i < terms_.size() && terms_[i].first == lab; ++i) c += terms_[i].second;
      if (c != 0) terms_[out++] = Term(std::move(lab), std::move(c));
    }
    terms_.erase(terms_.begin() + static_cast<std::ptrdiff_t>(out), terms_.end());
  }

  static FormalSum unit(Label label, Rational coeff = Rational(1)) {
    FormalSum s;
    if (coeff != 0) s.terms_.emplace_back(std::move(label), std::move(coeff));
    return s;
  }

  bool zero() const { return terms_.empty(); }
  std::size_t n_terms() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }

  Rational coefficient(const Label& label) const {
    auto it = std::lower_bound(
        terms_.begin(), terms_.end(), label,
        [](const Term& t, const Label& l) { return t.first < l; });
    if (it != terms_.end() && it->first == label) return it->second;
    return Rational(0);
  }

  void add_term(const Label& label, const Rational& coeff) {
    if (coeff == 0) return;
    auto it = std::lower_bound(
        terms_.begin(), terms_.end(), label,
        [](const Term& t, const Label& l) { return t.first < l; });
    if (it != terms_.end() && it->first == label) {
      it->second += coeff;
      if (it->second == 0) terms_.erase(it);
    } else {
      terms_.insert(it, Term(label, coeff));
    }
  }

  FormalSum& operator+=(const FormalSum& o) { return axpy(Rational(1), o); }
  FormalSum& operator-=(const FormalSum& o) { return axpy(Rational(-1), o); }

  // *this += c * o, by sorted merge.
  FormalSum& axpy(const Rational& c, const FormalSum& o) {
    if (c == 0 || o.terms_.empty()) return *this;
    std::vector<Term> merged;
    merged.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() || j < o.terms_.size()) {
      if (j == o.terms_.size() ||
          (i < terms_.size() && terms_[i].first < o.terms_[j].first)) {
        merged.push_back(std::move(terms_[i++]));
      } else if (i == terms_.size() || o.terms_[j].first < terms_[i].first) {
        merged.emplace_back(o.terms_[j].first, c * o.terms_[j].second);
        ++j;
      } else {
        Rational v = terms_[i].second + c * o.terms_[j].second;
        if (v != 0) merged.emplace_back(std::move(terms_[i].first), std::move(v));
        ++i;
        ++j;
      }
    }
    terms_ = std::move(merged);
    return *this;
  }

  FormalSum operator+(const FormalSum& o) const { FormalSum r = *this; r += o; return r; }
  FormalSum operator-(const FormalSum& o) const { FormalSum r = *this; r -= o; return r; }
  FormalSum operator-() const { FormalSum r = *this; for (auto& t : r.terms_) t.second = -t.second; return r; }
  FormalSum& operator*=(const Rational& c) {
    if (c == 0) { terms_.clear(); return *this; }
    for (auto& t : terms_) t.second *= c;
    return *this;
  }
  FormalSum operator*(const Rational& c) const { FormalSum r = *this; r *= c; return r; }

  bool operator==(const FormalSum& o) const { return terms_ == o.terms_; }
  bool operator!=(const FormalSum& o) const { return !(*this == o); }

  // Linear extension of a map on labels. F takes a label and returns a
  // FormalSum over the target label type.
  template <class F>
  auto mapped(F&& f) const {
    using Out = std::decay_t<decltype(f(std::declval<const Label&>()))>;
    Out result;
    for (const auto& [label, coeff] : terms_) result.axpy(coeff, f(label));
    return result;
  }

 private:
  std::vector<Term> terms_;
};

}  // namespace kappaq

#endif
