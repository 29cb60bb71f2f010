#ifndef KAPPAQ_SETCOMB_HPP
#define KAPPAQ_SETCOMB_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace kappaq {

// Ground sets are [n] = {1, ..., n}, 1-based throughout. Masks keep n <= 30.
inline constexpr int kMaxGround = 30;

class Subset {
 public:
  Subset(int n, std::uint32_t mask);
  Subset(int n, const std::vector<int>& members);
  static Subset empty(int n) { return Subset(n, 0u); }
  static Subset full(int n);

  int ground_size() const { return n_; }
  int size() const;
  std::uint32_t mask() const { return mask_; }
  bool contains(int i) const { return (mask_ >> (i - 1)) & 1u; }
  bool is_empty() const { return mask_ == 0; }
  bool meets(const Subset& o) const { return (mask_ & o.mask_) != 0; }
  std::vector<int> members() const;

  Subset with(int i) const;
  Subset without(int i) const;
  // Same members over ground set [m].
  Subset reground(int m) const;

  bool operator==(const Subset& o) const { return n_ == o.n_ && mask_ == o.mask_; }
  bool operator!=(const Subset& o) const { return !(*this == o); }
  // Lexicographic on the sorted member list (canonical encoding order).
  bool operator<(const Subset& o) const;

 private:
  std::int32_t n_;
  std::uint32_t mask_;
};

// Partition of [n] into nonempty, pairwise disjoint blocks covering [n].
// Canonical form: blocks sorted by minimal element.
class SetPartition {
 public:
  SetPartition(int n, std::vector<Subset> blocks);

  int ground_size() const { return n_; }
  int num_blocks() const { return static_cast<int>(blocks_.size()); }
  const std::vector<Subset>& blocks() const { return blocks_; }
  const Subset& block(int i) const { return blocks_.at(static_cast<std::size_t>(i)); }
  bool has_block(const Subset& b) const;
  // Index of the block containing element i.
  int block_of(int i) const;

  bool operator==(const SetPartition& o) const { return n_ == o.n_ && blocks_ == o.blocks_; }
  bool operator!=(const SetPartition& o) const { return !(*this == o); }
  bool operator<(const SetPartition& o) const;

 private:
  std::int32_t n_;
  std::vector<Subset> blocks_;
};

// Ordered pair (first, second) with first ∪ second = [n] disjointly and
// 1 ∈ first; second may be empty.
class OrientedBipartition {
 public:
  OrientedBipartition(Subset first, Subset second);

  int ground_size() const { return first_.ground_size(); }
  const Subset& first() const { return first_; }
  const Subset& second() const { return second_; }

  bool operator==(const OrientedBipartition& o) const {
    return first_ == o.first_ && second_ == o.second_;
  }
  bool operator!=(const OrientedBipartition& o) const { return !(*this == o); }
  bool operator<(const OrientedBipartition& o) const {
    if (first_ != o.first_) return first_ < o.first_;
    return second_ < o.second_;
  }

 private:
  Subset first_, second_;
};

// Permutation of [n], stored as the image list: images[i-1] = g(i).
class Permutation {
 public:
  explicit Permutation(std::vector<int> images);
  static Permutation identity(int n);

  int degree() const { return static_cast<int>(images_.size()); }
  int apply(int i) const { return images_.at(static_cast<std::size_t>(i - 1)); }
  const std::vector<int>& images() const { return images_; }
  Permutation inverse() const;
  // (g * h)(i) = g(h(i))
  Permutation operator*(const Permutation& h) const;

  bool operator==(const Permutation& o) const { return images_ == o.images_; }

 private:
  std::vector<int> images_;
};

// --- enumeration (canonical order = label order) ---

// All partitions of [n] into exactly `parts` blocks; count = S(n, parts).
std::vector<SetPartition> enumerate_partitions(int n, int parts);

// K^d_n = { T ⊆ [n] : |T| >= d+3 and |T| ≡ d+3 (mod 2) }, valid for d >= -3.
std::vector<Subset> enumerate_kappa_index(int n, int d);

// All 2^(n-1) oriented bipartitions of [n], including ([n], ∅).
std::vector<OrientedBipartition> enumerate_bipartitions(int n);

// All 2^n subsets of [n].
std::vector<Subset> enumerate_subsets(int n);

// --- S_n action (results re-canonicalized) ---

Subset act(const Permutation& g, const Subset& t);
SetPartition act(const Permutation& g, const SetPartition& p);
OrientedBipartition act(const Permutation& g, const OrientedBipartition& b);

// #{ T in K^d_n : act(g, T) == T }; requires 1 <= d <= n-3.
long long character_fixed_points(int n, int d, const Permutation& g);

// --- text encodings ---

std::string encode(const Subset& t);               // "1,3,4"; empty set -> ""
std::string encode(const SetPartition& p);         // "1,2|3|4,5"
std::string encode(const OrientedBipartition& b);  // "1,3||2,4"
std::string encode(const Permutation& g);          // one-line "2,1,3,4"

Permutation parse_permutation(const std::string& text);

}  // namespace kappaq

#endif
