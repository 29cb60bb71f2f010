#include "kappaq/setcomb.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace kappaq {

namespace {

void check_ground(int n) {
  if (n < 0 || n > kMaxGround) throw std::invalid_argument("ground set size out of range");
}

}  // namespace

Subset::Subset(int n, std::uint32_t mask) : n_(n), mask_(mask) {
  check_ground(n);
  if (n < 32 && (mask >> n) != 0)
    throw std::invalid_argument("subset mask exceeds ground set");
}

Subset::Subset(int n, const std::vector<int>& members) : n_(n), mask_(0) {
  check_ground(n);
  for (int i : members) {
    if (i < 1 || i > n) throw std::invalid_argument("subset element out of range");
    mask_ |= 1u << (i - 1);
  }
}

Subset Subset::full(int n) {
  check_ground(n);
  return Subset(n, n == 0 ? 0u : (n == 32 ? ~0u : ((1u << n) - 1u)));
}

int Subset::size() const { return std::popcount(mask_); }

std::vector<int> Subset::members() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (int i = 1; i <= n_; ++i)
    if (contains(i)) out.push_back(i);
  return out;
}

Subset Subset::with(int i) const {
  if (i < 1 || i > n_) throw std::invalid_argument("element out of range");
  return Subset(n_, mask_ | (1u << (i - 1)));
}

Subset Subset::without(int i) const {
  if (i < 1 || i > n_) throw std::invalid_argument("element out of range");
  return Subset(n_, mask_ & ~(1u << (i - 1)));
}

Subset Subset::reground(int m) const { return Subset(m, mask_); }

bool Subset::operator<(const Subset& o) const {
  if (n_ != o.n_) return n_ < o.n_;
  std::uint32_t x = mask_, y = o.mask_;
  while (x != 0 && y != 0) {
    std::uint32_t lx = x & (0u - x), ly = y & (0u - y);
    if (lx != ly) return lx < ly;  // smaller minimal element wins
    x ^= lx;
    y ^= ly;
  }
  return x == 0 && y != 0;  // proper prefix is smaller
}

SetPartition::SetPartition(int n, std::vector<Subset> blocks)
    : n_(n), blocks_(std::move(blocks)) {
  check_ground(n);
  std::uint32_t seen = 0;
  for (const auto& b : blocks_) {
    if (b.ground_size() != n) throw std::invalid_argument("block over wrong ground set");
    if (b.is_empty()) throw std::invalid_argument("empty block");
    if (seen & b.mask()) throw std::invalid_argument("overlapping blocks");
    seen |= b.mask();
  }
  if (seen != Subset::full(n).mask()) throw std::invalid_argument("blocks do not cover [n]");
  std::sort(blocks_.begin(), blocks_.end());
}

bool SetPartition::has_block(const Subset& b) const {
  return std::binary_search(blocks_.begin(), blocks_.end(), b);
}

int SetPartition::block_of(int i) const {
  for (std::size_t k = 0; k < blocks_.size(); ++k)
    if (blocks_[k].contains(i)) return static_cast<int>(k);
  throw std::invalid_argument("element outside ground set");
}

bool SetPartition::operator<(const SetPartition& o) const {
  if (n_ != o.n_) return n_ < o.n_;
  return std::lexicographical_compare(blocks_.begin(), blocks_.end(),
                                      o.blocks_.begin(), o.blocks_.end());
}

OrientedBipartition::OrientedBipartition(Subset first, Subset second)
    : first_(std::move(first)), second_(std::move(second)) {
  const int n = first_.ground_size();
  if (second_.ground_size() != n) throw std::invalid_argument("sides over different ground sets");
  if (n < 1) throw std::invalid_argument("empty ground set");
  if (first_.mask() & second_.mask()) throw std::invalid_argument("sides overlap");
  if ((first_.mask() | second_.mask()) != Subset::full(n).mask())
    throw std::invalid_argument("sides do not cover [n]");
  if (!first_.contains(1)) throw std::invalid_argument("1 must lie in the first side");
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  const int n = static_cast<int>(images_.size());
  check_ground(n);
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (int v : images_) {
    if (v < 1 || v > n || seen[static_cast<std::size_t>(v - 1)])
      throw std::invalid_argument("not a permutation of [n]");
    seen[static_cast<std::size_t>(v - 1)] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> img(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) img[static_cast<std::size_t>(i - 1)] = i;
  return Permutation(std::move(img));
}

Permutation Permutation::inverse() const {
  std::vector<int> img(images_.size());
  for (int i = 1; i <= degree(); ++i) img[static_cast<std::size_t>(apply(i) - 1)] = i;
  return Permutation(std::move(img));
}

Permutation Permutation::operator*(const Permutation& h) const {
  if (degree() != h.degree()) throw std::invalid_argument("degree mismatch");
  std::vector<int> img(images_.size());
  for (int i = 1; i <= degree(); ++i) img[static_cast<std::size_t>(i - 1)] = apply(h.apply(i));
  return Permutation(std::move(img));
}

std::vector<SetPartition> enumerate_partitions(int n, int parts) {
  check_ground(n);
  if (n < 1 || parts < 1 || parts > n)
    throw std::invalid_argument("block count out of range");
  // Restricted growth strings: a[0] = 0, a[i] <= max(a[0..i-1]) + 1, with
  // exactly `parts` distinct values.
  std::vector<SetPartition> out;
  std::vector<std::uint32_t> masks(static_cast<std::size_t>(parts), 0);

  auto emit = [&]() {
    std::vector<Subset> blocks;
    blocks.reserve(static_cast<std::size_t>(parts));
    for (std::uint32_t m : masks) blocks.emplace_back(n, m);
    out.emplace_back(n, std::move(blocks));
  };

  // rec(i, used): position i (0-based), `used` block values so far.
  auto rec = [&](auto&& self, int i, int used) -> void {
    if (i == n) {
      if (used == parts) emit();
      return;
    }
    const int remaining = n - i;
    for (int v = 0; v < std::min(used + 1, parts); ++v) {
      const int used2 = (v == used) ? used + 1 : used;
      if (used2 + (remaining - 1) < parts) continue;  // cannot reach `parts`
      masks[static_cast<std::size_t>(v)] |= 1u << i;
      self(self, i + 1, used2);
      masks[static_cast<std::size_t>(v)] &= ~(1u << i);
    }
  };
  rec(rec, 0, 0);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Subset> enumerate_kappa_index(int n, int d) {
  check_ground(n);
  if (n < 1 || d < -3) throw std::invalid_argument("invalid kappa index parameters");
  const int min_size = d + 3;
  std::vector<Subset> out;
  for (std::uint32_t m = 0; m < (1u << n); ++m) {
    const int sz = std::popcount(m);
    if (sz >= min_size && (sz - min_size) % 2 == 0) out.emplace_back(n, m);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<OrientedBipartition> enumerate_bipartitions(int n) {
  check_ground(n);
  if (n < 1) throw std::invalid_argument("empty ground set");
  const std::uint32_t full = Subset::full(n).mask();
  std::vector<OrientedBipartition> out;
  out.reserve(1u << (n - 1));
  for (std::uint32_t m = 0; m < (1u << n); ++m) {
    if (!(m & 1u)) continue;  // 1 lies in the first side
    out.emplace_back(Subset(n, m), Subset(n, full & ~m));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Subset> enumerate_subsets(int n) {
  check_ground(n);
  std::vector<Subset> out;
  out.reserve(1u << n);
  for (std::uint32_t m = 0; m < (1u << n); ++m) out.emplace_back(n, m);
  std::sort(out.begin(), out.end());
  return out;
}

Subset act(const Permutation& g, const Subset& t) {
  if (g.degree() != t.ground_size()) throw std::invalid_argument("degree mismatch");
  std::uint32_t m = 0;
  for (int i = 1; i <= t.ground_size(); ++i)
    if (t.contains(i)) m |= 1u << (g.apply(i) - 1);
  return Subset(t.ground_size(), m);
}

SetPartition act(const Permutation& g, const SetPartition& p) {
  std::vector<Subset> blocks;
  blocks.reserve(p.blocks().size());
  for (const auto& b : p.blocks()) blocks.push_back(act(g, b));
  return SetPartition(p.ground_size(), std::move(blocks));
}

OrientedBipartition act(const Permutation& g, const OrientedBipartition& b) {
  Subset f = act(g, b.first()), s = act(g, b.second());
  if (!f.contains(1)) std::swap(f, s);
  return OrientedBipartition(std::move(f), std::move(s));
}

long long character_fixed_points(int n, int d, const Permutation& g) {
  if (n < 4 || d < 1 || d > n - 3) throw std::invalid_argument("cell out of range");
  if (g.degree() != n) throw std::invalid_argument("degree mismatch");
  long long count = 0;
  for (const auto& t : enumerate_kappa_index(n, d))
    if (act(g, t) == t) ++count;
  return count;
}

namespace {

std::string join_ints(const std::vector<int>& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ',';
    os << v[i];
  }
  return os.str();
}

}  // namespace

std::string encode(const Subset& t) { return join_ints(t.members()); }

std::string encode(const SetPartition& p) {
  std::ostringstream os;
  for (std::size_t i = 0; i < p.blocks().size(); ++i) {
    if (i) os << '|';
    os << encode(p.blocks()[i]);
  }
  return os.str();
}

std::string encode(const OrientedBipartition& b) {
  return encode(b.first()) + "||" + encode(b.second());
}

std::string encode(const Permutation& g) { return join_ints(g.images()); }

Permutation parse_permutation(const std::string& text) {
  std::vector<int> images;
  std::istringstream is(text);
  std::string tok;
  while (std::getline(is, tok, ',')) {
    std::size_t pos = 0;
    int v;
    try {
      v = std::stoi(tok, &pos);
    } catch (const std::exception&) {
      throw std::invalid_argument("malformed permutation: " + text);
    }
    while (pos < tok.size() && std::isspace(static_cast<unsigned char>(tok[pos]))) ++pos;
    if (pos != tok.size()) throw std::invalid_argument("malformed permutation: " + text);
    images.push_back(v);
  }
  if (images.empty()) throw std::invalid_argument("empty permutation");
  return Permutation(std::move(images));
}

}  // namespace kappaq
