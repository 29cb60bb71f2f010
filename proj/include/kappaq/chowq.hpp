#ifndef KAPPAQ_CHOWQ_HPP
#define KAPPAQ_CHOWQ_HPP

#include <future>
#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "kappaq/exactlin.hpp"
#include "kappaq/setcomb.hpp"

namespace kappaq {

// Element of the free space on partitions of [n] with d+3 blocks.
struct SPVector {
  int n = 0;
  int d = 0;
  FormalSum<SetPartition> sum;
};

// Throws if some label is not a partition of [n] into d+3 blocks.
void validate(const SPVector& v);

// Generators of the relation subspace R_{d,n}: for each partition of [n]
// into d+4 parts and each choice of four distinct parts (P1,P2,P3,P4),
//   {P1∪P2, P3, P4, ...} + {P1, P2, P3∪P4, ...}
// - {P1∪P3, P2, P4, ...} - {P1, P3, P2∪P4, ...}.
// Duplicate formal sums are removed. Valid for 1 <= d <= n-2; the top cells
// d = n-3, n-2 yield the empty list.
std::vector<SPVector> relation_generators(int n, int d);

// Q_{d,n} = (free space on SP_{d,n}) / R_{d,n}.
class QuotientSpace {
 public:
  QuotientSpace(int n, int d, UniversePtr<SetPartition> universe,
                Subspace<SetPartition> relations);

  int n() const { return n_; }
  int d() const { return d_; }
  int num_partitions() const { return static_cast<int>(universe_->size()); }
  int rank_relations() const { return relations_.rank(); }
  int dimension() const { return num_partitions() - rank_relations(); }

  const Universe<SetPartition>& universe() const { return *universe_; }
  UniversePtr<SetPartition> universe_ptr() const { return universe_; }
  const Subspace<SetPartition>& relations() const { return relations_; }

  // Canonical representatives of the quotient basis (free labels).
  const std::vector<SetPartition>& basis() const { return basis_; }
  UniversePtr<SetPartition> basis_universe() const { return basis_universe_; }

  // Canonical representative of [v] as a combination of basis labels.
  FormalSum<SetPartition> reduce(const FormalSum<SetPartition>& v) const {
    return relations_.reduce(v);
  }

 private:
  int n_, d_;
  UniversePtr<SetPartition> universe_;
  Subspace<SetPartition> relations_;
  std::vector<SetPartition> basis_;
  UniversePtr<SetPartition> basis_universe_;
};

// Requires n >= 4 and 1 <= d <= n-2 (d = n-2 gives the zero space; d <= 0 is
// refused: the relation family is only defined from one merge level up).
QuotientSpace build_quotient(int n, int d);

using QuotientPtr = std::shared_ptr<const QuotientSpace>;

// Thread-safe memo of built quotients; a cell is built exactly once.
class QuotientCache {
 public:
  QuotientPtr get(int n, int d);
  // Pre-seeds a cell; refused once the cell exists.
  void put(int n, int d, QuotientPtr q);

 private:
  std::mutex mu_;
  std::map<std::pair<int, int>, std::shared_future<QuotientPtr>> cells_;
};

// Forgets the largest mark v.n: a partition with {v.n} as a block maps to 0,
// otherwise v.n is deleted from its block. Result lives over [v.n - 1].
SPVector pushforward_lift(const SPVector& v);

// Appends the singleton {v.n + 1}: SP_{d,n} -> SP_{d+1,n+1}.
SPVector pullback_lift(const SPVector& v);

enum class MapKind { Pushforward, Pullback };

// Matrix of the induced map on quotients, rows indexed by the source basis,
// columns by the target basis (canonical quotient coordinates).
// Pushforward: Q_{d,n} -> Q_{d,n-1}; Pullback: Q_{d,n} -> Q_{d+1,n+1}.
SparseMatrix<SetPartition> quotient_map_matrix(MapKind kind, int n, int d,
                                               QuotientCache& cache);

}  // namespace kappaq

#endif
