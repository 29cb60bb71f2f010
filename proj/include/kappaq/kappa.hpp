#ifndef KAPPAQ_KAPPA_HPP
#define KAPPAQ_KAPPA_HPP

#include "kappaq/chowq.hpp"
#include "kappaq/exactlin.hpp"
#include "kappaq/setcomb.hpp"

namespace kappaq {

// Element of the free space on K^d_n.
struct KVector {
  int n = 0;
  int d = 0;
  FormalSum<Subset> sum;
};

void validate(const KVector& v);

enum class Parity { Even, Odd };

// Element of the free space on E_n (even subsets, ∅ included) or O_n.
struct ParityVector {
  int n = 0;
  Parity parity = Parity::Even;
  FormalSum<Subset> sum;
};

void validate(const ParityVector& v);

// <p, t> = 1 iff every block of p meets t.
int pair_value(const SetPartition& p, const Subset& t);

// phi~(Π) = Σ_{T in K^d_n, <Π,T> = 1} T, extended linearly. Compatible T
// are exactly the unions of one nonempty subset per block with |T| ≡ d+3
// (mod 2), so the expansion never scans all of K^d_n. Requires v.d >= -1.
KVector phi_tilde(const SPVector& v);

// alpha: T -> T ∪ {n+1}, K^d_n -> K^{d+1}_{n+1}.
KVector alpha(const KVector& v);
// beta kills labels containing the largest mark and keeps the rest:
// K^d_{v.n} -> K^d_{v.n - 1}.
KVector beta(const KVector& v);

ParityVector alpha(const ParityVector& v);  // parity flips
ParityVector beta(const ParityVector& v);   // parity kept

// odd_n((P1,P2)) = -Σ_{odd T ⊆ P1} T + Σ_{odd T ⊆ P2} T.
ParityVector odd_map(const OrientedBipartition& b);
// even_n((P1,P2)) = -Σ_{even T ⊆ P1} T - Σ_{even T ⊆ P2} T (∅ counts twice).
ParityVector even_map(const OrientedBipartition& b);

// gamma on pair spaces: (P1,P2) -> (P1∪{n+1},P2) - (P1,P2∪{n+1}).
FormalSum<OrientedBipartition> gamma_bipartition(const OrientedBipartition& b);

// gamma into 2-block partitions of [n+1]; a side that would become an empty
// block contributes nothing (such a "partition" pairs to zero with every T).
SPVector gamma_partition(const OrientedBipartition& b);

// Forgets the largest mark from whichever side carries it.
OrientedBipartition bipartition_pushforward(const OrientedBipartition& b);

// Rows = phi~ of the canonical quotient basis of Q_{d,n}, columns = K^d_n.
SparseMatrix<Subset> phi_matrix(int n, int d, QuotientCache& cache);

// Rows = quotient basis of Q_{d,n}, columns = K^d_n, entries <Π,T>. Built
// term by term from pair_value, independently of phi_tilde's expansion.
SparseMatrix<Subset> pairing_matrix(int n, int d, QuotientCache& cache);

}  // namespace kappaq

#endif
