#ifndef KAPPAQ_VERIFY_HPP
#define KAPPAQ_VERIFY_HPP

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "kappaq/chowq.hpp"
#include "kappaq/kappa.hpp"

namespace kappaq {

struct CheckReport {
  std::string check;
  std::optional<int> n;
  std::optional<int> d;
  bool pass = true;
  bool vacuous = false;           // pass over an empty index set
  nlohmann::json witness;         // summary on pass, counterexample on fail
};

nlohmann::json report_to_json(const CheckReport& r);

// Deterministic single-point mutations, used to prove the checks can fail.
// RelationSign flips one coefficient of one relation generator at (5,1);
// PairingEntry flips one <Π,T> value at (4,1); DropGenerator removes one
// (redundant) generator at (5,1).
enum class FaultKind { None, RelationSign, PairingEntry, DropGenerator };

// Shared state for one verification run: a quotient cache (pre-seeded with
// the faulted cell, so every consumer sees the mutation) and fault-aware
// pairing/phi evaluation.
class VerifyContext {
 public:
  explicit VerifyContext(FaultKind fault = FaultKind::None);

  FaultKind fault() const { return fault_; }
  QuotientCache& cache() { return cache_; }
  QuotientPtr quotient(int n, int d) { return cache_.get(n, d); }

  int pair(const SetPartition& p, const Subset& t) const;
  KVector phi(const SPVector& v) const;
  std::vector<SPVector> generators(int n, int d) const;
  SparseMatrix<Subset> phi_mat(int n, int d);
  SparseMatrix<Subset> pairing_mat(int n, int d);

 private:
  FaultKind fault_;
  QuotientCache cache_;
  std::optional<SetPartition> fault_p_;
  std::optional<Subset> fault_t_;
};

// Each check walks its (n,d) cells in canonical order and emits one report
// per cell (or per n where d plays no role).
std::vector<CheckReport> check_dimension_formula(int n_max, VerifyContext& vc);
std::vector<CheckReport> check_theorem_root(int n_max, VerifyContext& vc);
std::vector<CheckReport> check_exact_sequences(int n_max, VerifyContext& vc);
std::vector<CheckReport> check_commuting_squares(int n_max, VerifyContext& vc);
std::vector<CheckReport> check_surjectivity_lemmas(int n_max, VerifyContext& vc);
std::vector<CheckReport> check_strata_consistency(int n_max, VerifyContext& vc);
std::vector<CheckReport> check_pairing_properties(int n_max, VerifyContext& vc);

inline const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names = {
      "dimension", "root", "sequences", "squares",
      "surjectivity", "strata", "properties"};
  return names;
}

struct VerifyOptions {
  int n_max = 7;
  int threads = 1;
  std::vector<std::string> only;  // empty = all checks
  FaultKind fault = FaultKind::None;
};

struct VerifyResult {
  std::vector<CheckReport> reports;
  bool all_pass = true;
};

// Runs the selected checks; cell-level tasks may execute on several threads,
// but report order and content are independent of the thread count.
VerifyResult run_suite(const VerifyOptions& options);

std::string summary_table(const std::vector<CheckReport>& reports);

}  // namespace kappaq

#endif
