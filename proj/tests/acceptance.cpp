// One line per acceptance criterion; exits nonzero if any fails.
#include <chrono>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "kappaq/strata.hpp"
#include "kappaq/verify.hpp"

using namespace kappaq;

namespace {

bool g_all = true;

void report(int k, const std::string& name, bool pass, const std::string& detail) {
  std::cout << (pass ? "[PASS]" : "[FAIL]") << " criterion " << k << ": " << name;
  if (!detail.empty()) std::cout << " (" << detail << ")";
  std::cout << std::endl;
  g_all = g_all && pass;
}

bool all_pass(const std::vector<CheckReport>& reports) {
  for (const auto& r : reports)
    if (!r.pass) return false;
  return !reports.empty();
}

long long tail_binomial(int n, int d) {
  auto binom = [](int m, int k) {
    long long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (m - k + i) / i;
    return r;
  };
  long long total = 0;
  for (int s = d + 3; s <= n; s += 2) total += binom(n, s);
  return total;
}

SetPartition singletons(int n) {
  std::vector<Subset> blocks;
  for (int i = 1; i <= n; ++i) blocks.emplace_back(n, std::vector<int>{i});
  return SetPartition(n, std::move(blocks));
}

}  // namespace

int main() {
  VerifyContext vc;

  {
    const auto t0 = std::chrono::steady_clock::now();
    static const int want[] = {1, 5, 16, 42, 99};
    bool ok = true;
    std::string dims;
    for (int n = 4; n <= 8; ++n) {
      const int dim = vc.quotient(n, 1)->dimension();
      const long long closed = (1LL << (n - 1)) - 1LL * n * (n - 1) / 2 - 1;
      ok = ok && dim == want[n - 4] && dim == closed;
      dims += (dims.empty() ? "" : ",") + std::to_string(dim);
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    ok = ok && secs <= 120.0;
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.1fs", secs);
    report(1, "degree-one quotient dimensions by exact rank", ok,
           "dims " + dims + " in " + buf);
  }

  {
    bool ok = true;
    int cells = 0;
    for (int n = 4; n <= 8; ++n)
      for (int d = 1; d <= n - 3; ++d, ++cells)
        ok = ok && vc.quotient(n, d)->dimension() == tail_binomial(n, d);
    report(2, "quotient dimensions equal index-set counts", ok,
           std::to_string(cells) + " cells, n <= 8");
  }

  {
    const auto reports = check_theorem_root(8, vc);
    report(3, "expansion matrix square and invertible", all_pass(reports),
           std::to_string(reports.size()) + " cells, n <= 8");
  }

  {
    bool ok = true;
    int cells = 0;
    for (int n = 4; n <= 7; ++n)
      for (int d = 1; d <= n - 3; ++d, ++cells) {
        auto m = vc.pairing_mat(n, d);
        ok = ok && m.n_rows() == m.n_cols() &&
             rank(m) == static_cast<int>(m.n_cols()) &&
             static_cast<int>(m.n_rows()) == vc.quotient(n, d)->dimension();
      }
    report(4, "pairing matrix invertible", ok,
           std::to_string(cells) + " cells, n <= 7");
  }

  {
    const auto reports = check_exact_sequences(7, vc);
    int vacuous = 0;
    for (const auto& r : reports) vacuous += r.vacuous;
    report(5, "forgetful sequences exact", all_pass(reports),
           std::to_string(reports.size()) + " cells, " + std::to_string(vacuous) +
               " onto the zero space");
  }

  {
    const auto reports = check_commuting_squares(6, vc);
    report(6, "insertion and deletion commute with forgetting",
           all_pass(reports), std::to_string(reports.size()) + " cells, n <= 6");
  }

  {
    const auto reports = check_surjectivity_lemmas(8, vc);
    report(7, "parity sums and low expansions surjective", all_pass(reports),
           "n <= 8");
  }

  {
    bool ok = true;
    const OrientedBipartition b1(Subset(1, std::vector<int>{1}), Subset::empty(1));
    ok = ok && odd_map(b1).sum ==
                   FormalSum<Subset>::unit(Subset(1, std::vector<int>{1}), Rational(-1));
    ok = ok && even_map(b1).sum ==
                   FormalSum<Subset>::unit(Subset::empty(1), Rational(-2));
    ok = ok && phi_tilde(SPVector{2, -1, FormalSum<SetPartition>::unit(singletons(2))})
                       .sum == FormalSum<Subset>::unit(Subset::full(2));
    ok = ok && phi_tilde(SPVector{3, 0, FormalSum<SetPartition>::unit(singletons(3))})
                       .sum == FormalSum<Subset>::unit(Subset::full(3));
    for (int n = 4; n <= 8; ++n) {
      auto q = vc.quotient(n, n - 3);
      ok = ok && q->dimension() == 1 && q->basis().size() == 1 &&
           q->basis().front() == singletons(n) &&
           phi_tilde(SPVector{n, n - 3, FormalSum<SetPartition>::unit(singletons(n))})
                   .sum == FormalSum<Subset>::unit(Subset::full(n));
    }
    report(8, "hand-computed base cases reproduced", ok, "");
  }

  {
    const auto reports = check_strata_consistency(7, vc);
    long long type_i = 0;
    bool ok = all_pass(reports);
    for (const auto& r : reports) {
      if (!r.pass || !r.witness.contains("type_i")) continue;
      type_i += r.witness["type_i"].get<long long>();
    }
    ok = ok && type_i > 0;
    report(9, "tree-level and partition-level forgetting agree", ok,
           std::to_string(type_i) + " single-big-vertex trees, n <= 7");
  }

  {
    bool ok = all_pass(check_pairing_properties(7, vc));
    int flipped = 0;
    for (FaultKind fault : {FaultKind::RelationSign, FaultKind::PairingEntry}) {
      VerifyOptions opt;
      opt.n_max = 5;
      opt.fault = fault;
      const VerifyResult res = run_suite(opt);
      if (!res.all_pass) ++flipped;
    }
    ok = ok && flipped == 2;
    report(10, "annihilation, equivariance, and fault sensitivity", ok,
           "n <= 7; both fault modes force failures");
  }

  return g_all ? 0 : 1;
}
