#include "kappaq/verify.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <cstdio>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "kappaq/strata.hpp"

namespace kappaq {

using nlohmann::json;

nlohmann::json report_to_json(const CheckReport& r) {
  json params = json::object();
  if (r.n) params["n"] = *r.n;
  if (r.d) params["d"] = *r.d;
  json j;
  j["check"] = r.check;
  j["params"] = std::move(params);
  j["status"] = r.pass ? "pass" : "fail";
  j["vacuous"] = r.vacuous;
  j["witness"] = r.witness;
  return j;
}

namespace {

// Fault targets. The relation fault lands at (5,1) because that is the
// smallest cell with a nonempty relation family; the pairing fault lands at
// (4,1) where the pairing matrix is 1x1, so the flip must zero it out.
constexpr int kRelFaultN = 5;
constexpr int kRelFaultD = 1;

std::vector<SPVector> mutated_generators(int n, int d, FaultKind fault) {
  std::vector<SPVector> gens = relation_generators(n, d);
  if (n != kRelFaultN || d != kRelFaultD) return gens;
  if (fault == FaultKind::DropGenerator) {
    gens.erase(gens.begin());
  } else if (fault == FaultKind::RelationSign) {
    std::vector<FormalSum<SetPartition>::Term> terms = gens.front().sum.terms();
    terms.front().second = -terms.front().second;
    gens.front().sum = FormalSum<SetPartition>(std::move(terms));
  }
  return gens;
}

}  // namespace

VerifyContext::VerifyContext(FaultKind fault) : fault_(fault) {
  if (fault_ == FaultKind::RelationSign || fault_ == FaultKind::DropGenerator) {
    const int n = kRelFaultN, d = kRelFaultD;
    auto universe = make_universe(enumerate_partitions(n, d + 3));
    EchelonBuilder<SetPartition> builder(universe);
    for (const auto& g : mutated_generators(n, d, fault_)) builder.add(g.sum);
    cache_.put(n, d, std::make_shared<const QuotientSpace>(
                         n, d, universe, std::move(builder).finish()));
  } else if (fault_ == FaultKind::PairingEntry) {
    fault_p_ = enumerate_partitions(4, 4).front();
    fault_t_ = enumerate_kappa_index(4, 1).front();
  }
}

int VerifyContext::pair(const SetPartition& p, const Subset& t) const {
  int v = pair_value(p, t);
  if (fault_ == FaultKind::PairingEntry && p == *fault_p_ && t == *fault_t_)
    return 1 - v;
  return v;
}

KVector VerifyContext::phi(const SPVector& v) const {
  KVector out = phi_tilde(v);
  if (fault_ == FaultKind::PairingEntry && v.n == fault_p_->ground_size() &&
      v.d == fault_p_->num_blocks() - 3) {
    Rational c = v.sum.coefficient(*fault_p_);
    if (c != 0) {
      int pv = pair_value(*fault_p_, *fault_t_);
      out.sum.add_term(*fault_t_, c * Rational(1 - 2 * pv));
    }
  }
  return out;
}

std::vector<SPVector> VerifyContext::generators(int n, int d) const {
  return mutated_generators(n, d, fault_);
}

SparseMatrix<Subset> VerifyContext::phi_mat(int n, int d) {
  QuotientPtr q = quotient(n, d);
  std::vector<FormalSum<Subset>> rows;
  rows.reserve(q->basis().size());
  for (const auto& p : q->basis())
    rows.push_back(phi(SPVector{n, d, FormalSum<SetPartition>::unit(p)}).sum);
  return SparseMatrix<Subset>(make_universe(enumerate_kappa_index(n, d)),
                              std::move(rows));
}

SparseMatrix<Subset> VerifyContext::pairing_mat(int n, int d) {
  QuotientPtr q = quotient(n, d);
  const std::vector<Subset> kset = enumerate_kappa_index(n, d);
  std::vector<FormalSum<Subset>> rows;
  rows.reserve(q->basis().size());
  for (const auto& p : q->basis()) {
    FormalSum<Subset> row;
    for (const auto& t : kset)
      if (pair(p, t) != 0) row.add_term(t, Rational(pair(p, t)));
    rows.push_back(std::move(row));
  }
  return SparseMatrix<Subset>(make_universe(kset), std::move(rows));
}

namespace {

struct Cell {
  int n = 0;
  std::optional<int> d;
};

json encode_counterexample(const SetPartition& p) { return encode(p); }

CheckReport dimension_cell(int n, int d, VerifyContext& vc) {
  CheckReport r{"dimension", n, d};
  QuotientPtr q = vc.quotient(n, d);
  const long long kappa_count =
      static_cast<long long>(enumerate_kappa_index(n, d).size());
  bool ok = q->dimension() == kappa_count;
  r.witness = {{"dimension", q->dimension()},
               {"kappa_count", kappa_count},
               {"num_partitions", q->num_partitions()},
               {"rank_relations", q->rank_relations()}};
  if (d == 1) {
    const long long closed = (1LL << (n - 1)) - 1LL * n * (n - 1) / 2 - 1;
    ok = ok && q->dimension() == closed;
    r.witness["closed_form"] = closed;
  }
  r.pass = ok;
  return r;
}

CheckReport root_cell(int n, int d, VerifyContext& vc) {
  CheckReport r{"root", n, d};
  SparseMatrix<Subset> m = vc.phi_mat(n, d);
  const int dim = vc.quotient(n, d)->dimension();
  const int rk = rank(m);
  const bool square = m.n_rows() == m.n_cols();
  r.pass = square && dim == static_cast<int>(m.n_rows()) &&
           rk == static_cast<int>(m.n_cols());
  r.witness = {{"rows", m.n_rows()}, {"cols", m.n_cols()}, {"rank", rk}};
  return r;
}

CheckReport sequences_cell(int n, int d, VerifyContext& vc) {
  CheckReport r{"sequences", n, d};
  QuotientPtr a = vc.quotient(n, d);
  QuotientPtr b = vc.quotient(n + 1, d + 1);
  QuotientPtr c = vc.quotient(n, d + 1);
  r.vacuous = c->dimension() == 0;

  SparseMatrix<SetPartition> up =
      quotient_map_matrix(MapKind::Pullback, n, d, vc.cache());
  SparseMatrix<SetPartition> down =
      quotient_map_matrix(MapKind::Pushforward, n + 1, d + 1, vc.cache());
  const int rank_up = rank(up);
  const int rank_down = rank(down);
  const bool injective = rank_up == a->dimension();
  const bool surjective = rank_down == c->dimension();
  const bool middle = rank_up + rank_down == b->dimension();
  const bool bookkeeping = a->dimension() + c->dimension() == b->dimension();

  bool composite_zero = true;
  for (const auto& p : a->basis()) {
    SPVector e{n, d, FormalSum<SetPartition>::unit(p)};
    SPVector mid{n + 1, d + 1, b->reduce(pullback_lift(e).sum)};
    if (!c->reduce(pushforward_lift(mid).sum).zero()) {
      composite_zero = false;
      break;
    }
  }

  // The index-set analogue must be exact on the nose.
  const std::vector<Subset> k_src = enumerate_kappa_index(n, d);
  const std::vector<Subset> k_mid = enumerate_kappa_index(n + 1, d + 1);
  const std::vector<Subset> k_tgt = enumerate_kappa_index(n, d + 1);
  auto u_mid = make_universe(k_mid);
  auto u_tgt = make_universe(k_tgt);
  std::vector<FormalSum<Subset>> alpha_rows, beta_rows;
  bool k_composite_zero = true;
  for (const auto& t : k_src) {
    KVector at = alpha(KVector{n, d, FormalSum<Subset>::unit(t)});
    if (!beta(at).sum.zero()) k_composite_zero = false;
    alpha_rows.push_back(at.sum);
  }
  for (const auto& t : k_mid)
    beta_rows.push_back(beta(KVector{n + 1, d + 1, FormalSum<Subset>::unit(t)}).sum);
  const int rank_alpha = rank(SparseMatrix<Subset>(u_mid, std::move(alpha_rows)));
  const int rank_beta = rank(SparseMatrix<Subset>(u_tgt, std::move(beta_rows)));
  const bool k_exact = rank_alpha == static_cast<int>(k_src.size()) &&
                       rank_beta == static_cast<int>(k_tgt.size()) &&
                       rank_alpha + rank_beta == static_cast<int>(k_mid.size()) &&
                       k_composite_zero;

  r.pass = injective && surjective && middle && bookkeeping && composite_zero &&
           k_exact;
  r.witness = {{"pullback_injective", injective},
               {"pushforward_surjective", surjective},
               {"middle_exact", middle},
               {"composite_zero", composite_zero},
               {"dimension_bookkeeping", bookkeeping},
               {"index_sequence_exact", k_exact},
               {"rank_pullback", rank_up},
               {"rank_pushforward", rank_down},
               {"dims", {a->dimension(), b->dimension(), c->dimension()}}};
  return r;
}

CheckReport squares_cell(int n, int d, VerifyContext& vc) {
  CheckReport r{"squares", n, d};
  bool ok = true;
  json cex = json::object();

  for (const auto& p : enumerate_partitions(n, d + 3)) {
    SPVector e{n, d, FormalSum<SetPartition>::unit(p)};
    KVector lhs = vc.phi(pullback_lift(e));
    KVector rhs = alpha(vc.phi(e));
    if (lhs.sum != rhs.sum) {
      ok = false;
      cex["square"] = "pullback";
      cex["generator"] = encode_counterexample(p);
      break;
    }
  }
  if (ok) {
    for (const auto& p : enumerate_partitions(n + 1, d + 4)) {
      SPVector e{n + 1, d + 1, FormalSum<SetPartition>::unit(p)};
      KVector lhs = vc.phi(pushforward_lift(e));
      KVector rhs = beta(vc.phi(e));
      if (lhs.sum != rhs.sum) {
        ok = false;
        cex["square"] = "pushforward";
        cex["generator"] = encode_counterexample(p);
        break;
      }
    }
  }
  r.pass = ok;
  r.witness = ok ? json{{"generators_checked",
                         enumerate_partitions(n, d + 3).size() +
                             enumerate_partitions(n + 1, d + 4).size()}}
                 : cex;
  return r;
}

CheckReport surjectivity_cell(int n, int n_max, VerifyContext& vc) {
  CheckReport r{"surjectivity", n, std::nullopt};
  bool ok = true;
  json w = json::object();
  const auto bips = enumerate_bipartitions(n);

  std::vector<Subset> odd_labels, even_labels;
  for (const auto& t : enumerate_subsets(n))
    (t.size() % 2 == 1 ? odd_labels : even_labels).push_back(t);
  {
    std::vector<FormalSum<Subset>> odd_rows, even_rows;
    for (const auto& b : bips) {
      odd_rows.push_back(odd_map(b).sum);
      even_rows.push_back(even_map(b).sum);
    }
    const int rank_odd =
        rank(SparseMatrix<Subset>(make_universe(odd_labels), std::move(odd_rows)));
    const int rank_even = rank(
        SparseMatrix<Subset>(make_universe(even_labels), std::move(even_rows)));
    const int full = 1 << (n - 1);
    ok = ok && rank_odd == full && rank_even == full;
    w["rank_odd"] = rank_odd;
    w["rank_even"] = rank_even;
    w["parity_space_dim"] = full;
  }

  // phi on the two lowest block counts hits every index.
  for (int level = -1; level <= 0; ++level) {
    if (n < level + 3) continue;
    const std::vector<Subset> k = enumerate_kappa_index(n, level);
    std::vector<FormalSum<Subset>> rows;
    for (const auto& p : enumerate_partitions(n, level + 3))
      rows.push_back(vc.phi(SPVector{n, level, FormalSum<SetPartition>::unit(p)}).sum);
    const int rk = rank(SparseMatrix<Subset>(make_universe(k), std::move(rows)));
    ok = ok && rk == static_cast<int>(k.size());
    w[level == -1 ? "rank_phi_two_blocks" : "rank_phi_three_blocks"] = rk;
    w[level == -1 ? "index_count_two_blocks" : "index_count_three_blocks"] =
        k.size();
  }

  if (n + 1 <= n_max) {
    bool squares_ok = true;
    for (const auto& b : bips) {
      FormalSum<OrientedBipartition> gb = gamma_bipartition(b);
      FormalSum<Subset> lhs_odd =
          gb.mapped([](const OrientedBipartition& x) { return odd_map(x).sum; });
      FormalSum<Subset> lhs_even =
          gb.mapped([](const OrientedBipartition& x) { return even_map(x).sum; });
      squares_ok = squares_ok && lhs_odd == alpha(even_map(b)).sum &&
                   lhs_even == alpha(odd_map(b)).sum;

      FormalSum<OrientedBipartition> pushed =
          gb.mapped([](const OrientedBipartition& x) {
            return FormalSum<OrientedBipartition>::unit(bipartition_pushforward(x));
          });
      squares_ok = squares_ok && pushed.zero();

      SPVector gsp = gamma_partition(b);
      squares_ok = squares_ok && vc.phi(gsp).sum == alpha(odd_map(b)).sum &&
                   pushforward_lift(gsp).sum.zero();
    }
    for (const auto& b2 : enumerate_bipartitions(n + 1)) {
      OrientedBipartition pb = bipartition_pushforward(b2);
      squares_ok = squares_ok && odd_map(pb).sum == beta(odd_map(b2)).sum &&
                   even_map(pb).sum == beta(even_map(b2)).sum;
    }
    for (const auto& p : enumerate_partitions(n + 1, 2)) {
      SPVector e{n + 1, -1, FormalSum<SetPartition>::unit(p)};
      squares_ok =
          squares_ok && vc.phi(pushforward_lift(e)).sum == beta(vc.phi(e)).sum;
    }
    ok = ok && squares_ok;
    w["transfer_squares"] = squares_ok;
  }

  r.pass = ok;
  r.witness = std::move(w);
  return r;
}

CheckReport strata_cell(int n, VerifyContext& vc) {
  CheckReport r{"strata", n, std::nullopt};
  bool ok = true;
  json cex = json::object();
  int points = 0, type1 = 0, type2 = 0, collapsed = 0;
  std::map<std::string, SetPartition> class_reps;

  for (const MarkedTree& t : enumerate_stable_trees(n)) {
    const TreeKind kind = classify(t);
    if (kind == TreeKind::Point) {
      ++points;
      continue;
    }
    const StratumClass cls = stratum_class(t);
    std::optional<MarkedTree> f = forget_mark(t, n);
    if (!f) ++collapsed;

    if (kind == TreeKind::TypeII) {
      ++type2;
      if (!cls.is_zero() || (f && classify(*f) != TreeKind::TypeII)) {
        ok = false;
        cex["tree"] = tree_to_json(t);
        cex["reason"] = "type II invariants";
        break;
      }
      continue;
    }

    ++type1;
    const SetPartition& pi = *cls.partition;
    const int dt = pi.num_blocks() - 3;
    auto [it, inserted] = class_reps.emplace(encode(pi), pi);
    if (dt != dimension(t) || (!inserted && !(it->second == pi))) {
      ok = false;
      cex["tree"] = tree_to_json(t);
      cex["reason"] = "class representative mismatch";
      break;
    }

    StratumClass via_tree = StratumClass::zero();
    if (f) {
      if (classify(*f) != TreeKind::TypeI) {
        ok = false;
        cex["tree"] = tree_to_json(t);
        cex["reason"] = "forgetting kept dimension but changed kind";
        break;
      }
      via_tree = stratum_class(*f);
    }
    SPVector image =
        pushforward_lift(SPVector{n, dt, FormalSum<SetPartition>::unit(pi)});
    StratumClass via_partition = StratumClass::zero();
    if (!image.sum.zero()) {
      const auto& terms = image.sum.terms();
      if (terms.size() != 1 || terms.front().second != 1) {
        ok = false;
        cex["tree"] = tree_to_json(t);
        cex["reason"] = "pushforward of a single stratum is not a stratum";
        break;
      }
      via_partition = StratumClass::of(terms.front().first);
    }
    if (!(via_tree == via_partition)) {
      ok = false;
      cex["tree"] = tree_to_json(t);
      cex["reason"] = "tree-level and partition-level forgetting disagree";
      break;
    }
  }

  r.pass = ok;
  r.witness = ok ? json{{"trees", points + type1 + type2},
                        {"points", points},
                        {"type_i", type1},
                        {"type_ii", type2},
                        {"collapsed", collapsed}}
                 : cex;
  return r;
}

Permutation random_permutation(std::mt19937_64& rng, int n) {
  std::vector<int> images(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) images[static_cast<std::size_t>(i)] = i + 1;
  for (int i = n - 1; i > 0; --i) {
    const int j = static_cast<int>(rng() % static_cast<std::uint64_t>(i + 1));
    std::swap(images[static_cast<std::size_t>(i)],
              images[static_cast<std::size_t>(j)]);
  }
  return Permutation(std::move(images));
}

CheckReport properties_cell(int n, int d, VerifyContext& vc) {
  CheckReport r{"properties", n, d};
  bool ok = true;
  json cex = json::object();

  const std::vector<SPVector> gens = vc.generators(n, d);
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (!vc.phi(gens[i]).sum.zero()) {
      ok = false;
      cex["relation_not_annihilated"] = i;
      break;
    }
  }

  const int trials = 1000;
  if (ok) {
    const auto parts = enumerate_partitions(n, d + 3);
    std::mt19937_64 rng(0x9e3779b97f4a7c15ull ^
                        (static_cast<std::uint64_t>(n) << 16) ^
                        static_cast<std::uint64_t>(d + 8));
    for (int k = 0; k < trials; ++k) {
      const Permutation g = random_permutation(rng, n);
      const SetPartition& p = parts[rng() % parts.size()];
      const Subset t(n, static_cast<std::uint32_t>(rng()) & ((1u << n) - 1u));
      if (vc.pair(act(g, p), act(g, t)) != vc.pair(p, t)) {
        ok = false;
        cex["equivariance"] = {{"perm", encode(g)},
                               {"partition", encode(p)},
                               {"subset", encode(t)}};
        break;
      }
    }
  }

  r.pass = ok;
  r.witness = ok ? json{{"generators", gens.size()}, {"triples", trials}} : cex;
  return r;
}

std::vector<Cell> cells_for(const std::string& check, int n_max) {
  std::vector<Cell> cells;
  if (check == "dimension" || check == "root" || check == "properties") {
    for (int n = 4; n <= n_max; ++n)
      for (int d = 1; d <= n - 3; ++d) cells.push_back({n, d});
  } else if (check == "sequences") {
    for (int n = 4; n + 1 <= n_max; ++n)
      for (int d = 1; d <= n - 3; ++d) cells.push_back({n, d});
  } else if (check == "squares") {
    for (int n = 2; n <= n_max; ++n)
      for (int d = -1; d <= n - 3; ++d) cells.push_back({n, d});
  } else if (check == "surjectivity") {
    for (int n = 1; n <= n_max; ++n) cells.push_back({n, std::nullopt});
  } else if (check == "strata") {
    for (int n = 4; n <= n_max; ++n) cells.push_back({n, std::nullopt});
  } else {
    throw std::invalid_argument("unknown check: " + check);
  }
  return cells;
}

CheckReport run_cell(const std::string& check, const Cell& c, int n_max,
                     VerifyContext& vc) {
  try {
    if (check == "dimension") return dimension_cell(c.n, *c.d, vc);
    if (check == "root") return root_cell(c.n, *c.d, vc);
    if (check == "sequences") return sequences_cell(c.n, *c.d, vc);
    if (check == "squares") return squares_cell(c.n, *c.d, vc);
    if (check == "surjectivity") return surjectivity_cell(c.n, n_max, vc);
    if (check == "strata") return strata_cell(c.n, vc);
    if (check == "properties") return properties_cell(c.n, *c.d, vc);
    throw std::invalid_argument("unknown check: " + check);
  } catch (const std::exception& e) {
    CheckReport r{check, c.n, c.d};
    r.pass = false;
    r.witness = {{"error", e.what()}};
    return r;
  }
}

}  // namespace

std::vector<CheckReport> check_dimension_formula(int n_max, VerifyContext& vc) {
  std::vector<CheckReport> out;
  for (const Cell& c : cells_for("dimension", n_max))
    out.push_back(run_cell("dimension", c, n_max, vc));
  return out;
}

std::vector<CheckReport> check_theorem_root(int n_max, VerifyContext& vc) {
  std::vector<CheckReport> out;
  for (const Cell& c : cells_for("root", n_max))
    out.push_back(run_cell("root", c, n_max, vc));
  return out;
}

std::vector<CheckReport> check_exact_sequences(int n_max, VerifyContext& vc) {
  std::vector<CheckReport> out;
  for (const Cell& c : cells_for("sequences", n_max))
    out.push_back(run_cell("sequences", c, n_max, vc));
  return out;
}

std::vector<CheckReport> check_commuting_squares(int n_max, VerifyContext& vc) {
  std::vector<CheckReport> out;
  for (const Cell& c : cells_for("squares", n_max))
    out.push_back(run_cell("squares", c, n_max, vc));
  return out;
}

std::vector<CheckReport> check_surjectivity_lemmas(int n_max, VerifyContext& vc) {
  std::vector<CheckReport> out;
  for (const Cell& c : cells_for("surjectivity", n_max))
    out.push_back(run_cell("surjectivity", c, n_max, vc));
  return out;
}

std::vector<CheckReport> check_strata_consistency(int n_max, VerifyContext& vc) {
  std::vector<CheckReport> out;
  for (const Cell& c : cells_for("strata", n_max))
    out.push_back(run_cell("strata", c, n_max, vc));
  return out;
}

std::vector<CheckReport> check_pairing_properties(int n_max, VerifyContext& vc) {
  std::vector<CheckReport> out;
  for (const Cell& c : cells_for("properties", n_max))
    out.push_back(run_cell("properties", c, n_max, vc));
  return out;
}

VerifyResult run_suite(const VerifyOptions& options) {
  if (options.n_max < 4 || options.n_max > 8)
    throw std::invalid_argument("n_max must be between 4 and 8");
  std::vector<std::string> selected;
  if (options.only.empty()) {
    selected = check_names();
  } else {
    for (const std::string& name : options.only)
      if (std::find(check_names().begin(), check_names().end(), name) ==
          check_names().end())
        throw std::invalid_argument("unknown check: " + name);
    for (const std::string& name : check_names())
      if (std::find(options.only.begin(), options.only.end(), name) !=
          options.only.end())
        selected.push_back(name);
  }

  VerifyContext vc(options.fault);
  struct Task {
    std::string check;
    Cell cell;
  };
  std::vector<Task> tasks;
  for (const std::string& name : selected)
    for (const Cell& c : cells_for(name, options.n_max)) tasks.push_back({name, c});

  // Reports land in task order, so output is independent of thread count.
  std::vector<CheckReport> reports(tasks.size());
  const int threads = std::max(1, options.threads);
  if (threads == 1) {
    for (std::size_t i = 0; i < tasks.size(); ++i)
      reports[i] = run_cell(tasks[i].check, tasks[i].cell, options.n_max, vc);
  } else {
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
      for (;;) {
        const std::size_t i = next.fetch_add(1);
        if (i >= tasks.size()) break;
        reports[i] = run_cell(tasks[i].check, tasks[i].cell, options.n_max, vc);
      }
    };
    std::vector<std::thread> pool;
    for (int k = 1; k < threads; ++k) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();
  }

  VerifyResult result;
  result.reports = std::move(reports);
  for (const CheckReport& r : result.reports) result.all_pass = result.all_pass && r.pass;
  return result;
}

std::string summary_table(const std::vector<CheckReport>& reports) {
  struct Row {
    int cells = 0, pass = 0, fail = 0, vacuous = 0;
  };
  std::map<std::string, Row> rows;
  for (const CheckReport& r : reports) {
    Row& row = rows[r.check];
    ++row.cells;
    ++(r.pass ? row.pass : row.fail);
    if (r.vacuous) ++row.vacuous;
  }
  std::ostringstream out;
  out << "check         cells   pass   fail   vacuous\n";
  Row total;
  auto emit = [&out](const std::string& name, const Row& row) {
    out << name;
    for (std::size_t i = name.size(); i < 14; ++i) out << ' ';
    char buf[64];
    std::snprintf(buf, sizeof buf, "%5d  %5d  %5d  %8d\n", row.cells, row.pass,
                  row.fail, row.vacuous);
    out << buf;
  };
  for (const std::string& name : check_names()) {
    auto it = rows.find(name);
    if (it == rows.end()) continue;
    emit(name, it->second);
    total.cells += it->second.cells;
    total.pass += it->second.pass;
    total.fail += it->second.fail;
    total.vacuous += it->second.vacuous;
  }
  emit("total", total);
  out << (total.fail == 0 ? "result: PASS" : "result: FAIL") << "\n";
  return out.str();
}

}  // namespace kappaq
