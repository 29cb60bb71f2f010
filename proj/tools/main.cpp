#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <limits>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "kappaq/chowq.hpp"
#include "kappaq/kappa.hpp"
#include "kappaq/setcomb.hpp"
#include "kappaq/strata.hpp"
#include "kappaq/verify.hpp"

namespace {

using kappaq::Rational;
using nlohmann::json;

enum class Format { Table, Json, Csv };

Format parse_format(const std::string& s) {
  if (s == "table") return Format::Table;
  if (s == "json") return Format::Json;
  return Format::Csv;
}

// Streams either to stdout or to --out.
struct Output {
  std::ofstream file;
  std::ostream* os = &std::cout;

  void open(const std::string& path) {
    if (path.empty()) return;
    file.open(path);
    if (!file) throw std::invalid_argument("cannot open output file: " + path);
    os = &file;
  }
};

std::string csv_quote(const std::string& s) {
  bool needs = s.find_first_of(",\"\n") != std::string::npos || s.empty();
  if (!needs) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

json rational_json(const Rational& q) {
  const auto num = numerator(q);
  const auto den = denominator(q);
  json j = json::object();
  if (num >= std::numeric_limits<std::int64_t>::min() &&
      num <= std::numeric_limits<std::int64_t>::max())
    j["num"] = num.convert_to<std::int64_t>();
  else
    j["num"] = num.str();
  if (den <= std::numeric_limits<std::int64_t>::max())
    j["den"] = den.convert_to<std::int64_t>();
  else
    j["den"] = den.str();
  return j;
}

template <class Label>
json matrix_json(const kappaq::SparseMatrix<Label>& m,
                 const std::vector<std::string>& row_labels) {
  json cols = json::array();
  for (const auto& l : m.universe().labels()) cols.push_back(kappaq::encode(l));
  json rows = json::array();
  for (const auto& r : m.rows()) {
    json row = json::array();
    for (const auto& [label, coeff] : r.terms()) {
      json term = rational_json(coeff);
      term["label"] = kappaq::encode(label);
      row.push_back(std::move(term));
    }
    rows.push_back(std::move(row));
  }
  return {{"universe", std::move(cols)},
          {"row_labels", row_labels},
          {"rows", std::move(rows)}};
}

template <class Label>
void matrix_csv(std::ostream& os, const kappaq::SparseMatrix<Label>& m,
                const std::vector<std::string>& row_labels) {
  os << "row";
  for (const auto& l : m.universe().labels())
    os << ',' << csv_quote(kappaq::encode(l));
  os << '\n';
  for (std::size_t i = 0; i < m.n_rows(); ++i) {
    os << csv_quote(row_labels[i]);
    for (const auto& l : m.universe().labels())
      os << ',' << kappaq::rational_str(m.rows()[i].coefficient(l));
    os << '\n';
  }
}

template <class Label>
void matrix_table(std::ostream& os, const kappaq::SparseMatrix<Label>& m,
                  const std::vector<std::string>& row_labels) {
  os << m.n_rows() << " x " << m.n_cols()
     << " (nonzero entries per row, coefficient then column label)\n";
  for (std::size_t i = 0; i < m.n_rows(); ++i) {
    os << row_labels[i] << " :";
    if (m.rows()[i].zero()) os << " 0";
    for (const auto& [label, coeff] : m.rows()[i].terms())
      os << "  " << kappaq::rational_str(coeff) << ' ' << kappaq::encode(label);
    os << '\n';
  }
}

template <class Label>
void emit_matrix(Output& out, Format format, const kappaq::SparseMatrix<Label>& m,
                 const std::vector<std::string>& row_labels) {
  switch (format) {
    case Format::Json:
      *out.os << matrix_json(m, row_labels).dump(2) << '\n';
      break;
    case Format::Csv:
      matrix_csv(*out.os, m, row_labels);
      break;
    case Format::Table:
      matrix_table(*out.os, m, row_labels);
      break;
  }
}

std::vector<std::string> basis_labels(const kappaq::QuotientSpace& q) {
  std::vector<std::string> out;
  out.reserve(q.basis().size());
  for (const auto& p : q.basis()) out.push_back(kappaq::encode(p));
  return out;
}

int run_dims(int n_max, Format format, Output& out) {
  if (n_max < 4 || n_max > 8)
    throw std::invalid_argument("n_max must be between 4 and 8");
  kappaq::QuotientCache cache;
  struct Row {
    int n, d, dim, parts, rank;
    long long kappa;
  };
  std::vector<Row> rows;
  for (int n = 4; n <= n_max; ++n)
    for (int d = 1; d <= n - 3; ++d) {
      auto q = cache.get(n, d);
      rows.push_back({n, d, q->dimension(), q->num_partitions(),
                      q->rank_relations(),
                      (long long)kappaq::enumerate_kappa_index(n, d).size()});
    }
  if (format == Format::Json) {
    json arr = json::array();
    for (const Row& r : rows)
      arr.push_back({{"n", r.n},
                     {"d", r.d},
                     {"dimension", r.dim},
                     {"num_partitions", r.parts},
                     {"rank_relations", r.rank},
                     {"kappa_count", r.kappa}});
    *out.os << arr.dump(2) << '\n';
  } else if (format == Format::Csv) {
    *out.os << "n,d,dimension,num_partitions,rank_relations,kappa_count\n";
    for (const Row& r : rows)
      *out.os << r.n << ',' << r.d << ',' << r.dim << ',' << r.parts << ','
              << r.rank << ',' << r.kappa << '\n';
  } else {
    char buf[128];
    *out.os << "  n  d    dim   parts    rank   kappa\n";
    for (const Row& r : rows) {
      std::snprintf(buf, sizeof buf, "%3d %2d %6d %7d %7d %7lld\n", r.n, r.d,
                    r.dim, r.parts, r.rank, r.kappa);
      *out.os << buf;
    }
  }
  return 0;
}

int run_relations(int n, int d, Format format, Output& out) {
  const auto gens = kappaq::relation_generators(n, d);
  const auto universe =
      kappaq::make_universe(kappaq::enumerate_partitions(n, d + 3));
  kappaq::EchelonBuilder<kappaq::SetPartition> builder(universe);
  for (const auto& g : gens) builder.add(g.sum);
  const int rank = builder.rank();

  if (format == Format::Json) {
    json arr = json::array();
    for (const auto& g : gens) {
      json terms = json::array();
      for (const auto& [label, coeff] : g.sum.terms()) {
        json t = rational_json(coeff);
        t["label"] = kappaq::encode(label);
        terms.push_back(std::move(t));
      }
      arr.push_back(std::move(terms));
    }
    json j = {{"n", n},
              {"d", d},
              {"num_generators", gens.size()},
              {"rank", rank},
              {"generators", std::move(arr)}};
    *out.os << j.dump(2) << '\n';
  } else if (format == Format::Csv) {
    *out.os << "generator,label,num,den\n";
    for (std::size_t i = 0; i < gens.size(); ++i)
      for (const auto& [label, coeff] : gens[i].sum.terms())
        *out.os << i << ',' << csv_quote(kappaq::encode(label)) << ','
                << numerator(coeff) << ',' << denominator(coeff) << '\n';
  } else {
    *out.os << gens.size() << " generators, rank " << rank << '\n';
    for (std::size_t i = 0; i < gens.size(); ++i) {
      *out.os << i << " :";
      for (const auto& [label, coeff] : gens[i].sum.terms())
        *out.os << "  " << kappaq::rational_str(coeff) << ' '
                << kappaq::encode(label);
      *out.os << '\n';
    }
  }
  return 0;
}

int run_matrix(bool pairing, int n, int d, Format format, Output& out) {
  kappaq::QuotientCache cache;
  const auto m = pairing ? kappaq::pairing_matrix(n, d, cache)
                         : kappaq::phi_matrix(n, d, cache);
  emit_matrix(out, format, m, basis_labels(*cache.get(n, d)));
  return 0;
}

int run_character(int n, int d, const std::string& perm, Format format,
                  Output& out) {
  const kappaq::Permutation g = kappaq::parse_permutation(perm);
  if (g.degree() != n)
    throw std::invalid_argument("permutation degree does not match n");
  const long long fixed = kappaq::character_fixed_points(n, d, g);
  if (format == Format::Json) {
    json j = {{"n", n}, {"d", d}, {"perm", kappaq::encode(g)}, {"fixed_points", fixed}};
    *out.os << j.dump(2) << '\n';
  } else if (format == Format::Csv) {
    *out.os << "n,d,perm,fixed_points\n"
            << n << ',' << d << ',' << csv_quote(kappaq::encode(g)) << ','
            << fixed << '\n';
  } else {
    *out.os << fixed << '\n';
  }
  return 0;
}

int run_strata(int n, int d_filter, Format format, Output& out) {
  if (n < 3 || n > 8) throw std::invalid_argument("n must be between 3 and 8");
  if (d_filter != -1 && (d_filter < 0 || d_filter > n - 3))
    throw std::invalid_argument("d must be between 0 and n-3");
  struct Row {
    int d = 0, total = 0, point = 0, type_i = 0, type_ii = 0;
  };
  std::vector<Row> rows(static_cast<std::size_t>(n - 2));
  for (std::size_t i = 0; i < rows.size(); ++i) rows[i].d = static_cast<int>(i);
  for (const auto& t : kappaq::enumerate_stable_trees(n)) {
    Row& r = rows[static_cast<std::size_t>(kappaq::dimension(t))];
    ++r.total;
    switch (kappaq::classify(t)) {
      case kappaq::TreeKind::Point: ++r.point; break;
      case kappaq::TreeKind::TypeI: ++r.type_i; break;
      case kappaq::TreeKind::TypeII: ++r.type_ii; break;
    }
  }
  if (d_filter != -1) {
    rows = {rows[static_cast<std::size_t>(d_filter)]};
  }
  if (format == Format::Json) {
    json arr = json::array();
    for (const Row& r : rows)
      arr.push_back({{"n", n},
                     {"d", r.d},
                     {"total", r.total},
                     {"point", r.point},
                     {"type_i", r.type_i},
                     {"type_ii", r.type_ii}});
    *out.os << arr.dump(2) << '\n';
  } else if (format == Format::Csv) {
    *out.os << "n,d,total,point,type_i,type_ii\n";
    for (const Row& r : rows)
      *out.os << n << ',' << r.d << ',' << r.total << ',' << r.point << ','
              << r.type_i << ',' << r.type_ii << '\n';
  } else {
    char buf[128];
    *out.os << "  n  d   total   point  type_i type_ii\n";
    for (const Row& r : rows) {
      std::snprintf(buf, sizeof buf, "%3d %2d %7d %7d %7d %7d\n", n, r.d,
                    r.total, r.point, r.type_i, r.type_ii);
      *out.os << buf;
    }
  }
  return 0;
}

int run_verify(const kappaq::VerifyOptions& options, Output& out) {
  const kappaq::VerifyResult result = kappaq::run_suite(options);
  for (const auto& r : result.reports)
    *out.os << kappaq::report_to_json(r).dump() << '\n';
  std::cerr << kappaq::summary_table(result.reports);
  return result.all_pass ? 0 : 1;
}

int default_threads() {
  const char* env = std::getenv("KAPPAQ_THREADS");
  if (!env) return 1;
  const int v = std::atoi(env);
  return v >= 1 ? v : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "exact models of boundary strata, block-merge quotients and the "
      "index-set pairing"};
  app.require_subcommand(1);

  std::string format_str = "table";
  std::string out_path;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--format", format_str, "output format")
        ->check(CLI::IsMember({"table", "json", "csv"}));
    cmd->add_option("--out", out_path, "write output to a file");
  };

  int n_max = 7, n = 0, d = 0;
  std::string perm;

  CLI::App* dims = app.add_subcommand("dims", "dimension table of the quotients");
  dims->add_option("--n-max", n_max, "largest number of marks");
  add_common(dims);

  CLI::App* relations =
      app.add_subcommand("relations", "relation generators of one cell");
  relations->add_option("--n", n, "number of marks")->required();
  relations->add_option("--d", d, "cell degree")->required();
  add_common(relations);

  CLI::App* phi = app.add_subcommand(
      "phi-matrix", "matrix of the index-set expansion on the quotient basis");
  phi->add_option("--n", n, "number of marks")->required();
  phi->add_option("--d", d, "cell degree")->required();
  add_common(phi);

  CLI::App* pairing = app.add_subcommand(
      "pairing-matrix", "pairing of the quotient basis against index sets");
  pairing->add_option("--n", n, "number of marks")->required();
  pairing->add_option("--d", d, "cell degree")->required();
  add_common(pairing);

  CLI::App* character = app.add_subcommand(
      "character", "number of index sets fixed by a permutation");
  character->add_option("--n", n, "number of marks")->required();
  character->add_option("--d", d, "cell degree")->required();
  character->add_option("--perm", perm, "permutation as image list, e.g. 2,1,3,4")
      ->required();
  add_common(character);

  int strata_d = -1;
  CLI::App* strata =
      app.add_subcommand("strata", "stable tree census by stratum dimension");
  strata->add_option("--n", n, "number of marks")->required();
  strata->add_option("--d", strata_d, "restrict to one dimension");
  add_common(strata);

  kappaq::VerifyOptions vopts;
  vopts.threads = default_threads();
  bool fault_injection = false;
  std::string fault_mode = "relation-sign";
  CLI::App* verify =
      app.add_subcommand("verify", "run the verification suite (JSON lines)");
  verify->add_option("--n-max", vopts.n_max, "largest number of marks");
  verify->add_option("--only", vopts.only, "run only the named checks");
  verify->add_option("--threads", vopts.threads, "worker thread count");
  verify->add_flag("--fault-injection", fault_injection,
                   "mutate one internal value; the suite must then fail");
  verify->add_option("--fault-mode", fault_mode, "which value to mutate")
      ->check(CLI::IsMember({"relation-sign", "pairing-entry", "drop-generator"}));
  add_common(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    Output out;
    out.open(out_path);
    const Format format = parse_format(format_str);
    if (dims->parsed()) return run_dims(n_max, format, out);
    if (relations->parsed()) return run_relations(n, d, format, out);
    if (phi->parsed()) return run_matrix(false, n, d, format, out);
    if (pairing->parsed()) return run_matrix(true, n, d, format, out);
    if (character->parsed()) return run_character(n, d, perm, format, out);
    if (strata->parsed()) return run_strata(n, strata_d, format, out);
    if (verify->parsed()) {
      if (fault_injection || verify->count("--fault-mode") > 0) {
        if (fault_mode == "relation-sign")
          vopts.fault = kappaq::FaultKind::RelationSign;
        else if (fault_mode == "pairing-entry")
          vopts.fault = kappaq::FaultKind::PairingEntry;
        else
          vopts.fault = kappaq::FaultKind::DropGenerator;
      }
      return run_verify(vopts, out);
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
