#include "wreg/sweep.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "wreg/closed_forms.hpp"
#include "wreg/errors.hpp"
#include "wreg/integral_closure.hpp"
#include "wreg/parallel.hpp"

namespace wreg {

namespace {

std::string join_dashes(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += "-";
    s += std::to_string(v[i]);
  }
  return s;
}

std::vector<int> canonical_cycle_form(const std::vector<int>& w) {
  std::vector<int> best = w;
  int n = static_cast<int>(w.size());
  for (int refl = 0; refl < 2; ++refl) {
    std::vector<int> base = w;
    if (refl) std::reverse(base.begin(), base.end());
    for (int s = 0; s < n; ++s) {
      std::vector<int> rot(n);
      for (int k = 0; k < n; ++k) rot[k] = base[(k + s) % n];
      best = std::min(best, rot);
    }
  }
  return best;
}

std::vector<int> canonical_path_form(const std::vector<int>& w) {
  std::vector<int> rev = w;
  std::reverse(rev.begin(), rev.end());
  return std::min(w, rev);
}

}  // namespace

void SweepConfig::validate() const {
  if (shape == GraphShape::General) throw std::invalid_argument("sweep shape must be cycle or path");
  int lo = shape == GraphShape::Cycle ? 3 : 2;
  if (n_min < lo || n_max < n_min) throw std::invalid_argument("invalid n range");
  if (t_min < 1 || t_max < t_min) throw std::invalid_argument("invalid t range");
  if (alphabet.empty()) throw std::invalid_argument("empty weight alphabet");
  for (int w : alphabet)
    if (w < 1) throw std::invalid_argument("alphabet weights must be positive");
  if (characteristics.empty()) throw std::invalid_argument("no characteristics configured");
  if (max_lattice == 0 || max_variables < 1) throw std::invalid_argument("caps must be positive");
}

std::vector<std::vector<int>> enumerate_weight_vectors(int len, const std::vector<int>& alphabet,
                                                       bool cycle_symmetry, bool dedup) {
  std::vector<int> sorted_alpha = alphabet;
  std::sort(sorted_alpha.begin(), sorted_alpha.end());
  sorted_alpha.erase(std::unique(sorted_alpha.begin(), sorted_alpha.end()), sorted_alpha.end());

  std::vector<std::vector<int>> out;
  std::vector<int> idx(len, 0);
  for (;;) {
    std::vector<int> w(len);
    for (int k = 0; k < len; ++k) w[k] = sorted_alpha[idx[k]];
    if (!dedup) {
      out.push_back(w);
    } else {
      std::vector<int> canon = cycle_symmetry ? canonical_cycle_form(w) : canonical_path_form(w);
      if (w == canon) out.push_back(w);
    }
    int k = len - 1;
    while (k >= 0 && idx[k] + 1 >= static_cast<int>(sorted_alpha.size())) idx[k--] = 0;
    if (k < 0) break;
    ++idx[k];
  }
  return out;
}

Report run_verification_sweep(const SweepConfig& config) {
  config.validate();
  Report report;
  report.config = config;

  // materialize rows first so workers can process them independently
  for (int n = config.n_min; n <= config.n_max; ++n) {
    int len = config.shape == GraphShape::Cycle ? n : n - 1;
    std::vector<std::vector<int>> vectors = enumerate_weight_vectors(
        len, config.alphabet, config.shape == GraphShape::Cycle, config.dedup_symmetry);
    for (const std::vector<int>& w : vectors)
      for (int t = config.t_min; t <= config.t_max; ++t) {
        SweepRow row;
        row.n = n;
        row.weights = w;
        row.t = t;
        report.rows.push_back(std::move(row));
      }
  }

  EngineOptions engine;
  engine.max_lattice = config.max_lattice;
  engine.max_variables = config.max_variables;
  engine.workers = 1;  // parallelism lives at row granularity

  parallel_for(report.rows.size(), config.workers, [&](std::size_t idx) {
    SweepRow& row = report.rows[idx];
    auto start = std::chrono::steady_clock::now();

    WeightedGraph g = config.shape == GraphShape::Cycle ? build_cycle(row.weights)
                                                        : build_path(row.weights);
    bool comb = is_integrally_closed_combinatorial(g);
    bool alg = is_integrally_closed_algebraic(edge_ideal(g));
    row.closed = comb;
    if (comb != alg) {
      row.status = RowStatus::OracleDisagreement;
    } else if (!comb) {
      row.status = RowStatus::SkippedNotClosed;
    } else {
      row.predicted = config.shape == GraphShape::Cycle
                          ? predict_reg_cycle_power({row.n, row.weights, row.t})
                          : predict_reg_path_power(row.weights, row.t);
      try {
        MonomialIdeal power = ideal_power(edge_ideal(g), row.t);
        std::vector<BettiTable> tables = betti_tables(power, config.characteristics, engine);
        bool all_match = true;
        for (const BettiTable& table : tables) {
          row.engine_reg.push_back(table.regularity() - 1);  // quotient convention
          all_match = all_match && row.engine_reg.back() == row.predicted;
        }
        row.status = all_match ? RowStatus::Matched : RowStatus::Mismatched;
      } catch (const ResourceCapError&) {
        row.engine_reg.clear();
        row.status = RowStatus::SkippedCapped;
      }
    }
    auto end = std::chrono::steady_clock::now();
    row.millis = config.timing
                     ? std::chrono::duration_cast<std::chrono::milliseconds>(end - start).count()
                     : 0;
  });

  report.total = report.rows.size();
  for (const SweepRow& row : report.rows) {
    switch (row.status) {
      case RowStatus::Matched: ++report.matched; break;
      case RowStatus::Mismatched:
      case RowStatus::OracleDisagreement: ++report.mismatched; break;
      case RowStatus::SkippedNotClosed: ++report.skipped_not_closed; break;
      case RowStatus::SkippedCapped: ++report.skipped_capped; break;
    }
  }
  return report;
}

namespace {

std::string status_name(RowStatus s) {
  switch (s) {
    case RowStatus::Matched: return "matched";
    case RowStatus::Mismatched: return "mismatched";
    case RowStatus::SkippedNotClosed: return "skipped-not-closed";
    case RowStatus::SkippedCapped: return "skipped-capped";
    case RowStatus::OracleDisagreement: return "oracle-disagreement";
  }
  return "?";
}

std::string shape_name(GraphShape s) {
  switch (s) {
    case GraphShape::Cycle: return "cycle";
    case GraphShape::Path: return "path";
    default: return "general";
  }
}

}  // namespace

std::string report_to_csv(const Report& report) {
  std::ostringstream os;
  os << "shape,n,weights,t,closed,predicted,reg_p1,reg_p2,match,ms\n";
  for (const SweepRow& row : report.rows) {
    os << shape_name(report.config.shape) << "," << row.n << "," << join_dashes(row.weights) << ","
       << row.t << "," << (row.closed ? 1 : 0) << ",";
    if (row.closed && row.status != RowStatus::OracleDisagreement) os << row.predicted;
    os << ",";
    if (!row.engine_reg.empty()) os << row.engine_reg[0];
    os << ",";
    if (row.engine_reg.size() > 1) os << row.engine_reg[1];
    os << ",";
    if (row.status == RowStatus::Matched)
      os << 1;
    else if (row.status == RowStatus::Mismatched || row.status == RowStatus::OracleDisagreement)
      os << 0;
    os << "," << row.millis << "\n";
  }
  return os.str();
}

std::string report_to_json(const Report& report) {
  nlohmann::json j;
  j["config"] = {{"shape", shape_name(report.config.shape)},
                 {"n_min", report.config.n_min},
                 {"n_max", report.config.n_max},
                 {"alphabet", report.config.alphabet},
                 {"t_min", report.config.t_min},
                 {"t_max", report.config.t_max},
                 {"characteristics", report.config.characteristics},
                 {"dedup", report.config.dedup_symmetry}};
  j["rows"] = nlohmann::json::array();
  for (const SweepRow& row : report.rows) {
    nlohmann::json r;
    r["n"] = row.n;
    r["weights"] = row.weights;
    r["t"] = row.t;
    r["closed"] = row.closed;
    r["status"] = status_name(row.status);
    if (row.closed && row.status != RowStatus::OracleDisagreement) r["predicted"] = row.predicted;
    if (!row.engine_reg.empty()) r["engine_reg"] = row.engine_reg;
    r["ms"] = row.millis;
    j["rows"].push_back(std::move(r));
  }
  j["summary"] = {{"total", report.total},
                  {"matched", report.matched},
                  {"mismatched", report.mismatched},
                  {"skipped_not_closed", report.skipped_not_closed},
                  {"skipped_capped", report.skipped_capped}};
  return j.dump(2);
}

}  // namespace wreg
