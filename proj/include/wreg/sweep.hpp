#ifndef WREG_SWEEP_HPP
#define WREG_SWEEP_HPP

#include <string>
#include <vector>

#include "wreg/betti.hpp"
#include "wreg/graph.hpp"

namespace wreg {

struct SweepConfig {
  GraphShape shape = GraphShape::Cycle;  // cycle or path
  int n_min = 3;
  int n_max = 5;
  std::vector<int> alphabet = {1, 2, 3};
  int t_min = 1;
  int t_max = 1;
  std::vector<int> characteristics = {32003, 2};
  unsigned workers = 0;
  std::size_t max_lattice = 200000;
  int max_variables = 24;
  bool dedup_symmetry = true;  // cycles up to rotation/reflection, paths up to reversal
  bool timing = true;          // emit wall-clock column (suppress for byte-identical reports)

  void validate() const;  // throws std::invalid_argument on bad fields
};

enum class RowStatus { Matched, Mismatched, SkippedNotClosed, SkippedCapped, OracleDisagreement };

struct SweepRow {
  int n = 0;
  std::vector<int> weights;
  int t = 1;
  bool closed = false;
  int predicted = 0;                 // valid when closed
  std::vector<int> engine_reg;       // one entry per characteristic; empty when skipped
  RowStatus status = RowStatus::SkippedNotClosed;
  long long millis = 0;
};

struct Report {
  SweepConfig config;
  std::vector<SweepRow> rows;
  std::size_t total = 0;
  std::size_t matched = 0;
  std::size_t mismatched = 0;  // includes oracle disagreements
  std::size_t skipped_not_closed = 0;
  std::size_t skipped_capped = 0;

  bool pass() const { return mismatched == 0; }
};

// For every weight vector over the alphabet (deduplicated up to symmetry when
// configured) and every power t: classify integral closedness with both
// oracles (they must agree), and when closed compare the engine regularity at
// every characteristic against the closed-form prediction.
Report run_verification_sweep(const SweepConfig& config);

std::string report_to_csv(const Report& report);
std::string report_to_json(const Report& report);

// Weight-vector enumeration used by the sweep (exposed for tests): vectors of
// length `len` over `alphabet`, keeping canonical representatives when asked.
std::vector<std::vector<int>> enumerate_weight_vectors(int len, const std::vector<int>& alphabet,
                                                       bool cycle_symmetry, bool dedup);

}  // namespace wreg

#endif
