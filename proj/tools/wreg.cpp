// Command-line front end: closed-form predictions, exact regularity via the
// Betti engine, integral-closure verdicts, power-structure inspection, and
// the formula-vs-engine verification sweep.

#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "wreg/betti.hpp"
#include "wreg/closed_forms.hpp"
#include "wreg/errors.hpp"
#include "wreg/graph.hpp"
#include "wreg/integral_closure.hpp"
#include "wreg/io.hpp"
#include "wreg/power_structure.hpp"
#include "wreg/sweep.hpp"

namespace {

using namespace wreg;

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::string cur;
  for (char ch : text + ",") {
    if (ch == ',' || ch == '-') {
      if (!cur.empty()) out.push_back(std::stoi(cur));
      cur.clear();
    } else {
      cur += ch;
    }
  }
  if (out.empty()) throw std::invalid_argument("empty integer list");
  return out;
}

std::pair<int, int> parse_range(const std::string& text) {
  auto dots = text.find("..");
  if (dots == std::string::npos) {
    int v = std::stoi(text);
    return {v, v};
  }
  return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
}

GraphShape parse_shape(const std::string& s) {
  if (s == "cycle") return GraphShape::Cycle;
  if (s == "path") return GraphShape::Path;
  throw std::invalid_argument("shape must be cycle or path");
}

WeightedGraph build_shape(const std::string& shape, const std::vector<int>& weights) {
  return parse_shape(shape) == GraphShape::Cycle ? build_cycle(weights) : build_path(weights);
}

struct CommonArgs {
  std::string shape = "cycle";
  std::string weights;
  std::string ideal_file;
  int t = 1;
  int characteristic = 32003;
  std::size_t max_lattice = 200000;
  unsigned workers = 0;
};

MonomialIdeal load_ideal(const CommonArgs& a) {
  MonomialIdeal base;
  if (!a.ideal_file.empty())
    base = ideal_from_json(read_file(a.ideal_file));
  else if (!a.weights.empty())
    base = edge_ideal(build_shape(a.shape, parse_int_list(a.weights)));
  else
    throw std::invalid_argument("provide --weights or an ideal JSON file");
  return a.t == 1 ? base : ideal_power(base, a.t);
}

int cmd_predict(const std::string& shape, const std::string& weights_text, int t) {
  std::vector<int> weights = parse_int_list(weights_text);
  int quotient_reg = parse_shape(shape) == GraphShape::Cycle
                         ? predict_reg_cycle_power({static_cast<int>(weights.size()), weights, t})
                         : predict_reg_path_power(weights, t);
  std::cout << "reg(S/I^" << t << ") = " << quotient_reg << "\n";
  std::cout << "reg(I^" << t << ") = " << quotient_reg + 1 << "\n";
  return 0;
}

int cmd_reg(const CommonArgs& a, bool print_table) {
  MonomialIdeal ideal = load_ideal(a);
  EngineOptions opt;
  opt.max_lattice = a.max_lattice;
  opt.workers = a.workers;
  BettiTable table = betti_table(ideal, a.characteristic, opt);
  std::cout << "reg(S/I) = " << table.regularity() - 1 << "\n";
  std::cout << "reg(I) = " << table.regularity() << "\n";
  if (print_table) std::cout << betti_table_to_json(table) << "\n";
  return 0;
}

int cmd_betti(const CommonArgs& a, bool quotient) {
  MonomialIdeal ideal = load_ideal(a);
  EngineOptions opt;
  opt.max_lattice = a.max_lattice;
  opt.workers = a.workers;
  BettiTable table = quotient ? betti_table_quotient(ideal, a.characteristic, opt)
                              : betti_table(ideal, a.characteristic, opt);
  std::cout << betti_table_to_json(table) << "\n";
  return 0;
}

int cmd_closure(const std::string& shape, const std::string& weights_text) {
  WeightedGraph g = build_shape(shape, parse_int_list(weights_text));
  bool comb = is_integrally_closed_combinatorial(g);
  bool alg = is_integrally_closed_algebraic(edge_ideal(g));
  std::cout << "combinatorial: " << (comb ? "closed" : "not-closed") << "\n";
  std::cout << "algebraic: " << (alg ? "closed" : "not-closed") << "\n";
  std::cout << "agreement: " << (comb == alg ? "yes" : "no") << "\n";
  return comb == alg ? 0 : 1;
}

int cmd_polarize(const CommonArgs& a) {
  Polarization p = polarize(load_ideal(a));
  nlohmann::json j;
  j["ideal"] = nlohmann::json::parse(ideal_to_json(p.ideal));
  j["variables"] = nlohmann::json::array();
  for (const auto& [src, copy] : p.variables) j["variables"].push_back({src + 1, copy + 1});
  std::cout << j.dump() << "\n";
  return 0;
}

int cmd_factorize(const std::string& weights_text, int t, const std::string& monomial_text) {
  std::vector<int> weights = parse_int_list(weights_text);
  Monomial m{parse_int_list(monomial_text)};
  EdgeFactorization f = edge_factorize(m, weights, t);
  std::cout << "exponents =";
  for (int a : f.exponents) std::cout << " " << a;
  std::cout << "\n";
  return 0;
}

int cmd_colon_tail(const std::string& weights_text, int t, int i) {
  std::vector<int> weights = parse_int_list(weights_text);
  OrderedGenerators gens = ordered_generators(weights, t);
  MonomialIdeal exact = colon_tail(gens, i);
  MonomialIdeal predicted = predicted_colon_tail(gens, i);
  std::cout << "computed = " << exact.str() << "\n";
  std::cout << "predicted = " << predicted.str() << "\n";
  bool same = ideal_equals(exact, predicted);
  std::cout << "equal: " << (same ? "yes" : "no") << "\n";
  return same ? 0 : 1;
}

int cmd_sweep(const SweepConfig& config, const std::string& out_path, const std::string& format) {
  Report report = run_verification_sweep(config);
  std::string text = format == "json" ? report_to_json(report) : report_to_csv(report);
  if (out_path.empty())
    std::cout << text;
  else
    write_file(out_path, text);
  std::cerr << "sweep: total=" << report.total << " matched=" << report.matched
            << " mismatched=" << report.mismatched
            << " skipped_not_closed=" << report.skipped_not_closed
            << " skipped_capped=" << report.skipped_capped << "\n";
  return report.pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"regularity of powers of edge ideals of edge-weighted graphs"};
  app.require_subcommand(1);

  CommonArgs common;
  std::string weights_text, monomial_text, out_path, format = "csv";
  std::string n_range = "3..5", t_range = "1..1", alphabet = "1,2,3", chars = "32003,2";
  int order_index = 1;
  bool print_table = false, quotient = false, no_dedup = false, no_timing = false;

  auto add_instance_flags = [&](CLI::App* cmd, bool with_ideal) {
    cmd->add_option("--shape", common.shape, "cycle or path")->capture_default_str();
    cmd->add_option("--weights", common.weights, "comma- or dash-separated edge weights");
    cmd->add_option("--t", common.t, "power of the edge ideal")->capture_default_str();
    if (with_ideal) cmd->add_option("--ideal", common.ideal_file, "ideal JSON file");
  };

  CLI::App* predict = app.add_subcommand("predict", "closed-form reg(S/I^t) prediction");
  add_instance_flags(predict, false);

  CLI::App* reg = app.add_subcommand("reg", "exact regularity via the Betti engine");
  add_instance_flags(reg, true);
  reg->add_option("--char", common.characteristic, "field characteristic")->capture_default_str();
  reg->add_option("--max-lattice", common.max_lattice, "lcm lattice cap")->capture_default_str();
  reg->add_option("--workers", common.workers, "worker threads (0 = auto)");
  reg->add_flag("--table", print_table, "also print the Betti table JSON");

  CLI::App* betti = app.add_subcommand("betti", "Betti table JSON");
  add_instance_flags(betti, true);
  betti->add_option("--char", common.characteristic, "field characteristic")->capture_default_str();
  betti->add_option("--max-lattice", common.max_lattice, "lcm lattice cap")->capture_default_str();
  betti->add_option("--workers", common.workers, "worker threads (0 = auto)");
  betti->add_flag("--quotient", quotient, "table of S/I instead of I");

  CLI::App* closure = app.add_subcommand("closure", "integral-closure verdicts (both oracles)");
  closure->add_option("--shape", common.shape, "cycle or path")->capture_default_str();
  closure->add_option("--weights", common.weights, "edge weights")->required();

  CLI::App* polarize_cmd = app.add_subcommand("polarize", "polarization of a monomial ideal");
  add_instance_flags(polarize_cmd, true);

  CLI::App* factorize = app.add_subcommand("factorize", "edge factorization of a power generator");
  factorize->add_option("--weights", weights_text, "cycle weights (one non-trivial edge)")->required();
  factorize->add_option("--t", common.t, "power")->capture_default_str();
  factorize->add_option("--monomial", monomial_text, "exponent vector of the generator")->required();

  CLI::App* colon = app.add_subcommand("colon-tail", "tail colon vs its closed form");
  colon->add_option("--weights", weights_text, "cycle weights (one non-trivial edge)")->required();
  colon->add_option("--t", common.t, "power")->capture_default_str();
  colon->add_option("--i", order_index, "order index in [c]")->capture_default_str();

  CLI::App* sweep = app.add_subcommand("sweep", "formula-vs-engine verification sweep");
  sweep->add_option("--shape", common.shape, "cycle or path")->capture_default_str();
  sweep->add_option("--n", n_range, "vertex count or range a..b")->capture_default_str();
  sweep->add_option("--t", t_range, "power or range a..b")->capture_default_str();
  sweep->add_option("--weights", alphabet, "weight alphabet (comma list)")->capture_default_str();
  sweep->add_option("--char", chars, "characteristics (comma list)")->capture_default_str();
  sweep->add_option("--workers", common.workers, "worker threads (0 = auto)");
  sweep->add_option("--max-lattice", common.max_lattice, "lcm lattice cap")->capture_default_str();
  sweep->add_option("--out", out_path, "report file (stdout when omitted)");
  sweep->add_option("--format", format, "csv or json")->capture_default_str();
  sweep->add_flag("--no-dedup", no_dedup, "keep symmetric weight vectors");
  sweep->add_flag("--no-timing", no_timing, "zero the timing column for reproducible output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (predict->parsed()) return cmd_predict(common.shape, common.weights, common.t);
    if (reg->parsed()) return cmd_reg(common, print_table);
    if (betti->parsed()) return cmd_betti(common, quotient);
    if (closure->parsed()) return cmd_closure(common.shape, common.weights);
    if (polarize_cmd->parsed()) return cmd_polarize(common);
    if (factorize->parsed()) return cmd_factorize(weights_text, common.t, monomial_text);
    if (colon->parsed()) return cmd_colon_tail(weights_text, common.t, order_index);
    if (sweep->parsed()) {
      SweepConfig config;
      config.shape = parse_shape(common.shape);
      auto [n_lo, n_hi] = parse_range(n_range);
      config.n_min = n_lo;
      config.n_max = n_hi;
      auto [t_lo, t_hi] = parse_range(t_range);
      config.t_min = t_lo;
      config.t_max = t_hi;
      config.alphabet = parse_int_list(alphabet);
      config.characteristics = parse_int_list(chars);
      config.workers = common.workers;
      config.max_lattice = common.max_lattice;
      config.dedup_symmetry = !no_dedup;
      config.timing = !no_timing;
      if (format != "csv" && format != "json")
        throw std::invalid_argument("format must be csv or json");
      return cmd_sweep(config, out_path, format);
    }
  } catch (const ResourceCapError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const NotIntegrallyClosedError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const TheoremViolationError& e) {
    std::cerr << "theorem violation: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
