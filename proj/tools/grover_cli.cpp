// Command-line front end: single runs, sweeps, and closed-form predictions,
// with plot-ready CSV/JSON emission.
//
// Exit codes: 0 = run(s) ended at a certified first maximum, 1 = invalid
// arguments or unwritable output, 2 = any other termination reason.

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "grover/classical.hpp"
#include "grover/io.hpp"
#include "grover/sweep.hpp"
#include "grover/transfer.hpp"

namespace {

using grover::Backend;

struct SimulateArgs {
  double n = 0;
  std::string v0;
  std::string one_minus_v0;
  std::string precision = "standard";
  long max_iter = 0;
  std::string trajectory_path;
  std::string format;  // empty = human-readable summary
};

struct SweepArgs {
  std::string n_list;
  std::string v0_list;
  std::string one_minus_v0_list;
  bool classical = false;
  std::string precision = "standard";
  long max_iter = 0;
  std::string out_path;
  std::string format = "csv";
  unsigned jobs = 0;
};

struct PredictArgs {
  std::optional<double> n;
  std::optional<double> v0;
  std::string format;
};

template <class R>
R real_from_string(const std::string& s);

template <>
long double real_from_string<long double>(const std::string& s) {
  std::size_t pos = 0;
  const long double v = std::stold(s, &pos);
  if (pos != s.size()) throw std::invalid_argument("malformed number: " + s);
  return v;
}

template <>
grover::ExtendedReal real_from_string<grover::ExtendedReal>(const std::string& s) {
  return grover::ExtendedReal(s);
}

template <class R>
int do_simulate(const SimulateArgs& args) {
  grover::TransferConfig<R> cfg;
  cfg.n = R(args.n);
  if (!args.v0.empty()) cfg.v0 = real_from_string<R>(args.v0);
  if (!args.one_minus_v0.empty()) cfg.one_minus_v0 = real_from_string<R>(args.one_minus_v0);
  cfg.max_iter = args.max_iter;
  cfg.record_trajectory = !args.trajectory_path.empty();

  const grover::TransferOutcome<R> out = grover::run_transfer(cfg);
  const int digits = grover::ScalarTraits<R>::output_digits;

  if (!args.trajectory_path.empty()) {
    std::ofstream f(args.trajectory_path);
    if (!f) {
      std::cerr << "error: cannot write " << args.trajectory_path << "\n";
      return 1;
    }
    f << grover::trajectory_to_json(cfg, out).dump(2) << '\n';
  }

  const std::string fraction = grover::format_scientific(out.max_fraction, digits);
  if (args.format == "csv") {
    std::cout << "steps_to_max,max_fraction,termination,big_ball_reversed\n"
              << out.steps_to_max << ',' << fraction << ','
              << grover::to_string(out.termination) << ','
              << (out.big_ball_reversed ? "true" : "false") << '\n';
  } else if (args.format == "json") {
    nlohmann::ordered_json j{
        {"n", args.n},
        {"precision", grover::backend_name(grover::ScalarTraits<R>::backend)},
        {"steps_to_max", out.steps_to_max},
        {"max_fraction", static_cast<double>(out.max_fraction)},
        {"termination", grover::to_string(out.termination)},
        {"big_ball_reversed", out.big_ball_reversed},
    };
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << "steps_to_max = " << out.steps_to_max << '\n'
              << "max_fraction = " << fraction << '\n'
              << "termination = " << grover::to_string(out.termination) << '\n'
              << "big_ball_reversed = " << (out.big_ball_reversed ? "true" : "false")
              << '\n';
  }
  return out.termination == grover::Termination::first_max_found ? 0 : 2;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) parts.push_back(item);
  return parts;
}

double double_from_string(const std::string& s) {
  std::size_t pos = 0;
  const double v = std::stod(s, &pos);
  if (pos != s.size()) throw std::invalid_argument("malformed number: " + s);
  return v;
}

// "a,b,c" or "start:stop:count-log" (count points, log-spaced, inclusive).
std::vector<double> parse_value_list(const std::string& text) {
  if (text.find(':') != std::string::npos) {
    const auto parts = split(text, ':');
    if (parts.size() != 3) throw std::invalid_argument("expected start:stop:count-log");
    std::string count_part = parts[2];
    const std::string log_suffix = "-log";
    if (count_part.size() <= log_suffix.size() ||
        count_part.substr(count_part.size() - log_suffix.size()) != log_suffix) {
      throw std::invalid_argument("range syntax requires a -log suffix, e.g. 1e2:1e6:9-log");
    }
    count_part = count_part.substr(0, count_part.size() - log_suffix.size());
    const double start = double_from_string(parts[0]);
    const double stop = double_from_string(parts[1]);
    const long count = std::stol(count_part);
    if (!(start > 0) || !(stop > start) || count < 2) {
      throw std::invalid_argument("need 0 < start < stop and count >= 2");
    }
    std::vector<double> values(count);
    const double lg0 = std::log10(start);
    const double lg1 = std::log10(stop);
    for (long i = 0; i < count; ++i) {
      values[i] = std::pow(10.0, lg0 + (lg1 - lg0) * i / (count - 1));
    }
    values.front() = start;
    values.back() = stop;
    return values;
  }
  std::vector<double> values;
  for (const std::string& tok : split(text, ',')) values.push_back(double_from_string(tok));
  return values;
}

unsigned default_jobs() {
  if (const char* env = std::getenv("GROVER_REL_JOBS")) {
    const long v = std::atol(env);
    if (v >= 1) return static_cast<unsigned>(v);
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw >= 1 ? hw : 1;
}

int do_sweep(const SweepArgs& args) {
  grover::SweepSpec spec;
  spec.n_values = parse_value_list(args.n_list);
  if (!args.v0_list.empty()) {
    for (double v : parse_value_list(args.v0_list)) spec.v0_values.push_back({v, false});
  }
  if (!args.one_minus_v0_list.empty()) {
    for (double v : parse_value_list(args.one_minus_v0_list)) {
      spec.v0_values.push_back({v, true});
    }
  }
  std::sort(spec.v0_values.begin(), spec.v0_values.end(),
            [](const grover::V0Spec& a, const grover::V0Spec& b) {
              return a.effective() < b.effective();
            });
  spec.backend = grover::backend_from_name(args.precision);
  spec.include_classical_baseline = args.classical;
  spec.max_iter = args.max_iter;

  const unsigned jobs = args.jobs >= 1 ? args.jobs : default_jobs();
  const std::vector<grover::SweepRecord> records = grover::run_sweep(spec, jobs);

  std::ofstream file;
  std::ostream* os = &std::cout;
  if (!args.out_path.empty()) {
    file.open(args.out_path, std::ios::binary);
    if (!file) {
      std::cerr << "error: cannot write " << args.out_path << "\n";
      return 1;
    }
    os = &file;
  }
  if (args.format == "json") {
    *os << grover::sweep_records_to_json(records).dump(2) << '\n';
  } else {
    grover::write_sweep_csv(*os, records, grover::backend_output_digits(spec.backend));
  }
  os->flush();
  if (!*os) {
    std::cerr << "error: write failed\n";
    return 1;
  }
  for (const grover::SweepRecord& r : records) {
    if (r.termination != grover::Termination::first_max_found) return 2;
  }
  return 0;
}

int do_predict(const PredictArgs& args) {
  if (!args.n && !args.v0) {
    std::cerr << "error: predict needs --n and/or --v0\n";
    return 1;
  }
  nlohmann::ordered_json j;
  if (args.n) {
    const auto ss = grover::predict_single_step_velocity(*args.n);
    j["n"] = *args.n;
    j["v0_ss"] = ss.v0_ss;
    j["one_minus_v0_ss"] = ss.one_minus_v0_ss;
    j["asymptote"] = grover::classical_asymptote(*args.n);
    const auto bp = grover::predict_breakpoints(std::nullopt, *args.n - 1);
    j["v0_b"] = *bp.v0_b;
  }
  if (args.v0) {
    const auto bp = grover::predict_breakpoints(*args.v0, std::nullopt);
    j["v0"] = *args.v0;
    j["M_b"] = *bp.m_b;
  }
  if (args.format == "json") {
    std::cout << j.dump(2) << '\n';
  } else {
    for (const auto& [key, value] : j.items()) {
      std::cout << key << " = " << value << '\n';
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Relativistic Grover energy transfer simulator"};
  app.require_subcommand(1);

  SimulateArgs sim;
  CLI::App* simulate = app.add_subcommand("simulate", "Run one energy transfer");
  simulate->add_option("--n", sim.n, "Number of unit masses (>= 2)")->required();
  simulate->add_option("--v0", sim.v0, "Initial speed, fraction of c");
  simulate->add_option("--one-minus-v0", sim.one_minus_v0, "1 - v0, for speeds near c");
  simulate->add_option("--precision", sim.precision, "standard|extended")
      ->check(CLI::IsMember({"standard", "extended"}));
  simulate->add_option("--max-iter", sim.max_iter, "Iteration cap (default: auto)");
  simulate->add_option("--trajectory", sim.trajectory_path, "Write trajectory JSON here");
  simulate->add_option("--format", sim.format, "csv|json (default: plain summary)")
      ->check(CLI::IsMember({"csv", "json"}));

  SweepArgs swp;
  CLI::App* sweep = app.add_subcommand("sweep", "Run an (N, v0) grid");
  sweep->add_option("--n-list", swp.n_list, "Comma list or start:stop:count-log")->required();
  sweep->add_option("--v0-list", swp.v0_list, "Comma list of v0 values");
  sweep->add_option("--one-minus-v0-list", swp.one_minus_v0_list,
                    "Comma list of 1 - v0 values");
  sweep->add_flag("--classical", swp.classical, "Include the classical baseline column");
  sweep->add_option("--precision", swp.precision, "standard|extended")
      ->check(CLI::IsMember({"standard", "extended"}));
  sweep->add_option("--max-iter", swp.max_iter, "Iteration cap per run (default: auto)");
  sweep->add_option("--out", swp.out_path, "Output file (default: stdout)");
  sweep->add_option("--format", swp.format, "csv|json")
      ->check(CLI::IsMember({"csv", "json"}));
  sweep->add_option("--jobs", swp.jobs, "Worker threads (default: GROVER_REL_JOBS or cores)");

  PredictArgs prd;
  CLI::App* predict = app.add_subcommand("predict", "Closed-form predictions");
  predict->add_option("--n", prd.n, "Number of unit masses");
  predict->add_option("--v0", prd.v0, "Initial speed");
  predict->add_option("--format", prd.format, "json (default: plain)")
      ->check(CLI::IsMember({"json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (simulate->parsed()) {
      if (sim.v0.empty() == sim.one_minus_v0.empty()) {
        std::cerr << "error: supply exactly one of --v0 / --one-minus-v0\n";
        return 1;
      }
      return sim.precision == "extended" ? do_simulate<grover::ExtendedReal>(sim)
                                         : do_simulate<grover::StandardReal>(sim);
    }
    if (sweep->parsed()) {
      if (swp.v0_list.empty() && swp.one_minus_v0_list.empty()) {
        std::cerr << "error: supply --v0-list and/or --one-minus-v0-list\n";
        return 1;
      }
      return do_sweep(swp);
    }
    if (predict->parsed()) return do_predict(prd);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
