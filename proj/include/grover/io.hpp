#pragma once

#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "grover/sweep.hpp"
#include "grover/transfer.hpp"

namespace grover {

inline constexpr const char* kSweepCsvHeader =
    "N,v0,steps_to_max,max_fraction,classical_steps,asymptote,v0_ss,M_b,"
    "termination,big_ball_reversed";

/// Plot-ready CSV: '.' decimal separator, ',' field separator, '\n' line
/// endings, header always present. Empty classical_steps field when the
/// baseline was not requested.
inline void write_sweep_csv(std::ostream& os, const std::vector<SweepRecord>& records,
                            int digits) {
  os << kSweepCsvHeader << '\n';
  for (const SweepRecord& r : records) {
    os << format_scientific(r.n, digits) << ','
       << format_scientific(r.v0.effective(), digits) << ','
       << r.steps_to_max << ','
       << format_scientific(r.max_fraction, digits) << ',';
    if (r.classical_steps) os << *r.classical_steps;
    os << ','
       << format_scientific(r.asymptote, digits) << ','
       << format_scientific(r.v0_ss, digits) << ','
       << format_scientific(r.m_b, digits) << ','
       << to_string(r.termination) << ','
       << (r.big_ball_reversed ? "true" : "false") << '\n';
  }
}

inline nlohmann::ordered_json sweep_records_to_json(const std::vector<SweepRecord>& records) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const SweepRecord& r : records) {
    nlohmann::ordered_json j{
        {"N", r.n},
        {"v0", r.v0.effective()},
        {"steps_to_max", r.steps_to_max},
        {"max_fraction", static_cast<double>(r.max_fraction)},
        {"asymptote", r.asymptote},
        {"v0_ss", r.v0_ss},
        {"M_b", r.m_b},
        {"termination", to_string(r.termination)},
        {"big_ball_reversed", r.big_ball_reversed},
    };
    if (r.classical_steps) j["classical_steps"] = *r.classical_steps;
    arr.push_back(std::move(j));
  }
  return arr;
}

/// Trajectory export. Alphas are the source of truth; velocities are derived
/// columns for plotting.
template <class R>
nlohmann::ordered_json trajectory_to_json(const TransferConfig<R>& cfg,
                                          const TransferOutcome<R>& out) {
  nlohmann::ordered_json j;
  j["n"] = static_cast<double>(cfg.n);
  if (cfg.v0) {
    j["v0_or_one_minus_v0"] = {{"kind", "v0"}, {"value", static_cast<double>(*cfg.v0)}};
  } else {
    j["v0_or_one_minus_v0"] = {{"kind", "one_minus_v0"},
                               {"value", static_cast<double>(*cfg.one_minus_v0)}};
  }
  j["precision"] = backend_name(ScalarTraits<R>::backend);
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const TrajectoryPoint<R>& p : out.trajectory) {
    arr.push_back({
        {"k", p.step},
        {"v1", static_cast<double>(velocity_from_alpha(p.state.a_big))},
        {"v2", static_cast<double>(velocity_from_alpha(p.state.a_small))},
        {"alpha1", static_cast<double>(p.state.a_big)},
        {"alpha2", static_cast<double>(p.state.a_small)},
        {"K1_frac", static_cast<double>(p.k1_fraction)},
        {"K2_frac", static_cast<double>(p.k2_fraction)},
        {"e_drift", static_cast<double>(p.energy_drift_cum)},
        {"p_drift", static_cast<double>(p.momentum_drift_cum)},
    });
  }
  j["records"] = std::move(arr);
  return j;
}

/// Re-parse of the trajectory schema, for consumers and round-trip checks.
inline std::vector<TrajectoryPoint<double>> parse_trajectory(const nlohmann::json& j) {
  std::vector<TrajectoryPoint<double>> points;
  const double n = j.at("n").get<double>();
  for (const auto& rec : j.at("records")) {
    TrajectoryPoint<double> p;
    p.step = rec.at("k").get<long>();
    p.state.a_big = rec.at("alpha1").get<double>();
    p.state.a_small = rec.at("alpha2").get<double>();
    p.state.mass_ratio = n - 1;
    p.k1_fraction = rec.at("K1_frac").get<double>();
    p.k2_fraction = rec.at("K2_frac").get<double>();
    p.energy_drift_cum = rec.at("e_drift").get<double>();
    p.momentum_drift_cum = rec.at("p_drift").get<double>();
    points.push_back(p);
  }
  return points;
}

}  // namespace grover
