#pragma once

#include <atomic>
#include <cmath>
#include <cstddef>
#include <exception>
#include <mutex>
#include <numbers>
#include <optional>
#include <thread>
#include <vector>

#include "grover/classical.hpp"
#include "grover/transfer.hpp"

namespace grover {

struct V0Spec {
  double value;              // v0 itself, or 1 - v0
  bool is_one_minus = false;

  double effective() const { return is_one_minus ? 1.0 - value : value; }
};

struct SweepSpec {
  std::vector<double> n_values;   // strictly increasing, each >= 2
  std::vector<V0Spec> v0_values;  // strictly increasing effective v0
  Backend backend = Backend::standard;
  bool include_classical_baseline = false;
  long max_iter = 0;
};

struct SweepRecord {
  double n;
  V0Spec v0;
  long steps_to_max;
  long double max_fraction;
  std::optional<long> classical_steps;
  double asymptote;  // pi/4 sqrt(n)
  double v0_ss;      // 1 - 2/n^2
  double m_b;        // 4 / (3 v0^2)
  Termination termination;
  bool big_ball_reversed;
};

struct SingleStepVelocity {
  double v0_ss;
  double one_minus_v0_ss;  // 2/n^2; the form that keeps its digits
};

/// Initial speed near which the transfer completes in one collision. The
/// closed form assumes n >> 1; small-n values are extrapolations.
inline SingleStepVelocity predict_single_step_velocity(double n) {
  if (!(n >= 2)) {
    throw std::domain_error("predict_single_step_velocity: n must be >= 2");
  }
  const double one_minus = 2.0 / (n * n);
  return {1.0 - one_minus, one_minus};
}

struct BreakpointPrediction {
  std::optional<double> v0_b;
  std::optional<double> m_b;
};

/// Scale at which the first relativistic correction to K1 matches the
/// classical K2: v0_b = 2/sqrt(3M), M_b = 4/(3 v0^2).
inline BreakpointPrediction predict_breakpoints(std::optional<double> v0,
                                                std::optional<double> mass_ratio) {
  if (!v0 && !mass_ratio) {
    throw std::invalid_argument("predict_breakpoints: supply v0 and/or mass_ratio");
  }
  BreakpointPrediction out;
  if (v0) {
    if (!(*v0 > 0) || !(*v0 < 1)) {
      throw std::domain_error("predict_breakpoints: v0 must be in (0, 1)");
    }
    out.m_b = 4.0 / (3.0 * *v0 * *v0);
  }
  if (mass_ratio) {
    if (!(*mass_ratio >= 1)) {
      throw std::domain_error("predict_breakpoints: mass_ratio must be >= 1");
    }
    out.v0_b = 2.0 / std::sqrt(3.0 * *mass_ratio);
  }
  return out;
}

inline double classical_asymptote(double n) {
  if (!(n >= 2)) throw std::domain_error("classical_asymptote: n must be >= 2");
  return std::numbers::pi / 4 * std::sqrt(n);
}

inline void validate(const SweepSpec& spec) {
  if (spec.n_values.empty() || spec.v0_values.empty()) {
    throw std::invalid_argument("sweep: value lists must be non-empty");
  }
  for (std::size_t i = 0; i < spec.n_values.size(); ++i) {
    if (!(spec.n_values[i] >= 2)) throw std::domain_error("sweep: every N must be >= 2");
    if (i > 0 && !(spec.n_values[i] > spec.n_values[i - 1])) {
      throw std::invalid_argument("sweep: N values must be strictly increasing");
    }
  }
  for (std::size_t i = 0; i < spec.v0_values.size(); ++i) {
    const V0Spec& v = spec.v0_values[i];
    const bool ok = v.is_one_minus ? (v.value > 0 && v.value < 1)
                                   : (v.value > 0 && v.value < 1);
    if (!ok) throw std::domain_error("sweep: every v0 must be in (0, 1)");
    if (i > 0 && !(v.effective() > spec.v0_values[i - 1].effective())) {
      throw std::invalid_argument("sweep: v0 values must be strictly increasing");
    }
  }
}

namespace detail {

template <class R>
SweepRecord evaluate_grid_point(double n, const V0Spec& v0, const SweepSpec& spec) {
  TransferConfig<R> cfg;
  cfg.n = R(n);
  if (v0.is_one_minus) {
    cfg.one_minus_v0 = R(v0.value);
  } else {
    cfg.v0 = R(v0.value);
  }
  cfg.max_iter = spec.max_iter;
  const TransferOutcome<R> t = run_transfer(cfg);

  SweepRecord rec;
  rec.n = n;
  rec.v0 = v0;
  rec.steps_to_max = t.steps_to_max;
  rec.max_fraction = static_cast<long double>(t.max_fraction);
  if (spec.include_classical_baseline) {
    rec.classical_steps = classical_transfer(n, v0.effective(), spec.max_iter).steps_to_max;
  }
  rec.asymptote = classical_asymptote(n);
  rec.v0_ss = predict_single_step_velocity(n).v0_ss;
  const double ve = v0.effective();
  rec.m_b = 4.0 / (3.0 * ve * ve);
  rec.termination = t.termination;
  rec.big_ball_reversed = t.big_ball_reversed;
  return rec;
}

template <class R>
std::vector<SweepRecord> run_grid(const SweepSpec& spec, unsigned jobs) {
  struct Point {
    double n;
    V0Spec v0;
  };
  std::vector<Point> grid;
  grid.reserve(spec.n_values.size() * spec.v0_values.size());
  for (double n : spec.n_values) {
    for (const V0Spec& v : spec.v0_values) grid.push_back({n, v});
  }

  std::vector<SweepRecord> records(grid.size());
  if (jobs < 1) jobs = 1;
  if (jobs > grid.size()) jobs = static_cast<unsigned>(grid.size());

  if (jobs <= 1) {
    for (std::size_t i = 0; i < grid.size(); ++i) {
      records[i] = evaluate_grid_point<R>(grid[i].n, grid[i].v0, spec);
    }
    return records;
  }

  // Grid points are independent; each worker claims the next index and writes
  // into its slot, so the emitted order never depends on the worker count.
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= grid.size()) return;
      try {
        records[i] = evaluate_grid_point<R>(grid[i].n, grid[i].v0, spec);
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(jobs);
  for (unsigned i = 0; i < jobs; ++i) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
  return records;
}

}  // namespace detail

/// One record per (N, v0) pair, ordered by N then v0. Deterministic for a
/// given spec and backend, independent of the worker count.
inline std::vector<SweepRecord> run_sweep(const SweepSpec& spec, unsigned jobs = 1) {
  validate(spec);
  return spec.backend == Backend::standard
             ? detail::run_grid<StandardReal>(spec, jobs)
             : detail::run_grid<ExtendedReal>(spec, jobs);
}

}  // namespace grover
