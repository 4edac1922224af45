#pragma once

// Trial runners. Each trial is a pure function of its index (it builds its
// own generator from the index), so the serial and parallel runners return
// identical vectors.

#include <cstdint>
#include <exception>
#include <type_traits>
#include <vector>

#include <omp.h>

namespace tabdyn {

template <class Fn>
auto run_trials_serial(std::int64_t trials, Fn&& fn) {
  using Result = std::invoke_result_t<Fn&, std::int64_t>;
  std::vector<Result> out;
  out.reserve(static_cast<std::size_t>(trials));
  for (std::int64_t t = 0; t < trials; ++t) out.push_back(fn(t));
  return out;
}

/// jobs <= 0 uses the OpenMP default team size.
template <class Fn>
auto run_trials_parallel(std::int64_t trials, Fn&& fn, int jobs = 0) {
  using Result = std::invoke_result_t<Fn&, std::int64_t>;
  static_assert(!std::is_same_v<Result, bool>, "vector<bool> is not safe for concurrent writes");
  std::vector<Result> out(static_cast<std::size_t>(trials));
  std::exception_ptr error;
  const int threads = jobs > 0 ? jobs : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
  for (std::int64_t t = 0; t < trials; ++t) {
    try {
      out[static_cast<std::size_t>(t)] = fn(t);
    } catch (...) {
#pragma omp critical(tabdyn_trial_error)
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
  return out;
}

/// Serial when jobs == 1, parallel otherwise.
template <class Fn>
auto run_trials(std::int64_t trials, Fn&& fn, int jobs) {
  if (jobs == 1) return run_trials_serial(trials, fn);
  return run_trials_parallel(trials, fn, jobs);
}

}  // namespace tabdyn
