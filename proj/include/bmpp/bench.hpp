#pragma once

// Timing grid over (algorithm, size, repetition) on seeded random point sets.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <exception>
#include <mutex>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "bmpp/bm.hpp"
#include "bmpp/field.hpp"
#include "bmpp/random.hpp"

namespace bmpp {

struct BenchConfig {
  std::vector<Algorithm> algorithms;
  std::vector<std::size_t> sizes;
  std::size_t reps = 5;
  std::uint64_t seed = 1;
  TermOrder order = TermOrder::lex;
  unsigned jobs = 1;
};

struct BenchRecord {
  Algorithm algorithm = Algorithm::bm;
  std::string field;
  TermOrder order = TermOrder::lex;
  std::size_t size = 0;
  std::size_t repetition = 0;
  std::int64_t wall_nanos = 0;
  std::optional<double> mcs_ratio;  // #subset / #points for preprocessed runs
};

/// Every algorithm sees the same point set for a given (size, repetition).
inline std::uint64_t bench_instance_seed(std::uint64_t seed, std::size_t size, std::size_t rep) {
  return derive_seed({seed, size, rep});
}

template <typename F>
PointSet<F> bench_instance(const F& field, std::uint64_t seed, std::size_t size, std::size_t rep) {
  return random_points(field, size, bench_instance_seed(seed, size, rep));
}

template <Field F>
BenchRecord bench_one(const F& field, Algorithm algorithm, TermOrder order, const PointSet<F>& points, std::size_t rep) {
  const Algorithm resolved = resolve(algorithm, order);
  auto start = std::chrono::steady_clock::now();
  auto result = run_algorithm(resolved, points, order);
  auto stop = std::chrono::steady_clock::now();
  BenchRecord rec{resolved, field.spec(), order, points.size(), rep,
                  std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start).count(), std::nullopt};
  if (resolved != Algorithm::bm) rec.mcs_ratio = static_cast<double>(result.seeded) / static_cast<double>(points.size());
  return rec;
}

/// Records sorted by (algorithm, size, repetition) regardless of scheduling.
template <Field F>
std::vector<BenchRecord> run_bench(const F& field, const BenchConfig& cfg) {
  struct Task {
    Algorithm algorithm;
    std::size_t size;
    std::size_t rep;
  };
  std::vector<Task> tasks;
  for (auto a : cfg.algorithms) {
    resolve(a, cfg.order);
    for (auto n : cfg.sizes) {
      for (std::size_t r = 0; r < cfg.reps; ++r) tasks.push_back({a, n, r});
    }
  }
  std::vector<BenchRecord> records(tasks.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t k = next++; k < tasks.size(); k = next++) {
      try {
        auto points = bench_instance(field, cfg.seed, tasks[k].size, tasks[k].rep);
        records[k] = bench_one(field, tasks[k].algorithm, cfg.order, points, tasks[k].rep);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  const unsigned jobs = std::max(1u, cfg.jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);
  std::stable_sort(records.begin(), records.end(), [](const BenchRecord& a, const BenchRecord& b) {
    if (a.algorithm != b.algorithm) return a.algorithm < b.algorithm;
    if (a.size != b.size) return a.size < b.size;
    return a.repetition < b.repetition;
  });
  return records;
}

template <typename T>
double median(std::vector<T> values) {
  if (values.empty()) return 0.0;
  std::sort(values.begin(), values.end());
  const std::size_t n = values.size();
  return n % 2 ? static_cast<double>(values[n / 2])
               : (static_cast<double>(values[n / 2 - 1]) + static_cast<double>(values[n / 2])) / 2.0;
}

inline double median_nanos(const std::vector<BenchRecord>& records, Algorithm a, std::size_t size) {
  std::vector<std::int64_t> t;
  for (const auto& r : records) {
    if (r.algorithm == a && r.size == size) t.push_back(r.wall_nanos);
  }
  return median(t);
}

inline void write_bench_csv(const std::vector<BenchRecord>& records, std::ostream& out) {
  out << "algorithm,field,order,size,repetition,wall_nanos,mcs_ratio\n";
  for (const auto& r : records) {
    out << to_string(r.algorithm) << ',' << r.field << ',' << to_string(r.order) << ',' << r.size << ','
        << r.repetition << ',' << r.wall_nanos << ',';
    if (r.mcs_ratio) out << *r.mcs_ratio;
    out << '\n';
  }
}

/// Median time per (algorithm, size), and the speedup of each algorithm over bm when bm ran.
inline std::string bench_summary(const std::vector<BenchRecord>& records, const BenchConfig& cfg) {
  std::ostringstream out;
  std::vector<Algorithm> algos;
  for (auto a : cfg.algorithms) {
    auto r = resolve(a, cfg.order);
    if (std::find(algos.begin(), algos.end(), r) == algos.end()) algos.push_back(r);
  }
  const bool have_bm = std::find(algos.begin(), algos.end(), Algorithm::bm) != algos.end();
  for (auto n : cfg.sizes) {
    const double base = have_bm ? median_nanos(records, Algorithm::bm, n) : 0.0;
    for (auto a : algos) {
      const double m = median_nanos(records, a, n);
      out << "size " << n << ' ' << to_string(a) << ": median " << m / 1e6 << " ms";
      std::vector<double> ratios;
      for (const auto& r : records) {
        if (r.algorithm == a && r.size == n && r.mcs_ratio) ratios.push_back(*r.mcs_ratio);
      }
      if (!ratios.empty()) out << ", median #subset/#points " << median(ratios);
      if (have_bm && a != Algorithm::bm && m > 0) out << ", median speedup over bm " << base / m << 'x';
      out << '\n';
    }
  }
  return out.str();
}

}  // namespace bmpp
