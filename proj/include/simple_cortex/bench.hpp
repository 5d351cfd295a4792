#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "simple_cortex/demo.hpp"

namespace simple_cortex {

struct Stats {
  double mean = 0.0;
  double stddev = 0.0;  // population
};

// Arithmetic mean and population standard deviation. Needs >= 2 samples.
Stats compute_stats(std::span<const double> samples);

struct BenchRecord {
  std::string label;
  std::size_t samples = 0;
  double mean_ms = 0.0;
  double stddev_ms = 0.0;
  double synapses_per_second = 0.0;
};

struct BenchConfig {
  DemoConfig demo;
  // Leading steps run but left out of the statistics.
  std::size_t warmup_steps = 10;
};

// Row labels, e.g. "Encode, Learn, x20 Predict, x20 Decode".
std::vector<std::string> bench_labels(std::size_t forecast_depth);

// Drives the ball demo for warmup + `steps` steps. Each step times three
// nested prefixes of the pipeline on the same area: encode; encode + learn
// (including state feedback); and encode + learn + the forecast loop.
// Environment stepping and rendering are not timed.
std::vector<BenchRecord> run_bench(const BenchConfig& config, std::size_t steps);

// CSV with header label,samples,mean_ms,stddev_ms,synapses_per_sec.
void write_bench_csv(std::span<const BenchRecord> records, std::ostream& out);
void print_bench_table(std::span<const BenchRecord> records, std::uint64_t total_synapses, std::ostream& out);

}  // namespace simple_cortex
