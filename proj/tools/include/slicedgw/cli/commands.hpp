#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace slicedgw::cli {

struct ComputeOptions {
  std::string source;
  std::string target;
  std::string metric = "sgw";  // sgw | risgw | sw | risw
  long num_directions = 50;
  std::uint64_t seed = 0;
  bool subsample = false;
  long sample_size = 0;  // 0 = min of the two sizes (with --subsample)
  bool normalize = false;
  bool per_direction = false;
  bool timing = false;  // include wall_ms in the report (stdout stays
                        // reproducible without it; timing always goes to stderr)
  int max_iters = 30;
  unsigned threads = 0;
  std::string output;  // empty = stdout
};

struct SpiralOptions {
  long n = 100;
  long num_directions = 20;
  long trials = 10;
  std::vector<double> angles;  // empty = 0, pi/8, ..., pi
  std::uint64_t seed = 0;
  int max_iters = 30;
  unsigned threads = 0;
  std::string output;
};

struct BenchOptions {
  std::vector<long> sizes;  // empty = 2^14 ... 2^20
  long num_directions = 50;
  std::uint64_t seed = 0;
  unsigned threads = 0;
  std::string output;
};

struct PairwiseOptions {
  std::string directory;
  std::string metric = "sgw";
  long num_directions = 50;
  std::uint64_t seed = 0;
  long sample_size = 0;  // 0 = smallest cloud in the directory
  bool mds = false;
  bool normalize = true;
  int max_iters = 30;
  unsigned threads = 0;
  std::string output;  // MDS coordinates go to <output>.mds.csv when set
};

int run_compute(const ComputeOptions& options, std::ostream& out, std::ostream& err);
int run_spiral(const SpiralOptions& options, std::ostream& out, std::ostream& err);
int run_bench(const BenchOptions& options, std::ostream& out, std::ostream& err);
int run_pairwise(const PairwiseOptions& options, std::ostream& out, std::ostream& err);

/// One row of the spiral experiment: curve statistics over trials.
struct SpiralCurveRow {
  double angle;
  double mean_sgw, sgw_p20, sgw_p80;
  double mean_risgw, risgw_p20, risgw_p80;
};

/// The spiral experiment behind `spiral`, exposed for tests.
std::vector<SpiralCurveRow> spiral_curve(const SpiralOptions& options);

struct BenchRow {
  long n;
  double milliseconds;
};

/// The measurement series behind `bench`, exposed for tests.
std::vector<BenchRow> bench_series(const BenchOptions& options);

/// Linear-interpolation percentile of a sample, pct in [0, 100].
double percentile(std::vector<double> values, double pct);

}  // namespace slicedgw::cli
