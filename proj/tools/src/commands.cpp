#include "slicedgw/cli/commands.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "slicedgw/cli/io.hpp"
#include "slicedgw/cli/mds.hpp"
#include "slicedgw/cli/synth.hpp"
#include "slicedgw/risgw.hpp"
#include "slicedgw/rng.hpp"
#include "slicedgw/sgw.hpp"

namespace slicedgw::cli {

namespace {

namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;
constexpr double kPi = 3.14159265358979323846;

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

int write_product(const std::string& path, const std::string& content,
                  std::ostream& out, std::ostream& err) {
  if (path.empty()) {
    out << content;
    return 0;
  }
  std::ofstream f(path);
  if (!f) {
    err << "error: cannot write " << path << "\n";
    return 1;
  }
  f << content;
  return 0;
}

double mean(const std::vector<double>& values) {
  double total = 0.0;
  for (const double v : values) total += v;
  return total / static_cast<double>(values.size());
}

void check_metric_name(const std::string& metric) {
  if (metric != "sgw" && metric != "risgw" && metric != "sw" && metric != "risw") {
    throw ContractError("unknown metric '" + metric + "'");
  }
}

/// Runs one of the four sliced metrics on an aligned pair. `report` is filled
/// with metric-specific fields when non-null.
double evaluate_metric(const std::string& metric, const PointCloud& mu,
                       const PointCloud& nu, const DirectionSet& dirs,
                       int max_iters, unsigned threads,
                       nlohmann::json* report, bool per_direction) {
  if (metric == "sgw" || metric == "sw") {
    const SgwResult r = metric == "sgw" ? sgw(mu, nu, dirs, threads)
                                        : sw_delta(mu, nu, dirs, threads);
    if (report) {
      if (per_direction) (*report)["per_direction"] = r.per_direction;
    }
    return r.value;
  }
  RisgwOptions opts;
  opts.max_iters = max_iters;
  opts.threads = threads;
  const RisgwResult r = metric == "risgw" ? risgw(mu, nu, dirs, opts)
                                          : risw(mu, nu, dirs, opts);
  if (report) {
    (*report)["initial_value"] = r.trace.objective_per_iter.front();
    (*report)["iters"] = r.trace.iters;
    (*report)["converged"] = r.trace.converged;
  }
  return r.value;
}

int report_failure(const std::exception& e, int code, std::ostream& err) {
  err << "error: " << e.what() << "\n";
  return code;
}

template <typename Fn>
int guarded(std::ostream& err, Fn&& fn) {
  try {
    return fn();
  } catch (const IoError& e) {
    return report_failure(e, 1, err);
  } catch (const ContractError& e) {
    return report_failure(e, 2, err);
  } catch (const std::invalid_argument& e) {
    return report_failure(e, 2, err);
  } catch (const std::exception& e) {
    return report_failure(e, 1, err);
  }
}

}  // namespace

double percentile(std::vector<double> values, double pct) {
  if (values.empty()) return 0.0;
  std::sort(values.begin(), values.end());
  const double h = pct / 100.0 * static_cast<double>(values.size() - 1);
  const auto lo = static_cast<std::size_t>(std::floor(h));
  const std::size_t hi = std::min(lo + 1, values.size() - 1);
  const double frac = h - static_cast<double>(lo);
  return values[lo] * (1.0 - frac) + values[hi] * frac;
}

int run_compute(const ComputeOptions& options, std::ostream& out,
                std::ostream& err) {
  return guarded(err, [&]() -> int {
    check_metric_name(options.metric);
    const auto start = Clock::now();

    PointCloud mu = load_cloud(options.source);
    PointCloud nu = load_cloud(options.target);
    if (mu.dim() > nu.dim()) {
      throw ContractError("source dimension (" + std::to_string(mu.dim()) +
                          ") exceeds target dimension (" +
                          std::to_string(nu.dim()) + ")");
    }

    const Eigen::Index min_n = std::min(mu.size(), nu.size());
    Eigen::Index wanted = options.sample_size > 0
                              ? static_cast<Eigen::Index>(options.sample_size)
                              : min_n;
    if (wanted > min_n) {
      throw ContractError("--n larger than the smallest cloud (" +
                          std::to_string(min_n) + " points)");
    }
    const bool want_subsample = options.subsample || options.sample_size > 0;
    if (mu.size() != nu.size() && !want_subsample) {
      throw ContractError("clouds have " + std::to_string(mu.size()) + " and " +
                          std::to_string(nu.size()) +
                          " points; pass --subsample or --n");
    }
    if (want_subsample) {
      mu = subsample(mu, wanted, rng::mix(options.seed, 101));
      nu = subsample(nu, wanted, rng::mix(options.seed, 102));
    }
    if (options.normalize) {
      mu = normalize_cloud(mu);
      nu = normalize_cloud(nu);
    }

    const DirectionSet dirs = DirectionSet::sample(
        options.num_directions, nu.dim(), options.seed);

    nlohmann::json report;
    report["command"] = "compute";
    report["source"] = options.source;
    report["target"] = options.target;
    report["metric"] = options.metric;
    report["seed"] = options.seed;
    report["L"] = options.num_directions;
    report["n"] = mu.size();
    report["p"] = mu.dim();
    report["q"] = nu.dim();
    report["normalize"] = options.normalize;
    report["value"] = evaluate_metric(options.metric, mu, nu, dirs,
                                      options.max_iters, options.threads,
                                      &report, options.per_direction);

    const double ms = elapsed_ms(start);
    err << "slicedgw compute: " << ms << " ms\n";
    if (options.timing) report["wall_ms"] = ms;

    return write_product(options.output, report.dump(2) + "\n", out, err);
  });
}

std::vector<SpiralCurveRow> spiral_curve(const SpiralOptions& options) {
  std::vector<double> angles = options.angles;
  if (angles.empty()) {
    for (int k = 0; k <= 8; ++k) angles.push_back(kPi * k / 8.0);
  }
  RisgwOptions ropts;
  ropts.max_iters = options.max_iters;
  ropts.threads = options.threads;

  std::vector<SpiralCurveRow> rows;
  rows.reserve(angles.size());
  for (const double angle : angles) {
    std::vector<double> sgw_vals, ris_vals;
    for (long t = 0; t < options.trials; ++t) {
      const auto trial = static_cast<std::uint64_t>(t);
      const PointCloud source =
          make_spiral(options.n, rng::mix(options.seed, 2 * trial));
      const PointCloud target = rotate2d(
          make_spiral(options.n, rng::mix(options.seed, 2 * trial + 1)), angle);
      const DirectionSet dirs = DirectionSet::sample(
          options.num_directions, 2, rng::mix(options.seed, 7000 + trial));
      sgw_vals.push_back(sgw(source, target, dirs, options.threads).value);
      ris_vals.push_back(risgw(source, target, dirs, ropts).value);
    }
    rows.push_back(SpiralCurveRow{angle, mean(sgw_vals),
                                  percentile(sgw_vals, 20.0),
                                  percentile(sgw_vals, 80.0), mean(ris_vals),
                                  percentile(ris_vals, 20.0),
                                  percentile(ris_vals, 80.0)});
  }
  return rows;
}

int run_spiral(const SpiralOptions& options, std::ostream& out,
               std::ostream& err) {
  return guarded(err, [&]() -> int {
    const auto start = Clock::now();
    const std::vector<SpiralCurveRow> rows = spiral_curve(options);
    std::ostringstream csv;
    csv << "angle,mean_sgw,sgw_p20,sgw_p80,mean_risgw,risgw_p20,risgw_p80\n";
    for (const SpiralCurveRow& r : rows) {
      csv << format_double(r.angle) << ',' << format_double(r.mean_sgw) << ','
          << format_double(r.sgw_p20) << ',' << format_double(r.sgw_p80) << ','
          << format_double(r.mean_risgw) << ',' << format_double(r.risgw_p20)
          << ',' << format_double(r.risgw_p80) << '\n';
    }
    err << "slicedgw spiral: " << elapsed_ms(start) << " ms\n";
    return write_product(options.output, csv.str(), out, err);
  });
}

std::vector<BenchRow> bench_series(const BenchOptions& options) {
  std::vector<long> sizes = options.sizes;
  if (sizes.empty()) {
    for (long n = 1L << 14; n <= (1L << 20); n <<= 1) sizes.push_back(n);
  }
  // Warm up allocators and caches before measuring.
  {
    const PointCloud a = gaussian_cloud(4096, 2, rng::mix(options.seed, 900));
    const PointCloud b = gaussian_cloud(4096, 2, rng::mix(options.seed, 901));
    const DirectionSet dirs =
        DirectionSet::sample(options.num_directions, 2, options.seed);
    sgw(a, b, dirs, options.threads);
  }

  std::vector<BenchRow> rows;
  rows.reserve(sizes.size());
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    const long n = sizes[i];
    const PointCloud mu =
        gaussian_cloud(n, 2, rng::mix(options.seed, 2 * i));
    const PointCloud nu =
        gaussian_cloud(n, 2, rng::mix(options.seed, 2 * i + 1));
    const DirectionSet dirs =
        DirectionSet::sample(options.num_directions, 2, options.seed);
    const auto start = Clock::now();
    const SgwResult r = sgw(mu, nu, dirs, options.threads);
    const double ms = elapsed_ms(start);
    (void)r;
    rows.push_back(BenchRow{n, ms});
  }
  return rows;
}

int run_bench(const BenchOptions& options, std::ostream& out,
              std::ostream& err) {
  return guarded(err, [&]() -> int {
    const std::vector<BenchRow> rows = bench_series(options);
    std::ostringstream csv;
    csv << "n,milliseconds\n";
    for (const BenchRow& r : rows) {
      csv << r.n << ',' << format_double(r.milliseconds) << '\n';
      err << "slicedgw bench: n=" << r.n << " took " << r.milliseconds
          << " ms\n";
    }
    return write_product(options.output, csv.str(), out, err);
  });
}

int run_pairwise(const PairwiseOptions& options, std::ostream& out,
                 std::ostream& err) {
  return guarded(err, [&]() -> int {
    check_metric_name(options.metric);
    const auto start = Clock::now();

    std::vector<fs::path> files;
    if (!fs::is_directory(options.directory)) {
      throw IoError(options.directory + ": not a directory");
    }
    for (const auto& entry : fs::directory_iterator(options.directory)) {
      if (!entry.is_regular_file()) continue;
      std::string ext = entry.path().extension().string();
      std::transform(ext.begin(), ext.end(), ext.begin(),
                     [](unsigned char c) { return std::tolower(c); });
      if (ext == ".csv" || ext == ".off") files.push_back(entry.path());
    }
    std::sort(files.begin(), files.end());
    if (files.size() < 2) {
      throw ContractError("need at least 2 cloud files, found " +
                          std::to_string(files.size()));
    }

    std::vector<PointCloud> clouds;
    clouds.reserve(files.size());
    for (const fs::path& f : files) clouds.push_back(load_cloud(f));

    Eigen::Index wanted = clouds.front().size();
    for (const PointCloud& c : clouds) wanted = std::min(wanted, c.size());
    if (options.sample_size > 0) {
      if (static_cast<Eigen::Index>(options.sample_size) > wanted) {
        throw ContractError("--n larger than the smallest cloud (" +
                            std::to_string(wanted) + " points)");
      }
      wanted = static_cast<Eigen::Index>(options.sample_size);
    }
    for (std::size_t i = 0; i < clouds.size(); ++i) {
      clouds[i] = subsample(clouds[i], wanted, rng::mix(options.seed, i));
      if (options.normalize) clouds[i] = normalize_cloud(clouds[i]);
    }

    const auto k = static_cast<Eigen::Index>(clouds.size());
    Eigen::MatrixXd values = Eigen::MatrixXd::Zero(k, k);
    for (Eigen::Index i = 0; i < k; ++i) {
      for (Eigen::Index j = i + 1; j < k; ++j) {
        // The lower-dimensional cloud plays the source role.
        const Eigen::Index a = clouds[i].dim() <= clouds[j].dim() ? i : j;
        const Eigen::Index b = a == i ? j : i;
        const DirectionSet dirs = DirectionSet::sample(
            options.num_directions, clouds[b].dim(), options.seed);
        const double v =
            evaluate_metric(options.metric, clouds[a], clouds[b], dirs,
                            options.max_iters, options.threads, nullptr, false);
        values(i, j) = v;
        values(j, i) = v;
      }
    }

    std::vector<std::string> names;
    names.reserve(files.size());
    for (const fs::path& f : files) names.push_back(f.filename().string());

    std::ostringstream matrix_csv;
    matrix_csv << "file";
    for (const std::string& name : names) matrix_csv << ',' << name;
    matrix_csv << '\n';
    for (Eigen::Index i = 0; i < k; ++i) {
      matrix_csv << names[static_cast<std::size_t>(i)];
      for (Eigen::Index j = 0; j < k; ++j) {
        matrix_csv << ',' << format_double(values(i, j));
      }
      matrix_csv << '\n';
    }

    err << "slicedgw pairwise: " << elapsed_ms(start) << " ms\n";

    std::string mds_csv;
    if (options.mds) {
      const Eigen::MatrixXd coords = classical_mds(values, 2);
      std::ostringstream mds_stream;
      mds_stream << "file,x,y\n";
      for (Eigen::Index i = 0; i < k; ++i) {
        mds_stream << names[static_cast<std::size_t>(i)] << ','
                   << format_double(coords(i, 0)) << ','
                   << format_double(coords(i, 1)) << '\n';
      }
      mds_csv = mds_stream.str();
    }

    if (!options.output.empty()) {
      const int rc = write_product(options.output, matrix_csv.str(), out, err);
      if (rc != 0) return rc;
      if (options.mds) {
        return write_product(options.output + ".mds.csv", mds_csv, out, err);
      }
      return 0;
    }
    out << matrix_csv.str();
    if (options.mds) out << '\n' << mds_csv;
    return 0;
  });
}

}  // namespace slicedgw::cli
