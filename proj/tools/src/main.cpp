#include <iostream>

#include <CLI11.hpp>

#include "slicedgw/cli/commands.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Sliced Gromov-Wasserstein toolkit"};
  app.require_subcommand(1);

  slicedgw::cli::ComputeOptions copt;
  CLI::App* compute = app.add_subcommand(
      "compute", "Sliced discrepancy between two point cloud files");
  compute->add_option("source", copt.source, "Source cloud (CSV or OFF)")
      ->required();
  compute->add_option("target", copt.target, "Target cloud (CSV or OFF)")
      ->required();
  compute->add_option("--metric", copt.metric, "sgw | risgw | sw | risw")
      ->check(CLI::IsMember({"sgw", "risgw", "sw", "risw"}));
  compute->add_option("--L", copt.num_directions, "Number of projection directions");
  compute->add_option("--seed", copt.seed, "RNG seed");
  compute->add_flag("--subsample", copt.subsample,
                    "Subsample both clouds to the smaller size");
  compute->add_option("--n", copt.sample_size, "Subsample both clouds to this size");
  compute->add_flag("--normalize", copt.normalize,
                    "Center and RMS-scale each cloud first");
  compute->add_flag("--per-direction", copt.per_direction,
                    "Include per-direction costs in the report");
  compute->add_flag("--timing", copt.timing,
                    "Include wall-clock milliseconds in the report");
  compute->add_option("--max-iters", copt.max_iters,
                      "Descent iterations for risgw/risw");
  compute->add_option("--threads", copt.threads, "Worker threads (0 = auto)");
  compute->add_option("--output", copt.output, "Write the report here instead of stdout");

  slicedgw::cli::SpiralOptions sopt;
  CLI::App* spiral = app.add_subcommand(
      "spiral", "SGW/RISGW rotation curve on the synthetic spiral dataset");
  spiral->add_option("--n", sopt.n, "Points per spiral");
  spiral->add_option("--L", sopt.num_directions, "Number of projection directions");
  spiral->add_option("--trials", sopt.trials, "Independent trials per angle");
  spiral->add_option("--angles", sopt.angles,
                     "Rotation angles in radians (default 0, pi/8, ..., pi)");
  spiral->add_option("--seed", sopt.seed, "RNG seed");
  spiral->add_option("--max-iters", sopt.max_iters, "Descent iterations for risgw");
  spiral->add_option("--threads", sopt.threads, "Worker threads (0 = auto)");
  spiral->add_option("--output", sopt.output, "Write the CSV here instead of stdout");

  slicedgw::cli::BenchOptions bopt;
  CLI::App* bench = app.add_subcommand(
      "bench", "SGW runtime as a function of the number of points");
  bench->add_option("--sizes", bopt.sizes, "Cloud sizes (default 2^14 ... 2^20)");
  bench->add_option("--L", bopt.num_directions, "Number of projection directions");
  bench->add_option("--seed", bopt.seed, "RNG seed");
  bench->add_option("--threads", bopt.threads, "Worker threads (0 = auto)");
  bench->add_option("--output", bopt.output, "Write the CSV here instead of stdout");

  slicedgw::cli::PairwiseOptions popt;
  CLI::App* pairwise = app.add_subcommand(
      "pairwise", "Pairwise distance matrix over a directory of cloud files");
  pairwise->add_option("dir", popt.directory, "Directory of CSV/OFF files")
      ->required();
  pairwise->add_option("--metric", popt.metric, "sgw | risgw | sw | risw")
      ->check(CLI::IsMember({"sgw", "risgw", "sw", "risw"}));
  pairwise->add_option("--L", popt.num_directions, "Number of projection directions");
  pairwise->add_option("--seed", popt.seed, "RNG seed");
  pairwise->add_option("--n", popt.sample_size,
                       "Common subsample size (default: smallest cloud)");
  pairwise->add_flag("--mds", popt.mds, "Also emit 2D classical MDS coordinates");
  pairwise->add_flag("!--no-normalize", popt.normalize,
                     "Disable per-cloud centering and RMS scaling");
  pairwise->add_option("--max-iters", popt.max_iters,
                       "Descent iterations for risgw/risw");
  pairwise->add_option("--threads", popt.threads, "Worker threads (0 = auto)");
  pairwise->add_option("--output", popt.output,
                       "Write the matrix here (MDS goes to <output>.mds.csv)");

  CLI11_PARSE(app, argc, argv);

  if (compute->parsed()) return slicedgw::cli::run_compute(copt, std::cout, std::cerr);
  if (spiral->parsed()) return slicedgw::cli::run_spiral(sopt, std::cout, std::cerr);
  if (bench->parsed()) return slicedgw::cli::run_bench(bopt, std::cout, std::cerr);
  if (pairwise->parsed()) return slicedgw::cli::run_pairwise(popt, std::cout, std::cerr);
  return 0;
}
