#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "slicedgw/cli/commands.hpp"
#include "slicedgw/cli/io.hpp"
#include "slicedgw/cli/mds.hpp"
#include "slicedgw/cli/synth.hpp"
#include "slicedgw/rng.hpp"

using namespace slicedgw;
using namespace slicedgw::cli;

namespace {

namespace fs = std::filesystem;

fs::path fresh_dir(const std::string& tag) {
  const fs::path dir = fs::temp_directory_path() / ("slicedgw_unit_" + tag);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

void write_file(const fs::path& path, const std::string& content) {
  std::ofstream f(path);
  f << content;
}

}  // namespace

TEST_CASE("CSV loader handles headers, blanks and errors") {
  SUBCASE("plain numeric rows") {
    std::istringstream in("1.5,2\n3,4\n");
    const PointCloud c = load_csv(in, "test");
    CHECK(c.size() == 2);
    CHECK(c.dim() == 2);
    CHECK(c.points()(0, 0) == 1.5);
  }
  SUBCASE("single header row is auto-detected") {
    std::istringstream in("x,y\n1,2\n3,4\n");
    const PointCloud c = load_csv(in, "test");
    CHECK(c.size() == 2);
  }
  SUBCASE("blank lines are skipped") {
    std::istringstream in("1,2\n\n3,4\n");
    CHECK(load_csv(in, "test").size() == 2);
  }
  SUBCASE("ragged rows are rejected with a line number") {
    std::istringstream in("1,2\n3\n");
    CHECK_THROWS_WITH_AS(load_csv(in, "test"),
                         doctest::Contains("test:2"), IoError);
  }
  SUBCASE("a second non-numeric row is an error") {
    std::istringstream in("x,y\n1,2\noops,4\n");
    CHECK_THROWS_AS(load_csv(in, "test"), IoError);
  }
  SUBCASE("empty input is an error") {
    std::istringstream in("");
    CHECK_THROWS_AS(load_csv(in, "test"), IoError);
  }
}

TEST_CASE("OFF loader reads vertices and reports malformed input") {
  SUBCASE("well-formed file") {
    std::istringstream in("OFF\n3 1 0\n0 0 0\n1 0 0\n0 1 0\n3 0 1 2\n");
    const PointCloud c = load_off(in, "mesh");
    CHECK(c.size() == 3);
    CHECK(c.dim() == 3);
    CHECK(c.points()(1, 0) == 1.0);
  }
  SUBCASE("comments are skipped") {
    std::istringstream in("# comment\nOFF\n1 0 0\n0.5 0.25 0.125\n");
    CHECK(load_off(in, "mesh").size() == 1);
  }
  SUBCASE("vertex colors after the coordinates are ignored") {
    std::istringstream in("OFF\n1 0 0\n1 2 3 255 0 0\n");
    const PointCloud c = load_off(in, "mesh");
    CHECK(c.points()(0, 2) == 3.0);
  }
  SUBCASE("bad header carries the line number") {
    std::istringstream in("OFX\n3 1 0\n");
    CHECK_THROWS_WITH_AS(load_off(in, "mesh"),
                         doctest::Contains("mesh:1"), IoError);
  }
  SUBCASE("bad counts line") {
    std::istringstream in("OFF\nthree 1 0\n");
    CHECK_THROWS_WITH_AS(load_off(in, "mesh"),
                         doctest::Contains("mesh:2"), IoError);
  }
  SUBCASE("truncated vertex list") {
    std::istringstream in("OFF\n3 0 0\n0 0 0\n1 1 1\n");
    CHECK_THROWS_AS(load_off(in, "mesh"), IoError);
  }
  SUBCASE("short vertex line carries its line number") {
    std::istringstream in("OFF\n2 0 0\n0 0 0\n1 1\n");
    CHECK_THROWS_WITH_AS(load_off(in, "mesh"),
                         doctest::Contains("mesh:4"), IoError);
  }
}

TEST_CASE("subsample is seeded, order-preserving and validated") {
  Eigen::MatrixXd pts(6, 1);
  pts << 0, 1, 2, 3, 4, 5;
  const PointCloud cloud(pts);
  const PointCloud a = subsample(cloud, 3, 9);
  const PointCloud b = subsample(cloud, 3, 9);
  CHECK(a.points() == b.points());
  // Selected rows keep their original relative order (here: ascending values).
  for (Eigen::Index i = 1; i < a.size(); ++i) {
    CHECK(a.points()(i, 0) > a.points()(i - 1, 0));
  }
  CHECK(subsample(cloud, 6, 1).points() == pts);
  CHECK_THROWS_AS(subsample(cloud, 7, 1), std::invalid_argument);
  CHECK_THROWS_AS(subsample(cloud, 0, 1), std::invalid_argument);
}

TEST_CASE("normalize_cloud centers and scales") {
  Eigen::MatrixXd pts(4, 2);
  pts << 10, 0, 12, 0, 10, 2, 12, 2;
  const PointCloud n = normalize_cloud(PointCloud(pts));
  CHECK(n.points().colwise().mean().cwiseAbs().maxCoeff() <= 1e-12);
  const double rms =
      std::sqrt(n.points().squaredNorm() / static_cast<double>(n.size()));
  CHECK(rms == doctest::Approx(1.0).epsilon(1e-12));

  // A single repeated point must not divide by zero.
  Eigen::MatrixXd flat = Eigen::MatrixXd::Constant(3, 2, 4.0);
  const PointCloud z = normalize_cloud(PointCloud(flat));
  CHECK(z.points().cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("format_double round-trips 64-bit values") {
  rng::Engine eng(77);
  for (int i = 0; i < 200; ++i) {
    double v = (rng::canonical(eng) - 0.5) * std::pow(10.0, double(i % 60) - 30.0);
    if (i % 17 == 0) v = -v;
    const std::string s = format_double(v);
    CHECK(std::strtod(s.c_str(), nullptr) == v);
  }
  CHECK(std::strtod(format_double(0.1).c_str(), nullptr) == 0.1);
}

TEST_CASE("percentile interpolates linearly") {
  const std::vector<double> v{4.0, 1.0, 3.0, 2.0};
  CHECK(percentile(v, 0.0) == 1.0);
  CHECK(percentile(v, 100.0) == 4.0);
  CHECK(percentile(v, 50.0) == doctest::Approx(2.5));
  CHECK(percentile(v, 25.0) == doctest::Approx(1.75));
}

TEST_CASE("jacobi eigensolver diagonalizes symmetric matrices") {
  rng::Engine eng(31);
  Eigen::MatrixXd a(5, 5);
  for (Eigen::Index i = 0; i < 5; ++i) {
    for (Eigen::Index j = 0; j <= i; ++j) {
      a(i, j) = rng::standard_normal(eng);
      a(j, i) = a(i, j);
    }
  }
  const EigenDecomposition eig = jacobi_eigh(a);
  for (Eigen::Index k = 0; k < 5; ++k) {
    const Eigen::VectorXd residual =
        a * eig.vectors.col(k) - eig.values[k] * eig.vectors.col(k);
    CHECK(residual.cwiseAbs().maxCoeff() <= 1e-8);
    if (k > 0) CHECK(eig.values[k] <= eig.values[k - 1]);
    CHECK(eig.vectors.col(k).norm() == doctest::Approx(1.0).epsilon(1e-10));
  }
}

TEST_CASE("classical MDS recovers planar configurations") {
  // Distances of a 3-4-5 right triangle plus a far point.
  Eigen::MatrixXd pts(4, 2);
  pts << 0, 0, 3, 0, 0, 4, 6, 5;
  Eigen::MatrixXd dist(4, 4);
  for (Eigen::Index i = 0; i < 4; ++i) {
    for (Eigen::Index j = 0; j < 4; ++j) {
      dist(i, j) = (pts.row(i) - pts.row(j)).norm();
    }
  }
  const Eigen::MatrixXd coords = classical_mds(dist, 2);
  for (Eigen::Index i = 0; i < 4; ++i) {
    for (Eigen::Index j = 0; j < 4; ++j) {
      const double recovered = (coords.row(i) - coords.row(j)).norm();
      CHECK(recovered == doctest::Approx(dist(i, j)).epsilon(1e-8));
    }
  }
}

TEST_CASE("spiral generator is deterministic and two-armed") {
  const PointCloud a = make_spiral(50, 4);
  const PointCloud b = make_spiral(50, 4);
  CHECK(a.points() == b.points());
  CHECK(a.size() == 50);
  CHECK(a.dim() == 2);
  CHECK(a.points() != make_spiral(50, 5).points());
}

TEST_CASE("rotate2d applies a rotation matrix") {
  Eigen::MatrixXd pts(1, 2);
  pts << 1.0, 0.0;
  const PointCloud r = rotate2d(PointCloud(pts), M_PI / 2.0);
  CHECK(r.points()(0, 0) == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(r.points()(0, 1) == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("run_compute produces a reproducible JSON report") {
  const fs::path dir = fresh_dir("compute");
  write_file(dir / "a.csv", "0,0\n1,0\n0,1\n2,2\n");
  write_file(dir / "b.csv", "x,y\n0,0\n1,0\n0,1\n2,2\n");

  ComputeOptions opts;
  opts.source = (dir / "a.csv").string();
  opts.target = (dir / "b.csv").string();
  opts.num_directions = 6;
  opts.seed = 5;

  std::ostringstream out1, err1, out2, err2;
  CHECK(run_compute(opts, out1, err1) == 0);
  CHECK(run_compute(opts, out2, err2) == 0);
  CHECK(out1.str() == out2.str());

  const nlohmann::json report = nlohmann::json::parse(out1.str());
  CHECK(report.at("value").get<double>() == 0.0);
  CHECK(report.at("n").get<int>() == 4);
  CHECK(report.at("metric").get<std::string>() == "sgw");
  // Numeric fields round-trip: re-serializing the parsed report is identical.
  CHECK(nlohmann::json::parse(report.dump()).dump() == report.dump());

  SUBCASE("per-direction costs are optional") {
    opts.per_direction = true;
    std::ostringstream out, err;
    CHECK(run_compute(opts, out, err) == 0);
    const nlohmann::json r = nlohmann::json::parse(out.str());
    CHECK(r.at("per_direction").size() == 6);
  }
  SUBCASE("timing goes to stderr, and into JSON only on request") {
    CHECK(err1.str().find("ms") != std::string::npos);
    CHECK(out1.str().find("wall_ms") == std::string::npos);
    opts.timing = true;
    std::ostringstream out, err;
    CHECK(run_compute(opts, out, err) == 0);
    CHECK(out.str().find("wall_ms") != std::string::npos);
  }
}

TEST_CASE("run_compute maps failures to exit codes") {
  const fs::path dir = fresh_dir("computefail");
  write_file(dir / "a.csv", "0,0\n1,0\n0,1\n");
  write_file(dir / "b.csv", "0,0\n1,0\n0,1\n2,2\n");
  write_file(dir / "bad.off", "OFX\n1 0 0\n0 0 0\n");

  ComputeOptions opts;
  opts.source = (dir / "a.csv").string();
  opts.target = (dir / "b.csv").string();

  std::ostringstream out, err;
  SUBCASE("size mismatch without subsampling is a contract violation") {
    CHECK(run_compute(opts, out, err) == 2);
    CHECK(err.str().find("subsample") != std::string::npos);
  }
  SUBCASE("subsampling reconciles the sizes") {
    opts.subsample = true;
    CHECK(run_compute(opts, out, err) == 0);
    CHECK(nlohmann::json::parse(out.str()).at("n").get<int>() == 3);
  }
  SUBCASE("explicit --n smaller than both clouds") {
    opts.sample_size = 2;
    CHECK(run_compute(opts, out, err) == 0);
    CHECK(nlohmann::json::parse(out.str()).at("n").get<int>() == 2);
  }
  SUBCASE("explicit --n beyond the smallest cloud fails the contract") {
    opts.sample_size = 5;
    CHECK(run_compute(opts, out, err) == 2);
  }
  SUBCASE("missing file is an I/O error") {
    opts.source = (dir / "missing.csv").string();
    CHECK(run_compute(opts, out, err) == 1);
  }
  SUBCASE("malformed OFF is an I/O error with a line number") {
    opts.source = (dir / "bad.off").string();
    opts.target = (dir / "bad.off").string();
    CHECK(run_compute(opts, out, err) == 1);
    CHECK(err.str().find(":1") != std::string::npos);
  }
  SUBCASE("source of higher dimension than the target is rejected") {
    write_file(dir / "c3.csv", "0,0,0\n1,0,0\n0,1,0\n");
    opts.source = (dir / "c3.csv").string();
    opts.target = (dir / "a.csv").string();
    CHECK(run_compute(opts, out, err) == 2);
  }
}

TEST_CASE("run_spiral emits one row per angle, deterministically") {
  SpiralOptions opts;
  opts.n = 24;
  opts.num_directions = 4;
  opts.trials = 2;
  opts.angles = {0.0, 1.0, 2.0};
  opts.seed = 8;
  opts.max_iters = 5;

  std::ostringstream out1, err1, out2, err2;
  CHECK(run_spiral(opts, out1, err1) == 0);
  CHECK(run_spiral(opts, out2, err2) == 0);
  CHECK(out1.str() == out2.str());

  std::istringstream lines(out1.str());
  std::string line;
  std::getline(lines, line);
  CHECK(line ==
        "angle,mean_sgw,sgw_p20,sgw_p80,mean_risgw,risgw_p20,risgw_p80");
  int rows = 0;
  while (std::getline(lines, line)) {
    if (!line.empty()) ++rows;
  }
  CHECK(rows == 3);
}

TEST_CASE("run_bench measures positive times") {
  BenchOptions opts;
  opts.sizes = {256, 512};
  opts.num_directions = 4;
  std::ostringstream out, err;
  CHECK(run_bench(opts, out, err) == 0);
  std::istringstream lines(out.str());
  std::string line;
  std::getline(lines, line);
  CHECK(line == "n,milliseconds");
  int rows = 0;
  while (std::getline(lines, line)) {
    if (line.empty()) continue;
    ++rows;
    const auto comma = line.find(',');
    CHECK(std::stod(line.substr(comma + 1)) > 0.0);
  }
  CHECK(rows == 2);
}

TEST_CASE("run_pairwise builds a symmetric zero-diagonal matrix") {
  const fs::path dir = fresh_dir("pairwise");
  write_file(dir / "a.csv", "0,0\n1,0\n0,1\n2,2\n0.5,0.5\n");
  write_file(dir / "b.csv", "0,0\n2,0\n0,2\n4,4\n1,1\n");
  write_file(dir / "c.csv", "1,1\n2,1\n1,2\n3,3\n1.5,1.5\n");

  PairwiseOptions opts;
  opts.directory = dir.string();
  opts.num_directions = 8;
  opts.seed = 2;
  opts.mds = true;

  std::ostringstream out1, err1, out2, err2;
  CHECK(run_pairwise(opts, out1, err1) == 0);
  CHECK(run_pairwise(opts, out2, err2) == 0);
  CHECK(out1.str() == out2.str());

  // Parse the matrix section.
  std::istringstream lines(out1.str());
  std::string header;
  std::getline(lines, header);
  CHECK(header == "file,a.csv,b.csv,c.csv");
  Eigen::MatrixXd m(3, 3);
  for (int i = 0; i < 3; ++i) {
    std::string line;
    std::getline(lines, line);
    std::istringstream fields(line);
    std::string tok;
    std::getline(fields, tok, ',');  // name
    for (int j = 0; j < 3; ++j) {
      std::getline(fields, tok, ',');
      m(i, j) = std::stod(tok);
    }
  }
  CHECK(m.diagonal().cwiseAbs().maxCoeff() == 0.0);
  CHECK((m - m.transpose()).cwiseAbs().maxCoeff() == 0.0);
  // b is a scaled copy of a, c a translate of a: normalization plus
  // translation invariance make them all equivalent for sgw.
  CHECK(m.cwiseAbs().maxCoeff() <= 1e-8);

  // MDS section follows after a blank line.
  CHECK(out1.str().find("\nfile,x,y\n") != std::string::npos);
}

TEST_CASE("run_pairwise wants at least two files") {
  const fs::path dir = fresh_dir("pairwise_single");
  write_file(dir / "only.csv", "0,0\n1,1\n");
  PairwiseOptions opts;
  opts.directory = dir.string();
  std::ostringstream out, err;
  CHECK(run_pairwise(opts, out, err) == 2);
}
