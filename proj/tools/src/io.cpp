#include "slicedgw/cli/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numeric>
#include <sstream>
#include <vector>

#include "slicedgw/rng.hpp"

namespace slicedgw::cli {

namespace {

std::string trimmed(std::string s) {
  const auto issp = [](unsigned char c) { return std::isspace(c) != 0; };
  while (!s.empty() && issp(s.back())) s.pop_back();
  std::size_t start = 0;
  while (start < s.size() && issp(s[start])) ++start;
  return s.substr(start);
}

bool parse_double(const std::string& token, double& out) {
  const char* begin = token.data();
  const char* end = begin + token.size();
  auto [ptr, ec] = std::from_chars(begin, end, out);
  return ec == std::errc{} && ptr == end;
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::stringstream ss(line);
  while (std::getline(ss, field, ',')) fields.push_back(trimmed(field));
  if (!line.empty() && line.back() == ',') fields.emplace_back();
  return fields;
}

[[noreturn]] void fail(const std::string& name, std::size_t line,
                       const std::string& what) {
  throw IoError(name + ":" + std::to_string(line) + ": " + what);
}

}  // namespace

PointCloud load_csv(std::istream& in, const std::string& name) {
  std::vector<std::vector<double>> rows;
  std::string line;
  std::size_t line_no = 0;
  std::size_t cols = 0;
  bool first_content_row = true;
  while (std::getline(in, line)) {
    ++line_no;
    if (trimmed(line).empty()) continue;
    const std::vector<std::string> fields = split_csv(line);
    std::vector<double> row(fields.size());
    bool numeric = true;
    for (std::size_t j = 0; j < fields.size(); ++j) {
      if (!parse_double(fields[j], row[j])) {
        numeric = false;
        break;
      }
    }
    if (!numeric) {
      if (first_content_row) {
        first_content_row = false;  // header row
        continue;
      }
      fail(name, line_no, "non-numeric field");
    }
    first_content_row = false;
    if (cols == 0) {
      cols = row.size();
    } else if (row.size() != cols) {
      fail(name, line_no, "expected " + std::to_string(cols) + " columns, got " +
                              std::to_string(row.size()));
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) {
    throw IoError(name + ": no data rows");
  }
  Eigen::MatrixXd points(static_cast<Eigen::Index>(rows.size()),
                         static_cast<Eigen::Index>(cols));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      points(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = rows[i][j];
    }
  }
  try {
    return PointCloud(std::move(points));
  } catch (const std::invalid_argument& e) {
    throw IoError(name + ": " + e.what());
  }
}

PointCloud load_off(std::istream& in, const std::string& name) {
  std::string line;
  std::size_t line_no = 0;
  auto next_content = [&](std::string& out) {
    while (std::getline(in, line)) {
      ++line_no;
      const std::string t = trimmed(line);
      if (t.empty() || t[0] == '#') continue;
      out = t;
      return true;
    }
    return false;
  };

  std::string header;
  if (!next_content(header)) {
    throw IoError(name + ": empty file");
  }
  if (header != "OFF") fail(name, line_no, "expected OFF header");

  std::string counts;
  if (!next_content(counts)) fail(name, line_no, "missing counts line");
  long vertices = -1, faces = -1, edges = -1;
  {
    std::stringstream ss(counts);
    if (!(ss >> vertices >> faces >> edges) || vertices < 1 || faces < 0 ||
        edges < 0) {
      fail(name, line_no, "expected vertex/face/edge counts");
    }
    std::string rest;
    if (ss >> rest) fail(name, line_no, "trailing tokens on counts line");
  }

  Eigen::MatrixXd points(vertices, 3);
  for (long v = 0; v < vertices; ++v) {
    std::string vertex_line;
    if (!next_content(vertex_line)) {
      fail(name, line_no + 1, "expected " + std::to_string(vertices) +
                                  " vertex lines, file ended after " +
                                  std::to_string(v));
    }
    std::stringstream ss(vertex_line);
    std::string tok;
    for (int j = 0; j < 3; ++j) {
      double value = 0.0;
      if (!(ss >> tok) || !parse_double(tok, value)) {
        fail(name, line_no, "expected 3 vertex coordinates");
      }
      points(v, j) = value;
    }
    // Anything after the three coordinates (colors etc.) is ignored.
  }
  try {
    return PointCloud(std::move(points));
  } catch (const std::invalid_argument& e) {
    throw IoError(name + ": " + e.what());
  }
}

PointCloud load_cloud(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw IoError(path.string() + ": cannot open file");
  }
  std::string ext = path.extension().string();
  std::transform(ext.begin(), ext.end(), ext.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  if (ext == ".off") return load_off(in, path.string());
  return load_csv(in, path.string());
}

PointCloud subsample(const PointCloud& cloud, Eigen::Index target,
                     std::uint64_t seed) {
  if (target < 1 || target > cloud.size()) {
    throw std::invalid_argument("subsample: target out of range");
  }
  if (target == cloud.size()) return cloud;

  rng::Engine eng(seed);
  auto bounded = [&eng](std::uint64_t bound) {
    // Rejection sampling keeps the draw unbiased and the stream portable.
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
      const std::uint64_t r = eng();
      if (r >= threshold) return r % bound;
    }
  };

  std::vector<Eigen::Index> indices(static_cast<std::size_t>(cloud.size()));
  std::iota(indices.begin(), indices.end(), Eigen::Index{0});
  for (Eigen::Index i = 0; i < target; ++i) {
    const auto j = i + static_cast<Eigen::Index>(
                           bounded(static_cast<std::uint64_t>(cloud.size() - i)));
    std::swap(indices[i], indices[j]);
  }
  std::sort(indices.begin(), indices.begin() + target);

  Eigen::MatrixXd points(target, cloud.dim());
  for (Eigen::Index i = 0; i < target; ++i) {
    points.row(i) = cloud.points().row(indices[i]);
  }
  return PointCloud(std::move(points));
}

PointCloud normalize_cloud(const PointCloud& cloud) {
  const Eigen::RowVectorXd mean = cloud.points().colwise().mean();
  Eigen::MatrixXd centered = cloud.points().rowwise() - mean;
  const double rms = std::sqrt(centered.squaredNorm() /
                               static_cast<double>(cloud.size()));
  if (rms > 0.0) centered /= rms;
  return PointCloud(std::move(centered));
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace slicedgw::cli
