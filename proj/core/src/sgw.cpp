#include "slicedgw/sgw.hpp"

#include <algorithm>
#include <exception>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "slicedgw/sort.hpp"

namespace slicedgw {

StiefelFrame default_frame(Eigen::Index p, Eigen::Index q) {
  return p == q ? StiefelFrame::identity(p) : StiefelFrame::padding(q, p);
}

namespace detail {

namespace {

void argsort(const std::vector<double>& v, std::vector<std::int32_t>& order) {
  order.resize(v.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::int32_t i, std::int32_t j) {
    return v[i] < v[j] || (v[i] == v[j] && i < j);
  });
}

}  // namespace

SgwResult sliced_metric(const PointCloud& mu, const PointCloud& nu,
                        const StiefelFrame& frame, const DirectionSet& dirs,
                        SliceCost cost, unsigned threads,
                        FixedAssignments* assignments) {
  if (mu.size() != nu.size()) {
    throw std::invalid_argument("sgw: clouds must have the same number of points");
  }
  if (frame.cols() != mu.dim() || frame.rows() != nu.dim()) {
    throw std::invalid_argument("sgw: frame must map the source dimension to the target dimension");
  }
  if (dirs.dim() != nu.dim()) {
    throw std::invalid_argument("sgw: directions must live on the target sphere");
  }

  const Eigen::Index n = mu.size();
  const Eigen::Index L = dirs.count();
  const Eigen::MatrixXd uplifted = mu.points() * frame.matrix().transpose();

  SgwResult result;
  result.per_direction.assign(static_cast<std::size_t>(L), 0.0);
  result.directions = L;
  result.seed = dirs.seed();
  if (assignments) assignments->assign(static_cast<std::size_t>(L), {});

  // Each direction is independent; results land in per_direction by index and
  // are reduced sequentially afterwards, so the value is identical for every
  // thread count.
  auto run_range = [&](Eigen::Index l0, Eigen::Index l1) {
    std::vector<double> proj_mu(n), proj_nu(n), sorted_mu(n), sorted_nu(n), scratch;
    for (Eigen::Index l = l0; l < l1; ++l) {
      const Eigen::VectorXd theta = dirs.matrix().row(l).transpose();
      Eigen::Map<Eigen::VectorXd>(proj_mu.data(), n).noalias() = uplifted * theta;
      Eigen::Map<Eigen::VectorXd>(proj_nu.data(), n).noalias() = nu.points() * theta;
      std::copy(proj_mu.begin(), proj_mu.end(), sorted_mu.begin());
      std::copy(proj_nu.begin(), proj_nu.end(), sorted_nu.begin());
      sort_values(sorted_mu, scratch);
      sort_values(sorted_nu, scratch);

      PermKind kind = PermKind::identity;
      double c = 0.0;
      if (cost == SliceCost::gromov) {
        const Assignment1D sol = solve_sorted(sorted_mu, sorted_nu);
        kind = sol.kind;
        c = sol.cost;
      } else {
        double acc = 0.0;
        for (Eigen::Index r = 0; r < n; ++r) {
          const double d = sorted_mu[r] - sorted_nu[r];
          acc += d * d;
        }
        c = acc / static_cast<double>(n);
      }
      result.per_direction[static_cast<std::size_t>(l)] = c;

      if (assignments) {
        DirectionAssignment& da = (*assignments)[static_cast<std::size_t>(l)];
        argsort(proj_mu, da.mu_order);
        argsort(proj_nu, da.nu_order);
        da.kind = kind;
      }
    }
  };

  unsigned worker_count = threads != 0 ? threads : std::thread::hardware_concurrency();
  if (worker_count == 0) worker_count = 1;
  worker_count = std::min<unsigned>(worker_count, static_cast<unsigned>(L));

  if (worker_count <= 1) {
    run_range(0, L);
  } else {
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(worker_count);
    for (unsigned w = 0; w < worker_count; ++w) {
      const Eigen::Index l0 = L * w / worker_count;
      const Eigen::Index l1 = L * (w + 1) / worker_count;
      pool.emplace_back([&, w, l0, l1] {
        try {
          run_range(l0, l1);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
    for (auto& t : pool) t.join();
    for (const auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
  }

  double total = 0.0;
  for (const double c : result.per_direction) total += c;
  result.value = total / static_cast<double>(L);
  return result;
}

}  // namespace detail

SgwResult sgw(const PointCloud& mu, const PointCloud& nu,
              const StiefelFrame& frame, const DirectionSet& dirs,
              unsigned threads) {
  return detail::sliced_metric(mu, nu, frame, dirs, detail::SliceCost::gromov,
                               threads, nullptr);
}

SgwResult sgw(const PointCloud& mu, const PointCloud& nu,
              const DirectionSet& dirs, unsigned threads) {
  return sgw(mu, nu, default_frame(mu.dim(), nu.dim()), dirs, threads);
}

SgwResult sw_delta(const PointCloud& mu, const PointCloud& nu,
                   const StiefelFrame& frame, const DirectionSet& dirs,
                   unsigned threads) {
  return detail::sliced_metric(mu, nu, frame, dirs,
                               detail::SliceCost::wasserstein, threads, nullptr);
}

SgwResult sw_delta(const PointCloud& mu, const PointCloud& nu,
                   const DirectionSet& dirs, unsigned threads) {
  return sw_delta(mu, nu, default_frame(mu.dim(), nu.dim()), dirs, threads);
}

}  // namespace slicedgw
