// SPDX-License-Identifier: Apache-2.0

#include "laqc/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include <omp.h>

namespace laqc {

double GridAxis::at(int k) const {
  if (count == 1) return lo;
  const double span = hi - lo;
  return periodic ? lo + span * k / count : lo + span * k / (count - 1);
}

std::size_t grid_size(std::span<const GridAxis> axes) {
  std::size_t n = 1;
  for (const auto& a : axes) {
    if (a.count < 1) throw std::invalid_argument("grid axis with count < 1");
    n *= static_cast<std::size_t>(a.count);
  }
  return n;
}

std::vector<double> grid_point(std::span<const GridAxis> axes, std::size_t flat) {
  std::vector<double> x(axes.size());
  // last axis varies fastest
  for (std::size_t k = axes.size(); k-- > 0;) {
    const auto n = static_cast<std::size_t>(axes[k].count);
    x[k] = axes[k].at(static_cast<int>(flat % n));
    flat /= n;
  }
  return x;
}

namespace {

struct Best {
  double value = std::numeric_limits<double>::infinity();
  std::size_t index = std::numeric_limits<std::size_t>::max();

  void offer(double v, std::size_t i) {
    // NaN never wins
    if (v < value || (v == value && i < index)) {
      value = v;
      index = i;
    }
  }
};

GridResult finish(std::span<const GridAxis> axes, const Best& best, std::size_t n) {
  if (best.index == std::numeric_limits<std::size_t>::max())
    throw std::runtime_error("grid search: objective returned no finite value");
  GridResult r;
  r.x = grid_point(axes, best.index);
  r.value = best.value;
  r.index = best.index;
  r.evaluations = n;
  return r;
}

}  // namespace

GridResult grid_argmin_serial(const Objective& f, std::span<const GridAxis> axes) {
  const std::size_t n = grid_size(axes);
  Best best;
  for (std::size_t i = 0; i < n; ++i) {
    const auto x = grid_point(axes, i);
    best.offer(f(x), i);
  }
  return finish(axes, best, n);
}

GridResult grid_argmin_parallel(const Objective& f, std::span<const GridAxis> axes) {
  const std::size_t n = grid_size(axes);
  Best best;
#pragma omp parallel
  {
    Best local;
#pragma omp for schedule(static)
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(n); ++i) {
      const auto x = grid_point(axes, static_cast<std::size_t>(i));
      local.offer(f(x), static_cast<std::size_t>(i));
    }
#pragma omp critical(laqc_grid_reduce)
    best.offer(local.value, local.index);
  }
  return finish(axes, best, n);
}

SimplexResult nelder_mead(const Objective& f, std::vector<double> x0, const SimplexOptions& opt) {
  const std::size_t n = x0.size();
  if (n == 0) throw std::invalid_argument("nelder_mead: empty start point");
  constexpr double kReflect = 1.0, kExpand = 2.0, kContract = 0.5, kShrink = 0.5;

  std::vector<std::vector<double>> pts(n + 1, x0);
  for (std::size_t k = 0; k < n; ++k) pts[k + 1][k] += opt.initial_step;
  std::vector<double> val(n + 1);
  for (std::size_t k = 0; k <= n; ++k) val[k] = f(pts[k]);

  std::vector<std::size_t> order(n + 1);
  std::vector<double> centroid(n), trial(n), trial2(n);
  SimplexResult res;

  for (int it = 0;; ++it) {
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t i, std::size_t j) { return val[i] < val[j]; });
    const std::size_t lo = order.front(), hi = order.back(), second = order[n - 1];

    double diam = 0.0;
    for (std::size_t k = 0; k <= n; ++k)
      for (std::size_t d = 0; d < n; ++d) diam = std::max(diam, std::abs(pts[k][d] - pts[lo][d]));
    if (std::abs(val[hi] - val[lo]) <= opt.ftol && diam <= opt.xtol) {
      res.converged = true;
      res.iterations = it;
      break;
    }
    if (it >= opt.max_iterations) {
      res.iterations = it;
      break;
    }

    std::fill(centroid.begin(), centroid.end(), 0.0);
    for (std::size_t k = 0; k <= n; ++k)
      if (k != hi)
        for (std::size_t d = 0; d < n; ++d) centroid[d] += pts[k][d] / static_cast<double>(n);

    for (std::size_t d = 0; d < n; ++d) trial[d] = centroid[d] + kReflect * (centroid[d] - pts[hi][d]);
    const double fr = f(trial);
    if (fr < val[lo]) {
      for (std::size_t d = 0; d < n; ++d) trial2[d] = centroid[d] + kExpand * (trial[d] - centroid[d]);
      const double fe = f(trial2);
      if (fe < fr) {
        pts[hi] = trial2;
        val[hi] = fe;
      } else {
        pts[hi] = trial;
        val[hi] = fr;
      }
      continue;
    }
    if (fr < val[second]) {
      pts[hi] = trial;
      val[hi] = fr;
      continue;
    }
    // contraction, outside if the reflection improved on the worst point
    const bool outside = fr < val[hi];
    const auto& base = outside ? trial : pts[hi];
    for (std::size_t d = 0; d < n; ++d) trial2[d] = centroid[d] + kContract * (base[d] - centroid[d]);
    const double fc = f(trial2);
    if (fc < (outside ? fr : val[hi])) {
      pts[hi] = trial2;
      val[hi] = fc;
      continue;
    }
    for (std::size_t k = 0; k <= n; ++k) {
      if (k == lo) continue;
      for (std::size_t d = 0; d < n; ++d) pts[k][d] = pts[lo][d] + kShrink * (pts[k][d] - pts[lo][d]);
      val[k] = f(pts[k]);
    }
  }

  const auto best = static_cast<std::size_t>(std::min_element(val.begin(), val.end()) - val.begin());
  res.x = pts[best];
  res.value = val[best];
  return res;
}

GridResult minimize_on_grid(const Objective& f, std::span<const GridAxis> axes,
                            const SearchOptions& opt) {
  GridResult g = opt.parallel ? grid_argmin_parallel(f, axes) : grid_argmin_serial(f, axes);
  SimplexOptions so = opt.simplex;
  // start the simplex at roughly one grid cell
  double cell = std::numeric_limits<double>::infinity();
  for (const auto& a : axes)
    if (a.count > 1) cell = std::min(cell, (a.hi - a.lo) / (a.periodic ? a.count : a.count - 1));
  if (std::isfinite(cell)) so.initial_step = 0.5 * cell;
  const SimplexResult s = nelder_mead(f, g.x, so);
  if (!s.converged)
    throw NonConvergence("simplex refinement hit the iteration cap of " +
                         std::to_string(so.max_iterations));
  if (s.value < g.value) {
    g.x = s.x;
    g.value = s.value;
  }
  g.evaluations += static_cast<std::size_t>(s.iterations);
  return g;
}

}  // namespace laqc
