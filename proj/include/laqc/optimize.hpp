// SPDX-License-Identifier: Apache-2.0
//
// Deterministic grid search followed by Nelder-Mead refinement.
//
// The grid kernels come in two flavours: a serial reference and an OpenMP
// version. Both return the same argmin for the same input: the reduction
// picks the smallest value and breaks ties by the lowest flat grid index,
// so the answer does not depend on thread scheduling.

#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <stdexcept>
#include <vector>

namespace laqc {

using Objective = std::function<double(std::span<const double>)>;

/// One axis of a rectangular grid. A periodic axis samples count points on
/// [lo, hi) and a closed axis samples count points on [lo, hi].
struct GridAxis {
  double lo = 0.0;
  double hi = 1.0;
  int count = 2;
  bool periodic = false;

  double at(int k) const;
};

struct GridResult {
  std::vector<double> x;
  double value = 0.0;
  std::size_t index = 0;
  std::size_t evaluations = 0;
};

std::size_t grid_size(std::span<const GridAxis> axes);
std::vector<double> grid_point(std::span<const GridAxis> axes, std::size_t flat);

/// Serial reference: visits points in flat order.
GridResult grid_argmin_serial(const Objective& f, std::span<const GridAxis> axes);

/// OpenMP kernel. f must be safe to call concurrently.
GridResult grid_argmin_parallel(const Objective& f, std::span<const GridAxis> axes);

class NonConvergence : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SimplexOptions {
  double initial_step = 0.1;
  double ftol = 1e-12;   // spread of simplex values
  double xtol = 1e-9;    // simplex diameter
  int max_iterations = 10000;
};

struct SimplexResult {
  std::vector<double> x;
  double value = 0.0;
  int iterations = 0;
  bool converged = false;
};

/// Unconstrained Nelder-Mead minimization started from x0. Returns with
/// converged == false when the iteration cap is hit.
SimplexResult nelder_mead(const Objective& f, std::vector<double> x0, const SimplexOptions& opt = {});

/// Grid search then simplex refinement from the grid argmin. Throws
/// NonConvergence if the refinement hits its iteration cap.
struct SearchOptions {
  SimplexOptions simplex{};
  bool parallel = true;
};

GridResult minimize_on_grid(const Objective& f, std::span<const GridAxis> axes,
                            const SearchOptions& opt = {});

}  // namespace laqc
