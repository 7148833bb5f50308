#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "splitpde/grid.hpp"

namespace splitpde {

/// Boundary values seen by the 5-point (or 3-point) stencil at one instant.
///
/// 1D: left/right hold a single value each (x = 0 and x = 1).
/// 2D: left/right are indexed by iy along x = 0 and x = 1, bottom/top by ix
/// along y = 0 and y = 1. Corners never touch an interior stencil.
struct BoundaryTrace {
  std::vector<double> left;
  std::vector<double> right;
  std::vector<double> bottom;
  std::vector<double> top;
};

/// Samples `value` at every boundary node adjacent to the interior.
BoundaryTrace boundary_trace(const Grid& grid,
                             const std::function<double(const Point&)>& value);

/// Time-dependent Dirichlet data b(t, x) together with its time derivative.
class BoundaryData {
 public:
  using Function = std::function<double(double, const Point&)>;

  /// Step used for the centered difference when no analytic rate is given.
  static constexpr double kRateStep = 1e-6;

  BoundaryData(int dim, Function value, std::optional<Function> rate,
               bool time_independent);

  static BoundaryData constant(int dim, double c);
  /// Time-independent trace of a spatial function, e.g. u0 restricted to the boundary.
  static BoundaryData from_spatial(int dim, std::function<double(const Point&)> g);
  /// 1D data given separately at x = 0 and x = 1; rates may be omitted.
  static BoundaryData ends(std::function<double(double)> left,
                           std::function<double(double)> right,
                           std::function<double(double)> left_rate = {},
                           std::function<double(double)> right_rate = {});

  int dim() const { return dim_; }
  bool time_independent() const { return time_independent_; }
  bool has_analytic_rate() const { return rate_.has_value(); }

  double value(double t, const Point& p) const { return value_(t, p); }
  double rate(double t, const Point& p) const;

  BoundaryTrace trace(const Grid& grid, double t) const;
  BoundaryTrace rate_trace(const Grid& grid, double t) const;

 private:
  int dim_;
  Function value_;
  std::optional<Function> rate_;
  bool time_independent_;
};

}  // namespace splitpde
