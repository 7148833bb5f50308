#include "splitpde/boundary.hpp"

#include <string>

namespace splitpde {

BoundaryTrace boundary_trace(const Grid& grid,
                             const std::function<double(const Point&)>& value) {
  BoundaryTrace trace;
  if (grid.dim() == 1) {
    trace.left = {value({0.0, 0.0})};
    trace.right = {value({1.0, 0.0})};
    return trace;
  }
  const std::size_t n = grid.n();
  const double h = grid.h();
  trace.left.resize(n);
  trace.right.resize(n);
  trace.bottom.resize(n);
  trace.top.resize(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double s = static_cast<double>(k + 1) * h;
    trace.left[k] = value({0.0, s});
    trace.right[k] = value({1.0, s});
    trace.bottom[k] = value({s, 0.0});
    trace.top[k] = value({s, 1.0});
  }
  return trace;
}

BoundaryData::BoundaryData(int dim, Function value, std::optional<Function> rate,
                           bool time_independent)
    : dim_(dim),
      value_(std::move(value)),
      rate_(std::move(rate)),
      time_independent_(time_independent) {
  if (dim != 1 && dim != 2) {
    throw GridError("boundary data dimension must be 1 or 2, got " +
                    std::to_string(dim));
  }
  if (time_independent_ && !rate_) {
    rate_ = [](double, const Point&) { return 0.0; };
  }
}

BoundaryData BoundaryData::constant(int dim, double c) {
  return BoundaryData(dim, [c](double, const Point&) { return c; }, std::nullopt, true);
}

BoundaryData BoundaryData::from_spatial(int dim,
                                        std::function<double(const Point&)> g) {
  return BoundaryData(
      dim, [g = std::move(g)](double, const Point& p) { return g(p); }, std::nullopt,
      true);
}

BoundaryData BoundaryData::ends(std::function<double(double)> left,
                                std::function<double(double)> right,
                                std::function<double(double)> left_rate,
                                std::function<double(double)> right_rate) {
  Function value = [left, right](double t, const Point& p) {
    return p[0] < 0.5 ? left(t) : right(t);
  };
  std::optional<Function> rate;
  if (left_rate && right_rate) {
    rate = [left_rate, right_rate](double t, const Point& p) {
      return p[0] < 0.5 ? left_rate(t) : right_rate(t);
    };
  }
  return BoundaryData(1, std::move(value), std::move(rate), false);
}

double BoundaryData::rate(double t, const Point& p) const {
  if (rate_) return (*rate_)(t, p);
  return (value_(t + kRateStep, p) - value_(t - kRateStep, p)) / (2.0 * kRateStep);
}

BoundaryTrace BoundaryData::trace(const Grid& grid, double t) const {
  if (grid.dim() != dim_) throw GridError("boundary data dimension does not match grid");
  return boundary_trace(grid, [&](const Point& p) { return value_(t, p); });
}

BoundaryTrace BoundaryData::rate_trace(const Grid& grid, double t) const {
  if (grid.dim() != dim_) throw GridError("boundary data dimension does not match grid");
  return boundary_trace(grid, [&](const Point& p) { return rate(t, p); });
}

}  // namespace splitpde
