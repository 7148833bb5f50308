#include "splitpde/grid.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace splitpde {

Grid::Grid(int dim, std::size_t n) : dim_(dim), n_(n) {
  if (dim != 1 && dim != 2) {
    throw GridError("grid dimension must be 1 or 2, got " + std::to_string(dim));
  }
  if (n == 0) {
    throw GridError("grid needs at least one interior node per axis");
  }
  h_ = 1.0 / static_cast<double>(n + 1);
}

Point Grid::coords(std::size_t i) const {
  if (dim_ == 1) {
    return {static_cast<double>(i + 1) * h_, 0.0};
  }
  const std::size_t ix = i % n_;
  const std::size_t iy = i / n_;
  return {static_cast<double>(ix + 1) * h_, static_cast<double>(iy + 1) * h_};
}

Grid make_grid(int dim, std::size_t n) { return Grid(dim, n); }

Field::Field(const Grid& grid, double value)
    : grid_(grid), values_(grid.size(), value) {}

Field::Field(const Grid& grid, std::vector<double> values)
    : grid_(grid), values_(std::move(values)) {
  if (values_.size() != grid_.size()) {
    throw GridError("field length " + std::to_string(values_.size()) +
                    " does not match grid node count " +
                    std::to_string(grid_.size()));
  }
}

bool Field::all_finite() const {
  return std::all_of(values_.begin(), values_.end(),
                     [](double v) { return std::isfinite(v); });
}

void Field::check_same_grid(const Field& other) const {
  if (!(grid_ == other.grid_)) {
    throw GridError("fields live on different grids");
  }
}

Field& Field::operator+=(const Field& other) {
  check_same_grid(other);
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] += other.values_[i];
  return *this;
}

Field& Field::operator-=(const Field& other) {
  check_same_grid(other);
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] -= other.values_[i];
  return *this;
}

Field& Field::operator*=(double alpha) {
  for (double& v : values_) v *= alpha;
  return *this;
}

Field& Field::axpy(double alpha, const Field& other) {
  check_same_grid(other);
  for (std::size_t i = 0; i < values_.size(); ++i) {
    values_[i] += alpha * other.values_[i];
  }
  return *this;
}

Field operator+(Field a, const Field& b) { return a += b; }
Field operator-(Field a, const Field& b) { return a -= b; }
Field operator*(double alpha, Field a) { return a *= alpha; }

Field eval_on_grid(const std::function<double(const Point&)>& func,
                   const Grid& grid) {
  std::vector<double> values(grid.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    values[i] = func(grid.coords(i));
  }
  return Field(grid, std::move(values));
}

double norm(const Field& field, NormKind kind) {
  const auto v = field.values();
  const double weight = std::pow(field.grid().h(), field.grid().dim());
  switch (kind) {
    case NormKind::inf: {
      double m = 0.0;
      for (double x : v) m = std::max(m, std::abs(x));
      return m;
    }
    case NormKind::one: {
      double s = 0.0;
      for (double x : v) s += std::abs(x);
      return weight * s;
    }
    case NormKind::two: {
      double s = 0.0;
      for (double x : v) s += x * x;
      return std::sqrt(weight * s);
    }
  }
  return 0.0;
}

double max_abs_diff(const Field& a, const Field& b) {
  if (!(a.grid() == b.grid())) throw GridError("fields live on different grids");
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    m = std::max(m, std::abs(a[i] - b[i]));
  }
  return m;
}

const char* to_string(NormKind kind) {
  switch (kind) {
    case NormKind::inf: return "inf";
    case NormKind::one: return "one";
    case NormKind::two: return "two";
  }
  return "?";
}

NormKind parse_norm_kind(const std::string& name) {
  if (name == "inf" || name == "linf" || name == "max") return NormKind::inf;
  if (name == "one" || name == "l1") return NormKind::one;
  if (name == "two" || name == "l2") return NormKind::two;
  throw std::invalid_argument("unknown norm '" + name + "' (expected inf, one or two)");
}

}  // namespace splitpde
