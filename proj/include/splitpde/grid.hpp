#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace splitpde {

/// Physical coordinates of a node. In 1D the second component is zero.
using Point = std::array<double, 2>;

enum class NormKind { inf, one, two };

class GridError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Uniform grid on [0,1] or [0,1]^2 storing interior nodes only.
///
/// Interior node i has 1D coordinate (i+1)h. In 2D the flat index is
/// row-major, i = iy * n + ix, with coordinates ((ix+1)h, (iy+1)h).
class Grid {
 public:
  Grid(int dim, std::size_t n);

  int dim() const { return dim_; }
  std::size_t n() const { return n_; }
  double h() const { return h_; }
  std::size_t size() const { return dim_ == 1 ? n_ : n_ * n_; }

  Point coords(std::size_t i) const;

  bool operator==(const Grid& other) const {
    return dim_ == other.dim_ && n_ == other.n_;
  }

 private:
  int dim_;
  std::size_t n_;
  double h_;
};

Grid make_grid(int dim, std::size_t n);

/// Real values on the interior nodes of a grid.
class Field {
 public:
  explicit Field(const Grid& grid, double value = 0.0);
  Field(const Grid& grid, std::vector<double> values);

  const Grid& grid() const { return grid_; }
  std::size_t size() const { return values_.size(); }

  double& operator[](std::size_t i) { return values_[i]; }
  double operator[](std::size_t i) const { return values_[i]; }

  std::span<double> values() { return values_; }
  std::span<const double> values() const { return values_; }

  bool all_finite() const;

  Field& operator+=(const Field& other);
  Field& operator-=(const Field& other);
  Field& operator*=(double alpha);

  /// this += alpha * other
  Field& axpy(double alpha, const Field& other);

  friend bool operator==(const Field&, const Field&) = default;

 private:
  void check_same_grid(const Field& other) const;

  Grid grid_;
  std::vector<double> values_;
};

Field operator+(Field a, const Field& b);
Field operator-(Field a, const Field& b);
Field operator*(double alpha, Field a);

Field eval_on_grid(const std::function<double(const Point&)>& func,
                   const Grid& grid);

double norm(const Field& field, NormKind kind);

/// Largest pointwise difference; throws on grid mismatch.
double max_abs_diff(const Field& a, const Field& b);

const char* to_string(NormKind kind);
NormKind parse_norm_kind(const std::string& name);

}  // namespace splitpde
