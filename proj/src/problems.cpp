#include "splitpde/problems.hpp"

#include <cmath>
#include <numbers>

namespace splitpde {
namespace {

constexpr double pi = std::numbers::pi;
constexpr double kFinalTime = 0.1;
constexpr std::size_t kDefaultN1d = 499;
constexpr std::size_t kDefaultN2d = 99;

double sin2(double x) {
  const double s = std::sin(pi * x);
  return s * s;
}

Problem make(std::string id, std::string description, const Grid& grid,
             TransformBackend backend, BoundaryData bd,
             const std::function<double(const Point&)>& u0) {
  return Problem{std::move(id),
                 std::move(description),
                 DirichletLaplacian(grid, backend),
                 ReactionTerm::quadratic(),
                 std::move(bd),
                 eval_on_grid(u0, grid),
                 kFinalTime};
}

}  // namespace

std::vector<std::string> builtin_problem_ids() { return {"P1", "P2", "P3", "P4", "P5"}; }

double crossed_gaussians(const Point& p) {
  const double x = p[0];
  const double y = p[1];
  const double a = x - 0.5 - 0.1 * std::cos(pi * y);
  const double b = y - 0.5 - 0.1 * std::sin(2.0 * pi * x);
  const double r2 = (x - 0.5) * (x - 0.5) + (y - 0.5) * (y - 0.5);
  return 0.5 + 2.0 * (std::exp(-40.0 * a * a) + std::exp(-35.0 * b * b) -
                      std::exp(-35.0 * r2));
}

Problem builtin_problem(const std::string& id, std::optional<std::size_t> n,
                        TransformBackend backend) {
  if (id == "P1") {
    return make("P1", "1D, u0 = 1 + sin^2(pi x), b0 = b1 = 1",
                Grid(1, n.value_or(kDefaultN1d)), backend, BoundaryData::constant(1, 1.0),
                [](const Point& p) { return 1.0 + sin2(p[0]); });
  }
  if (id == "P2") {
    auto b = [](double t) { return 1.0 + std::sin(5.0 * t); };
    auto db = [](double t) { return 5.0 * std::cos(5.0 * t); };
    return make("P2", "1D, u0 = 1 + sin^2(pi x), b0(t) = b1(t) = 1 + sin(5t)",
                Grid(1, n.value_or(kDefaultN1d)), backend, BoundaryData::ends(b, b, db, db),
                [](const Point& p) { return 1.0 + sin2(p[0]); });
  }
  if (id == "P3") {
    auto left = [](double) { return 0.5; };
    auto dleft = [](double) { return 0.0; };
    auto right = [](double t) { return 1.0 + std::sin(20.0 * pi * t); };
    auto dright = [](double t) { return 20.0 * pi * std::cos(20.0 * pi * t); };
    return make("P3", "1D, u0 = 0.5 + 0.5 x, b0 = 0.5, b1(t) = 1 + sin(20 pi t)",
                Grid(1, n.value_or(kDefaultN1d)), backend,
                BoundaryData::ends(left, right, dleft, dright),
                [](const Point& p) { return 0.5 + 0.5 * p[0]; });
  }
  if (id == "P4") {
    return make("P4", "2D, u0 = 1 + sin^2(pi x) sin^2(pi y), b = 1",
                Grid(2, n.value_or(kDefaultN2d)), backend, BoundaryData::constant(2, 1.0),
                [](const Point& p) { return 1.0 + sin2(p[0]) * sin2(p[1]); });
  }
  if (id == "P5") {
    return make("P5", "2D, u0 = crossed Gaussian ridges, b = u0 on the boundary",
                Grid(2, n.value_or(kDefaultN2d)), backend,
                BoundaryData::from_spatial(2, crossed_gaussians), crossed_gaussians);
  }
  throw std::invalid_argument("unknown problem '" + id + "' (expected P1..P5)");
}

}  // namespace splitpde
