#include <doctest.h>

#include <cmath>

#include "splitpde/lifting.hpp"

using namespace splitpde;

namespace {

double residual(const DirichletLaplacian& op, const Field& z, const BoundaryTrace& trace) {
  return norm(op.apply_with_boundary(z, trace), NormKind::inf);
}

}  // namespace

TEST_CASE("1D lifting is the linear interpolant of the end values") {
  const Grid g(1, 499);
  const DirichletLaplacian op(g);
  const BoundaryData bd = BoundaryData::ends([](double) { return 0.5; },
                                             [](double t) { return 1.0 + t; });
  const Field z = solve_lifting(op, bd, 0.25);
  const Field expect = eval_on_grid([](const Point& p) { return 0.5 + 0.75 * p[0]; }, g);
  CHECK(max_abs_diff(z, expect) < 1e-12);
  CHECK(residual(op, z, bd.trace(g, 0.25)) <= 1e-10);
}

TEST_CASE("2D lifting reproduces a harmonic quadratic") {
  // x^2 - y^2 is annihilated by the 5-point stencil.
  auto g_fn = [](const Point& p) { return p[0] * p[0] - p[1] * p[1]; };
  for (std::size_t n : {7, 10, 99}) {
    const Grid g(2, n);
    const DirichletLaplacian op(g);
    const BoundaryData bd = BoundaryData::from_spatial(2, g_fn);
    const Field z = solve_lifting(op, bd, 0.0);
    CHECK(max_abs_diff(z, eval_on_grid(g_fn, g)) < 1e-12);
  }
}

TEST_CASE("constant data lifts to a constant") {
  for (int dim : {1, 2}) {
    const Grid g(dim, 63);
    const DirichletLaplacian op(g);
    const Field z = solve_lifting(op, BoundaryData::constant(dim, 1.0), 0.0);
    CHECK(max_abs_diff(z, Field(g, 1.0)) < 1e-12);
  }
}

TEST_CASE("harmonicity residual on a rough boundary") {
  const Grid g(2, 99);
  const DirichletLaplacian op(g);
  const BoundaryData bd = BoundaryData::from_spatial(
      2, [](const Point& p) { return std::sin(3 * p[0]) * std::cosh(2 * p[1]) + p[0] * p[1]; });
  const Field z = solve_lifting(op, bd, 0.0);
  CHECK(residual(op, z, bd.trace(g, 0.0)) <= 1e-10);
}

TEST_CASE("lifting rate") {
  const Grid g(1, 99);
  const DirichletLaplacian op(g);
  auto b = [](double t) { return 1.0 + std::sin(5.0 * t); };
  auto db = [](double t) { return 5.0 * std::cos(5.0 * t); };
  const Lifting analytic(op, BoundaryData::ends(b, b, db, db));
  const Lifting numeric(op, BoundaryData::ends(b, b));
  const double t = 0.07;
  CHECK(max_abs_diff(analytic.dz_at(t), Field(g, db(t))) < 1e-12);
  CHECK(max_abs_diff(numeric.dz_at(t), Field(g, db(t))) < 1e-8);
  CHECK(max_abs_diff(analytic.z_at(t), Field(g, b(t))) < 1e-12);
}

TEST_CASE("time-independent lifting is cached and has zero rate") {
  const Grid g(2, 15);
  const Lifting lifting(DirichletLaplacian(g), BoundaryData::constant(2, 3.0));
  CHECK(lifting.time_independent());
  CHECK(lifting.z_at(0.0) == lifting.z_at(0.5));
  CHECK(norm(lifting.dz_at(0.3), NormKind::inf) == 0.0);
}

TEST_CASE("modified nonlinearity vanishes at zero") {
  const Grid g(1, 31);
  auto b = [](double t) { return 2.0 + std::sin(t); };
  const Lifting lifting(DirichletLaplacian(g), BoundaryData::ends(b, [](double) { return -1.0; }));
  for (const ReactionTerm& f :
       {ReactionTerm::quadratic(), ReactionTerm::logistic(3.0), ReactionTerm::linear(-2.0)}) {
    for (double t : {0.0, 0.013, 0.1}) {
      const Field gz = modified_nonlinearity(f, lifting, t, Field(g));
      CHECK(norm(gz, NormKind::inf) == 0.0);
    }
  }
  // g(t, w) = f(w + z) - f(z) = w^2 + 2 z w for f = u^2
  const Field w(g, 0.5);
  const Field z = lifting.z_at(0.0);
  const Field gw = modified_nonlinearity(ReactionTerm::quadratic(), lifting, 0.0, w);
  for (std::size_t i = 0; i < g.size(); ++i) CHECK(gw[i] == doctest::Approx(0.25 + z[i]));
}

TEST_CASE("boundary traces") {
  const Grid g(2, 3);
  const BoundaryTrace t = boundary_trace(g, [](const Point& p) { return p[0] + 10 * p[1]; });
  REQUIRE(t.left.size() == 3);
  CHECK(t.left[1] == doctest::Approx(5.0));    // (0, 0.5)
  CHECK(t.right[0] == doctest::Approx(3.5));   // (1, 0.25)
  CHECK(t.bottom[2] == doctest::Approx(0.75)); // (0.75, 0)
  CHECK(t.top[0] == doctest::Approx(10.25));   // (0.25, 1)
  const BoundaryTrace t1 = boundary_trace(Grid(1, 4), [](const Point& p) { return 1 + p[0]; });
  CHECK(t1.left == std::vector<double>{1.0});
  CHECK(t1.right == std::vector<double>{2.0});
}
