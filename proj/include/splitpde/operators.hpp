#pragma once

#include <functional>
#include <span>
#include <stdexcept>
#include <vector>

#include "splitpde/boundary.hpp"
#include "splitpde/grid.hpp"
#include "splitpde/sine_transform.hpp"

namespace splitpde {

class SolverError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Linear solver used inside Crank-Nicolson steps.
enum class CnSolver {
  automatic,  ///< Thomas in 1D, sine-transform diagonalization in 2D
  thomas,     ///< 1D only
  spectral,
  cg,         ///< Jacobi-preconditioned conjugate gradient
};

/// Discrete Dirichlet Laplacian on the interior nodes,
/// L = diffusivity * Delta_h + shift * I.
///
/// Delta_h is the (1,-2,1)/h^2 stencil in 1D and the 5-point stencil in 2D,
/// with zero extension beyond the boundary. The default (diffusivity 1, shift 0)
/// is the operator used throughout; other coefficients exist for tests
/// (diffusivity 0 gives the zero operator, shift mu a scalar operator).
class DirichletLaplacian {
 public:
  explicit DirichletLaplacian(const Grid& grid,
                              TransformBackend backend = TransformBackend::automatic,
                              double diffusivity = 1.0, double shift = 0.0);

  static DirichletLaplacian scalar(const Grid& grid, double mu) {
    return DirichletLaplacian(grid, TransformBackend::automatic, 0.0, mu);
  }

  const Grid& grid() const { return grid_; }
  double diffusivity() const { return diffusivity_; }
  double shift() const { return shift_; }
  const SineTransform& transform() const { return transform_; }

  /// Eigenvalue paired with each sine mode, in the flat field layout.
  std::span<const double> eigenvalues() const { return eigenvalues_; }

  Field apply(const Field& v) const;
  /// diffusivity * b / h^2 at boundary-adjacent nodes, zero elsewhere.
  Field boundary_contribution(const BoundaryTrace& trace) const;
  Field apply_with_boundary(const Field& v, const BoundaryTrace& trace) const;

  /// exp(t L) v
  Field propagate(const Field& v, double t) const;
  /// t * phi1(t L) w with phi1(x) = (exp(x) - 1) / x
  Field phi1_apply(const Field& w, double t) const;
  /// exp(t L) v + t phi1(t L) s in one pair of transforms.
  Field exponential_euler(const Field& v, const Field& s, double t) const;

  /// Solves (I - alpha L) x = rhs by diagonalization.
  Field solve_shifted(const Field& rhs, double alpha) const;
  /// Solves L x = rhs by diagonalization; L must be nonsingular.
  Field solve(const Field& rhs) const;

  /// Applies g(lambda) mode by mode.
  Field spectral_map(const Field& v, const std::function<double(double)>& g) const;

 private:
  void check_grid(const Field& v) const;

  Grid grid_;
  SineTransform transform_;
  double diffusivity_;
  double shift_;
  std::vector<double> eigenvalues_;
};

/// 1D Dirichlet eigenvalue -(4/h^2) sin^2(k pi h / 2), k = 1..n.
double laplacian_eigenvalue_1d(std::size_t k, double h);

/// phi1(x) = (exp(x) - 1) / x with a Taylor branch for |x| < 1e-6.
double phi1(double x);

/// Solves a tridiagonal system in place; sub[0] and super[n-1] are ignored.
std::vector<double> thomas_solve(std::vector<double> sub, std::vector<double> diag,
                                 std::vector<double> super, std::vector<double> rhs);

struct CgResult {
  Field solution;
  int iterations;
  double relative_residual;
};

/// Jacobi-preconditioned CG for (I - alpha L) x = rhs.
CgResult conjugate_gradient_shifted(const DirichletLaplacian& op, const Field& rhs,
                                    double alpha, double rel_tol = 1e-12,
                                    int max_iterations = 0);

// Free-function aliases used by the flows and by tests.
inline Field apply_L(const DirichletLaplacian& op, const Field& v) { return op.apply(v); }
inline Field apply_D_with_boundary(const DirichletLaplacian& op, const Field& v,
                                   const BoundaryTrace& trace) {
  return op.apply_with_boundary(v, trace);
}
inline Field propagate(const DirichletLaplacian& op, const Field& v0, double t) {
  return op.propagate(v0, t);
}
inline Field phi1_apply(const DirichletLaplacian& op, const Field& w, double t) {
  return op.phi1_apply(w, t);
}

/// m trapezoidal steps of size tau/m for v' = L v + source(t), starting at t0.
Field crank_nicolson(const DirichletLaplacian& op, const Field& v0,
                     const std::function<Field(double)>& source, double t0, double tau,
                     int substeps, CnSolver solver = CnSolver::automatic);

}  // namespace splitpde
