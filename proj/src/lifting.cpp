#include "splitpde/lifting.hpp"

namespace splitpde {

Field solve_harmonic(const DirichletLaplacian& op, const BoundaryTrace& trace) {
  const Grid& grid = op.grid();
  if (op.diffusivity() == 0.0) {
    throw SolverError("harmonic lifting needs a nonzero diffusivity");
  }
  if (grid.dim() == 1) {
    if (trace.left.size() != 1 || trace.right.size() != 1) {
      throw GridError("1D boundary trace needs one value per end");
    }
    const std::size_t n = grid.n();
    const double left = trace.left[0];
    const double right = trace.right[0];
    if (op.shift() == 0.0) {
      // linear interpolation is the exact discrete harmonic function
      Field z(grid);
      // extended precision so each node is rounded once
      const long double np1 = static_cast<long double>(n + 1);
      for (std::size_t i = 0; i < n; ++i) {
        const long double k = static_cast<long double>(i + 1);
        z[i] = static_cast<double>((static_cast<long double>(left) * (np1 - k) +
                                    static_cast<long double>(right) * k) / np1);
      }
      return z;
    }
    // Scaled by h^2 / diffusivity: (1, -2 + shift h^2 / d, 1) z = -b at the ends.
    const double c = op.diffusivity() / (grid.h() * grid.h());
    std::vector<double> b(n, 0.0);
    b[0] -= left;
    b[n - 1] -= right;
    return Field(grid, thomas_solve(std::vector<double>(n, 1.0),
                                    std::vector<double>(n, -2.0 + op.shift() / c),
                                    std::vector<double>(n, 1.0), std::move(b)));
  }

  Field rhs = op.boundary_contribution(trace);
  rhs *= -1.0;
  Field z = op.solve(rhs);
  // one refinement sweep takes the residual down to transform rounding
  Field residual = rhs - op.apply(z);
  z += op.solve(residual);
  return z;
}

Field solve_lifting(const DirichletLaplacian& op, const BoundaryData& bd, double t) {
  return solve_harmonic(op, bd.trace(op.grid(), t));
}

Field lifting_time_derivative(const DirichletLaplacian& op, const BoundaryData& bd,
                              double t) {
  if (bd.time_independent()) return Field(op.grid());
  return solve_harmonic(op, bd.rate_trace(op.grid(), t));
}

Lifting::Lifting(DirichletLaplacian op, BoundaryData bd)
    : op_(std::move(op)), bd_(std::move(bd)) {
  if (bd_.dim() != op_.grid().dim()) {
    throw GridError("boundary data dimension does not match grid");
  }
  if (bd_.time_independent()) cached_z_ = solve_lifting(op_, bd_, 0.0);
}

Field Lifting::z_at(double t) const {
  if (cached_z_) return *cached_z_;
  return solve_lifting(op_, bd_, t);
}

Field Lifting::dz_at(double t) const { return lifting_time_derivative(op_, bd_, t); }

Field modified_nonlinearity(const ReactionTerm& f, const Lifting& lifting, double t,
                            const Field& w) {
  const Field z = lifting.z_at(t);
  Field g(w.grid());
  for (std::size_t i = 0; i < w.size(); ++i) {
    g[i] = f(w[i] + z[i]) - f(z[i]);
  }
  return g;
}

}  // namespace splitpde
