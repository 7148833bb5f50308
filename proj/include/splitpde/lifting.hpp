#pragma once

#include <optional>

#include "splitpde/boundary.hpp"
#include "splitpde/operators.hpp"
#include "splitpde/reaction.hpp"

namespace splitpde {

/// Solves D z = 0 with z = b(t) on the boundary, i.e. L z = -(boundary
/// contribution of b(t)). 1D uses the tridiagonal solver, 2D the sine
/// transform.
Field solve_lifting(const DirichletLaplacian& op, const BoundaryData& bd, double t);

/// The time derivative of the lifting: the same elliptic solve with db/dt.
Field lifting_time_derivative(const DirichletLaplacian& op, const BoundaryData& bd,
                              double t);

/// Solves D z = 0 for an explicit boundary trace.
Field solve_harmonic(const DirichletLaplacian& op, const BoundaryTrace& trace);

/// Discrete harmonic continuation z(t) of the boundary data and its rate.
///
/// For time-independent data z is solved once at construction and dz is zero.
class Lifting {
 public:
  Lifting(DirichletLaplacian op, BoundaryData bd);

  const Grid& grid() const { return op_.grid(); }
  const DirichletLaplacian& op() const { return op_; }
  const BoundaryData& boundary() const { return bd_; }
  bool time_independent() const { return bd_.time_independent(); }

  Field z_at(double t) const;
  Field dz_at(double t) const;

 private:
  DirichletLaplacian op_;
  BoundaryData bd_;
  std::optional<Field> cached_z_;
};

/// g(t, w) = f(w + z(t)) - f(z(t)), pointwise.
Field modified_nonlinearity(const ReactionTerm& f, const Lifting& lifting, double t,
                            const Field& w);

}  // namespace splitpde
