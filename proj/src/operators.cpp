#include "splitpde/operators.hpp"

#include <cmath>
#include <numbers>
#include <optional>
#include <string>

namespace splitpde {

double laplacian_eigenvalue_1d(std::size_t k, double h) {
  const double s = std::sin(static_cast<double>(k) * std::numbers::pi * h / 2.0);
  return -4.0 / (h * h) * s * s;
}

double phi1(double x) {
  if (std::abs(x) < 1e-6) {
    return 1.0 + x / 2.0 + x * x / 6.0 + x * x * x / 24.0;
  }
  return std::expm1(x) / x;
}

DirichletLaplacian::DirichletLaplacian(const Grid& grid, TransformBackend backend,
                                       double diffusivity, double shift)
    : grid_(grid),
      transform_(grid, backend),
      diffusivity_(diffusivity),
      shift_(shift),
      eigenvalues_(grid.size()) {
  const std::size_t n = grid.n();
  std::vector<double> axis(n);
  for (std::size_t k = 0; k < n; ++k) {
    axis[k] = diffusivity_ * laplacian_eigenvalue_1d(k + 1, grid.h());
  }
  if (grid.dim() == 1) {
    for (std::size_t k = 0; k < n; ++k) eigenvalues_[k] = axis[k] + shift_;
  } else {
    for (std::size_t ky = 0; ky < n; ++ky) {
      for (std::size_t kx = 0; kx < n; ++kx) {
        eigenvalues_[ky * n + kx] = axis[kx] + axis[ky] + shift_;
      }
    }
  }
}

void DirichletLaplacian::check_grid(const Field& v) const {
  if (!(v.grid() == grid_)) throw GridError("field does not live on the operator grid");
}

Field DirichletLaplacian::apply(const Field& v) const {
  check_grid(v);
  const std::size_t n = grid_.n();
  const double c = diffusivity_ / (grid_.h() * grid_.h());
  Field out(grid_);
  if (grid_.dim() == 1) {
    for (std::size_t i = 0; i < n; ++i) {
      const double left = i > 0 ? v[i - 1] : 0.0;
      const double right = i + 1 < n ? v[i + 1] : 0.0;
      // differences of neighbours first: exact for nearby values, so smooth fields lose less
      out[i] = c * ((right - v[i]) - (v[i] - left)) + shift_ * v[i];
    }
    return out;
  }
  for (std::size_t iy = 0; iy < n; ++iy) {
    for (std::size_t ix = 0; ix < n; ++ix) {
      const std::size_t i = iy * n + ix;
      const double west = ix > 0 ? v[i - 1] : 0.0;
      const double east = ix + 1 < n ? v[i + 1] : 0.0;
      const double south = iy > 0 ? v[i - n] : 0.0;
      const double north = iy + 1 < n ? v[i + n] : 0.0;
      out[i] = c * (((east - v[i]) - (v[i] - west)) + ((north - v[i]) - (v[i] - south))) +
               shift_ * v[i];
    }
  }
  return out;
}

Field DirichletLaplacian::boundary_contribution(const BoundaryTrace& trace) const {
  const std::size_t n = grid_.n();
  const double c = diffusivity_ / (grid_.h() * grid_.h());
  Field out(grid_);
  if (grid_.dim() == 1) {
    if (trace.left.size() != 1 || trace.right.size() != 1) {
      throw GridError("1D boundary trace needs one value per end");
    }
    out[0] += c * trace.left[0];
    out[n - 1] += c * trace.right[0];
    return out;
  }
  if (trace.left.size() != n || trace.right.size() != n || trace.bottom.size() != n ||
      trace.top.size() != n) {
    throw GridError("2D boundary trace needs n values per edge");
  }
  for (std::size_t k = 0; k < n; ++k) {
    out[k * n] += c * trace.left[k];
    out[k * n + n - 1] += c * trace.right[k];
    out[k] += c * trace.bottom[k];
    out[(n - 1) * n + k] += c * trace.top[k];
  }
  return out;
}

Field DirichletLaplacian::apply_with_boundary(const Field& v,
                                              const BoundaryTrace& trace) const {
  Field out = apply(v);
  boundary_contribution(trace);  // validates the trace sizes
  const std::size_t n = grid_.n();
  const double c = diffusivity_ / (grid_.h() * grid_.h());
  // Redo the nodes next to the boundary with the data inside the stencil; adding
  // c * b afterwards would cancel two O(1/h^2) terms.
  if (grid_.dim() == 1) {
    for (std::size_t i : {std::size_t{0}, n - 1}) {
      const double left = i > 0 ? v[i - 1] : trace.left[0];
      const double right = i + 1 < n ? v[i + 1] : trace.right[0];
      out[i] = c * ((right - v[i]) - (v[i] - left)) + shift_ * v[i];
    }
    return out;
  }
  for (std::size_t iy = 0; iy < n; ++iy) {
    for (std::size_t ix = 0; ix < n; ++ix) {
      if (ix != 0 && ix + 1 != n && iy != 0 && iy + 1 != n) continue;
      const std::size_t i = iy * n + ix;
      const double west = ix > 0 ? v[i - 1] : trace.left[iy];
      const double east = ix + 1 < n ? v[i + 1] : trace.right[iy];
      const double south = iy > 0 ? v[i - n] : trace.bottom[ix];
      const double north = iy + 1 < n ? v[i + n] : trace.top[ix];
      out[i] = c * (((east - v[i]) - (v[i] - west)) + ((north - v[i]) - (v[i] - south))) +
               shift_ * v[i];
    }
  }
  return out;
}

Field DirichletLaplacian::spectral_map(const Field& v,
                                       const std::function<double(double)>& g) const {
  check_grid(v);
  std::vector<double> modes(v.size());
  transform_.apply(v.values(), modes);
  for (std::size_t k = 0; k < modes.size(); ++k) modes[k] *= g(eigenvalues_[k]);
  Field out(grid_);
  transform_.inverse(modes, out.values());
  return out;
}

Field DirichletLaplacian::propagate(const Field& v, double t) const {
  if (t < 0.0) throw std::invalid_argument("propagate needs t >= 0");
  if (t == 0.0) {
    check_grid(v);
    return v;
  }
  return spectral_map(v, [t](double lambda) { return std::exp(t * lambda); });
}

Field DirichletLaplacian::phi1_apply(const Field& w, double t) const {
  if (!(t > 0.0)) throw std::invalid_argument("phi1_apply needs t > 0");
  return spectral_map(w, [t](double lambda) { return t * phi1(t * lambda); });
}

Field DirichletLaplacian::exponential_euler(const Field& v, const Field& s,
                                            double t) const {
  check_grid(v);
  check_grid(s);
  if (t < 0.0) throw std::invalid_argument("exponential_euler needs t >= 0");
  const std::size_t size = v.size();
  std::vector<double> v_modes(size);
  std::vector<double> s_modes(size);
  transform_.apply(v.values(), v_modes);
  transform_.apply(s.values(), s_modes);
  for (std::size_t k = 0; k < size; ++k) {
    const double x = t * eigenvalues_[k];
    v_modes[k] = std::exp(x) * v_modes[k] + t * phi1(x) * s_modes[k];
  }
  Field out(grid_);
  transform_.inverse(v_modes, out.values());
  return out;
}

Field DirichletLaplacian::solve_shifted(const Field& rhs, double alpha) const {
  return spectral_map(rhs, [alpha](double lambda) { return 1.0 / (1.0 - alpha * lambda); });
}

Field DirichletLaplacian::solve(const Field& rhs) const {
  for (double lambda : eigenvalues_) {
    if (lambda == 0.0) throw SolverError("operator is singular");
  }
  return spectral_map(rhs, [](double lambda) { return 1.0 / lambda; });
}

std::vector<double> thomas_solve(std::vector<double> sub, std::vector<double> diag,
                                 std::vector<double> super, std::vector<double> rhs) {
  const std::size_t n = diag.size();
  if (sub.size() != n || super.size() != n || rhs.size() != n) {
    throw SolverError("tridiagonal bands have inconsistent sizes");
  }
  for (std::size_t i = 1; i < n; ++i) {
    if (diag[i - 1] == 0.0) throw SolverError("zero pivot in tridiagonal solve");
    const double m = sub[i] / diag[i - 1];
    diag[i] -= m * super[i - 1];
    rhs[i] -= m * rhs[i - 1];
  }
  if (diag[n - 1] == 0.0) throw SolverError("zero pivot in tridiagonal solve");
  rhs[n - 1] /= diag[n - 1];
  for (std::size_t i = n - 1; i-- > 0;) {
    rhs[i] = (rhs[i] - super[i] * rhs[i + 1]) / diag[i];
  }
  return rhs;
}

namespace {

double dot(const Field& a, const Field& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Field thomas_shifted(const DirichletLaplacian& op, const Field& rhs, double alpha) {
  const Grid& grid = op.grid();
  if (grid.dim() != 1) throw SolverError("Thomas solver is 1D only");
  const std::size_t n = grid.n();
  const double c = op.diffusivity() / (grid.h() * grid.h());
  std::vector<double> sub(n, -alpha * c);
  std::vector<double> super(n, -alpha * c);
  std::vector<double> diag(n, 1.0 + 2.0 * alpha * c - alpha * op.shift());
  std::vector<double> b(rhs.values().begin(), rhs.values().end());
  return Field(grid, thomas_solve(std::move(sub), std::move(diag), std::move(super),
                                  std::move(b)));
}

}  // namespace

CgResult conjugate_gradient_shifted(const DirichletLaplacian& op, const Field& rhs,
                                    double alpha, double rel_tol, int max_iterations) {
  const Grid& grid = op.grid();
  if (max_iterations <= 0) max_iterations = static_cast<int>(10 * grid.size() + 100);
  const double c = op.diffusivity() / (grid.h() * grid.h());
  const double diag = 1.0 + alpha * (2.0 * grid.dim() * c - op.shift());
  auto apply_a = [&](const Field& x) {
    Field y = op.apply(x);
    y *= -alpha;
    y += x;
    return y;
  };

  Field x(grid);
  Field r = rhs;
  const double rhs_norm = std::sqrt(dot(rhs, rhs));
  if (rhs_norm == 0.0) return {x, 0, 0.0};
  Field zvec = (1.0 / diag) * r;
  Field p = zvec;
  double rz = dot(r, zvec);
  for (int it = 1; it <= max_iterations; ++it) {
    const Field ap = apply_a(p);
    const double step = rz / dot(p, ap);
    x.axpy(step, p);
    r.axpy(-step, ap);
    const double res = std::sqrt(dot(r, r)) / rhs_norm;
    if (res <= rel_tol) return {x, it, res};
    zvec = (1.0 / diag) * r;
    const double rz_next = dot(r, zvec);
    const double beta = rz_next / rz;
    rz = rz_next;
    p *= beta;
    p += zvec;
  }
  throw SolverError("conjugate gradient did not reach relative residual " +
                    std::to_string(rel_tol) + " in " + std::to_string(max_iterations) +
                    " iterations");
}

Field crank_nicolson(const DirichletLaplacian& op, const Field& v0,
                     const std::function<Field(double)>& source, double t0, double tau,
                     int substeps, CnSolver solver) {
  if (substeps < 1) throw std::invalid_argument("Crank-Nicolson needs at least one substep");
  if (!(tau > 0.0)) throw std::invalid_argument("Crank-Nicolson needs tau > 0");
  const Grid& grid = op.grid();
  if (solver == CnSolver::automatic) {
    solver = grid.dim() == 1 ? CnSolver::thomas : CnSolver::spectral;
  }
  const double dt = tau / substeps;
  const double half = dt / 2.0;

  auto solve = [&](const Field& rhs) -> Field {
    switch (solver) {
      case CnSolver::thomas:
        return thomas_shifted(op, rhs, half);
      case CnSolver::cg:
        return conjugate_gradient_shifted(op, rhs, half).solution;
      case CnSolver::spectral:
      case CnSolver::automatic:
        break;
    }
    return op.solve_shifted(rhs, half);
  };

  Field v = v0;
  std::optional<Field> s_now;
  if (source) s_now = source(t0);
  for (int k = 0; k < substeps; ++k) {
    Field rhs = op.apply(v);
    rhs *= half;
    rhs += v;
    if (source) {
      Field s_next = source(t0 + (k + 1) * dt);
      rhs.axpy(half, *s_now);
      rhs.axpy(half, s_next);
      s_now = std::move(s_next);
    }
    v = solve(rhs);
  }
  return v;
}

}  // namespace splitpde
