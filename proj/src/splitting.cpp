#include "splitpde/splitting.hpp"

#include <algorithm>
#include <cmath>

namespace splitpde {

std::string SchemeConfig::name() const {
  std::string s = kind == SplittingKind::lie ? "lie" : "strang";
  if (correction == Correction::modified) s += "-mod";
  return s;
}

std::string SchemeConfig::label() const {
  std::string s = kind == SplittingKind::lie ? "Lie" : "Strang";
  if (correction == Correction::modified) s += " (modified)";
  return s;
}

SchemeConfig parse_scheme(const std::string& name) {
  SchemeConfig cfg;
  if (name == "lie" || name == "lie-mod") {
    cfg.kind = SplittingKind::lie;
  } else if (name == "strang" || name == "strang-mod") {
    cfg.kind = SplittingKind::strang;
  } else {
    throw ConfigError("unknown scheme '" + name +
                      "' (expected lie, lie-mod, strang or strang-mod)");
  }
  cfg.correction = name.ends_with("-mod") ? Correction::modified : Correction::classical;
  return cfg;
}

double compatibility_residual(const Problem& problem) {
  const Grid& grid = problem.grid();
  const std::size_t n = grid.n();
  if (n < 2) return 0.0;
  const BoundaryTrace b = problem.boundary.trace(grid, 0.0);
  const Field& u = problem.u0;
  double worst = 0.0;
  auto check = [&](double boundary_value, double first, double second) {
    worst = std::max(worst, std::abs(2.0 * first - second - boundary_value));
  };
  if (grid.dim() == 1) {
    check(b.left[0], u[0], u[1]);
    check(b.right[0], u[n - 1], u[n - 2]);
    return worst;
  }
  for (std::size_t k = 0; k < n; ++k) {
    check(b.left[k], u[k * n], u[k * n + 1]);
    check(b.right[k], u[k * n + n - 1], u[k * n + n - 2]);
    check(b.bottom[k], u[k], u[n + k]);
    check(b.top[k], u[(n - 1) * n + k], u[(n - 2) * n + k]);
  }
  return worst;
}

Field step_modified_lie(const SchemeConfig& cfg, const Problem& problem,
                        const Lifting& lifting, const Field& u, double t, double tau) {
  const ReactionTerm& f = problem.reaction;
  const int k = cfg.reaction_substeps;
  Field w = u - lifting.z_at(t);
  if (cfg.reversed) {
    w = linear_flow_modified(cfg.linear, lifting, f, w, t, tau);
    w = reaction_flow_modified(f, lifting, w, t, tau, k);
  } else {
    w = reaction_flow_modified(f, lifting, w, t, tau, k);
    w = linear_flow_modified(cfg.linear, lifting, f, w, t, tau);
  }
  w += lifting.z_at(t + tau);
  return w;
}

Field step_modified_strang(const SchemeConfig& cfg, const Problem& problem,
                           const Lifting& lifting, const Field& u, double t, double tau) {
  const ReactionTerm& f = problem.reaction;
  const int k = cfg.reaction_substeps;
  const double half = tau / 2.0;
  Field w = u - lifting.z_at(t);
  if (cfg.reversed) {
    w = reaction_flow_modified(f, lifting, w, t, half, k);
    w = linear_flow_modified(cfg.linear, lifting, f, w, t, tau);
    w = reaction_flow_modified(f, lifting, w, t + half, half, k);
  } else {
    w = linear_flow_modified(cfg.linear, lifting, f, w, t, half);
    w = reaction_flow_modified(f, lifting, w, t, tau, k);
    w = linear_flow_modified(cfg.linear, lifting, f, w, t + half, half);
  }
  w += lifting.z_at(t + tau);
  return w;
}

Field step_classical_lie(const SchemeConfig& cfg, const Problem& problem,
                         const Lifting& lifting, const Field& u, double t, double tau) {
  const ReactionTerm& f = problem.reaction;
  const int k = cfg.reaction_substeps;
  if (cfg.reversed) {
    Field v = linear_flow_classical(cfg.linear, lifting, u, t, tau);
    return reaction_flow_classical(f, v, tau, k, cfg.reaction_exact_flow);
  }
  Field w = reaction_flow_classical(f, u, tau, k, cfg.reaction_exact_flow);
  return linear_flow_classical(cfg.linear, lifting, w, t, tau);
}

Field step_classical_strang(const SchemeConfig& cfg, const Problem& problem,
                            const Lifting& lifting, const Field& u, double t,
                            double tau) {
  const ReactionTerm& f = problem.reaction;
  const int k = cfg.reaction_substeps;
  const bool exact = cfg.reaction_exact_flow;
  const double half = tau / 2.0;
  if (cfg.reversed) {
    Field w = reaction_flow_classical(f, u, half, k, exact);
    w = linear_flow_classical(cfg.linear, lifting, w, t, tau);
    return reaction_flow_classical(f, w, half, k, exact);
  }
  Field v = linear_flow_classical(cfg.linear, lifting, u, t, half);
  v = reaction_flow_classical(f, v, tau, k, exact);
  return linear_flow_classical(cfg.linear, lifting, v, t + half, half);
}

Field step(const SchemeConfig& cfg, const Problem& problem, const Lifting& lifting,
           const Field& u, double t, double tau) {
  if (!(tau > 0.0)) throw std::invalid_argument("step size must be positive");
  const bool modified = cfg.correction == Correction::modified;
  if (cfg.kind == SplittingKind::lie) {
    return modified ? step_modified_lie(cfg, problem, lifting, u, t, tau)
                    : step_classical_lie(cfg, problem, lifting, u, t, tau);
  }
  return modified ? step_modified_strang(cfg, problem, lifting, u, t, tau)
                  : step_classical_strang(cfg, problem, lifting, u, t, tau);
}

Lifting make_lifting(const Problem& problem) {
  return Lifting(problem.op, problem.boundary);
}

Field advance(const SchemeConfig& cfg, const Problem& problem, const Lifting& lifting,
              Field u, double t0, double tau, std::size_t n_steps) {
  for (std::size_t s = 0; s < n_steps; ++s) {
    try {
      u = step(cfg, problem, lifting, u, t0 + static_cast<double>(s) * tau, tau);
    } catch (const FlowError& e) {
      throw e.at_step(s);
    }
  }
  return u;
}

Field integrate(const SchemeConfig& cfg, const Problem& problem, std::size_t n_steps) {
  if (n_steps < 1) throw std::invalid_argument("integrate needs at least one step");
  const Lifting lifting = make_lifting(problem);
  const double tau = problem.t_final / static_cast<double>(n_steps);
  return advance(cfg, problem, lifting, problem.u0, 0.0, tau, n_steps);
}

}  // namespace splitpde
