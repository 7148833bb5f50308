#include "splitpde/flows.hpp"

#include <cmath>
#include <sstream>

namespace splitpde {
namespace {

std::string describe(const std::string& what, std::size_t node,
                     std::optional<std::size_t> step) {
  std::ostringstream os;
  os << what << " at node " << node;
  if (step) os << " in step " << *step;
  return os.str();
}

void require_finite(const Field& state, const char* flow) {
  for (std::size_t i = 0; i < state.size(); ++i) {
    if (!std::isfinite(state[i])) {
      throw FlowError(std::string(flow) + ": non-finite state (blow-up)", i);
    }
  }
}

void check_step(double tau, int substeps) {
  if (!(tau > 0.0)) throw std::invalid_argument("flow step must be positive");
  if (substeps < 1) throw std::invalid_argument("flow needs at least one substep");
}

/// Classical RK4 on a field-valued ODE y' = rhs(t, y).
template <class Rhs>
Field rk4(const Rhs& rhs, Field y, double t0, double tau, int substeps,
          const char* flow) {
  const double dt = tau / substeps;
  for (int s = 0; s < substeps; ++s) {
    const double t = t0 + s * dt;
    const Field k1 = rhs(t, y);
    const Field k2 = rhs(t + dt / 2, Field(y).axpy(dt / 2, k1));
    const Field k3 = rhs(t + dt / 2, Field(y).axpy(dt / 2, k2));
    const Field k4 = rhs(t + dt, Field(y).axpy(dt, k3));
    for (std::size_t i = 0; i < y.size(); ++i) {
      y[i] += dt / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
    }
    require_finite(y, flow);
  }
  return y;
}

Field pointwise(const ReactionTerm& f, const Field& u) {
  Field out(u.grid());
  for (std::size_t i = 0; i < u.size(); ++i) out[i] = f(u[i]);
  return out;
}

/// Integrates w' = L w + source(t) over [t0, t0 + tau] with the configured method.
template <class Source>
Field linear_solve(const LinearFlowConfig& cfg, const Lifting& lifting,
                   const Field& w0, double t0, double tau, const Source& source) {
  if (!(tau > 0.0)) throw std::invalid_argument("flow step must be positive");
  const DirichletLaplacian& op = lifting.op();
  switch (cfg.method) {
    case LinearMethod::exact_exp_euler:
      if (!lifting.time_independent()) {
        throw ConfigError(
            "exact exponential Euler needs time-independent boundary data; use the "
            "exponential midpoint or Crank-Nicolson method");
      }
      return op.exponential_euler(w0, source(t0), tau);
    case LinearMethod::exponential_midpoint:
      return op.exponential_euler(w0, source(t0 + tau / 2), tau);
    case LinearMethod::crank_nicolson:
      return crank_nicolson(op, w0, source, t0, tau, cfg.cn_substeps, cfg.cn_solver);
  }
  throw ConfigError("unknown linear method");
}

}  // namespace

FlowError::FlowError(const std::string& what, std::size_t node,
                     std::optional<std::size_t> step)
    : std::runtime_error(describe(what, node, step)),
      detail_(what),
      node_(node),
      step_(step) {}

const char* to_string(LinearMethod method) {
  switch (method) {
    case LinearMethod::exact_exp_euler: return "exp";
    case LinearMethod::exponential_midpoint: return "midpoint";
    case LinearMethod::crank_nicolson: return "cn";
  }
  return "?";
}

LinearMethod parse_linear_method(const std::string& name) {
  if (name == "exp") return LinearMethod::exact_exp_euler;
  if (name == "midpoint") return LinearMethod::exponential_midpoint;
  if (name == "cn") return LinearMethod::crank_nicolson;
  throw ConfigError("unknown linear method '" + name + "' (expected exp, midpoint or cn)");
}

Field linear_flow_modified(const LinearFlowConfig& cfg, const Lifting& lifting,
                           const ReactionTerm& f, const Field& v0, double t0,
                           double tau) {
  auto source = [&](double t) {
    Field s = pointwise(f, lifting.z_at(t));
    if (!lifting.time_independent()) s -= lifting.dz_at(t);
    return s;
  };
  return linear_solve(cfg, lifting, v0, t0, tau, source);
}

Field linear_flow_classical(const LinearFlowConfig& cfg, const Lifting& lifting,
                            const Field& v0, double t0, double tau) {
  Field w0 = v0 - lifting.z_at(t0);
  auto source = [&](double t) {
    Field s = lifting.dz_at(t);
    s *= -1.0;
    return s;
  };
  Field w = linear_solve(cfg, lifting, w0, t0, tau, source);
  w += lifting.z_at(t0 + tau);
  return w;
}

Field reaction_flow_classical(const ReactionTerm& f, const Field& w0, double tau,
                              int substeps, bool use_exact_flow) {
  check_step(tau, substeps);
  if (use_exact_flow) {
    if (!f.has_exact_flow()) {
      throw ConfigError("reaction term '" + f.name + "' has no closed-form flow");
    }
    Field w(w0.grid());
    for (std::size_t i = 0; i < w0.size(); ++i) {
      const auto value = f.exact_flow(w0[i], tau);
      if (!value || !std::isfinite(*value)) {
        throw FlowError("reaction flow: closed-form solution has a pole (blow-up)", i);
      }
      w[i] = *value;
    }
    return w;
  }
  auto rhs = [&](double, const Field& y) { return pointwise(f, y); };
  return rk4(rhs, w0, 0.0, tau, substeps, "reaction flow");
}

Field reaction_flow_modified(const ReactionTerm& f, const Lifting& lifting,
                             const Field& w0, double t0, double tau, int substeps) {
  check_step(tau, substeps);
  // consecutive RK4 substeps share endpoint times, so keep the last lifting around
  std::optional<std::pair<double, Field>> last_z;
  auto z_at = [&](double t) -> const Field& {
    if (!last_z || last_z->first != t) last_z.emplace(t, lifting.z_at(t));
    return last_z->second;
  };
  auto rhs = [&](double t, const Field& y) {
    const Field& z = z_at(t);
    Field g(y.grid());
    for (std::size_t i = 0; i < y.size(); ++i) g[i] = f(y[i] + z[i]) - f(z[i]);
    return g;
  };
  return rk4(rhs, w0, t0, tau, substeps, "modified reaction flow");
}

}  // namespace splitpde
