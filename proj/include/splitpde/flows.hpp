#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

#include "splitpde/lifting.hpp"
#include "splitpde/operators.hpp"
#include "splitpde/reaction.hpp"

namespace splitpde {

/// A sub-flow produced a non-finite state or crossed a pole of its closed form.
class FlowError : public std::runtime_error {
 public:
  FlowError(const std::string& what, std::size_t node, std::optional<std::size_t> step = {});

  std::size_t node() const { return node_; }
  std::optional<std::size_t> step() const { return step_; }
  const std::string& detail() const { return detail_; }

  FlowError at_step(std::size_t step) const { return FlowError(detail_, node_, step); }

 private:
  std::string detail_;
  std::size_t node_;
  std::optional<std::size_t> step_;
};

/// The requested linear method cannot handle the boundary data.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class LinearMethod {
  exact_exp_euler,       ///< source frozen at t0; exact for time-independent data only
  exponential_midpoint,  ///< source frozen at t0 + tau/2
  crank_nicolson,        ///< cn_substeps trapezoidal steps
};

struct LinearFlowConfig {
  LinearMethod method = LinearMethod::exponential_midpoint;
  int cn_substeps = 10;
  CnSolver cn_solver = CnSolver::automatic;
};

const char* to_string(LinearMethod method);
LinearMethod parse_linear_method(const std::string& name);

/// d/dt v = L v + f(z(t)) - dz/dt(t) with homogeneous Dirichlet data, from t0 to t0 + tau.
Field linear_flow_modified(const LinearFlowConfig& cfg, const Lifting& lifting,
                           const ReactionTerm& f, const Field& v0, double t0, double tau);

/// d/dt v = D v with v = b(t) on the boundary. Solved for w = v - z(t), which
/// satisfies d/dt w = L w - dz/dt, and shifted back.
Field linear_flow_classical(const LinearFlowConfig& cfg, const Lifting& lifting,
                            const Field& v0, double t0, double tau);

/// w' = f(w) pointwise by RK4 with `substeps` steps, or by the closed form.
Field reaction_flow_classical(const ReactionTerm& f, const Field& w0, double tau,
                              int substeps, bool use_exact_flow = false);

/// w' = f(w + z(t)) - f(z(t)) by RK4, z evaluated at the stage times.
Field reaction_flow_modified(const ReactionTerm& f, const Lifting& lifting,
                             const Field& w0, double t0, double tau, int substeps);

}  // namespace splitpde
