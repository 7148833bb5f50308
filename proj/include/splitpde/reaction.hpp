#pragma once

#include <functional>
#include <optional>
#include <string>

namespace splitpde {

/// Pointwise reaction term f: R -> R.
///
/// `exact_flow(w0, tau)`, when present, is the closed-form solution of
/// w' = f(w) after time tau, or nullopt if the solution leaves the real line
/// (blow-up) before tau.
struct ReactionTerm {
  std::string name;
  std::function<double(double)> f;
  std::function<std::optional<double>(double, double)> exact_flow;

  double operator()(double u) const { return f(u); }
  bool has_exact_flow() const { return static_cast<bool>(exact_flow); }

  /// f(u) = u^2 with flow w0 / (1 - tau w0).
  static ReactionTerm quadratic();
  /// f(u) = c u
  static ReactionTerm linear(double c);
  static ReactionTerm zero();
  /// f(u) = r u (1 - u)
  static ReactionTerm logistic(double r);
};

}  // namespace splitpde
