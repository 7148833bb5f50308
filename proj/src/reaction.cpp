#include "splitpde/reaction.hpp"

#include <cmath>
#include <sstream>

namespace splitpde {

ReactionTerm ReactionTerm::quadratic() {
  return {"quadratic", [](double u) { return u * u; },
          [](double w0, double tau) -> std::optional<double> {
            const double denom = 1.0 - tau * w0;
            if (denom <= 0.0) return std::nullopt;
            return w0 / denom;
          }};
}

ReactionTerm ReactionTerm::linear(double c) {
  std::ostringstream name;
  name << "linear(" << c << ")";
  return {name.str(), [c](double u) { return c * u; },
          [c](double w0, double tau) -> std::optional<double> {
            return w0 * std::exp(c * tau);
          }};
}

ReactionTerm ReactionTerm::zero() {
  return {"zero", [](double) { return 0.0; },
          [](double w0, double) -> std::optional<double> { return w0; }};
}

ReactionTerm ReactionTerm::logistic(double r) {
  std::ostringstream name;
  name << "logistic(" << r << ")";
  return {name.str(), [r](double u) { return r * u * (1.0 - u); },
          [r](double w0, double tau) -> std::optional<double> {
            if (w0 == 0.0) return 0.0;
            const double e = std::exp(-r * tau);
            const double denom = w0 + (1.0 - w0) * e;
            if (denom <= 0.0) return std::nullopt;
            return w0 / denom;
          }};
}

}  // namespace splitpde
