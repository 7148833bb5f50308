#pragma once

#include <string>

#include "splitpde/boundary.hpp"
#include "splitpde/flows.hpp"
#include "splitpde/grid.hpp"
#include "splitpde/lifting.hpp"
#include "splitpde/operators.hpp"
#include "splitpde/reaction.hpp"

namespace splitpde {

enum class SplittingKind { lie, strang };
enum class Correction { classical, modified };

struct SchemeConfig {
  SplittingKind kind = SplittingKind::strang;
  Correction correction = Correction::modified;
  LinearFlowConfig linear;
  int reaction_substeps = 10;
  /// Use the closed-form reaction flow in classical schemes when available.
  bool reaction_exact_flow = false;
  /// Lie: linear then reaction. Strang: reaction half, linear, reaction half.
  bool reversed = false;

  /// CLI name: lie, lie-mod, strang, strang-mod.
  std::string name() const;
  /// Table heading: Lie, Lie (modified), Strang, Strang (modified).
  std::string label() const;
};

SchemeConfig parse_scheme(const std::string& name);

/// Diffusion-reaction problem u' = D u + f(u), u = b on the boundary, u(0) = u0.
struct Problem {
  std::string id;
  std::string description;
  DirichletLaplacian op;
  ReactionTerm reaction;
  BoundaryData boundary;
  Field u0;
  double t_final;

  const Grid& grid() const { return op.grid(); }
};

/// Largest mismatch between b(0) and u0 extrapolated linearly from the two
/// nodes next to each boundary node. O(h) or smaller when u0 is compatible.
double compatibility_residual(const Problem& problem);

Field step_modified_lie(const SchemeConfig& cfg, const Problem& problem,
                        const Lifting& lifting, const Field& u, double t, double tau);
Field step_modified_strang(const SchemeConfig& cfg, const Problem& problem,
                           const Lifting& lifting, const Field& u, double t, double tau);
Field step_classical_lie(const SchemeConfig& cfg, const Problem& problem,
                         const Lifting& lifting, const Field& u, double t, double tau);
Field step_classical_strang(const SchemeConfig& cfg, const Problem& problem,
                            const Lifting& lifting, const Field& u, double t, double tau);

/// Dispatches on cfg.kind and cfg.correction.
Field step(const SchemeConfig& cfg, const Problem& problem, const Lifting& lifting,
           const Field& u, double t, double tau);

Lifting make_lifting(const Problem& problem);

/// n_steps one-step maps from u(t0) = u to t0 + n_steps * tau. A FlowError is
/// rethrown with the 0-based index of the failing step.
Field advance(const SchemeConfig& cfg, const Problem& problem, const Lifting& lifting,
              Field u, double t0, double tau, std::size_t n_steps);

/// n_steps steps of size t_final / n_steps from u0.
Field integrate(const SchemeConfig& cfg, const Problem& problem, std::size_t n_steps);

}  // namespace splitpde
