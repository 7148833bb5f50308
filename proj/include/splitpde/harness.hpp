#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "splitpde/grid.hpp"
#include "splitpde/splitting.hpp"

namespace splitpde {

enum class ReferenceKind {
  automatic,                   ///< chosen per problem, see resolve_reference
  modified_strang_small_step,  ///< one modified Strang run with step tau_ref
  per_scheme,                  ///< each scheme run with step tau_ref
  substepped_same_scheme,      ///< the same scheme with `substeps` steps of tau / substeps
};

struct ReferencePolicy {
  ReferenceKind kind = ReferenceKind::automatic;
  double tau_ref = 0.0;
  int substeps = 100;

  static ReferencePolicy modified_strang(double tau_ref);
  static ReferencePolicy per_scheme(double tau_ref);
  static ReferencePolicy substepped(int k);

  std::string describe() const;
};

/// Parses auto, modstrang:TAU, same:TAU or substep:K.
ReferencePolicy parse_reference_policy(const std::string& text);

struct ExperimentSpec {
  Problem problem;
  std::vector<SchemeConfig> schemes;
  std::vector<double> steps;
  std::vector<NormKind> norms{NormKind::inf};
  ReferencePolicy reference;
  /// Worker threads; 0 means one per hardware thread.
  unsigned jobs = 0;
};

/// Fills in an automatic policy. Global studies: P3 uses a per-scheme
/// reference with tau = 5e-5, everything else modified Strang with
/// min(steps) / 16. Local studies: 100 substeps of the same scheme.
ReferencePolicy resolve_reference(const ExperimentSpec& spec, bool local);

/// Throws std::invalid_argument if the spec cannot be run: empty step or
/// norm list, steps that do not divide t_final (global studies only), or a
/// reference step above min(steps) / 4.
void validate(const ExperimentSpec& spec, bool local);

struct ResultRow {
  double step = 0.0;
  std::vector<std::optional<double>> errors;  ///< per norm, empty if the cell failed
  std::vector<std::optional<double>> orders;  ///< per norm, empty in the first row
  std::optional<std::string> failure;
};

struct ResultTable {
  std::string scheme;  ///< CLI name, e.g. strang-mod
  std::string label;   ///< heading, e.g. Strang (modified)
  std::vector<ResultRow> rows;
  double wall_seconds = 0.0;

  bool any_failed() const;
  /// Error column for one norm; failed cells are nullopt.
  std::vector<std::optional<double>> errors(std::size_t norm_index) const;
  std::vector<std::optional<double>> orders(std::size_t norm_index) const;
};

struct Study {
  std::vector<NormKind> norms;
  std::vector<ResultTable> tables;
  /// Ordered key/value pairs: problem, grid, sub-integrators, reference, ...
  std::vector<std::pair<std::string, std::string>> metadata;
  bool local = false;

  bool any_failed() const;
  const ResultTable* find(const std::string& scheme) const;
};

/// Integrates every (scheme, step) cell to t_final and compares with the reference.
Study run_convergence(const ExperimentSpec& spec);

/// One step of each size from u0, compared with the reference after that step.
Study run_local_error(const ExperimentSpec& spec);

/// order_i = ln(e_{i-1} / e_i) / ln(tau_{i-1} / tau_i), one entry per
/// consecutive pair. Throws std::invalid_argument on length mismatch, fewer
/// than two entries, or non-positive errors or steps.
std::vector<double> observed_order(const std::vector<double>& errors,
                                   const std::vector<double>& steps);

/// Parses either a comma list (5e-3,2.5e-3) or START:halve:COUNT.
std::vector<double> parse_step_list(const std::string& text);

}  // namespace splitpde
