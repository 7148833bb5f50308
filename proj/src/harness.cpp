#include "splitpde/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <stdexcept>
#include <thread>

namespace splitpde {
namespace {

using Clock = std::chrono::steady_clock;

constexpr double kP3ReferenceStep = 5e-5;
constexpr int kDefaultLocalSubsteps = 100;
constexpr double kDefaultReferenceDivisor = 16.0;
constexpr double kMinReferenceRatio = 4.0;

std::string format_double(const char* fmt, double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, fmt, x);
  return buf;
}

double parse_double(const std::string& text, const std::string& what) {
  std::size_t used = 0;
  double x = 0.0;
  try {
    x = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size() || !std::isfinite(x)) {
    throw std::invalid_argument("invalid " + what + " '" + text + "'");
  }
  return x;
}

int parse_int(const std::string& text, const std::string& what) {
  std::size_t used = 0;
  int x = 0;
  try {
    x = std::stoi(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size()) {
    throw std::invalid_argument("invalid " + what + " '" + text + "'");
  }
  return x;
}

/// Number of steps of size tau that cover `length`, if it is a whole number.
std::optional<std::size_t> whole_steps(double length, double tau) {
  const double ratio = length / tau;
  const double n = std::round(ratio);
  if (n < 1.0 || std::abs(ratio - n) > 1e-9 * std::max(1.0, ratio)) return std::nullopt;
  return static_cast<std::size_t>(n);
}

/// Runs task(i) for i in [0, count) on up to `jobs` threads. Tasks must not throw.
void parallel_for(std::size_t count, unsigned jobs, const std::function<void(std::size_t)>& task) {
  if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
  const std::size_t workers = std::min<std::size_t>(jobs, count);
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) task(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) task(i);
    });
  }
}

struct Outcome {
  std::optional<Field> value;
  std::string failure;
};

/// Wraps a computation so that flow and solver errors become a failed cell.
Outcome attempt(const std::function<Field()>& compute) {
  try {
    return {compute(), {}};
  } catch (const std::exception& e) {
    return {std::nullopt, e.what()};
  }
}

SchemeConfig modified_strang_like(const SchemeConfig& base) {
  SchemeConfig cfg = base;
  cfg.kind = SplittingKind::strang;
  cfg.correction = Correction::modified;
  return cfg;
}

std::string grid_description(const Grid& grid) {
  std::string s = std::to_string(grid.dim()) + "D, n = " + std::to_string(grid.n());
  if (grid.dim() == 2) s += " x " + std::to_string(grid.n());
  return s + ", h = " + format_double("%.4g", grid.h());
}

std::string linear_description(const LinearFlowConfig& lin) {
  std::string s = to_string(lin.method);
  if (lin.method == LinearMethod::crank_nicolson) {
    s += " (" + std::to_string(lin.cn_substeps) + " substeps)";
  }
  return s;
}

std::vector<std::pair<std::string, std::string>> describe_spec(const ExperimentSpec& spec,
                                                               const ReferencePolicy& ref,
                                                               bool local) {
  const Problem& p = spec.problem;
  const SchemeConfig base = spec.schemes.empty() ? SchemeConfig{} : spec.schemes.front();
  std::string norms;
  for (NormKind k : spec.norms) norms += std::string(norms.empty() ? "" : ",") + to_string(k);
  std::string reaction = "RK4, " + std::to_string(base.reaction_substeps) + " substeps";
  if (base.reaction_exact_flow && p.reaction.has_exact_flow()) {
    reaction += " (closed form for classical schemes)";
  }
  return {
      {"study", local ? "local error (single step)" : "global error at t_final"},
      {"problem", p.id + ": " + p.description},
      {"grid", grid_description(p.grid())},
      {"t_final", format_double("%.6g", p.t_final)},
      {"linear flow", linear_description(base.linear)},
      {"reaction flow", reaction},
      {"ordering", base.reversed ? "reversed" : "standard"},
      {"reference", ref.describe()},
      {"norms", norms},
  };
}

}  // namespace

ReferencePolicy ReferencePolicy::modified_strang(double tau_ref) {
  return {ReferenceKind::modified_strang_small_step, tau_ref, 0};
}

ReferencePolicy ReferencePolicy::per_scheme(double tau_ref) {
  return {ReferenceKind::per_scheme, tau_ref, 0};
}

ReferencePolicy ReferencePolicy::substepped(int k) {
  return {ReferenceKind::substepped_same_scheme, 0.0, k};
}

std::string ReferencePolicy::describe() const {
  switch (kind) {
    case ReferenceKind::automatic: return "automatic";
    case ReferenceKind::modified_strang_small_step:
      return "modified Strang, step " + format_double("%.4g", tau_ref);
    case ReferenceKind::per_scheme:
      return "same scheme, step " + format_double("%.4g", tau_ref);
    case ReferenceKind::substepped_same_scheme:
      return "same scheme, " + std::to_string(substeps) + " substeps per step";
  }
  return "?";
}

ReferencePolicy parse_reference_policy(const std::string& text) {
  if (text == "auto") return {};
  const auto colon = text.find(':');
  if (colon == std::string::npos) {
    throw std::invalid_argument("invalid reference policy '" + text +
                                "' (expected auto, modstrang:TAU, same:TAU or substep:K)");
  }
  const std::string kind = text.substr(0, colon);
  const std::string arg = text.substr(colon + 1);
  if (kind == "modstrang" || kind == "same") {
    const double tau = parse_double(arg, "reference step");
    if (!(tau > 0.0)) throw std::invalid_argument("reference step must be positive");
    return kind == "same" ? ReferencePolicy::per_scheme(tau)
                          : ReferencePolicy::modified_strang(tau);
  }
  if (kind == "substep") {
    const int k = parse_int(arg, "substep count");
    if (k < 2) throw std::invalid_argument("substep count must be at least 2");
    return ReferencePolicy::substepped(k);
  }
  throw std::invalid_argument("unknown reference policy '" + kind + "'");
}

ReferencePolicy resolve_reference(const ExperimentSpec& spec, bool local) {
  if (spec.reference.kind != ReferenceKind::automatic) return spec.reference;
  if (local) return ReferencePolicy::substepped(kDefaultLocalSubsteps);
  if (spec.problem.id == "P3") return ReferencePolicy::per_scheme(kP3ReferenceStep);
  if (spec.steps.empty()) return ReferencePolicy::modified_strang(0.0);
  const double tau_min = *std::min_element(spec.steps.begin(), spec.steps.end());
  return ReferencePolicy::modified_strang(tau_min / kDefaultReferenceDivisor);
}

void validate(const ExperimentSpec& spec, bool local) {
  if (spec.steps.empty()) throw std::invalid_argument("no step sizes given");
  if (spec.norms.empty()) throw std::invalid_argument("no norms given");
  const double t_final = spec.problem.t_final;
  if (!(t_final > 0.0)) throw std::invalid_argument("t_final must be positive");
  for (double tau : spec.steps) {
    if (!(tau > 0.0)) throw std::invalid_argument("step sizes must be positive");
    if (!local && !whole_steps(t_final, tau)) {
      throw std::invalid_argument("step " + format_double("%g", tau) +
                                  " does not divide t_final " + format_double("%g", t_final));
    }
  }
  const ReferencePolicy ref = resolve_reference(spec, local);
  const double tau_min = *std::min_element(spec.steps.begin(), spec.steps.end());
  if (ref.kind == ReferenceKind::substepped_same_scheme) {
    if (ref.substeps < 4) throw std::invalid_argument("reference needs at least 4 substeps");
    return;
  }
  if (!(ref.tau_ref > 0.0) || ref.tau_ref > tau_min / kMinReferenceRatio * (1 + 1e-12)) {
    throw std::invalid_argument("reference step " + format_double("%g", ref.tau_ref) +
                                " must be at most min step / 4");
  }
  if (!local && !whole_steps(t_final, ref.tau_ref)) {
    throw std::invalid_argument("reference step does not divide t_final");
  }
  if (local) {
    for (double tau : spec.steps) {
      if (!whole_steps(tau, ref.tau_ref)) {
        throw std::invalid_argument("reference step does not divide step " +
                                    format_double("%g", tau));
      }
    }
  }
}

bool ResultTable::any_failed() const {
  return std::any_of(rows.begin(), rows.end(), [](const ResultRow& r) { return r.failure; });
}

std::vector<std::optional<double>> ResultTable::errors(std::size_t norm_index) const {
  std::vector<std::optional<double>> out;
  for (const ResultRow& r : rows) out.push_back(r.errors.at(norm_index));
  return out;
}

std::vector<std::optional<double>> ResultTable::orders(std::size_t norm_index) const {
  std::vector<std::optional<double>> out;
  for (const ResultRow& r : rows) out.push_back(r.orders.at(norm_index));
  return out;
}

bool Study::any_failed() const {
  return std::any_of(tables.begin(), tables.end(),
                     [](const ResultTable& t) { return t.any_failed(); });
}

const ResultTable* Study::find(const std::string& scheme) const {
  for (const ResultTable& t : tables) {
    if (t.scheme == scheme) return &t;
  }
  return nullptr;
}

std::vector<double> observed_order(const std::vector<double>& errors,
                                   const std::vector<double>& steps) {
  if (errors.size() != steps.size()) {
    throw std::invalid_argument("observed_order: errors and steps differ in length");
  }
  if (errors.size() < 2) throw std::invalid_argument("observed_order: need two entries");
  for (std::size_t i = 0; i < errors.size(); ++i) {
    if (!(errors[i] > 0.0) || !(steps[i] > 0.0)) {
      throw std::invalid_argument("observed_order: errors and steps must be positive");
    }
  }
  std::vector<double> out;
  for (std::size_t i = 1; i < errors.size(); ++i) {
    out.push_back(std::log(errors[i - 1] / errors[i]) / std::log(steps[i - 1] / steps[i]));
  }
  return out;
}

std::vector<double> parse_step_list(const std::string& text) {
  std::vector<double> steps;
  const auto first = text.find(':');
  if (first != std::string::npos) {
    const auto second = text.find(':', first + 1);
    if (second == std::string::npos || text.substr(first + 1, second - first - 1) != "halve") {
      throw std::invalid_argument("invalid step range '" + text + "' (expected START:halve:COUNT)");
    }
    double tau = parse_double(text.substr(0, first), "step size");
    const int count = parse_int(text.substr(second + 1), "step count");
    if (count < 1) throw std::invalid_argument("step count must be positive");
    for (int i = 0; i < count; ++i, tau /= 2.0) steps.push_back(tau);
  } else {
    std::size_t start = 0;
    while (start <= text.size()) {
      const auto comma = std::min(text.find(',', start), text.size());
      steps.push_back(parse_double(text.substr(start, comma - start), "step size"));
      start = comma + 1;
    }
  }
  for (double tau : steps) {
    if (!(tau > 0.0)) throw std::invalid_argument("step sizes must be positive");
  }
  return steps;
}

namespace {

Study run_study(const ExperimentSpec& spec, bool local) {
  validate(spec, local);
  const auto started = Clock::now();
  const ReferencePolicy ref = resolve_reference(spec, local);
  const Problem& problem = spec.problem;
  const Lifting lifting = make_lifting(problem);
  const double t_final = problem.t_final;

  // Runs `cfg` with steps of `tau` over one step (local) or to t_final.
  auto solve = [&](const SchemeConfig& cfg, double tau) {
    if (local) return step(cfg, problem, lifting, problem.u0, 0.0, tau);
    const std::size_t n = *whole_steps(t_final, tau);
    return advance(cfg, problem, lifting, problem.u0, 0.0, t_final / n, n);
  };
  // The reference for the cell (cfg, tau) over the same time interval.
  auto reference = [&](const SchemeConfig& cfg, double tau) {
    const double length = local ? tau : t_final;
    switch (ref.kind) {
      case ReferenceKind::substepped_same_scheme: {
        const std::size_t n = local ? ref.substeps : ref.substeps * *whole_steps(t_final, tau);
        return advance(cfg, problem, lifting, problem.u0, 0.0, length / n, n);
      }
      case ReferenceKind::modified_strang_small_step:
      case ReferenceKind::per_scheme: {
        const SchemeConfig rcfg =
            ref.kind == ReferenceKind::per_scheme ? cfg : modified_strang_like(cfg);
        const std::size_t n = *whole_steps(length, ref.tau_ref);
        return advance(rcfg, problem, lifting, problem.u0, 0.0, length / n, n);
      }
      case ReferenceKind::automatic: break;
    }
    throw std::logic_error("unresolved reference policy");
  };

  // Shared references: one for modified Strang, one per scheme otherwise.
  // Local studies need one per step size as the interval changes.
  const std::size_t n_schemes = spec.schemes.size();
  const std::size_t n_steps = spec.steps.size();
  auto ref_key = [&](std::size_t s, std::size_t j) -> std::size_t {
    if (ref.kind == ReferenceKind::substepped_same_scheme) return s * n_steps + j;
    const std::size_t key = ref.kind == ReferenceKind::modified_strang_small_step ? 0 : s;
    return local ? key * n_steps + j : key;
  };
  std::map<std::size_t, std::pair<std::size_t, std::size_t>> ref_tasks;
  for (std::size_t s = 0; s < n_schemes; ++s) {
    for (std::size_t j = 0; j < n_steps; ++j) ref_tasks.emplace(ref_key(s, j), std::pair{s, j});
  }
  std::vector<std::size_t> ref_keys;
  for (const auto& [key, cell] : ref_tasks) ref_keys.push_back(key);
  std::vector<Outcome> ref_values(ref_keys.size());
  std::vector<Outcome> cells(n_schemes * n_steps);
  std::vector<double> cell_seconds(cells.size(), 0.0);

  // References and cells share one task list so the slow references overlap
  // with the cheap cells.
  const std::size_t total = ref_keys.size() + cells.size();
  parallel_for(total, spec.jobs, [&](std::size_t i) {
    if (i < ref_keys.size()) {
      const auto [s, j] = ref_tasks.at(ref_keys[i]);
      ref_values[i] = attempt([&] { return reference(spec.schemes[s], spec.steps[j]); });
      return;
    }
    const std::size_t c = i - ref_keys.size();
    const std::size_t s = c / n_steps;
    const std::size_t j = c % n_steps;
    const auto t0 = Clock::now();
    cells[c] = attempt([&] { return solve(spec.schemes[s], spec.steps[j]); });
    cell_seconds[c] = std::chrono::duration<double>(Clock::now() - t0).count();
  });

  Study study;
  study.norms = spec.norms;
  study.local = local;
  study.metadata = describe_spec(spec, ref, local);
  const std::size_t n_norms = spec.norms.size();
  for (std::size_t s = 0; s < n_schemes; ++s) {
    ResultTable table;
    table.scheme = spec.schemes[s].name();
    table.label = spec.schemes[s].label();
    for (std::size_t j = 0; j < n_steps; ++j) {
      ResultRow row;
      row.step = spec.steps[j];
      row.errors.assign(n_norms, std::nullopt);
      row.orders.assign(n_norms, std::nullopt);
      const std::size_t r = static_cast<std::size_t>(
          std::lower_bound(ref_keys.begin(), ref_keys.end(), ref_key(s, j)) - ref_keys.begin());
      const Outcome& cell = cells[s * n_steps + j];
      const Outcome& refv = ref_values[r];
      table.wall_seconds += cell_seconds[s * n_steps + j];
      if (!cell.value) {
        row.failure = cell.failure;
      } else if (!refv.value) {
        row.failure = "reference failed: " + refv.failure;
      } else {
        const Field diff = *cell.value - *refv.value;
        for (std::size_t k = 0; k < n_norms; ++k) row.errors[k] = norm(diff, spec.norms[k]);
      }
      if (j > 0) {
        const ResultRow& prev = table.rows.back();
        for (std::size_t k = 0; k < n_norms; ++k) {
          const auto& a = prev.errors[k];
          const auto& b = row.errors[k];
          if (a && b && *a > 0.0 && *b > 0.0) {
            row.orders[k] = observed_order({*a, *b}, {prev.step, row.step}).front();
          }
        }
      }
      table.rows.push_back(std::move(row));
    }
    study.tables.push_back(std::move(table));
  }
  const double wall = std::chrono::duration<double>(Clock::now() - started).count();
  study.metadata.emplace_back("wall time", format_double("%.2f s", wall));
  return study;
}

}  // namespace

Study run_convergence(const ExperimentSpec& spec) { return run_study(spec, false); }

Study run_local_error(const ExperimentSpec& spec) { return run_study(spec, true); }

}  // namespace splitpde
