// Command-line front end: convergence and local-error tables for the built-in
// problems or a problem read from a config file.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "splitpde/harness.hpp"
#include "splitpde/problem_config.hpp"
#include "splitpde/problems.hpp"
#include "splitpde/table_io.hpp"

namespace {

using namespace splitpde;

constexpr int kExitCellFailed = 2;

struct StudyOptions {
  std::string problem;
  std::string config;
  std::string schemes = "lie,lie-mod,strang,strang-mod";
  std::string norms = "inf";
  std::string steps;
  std::string format = "markdown";
  std::string out;
  std::size_t grid = 0;
  std::string linear = "midpoint";
  int cn_substeps = 10;
  int reaction_substeps = 10;
  std::string reference = "auto";
  bool reversed = false;
  bool exact_reaction = false;
  unsigned jobs = 0;
};

std::vector<std::string> split(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) parts.push_back(item);
  }
  return parts;
}

void add_study_options(CLI::App& cmd, StudyOptions& o) {
  auto* problem = cmd.add_option("--problem", o.problem, "Built-in problem P1..P5");
  auto* config = cmd.add_option("--config", o.config, "Problem config file (key = value)")
                     ->check(CLI::ExistingFile);
  problem->excludes(config);
  config->excludes(problem);
  cmd.add_option("--schemes", o.schemes, "Comma list of lie, lie-mod, strang, strang-mod")
      ->capture_default_str();
  cmd.add_option("--norms", o.norms, "Comma list of inf, one, two")->capture_default_str();
  cmd.add_option("--steps", o.steps, "START:halve:COUNT or a comma list of step sizes");
  cmd.add_option("--format", o.format, "markdown or csv")->capture_default_str();
  cmd.add_option("--out", o.out, "Write the table to FILE instead of stdout");
  cmd.add_option("--grid", o.grid, "Interior nodes per axis")->check(CLI::PositiveNumber);
  cmd.add_option("--linear", o.linear, "Linear flow: exp, midpoint or cn")->capture_default_str();
  cmd.add_option("--cn-substeps", o.cn_substeps, "Crank-Nicolson steps per linear flow")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd.add_option("--reaction-substeps", o.reaction_substeps, "RK4 steps per reaction flow")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd.add_option("--reference", o.reference, "auto, modstrang:TAU, same:TAU or substep:K")
      ->capture_default_str();
  cmd.add_flag("--reversed", o.reversed, "Reaction-linear-reaction ordering");
  cmd.add_flag("--exact-reaction", o.exact_reaction,
               "Closed-form reaction flow in the classical schemes");
  cmd.add_option("--jobs", o.jobs, "Worker threads (0: one per core)")->capture_default_str();
}

ExperimentSpec make_spec(const StudyOptions& o, const std::string& default_steps_1d,
                         const std::string& default_steps_2d) {
  std::optional<std::size_t> n;
  if (o.grid > 0) n = o.grid;
  std::optional<Problem> problem;
  if (!o.config.empty()) {
    if (n) throw CLI::ValidationError("--grid", "set n in the config file instead");
    problem = load_problem_config(o.config);
  } else {
    if (o.problem.empty()) throw CLI::RequiredError("--problem or --config");
    problem = builtin_problem(o.problem, n);
  }

  ExperimentSpec spec{std::move(*problem), {}, {}, {}, parse_reference_policy(o.reference),
                      o.jobs};
  LinearFlowConfig linear;
  linear.method = parse_linear_method(o.linear);
  linear.cn_substeps = o.cn_substeps;
  for (const std::string& name : split(o.schemes)) {
    SchemeConfig cfg = parse_scheme(name);
    cfg.linear = linear;
    cfg.reaction_substeps = o.reaction_substeps;
    cfg.reaction_exact_flow = o.exact_reaction;
    cfg.reversed = o.reversed;
    spec.schemes.push_back(cfg);
  }
  for (const std::string& name : split(o.norms)) spec.norms.push_back(parse_norm_kind(name));
  const std::string steps = !o.steps.empty()                      ? o.steps
                            : spec.problem.grid().dim() == 1 ? default_steps_1d
                                                             : default_steps_2d;
  spec.steps = parse_step_list(steps);
  return spec;
}

int write_study(const Study& study, const StudyOptions& o) {
  const std::string text = emit(study, parse_output_format(o.format));
  if (o.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream file(o.out);
    if (!file) throw std::runtime_error("cannot write '" + o.out + "'");
    file << text;
  }
  if (study.any_failed()) {
    for (const ResultTable& t : study.tables) {
      for (const ResultRow& r : t.rows) {
        if (r.failure) std::cerr << "failed: " << t.scheme << " tau=" << r.step << ": " << *r.failure << '\n';
      }
    }
    return kExitCellFailed;
  }
  return 0;
}

void list_catalog() {
  std::cout << "problems:\n";
  for (const std::string& id : builtin_problem_ids()) {
    const Problem p = builtin_problem(id);
    std::cout << "  " << id << "  " << p.description << "\n";
  }
  std::cout << "schemes:\n"
               "  lie         reaction, then diffusion with the boundary data\n"
               "  lie-mod     the same for u - z with the corrected reaction term\n"
               "  strang      diffusion half step, reaction, diffusion half step\n"
               "  strang-mod  the same for u - z with the corrected reaction term\n"
               "norms:\n"
               "  inf, one, two\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lie and Strang splitting for diffusion-reaction equations with Dirichlet data"};
  app.require_subcommand(1);

  auto* list = app.add_subcommand("list", "List built-in problems and schemes");

  StudyOptions run_opts;
  auto* run = app.add_subcommand("run", "Global error at t_final and observed orders");
  add_study_options(*run, run_opts);

  StudyOptions local_opts;
  auto* local = app.add_subcommand("local-error", "Error after a single step and local orders");
  add_study_options(*local, local_opts);

  CLI11_PARSE(app, argc, argv);

  try {
    if (list->parsed()) {
      list_catalog();
      return 0;
    }
    if (run->parsed()) {
      return write_study(run_convergence(make_spec(run_opts, "2e-2:halve:7", "0.1:halve:4")),
                         run_opts);
    }
    if (local->parsed()) {
      return write_study(
          run_local_error(make_spec(local_opts, "6.25e-3:halve:4", "0.1:halve:4")), local_opts);
    }
  } catch (const CLI::Error& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
