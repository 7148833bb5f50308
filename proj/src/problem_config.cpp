#include "splitpde/problem_config.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <map>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "splitpde/problems.hpp"

namespace splitpde {
namespace {

constexpr double pi = std::numbers::pi;

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

struct Entry {
  std::string value;
  int line = 0;
};

[[noreturn]] void fail(const Entry& e, const std::string& what) {
  throw std::invalid_argument("config line " + std::to_string(e.line) + ": " + what);
}

double to_number(const Entry& e, const std::string& s) {
  std::size_t used = 0;
  double x = 0.0;
  try {
    x = std::stod(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != s.size() || !std::isfinite(x)) fail(e, "bad number '" + s + "'");
  return x;
}

/// name(arg, ...) or a bare name.
struct Call {
  std::string name;
  std::vector<double> args;
};

Call parse_call(const Entry& e) {
  const std::string& v = e.value;
  const auto open = v.find('(');
  if (open == std::string::npos) return {trim(v), {}};
  if (v.back() != ')') fail(e, "missing ')' in '" + v + "'");
  Call call{trim(v.substr(0, open)), {}};
  const std::string inner = v.substr(open + 1, v.size() - open - 2);
  std::stringstream ss(inner);
  std::string arg;
  while (std::getline(ss, arg, ',')) call.args.push_back(to_number(e, trim(arg)));
  return call;
}

void expect_args(const Entry& e, const Call& c, std::size_t lo, std::size_t hi) {
  if (c.args.size() < lo || c.args.size() > hi) {
    fail(e, c.name + " takes " + std::to_string(lo) +
                (hi != lo ? " to " + std::to_string(hi) : "") + " arguments");
  }
}

ReactionTerm make_reaction(const Entry& e) {
  const Call c = parse_call(e);
  if (c.name == "quadratic") return expect_args(e, c, 0, 0), ReactionTerm::quadratic();
  if (c.name == "zero") return expect_args(e, c, 0, 0), ReactionTerm::zero();
  if (c.name == "linear") return expect_args(e, c, 1, 1), ReactionTerm::linear(c.args[0]);
  if (c.name == "logistic") return expect_args(e, c, 1, 1), ReactionTerm::logistic(c.args[0]);
  fail(e, "unknown reaction '" + c.name + "'");
}

std::function<double(const Point&)> make_initial(const Entry& e, int dim) {
  const Call c = parse_call(e);
  if (c.name == "constant") {
    expect_args(e, c, 1, 1);
    return [v = c.args[0]](const Point&) { return v; };
  }
  if (c.name == "affine") {
    expect_args(e, c, 2, 3);
    const double a = c.args[0], bx = c.args[1], by = c.args.size() > 2 ? c.args[2] : 0.0;
    return [=](const Point& p) { return a + bx * p[0] + by * p[1]; };
  }
  if (c.name == "sine_squared") {
    expect_args(e, c, 2, 2);
    const double a = c.args[0], b = c.args[1];
    return [=](const Point& p) {
      double s = std::pow(std::sin(pi * p[0]), 2);
      if (dim == 2) s *= std::pow(std::sin(pi * p[1]), 2);
      return a + b * s;
    };
  }
  if (c.name == "crossed_gaussians") {
    expect_args(e, c, 0, 0);
    if (dim != 2) fail(e, "crossed_gaussians needs dim = 2");
    return crossed_gaussians;
  }
  fail(e, "unknown initial value '" + c.name + "'");
}

/// A boundary value b(t), constant in space. Returns value, rate and whether it is constant.
struct TimeFunction {
  std::function<double(double)> value;
  std::function<double(double)> rate;
  bool constant = true;
};

TimeFunction make_time_function(const Entry& e) {
  const Call c = parse_call(e);
  if (c.name == "constant") {
    expect_args(e, c, 1, 1);
    return {[v = c.args[0]](double) { return v; }, [](double) { return 0.0; }, true};
  }
  if (c.name == "sine") {
    expect_args(e, c, 3, 3);
    const double a = c.args[0], b = c.args[1], w = c.args[2];
    return {[=](double t) { return a + b * std::sin(w * t); },
            [=](double t) { return b * w * std::cos(w * t); }, b == 0.0 || w == 0.0};
  }
  fail(e, "unknown boundary function '" + c.name + "'");
}

BoundaryData make_boundary(const std::map<std::string, Entry>& entries, int dim,
                           const std::function<double(const Point&)>& u0) {
  const auto left = entries.find("boundary_left");
  const auto right = entries.find("boundary_right");
  const auto both = entries.find("boundary");
  if (left != entries.end() || right != entries.end()) {
    const Entry& any = left != entries.end() ? left->second : right->second;
    if (dim != 1) fail(any, "boundary_left/boundary_right need dim = 1");
    if (left == entries.end() || right == entries.end()) {
      fail(any, "give both boundary_left and boundary_right");
    }
    if (both != entries.end()) fail(both->second, "boundary conflicts with boundary_left/right");
    const TimeFunction l = make_time_function(left->second);
    const TimeFunction r = make_time_function(right->second);
    if (l.constant && r.constant) {
      const double lv = l.value(0.0), rv = r.value(0.0);
      return BoundaryData(
          1, [=](double, const Point& p) { return p[0] < 0.5 ? lv : rv; },
          [](double, const Point&) { return 0.0; }, true);
    }
    return BoundaryData::ends(l.value, r.value, l.rate, r.rate);
  }
  if (both == entries.end() || parse_call(both->second).name == "from_initial") {
    if (both != entries.end()) expect_args(both->second, parse_call(both->second), 0, 0);
    return BoundaryData::from_spatial(dim, u0);
  }
  const TimeFunction b = make_time_function(both->second);
  if (b.constant) return BoundaryData::constant(dim, b.value(0.0));
  return BoundaryData(
      dim, [v = b.value](double t, const Point&) { return v(t); },
      [r = b.rate](double t, const Point&) { return r(t); }, false);
}

}  // namespace

Problem parse_problem_config(const std::string& text, const std::string& id,
                             TransformBackend backend) {
  static const std::vector<std::string> known = {
      "dim", "n", "t_final", "reaction", "initial", "boundary", "boundary_left", "boundary_right"};
  std::map<std::string, Entry> entries;
  std::istringstream in(text);
  std::string raw;
  for (int line_no = 1; std::getline(in, raw); ++line_no) {
    const std::string line = trim(raw.substr(0, raw.find('#')));
    if (line.empty()) continue;
    const Entry where{line, line_no};
    const auto eq = line.find('=');
    if (eq == std::string::npos) fail(where, "expected key = value");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (std::find(known.begin(), known.end(), key) == known.end()) {
      fail(where, "unknown key '" + key + "'");
    }
    if (value.empty()) fail(where, "empty value for '" + key + "'");
    if (!entries.emplace(key, Entry{value, line_no}).second) {
      fail(where, "duplicate key '" + key + "'");
    }
  }
  auto require = [&](const std::string& key) -> const Entry& {
    const auto it = entries.find(key);
    if (it == entries.end()) throw std::invalid_argument("config: missing key '" + key + "'");
    return it->second;
  };

  const Entry& dim_entry = require("dim");
  const double dim_value = to_number(dim_entry, dim_entry.value);
  if (dim_value != 1.0 && dim_value != 2.0) fail(dim_entry, "dim must be 1 or 2");
  const int dim = static_cast<int>(dim_value);

  std::size_t n = dim == 1 ? 499 : 99;
  if (const auto it = entries.find("n"); it != entries.end()) {
    const double v = to_number(it->second, it->second.value);
    if (v < 1.0 || v != std::floor(v)) fail(it->second, "n must be a positive integer");
    n = static_cast<std::size_t>(v);
  }
  double t_final = 0.1;
  if (const auto it = entries.find("t_final"); it != entries.end()) {
    t_final = to_number(it->second, it->second.value);
    if (!(t_final > 0.0)) fail(it->second, "t_final must be positive");
  }
  ReactionTerm reaction = ReactionTerm::quadratic();
  if (const auto it = entries.find("reaction"); it != entries.end()) {
    reaction = make_reaction(it->second);
  }
  const auto u0 = make_initial(require("initial"), dim);
  BoundaryData boundary = make_boundary(entries, dim, u0);

  const Grid grid(dim, n);
  return Problem{id,
                 "custom " + std::to_string(dim) + "D problem",
                 DirichletLaplacian(grid, backend),
                 std::move(reaction),
                 std::move(boundary),
                 eval_on_grid(u0, grid),
                 t_final};
}

Problem load_problem_config(const std::string& path, TransformBackend backend) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open config file '" + path + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return parse_problem_config(text.str(), std::filesystem::path(path).stem().string(), backend);
}

}  // namespace splitpde
