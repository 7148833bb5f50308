#include <doctest.h>

#include <Eigen/Dense>
#include <cmath>
#include <numbers>
#include <unsupported/Eigen/MatrixFunctions>

#include "splitpde/problems.hpp"
#include "splitpde/splitting.hpp"

using namespace splitpde;

namespace {

constexpr double pi = std::numbers::pi;

SchemeConfig scheme(const std::string& name, LinearMethod method = LinearMethod::exponential_midpoint) {
  SchemeConfig cfg = parse_scheme(name);
  cfg.linear.method = method;
  return cfg;
}

Problem homogeneous_problem(ReactionTerm f) {
  const Grid g(1, 63);
  return Problem{"hom",
                 "b = 0",
                 DirichletLaplacian(g),
                 std::move(f),
                 BoundaryData::constant(1, 0.0),
                 eval_on_grid([](const Point& p) { return std::sin(pi * p[0]) + 0.3 * std::sin(3 * pi * p[0]); }, g),
                 0.1};
}

const char* kSchemes[] = {"lie", "lie-mod", "strang", "strang-mod"};

}  // namespace

TEST_CASE("scheme names") {
  for (const char* name : kSchemes) CHECK(parse_scheme(name).name() == name);
  CHECK(parse_scheme("strang-mod").label() == "Strang (modified)");
  CHECK(parse_scheme("lie").label() == "Lie");
  CHECK(parse_scheme("lie").kind == SplittingKind::lie);
  CHECK(parse_scheme("strang").correction == Correction::classical);
  CHECK_THROWS_AS(parse_scheme("yoshida"), ConfigError);
}

TEST_CASE("homogeneous data: classical and modified schemes coincide") {
  const Problem p = homogeneous_problem(ReactionTerm::quadratic());
  for (LinearMethod m : {LinearMethod::exact_exp_euler, LinearMethod::exponential_midpoint,
                         LinearMethod::crank_nicolson}) {
    for (const char* kind : {"lie", "strang"}) {
      for (bool reversed : {false, true}) {
        SchemeConfig classical = scheme(kind, m);
        SchemeConfig modified = scheme(std::string(kind) + "-mod", m);
        classical.reversed = modified.reversed = reversed;
        const Field a = integrate(classical, p, 20);
        const Field b = integrate(modified, p, 20);
        CHECK(max_abs_diff(a, b) <= 1e-12);
      }
    }
  }
}

TEST_CASE("zero reaction: every scheme is the exact linear flow") {
  // u' = D u with u = b on the boundary; u - z evolves by e^{tL}.
  for (int dim : {1, 2}) {
    const Grid g(dim, dim == 1 ? 63 : 31);
    auto g_fn = [](const Point& p) { return 1.0 + p[0] - 0.5 * p[1]; };
    const Problem p{"lin",
                    "f = 0",
                    DirichletLaplacian(g),
                    ReactionTerm::zero(),
                    BoundaryData::from_spatial(dim, g_fn),
                    eval_on_grid([](const Point& q) { return 2.0 + std::sin(pi * q[0]); }, g),
                    0.1};
    const Field z = eval_on_grid(g_fn, g);
    for (const char* name : kSchemes) {
      for (double tau : {0.05, 0.0125, 0.003125}) {
        const Lifting lifting = make_lifting(p);
        const Field u1 = step(scheme(name, LinearMethod::exact_exp_euler), p, lifting, p.u0, 0.0, tau);
        const Field exact = p.op.propagate(p.u0 - z, tau) + z;
        CHECK(max_abs_diff(u1, exact) <= 1e-10);
      }
    }
  }
}

TEST_CASE("linear reaction on a small grid matches the dense exponential") {
  // f(u) = c u with b = 0: classical Strang with exact flows is e^{tL/2} e^{ct} e^{tL/2},
  // which equals e^{t(L + c)} since the operators commute.
  const Grid g(1, 8);
  const double c = 1.7;
  const Problem p{"lin", "f = cu", DirichletLaplacian(g), ReactionTerm::linear(c),
                  BoundaryData::constant(1, 0.0),
                  eval_on_grid([](const Point& q) { return q[0] * (1 - q[0]); }, g), 0.1};
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(8, 8);
  const double s = 81.0;
  for (int i = 0; i < 8; ++i) {
    a(i, i) = -2 * s + c;
    if (i > 0) a(i, i - 1) = s;
    if (i < 7) a(i, i + 1) = s;
  }
  const Eigen::VectorXd u0 = Eigen::Map<const Eigen::VectorXd>(p.u0.values().data(), 8);
  const Eigen::VectorXd exact = (0.1 * a).exp() * u0;
  SchemeConfig cfg = scheme("strang", LinearMethod::exact_exp_euler);
  cfg.reaction_substeps = 50;
  const Field u = integrate(cfg, p, 4);
  for (int i = 0; i < 8; ++i) CHECK(u[i] == doctest::Approx(exact(i)).epsilon(1e-9));
}

TEST_CASE("built-in problems") {
  const Problem p1 = builtin_problem("P1");
  CHECK(p1.grid().n() == 499);
  CHECK(p1.t_final == 0.1);
  CHECK(p1.reaction(3.0) == 9.0);
  CHECK(p1.boundary.value(0.05, {0.0, 0.0}) == 1.0);
  CHECK(p1.boundary.value(0.05, {1.0, 0.0}) == 1.0);
  // u0(0.5) = 2 sits on node 249
  CHECK(p1.grid().coords(249)[0] == doctest::Approx(0.5));
  CHECK(p1.u0[249] == doctest::Approx(2.0));

  const Problem p2 = builtin_problem("P2");
  CHECK(p2.boundary.value(0.1, {0.0, 0.0}) == doctest::Approx(1.0 + std::sin(0.5)));
  CHECK(p2.boundary.rate(0.1, {1.0, 0.0}) == doctest::Approx(5.0 * std::cos(0.5)));

  const Problem p3 = builtin_problem("P3");
  CHECK(p3.boundary.value(0.0, {0.0, 0.0}) == 0.5);
  CHECK(p3.boundary.value(0.0, {1.0, 0.0}) == doctest::Approx(1.0));
  CHECK(p3.boundary.value(0.025, {1.0, 0.0}) == doctest::Approx(2.0));
  // linear u0 extrapolates exactly onto b(0)
  CHECK(compatibility_residual(p3) < 1e-12);
  CHECK(compatibility_residual(p1) < 1e-4);

  const Problem p4 = builtin_problem("P4", 49);
  CHECK(p4.grid().dim() == 2);
  CHECK(p4.grid().n() == 49);
  CHECK(p4.u0[24 * 49 + 24] == doctest::Approx(2.0));
  CHECK(builtin_problem("P5").grid().n() == 99);

  CHECK_THROWS_AS(builtin_problem("P6"), std::invalid_argument);
  CHECK(builtin_problem_ids().size() == 5);
}

TEST_CASE("crossed Gaussian initial value at hand-evaluated points") {
  // (0.5, 0.5): all three exponents vanish, 0.5 + 2 (1 + 1 - 1)
  CHECK(crossed_gaussians({0.5, 0.5}) == doctest::Approx(2.5).epsilon(1e-14));
  // (0.5, 0): exponents -40 (0.1)^2, -35 (0.5)^2, -35 (0.25)
  CHECK(crossed_gaussians({0.5, 0.0}) ==
        doctest::Approx(0.5 + 2.0 * std::exp(-0.4)).epsilon(1e-14));
  // (0, 0): exponents -40 (0.6)^2, -35 (0.5)^2, -35 (0.5)
  CHECK(crossed_gaussians({0.0, 0.0}) ==
        doctest::Approx(0.5 + 2.0 * (std::exp(-14.4) + std::exp(-8.75) - std::exp(-17.5)))
            .epsilon(1e-14));
  CHECK(crossed_gaussians({0.0, 0.0}) == doctest::Approx(0.500317987210987).epsilon(1e-13));
}

TEST_CASE("advance reports the failing step") {
  const Grid g(1, 15);
  const Problem p{"blow", "u' = u^2", DirichletLaplacian(g), ReactionTerm::quadratic(),
                  BoundaryData::constant(1, 20.0), Field(g, 20.0), 0.1};
  SchemeConfig cfg = scheme("lie");
  cfg.reaction_exact_flow = true;
  try {
    integrate(cfg, p, 4);
    FAIL("expected FlowError");
  } catch (const FlowError& e) {
    // u doubles in the first reaction flow and then 0.025 * u crosses 1
    REQUIRE(e.step().has_value());
    CHECK(*e.step() >= 1);
    CHECK(*e.step() < 4);
    CHECK(std::string(e.what()).find("in step") != std::string::npos);
  }
  CHECK_THROWS(integrate(cfg, p, 0));
}

TEST_CASE("schemes converge with their nominal order on compatible data") {
  // b = 0 and f = u^2: classical and modified coincide and the splitting error
  // is smooth, so Lie is first and Strang second order.
  const Problem p = homogeneous_problem(ReactionTerm::quadratic());
  for (const char* name : {"lie", "strang"}) {
    const SchemeConfig cfg = scheme(name, LinearMethod::exact_exp_euler);
    const Field ref = integrate(scheme("strang", LinearMethod::exact_exp_euler), p, 2560);
    const double e1 = max_abs_diff(integrate(cfg, p, 40), ref);
    const double e2 = max_abs_diff(integrate(cfg, p, 80), ref);
    const double expected = std::string(name) == "lie" ? 1.0 : 2.0;
    CHECK(std::log2(e1 / e2) == doctest::Approx(expected).epsilon(0.05));
  }
}

TEST_CASE("reversed ordering") {
  const Problem p = builtin_problem("P1", 63);
  const Lifting lifting = make_lifting(p);
  for (const char* name : kSchemes) {
    SchemeConfig fwd = scheme(name);
    SchemeConfig rev = fwd;
    rev.reversed = true;
    const Field a = step(fwd, p, lifting, p.u0, 0.0, 0.01);
    const Field b = step(rev, p, lifting, p.u0, 0.0, 0.01);
    CHECK(max_abs_diff(a, b) > 0.0);
    CHECK(max_abs_diff(a, b) < 1e-2);
  }
  CHECK_THROWS(step(scheme("lie"), p, lifting, p.u0, 0.0, 0.0));
}

TEST_CASE("P1 against an independent method-of-lines solution") {
  // Frozen from explicit RK4 on the semi-discrete system, 50000 steps to t = 0.1.
  const std::pair<std::size_t, double> mol[] = {
      {0, 1.0033126731039421}, {124, 1.3549725399586847}, {249, 1.4952687428758165}};
  const Problem p = builtin_problem("P1");
  const Field ref = integrate(scheme("strang-mod", LinearMethod::exact_exp_euler), p, 320);
  for (const auto& [node, value] : mol) CHECK(std::abs(ref[node] - value) <= 3e-8);

  // errors against the same solution, computed separately with closed-form flows
  auto error = [&](const char* name, int steps) {
    SchemeConfig cfg = scheme(name, LinearMethod::exact_exp_euler);
    cfg.reaction_exact_flow = true;
    return max_abs_diff(integrate(cfg, p, steps), ref);
  };
  CHECK(error("lie", 20) == doctest::Approx(1.8729e-3).epsilon(0.01));
  CHECK(error("lie-mod", 20) == doctest::Approx(8.2540e-5).epsilon(0.01));
  CHECK(error("strang-mod", 20) == doctest::Approx(6.5651e-6).epsilon(0.01));
}
