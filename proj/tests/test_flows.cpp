#include <doctest.h>

#include <cmath>
#include <numbers>

#include "splitpde/flows.hpp"

using namespace splitpde;

namespace {

Field sine_bump(const Grid& g) {
  return eval_on_grid([](const Point& p) { return std::sin(std::numbers::pi * p[0]); }, g);
}

}  // namespace

TEST_CASE("reaction flow: RK4 converges with order four") {
  // w' = w^2, w(0) = 0.5, exact w(tau) = 0.5 / (1 - 0.5 tau)
  const Grid g(1, 1);
  const Field w0(g, 0.5);
  const double tau = 0.8;
  const double exact = 0.5 / (1.0 - 0.5 * tau);
  std::vector<double> errors, steps;
  for (int k : {4, 8, 16, 32}) {
    const Field w = reaction_flow_classical(ReactionTerm::quadratic(), w0, tau, k);
    errors.push_back(std::abs(w[0] - exact));
    steps.push_back(tau / k);
  }
  for (std::size_t i = 1; i < errors.size(); ++i) {
    const double order = std::log(errors[i - 1] / errors[i]) / std::log(steps[i - 1] / steps[i]);
    CHECK(order == doctest::Approx(4.0).epsilon(0.1 / 4.0));
  }
}

TEST_CASE("reaction flow: closed form") {
  const Grid g(1, 3);
  const Field w0(g, std::vector<double>{-1.0, 0.0, 2.0});
  const Field w = reaction_flow_classical(ReactionTerm::quadratic(), w0, 0.25, 1, true);
  CHECK(w[0] == doctest::Approx(-1.0 / 1.25));
  CHECK(w[1] == 0.0);
  CHECK(w[2] == doctest::Approx(4.0));
  const Field rk = reaction_flow_classical(ReactionTerm::quadratic(), w0, 0.25, 200);
  CHECK(max_abs_diff(w, rk) < 1e-9);
}

TEST_CASE("reaction flow: blow-up is reported with the node") {
  const Grid g(1, 4);
  Field w0(g, 0.0);
  w0[2] = 20.0;
  try {
    reaction_flow_classical(ReactionTerm::quadratic(), w0, 0.1, 1, true);
    FAIL("expected FlowError");
  } catch (const FlowError& e) {
    CHECK(e.node() == 2);
    CHECK_FALSE(e.step().has_value());
    CHECK(e.at_step(7).step() == std::optional<std::size_t>(7));
    CHECK(std::string(e.at_step(7).what()).find("step 7") != std::string::npos);
  }
  w0[2] = 1e80;
  CHECK_THROWS_AS(reaction_flow_classical(ReactionTerm::quadratic(), w0, 1.0, 4), FlowError);
  ReactionTerm no_closed_form = ReactionTerm::logistic(1.0);
  no_closed_form.exact_flow = nullptr;
  CHECK_THROWS_AS(reaction_flow_classical(no_closed_form, w0, 0.1, 1, true), ConfigError);
  CHECK_THROWS(reaction_flow_classical(ReactionTerm::zero(), w0, 0.0, 1));
  CHECK_THROWS(reaction_flow_classical(ReactionTerm::zero(), w0, 0.1, 0));
}

TEST_CASE("modified reaction flow keeps zero and matches a substepped run") {
  const Grid g(1, 31);
  auto b = [](double t) { return 1.0 + std::sin(5 * t); };
  const Lifting lifting(DirichletLaplacian(g), BoundaryData::ends(b, b));
  const Field zero(g);
  CHECK(reaction_flow_modified(ReactionTerm::quadratic(), lifting, zero, 0.0, 0.1, 10) == zero);
  const Field w0 = sine_bump(g);
  const Field coarse = reaction_flow_modified(ReactionTerm::quadratic(), lifting, w0, 0.0, 0.05, 5);
  const Field fine = reaction_flow_modified(ReactionTerm::quadratic(), lifting, w0, 0.0, 0.05, 200);
  CHECK(max_abs_diff(coarse, fine) < 1e-7);
}

TEST_CASE("linear flows reduce to the heat semigroup") {
  const Grid g(1, 63);
  const DirichletLaplacian op(g);
  const Lifting homogeneous(op, BoundaryData::constant(1, 0.0));
  const Field v = sine_bump(g);
  const Field exact = op.propagate(v, 0.02);
  for (LinearMethod m : {LinearMethod::exact_exp_euler, LinearMethod::exponential_midpoint}) {
    const LinearFlowConfig cfg{m};
    CHECK(max_abs_diff(linear_flow_modified(cfg, homogeneous, ReactionTerm::quadratic(), v, 0, 0.02),
                       exact) < 1e-13);
    CHECK(max_abs_diff(linear_flow_classical(cfg, homogeneous, v, 0, 0.02), exact) < 1e-13);
  }
  const LinearFlowConfig cn{LinearMethod::crank_nicolson, 100};
  CHECK(max_abs_diff(linear_flow_classical(cn, homogeneous, v, 0, 0.02), exact) < 1e-6);
}

TEST_CASE("classical linear flow keeps a constant state equal to constant data") {
  for (int dim : {1, 2}) {
    const Grid g(dim, 31);
    const Lifting lifting(DirichletLaplacian(g), BoundaryData::constant(dim, 1.5));
    for (LinearMethod m : {LinearMethod::exact_exp_euler, LinearMethod::exponential_midpoint,
                           LinearMethod::crank_nicolson}) {
      const Field v = linear_flow_classical(LinearFlowConfig{m}, lifting, Field(g, 1.5), 0, 0.05);
      CHECK(max_abs_diff(v, Field(g, 1.5)) < 1e-12);
    }
  }
}

TEST_CASE("modified linear flow with constant data solves v' = Lv + f(z)") {
  // steady state of v' = L v + f(z) is -L^{-1} f(z)
  const Grid g(1, 63);
  const DirichletLaplacian op(g);
  const Lifting lifting(op, BoundaryData::constant(1, 2.0));
  const Field steady = -1.0 * op.solve(Field(g, 4.0));
  const LinearFlowConfig cfg{LinearMethod::exact_exp_euler};
  const Field v = linear_flow_modified(cfg, lifting, ReactionTerm::quadratic(), steady, 0, 0.3);
  CHECK(max_abs_diff(v, steady) < 1e-12);
}

TEST_CASE("exact exponential Euler refuses time-dependent data") {
  const Grid g(1, 15);
  const Lifting lifting(DirichletLaplacian(g),
                        BoundaryData::ends([](double t) { return t; }, [](double) { return 0.0; }));
  const LinearFlowConfig cfg{LinearMethod::exact_exp_euler};
  CHECK_THROWS_AS(linear_flow_classical(cfg, lifting, Field(g), 0, 0.1), ConfigError);
  CHECK_NOTHROW(linear_flow_classical(LinearFlowConfig{}, lifting, Field(g), 0, 0.1));
}

TEST_CASE("time-dependent linear flow: midpoint and CN agree with a fine reference") {
  const Grid g(1, 63);
  auto b = [](double t) { return 1.0 + std::sin(5.0 * t); };
  auto db = [](double t) { return 5.0 * std::cos(5.0 * t); };
  const Lifting lifting(DirichletLaplacian(g), BoundaryData::ends(b, b, db, db));
  const Field v0 = Field(g, 1.0) + sine_bump(g);
  const double tau = 0.01;
  const LinearFlowConfig fine{LinearMethod::crank_nicolson, 2000};
  const Field ref = linear_flow_classical(fine, lifting, v0, 0.0, tau);
  const Field mid = linear_flow_classical(LinearFlowConfig{}, lifting, v0, 0.0, tau);
  // midpoint source error is O(tau^3 |d^2z/dt^2|)
  const double err = max_abs_diff(mid, ref);
  CHECK(err < 1e-5);
  const Field ref_half = linear_flow_classical(fine, lifting, v0, 0.0, tau / 2);
  const Field mid_half = linear_flow_classical(LinearFlowConfig{}, lifting, v0, 0.0, tau / 2);
  CHECK(std::log2(err / max_abs_diff(mid_half, ref_half)) > 2.5);
}

TEST_CASE("linear method names") {
  CHECK(parse_linear_method("exp") == LinearMethod::exact_exp_euler);
  CHECK(parse_linear_method("midpoint") == LinearMethod::exponential_midpoint);
  CHECK(parse_linear_method("cn") == LinearMethod::crank_nicolson);
  CHECK(std::string(to_string(LinearMethod::crank_nicolson)) == "cn");
  CHECK_THROWS_AS(parse_linear_method("rk"), ConfigError);
}
