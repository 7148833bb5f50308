#include <doctest.h>

#include <cmath>

#include "splitpde/grid.hpp"

using namespace splitpde;

TEST_CASE("grid geometry") {
  const Grid g1(1, 4);
  CHECK(g1.h() == doctest::Approx(0.2));
  CHECK(g1.size() == 4);
  CHECK(g1.coords(0)[0] == doctest::Approx(0.2));
  CHECK(g1.coords(3)[0] == doctest::Approx(0.8));
  CHECK(g1.coords(3)[1] == 0.0);

  const Grid g2(2, 3);
  CHECK(g2.size() == 9);
  CHECK(g2.h() == doctest::Approx(0.25));
  // row-major: i = iy * n + ix
  const Point p = g2.coords(5);
  CHECK(p[0] == doctest::Approx(0.75));
  CHECK(p[1] == doctest::Approx(0.5));
}

TEST_CASE("grid rejects bad shapes") {
  CHECK_THROWS_AS(Grid(1, 0), GridError);
  CHECK_THROWS_AS(Grid(3, 4), GridError);
  CHECK_THROWS_AS(Grid(0, 4), GridError);
}

TEST_CASE("field arithmetic") {
  const Grid g(1, 3);
  Field a(g, std::vector<double>{1, 2, 3});
  const Field b(g, 1.0);
  CHECK((a + b) == Field(g, std::vector<double>{2, 3, 4}));
  CHECK((a - b) == Field(g, std::vector<double>{0, 1, 2}));
  CHECK((2.0 * a) == Field(g, std::vector<double>{2, 4, 6}));
  a.axpy(-1.0, b);
  CHECK(a == Field(g, std::vector<double>{0, 1, 2}));
  CHECK(a.all_finite());
  a[1] = std::nan("");
  CHECK_FALSE(a.all_finite());
}

TEST_CASE("field checks grids and lengths") {
  const Grid g(1, 3);
  Field a(g);
  CHECK_THROWS_AS(a += Field(Grid(1, 4)), GridError);
  CHECK_THROWS_AS(a -= Field(Grid(2, 3)), GridError);
  CHECK_THROWS_AS(Field(g, std::vector<double>{1, 2}), GridError);
  CHECK_THROWS_AS(max_abs_diff(a, Field(Grid(1, 4))), GridError);
}

TEST_CASE("discrete norms") {
  // Constant one: inf = 1, one = h^d N, two = sqrt(h^d N).
  for (int dim : {1, 2}) {
    const Grid g(dim, 9);
    const Field ones(g, 1.0);
    const double mass = std::pow(0.1, dim) * static_cast<double>(g.size());
    CHECK(norm(ones, NormKind::inf) == doctest::Approx(1.0));
    CHECK(norm(ones, NormKind::one) == doctest::Approx(mass));
    CHECK(norm(ones, NormKind::two) == doctest::Approx(std::sqrt(mass)));
  }
  const Grid g(1, 4);
  const Field v(g, std::vector<double>{-3, 1, 0, 2});
  CHECK(norm(v, NormKind::inf) == 3.0);
  CHECK(norm(v, NormKind::one) == doctest::Approx(0.2 * 6));
  CHECK(norm(v, NormKind::two) == doctest::Approx(std::sqrt(0.2 * 14)));
}

TEST_CASE("eval_on_grid and max_abs_diff") {
  const Grid g(2, 4);
  const Field f = eval_on_grid([](const Point& p) { return p[0] + 10 * p[1]; }, g);
  CHECK(f[0] == doctest::Approx(0.2 + 2.0));
  CHECK(f[g.size() - 1] == doctest::Approx(0.8 + 8.0));
  Field h = f;
  h[7] += 0.5;
  CHECK(max_abs_diff(f, h) == doctest::Approx(0.5));
}

TEST_CASE("norm names") {
  CHECK(parse_norm_kind("inf") == NormKind::inf);
  CHECK(parse_norm_kind("linf") == NormKind::inf);
  CHECK(parse_norm_kind("l1") == NormKind::one);
  CHECK(parse_norm_kind("two") == NormKind::two);
  CHECK(std::string(to_string(NormKind::one)) == "one");
  CHECK_THROWS(parse_norm_kind("l3"));
}
