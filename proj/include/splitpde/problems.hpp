#pragma once

#include <optional>
#include <string>
#include <vector>

#include "splitpde/splitting.hpp"

namespace splitpde {

/// Catalog of the built-in experiments, all with f(u) = u^2 and T = 0.1:
///   P1  1D, u0 = 1 + sin^2(pi x), b = 1
///   P2  1D, u0 = 1 + sin^2(pi x), b(t) = 1 + sin(5t) at both ends
///   P3  1D, u0 = 0.5 + 0.5 x, b = 0.5 at x = 0 and 1 + sin(20 pi t) at x = 1
///   P4  2D, u0 = 1 + sin^2(pi x) sin^2(pi y), b = 1
///   P5  2D, sum of Gaussian ridges, b = u0 on the boundary
/// 1D problems default to 499 interior nodes (h = 1/500), 2D to 99 per axis.
std::vector<std::string> builtin_problem_ids();

Problem builtin_problem(const std::string& id, std::optional<std::size_t> n = {},
                        TransformBackend backend = TransformBackend::automatic);

/// Initial value of P5.
double crossed_gaussians(const Point& p);

}  // namespace splitpde
