#pragma once

#include <string>

#include "splitpde/splitting.hpp"

namespace splitpde {

/// Reads a problem from `key = value` lines. `#` starts a comment.
///
///   dim            1 or 2 (required)
///   n              interior nodes per axis (default 499 in 1D, 99 in 2D)
///   t_final        default 0.1
///   reaction       quadratic | linear(c) | zero | logistic(r)      (default quadratic)
///   initial        constant(c) | affine(a, bx[, by]) | sine_squared(a, b)
///                  | crossed_gaussians                              (required)
///   boundary       constant(c) | sine(a, b, omega) | from_initial   (default from_initial)
///   boundary_left, boundary_right
///                  1D only, constant(c) or sine(a, b, omega); override `boundary`
///
/// affine(a, bx, by) = a + bx x + by y
/// sine_squared(a, b) = a + b sin^2(pi x) [sin^2(pi y) in 2D]
/// sine(a, b, omega) = a + b sin(omega t)
/// from_initial restricts the initial value to the boundary (time-independent).
///
/// Throws std::invalid_argument with the offending line on any error.
Problem parse_problem_config(const std::string& text, const std::string& id = "custom",
                             TransformBackend backend = TransformBackend::automatic);

Problem load_problem_config(const std::string& path,
                            TransformBackend backend = TransformBackend::automatic);

}  // namespace splitpde
