#pragma once

#include <memory>
#include <span>
#include <vector>

#include "splitpde/grid.hpp"

namespace splitpde {

enum class TransformBackend {
  automatic,  ///< fast path when n+1 factors into small primes, direct otherwise
  fast,       ///< FFTW RODFT00
  direct,     ///< O(n^2) sine sums per axis
};

/// Type-I discrete sine transform over the interior nodes of a grid.
///
/// apply() computes Y_k = 2 sum_j x_j sin(pi (j+1)(k+1) / (n+1)) along every
/// axis (the FFTW RODFT00 convention). The transform is its own inverse up to
/// the factor (2(n+1))^dim, which inverse() divides out.
///
/// Instances are immutable; apply() and inverse() only touch the caller's
/// buffers and a per-call scratch copy, so concurrent calls are safe.
class SineTransform {
 public:
  explicit SineTransform(const Grid& grid,
                         TransformBackend backend = TransformBackend::automatic);

  const Grid& grid() const { return grid_; }
  bool uses_fast_path() const { return plan_ != nullptr; }

  void apply(std::span<const double> in, std::span<double> out) const;
  void inverse(std::span<const double> in, std::span<double> out) const;

  /// True when n+1 has no prime factor above 7.
  static bool is_convenient_size(std::size_t n);

 private:
  void apply_direct(std::span<const double> in, std::span<double> out) const;

  Grid grid_;
  std::shared_ptr<void> plan_;
  // sin(pi m / (n+1)) for m = 0 .. 2n+1
  std::vector<double> sine_table_;
};

}  // namespace splitpde
