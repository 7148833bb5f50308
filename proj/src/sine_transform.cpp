#include "splitpde/sine_transform.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <mutex>
#include <numbers>

namespace splitpde {
namespace {

// The FFTW planner is not reentrant; execution of an existing plan is.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

std::shared_ptr<void> make_plan(const Grid& grid) {
  const int n = static_cast<int>(grid.n());
  std::vector<double> scratch(grid.size(), 0.0);
  std::lock_guard lock(planner_mutex());
  fftw_plan plan = nullptr;
  const unsigned flags = FFTW_ESTIMATE | FFTW_UNALIGNED;
  if (grid.dim() == 1) {
    plan = fftw_plan_r2r_1d(n, scratch.data(), scratch.data(), FFTW_RODFT00, flags);
  } else {
    plan = fftw_plan_r2r_2d(n, n, scratch.data(), scratch.data(), FFTW_RODFT00,
                            FFTW_RODFT00, flags);
  }
  if (plan == nullptr) return nullptr;
  return std::shared_ptr<void>(plan, [](void* p) {
    std::lock_guard guard(planner_mutex());
    fftw_destroy_plan(static_cast<fftw_plan>(p));
  });
}

}  // namespace

bool SineTransform::is_convenient_size(std::size_t n) {
  std::size_t m = n + 1;
  for (std::size_t p : {2u, 3u, 5u, 7u}) {
    while (m % p == 0) m /= p;
  }
  return m == 1;
}

SineTransform::SineTransform(const Grid& grid, TransformBackend backend)
    : grid_(grid) {
  const bool want_fast =
      backend == TransformBackend::fast ||
      (backend == TransformBackend::automatic && is_convenient_size(grid.n()));
  if (want_fast) plan_ = make_plan(grid);

  const std::size_t period = 2 * (grid.n() + 1);
  sine_table_.resize(period);
  const double base = std::numbers::pi / static_cast<double>(grid.n() + 1);
  for (std::size_t m = 0; m < period; ++m) {
    sine_table_[m] = std::sin(base * static_cast<double>(m));
  }
  // exact zeros at m = 0 and m = n+1
  sine_table_[0] = 0.0;
  sine_table_[grid.n() + 1] = 0.0;
}

void SineTransform::apply(std::span<const double> in, std::span<double> out) const {
  if (in.size() != grid_.size() || out.size() != grid_.size()) {
    throw GridError("sine transform buffer does not match grid");
  }
  if (plan_) {
    if (in.data() != out.data()) std::copy(in.begin(), in.end(), out.begin());
    fftw_execute_r2r(static_cast<fftw_plan>(plan_.get()), out.data(), out.data());
    return;
  }
  apply_direct(in, out);
}

void SineTransform::inverse(std::span<const double> in, std::span<double> out) const {
  apply(in, out);
  const double scale = 1.0 / std::pow(2.0 * static_cast<double>(grid_.n() + 1),
                                      grid_.dim());
  for (double& v : out) v *= scale;
}

void SineTransform::apply_direct(std::span<const double> in,
                                 std::span<double> out) const {
  const std::size_t n = grid_.n();
  const std::size_t period = sine_table_.size();
  auto transform_line = [&](const double* src, std::size_t src_stride, double* dst,
                            std::size_t dst_stride) {
    for (std::size_t k = 0; k < n; ++k) {
      double sum = 0.0;
      for (std::size_t j = 0; j < n; ++j) {
        sum += src[j * src_stride] * sine_table_[((j + 1) * (k + 1)) % period];
      }
      dst[k * dst_stride] = 2.0 * sum;
    }
  };

  if (grid_.dim() == 1) {
    std::vector<double> tmp(in.begin(), in.end());
    transform_line(tmp.data(), 1, out.data(), 1);
    return;
  }
  // rows (x direction), then columns (y direction)
  std::vector<double> rows(grid_.size());
  for (std::size_t iy = 0; iy < n; ++iy) {
    transform_line(in.data() + iy * n, 1, rows.data() + iy * n, 1);
  }
  for (std::size_t ix = 0; ix < n; ++ix) {
    transform_line(rows.data() + ix, n, out.data() + ix, n);
  }
}

}  // namespace splitpde
