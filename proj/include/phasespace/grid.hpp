#pragma once

#include <cstddef>
#include <optional>
#include <vector>

namespace phasespace {

/// Uniform axis with n samples at min + k*spacing, k = 0..n-1; the upper
/// bound itself is excluded. n is a power of two and at least 8.
class UniformGrid {
 public:
  UniformGrid(std::size_t n, double min, double max);

  /// Grid on [-half_span, half_span).
  static UniformGrid centered(std::size_t n, double half_span);

  std::size_t size() const { return n_; }
  double min() const { return min_; }
  double max() const { return max_; }
  double spacing() const { return spacing_; }
  double span() const { return max_ - min_; }
  double operator[](std::size_t k) const { return min_ + static_cast<double>(k) * spacing_; }
  std::vector<double> points() const;

  /// Index of this grid's first sample inside `parent`, if every sample of
  /// this grid coincides with a sample of `parent`.
  std::optional<std::size_t> offset_in(const UniformGrid& parent) const;

  /// Same n, same span, refined spacing: n*factor samples.
  UniformGrid refined(std::size_t factor) const;

  friend bool operator==(const UniformGrid&, const UniformGrid&) = default;

 private:
  std::size_t n_;
  double min_;
  double max_;
  double spacing_;
};

/// The FFT-dual axis of `grid` under the kernel exp(-i k x / scale):
/// spacing 2*pi*scale/(n*dx), centered on zero.
UniformGrid dual_grid(const UniformGrid& grid, double scale);

}  // namespace phasespace
