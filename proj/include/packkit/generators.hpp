#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "packkit/core.hpp"

namespace packkit {

// SplitMix64. Chosen over std::mt19937 + <random> distributions because the
// whole pipeline (state update, double conversion, range mapping, shuffling)
// is pinned here, so instances reproduce bit-exactly across compilers and
// can be regenerated from another language.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  // Uniform in [0,1), 53 random bits.
  double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  // Uniform in (lo, hi]: hi - u * (hi - lo) with u in [0,1).
  double uniform_open_closed(double lo, double hi) {
    return hi - next_unit() * (hi - lo);
  }

  // Uniform in [lo, hi).
  double uniform_half_open(double lo, double hi) {
    return lo + next_unit() * (hi - lo);
  }

  std::uint64_t below(std::uint64_t n) { return next() % n; }

  template <typename T>
  void shuffle(std::vector<T>& xs) {
    for (std::size_t i = xs.size(); i > 1; --i) {
      std::size_t j = static_cast<std::size_t>(below(i));
      std::swap(xs[i - 1], xs[j]);
    }
  }

 private:
  std::uint64_t state_;
};

// n rects with w in (w_lo, w_hi] and h in (h_lo, h_hi], drawn independently
// (width first), deterministic per seed. Ranges must satisfy
// 0 <= lo < hi <= 1.
Instance gen_uniform(int n, std::uint64_t seed, double w_lo = 0.0, double w_hi = 1.0,
                     double h_lo = 0.0, double h_hi = 1.0);

// Guillotine-splits the 1 x H strip into exactly n rects and shuffles their
// order; total area is H by construction, so known_opt = H is exact. Pieces
// taller than 1 are always split horizontally first. Vertical cuts are
// rationed by a running height-sum budget of kTilingHeightBudget * H, which
// keeps the instances stackable into few slips of moderate height.
// Throws when n < ceil(H) (unit-height caps make fewer pieces impossible).
inline constexpr double kTilingHeightBudget = 1.15;
Instance gen_tiling(int n, double strip_height, std::uint64_t seed);

// Wraps a 1-D size list as rects of one fixed height, arrival order = list
// order.
Instance gen_equal_height(const std::vector<double>& widths, double height,
                          const std::string& name = "equal-height");

}  // namespace packkit
