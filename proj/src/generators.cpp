#include "packkit/generators.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace packkit {

Instance gen_uniform(int n, std::uint64_t seed, double w_lo, double w_hi, double h_lo,
                     double h_hi) {
  if (n < 0) throw std::invalid_argument("gen_uniform: n must be >= 0");
  auto check_range = [](double lo, double hi, const char* which) {
    if (!(lo < hi) || lo < 0.0 || hi > 1.0) {
      throw std::invalid_argument(std::string("gen_uniform: empty or out-of-range ") + which +
                                  " range");
    }
  };
  check_range(w_lo, w_hi, "width");
  check_range(h_lo, h_hi, "height");

  SplitMix64 rng(seed);
  Instance inst;
  std::ostringstream name;
  name << "uniform-n" << n << "-s" << seed;
  inst.name = name.str();
  inst.rects.reserve(n);
  for (int i = 0; i < n; ++i) {
    double w = rng.uniform_open_closed(w_lo, w_hi);
    double h = rng.uniform_open_closed(h_lo, h_hi);
    inst.rects.push_back({i, w, h});
  }
  return inst;
}

namespace {

struct Piece {
  double x0, y0, x1, y1;
  double w() const { return x1 - x0; }
  double h() const { return y1 - y0; }
  double area() const { return w() * h(); }
};

}  // namespace

Instance gen_tiling(int n, double strip_height, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("gen_tiling: n must be >= 1");
  if (!(strip_height > 0.0)) throw std::invalid_argument("gen_tiling: height must be positive");
  if (static_cast<double>(n) < std::ceil(strip_height - kTol)) {
    throw std::invalid_argument(
        "gen_tiling: unit-height caps need at least ceil(H) pieces, got n < ceil(H)");
  }

  SplitMix64 rng(seed);
  std::vector<Piece> pieces{{0.0, 0.0, 1.0, strip_height}};
  double height_sum = strip_height;  // running sum of piece heights
  const double budget = kTilingHeightBudget * strip_height;

  while (static_cast<int>(pieces.size()) < n) {
    // Tall pieces first (they must be cut horizontally), then the largest.
    int pick = -1;
    for (int i = 0; i < static_cast<int>(pieces.size()); ++i) {
      if (pieces[i].h() > 1.0) {
        pick = i;
        break;
      }
    }
    if (pick < 0) {
      double best = -1.0;
      for (int i = 0; i < static_cast<int>(pieces.size()); ++i) {
        if (pieces[i].area() > best) {
          best = pieces[i].area();
          pick = i;
        }
      }
    }
    Piece p = pieces[pick];

    if (p.h() > 1.0) {
      // Horizontal cut that keeps the piece budget intact: chop exactly 1
      // from tall pieces, or land both children in (0,1] when h <= 2.
      double h1 = p.h() > 2.0 ? 1.0 : (p.h() - 1.0) + rng.next_unit() * (2.0 - p.h());
      double cy = p.y0 + h1;
      pieces[pick] = {p.x0, p.y0, p.x1, cy};
      pieces.push_back({p.x0, cy, p.x1, p.y1});
      continue;
    }

    // Vertical cuts spend the height-sum budget (each one duplicates the
    // piece height); once it is gone everything splits horizontally.
    bool vertical_ok = p.w() >= 0.05 && height_sum + p.h() <= budget;
    bool vertical = vertical_ok && (rng.next() & 1u);
    double frac = 0.25 + 0.5 * rng.next_unit();
    if (vertical) {
      double cx = p.x0 + frac * p.w();
      pieces[pick] = {p.x0, p.y0, cx, p.y1};
      pieces.push_back({cx, p.y0, p.x1, p.y1});
      height_sum += p.h();
    } else {
      double cy = p.y0 + frac * p.h();
      pieces[pick] = {p.x0, p.y0, p.x1, cy};
      pieces.push_back({p.x0, cy, p.x1, p.y1});
    }
  }

  rng.shuffle(pieces);
  Instance inst;
  std::ostringstream name;
  name << "tiling-n" << n << "-H" << strip_height << "-s" << seed;
  inst.name = name.str();
  inst.known_opt = strip_height;
  inst.rects.reserve(n);
  for (int i = 0; i < n; ++i) {
    inst.rects.push_back({i, pieces[i].w(), pieces[i].h()});
  }
  return inst;
}

Instance gen_equal_height(const std::vector<double>& widths, double height,
                          const std::string& name) {
  Instance inst;
  inst.name = name;
  inst.rects.reserve(widths.size());
  for (std::size_t i = 0; i < widths.size(); ++i) {
    inst.rects.push_back({static_cast<int>(i), widths[i], height});
  }
  return inst;
}

}  // namespace packkit
