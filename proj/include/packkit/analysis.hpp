#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "packkit/super_harmonic.hpp"

namespace packkit {

// Element of the (2K+1)-dimensional weighting space with basis
// b_0, b_1..b_K, r_1..r_K. Coordinates are stored as
// v[0] = b_0, v[j] = b_j, v[K+j] = r_j.
struct WeightVector {
  std::vector<double> v;

  WeightVector() : v(1, 0.0) {}
  explicit WeightVector(int K) : v(2 * K + 1, 0.0) {}
  int K() const { return (static_cast<int>(v.size()) - 1) / 2; }
  double b(int j) const { return v[j]; }
  double r(int j) const { return v[K() + j]; }
  double& b(int j) { return v[j]; }
  double& r(int j) { return v[K() + j]; }

  WeightVector& operator+=(const WeightVector& o);
  WeightVector operator+(const WeightVector& o) const;
  WeightVector operator*(double s) const;
  double max_abs_diff(const WeightVector& o) const;
};

// Weight of a 1-D size: type-i items (i <= k) weigh
// (1-alpha_i)/beta_i on b_{phi(i)} plus alpha_i/gamma_i on r_{varphi(i)};
// sizes of type k+1 weigh x/(1-eps) on b_0.
WeightVector weight_of(double x, const SuperHarmonicParams& params);

// Weight of a rect (w,h): h * weight_of(w). Linear in h, so cutting a rect
// into horizontal layers preserves the total weight exactly.
WeightVector weight_of_rect(double w, double h, const SuperHarmonicParams& params);

// Consolidation: x.b_0 + max over j=1..K+1 of
// min( sum_{i>=j} x.r_i + sum_i x.b_i , sum_i x.r_i + sum_{i<j} x.b_i ).
double consolidate(const WeightVector& x);

// Contents descriptor of a feasible bin: q[i-1] type-i items, constrained by
// sum q_i * t_{i+1} < 1.
struct Pattern {
  std::vector<int> q;
  bool operator==(const Pattern& o) const { return q == o.q; }
  std::string to_string() const;
};

inline constexpr std::uint64_t kDefaultPatternCap = 10'000'000;

struct PatternCapExceeded : std::runtime_error {
  std::uint64_t cap;
  explicit PatternCapExceeded(std::uint64_t cap_);
};

// All patterns of the parameter set, depth-first with types in decreasing
// size order. With maximal_only, keeps only patterns that cannot take one
// more item of any type (equivalently: residual <= eps). Throws
// PatternCapExceeded once the count passes `cap`.
std::vector<Pattern> enumerate_patterns(const SuperHarmonicParams& params,
                                        std::uint64_t cap = kDefaultPatternCap,
                                        bool maximal_only = false);

// w(residual) + sum q_i * w(t_i), where residual = 1 - sum q_i * t_{i+1} is
// weighed as an ordinary size of its own type (zero vector when it is 0).
WeightVector pattern_weight(const Pattern& q, const SuperHarmonicParams& params);

struct RatioBound {
  double value = 0.0;
  int branch = 1;                    // consolidation branch j attaining the max
  Pattern support_a;                 // argmax pattern
  std::optional<Pattern> support_b;  // second pattern of a balanced pair
  double mix = 1.0;                  // distribution weight on support_a
  std::uint64_t pattern_count = 0;
};

// Exact maximum of consolidate(sum_q chi(q) * pattern_weight(q)) over all
// distributions chi on the pattern set.
//
// Why a two-pattern search is exact: fix a branch j of the consolidation
// max. Over the simplex of distributions the branch objective is
// (linear) + min(two linear functionals), a concave piecewise-linear
// function with two pieces. Its maximum over a polytope is attained either
// at a vertex (a single pattern) or on the hyperplane where the two linear
// pieces are equal, intersected with an edge (a balanced mix of two
// patterns). So scanning single patterns plus balanced pairs per branch is
// an exact replacement for a general LP. The pair scan is evaluated through
// the upper concave envelope of the per-pattern points, which yields the
// same optimum as enumerating all crossing pairs.
RatioBound ratio_upper_bound(const SuperHarmonicParams& params,
                             std::uint64_t cap = kDefaultPatternCap,
                             bool maximal_only = false);

}  // namespace packkit
