#include "packkit/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "packkit/core.hpp"

namespace packkit {

WeightVector& WeightVector::operator+=(const WeightVector& o) {
  if (v.size() != o.v.size()) throw std::invalid_argument("weight vectors of different dimension");
  for (std::size_t i = 0; i < v.size(); ++i) v[i] += o.v[i];
  return *this;
}

WeightVector WeightVector::operator+(const WeightVector& o) const {
  WeightVector out = *this;
  out += o;
  return out;
}

WeightVector WeightVector::operator*(double s) const {
  WeightVector out = *this;
  for (double& x : out.v) x *= s;
  return out;
}

double WeightVector::max_abs_diff(const WeightVector& o) const {
  if (v.size() != o.v.size()) throw std::invalid_argument("weight vectors of different dimension");
  double m = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) m = std::max(m, std::abs(v[i] - o.v[i]));
  return m;
}

WeightVector weight_of(double x, const SuperHarmonicParams& params) {
  int type = params.type_of(x);
  WeightVector w(params.K());
  if (type == params.k + 1) {
    w.b(0) = x / (1.0 - params.eps());
    return w;
  }
  int i = type - 1;
  double a = params.alpha[i];
  w.b(params.phi[i]) += (1.0 - a) / params.beta[i];
  if (a > 0.0) {
    if (params.gamma[i] == 0) {
      throw std::invalid_argument("weight_of: alpha > 0 with gamma = 0 for type " +
                                  std::to_string(type));
    }
    w.r(params.varphi[i]) += a / params.gamma[i];
  }
  return w;
}

WeightVector weight_of_rect(double w, double h, const SuperHarmonicParams& params) {
  if (h == 0.0) return WeightVector(params.K());
  return weight_of(w, params) * h;
}

double consolidate(const WeightVector& x) {
  const int K = x.K();
  double sum_b = 0.0, sum_r = 0.0;
  for (int i = 1; i <= K; ++i) {
    sum_b += x.b(i);
    sum_r += x.r(i);
  }
  double best = 0.0;  // j = K+1 gives min(sum_b, sum_r + sum_b) handled in loop
  bool first = true;
  double tail_r = sum_r;   // sum_{i=j}^K r_i
  double head_b = 0.0;     // sum_{i=1}^{j-1} b_i
  for (int j = 1; j <= K + 1; ++j) {
    double branch = std::min(tail_r + sum_b, sum_r + head_b);
    if (first || branch > best) {
      best = branch;
      first = false;
    }
    if (j <= K) {
      tail_r -= x.r(j);
      head_b += x.b(j);
    }
  }
  return x.b(0) + best;
}

std::string Pattern::to_string() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < q.size(); ++i) os << (i ? "," : "") << q[i];
  os << ")";
  return os.str();
}

PatternCapExceeded::PatternCapExceeded(std::uint64_t cap_)
    : std::runtime_error("pattern set exceeds the cap of " + std::to_string(cap_) +
                         " (|Q| >= " + std::to_string(cap_) + "); raise the cap to proceed"),
      cap(cap_) {}

namespace {

// The feasibility comparison sum q_i t_{i+1} < 1 is evaluated with the
// library tolerance so that combinations which are exactly full in rational
// arithmetic (three thirds, thirteen thirteenths) stay infeasible despite
// representation dust. Sums always accumulate in type order, term by term,
// so enumeration and pattern_weight see identical doubles.
bool pattern_fits(double sum) { return sum < 1.0 - kTol; }

// Residuals that rational arithmetic would put exactly on an interval
// boundary can come out a few ulp above it (1 - (1/2 + 1/3) lands just over
// 1/6). Snap such residuals onto the boundary so they classify as the exact
// value would.
double snap_residual(double residual, const SuperHarmonicParams& params) {
  for (double boundary : params.t) {
    if (residual > boundary && residual <= boundary + kTol) return boundary;
  }
  return residual;
}

void enumerate_rec(const SuperHarmonicParams& params, int type, double used, Pattern& q,
                   std::uint64_t cap, bool maximal_only, std::vector<Pattern>& out,
                   std::uint64_t& count) {
  if (type > params.k) {
    if (!maximal_only || 1.0 - used <= params.eps() + kTol) {
      if (++count > cap) throw PatternCapExceeded(cap);
      out.push_back(q);
    }
    return;
  }
  const double item = params.t_of(type + 1);  // rounded size of a type item
  for (int n = 0;; ++n) {
    double total = used + n * item;
    if (!pattern_fits(total)) break;
    q.q[type - 1] = n;
    enumerate_rec(params, type + 1, total, q, cap, maximal_only, out, count);
  }
  q.q[type - 1] = 0;
}

}  // namespace

std::vector<Pattern> enumerate_patterns(const SuperHarmonicParams& params, std::uint64_t cap,
                                        bool maximal_only) {
  params.validate();
  std::vector<Pattern> out;
  Pattern q;
  q.q.assign(params.k, 0);
  std::uint64_t count = 0;
  enumerate_rec(params, 1, 0.0, q, cap, maximal_only, out, count);
  return out;
}

WeightVector pattern_weight(const Pattern& q, const SuperHarmonicParams& params) {
  if (static_cast<int>(q.q.size()) != params.k) {
    throw std::invalid_argument("pattern arity does not match k");
  }
  double used = 0.0;
  WeightVector w(params.K());
  for (int i = 1; i <= params.k; ++i) {
    int n = q.q[i - 1];
    if (n < 0) throw std::invalid_argument("pattern with negative count");
    if (n == 0) continue;
    used = used + n * params.t_of(i + 1);
    w += weight_of(params.t_of(i), params) * static_cast<double>(n);
  }
  if (!pattern_fits(used)) throw std::invalid_argument("infeasible pattern: sum q_i t_{i+1} >= 1");
  double residual = snap_residual(1.0 - used, params);
  if (residual > 0.0) w += weight_of(residual, params);
  return w;
}

namespace {

// Upper concave envelope of (g, value) points evaluated at g = 0. Exactly the
// best balanced two-pattern mix; crossing pairs only exist when points lie on
// both sides of 0.
struct HullAtZero {
  double value = -std::numeric_limits<double>::infinity();
  int idx_neg = -1, idx_pos = -1;
  double mix_pos = 1.0;
};

HullAtZero hull_at_zero(const std::vector<double>& g, const std::vector<double>& val) {
  HullAtZero best;
  bool has_neg = false, has_pos = false;
  for (double x : g) {
    has_neg = has_neg || x < 0.0;
    has_pos = has_pos || x > 0.0;
  }
  if (!has_neg || !has_pos) return best;

  std::vector<int> order(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(), [&](int x, int y) {
    if (g[x] != g[y]) return g[x] < g[y];
    return val[x] > val[y];
  });

  // Andrew's monotone chain, upper hull only.
  std::vector<int> hull;
  auto cross = [&](int o, int a2, int b2) {
    return (g[a2] - g[o]) * (val[b2] - val[o]) - (val[a2] - val[o]) * (g[b2] - g[o]);
  };
  for (int i : order) {
    if (!hull.empty() && g[hull.back()] == g[i]) continue;  // keep the higher point per g
    while (hull.size() >= 2 && cross(hull[hull.size() - 2], hull.back(), i) >= 0.0) {
      hull.pop_back();
    }
    hull.push_back(i);
  }

  for (std::size_t h = 0; h + 1 < hull.size(); ++h) {
    int in = hull[h], ip = hull[h + 1];
    if (g[in] < 0.0 && g[ip] > 0.0) {
      double lambda = -g[in] / (g[ip] - g[in]);  // weight on the positive point
      best.value = lambda * val[ip] + (1.0 - lambda) * val[in];
      best.idx_neg = in;
      best.idx_pos = ip;
      best.mix_pos = lambda;
      break;
    }
  }
  return best;
}

}  // namespace

RatioBound ratio_upper_bound(const SuperHarmonicParams& params, std::uint64_t cap,
                             bool maximal_only) {
  std::vector<Pattern> patterns = enumerate_patterns(params, cap, maximal_only);
  const int K = params.K();
  const std::size_t n = patterns.size();
  std::vector<WeightVector> weights;
  weights.reserve(n);
  for (const Pattern& q : patterns) weights.push_back(pattern_weight(q, params));

  RatioBound bound;
  bound.pattern_count = n;
  bound.value = -std::numeric_limits<double>::infinity();

  std::vector<double> a(n), b(n), g(n);
  for (int j = 1; j <= K + 1; ++j) {
    for (std::size_t p = 0; p < n; ++p) {
      const WeightVector& w = weights[p];
      double sum_b = 0.0, sum_r = 0.0, tail_r = 0.0, head_b = 0.0;
      for (int i = 1; i <= K; ++i) {
        sum_b += w.b(i);
        sum_r += w.r(i);
        if (i >= j) tail_r += w.r(i);
        if (i < j) head_b += w.b(i);
      }
      a[p] = w.b(0) + tail_r + sum_b;
      b[p] = w.b(0) + sum_r + head_b;
      g[p] = a[p] - b[p];
    }
    for (std::size_t p = 0; p < n; ++p) {
      double single = std::min(a[p], b[p]);
      if (single > bound.value) {
        bound.value = single;
        bound.branch = j;
        bound.support_a = patterns[p];
        bound.support_b.reset();
        bound.mix = 1.0;
      }
    }
    HullAtZero pair = hull_at_zero(g, a);
    if (pair.idx_neg >= 0 && pair.value > bound.value) {
      bound.value = pair.value;
      bound.branch = j;
      bound.support_a = patterns[pair.idx_pos];
      bound.support_b = patterns[pair.idx_neg];
      bound.mix = pair.mix_pos;
    }
  }
  return bound;
}

}  // namespace packkit
