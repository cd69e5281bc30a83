#include "packkit/binpack.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "packkit/core.hpp"

namespace packkit {

double BinAssignment::load(int b) const {
  double total = 0.0;
  for (const BinItem& it : bins[b]) total += it.size;
  return total;
}

namespace {

BinAssignment run_packer(OnlinePacker& packer, const std::vector<double>& sizes,
                         std::string name) {
  for (double s : sizes) packer.insert(s);
  return {std::move(name), packer.bins()};
}

}  // namespace

BinAssignment next_fit(const std::vector<double>& sizes) {
  NextFitPacker p;
  return run_packer(p, sizes, "nf");
}

BinAssignment first_fit(const std::vector<double>& sizes) {
  FirstFitPacker p;
  return run_packer(p, sizes, "ff");
}

BinAssignment first_fit_decreasing(const std::vector<double>& sizes) {
  std::vector<int> order(sizes.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return sizes[a] > sizes[b]; });
  FirstFitPacker p;
  for (int idx : order) p.insert(sizes[idx], idx);
  return {"ffd", p.bins()};
}

BinAssignment harmonic_k(const std::vector<double>& sizes, int k) {
  HarmonicPacker p(k);
  return run_packer(p, sizes, "harmonic:" + std::to_string(k));
}

BinAssignment super_harmonic(const std::vector<double>& sizes, const SuperHarmonicParams& params) {
  SuperHarmonicPacker p(params);
  return run_packer(p, sizes, "superharmonic");
}

int bin_opt_bruteforce(const std::vector<double>& sizes) {
  const int n = static_cast<int>(sizes.size());
  if (n > 16) throw std::invalid_argument("bin_opt_bruteforce: limited to n <= 16");
  if (n == 0) return 0;
  for (double s : sizes) {
    if (!(s > 0.0) || s > 1.0) throw std::invalid_argument("bin_opt_bruteforce: size outside (0,1]");
  }
  const int full = (1 << n) - 1;
  std::vector<double> sum(full + 1, 0.0);
  std::vector<char> feasible(full + 1, 0);
  feasible[0] = 1;
  for (int mask = 1; mask <= full; ++mask) {
    int low = mask & -mask;
    int idx = std::countr_zero(static_cast<unsigned>(mask));
    sum[mask] = sum[mask ^ low] + sizes[idx];
    feasible[mask] = sum[mask] <= 1.0 + kTol;
  }
  std::vector<int> best(full + 1, std::numeric_limits<int>::max());
  best[0] = 0;
  for (int mask = 1; mask <= full; ++mask) {
    // Pin the lowest item to its bin so each partition is counted once.
    int low = mask & -mask;
    for (int sub = mask; sub > 0; sub = (sub - 1) & mask) {
      if (!(sub & low) || !feasible[sub]) continue;
      int rest = best[mask ^ sub];
      if (rest != std::numeric_limits<int>::max() && rest + 1 < best[mask]) {
        best[mask] = rest + 1;
      }
    }
  }
  return best[full];
}

BinAlg BinAlg::super_harmonic(SuperHarmonicParams p) {
  BinAlg alg;
  alg.kind = Kind::SuperHarmonic;
  alg.params = std::move(p);
  return alg;
}

std::string BinAlg::name() const {
  switch (kind) {
    case Kind::NF: return "nf";
    case Kind::FF: return "ff";
    case Kind::FFD: return "ffd";
    case Kind::Harmonic: return "harmonic:" + std::to_string(k);
    case Kind::SuperHarmonic: return "superharmonic";
  }
  return "?";
}

BinAssignment BinAlg::run(const std::vector<double>& sizes) const {
  switch (kind) {
    case Kind::NF: return next_fit(sizes);
    case Kind::FF: return first_fit(sizes);
    case Kind::FFD: return first_fit_decreasing(sizes);
    case Kind::Harmonic: return harmonic_k(sizes, k);
    case Kind::SuperHarmonic: return packkit::super_harmonic(sizes, params);
  }
  throw std::logic_error("unreachable");
}

}  // namespace packkit
