#pragma once

#include <string>
#include <vector>

#include "packkit/super_harmonic.hpp"

namespace packkit {

// Result of a 1-D bin packing run. Bin capacity is 1; items are recorded in
// insertion order with their original input index.
struct BinAssignment {
  std::string algorithm;
  std::vector<std::vector<BinItem>> bins;
  int bin_count() const { return static_cast<int>(bins.size()); }
  double load(int b) const;
};

// Online semantics: one open bin, item goes there if it fits, else the bin
// closes for good and a new one opens.
BinAssignment next_fit(const std::vector<double>& sizes);

// Each item goes to the lowest-indexed bin with enough residual capacity.
BinAssignment first_fit(const std::vector<double>& sizes);

// Sort non-increasing (ties by original index), then First Fit.
BinAssignment first_fit_decreasing(const std::vector<double>& sizes);

BinAssignment harmonic_k(const std::vector<double>& sizes, int k);

BinAssignment super_harmonic(const std::vector<double>& sizes, const SuperHarmonicParams& params);

// Exact minimum bin count by dynamic programming over item subsets.
// Test-scale oracle only: refuses n > 16.
int bin_opt_bruteforce(const std::vector<double>& sizes);

// A bin packing algorithm choice that the strip packing reductions can carry
// around by value.
struct BinAlg {
  enum class Kind { NF, FF, FFD, Harmonic, SuperHarmonic };
  Kind kind = Kind::FFD;
  int k = 0;                    // Harmonic only
  SuperHarmonicParams params;   // SuperHarmonic only

  static BinAlg nf() { return {Kind::NF, 0, {}}; }
  static BinAlg ff() { return {Kind::FF, 0, {}}; }
  static BinAlg ffd() { return {Kind::FFD, 0, {}}; }
  static BinAlg harmonic(int k) { return {Kind::Harmonic, k, {}}; }
  static BinAlg super_harmonic(SuperHarmonicParams p);

  std::string name() const;
  BinAssignment run(const std::vector<double>& sizes) const;
};

}  // namespace packkit
