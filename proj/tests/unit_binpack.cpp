#include <algorithm>
#include <map>

#include "doctest.h"
#include "packkit/binpack.hpp"
#include "packkit/core.hpp"
#include "packkit/generators.hpp"

using namespace packkit;

namespace {

std::vector<double> bin_sizes(const BinAssignment& a, int b) {
  std::vector<double> out;
  for (const BinItem& it : a.bins[b]) out.push_back(it.size);
  return out;
}

void check_conservation(const BinAssignment& a, const std::vector<double>& sizes) {
  std::multimap<double, int> expect;
  for (std::size_t i = 0; i < sizes.size(); ++i) expect.insert({sizes[i], static_cast<int>(i)});
  std::size_t total = 0;
  for (int b = 0; b < a.bin_count(); ++b) {
    CHECK(a.load(b) <= 1.0 + kTol);
    for (const BinItem& it : a.bins[b]) {
      ++total;
      auto range = expect.equal_range(it.size);
      bool found = false;
      for (auto iter = range.first; iter != range.second; ++iter) {
        if (iter->second == it.index) {
          expect.erase(iter);
          found = true;
          break;
        }
      }
      CHECK_MESSAGE(found, "item index/size pair not in input");
    }
  }
  CHECK(total == sizes.size());
  CHECK(expect.empty());
}

}  // namespace

TEST_CASE("next_fit examples") {
  CHECK(next_fit({0.5, 0.5, 0.5, 0.5}).bin_count() == 2);
  BinAssignment a = next_fit({0.6, 0.5, 0.4});
  REQUIRE(a.bin_count() == 2);
  CHECK(bin_sizes(a, 0) == std::vector<double>{0.6});
  CHECK(bin_sizes(a, 1) == std::vector<double>{0.5, 0.4});
  CHECK(next_fit({}).bin_count() == 0);
}

TEST_CASE("first_fit examples") {
  BinAssignment a = first_fit({0.6, 0.5, 0.4});
  REQUIRE(a.bin_count() == 2);
  CHECK(bin_sizes(a, 0) == std::vector<double>{0.6, 0.4});
  CHECK(bin_sizes(a, 1) == std::vector<double>{0.5});
  CHECK(first_fit({0.5, 0.5}).bin_count() == 1);
  BinAssignment b = first_fit({0.7, 0.7, 0.3, 0.3});
  REQUIRE(b.bin_count() == 2);
  CHECK(bin_sizes(b, 0) == std::vector<double>{0.7, 0.3});
  CHECK(bin_sizes(b, 1) == std::vector<double>{0.7, 0.3});
}

TEST_CASE("first_fit_decreasing examples") {
  BinAssignment a = first_fit_decreasing({0.3, 0.7, 0.2, 0.6});
  REQUIRE(a.bin_count() == 2);
  CHECK(bin_sizes(a, 0) == std::vector<double>{0.7, 0.3});
  CHECK(bin_sizes(a, 1) == std::vector<double>{0.6, 0.2});
  // original indices preserved
  CHECK(a.bins[0][0].index == 1);
  CHECK(a.bins[0][1].index == 0);

  std::vector<double> full(5, 1.0);
  CHECK(first_fit_decreasing(full).bin_count() == 5);
}

TEST_CASE("ffd ties break by original index") {
  BinAssignment a = first_fit_decreasing({0.4, 0.4, 0.4});
  REQUIRE(a.bin_count() == 2);
  CHECK(a.bins[0][0].index == 0);
  CHECK(a.bins[0][1].index == 1);
  CHECK(a.bins[1][0].index == 2);
}

TEST_CASE("input validation") {
  CHECK_THROWS_AS(next_fit({1.5}), std::invalid_argument);
  CHECK_THROWS_AS(first_fit({0.0}), std::invalid_argument);
  CHECK_THROWS_AS(first_fit_decreasing({-0.25}), std::invalid_argument);
  CHECK_THROWS_AS(harmonic_k({0.5}, 0), std::invalid_argument);
}

TEST_CASE("harmonic_k examples") {
  BinAssignment a = harmonic_k({0.6, 0.4, 0.4}, 2);
  REQUIRE(a.bin_count() == 2);
  CHECK(bin_sizes(a, 0) == std::vector<double>{0.6});
  CHECK(bin_sizes(a, 1) == std::vector<double>{0.4, 0.4});
  CHECK(harmonic_k({0.3, 0.3, 0.3}, 3).bin_count() == 1);
}

TEST_CASE("harmonic types never share bins") {
  BinAssignment a = harmonic_k({0.6, 0.3, 0.6, 0.3}, 3);
  for (int b = 0; b < a.bin_count(); ++b) {
    double lo = 1.0, hi = 0.0;
    for (const BinItem& it : a.bins[b]) {
      lo = std::min(lo, it.size);
      hi = std::max(hi, it.size);
    }
    CHECK(hi - lo < 0.2);  // one type per bin here
  }
}

TEST_CASE("bin_opt_bruteforce examples") {
  CHECK(bin_opt_bruteforce({0.6, 0.5, 0.4, 0.3}) == 2);
  CHECK(bin_opt_bruteforce({0.6, 0.6, 0.6}) == 3);
  CHECK(bin_opt_bruteforce({}) == 0);
  CHECK(bin_opt_bruteforce({0.5, 0.5, 0.5, 0.5, 0.25, 0.25}) == 3);
  CHECK_THROWS_AS(bin_opt_bruteforce(std::vector<double>(17, 0.1)), std::invalid_argument);
}

TEST_CASE("ffd stays within the classic factor of the exact optimum") {
  SplitMix64 rng(404);
  for (int trial = 0; trial < 150; ++trial) {
    int n = 1 + static_cast<int>(rng.below(12));
    std::vector<double> sizes;
    for (int i = 0; i < n; ++i) sizes.push_back(rng.uniform_open_closed(0.0, 1.0));
    int opt = bin_opt_bruteforce(sizes);
    int ffd = first_fit_decreasing(sizes).bin_count();
    CHECK(ffd >= opt);
    CHECK(ffd <= (11 * opt) / 9 + 1);
  }
}

TEST_CASE("all algorithms preserve the item multiset and respect capacity") {
  SplitMix64 rng(2024);
  SuperHarmonicParams toy = SuperHarmonicParams::toy3();
  for (int trial = 0; trial < 25; ++trial) {
    int n = static_cast<int>(rng.below(60));
    std::vector<double> sizes;
    for (int i = 0; i < n; ++i) sizes.push_back(rng.uniform_open_closed(0.0, 1.0));
    check_conservation(next_fit(sizes), sizes);
    check_conservation(first_fit(sizes), sizes);
    check_conservation(first_fit_decreasing(sizes), sizes);
    check_conservation(harmonic_k(sizes, 4), sizes);
    check_conservation(super_harmonic(sizes, toy), sizes);
  }
}

TEST_CASE("nf/ff/opt orderings hold") {
  SplitMix64 rng(99);
  for (int trial = 0; trial < 60; ++trial) {
    int n = 1 + static_cast<int>(rng.below(11));
    std::vector<double> sizes;
    for (int i = 0; i < n; ++i) sizes.push_back(rng.uniform_open_closed(0.0, 1.0));
    int opt = bin_opt_bruteforce(sizes);
    CHECK(first_fit(sizes).bin_count() >= opt);
    CHECK(next_fit(sizes).bin_count() >= first_fit(sizes).bin_count() - n);  // sanity
    CHECK(super_harmonic(sizes, SuperHarmonicParams::toy3()).bin_count() >= opt);
  }
}
