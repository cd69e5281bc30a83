#pragma once

#include <utility>
#include <vector>

#include "packkit/binpack.hpp"
#include "packkit/core.hpp"
#include "packkit/decor.hpp"

namespace packkit {

// A width-w, height-c container holding vertically stacked rects. Every slip
// except the last one of a batch is closed with packed_height > c - 1.
struct Slip {
  double width = 0.0;
  double capacity = 0.0;
  std::vector<std::pair<int, double>> contents;  // (rect id, height), bottom-up
  double packed_height = 0.0;
};

// Stage 1 of the offline reduction: sort rects by width non-increasing (ties
// by id), stack them in that order into slips of height capacity c > 1. A new
// slip opens, as wide as its first rect, whenever the next rect would not fit.
std::vector<Slip> batch_into_slips(const Instance& instance, double c);

// Stage 2: treat each closed slip as a 1-D item of size = slip width, pack
// those with bin_alg, and lay every bin out as a band of height c (bottom-up
// in bin order, slips left to right at the running width sum). The final
// slip always gets a private band on top.
StripPacking bp_pack(const Instance& instance, double c, const BinAlg& bin_alg,
                     Decor* decor = nullptr);

// Level algorithms: sort by height non-increasing, fill width-1 levels left
// to right. NFDH keeps only the newest level open, FFDH places each rect on
// the lowest level where it fits. Level height = its first (tallest) rect.
StripPacking nfdh(const Instance& instance, Decor* decor = nullptr);
StripPacking ffdh(const Instance& instance, Decor* decor = nullptr);

}  // namespace packkit
