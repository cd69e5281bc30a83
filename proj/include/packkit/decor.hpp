#pragma once

#include <unordered_map>
#include <vector>

namespace packkit {

// Optional render metadata emitted by the packers: which color class each
// rect belongs to (shelf class, wide type, slip or level index), the slip
// outlines, and the horizontal lines closing each band / level / shelf.
struct Decor {
  struct Box {
    double x = 0.0, y = 0.0, w = 0.0, h = 0.0;
  };
  std::unordered_map<int, int> rect_class;  // rect id -> palette class
  std::vector<Box> slips;
  std::vector<double> lines;  // y coordinates
};

}  // namespace packkit
