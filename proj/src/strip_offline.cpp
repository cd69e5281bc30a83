#include "packkit/strip_offline.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace packkit {

std::vector<Slip> batch_into_slips(const Instance& instance, double c) {
  if (!(c > 1.0)) throw std::invalid_argument("batch_into_slips: c must be > 1");
  instance.validate();

  std::vector<const Rect*> order;
  order.reserve(instance.rects.size());
  for (const Rect& r : instance.rects) order.push_back(&r);
  std::sort(order.begin(), order.end(), [](const Rect* a, const Rect* b) {
    if (a->w != b->w) return a->w > b->w;
    return a->id < b->id;
  });

  std::vector<Slip> slips;
  for (const Rect* r : order) {
    if (slips.empty() || slips.back().packed_height + r->h > c + kTol) {
      Slip s;
      s.width = r->w;
      s.capacity = c;
      slips.push_back(std::move(s));
    }
    Slip& s = slips.back();
    s.contents.emplace_back(r->id, r->h);
    s.packed_height += r->h;
  }
  return slips;
}

StripPacking bp_pack(const Instance& instance, double c, const BinAlg& bin_alg, Decor* decor) {
  std::vector<Slip> slips = batch_into_slips(instance, c);
  StripPacking packing;
  if (slips.empty()) return packing;

  std::vector<double> closed_widths;
  for (std::size_t i = 0; i + 1 < slips.size(); ++i) closed_widths.push_back(slips[i].width);
  BinAssignment assignment = bin_alg.run(closed_widths);

  // Each bin becomes a band of height c; the closed slip with input index
  // `item.index` sits at the running width sum of its bin.
  std::vector<double> slip_x(slips.size(), 0.0);
  std::vector<double> slip_base(slips.size(), 0.0);
  for (int b = 0; b < assignment.bin_count(); ++b) {
    double x = 0.0;
    for (const BinItem& item : assignment.bins[b]) {
      slip_x[item.index] = x;
      slip_base[item.index] = b * c;
      x += item.size;
    }
  }
  int last = static_cast<int>(slips.size()) - 1;
  slip_x[last] = 0.0;
  slip_base[last] = assignment.bin_count() * c;
  packing.height = assignment.bin_count() * c + c;

  for (std::size_t i = 0; i < slips.size(); ++i) {
    double y = slip_base[i];
    for (const auto& [id, h] : slips[i].contents) {
      packing.placements.push_back({id, slip_x[i], y});
      if (decor) decor->rect_class[id] = static_cast<int>(i);
      y += h;
    }
    if (decor) decor->slips.push_back({slip_x[i], slip_base[i], slips[i].width, c});
  }
  if (decor) {
    for (int b = 0; b <= assignment.bin_count(); ++b) decor->lines.push_back((b + 1) * c);
  }
  return packing;
}

namespace {

struct Level {
  double base = 0.0;
  double height = 0.0;
  double fill = 0.0;
};

StripPacking level_pack(const Instance& instance, bool first_fit_levels, Decor* decor) {
  instance.validate();
  std::vector<const Rect*> order;
  order.reserve(instance.rects.size());
  for (const Rect& r : instance.rects) order.push_back(&r);
  std::sort(order.begin(), order.end(), [](const Rect* a, const Rect* b) {
    if (a->h != b->h) return a->h > b->h;
    return a->id < b->id;
  });

  StripPacking packing;
  std::vector<Level> levels;
  for (const Rect* r : order) {
    int target = -1;
    if (first_fit_levels) {
      for (int l = 0; l < static_cast<int>(levels.size()); ++l) {
        if (levels[l].fill + r->w <= 1.0 + kTol) {
          target = l;
          break;
        }
      }
    } else if (!levels.empty() && levels.back().fill + r->w <= 1.0 + kTol) {
      target = static_cast<int>(levels.size()) - 1;
    }
    if (target < 0) {
      Level next;
      next.base = packing.height;
      next.height = r->h;  // sorted order: the first rect is the tallest
      levels.push_back(next);
      packing.height += r->h;
      target = static_cast<int>(levels.size()) - 1;
    }
    Level& lvl = levels[target];
    packing.placements.push_back({r->id, lvl.fill, lvl.base});
    if (decor) decor->rect_class[r->id] = target;
    lvl.fill += r->w;
  }
  if (decor) {
    for (const Level& lvl : levels) decor->lines.push_back(lvl.base + lvl.height);
  }
  return packing;
}

}  // namespace

StripPacking nfdh(const Instance& instance, Decor* decor) {
  return level_pack(instance, false, decor);
}

StripPacking ffdh(const Instance& instance, Decor* decor) {
  return level_pack(instance, true, decor);
}

}  // namespace packkit
