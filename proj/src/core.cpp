#include "packkit/core.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace packkit {

namespace {

const char* kind_name(Violation::Kind k) {
  switch (k) {
    case Violation::Kind::IdMismatch: return "id-mismatch";
    case Violation::Kind::OutOfStrip: return "out-of-strip";
    case Violation::Kind::AboveHeight: return "above-height";
    case Violation::Kind::Overlap: return "overlap";
  }
  return "?";
}

struct PlacedRect {
  int id;
  double x0, y0, x1, y1;
};

// Pairwise strict-interior test under the y-sorted order: rects are compared
// only while their y-intervals can still overlap, which is near-linear for
// real packings (short rects in a tall strip).
void overlap_scan(const std::vector<PlacedRect>& rs, ValidationReport& report) {
  for (std::size_t i = 0; i < rs.size(); ++i) {
    for (std::size_t j = i + 1; j < rs.size(); ++j) {
      if (rs[j].y0 >= rs[i].y1 - kTol) break;
      double ox = std::min(rs[i].x1, rs[j].x1) - std::max(rs[i].x0, rs[j].x0);
      double oy = std::min(rs[i].y1, rs[j].y1) - std::max(rs[i].y0, rs[j].y0);
      if (ox > kTol && oy > kTol) {
        Violation v;
        v.kind = Violation::Kind::Overlap;
        v.id_a = std::min(rs[i].id, rs[j].id);
        v.id_b = std::max(rs[i].id, rs[j].id);
        std::ostringstream os;
        os << "interiors intersect by " << ox << " x " << oy;
        v.detail = os.str();
        report.violations.push_back(std::move(v));
      }
    }
  }
}

}  // namespace

void Instance::validate() const {
  std::unordered_map<int, int> seen;
  for (const Rect& r : rects) {
    if (!(r.w > 0.0) || r.w > 1.0 || !(r.h > 0.0) || r.h > 1.0) {
      throw std::invalid_argument("instance '" + name + "': rect " + std::to_string(r.id) +
                                  " has dimensions outside (0,1]");
    }
    if (++seen[r.id] > 1) {
      throw std::invalid_argument("instance '" + name + "': duplicate rect id " +
                                  std::to_string(r.id));
    }
  }
  if (known_opt) {
    if (*known_opt < lower_bound(*this) - kTol) {
      throw std::invalid_argument("instance '" + name + "': known_opt below the lower bound");
    }
  }
}

std::string ValidationReport::to_string() const {
  if (ok()) return "ok";
  std::ostringstream os;
  os << violations.size() << " violation(s):\n";
  for (const Violation& v : violations) {
    os << "  [" << kind_name(v.kind) << "] rect " << v.id_a;
    if (v.id_b >= 0) os << " vs " << v.id_b;
    if (!v.detail.empty()) os << ": " << v.detail;
    os << "\n";
  }
  return os.str();
}

ValidationReport validate_packing(const Instance& instance, const StripPacking& packing) {
  ValidationReport report;

  std::unordered_map<int, const Rect*> rect_by_id;
  for (const Rect& r : instance.rects) rect_by_id[r.id] = &r;

  std::unordered_map<int, int> placed;
  for (const Placement& p : packing.placements) ++placed[p.rect_id];

  bool structural = false;
  for (const auto& [id, count] : placed) {
    if (!rect_by_id.count(id)) {
      report.violations.push_back(
          {Violation::Kind::IdMismatch, id, -1, "placement for unknown rect id"});
      structural = true;
    } else if (count > 1) {
      report.violations.push_back(
          {Violation::Kind::IdMismatch, id, -1, "rect placed " + std::to_string(count) + " times"});
      structural = true;
    }
  }
  for (const Rect& r : instance.rects) {
    if (!placed.count(r.id)) {
      report.violations.push_back({Violation::Kind::IdMismatch, r.id, -1, "rect never placed"});
      structural = true;
    }
  }
  if (structural) return report;

  std::vector<PlacedRect> rs;
  rs.reserve(packing.placements.size());
  for (const Placement& p : packing.placements) {
    const Rect& r = *rect_by_id[p.rect_id];
    if (p.x < -kTol || p.x + r.w > 1.0 + kTol || p.y < -kTol) {
      std::ostringstream os;
      os << "at (" << p.x << "," << p.y << ") size (" << r.w << "," << r.h << ")";
      report.violations.push_back({Violation::Kind::OutOfStrip, r.id, -1, os.str()});
    }
    if (p.y + r.h > packing.height + kTol) {
      std::ostringstream os;
      os << "top " << p.y + r.h << " exceeds height " << packing.height;
      report.violations.push_back({Violation::Kind::AboveHeight, r.id, -1, os.str()});
    }
    rs.push_back({r.id, p.x, p.y, p.x + r.w, p.y + r.h});
  }

  std::sort(rs.begin(), rs.end(), [](const PlacedRect& a, const PlacedRect& b) {
    if (a.y0 != b.y0) return a.y0 < b.y0;
    return a.id < b.id;
  });
  overlap_scan(rs, report);
  return report;
}

double lower_bound(const Instance& instance) {
  double area = 0.0, wide_stack = 0.0, max_h = 0.0;
  for (const Rect& r : instance.rects) {
    area += r.w * r.h;
    if (r.w > 0.5) wide_stack += r.h;
    max_h = std::max(max_h, r.h);
  }
  return std::max({area, wide_stack, max_h});
}

}  // namespace packkit
