#pragma once

#include <optional>
#include <string>
#include <vector>

namespace packkit {

// Absolute tolerance for every geometric comparison in the library.
// Coordinates are composed by summation, so exact equality is never assumed.
inline constexpr double kTol = 1e-9;

struct Rect {
  int id = 0;
  double w = 0.0;  // width in (0,1]
  double h = 0.0;  // height in (0,1]
  double area() const { return w * h; }
};

// A problem instance. The order of `rects` is the arrival order for the
// online algorithms.
struct Instance {
  std::string name;
  std::vector<Rect> rects;
  std::optional<double> known_opt;  // optimal strip height, when known

  // Throws std::invalid_argument on out-of-range dimensions, duplicate ids,
  // or a known_opt below the instance lower bound.
  void validate() const;
};

struct Placement {
  int rect_id = 0;
  double x = 0.0;
  double y = 0.0;
};

struct StripPacking {
  std::vector<Placement> placements;
  double height = 0.0;
};

struct Violation {
  enum class Kind { IdMismatch, OutOfStrip, AboveHeight, Overlap };
  Kind kind = Kind::IdMismatch;
  int id_a = -1;
  int id_b = -1;  // second rect for overlaps, -1 otherwise
  std::string detail;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
  std::string to_string() const;
};

// The universal feasibility oracle. Checks that the packing places every
// rect of the instance exactly once, inside the strip [0,1] x [0,height],
// with pairwise disjoint open interiors. Rectangles that share only an edge
// or a corner are valid: "overlap" means the interiors intersect by more
// than kTol in both axes. Id-set mismatches are reported as structural
// violations and suppress the geometric checks.
ValidationReport validate_packing(const Instance& instance, const StripPacking& packing);

// max(total area, total height of rects wider than 1/2, max rect height).
// Every feasible packing is at least this tall. Returns 0 for an empty
// instance.
double lower_bound(const Instance& instance);

}  // namespace packkit
