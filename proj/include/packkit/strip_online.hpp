#pragma once

#include <memory>
#include <vector>

#include "packkit/core.hpp"
#include "packkit/decor.hpp"
#include "packkit/super_harmonic.hpp"

namespace packkit {

// Configuration of the online group-and-pack strip packer: rects narrower
// than epsilon go to rounded shelves (heights r^s), wider ones are batched
// into slips of height c and handed to an embedded Super Harmonic packer as
// 1-D items. epsilon always equals params.eps().
struct GpConfig {
  double epsilon = 0.0;
  double r = 0.0;       // shelf rounding base, in (0,1)
  double c = 0.0;       // slip / band height, > 1
  SuperHarmonicParams params;

  GpConfig() = default;
  GpConfig(double r_, double c_, SuperHarmonicParams params_);
  void validate() const;
};

// Single-owner online state machine. Placements are append-only; a placement
// never moves after insert() returns it.
class GpRunner {
 public:
  struct ShelfInfo {
    int cls = 0;         // height class s, shelf height = r^s
    double base = 0.0;
    double height = 0.0;
    double fill = 0.0;   // occupied width
    bool open = false;
    double min_item_h = 1.0, max_item_h = 0.0;
  };
  struct SlipInfo {
    int type = 0;
    int bin = 0;         // band index (= embedded packer bin index)
    double x = 0.0;
    double base = 0.0;
    double width = 0.0;  // always t_type
    double fill = 0.0;   // packed height
    bool open = false;
  };

  explicit GpRunner(GpConfig config);
  Placement insert(const Rect& rect);
  StripPacking finish() const;
  double height() const { return strip_top_; }

  const std::vector<ShelfInfo>& shelves() const { return shelves_; }
  const std::vector<SlipInfo>& slips() const { return slips_; }
  const std::vector<double>& band_bases() const { return band_bases_; }
  const SuperHarmonicPacker& packer() const { return *packer_; }
  const GpConfig& config() const { return config_; }
  void fill_decor(Decor& decor) const;

 private:
  int height_class(double h) const;

  GpConfig config_;
  std::unique_ptr<SuperHarmonicPacker> packer_;
  double strip_top_ = 0.0;
  std::vector<Placement> placements_;
  std::vector<ShelfInfo> shelves_;
  std::vector<int> open_shelf_;   // per class, index into shelves_ or -1
  std::vector<SlipInfo> slips_;
  std::vector<int> open_slip_;    // per type 1..k, index into slips_ or -1
  std::vector<double> band_bases_;
  std::vector<int> rect_class_;   // parallel to placements_, for decor
};

// Folds GpRunner::insert over the arrival order.
StripPacking gp_run(const Instance& instance, const GpConfig& config, Decor* decor = nullptr);

// Inner 1-D rule of the classic shelf algorithms.
struct ShelfInner {
  enum class Kind { NF, FF, Harmonic };
  Kind kind = Kind::NF;
  int k = 0;  // Harmonic only
  static ShelfInner nf() { return {Kind::NF, 0}; }
  static ShelfInner ff() { return {Kind::FF, 0}; }
  static ShelfInner harmonic(int k) { return {Kind::Harmonic, k}; }
};

// Baker-Schwarz shelf packing: heights rounded to powers of r pick the shelf
// class, the inner bin algorithm picks which shelf of that class receives
// each rect (one shelf per inner bin), new shelves open at the strip top.
StripPacking shelf_pack(const Instance& instance, const ShelfInner& inner, double r,
                        Decor* decor = nullptr);

}  // namespace packkit
