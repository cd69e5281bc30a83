#include "packkit/strip_online.hpp"

#include <cmath>
#include <stdexcept>
#include <unordered_map>

namespace packkit {

GpConfig::GpConfig(double r_, double c_, SuperHarmonicParams params_)
    : r(r_), c(c_), params(std::move(params_)) {
  epsilon = params.eps();
  validate();
}

void GpConfig::validate() const {
  params.validate();
  if (!(r > 0.0) || !(r < 1.0)) throw std::invalid_argument("gp: r must be in (0,1)");
  if (!(c > 1.0)) throw std::invalid_argument("gp: c must be > 1");
  if (!(epsilon > 0.0) || !(epsilon < 0.5)) {
    throw std::invalid_argument("gp: epsilon must be in (0, 1/2)");
  }
  if (epsilon != params.eps()) throw std::invalid_argument("gp: epsilon must equal t_{k+1}");
}

namespace {

// Class s with r^{s+1} < h <= r^s for h in (0,1]; heights exactly equal to a
// power of r take the "<=" side.
int shelf_class(double h, double r) {
  int s = static_cast<int>(std::floor(std::log(h) / std::log(r)));
  if (s < 0) s = 0;
  while (s > 0 && std::pow(r, s) < h) --s;
  while (std::pow(r, s + 1) >= h) ++s;
  return s;
}

}  // namespace

GpRunner::GpRunner(GpConfig config) : config_(std::move(config)) {
  config_.validate();
  packer_ = std::make_unique<SuperHarmonicPacker>(config_.params);
  open_slip_.assign(config_.params.k + 1, -1);
}

int GpRunner::height_class(double h) const { return shelf_class(h, config_.r); }

Placement GpRunner::insert(const Rect& rect) {
  if (!(rect.w > 0.0) || rect.w > 1.0 || !(rect.h > 0.0) || rect.h > 1.0) {
    throw std::invalid_argument("gp: rect dimensions outside (0,1]");
  }
  const SuperHarmonicParams& params = config_.params;
  int type = params.type_of(rect.w);
  Placement placement{rect.id, 0.0, 0.0};
  int cls = 0;

  if (type == params.k + 1) {
    // Narrow: rounded shelf of height r^s.
    int s = height_class(rect.h);
    if (static_cast<int>(open_shelf_.size()) <= s) open_shelf_.resize(s + 1, -1);
    int sh = open_shelf_[s];
    if (sh < 0 || shelves_[sh].fill + rect.w > 1.0 + kTol) {
      ShelfInfo shelf;
      shelf.cls = s;
      shelf.base = strip_top_;
      shelf.height = std::pow(config_.r, s);
      shelf.open = true;
      if (sh >= 0) shelves_[sh].open = false;
      shelves_.push_back(shelf);
      sh = static_cast<int>(shelves_.size()) - 1;
      open_shelf_[s] = sh;
      strip_top_ += shelf.height;
    }
    ShelfInfo& shelf = shelves_[sh];
    placement.x = shelf.fill;
    placement.y = shelf.base;
    shelf.fill += rect.w;
    shelf.min_item_h = std::min(shelf.min_item_h, rect.h);
    shelf.max_item_h = std::max(shelf.max_item_h, rect.h);
    cls = params.k + 1 + s;
  } else {
    // Wide: stack into the open type slip, or open a new slip and hand it to
    // the embedded packer as a 1-D item of size t_type.
    int sl = open_slip_[type];
    if (sl >= 0 && slips_[sl].fill >= config_.c - 1.0) {
      slips_[sl].open = false;
      open_slip_[type] = -1;
      sl = -1;
    }
    if (sl < 0) {
      PackSlot slot = packer_->insert(params.t_of(type));
      if (slot.new_bin) {
        band_bases_.push_back(strip_top_);
        strip_top_ += config_.c;
      }
      SlipInfo slip;
      slip.type = type;
      slip.bin = slot.bin;
      slip.x = slot.offset;
      slip.base = band_bases_[slot.bin];
      slip.width = params.t_of(type);
      slip.open = true;
      slips_.push_back(slip);
      sl = static_cast<int>(slips_.size()) - 1;
      open_slip_[type] = sl;
    }
    SlipInfo& slip = slips_[sl];
    placement.x = slip.x;
    placement.y = slip.base + slip.fill;
    slip.fill += rect.h;
    cls = type;
  }

  placements_.push_back(placement);
  rect_class_.push_back(cls);
  return placement;
}

StripPacking GpRunner::finish() const { return {placements_, strip_top_}; }

void GpRunner::fill_decor(Decor& decor) const {
  for (std::size_t i = 0; i < placements_.size(); ++i) {
    decor.rect_class[placements_[i].rect_id] = rect_class_[i];
  }
  for (const SlipInfo& s : slips_) decor.slips.push_back({s.x, s.base, s.width, config_.c});
  for (double base : band_bases_) decor.lines.push_back(base + config_.c);
  for (const ShelfInfo& s : shelves_) decor.lines.push_back(s.base + s.height);
}

StripPacking gp_run(const Instance& instance, const GpConfig& config, Decor* decor) {
  instance.validate();
  GpRunner runner(config);
  for (const Rect& r : instance.rects) runner.insert(r);
  if (decor) runner.fill_decor(*decor);
  return runner.finish();
}

namespace {

std::unique_ptr<OnlinePacker> make_inner(const ShelfInner& inner) {
  switch (inner.kind) {
    case ShelfInner::Kind::NF: return std::make_unique<NextFitPacker>();
    case ShelfInner::Kind::FF: return std::make_unique<FirstFitPacker>();
    case ShelfInner::Kind::Harmonic: return std::make_unique<HarmonicPacker>(inner.k);
  }
  throw std::logic_error("unreachable");
}

}  // namespace

StripPacking shelf_pack(const Instance& instance, const ShelfInner& inner, double r, Decor* decor) {
  if (!(r > 0.0) || !(r < 1.0)) throw std::invalid_argument("shelf_pack: r must be in (0,1)");
  instance.validate();

  struct ClassState {
    std::unique_ptr<OnlinePacker> packer;
    std::vector<double> shelf_base;  // per inner bin
  };
  std::unordered_map<int, ClassState> classes;

  StripPacking packing;
  for (const Rect& rect : instance.rects) {
    int s = shelf_class(rect.h, r);
    double shelf_h = std::pow(r, s);

    ClassState& cs = classes[s];
    if (!cs.packer) cs.packer = make_inner(inner);
    PackSlot slot = cs.packer->insert(rect.w);
    if (slot.new_bin) {
      cs.shelf_base.push_back(packing.height);
      packing.height += shelf_h;
      if (decor) decor->lines.push_back(packing.height);
    }
    packing.placements.push_back({rect.id, slot.offset, cs.shelf_base[slot.bin]});
    if (decor) decor->rect_class[rect.id] = s;
  }
  return packing;
}

}  // namespace packkit
