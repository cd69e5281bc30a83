#include <cmath>

#include "doctest.h"
#include "packkit/binpack.hpp"
#include "packkit/core.hpp"
#include "packkit/generators.hpp"
#include "packkit/strip_online.hpp"

using namespace packkit;

namespace {

GpConfig toy_config() {
  // eps = 1/3, r = 1/2, c = 2 over the harmonic k=2 boundaries.
  return GpConfig(0.5, 2.0, SuperHarmonicParams::harmonic(2));
}

}  // namespace

TEST_CASE("gp narrow rect opens a class-1 shelf at the bottom") {
  GpRunner runner(toy_config());
  Placement p = runner.insert({0, 0.1, 0.3});  // 1/4 < 0.3 <= 1/2
  CHECK(p.x == 0.0);
  CHECK(p.y == 0.0);
  REQUIRE(runner.shelves().size() == 1);
  CHECK(runner.shelves()[0].cls == 1);
  CHECK(runner.shelves()[0].height == doctest::Approx(0.5));
  CHECK(runner.height() == doctest::Approx(0.5));

  // same class, fits beside
  Placement q = runner.insert({1, 0.2, 0.45});
  CHECK(q.x == doctest::Approx(0.1));
  CHECK(q.y == 0.0);
  CHECK(runner.shelves().size() == 1);
}

TEST_CASE("gp wide rect opens a slip and a band") {
  GpRunner runner(toy_config());
  Placement p = runner.insert({0, 0.6, 0.5});  // type 1
  CHECK(p.x == 0.0);
  CHECK(p.y == 0.0);
  REQUIRE(runner.slips().size() == 1);
  CHECK(runner.slips()[0].type == 1);
  CHECK(runner.slips()[0].width == doctest::Approx(1.0));
  CHECK(runner.height() == doctest::Approx(2.0));  // one band of height c
}

TEST_CASE("gp single wide rect packs to height c") {
  Instance inst;
  inst.name = "one-wide";
  inst.rects = {{0, 0.7, 0.9}};
  StripPacking p = gp_run(inst, toy_config());
  CHECK(p.height == doctest::Approx(2.0));
  CHECK(validate_packing(inst, p).ok());
}

TEST_CASE("gp reuses the open slip until height c-1") {
  GpRunner runner(toy_config());
  runner.insert({0, 0.6, 0.8});
  Placement p1 = runner.insert({1, 0.55, 0.4});  // same type, slip fill 0.8 < 1
  CHECK(p1.x == 0.0);
  CHECK(p1.y == doctest::Approx(0.8));
  CHECK(runner.slips().size() == 1);
  // fill is now 1.2 >= c-1, so the next type-1 rect opens a new slip
  runner.insert({2, 0.7, 0.2});
  CHECK(runner.slips().size() == 2);
}

TEST_CASE("gp shelf heights are exact powers of r and members fit their class") {
  Instance inst = gen_uniform(500, 2222, 0.0, 1.0 / 3.0 - 0.01, 0.0, 1.0);
  GpConfig cfg = toy_config();
  GpRunner runner(cfg);
  for (const Rect& r : inst.rects) runner.insert(r);
  for (const auto& shelf : runner.shelves()) {
    CHECK(shelf.height == std::pow(cfg.r, shelf.cls));
    CHECK(shelf.max_item_h <= shelf.height + 1e-12);
    CHECK(shelf.min_item_h > shelf.height * cfg.r - 1e-12);
    if (!shelf.open) CHECK(shelf.fill > 1.0 - cfg.epsilon);
  }
  StripPacking p = runner.finish();
  CHECK(validate_packing(inst, p).ok());
}

TEST_CASE("gp keeps at most one open slip per type") {
  Instance inst = gen_uniform(800, 3333);
  GpConfig cfg = toy_config();
  GpRunner runner(cfg);
  for (const Rect& r : inst.rects) {
    runner.insert(r);
    std::vector<int> below(cfg.params.k + 1, 0);
    for (const auto& slip : runner.slips()) {
      if (slip.fill < cfg.c - 1.0) below[slip.type]++;
    }
    for (int t = 1; t <= cfg.params.k; ++t) CHECK(below[t] <= 1);
  }
  StripPacking p = runner.finish();
  CHECK(validate_packing(inst, p).ok());
  CHECK(p.height == runner.height());
}

TEST_CASE("gp placements are prefix-stable") {
  Instance inst = gen_uniform(300, 4444);
  GpConfig cfg = toy_config();
  GpRunner full(cfg);
  std::vector<Placement> all;
  for (const Rect& r : inst.rects) all.push_back(full.insert(r));

  SplitMix64 rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    std::size_t len = 1 + rng.below(inst.rects.size());
    GpRunner partial(cfg);
    for (std::size_t i = 0; i < len; ++i) {
      Placement p = partial.insert(inst.rects[i]);
      CHECK(p.rect_id == all[i].rect_id);
      CHECK(p.x == all[i].x);
      CHECK(p.y == all[i].y);
    }
  }
}

TEST_CASE("gp narrow-only stream meets the shelf area bound") {
  GpConfig cfg = toy_config();
  for (std::uint64_t seed : {6ull, 7ull, 8ull}) {
    Instance inst = gen_uniform(600, seed, 0.0, cfg.epsilon - 1e-6, 0.0, 1.0);
    StripPacking p = gp_run(inst, cfg);
    double area = 0.0;
    for (const Rect& r : inst.rects) area += r.area();
    double bound = area / (cfg.r * (1.0 - cfg.epsilon)) + 1.0 / (1.0 - cfg.r) + 1.0;
    CHECK(p.height <= bound);
    CHECK(validate_packing(inst, p).ok());
  }
}

TEST_CASE("gp wide-only equal heights c-1 mirror the 1-D packer exactly") {
  double c = 1.8;
  GpConfig cfg(0.5, c, SuperHarmonicParams::harmonic(2));
  SplitMix64 rng(99);
  std::vector<double> widths;
  Instance inst;
  inst.name = "wide-only";
  for (int i = 0; i < 200; ++i) {
    double w = rng.uniform_open_closed(cfg.epsilon + 1e-9, 1.0);
    inst.rects.push_back({i, w, c - 1.0});
    widths.push_back(cfg.params.t_of(cfg.params.type_of(w)));  // induced slip size
  }
  StripPacking p = gp_run(inst, cfg);
  BinAssignment a = super_harmonic(widths, cfg.params);
  CHECK(p.height == doctest::Approx(c * a.bin_count()));
  CHECK(validate_packing(inst, p).ok());
}

TEST_CASE("gp with red slip classes keeps bands geometrically sound") {
  // toy3 colors half of the type-3 slips red; those slips sit right-aligned
  // in the reserved gap, so any offset bug shows up as an overlap here.
  GpConfig cfg(0.6, 2.0, SuperHarmonicParams::toy3());
  SplitMix64 rng(777);
  Instance inst;
  inst.name = "wide-red";
  for (int i = 0; i < 600; ++i) {
    double w = rng.uniform_open_closed(cfg.epsilon, 1.0);
    double h = rng.uniform_open_closed(0.0, 1.0);
    inst.rects.push_back({i, w, h});
  }
  GpRunner runner(cfg);
  for (const Rect& r : inst.rects) runner.insert(r);
  StripPacking p = runner.finish();
  CHECK(validate_packing(inst, p).ok());

  const auto& states = runner.packer().states();
  bool saw_red = false, saw_mixed = false;
  for (const auto& st : states) {
    saw_red |= st.red_count > 0;
    saw_mixed |= st.group == SuperHarmonicPacker::Group::Mixed;
  }
  CHECK(saw_red);
  CHECK(saw_mixed);
  for (const auto& slip : runner.slips()) {
    CHECK(slip.x >= -kTol);
    CHECK(slip.x + slip.width <= 1.0 + kTol);
    CHECK(slip.fill <= cfg.c + kTol);
  }
  CHECK(runner.band_bases().size() == static_cast<std::size_t>(runner.packer().bin_count()));
}

TEST_CASE("gp mixed narrow and wide stream with red classes validates") {
  GpConfig cfg(0.7, 3.0, SuperHarmonicParams::toy3());
  Instance inst = gen_uniform(900, 2468);
  StripPacking p = gp_run(inst, cfg);
  CHECK(validate_packing(inst, p).ok());
  CHECK(p.height >= lower_bound(inst) - kTol);
}

TEST_CASE("gp config validation") {
  CHECK_THROWS_AS(GpConfig(1.2, 2.0, SuperHarmonicParams::harmonic(2)), std::invalid_argument);
  CHECK_THROWS_AS(GpConfig(0.5, 0.9, SuperHarmonicParams::harmonic(2)), std::invalid_argument);
  GpConfig cfg = toy_config();
  cfg.epsilon = 0.2;  // detached from params
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
}

TEST_CASE("shelf_pack with one height class reduces to the inner algorithm") {
  SplitMix64 rng(123);
  std::vector<double> widths;
  Instance inst;
  inst.name = "one-class";
  for (int i = 0; i < 120; ++i) {
    double w = rng.uniform_open_closed(0.0, 1.0);
    widths.push_back(w);
    inst.rects.push_back({i, w, 0.5});  // h = r^1 exactly for r = 0.5
  }
  StripPacking nf_shelves = shelf_pack(inst, ShelfInner::nf(), 0.5);
  CHECK(nf_shelves.height == doctest::Approx(0.5 * next_fit(widths).bin_count()));
  StripPacking ff_shelves = shelf_pack(inst, ShelfInner::ff(), 0.5);
  CHECK(ff_shelves.height == doctest::Approx(0.5 * first_fit(widths).bin_count()));
  StripPacking h_shelves = shelf_pack(inst, ShelfInner::harmonic(4), 0.5);
  CHECK(h_shelves.height == doctest::Approx(0.5 * harmonic_k(widths, 4).bin_count()));
  CHECK(validate_packing(inst, nf_shelves).ok());
  CHECK(validate_packing(inst, ff_shelves).ok());
  CHECK(validate_packing(inst, h_shelves).ok());
}

TEST_CASE("shelf_pack pairs half-width items two per shelf") {
  Instance inst;
  inst.name = "pairs";
  for (int i = 0; i < 7; ++i) inst.rects.push_back({i, 0.5, 0.25});
  StripPacking p = shelf_pack(inst, ShelfInner::nf(), 0.5);
  CHECK(p.height == doctest::Approx(0.25 * 4));  // ceil(7/2) shelves of r^2
}

TEST_CASE("shelf_pack single item rounds its shelf up to r^s") {
  Instance inst;
  inst.name = "single";
  inst.rects = {{0, 0.4, 0.3}};
  StripPacking p = shelf_pack(inst, ShelfInner::nf(), 0.5);
  CHECK(p.height == doctest::Approx(0.5));  // 1/4 < 0.3 <= 1/2
  StripPacking q = shelf_pack(inst, ShelfInner::nf(), 0.9);
  CHECK(q.height == doctest::Approx(std::pow(0.9, 11)));  // 0.9^12 < 0.3 <= 0.9^11
}

TEST_CASE("shelf_pack validates on mixed instances") {
  Instance inst = gen_uniform(500, 77);
  for (double r : {0.5, 0.7}) {
    for (ShelfInner inner : {ShelfInner::nf(), ShelfInner::ff(), ShelfInner::harmonic(3)}) {
      StripPacking p = shelf_pack(inst, inner, r);
      CHECK(validate_packing(inst, p).ok());
    }
  }
}
