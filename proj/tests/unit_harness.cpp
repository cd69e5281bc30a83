#include <cmath>
#include <filesystem>
#include <fstream>

#include "doctest.h"
#include "packkit/analysis.hpp"
#include "packkit/bench.hpp"
#include "packkit/core.hpp"
#include "packkit/generators.hpp"
#include "packkit/strip_offline.hpp"
#include "packkit/strip_online.hpp"
#include "packkit/svg_render.hpp"

using namespace packkit;

TEST_CASE("gen_uniform is deterministic and in range") {
  Instance a = gen_uniform(200, 42);
  Instance b = gen_uniform(200, 42);
  REQUIRE(a.rects.size() == 200);
  for (std::size_t i = 0; i < a.rects.size(); ++i) {
    CHECK(a.rects[i].w == b.rects[i].w);
    CHECK(a.rects[i].h == b.rects[i].h);
    CHECK(a.rects[i].w > 0.0);
    CHECK(a.rects[i].w <= 1.0);
    CHECK(a.rects[i].h > 0.0);
    CHECK(a.rects[i].h <= 1.0);
  }
  Instance c = gen_uniform(200, 43);
  bool any_diff = false;
  for (std::size_t i = 0; i < a.rects.size(); ++i) any_diff |= a.rects[i].w != c.rects[i].w;
  CHECK(any_diff);
  CHECK(gen_uniform(0, 1).rects.empty());
  CHECK_THROWS_AS(gen_uniform(5, 1, 0.5, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(gen_uniform(5, 1, 0.0, 1.2), std::invalid_argument);
}

TEST_CASE("gen_uniform respects sub-ranges") {
  Instance a = gen_uniform(300, 9, 0.25, 0.5, 0.125, 0.25);
  for (const Rect& r : a.rects) {
    CHECK(r.w > 0.25);
    CHECK(r.w <= 0.5);
    CHECK(r.h > 0.125);
    CHECK(r.h <= 0.25);
  }
}

TEST_CASE("gen_tiling trivial and error cases") {
  Instance one = gen_tiling(1, 1.0, 5);
  REQUIRE(one.rects.size() == 1);
  CHECK(one.rects[0].w == doctest::Approx(1.0));
  CHECK(one.rects[0].h == doctest::Approx(1.0));
  REQUIRE(one.known_opt.has_value());
  CHECK(*one.known_opt == 1.0);
  CHECK_THROWS_AS(gen_tiling(3, 5.0, 1), std::invalid_argument);  // needs >= 5 pieces
  CHECK_THROWS_AS(gen_tiling(0, 1.0, 1), std::invalid_argument);
}

TEST_CASE("gen_tiling conserves area and stays valid") {
  for (std::uint64_t seed : {1ull, 9ull, 77ull}) {
    double H = 20.0;
    Instance inst = gen_tiling(500, H, seed);
    inst.validate();
    REQUIRE(inst.rects.size() == 500);
    double area = 0.0, height_sum = 0.0;
    for (const Rect& r : inst.rects) {
      area += r.area();
      height_sum += r.h;
      CHECK(r.w > 0.0);
      CHECK(r.w <= 1.0);
      CHECK(r.h > 0.0);
      CHECK(r.h <= 1.0);
    }
    CHECK(std::abs(area - H) <= 1e-9);
    CHECK(lower_bound(inst) == doctest::Approx(H).epsilon(1e-9));
    // the vertical-cut budget keeps stacked height moderate
    CHECK(height_sum <= kTilingHeightBudget * H + 1.0);
  }
  Instance a = gen_tiling(300, 10.0, 4);
  Instance b = gen_tiling(300, 10.0, 4);
  for (std::size_t i = 0; i < a.rects.size(); ++i) {
    CHECK(a.rects[i].w == b.rects[i].w);
  }
}

TEST_CASE("gen_equal_height wraps a size list") {
  Instance inst = gen_equal_height({0.5, 0.5}, 1.0);
  REQUIRE(inst.rects.size() == 2);
  CHECK(inst.rects[0].h == 1.0);
  CHECK(inst.rects[1].w == 0.5);
}

TEST_CASE("render_svg outline, boxes and determinism") {
  Instance empty;
  empty.name = "empty";
  StripPacking nothing;
  std::string svg_empty = render_svg_string(empty, nothing);
  CHECK(svg_empty.find("<svg") != std::string::npos);
  CHECK(svg_empty.find("class=\"strip\"") != std::string::npos);
  CHECK(svg_empty.find("class=\"item\"") == std::string::npos);

  Instance inst;
  inst.name = "three";
  inst.rects = {{0, 0.6, 0.5}, {1, 0.5, 0.4}, {2, 0.4, 0.3}};
  Decor decor;
  StripPacking p = nfdh(inst, &decor);
  std::string svg = render_svg_string(inst, p, &decor);
  std::size_t boxes = 0, pos = 0;
  while ((pos = svg.find("class=\"item\"", pos)) != std::string::npos) {
    ++boxes;
    pos += 10;
  }
  CHECK(boxes == 3);
  std::size_t lines = 0;
  pos = 0;
  while ((pos = svg.find("class=\"band\"", pos)) != std::string::npos) {
    ++lines;
    pos += 10;
  }
  CHECK(lines == 2);  // two levels

  CHECK(svg == render_svg_string(inst, p, &decor));  // byte-identical

  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / "packkit_svg_test";
  fs::create_directories(dir);
  std::string path = (dir / "out.svg").string();
  render_svg(inst, p, path, &decor);
  std::ifstream in(path, std::ios::binary);
  std::string from_file((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  CHECK(from_file == svg);
  fs::remove_all(dir);
}

TEST_CASE("bench produces one validated row per pair with stable columns") {
  std::vector<Instance> instances{gen_tiling(200, 8.0, 3)};
  AlgoConfig cfg;
  cfg.c = 2.0;
  std::vector<BenchRecord> records = run_bench(instances, {"nfdh", "bp-ffd"}, cfg);
  REQUIRE(records.size() == 2);
  for (const BenchRecord& r : records) {
    CHECK(r.ratio >= 1.0 - kTol);  // known_opt is the true optimum
    CHECK(r.lb == doctest::Approx(8.0));
  }
  CHECK(records[0].algorithm == "nfdh");
  CHECK(records[1].algorithm == "bp-ffd");
  CHECK(records[1].c == 2.0);

  std::string csv = bench_to_csv(records);
  CHECK(csv.rfind("instance,algorithm,c,r,eps,k,height,lower_bound,known_opt,ratio,wall_ms\n",
                  0) == 0);
  // one header plus one line per record, each with 10 commas
  std::size_t rows = 0, pos = 0;
  while ((pos = csv.find('\n', pos)) != std::string::npos) {
    ++rows;
    ++pos;
  }
  CHECK(rows == 3);
}

TEST_CASE("measured online ratios stay under the analytic bound") {
  // On known-optimum tilings the measured height over the optimum must stay
  // below factor * ratio_upper_bound once the additive band/shelf constant is
  // spread over the optimum.
  SuperHarmonicParams params = SuperHarmonicParams::harmonic(6);
  const double r = 0.8, c = 4.0;
  GpConfig config(r, c, params);
  double factor = std::max(c / (c - 1.0), 1.0 / r);
  double bound = ratio_upper_bound(params).value;
  double additive = c * (3.0 * params.k * params.k + 3.0 * params.k + 1.0) + 1.0 / (1.0 - r) + 1.0;
  for (std::uint64_t seed : {21ull, 22ull, 23ull}) {
    Instance inst = gen_tiling(1200, 40.0, seed);
    StripPacking p = gp_run(inst, config);
    CHECK(validate_packing(inst, p).ok());
    double denom = *inst.known_opt;
    CHECK(p.height / denom <= factor * bound + additive / denom);
  }
}

TEST_CASE("make_algorithm rejects unknown tokens") {
  AlgoConfig cfg;
  CHECK_THROWS_AS(make_algorithm("quantum-pack", cfg), std::invalid_argument);
  CHECK_THROWS_AS(make_algorithm("gp", cfg), std::invalid_argument);  // params missing
  cfg.params = SuperHarmonicParams::harmonic(3);
  cfg.have_params = true;
  NamedAlgorithm gp = make_algorithm("gp", cfg);
  CHECK(gp.eps == doctest::Approx(0.25));
}

TEST_CASE("expand_glob matches by final component") {
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / "packkit_glob_test";
  fs::create_directories(dir);
  for (const char* name : {"a1.json", "a2.json", "b1.txt"}) {
    std::ofstream((dir / name)) << "{}";
  }
  std::vector<std::string> hits = expand_glob((dir / "a*.json").string());
  CHECK(hits.size() == 2);
  std::vector<std::string> all = expand_glob((dir / "*").string());
  CHECK(all.size() == 3);
  CHECK(expand_glob((dir / "zzz*.json").string()).empty());
  fs::remove_all(dir);
}
