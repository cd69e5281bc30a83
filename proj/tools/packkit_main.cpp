// packkit command line: instance generation, offline/online strip packing,
// 1-D bin packing, weighting-system analysis, benchmarking and SVG rendering.
// Exit codes: 0 success, 1 packing validation failure, 2 usage error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "packkit/analysis.hpp"
#include "packkit/bench.hpp"
#include "packkit/binpack.hpp"
#include "packkit/core.hpp"
#include "packkit/generators.hpp"
#include "packkit/json_io.hpp"
#include "packkit/strip_offline.hpp"
#include "packkit/strip_online.hpp"
#include "packkit/svg_render.hpp"

namespace {

using namespace packkit;

struct ValidationFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<std::string> split_list(const std::string& csv) {
  std::vector<std::string> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << text;
}

StripPacking checked_pack(const Instance& inst, const NamedAlgorithm& alg, Decor* decor) {
  StripPacking packing = alg.run(inst, decor);
  ValidationReport report = validate_packing(inst, packing);
  if (!report.ok()) {
    throw ValidationFailure("packing by " + alg.name + " on " + inst.name + " failed validation:\n" +
                            report.to_string());
  }
  return packing;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"strip packing and bin packing toolkit"};
  app.require_subcommand(1);

  std::uint64_t seed = 1;
  std::string global_out;
  std::string format = "csv";
  app.add_option("--seed", seed, "default seed for generators");
  app.add_option("--out", global_out, "default output path");
  app.add_option("--format", format, "bench output format")->check(CLI::IsMember({"csv", "json"}));

  // gen
  CLI::App* gen = app.add_subcommand("gen", "generate instances");
  gen->require_subcommand(1);
  int gen_n = 100;
  double w_lo = 0.0, w_hi = 1.0, h_lo = 0.0, h_hi = 1.0, tiling_h = 10.0, equal_h = 1.0;
  std::string gen_out, sizes_path;
  auto add_gen_common = [&](CLI::App* sub) {
    sub->add_option("-n,--num", gen_n, "number of rects");
    sub->add_option("-o,--out", gen_out, "output instance file");
    sub->add_option("--seed", seed, "generator seed");
  };
  CLI::App* gen_uniform_cmd = gen->add_subcommand("uniform", "independent uniform rects");
  add_gen_common(gen_uniform_cmd);
  gen_uniform_cmd->add_option("--w-min", w_lo);
  gen_uniform_cmd->add_option("--w-max", w_hi);
  gen_uniform_cmd->add_option("--h-min", h_lo);
  gen_uniform_cmd->add_option("--h-max", h_hi);
  CLI::App* gen_tiling_cmd = gen->add_subcommand("tiling", "guillotine tiling with known optimum");
  add_gen_common(gen_tiling_cmd);
  gen_tiling_cmd->add_option("--height", tiling_h, "strip height = known optimum");
  CLI::App* gen_equal_cmd = gen->add_subcommand("equal", "equal-height rects from a size list");
  add_gen_common(gen_equal_cmd);
  gen_equal_cmd->add_option("--sizes", sizes_path, "JSON size list")->required();
  gen_equal_cmd->add_option("--height", equal_h, "common rect height");

  // pack offline / pack online
  CLI::App* pack = app.add_subcommand("pack", "run a strip packing algorithm");
  pack->require_subcommand(1);
  std::string alg_token, inst_path, out_path, svg_path, params_ref;
  double c = 2.0, r = 0.5, eps_flag = -1.0;
  CLI::App* pack_offline = pack->add_subcommand("offline", "batch-and-pack and level algorithms");
  pack_offline->add_option("--alg", alg_token,
                           "bp-nf|bp-ff|bp-ffd|bp-harmonic:<k>|bp-sh:<params>|nfdh|ffdh")
      ->required();
  pack_offline->add_option("--c", c, "slip/band height (> 1)");
  pack_offline->add_option("-i,--instance", inst_path)->required();
  pack_offline->add_option("-o,--out", out_path, "packing output file");
  pack_offline->add_option("--svg", svg_path, "also render the packing");
  CLI::App* pack_online = pack->add_subcommand("online", "group-and-pack and shelf algorithms");
  pack_online->add_option("--alg", alg_token, "gp|shelf-nf|shelf-ff|shelf-harmonic:<k>")
      ->required();
  pack_online->add_option("--eps", eps_flag, "wide/narrow threshold (must equal params eps)");
  pack_online->add_option("--r", r, "shelf rounding base in (0,1)");
  pack_online->add_option("--c", c, "slip/band height (> 1)");
  pack_online->add_option("--params", params_ref, "Super Harmonic params (name or file)");
  pack_online->add_option("-i,--instance", inst_path)->required();
  pack_online->add_option("-o,--out", out_path, "packing output file");
  pack_online->add_option("--svg", svg_path, "also render the packing");

  // binpack
  CLI::App* binpack_cmd = app.add_subcommand("binpack", "1-D bin packing on a size list");
  std::string bp_alg = "ffd";
  binpack_cmd->add_option("--alg", bp_alg, "nf|ff|ffd|harmonic:<k>|sh:<params>|opt");
  binpack_cmd->add_option("-i,--sizes", sizes_path, "JSON size list")->required();
  binpack_cmd->add_option("-o,--out", out_path, "assignment output file");

  // analyze
  CLI::App* analyze = app.add_subcommand("analyze", "weighting system analysis");
  analyze->require_subcommand(1);
  std::uint64_t cap = kDefaultPatternCap;
  bool maximal_only = false;
  CLI::App* analyze_bound = analyze->add_subcommand("bound", "worst-case ratio upper bound");
  analyze_bound->add_option("--params", params_ref, "params name or file")->required();
  analyze_bound->add_flag("--maximal-only", maximal_only, "enumerate maximal patterns only");
  analyze_bound->add_option("--cap", cap, "pattern enumeration cap");
  CLI::App* analyze_weight = analyze->add_subcommand("weight", "total weight of an instance");
  analyze_weight->add_option("-i,--instance", inst_path)->required();
  analyze_weight->add_option("--params", params_ref, "params name or file")->required();

  // bench
  CLI::App* bench_cmd = app.add_subcommand("bench", "run algorithms over an instance set");
  std::string glob, algs_csv;
  bench_cmd->add_option("--instances", glob, "instance file glob")->required();
  bench_cmd->add_option("--algs", algs_csv, "comma-separated algorithm tokens")->required();
  bench_cmd->add_option("--c", c, "c for offline/online tokens");
  bench_cmd->add_option("--r", r, "r for online tokens");
  bench_cmd->add_option("--params", params_ref, "params for gp");
  bench_cmd->add_option("-o,--out", out_path, "output file (default stdout)");

  // render
  CLI::App* render_cmd = app.add_subcommand("render", "render a packing to SVG");
  std::string packing_path;
  render_cmd->add_option("-i,--instance", inst_path)->required();
  render_cmd->add_option("-p,--packing", packing_path)->required();
  render_cmd->add_option("-o,--out", out_path, "SVG output file");

  // validate
  CLI::App* validate_cmd = app.add_subcommand("validate", "check a packing file");
  validate_cmd->add_option("-i,--instance", inst_path)->required();
  validate_cmd->add_option("-p,--packing", packing_path)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (gen->parsed()) {
      Instance inst;
      if (gen_uniform_cmd->parsed()) {
        inst = gen_uniform(gen_n, seed, w_lo, w_hi, h_lo, h_hi);
      } else if (gen_tiling_cmd->parsed()) {
        inst = gen_tiling(gen_n, tiling_h, seed);
      } else {
        inst = gen_equal_height(load_sizes(sizes_path), equal_h);
      }
      std::string out = !gen_out.empty() ? gen_out : global_out;
      if (out.empty()) throw std::runtime_error("gen: missing -o/--out");
      save_instance(inst, out);
      std::printf("wrote %s (%zu rects)\n", out.c_str(), inst.rects.size());
      return 0;
    }

    if (pack->parsed()) {
      Instance inst = load_instance(inst_path);
      AlgoConfig config;
      config.c = c;
      config.r = r;
      if (!params_ref.empty()) {
        config.params = load_params(params_ref);
        config.have_params = true;
        if (eps_flag >= 0.0 && std::abs(eps_flag - config.params.eps()) > 1e-12) {
          throw std::runtime_error("--eps does not match the params' t_{k+1}");
        }
      }
      NamedAlgorithm alg = make_algorithm(alg_token, config);
      Decor decor;
      StripPacking packing = checked_pack(inst, alg, &decor);
      std::string out = !out_path.empty() ? out_path : global_out;
      if (!out.empty()) save_packing(packing, out);
      if (!svg_path.empty()) render_svg(inst, packing, svg_path, &decor);
      std::printf("%s: height %.9g, lower bound %.9g\n", alg.name.c_str(), packing.height,
                  lower_bound(inst));
      return 0;
    }

    if (binpack_cmd->parsed()) {
      std::vector<double> sizes = load_sizes(sizes_path);
      if (bp_alg == "opt") {
        std::printf("opt: %d bins\n", bin_opt_bruteforce(sizes));
        return 0;
      }
      BinAssignment assignment;
      if (bp_alg == "nf") assignment = next_fit(sizes);
      else if (bp_alg == "ff") assignment = first_fit(sizes);
      else if (bp_alg == "ffd") assignment = first_fit_decreasing(sizes);
      else if (bp_alg.rfind("harmonic:", 0) == 0)
        assignment = harmonic_k(sizes, std::stoi(bp_alg.substr(9)));
      else if (bp_alg.rfind("sh:", 0) == 0)
        assignment = super_harmonic(sizes, load_params(bp_alg.substr(3)));
      else throw std::runtime_error("unknown binpack algorithm '" + bp_alg + "'");
      std::string out = !out_path.empty() ? out_path : global_out;
      if (!out.empty()) save_assignment(assignment, out);
      std::printf("%s: %d bins for %zu items\n", assignment.algorithm.c_str(),
                  assignment.bin_count(), sizes.size());
      return 0;
    }

    if (analyze->parsed()) {
      SuperHarmonicParams params = load_params(params_ref);
      if (analyze_bound->parsed()) {
        RatioBound bound = ratio_upper_bound(params, cap, maximal_only);
        std::printf("patterns: %llu\n", static_cast<unsigned long long>(bound.pattern_count));
        std::printf("bound: %.9f (branch j=%d)\n", bound.value, bound.branch);
        if (bound.support_b) {
          std::printf("argmax: %.6f * %s + %.6f * %s\n", bound.mix,
                      bound.support_a.to_string().c_str(), 1.0 - bound.mix,
                      bound.support_b->to_string().c_str());
        } else {
          std::printf("argmax: %s\n", bound.support_a.to_string().c_str());
        }
      } else {
        Instance inst = load_instance(inst_path);
        WeightVector total(params.K());
        for (const Rect& rect : inst.rects) total += weight_of_rect(rect.w, rect.h, params);
        std::printf("weight:");
        std::printf(" b0=%.9g", total.b(0));
        for (int j = 1; j <= params.K(); ++j) std::printf(" b%d=%.9g", j, total.b(j));
        for (int j = 1; j <= params.K(); ++j) std::printf(" r%d=%.9g", j, total.r(j));
        std::printf("\nconsolidated: %.9g\n", consolidate(total));
      }
      return 0;
    }

    if (bench_cmd->parsed()) {
      std::vector<std::string> paths = expand_glob(glob);
      if (paths.empty()) throw std::runtime_error("bench: no instances match " + glob);
      std::vector<Instance> instances;
      for (const std::string& p : paths) instances.push_back(load_instance(p));
      AlgoConfig config;
      config.c = c;
      config.r = r;
      if (!params_ref.empty()) {
        config.params = load_params(params_ref);
        config.have_params = true;
      }
      std::vector<BenchRecord> records;
      try {
        records = run_bench(instances, split_list(algs_csv), config);
      } catch (const BenchValidationError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
      }
      std::string out = !out_path.empty() ? out_path : global_out;
      write_text(out, format == "json" ? bench_to_json(records) : bench_to_csv(records));
      if (!out.empty()) std::printf("wrote %zu records to %s\n", records.size(), out.c_str());
      return 0;
    }

    if (render_cmd->parsed()) {
      Instance inst = load_instance(inst_path);
      StripPacking packing = load_packing(packing_path);
      std::string out = !out_path.empty() ? out_path : global_out;
      if (out.empty()) throw std::runtime_error("render: missing -o/--out");
      render_svg(inst, packing, out);
      std::printf("wrote %s\n", out.c_str());
      return 0;
    }

    if (validate_cmd->parsed()) {
      Instance inst = load_instance(inst_path);
      StripPacking packing = load_packing(packing_path);
      ValidationReport report = validate_packing(inst, packing);
      if (!report.ok()) {
        std::fprintf(stderr, "%s\n", report.to_string().c_str());
        return 1;
      }
      std::printf("ok\n");
      return 0;
    }
  } catch (const ValidationFailure& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  return 2;
}
