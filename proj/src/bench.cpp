#include "packkit/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <sstream>
#include <stdexcept>

#include "packkit/binpack.hpp"
#include "packkit/json_io.hpp"
#include "packkit/strip_offline.hpp"
#include "packkit/strip_online.hpp"

namespace packkit {

namespace fs = std::filesystem;

const char* const kBenchCsvHeader =
    "instance,algorithm,c,r,eps,k,height,lower_bound,known_opt,ratio,wall_ms";

namespace {

NamedAlgorithm offline_alg(std::string name, double c, BinAlg alg, int k = -1) {
  NamedAlgorithm a;
  a.name = std::move(name);
  a.c = c;
  a.k = k;
  a.run = [c, alg = std::move(alg)](const Instance& inst, Decor* decor) {
    return bp_pack(inst, c, alg, decor);
  };
  return a;
}

}  // namespace

NamedAlgorithm make_algorithm(const std::string& token, const AlgoConfig& config) {
  NamedAlgorithm a;
  a.name = token;
  if (token == "nfdh") {
    a.run = [](const Instance& inst, Decor* d) { return nfdh(inst, d); };
    return a;
  }
  if (token == "ffdh") {
    a.run = [](const Instance& inst, Decor* d) { return ffdh(inst, d); };
    return a;
  }
  if (token == "bp-nf") return offline_alg(token, config.c, BinAlg::nf());
  if (token == "bp-ff") return offline_alg(token, config.c, BinAlg::ff());
  if (token == "bp-ffd") return offline_alg(token, config.c, BinAlg::ffd());
  if (token.rfind("bp-harmonic:", 0) == 0) {
    int k = std::stoi(token.substr(12));
    return offline_alg(token, config.c, BinAlg::harmonic(k), k);
  }
  if (token.rfind("bp-sh:", 0) == 0) {
    SuperHarmonicParams p = load_params(token.substr(6));
    int k = p.k;
    return offline_alg(token, config.c, BinAlg::super_harmonic(std::move(p)), k);
  }
  if (token == "gp" || token.rfind("gp:", 0) == 0) {
    SuperHarmonicParams p;
    if (token == "gp") {
      if (!config.have_params) throw std::invalid_argument("gp needs --params");
      p = config.params;
    } else {
      p = load_params(token.substr(3));
    }
    GpConfig gc(config.r, config.c, p);
    a.c = gc.c;
    a.r = gc.r;
    a.eps = gc.epsilon;
    a.k = gc.params.k;
    a.run = [gc](const Instance& inst, Decor* d) { return gp_run(inst, gc, d); };
    return a;
  }
  if (token == "shelf-nf" || token == "shelf-ff" || token.rfind("shelf-harmonic:", 0) == 0) {
    ShelfInner inner = ShelfInner::nf();
    if (token == "shelf-ff") inner = ShelfInner::ff();
    if (token.rfind("shelf-harmonic:", 0) == 0) {
      inner = ShelfInner::harmonic(std::stoi(token.substr(15)));
      a.k = inner.k;
    }
    double r = config.r;
    a.r = r;
    a.run = [inner, r](const Instance& inst, Decor* d) { return shelf_pack(inst, inner, r, d); };
    return a;
  }
  throw std::invalid_argument("unknown algorithm '" + token + "'");
}

namespace {

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.9g", v);
  return buf;
}

}  // namespace

std::vector<BenchRecord> run_bench(const std::vector<Instance>& instances,
                                   const std::vector<std::string>& algo_tokens,
                                   const AlgoConfig& config) {
  std::vector<NamedAlgorithm> algorithms;
  for (const std::string& token : algo_tokens) algorithms.push_back(make_algorithm(token, config));

  std::vector<BenchRecord> records;
  for (const Instance& inst : instances) {
    double lb = lower_bound(inst);
    for (const NamedAlgorithm& alg : algorithms) {
      auto start = std::chrono::steady_clock::now();
      StripPacking packing = alg.run(inst, nullptr);
      auto stop = std::chrono::steady_clock::now();

      ValidationReport report = validate_packing(inst, packing);
      if (!report.ok()) {
        throw BenchValidationError("packing by " + alg.name + " on " + inst.name +
                                   " is invalid:\n" + report.to_string());
      }
      BenchRecord rec;
      rec.instance = inst.name;
      rec.algorithm = alg.name;
      rec.c = alg.c;
      rec.r = alg.r;
      rec.eps = alg.eps;
      rec.k = alg.k;
      rec.height = packing.height;
      rec.lb = lb;
      rec.known_opt = inst.known_opt;
      double denom = std::max(lb, inst.known_opt.value_or(0.0));
      rec.ratio = denom > 0.0 ? packing.height / denom : 0.0;
      rec.wall_ms = std::chrono::duration<double, std::milli>(stop - start).count();
      records.push_back(std::move(rec));
    }
  }
  return records;
}

std::string bench_to_csv(const std::vector<BenchRecord>& records) {
  std::ostringstream os;
  os << kBenchCsvHeader << "\n";
  for (const BenchRecord& r : records) {
    os << r.instance << "," << r.algorithm << ",";
    os << (r.c >= 0 ? fmt(r.c) : "") << ",";
    os << (r.r >= 0 ? fmt(r.r) : "") << ",";
    os << (r.eps >= 0 ? fmt(r.eps) : "") << ",";
    os << (r.k >= 0 ? std::to_string(r.k) : "") << ",";
    os << fmt(r.height) << "," << fmt(r.lb) << ",";
    os << (r.known_opt ? fmt(*r.known_opt) : "") << ",";
    os << fmt(r.ratio) << ",";
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.3f", r.wall_ms);
    os << buf << "\n";
  }
  return os.str();
}

std::string bench_to_json(const std::vector<BenchRecord>& records) {
  std::ostringstream os;
  os << "[\n";
  for (std::size_t i = 0; i < records.size(); ++i) {
    const BenchRecord& r = records[i];
    os << "  {\"instance\":\"" << r.instance << "\",\"algorithm\":\"" << r.algorithm << "\"";
    if (r.c >= 0) os << ",\"c\":" << fmt(r.c);
    if (r.r >= 0) os << ",\"r\":" << fmt(r.r);
    if (r.eps >= 0) os << ",\"eps\":" << fmt(r.eps);
    if (r.k >= 0) os << ",\"k\":" << r.k;
    os << ",\"height\":" << fmt(r.height) << ",\"lower_bound\":" << fmt(r.lb);
    if (r.known_opt) os << ",\"known_opt\":" << fmt(*r.known_opt);
    os << ",\"ratio\":" << fmt(r.ratio) << ",\"wall_ms\":" << fmt(r.wall_ms) << "}";
    os << (i + 1 < records.size() ? ",\n" : "\n");
  }
  os << "]\n";
  return os.str();
}

std::vector<std::string> expand_glob(const std::string& pattern) {
  fs::path p(pattern);
  std::string stem = p.filename().string();
  fs::path dir = p.parent_path();
  if (dir.empty()) dir = ".";
  if (stem.find('*') == std::string::npos && stem.find('?') == std::string::npos) {
    if (fs::exists(p)) return {pattern};
    return {};
  }
  // Translate the glob into a simple anchored matcher ('*' and '?' only).
  auto matches = [&stem](const std::string& name) {
    std::size_t np = 0, sp = 0, star = std::string::npos, star_np = 0;
    while (np < name.size()) {
      if (sp < stem.size() && (stem[sp] == '?' || stem[sp] == name[np])) {
        ++sp, ++np;
      } else if (sp < stem.size() && stem[sp] == '*') {
        star = sp++;
        star_np = np;
      } else if (star != std::string::npos) {
        sp = star + 1;
        np = ++star_np;
      } else {
        return false;
      }
    }
    while (sp < stem.size() && stem[sp] == '*') ++sp;
    return sp == stem.size();
  };
  std::vector<std::string> out;
  if (!fs::is_directory(dir)) return out;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (!entry.is_regular_file()) continue;
    if (matches(entry.path().filename().string())) out.push_back(entry.path().string());
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace packkit
