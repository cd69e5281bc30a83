#include "packkit/json_io.hpp"

#include <fstream>
#include <stdexcept>

#include "json.hpp"

namespace packkit {

namespace {

using nlohmann::json;

json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw std::runtime_error(path + ": " + e.what());
  }
  return j;
}

void write_json(const json& j, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << j.dump(2) << "\n";
  if (!out) throw std::runtime_error("write failed for " + path);
}

}  // namespace

Instance load_instance(const std::string& path) {
  json j = read_json(path);
  Instance inst;
  inst.name = j.value("name", path);
  if (j.contains("known_opt") && !j["known_opt"].is_null()) {
    inst.known_opt = j["known_opt"].get<double>();
  }
  if (!j.contains("rects") || !j["rects"].is_array()) {
    throw std::runtime_error(path + ": missing rects array");
  }
  for (const json& rj : j["rects"]) {
    inst.rects.push_back({rj.at("id").get<int>(), rj.at("w").get<double>(),
                          rj.at("h").get<double>()});
  }
  inst.validate();
  return inst;
}

void save_instance(const Instance& instance, const std::string& path) {
  json j;
  j["name"] = instance.name;
  if (instance.known_opt) j["known_opt"] = *instance.known_opt;
  json rects = json::array();
  for (const Rect& r : instance.rects) {
    rects.push_back({{"id", r.id}, {"w", r.w}, {"h", r.h}});
  }
  j["rects"] = std::move(rects);
  write_json(j, path);
}

StripPacking load_packing(const std::string& path) {
  json j = read_json(path);
  StripPacking p;
  p.height = j.at("height").get<double>();
  for (const json& pj : j.at("placements")) {
    p.placements.push_back({pj.at("id").get<int>(), pj.at("x").get<double>(),
                            pj.at("y").get<double>()});
  }
  return p;
}

void save_packing(const StripPacking& packing, const std::string& path) {
  json j;
  j["height"] = packing.height;
  json ps = json::array();
  for (const Placement& p : packing.placements) {
    ps.push_back({{"id", p.rect_id}, {"x", p.x}, {"y", p.y}});
  }
  j["placements"] = std::move(ps);
  write_json(j, path);
}

SuperHarmonicParams load_params(const std::string& name_or_path) {
  if (name_or_path.rfind("harmonic:", 0) == 0) {
    int k = std::stoi(name_or_path.substr(9));
    return SuperHarmonicParams::harmonic(k);
  }
  if (name_or_path == "toy3") return SuperHarmonicParams::toy3();

  json j = read_json(name_or_path);
  SuperHarmonicParams p;
  p.k = j.at("k").get<int>();
  p.t = j.at("t").get<std::vector<double>>();
  if (j.contains("alpha")) p.alpha = j["alpha"].get<std::vector<double>>();
  if (j.contains("beta")) p.beta = j["beta"].get<std::vector<int>>();
  if (j.contains("Delta")) p.Delta = j["Delta"].get<std::vector<double>>();
  if (j.contains("phi")) p.phi = j["phi"].get<std::vector<int>>();
  if (j.contains("varphi")) p.varphi = j["varphi"].get<std::vector<int>>();
  try {
    p.finalize();
  } catch (const std::invalid_argument& e) {
    throw std::runtime_error(name_or_path + ": " + e.what());
  }
  return p;
}

void save_params(const SuperHarmonicParams& params, const std::string& path) {
  json j;
  j["k"] = params.k;
  j["t"] = params.t;
  j["alpha"] = params.alpha;
  j["beta"] = params.beta;
  j["Delta"] = params.Delta;
  j["phi"] = params.phi;
  j["varphi"] = params.varphi;
  write_json(j, path);
}

std::vector<double> load_sizes(const std::string& path) {
  json j = read_json(path);
  if (j.is_array()) return j.get<std::vector<double>>();
  if (j.contains("sizes")) return j["sizes"].get<std::vector<double>>();
  throw std::runtime_error(path + ": expected a size array or {\"sizes\": [...]}");
}

void save_assignment(const BinAssignment& assignment, const std::string& path) {
  json j;
  j["algorithm"] = assignment.algorithm;
  json bins = json::array();
  for (const auto& bin : assignment.bins) {
    json bj = json::array();
    for (const BinItem& it : bin) bj.push_back({{"index", it.index}, {"size", it.size}});
    bins.push_back(std::move(bj));
  }
  j["bins"] = std::move(bins);
  write_json(j, path);
}

}  // namespace packkit
