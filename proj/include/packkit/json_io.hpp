#pragma once

#include <string>
#include <vector>

#include "packkit/binpack.hpp"
#include "packkit/core.hpp"
#include "packkit/super_harmonic.hpp"

namespace packkit {

// Instance file: {"name": str, "known_opt": num?, "rects": [{"id","w","h"}...]}
Instance load_instance(const std::string& path);
void save_instance(const Instance& instance, const std::string& path);

// Packing file: {"height": num, "placements": [{"id","x","y"}...]}
StripPacking load_packing(const std::string& path);
void save_packing(const StripPacking& packing, const std::string& path);

// Parameter files: {"k", "t", "alpha", "beta"?, "Delta"?, "phi"?, "varphi"?}.
// load_params also resolves the built-in names "harmonic:<k>" and "toy3".
SuperHarmonicParams load_params(const std::string& name_or_path);
void save_params(const SuperHarmonicParams& params, const std::string& path);

// Size list: either a bare JSON array or {"sizes": [...]}.
std::vector<double> load_sizes(const std::string& path);

void save_assignment(const BinAssignment& assignment, const std::string& path);

}  // namespace packkit
