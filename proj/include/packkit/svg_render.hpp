#pragma once

#include <string>

#include "packkit/core.hpp"
#include "packkit/decor.hpp"

namespace packkit {

// Renders a packing to an SVG file: strip outline, one filled box per rect
// colored by its decor class (rect id when no decor is given), slip boxes and
// band/level lines as dashed overlays. One strip width = 600 units, height
// scaled uniformly. Output bytes are a pure function of the inputs.
// Throws std::runtime_error on I/O failure, naming the path.
void render_svg(const Instance& instance, const StripPacking& packing,
                const std::string& path, const Decor* decor = nullptr);

std::string render_svg_string(const Instance& instance, const StripPacking& packing,
                              const Decor* decor = nullptr);

}  // namespace packkit
