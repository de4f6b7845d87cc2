#pragma once

#include "stab/geometry.hpp"

#include <optional>
#include <string>

namespace stab::io {

/**
 * SVG 1.1 document: one <polygon> per object (dashed outline when open) and
 * one <line> per solution line, clipped to the padded bounding box of the
 * objects. Output depends only on the arguments.
 */
std::string render_svg(const Instance2D &instance, const std::optional<Solution> &solution = std::nullopt);

} // namespace stab::io
