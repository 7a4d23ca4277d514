#pragma once

#include <string>

#include "triplane/io.h"

namespace triplane {

// Static SVG picture: each word drawn as a vertical Morse strip, one row per
// slice, the three tangles of a tri-plane diagram side by side. Integer
// geometry only; identical input yields byte-identical output.
std::string render_svg(const DiagramFile& file);

}  // namespace triplane
