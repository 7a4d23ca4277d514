#pragma once

#include <string>

#include "triplane/triplane.h"

namespace triplane {

enum class DiagramFileKind { TriPlane, Marked };

// Either a tri-plane file ("triplane v1") or a marked-diagram file
// ("chdiagram v1"), decided by the header line.
struct DiagramFile {
    DiagramFileKind kind = DiagramFileKind::TriPlane;
    TriPlaneDiagram triplane;
    MarkedWord marked;
};

// Canonical serializations; parse(to_file_text(x)) always returns x.
std::string to_file_text(const TriPlaneDiagram& d);
std::string to_file_text(const MarkedWord& m);

// Accepts blank lines and '#' comment lines anywhere. Throws Error on
// malformed input.
DiagramFile parse_diagram_text(const std::string& text);

DiagramFile read_diagram_file(const std::string& path);
std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace triplane
