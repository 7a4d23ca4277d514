#pragma once

#include <optional>
#include <string>

#include "triplane/triplane.h"

namespace triplane {

// Replaces every marked vertex by its chosen resolution: parallel strands
// (slice deleted) or a turnback (cup then cap at the same position). Which
// one the + sign selects is declared by the mark's axis flag.
SliceSeq resolve_slices(const SliceSeq& slices, int sign);
LinkWord resolve(const MarkedWord& word, int sign);

// Factorization of a marked word in bridge position: caps and crossings,
// then all marks, then crossings and cups.
struct BridgeSplit {
    SliceSeq upper;  // cap/cross prefix
    SliceSeq marks;
    SliceSeq lower;      // cross/cup suffix
    int bridges = 0;     // half the width at the mark level
    int split_level = 0; // slice index of the first lower slice
};

bool is_bridge_position(const MarkedWord& word, std::string* diagnostic = nullptr);

// Throws Error when the word is not in bridge position.
BridgeSplit bridge_split(const MarkedWord& word);

// Best-effort commutation sweep moving caps up, cups down and marks into one
// block. Returns nothing when the budget runs out before reaching bridge
// position; the input is then unusable for conversion as given.
std::optional<MarkedWord> normalize_to_bridge_position(const MarkedWord& word, int budget = 10000);

struct ChValidation {
    Certification minus;
    Certification plus;

    bool valid() const { return minus.certified() && plus.certified(); }
};

// Certifies both global resolutions as unlinks.
ChValidation validate_ch(const MarkedWord& word, const Certifier& certifier);

// Split-and-resolve conversion. The first tangle is the - resolution of the
// upper part, the second the + resolution (cups from turnbacks eliminated),
// the third the reflected lower part. The Euler characteristic of the result
// is cross-checked against the resolution component counts.
TriPlaneDiagram ch_to_triplane(const MarkedWord& word, const Certifier& certifier,
                               int cup_budget = 10000);

// Reference marked-diagram constructions.
MarkedWord ch_sphere();
MarkedWord ch_torus();
MarkedWord ch_projective(int sign);
MarkedWord ch_klein(int sign = 1);
// Doubled plat pattern for the spin of a 2-bridge knot. The plat word uses
// crossings at positions 1 and 2 only and must close to a knot.
MarkedWord ch_spun(const SliceSeq& plat);

// Split union: b adds, euler characteristics add.
MarkedWord ch_disjoint(const MarkedWord& a, const MarkedWord& b);
// Connected sum along the final arcs; both inputs must end with cup1.
// b adds (one destabilization short of the minimum), euler adds minus two.
MarkedWord ch_connect(const MarkedWord& a, const MarkedWord& b);

}  // namespace triplane
