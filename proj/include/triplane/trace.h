#pragma once

#include <utility>
#include <vector>

#include "triplane/slice.h"

namespace triplane {

class TrivialTangleWord;
using SliceSeq = std::vector<Slice>;

// Perfect matching on {1..2b}, pairs stored with first < second, sorted.
struct Matching {
    std::vector<std::pair<int, int>> pairs;

    int points() const { return static_cast<int>(pairs.size()) * 2; }
    bool operator==(const Matching&) const = default;
    auto operator<=>(const Matching&) const = default;
};

// Endpoint pairing of a tangle word (width 0 to 2b). Marks trace as strand
// transpositions. Throws Error if any cup closes a component.
Matching arc_pairing(const SliceSeq& slices);

// Number of closed components of a word running from width 0 to width 0.
int closed_components(const SliceSeq& slices);

// Components of the union of two matchings on the same point set.
int cycle_count(const Matching& a, const Matching& b);

bool is_noncrossing(const Matching& m);

// Crossingless word realizing a noncrossing matching: caps read top to
// bottom, innermost pairs born last. Throws Error on a crossing matching.
TrivialTangleWord matching_to_word(const Matching& m);

std::vector<Matching> noncrossing_matchings(int b);

}  // namespace triplane
