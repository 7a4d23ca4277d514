#pragma once

#include <compare>
#include <string>

#include "triplane/error.h"

namespace triplane {

enum class SliceKind { Cap, Cup, Cross, Mark };

// Axis of the banded surface at a marked vertex. Under the + resolution a
// Parallel mark smooths to two parallel strands and a Turnback mark smooths
// to a cup/cap turnback; the - resolution swaps the two.
enum class MarkAxis { Parallel, Turnback };

struct Slice {
    SliceKind kind = SliceKind::Cap;
    int pos = 1;                            // leftmost strand touched, 1-based
    int sign = 0;                           // +1/-1 for Cross, 0 otherwise
    MarkAxis axis = MarkAxis::Parallel;     // Mark only

    static Slice cap(int j) { return {SliceKind::Cap, j, 0, MarkAxis::Parallel}; }
    static Slice cup(int j) { return {SliceKind::Cup, j, 0, MarkAxis::Parallel}; }
    static Slice cross(int j, int s) { return {SliceKind::Cross, j, s, MarkAxis::Parallel}; }
    static Slice mark(int j, MarkAxis a) { return {SliceKind::Mark, j, 0, a}; }

    bool operator==(const Slice&) const = default;
    auto operator<=>(const Slice&) const = default;
};

// Width of the strand row below the slice given the width above it.
// Throws Error if the slice is illegal at that width.
int width_after(const Slice& s, int width);

std::string to_token(const Slice& s);
Slice parse_token(const std::string& token);

}  // namespace triplane
