#pragma once

#include <vector>

#include "triplane/word.h"

namespace triplane {

// Orientation-dependent data of a closed mark-free diagram under the
// canonical orientation: each component is oriented so that the left leg of
// its earliest cap points downward.
struct OrientedTrace {
    int components = 0;
    int writhe = 0;
    // Symmetric, zero diagonal. linking[i][j] is the linking number of
    // components i and j; component order follows earliest-cap order.
    std::vector<std::vector<int>> linking;

    bool any_linking() const {
        for (const auto& row : linking)
            for (int v : row)
                if (v != 0) return true;
        return false;
    }
};

OrientedTrace oriented_trace(const LinkWord& word);

int writhe(const LinkWord& word);

}  // namespace triplane
