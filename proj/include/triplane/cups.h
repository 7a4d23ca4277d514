#pragma once

#include "triplane/word.h"

namespace triplane {

struct CupElimination {
    TrivialTangleWord word;
    // Signs of kinks that had to be absorbed to free a trapped cup. Empty in
    // the usual case; crossing count is preserved exactly when empty.
    std::vector<int> absorbed_kink_signs;
};

// Rewrites a generic tangle word into a cup-free word with the same arc
// pairing, via commutations, snake cancellations and cap/cup slides. Kink
// absorption is used only as a last resort and reported. Throws Error when
// the budget (number of expanded search states) runs out.
CupElimination eliminate_cups(const GenericTangleWord& word, int budget = 10000);

}  // namespace triplane
