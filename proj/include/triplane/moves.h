#pragma once

#include <optional>
#include <string>
#include <vector>

#include "triplane/word.h"

namespace triplane {

// One applicable rewrite of a word. `site` is the index of the first slice
// of the pattern (for inserts, the boundary index where slices go in).
struct Rewrite {
    std::string name;
    int site = 0;
    std::string args;  // extra parameters for insert moves, "" otherwise
    SliceSeq word;     // the rewritten word

    std::string log_entry(const std::string& tag) const {
        std::string out = tag + ": " + name + " @ " + std::to_string(site);
        if (!args.empty()) out += ' ' + args;
        return out;
    }
};

struct RewriteOptions {
    bool commutes = true;
    bool snakes = true;  // cancellation of an adjacent cap/cup zigzag
    bool r1 = true;      // kink absorbed into the cap/cup it twists around
    bool r2 = true;
    bool r3 = true;
    bool slides = true;  // crossing carried across an adjacent cap/cup
    bool r1_inserts = false;
    bool r2_inserts = false;
    bool snake_inserts = false;
    bool mark_commutes = false;
};

// Swap of two adjacent slices acting on disjoint strand ranges, with index
// arithmetic. Returns the swapped pair or nothing.
std::optional<std::pair<Slice, Slice>> try_commute(const Slice& first, const Slice& second,
                                                   bool mark_commutes = false);

// All single rewrites of the word (which must start at width 0), in a fixed
// deterministic order. Every result is width-checked.
std::vector<Rewrite> enumerate_rewrites(const SliceSeq& word, const RewriteOptions& opt);

// Re-applies one logged rewrite, validating that it exists at that site.
// `entry` is everything after the "tag: " prefix of Rewrite::log_entry.
SliceSeq apply_rewrite_entry(const SliceSeq& word, const std::string& entry);

}  // namespace triplane
