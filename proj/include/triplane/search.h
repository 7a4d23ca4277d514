#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "triplane/triplane.h"

namespace triplane {

struct SearchBudget {
    std::size_t max_states = 100000;  // stored and expanded states per closure
    int max_depth = 64;               // rewrite steps from the start word
    std::uint64_t seed = 0;           // child-order shuffle, 0 keeps fixed order
    std::int64_t time_ms = 60000;

    bool operator==(const SearchBudget&) const = default;
};

// Decides whether a closed mark-free diagram is an unlink. Certified results
// carry a replayable witness, refuted ones a computable obstruction (nonzero
// linking number, or a bracket polynomial that differs from the unlink
// value). Unknown means the rewrite search ran out of budget while every
// obstruction stayed silent.
Certification certify_unlink(const LinkWord& word, const SearchBudget& budget = {});

Certifier make_certifier(const SearchBudget& budget = {});

// Replays a certification witness step by step, validating each entry, and
// returns the final word. Throws Error on any entry that does not apply.
LinkWord replay_witness(const LinkWord& start, const std::vector<std::string>& witness);

struct SimplifyOptions {
    int budget = 20000;          // stored and expanded states per phase
    std::uint64_t seed = 0;      // neighbor-order shuffle, 0 keeps fixed order
    SearchBudget certifier;      // used to verify destabilizations
    bool allow_destabilize = true;
};

struct SimplifyResult {
    TriPlaneDiagram diagram;
    std::vector<std::string> log;  // replayable move log

    int crossings() const;
};

// Crossing-count reduction: per-tangle rewrite search, verified
// destabilizations, then a joint search over whole diagrams whose extra
// neighbors append a mutual braid slice to all three tangles. Every logged
// move preserves validity and all invariants except crossing counts and, for
// destabilizations, the bridge number.
SimplifyResult simplify_triplane(const TriPlaneDiagram& start, const SimplifyOptions& opt = {});

// Replays a simplification log. Throws Error on any entry that fails.
TriPlaneDiagram replay_simplification(const TriPlaneDiagram& start,
                                      const std::vector<std::string>& log);

// All crossingless diagrams with the given bridge number, in a fixed order.
// There are Catalan(b)^3 of them.
std::vector<TriPlaneDiagram> enumerate_zero_crossing(int bridges);

// Deterministic pseudorandom valid diagram: random crossingless start, then
// random validity-preserving moves until the crossing count approaches the
// budget. Identical across platforms for a fixed seed.
TriPlaneDiagram random_valid_diagram(int bridges, int crossing_budget, std::uint64_t seed);

// Uniform integer in [0, n), n >= 1, by rejection from the raw 64-bit
// stream. std::uniform_int_distribution varies between standard libraries.
std::uint64_t random_below(std::mt19937_64& rng, std::uint64_t n);

}  // namespace triplane
