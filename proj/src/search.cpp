#include "triplane/search.h"

#include <algorithm>
#include <array>
#include <chrono>
#include <functional>
#include <limits>
#include <set>
#include <sstream>
#include <tuple>
#include <unordered_set>
#include <utility>

#include "triplane/bracket.h"
#include "triplane/moves.h"
#include "triplane/orient.h"
#include "triplane/trace.h"

namespace triplane {

namespace {

using Clock = std::chrono::steady_clock;

int triple_crossings(const std::array<SliceSeq, 3>& words) {
    return count_crossings(words[0]) + count_crossings(words[1]) + count_crossings(words[2]);
}

std::size_t triple_length(const std::array<SliceSeq, 3>& words) {
    return words[0].size() + words[1].size() + words[2].size();
}

int search_crossings(const SliceSeq& w) { return count_crossings(w); }
int search_crossings(const std::array<SliceSeq, 3>& w) { return triple_crossings(w); }
std::size_t search_length(const SliceSeq& w) { return w.size(); }
std::size_t search_length(const std::array<SliceSeq, 3>& w) { return triple_length(w); }
std::string search_key(const SliceSeq& w) { return to_tokens(w); }
std::string search_key(const std::array<SliceSeq, 3>& w) {
    return to_tokens(w[0]) + '|' + to_tokens(w[1]) + '|' + to_tokens(w[2]);
}

// Bounded best-first frontier ordered by (crossings, length). At most
// `capacity` words are held at once: a push that cannot beat the worst stored
// state is rejected before it allocates anything, the worst state is evicted
// to admit a better one, and popping hands the word out by move so only
// unexpanded states keep theirs. Parent chains survive eviction because an
// evicted state was never expanded and husks keep their entry strings.
// Duplicate suppression hashes the token key; a collision can only hide a
// state, witnesses are still built from applied rewrites.
template <class Word>
class Beam {
public:
    explicit Beam(std::size_t capacity) : capacity_(std::max<std::size_t>(1, capacity)) {}

    bool push(Word w, int parent, std::string entry) {
        const int crossings = search_crossings(w);
        const std::size_t length = search_length(w);
        if (frontier_.size() >= capacity_) {
            const Rank& worst = *std::prev(frontier_.end());
            if (std::pair(crossings, length) >= std::pair(worst.crossings, worst.length))
                return false;
        }
        if (!seen_.insert(std::hash<std::string>{}(search_key(w))).second) return false;
        if (frontier_.size() >= capacity_) {
            auto worst = std::prev(frontier_.end());
            Word().swap(nodes_[worst->index].word);
            frontier_.erase(worst);
        }
        const int index = static_cast<int>(nodes_.size());
        const int depth = parent >= 0 ? nodes_[parent].depth + 1 : 0;
        frontier_.insert(Rank{crossings, length, index});
        nodes_.push_back(Node{std::move(w), parent, std::move(entry), depth});
        return true;
    }

    bool empty() const { return frontier_.empty(); }

    // Removes the best stored state and returns its node index and word.
    std::pair<int, Word> pop() {
        auto best = frontier_.begin();
        const int index = best->index;
        frontier_.erase(best);
        return {index, std::move(nodes_[index].word)};
    }

    int depth(int index) const { return nodes_[index].depth; }

    std::vector<std::string> path(int index) const {
        std::vector<std::string> out;
        for (int at = index; nodes_[at].parent >= 0; at = nodes_[at].parent)
            out.push_back(nodes_[at].entry);
        std::reverse(out.begin(), out.end());
        return out;
    }

private:
    struct Node {
        Word word;
        int parent;
        std::string entry;
        int depth;
    };

    struct Rank {
        int crossings;
        std::size_t length;
        int index;
        bool operator<(const Rank& o) const {
            return std::tie(crossings, length, index) < std::tie(o.crossings, o.length, o.index);
        }
    };

    std::size_t capacity_;
    std::vector<Node> nodes_;
    std::set<Rank> frontier_;
    std::unordered_set<std::uint64_t> seen_;
};

}  // namespace

Certification certify_unlink(const LinkWord& word, const SearchBudget& budget) {
    Certification cert;
    if (count_crossings(word.slices()) == 0) {
        cert.status = Certification::Status::Certified;
        cert.components = closed_components(word.slices());
        return cert;
    }

    OrientedTrace trace = oriented_trace(word);
    cert.components = trace.components;
    for (int i = 0; i < trace.components; ++i)
        for (int j = i + 1; j < trace.components; ++j)
            if (trace.linking[i][j] != 0) {
                cert.status = Certification::Status::Refuted;
                cert.obstruction = "components " + std::to_string(i + 1) + " and " +
                                   std::to_string(j + 1) + " have linking number " +
                                   std::to_string(trace.linking[i][j]);
                return cert;
            }
    if (count_crossings(word.slices()) <= 20 && !bracket_matches_unlink(word, 20)) {
        cert.status = Certification::Status::Refuted;
        cert.obstruction = "kauffman bracket differs from the unlink value";
        return cert;
    }

    RewriteOptions opt;
    opt.r1_inserts = true;
    opt.r2_inserts = true;
    opt.snake_inserts = true;
    const int cap = count_crossings(word.slices()) + 2;

    Beam<SliceSeq> beam(budget.max_states);
    beam.push(word.slices(), -1, "");

    const auto deadline = Clock::now() + std::chrono::milliseconds(budget.time_ms);
    std::mt19937_64 rng(budget.seed);
    std::size_t expanded = 0;
    while (!beam.empty()) {
        if (expanded >= budget.max_states || Clock::now() > deadline) break;
        auto [index, current] = beam.pop();
        ++expanded;
        if (count_crossings(current) == 0) {
            cert.status = Certification::Status::Certified;
            cert.components = closed_components(current);
            cert.witness = beam.path(index);
            return cert;
        }
        if (beam.depth(index) >= budget.max_depth) continue;
        std::vector<Rewrite> children = enumerate_rewrites(current, opt);
        if (budget.seed != 0)
            for (std::size_t i = children.size(); i > 1; --i)
                std::swap(children[i - 1], children[random_below(rng, i)]);
        for (Rewrite& rw : children) {
            if (count_crossings(rw.word) > cap) continue;
            beam.push(std::move(rw.word), index, rw.log_entry("link"));
        }
    }
    // an unknotted word may have been stored right as the budget ran out
    if (!beam.empty()) {
        auto [index, current] = beam.pop();
        if (count_crossings(current) == 0) {
            cert.status = Certification::Status::Certified;
            cert.components = closed_components(current);
            cert.witness = beam.path(index);
            return cert;
        }
    }
    cert.status = Certification::Status::Unknown;
    return cert;
}

Certifier make_certifier(const SearchBudget& budget) {
    return [budget](const LinkWord& word) { return certify_unlink(word, budget); };
}

LinkWord replay_witness(const LinkWord& start, const std::vector<std::string>& witness) {
    SliceSeq word = start.slices();
    for (const std::string& line : witness) {
        const std::string prefix = "link: ";
        if (line.rfind(prefix, 0) != 0) throw Error("witness entry without link tag: " + line);
        word = apply_rewrite_entry(word, line.substr(prefix.size()));
    }
    return LinkWord(std::move(word));
}

int SimplifyResult::crossings() const {
    int total = 0;
    for (int i = 0; i < 3; ++i) total += count_crossings(diagram.tangle(i).slices());
    return total;
}

namespace {

std::string braid_entry(int pos, int sign) {
    return "all: braid @ " + std::to_string(pos) + (sign > 0 ? " +" : " -");
}

std::string destab_entry(int kind, int tangle, int pos) {
    return "all: destabilize @ " + std::to_string(kind) + ' ' + std::to_string(tangle + 1) + ' ' +
           std::to_string(pos);
}

// Interior moves usable on a cup-free tangle word. Snake inserts are
// excluded: they would introduce cups.
RewriteOptions tangle_options(bool inserts) {
    RewriteOptions opt;
    opt.r1_inserts = inserts;
    opt.r2_inserts = inserts;
    return opt;
}

struct TangleReduction {
    SliceSeq word;
    std::vector<std::string> log;
};

// Best-first crossing reduction of one tangle word, no uphill moves.
TangleReduction reduce_tangle(const SliceSeq& start, const std::string& tag, int budget) {
    Beam<SliceSeq> beam(static_cast<std::size_t>(std::max(budget, 1)));
    beam.push(start, -1, "");
    SliceSeq best_word = start;
    int best_index = 0;
    auto best_rank = std::pair(count_crossings(start), start.size());
    const RewriteOptions opt = tangle_options(false);
    int expanded = 0;
    auto note_best = [&](const SliceSeq& w, int index) {
        auto rank = std::pair(count_crossings(w), w.size());
        if (rank < best_rank) {
            best_rank = rank;
            best_word = w;
            best_index = index;
        }
    };
    while (!beam.empty() && expanded < budget) {
        auto [index, current] = beam.pop();
        ++expanded;
        note_best(current, index);
        for (Rewrite& rw : enumerate_rewrites(current, opt))
            beam.push(std::move(rw.word), index, rw.log_entry(tag));
    }
    while (!beam.empty()) {
        auto [index, current] = beam.pop();
        note_best(current, index);
    }
    return {std::move(best_word), beam.path(best_index)};
}

struct TripleReduction {
    std::array<SliceSeq, 3> words;
    std::vector<std::string> log;
};

// Joint search over whole diagrams. Neighbors are single-tangle rewrites
// (kink and crossing-pair inserts allowed) plus mutual braid slices, capped
// a little above the starting crossing count.
TripleReduction reduce_triple(const std::array<SliceSeq, 3>& start, int bridges, int budget,
                              std::uint64_t seed) {
    Beam<std::array<SliceSeq, 3>> beam(static_cast<std::size_t>(std::max(budget, 1)));
    beam.push(start, -1, "");
    std::array<SliceSeq, 3> best_words = start;
    int best_index = 0;
    auto best_rank = std::pair(triple_crossings(start), triple_length(start));
    auto note_best = [&](const std::array<SliceSeq, 3>& w, int index) {
        auto rank = std::pair(triple_crossings(w), triple_length(w));
        if (rank < best_rank) {
            best_rank = rank;
            best_words = w;
            best_index = index;
        }
    };
    const int cap = triple_crossings(start) + 3;
    const RewriteOptions opt = tangle_options(true);
    std::mt19937_64 rng(seed);
    int expanded = 0;
    while (!beam.empty() && expanded < budget) {
        auto [index, current] = beam.pop();
        ++expanded;
        note_best(current, index);

        struct Child {
            std::array<SliceSeq, 3> words;
            std::string entry;
        };
        std::vector<Child> children;
        for (int i = 0; i < 3; ++i) {
            std::string tag = "D" + std::to_string(i + 1);
            for (Rewrite& rw : enumerate_rewrites(current[i], opt)) {
                std::array<SliceSeq, 3> words = current;
                words[i] = std::move(rw.word);
                if (triple_crossings(words) > cap) continue;
                children.push_back({std::move(words), rw.log_entry(tag)});
            }
        }
        if (triple_crossings(current) + 3 <= cap) {
            for (int pos = 1; pos <= 2 * bridges - 1; ++pos)
                for (int sign : {1, -1}) {
                    std::array<SliceSeq, 3> words = current;
                    for (auto& w : words) w.push_back(Slice::cross(pos, sign));
                    children.push_back({std::move(words), braid_entry(pos, sign)});
                }
        }
        if (seed != 0)
            for (std::size_t i = children.size(); i > 1; --i)
                std::swap(children[i - 1], children[random_below(rng, i)]);
        for (Child& child : children) beam.push(std::move(child.words), index, std::move(child.entry));
    }
    while (!beam.empty()) {
        auto [index, current] = beam.pop();
        note_best(current, index);
    }
    return {best_words, beam.path(best_index)};
}

TriPlaneDiagram from_words(const std::array<SliceSeq, 3>& words) {
    return TriPlaneDiagram(TrivialTangleWord(words[0]), TrivialTangleWord(words[1]),
                           TrivialTangleWord(words[2]));
}

// Appending one or two mutual braid slices can lower the joint crossing
// bound even when every tangle is already minimal for its own arc pairing.
// Probes each short braid sequence with a cheap per-tangle reduction and
// returns the first strict improvement. Depth-two probes stay within
// adjacent braid positions; distant transpositions act independently and
// are covered by two depth-one accepts.
std::optional<TripleReduction> braid_descent(const std::array<SliceSeq, 3>& start, int bridges,
                                             int probe_budget) {
    const int before = triple_crossings(start);
    if (before == 0) return std::nullopt;
    const int top = 2 * bridges - 1;
    std::vector<std::vector<std::pair<int, int>>> sequences;
    for (int pos = 1; pos <= top; ++pos)
        for (int sign : {1, -1}) sequences.push_back({{pos, sign}});
    for (int p1 = 1; p1 <= top; ++p1)
        for (int s1 : {1, -1})
            for (int p2 = std::max(1, p1 - 1); p2 <= std::min(top, p1 + 1); ++p2)
                for (int s2 : {1, -1}) {
                    if (p1 == p2 && s1 == -s2) continue;
                    sequences.push_back({{p1, s1}, {p2, s2}});
                }
    for (const auto& seq : sequences) {
        TripleReduction probe{start, {}};
        for (auto [pos, sign] : seq) {
            for (SliceSeq& w : probe.words) w.push_back(Slice::cross(pos, sign));
            probe.log.push_back(braid_entry(pos, sign));
        }
        for (int i = 0; i < 3; ++i) {
            TangleReduction red =
                reduce_tangle(probe.words[i], "D" + std::to_string(i + 1), probe_budget);
            probe.words[i] = std::move(red.word);
            probe.log.insert(probe.log.end(), red.log.begin(), red.log.end());
        }
        if (triple_crossings(probe.words) < before) return probe;
    }
    return std::nullopt;
}

}  // namespace

SimplifyResult simplify_triplane(const TriPlaneDiagram& start, const SimplifyOptions& opt) {
    SimplifyResult result{start, {}};
    Certifier certifier = make_certifier(opt.certifier);
    for (int round = 0; round < 8; ++round) {
        bool changed = false;

        for (int i = 0; i < 3; ++i) {
            const SliceSeq& word = result.diagram.tangle(i).slices();
            TangleReduction red = reduce_tangle(word, "D" + std::to_string(i + 1), opt.budget);
            if (red.word == word) continue;
            std::array<TrivialTangleWord, 3> words = result.diagram.tangles();
            words[i] = TrivialTangleWord(red.word);
            result.diagram = TriPlaneDiagram(words[0], words[1], words[2]);
            result.log.insert(result.log.end(), red.log.begin(), red.log.end());
            changed = true;
        }

        while (opt.allow_destabilize) {
            auto destab = destabilize(result.diagram, certifier);
            if (!destab) break;
            result.log.push_back(destab_entry(destab->kind, destab->tangle, destab->pos));
            result.diagram = destab->diagram;
            changed = true;
        }

        std::array<SliceSeq, 3> words{result.diagram.tangle(0).slices(),
                                      result.diagram.tangle(1).slices(),
                                      result.diagram.tangle(2).slices()};
        TripleReduction joint =
            reduce_triple(words, result.diagram.bridges(), opt.budget, opt.seed);
        auto before = std::pair(triple_crossings(words), triple_length(words));
        auto after = std::pair(triple_crossings(joint.words), triple_length(joint.words));
        if (after < before) {
            result.diagram = from_words(joint.words);
            result.log.insert(result.log.end(), joint.log.begin(), joint.log.end());
            changed = true;
        }

        if (!changed) {
            words = {result.diagram.tangle(0).slices(), result.diagram.tangle(1).slices(),
                     result.diagram.tangle(2).slices()};
            auto descent = braid_descent(words, result.diagram.bridges(),
                                         std::min(opt.budget, 400));
            if (descent) {
                result.diagram = from_words(descent->words);
                result.log.insert(result.log.end(), descent->log.begin(), descent->log.end());
                changed = true;
            }
        }

        if (!changed) break;
    }
    return result;
}

TriPlaneDiagram replay_simplification(const TriPlaneDiagram& start,
                                      const std::vector<std::string>& log) {
    TriPlaneDiagram current = start;
    for (const std::string& line : log) {
        auto colon = line.find(": ");
        if (colon == std::string::npos) throw Error("malformed log entry: " + line);
        std::string tag = line.substr(0, colon);
        std::string rest = line.substr(colon + 2);
        if (tag == "D1" || tag == "D2" || tag == "D3") {
            int i = tag[1] - '1';
            SliceSeq next = apply_rewrite_entry(current.tangle(i).slices(), rest);
            std::array<TrivialTangleWord, 3> words = current.tangles();
            words[i] = TrivialTangleWord(std::move(next));
            current = TriPlaneDiagram(words[0], words[1], words[2]);
            continue;
        }
        if (tag != "all") throw Error("unknown log tag: " + tag);
        auto at = rest.find(" @ ");
        if (at == std::string::npos) throw Error("malformed log entry: " + line);
        std::string name = rest.substr(0, at);
        std::istringstream args(rest.substr(at + 3));
        if (name == "braid") {
            int pos = 0;
            std::string sign;
            args >> pos >> sign;
            if (pos < 1 || (sign != "+" && sign != "-"))
                throw Error("malformed braid entry: " + line);
            current = mutual_braid(current, pos, sign == "+" ? 1 : -1);
            continue;
        }
        if (name == "destabilize") {
            int kind = 0, tangle = 0, pos = 0;
            args >> kind >> tangle >> pos;
            auto reduced = remove_stabilization(current, kind, tangle - 1, pos);
            if (!reduced) throw Error("destabilization does not apply: " + line);
            current = *reduced;
            continue;
        }
        throw Error("unknown log move: " + line);
    }
    return current;
}

std::vector<TriPlaneDiagram> enumerate_zero_crossing(int bridges) {
    if (bridges < 1) throw Error("bridge number must be at least 1");
    std::vector<TrivialTangleWord> words;
    for (const Matching& m : noncrossing_matchings(bridges)) words.push_back(matching_to_word(m));
    std::vector<TriPlaneDiagram> out;
    out.reserve(words.size() * words.size() * words.size());
    for (const TrivialTangleWord& a : words)
        for (const TrivialTangleWord& b : words)
            for (const TrivialTangleWord& c : words) out.emplace_back(a, b, c);
    return out;
}

std::uint64_t random_below(std::mt19937_64& rng, std::uint64_t n) {
    if (n == 0) throw Error("empty range");
    const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
    const std::uint64_t limit = max - max % n;
    std::uint64_t v = rng();
    while (v >= limit) v = rng();
    return v % n;
}

TriPlaneDiagram random_valid_diagram(int bridges, int crossing_budget, std::uint64_t seed) {
    if (bridges < 1) throw Error("bridge number must be at least 1");
    if (crossing_budget < 0) crossing_budget = 0;
    std::mt19937_64 rng(seed);
    std::vector<Matching> matchings = noncrossing_matchings(bridges);
    auto pick_word = [&] { return matching_to_word(matchings[random_below(rng, matchings.size())]); };
    TriPlaneDiagram diagram(pick_word(), pick_word(), pick_word());

    const RewriteOptions opt = tangle_options(true);
    const int steps = 6 * bridges + 2 * crossing_budget + 8;
    for (int step = 0; step < steps; ++step) {
        int total = 0;
        for (int i = 0; i < 3; ++i) total += count_crossings(diagram.tangle(i).slices());
        bool can_braid = total + 3 <= crossing_budget;
        int choice = static_cast<int>(random_below(rng, can_braid ? 4 : 3));
        if (choice == 3) {
            int pos = 1 + static_cast<int>(random_below(rng, 2 * bridges - 1));
            int sign = random_below(rng, 2) == 0 ? 1 : -1;
            diagram = mutual_braid(diagram, pos, sign);
            continue;
        }
        const SliceSeq& word = diagram.tangle(choice).slices();
        std::vector<Rewrite> rewrites = enumerate_rewrites(word, opt);
        std::vector<const Rewrite*> fitting;
        for (const Rewrite& rw : rewrites) {
            int delta = count_crossings(rw.word) - count_crossings(word);
            if (total + delta <= crossing_budget) fitting.push_back(&rw);
        }
        if (fitting.empty()) continue;
        const Rewrite* rw = fitting[random_below(rng, fitting.size())];
        std::array<TrivialTangleWord, 3> words = diagram.tangles();
        words[choice] = TrivialTangleWord(rw->word);
        diagram = TriPlaneDiagram(words[0], words[1], words[2]);
    }
    return diagram;
}

}  // namespace triplane
