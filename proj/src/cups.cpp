#include "triplane/cups.h"

#include <map>
#include <set>
#include <tuple>

#include "triplane/moves.h"
#include "triplane/trace.h"

namespace triplane {

namespace {

struct Node {
    SliceSeq word;
    std::vector<int> absorbed;
};

std::optional<CupElimination> search(const SliceSeq& start, bool allow_r1, int budget) {
    RewriteOptions opt;
    opt.r1 = allow_r1;
    opt.r2 = false;
    opt.r3 = false;

    using Key = std::tuple<int, size_t, size_t, std::string>;  // cups, absorbed, length, word
    std::map<Key, Node> frontier;
    std::set<std::string> seen;
    auto enqueue = [&](SliceSeq word, std::vector<int> absorbed) {
        std::string serial = to_tokens(word);
        if (!seen.insert(serial).second) return;
        Key key{count_kind(word, SliceKind::Cup), absorbed.size(), word.size(), serial};
        frontier.emplace(std::move(key), Node{std::move(word), std::move(absorbed)});
    };
    enqueue(start, {});

    for (int step = 0; step < budget && !frontier.empty(); ++step) {
        auto it = frontier.begin();
        Node node = std::move(it->second);
        frontier.erase(it);
        if (count_kind(node.word, SliceKind::Cup) == 0)
            return CupElimination{TrivialTangleWord(node.word), node.absorbed};
        for (Rewrite& rw : enumerate_rewrites(node.word, opt)) {
            std::vector<int> absorbed = node.absorbed;
            if (rw.name == "r1") {
                const Slice& gone = node.word[rw.site].kind == SliceKind::Cross
                                        ? node.word[rw.site]
                                        : node.word[rw.site + 1];
                absorbed.push_back(gone.sign);
            }
            enqueue(std::move(rw.word), std::move(absorbed));
        }
    }
    return std::nullopt;
}

}  // namespace

CupElimination eliminate_cups(const GenericTangleWord& word, int budget) {
    if (count_kind(word.slices(), SliceKind::Cup) == 0)
        return {TrivialTangleWord(word.slices()), {}};
    if (count_crossings(word.slices()) == 0)
        return {matching_to_word(arc_pairing(word.slices())), {}};
    if (auto found = search(word.slices(), false, budget)) return *found;
    if (auto found = search(word.slices(), true, budget)) return *found;
    throw Error("cup elimination budget exhausted");
}

}  // namespace triplane
