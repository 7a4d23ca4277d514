#include "triplane/trace.h"

#include <algorithm>
#include <map>
#include <numeric>

#include "triplane/word.h"

namespace triplane {

namespace {

class UnionFind {
public:
    int make() {
        parent_.push_back(static_cast<int>(parent_.size()));
        return parent_.back();
    }
    int find(int x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }
    // Returns false if the two were already joined.
    bool join(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent_[b] = a;
        return true;
    }

private:
    std::vector<int> parent_;
};

struct TraceState {
    UnionFind uf;
    std::vector<int> strand;  // node id per live position, left to right
    int loops = 0;

    void apply(const Slice& s) {
        int w = static_cast<int>(strand.size());
        width_after(s, w);  // validates
        switch (s.kind) {
            case SliceKind::Cap: {
                int n = uf.make();
                strand.insert(strand.begin() + (s.pos - 1), 2, n);
                break;
            }
            case SliceKind::Cup: {
                int a = strand[s.pos - 1];
                int b = strand[s.pos];
                if (!uf.join(a, b)) ++loops;
                strand.erase(strand.begin() + (s.pos - 1), strand.begin() + (s.pos + 1));
                break;
            }
            case SliceKind::Cross:
            case SliceKind::Mark:
                std::swap(strand[s.pos - 1], strand[s.pos]);
                break;
        }
    }
};

}  // namespace

Matching arc_pairing(const SliceSeq& slices) {
    TraceState st;
    for (const Slice& s : slices) {
        st.apply(s);
        if (st.loops > 0) throw Error("tangle word closes a component");
    }
    std::map<int, std::vector<int>> by_root;
    for (size_t p = 0; p < st.strand.size(); ++p)
        by_root[st.uf.find(st.strand[p])].push_back(static_cast<int>(p) + 1);
    Matching m;
    for (auto& [root, ends] : by_root) {
        if (ends.size() != 2) throw Error("arc with " + std::to_string(ends.size()) + " endpoints");
        m.pairs.emplace_back(ends[0], ends[1]);
    }
    std::sort(m.pairs.begin(), m.pairs.end());
    return m;
}

int closed_components(const SliceSeq& slices) {
    TraceState st;
    for (const Slice& s : slices) st.apply(s);
    if (!st.strand.empty()) throw Error("word does not close up to width 0");
    return st.loops;
}

int cycle_count(const Matching& a, const Matching& b) {
    if (a.points() != b.points()) throw Error("matchings on different point sets");
    int n = a.points();
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };
    int merges = 0;
    for (const Matching* m : {&a, &b})
        for (auto [p, q] : m->pairs) {
            int rp = find(p - 1), rq = find(q - 1);
            if (rp != rq) {
                parent[rq] = rp;
                ++merges;
            }
        }
    return n - merges;
}

bool is_noncrossing(const Matching& m) {
    for (auto [a, b] : m.pairs)
        for (auto [c, d] : m.pairs)
            if (a < c && c < b && b < d) return false;
    return true;
}

TrivialTangleWord matching_to_word(const Matching& m) {
    std::vector<int> mate(m.points() + 1, 0);
    for (auto [a, b] : m.pairs) {
        if (a < 1 || b > m.points() || mate[a] || mate[b])
            throw Error("bad matching");
        mate[a] = b;
        mate[b] = a;
    }
    std::vector<int> live(m.points());
    std::iota(live.begin(), live.end(), 1);
    SliceSeq cups;
    while (!live.empty()) {
        size_t i = 0;
        while (i + 1 < live.size() && mate[live[i]] != live[i + 1]) ++i;
        if (i + 1 >= live.size()) throw Error("matching is not noncrossing");
        cups.push_back(Slice::cup(static_cast<int>(i) + 1));
        live.erase(live.begin() + i, live.begin() + i + 2);
    }
    return TrivialTangleWord(reflect(cups));
}

namespace {

std::vector<std::vector<std::pair<int, int>>> matchings_of(int lo, int hi) {
    std::vector<std::vector<std::pair<int, int>>> out;
    if (lo > hi) {
        out.push_back({});
        return out;
    }
    for (int m = lo + 1; m <= hi; m += 2) {
        auto inner = matchings_of(lo + 1, m - 1);
        auto outer = matchings_of(m + 1, hi);
        for (const auto& in : inner)
            for (const auto& ou : outer) {
                std::vector<std::pair<int, int>> pairs;
                pairs.emplace_back(lo, m);
                pairs.insert(pairs.end(), in.begin(), in.end());
                pairs.insert(pairs.end(), ou.begin(), ou.end());
                out.push_back(std::move(pairs));
            }
    }
    return out;
}

}  // namespace

std::vector<Matching> noncrossing_matchings(int b) {
    std::vector<Matching> out;
    for (auto& pairs : matchings_of(1, 2 * b)) {
        Matching m;
        m.pairs = std::move(pairs);
        std::sort(m.pairs.begin(), m.pairs.end());
        out.push_back(std::move(m));
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace triplane
