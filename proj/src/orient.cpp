#include "triplane/orient.h"

#include <array>
#include <deque>

namespace triplane {

namespace {

struct Adjacency {
    int other;
    bool flip;  // true across caps and cups, false across crossings
};

}  // namespace

OrientedTrace oriented_trace(const LinkWord& word) {
    const SliceSeq& slices = word.slices();

    std::vector<std::vector<Adjacency>> adj;
    std::vector<int> cap_left_seg;                 // in slice order
    std::vector<std::array<int, 3>> crossings;     // {sign, in_left_seg, in_right_seg}
    std::vector<int> strand;                       // live segment per position

    auto new_seg = [&] {
        adj.emplace_back();
        return static_cast<int>(adj.size()) - 1;
    };
    auto connect = [&](int a, int b, bool flip) {
        adj[a].push_back({b, flip});
        adj[b].push_back({a, flip});
    };

    for (const Slice& s : slices) {
        switch (s.kind) {
            case SliceKind::Cap: {
                int a = new_seg();
                int b = new_seg();
                connect(a, b, true);
                strand.insert(strand.begin() + (s.pos - 1), {a, b});
                cap_left_seg.push_back(a);
                break;
            }
            case SliceKind::Cup: {
                connect(strand[s.pos - 1], strand[s.pos], true);
                strand.erase(strand.begin() + (s.pos - 1), strand.begin() + (s.pos + 1));
                break;
            }
            case SliceKind::Cross: {
                int u = strand[s.pos - 1];
                int v = strand[s.pos];
                int x = new_seg();
                int y = new_seg();
                connect(u, y, false);  // in-left continues out-right
                connect(v, x, false);  // in-right continues out-left
                strand[s.pos - 1] = x;
                strand[s.pos] = y;
                crossings.push_back({s.sign, u, v});
                break;
            }
            case SliceKind::Mark:
                throw Error("oriented trace of a marked word");
        }
    }
    if (!strand.empty()) throw Error("word does not close up to width 0");

    // Components in earliest-cap order, then orientation from each root cap.
    std::vector<int> comp(adj.size(), -1);
    std::vector<int> dir(adj.size(), 0);
    int ncomp = 0;
    for (int root : cap_left_seg) {
        if (comp[root] != -1) continue;
        int id = ncomp++;
        comp[root] = id;
        dir[root] = 1;
        std::deque<int> queue{root};
        while (!queue.empty()) {
            int seg = queue.front();
            queue.pop_front();
            for (const Adjacency& e : adj[seg]) {
                int want = e.flip ? -dir[seg] : dir[seg];
                if (comp[e.other] == -1) {
                    comp[e.other] = id;
                    dir[e.other] = want;
                    queue.push_back(e.other);
                } else if (dir[e.other] != want) {
                    throw Error("inconsistent strand orientation");
                }
            }
        }
    }

    for (int c : comp)
        if (c == -1) throw Error("component without a cap");

    OrientedTrace out;
    out.components = ncomp;
    out.linking.assign(ncomp, std::vector<int>(ncomp, 0));
    std::vector<std::vector<int>> half(ncomp, std::vector<int>(ncomp, 0));
    for (const auto& [sign, u, v] : crossings) {
        int c = sign * dir[u] * dir[v];
        out.writhe += c;
        if (comp[u] != comp[v]) {
            half[comp[u]][comp[v]] += c;
            half[comp[v]][comp[u]] += c;
        }
    }
    for (int i = 0; i < ncomp; ++i)
        for (int j = 0; j < ncomp; ++j) {
            if (half[i][j] % 2 != 0) throw Error("odd inter-component crossing sum");
            out.linking[i][j] = half[i][j] / 2;
        }
    return out;
}

int writhe(const LinkWord& word) { return oriented_trace(word).writhe; }

}  // namespace triplane
