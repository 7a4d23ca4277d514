#include "triplane/triplane.h"

#include <algorithm>
#include <deque>
#include <map>

#include "triplane/cups.h"
#include "triplane/moves.h"
#include "triplane/orient.h"

namespace triplane {

TriPlaneDiagram::TriPlaneDiagram(TrivialTangleWord t1, TrivialTangleWord t2, TrivialTangleWord t3)
    : tangles_{std::move(t1), std::move(t2), std::move(t3)} {
    if (tangles_[1].bridges() != tangles_[0].bridges() ||
        tangles_[2].bridges() != tangles_[0].bridges())
        throw Error("tangles have different bridge numbers");
}

LinkWord pair_closure(const TrivialTangleWord& a, const TrivialTangleWord& b) {
    if (a.bridges() != b.bridges()) throw Error("closure of tangles with different widths");
    SliceSeq joined = a.slices();
    SliceSeq mirrored = reflect(b.slices());
    joined.insert(joined.end(), mirrored.begin(), mirrored.end());
    return LinkWord(std::move(joined));
}

std::array<LinkWord, 3> closures(const TriPlaneDiagram& d) {
    return {pair_closure(d.tangle(0), d.tangle(1)), pair_closure(d.tangle(1), d.tangle(2)),
            pair_closure(d.tangle(2), d.tangle(0))};
}

ValidationReport validate_triplane(const TriPlaneDiagram& d, const Certifier& certifier) {
    ValidationReport report;
    auto cls = closures(d);
    for (int i = 0; i < 3; ++i) report.closure_certs[i] = certifier(cls[i]);
    return report;
}

namespace {

std::string component_type(int euler, bool orientable) {
    if (orientable) {
        int genus = (2 - euler) / 2;
        if (genus == 0) return "S2";
        std::string out = "T2";
        for (int i = 1; i < genus; ++i) out += "#T2";
        return out;
    }
    int crosscaps = 2 - euler;
    std::string out = "P2";
    for (int i = 1; i < crosscaps; ++i) out += "#P2";
    return out;
}

}  // namespace

InvariantReport invariants(const TriPlaneDiagram& d) {
    InvariantReport r;
    r.bridges = d.bridges();
    int tangles_with_crossings = 0;
    for (int i = 0; i < 3; ++i) {
        r.crossings[i] = count_crossings(d.tangle(i).slices());
        r.total_crossings += r.crossings[i];
        if (r.crossings[i] > 0) ++tangles_with_crossings;
    }
    r.concentrated = tangles_with_crossings <= 1;

    auto cls = closures(d);
    for (int i = 0; i < 3; ++i) {
        r.patches[i] = closed_components(cls[i].slices());
        r.normal_euler += writhe(cls[i]);
    }
    r.euler = r.patches[0] + r.patches[1] + r.patches[2] - r.bridges;

    // Surface components are the connected components of the multigraph on
    // the 2b bridge points whose edges are the three endpoint pairings.
    int n = 2 * r.bridges;
    std::array<Matching, 3> pairings;
    for (int i = 0; i < 3; ++i) pairings[i] = arc_pairing(d.tangle(i).slices());

    std::vector<int> comp(n + 1, -1);
    std::vector<int> color(n + 1, 0);
    bool all_bipartite = true;
    int ncomp = 0;
    std::vector<std::vector<int>> adj(n + 1);
    for (const Matching& m : pairings)
        for (auto [p, q] : m.pairs) {
            adj[p].push_back(q);
            adj[q].push_back(p);
        }
    for (int v = 1; v <= n; ++v) {
        if (comp[v] != -1) continue;
        int id = ncomp++;
        comp[v] = id;
        color[v] = 1;
        std::deque<int> queue{v};
        bool bipartite = true;
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            for (int w : adj[u]) {
                if (comp[w] == -1) {
                    comp[w] = id;
                    color[w] = -color[u];
                    queue.push_back(w);
                } else if (color[w] != -color[u]) {
                    bipartite = false;
                }
            }
        }
        SurfaceComponent sc;
        sc.orientable = bipartite;
        all_bipartite = all_bipartite && bipartite;
        r.components.push_back(sc);
    }
    r.orientable = all_bipartite;

    for (int v = 1; v <= n; ++v) ++r.components[comp[v]].bridges;
    for (auto& sc : r.components) sc.bridges /= 2;

    // Patch cycles of each closure, attributed to the component they lie in.
    for (int i = 0; i < 3; ++i) {
        const Matching& a = pairings[i];
        const Matching& b = pairings[(i + 1) % 3];
        std::vector<int> parent(n + 1);
        for (int v = 0; v <= n; ++v) parent[v] = v;
        auto find = [&](int x) {
            while (parent[x] != x) {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            return x;
        };
        for (const Matching* m : {&a, &b})
            for (auto [p, q] : m->pairs) {
                int rp = find(p), rq = find(q);
                if (rp != rq) parent[rq] = rp;
            }
        for (int v = 1; v <= n; ++v)
            if (find(v) == v) ++r.components[comp[v]].patches[i];
    }
    for (auto& sc : r.components) {
        sc.euler = sc.patches[0] + sc.patches[1] + sc.patches[2] - sc.bridges;
        sc.type = component_type(sc.euler, sc.orientable);
    }

    std::vector<std::string> names;
    for (const auto& sc : r.components) names.push_back(sc.type);
    std::sort(names.begin(), names.end());
    for (size_t i = 0; i < names.size(); ++i) {
        if (i) r.type_partition += '+';
        r.type_partition += names[i];
    }
    return r;
}

std::string invariant_line(const InvariantReport& r) {
    std::string out = "b=" + std::to_string(r.bridges);
    out += " c=" + std::to_string(r.total_crossings);
    out += " chi=" + std::to_string(r.euler);
    out += " e=" + std::to_string(r.normal_euler);
    out += std::string(" orientable=") + (r.orientable ? "true" : "false");
    out += std::string(" concentrated=") + (r.concentrated ? "true" : "false");
    return out;
}

TriPlaneDiagram connected_sum(const TriPlaneDiagram& a, const TriPlaneDiagram& b) {
    int offset = 2 * a.bridges();
    std::array<TrivialTangleWord, 3> glued;
    for (int i = 0; i < 3; ++i) {
        SliceSeq word = a.tangle(i).slices();
        SliceSeq rest = shift_right(b.tangle(i).slices(), offset);
        word.insert(word.end(), rest.begin(), rest.end());
        word.push_back(Slice::cup(offset));
        CupElimination flat = eliminate_cups(GenericTangleWord(std::move(word)));
        SliceSeq out = flat.word.slices();
        if (!flat.absorbed_kink_signs.empty()) {
            // Kinks absorbed while freeing the junction are put back at the
            // last cap so crossing counts add exactly.
            size_t last_cap = out.size();
            for (size_t k = out.size(); k-- > 0;)
                if (out[k].kind == SliceKind::Cap) {
                    last_cap = k;
                    break;
                }
            SliceSeq kinks;
            for (int s : flat.absorbed_kink_signs)
                kinks.push_back(Slice::cross(out[last_cap].pos, s));
            out.insert(out.begin() + last_cap + 1, kinks.begin(), kinks.end());
        }
        glued[i] = TrivialTangleWord(std::move(out));
    }
    TriPlaneDiagram sum(glued[0], glued[1], glued[2]);
    if (sum.bridges() != a.bridges() + b.bridges() - 1)
        throw Error("connected sum lost track of a bridge");
    return sum;
}

TriPlaneDiagram mutual_braid(const TriPlaneDiagram& d, int pos, int sign) {
    if (pos < 1 || pos > 2 * d.bridges() - 1) throw Error("mutual braid position out of range");
    std::array<TrivialTangleWord, 3> tangles;
    for (int i = 0; i < 3; ++i) {
        SliceSeq word = d.tangle(i).slices();
        word.push_back(Slice::cross(pos, sign));
        tangles[i] = TrivialTangleWord(std::move(word));
    }
    return {tangles[0], tangles[1], tangles[2]};
}

TriPlaneDiagram stabilize(const TriPlaneDiagram& d, int kind, int tangle, int pos) {
    if (kind != 1 && kind != 2) throw Error("stabilization kind must be 1 or 2");
    if (tangle < 0 || tangle > 2) throw Error("tangle index out of range");
    if (pos < 1 || pos > 2 * d.bridges()) throw Error("stabilization position out of range");
    std::array<TrivialTangleWord, 3> tangles;
    for (int i = 0; i < 3; ++i) {
        SliceSeq word = d.tangle(i).slices();
        bool chosen = (i == tangle);
        int cap_pos = (kind == 1) == chosen ? pos : pos + 1;
        word.push_back(Slice::cap(cap_pos));
        tangles[i] = TrivialTangleWord(std::move(word));
    }
    return {tangles[0], tangles[1], tangles[2]};
}

namespace {

struct BottomCap {
    int landing = 0;  // cap index once commuted to the very bottom
    int depth = 0;    // commutations needed to get it there
    SliceSeq reduced;  // word with that cap removed
};

// Caps that can be carried to the bottom of the word by commutations alone.
std::vector<BottomCap> bottom_caps(const TrivialTangleWord& tangle) {
    std::vector<BottomCap> out;
    const SliceSeq& word = tangle.slices();
    for (size_t i = 0; i < word.size(); ++i) {
        if (word[i].kind != SliceKind::Cap) continue;
        SliceSeq work = word;
        size_t pos = i;
        bool stuck = false;
        while (pos + 1 < work.size()) {
            auto swapped = try_commute(work[pos], work[pos + 1]);
            if (!swapped) {
                stuck = true;
                break;
            }
            work[pos] = swapped->first;
            work[pos + 1] = swapped->second;
            ++pos;
        }
        if (stuck) continue;
        BottomCap bc;
        bc.landing = work.back().pos;
        bc.depth = static_cast<int>(work.size() - 1 - i);
        work.pop_back();
        bc.reduced = std::move(work);
        out.push_back(std::move(bc));
    }
    return out;
}

// Landing index each tangle needs for template (kind, chosen, pos).
int template_landing(int kind, int chosen, int tangle, int pos) {
    return (kind == 1) == (tangle == chosen) ? pos : pos + 1;
}

}  // namespace

std::optional<TriPlaneDiagram> remove_stabilization(const TriPlaneDiagram& d, int kind, int tangle,
                                                    int pos) {
    if (d.bridges() < 2) return std::nullopt;
    if (kind != 1 && kind != 2) throw Error("stabilization kind must be 1 or 2");
    std::array<SliceSeq, 3> reduced;
    for (int i = 0; i < 3; ++i) {
        int want = template_landing(kind, tangle, i, pos);
        int best_depth = -1;
        for (const BottomCap& bc : bottom_caps(d.tangle(i)))
            if (bc.landing == want && (best_depth < 0 || bc.depth < best_depth)) {
                reduced[i] = bc.reduced;
                best_depth = bc.depth;
            }
        if (best_depth < 0) return std::nullopt;
    }
    try {
        return TriPlaneDiagram(TrivialTangleWord(reduced[0]), TrivialTangleWord(reduced[1]),
                               TrivialTangleWord(reduced[2]));
    } catch (const Error&) {
        return std::nullopt;
    }
}

std::optional<Destabilization> destabilize(const TriPlaneDiagram& d, const Certifier& certifier) {
    if (d.bridges() < 2) return std::nullopt;
    std::array<std::vector<BottomCap>, 3> menus;
    for (int i = 0; i < 3; ++i) menus[i] = bottom_caps(d.tangle(i));

    struct Candidate {
        int total_depth;
        int kind;
        int tangle;
        int pos;
        std::array<const BottomCap*, 3> caps;
        bool operator<(const Candidate& o) const {
            return std::tie(total_depth, kind, tangle, pos) <
                   std::tie(o.total_depth, o.kind, o.tangle, o.pos);
        }
    };
    std::vector<Candidate> candidates;
    for (int kind : {1, 2})
        for (int chosen = 0; chosen < 3; ++chosen)
            for (int pos = 1; pos <= 2 * d.bridges() - 1; ++pos) {
                std::array<const BottomCap*, 3> caps{};
                int depth = 0;
                bool ok = true;
                for (int i = 0; i < 3 && ok; ++i) {
                    int want = template_landing(kind, chosen, i, pos);
                    const BottomCap* found = nullptr;
                    for (const BottomCap& bc : menus[i])
                        if (bc.landing == want && (!found || bc.depth < found->depth)) found = &bc;
                    if (!found)
                        ok = false;
                    else {
                        caps[i] = found;
                        depth += found->depth;
                    }
                }
                if (ok) candidates.push_back({depth, kind, chosen, pos, caps});
            }
    std::sort(candidates.begin(), candidates.end());

    InvariantReport before = invariants(d);
    for (const Candidate& cand : candidates) {
        TriPlaneDiagram reduced;
        try {
            reduced = TriPlaneDiagram(TrivialTangleWord(cand.caps[0]->reduced),
                                      TrivialTangleWord(cand.caps[1]->reduced),
                                      TrivialTangleWord(cand.caps[2]->reduced));
        } catch (const Error&) {
            continue;
        }
        InvariantReport after = invariants(reduced);
        if (after.euler != before.euler || after.normal_euler != before.normal_euler ||
            after.orientable != before.orientable)
            continue;
        if (!validate_triplane(reduced, certifier).valid()) continue;
        return Destabilization{std::move(reduced), cand.kind, cand.tangle, cand.pos};
    }
    return std::nullopt;
}

}  // namespace triplane
