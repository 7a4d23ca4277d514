#include "triplane/chconvert.h"

#include <utility>

#include "triplane/cups.h"
#include "triplane/moves.h"
#include "triplane/trace.h"

namespace triplane {

namespace {

bool mark_turns_back(const Slice& s, int sign) {
    return (sign > 0) == (s.axis == MarkAxis::Turnback);
}

void append(SliceSeq& out, const SliceSeq& tail) {
    out.insert(out.end(), tail.begin(), tail.end());
}

// -1 when the word is in bridge position, else the index of the first slice
// that breaks the cap/cross, marks, cross/cup factorization.
int first_violation(const SliceSeq& slices, std::string* diagnostic) {
    int phase = 0;  // 0 above the marks, 1 inside the mark block, 2 below
    for (std::size_t i = 0; i < slices.size(); ++i) {
        const Slice& s = slices[i];
        switch (s.kind) {
            case SliceKind::Cap:
                if (phase != 0) {
                    if (diagnostic)
                        *diagnostic = "cap below the bridge level at slice " + std::to_string(i);
                    return static_cast<int>(i);
                }
                break;
            case SliceKind::Cross:
                if (phase == 1) phase = 2;
                break;
            case SliceKind::Mark:
                if (phase == 0) {
                    phase = 1;
                } else if (phase == 2) {
                    if (diagnostic)
                        *diagnostic =
                            "marked vertex below the bridge level at slice " + std::to_string(i);
                    return static_cast<int>(i);
                }
                break;
            case SliceKind::Cup:
                phase = 2;
                break;
        }
    }
    return -1;
}

}  // namespace

SliceSeq resolve_slices(const SliceSeq& slices, int sign) {
    SliceSeq out;
    out.reserve(slices.size());
    for (const Slice& s : slices) {
        if (s.kind != SliceKind::Mark) {
            out.push_back(s);
            continue;
        }
        if (mark_turns_back(s, sign)) {
            out.push_back(Slice::cup(s.pos));
            out.push_back(Slice::cap(s.pos));
        }
    }
    return out;
}

LinkWord resolve(const MarkedWord& word, int sign) {
    return LinkWord(resolve_slices(word.slices(), sign));
}

bool is_bridge_position(const MarkedWord& word, std::string* diagnostic) {
    return first_violation(word.slices(), diagnostic) < 0;
}

BridgeSplit bridge_split(const MarkedWord& word) {
    const SliceSeq& slices = word.slices();
    if (slices.empty()) throw Error("empty marked diagram");
    std::string diagnostic;
    if (first_violation(slices, &diagnostic) >= 0)
        throw Error("marked diagram is not in bridge position: " + diagnostic);

    std::size_t start = slices.size();
    std::size_t stop = slices.size();
    for (std::size_t i = 0; i < slices.size(); ++i)
        if (slices[i].kind == SliceKind::Mark) {
            if (start == slices.size()) start = i;
            stop = i + 1;
        }
    if (start == slices.size()) {
        // no marks: split just above the first cup
        for (std::size_t i = 0; i < slices.size(); ++i)
            if (slices[i].kind == SliceKind::Cup) {
                start = i;
                break;
            }
        stop = start;
    }

    BridgeSplit split;
    split.upper.assign(slices.begin(), slices.begin() + start);
    split.marks.assign(slices.begin() + start, slices.begin() + stop);
    split.lower.assign(slices.begin() + stop, slices.end());
    split.bridges = width_profile(split.upper, 0).back() / 2;
    split.split_level = static_cast<int>(stop);
    if (split.bridges < 1) throw Error("marked diagram has no bridge level");
    return split;
}

std::optional<MarkedWord> normalize_to_bridge_position(const MarkedWord& word, int budget) {
    SliceSeq slices = word.slices();
    int spent = 0;
    while (true) {
        int v = first_violation(slices, nullptr);
        if (v < 0) return MarkedWord(std::move(slices));
        // the offending cap or mark bubbles upward one slice at a time
        if (spent >= budget) return std::nullopt;
        auto swapped = try_commute(slices[v - 1], slices[v], true);
        if (!swapped) return std::nullopt;
        slices[v - 1] = swapped->first;
        slices[v] = swapped->second;
        ++spent;
    }
}

ChValidation validate_ch(const MarkedWord& word, const Certifier& certifier) {
    ChValidation v;
    v.minus = certifier(resolve(word, -1));
    v.plus = certifier(resolve(word, +1));
    return v;
}

TriPlaneDiagram ch_to_triplane(const MarkedWord& word, const Certifier& certifier,
                               int cup_budget) {
    BridgeSplit split = bridge_split(word);

    ChValidation val = validate_ch(word, certifier);
    for (const Certification* cert : {&val.minus, &val.plus})
        if (cert->status == Certification::Status::Refuted)
            throw Error("marked diagram resolution is not an unlink: " + cert->obstruction);
    if (!val.valid()) throw Error("could not certify the resolutions of the marked diagram");

    SliceSeq upper_marked = split.upper;
    append(upper_marked, split.marks);
    TrivialTangleWord d1, d2;
    try {
        d1 = eliminate_cups(GenericTangleWord(resolve_slices(upper_marked, -1)), cup_budget).word;
        d2 = eliminate_cups(GenericTangleWord(resolve_slices(upper_marked, +1)), cup_budget).word;
    } catch (const Error& e) {
        throw Error(std::string("upper resolution is not a tangle: ") + e.what());
    }
    TrivialTangleWord d3{reflect(split.lower)};
    TriPlaneDiagram out(d1, d2, d3);

    const int c_minus = closed_components(resolve_slices(word.slices(), -1));
    const int c_plus = closed_components(resolve_slices(word.slices(), +1));
    if (invariants(out).euler != c_plus + c_minus - word.mark_count())
        throw Error("conversion changed the euler characteristic");
    return out;
}

MarkedWord ch_sphere() { return MarkedWord({Slice::cap(1), Slice::cup(1)}); }

MarkedWord ch_torus() {
    return MarkedWord({Slice::cap(1), Slice::cap(3), Slice::cap(4),
                       Slice::mark(2, MarkAxis::Turnback), Slice::mark(3, MarkAxis::Turnback),
                       Slice::cup(5), Slice::cup(2), Slice::cup(1)});
}

MarkedWord ch_projective(int sign) {
    if (sign == 0) throw Error("projective plane needs a sign");
    // the crossing lives in the reflected lower part, so its sign is flipped
    return MarkedWord({Slice::cap(1), Slice::cap(3), Slice::mark(2, MarkAxis::Turnback),
                       Slice::cross(2, sign > 0 ? -1 : 1), Slice::cup(3), Slice::cup(1)});
}

MarkedWord ch_klein(int sign) {
    if (sign == 0) throw Error("klein bottle needs a sign");
    return MarkedWord({Slice::cap(1), Slice::cap(3), Slice::cap(4),
                       Slice::mark(2, MarkAxis::Turnback), Slice::mark(3, MarkAxis::Turnback),
                       Slice::cross(4, sign > 0 ? -1 : 1), Slice::cup(5), Slice::cup(2),
                       Slice::cup(1)});
}

MarkedWord ch_spun(const SliceSeq& plat) {
    if (plat.empty()) throw Error("empty plat word");
    for (const Slice& s : plat) {
        if (s.kind != SliceKind::Cross) throw Error("plat word must consist of crossings");
        if (s.pos < 1) throw Error("plat word position out of range");
        if (s.pos > 2) throw Error("plat word touching strand 4");
    }
    SliceSeq closed{Slice::cap(1), Slice::cap(3)};
    append(closed, plat);
    closed.push_back(Slice::cup(3));
    closed.push_back(Slice::cup(1));
    if (closed_components(closed) != 1) throw Error("plat closure is not a knot");

    // The knotted tangle next to its mirror image: position map 8-p with the
    // signs flipped, so folding the tangle onto the nested caps cancels the
    // braid against its inverse. The single marked vertex is the fusion
    // saddle between the two middle cap pairs. Resolutions certify for plats
    // on one braid generator; a mixed plat can fail downstream validation.
    SliceSeq d3{Slice::cap(1), Slice::cap(3)};
    append(d3, plat);
    d3.push_back(Slice::cap(5));
    d3.push_back(Slice::cap(7));
    for (const Slice& s : plat) d3.push_back(Slice::cross(8 - s.pos, -s.sign));

    SliceSeq word{Slice::cap(1), Slice::cap(2), Slice::cap(3), Slice::cap(4),
                  Slice::mark(2, MarkAxis::Turnback)};
    append(word, reflect(d3));
    return MarkedWord(std::move(word));
}

MarkedWord ch_disjoint(const MarkedWord& a, const MarkedWord& b) {
    BridgeSplit sa = bridge_split(a);
    BridgeSplit sb = bridge_split(b);
    const int offset = 2 * sa.bridges;
    SliceSeq out = sa.upper;
    append(out, shift_right(sb.upper, offset));
    append(out, sa.marks);
    append(out, shift_right(sb.marks, offset));
    append(out, sa.lower);  // consumes the left strands first
    append(out, sb.lower);
    return MarkedWord(std::move(out));
}

// The spliced word keeps both diagrams' bridges, one above the minimal
// connected sum; simplification may or may not recover the lost bridge.
MarkedWord ch_connect(const MarkedWord& a, const MarkedWord& b) {
    for (const MarkedWord* w : {&a, &b})
        if (w->slices().empty() || w->slices().back() != Slice::cup(1))
            throw Error("connected sum needs diagrams ending with cup1");
    BridgeSplit sa = bridge_split(a);
    BridgeSplit sb = bridge_split(b);
    const int offset = 2 * sa.bridges;
    SliceSeq out = sa.upper;
    append(out, shift_right(sb.upper, offset));
    append(out, sa.marks);
    append(out, shift_right(sb.marks, offset));
    out.insert(out.end(), sa.lower.begin(), sa.lower.end() - 1);
    SliceSeq lower_b(sb.lower.begin(), sb.lower.end() - 1);
    append(out, shift_right(lower_b, 2));
    // the two leftover arcs are spliced instead of closed separately
    out.push_back(Slice::cup(2));
    out.push_back(Slice::cup(1));
    return MarkedWord(std::move(out));
}

}  // namespace triplane
