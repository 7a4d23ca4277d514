#include "triplane/corpus.h"

#include <utility>

#include "triplane/chconvert.h"
#include "triplane/io.h"

namespace triplane {

namespace {

// "10^{0,-2}_1" -> "y10s0m2_1.ch"
std::string slug(const std::string& label) {
    std::string out = "y";
    for (char ch : label) {
        switch (ch) {
            case '^': out += 's'; break;
            case '-': out += 'm'; break;
            case '{':
            case '}':
            case ',': break;
            default: out += ch; break;
        }
    }
    return out + ".ch";
}

// Unknotted sphere padded with a cancelling clasp; distinguishes corpus
// entries whose invariants coincide.
MarkedWord clasped_sphere() {
    return MarkedWord(
        {Slice::cap(1), Slice::cross(1, 1), Slice::cross(1, -1), Slice::cup(1)});
}

// Unknotted torus with a cancelling clasp below the marked level.
MarkedWord clasped_torus() {
    SliceSeq w = ch_torus().slices();
    w.insert(w.begin() + 5, {Slice::cross(2, 1), Slice::cross(2, -1)});
    return MarkedWord(std::move(w));
}

MarkedWord spun(std::initializer_list<Slice> plat) { return ch_spun(SliceSeq(plat)); }

// Spun trefoil padded with a cancelling clasp at the top of the third tangle.
MarkedWord clasped_spun_trefoil() {
    SliceSeq w =
        ch_spun({Slice::cross(2, 1), Slice::cross(2, 1), Slice::cross(2, 1)}).slices();
    w.insert(w.begin() + 5, {Slice::cross(1, 1), Slice::cross(1, -1)});
    return MarkedWord(std::move(w));
}

// Tube grafted onto the right edge of the top sheet, raising the genus by
// one. This is the handle gadget of the unknotted torus word, shifted next
// to the last upper strand, and it adds two bridges instead of the three a
// spliced connected sum with a separate torus word would.
MarkedWord with_handle(const MarkedWord& base) {
    BridgeSplit s = bridge_split(base);
    const int k = 2 * s.bridges;
    SliceSeq out = s.upper;
    out.push_back(Slice::cap(k + 1));
    out.push_back(Slice::cap(k + 2));
    out.insert(out.end(), s.marks.begin(), s.marks.end());
    out.push_back(Slice::mark(k, MarkAxis::Turnback));
    out.push_back(Slice::mark(k + 1, MarkAxis::Turnback));
    out.push_back(Slice::cup(k + 3));
    out.push_back(Slice::cup(k));
    out.insert(out.end(), s.lower.begin(), s.lower.end());
    return MarkedWord(std::move(out));
}

CorpusRow row(std::string label, std::string description, std::string type, int bridges,
              int table_bridges, int crossing_bound, bool crossings_hard, int euler,
              int normal_euler, bool orientable, MarkedWord word) {
    CorpusRow r;
    r.label = std::move(label);
    r.file_name = slug(r.label);
    r.description = std::move(description);
    r.type_partition = std::move(type);
    r.bridges = bridges;
    r.table_bridges = table_bridges;
    r.crossing_bound = crossing_bound;
    r.crossings_hard = crossings_hard;
    r.euler = euler;
    r.normal_euler = normal_euler;
    r.orientable = orientable;
    r.word = std::move(word);
    return r;
}

std::vector<CorpusRow> build_rows() {
    const Slice s2p = Slice::cross(2, 1);
    const Slice s2m = Slice::cross(2, -1);

    std::vector<CorpusRow> out;
    out.push_back(row("0_1", "unknotted sphere", "S2", 1, 1, 0, true, 2, 0, true,
                      ch_sphere()));
    out.push_back(row("2^1_1", "unknotted torus", "T2", 3, 1, 0, true, 0, 0, true,
                      ch_torus()));
    out.push_back(row("2^-1_1", "standard projective plane, normal euler number two", "P2",
                      2, 2, 1, true, 1, 2, false, ch_projective(1)));
    out.push_back(row("6^{0,1}_1", "split union of an unknotted sphere and an unknotted torus",
                      "S2+T2", 4, 4, 4, true, 2, 0, true,
                      ch_disjoint(ch_sphere(), ch_torus())));
    out.push_back(row("7^{0,-2}_1",
                      "split union of an unknotted sphere and an unknotted Klein bottle",
                      "P2#P2+S2", 4, 4, 5, true, 2, 0, false,
                      ch_disjoint(ch_sphere(), ch_klein(1))));
    out.push_back(row("8_1", "spun trefoil", "S2", 4, 4, 6, true, 2, 0, true,
                      spun({s2p, s2p, s2p})));
    out.push_back(row("8^{1,1}_1", "split union of two unknotted tori", "T2+T2", 6, 6, 6,
                      false, 0, 0, true, ch_disjoint(ch_torus(), ch_torus())));
    out.push_back(row("8^{-1,-1}_1",
                      "split union of projective planes with opposite normal euler numbers",
                      "P2+P2", 4, 4, 8, false, 2, 0, false,
                      ch_disjoint(ch_projective(1), ch_projective(-1))));
    out.push_back(row("9_1", "spun left trefoil", "S2", 4, 4, 7, true, 2, 0, true,
                      spun({s2m, s2m, s2m})));
    out.push_back(row("9^{0,1}_1", "split union of an unknotted torus and an unknotted sphere",
                      "S2+T2", 4, 4, 8, true, 2, 0, true,
                      ch_disjoint(ch_torus(), ch_sphere())));
    out.push_back(row("9^{1,-2}_1",
                      "split union of an unknotted torus and an unknotted Klein bottle",
                      "P2#P2+T2", 6, 6, 7, false, 0, 0, false,
                      ch_disjoint(ch_torus(), ch_klein(1))));
    out.push_back(row("10_1", "spun trefoil with a cancelling clasp", "S2", 4, 4, 8, true,
                      2, 0, true, clasped_spun_trefoil()));
    out.push_back(row("10_2", "spun (2,5) torus knot", "S2", 4, 4, 11, false, 2, 0, true,
                      spun({s2p, s2p, s2p, s2p, s2p})));
    out.push_back(row("10_3", "spun left handed (2,5) torus knot", "S2", 4, 4, 11, false, 2,
                      0, true, spun({s2m, s2m, s2m, s2m, s2m})));
    out.push_back(row("10^1_1", "spun trefoil with a trivial handle", "T2", 6, 6, 11, false,
                      0, 0, true, with_handle(spun({s2p, s2p, s2p}))));
    out.push_back(row("10^{0,1}_1",
                      "split union of a sphere and a torus carrying a cancelling clasp",
                      "S2+T2", 4, 4, 8, false, 2, 0, true,
                      ch_disjoint(ch_sphere(), clasped_torus())));
    out.push_back(row("10^{0,1}_2",
                      "split union of a sphere carrying a cancelling clasp and a torus",
                      "S2+T2", 4, 4, 8, true, 2, 0, true,
                      ch_disjoint(clasped_sphere(), ch_torus())));
    out.push_back(row("10^{1,1}_1",
                      "split union of two unknotted tori, one carrying a cancelling clasp",
                      "T2+T2", 6, 6, 6, false, 0, 0, true,
                      ch_disjoint(clasped_torus(), ch_torus())));
    out.push_back(row("10^{0,0,1}_1",
                      "split union of two unknotted spheres and an unknotted torus",
                      "S2+S2+T2", 5, 5, 8, false, 4, 0, true,
                      ch_disjoint(ch_sphere(), ch_disjoint(ch_sphere(), ch_torus()))));
    out.push_back(row("10^{0,-2}_1",
                      "split union of an unknotted sphere and a mirror Klein bottle",
                      "P2#P2+S2", 4, 4, 8, true, 2, 0, false,
                      ch_disjoint(ch_sphere(), ch_klein(-1))));
    CorpusRow starred =
        row("10^{0,-2}_2",
            "split union of an unknotted Klein bottle and an unknotted sphere; the table "
            "attains the crossing bound only at bridge number five",
            "P2#P2+S2", 4, 4, 8, true, 2, 0, false, ch_disjoint(ch_klein(1), ch_sphere()));
    starred.star = true;
    out.push_back(std::move(starred));
    out.push_back(row("10^{-1,-1}_1",
                      "split union of projective planes with opposite normal euler numbers, "
                      "mirror order",
                      "P2+P2", 4, 4, 8, true, 2, 0, false,
                      ch_disjoint(ch_projective(-1), ch_projective(1))));
    out.push_back(row("10^{-2,-2}_1",
                      "split union of two unknotted Klein bottles of opposite handedness",
                      "P2#P2+P2#P2", 6, 6, 8, false, 0, 0, false,
                      ch_disjoint(ch_klein(1), ch_klein(-1))));
    return out;
}

}  // namespace

const std::vector<CorpusRow>& corpus_rows() {
    static const std::vector<CorpusRow> rows = build_rows();
    return rows;
}

std::string corpus_file_text(const CorpusRow& row) {
    std::string out = "# " + row.label + ": " + row.description + "\n";
    out += "# expected: type=" + row.type_partition + " b=" + std::to_string(row.bridges);
    if (row.table_bridges != row.bridges)
        out += " (printed as " + std::to_string(row.table_bridges) + ", suspected typo)";
    out += " c<=" + std::to_string(row.crossing_bound);
    out += " e=" + std::to_string(row.normal_euler);
    out += "\n";
    out += to_file_text(row.word);
    return out;
}

}  // namespace triplane
