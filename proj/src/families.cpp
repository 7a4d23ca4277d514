#include "triplane/families.h"

#include <sstream>
#include <vector>

#include "triplane/trace.h"

namespace triplane {

namespace {

TrivialTangleWord word_of(SliceSeq slices) { return TrivialTangleWord(std::move(slices)); }

TriPlaneDiagram sphere_diagram() {
    return {word_of({Slice::cap(1)}), word_of({Slice::cap(1)}), word_of({Slice::cap(1)})};
}

TriPlaneDiagram torus_diagram() {
    return {word_of({Slice::cap(1), Slice::cap(3), Slice::cap(4)}),
            word_of({Slice::cap(1), Slice::cap(2), Slice::cap(3)}),
            word_of({Slice::cap(1), Slice::cap(2), Slice::cap(5)})};
}

TriPlaneDiagram projective_diagram(int sign) {
    return {word_of({Slice::cap(1), Slice::cap(3)}), word_of({Slice::cap(1), Slice::cap(2)}),
            word_of({Slice::cap(1), Slice::cap(3), Slice::cross(2, sign)})};
}

// 1-crossing Klein bottle, the n = m = 1 core.
TriPlaneDiagram klein_diagram() {
    return {word_of({Slice::cap(1), Slice::cap(3), Slice::cap(4)}),
            word_of({Slice::cap(1), Slice::cap(2), Slice::cap(3)}),
            word_of({Slice::cap(1), Slice::cap(2), Slice::cap(5), Slice::cross(4, 1)})};
}

TriPlaneDiagram mirror(const TriPlaneDiagram& d) {
    std::array<TrivialTangleWord, 3> words;
    for (int i = 0; i < 3; ++i) {
        SliceSeq slices = d.tangle(i).slices();
        for (Slice& s : slices)
            if (s.kind == SliceKind::Cross) s.sign = -s.sign;
        words[i] = TrivialTangleWord(std::move(slices));
    }
    return {words[0], words[1], words[2]};
}

// Minimal-crossing projective-plane sum, c = max(1, n-m), for n >= m.
TriPlaneDiagram projective_sum(int n, int m) {
    if (n == m) {
        TriPlaneDiagram d = klein_diagram();
        for (int i = 1; i < n; ++i) d = connected_sum(torus_diagram(), d);
        return d;
    }
    if (n == m + 1) {
        TriPlaneDiagram d = projective_diagram(1);
        for (int i = 0; i < m; ++i) d = connected_sum(d, torus_diagram());
        return d;
    }
    TriPlaneDiagram d = projective_sum(m + 1, m);
    for (int i = 0; i < n - m - 1; ++i) d = connected_sum(d, projective_diagram(1));
    return d;
}

void check_plat(const SliceSeq& plat) {
    if (plat.empty()) throw Error("empty plat word");
    for (const Slice& s : plat) {
        if (s.kind != SliceKind::Cross) throw Error("plat word must consist of crossings");
        if (s.pos < 1) throw Error("plat word position out of range");
        if (s.pos > 2) throw Error("plat word touching strand 4");
    }
    SliceSeq closed{Slice::cap(1), Slice::cap(3)};
    closed.insert(closed.end(), plat.begin(), plat.end());
    closed.push_back(Slice::cup(3));
    closed.push_back(Slice::cup(1));
    if (closed_components(closed) != 1) throw Error("plat closure is not a knot");
}

TriPlaneDiagram spun_diagram(const SliceSeq& plat) {
    check_plat(plat);
    SliceSeq third{Slice::cap(1), Slice::cap(3)};
    third.insert(third.end(), plat.begin(), plat.end());
    third.push_back(Slice::cap(5));
    third.push_back(Slice::cap(7));
    // mirror copy of the plat on the right four strands, signs flipped, so the
    // fold onto the nested first tangle cancels the braid against its inverse
    for (const Slice& s : plat) third.push_back(Slice::cross(8 - s.pos, -s.sign));
    TrivialTangleWord d2 = matching_to_word(Matching{{{1, 8}, {2, 3}, {4, 5}, {6, 7}}});
    return {word_of({Slice::cap(1), Slice::cap(2), Slice::cap(3), Slice::cap(4)}), d2,
            word_of(std::move(third))};
}

int parse_int(const std::string& text) {
    if (text.empty()) throw Error("missing family parameter");
    std::size_t used = 0;
    int value = 0;
    try {
        value = std::stoi(text, &used);
    } catch (const std::exception&) {
        throw Error("bad family parameter '" + text + "'");
    }
    if (used != text.size()) throw Error("bad family parameter '" + text + "'");
    return value;
}

}  // namespace

FamilySpec FamilySpec::parse(const std::string& text) {
    std::string name = text;
    std::string params;
    if (auto colon = text.find(':'); colon != std::string::npos) {
        name = text.substr(0, colon);
        params = text.substr(colon + 1);
    }

    FamilySpec spec;
    if (name == "sphere") {
        if (!params.empty()) throw Error("sphere takes no parameters");
        spec.kind = Kind::Sphere;
        return spec;
    }
    if (name == "torus") {
        spec.kind = Kind::Torus;
        spec.genus = params.empty() ? 1 : parse_int(params);
        if (spec.genus < 1) throw Error("torus genus must be at least 1");
        return spec;
    }
    if (name == "p+" || name == "p-") {
        if (!params.empty()) throw Error("projective plane takes no parameters");
        spec.kind = name == "p+" ? Kind::ProjectivePlus : Kind::ProjectiveMinus;
        return spec;
    }
    if (name == "p") {
        auto comma = params.find(',');
        if (comma == std::string::npos) throw Error("projective family needs p:n,m");
        spec.kind = Kind::Projective;
        spec.n = parse_int(params.substr(0, comma));
        spec.m = parse_int(params.substr(comma + 1));
        if (spec.n < 0 || spec.m < 0 || spec.n + spec.m < 1)
            throw Error("projective family needs n, m >= 0 with n+m >= 1");
        return spec;
    }
    if (name == "spun") {
        spec.kind = Kind::Spun;
        std::string tokens = params;
        for (char& c : tokens)
            if (c == ',') c = ' ';
        std::istringstream in(tokens);
        std::string token;
        while (in >> token) spec.plat.push_back(parse_token(token));
        if (spec.plat.empty()) throw Error("spun family needs a plat word");
        return spec;
    }
    throw Error("unknown family '" + name + "'");
}

TriPlaneDiagram generate(const FamilySpec& spec) {
    switch (spec.kind) {
        case FamilySpec::Kind::Sphere:
            return sphere_diagram();
        case FamilySpec::Kind::Torus: {
            if (spec.genus < 1) throw Error("torus genus must be at least 1");
            TriPlaneDiagram d = torus_diagram();
            for (int i = 1; i < spec.genus; ++i) d = connected_sum(d, torus_diagram());
            return d;
        }
        case FamilySpec::Kind::ProjectivePlus:
            return projective_diagram(1);
        case FamilySpec::Kind::ProjectiveMinus:
            return projective_diagram(-1);
        case FamilySpec::Kind::Projective: {
            if (spec.n < 0 || spec.m < 0 || spec.n + spec.m < 1)
                throw Error("projective family needs n, m >= 0 with n+m >= 1");
            if (spec.m > spec.n) return mirror(projective_sum(spec.m, spec.n));
            return projective_sum(spec.n, spec.m);
        }
        case FamilySpec::Kind::Spun:
            return spun_diagram(spec.plat);
    }
    throw Error("unreachable family kind");
}

}  // namespace triplane
