#include "triplane/bracket.h"

#include <bit>

#include "triplane/orient.h"
#include "triplane/trace.h"

namespace triplane {

LaurentPoly LaurentPoly::monomial(std::int64_t coeff, int exponent) {
    LaurentPoly p;
    if (coeff != 0) p.coeffs_[exponent] = coeff;
    return p;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
    for (auto [e, c] : rhs.coeffs_) {
        auto it = coeffs_.find(e);
        if (it == coeffs_.end()) {
            coeffs_[e] = c;
        } else {
            it->second += c;
            if (it->second == 0) coeffs_.erase(it);
        }
    }
    return *this;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& rhs) const {
    LaurentPoly out;
    for (auto [e1, c1] : coeffs_)
        for (auto [e2, c2] : rhs.coeffs_)
            out += monomial(c1 * c2, e1 + e2);
    return out;
}

std::string LaurentPoly::to_string() const {
    if (coeffs_.empty()) return "0";
    std::string out;
    for (auto [e, c] : coeffs_) {
        if (!out.empty())
            out += c > 0 ? " + " : " - ";
        else if (c < 0)
            out += "-";
        std::int64_t mag = c > 0 ? c : -c;
        std::string term;
        if (mag != 1 || e == 0) term += std::to_string(mag);
        if (e != 0) {
            if (!term.empty()) term += "*";
            term += "A";
            if (e != 1) term += "^" + std::to_string(e);
        }
        out += term;
    }
    return out;
}

LaurentPoly loop_value_power(int power) {
    LaurentPoly delta = LaurentPoly::monomial(-1, 2);
    delta += LaurentPoly::monomial(-1, -2);
    LaurentPoly out = LaurentPoly::monomial(1, 0);
    for (int i = 0; i < power; ++i) out = out * delta;
    return out;
}

namespace {

// Loop count of the diagram with each crossing smoothed. For a +1 crossing
// the A-smoothing joins the strands vertically (slice dropped) and the
// B-smoothing turns them back (cup then cap); a -1 crossing swaps the two.
int state_loops(const SliceSeq& slices, const std::vector<int>& crossing_sites, unsigned state) {
    SliceSeq smoothed;
    smoothed.reserve(slices.size() + crossing_sites.size());
    size_t next_crossing = 0;
    for (size_t i = 0; i < slices.size(); ++i) {
        const Slice& s = slices[i];
        if (s.kind != SliceKind::Cross) {
            smoothed.push_back(s);
            continue;
        }
        bool use_a = ((state >> next_crossing) & 1u) == 0u;
        ++next_crossing;
        bool vertical = (s.sign > 0) == use_a;
        if (!vertical) {
            smoothed.push_back(Slice::cup(s.pos));
            smoothed.push_back(Slice::cap(s.pos));
        }
    }
    return closed_components(smoothed);
}

}  // namespace

LaurentPoly kauffman_bracket(const LinkWord& word, int max_crossings) {
    const SliceSeq& slices = word.slices();
    std::vector<int> crossing_sites;
    for (size_t i = 0; i < slices.size(); ++i)
        if (slices[i].kind == SliceKind::Cross) crossing_sites.push_back(static_cast<int>(i));
    int n = static_cast<int>(crossing_sites.size());
    if (n > max_crossings)
        throw Error("bracket bound exceeded: " + std::to_string(n) + " crossings");

    int max_loops = static_cast<int>(count_kind(slices, SliceKind::Cap)) + n;
    std::vector<LaurentPoly> delta_powers(max_loops + 1);
    for (int c = 0; c <= max_loops; ++c) delta_powers[c] = loop_value_power(c);

    LaurentPoly out;
    for (unsigned state = 0; state < (1u << n); ++state) {
        int b_count = static_cast<int>(std::popcount(state));
        int exponent = (n - b_count) - b_count;  // (#A) - (#B)
        int loops = state_loops(slices, crossing_sites, state);
        out += LaurentPoly::monomial(1, exponent) * delta_powers[loops];
    }
    return out;
}

bool bracket_matches_unlink(const LinkWord& word, int max_crossings) {
    OrientedTrace tr = oriented_trace(word);
    LaurentPoly lhs = kauffman_bracket(word, max_crossings);
    int w = tr.writhe;
    // (-A^3)^w = (-1)^w A^(3w)
    LaurentPoly twist = LaurentPoly::monomial((w % 2 == 0) ? 1 : -1, 3 * w);
    LaurentPoly rhs = twist * loop_value_power(tr.components);
    return lhs == rhs;
}

}  // namespace triplane
