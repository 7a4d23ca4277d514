#include "triplane/word.h"

#include <sstream>

#include "triplane/trace.h"

namespace triplane {

std::vector<int> width_profile(const SliceSeq& slices, int start_width) {
    std::vector<int> widths;
    widths.reserve(slices.size() + 1);
    int w = start_width;
    widths.push_back(w);
    for (const Slice& s : slices) {
        w = width_after(s, w);
        widths.push_back(w);
    }
    return widths;
}

int count_kind(const SliceSeq& slices, SliceKind kind) {
    int n = 0;
    for (const Slice& s : slices)
        if (s.kind == kind) ++n;
    return n;
}

int count_crossings(const SliceSeq& slices) { return count_kind(slices, SliceKind::Cross); }

SliceSeq reflect(const SliceSeq& slices) {
    SliceSeq out;
    out.reserve(slices.size());
    for (auto it = slices.rbegin(); it != slices.rend(); ++it) {
        Slice s = *it;
        switch (s.kind) {
            case SliceKind::Cap: s.kind = SliceKind::Cup; break;
            case SliceKind::Cup: s.kind = SliceKind::Cap; break;
            case SliceKind::Cross: s.sign = -s.sign; break;
            case SliceKind::Mark: break;
        }
        out.push_back(s);
    }
    return out;
}

SliceSeq shift_right(const SliceSeq& slices, int offset) {
    SliceSeq out = slices;
    for (Slice& s : out) s.pos += offset;
    return out;
}

std::string to_tokens(const SliceSeq& slices) {
    std::string out;
    for (size_t i = 0; i < slices.size(); ++i) {
        if (i) out += ' ';
        out += to_token(slices[i]);
    }
    return out;
}

SliceSeq parse_tokens(const std::string& text) {
    SliceSeq out;
    std::istringstream in(text);
    std::string token;
    while (in >> token) out.push_back(parse_token(token));
    return out;
}

TrivialTangleWord::TrivialTangleWord(SliceSeq slices) : slices_(std::move(slices)) {
    width_profile(slices_, 0);
    for (const Slice& s : slices_) {
        if (s.kind == SliceKind::Cup) throw Error("tangle word contains a cup");
        if (s.kind == SliceKind::Mark) throw Error("tangle word contains a mark");
    }
    b_ = count_kind(slices_, SliceKind::Cap);
    if (b_ < 1) throw Error("tangle word has no caps");
}

std::string TrivialTangleWord::to_line() const {
    std::string out = "b=" + std::to_string(b_) + ":";
    std::string tokens = to_tokens(slices_);
    if (!tokens.empty()) out += ' ' + tokens;
    return out;
}

TrivialTangleWord TrivialTangleWord::parse_line(const std::string& line) {
    if (line.rfind("b=", 0) != 0) throw Error("tangle line must start with 'b='");
    size_t colon = line.find(':');
    if (colon == std::string::npos) throw Error("tangle line missing ':'");
    int b = 0;
    try {
        size_t used = 0;
        b = std::stoi(line.substr(2, colon - 2), &used);
        if (used != colon - 2) throw Error("bad bridge count");
    } catch (const std::exception&) {
        throw Error("bad bridge count in tangle line");
    }
    TrivialTangleWord word(parse_tokens(line.substr(colon + 1)));
    if (word.bridges() != b)
        throw Error("tangle line declares b=" + std::to_string(b) + " but word has " +
                    std::to_string(word.bridges()) + " caps");
    return word;
}

GenericTangleWord::GenericTangleWord(SliceSeq slices) : slices_(std::move(slices)) {
    auto widths = width_profile(slices_, 0);
    for (const Slice& s : slices_)
        if (s.kind == SliceKind::Mark) throw Error("generic tangle word contains a mark");
    if (widths.back() % 2 != 0) throw Error("tangle word ends at odd width");
    b_ = widths.back() / 2;
    if (b_ < 1) throw Error("generic tangle word ends at width 0");
    arc_pairing(slices_);  // rejects closed components
}

LinkWord::LinkWord(SliceSeq slices) : slices_(std::move(slices)) {
    auto widths = width_profile(slices_, 0);
    if (widths.back() != 0) throw Error("link word does not close up to width 0");
    for (const Slice& s : slices_)
        if (s.kind == SliceKind::Mark) throw Error("link word contains a mark");
}

std::string LinkWord::to_line() const {
    std::string out = "link:";
    std::string tokens = to_tokens(slices_);
    if (!tokens.empty()) out += ' ' + tokens;
    return out;
}

MarkedWord::MarkedWord(SliceSeq slices) : slices_(std::move(slices)) {
    auto widths = width_profile(slices_, 0);
    if (widths.back() != 0) throw Error("marked word does not close up to width 0");
}

int MarkedWord::mark_count() const { return count_kind(slices_, SliceKind::Mark); }

std::string MarkedWord::to_line() const {
    std::string out = "link:";
    std::string tokens = to_tokens(slices_);
    if (!tokens.empty()) out += ' ' + tokens;
    return out;
}

MarkedWord MarkedWord::parse_line(const std::string& line) {
    if (line.rfind("link:", 0) != 0) throw Error("link line must start with 'link:'");
    return MarkedWord(parse_tokens(line.substr(5)));
}

}  // namespace triplane
