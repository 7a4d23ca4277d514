#pragma once

#include <string>
#include <vector>

#include "triplane/slice.h"

namespace triplane {

using SliceSeq = std::vector<Slice>;

// Widths between slices: result[0] = start_width, result[i+1] = width below
// slice i. Throws Error on any illegal slice.
std::vector<int> width_profile(const SliceSeq& slices, int start_width);

int count_kind(const SliceSeq& slices, SliceKind kind);
int count_crossings(const SliceSeq& slices);

// Top-bottom mirror image: slice order reversed, caps and cups exchanged,
// crossing signs flipped, positions and mark axes unchanged.
SliceSeq reflect(const SliceSeq& slices);

// Shift every strand index right by `offset` positions.
SliceSeq shift_right(const SliceSeq& slices, int offset);

std::string to_tokens(const SliceSeq& slices);
SliceSeq parse_tokens(const std::string& text);

// Flat b-strand tangle word: caps and crossings only, runs from width 0 to
// width 2b with exactly b caps. The tangles of a tri-plane diagram live here.
class TrivialTangleWord {
public:
    TrivialTangleWord() = default;
    explicit TrivialTangleWord(SliceSeq slices);

    int bridges() const { return b_; }
    const SliceSeq& slices() const { return slices_; }

    std::string to_line() const;  // "b=N: tok tok ..."
    static TrivialTangleWord parse_line(const std::string& line);

    bool operator==(const TrivialTangleWord&) const = default;

private:
    int b_ = 0;
    SliceSeq slices_;
};

// Tangle word that may also contain cups (width 0 to 2b, no marks, no closed
// components). Produced while resolving marked vertices, before cup removal.
class GenericTangleWord {
public:
    GenericTangleWord() = default;
    explicit GenericTangleWord(SliceSeq slices);

    int bridges() const { return b_; }
    const SliceSeq& slices() const { return slices_; }

    bool operator==(const GenericTangleWord&) const = default;

private:
    int b_ = 0;
    SliceSeq slices_;
};

// Closed diagram of a link: width 0 to 0, no marks.
class LinkWord {
public:
    LinkWord() = default;
    explicit LinkWord(SliceSeq slices);

    const SliceSeq& slices() const { return slices_; }
    std::string to_line() const;  // "link: tok tok ..."

    bool operator==(const LinkWord&) const = default;

private:
    SliceSeq slices_;
};

// Closed diagram with marked vertices allowed: width 0 to 0.
class MarkedWord {
public:
    MarkedWord() = default;
    explicit MarkedWord(SliceSeq slices);

    const SliceSeq& slices() const { return slices_; }
    int mark_count() const;
    std::string to_line() const;  // "link: tok tok ..."
    static MarkedWord parse_line(const std::string& line);

    bool operator==(const MarkedWord&) const = default;

private:
    SliceSeq slices_;
};

}  // namespace triplane
