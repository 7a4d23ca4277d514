#include "triplane/slice.h"

namespace triplane {

int width_after(const Slice& s, int width) {
    switch (s.kind) {
        case SliceKind::Cap:
            if (s.pos < 1 || s.pos > width + 1)
                throw Error("cap" + std::to_string(s.pos) + " illegal at width " + std::to_string(width));
            return width + 2;
        case SliceKind::Cup:
            if (s.pos < 1 || s.pos > width - 1)
                throw Error("cup" + std::to_string(s.pos) + " illegal at width " + std::to_string(width));
            return width - 2;
        case SliceKind::Cross:
            if (s.pos < 1 || s.pos > width - 1)
                throw Error("x" + std::to_string(s.pos) + " illegal at width " + std::to_string(width));
            if (s.sign != 1 && s.sign != -1)
                throw Error("crossing sign must be +1 or -1");
            return width;
        case SliceKind::Mark:
            if (s.pos < 1 || s.pos > width - 1)
                throw Error("mark" + std::to_string(s.pos) + " illegal at width " + std::to_string(width));
            return width;
    }
    throw Error("unreachable slice kind");
}

std::string to_token(const Slice& s) {
    switch (s.kind) {
        case SliceKind::Cap:
            return "cap" + std::to_string(s.pos);
        case SliceKind::Cup:
            return "cup" + std::to_string(s.pos);
        case SliceKind::Cross:
            return "x" + std::to_string(s.pos) + (s.sign > 0 ? "+" : "-");
        case SliceKind::Mark:
            return "mark" + std::to_string(s.pos) + (s.axis == MarkAxis::Parallel ? "p" : "t");
    }
    throw Error("unreachable slice kind");
}

namespace {

int parse_pos(const std::string& token, size_t begin, size_t end) {
    if (begin >= end) throw Error("bad token '" + token + "': missing position");
    int value = 0;
    for (size_t i = begin; i < end; ++i) {
        char c = token[i];
        if (c < '0' || c > '9') throw Error("bad token '" + token + "': bad position");
        value = value * 10 + (c - '0');
        if (value > 1000000) throw Error("bad token '" + token + "': position out of range");
    }
    if (value < 1) throw Error("bad token '" + token + "': position must be >= 1");
    return value;
}

}  // namespace

Slice parse_token(const std::string& token) {
    if (token.rfind("cap", 0) == 0)
        return Slice::cap(parse_pos(token, 3, token.size()));
    if (token.rfind("cup", 0) == 0)
        return Slice::cup(parse_pos(token, 3, token.size()));
    if (token.size() >= 3 && token[0] == 'x') {
        char last = token.back();
        if (last != '+' && last != '-') throw Error("bad token '" + token + "': missing crossing sign");
        return Slice::cross(parse_pos(token, 1, token.size() - 1), last == '+' ? 1 : -1);
    }
    if (token.rfind("mark", 0) == 0 && token.size() >= 6) {
        char last = token.back();
        if (last != 'p' && last != 't') throw Error("bad token '" + token + "': missing mark axis");
        MarkAxis axis = (last == 'p') ? MarkAxis::Parallel : MarkAxis::Turnback;
        return Slice::mark(parse_pos(token, 4, token.size() - 1), axis);
    }
    throw Error("bad token '" + token + "'");
}

}  // namespace triplane
