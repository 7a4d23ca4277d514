#include "triplane/moves.h"

#include <sstream>

namespace triplane {

namespace {

Slice reindexed(const Slice& s, int pos) {
    Slice out = s;
    out.pos = pos;
    return out;
}

}  // namespace

std::optional<std::pair<Slice, Slice>> try_commute(const Slice& first, const Slice& second,
                                                   bool mark_commutes) {
    if ((first.kind == SliceKind::Mark || second.kind == SliceKind::Mark) && !mark_commutes)
        return std::nullopt;
    int j = first.pos;
    int k = second.pos;
    auto out = [&](int second_pos, int first_pos) {
        return std::make_pair(reindexed(second, second_pos), reindexed(first, first_pos));
    };
    switch (first.kind) {
        case SliceKind::Cap:
            switch (second.kind) {
                case SliceKind::Cap:
                    if (k >= j + 2) return out(k - 2, j);
                    if (k <= j) return out(k, j + 2);
                    return std::nullopt;
                case SliceKind::Cup:
                    if (k >= j + 2) return out(k - 2, j);
                    if (k <= j - 2) return out(k, j - 2);
                    return std::nullopt;
                default:
                    if (k >= j + 2) return out(k - 2, j);
                    if (k <= j - 2) return out(k, j);
                    return std::nullopt;
            }
        case SliceKind::Cup:
            switch (second.kind) {
                case SliceKind::Cap:
                    if (k >= j) return out(k + 2, j);
                    return out(k, j + 2);  // k <= j - 1
                case SliceKind::Cup:
                    if (k >= j) return out(k + 2, j);
                    if (k <= j - 2) return out(k, j - 2);
                    return std::nullopt;
                default:
                    if (k >= j) return out(k + 2, j);
                    if (k <= j - 2) return out(k, j);
                    return std::nullopt;
            }
        default:  // Cross or Mark first
            switch (second.kind) {
                case SliceKind::Cap:
                    if (k >= j + 2) return out(k, j);
                    if (k <= j) return out(k, j + 2);
                    return std::nullopt;
                case SliceKind::Cup:
                    if (k >= j + 2) return out(k, j);
                    if (k <= j - 2) return out(k, j - 2);
                    return std::nullopt;
                default:
                    if (k >= j + 2 || k <= j - 2) return out(k, j);
                    return std::nullopt;
            }
    }
}

namespace {

SliceSeq splice(const SliceSeq& word, size_t at, size_t remove, std::initializer_list<Slice> insert) {
    SliceSeq out;
    out.reserve(word.size() - remove + insert.size());
    out.insert(out.end(), word.begin(), word.begin() + at);
    out.insert(out.end(), insert.begin(), insert.end());
    out.insert(out.end(), word.begin() + at + remove, word.end());
    return out;
}

void push(std::vector<Rewrite>& out, std::string name, int site, std::string args,
          SliceSeq next) {
    width_profile(next, 0);  // every emitted rewrite must stay legal
    out.push_back({std::move(name), site, std::move(args), std::move(next)});
}

void rewrites_at_pair(const SliceSeq& word, size_t i, const RewriteOptions& opt,
                      std::vector<Rewrite>& out) {
    const Slice& a = word[i];
    const Slice& b = word[i + 1];

    if (opt.commutes) {
        if (auto swapped = try_commute(a, b, opt.mark_commutes))
            push(out, "commute", static_cast<int>(i), "",
                 splice(word, i, 2, {swapped->first, swapped->second}));
    }
    if (opt.snakes && a.kind == SliceKind::Cap && b.kind == SliceKind::Cup &&
        (b.pos == a.pos + 1 || b.pos == a.pos - 1))
        push(out, "snake", static_cast<int>(i), "", splice(word, i, 2, {}));
    if (opt.r1) {
        if (a.kind == SliceKind::Cap && b.kind == SliceKind::Cross && b.pos == a.pos)
            push(out, "r1", static_cast<int>(i), "", splice(word, i, 2, {a}));
        if (a.kind == SliceKind::Cross && b.kind == SliceKind::Cup && a.pos == b.pos)
            push(out, "r1", static_cast<int>(i), "", splice(word, i, 2, {b}));
    }
    if (opt.r2 && a.kind == SliceKind::Cross && b.kind == SliceKind::Cross && a.pos == b.pos &&
        a.sign == -b.sign)
        push(out, "r2", static_cast<int>(i), "", splice(word, i, 2, {}));
    if (opt.slides) {
        if (a.kind == SliceKind::Cap && b.kind == SliceKind::Cross &&
            (b.pos == a.pos + 1 || b.pos == a.pos - 1))
            push(out, "slide", static_cast<int>(i), "",
                 splice(word, i, 2, {Slice::cap(b.pos), Slice::cross(a.pos, -b.sign)}));
        if (a.kind == SliceKind::Cross && b.kind == SliceKind::Cup &&
            (a.pos == b.pos + 1 || a.pos == b.pos - 1))
            push(out, "slide", static_cast<int>(i), "",
                 splice(word, i, 2, {Slice::cross(b.pos, -a.sign), Slice::cup(a.pos)}));
    }
}

}  // namespace

std::vector<Rewrite> enumerate_rewrites(const SliceSeq& word, const RewriteOptions& opt) {
    std::vector<Rewrite> out;
    std::vector<int> widths = width_profile(word, 0);

    for (size_t i = 0; i + 1 < word.size(); ++i) rewrites_at_pair(word, i, opt, out);

    if (opt.r3) {
        for (size_t i = 0; i + 2 < word.size(); ++i) {
            const Slice& a = word[i];
            const Slice& b = word[i + 1];
            const Slice& c = word[i + 2];
            if (a.kind != SliceKind::Cross || b.kind != SliceKind::Cross ||
                c.kind != SliceKind::Cross)
                continue;
            if (a.pos != c.pos || (b.pos != a.pos + 1 && b.pos != a.pos - 1)) continue;
            // The all-over / all-under strand pattern (a == c with b == -a)
            // is not a braid identity and not a Reidemeister move.
            if (a.sign == c.sign && b.sign == -a.sign) continue;
            push(out, "r3", static_cast<int>(i), "",
                 splice(word, i, 3,
                        {Slice::cross(b.pos, c.sign), Slice::cross(a.pos, b.sign),
                         Slice::cross(b.pos, a.sign)}));
        }
    }

    if (opt.r1_inserts) {
        for (size_t i = 0; i < word.size(); ++i) {
            if (word[i].kind == SliceKind::Cap)
                for (int s : {1, -1})
                    push(out, "r1i", static_cast<int>(i), s > 0 ? "+" : "-",
                         splice(word, i + 1, 0, {Slice::cross(word[i].pos, s)}));
            if (word[i].kind == SliceKind::Cup)
                for (int s : {1, -1})
                    push(out, "r1i", static_cast<int>(i), s > 0 ? "+" : "-",
                         splice(word, i, 0, {Slice::cross(word[i].pos, s)}));
        }
    }
    if (opt.r2_inserts) {
        for (size_t i = 0; i <= word.size(); ++i) {
            int w = widths[i];
            for (int j = 1; j <= w - 1; ++j)
                for (int s : {1, -1})
                    push(out, "r2i", static_cast<int>(i),
                         std::to_string(j) + (s > 0 ? "+" : "-"),
                         splice(word, i, 0, {Slice::cross(j, s), Slice::cross(j, -s)}));
        }
    }
    if (opt.snake_inserts) {
        for (size_t i = 0; i <= word.size(); ++i) {
            int w = widths[i];
            for (int j = 1; j <= w; ++j) {
                push(out, "snakei", static_cast<int>(i), std::to_string(j) + "r",
                     splice(word, i, 0, {Slice::cap(j), Slice::cup(j + 1)}));
                push(out, "snakei", static_cast<int>(i), std::to_string(j) + "l",
                     splice(word, i, 0, {Slice::cap(j + 1), Slice::cup(j)}));
            }
        }
    }
    return out;
}

SliceSeq apply_rewrite_entry(const SliceSeq& word, const std::string& entry) {
    std::istringstream in(entry);
    std::string name, at, args;
    int site = -1;
    in >> name >> at >> site;
    if (at != "@" || site < 0) throw Error("bad rewrite entry '" + entry + "'");
    std::getline(in, args);
    size_t start = args.find_first_not_of(' ');
    args = (start == std::string::npos) ? "" : args.substr(start);

    RewriteOptions all;
    all.r1_inserts = all.r2_inserts = all.snake_inserts = all.mark_commutes = true;
    for (const Rewrite& rw : enumerate_rewrites(word, all))
        if (rw.name == name && rw.site == site && rw.args == args) return rw.word;
    throw Error("rewrite '" + entry + "' does not apply");
}

}  // namespace triplane
