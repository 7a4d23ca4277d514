#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "triplane/moves.h"
#include "triplane/search.h"
#include "triplane/trace.h"
#include "triplane/triplane.h"
#include "triplane/word.h"

using namespace triplane;

namespace {

bool has_result(const std::vector<Rewrite>& rewrites, const std::string& tokens) {
    return std::any_of(rewrites.begin(), rewrites.end(),
                       [&](const Rewrite& r) { return r.word == parse_tokens(tokens); });
}

}  // namespace

TEST_CASE("reducing rewrites find the classical simplifications") {
    const RewriteOptions opt;
    SUBCASE("a cancelling crossing pair disappears") {
        const auto rewrites = enumerate_rewrites(parse_tokens("cap1 cap3 x2+ x2-"), opt);
        CHECK(has_result(rewrites, "cap1 cap3"));
    }
    SUBCASE("a kink is absorbed into its cap") {
        const auto rewrites = enumerate_rewrites(parse_tokens("cap1 x1+"), opt);
        CHECK(has_result(rewrites, "cap1"));
    }
    SUBCASE("a cap-cup zigzag straightens") {
        const auto rewrites = enumerate_rewrites(parse_tokens("cap1 cap2 cup3"), opt);
        CHECK(has_result(rewrites, "cap1"));
    }
    SUBCASE("a braid triangle flips") {
        const auto rewrites =
            enumerate_rewrites(parse_tokens("cap1 cap3 cap5 x2+ x3+ x2+"), opt);
        CHECK(has_result(rewrites, "cap1 cap3 cap5 x3+ x2+ x3+"));
    }
}

TEST_CASE("adjacent disjoint slices commute with index arithmetic") {
    const auto caps = try_commute(Slice::cap(1), Slice::cap(3));
    REQUIRE(caps.has_value());
    CHECK(caps->first == Slice::cap(1));
    CHECK(caps->second == Slice::cap(1));

    const auto mixed = try_commute(Slice::cap(1), Slice::cross(3, 1));
    REQUIRE(mixed.has_value());
    CHECK(mixed->first == Slice::cross(1, 1));
    CHECK(mixed->second == Slice::cap(1));

    CHECK_FALSE(try_commute(Slice::cross(1, 1), Slice::cross(2, 1)).has_value());

    SUBCASE("marks stay put unless explicitly allowed to move") {
        const Slice mark = Slice::mark(1, MarkAxis::Parallel);
        CHECK_FALSE(try_commute(mark, Slice::cross(3, 1)).has_value());
        const auto moved = try_commute(mark, Slice::cross(3, 1), true);
        REQUIRE(moved.has_value());
        CHECK(moved->first == Slice::cross(3, 1));
        CHECK(moved->second == mark);
    }
}

TEST_CASE("insert moves grow the word and reverse exactly") {
    RewriteOptions ins;
    ins.commutes = false;
    ins.snakes = false;
    ins.r1 = false;
    ins.r2 = false;
    ins.r3 = false;
    ins.slides = false;
    ins.r1_inserts = true;
    ins.r2_inserts = true;
    ins.snake_inserts = true;

    const SliceSeq start = parse_tokens("cap1");
    const auto grown = enumerate_rewrites(start, ins);
    CHECK(has_result(grown, "cap1 x1+"));
    CHECK(has_result(grown, "cap1 x1+ x1-"));
    CHECK(has_result(grown, "cap1 cap2 cup1"));

    RewriteOptions shrink;
    for (const Rewrite& r : grown) {
        CHECK(r.word.size() > start.size());
        const auto back = enumerate_rewrites(r.word, shrink);
        CHECK(std::any_of(back.begin(), back.end(),
                          [&](const Rewrite& s) { return s.word == start; }));
    }
}

TEST_CASE("every rewrite preserves the arc pairing and width legality") {
    RewriteOptions opt;
    opt.r1_inserts = true;
    opt.r2_inserts = true;
    opt.snake_inserts = true;
    for (std::uint64_t seed = 1; seed <= 8; ++seed) {
        const TriPlaneDiagram d = random_valid_diagram(3, 6, seed);
        for (const TrivialTangleWord& t : d.tangles()) {
            const Matching before = arc_pairing(t.slices());
            for (const Rewrite& r : enumerate_rewrites(t.slices(), opt)) {
                CHECK(width_profile(r.word, 0).back() == 2 * t.bridges());
                CHECK(arc_pairing(r.word) == before);
            }
        }
    }
}

TEST_CASE("logged rewrites replay through apply_rewrite_entry") {
    const SliceSeq word = parse_tokens("cap1 cap3 x2+ x2-");
    RewriteOptions opt;
    opt.r2_inserts = true;
    for (const Rewrite& r : enumerate_rewrites(word, opt)) {
        const std::string entry = r.log_entry("D1").substr(4);
        CHECK(apply_rewrite_entry(word, entry) == r.word);
    }
    CHECK_THROWS_AS(apply_rewrite_entry(word, "r2 @ 0"), Error);
    CHECK_THROWS_AS(apply_rewrite_entry(word, "warp @ 1"), Error);
}
