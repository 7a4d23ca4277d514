#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "triplane/bracket.h"
#include "triplane/trace.h"
#include "triplane/triplane.h"
#include "triplane/word.h"

using namespace triplane;

namespace {

LinkWord link(const std::string& tokens) { return LinkWord(parse_tokens(tokens)); }

}  // namespace

TEST_CASE("laurent polynomial arithmetic") {
    LaurentPoly p = LaurentPoly::monomial(1, 1);
    p += LaurentPoly::monomial(1, 0);
    LaurentPoly q = LaurentPoly::monomial(1, 1);
    q += LaurentPoly::monomial(-1, 0);
    CHECK((p * q).to_string() == "-1 + A^2");

    SUBCASE("cancelling terms vanish") {
        LaurentPoly r = p * q;
        r += LaurentPoly::monomial(1, 0);
        r += LaurentPoly::monomial(-1, 2);
        CHECK(r.is_zero());
        CHECK(r.to_string() == "0");
    }

    SUBCASE("string form") {
        CHECK(LaurentPoly().to_string() == "0");
        CHECK(LaurentPoly::monomial(3, 0).to_string() == "3");
        CHECK(LaurentPoly::monomial(1, 2).to_string() == "A^2");
        CHECK(LaurentPoly::monomial(-1, -2).to_string() == "-A^-2");
        CHECK(LaurentPoly::monomial(-2, 1).to_string() == "-2*A");
    }
}

TEST_CASE("loop values are powers of the loop constant") {
    CHECK(loop_value_power(0).to_string() == "1");
    CHECK(loop_value_power(1).to_string() == "-A^-2 - A^2");
    CHECK(loop_value_power(2) == loop_value_power(1) * loop_value_power(1));
}

TEST_CASE("bracket of crossingless diagrams counts loops") {
    CHECK(kauffman_bracket(link("")) == loop_value_power(0));
    CHECK(kauffman_bracket(link("cap1 cup1")) == loop_value_power(1));
    CHECK(kauffman_bracket(link("cap1 cap1 cup1 cup1")) == loop_value_power(2));
    CHECK(kauffman_bracket(link("cap1 cap3 cup1 cup1")) == loop_value_power(2));

    SUBCASE("exhaustive over paired noncrossing matchings, up to five loops") {
        for (int b = 1; b <= 5; ++b) {
            for (const Matching& top : noncrossing_matchings(b)) {
                for (const Matching& bot : noncrossing_matchings(b)) {
                    const LinkWord w =
                        pair_closure(matching_to_word(top), matching_to_word(bot));
                    CHECK(kauffman_bracket(w) == loop_value_power(cycle_count(top, bot)));
                }
            }
        }
    }
}

TEST_CASE("bracket distinguishes knotted closures from unlinks") {
    CHECK(kauffman_bracket(link("cap1 cap3 x2+ x2+ cup1 cup1")).to_string() ==
          "A^-6 + A^-2 + A^2 + A^6");
    CHECK(kauffman_bracket(link("cap1 cap3 x2+ x2+ x2+ cup1 cup1")).to_string() ==
          "-A^-9 + A^-1 + A^3 + A^7");
    CHECK_FALSE(bracket_matches_unlink(link("cap1 cap3 x2+ x2+ cup1 cup1")));
    CHECK_FALSE(bracket_matches_unlink(link("cap1 cap3 x2+ x2+ x2+ cup1 cup1")));
}

TEST_CASE("writhe normalization absorbs kinks") {
    CHECK(bracket_matches_unlink(link("cap1 x1+ cup1")));
    CHECK(bracket_matches_unlink(link("cap1 x1- cup1")));
    CHECK(bracket_matches_unlink(link("cap1 x1+ x1+ x1- cup1")));
    // split union of a kinked unknot and a plain one
    CHECK(bracket_matches_unlink(link("cap1 x1+ cup1 cap1 cup1")));
}

TEST_CASE("bracket is invariant under a cancelling crossing pair") {
    const LinkWord plain = link("cap1 cap1 cup1 cup1");
    const LinkWord r2 = link("cap1 cap1 x2+ x2- cup1 cup1");
    CHECK(kauffman_bracket(plain) == kauffman_bracket(r2));
}

TEST_CASE("crossing bound is enforced") {
    SliceSeq big = parse_tokens("cap1 cap3");
    for (int i = 0; i < 21; ++i) big.push_back(Slice::cross(2, 1));
    big.push_back(Slice::cup(1));
    big.push_back(Slice::cup(1));
    CHECK_THROWS_AS(kauffman_bracket(LinkWord(big)), Error);

    SliceSeq small = parse_tokens("cap1 cap3");
    for (int i = 0; i < 6; ++i) small.push_back(Slice::cross(2, 1));
    small.push_back(Slice::cup(1));
    small.push_back(Slice::cup(1));
    CHECK_THROWS_AS(kauffman_bracket(LinkWord(small), 5), Error);
    CHECK_NOTHROW(kauffman_bracket(LinkWord(small)));
}
