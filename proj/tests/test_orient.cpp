#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdlib>

#include "triplane/orient.h"
#include "triplane/search.h"
#include "triplane/triplane.h"
#include "triplane/word.h"

using namespace triplane;

namespace {

LinkWord link(const std::string& tokens) { return LinkWord(parse_tokens(tokens)); }

}  // namespace

TEST_CASE("writhe of crossingless words is zero") {
    CHECK(writhe(link("")) == 0);
    CHECK(writhe(link("cap1 cup1")) == 0);
    CHECK(writhe(link("cap1 cap1 cup1 cup1")) == 0);
}

TEST_CASE("writhe of one-crossing closures") {
    // the third tangle of the standard projective plane against a plain cap
    // pair closes to a one-crossing unknot of writhe +1
    const TrivialTangleWord t1(parse_tokens("cap1 cap3"));
    const TrivialTangleWord t3(parse_tokens("cap1 cap3 x2+"));
    CHECK(writhe(pair_closure(t3, t1)) == 1);

    const int kink = writhe(link("cap1 x1+ cup1"));
    CHECK((kink == 1 || kink == -1));
    CHECK(writhe(link("cap1 x1- cup1")) == -kink);
}

TEST_CASE("oriented trace of a knot has a one-by-one zero linking matrix") {
    const OrientedTrace tr = oriented_trace(link("cap1 cap3 x2+ cup3 cup1"));
    CHECK(tr.components == 1);
    REQUIRE(tr.linking.size() == 1);
    CHECK(tr.linking[0][0] == 0);
    CHECK_FALSE(tr.any_linking());
}

TEST_CASE("hopf words carry linking number of absolute value one") {
    const OrientedTrace plus = oriented_trace(link("cap1 cap3 x2+ x2+ cup1 cup1"));
    REQUIRE(plus.components == 2);
    CHECK(std::abs(plus.linking[0][1]) == 1);
    CHECK(plus.linking[0][1] == plus.linking[1][0]);
    CHECK(plus.linking[0][0] == 0);
    CHECK(plus.any_linking());
    // all crossings lie between the two components, so the writhe is twice
    // the linking number
    CHECK(plus.writhe == 2 * plus.linking[0][1]);

    const OrientedTrace minus = oriented_trace(link("cap1 cap3 x2- x2- cup1 cup1"));
    CHECK(minus.linking[0][1] == -plus.linking[0][1]);
}

TEST_CASE("writhe negates under reflection") {
    const LinkWord words[] = {
        link("cap1 cap3 x2+ cup3 cup1"),
        link("cap1 cap3 x2+ x2+ x2+ cup1 cup1"),
        link("cap1 x1+ x1+ cup1"),
    };
    for (const LinkWord& w : words)
        CHECK(writhe(LinkWord(reflect(w.slices()))) == -writhe(w));
}

TEST_CASE("unlink closures have zero linking, so writhe is a sum of self writhes") {
    // orientation independence of the writhe for the closures the validity
    // check cares about: with a zero linking matrix, reversing any component
    // leaves the crossing sign sum unchanged
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        const TriPlaneDiagram d = random_valid_diagram(3, 8, seed);
        for (const LinkWord& c : closures(d)) {
            const OrientedTrace tr = oriented_trace(c);
            CHECK_FALSE(tr.any_linking());
            int diag = 0;
            for (std::size_t i = 0; i < tr.linking.size(); ++i) diag += tr.linking[i][i];
            CHECK(diag == 0);
        }
    }
}

TEST_CASE("oriented trace counts components like the plain trace") {
    CHECK(oriented_trace(link("")).components == 0);
    CHECK(oriented_trace(link("cap1 cap1 cup1 cup1")).components == 2);
    CHECK(oriented_trace(link("cap1 cap3 x2+ x2+ cup1 cup1")).writhe ==
          writhe(link("cap1 cap3 x2+ x2+ cup1 cup1")));
}
