#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "triplane/families.h"
#include "triplane/search.h"
#include "triplane/triplane.h"
#include "triplane/word.h"

using namespace triplane;

namespace {

InvariantReport report(const std::string& spec) {
    return invariants(generate(FamilySpec::parse(spec)));
}

}  // namespace

TEST_CASE("family specs parse and reject malformed input") {
    CHECK(FamilySpec::parse("sphere").kind == FamilySpec::Kind::Sphere);
    CHECK(FamilySpec::parse("torus").genus == 1);
    CHECK(FamilySpec::parse("torus:3").genus == 3);
    CHECK(FamilySpec::parse("p+").kind == FamilySpec::Kind::ProjectivePlus);
    CHECK(FamilySpec::parse("p-:").kind == FamilySpec::Kind::ProjectiveMinus);
    const FamilySpec p = FamilySpec::parse("p:2,1");
    CHECK(p.n == 2);
    CHECK(p.m == 1);
    CHECK(FamilySpec::parse("spun:x2+,x2+,x2+").plat.size() == 3);
    CHECK(FamilySpec::parse("spun:x2+ x1- x2+").plat.size() == 3);

    CHECK_THROWS_AS(FamilySpec::parse("cube"), Error);
    CHECK_THROWS_AS(FamilySpec::parse("torus:0"), Error);
    CHECK_THROWS_AS(FamilySpec::parse("p:1"), Error);
    CHECK_THROWS_AS(FamilySpec::parse("p:0,0"), Error);
    CHECK_THROWS_AS(FamilySpec::parse("p:x,1"), Error);
    CHECK_THROWS_AS(FamilySpec::parse("spun:"), Error);
    CHECK_THROWS_AS(FamilySpec::parse("sphere:2"), Error);
}

TEST_CASE("unknotted surface generators") {
    SUBCASE("sphere") {
        const InvariantReport r = report("sphere");
        CHECK(r.bridges == 1);
        CHECK(r.euler == 2);
        CHECK(r.orientable);
    }
    SUBCASE("tori of any genus") {
        for (int g = 1; g <= 3; ++g) {
            const InvariantReport r = report("torus:" + std::to_string(g));
            CHECK(r.euler == 2 - 2 * g);
            CHECK(r.normal_euler == 0);
            CHECK(r.total_crossings == 0);
            CHECK(r.orientable);
            CHECK(r.bridges == 1 + 2 * g);
        }
        CHECK(report("torus:2").type_partition == "T2#T2");
    }
    SUBCASE("projective planes of both signs") {
        const InvariantReport plus = report("p+");
        CHECK(plus.normal_euler == 2);
        CHECK(plus.total_crossings == 1);
        CHECK_FALSE(plus.orientable);
        const InvariantReport minus = report("p-");
        CHECK(minus.normal_euler == -2);
        CHECK(minus.euler == 1);
    }
}

TEST_CASE("projective plane sums realize the minimal crossing count") {
    SUBCASE("balanced core") {
        const InvariantReport r = report("p:1,1");
        CHECK(r.bridges == 3);
        CHECK(r.total_crossings == 1);
        CHECK(r.euler == 0);
        CHECK(r.normal_euler == 0);
        CHECK_FALSE(r.orientable);
    }
    SUBCASE("asymmetric example") {
        const InvariantReport r = report("p:3,1");
        CHECK(r.total_crossings == 2);
        CHECK(r.normal_euler == 4);
    }
    SUBCASE("full grid") {
        for (int n = 0; n <= 5; ++n) {
            for (int m = 0; m <= 5; ++m) {
                if (n + m < 1) continue;
                const InvariantReport r =
                    report("p:" + std::to_string(n) + "," + std::to_string(m));
                const int gap = n > m ? n - m : m - n;
                CHECK(r.total_crossings == (gap > 1 ? gap : 1));
                CHECK(r.normal_euler == 2 * (n - m));
                CHECK(r.bridges == n + m + 1);
                CHECK(r.euler == 2 - (n + m));
                CHECK_FALSE(r.orientable);
            }
        }
    }
}

TEST_CASE("spun two-bridge knots have four bridges and doubled crossings") {
    const InvariantReport r = report("spun:x2+,x2+,x2+");
    CHECK(r.bridges == 4);
    CHECK(r.total_crossings == 6);
    CHECK(r.euler == 2);
    CHECK(r.normal_euler == 0);
    CHECK(r.orientable);
    CHECK(r.type_partition == "S2");
    CHECK(r.concentrated);

    SUBCASE("crossing count is twice the plat length") {
        CHECK(report("spun:x2-,x2-,x2-,x2-,x2-").total_crossings == 10);
    }
    SUBCASE("plat words touching the rightmost strand are rejected") {
        CHECK_THROWS_AS(generate(FamilySpec::parse("spun:x3+")), Error);
    }
    SUBCASE("plat closures that are links are rejected") {
        CHECK_THROWS_AS(generate(FamilySpec::parse("spun:x2+,x2+")), Error);
    }
}

TEST_CASE("generated family diagrams validate with full certification") {
    const Certifier certifier = make_certifier({});
    for (const std::string spec :
         {"sphere", "torus:1", "torus:2", "p+", "p-", "p:1,1", "p:2,1", "spun:x2+,x2+,x2+"}) {
        CAPTURE(spec);
        CHECK(validate_triplane(generate(FamilySpec::parse(spec)), certifier).valid());
    }
}
