#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "triplane/chconvert.h"
#include "triplane/families.h"
#include "triplane/render.h"
#include "triplane/word.h"

using namespace triplane;

namespace {

DiagramFile triplane_file(const TriPlaneDiagram& d) {
    DiagramFile f;
    f.kind = DiagramFileKind::TriPlane;
    f.triplane = d;
    return f;
}

DiagramFile marked_file(const MarkedWord& m) {
    DiagramFile f;
    f.kind = DiagramFileKind::Marked;
    f.marked = m;
    return f;
}

std::size_t count(const std::string& text, const std::string& needle) {
    std::size_t n = 0;
    for (std::size_t pos = text.find(needle); pos != std::string::npos;
         pos = text.find(needle, pos + needle.size()))
        ++n;
    return n;
}

}  // namespace

TEST_CASE("the sphere renders as three bare arcs") {
    const std::string svg = render_svg(triplane_file(generate(FamilySpec::parse("sphere"))));
    CHECK(svg.rfind("<svg xmlns=\"http://www.w3.org/2000/svg\"", 0) == 0);
    CHECK(svg.find("</svg>") != std::string::npos);
    CHECK(count(svg, "<path") == 3);
    CHECK(count(svg, ">D1<") == 1);
    CHECK(count(svg, ">D2<") == 1);
    CHECK(count(svg, ">D3<") == 1);
}

TEST_CASE("rendering is deterministic") {
    const DiagramFile f = triplane_file(generate(FamilySpec::parse("p+")));
    const std::string once = render_svg(f);
    CHECK(render_svg(f) == once);
    CHECK_FALSE(once.empty());
}

TEST_CASE("a crossing adds strokes to its panel") {
    const std::string plain =
        render_svg(triplane_file(generate(FamilySpec::parse("sphere"))));
    const std::string crossed = render_svg(triplane_file(generate(FamilySpec::parse("p+"))));
    // the one-crossing diagram needs strictly more line segments to draw the
    // broken under-strand
    CHECK(count(crossed, "<line") > count(plain, "<line"));
}

TEST_CASE("marked diagrams render as a single panel") {
    const std::string svg = render_svg(marked_file(ch_projective(1)));
    CHECK(count(svg, ">M<") == 1);
    CHECK(count(svg, ">D1<") == 0);
    CHECK(svg.find("<path") != std::string::npos);
    // marked vertices draw as a filled square over the transposition
    CHECK(count(svg, "<rect") == 1);
}

TEST_CASE("distinct diagrams render distinctly") {
    const std::string torus = render_svg(triplane_file(generate(FamilySpec::parse("torus:1"))));
    const std::string sphere =
        render_svg(triplane_file(generate(FamilySpec::parse("sphere"))));
    CHECK(torus != sphere);
    CHECK(count(torus, "<path") == 9);
}
