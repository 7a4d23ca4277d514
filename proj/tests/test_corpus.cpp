#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdlib>
#include <map>
#include <set>
#include <string>

#include "triplane/chconvert.h"
#include "triplane/corpus.h"
#include "triplane/io.h"
#include "triplane/search.h"
#include "triplane/triplane.h"

using namespace triplane;

namespace {

const CorpusRow& find_row(const std::string& label) {
    for (const CorpusRow& row : corpus_rows())
        if (row.label == label) return row;
    throw Error("no corpus row " + label);
}

// per-component euler characteristics of the type names used in the table
int type_euler(const std::string& partition) {
    static const std::map<std::string, int> values = {
        {"S2", 2}, {"T2", 0}, {"P2", 1}, {"P2#P2", 0}};
    int total = 0;
    std::string::size_type start = 0;
    while (start <= partition.size()) {
        auto end = partition.find('+', start);
        if (end == std::string::npos) end = partition.size();
        total += values.at(partition.substr(start, end - start));
        start = end + 1;
    }
    return total;
}

}  // namespace

TEST_CASE("the table has twenty-three rows with unique labels and files") {
    const auto& rows = corpus_rows();
    REQUIRE(rows.size() == 23);
    std::set<std::string> labels, files;
    for (const CorpusRow& row : rows) {
        labels.insert(row.label);
        files.insert(row.file_name);
    }
    CHECK(labels.size() == rows.size());
    CHECK(files.size() == rows.size());
    CHECK(rows.front().label == "0_1");
    CHECK(rows.back().label == "10^{-2,-2}_1");
}

TEST_CASE("row metadata is internally consistent") {
    for (const CorpusRow& row : corpus_rows()) {
        CAPTURE(row.label);
        CHECK(row.euler == type_euler(row.type_partition));
        CHECK(row.bridges >= 1);
        CHECK(row.crossing_bound >= 0);
        // orientability matches the type names
        const bool has_p2 = row.type_partition.find("P2") != std::string::npos;
        CHECK(row.orientable == !has_p2);
        // every word is already in bridge position and carries the marks of
        // its surface: chi = c+ + c- - marks
        CHECK(is_bridge_position(row.word));
        CHECK(closed_components(resolve(row.word, 1).slices()) +
                  closed_components(resolve(row.word, -1).slices()) -
                  row.word.mark_count() ==
              row.euler);
    }
}

TEST_CASE("file names follow the label slugs") {
    CHECK(find_row("0_1").file_name == "y0_1.ch");
    CHECK(find_row("2^-1_1").file_name == "y2m1_1.ch");
    CHECK(find_row("10^{0,-2}_2").file_name == "y10s0m2_2.ch");
    CHECK(find_row("8^{1,1}_1").file_name == "y8s11_1.ch");
}

TEST_CASE("the torus row records the suspected table typo") {
    const CorpusRow& torus = find_row("2^1_1");
    CHECK(torus.table_bridges == 1);
    CHECK(torus.bridges == 3);
    CHECK(corpus_file_text(torus).find("suspected typo") != std::string::npos);
}

TEST_CASE("exactly one row is starred") {
    int starred = 0;
    for (const CorpusRow& row : corpus_rows())
        if (row.star) ++starred;
    CHECK(starred == 1);
    CHECK(find_row("10^{0,-2}_2").star);
}

TEST_CASE("corpus files on disk match the canonical text") {
    const char* dir = std::getenv("TRIPLANE_CORPUS");
    REQUIRE_MESSAGE(dir != nullptr, "TRIPLANE_CORPUS must point at the corpus directory");
    for (const CorpusRow& row : corpus_rows()) {
        CAPTURE(row.label);
        const std::string text = read_text_file(std::string(dir) + "/" + row.file_name);
        CHECK(text == corpus_file_text(row));

        const DiagramFile parsed = parse_diagram_text(text);
        REQUIRE(parsed.kind == DiagramFileKind::Marked);
        CHECK(parsed.marked == row.word);
    }
}

TEST_CASE("the cheap rows certify and convert to their expected invariants") {
    const Certifier certifier = make_certifier({});
    for (const std::string label : {"0_1", "2^1_1", "2^-1_1"}) {
        CAPTURE(label);
        const CorpusRow& row = find_row(label);
        CHECK(validate_ch(row.word, certifier).valid());
        const InvariantReport r = invariants(ch_to_triplane(row.word, certifier));
        CHECK(r.euler == row.euler);
        CHECK(r.normal_euler == row.normal_euler);
        CHECK(r.orientable == row.orientable);
        CHECK(r.type_partition == row.type_partition);
    }
}

TEST_CASE("the spun trefoil row reaches the table bounds directly") {
    const CorpusRow& row = find_row("8_1");
    const Certifier certifier = make_certifier({});
    const InvariantReport r = invariants(ch_to_triplane(row.word, certifier));
    CHECK(r.bridges == 4);
    CHECK(r.total_crossings <= row.crossing_bound);
    CHECK(r.type_partition == "S2");
    CHECK(r.normal_euler == 0);
}
