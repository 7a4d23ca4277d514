#pragma once

#include <string>
#include <vector>

#include "triplane/word.h"

namespace triplane {

// One row of the Yoshikawa surface table together with a marked diagram
// realizing its invariants.
struct CorpusRow {
    std::string label;           // Yoshikawa name, e.g. "8_1"
    std::string file_name;       // corpus file, e.g. "y8_1.ch"
    std::string description;
    std::string type_partition;  // sorted component types, e.g. "S2+T2"
    int bridges = 0;             // expected bridge number after simplification
    int table_bridges = 0;       // bridge column exactly as printed
    int crossing_bound = 0;      // crossing column (an upper bound)
    bool crossings_hard = false; // bound marked as realized by a concentrated diagram
    int euler = 0;
    int normal_euler = 0;
    bool orientable = false;
    bool star = false;           // bound attained only above the listed bridge number
    MarkedWord word;
};

// All 23 table rows, in table order. Labels are unique, file names are unique.
const std::vector<CorpusRow>& corpus_rows();

// Canonical corpus file content for a row: comment header plus the
// serialized marked diagram.
std::string corpus_file_text(const CorpusRow& row);

}  // namespace triplane
