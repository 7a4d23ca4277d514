#include "triplane/io.h"

#include <fstream>
#include <sstream>
#include <vector>

namespace triplane {

namespace {

std::vector<std::string> content_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::size_t first = line.find_first_not_of(" \t");
        if (first == std::string::npos) continue;
        if (line[first] == '#') continue;
        lines.push_back(line);
    }
    return lines;
}

std::string expect_prefix(const std::string& line, const std::string& prefix) {
    if (line.rfind(prefix, 0) != 0) throw Error("expected '" + prefix + "' line, got: " + line);
    return line.substr(prefix.size());
}

}  // namespace

std::string to_file_text(const TriPlaneDiagram& d) {
    std::string out = "triplane v1\n";
    out += "b=" + std::to_string(d.bridges()) + '\n';
    for (int i = 0; i < 3; ++i)
        out += "D" + std::to_string(i + 1) + ": " + to_tokens(d.tangle(i).slices()) + '\n';
    return out;
}

std::string to_file_text(const MarkedWord& m) {
    return "chdiagram v1\n" + m.to_line() + '\n';
}

DiagramFile parse_diagram_text(const std::string& text) {
    std::vector<std::string> lines = content_lines(text);
    if (lines.empty()) throw Error("empty diagram file");

    DiagramFile file;
    if (lines[0] == "triplane v1") {
        if (lines.size() != 5) throw Error("triplane file needs b= and D1..D3 lines");
        int b = 0;
        std::string value = expect_prefix(lines[1], "b=");
        try {
            std::size_t used = 0;
            b = std::stoi(value, &used);
            if (used != value.size()) throw Error("");
        } catch (const std::exception&) {
            throw Error("bad bridge number '" + value + "'");
        }
        std::array<TrivialTangleWord, 3> words;
        for (int i = 0; i < 3; ++i) {
            std::string tokens = expect_prefix(lines[2 + i], "D" + std::to_string(i + 1) + ":");
            words[i] = TrivialTangleWord(parse_tokens(tokens));
            if (words[i].bridges() != b)
                throw Error("tangle " + std::to_string(i + 1) + " has bridge number " +
                            std::to_string(words[i].bridges()) + ", file says " + std::to_string(b));
        }
        file.kind = DiagramFileKind::TriPlane;
        file.triplane = TriPlaneDiagram(words[0], words[1], words[2]);
        return file;
    }
    if (lines[0] == "chdiagram v1") {
        if (lines.size() != 2) throw Error("chdiagram file needs exactly one link line");
        file.kind = DiagramFileKind::Marked;
        file.marked = MarkedWord(parse_tokens(expect_prefix(lines[1], "link:")));
        return file;
    }
    throw Error("unknown diagram header: " + lines[0]);
}

DiagramFile read_diagram_file(const std::string& path) {
    try {
        return parse_diagram_text(read_text_file(path));
    } catch (const Error& e) {
        throw Error(path + ": " + e.what());
    }
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open " + path);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write " + path);
    out << text;
    if (!out) throw Error("write failed for " + path);
}

}  // namespace triplane
