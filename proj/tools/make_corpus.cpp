#include <filesystem>
#include <iostream>

#include "triplane/corpus.h"
#include "triplane/io.h"

// Regenerates the corpus directory from the table data. Usage: make_corpus [DIR]
int main(int argc, char** argv) {
    std::string dir = argc > 1 ? argv[1] : "corpus";
    try {
        std::filesystem::create_directories(dir);
        for (const triplane::CorpusRow& row : triplane::corpus_rows())
            triplane::write_text_file(dir + "/" + row.file_name,
                                      triplane::corpus_file_text(row));
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    std::cout << "wrote " << triplane::corpus_rows().size() << " files to " << dir << "\n";
    return 0;
}
