// Regenerates the JSON fixture corpus under fixtures/ (or a directory given
// as the first argument).  The unit tests compare these files against the
// in-code constructors, so after changing either, rerun this and inspect the
// diff.

#include "frob/corpus.hpp"
#include "frob/json_io.hpp"

#include <filesystem>
#include <iostream>

using namespace frob;

namespace {

std::string lower(std::string s) {
    for (auto& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return s;
}

} // namespace

int main(int argc, char** argv) {
    std::filesystem::path root = argc > 1 ? argv[1] : "fixtures";
    std::filesystem::create_directories(root / "groups");
    std::filesystem::create_directories(root / "chars");

    for (const auto& [name, g] : group_corpus()) {
        auto path = root / "groups" / (lower(name) + ".json");
        save_json_file(path.string(), group_to_json(g));
        std::cout << path.string() << "\n";
    }

    for (const char* name : {"c2", "c3", "c4", "c2xc2", "s3"}) {
        auto path = root / "chars" / (std::string(name) + ".json");
        save_json_file(path.string(), chartable_to_json(character_table_fixture(name)));
        std::cout << path.string() << "\n";
    }
    return 0;
}
