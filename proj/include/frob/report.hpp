#pragma once

#include <string>
#include <vector>

namespace frob {

// One verification outcome; detail carries the witness on failure and is
// empty or informational otherwise.
struct CheckEntry {
    std::string name;
    bool pass = true;
    std::string detail;
};

} // namespace frob
