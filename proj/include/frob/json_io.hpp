#pragma once

// JSON (de)serialization for the file formats the command-line tool accepts.
// Scalars travel as strings in the exact text grammar; basis and group
// indices are 1-based in files and 0-based in memory.

#include "frob/algebra.hpp"
#include "frob/groups.hpp"
#include "frob/symprod.hpp"

#include "json.hpp"

#include <string>

namespace frob {

using Json = nlohmann::json;

// Read a whole file; ParseError on missing file or malformed JSON.
Json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const Json& j);

// {"dim": n, "basis": [names], "unit": ["c", ...],
//  "constants": [[i, j, k, "c"], ...]} -- omitted constants are zero.
Json algebra_to_json(const FinAlgebra& a);
FinAlgebra algebra_from_json(const Json& j);

// {"values": ["c", ...]}
Json functional_to_json(const Functional& f);
Functional functional_from_json(const Json& j, unsigned cyclo_order = 0);

// {"order": n, "labels": [...], "table": [[1-based indices]]}
Json group_to_json(const FiniteGroup& g);
FiniteGroup group_from_json(const Json& j);

// {"cyclotomic_order": N, "irreducibles": [{"dim": d, "values": [...]}]}
Json chartable_to_json(const CharacterTable& t);
CharacterTable chartable_from_json(const Json& j);

// k-character data: {"order": n, "k": k, "normalized": bool, "values": [...]}
// with values nested k deep (a vector for k=1, a matrix for k=2, ...).
Json kchar_to_json(const KCharacterData& d);
KCharacterData kchar_from_json(const Json& j);

// {"m": 3, "n": 2, "values": ["1", "1", "0"]}
struct DecomposeInput {
    std::size_t m = 0;
    std::size_t n = 0;
    Functional f;
};
DecomposeInput decompose_input_from_json(const Json& j);
// {"multiset": {"p1": 1, "p2": 1}}
Json multiset_to_json(const PointMultiset& pts);

} // namespace frob
