#include "frob/json_io.hpp"

#include <fstream>
#include <sstream>

namespace frob {

namespace {

[[noreturn]] void malformed(const std::string& what) {
    fail(ErrorCode::MalformedData, what);
}

// Field access with shape errors instead of nlohmann exceptions.
const Json& field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key))
        malformed(std::string("missing field \"") + key + "\"");
    return j.at(key);
}

std::size_t size_field(const Json& j, const char* key) {
    const Json& v = field(j, key);
    if (!v.is_number_unsigned()) malformed(std::string(key) + " must be a nonnegative integer");
    return v.get<std::size_t>();
}

Scalar scalar_field(const Json& v, unsigned cyclo_order) {
    if (!v.is_string()) malformed("scalars must be strings in the exact grammar");
    return Scalar::parse(v.get<std::string>(), cyclo_order);
}

} // namespace

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(ErrorCode::ParseError, "cannot open " + path);
    Json j = Json::parse(in, nullptr, false);
    if (j.is_discarded()) fail(ErrorCode::ParseError, "not valid JSON: " + path);
    return j;
}

void save_json_file(const std::string& path, const Json& j) {
    std::ofstream out(path);
    if (!out) fail(ErrorCode::ParseError, "cannot open " + path + " for writing");
    out << j.dump(2) << "\n";
}

Json algebra_to_json(const FinAlgebra& a) {
    Json constants = Json::array();
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j)
            for (std::size_t k = 0; k < a.dim(); ++k)
                if (!a.sc(i, j, k).is_zero())
                    constants.push_back(Json::array(
                        {i + 1, j + 1, k + 1, a.sc(i, j, k).str()}));
    Json unit = Json::array();
    for (const auto& c : a.unit()) unit.push_back(c.str());
    return Json{{"dim", a.dim()},
                {"basis", a.basis_names()},
                {"unit", unit},
                {"constants", constants}};
}

FinAlgebra algebra_from_json(const Json& j) {
    std::size_t dim = size_field(j, "dim");
    if (dim == 0) malformed("dim must be positive");
    std::vector<std::string> names;
    if (j.contains("basis")) {
        const Json& basis = j.at("basis");
        if (!basis.is_array()) malformed("basis must be an array of names");
        for (const auto& b : basis) {
            if (!b.is_string()) malformed("basis names must be strings");
            names.push_back(b.get<std::string>());
        }
    }
    const Json& unit = field(j, "unit");
    if (!unit.is_array() || unit.size() != dim)
        malformed("unit must list one coordinate per basis element");
    Vec u;
    for (const auto& c : unit) u.push_back(scalar_field(c, 0));
    Tensor3 t(dim, std::vector<Vec>(dim, Vec(dim, Scalar(0))));
    const Json& constants = field(j, "constants");
    if (!constants.is_array()) malformed("constants must be an array");
    for (const auto& entry : constants) {
        if (!entry.is_array() || entry.size() != 4 || !entry[0].is_number_unsigned() ||
            !entry[1].is_number_unsigned() || !entry[2].is_number_unsigned())
            malformed("each constant is [i, j, k, value]");
        std::size_t i = entry[0].get<std::size_t>(), jj = entry[1].get<std::size_t>(),
                    k = entry[2].get<std::size_t>();
        if (i < 1 || i > dim || jj < 1 || jj > dim || k < 1 || k > dim)
            malformed("constant index out of range");
        t[i - 1][jj - 1][k - 1] = scalar_field(entry[3], 0);
    }
    return FinAlgebra(std::move(t), std::move(u), std::move(names));
}

Json functional_to_json(const Functional& f) {
    Json values = Json::array();
    for (const auto& c : f.values) values.push_back(c.str());
    return Json{{"values", values}};
}

Functional functional_from_json(const Json& j, unsigned cyclo_order) {
    const Json& values = field(j, "values");
    if (!values.is_array() || values.empty()) malformed("values must be a nonempty array");
    Vec v;
    for (const auto& c : values) v.push_back(scalar_field(c, cyclo_order));
    return Functional{std::move(v)};
}

Json group_to_json(const FiniteGroup& g) {
    Json table = Json::array();
    for (std::size_t i = 0; i < g.order(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < g.order(); ++j) row.push_back(g.mul(i, j) + 1);
        table.push_back(row);
    }
    return Json{{"order", g.order()}, {"labels", g.labels()}, {"table", table}};
}

FiniteGroup group_from_json(const Json& j) {
    std::size_t order = size_field(j, "order");
    const Json& table = field(j, "table");
    if (!table.is_array() || table.size() != order)
        malformed("table must have one row per element");
    std::vector<std::vector<std::size_t>> t;
    for (const auto& row : table) {
        if (!row.is_array() || row.size() != order)
            malformed("table rows must have one entry per element");
        std::vector<std::size_t> r;
        for (const auto& e : row) {
            if (!e.is_number_unsigned() || e.get<std::size_t>() < 1 ||
                e.get<std::size_t>() > order)
                malformed("table entries are 1-based element indices");
            r.push_back(e.get<std::size_t>() - 1);
        }
        t.push_back(std::move(r));
    }
    std::vector<std::string> labels;
    if (j.contains("labels")) {
        const Json& ls = j.at("labels");
        if (!ls.is_array()) malformed("labels must be an array");
        for (const auto& l : ls) {
            if (!l.is_string()) malformed("labels must be strings");
            labels.push_back(l.get<std::string>());
        }
    }
    return FiniteGroup(std::move(t), std::move(labels));
}

Json chartable_to_json(const CharacterTable& t) {
    Json irr = Json::array();
    for (const auto& chi : t.irreducibles) {
        Json values = Json::array();
        for (const auto& v : chi.values) values.push_back(v.str());
        irr.push_back(Json{{"dim", chi.dim}, {"values", values}});
    }
    return Json{{"cyclotomic_order", t.cyclotomic_order}, {"irreducibles", irr}};
}

CharacterTable chartable_from_json(const Json& j) {
    CharacterTable t;
    t.cyclotomic_order = static_cast<unsigned>(size_field(j, "cyclotomic_order"));
    const Json& irr = field(j, "irreducibles");
    if (!irr.is_array() || irr.empty()) malformed("irreducibles must be a nonempty array");
    for (const auto& entry : irr) {
        Irreducible chi;
        chi.dim = size_field(entry, "dim");
        const Json& values = field(entry, "values");
        if (!values.is_array()) malformed("character values must be an array");
        for (const auto& v : values)
            chi.values.push_back(scalar_field(v, t.cyclotomic_order));
        t.irreducibles.push_back(std::move(chi));
    }
    return t;
}

namespace {

Json nest_values(const KCharacterData& d, unsigned level, std::size_t base) {
    Json out = Json::array();
    if (level == 1) {
        for (std::size_t i = 0; i < d.order; ++i)
            out.push_back(d.values[base + i].str());
        return out;
    }
    std::size_t stride = 1;
    for (unsigned l = 1; l < level; ++l) stride *= d.order;
    for (std::size_t i = 0; i < d.order; ++i)
        out.push_back(nest_values(d, level - 1, base + i * stride));
    return out;
}

void flatten_values(const Json& j, unsigned level, std::size_t order, Vec& out) {
    if (!j.is_array() || j.size() != order)
        malformed("values must nest k levels deep with one entry per element");
    for (const auto& e : j) {
        if (level == 1) {
            if (!e.is_string()) malformed("scalars must be strings in the exact grammar");
            out.push_back(Scalar::parse(e.get<std::string>()));
        } else {
            flatten_values(e, level - 1, order, out);
        }
    }
}

} // namespace

Json kchar_to_json(const KCharacterData& d) {
    return Json{{"order", d.order},
                {"k", d.k},
                {"normalized", d.normalized},
                {"values", nest_values(d, d.k, 0)}};
}

KCharacterData kchar_from_json(const Json& j) {
    KCharacterData d;
    d.order = size_field(j, "order");
    d.k = static_cast<unsigned>(size_field(j, "k"));
    if (d.k < 1 || d.k > 3) malformed("k must be 1, 2, or 3");
    const Json& normalized = field(j, "normalized");
    if (!normalized.is_boolean()) malformed("normalized must be a boolean");
    d.normalized = normalized.get<bool>();
    flatten_values(field(j, "values"), d.k, d.order, d.values);
    return d;
}

DecomposeInput decompose_input_from_json(const Json& j) {
    DecomposeInput in;
    in.m = size_field(j, "m");
    in.n = size_field(j, "n");
    in.f = functional_from_json(j, 0);
    if (in.f.values.size() != in.m)
        malformed("values must list one weight per point");
    return in;
}

Json multiset_to_json(const PointMultiset& pts) {
    Json counts = Json::object();
    for (const auto& [label, k] : pts.counts) counts[label] = k;
    return Json{{"multiset", counts}};
}

} // namespace frob
