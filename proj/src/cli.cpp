#include "frob/cli.hpp"

#include "frob/corpus.hpp"
#include "frob/groups.hpp"
#include "frob/json_io.hpp"
#include "frob/multisym.hpp"
#include "frob/partitions.hpp"
#include "frob/phi.hpp"
#include "frob/symprod.hpp"
#include "frob/verify.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace frob {

namespace {

int exit_code_for(ErrorCode c) {
    switch (c) {
        case ErrorCode::ParseError:
        case ErrorCode::BadInput:
        case ErrorCode::MalformedData:
        case ErrorCode::UnknownPoint:
        case ErrorCode::OrderTooLarge:
        case ErrorCode::WeightZeroIndex:
        case ErrorCode::BadCharacterTable:
            return 2;
        default:
            return 1;
    }
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else if (!std::isspace(static_cast<unsigned char>(c))) {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

unsigned long parse_count(const std::string& tok) {
    if (tok.empty() || !std::all_of(tok.begin(), tok.end(), [](unsigned char c) {
            return std::isdigit(c) != 0;
        }))
        fail(ErrorCode::BadInput, "not a nonnegative integer: '" + tok + "'");
    return std::stoul(tok);
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(ErrorCode::ParseError, "cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

// Prints either the JSON document or the plain-text rendering.
struct Emitter {
    std::ostream& out;
    bool json;

    void result(const Json& j, const std::string& text) const {
        if (json)
            out << j.dump(2) << "\n";
        else
            out << text << "\n";
    }
    // For output that is already multi-line and newline-terminated.
    void raw(const std::string& json_text, const std::string& text) const {
        out << (json ? json_text : text);
    }
};

std::string check_lines(const std::vector<CheckEntry>& entries) {
    std::ostringstream out;
    std::size_t failed = 0;
    for (const auto& e : entries) {
        out << e.name << ": " << (e.pass ? "pass" : "FAIL");
        if (!e.detail.empty()) out << " (" << e.detail << ")";
        out << "\n";
        if (!e.pass) ++failed;
    }
    out << entries.size() << " checks, " << failed << " failed";
    return out.str();
}

Json check_json(const std::vector<CheckEntry>& entries, bool all) {
    Json arr = Json::array();
    for (const auto& e : entries)
        arr.push_back(Json{{"name", e.name}, {"pass", e.pass}, {"detail", e.detail}});
    return Json{{"all_pass", all}, {"checks", arr}};
}

int run_check_entries(const Emitter& emit, std::vector<CheckEntry> entries) {
    bool all = true;
    for (const auto& e : entries) all = all && e.pass;
    emit.result(check_json(entries, all), check_lines(entries));
    return all ? 0 : 1;
}

} // namespace

int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact computations with Frobenius n-homomorphisms"};
    app.name("frob");
    app.require_subcommand(1);

    std::string format = "text";
    app.add_option("--format", format, "output format (default text)")
        ->check(CLI::IsMember({"json", "text"}));
    std::uint64_t seed = kDefaultSeed;
    app.add_option("--seed", seed, "seed for randomized spot checks");

    // phi
    auto* phi_cmd =
        app.add_subcommand("phi", "evaluate the n-fold alternating form on basis elements");
    phi_cmd->fallthrough();
    std::string phi_algebra, phi_functional, phi_args;
    unsigned phi_n = 0;
    phi_cmd->add_option("--algebra", phi_algebra, "algebra JSON file")->required();
    phi_cmd->add_option("--functional", phi_functional, "functional JSON file")->required();
    phi_cmd->add_option("--n", phi_n, "number of arguments")->required();
    phi_cmd->add_option("--args", phi_args, "comma-separated 1-based basis indices")
        ->required();

    // fn
    auto* fn_cmd = app.add_subcommand("fn", "print the degree-n moment polynomial");
    fn_cmd->fallthrough();
    unsigned fn_n = 0;
    fn_cmd->add_option("--n", fn_n, "degree")->required();

    // ops-check
    auto* ops_cmd =
        app.add_subcommand("ops-check", "verify the derivation operator identities");
    ops_cmd->fallthrough();
    unsigned ops_max = 8;
    ops_cmd->add_option("--n-max", ops_max, "largest degree (default 8)");

    // lemma10
    auto* glue_cmd =
        app.add_subcommand("lemma10", "verify the partition product gluing identity");
    glue_cmd->fallthrough();
    unsigned glue_max = 6;
    glue_cmd->add_option("--max-total", glue_max, "largest nx + ny (default 6)");

    // decompose
    auto* dec_cmd = app.add_subcommand(
        "decompose", "write an n-homomorphism on a finite space as a point multiset");
    dec_cmd->fallthrough();
    std::string dec_input;
    dec_cmd->add_option("--input", dec_input, "JSON file with m, n, values")->required();

    // group
    auto* group_cmd = app.add_subcommand("group", "finite group computations");
    group_cmd->fallthrough();
    group_cmd->require_subcommand(1);

    auto* gval = group_cmd->add_subcommand("validate", "check the group axioms");
    gval->fallthrough();
    std::string gval_input;
    gval->add_option("--input", gval_input, "group JSON file")->required();

    auto* gdet = group_cmd->add_subcommand("det", "expand the group determinant");
    gdet->fallthrough();
    std::string gdet_input;
    gdet->add_option("--input", gdet_input, "group JSON file")->required();

    auto* gkchar = group_cmd->add_subcommand("kchar", "tabulate a k-character");
    gkchar->fallthrough();
    std::string gkchar_input;
    unsigned gkchar_k = 1;
    bool gkchar_raw = false;
    gkchar->add_option("--input", gkchar_input, "group JSON file")->required();
    gkchar->add_option("--k", gkchar_k, "degree (default 1)");
    gkchar->add_flag("--raw", gkchar_raw, "use the unnormalized regular character");

    auto* gfact = group_cmd->add_subcommand(
        "factorize", "verify the determinant factorization over a character table");
    gfact->fallthrough();
    std::string gfact_input, gfact_table;
    gfact->add_option("--input", gfact_input, "group JSON file")->required();
    gfact->add_option("--chartable", gfact_table, "character table JSON file")->required();

    auto* grec = group_cmd->add_subcommand(
        "reconstruct", "rebuild multiplication tables from 1-, 2-, 3-characters");
    grec->fallthrough();
    std::string grec_input;
    grec->add_option("--from-kchars", grec_input, "JSON file with fields k1, k2, k3")
        ->required();

    auto* giso = group_cmd->add_subcommand("isomorphic", "test two groups for isomorphism");
    giso->fallthrough();
    std::string giso_a, giso_b;
    giso->add_option("a", giso_a, "first group JSON file")->required();
    giso->add_option("b", giso_b, "second group JSON file")->required();

    // multisym
    auto* ms_cmd = app.add_subcommand("multisym", "multi-symmetric polynomial computations");
    ms_cmd->fallthrough();
    ms_cmd->require_subcommand(1);

    auto* msx = ms_cmd->add_subcommand(
        "express", "write an invariant polynomial in the power-sum generators");
    msx->fallthrough();
    unsigned msx_n = 0, msx_m = 0;
    std::string msx_poly;
    msx->add_option("--n", msx_n, "number of points")->required();
    msx->add_option("--m", msx_m, "coordinates per point")->required();
    msx->add_option("--poly", msx_poly, "file with the polynomial expression")->required();

    auto* msz = ms_cmd->add_subcommand(
        "syzygy", "check that a length-(n+1) generator maps to zero");
    msz->fallthrough();
    unsigned msz_n = 0, msz_m = 0;
    std::string msz_omegas;
    msz->add_option("--n", msz_n, "number of points")->required();
    msz->add_option("--m", msz_m, "coordinates per point")->required();
    msz->add_option("--omegas", msz_omegas,
                    "semicolon-separated exponent patterns, e.g. \"1,0;0,1;1,1\"")
        ->required();

    auto* msd = ms_cmd->add_subcommand("dim", "embedding dimension of the quotient");
    msd->fallthrough();
    unsigned msd_n = 0, msd_m = 0;
    msd->add_option("--n", msd_n, "number of points")->required();
    msd->add_option("--m", msd_m, "coordinates per point")->required();

    // verify-all
    auto* ver_cmd = app.add_subcommand("verify-all", "run the whole certificate suite");
    ver_cmd->fallthrough();
    std::string ver_scale = "small";
    ver_cmd->add_option("--scale", ver_scale, "small or full (default small)")
        ->check(CLI::IsMember({"small", "full"}));

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    Emitter emit{out, format == "json"};
    try {
        if (phi_cmd->parsed()) {
            FinAlgebra A = algebra_from_json(load_json_file(phi_algebra));
            Functional f = functional_from_json(load_json_file(phi_functional));
            if (f.values.size() != A.dim())
                fail(ErrorCode::BadInput,
                     "functional has " + std::to_string(f.values.size()) +
                         " values but the algebra has dimension " +
                         std::to_string(A.dim()));
            if (phi_n == 0) fail(ErrorCode::BadInput, "--n must be at least 1");
            std::vector<Vec> tuple;
            Json idx_json = Json::array();
            for (const std::string& tok : split(phi_args, ',')) {
                unsigned long i = parse_count(tok);
                if (i < 1 || i > A.dim())
                    fail(ErrorCode::BadInput, "basis index " + tok + " out of range 1.." +
                                                  std::to_string(A.dim()));
                tuple.push_back(A.basis_vec(i - 1));
                idx_json.push_back(i);
            }
            if (tuple.size() != phi_n)
                fail(ErrorCode::BadInput,
                     "--args lists " + std::to_string(tuple.size()) +
                         " indices, expected " + std::to_string(phi_n));
            Scalar v = PhiEvaluator(A, f).phi_recursive(tuple);
            emit.result(Json{{"n", phi_n}, {"args", idx_json}, {"value", v.str()}},
                        v.str());
            return 0;
        }
        if (fn_cmd->parsed()) {
            Poly p = fn_polynomial(fn_n);
            emit.result(Json{{"n", fn_n}, {"polynomial", p.str()}}, p.str());
            return 0;
        }
        if (ops_cmd->parsed()) {
            auto entries = operator_identities(ops_max);
            auto series = fn_generating_check(ops_max);
            entries.insert(entries.end(), series.begin(), series.end());
            return run_check_entries(emit, std::move(entries));
        }
        if (glue_cmd->parsed()) return run_check_entries(emit, verify_lemma10(glue_max));
        if (dec_cmd->parsed()) {
            DecomposeInput in = decompose_input_from_json(load_json_file(dec_input));
            FiniteSpace space(in.m);
            try {
                PointMultiset ms = decompose(in.f, space, in.n);
                emit.result(multiset_to_json(ms), ms.str());
                return 0;
            } catch (const Error& e) {
                if (e.code() != ErrorCode::NotAnNHomomorphism) throw;
                // Attach the alternating-form witness to the weight-based
                // diagnosis, so the failure names the nonvanishing form.
                std::string detail = e.detail();
                auto check =
                    PhiEvaluator(space.algebra(), in.f).is_n_homomorphism(in.n);
                if (!check.pass && !check.witness.empty())
                    detail += "; " + check.witness;
                throw Error(e.code(), detail);
            }
        }
        if (gval->parsed()) {
            FiniteGroup g = group_from_json(load_json_file(gval_input));
            std::string kind = g.is_abelian() ? "abelian" : "nonabelian";
            emit.result(
                Json{{"valid", true}, {"order", g.order()}, {"abelian", g.is_abelian()}},
                "valid " + kind + " group of order " + std::to_string(g.order()));
            return 0;
        }
        if (gdet->parsed()) {
            FiniteGroup g = group_from_json(load_json_file(gdet_input));
            Poly d = group_determinant(g);
            emit.result(Json{{"order", g.order()}, {"determinant", d.str()}}, d.str());
            return 0;
        }
        if (gkchar->parsed()) {
            FiniteGroup g = group_from_json(load_json_file(gkchar_input));
            Json j = kchar_to_json(k_character(g, gkchar_k, !gkchar_raw));
            emit.raw(j.dump(2) + "\n", j.dump(2) + "\n");
            return 0;
        }
        if (gfact->parsed()) {
            FiniteGroup g = group_from_json(load_json_file(gfact_input));
            CharacterTable ct = chartable_from_json(load_json_file(gfact_table));
            bool ok = verify_factorization(g, ct);
            emit.result(Json{{"verified", ok}},
                        ok ? "factorization verified" : "factorization mismatch");
            return ok ? 0 : 1;
        }
        if (grec->parsed()) {
            Json j = load_json_file(grec_input);
            for (const char* field : {"k1", "k2", "k3"})
                if (!j.contains(field))
                    fail(ErrorCode::MalformedData,
                         std::string("missing field ") + field);
            auto data = recover_group_data(kchar_from_json(j.at("k1")),
                                           kchar_from_json(j.at("k2")),
                                           kchar_from_json(j.at("k3")));
            auto tables = mansfield_reconstruct(data.pair_sets);
            Json arr = Json::array();
            std::ostringstream text;
            text << tables.size() << " table(s) reconstructed\n";
            for (const auto& t : tables) {
                arr.push_back(group_to_json(t));
                text << group_to_json(t).dump(2) << "\n";
            }
            emit.raw(Json{{"count", tables.size()}, {"tables", arr}}.dump(2) + "\n",
                     text.str());
            return 0;
        }
        if (giso->parsed()) {
            FiniteGroup a = group_from_json(load_json_file(giso_a));
            FiniteGroup b = group_from_json(load_json_file(giso_b));
            bool yes = isomorphic(a, b);
            emit.result(Json{{"isomorphic", yes}}, yes ? "isomorphic" : "not isomorphic");
            return yes ? 0 : 1;
        }
        if (msx->parsed()) {
            Poly p = Poly::parse(read_text_file(msx_poly));
            Poly q = express(p, msx_n, msx_m);
            emit.result(Json{{"expression", q.str()}}, q.str());
            return 0;
        }
        if (msz->parsed()) {
            std::vector<MultiIndex> omegas;
            for (const std::string& part : split(msz_omegas, ';')) {
                MultiIndex w;
                for (const std::string& tok : split(part, ','))
                    w.push_back(static_cast<unsigned>(parse_count(tok)));
                if (w.size() != msz_m)
                    fail(ErrorCode::BadInput,
                         "pattern '" + part + "' has " + std::to_string(w.size()) +
                             " entries, expected " + std::to_string(msz_m));
                omegas.push_back(std::move(w));
            }
            bool ok = syzygy_generator_check(omegas, msz_n, msz_m);
            emit.result(Json{{"vanishes", ok}},
                        ok ? "vanishes" : "does not vanish");
            return ok ? 0 : 1;
        }
        if (msd->parsed()) {
            Int d = embedding_dimension(msd_n, msd_m);
            emit.result(Json{{"dimension", d.str()}}, d.str());
            return 0;
        }
        if (ver_cmd->parsed()) {
            RunReport report = run_all(ver_scale, seed);
            emit.raw(report_json_string(report), report_text(report));
            return report.all_pass() ? 0 : 1;
        }
    } catch (const Error& e) {
        if (emit.json)
            out << Json{{"error", Json{{"code", to_string(e.code())},
                                       {"detail", e.detail()}}}}
                        .dump(2)
                << "\n";
        else
            out << "error: " << to_string(e.code()) << ": " << e.detail() << "\n";
        return exit_code_for(e.code());
    }
    err << "error: no subcommand\n";
    return 2;
}

} // namespace frob
