// kronquad command-line front end. Reads modules, quadrics and lines as JSON
// (or as the polynomial shorthand of expr.hpp), writes JSON.
//
// Exit codes: 0 success, 2 unparsable input, 3 stability precondition,
// 4 geometric validation, 5 internal invariant violation.

#include "kronquad/json.hpp"
#include "kronquad/kronquad.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using kronquad::wire::Json;

enum Exit { kOk = 0, kParse = 2, kStability = 3, kGeometry = 4, kInternal = 5 };

struct Options {
    std::string input_file;
    std::string output_file;
    bool pretty = false;
    std::vector<std::string> positional;
    std::uint64_t seed = 1;
    std::size_t trials = 200;
    std::string random_kind;
    bool text = false;
};

// An inline argument is JSON when it parses as JSON, otherwise shorthand text.
Json inline_value(const std::string& arg) {
    Json j = Json::parse(arg, nullptr, false);
    if (j.is_discarded()) return Json(arg);
    return j;
}

Json read_input(const Options& o, std::size_t expected_positional) {
    if (!o.input_file.empty()) {
        std::ifstream in(o.input_file);
        if (!in) throw kronquad::ParseError("cannot open " + o.input_file);
        std::stringstream buf;
        buf << in.rdbuf();
        return inline_value(buf.str());
    }
    if (o.positional.size() != expected_positional)
        throw kronquad::ParseError("expected " + std::to_string(expected_positional) + " inline argument(s) or --input");
    if (expected_positional == 1) return inline_value(o.positional[0]);
    Json arr = Json::array();
    for (const auto& p : o.positional) arr.push_back(inline_value(p));
    return arr;
}

// {"quadric": q, "line": l} or [q, l].
std::pair<kronquad::QuadraticForm, kronquad::LineInP3> read_pair(const Json& j) {
    if (j.is_object()) return {kronquad::wire::to_quadric(j.at("quadric")), kronquad::wire::to_line(j.at("line"))};
    if (j.is_array() && j.size() == 2) return {kronquad::wire::to_quadric(j[0]), kronquad::wire::to_line(j[1])};
    throw kronquad::ParseError("expected {\"quadric\": ..., \"line\": ...}");
}

void emit(const Options& o, const Json& j) {
    const std::string text = j.dump(2) + "\n";
    if (o.output_file.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(o.output_file);
        if (!out) throw std::runtime_error("cannot write " + o.output_file);
        out << text;
    }
}

void emit_text(const Options& o, const std::string& text) {
    if (o.output_file.empty()) {
        std::cout << text;
    } else {
        std::ofstream(o.output_file) << text;
    }
}

int cmd_classify(const Options& o) {
    const auto m = kronquad::wire::to_module(read_input(o, 1));
    emit(o, kronquad::wire::classification(kronquad::classify(m), o.pretty));
    return kOk;
}

int cmd_phi(const Options& o) {
    const auto m = kronquad::wire::to_module(read_input(o, 1));
    try {
        const auto c = kronquad::phi(m);
        const auto d = kronquad::conic_diagnostics(c);
        emit(o, Json{{"conic", kronquad::wire::conic(c, o.pretty)},
                     {"diagnostics",
                      {{"plucker_ok", d.plucker_ok},
                       {"basepoint_gcd", kronquad::wire::binary(d.basepoint_gcd, o.pretty)},
                       {"degree", d.degree}}}});
        return kOk;
    } catch (const kronquad::NotStable& e) {
        emit(o, Json{{"error", "NotStable"},
                     {"stratum", std::string(kronquad::to_string(kronquad::classify_stratum(m)))},
                     {"dependency_form", kronquad::wire::binary(e.dependency, o.pretty, 'a', 'b')}});
        return kStability;
    }
}

int cmd_psi(const Options& o) {
    const auto [q, l] = read_pair(read_input(o, 2));
    try {
        const auto r = kronquad::resolution_from_pair(q, l);
        Json out = kronquad::wire::resolution(r, o.pretty);
        if (const auto* n = std::get_if<kronquad::ResolutionMatrix>(&r)) {
            out["det_equals_minus_b"] = n->det() == -kronquad::to_q(q);
        } else {
            out["ruling"] = std::string(kronquad::to_string(kronquad::ruling_family_in_Q(l)));
        }
        emit(o, out);
        return kOk;
    } catch (const kronquad::GeometryError& e) {
        emit(o, Json{{"error", std::string(kronquad::to_string(e.fault))}});
        return kGeometry;
    }
}

int cmd_roundtrip(const Options& o) {
    std::optional<kronquad::QuadricLinePair> pair;
    if (!o.random_kind.empty()) {
        kronquad::Rng rng(o.seed);
        if (o.random_kind == "standard")
            pair = kronquad::random_pushed_pair(rng, kronquad::standard_pair());
        else if (o.random_kind == "monomial")
            pair = kronquad::random_pushed_pair(rng, kronquad::monomial_pair());
        else if (o.random_kind == "ruling")
            pair = kronquad::random_ruling_pair(rng);
        else
            throw kronquad::ParseError("--random takes standard, monomial or ruling");
    } else {
        auto [q, l] = read_pair(read_input(o, 2));
        pair = kronquad::QuadricLinePair{q, l};
    }
    const auto rep = kronquad::roundtrip(pair->quadric, pair->line);
    Json out = kronquad::wire::roundtrip_report(rep, o.pretty);
    out["input"] = Json{{"quadric", kronquad::wire::quadric(pair->quadric, o.pretty)},
                        {"line", kronquad::wire::line(pair->line)}};
    emit(o, out);
    if (rep.passed()) return kOk;
    if (rep.fault) return kGeometry;
    const auto* failed = rep.first_failure();
    return failed && failed->name == "classify" ? kStability : kInternal;
}

int cmd_motivic(const Options& o) {
    const auto table = kronquad::pipeline_M2();
    const auto e_r = kronquad::euler(kronquad::lookup(table, "R"));
    const auto e_sym = kronquad::euler(kronquad::lookup(table, "Sym2(P3)"));
    if (o.text) {
        std::ostringstream out;
        for (const auto& row : table)
            out << "P(" << row.name << ") = " << row.value.to_string() << "    e = " << kronquad::euler(row.value)
                << "\n";
        out << "e(R) = e(R^s) + e(Sym2(P3)) = 0 + " << e_sym << (e_r == e_sym ? "  [ok]" : "  [MISMATCH]") << "\n";
        emit_text(o, out.str());
    } else {
        Json rows = Json::array();
        for (const auto& row : table)
            rows.push_back(Json{{"name", row.name},
                                {"polynomial", kronquad::wire::poincare(row.value, o.pretty)},
                                {"euler", kronquad::euler(row.value).get_str()}});
        emit(o, Json{{"rows", rows}, {"euler_R_matches_Sym2P3", e_r == e_sym}});
    }
    return e_r == e_sym ? kOk : kInternal;
}

int cmd_selftest(const Options& o) {
    const auto rep = kronquad::selftest(o.seed, o.trials);
    emit(o, kronquad::wire::selftest_report(rep));
    return rep.passed() ? kOk : kInternal;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact computations with Kronecker modules, quadrics and conics in Gr(2,4)"};
    app.require_subcommand(1);
    Options o;

    auto common = [&](CLI::App* sub, const char* positional_help) {
        sub->add_option("--input,-i", o.input_file, "read the input JSON from a file");
        sub->add_option("--output,-o", o.output_file, "write the result to a file");
        sub->add_flag("--pretty", o.pretty, "render forms as polynomials");
        // Positional arguments are taken raw: CLI11 would split "[a,b]" into a vector.
        if (positional_help) {
            sub->allow_extras();
            sub->footer(std::string("Inline arguments: ") + positional_help);
        }
    };

    auto* classify = app.add_subcommand("classify", "GIT stratum of a Kronecker module");
    common(classify, "module, e.g. '[[x,z],[w,y]]'");
    auto* phi = app.add_subcommand("phi", "conic in Gr(2,4) of a stable module");
    common(phi, "module");
    auto* psi = app.add_subcommand("psi", "resolution matrix of a (quadric, line) pair");
    common(psi, "quadric and line, e.g. 'xy-2zw' '[[1,0,1,0],[0,2,0,1]]'");
    auto* roundtrip = app.add_subcommand("roundtrip", "pair -> resolution -> module -> conic -> quadric");
    common(roundtrip, "quadric and line");
    roundtrip->add_option("--random", o.random_kind, "generate the pair: standard, monomial or ruling");
    roundtrip->add_option("--seed", o.seed, "seed for --random");
    auto* motivic = app.add_subcommand("motivic", "virtual Poincaré polynomials of the wall crossing");
    common(motivic, nullptr);
    motivic->add_flag("--text", o.text, "plain-text table");
    auto* selftest = app.add_subcommand("selftest", "seeded property suite");
    common(selftest, nullptr);
    selftest->add_option("--seed", o.seed, "seed");
    selftest->add_option("--trials", o.trials, "trials per property");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kParse;
    }

    for (auto* sub : app.get_subcommands()) o.positional = sub->remaining();

    try {
        if (*classify) return cmd_classify(o);
        if (*phi) return cmd_phi(o);
        if (*psi) return cmd_psi(o);
        if (*roundtrip) return cmd_roundtrip(o);
        if (*motivic) return cmd_motivic(o);
        if (*selftest) return cmd_selftest(o);
    } catch (const kronquad::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kParse;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kParse;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return kParse;
    } catch (const kronquad::NotStable& e) {
        std::cerr << "not stable: " << e.what() << "\n";
        return kStability;
    } catch (const kronquad::GeometryError& e) {
        std::cerr << "geometry: " << e.what() << "\n";
        return kGeometry;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kInternal;
    }
    return kInternal;
}
