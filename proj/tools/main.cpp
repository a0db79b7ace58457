// qntop: lifting properties, morphism classes, and the orthogonality orbit
// for maps of finite topological spaces.
//
// Exit codes: 0 true/pass, 1 false, 2 usage or parse error, 3 verification
// failure.

#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "qn/notation.hpp"
#include "qn/orbit.hpp"

using namespace qn;

namespace {

std::string read_arg_or_stdin(const std::string& arg) {
    if (arg != "-") return arg;
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    std::string s = ss.str();
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();
    return s;
}

struct CommonOpts {
    int threads = 1;
    bool json = false;
    bool timing = false;
    long long square_cap = LiftingCaps{}.square_pair_cap;
    int power_cap = LiftingCaps{}.power_point_cap;
    long long map_cap = EnumerationCaps{}.map_count_cap;

    LiftingCaps caps() const {
        LiftingCaps c;
        c.square_pair_cap = square_cap;
        c.power_point_cap = power_cap;
        c.enumeration.map_count_cap = map_cap;
        return c;
    }
};

void add_common(CLI::App* cmd, CommonOpts& o) {
    cmd->add_flag("--json", o.json, "machine-readable output");
    cmd->add_flag("--timing", o.timing, "include wall time in JSON reports");
    cmd->add_option("--threads", o.threads, "worker count (output is independent of it)");
    cmd->add_option("--square-cap", o.square_cap, "cap on (top,bottom) square candidates");
    cmd->add_option("--power-cap", o.power_cap, "cap on points of A^Hom(X,A)");
    cmd->add_option("--map-cap", o.map_cap, "cap on candidate functions per Hom set");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"computation engine for lifting properties of maps of finite spaces"};
    app.require_subcommand(1);

    // parse
    std::string parse_text;
    bool parse_is_space = false;
    auto* cmd_parse = app.add_subcommand("parse", "parse a map (or space) and echo it back");
    cmd_parse->add_option("text", parse_text, "map text, or '-' for stdin")->required();
    cmd_parse->add_flag("--space", parse_is_space, "parse a single space instead of a map");
    CommonOpts parse_opts;
    add_common(cmd_parse, parse_opts);

    // lift
    std::string lift_f, lift_g;
    bool lift_want_witness = false;
    auto* cmd_lift = app.add_subcommand("lift", "decide whether f lifts on the left of g");
    cmd_lift->add_option("f", lift_f, "left map")->required();
    cmd_lift->add_option("g", lift_g, "right map")->required();
    cmd_lift->add_flag("--witness", lift_want_witness, "print the first failing square");
    CommonOpts lift_opts;
    add_common(cmd_lift, lift_opts);

    // classify
    std::string classify_text;
    auto* cmd_classify = app.add_subcommand("classify", "membership in every catalogued class and orbit node");
    cmd_classify->add_option("f", classify_text, "map text, or '-' for stdin")->required();
    CommonOpts classify_opts;
    add_common(cmd_classify, classify_opts);

    // normalize
    std::string norm_word;
    auto* cmd_norm = app.add_subcommand("normalize", "rewrite a word in {l,r} to its orbit node");
    cmd_norm->add_option("word", norm_word, "word over l and r (empty for the root)");
    CommonOpts norm_opts;
    add_common(cmd_norm, norm_opts);

    // verify
    std::string verify_what = "all";
    int verify_bound = 2;
    int witness_extra = 1;
    auto* cmd_verify = app.add_subcommand("verify", "exhaustively check orbit edges on a bounded universe");
    cmd_verify->add_option("edge", verify_what,
                           "'all', 'sets', or an edge as <node>.<letter> (e.g. rr.r)");
    cmd_verify->add_option("--max-size", verify_bound, "largest space size in the universe");
    cmd_verify->add_option("--witness-extra", witness_extra, "extra points allowed for witnesses");
    CommonOpts verify_opts;
    add_common(cmd_verify, verify_opts);

    // enumerate
    std::string enum_kind;
    int enum_n = 3;
    bool enum_labelled = false, enum_print = false;
    std::string enum_dom, enum_cod;
    auto* cmd_enum = app.add_subcommand("enumerate", "count or list spaces and maps");
    cmd_enum->add_option("kind", enum_kind, "'spaces' or 'maps'")->required();
    cmd_enum->add_option("--n", enum_n, "point count for spaces");
    cmd_enum->add_flag("--labelled", enum_labelled, "labelled spaces instead of up-to-iso");
    cmd_enum->add_flag("--print", enum_print, "print every item");
    cmd_enum->add_option("--dom", enum_dom, "domain space text for maps");
    cmd_enum->add_option("--cod", enum_cod, "codomain space text for maps");
    CommonOpts enum_opts;
    add_common(cmd_enum, enum_opts);

    // counterexample
    std::string ce_map, ce_node;
    int ce_bound = 3;
    auto* cmd_ce = app.add_subcommand("counterexample",
                                      "why a map is outside an orbit class: a failing partner and square");
    cmd_ce->add_option("f", ce_map, "map text, or '-' for stdin")->required();
    cmd_ce->add_option("node", ce_node, "orbit node label")->required();
    cmd_ce->add_option("--max-size", ce_bound, "witness universe size");
    CommonOpts ce_opts;
    add_common(cmd_ce, ce_opts);

    // export-graph
    std::string fmt = "json";
    auto* cmd_export = app.add_subcommand("export-graph", "emit the orbit graph");
    cmd_export->add_option("--format", fmt, "json or dot")->check(CLI::IsMember({"json", "dot"}));
    CommonOpts export_opts;
    add_common(cmd_export, export_opts);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*cmd_parse) {
            std::string text = read_arg_or_stdin(parse_text);
            if (parse_is_space) {
                Space s = parse_space(text);
                if (parse_opts.json) {
                    nlohmann::json j;
                    j["points"] = s.n();
                    j["text"] = print_space(s);
                    std::cout << j.dump(2) << "\n";
                } else {
                    std::cout << print_space(s) << "\n";
                }
                return 0;
            }
            MapF f = parse_map(text);
            if (parse_opts.json) {
                nlohmann::json j;
                j["dom_points"] = f.dom->n();
                j["cod_points"] = f.cod->n();
                j["text"] = print_map(f);
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << print_map(f) << "\n";
            }
            return 0;
        }

        if (*cmd_lift) {
            MapF f = parse_map(read_arg_or_stdin(lift_f));
            MapF g = parse_map(read_arg_or_stdin(lift_g));
            auto caps = lift_opts.caps();
            if (lift_want_witness || lift_opts.json) {
                auto sq = lift_witness(f, g, caps);
                if (lift_opts.json) {
                    nlohmann::json j;
                    j["lifts"] = !sq.has_value();
                    if (sq) {
                        j["witness"] = {{"top", print_map(sq->top)}, {"bottom", print_map(sq->bottom)}};
                    }
                    std::cout << j.dump(2) << "\n";
                } else if (sq) {
                    std::cout << "false\n";
                    std::cout << "failing square: top " << print_map(sq->top) << "; bottom "
                              << print_map(sq->bottom) << "\n";
                } else {
                    std::cout << "true\n";
                }
                return sq ? 1 : 0;
            }
            bool ok = lifts(f, g, caps);
            std::cout << (ok ? "true" : "false") << "\n";
            return ok ? 0 : 1;
        }

        if (*cmd_classify) {
            MapF f = parse_map(read_arg_or_stdin(classify_text));
            nlohmann::json jc, jn;
            for (const ClassSpec& s : class_catalogue()) {
                Tri t = is_in_class(s.id, f);
                if (classify_opts.json)
                    jc[s.name] = tri_name(t);
                else
                    std::cout << s.name << ": " << tri_name(t) << "\n";
            }
            SchreierGraph g = orbit_graph();
            for (const std::string& node : g.nodes) {
                Tri t = node_membership(node, f);
                if (classify_opts.json)
                    jn[node] = tri_name(t);
                else
                    std::cout << "node " << node << ": " << tri_name(t) << "\n";
            }
            if (classify_opts.json) {
                nlohmann::json j;
                j["map"] = print_map(f);
                j["classes"] = jc;
                j["nodes"] = jn;
                std::cout << j.dump(2) << "\n";
            }
            return 0;
        }

        if (*cmd_norm) {
            std::string label = normalize(norm_word);
            if (norm_opts.json) {
                nlohmann::json j;
                j["word"] = norm_word;
                j["node"] = label;
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << label << "\n";
            }
            return 0;
        }

        if (*cmd_verify) {
            VerifyOptions opts;
            opts.threads = verify_opts.threads;
            opts.witness_extra = witness_extra;
            std::vector<VerifyReport> reports;
            if (verify_what == "all") {
                reports = verify_all(verify_bound, opts);
            } else if (verify_what == "sets") {
                reports.push_back(sets_mode_verify(verify_bound, opts));
            } else {
                auto dot = verify_what.find('.');
                if (dot == std::string::npos || dot + 2 != verify_what.size() ||
                    (verify_what[dot + 1] != 'l' && verify_what[dot + 1] != 'r'))
                    throw Error("edge must be 'all', 'sets', or <node>.<letter>");
                reports.push_back(
                    verify_edge(verify_what.substr(0, dot), verify_what[dot + 1], verify_bound, opts));
            }
            bool ok = true;
            if (verify_opts.json) {
                std::string out = "[\n";
                for (size_t i = 0; i < reports.size(); ++i) {
                    std::string one = report_to_json(reports[i], verify_opts.timing);
                    while (!one.empty() && one.back() == '\n') one.pop_back();
                    out += one;
                    if (i + 1 < reports.size()) out += ",";
                    out += "\n";
                }
                out += "]\n";
                std::cout << out;
            }
            for (const VerifyReport& r : reports) {
                if (!verify_opts.json)
                    std::cout << (r.ok() ? "pass" : "FAIL") << "  " << r.subject << "  checked "
                              << r.checked << ", passed " << r.passed << ", failed " << r.failed
                              << ", unknown-skipped " << r.unknown_skipped << ", " << r.millis
                              << " ms\n";
                ok = ok && r.ok();
            }
            return ok ? 0 : 3;
        }

        if (*cmd_enum) {
            EnumerationCaps caps = enum_opts.caps().enumeration;
            if (enum_kind == "spaces") {
                auto spaces = enumerate_spaces(enum_n, enum_labelled ? SpaceMode::Labelled : SpaceMode::UpToIso, caps);
                if (enum_opts.json) {
                    nlohmann::json j;
                    j["count"] = spaces.size();
                    if (enum_print) {
                        nlohmann::json arr = nlohmann::json::array();
                        for (const Space& s : spaces) arr.push_back(print_space(s));
                        j["spaces"] = arr;
                    }
                    std::cout << j.dump(2) << "\n";
                } else {
                    if (enum_print)
                        for (const Space& s : spaces) std::cout << print_space(s) << "\n";
                    std::cout << "count " << spaces.size() << "\n";
                }
                return 0;
            }
            if (enum_kind == "maps") {
                if (enum_dom.empty() || enum_cod.empty())
                    throw Error("enumerate maps needs --dom and --cod space texts");
                auto dom = std::make_shared<Space>(parse_space(enum_dom));
                auto cod = std::make_shared<Space>(parse_space(enum_cod));
                auto maps = enumerate_maps(dom, cod, caps);
                if (enum_opts.json) {
                    nlohmann::json j;
                    j["count"] = maps.size();
                    if (enum_print) {
                        nlohmann::json arr = nlohmann::json::array();
                        for (const MapF& m : maps) arr.push_back(print_map(m));
                        j["maps"] = arr;
                    }
                    std::cout << j.dump(2) << "\n";
                } else {
                    if (enum_print)
                        for (const MapF& m : maps) std::cout << print_map(m) << "\n";
                    std::cout << "count " << maps.size() << "\n";
                }
                return 0;
            }
            throw Error("kind must be 'spaces' or 'maps'");
        }

        if (*cmd_ce) {
            MapF f = parse_map(read_arg_or_stdin(ce_map));
            auto ce = find_counterexample(f, ce_node, ce_bound, ce_opts.caps());
            if (ce_opts.json) {
                nlohmann::json j;
                j["map"] = print_map(f);
                j["node"] = ce_node;
                j["member"] = !ce.has_value();
                if (ce) {
                    j["witness"] = print_map(ce->g);
                    j["square"] = {{"top", print_map(ce->square.top)},
                                   {"bottom", print_map(ce->square.bottom)}};
                }
                std::cout << j.dump(2) << "\n";
            } else if (ce) {
                std::cout << "witness: " << print_map(ce->g) << "\n";
                std::cout << "square: top " << print_map(ce->square.top) << "; bottom "
                          << print_map(ce->square.bottom) << "\n";
            } else {
                std::cout << "NONE\n";
            }
            return ce ? 1 : 0;
        }

        if (*cmd_export) {
            std::cout << (fmt == "dot" ? graph_to_dot() : graph_to_json());
            return 0;
        }
    } catch (const NotationError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
