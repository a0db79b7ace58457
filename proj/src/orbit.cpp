#include "qn/orbit.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>

#include <json.hpp>

#include "qn/notation.hpp"

namespace qn {

namespace {

struct NodeRow {
    const char* word;
    const char* l_succ;
    const char* r_succ;
    ClassId cls;
    bool partial;
};

// Breadth-first order from the root; successors per generator letter.
const NodeRow kNodes[] = {
    {"l", "ll", "lr", ClassId::DOMAIN_NONEMPTY, false},
    {"r", "rl", "rr", ClassId::SURJECTIVE, false},
    {"ll", "lll", "lll", ClassId::ISO, false},
    {"lr", "l", "lrr", ClassId::DOMAIN_EMPTY_OR_ISO, false},
    {"rl", "rll", "r", ClassId::DISCRETE_EXTENSION, false},
    {"rr", "r", "rrr", ClassId::SUBSPACE, false},
    {"lll", "ll", "ll", ClassId::ALL, false},
    {"lrr", "lrrl", "lrrr", ClassId::HAS_SECTION, false},
    {"rll", "ll", "rllr", ClassId::PI0_SURJECTIVE_CLOPEN, false},
    {"rrr", "rr", "rrrr", ClassId::RRR_MEMBER, true},
    {"lrrl", "rll", "lrr", ClassId::DISJOINT_UNION_INCL, false},
    {"lrrr", "lrrrl", "lrrrr", ClassId::INJECTIVE, false},
    {"rllr", "rll", "rllrr", ClassId::RLLR_PARTIAL, true},
    {"rrrr", "rrrrl", "ll", ClassId::T1_FIBRES, false},
    {"lrrrl", "rl", "lrrr", ClassId::QUOTIENT, false},
    {"lrrrr", "lrrr", "lrrrrr", ClassId::SURJ_INDUCED, false},
    {"rllrr", "rllrrl", "rrrr", ClassId::GENERIC_SECTION, false},
    {"rrrrl", "rl", "rrrr", ClassId::RRRRL_PARTIAL, true},
    {"lrrrrr", "lrrrr", "ll", ClassId::T0_FIBRES, false},
    {"rllrrl", "rllrrll", "rllrr", ClassId::CLOSED_SUBSPACE, false},
    {"rllrrll", "ll", "rllrrl", ClassId::DENSE_IMAGE, false},
};

const NodeRow* find_row(const std::string& label) {
    for (const auto& row : kNodes)
        if (label == row.word) return &row;
    return nullptr;
}

const std::vector<RewriteRule> kLedger = {
    {"lrl", "l", true, "P^lrl = P^l for every class P"},
    {"rlr", "r", true, "P^rlr = P^r for every class P"},
    {"llr", "lll", false, "(isomorphisms)^r = all maps"},
    {"llll", "ll", false, "(all maps)^l = isomorphisms"},
    {"lllr", "ll", false, "(all maps)^r = isomorphisms"},
    {"rrl", "r", false, "subspaces are {{x<->y->c} --> {x=y=c}}^l, so rrl = r"},
    {"rlll", "ll", false, "rlll = ll: isomorphisms"},
    {"rrrl", "rr", false, "rrrl = rr: subspaces"},
    {"rrrrr", "ll", false, "rrrrr = ll: isomorphisms"},
    {"rrrrll", "rl", false, "rrrrll = rl: A --> A + D with D discrete"},
    {"rllrrr", "rrrr", false, "rllrrr = rrrr: every fibre T1"},
    {"rllrrlll", "ll", false, "rllrrlll = ll: isomorphisms"},
    {"rllrrllr", "rllrrl", false, "rllrrllr = rllrrl: closed subspaces (rlr = r on the dense-image representation)"},
    {"lrrll", "rll", false, "(A --> A + B)^l = image meets every non-empty clopen, so lrrll = rll"},
    {"lrrrll", "rl", false, "lrrrll = rl: A --> A + D with D discrete"},
    {"lrrrrl", "lrrr", false, "(surjective with induced topology)^l = injective, so lrrrrl = lrrr"},
    {"lrrrrrl", "lrrrr", false, "lrrrrrl = lrrrr (lrl = l on the left-orthogonal representation)"},
    {"lrrrrrr", "ll", false, "lrrrrrr = ll: isomorphisms"},
};

struct EdgeCite {
    const char* from;
    char letter;
    const char* text;
};

const EdgeCite kEdgeCites[] = {
    {"root", 'l', "{{} --> {a}}^l: the domain is non-empty (or the map is empty-to-empty)"},
    {"root", 'r', "{{} --> {a}}^r: surjective"},
    {"l", 'l', "ll: isomorphisms"},
    {"l", 'r', "lr: empty domain or isomorphism"},
    {"r", 'l', "rl: A --> A + D with D discrete"},
    {"r", 'r', "rr: subspaces"},
    {"ll", 'l', "(isomorphisms)^l = all maps"},
    {"ll", 'r', "(isomorphisms)^r = all maps"},
    {"lr", 'l', "lrl = l"},
    {"lr", 'r', "lrr: maps with a section"},
    {"rl", 'l', "rll: image meets every non-empty clopen"},
    {"rl", 'r', "rlr = r"},
    {"rr", 'l', "rrl = r"},
    {"rr", 'r', "rrr: quotients with sections and lattice-reflection fibres (exact over a point)"},
    {"lll", 'l', "(all maps)^l = isomorphisms"},
    {"lll", 'r', "(all maps)^r = isomorphisms"},
    {"lrr", 'l', "lrrl: A --> A + B"},
    {"lrr", 'r', "lrrr: injective"},
    {"rll", 'l', "rlll = ll"},
    {"rll", 'r', "rllr: between clopen-summand inclusions and closed subspaces"},
    {"rrr", 'l', "rrrl = rr"},
    {"rrr", 'r', "rrrr: every fibre T1"},
    {"lrrl", 'l', "lrrll = rll"},
    {"lrrl", 'r', "lrrlr = lrr (rlr = r)"},
    {"lrrr", 'l', "lrrrl: quotients"},
    {"lrrr", 'r', "lrrrr: surjective with induced topology"},
    {"rllr", 'l', "rllrl = rll (lrl = l)"},
    {"rllr", 'r', "rllrr: sections picking a generic point of each fibre"},
    {"rrrr", 'l', "rrrrl: between quotients with connected fibres and quotients"},
    {"rrrr", 'r', "rrrrr = ll"},
    {"lrrrl", 'l', "lrrrll = rl"},
    {"lrrrl", 'r', "lrrrlr = lrrr (rlr = r)"},
    {"lrrrr", 'l', "lrrrrl = lrrr"},
    {"lrrrr", 'r', "lrrrrr: every fibre T0"},
    {"rllrr", 'l', "rllrrl: closed subspaces"},
    {"rllrr", 'r', "rllrrr = rrrr"},
    {"rrrrl", 'l', "rrrrll = rl"},
    {"rrrrl", 'r', "rrrrlr = rrrr (rlr = r)"},
    {"lrrrrr", 'l', "lrrrrrl = lrrrr (lrl = l)"},
    {"lrrrrr", 'r', "lrrrrrr = ll"},
    {"rllrrl", 'l', "rllrrll: dense image"},
    {"rllrrl", 'r', "rllrrlr = rllrr (rlr = r)"},
    {"rllrrll", 'l', "rllrrlll = ll"},
    {"rllrrll", 'r', "rllrrllr = rllrrl"},
};

} // namespace

const std::vector<RewriteRule>& identity_ledger() { return kLedger; }

bool is_word(const std::string& w) {
    return std::all_of(w.begin(), w.end(), [](char c) { return c == 'l' || c == 'r'; });
}

namespace {

std::optional<std::string> apply_rule_at(const std::string& w, const RewriteRule& rule, size_t pos) {
    if (!rule.global && pos != 0) return std::nullopt;
    if (w.compare(pos, rule.lhs.size(), rule.lhs) != 0) return std::nullopt;
    return w.substr(0, pos) + rule.rhs + w.substr(pos + rule.lhs.size());
}

} // namespace

std::optional<std::string> rewrite_step(const std::string& word, bool leftmost) {
    if (leftmost) {
        for (size_t pos = 0; pos < word.size(); ++pos)
            for (const auto& rule : kLedger)
                if (auto r = apply_rule_at(word, rule, pos)) return r;
        return std::nullopt;
    }
    for (size_t pos = word.size(); pos-- > 0;)
        for (const auto& rule : kLedger)
            if (auto r = apply_rule_at(word, rule, pos)) return r;
    return std::nullopt;
}

std::vector<std::string> rewrite_successors(const std::string& word) {
    std::vector<std::string> out;
    for (size_t pos = 0; pos < word.size(); ++pos)
        for (const auto& rule : kLedger)
            if (auto r = apply_rule_at(word, rule, pos)) out.push_back(*r);
    return out;
}

std::string normalize(const std::string& word) {
    if (!is_word(word)) throw Error("word must consist of letters 'l' and 'r'");
    std::string w = word;
    while (auto next = rewrite_step(w, true)) w = *next;
    if (w.empty()) return kRootName;
    if (!find_row(w))
        throw Error("word '" + word + "' rewrites to '" + w + "', which is not in the encoded graph (ledger gap)");
    return w;
}

SchreierGraph orbit_graph() {
    SchreierGraph g;
    for (const auto& row : kNodes) {
        g.nodes.push_back(row.word);
        g.l_succ.push_back(row.l_succ);
        g.r_succ.push_back(row.r_succ);
    }
    g.root_l = "l";
    g.root_r = "r";
    return g;
}

int SchreierGraph::index_of(const std::string& label) const {
    for (size_t i = 0; i < nodes.size(); ++i)
        if (nodes[i] == label) return int(i);
    return -1;
}

const std::string& SchreierGraph::step(const std::string& label, char letter) const {
    if (label == kRootName) return letter == 'l' ? root_l : root_r;
    int i = index_of(label);
    if (i < 0) throw Error("unknown node '" + label + "'");
    return letter == 'l' ? l_succ[i] : r_succ[i];
}

std::vector<std::pair<std::string, std::string>> SchreierGraph::two_cycles() const {
    std::vector<std::pair<std::string, std::string>> out;
    auto has_edge = [&](int u, int v) {
        return index_of(l_succ[u]) == v || index_of(r_succ[u]) == v;
    };
    auto doubles_into = [&](int u, int v) {
        return index_of(l_succ[u]) == v && index_of(r_succ[u]) == v;
    };
    for (size_t u = 0; u < nodes.size(); ++u)
        for (size_t v = u + 1; v < nodes.size(); ++v) {
            if (!has_edge(int(u), int(v)) || !has_edge(int(v), int(u))) continue;
            if (doubles_into(int(u), int(v)) || doubles_into(int(v), int(u))) continue; // the sink pair
            out.emplace_back(nodes[u], nodes[v]);
        }
    return out;
}

std::vector<std::vector<std::string>> SchreierGraph::six_cycles() const {
    std::vector<std::vector<std::string>> out;
    int n = int(nodes.size());
    std::vector<int> path;
    std::vector<char> used(n, 0);
    auto succs = [&](int u) {
        std::vector<int> s;
        int a = index_of(l_succ[u]), b = index_of(r_succ[u]);
        if (a >= 0) s.push_back(a);
        if (b >= 0 && b != a) s.push_back(b);
        return s;
    };
    std::function<void(int, int)> dfs = [&](int start, int u) {
        if (path.size() == 6) {
            for (int v : succs(u))
                if (v == start) {
                    std::vector<std::string> cyc;
                    for (int w : path) cyc.push_back(nodes[w]);
                    out.push_back(cyc);
                }
            return;
        }
        for (int v : succs(u)) {
            if (used[v] || v < start) continue; // canonical start = least index
            used[v] = 1;
            path.push_back(v);
            dfs(start, v);
            path.pop_back();
            used[v] = 0;
        }
    };
    for (int start = 0; start < n; ++start) {
        used[start] = 1;
        path = {start};
        dfs(start, start);
        used[start] = 0;
    }
    return out;
}

bool SchreierGraph::derived_edge(const std::string& from, char letter) {
    return letter == 'l' && (from == "lrrl" || from == "lrrrr");
}

int SchreierGraph::longest_cycle_free_path(bool include_derived_edges, bool include_sink) const {
    int n = int(nodes.size());
    int best = 0;
    std::vector<char> used(n, 0);
    auto in_sink = [&](int v) { return nodes[v] == "ll" || nodes[v] == "lll"; };
    std::function<void(int, int)> dfs = [&](int u, int len) {
        best = std::max(best, len);
        for (char letter : {'l', 'r'}) {
            if (!include_derived_edges && derived_edge(nodes[u], letter)) continue;
            int v = index_of(letter == 'l' ? l_succ[u] : r_succ[u]);
            if (v < 0 || used[v]) continue;
            if (!include_sink && in_sink(v)) continue;
            used[v] = 1;
            dfs(v, len + 1);
            used[v] = 0;
        }
    };
    for (int u = 0; u < n; ++u) {
        if (!include_sink && in_sink(u)) continue;
        used[u] = 1;
        dfs(u, 1);
        used[u] = 0;
    }
    return best;
}

bool SchreierGraph::one_colour_tree_without_lll(char letter) const {
    int n = int(nodes.size());
    int lll = index_of("lll");
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u) {
        if (u == lll) continue;
        int v = index_of(letter == 'l' ? l_succ[u] : r_succ[u]);
        if (v < 0 || v == lll) continue;
        edges.emplace_back(u, v);
    }
    int vertices = n - 1;
    if (int(edges.size()) != vertices - 1) return false;
    // connectivity of the underlying undirected graph
    std::vector<std::vector<int>> adj(n);
    for (auto [u, v] : edges) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    std::vector<char> seen(n, 0);
    std::vector<int> stack;
    int start = lll == 0 ? 1 : 0;
    stack.push_back(start);
    seen[start] = 1;
    int count = 0;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        ++count;
        for (int v : adj[u])
            if (!seen[v]) {
                seen[v] = 1;
                stack.push_back(v);
            }
    }
    return count == vertices;
}

SchreierGraph orbit_bfs() {
    // breadth-first closure from the root under l and r, through normalize
    SchreierGraph g;
    std::vector<std::string> queue_words = {""};
    std::map<std::string, std::pair<std::string, std::string>> succ;
    std::vector<std::string> order;
    size_t qi = 0;
    while (qi < queue_words.size()) {
        std::string w = queue_words[qi++];
        std::string nl = normalize(w + "l");
        std::string nr = normalize(w + "r");
        std::string self = w.empty() ? kRootName : normalize(w);
        succ[self] = {nl, nr};
        for (const std::string& nxt : {nl, nr}) {
            if (nxt != kRootName && !succ.count(nxt) &&
                std::find(order.begin(), order.end(), nxt) == order.end()) {
                order.push_back(nxt);
                queue_words.push_back(nxt);
            }
        }
    }
    g.root_l = succ[kRootName].first;
    g.root_r = succ[kRootName].second;
    for (const std::string& label : order) {
        g.nodes.push_back(label);
        g.l_succ.push_back(succ[label].first);
        g.r_succ.push_back(succ[label].second);
    }

    auto fail = [](const std::string& what) { return Error("orbit structure check failed: " + what); };
    SchreierGraph fixed = orbit_graph();
    if (g.nodes != fixed.nodes || g.l_succ != fixed.l_succ || g.r_succ != fixed.r_succ)
        throw fail("closure disagrees with the encoded node table");
    if (g.nodes.size() != 21) throw fail("node count " + std::to_string(g.nodes.size()) + " != 21");
    if (g.two_cycles().size() != 12)
        throw fail("two-cycle count " + std::to_string(g.two_cycles().size()) + " != 12");
    auto sixes = g.six_cycles();
    if (sixes.size() != 2) throw fail("six-cycle count " + std::to_string(sixes.size()) + " != 2");
    for (const auto& cyc : sixes) {
        bool shares = false;
        for (size_t i = 0; i < 6; ++i)
            if (cyc[i] == "rrrr" && cyc[(i + 1) % 6] == "rrrrl" && cyc[(i + 2) % 6] == "rl")
                shares = true;
        if (!shares) throw fail("a six-cycle misses the shared path rrrr -> rrrrl -> rl");
    }
    if (g.longest_cycle_free_path(false, false) != 11)
        throw fail("longest cycle-free path over stated edges, sink excluded: " +
                   std::to_string(g.longest_cycle_free_path(false, false)) + " != 11");
    if (g.longest_cycle_free_path(true, true) != 13)
        throw fail("longest cycle-free path over the full closure: " +
                   std::to_string(g.longest_cycle_free_path(true, true)) + " != 13");
    if (!g.one_colour_tree_without_lll('l')) throw fail("l-edges minus lll do not form a tree");
    if (!g.one_colour_tree_without_lll('r')) throw fail("r-edges minus lll do not form a tree");
    return g;
}

NodeClass class_of(const std::string& label) {
    if (label == kRootName) return NodeClass{true, ClassId::ALL, false};
    const NodeRow* row = find_row(label);
    if (!row) throw Error("unknown node '" + label + "'");
    return NodeClass{false, row->cls, row->partial};
}

Tri node_membership(const std::string& label, const MapF& f) {
    NodeClass nc = class_of(label);
    if (nc.is_root) return (f.dom->n() == 0 && f.cod->n() == 1) ? Tri::In : Tri::Out;
    return is_in_class(nc.id, f);
}

const char* edge_citation(const std::string& from, char letter) {
    for (const auto& e : kEdgeCites)
        if (from == e.from && letter == e.letter) return e.text;
    throw Error("no citation for edge " + from + " -" + letter + "->");
}

std::string graph_to_json() {
    SchreierGraph g = orbit_graph();
    nlohmann::json root;
    root["word"] = "";
    root["class"] = "GENERATOR";
    root["partial"] = false;
    root["edges"] = {{"l", g.root_l}, {"r", g.root_r}};
    nlohmann::json nodes = nlohmann::json::array();
    for (const std::string& label : g.nodes) {
        NodeClass nc = class_of(label);
        nodes.push_back({{"word", label}, {"class", class_name(nc.id)}, {"partial", nc.partial}});
    }
    nlohmann::json edges = nlohmann::json::array();
    auto add_edges = [&](const std::string& from) {
        for (char letter : {'l', 'r'})
            edges.push_back({{"from", from},
                             {"letter", std::string(1, letter)},
                             {"to", g.step(from, letter)},
                             {"citation", edge_citation(from, letter)},
                             {"derived", SchreierGraph::derived_edge(from, letter)}});
    };
    add_edges(kRootName);
    for (const std::string& label : g.nodes) add_edges(label);
    nlohmann::json doc;
    doc["root"] = root;
    doc["nodes"] = nodes;
    doc["edges"] = edges;
    return doc.dump(2) + "\n";
}

std::string graph_to_dot() {
    SchreierGraph g = orbit_graph();
    std::string out = "digraph orbit {\n  rankdir=TB;\n  node [shape=box, fontsize=10];\n";
    out += "  root [label=\"{} --> {a}\"];\n";
    for (const std::string& label : g.nodes) {
        NodeClass nc = class_of(label);
        out += "  " + label + " [label=\"" + label + "\\n" + class_name(nc.id) + "\"];\n";
    }
    auto edge = [&](const std::string& from, char letter) {
        std::string to = g.step(from, letter);
        out += "  " + from + " -> " + to +
               (letter == 'l' ? " [color=blue, style=dashed, label=\"l\"];\n"
                              : " [color=red, label=\"r\"];\n");
    };
    edge(kRootName, 'l');
    edge(kRootName, 'r');
    for (const std::string& label : g.nodes) {
        edge(label, 'l');
        edge(label, 'r');
    }
    out += "}\n";
    return out;
}

std::string report_to_json(const VerifyReport& r, bool with_timing) {
    nlohmann::json j;
    j["subject"] = r.subject;
    j["bound"] = r.bound;
    j["checked"] = r.checked;
    j["passed"] = r.passed;
    j["failed"] = r.failed;
    j["unknown_skipped"] = r.unknown_skipped;
    nlohmann::json ws = nlohmann::json::array();
    for (const auto& w : r.witnesses) {
        nlohmann::json jw;
        jw["kind"] = w.kind;
        jw["f"] = w.f;
        if (!w.g.empty()) jw["g"] = w.g;
        if (!w.top.empty()) jw["top"] = w.top;
        if (!w.bottom.empty()) jw["bottom"] = w.bottom;
        ws.push_back(jw);
    }
    j["witnesses"] = ws;
    j["millis"] = with_timing ? r.millis : 0;
    return j.dump(2) + "\n";
}

VerifyReport verify_edge(const std::string& node, char letter, int bound,
                         const VerifyOptions& opts, const Universe* shared) {
    auto t0 = std::chrono::steady_clock::now();
    SchreierGraph g = orbit_graph();
    std::string target = g.step(node, letter);
    const Universe& u = shared ? *shared : Universe::shared(bound + opts.witness_extra);
    if (u.max_n() < bound) throw Error("universe smaller than the requested bound");

    VerifyReport rep;
    rep.subject = "edge " + node + " -" + std::string(1, letter) + "-> " + target;
    rep.bound = bound;

    std::vector<size_t> f_ids = u.maps_up_to(bound);
    std::vector<size_t> candidates = u.maps_up_to(std::min(bound + opts.witness_extra, u.max_n()));

    // node-class members: soundness partners within the bound, witness
    // candidates within the extended bound ordered by size
    std::vector<size_t> node_in_bound, node_in_witness;
    for (size_t gi : candidates) {
        if (node_membership(node, u.maps()[gi]) != Tri::In) continue;
        node_in_witness.push_back(gi);
        if (u.map_size(gi) <= bound) node_in_bound.push_back(gi);
    }
    std::stable_sort(node_in_witness.begin(), node_in_witness.end(),
                     [&](size_t a, size_t b) { return u.map_size(a) < u.map_size(b); });

    // The defining generator maps are witnesses of last resort: every class
    // on the orbit is an orthogonal of a subset of them, so a failing
    // partner among them exists whenever one exists at all.  (The smallest
    // universe witness can exceed the bound: against the quotients the map
    // {} --> {a->b} first fails at a 4-point zig-zag partner.)
    static const std::vector<MapF> kGenerators = [] {
        std::vector<MapF> gens;
        for (const char* text :
             {"{} --> {a}", "{a,b} --> {a=b}", "{a} --> {a<->b}", "{a<->b} --> {a=b}",
              "{a->b} --> {a=b}", "{a->b} --> {a<->b}", "{a} --> {a,b}", "{c} --> {o->c}",
              "{x<->y<->z->c} --> {x=y,z=c}", "{u<->v->c<->d} --> {u<->v=c<->d}",
              "{a->b,c->d} --> {a,b=c,d}"})
            gens.push_back(parse_map(text));
        return gens;
    }();
    std::vector<const MapF*> extra_witnesses;
    for (const MapF& gm : kGenerators)
        if (node_membership(node, gm) == Tri::In) extra_witnesses.push_back(&gm);

    // the one edge whose completeness witnesses live beyond finite spaces
    bool completeness_undecidable = (node == "rllr" && letter == 'r');

    enum : uint8_t { Pass, Fail, Skip };
    struct Outcome {
        uint8_t verdict = Pass;
        VerifyWitness witness;
        bool has_witness = false;
    };
    std::vector<Outcome> outcomes(f_ids.size());

    parallel_for(f_ids.size(), opts.threads, [&](size_t k) {
        size_t fi = f_ids[k];
        const MapF& f = u.maps()[fi];
        Outcome& o = outcomes[k];
        Tri tri = node_membership(target, f);
        if (tri == Tri::Unknown) {
            o.verdict = Skip;
            return;
        }
        if (tri == Tri::In) {
            for (size_t gi : node_in_bound) {
                bool ok = letter == 'l' ? u.lifts_cached(fi, gi) : u.lifts_cached(gi, fi);
                if (!ok) {
                    o.verdict = Fail;
                    const MapF& gm = u.maps()[gi];
                    const MapF& left = letter == 'l' ? f : gm;
                    const MapF& right = letter == 'l' ? gm : f;
                    auto sq = lift_witness(left, right, u.caps());
                    o.witness = VerifyWitness{"soundness", print_map(f), print_map(gm),
                                              sq ? print_map(sq->top) : "",
                                              sq ? print_map(sq->bottom) : ""};
                    o.has_witness = true;
                    return;
                }
            }
            return;
        }
        // Out: completeness by witness
        if (completeness_undecidable) {
            o.verdict = Skip;
            return;
        }
        for (size_t gi : node_in_witness) {
            bool ok = letter == 'l' ? u.lifts_cached(fi, gi) : u.lifts_cached(gi, fi);
            if (!ok) return; // witnessed
        }
        for (const MapF* gm : extra_witnesses) {
            bool ok = letter == 'l' ? lifts(f, *gm, u.caps()) : lifts(*gm, f, u.caps());
            if (!ok) return; // witnessed by a defining generator
        }
        o.verdict = Fail;
        o.witness = VerifyWitness{"no_witness", print_map(f), "", "", ""};
        o.has_witness = true;
    });

    for (const Outcome& o : outcomes) {
        switch (o.verdict) {
        case Pass: ++rep.passed; break;
        case Fail: ++rep.failed; break;
        default: ++rep.unknown_skipped; break;
        }
        if (o.has_witness && rep.witnesses.size() < opts.max_witnesses)
            rep.witnesses.push_back(o.witness);
    }
    rep.checked = static_cast<long long>(f_ids.size());
    rep.millis =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0)
            .count();
    return rep;
}

std::vector<VerifyReport> verify_all(int bound, const VerifyOptions& opts) {
    const Universe& u = Universe::shared(bound + opts.witness_extra);
    std::vector<VerifyReport> out;
    SchreierGraph g = orbit_graph();
    for (char letter : {'l', 'r'}) out.push_back(verify_edge(kRootName, letter, bound, opts, &u));
    for (const std::string& label : g.nodes)
        for (char letter : {'l', 'r'}) out.push_back(verify_edge(label, letter, bound, opts, &u));
    return out;
}

namespace {

// membership patterns over a fixed list of maps
using Pattern = std::vector<char>;

Pattern pattern_of(const std::vector<MapF>& maps, const std::function<bool(const MapF&)>& pred) {
    Pattern p(maps.size());
    for (size_t i = 0; i < maps.size(); ++i) p[i] = pred(maps[i]) ? 1 : 0;
    return p;
}

} // namespace

VerifyReport sets_mode_verify(int bound, const VerifyOptions& opts) {
    auto t0 = std::chrono::steady_clock::now();
    VerifyReport rep;
    rep.subject = "sets-mode";
    rep.bound = bound;

    Universe du = Universe::build(bound, /*discrete_only=*/true);
    const std::vector<MapF>& maps = du.maps();

    auto find_map = [&](int dn, int cn, const std::vector<int>& values) -> const MapF& {
        for (const MapF& m : maps)
            if (m.dom->n() == dn && m.cod->n() == cn && m.values == values) return m;
        throw Error("sets-mode generator not found in the universe");
    };
    const MapF& empty_to_point = find_map(0, 1, {});
    const MapF& point_into_two = find_map(1, 2, {0});
    const MapF& glue_two = find_map(2, 1, {0, 0});
    const MapF& glue_beside_point = find_map(2, 2, {0, 0});
    const MapF& empty_to_empty = find_map(0, 0, {});

    auto apply_word = [&](const std::string& word, std::vector<MapF> gens) {
        std::vector<MapF> cur = std::move(gens);
        for (char c : word)
            cur = orthogonal_filter(c == 'l' ? Side::Left : Side::Right, cur, maps, du.caps());
        return pattern_of(maps, [&](const MapF& m) {
            for (const MapF& x : cur)
                if (x == m) return true;
            return false;
        });
    };

    auto is_iso = [](const MapF& m) { return m.is_iso(); };
    Pattern P_nonempty = pattern_of(maps, [](const MapF& m) { return m.dom->n() > 0 || m.cod->n() == 0; });
    Pattern P_surj = pattern_of(maps, [](const MapF& m) { return m.is_surjective(); });
    Pattern P_inj = pattern_of(maps, [](const MapF& m) { return m.is_injective(); });
    Pattern P_iso = pattern_of(maps, is_iso);
    Pattern P_all = pattern_of(maps, [](const MapF&) { return true; });
    Pattern P_empty_or_iso = pattern_of(maps, [&](const MapF& m) { return m.dom->n() == 0 || m.is_iso(); });
    Pattern P_inj_nonempty = pattern_of(maps, [&](const MapF& m) {
        return m.is_injective() && (m.dom->n() > 0 || m.cod->n() == 0);
    });
    Pattern P_surj_or_empty =
        pattern_of(maps, [](const MapF& m) { return m.is_surjective() || m.dom->n() == 0; });

    struct Identity {
        std::string name;
        Pattern got, want;
    };
    std::vector<Identity> ids = {
        {"{{} --> {a}}^l = non-empty domain", apply_word("l", {empty_to_point}), P_nonempty},
        {"{{a} --> {a,b}}^l = surjections", apply_word("l", {point_into_two}), P_surj},
        {"{{} --> {a}}^r = surjections", apply_word("r", {empty_to_point}), P_surj},
        {"{{} --> {a}}^lrr = surjections", apply_word("lrr", {empty_to_point}), P_surj},
        {"{{a,b} --> {a=b}}^l = injections", apply_word("l", {glue_two}), P_inj},
        {"{{a,b} --> {a=b}}^r = injections", apply_word("r", {glue_two}), P_inj},
        {"{{} --> {a}}^rl = injections", apply_word("rl", {empty_to_point}), P_inj},
        {"{{a,b} --> {a=b,c}}^l = isomorphisms", apply_word("l", {glue_beside_point}), P_iso},
        {"{{} --> {}}^lr = isomorphisms", apply_word("lr", {empty_to_empty}), P_iso},
        {"{{} --> {a}}^ll = isomorphisms", apply_word("ll", {empty_to_point}), P_iso},
        {"{{} --> {}}^l = all maps", apply_word("l", {empty_to_empty}), P_all},
        {"{{} --> {}}^r = all maps", apply_word("r", {empty_to_empty}), P_all},
        {"{{} --> {a}}^lll = all maps", apply_word("lll", {empty_to_point}), P_all},
        {"{{} --> {a}}^llr = all maps", apply_word("llr", {empty_to_point}), P_all},
        {"{{a,b} --> {a=b,c}}^r = empty domain or iso", apply_word("r", {glue_beside_point}),
         P_empty_or_iso},
        {"{{} --> {a}}^lr = empty domain or iso", apply_word("lr", {empty_to_point}), P_empty_or_iso},
        {"{{} --> {a}, {a,b} --> {a=b}}^l = injective with non-empty domain",
         apply_word("l", {empty_to_point, glue_two}), P_inj_nonempty},
        {"{{a} --> {a,b}}^r = surjective or empty domain", apply_word("r", {point_into_two}),
         P_surj_or_empty},
    };
    for (const auto& id : ids) {
        ++rep.checked;
        if (id.got == id.want) {
            ++rep.passed;
            continue;
        }
        ++rep.failed;
        for (size_t i = 0; i < maps.size() && rep.witnesses.size() < opts.max_witnesses; ++i)
            if (id.got[i] != id.want[i]) {
                rep.witnesses.push_back(VerifyWitness{id.name, print_map(maps[i]), "", "", ""});
                break;
            }
    }
    // exactly eight distinct classes among the computed orthogonals
    std::vector<Pattern> patterns = {P_nonempty, P_surj,         P_inj,          P_iso,
                                     P_all,      P_empty_or_iso, P_inj_nonempty, P_surj_or_empty};
    std::sort(patterns.begin(), patterns.end());
    patterns.erase(std::unique(patterns.begin(), patterns.end()), patterns.end());
    ++rep.checked;
    if (patterns.size() == 8)
        ++rep.passed;
    else {
        ++rep.failed;
        rep.witnesses.push_back(
            VerifyWitness{"distinct-class count " + std::to_string(patterns.size()) + " != 8", "", "", "", ""});
    }
    rep.millis =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0)
            .count();
    return rep;
}

std::optional<Counterexample> find_counterexample(const MapF& f, const std::string& node, int bound,
                                                  const LiftingCaps& caps) {
    if (node == kRootName) throw Error("the root is not a negation; no opposing class");
    if (!find_row(node)) throw Error("unknown node '" + node + "'");
    Tri tri = node_membership(node, f);
    if (tri == Tri::Unknown)
        throw Error("membership of the map in node '" + node + "' is undetermined");
    if (tri == Tri::In) return std::nullopt;
    char letter = node.back();
    std::string parent = node.size() == 1 ? kRootName : node.substr(0, node.size() - 1);
    const Universe& u = Universe::shared(bound, caps);
    std::vector<size_t> ids = u.maps_up_to(bound);
    std::stable_sort(ids.begin(), ids.end(),
                     [&](size_t a, size_t b) { return u.map_size(a) < u.map_size(b); });
    for (size_t gi : ids) {
        const MapF& gm = u.maps()[gi];
        if (node_membership(parent, gm) != Tri::In) continue;
        const MapF& left = letter == 'l' ? f : gm;
        const MapF& right = letter == 'l' ? gm : f;
        if (auto sq = lift_witness(left, right, caps)) return Counterexample{gm, *sq};
    }
    return std::nullopt;
}

} // namespace qn
