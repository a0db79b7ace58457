#pragma once

#include <optional>

#include "qn/classes.hpp"
#include "qn/universe.hpp"

namespace qn {

// Words in {l,r} act on classes of maps by taking the left or right
// orthogonal; this module holds the orbit of the class {{} --> {a}}: the
// 21 orthogonal classes, the rewrite ledger of proven word identities,
// the Schreier graph, and the exhaustive bounded verification harness.

inline constexpr const char* kRootName = "root";

struct RewriteRule {
    std::string lhs, rhs;
    bool global; // applies at any position; prefix-only otherwise
    const char* citation;
};

const std::vector<RewriteRule>& identity_ledger();

// True iff w consists of 'l' and 'r' only.
bool is_word(const std::string& w);

// Rewrites w with the ledger until no rule applies (leftmost match first),
// then maps the fixpoint to a node label ("root" for the empty word).
// Throws Error if the fixpoint is not a known label (a ledger gap).
std::string normalize(const std::string& word);

// One rewrite step at the leftmost (or rightmost) applicable position;
// nullopt at a fixpoint.  Exposed for the confluence tests.
std::optional<std::string> rewrite_step(const std::string& word, bool leftmost = true);
// Every word reachable by a single rewrite, for the all-orders check.
std::vector<std::string> rewrite_successors(const std::string& word);

struct NodeClass {
    bool is_root = false;      // the generator class {{} --> {a}} itself
    ClassId id = ClassId::ALL; // meaningful when !is_root
    bool partial = false;
};

struct SchreierGraph {
    std::vector<std::string> nodes; // 21 labels, breadth-first order
    // successor labels, indexed like nodes
    std::vector<std::string> l_succ, r_succ;
    std::string root_l, root_r;

    int index_of(const std::string& label) const;
    const std::string& step(const std::string& label, char letter) const;

    // antiparallel pairs with opposite letters; the iso/all pair, whose
    // arrows double in both directions, is the sink and not counted
    std::vector<std::pair<std::string, std::string>> two_cycles() const;
    // simple directed cycles of length 6, each rotated to its
    // lexicographically least presentation
    std::vector<std::vector<std::string>> six_cycles() const;
    // Two edges (lrrl -l-> rll, lrrrr -l-> lrrr) are forced by the
    // extensional edge verification rather than read off the identity
    // theorems, and are marked derived.  The classical 11-vertex
    // longest-path count ignores them and the iso/all sink (a path
    // entering the sink cycles forever); the full closure reaches 13.
    static bool derived_edge(const std::string& from, char letter);
    // vertices on a longest simple directed path
    int longest_cycle_free_path(bool include_derived_edges = true,
                                bool include_sink = true) const;
    // keep only one edge colour, drop the vertex lll: is the rest a tree?
    bool one_colour_tree_without_lll(char letter) const;
};

// Breadth-first closure of the root under l/r using normalize; checks the
// structural facts (21 nodes, 12 two-cycles, the two shared six-cycles,
// longest path 11, one-colour trees) and throws Error naming the first
// violated fact otherwise.
SchreierGraph orbit_bfs();
// The same graph without the structural checks.
SchreierGraph orbit_graph();

NodeClass class_of(const std::string& label);
// Membership of f in the class attached to a node ("root": the single map
// {} --> {a} up to isomorphism).
Tri node_membership(const std::string& label, const MapF& f);

const char* edge_citation(const std::string& from, char letter);

std::string graph_to_json(); // {"root": ..., "nodes": [...], "edges": [...]}
std::string graph_to_dot();

struct VerifyWitness {
    std::string kind; // "soundness" or "no_witness"
    std::string f, g, top, bottom; // notation text; g/top/bottom may be empty
};

struct VerifyReport {
    std::string subject;
    int bound = 0;
    long long checked = 0;
    long long passed = 0;
    long long failed = 0;
    long long unknown_skipped = 0;
    std::vector<VerifyWitness> witnesses;
    long long millis = 0;

    bool ok() const { return failed == 0; }
};

std::string report_to_json(const VerifyReport& r, bool with_timing);

struct VerifyOptions {
    int threads = 1;
    int witness_extra = 1;      // witness universe size = bound + this
    size_t max_witnesses = 5;   // stored per report
};

// Checks one edge over every map between canonical spaces of size <=
// bound: members of the target class must lift (on the edge's side)
// against every universe member of the node class, and non-members must
// fail against some node-class member of size <= bound + witness_extra.
// Unknown memberships are skipped and counted; so are the completeness
// checks of the one edge whose finite node members cannot witness
// (rllr --r--> rllrr).
VerifyReport verify_edge(const std::string& node, char letter, int bound,
                         const VerifyOptions& opts = {}, const Universe* shared = nullptr);

std::vector<VerifyReport> verify_all(int bound, const VerifyOptions& opts = {});

// Discrete-space universe of size <= bound: checks the eight orthogonality
// identities of the category of sets and that exactly eight distinct
// classes arise.
VerifyReport sets_mode_verify(int bound, const VerifyOptions& opts = {});

struct Counterexample {
    MapF g;
    Square square;
};

// For f outside the class of the node, the first universe member of the
// parent class (the node's label minus its last letter) whose lifting
// against f fails, with the failing square; nullopt if none exists within
// the bound or f is in the class.
std::optional<Counterexample> find_counterexample(const MapF& f, const std::string& node,
                                                  int bound, const LiftingCaps& caps = {});

} // namespace qn
