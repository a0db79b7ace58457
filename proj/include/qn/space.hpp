#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "qn/error.hpp"

namespace qn {

// Subset of the points of a space, as a bit vector.
struct PointSet {
    int n = 0;
    std::vector<uint64_t> w;

    PointSet() = default;
    explicit PointSet(int n_) : n(n_), w((n_ + 63) / 64, 0) {}

    bool test(int i) const { return (w[i >> 6] >> (i & 63)) & 1u; }
    void set(int i) { w[i >> 6] |= uint64_t{1} << (i & 63); }
    void reset(int i) { w[i >> 6] &= ~(uint64_t{1} << (i & 63)); }
    int count() const;
    bool empty() const;
    bool is_subset_of(const PointSet& o) const;
    PointSet operator|(const PointSet& o) const;
    PointSet operator&(const PointSet& o) const;
    PointSet complement() const;
    bool operator==(const PointSet& o) const { return n == o.n && w == o.w; }
    bool operator<(const PointSet& o) const;
    std::vector<int> members() const;

    static PointSet full(int n);
    static PointSet of(int n, std::initializer_list<int> pts);
};

// Finite topological space, stored as its specialisation preorder:
// leq(x,y) holds iff y lies in the closure of {x}.  A subset is closed
// iff it is leq-forward closed; opens are the complements.
class Space {
public:
    Space() = default;
    explicit Space(int n);

    int n() const { return n_; }
    bool leq(int x, int y) const { return (bits_[size_t(x) * words_ + (y >> 6)] >> (y & 63)) & 1u; }
    void set_leq(int x, int y) { bits_[size_t(x) * words_ + (y >> 6)] |= uint64_t{1} << (y & 63); }

    // Reflexive-transitive closure of the relations set so far.
    void close();
    bool is_reflexive_transitive() const;
    void require_valid() const; // throws Error if not a preorder

    // Row x as a PointSet: the closure of {x}.
    PointSet row(int x) const;

    PointSet closure(const PointSet& s) const;
    bool is_closed(const PointSet& s) const;
    bool is_open(const PointSet& s) const;
    // All open subsets, ascending by bit pattern.  Guarded: n <= 20.
    std::vector<PointSet> opens() const;

    // Points whose closure is the whole space.
    PointSet generic_points() const;

    // Topologically indistinguishable classes (mutual leq), each sorted,
    // ordered by smallest member.
    std::vector<std::vector<int>> indistinguishability_classes() const;

    bool mutually_leq(int x, int y) const { return leq(x, y) && leq(y, x); }
    bool is_poset() const;      // antisymmetric
    bool is_discrete() const;   // no relations between distinct points
    bool is_antidiscrete() const;
    bool is_connected() const;  // comparability graph connected; empty space is connected

    const std::vector<std::string>& labels() const { return labels_; }
    void set_labels(std::vector<std::string> labels);
    std::string label(int i) const;

    // Total order used for canonical forms and deterministic enumeration:
    // by point count, then lexicographic on the row-major relation bits.
    std::vector<uint64_t> matrix_key() const;
    bool same_relation(const Space& o) const;

    bool operator==(const Space& o) const { return n_ == o.n_ && bits_ == o.bits_; }

private:
    int n_ = 0;
    int words_ = 0;
    std::vector<uint64_t> bits_;
    std::vector<std::string> labels_;
};

using SpacePtr = std::shared_ptr<const Space>;

struct Partition {
    std::vector<std::vector<int>> blocks;

    // Throws Error unless blocks are disjoint, nonempty and cover 0..n-1.
    void require_valid(int n) const;
};

// Connected components of the comparability graph, as a Partition with
// blocks ordered by smallest member.
Partition pi0(const Space& a);

// --- constructions ---------------------------------------------------

// Space from named points and arrow pairs; leq is the reflexive-transitive
// closure of the pairs.  Throws Error on duplicate point names or unknown
// endpoints.
Space make_space(const std::vector<std::string>& points,
                 const std::vector<std::pair<std::string, std::string>>& relations);

// Cartesian product; points are pairs (a,b) in row-major order on (A,B),
// leq componentwise.  Throws CapExceeded past max_points.
Space product(const Space& a, const Space& b, int max_points = 1 << 20);

// Disjoint union; A's points first, no cross relations.
Space coproduct(const Space& a, const Space& b);

// Induced subspace on the given points (ascending order).
Space subspace(const Space& a, const PointSet& pts);

// Poset reflection: one point per indistinguishability class, ordered by
// smallest member; second component maps points to their class index.
std::pair<Space, std::vector<int>> poset_reflection(const Space& a);

// Standard small spaces.
Space empty_space();
Space point_space();
Space discrete_space(int n);
Space antidiscrete_space(int n);
Space sierpinski_space(); // {a->b}: a open, b closed
Space chain_space(int n); // x0 -> x1 -> ... -> x_{n-1}

} // namespace qn
