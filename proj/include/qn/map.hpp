#pragma once

#include <optional>

#include "qn/space.hpp"

namespace qn {

// Monotone (= continuous) map between finite spaces.  Spaces are shared
// immutably; values[x] is the image of point x.
struct MapF {
    SpacePtr dom;
    SpacePtr cod;
    std::vector<int> values;

    MapF() = default;
    MapF(SpacePtr d, SpacePtr c, std::vector<int> v);

    bool is_monotone() const;
    void require_monotone() const;

    int operator()(int x) const { return values[x]; }

    PointSet image() const;
    bool is_surjective() const;
    bool is_injective() const;
    bool is_iso() const;

    // Points of cod mapping to y.
    PointSet preimage(int y) const;

    bool operator==(const MapF& o) const {
        return dom->same_relation(*o.dom) && cod->same_relation(*o.cod) && values == o.values;
    }
};

MapF identity_map(SpacePtr a);
// g after f; requires cod f = dom g (same relation).
MapF compose(const MapF& g, const MapF& f);
// f x g : dom f x dom g -> cod f x cod g, coordinatewise.
MapF product_map(const MapF& f, const MapF& g, int max_points = 1 << 20);

// Quotient of A by a partition: block spaces with the induced (pushed
// forward, transitively closed) relations, plus the projection.
std::pair<Space, MapF> quotient(SpacePtr a, const Partition& p);

// Subspace of cod f on the preimage of y, with the induced relations.
Space fibre(const MapF& f, int y);

// True iff the codomain carries the final topology: surjective and the
// codomain relation equals the closed pushforward of the domain relation.
bool is_quotient_map(const MapF& f);

// True iff the domain carries the initial topology from f:
// leq_dom(x,y) <=> leq_cod(f x, f y).
bool has_induced_topology(const MapF& f);

// Monotone s with f(s(y)) = y for all y, if one exists (then the least in
// value order).  require_generic restricts s(y) to generic points of the
// fibre over y.  Throws CapExceeded past the backtracking budget.
std::optional<MapF> find_section(const MapF& f, bool require_generic = false,
                                 long long budget = 10'000'000);

} // namespace qn
