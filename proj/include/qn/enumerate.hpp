#pragma once

#include "qn/map.hpp"

namespace qn {

struct EnumerationCaps {
    int labelled_max_n = 5;
    int up_to_iso_max_n = 6;
    long long map_count_cap = 10'000'000; // refuse when cod^dom exceeds this
};

// All monotone maps dom -> cod, lexicographic on value sequences.
// Throws CapExceeded when cod.n^dom.n exceeds caps.map_count_cap.
std::vector<MapF> enumerate_maps(SpacePtr dom, SpacePtr cod,
                                 const EnumerationCaps& caps = {});

// Number of monotone maps, same cap.
long long count_maps(const Space& dom, const Space& cod,
                     const EnumerationCaps& caps = {});

enum class SpaceMode { Labelled, UpToIso };

// All spaces on n points.  Labelled: every reflexive-transitive relation,
// ascending in matrix key order.  UpToIso: one canonical representative per
// isomorphism class.  Throws CapExceeded past the mode's cap.
std::vector<Space> enumerate_spaces(int n, SpaceMode mode,
                                    const EnumerationCaps& caps = {});

// Canonical relabelling: minimal matrix key over all point permutations,
// permutations pruned by an iterated degree-refinement invariant.
// Isomorphic spaces yield identical results.
Space canonical_form(const Space& a);

// Canonical relabelling of a map under independent isomorphisms of both
// ends; isomorphic maps (in the arrow category, via isos) yield equal maps.
MapF canonical_pair(const MapF& f);

} // namespace qn
