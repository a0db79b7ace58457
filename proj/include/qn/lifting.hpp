#pragma once

#include <optional>

#include "qn/enumerate.hpp"

namespace qn {

struct LiftingCaps {
    long long square_pair_cap = 10'000'000; // (top,bottom) candidates
    int power_point_cap = 4096;             // points of A^Hom(X,A)
    EnumerationCaps enumeration;
};

// Commuting square with f on the left and g on the right:
// g . top = bottom . f.  A diagonal is d : cod f -> dom g with
// d . f = top and g . d = bottom.
struct Square {
    MapF top;    // dom f -> dom g
    MapF bottom; // cod f -> cod g
};

// f has the left lifting property against g: every commuting square
// admits a diagonal.  Throws UniverseTooLarge past the square cap.
bool lifts(const MapF& f, const MapF& g, const LiftingCaps& caps = {});

// First commuting square (in lexicographic (top,bottom) order) with no
// diagonal; nullopt means every square lifts.
std::optional<Square> lift_witness(const MapF& f, const MapF& g, const LiftingCaps& caps = {});

// Diagonal for one square, if any.
std::optional<MapF> find_diagonal(const MapF& f, const MapF& g, const Square& sq);

enum class Side { Left, Right };

// side == Left keeps u with u lifting on the left of every generator;
// side == Right keeps u with every generator lifting on the left of u.
std::vector<MapF> orthogonal_filter(Side side, const std::vector<MapF>& generators,
                                    const std::vector<MapF>& universe,
                                    const LiftingCaps& caps = {});

// f is a retract of g in the arrow category: maps i : f -> g and
// r : g -> f with r . i the identity on both ends.
bool is_retract_of(const MapF& f, const MapF& g, const LiftingCaps& caps = {});

// X is a retract of a Cartesian power of A, decided through the canonical
// evaluation map X -> A^Hom(X,A): true iff that map admits a monotone
// retraction.  Throws PowerTooLarge when the power exceeds the cap.
bool is_retract_of_power(const Space& x, const Space& a, const LiftingCaps& caps = {});

} // namespace qn
