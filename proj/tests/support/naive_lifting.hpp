#pragma once

// Unpruned reference implementation of the lifting property: enumerate all
// (top, bottom) pairs, and for the commuting ones try every candidate
// diagonal.  Independent of the optimized search path; desk sizes only.

#include "qn/enumerate.hpp"

namespace qn::testing {

inline bool naive_lifts(const MapF& f, const MapF& g) {
    auto tops = enumerate_maps(f.dom, g.dom);
    auto bottoms = enumerate_maps(f.cod, g.cod);
    auto diagonals = enumerate_maps(f.cod, g.dom);
    for (const MapF& top : tops)
        for (const MapF& bottom : bottoms) {
            bool commutes = true;
            for (int x = 0; x < f.dom->n() && commutes; ++x)
                if (g.values[top.values[x]] != bottom.values[f.values[x]]) commutes = false;
            if (!commutes) continue;
            bool lifted = false;
            for (const MapF& d : diagonals) {
                bool ok = true;
                for (int x = 0; x < f.dom->n() && ok; ++x)
                    if (d.values[f.values[x]] != top.values[x]) ok = false;
                for (int y = 0; y < f.cod->n() && ok; ++y)
                    if (g.values[d.values[y]] != bottom.values[y]) ok = false;
                if (ok) { lifted = true; break; }
            }
            if (!lifted) return false;
        }
    return true;
}

} // namespace qn::testing
