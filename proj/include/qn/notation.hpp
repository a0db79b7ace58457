#pragma once

#include "qn/map.hpp"

namespace qn {

// Textual syntax for finite spaces and maps:
//
//   map    := space "-->" space ;
//   space  := "{" [ chain { "," chain } ] "}" ;
//   chain  := point { rel point } ;
//   rel    := "->" | "<->" | "=" ;
//   point  := (letter | digit | "_")+ ;
//
// Whitespace is insignificant.  "x->y" puts y in the closure of x,
// "x<->y" both ways, "x=y" glues the two names into one point.  In a map,
// every domain point resolves to the codomain point carrying one of its
// names; names absent from the codomain text map to a same-named point,
// and the codomain relation also carries the image of every domain
// relation (a morphism listed on the left need not be listed again on the
// right).  Throws NotationError with a byte position on bad input.

Space parse_space(const std::string& text);
MapF parse_map(const std::string& text);

// Round-trip printers: parse(print(x)) is isomorphic to x.  Fresh point
// names in point order; relations as a transitive reduction plus isolated
// points; glued codomain points printed as "x=y" chains.
std::string print_space(const Space& a);
std::string print_map(const MapF& f);

} // namespace qn
