#pragma once

#include <optional>

#include "qn/lifting.hpp"

namespace qn {

// Morphism classes with a decidable finite-map membership predicate.
// Names are stable strings used by the CLI and JSON reports.
enum class ClassId {
    SURJECTIVE,
    INJECTIVE,
    DOMAIN_EMPTY_OR_ISO,
    DOMAIN_NONEMPTY,
    ISO,
    ALL,
    INDUCED,
    SUBSPACE,
    CLOSED_SUBSPACE,
    DENSE_IMAGE,
    QUOTIENT,
    QUOTIENT_PLUS_DISCRETE,
    SURJ_INDUCED,
    T1_FIBRES,
    T0_FIBRES,
    PI0_INJECTIVE,
    PI0_SURJECTIVE_CLOPEN,
    SURJ_OR_EMPTY,
    HAS_SECTION,
    GENERIC_SECTION,
    DISJOINT_UNION_INCL,
    DISCRETE_EXTENSION,
    SUBSPACE_PLUS_DISCRETE,
    INDISTINGUISHABILITY_COMPONENTS,
    RRR_MEMBER,
    RLLR_PARTIAL,
    RRRRL_PARTIAL,
    COMPLETE_LATTICE,
};

enum class Tri { In, Out, Unknown };

struct ClassSpec {
    ClassId id;
    const char* name;
    const char* citation; // defining characterization, in notation syntax
    bool partial;         // Unknown is a possible verdict
};

const std::vector<ClassSpec>& class_catalogue();
const ClassSpec& class_spec(ClassId id);
const char* class_name(ClassId id);
std::optional<ClassId> class_from_name(const std::string& name);
const char* tri_name(Tri t);

// Membership of a finite map in a class.  Total: partial classes answer
// Unknown on maps their characterization does not settle; everything else
// is definite.
Tri is_in_class(ClassId c, const MapF& f);

// Complete-lattice test: direct bottom/top/meet/join checks for posets;
// non-antisymmetric input defers to is_retract_of_power against
// Sierpinski x antidiscrete-2 and may throw PowerTooLarge past the cap.
bool is_complete_lattice(const Space& a, const LiftingCaps& caps = {});

// Total variant used inside class predicates: a finite preorder is a
// retract of a power of Sierpinski x antidiscrete-2 exactly when its poset
// reflection is a complete lattice, so no cap is needed.
bool lattice_reflection(const Space& a);

struct ClassComparison {
    bool equal = true;
    std::optional<MapF> witness; // first map where definite verdicts differ
    Tri witness_left = Tri::Unknown, witness_right = Tri::Unknown;
    long long checked = 0;
    long long unknown_skipped = 0;
};

// Extensional comparison over all maps between canonical spaces of size
// <= n; Unknown verdicts are excluded from the comparison and counted.
ClassComparison class_equal_on_universe(ClassId c1, ClassId c2, int n,
                                        const LiftingCaps& caps = {});

} // namespace qn
