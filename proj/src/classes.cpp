#include "qn/classes.hpp"

#include <algorithm>

#include "qn/universe.hpp"

namespace qn {

namespace {

const std::vector<ClassSpec> kCatalogue = {
    {ClassId::SURJECTIVE, "SURJECTIVE", "{{} --> {a}}^r", false},
    {ClassId::INJECTIVE, "INJECTIVE", "{{a,b} --> {a=b}}^r = {{a<->b} --> {a=b}}^l", false},
    {ClassId::DOMAIN_EMPTY_OR_ISO, "DOMAIN_EMPTY_OR_ISO", "{{} --> {a}}^lr: empty domain or isomorphism", false},
    {ClassId::DOMAIN_NONEMPTY, "DOMAIN_NONEMPTY", "{{} --> {a}}^l: non-empty domain (or empty-to-empty)", false},
    {ClassId::ISO, "ISO", "{{} --> {a}}^ll: isomorphisms", false},
    {ClassId::ALL, "ALL", "{{} --> {a}}^lll: all maps", false},
    {ClassId::INDUCED, "INDUCED", "{{a->b} --> {a=b}}^l: topology on the domain induced from the codomain", false},
    {ClassId::SUBSPACE, "SUBSPACE", "injective with induced topology", false},
    {ClassId::CLOSED_SUBSPACE, "CLOSED_SUBSPACE", "{{x<->y<->z->c} --> {x=y,z=c}}^l: subspace with closed image", false},
    {ClassId::DENSE_IMAGE, "DENSE_IMAGE", "{{c} --> {o->c}}^l: closure of the image is everything", false},
    {ClassId::QUOTIENT, "QUOTIENT", "surjective, codomain opens are the sets with open preimage", false},
    {ClassId::QUOTIENT_PLUS_DISCRETE, "QUOTIENT_PLUS_DISCRETE", "{{a->b} --> {a<->b}}^l: quotient onto the image, disjoint discrete rest", false},
    {ClassId::SURJ_INDUCED, "SURJ_INDUCED", "surjective with induced topology", false},
    {ClassId::T1_FIBRES, "T1_FIBRES", "{{a->b} --> {a=b}}^r: every fibre T1", false},
    {ClassId::T0_FIBRES, "T0_FIBRES", "{{a<->b} --> {a=b}}^r: every fibre T0", false},
    {ClassId::PI0_INJECTIVE, "PI0_INJECTIVE", "{{a,b} --> {a=b}}^l: injective on connected components", false},
    {ClassId::PI0_SURJECTIVE_CLOPEN, "PI0_SURJECTIVE_CLOPEN", "{{a} --> {a,b}}^l: image meets every non-empty clopen", false},
    {ClassId::SURJ_OR_EMPTY, "SURJ_OR_EMPTY", "{{a} --> {a,b}}^r: surjective or empty domain", false},
    {ClassId::HAS_SECTION, "HAS_SECTION", "has a monotone section", false},
    {ClassId::GENERIC_SECTION, "GENERIC_SECTION", "has a section picking a generic point of each fibre", false},
    {ClassId::DISJOINT_UNION_INCL, "DISJOINT_UNION_INCL", "inclusion of a clopen summand: A --> A + B", false},
    {ClassId::DISCRETE_EXTENSION, "DISCRETE_EXTENSION", "A --> A + D with D discrete", false},
    {ClassId::SUBSPACE_PLUS_DISCRETE, "SUBSPACE_PLUS_DISCRETE", "{{u<->v->c<->d} --> {u<->v=c<->d}}^l: induced topology, discrete clopen rest", false},
    {ClassId::INDISTINGUISHABILITY_COMPONENTS, "INDISTINGUISHABILITY_COMPONENTS", "{{a} --> {a<->b}}^r: indistinguishability classes map onto indistinguishability classes", false},
    {ClassId::RRR_MEMBER, "RRR_MEMBER", "(subspaces)^r; to the point: domain a retract of a power of {a->b} x {a<->b}", true},
    {ClassId::RLLR_PARTIAL, "RLLR_PARTIAL", "{{a} --> {a,b}}^lr: between clopen-summand inclusions and closed subspaces", true},
    {ClassId::RRRRL_PARTIAL, "RRRRL_PARTIAL", "(T1-fibred maps)^l: between quotients with connected fibres and quotients", true},
    {ClassId::COMPLETE_LATTICE, "COMPLETE_LATTICE", "X --> {a} with X a complete lattice (retract of a power of {a->b} x {a<->b})", false},
};

bool fibres_t1(const MapF& f) {
    for (int x = 0; x < f.dom->n(); ++x)
        for (int y = 0; y < f.dom->n(); ++y)
            if (x != y && f.values[x] == f.values[y] && f.dom->leq(x, y)) return false;
    return true;
}

bool fibres_t0(const MapF& f) {
    for (int x = 0; x < f.dom->n(); ++x)
        for (int y = x + 1; y < f.dom->n(); ++y)
            if (f.values[x] == f.values[y] && f.dom->mutually_leq(x, y)) return false;
    return true;
}

bool pi0_injective(const MapF& f) {
    Partition pd = pi0(*f.dom), pc = pi0(*f.cod);
    std::vector<int> comp_dom(f.dom->n()), comp_cod(f.cod->n());
    for (size_t b = 0; b < pd.blocks.size(); ++b)
        for (int x : pd.blocks[b]) comp_dom[x] = int(b);
    for (size_t b = 0; b < pc.blocks.size(); ++b)
        for (int y : pc.blocks[b]) comp_cod[y] = int(b);
    std::vector<int> img(pd.blocks.size(), -1);
    std::vector<int> hit(pc.blocks.size(), -1);
    for (int x = 0; x < f.dom->n(); ++x) img[comp_dom[x]] = comp_cod[f.values[x]];
    for (size_t b = 0; b < pd.blocks.size(); ++b) {
        if (hit[img[b]] >= 0 && hit[img[b]] != int(b)) return false;
        hit[img[b]] = int(b);
    }
    return true;
}

bool pi0_surjective_clopen(const MapF& f) {
    // finite case: every non-empty clopen is a union of components, so the
    // image meets every non-empty clopen iff it meets every component
    Partition pc = pi0(*f.cod);
    PointSet img = f.image();
    for (const auto& blk : pc.blocks) {
        bool met = false;
        for (int y : blk)
            if (img.test(y)) { met = true; break; }
        if (!met) return false;
    }
    return true;
}

// no relations between distinct points of the complement of the image,
// and optionally none between complement and image either way
bool complement_discrete(const MapF& f, bool also_no_cross) {
    PointSet img = f.image();
    const Space& c = *f.cod;
    for (int x = 0; x < c.n(); ++x)
        for (int y = 0; y < c.n(); ++y) {
            if (x == y || !c.leq(x, y)) continue;
            bool xi = img.test(x), yi = img.test(y);
            if (!xi && !yi) return false;
            if (also_no_cross && (xi != yi)) return false;
        }
    return true;
}

bool image_clopen_summand(const MapF& f) {
    PointSet img = f.image();
    const Space& c = *f.cod;
    for (int x = 0; x < c.n(); ++x)
        for (int y = 0; y < c.n(); ++y)
            if (x != y && c.leq(x, y) && img.test(x) != img.test(y)) return false;
    return true;
}

bool corestriction_is_quotient(const MapF& f) {
    PointSet img = f.image();
    auto sub = std::make_shared<Space>(subspace(*f.cod, img));
    std::vector<int> reindex(f.cod->n(), -1);
    {
        auto m = img.members();
        for (size_t i = 0; i < m.size(); ++i) reindex[m[i]] = int(i);
    }
    std::vector<int> v(f.dom->n());
    for (int x = 0; x < f.dom->n(); ++x) v[x] = reindex[f.values[x]];
    return is_quotient_map(MapF(f.dom, sub, std::move(v)));
}

bool indistinguishability_components(const MapF& f) {
    auto dom_classes = f.dom->indistinguishability_classes();
    auto cod_classes = f.cod->indistinguishability_classes();
    std::vector<int> cls_cod(f.cod->n());
    for (size_t c = 0; c < cod_classes.size(); ++c)
        for (int y : cod_classes[c]) cls_cod[y] = int(c);
    for (const auto& cl : dom_classes) {
        int target = cls_cod[f.values[cl[0]]];
        std::vector<char> covered(f.cod->n(), 0);
        for (int x : cl) covered[f.values[x]] = 1;
        for (int y : cod_classes[target])
            if (!covered[y]) return false;
    }
    return true;
}

bool poset_complete_lattice(const Space& a) {
    int n = a.n();
    if (n == 0) return false; // no top or bottom
    auto bound = [&](int x, int y, bool upper) -> bool {
        std::vector<int> bounds;
        for (int z = 0; z < n; ++z) {
            bool ok = upper ? (a.leq(x, z) && a.leq(y, z)) : (a.leq(z, x) && a.leq(z, y));
            if (ok) bounds.push_back(z);
        }
        for (int u : bounds) {
            bool least = true;
            for (int v : bounds)
                if (upper ? !a.leq(u, v) : !a.leq(v, u)) { least = false; break; }
            if (least) return true;
        }
        return false;
    };
    for (int x = 0; x < n; ++x)
        for (int y = x; y < n; ++y)
            if (!bound(x, y, true) || !bound(x, y, false)) return false;
    return true;
}

Tri rrr_member(const MapF& f) {
    if (f.is_iso()) return Tri::In; // orthogonal classes contain every iso
    if (!is_quotient_map(f) || !find_section(f)) return Tri::Out;
    for (int y = 0; y < f.cod->n(); ++y)
        if (!lattice_reflection(fibre(f, y))) return Tri::Out;
    // exact for maps to the point and, clopen-piece by clopen-piece, for
    // discrete codomains; undetermined beyond that
    if (f.cod->n() <= 1 || f.cod->is_discrete()) return Tri::In;
    return Tri::Unknown;
}

Tri rllr_partial(const MapF& f) {
    if (is_in_class(ClassId::CLOSED_SUBSPACE, f) != Tri::In) return Tri::Out;
    // smallest clopen containing the image = union of components meeting it
    Partition pc = pi0(*f.cod);
    PointSet img = f.image();
    PointSet hull(f.cod->n());
    for (const auto& blk : pc.blocks) {
        bool met = false;
        for (int y : blk)
            if (img.test(y)) { met = true; break; }
        if (met)
            for (int y : blk) hull.set(y);
    }
    if (hull == img) return Tri::In;
    return Tri::Unknown;
}

Tri rrrrl_partial(const MapF& f) {
    if (!is_quotient_map(f)) return Tri::Out;
    // a fibre has a non-trivial closed equivalence relation iff it admits a
    // non-constant map to a finite T1 (= discrete) space iff it is disconnected
    for (int y = 0; y < f.cod->n(); ++y)
        if (!fibre(f, y).is_connected()) return Tri::Unknown;
    return Tri::In;
}

} // namespace

const std::vector<ClassSpec>& class_catalogue() { return kCatalogue; }

const ClassSpec& class_spec(ClassId id) {
    for (const auto& s : kCatalogue)
        if (s.id == id) return s;
    throw Error("unknown class id");
}

const char* class_name(ClassId id) { return class_spec(id).name; }

std::optional<ClassId> class_from_name(const std::string& name) {
    for (const auto& s : kCatalogue)
        if (name == s.name) return s.id;
    return std::nullopt;
}

const char* tri_name(Tri t) {
    switch (t) {
    case Tri::In: return "IN";
    case Tri::Out: return "OUT";
    default: return "UNKNOWN";
    }
}

bool lattice_reflection(const Space& a) {
    return poset_complete_lattice(poset_reflection(a).first);
}

bool is_complete_lattice(const Space& a, const LiftingCaps& caps) {
    if (a.is_poset()) return poset_complete_lattice(a);
    Space test = product(sierpinski_space(), antidiscrete_space(2));
    return is_retract_of_power(a, test, caps);
}

Tri is_in_class(ClassId c, const MapF& f) {
    auto b = [](bool v) { return v ? Tri::In : Tri::Out; };
    switch (c) {
    case ClassId::SURJECTIVE: return b(f.is_surjective());
    case ClassId::INJECTIVE: return b(f.is_injective());
    case ClassId::DOMAIN_EMPTY_OR_ISO: return b(f.dom->n() == 0 || f.is_iso());
    case ClassId::DOMAIN_NONEMPTY: return b(f.dom->n() > 0 || f.cod->n() == 0);
    case ClassId::ISO: return b(f.is_iso());
    case ClassId::ALL: return Tri::In;
    case ClassId::INDUCED: return b(has_induced_topology(f));
    case ClassId::SUBSPACE: return b(f.is_injective() && has_induced_topology(f));
    case ClassId::CLOSED_SUBSPACE:
        return b(f.is_injective() && has_induced_topology(f) && f.cod->is_closed(f.image()));
    case ClassId::DENSE_IMAGE: return b(f.cod->closure(f.image()) == PointSet::full(f.cod->n()));
    case ClassId::QUOTIENT: return b(is_quotient_map(f));
    case ClassId::QUOTIENT_PLUS_DISCRETE:
        return b(complement_discrete(f, true) && corestriction_is_quotient(f));
    case ClassId::SURJ_INDUCED: return b(f.is_surjective() && has_induced_topology(f));
    case ClassId::T1_FIBRES: return b(fibres_t1(f));
    case ClassId::T0_FIBRES: return b(fibres_t0(f));
    case ClassId::PI0_INJECTIVE: return b(pi0_injective(f));
    case ClassId::PI0_SURJECTIVE_CLOPEN: return b(pi0_surjective_clopen(f));
    case ClassId::SURJ_OR_EMPTY: return b(f.is_surjective() || f.dom->n() == 0);
    case ClassId::HAS_SECTION: return b(find_section(f).has_value());
    case ClassId::GENERIC_SECTION: return b(find_section(f, true).has_value());
    case ClassId::DISJOINT_UNION_INCL:
        return b(f.is_injective() && has_induced_topology(f) && image_clopen_summand(f));
    case ClassId::DISCRETE_EXTENSION:
        return b(f.is_injective() && has_induced_topology(f) && complement_discrete(f, true));
    case ClassId::SUBSPACE_PLUS_DISCRETE:
        return b(has_induced_topology(f) && complement_discrete(f, true));
    case ClassId::INDISTINGUISHABILITY_COMPONENTS: return b(indistinguishability_components(f));
    case ClassId::RRR_MEMBER: return rrr_member(f);
    case ClassId::RLLR_PARTIAL: return rllr_partial(f);
    case ClassId::RRRRL_PARTIAL: return rrrrl_partial(f);
    case ClassId::COMPLETE_LATTICE: return b(f.cod->n() == 1 && lattice_reflection(*f.dom));
    }
    throw Error("unknown class id");
}

ClassComparison class_equal_on_universe(ClassId c1, ClassId c2, int n, const LiftingCaps& caps) {
    const Universe& u = Universe::shared(n, caps);
    ClassComparison out;
    for (const MapF& f : u.maps()) {
        ++out.checked;
        Tri t1 = is_in_class(c1, f), t2 = is_in_class(c2, f);
        if (t1 == Tri::Unknown || t2 == Tri::Unknown) {
            ++out.unknown_skipped;
            continue;
        }
        if (t1 != t2 && out.equal) {
            out.equal = false;
            out.witness = f;
            out.witness_left = t1;
            out.witness_right = t2;
        }
    }
    return out;
}

} // namespace qn
