#include "qn/map.hpp"

#include <algorithm>

namespace qn {

MapF::MapF(SpacePtr d, SpacePtr c, std::vector<int> v)
    : dom(std::move(d)), cod(std::move(c)), values(std::move(v)) {
    if (int(values.size()) != dom->n()) throw Error("map value count differs from domain size");
    for (int v_ : values)
        if (v_ < 0 || v_ >= cod->n()) throw Error("map value out of codomain range");
}

bool MapF::is_monotone() const {
    for (int x = 0; x < dom->n(); ++x)
        for (int y = 0; y < dom->n(); ++y)
            if (dom->leq(x, y) && !cod->leq(values[x], values[y])) return false;
    return true;
}

void MapF::require_monotone() const {
    if (!is_monotone()) throw Error("map is not monotone");
}

PointSet MapF::image() const {
    PointSet s(cod->n());
    for (int v : values) s.set(v);
    return s;
}

bool MapF::is_surjective() const { return image().count() == cod->n(); }

bool MapF::is_injective() const {
    std::vector<int> seen(cod->n(), 0);
    for (int v : values)
        if (seen[v]++) return false;
    return true;
}

bool MapF::is_iso() const {
    if (dom->n() != cod->n() || !is_injective()) return false;
    for (int x = 0; x < dom->n(); ++x)
        for (int y = 0; y < dom->n(); ++y)
            if (dom->leq(x, y) != cod->leq(values[x], values[y])) return false;
    return true;
}

PointSet MapF::preimage(int y) const {
    PointSet s(dom->n());
    for (int x = 0; x < dom->n(); ++x)
        if (values[x] == y) s.set(x);
    return s;
}

MapF identity_map(SpacePtr a) {
    std::vector<int> v(a->n());
    for (int i = 0; i < a->n(); ++i) v[i] = i;
    return MapF(a, a, std::move(v));
}

MapF compose(const MapF& g, const MapF& f) {
    if (!f.cod->same_relation(*g.dom)) throw Error("compose: middle spaces differ");
    std::vector<int> v(f.dom->n());
    for (int x = 0; x < f.dom->n(); ++x) v[x] = g.values[f.values[x]];
    return MapF(f.dom, g.cod, std::move(v));
}

MapF product_map(const MapF& f, const MapF& g, int max_points) {
    auto dp = std::make_shared<Space>(product(*f.dom, *g.dom, max_points));
    auto cp = std::make_shared<Space>(product(*f.cod, *g.cod, max_points));
    std::vector<int> v(size_t(f.dom->n()) * g.dom->n());
    for (int x = 0; x < f.dom->n(); ++x)
        for (int y = 0; y < g.dom->n(); ++y)
            v[size_t(x) * g.dom->n() + y] = f.values[x] * g.cod->n() + g.values[y];
    return MapF(dp, cp, std::move(v));
}

std::pair<Space, MapF> quotient(SpacePtr a, const Partition& p) {
    p.require_valid(a->n());
    std::vector<int> block_of(a->n(), -1);
    for (size_t b = 0; b < p.blocks.size(); ++b)
        for (int x : p.blocks[b]) block_of[x] = int(b);
    Space q(int(p.blocks.size()));
    for (int x = 0; x < a->n(); ++x)
        for (int y = 0; y < a->n(); ++y)
            if (a->leq(x, y)) q.set_leq(block_of[x], block_of[y]);
    q.close();
    MapF proj(a, std::make_shared<Space>(q), std::move(block_of));
    return {q, proj};
}

Space fibre(const MapF& f, int y) {
    if (y < 0 || y >= f.cod->n()) throw Error("fibre: point out of codomain range");
    return subspace(*f.dom, f.preimage(y));
}

bool is_quotient_map(const MapF& f) {
    if (!f.is_surjective()) return false;
    Space pushed(f.cod->n());
    for (int x = 0; x < f.dom->n(); ++x)
        for (int y = 0; y < f.dom->n(); ++y)
            if (f.dom->leq(x, y)) pushed.set_leq(f.values[x], f.values[y]);
    pushed.close();
    return pushed.same_relation(*f.cod);
}

bool has_induced_topology(const MapF& f) {
    for (int x = 0; x < f.dom->n(); ++x)
        for (int y = 0; y < f.dom->n(); ++y)
            if (f.dom->leq(x, y) != f.cod->leq(f.values[x], f.values[y])) return false;
    return true;
}

std::optional<MapF> find_section(const MapF& f, bool require_generic, long long budget) {
    const Space& dom = *f.dom;
    const Space& cod = *f.cod;
    // Per-point candidates: the fibre, optionally its generic points.
    std::vector<std::vector<int>> cand(cod.n());
    for (int y = 0; y < cod.n(); ++y) {
        auto fib = f.preimage(y).members();
        for (int x : fib) {
            if (require_generic) {
                bool generic = true;
                for (int x2 : fib)
                    if (!dom.leq(x, x2)) { generic = false; break; }
                if (!generic) continue;
            }
            cand[y].push_back(x);
        }
        if (cand[y].empty()) return std::nullopt;
    }
    std::vector<int> s(cod.n(), -1);
    auto consistent = [&](int y) {
        if (--budget < 0) throw CapExceeded("section search exceeded its backtracking budget");
        for (int z = 0; z < cod.n(); ++z) {
            if (s[z] < 0 || z == y) continue;
            if (cod.leq(y, z) && !dom.leq(s[y], s[z])) return false;
            if (cod.leq(z, y) && !dom.leq(s[z], s[y])) return false;
        }
        return true;
    };
    std::vector<size_t> idx(cod.n(), 0);
    int y = 0;
    while (true) {
        if (y == cod.n()) {
            return MapF(f.cod, f.dom, s);
        }
        bool advanced = false;
        while (idx[y] < cand[y].size()) {
            s[y] = cand[y][idx[y]++];
            if (consistent(y)) { ++y; advanced = true; break; }
        }
        if (!advanced) {
            s[y] = -1;
            idx[y] = 0;
            if (y == 0) return std::nullopt;
            --y;
        }
    }
}

} // namespace qn
