#include "qn/lifting.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

namespace qn {

namespace {

// Backtracking enumeration of monotone maps dom -> cod extending a partial
// assignment; free points may carry a candidate whitelist.  Visitor returns
// false to stop early.
struct ExtensionWalker {
    const Space& dom;
    const Space& cod;
    std::vector<int> fixed;                      // -1 = free
    const std::vector<std::vector<int>>* cand = nullptr; // per-point, only for free points

    bool walk(const std::function<bool(const std::vector<int>&)>& visit) const {
        int n = dom.n();
        std::vector<int> v = fixed;
        // fixed part must itself be monotone where decided
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y)
                if (v[x] >= 0 && v[y] >= 0 && dom.leq(x, y) && !cod.leq(v[x], v[y]))
                    return true; // no extension at all; vacuously done
        std::vector<int> free_pts;
        for (int x = 0; x < n; ++x)
            if (v[x] < 0) free_pts.push_back(x);
        auto candidates = [&](int x) -> std::vector<int> {
            if (cand) return (*cand)[x];
            std::vector<int> all(cod.n());
            for (int i = 0; i < cod.n(); ++i) all[i] = i;
            return all;
        };
        auto consistent = [&](int x) {
            for (int y = 0; y < n; ++y) {
                if (v[y] < 0 || y == x) continue;
                if (dom.leq(x, y) && !cod.leq(v[x], v[y])) return false;
                if (dom.leq(y, x) && !cod.leq(v[y], v[x])) return false;
            }
            return true;
        };
        if (free_pts.empty()) return visit(v);
        std::vector<std::vector<int>> cs;
        cs.reserve(free_pts.size());
        for (int x : free_pts) cs.push_back(candidates(x));
        std::vector<size_t> idx(free_pts.size(), 0);
        size_t k = 0;
        while (true) {
            if (k == free_pts.size()) {
                if (!visit(v)) return false;
                --k;
            }
            bool advanced = false;
            int x = free_pts[k];
            while (idx[k] < cs[k].size()) {
                v[x] = cs[k][idx[k]++];
                if (consistent(x)) { ++k; advanced = true; break; }
            }
            if (!advanced) {
                v[x] = -1;
                idx[k] = 0;
                if (k == 0) return true;
                --k;
            }
        }
    }
};

long long count_monotone_capped(const Space& dom, const Space& cod, long long limit) {
    if (cod.n() == 0) return dom.n() == 0 ? 1 : 0;
    double upper = std::pow(double(cod.n()), double(dom.n()));
    if (upper <= double(limit) && dom.n() <= 24) {
        // cheap exact count
        long long c = 0;
        ExtensionWalker w{dom, cod, std::vector<int>(dom.n(), -1), nullptr};
        w.walk([&](const std::vector<int>&) { ++c; return true; });
        return c;
    }
    long long c = 0;
    ExtensionWalker w{dom, cod, std::vector<int>(dom.n(), -1), nullptr};
    w.walk([&](const std::vector<int>&) { return ++c <= limit; });
    return c;
}

void check_square_cap(const MapF& f, const MapF& g, const LiftingCaps& caps) {
    long long ht = count_monotone_capped(*f.dom, *g.dom, caps.square_pair_cap);
    long long hb = count_monotone_capped(*f.cod, *g.cod, caps.square_pair_cap);
    if (ht > caps.square_pair_cap / std::max<long long>(1, hb))
        throw UniverseTooLarge(
            "lifting square search too large: |Hom(dom f, dom g)| ~ " + std::to_string(ht) +
            " times |Hom(cod f, cod g)| ~ " + std::to_string(hb) + " exceeds the cap");
}

// Diagonal existence for a fixed (top, bottom): values forced on the image
// of f, free points confined to the bottom fibre.
bool square_has_diagonal(const MapF& f, const MapF& g, const std::vector<int>& top,
                         const std::vector<int>& bottom) {
    int cn = f.cod->n();
    std::vector<int> fixed(cn, -1);
    for (int x = 0; x < f.dom->n(); ++x) {
        int y = f.values[x];
        if (fixed[y] >= 0 && fixed[y] != top[x]) return false; // d.f = top unsatisfiable
        fixed[y] = top[x];
    }
    // g . d = bottom pointwise
    std::vector<std::vector<int>> cand(cn);
    for (int y = 0; y < cn; ++y) {
        if (fixed[y] >= 0) {
            if (g.values[fixed[y]] != bottom[y]) return false;
            continue;
        }
        for (int z = 0; z < g.dom->n(); ++z)
            if (g.values[z] == bottom[y]) cand[y].push_back(z);
        if (cand[y].empty()) return false;
    }
    bool found = false;
    ExtensionWalker w{*f.cod, *g.dom, fixed, &cand};
    w.walk([&](const std::vector<int>&) {
        found = true;
        return false;
    });
    return found;
}

// Enumerates commuting squares in lexicographic (top, bottom) order and
// calls visit; visit returns false to stop.
void for_each_commuting_square(const MapF& f, const MapF& g,
                               const std::function<bool(const std::vector<int>&, const std::vector<int>&)>& visit) {
    ExtensionWalker tops{*f.dom, *g.dom, std::vector<int>(f.dom->n(), -1), nullptr};
    tops.walk([&](const std::vector<int>& top) {
        // bottom is pinned on the image of f by g . top = bottom . f
        std::vector<int> fixed(f.cod->n(), -1);
        for (int x = 0; x < f.dom->n(); ++x) {
            int y = f.values[x];
            int want = g.values[top[x]];
            if (fixed[y] >= 0 && fixed[y] != want) return true; // no commuting bottom
            fixed[y] = want;
        }
        bool keep_going = true;
        ExtensionWalker bottoms{*f.cod, *g.cod, fixed, nullptr};
        bottoms.walk([&](const std::vector<int>& bottom) {
            keep_going = visit(top, bottom);
            return keep_going;
        });
        return keep_going;
    });
}

} // namespace

std::optional<MapF> find_diagonal(const MapF& f, const MapF& g, const Square& sq) {
    int cn = f.cod->n();
    std::vector<int> fixed(cn, -1);
    for (int x = 0; x < f.dom->n(); ++x) {
        int y = f.values[x];
        if (fixed[y] >= 0 && fixed[y] != sq.top.values[x]) return std::nullopt;
        fixed[y] = sq.top.values[x];
    }
    std::vector<std::vector<int>> cand(cn);
    for (int y = 0; y < cn; ++y) {
        if (fixed[y] >= 0) {
            if (g.values[fixed[y]] != sq.bottom.values[y]) return std::nullopt;
            continue;
        }
        for (int z = 0; z < g.dom->n(); ++z)
            if (g.values[z] == sq.bottom.values[y]) cand[y].push_back(z);
        if (cand[y].empty()) return std::nullopt;
    }
    std::optional<MapF> out;
    ExtensionWalker w{*f.cod, *g.dom, fixed, &cand};
    w.walk([&](const std::vector<int>& v) {
        out = MapF(f.cod, g.dom, v);
        return false;
    });
    return out;
}

bool lifts(const MapF& f, const MapF& g, const LiftingCaps& caps) {
    check_square_cap(f, g, caps);
    bool all = true;
    for_each_commuting_square(f, g, [&](const std::vector<int>& top, const std::vector<int>& bottom) {
        if (!square_has_diagonal(f, g, top, bottom)) {
            all = false;
            return false;
        }
        return true;
    });
    return all;
}

std::optional<Square> lift_witness(const MapF& f, const MapF& g, const LiftingCaps& caps) {
    check_square_cap(f, g, caps);
    std::optional<Square> out;
    for_each_commuting_square(f, g, [&](const std::vector<int>& top, const std::vector<int>& bottom) {
        if (!square_has_diagonal(f, g, top, bottom)) {
            out = Square{MapF(f.dom, g.dom, top), MapF(f.cod, g.cod, bottom)};
            return false;
        }
        return true;
    });
    return out;
}

std::vector<MapF> orthogonal_filter(Side side, const std::vector<MapF>& generators,
                                    const std::vector<MapF>& universe, const LiftingCaps& caps) {
    std::vector<MapF> out;
    for (const MapF& u : universe) {
        bool keep = true;
        for (const MapF& gen : generators) {
            bool ok = side == Side::Left ? lifts(u, gen, caps) : lifts(gen, u, caps);
            if (!ok) { keep = false; break; }
        }
        if (keep) out.push_back(u);
    }
    return out;
}

bool is_retract_of(const MapF& f, const MapF& g, const LiftingCaps& caps) {
    check_square_cap(f, g, caps); // same Hom sets bound the i-search
    bool found = false;
    // i_dom : dom f -> dom g, then i_cod pinned on Im f by g.i_dom = i_cod.f
    ExtensionWalker idoms{*f.dom, *g.dom, std::vector<int>(f.dom->n(), -1), nullptr};
    idoms.walk([&](const std::vector<int>& i_dom) {
        std::vector<int> icod_fixed(f.cod->n(), -1);
        for (int x = 0; x < f.dom->n(); ++x) {
            int y = f.values[x];
            int want = g.values[i_dom[x]];
            if (icod_fixed[y] >= 0 && icod_fixed[y] != want) return true;
            icod_fixed[y] = want;
        }
        ExtensionWalker icods{*f.cod, *g.cod, icod_fixed, nullptr};
        icods.walk([&](const std::vector<int>& i_cod) {
            // r_dom : dom g -> dom f with r_dom . i_dom = id
            std::vector<int> rdom_fixed(g.dom->n(), -1);
            for (int x = 0; x < f.dom->n(); ++x) {
                if (rdom_fixed[i_dom[x]] >= 0 && rdom_fixed[i_dom[x]] != x) return true;
                rdom_fixed[i_dom[x]] = x;
            }
            ExtensionWalker rdoms{*g.dom, *f.dom, rdom_fixed, nullptr};
            rdoms.walk([&](const std::vector<int>& r_dom) {
                // r_cod : cod g -> cod f with r_cod . i_cod = id and f.r_dom = r_cod.g
                std::vector<int> rcod_fixed(g.cod->n(), -1);
                for (int y = 0; y < f.cod->n(); ++y) {
                    if (rcod_fixed[i_cod[y]] >= 0 && rcod_fixed[i_cod[y]] != y) return true;
                    rcod_fixed[i_cod[y]] = y;
                }
                for (int z = 0; z < g.dom->n(); ++z) {
                    int gz = g.values[z];
                    int want = f.values[r_dom[z]];
                    if (rcod_fixed[gz] >= 0 && rcod_fixed[gz] != want) return true;
                    rcod_fixed[gz] = want;
                }
                ExtensionWalker rcods{*g.cod, *f.cod, rcod_fixed, nullptr};
                rcods.walk([&](const std::vector<int>&) {
                    found = true;
                    return false;
                });
                return !found;
            });
            return !found;
        });
        return !found;
    });
    return found;
}

bool is_retract_of_power(const Space& x, const Space& a, const LiftingCaps& caps) {
    auto ap = std::make_shared<Space>(a);
    auto xp = std::make_shared<Space>(x);
    std::vector<MapF> hom = enumerate_maps(xp, ap, caps.enumeration);
    if (x.n() == 0) {
        // the empty space maps into every power; a retraction would be a map
        // from a nonempty power to the empty space
        return a.n() == 0 ? true : false;
    }
    double pts = std::pow(double(std::max(a.n(), 1)), double(hom.size()));
    if (a.n() == 0 || pts > double(caps.power_point_cap))
        throw PowerTooLarge("power A^Hom(X,A) would have about " + std::to_string(pts) +
                            " points, past the cap of " + std::to_string(caps.power_point_cap));
    int k = int(hom.size());
    long long np = 1;
    for (int i = 0; i < k; ++i) np *= a.n();
    // power space: tuples in mixed radix, digit i = coordinate of hom map i
    std::vector<int> digits(size_t(np) * k);
    for (long long p = 0; p < np; ++p) {
        long long t = p;
        for (int i = 0; i < k; ++i) {
            digits[size_t(p) * k + i] = int(t % a.n());
            t /= a.n();
        }
    }
    Space power{int(np)};
    for (long long p = 0; p < np; ++p)
        for (long long q = 0; q < np; ++q) {
            bool le = true;
            for (int i = 0; i < k && le; ++i)
                if (!a.leq(digits[size_t(p) * k + i], digits[size_t(q) * k + i])) le = false;
            if (le) power.set_leq(int(p), int(q));
        }
    // canonical evaluation
    std::vector<long long> eval(x.n());
    for (int pt = 0; pt < x.n(); ++pt) {
        long long idx = 0, mul = 1;
        for (int i = 0; i < k; ++i) {
            idx += mul * hom[i].values[pt];
            mul *= a.n();
        }
        eval[pt] = idx;
    }
    // retraction: monotone r : power -> X with r(eval(pt)) = pt
    std::vector<int> fixed(int(np), -1);
    for (int pt = 0; pt < x.n(); ++pt) {
        if (fixed[eval[pt]] >= 0 && fixed[eval[pt]] != pt) return false;
        fixed[eval[pt]] = pt;
    }
    // arc-consistency prefilter, then backtracking
    std::vector<std::vector<int>> cand(np);
    for (long long p = 0; p < np; ++p) {
        if (fixed[p] >= 0) { cand[p] = {fixed[p]}; continue; }
        for (int v = 0; v < x.n(); ++v) cand[p].push_back(v);
    }
    bool changed = true;
    while (changed) {
        changed = false;
        for (long long p = 0; p < np; ++p)
            for (long long q = 0; q < np; ++q) {
                if (p == q || !power.leq(int(p), int(q))) continue;
                auto keep = [&](std::vector<int>& cs, const std::vector<int>& other, bool forward) {
                    size_t before = cs.size();
                    cs.erase(std::remove_if(cs.begin(), cs.end(),
                                            [&](int v) {
                                                for (int w : other)
                                                    if (forward ? x.leq(v, w) : x.leq(w, v)) return false;
                                                return true;
                                            }),
                             cs.end());
                    return cs.size() != before;
                };
                if (keep(cand[p], cand[q], true)) changed = true;
                if (keep(cand[q], cand[p], false)) changed = true;
            }
    }
    for (long long p = 0; p < np; ++p)
        if (cand[p].empty()) return false;
    std::vector<std::vector<int>> cvec(np);
    for (long long p = 0; p < np; ++p) cvec[p] = cand[p];
    bool found = false;
    ExtensionWalker w{power, x, std::vector<int>(np, -1), &cvec};
    // fixed points are encoded through singleton candidate lists
    w.walk([&](const std::vector<int>&) {
        found = true;
        return false;
    });
    return found;
}

} // namespace qn
