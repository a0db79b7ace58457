#include "qn/enumerate.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>

namespace qn {

namespace {

// Backtracking over value vectors in ascending order; partial assignments
// are pruned by monotonicity against already-assigned points.
template <typename Fn>
void walk_monotone_maps(const Space& dom, const Space& cod, Fn&& visit) {
    int n = dom.n();
    if (cod.n() == 0) {
        if (n == 0) visit(std::vector<int>{});
        return;
    }
    std::vector<int> v(n, -1);
    auto ok = [&](int k) {
        for (int y = 0; y < k; ++y) {
            if (dom.leq(y, k) && !cod.leq(v[y], v[k])) return false;
            if (dom.leq(k, y) && !cod.leq(v[k], v[y])) return false;
        }
        return true;
    };
    int k = 0;
    while (true) {
        if (k == n) {
            visit(v);
            if (n == 0) return;
            --k;
        }
        bool advanced = false;
        while (++v[k] < cod.n())
            if (ok(k)) { ++k; advanced = true; break; }
        if (!advanced) {
            v[k] = -1;
            if (k == 0) return;
            --k;
        }
    }
}

void check_map_cap(const Space& dom, const Space& cod, const EnumerationCaps& caps) {
    double total = std::pow(double(cod.n()), double(dom.n()));
    if (total > double(caps.map_count_cap))
        throw CapExceeded("map enumeration: " + std::to_string(cod.n()) + "^" +
                          std::to_string(dom.n()) + " candidate functions exceed the cap");
}

} // namespace

std::vector<MapF> enumerate_maps(SpacePtr dom, SpacePtr cod, const EnumerationCaps& caps) {
    check_map_cap(*dom, *cod, caps);
    std::vector<MapF> out;
    walk_monotone_maps(*dom, *cod, [&](const std::vector<int>& v) {
        out.emplace_back(dom, cod, v);
    });
    return out;
}

long long count_maps(const Space& dom, const Space& cod, const EnumerationCaps& caps) {
    check_map_cap(dom, cod, caps);
    long long c = 0;
    walk_monotone_maps(dom, cod, [&](const std::vector<int>&) { ++c; });
    return c;
}

namespace {

// All reflexive-transitive relations on n labelled points, ascending in
// matrix key order.  n <= 5 keeps 2^(n^2-n) at about a million candidates.
void walk_labelled(int n, const std::function<void(const Space&)>& visit) {
    if (n == 0) {
        visit(Space(0));
        return;
    }
    std::vector<std::pair<int, int>> cells;
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (x != y) cells.emplace_back(x, y);
    int m = int(cells.size());
    if (m > 30) throw CapExceeded("labelled enumeration too large");
    for (uint64_t bitsv = 0; bitsv < (uint64_t{1} << m); ++bitsv) {
        Space s(n);
        // cell i is more significant for smaller i, so ascending counters
        // give ascending row-major keys
        for (int i = 0; i < m; ++i)
            if ((bitsv >> (m - 1 - i)) & 1) s.set_leq(cells[i].first, cells[i].second);
        if (s.is_reflexive_transitive()) visit(s);
    }
}

} // namespace

std::vector<Space> enumerate_spaces(int n, SpaceMode mode, const EnumerationCaps& caps) {
    if (mode == SpaceMode::Labelled) {
        if (n > caps.labelled_max_n)
            throw CapExceeded("labelled enumeration capped at n = " +
                              std::to_string(caps.labelled_max_n));
        std::vector<Space> out;
        walk_labelled(n, [&](const Space& s) { out.push_back(s); });
        return out;
    }
    if (n > caps.up_to_iso_max_n)
        throw CapExceeded("up-to-iso enumeration capped at n = " +
                          std::to_string(caps.up_to_iso_max_n));
    // Build representatives by extending the previous size by one point:
    // every space on k+1 points restricts to one on k points, so extending
    // canonical k-reps by all relation patterns to the new point is complete.
    std::vector<Space> reps = {Space(0)};
    for (int k = 1; k <= n; ++k) {
        std::map<std::vector<uint64_t>, Space> dedup;
        for (const Space& base : reps) {
            int nb = base.n();
            uint64_t patterns = uint64_t{1} << (2 * nb);
            for (uint64_t pat = 0; pat < patterns; ++pat) {
                Space s(nb + 1);
                for (int x = 0; x < nb; ++x)
                    for (int y = 0; y < nb; ++y)
                        if (base.leq(x, y)) s.set_leq(x, y);
                for (int x = 0; x < nb; ++x) {
                    if ((pat >> (2 * x)) & 1) s.set_leq(x, nb);
                    if ((pat >> (2 * x + 1)) & 1) s.set_leq(nb, x);
                }
                s.close();
                Space c = canonical_form(s);
                dedup.emplace(c.matrix_key(), c);
            }
        }
        reps.clear();
        for (auto& [k_, v] : dedup) reps.push_back(v);
    }
    return reps;
}

namespace {

// Iterated refinement invariant: start from (out-degree, in-degree) and
// refine by the multiset of neighbour colours until stable.
std::vector<int> refine_colours(const Space& a) {
    int n = a.n();
    std::vector<int> colour(n, 0);
    {
        std::vector<std::pair<int, int>> deg(n);
        for (int x = 0; x < n; ++x) {
            int od = 0, id = 0;
            for (int y = 0; y < n; ++y) {
                if (a.leq(x, y)) ++od;
                if (a.leq(y, x)) ++id;
            }
            deg[x] = {od, id};
        }
        std::vector<std::pair<int, int>> sorted = deg;
        std::sort(sorted.begin(), sorted.end());
        sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
        for (int x = 0; x < n; ++x)
            colour[x] = int(std::lower_bound(sorted.begin(), sorted.end(), deg[x]) - sorted.begin());
    }
    for (int round = 0; round < n; ++round) {
        std::vector<std::vector<int>> sig(n);
        for (int x = 0; x < n; ++x) {
            sig[x].push_back(colour[x]);
            std::vector<int> below, above;
            for (int y = 0; y < n; ++y) {
                if (a.leq(x, y)) below.push_back(colour[y]);
                if (a.leq(y, x)) above.push_back(colour[y]);
            }
            std::sort(below.begin(), below.end());
            std::sort(above.begin(), above.end());
            sig[x].push_back(-1);
            sig[x].insert(sig[x].end(), below.begin(), below.end());
            sig[x].push_back(-2);
            sig[x].insert(sig[x].end(), above.begin(), above.end());
        }
        std::vector<std::vector<int>> sorted = sig;
        std::sort(sorted.begin(), sorted.end());
        sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
        std::vector<int> next(n);
        for (int x = 0; x < n; ++x)
            next[x] = int(std::lower_bound(sorted.begin(), sorted.end(), sig[x]) - sorted.begin());
        if (next == colour) break;
        colour = next;
    }
    return colour;
}

Space apply_perm(const Space& a, const std::vector<int>& perm) {
    // perm[x] = new position of old point x
    Space b(a.n());
    for (int x = 0; x < a.n(); ++x)
        for (int y = 0; y < a.n(); ++y)
            if (a.leq(x, y)) b.set_leq(perm[x], perm[y]);
    return b;
}

// Visit all permutations compatible with the colour classes (points may only
// move within their class), minimizing the matrix key.
void minimize_over_perms(const Space& a, const std::vector<int>& colour,
                         std::vector<uint64_t>& best_key, Space& best,
                         std::vector<int>* best_perm) {
    int n = a.n();
    // target position ordering: sort points by colour, stable
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int x, int y) {
        if (colour[x] != colour[y]) return colour[x] < colour[y];
        return x < y;
    });
    // group boundaries in target positions
    std::vector<int> perm(n, -1), used(n, 0);
    std::function<void(int)> rec = [&](int pos) {
        if (pos == n) {
            Space b = apply_perm(a, perm);
            auto key = b.matrix_key();
            if (best_key.empty() || key < best_key) {
                best_key = key;
                best = b;
                if (best_perm) *best_perm = perm;
            }
            return;
        }
        int want_colour = colour[order[pos]];
        for (int x = 0; x < n; ++x) {
            if (used[x] || colour[x] != want_colour) continue;
            used[x] = 1;
            perm[x] = pos;
            rec(pos + 1);
            used[x] = 0;
            perm[x] = -1;
        }
    };
    rec(0);
}

} // namespace

Space canonical_form(const Space& a) {
    std::vector<int> colour = refine_colours(a);
    std::vector<uint64_t> best_key;
    Space best(a.n());
    minimize_over_perms(a, colour, best_key, best, nullptr);
    return best;
}

MapF canonical_pair(const MapF& f) {
    // Canonicalize both ends, then minimize the value vector over all
    // relabellings realizing the canonical matrices.
    auto collect_perms = [](const Space& a) {
        std::vector<int> colour = refine_colours(a);
        Space canon = canonical_form(a);
        auto want = canon.matrix_key();
        // gather every class-respecting permutation achieving the key
        std::vector<std::vector<int>> perms;
        int n = a.n();
        std::vector<int> order(n);
        for (int i = 0; i < n; ++i) order[i] = i;
        std::sort(order.begin(), order.end(), [&](int x, int y) {
            if (colour[x] != colour[y]) return colour[x] < colour[y];
            return x < y;
        });
        std::vector<int> perm(n, -1), used(n, 0);
        std::function<void(int)> rec = [&](int pos) {
            if (pos == n) {
                if (apply_perm(a, perm).matrix_key() == want) perms.push_back(perm);
                return;
            }
            int want_colour = colour[order[pos]];
            for (int x = 0; x < n; ++x) {
                if (used[x] || colour[x] != want_colour) continue;
                used[x] = 1;
                perm[x] = pos;
                rec(pos + 1);
                used[x] = 0;
            }
        };
        rec(0);
        return std::make_pair(canon, perms);
    };
    auto [cd, dperms] = collect_perms(*f.dom);
    auto [cc, cperms] = collect_perms(*f.cod);
    auto cdp = std::make_shared<Space>(cd);
    auto ccp = std::make_shared<Space>(cc);
    std::vector<int> best;
    for (const auto& dp : dperms)
        for (const auto& cp : cperms) {
            std::vector<int> v(f.dom->n());
            for (int x = 0; x < f.dom->n(); ++x) v[dp[x]] = cp[f.values[x]];
            if (best.empty() || v < best)
                if (MapF(cdp, ccp, v).is_monotone()) best = v;
        }
    if (best.empty() && f.dom->n() > 0) throw Error("canonical_pair: no relabelling found");
    return MapF(cdp, ccp, best);
}

} // namespace qn
