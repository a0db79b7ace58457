#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "qn/enumerate.hpp"
#include "qn/notation.hpp"

using namespace qn;

namespace {

SpacePtr ptr(Space s) { return std::make_shared<Space>(std::move(s)); }

bool isomorphic(const Space& a, const Space& b) {
    return canonical_form(a).matrix_key() == canonical_form(b).matrix_key();
}

} // namespace

TEST_CASE("make_space basics") {
    Space sier = make_space({"a", "b"}, {{"a", "b"}});
    CHECK(sier.n() == 2);
    CHECK(sier.leq(0, 1));
    CHECK(!sier.leq(1, 0));
    CHECK(sier.same_relation(sierpinski_space()));

    Space empty = make_space({}, {});
    CHECK(empty.n() == 0);

    Space anti = make_space({"a", "b"}, {{"a", "b"}, {"b", "a"}});
    CHECK(anti.same_relation(antidiscrete_space(2)));

    CHECK_THROWS_AS(make_space({"a", "a"}, {}), Error);
    CHECK_THROWS_AS(make_space({"a"}, {{"a", "zz"}}), Error);
}

TEST_CASE("every constructed relation is a preorder") {
    for (const Space& s : {sierpinski_space(), antidiscrete_space(3), chain_space(4),
                           product(sierpinski_space(), antidiscrete_space(2)),
                           coproduct(sierpinski_space(), point_space())})
        CHECK(s.is_reflexive_transitive());
}

TEST_CASE("opens of the standard two-point spaces") {
    auto opens_of = [](const Space& s) {
        std::set<std::vector<int>> out;
        for (const PointSet& o : s.opens()) out.insert(o.members());
        return out;
    };
    CHECK(opens_of(sierpinski_space()) ==
          std::set<std::vector<int>>{{}, {0}, {0, 1}});
    CHECK(opens_of(antidiscrete_space(2)) == std::set<std::vector<int>>{{}, {0, 1}});
    CHECK(opens_of(discrete_space(2)) ==
          std::set<std::vector<int>>{{}, {0}, {1}, {0, 1}});
}

TEST_CASE("opens form a topology: unions and intersections, n <= 5") {
    // exhaustive over canonical spaces of size <= 4, plus a 5-chain
    std::vector<Space> all;
    for (int n = 0; n <= 4; ++n)
        for (Space& s : enumerate_spaces(n, SpaceMode::UpToIso)) all.push_back(std::move(s));
    all.push_back(chain_space(5));
    for (const Space& s : all) {
        auto opens = s.opens();
        std::set<std::vector<uint64_t>> open_set;
        for (const PointSet& o : opens) open_set.insert(o.w);
        CHECK(open_set.count(PointSet(s.n()).w));
        CHECK(open_set.count(PointSet::full(s.n()).w));
        for (const PointSet& u : opens)
            for (const PointSet& v : opens) {
                CHECK(open_set.count((u | v).w));
                CHECK(open_set.count((u & v).w));
            }
    }
}

TEST_CASE("closure") {
    Space sier = sierpinski_space();
    CHECK(sier.closure(PointSet::of(2, {0})) == PointSet::full(2));
    CHECK(sier.closure(PointSet::of(2, {1})) == PointSet::of(2, {1}));
    CHECK(sier.closure(PointSet(2)) == PointSet(2));
}

TEST_CASE("pi0") {
    CHECK(pi0(discrete_space(2)).blocks.size() == 2);
    CHECK(pi0(sierpinski_space()).blocks.size() == 1);
    Space mixed = coproduct(sierpinski_space(), point_space());
    auto blocks = pi0(mixed).blocks;
    REQUIRE(blocks.size() == 2);
    CHECK(blocks[0] == std::vector<int>{0, 1});
    CHECK(blocks[1] == std::vector<int>{2});
}

TEST_CASE("generic points") {
    CHECK(sierpinski_space().generic_points() == PointSet::of(2, {0}));
    CHECK(discrete_space(2).generic_points() == PointSet(2));
    CHECK(antidiscrete_space(2).generic_points() == PointSet::full(2));
}

TEST_CASE("product") {
    Space p = product(sierpinski_space(), antidiscrete_space(2));
    CHECK(p.n() == 4);
    // componentwise order, validated through the open count: {}, the open
    // pair, everything
    CHECK(p.opens().size() == 3);
    for (int x1 = 0; x1 < 2; ++x1)
        for (int y1 = 0; y1 < 2; ++y1)
            for (int x2 = 0; x2 < 2; ++x2)
                for (int y2 = 0; y2 < 2; ++y2)
                    CHECK(p.leq(x1 * 2 + y1, x2 * 2 + y2) ==
                          (sierpinski_space().leq(x1, x2) && antidiscrete_space(2).leq(y1, y2)));

    Space a = parse_space("{a->b,c}");
    CHECK(isomorphic(product(a, point_space()), a));
    CHECK(product(empty_space(), a).n() == 0);
    CHECK_THROWS_AS(product(discrete_space(100), discrete_space(100), 1000), CapExceeded);
}

TEST_CASE("coproduct") {
    CHECK(coproduct(point_space(), point_space()).same_relation(discrete_space(2)));
    Space b = parse_space("{a<->b}");
    CHECK(isomorphic(coproduct(empty_space(), b), b));
    Space c = coproduct(sierpinski_space(), point_space());
    CHECK(c.n() == 3);
    int comparable = 0;
    for (int x = 0; x < 3; ++x)
        for (int y = 0; y < 3; ++y)
            if (x != y && c.leq(x, y)) ++comparable;
    CHECK(comparable == 1);
}

TEST_CASE("quotient") {
    auto sier = ptr(sierpinski_space());
    auto [q1, p1] = quotient(sier, Partition{{{0, 1}}});
    CHECK(q1.n() == 1);
    CHECK(p1.is_surjective());
    CHECK(is_quotient_map(p1));

    auto [q2, p2] = quotient(sier, Partition{{{0}, {1}}});
    CHECK(q2.same_relation(*sier));
    CHECK(p2.is_iso());

    // 3-chain a->b->c with blocks {a,c},{b}: the induced arrows close up to
    // the antidiscrete pair
    auto chain = ptr(chain_space(3));
    auto [q3, p3] = quotient(chain, Partition{{{0, 2}, {1}}});
    CHECK(q3.same_relation(antidiscrete_space(2)));
    CHECK(is_quotient_map(p3));

    CHECK_THROWS_AS(quotient(chain, Partition{{{0, 1}}}), Error);
    CHECK_THROWS_AS(quotient(chain, Partition{{{0, 1}, {1, 2}}}), Error);
}

TEST_CASE("fibre") {
    MapF to_point = parse_map("{a->b} --> {a=b}");
    CHECK(fibre(to_point, 0).same_relation(sierpinski_space()));
    MapF id2 = identity_map(ptr(discrete_space(2)));
    CHECK(fibre(id2, 0).n() == 1);
    CHECK(fibre(id2, 1).n() == 1);
    MapF glue2 = parse_map("{a,b} --> {a=b}");
    CHECK(fibre(glue2, 0).same_relation(discrete_space(2)));
}

TEST_CASE("enumerate_maps counts and monotonicity oracle") {
    auto d2 = ptr(discrete_space(2));
    auto sier = ptr(sierpinski_space());
    auto pt = ptr(point_space());
    CHECK(enumerate_maps(d2, sier).size() == 4);
    CHECK(enumerate_maps(sier, sier).size() == 3);
    CHECK(enumerate_maps(ptr(parse_space("{a->b,c<->d}")), pt).size() == 1);

    // oracle: filter all cod^dom functions by monotonicity, sizes <= 3
    std::vector<Space> small;
    for (int n = 0; n <= 3; ++n)
        for (Space& s : enumerate_spaces(n, SpaceMode::UpToIso)) small.push_back(std::move(s));
    for (const Space& a : small)
        for (const Space& b : small) {
            long long brute = 0;
            long long total = 1;
            for (int i = 0; i < a.n(); ++i) total *= b.n();
            if (b.n() == 0) total = a.n() == 0 ? 1 : 0;
            for (long long code = 0; code < total; ++code) {
                std::vector<int> v(a.n());
                long long c = code;
                for (int i = 0; i < a.n(); ++i) {
                    v[i] = int(c % std::max(b.n(), 1));
                    c /= std::max(b.n(), 1);
                }
                bool mono = true;
                for (int x = 0; x < a.n() && mono; ++x)
                    for (int y = 0; y < a.n() && mono; ++y)
                        if (a.leq(x, y) && !b.leq(v[x], v[y])) mono = false;
                if (mono) ++brute;
            }
            auto maps = enumerate_maps(ptr(a), ptr(b));
            CHECK((long long)maps.size() == brute);
            for (const MapF& f : maps) CHECK(f.is_monotone());
            // lexicographic and duplicate-free
            for (size_t i = 1; i < maps.size(); ++i) CHECK(maps[i - 1].values < maps[i].values);
        }
}

TEST_CASE("enumerate_spaces counts match the known sequences") {
    const long long labelled[] = {1, 1, 4, 29, 355};
    for (int n = 0; n <= 4; ++n)
        CHECK((long long)enumerate_spaces(n, SpaceMode::Labelled).size() == labelled[n]);
    const long long up_to_iso[] = {1, 1, 3, 9, 33, 139};
    for (int n = 0; n <= 5; ++n)
        CHECK((long long)enumerate_spaces(n, SpaceMode::UpToIso).size() == up_to_iso[n]);
    EnumerationCaps caps;
    CHECK_THROWS_AS(enumerate_spaces(caps.labelled_max_n + 1, SpaceMode::Labelled), CapExceeded);
}

TEST_CASE("canonical_form: iso invariance, idempotence, class counts") {
    Space sier = sierpinski_space();
    Space relabeled(2);
    relabeled.set_leq(1, 0);
    CHECK(canonical_form(sier).same_relation(canonical_form(relabeled)));
    CHECK(canonical_form(sier).same_relation(canonical_form(canonical_form(sier))));

    // exhaustive: every permutation of every labelled space on <= 4 points
    for (int n = 0; n <= 4; ++n) {
        std::vector<int> perm(n);
        for (const Space& s : enumerate_spaces(n, SpaceMode::Labelled)) {
            Space canon = canonical_form(s);
            CHECK(isomorphic(canon, s));
            for (int i = 0; i < n; ++i) perm[i] = i;
            do {
                Space t(n);
                for (int x = 0; x < n; ++x)
                    for (int y = 0; y < n; ++y)
                        if (s.leq(x, y)) t.set_leq(perm[x], perm[y]);
                CHECK(canonical_form(t).same_relation(canon));
            } while (std::next_permutation(perm.begin(), perm.end()));
        }
        if (n == 4) break; // permutation loop above already covers n = 4
    }

    // 29 labelled spaces on 3 points fall into exactly 9 classes
    std::set<std::vector<uint64_t>> keys;
    for (const Space& s : enumerate_spaces(3, SpaceMode::Labelled))
        keys.insert(canonical_form(s).matrix_key());
    CHECK(keys.size() == 9);
}

TEST_CASE("poset reflection") {
    Space w = parse_space("{x<->y<->z->c}");
    auto [q, cls] = poset_reflection(w);
    CHECK(q.n() == 2);
    CHECK(q.is_poset());
    CHECK(cls == std::vector<int>{0, 0, 0, 1});
}
