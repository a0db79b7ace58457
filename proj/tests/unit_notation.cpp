#include <doctest.h>

#include <random>

#include "qn/enumerate.hpp"
#include "qn/notation.hpp"

using namespace qn;

namespace {

bool isomorphic(const Space& a, const Space& b) {
    return canonical_form(a).matrix_key() == canonical_form(b).matrix_key();
}

bool map_isomorphic(const MapF& f, const MapF& g) {
    return canonical_pair(f) == canonical_pair(g);
}

} // namespace

TEST_CASE("parse_space standard examples") {
    CHECK(parse_space("{a->b}").same_relation(sierpinski_space()));
    CHECK(parse_space("{a<->b}").same_relation(antidiscrete_space(2)));
    CHECK(parse_space("{a=b}").n() == 1);
    CHECK(parse_space("{}").n() == 0);
    CHECK(parse_space("{a,b}").same_relation(discrete_space(2)));
    CHECK(parse_space(" { a -> b } ").same_relation(sierpinski_space()));
    // relations accumulate across declarations
    CHECK(parse_space("{a->b,b->a}").same_relation(antidiscrete_space(2)));
    // chains mix relators; gluing is applied before the arrows
    Space s = parse_space("{a->b=c->d}");
    CHECK(s.n() == 3);
    CHECK(s.leq(0, 1));
    CHECK(s.leq(1, 2));
}

TEST_CASE("parse_space errors carry positions") {
    CHECK_THROWS_AS(parse_space("{a->}"), NotationError);
    CHECK_THROWS_AS(parse_space("{a"), NotationError);
    CHECK_THROWS_AS(parse_space("a->b"), NotationError);
    CHECK_THROWS_AS(parse_space("{a-b}"), NotationError);
    try {
        parse_space("{a->}");
    } catch (const NotationError& e) {
        CHECK(e.pos == 4);
    }
}

TEST_CASE("parse_map: glue, omitted points, pushforward") {
    MapF glue = parse_map("{a,b} --> {a=b}");
    CHECK(glue.dom->same_relation(discrete_space(2)));
    CHECK(glue.cod->n() == 1);
    CHECK(glue.values == std::vector<int>{0, 0});

    // the same point map written with and without repeating the name
    MapF f1 = parse_map("{a} --> {a,b}");
    MapF f2 = parse_map("{a} --> {b}");
    CHECK(f1.cod->n() == 2);
    CHECK(f2.cod->n() == 2);
    CHECK(map_isomorphic(f1, f2));

    // the 4-to-2 closed-subspace detector: the codomain inherits the
    // domain's arrows, so gluing x=y and z=c leaves an antidiscrete pair
    MapF w = parse_map("{x<->y<->z->c} --> {x=y,z=c}");
    CHECK(w.dom->n() == 4);
    CHECK(w.cod->same_relation(antidiscrete_space(2)));
    CHECK(w.values == std::vector<int>{0, 0, 1, 1});
    CHECK(w.is_surjective());
    CHECK(w.is_monotone());

    // a domain arrow between points kept distinct lands in the codomain;
    // the omitted point is appended after the declared ones
    MapF g = parse_map("{a->b} --> {b}");
    CHECK(isomorphic(*g.cod, sierpinski_space()));
    CHECK(g.cod->leq(1, 0)); // a's image sits after b and is the open point
    CHECK(g.is_monotone());
}

TEST_CASE("parse_map errors") {
    CHECK_THROWS_AS(parse_map("{a} {b}"), NotationError);
    CHECK_THROWS_AS(parse_map("{a=b} --> {a,b}"), NotationError); // unresolvable domain point
    CHECK_THROWS_AS(parse_map("{a} --> "), NotationError);
}

TEST_CASE("gluing is a congruence") {
    // pre-glued names parse to the same space
    CHECK(isomorphic(parse_space("{a=b->c}"), parse_space("{a->c,b->c,a=b}")));
    CHECK(isomorphic(parse_space("{a=a}"), parse_space("{a}")));
    MapF m1 = parse_map("{a,b,c} --> {a=b,c}");
    MapF m2 = parse_map("{a,b,c} --> {b=a,c}");
    CHECK(map_isomorphic(m1, m2));
}

TEST_CASE("self-maps are two distinct space values") {
    MapF f = parse_map("{a->b} --> {a->b}");
    CHECK(f.is_iso());
    CHECK(f.dom.get() != f.cod.get()); // an identity between two copies
}

TEST_CASE("random garbage never escapes as anything but a notation error") {
    std::mt19937 rng(7);
    const std::string alphabet = "{}<->=,ab_ 19->";
    for (int trial = 0; trial < 3000; ++trial) {
        std::uniform_int_distribution<size_t> len(0, 24);
        std::uniform_int_distribution<size_t> pick(0, alphabet.size() - 1);
        std::string text;
        size_t n = len(rng);
        for (size_t i = 0; i < n; ++i) text += alphabet[pick(rng)];
        try {
            MapF f = parse_map(text);
            f.require_monotone(); // anything that parses is a real map
        } catch (const NotationError&) {
            // fine: rejected with a position
        }
    }
}

TEST_CASE("print_space round-trips and uses fresh names") {
    CHECK(print_space(sierpinski_space()) == "{a->b}");
    CHECK(print_space(empty_space()) == "{}");
    CHECK(print_space(discrete_space(2)) == "{a,b}");
    for (int n = 0; n <= 4; ++n)
        for (const Space& s : enumerate_spaces(n, SpaceMode::UpToIso))
            CHECK(isomorphic(parse_space(print_space(s)), s));
}

TEST_CASE("round-trip survives random spaces and maps at sizes 5 and 6") {
    std::mt19937 rng(424242);
    auto random_space = [&](int n) {
        Space s(n);
        std::uniform_int_distribution<int> coin(0, 3);
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y)
                if (x != y && coin(rng) == 0) s.set_leq(x, y);
        s.close();
        return s;
    };
    for (int trial = 0; trial < 60; ++trial) {
        Space a = random_space(5 + trial % 2);
        CHECK(isomorphic(parse_space(print_space(a)), a));
    }
    for (int trial = 0; trial < 40; ++trial) {
        auto dom = std::make_shared<Space>(random_space(4));
        auto cod = std::make_shared<Space>(random_space(5));
        auto maps = enumerate_maps(dom, cod);
        if (maps.empty()) continue;
        const MapF& f = maps[rng() % maps.size()];
        MapF back = parse_map(print_map(f));
        CHECK(back.dom->n() == f.dom->n());
        CHECK(back.cod->n() == f.cod->n());
        CHECK(map_isomorphic(back, f));
    }
}

TEST_CASE("print_map round-trips for maps between spaces of size <= 3") {
    CHECK(print_map(parse_map("{a,b} --> {a=b}")) == "{a,b} --> {a=b}");
    std::vector<SpacePtr> spaces;
    for (int n = 0; n <= 3; ++n)
        for (Space& s : enumerate_spaces(n, SpaceMode::UpToIso))
            spaces.push_back(std::make_shared<Space>(std::move(s)));
    for (const SpacePtr& a : spaces)
        for (const SpacePtr& b : spaces)
            for (const MapF& f : enumerate_maps(a, b)) {
                MapF back = parse_map(print_map(f));
                CHECK(map_isomorphic(back, f));
            }
}
