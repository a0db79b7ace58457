#include "qn/notation.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>

namespace qn {

namespace {

enum class Tok { LBrace, RBrace, Comma, Arrow, DArrow, Eq, MapArrow, Name, End };

struct Token {
    Tok kind;
    std::string text;
    size_t pos;
};

std::vector<Token> tokenize(const std::string& s) {
    std::vector<Token> out;
    size_t i = 0;
    auto is_name_char = [](char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
    };
    while (i < s.size()) {
        char c = s[i];
        if (std::isspace(static_cast<unsigned char>(c))) { ++i; continue; }
        if (c == '{') { out.push_back({Tok::LBrace, "{", i}); ++i; continue; }
        if (c == '}') { out.push_back({Tok::RBrace, "}", i}); ++i; continue; }
        if (c == ',') { out.push_back({Tok::Comma, ",", i}); ++i; continue; }
        if (c == '=') { out.push_back({Tok::Eq, "=", i}); ++i; continue; }
        if (c == '<') {
            if (s.compare(i, 3, "<->") == 0) { out.push_back({Tok::DArrow, "<->", i}); i += 3; continue; }
            throw NotationError("expected '<->'", i);
        }
        if (c == '-') {
            if (s.compare(i, 3, "-->") == 0) { out.push_back({Tok::MapArrow, "-->", i}); i += 3; continue; }
            if (s.compare(i, 2, "->") == 0) { out.push_back({Tok::Arrow, "->", i}); i += 2; continue; }
            throw NotationError("expected '->' or '-->'", i);
        }
        if (is_name_char(c)) {
            size_t j = i;
            while (j < s.size() && is_name_char(s[j])) ++j;
            out.push_back({Tok::Name, s.substr(i, j - i), i});
            i = j;
            continue;
        }
        throw NotationError(std::string("unexpected character '") + c + "'", i);
    }
    out.push_back({Tok::End, "", s.size()});
    return out;
}

enum class Rel { To, Both, Glue };

struct Decls {
    std::vector<std::string> names;                        // first-appearance order
    std::vector<std::pair<int, int>> arrows;               // x -> y (closure pending)
    std::vector<std::pair<int, int>> glue;                 // x = y
    std::map<std::string, int, std::less<>> index;

    int intern(const std::string& s) {
        auto it = index.find(s);
        if (it != index.end()) return it->second;
        int id = int(names.size());
        names.push_back(s);
        index.emplace(s, id);
        return id;
    }
};

// space := "{" [ chain { "," chain } ] "}"
Decls parse_space_decls(const std::vector<Token>& toks, size_t& i) {
    if (toks[i].kind != Tok::LBrace) throw NotationError("expected '{'", toks[i].pos);
    ++i;
    Decls d;
    if (toks[i].kind == Tok::RBrace) { ++i; return d; }
    while (true) {
        if (toks[i].kind != Tok::Name) throw NotationError("expected point name", toks[i].pos);
        int prev = d.intern(toks[i].text);
        ++i;
        while (toks[i].kind == Tok::Arrow || toks[i].kind == Tok::DArrow || toks[i].kind == Tok::Eq) {
            Rel rel = toks[i].kind == Tok::Arrow ? Rel::To
                    : toks[i].kind == Tok::DArrow ? Rel::Both : Rel::Glue;
            ++i;
            if (toks[i].kind != Tok::Name) throw NotationError("expected point name", toks[i].pos);
            int cur = d.intern(toks[i].text);
            ++i;
            switch (rel) {
            case Rel::To: d.arrows.emplace_back(prev, cur); break;
            case Rel::Both:
                d.arrows.emplace_back(prev, cur);
                d.arrows.emplace_back(cur, prev);
                break;
            case Rel::Glue: d.glue.emplace_back(prev, cur); break;
            }
            prev = cur;
        }
        if (toks[i].kind == Tok::Comma) { ++i; continue; }
        if (toks[i].kind == Tok::RBrace) { ++i; return d; }
        throw NotationError("expected ',' or '}'", toks[i].pos);
    }
}

struct UF {
    std::vector<int> p;
    explicit UF(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
    int find(int x) {
        while (p[x] != x) x = p[x] = p[p[x]];
        return x;
    }
    void unite(int a, int b) { p[find(a)] = find(b); }
};

struct BuiltSpace {
    Space space;
    std::vector<int> point_of_name; // name id -> point index
};

// Glue first (union-find on '='), then arrows between class representatives.
BuiltSpace build_space(const Decls& d) {
    int m = int(d.names.size());
    UF uf(m);
    for (auto [a, b] : d.glue) uf.unite(a, b);
    std::vector<int> point_of_name(m, -1);
    std::vector<std::string> labels;
    int npts = 0;
    for (int i = 0; i < m; ++i) {
        int r = uf.find(i);
        if (point_of_name[r] < 0) {
            point_of_name[r] = npts++;
            labels.push_back(d.names[i]);
        }
        point_of_name[i] = point_of_name[r];
    }
    Space s(npts);
    for (auto [a, b] : d.arrows) s.set_leq(point_of_name[a], point_of_name[b]);
    s.close();
    s.set_labels(std::move(labels));
    return {std::move(s), std::move(point_of_name)};
}

} // namespace

Space parse_space(const std::string& text) {
    auto toks = tokenize(text);
    size_t i = 0;
    Decls d = parse_space_decls(toks, i);
    if (toks[i].kind != Tok::End) throw NotationError("trailing input after space", toks[i].pos);
    return build_space(d).space;
}

MapF parse_map(const std::string& text) {
    auto toks = tokenize(text);
    size_t i = 0;
    Decls dd = parse_space_decls(toks, i);
    if (toks[i].kind != Tok::MapArrow) throw NotationError("expected '-->'", toks[i].pos);
    size_t arrow_pos = toks[i].pos;
    ++i;
    Decls cd = parse_space_decls(toks, i);
    if (toks[i].kind != Tok::End) throw NotationError("trailing input after map", toks[i].pos);

    BuiltSpace dom = build_space(dd);

    // Codomain points: '='-classes of the codomain text, then domain points
    // whose names never occur on the right (they keep their own name).
    int cm = int(cd.names.size());
    UF cuf(cm);
    for (auto [a, b] : cd.glue) cuf.unite(a, b);
    std::vector<int> cod_point_of_name(cm, -1);
    std::vector<std::string> cod_labels;
    int cpts = 0;
    for (int i2 = 0; i2 < cm; ++i2) {
        int r = cuf.find(i2);
        if (cod_point_of_name[r] < 0) {
            cod_point_of_name[r] = cpts++;
            cod_labels.push_back(cd.names[i2]);
        }
        cod_point_of_name[i2] = cod_point_of_name[r];
    }

    // Resolve each domain point: all its names must land in one codomain point.
    int dn = dom.space.n();
    std::vector<int> values(dn, -1);
    for (int nm = 0; nm < int(dd.names.size()); ++nm) {
        auto it = cd.index.find(dd.names[nm]);
        if (it == cd.index.end()) continue;
        int p = dom.point_of_name[nm];
        int cp = cod_point_of_name[it->second];
        if (values[p] >= 0 && values[p] != cp)
            throw NotationError("domain point '" + dom.space.label(p) +
                                    "' resolves to more than one codomain point",
                                arrow_pos);
        values[p] = cp;
    }
    for (int p = 0; p < dn; ++p)
        if (values[p] < 0) {
            values[p] = cpts++;
            cod_labels.push_back(dom.space.label(p));
        }

    Space cod(cpts);
    for (auto [a, b] : cd.arrows) cod.set_leq(cod_point_of_name[a], cod_point_of_name[b]);
    // every morphism of the domain appears in the codomain as well
    for (int x = 0; x < dn; ++x)
        for (int y = 0; y < dn; ++y)
            if (dom.space.leq(x, y)) cod.set_leq(values[x], values[y]);
    cod.close();
    cod.set_labels(std::move(cod_labels));

    MapF f(std::make_shared<Space>(std::move(dom.space)), std::make_shared<Space>(std::move(cod)),
           std::move(values));
    f.require_monotone();
    return f;
}

namespace {

std::string fresh_name(int i) {
    if (i < 26) return std::string(1, char('a' + i));
    return "p" + std::to_string(i);
}

// Declarations for one space given per-point names: "<->"-chains for the
// indistinguishability classes, a transitive reduction between classes,
// bare names for untouched points.  Points flagged in covered are already
// mentioned elsewhere and need no isolated entry.
std::vector<std::string> space_decls(const Space& a, const std::vector<std::string>& name,
                                     std::vector<bool> covered = {}) {
    auto classes = a.indistinguishability_classes();
    int nc = int(classes.size());
    auto class_leq = [&](int c1, int c2) { return a.leq(classes[c1][0], classes[c2][0]); };

    std::vector<std::string> decls;
    std::vector<bool> mentioned = covered.empty() ? std::vector<bool>(a.n(), false) : std::move(covered);
    for (int c = 0; c < nc; ++c) {
        if (classes[c].size() < 2) continue;
        std::string chain = name[classes[c][0]];
        for (size_t k = 1; k < classes[c].size(); ++k) chain += "<->" + name[classes[c][k]];
        decls.push_back(chain);
        for (int x : classes[c]) mentioned[x] = true;
    }
    for (int c1 = 0; c1 < nc; ++c1)
        for (int c2 = 0; c2 < nc; ++c2) {
            if (c1 == c2 || !class_leq(c1, c2)) continue;
            bool reduced = true;
            for (int c3 = 0; c3 < nc && reduced; ++c3)
                if (c3 != c1 && c3 != c2 && class_leq(c1, c3) && class_leq(c3, c2)) reduced = false;
            if (!reduced) continue;
            decls.push_back(name[classes[c1][0]] + "->" + name[classes[c2][0]]);
            mentioned[classes[c1][0]] = mentioned[classes[c2][0]] = true;
        }
    for (int c = 0; c < nc; ++c)
        if (classes[c].size() == 1 && !mentioned[classes[c][0]])
            decls.push_back(name[classes[c][0]]);
    return decls;
}

std::string join_decls(const std::vector<std::string>& decls) {
    std::string out = "{";
    for (size_t i = 0; i < decls.size(); ++i) {
        if (i) out += ",";
        out += decls[i];
    }
    out += "}";
    return out;
}

} // namespace

std::string print_space(const Space& a) {
    std::vector<std::string> name(a.n());
    for (int i = 0; i < a.n(); ++i) name[i] = fresh_name(i);
    return join_decls(space_decls(a, name));
}

std::string print_map(const MapF& f) {
    int dn = f.dom->n();
    std::vector<std::string> dname(dn);
    for (int i = 0; i < dn; ++i) dname[i] = fresh_name(i);

    // codomain names: first preimage point's name, else a fresh one
    int cn = f.cod->n();
    std::vector<std::string> cname(cn);
    std::vector<std::vector<int>> pre(cn);
    for (int x = 0; x < dn; ++x) pre[f.values[x]].push_back(x);
    int next_fresh = dn;
    for (int y = 0; y < cn; ++y)
        cname[y] = pre[y].empty() ? fresh_name(next_fresh++) : dname[pre[y][0]];

    std::vector<std::string> cod_decls;
    std::vector<bool> glued(cn, false);
    for (int y = 0; y < cn; ++y) {
        if (pre[y].size() < 2) continue;
        std::string chain = dname[pre[y][0]];
        for (size_t k = 1; k < pre[y].size(); ++k) chain += "=" + dname[pre[y][k]];
        cod_decls.push_back(chain);
        glued[y] = true;
    }
    for (const std::string& d : space_decls(*f.cod, cname, glued)) cod_decls.push_back(d);

    return join_decls(space_decls(*f.dom, dname)) + " --> " + join_decls(cod_decls);
}

} // namespace qn
