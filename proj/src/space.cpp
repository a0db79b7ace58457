#include "qn/space.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace qn {

int PointSet::count() const {
    int c = 0;
    for (uint64_t x : w) c += std::popcount(x);
    return c;
}

bool PointSet::empty() const {
    for (uint64_t x : w)
        if (x) return false;
    return true;
}

bool PointSet::is_subset_of(const PointSet& o) const {
    for (size_t i = 0; i < w.size(); ++i)
        if (w[i] & ~o.w[i]) return false;
    return true;
}

PointSet PointSet::operator|(const PointSet& o) const {
    PointSet r(n);
    for (size_t i = 0; i < w.size(); ++i) r.w[i] = w[i] | o.w[i];
    return r;
}

PointSet PointSet::operator&(const PointSet& o) const {
    PointSet r(n);
    for (size_t i = 0; i < w.size(); ++i) r.w[i] = w[i] & o.w[i];
    return r;
}

PointSet PointSet::complement() const {
    PointSet r(n);
    for (size_t i = 0; i < w.size(); ++i) r.w[i] = ~w[i];
    if (n & 63) r.w.back() &= (uint64_t{1} << (n & 63)) - 1;
    return r;
}

bool PointSet::operator<(const PointSet& o) const {
    if (n != o.n) return n < o.n;
    return w < o.w;
}

std::vector<int> PointSet::members() const {
    std::vector<int> out;
    for (int i = 0; i < n; ++i)
        if (test(i)) out.push_back(i);
    return out;
}

PointSet PointSet::full(int n) {
    PointSet r(n);
    for (int i = 0; i < n; ++i) r.set(i);
    return r;
}

PointSet PointSet::of(int n, std::initializer_list<int> pts) {
    PointSet r(n);
    for (int i : pts) r.set(i);
    return r;
}

Space::Space(int n) : n_(n), words_((n + 63) / 64), bits_(size_t(n) * words_, 0) {
    for (int i = 0; i < n; ++i) set_leq(i, i);
}

void Space::close() {
    for (int i = 0; i < n_; ++i) set_leq(i, i);
    // Floyd-Warshall on bit rows.
    for (int k = 0; k < n_; ++k) {
        const uint64_t* rk = &bits_[size_t(k) * words_];
        for (int x = 0; x < n_; ++x) {
            if (!leq(x, k)) continue;
            uint64_t* rx = &bits_[size_t(x) * words_];
            for (int wd = 0; wd < words_; ++wd) rx[wd] |= rk[wd];
        }
    }
}

bool Space::is_reflexive_transitive() const {
    for (int i = 0; i < n_; ++i)
        if (!leq(i, i)) return false;
    for (int x = 0; x < n_; ++x)
        for (int y = 0; y < n_; ++y) {
            if (!leq(x, y)) continue;
            const uint64_t* rx = &bits_[size_t(x) * words_];
            const uint64_t* ry = &bits_[size_t(y) * words_];
            for (int wd = 0; wd < words_; ++wd)
                if (ry[wd] & ~rx[wd]) return false;
        }
    return true;
}

void Space::require_valid() const {
    if (!is_reflexive_transitive()) throw Error("space relation is not a preorder");
}

PointSet Space::row(int x) const {
    PointSet r(n_);
    for (int wd = 0; wd < words_; ++wd) r.w[wd] = bits_[size_t(x) * words_ + wd];
    return r;
}

PointSet Space::closure(const PointSet& s) const {
    PointSet r(n_);
    for (int x = 0; x < n_; ++x)
        if (s.test(x))
            for (int wd = 0; wd < words_; ++wd) r.w[wd] |= bits_[size_t(x) * words_ + wd];
    return r;
}

bool Space::is_closed(const PointSet& s) const {
    return closure(s) == s || closure(s).is_subset_of(s);
}

bool Space::is_open(const PointSet& s) const { return is_closed(s.complement()); }

std::vector<PointSet> Space::opens() const {
    if (n_ > 20) throw CapExceeded("opens(): refusing to enumerate 2^" + std::to_string(n_) + " subsets");
    std::vector<PointSet> out;
    for (uint64_t m = 0; m < (uint64_t{1} << n_); ++m) {
        PointSet s(n_);
        if (n_ > 0) s.w[0] = m;
        if (is_open(s)) out.push_back(s);
    }
    return out;
}

PointSet Space::generic_points() const {
    PointSet g(n_);
    PointSet all = PointSet::full(n_);
    for (int x = 0; x < n_; ++x)
        if (row(x) == all) g.set(x);
    return g;
}

std::vector<std::vector<int>> Space::indistinguishability_classes() const {
    std::vector<int> cls(n_, -1);
    std::vector<std::vector<int>> out;
    for (int x = 0; x < n_; ++x) {
        if (cls[x] >= 0) continue;
        int id = int(out.size());
        out.emplace_back();
        for (int y = x; y < n_; ++y)
            if (cls[y] < 0 && mutually_leq(x, y)) {
                cls[y] = id;
                out.back().push_back(y);
            }
    }
    return out;
}

bool Space::is_poset() const {
    for (int x = 0; x < n_; ++x)
        for (int y = x + 1; y < n_; ++y)
            if (mutually_leq(x, y)) return false;
    return true;
}

bool Space::is_discrete() const {
    for (int x = 0; x < n_; ++x)
        for (int y = 0; y < n_; ++y)
            if (x != y && leq(x, y)) return false;
    return true;
}

bool Space::is_antidiscrete() const {
    for (int x = 0; x < n_; ++x)
        for (int y = 0; y < n_; ++y)
            if (!leq(x, y)) return false;
    return true;
}

bool Space::is_connected() const { return pi0(*this).blocks.size() <= 1; }

void Space::set_labels(std::vector<std::string> labels) {
    if (!labels.empty() && int(labels.size()) != n_) throw Error("label count mismatch");
    labels_ = std::move(labels);
}

std::string Space::label(int i) const {
    if (i >= 0 && i < int(labels_.size()) && !labels_[i].empty()) return labels_[i];
    if (i < 26) return std::string(1, char('a' + i));
    return "p" + std::to_string(i);
}

std::vector<uint64_t> Space::matrix_key() const {
    // Row-major bit string, one bit per (x,y), earlier positions more
    // significant so keys compare like strings.
    std::vector<uint64_t> key((size_t(n_) * n_ + 63) / 64, 0);
    size_t pos = 0;
    for (int x = 0; x < n_; ++x)
        for (int y = 0; y < n_; ++y, ++pos)
            if (leq(x, y)) key[pos >> 6] |= uint64_t{1} << (63 - (pos & 63));
    return key;
}

bool Space::same_relation(const Space& o) const { return n_ == o.n_ && bits_ == o.bits_; }

void Partition::require_valid(int n) const {
    std::vector<int> seen(n, 0);
    for (const auto& b : blocks) {
        if (b.empty()) throw Error("partition block is empty");
        for (int x : b) {
            if (x < 0 || x >= n) throw Error("partition block member out of range");
            if (seen[x]++) throw Error("partition blocks are not disjoint");
        }
    }
    for (int x = 0; x < n; ++x)
        if (!seen[x]) throw Error("partition does not cover point " + std::to_string(x));
}

namespace {
struct UnionFind {
    std::vector<int> p;
    explicit UnionFind(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
    int find(int x) {
        while (p[x] != x) x = p[x] = p[p[x]];
        return x;
    }
    void unite(int a, int b) { p[find(a)] = find(b); }
};
} // namespace

Partition pi0(const Space& a) {
    UnionFind uf(a.n());
    for (int x = 0; x < a.n(); ++x)
        for (int y = 0; y < a.n(); ++y)
            if (a.leq(x, y)) uf.unite(x, y);
    std::vector<int> root_to_block(a.n(), -1);
    Partition p;
    for (int x = 0; x < a.n(); ++x) {
        int r = uf.find(x);
        if (root_to_block[r] < 0) {
            root_to_block[r] = int(p.blocks.size());
            p.blocks.emplace_back();
        }
        p.blocks[root_to_block[r]].push_back(x);
    }
    return p;
}

Space make_space(const std::vector<std::string>& points,
                 const std::vector<std::pair<std::string, std::string>>& relations) {
    std::vector<std::string> names = points;
    for (size_t i = 0; i < names.size(); ++i)
        for (size_t j = i + 1; j < names.size(); ++j)
            if (names[i] == names[j]) throw Error("duplicate point name: " + names[i]);
    auto index_of = [&](const std::string& s) {
        for (size_t i = 0; i < names.size(); ++i)
            if (names[i] == s) return int(i);
        throw Error("unknown point name: " + s);
    };
    Space a(int(names.size()));
    for (const auto& [x, y] : relations) a.set_leq(index_of(x), index_of(y));
    a.close();
    a.set_labels(names);
    return a;
}

Space product(const Space& a, const Space& b, int max_points) {
    long long np = (long long)a.n() * b.n();
    if (np > max_points)
        throw CapExceeded("product space would have " + std::to_string(np) + " points (universe too large)");
    Space p{int(np)};
    for (int x1 = 0; x1 < a.n(); ++x1)
        for (int y1 = 0; y1 < b.n(); ++y1)
            for (int x2 = 0; x2 < a.n(); ++x2)
                for (int y2 = 0; y2 < b.n(); ++y2)
                    if (a.leq(x1, x2) && b.leq(y1, y2))
                        p.set_leq(x1 * b.n() + y1, x2 * b.n() + y2);
    return p;
}

Space coproduct(const Space& a, const Space& b) {
    Space c(a.n() + b.n());
    for (int x = 0; x < a.n(); ++x)
        for (int y = 0; y < a.n(); ++y)
            if (a.leq(x, y)) c.set_leq(x, y);
    for (int x = 0; x < b.n(); ++x)
        for (int y = 0; y < b.n(); ++y)
            if (b.leq(x, y)) c.set_leq(a.n() + x, a.n() + y);
    return c;
}

Space subspace(const Space& a, const PointSet& pts) {
    std::vector<int> m = pts.members();
    Space s(int(m.size()));
    for (size_t i = 0; i < m.size(); ++i)
        for (size_t j = 0; j < m.size(); ++j)
            if (a.leq(m[i], m[j])) s.set_leq(int(i), int(j));
    if (!a.labels().empty()) {
        std::vector<std::string> lb;
        for (int x : m) lb.push_back(a.label(x));
        s.set_labels(std::move(lb));
    }
    return s;
}

std::pair<Space, std::vector<int>> poset_reflection(const Space& a) {
    auto classes = a.indistinguishability_classes();
    std::vector<int> cls(a.n(), -1);
    for (size_t i = 0; i < classes.size(); ++i)
        for (int x : classes[i]) cls[x] = int(i);
    Space q(int(classes.size()));
    for (int x = 0; x < a.n(); ++x)
        for (int y = 0; y < a.n(); ++y)
            if (a.leq(x, y)) q.set_leq(cls[x], cls[y]);
    return {q, cls};
}

Space empty_space() { return Space(0); }
Space point_space() { return Space(1); }

Space discrete_space(int n) { return Space(n); }

Space antidiscrete_space(int n) {
    Space a(n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) a.set_leq(x, y);
    return a;
}

Space sierpinski_space() {
    Space s(2);
    s.set_leq(0, 1);
    return s;
}

Space chain_space(int n) {
    Space c(n);
    for (int x = 0; x < n; ++x)
        for (int y = x; y < n; ++y) c.set_leq(x, y);
    return c;
}

} // namespace qn
