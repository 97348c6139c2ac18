#include "gcyl/theta.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <sstream>

namespace gcyl {

std::strong_ordering Cell::operator<=>(const Cell& o) const {
    std::size_t n = std::min(ch.size(), o.ch.size());
    for (std::size_t i = 0; i < n; ++i)
        if (auto c = ch[i] <=> o.ch[i]; c != 0) return c;
    return ch.size() <=> o.ch.size();
}

Cell leaf() { return Cell{}; }

Cell simplex(int n) { return Cell(std::vector<Cell>(static_cast<std::size_t>(n))); }

Cell globe(int n) {
    Cell t;
    for (int i = 0; i < n; ++i) t = Cell(std::vector<Cell>{t});
    return t;
}

namespace {

struct CellParser {
    std::string_view s;
    std::size_t p = 0;

    void skip() {
        while (p < s.size() && std::isspace(static_cast<unsigned char>(s[p]))) ++p;
    }
    bool peek(char c) {
        skip();
        return p < s.size() && s[p] == c;
    }
    void expect(char c) {
        skip();
        if (p >= s.size() || s[p] != c) throw ParseError(std::string("expected '") + c + "'", p);
        ++p;
    }
    int nat() {
        skip();
        std::size_t st = p;
        long v = 0;
        while (p < s.size() && std::isdigit(static_cast<unsigned char>(s[p]))) {
            v = v * 10 + (s[p] - '0');
            if (v > 1000000) throw ParseError("number too large", st);
            ++p;
        }
        if (st == p) throw ParseError("expected a natural number", p);
        return static_cast<int>(v);
    }
    Cell cell() {
        skip();
        if (peek('G')) {
            ++p;
            expect('<');
            int n = nat();
            expect('>');
            return globe(n);
        }
        expect('[');
        std::size_t at = p;
        int n = nat();
        expect(']');
        if (!peek('(')) return simplex(n);
        ++p;
        std::vector<Cell> ch;
        ch.push_back(cell());
        while (peek(',')) {
            ++p;
            ch.push_back(cell());
        }
        expect(')');
        if (static_cast<int>(ch.size()) != n)
            throw ParseError("width " + std::to_string(n) + " but " + std::to_string(ch.size()) +
                                 " children",
                             at);
        return Cell(std::move(ch));
    }
};

}  // namespace

Cell parse_cell(std::string_view text) {
    CellParser ps{text};
    Cell t = ps.cell();
    ps.skip();
    if (ps.p != text.size()) throw ParseError("trailing input", ps.p);
    return t;
}

std::string to_string(const Cell& t) {
    std::string out = "[" + std::to_string(t.width()) + "]";
    bool flat = std::all_of(t.ch.begin(), t.ch.end(), [](const Cell& c) { return c.width() == 0; });
    if (flat) return out;
    out += "(";
    for (std::size_t i = 0; i < t.ch.size(); ++i) {
        if (i) out += ",";
        out += to_string(t.ch[i]);
    }
    return out + ")";
}

int dimension(const Cell& t) {
    int d = 0;
    for (const auto& c : t.ch) d = std::max(d, 1 + dimension(c));
    return d;
}

int num_nodes(const Cell& t) {
    int n = 1;
    for (const auto& c : t.ch) n += num_nodes(c);
    return n;
}

Cell reversed(const Cell& t) {
    Cell r;
    for (auto it = t.ch.rbegin(); it != t.ch.rend(); ++it) r.ch.push_back(reversed(*it));
    return r;
}

bool is_self_dual(const Cell& t) { return reversed(t) == t; }

namespace {

void leaves(const Cell& t, int depth, std::vector<int>& out) {
    if (t.ch.empty()) {
        out.push_back(depth);
        return;
    }
    for (const auto& c : t.ch) leaves(c, depth + 1, out);
}

void meets(const Cell& t, int depth, std::vector<int>& out) {
    for (std::size_t i = 0; i < t.ch.size(); ++i) {
        if (i) out.push_back(depth);
        meets(t.ch[i], depth + 1, out);
    }
}

Cell rebuild(const std::vector<int>& L, const std::vector<int>& M, std::size_t lo, std::size_t hi,
             int base) {
    // leaves lo..hi inclusive, meets between them are M[lo..hi-1]
    if (lo == hi && L[lo] == base) return leaf();
    Cell t;
    std::size_t start = lo;
    for (std::size_t i = lo; i < hi; ++i) {
        if (M[i] < base) throw std::invalid_argument("inconsistent globular sum");
        if (M[i] == base) {
            t.ch.push_back(rebuild(L, M, start, i, base + 1));
            start = i + 1;
        }
    }
    t.ch.push_back(rebuild(L, M, start, hi, base + 1));
    return t;
}

}  // namespace

GlobularSum globular_sum(const Cell& t) {
    GlobularSum g;
    leaves(t, 0, g.leaf_dims);
    meets(t, 0, g.meet_dims);
    return g;
}

Cell from_globular_sum(const GlobularSum& g) {
    if (g.leaf_dims.empty() || g.meet_dims.size() + 1 != g.leaf_dims.size())
        throw std::invalid_argument("malformed globular sum");
    for (std::size_t i = 0; i < g.meet_dims.size(); ++i)
        if (g.meet_dims[i] > g.leaf_dims[i] || g.meet_dims[i] > g.leaf_dims[i + 1])
            throw std::invalid_argument("meet exceeds adjacent globe");
    return rebuild(g.leaf_dims, g.meet_dims, 0, g.leaf_dims.size() - 1, 0);
}

std::string to_string(const GlobularSum& g) {
    static const char* sub[] = {"₀", "₁", "₂", "₃", "₄", "₅", "₆", "₇", "₈", "₉"};
    std::string out = std::to_string(g.leaf_dims[0]);
    for (std::size_t i = 0; i < g.meet_dims.size(); ++i) {
        out += " ⊕";
        for (char c : std::to_string(g.meet_dims[i])) out += sub[c - '0'];
        out += " " + std::to_string(g.leaf_dims[i + 1]);
    }
    return out;
}

std::vector<Cell> all_cells(int max_nodes) {
    // trees[k]: all trees with exactly k nodes; forests[k]: ordered forests with k nodes
    std::vector<std::vector<Cell>> trees(static_cast<std::size_t>(max_nodes) + 1);
    std::vector<std::vector<std::vector<Cell>>> forests(static_cast<std::size_t>(max_nodes) + 1);
    forests[0].push_back({});
    for (int k = 1; k <= max_nodes; ++k) {
        for (const auto& f : forests[static_cast<std::size_t>(k - 1)]) trees[static_cast<std::size_t>(k)].push_back(Cell(f));
        for (int first = 1; first <= k; ++first)
            for (const auto& t : trees[static_cast<std::size_t>(first)])
                for (const auto& rest : forests[static_cast<std::size_t>(k - first)]) {
                    std::vector<Cell> f{t};
                    f.insert(f.end(), rest.begin(), rest.end());
                    forests[static_cast<std::size_t>(k)].push_back(std::move(f));
                }
    }
    std::vector<Cell> out;
    for (int k = 1; k <= max_nodes; ++k)
        for (const auto& t : trees[static_cast<std::size_t>(k)]) out.push_back(t);
    return out;
}

bool is_monotone(const SimplicialMap& f) {
    if (static_cast<int>(f.img.size()) != f.src + 1) return false;
    for (std::size_t i = 0; i < f.img.size(); ++i) {
        if (f.img[i] < 0 || f.img[i] > f.tgt) return false;
        if (i && f.img[i] < f.img[i - 1]) return false;
    }
    return true;
}

SimplicialMap identity_map(int n) {
    SimplicialMap f{n, n, {}};
    for (int i = 0; i <= n; ++i) f.img.push_back(i);
    return f;
}

SimplicialMap coface(int n, int k) {
    SimplicialMap f{n, n + 1, {}};
    for (int i = 0; i <= n; ++i) f.img.push_back(i < k ? i : i + 1);
    return f;
}

SimplicialMap codegeneracy(int n, int k) {
    SimplicialMap f{n + 1, n, {}};
    for (int i = 0; i <= n + 1; ++i) f.img.push_back(i <= k ? i : i - 1);
    return f;
}

SimplicialMap compose(const SimplicialMap& f, const SimplicialMap& g) {
    if (f.tgt != g.src) throw std::invalid_argument("simplicial maps not composable");
    SimplicialMap h{f.src, g.tgt, {}};
    for (int v : f.img) h.img.push_back(g(v));
    return h;
}

GammaImage gamma_image(const SimplicialMap& f) {
    GammaImage g;
    for (int i = 1; i <= f.src; ++i) g.emplace_back(f(i - 1) + 1, f(i));
    return g;
}

std::vector<int> gamma_set(const GammaImage& g, int i) {
    std::vector<int> out;
    for (int j = g[static_cast<std::size_t>(i - 1)].first; j <= g[static_cast<std::size_t>(i - 1)].second; ++j)
        out.push_back(j);
    return out;
}

const Morphism& Morphism::at(int i, int j) const {
    int lo = base(i - 1) + 1;
    if (j < lo || j > base(i)) throw std::out_of_range("no component for this pair");
    return comp[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - lo)];
}

Morphism identity(const Cell& t) {
    Morphism f{t, t, identity_map(t.width()), {}};
    for (const auto& c : t.ch) f.comp.push_back({identity(c)});
    return f;
}

Morphism terminal(const Cell& t) {
    Morphism f{t, leaf(), SimplicialMap{t.width(), 0, std::vector<int>(static_cast<std::size_t>(t.width()) + 1, 0)}, {}};
    f.comp.resize(t.ch.size());
    return f;
}

Morphism vertex(const Cell& t, int q) {
    return Morphism{leaf(), t, SimplicialMap{0, t.width(), {q}}, {}};
}

Morphism compose(const Morphism& f, const Morphism& g) {
    if (!(f.tgt == g.src)) throw std::invalid_argument("morphisms not composable");
    Morphism h{f.src, g.tgt, compose(f.base, g.base), {}};
    for (int i = 1; i <= f.src.width(); ++i) {
        std::vector<Morphism> row;
        for (int j = h.base(i - 1) + 1; j <= h.base(i); ++j) {
            int k = f.base(i - 1) + 1;
            while (!(g.base(k - 1) < j && j <= g.base(k))) ++k;
            row.push_back(compose(f.at(i, k), g.at(k, j)));
        }
        h.comp.push_back(std::move(row));
    }
    return h;
}

bool is_valid(const Morphism& f, std::string* why) {
    auto fail = [&](const std::string& m) {
        if (why) *why = m;
        return false;
    };
    if (f.base.src != f.src.width() || f.base.tgt != f.tgt.width()) return fail("base widths");
    if (!is_monotone(f.base)) return fail("base not monotone");
    if (f.comp.size() != f.src.ch.size()) return fail("component rows");
    for (int i = 1; i <= f.src.width(); ++i) {
        int lo = f.base(i - 1) + 1, hi = f.base(i);
        const auto& row = f.comp[static_cast<std::size_t>(i - 1)];
        if (static_cast<int>(row.size()) != std::max(0, hi - lo + 1)) return fail("component count");
        for (int j = lo; j <= hi; ++j) {
            const auto& c = row[static_cast<std::size_t>(j - lo)];
            if (!(c.src == f.src.ch[static_cast<std::size_t>(i - 1)]) || !(c.tgt == f.tgt.ch[static_cast<std::size_t>(j - 1)]))
                return fail("component endpoints");
            if (!is_valid(c, why)) return false;
        }
    }
    return true;
}

std::string to_string(const Morphism& f) {
    std::string out = "<";
    for (std::size_t i = 0; i < f.base.img.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(f.base.img[i]);
    }
    out += ">";
    std::string parts;
    for (int i = 1; i <= f.src.width(); ++i)
        for (int j = f.base(i - 1) + 1; j <= f.base(i); ++j) {
            const auto& c = f.at(i, j);
            if (c.src.width() == 0 && c.tgt.width() == 0) continue;
            if (!parts.empty()) parts += ",";
            parts += "(" + std::to_string(i) + "," + std::to_string(j) + "):" + to_string(c);
        }
    if (!parts.empty()) out += "{" + parts + "}";
    return out;
}

namespace {

struct MorphismParser {
    CellParser p;

    Morphism parse(const Cell& src, const Cell& tgt) {
        Morphism f{src, tgt, SimplicialMap{src.width(), tgt.width(), {}}, {}};
        p.expect('<');
        f.base.img.push_back(p.nat());
        while (p.peek(',')) {
            ++p.p;
            f.base.img.push_back(p.nat());
        }
        p.expect('>');
        if (!is_monotone(f.base)) throw ParseError("base is not a monotone map of the right shape", p.p);
        std::vector<std::vector<std::pair<bool, Morphism>>> slots(src.ch.size());
        for (int i = 1; i <= src.width(); ++i)
            for (int j = f.base(i - 1) + 1; j <= f.base(i); ++j) slots[static_cast<std::size_t>(i - 1)].emplace_back(false, Morphism{});
        if (p.peek('{')) {
            ++p.p;
            do {
                if (p.peek(',')) ++p.p;
                p.expect('(');
                int i = p.nat();
                p.expect(',');
                int j = p.nat();
                p.expect(')');
                p.expect(':');
                if (i < 1 || i > src.width() || j <= f.base(i - 1) || j > f.base(i))
                    throw ParseError("component key outside F(base)", p.p);
                auto& slot = slots[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - f.base(i - 1) - 1)];
                slot.first = true;
                slot.second = parse(src.ch[static_cast<std::size_t>(i - 1)], tgt.ch[static_cast<std::size_t>(j - 1)]);
            } while (p.peek(','));
            p.expect('}');
        }
        for (int i = 1; i <= src.width(); ++i) {
            std::vector<Morphism> row;
            for (int j = f.base(i - 1) + 1; j <= f.base(i); ++j) {
                auto& slot = slots[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - f.base(i - 1) - 1)];
                if (slot.first) {
                    row.push_back(std::move(slot.second));
                    continue;
                }
                const Cell& a = src.ch[static_cast<std::size_t>(i - 1)];
                const Cell& b = tgt.ch[static_cast<std::size_t>(j - 1)];
                if (b.width() == 0) row.push_back(terminal(a));
                else if (a == b) row.push_back(identity(a));
                else throw ParseError("missing component (" + std::to_string(i) + "," + std::to_string(j) + ")", p.p);
            }
            f.comp.push_back(std::move(row));
        }
        return f;
    }
};

}  // namespace

Morphism parse_morphism(std::string_view text, const Cell& src, const Cell& tgt) {
    MorphismParser mp{CellParser{text}};
    Morphism f = mp.parse(src, tgt);
    mp.p.skip();
    if (mp.p.p != text.size()) throw ParseError("trailing input", mp.p.p);
    return f;
}

std::string to_string(FaceKind k) {
    switch (k) {
        case FaceKind::vertical: return "vertical";
        case FaceKind::inner: return "inner";
        case FaceKind::outer: return "outer";
    }
    return "?";
}

Morphism coface_morphism(const Cell& src, const Cell& tgt, int k, int variant) {
    int n = src.width();
    Morphism f{src, tgt, coface(n, k), {}};
    for (int i = 1; i <= n; ++i) {
        std::vector<Morphism> row;
        const Cell& a = src.ch[static_cast<std::size_t>(i - 1)];
        if (i == k && k >= 1 && k <= n) {
            if (variant == 0) row = {identity(a), terminal(a)};
            else row = {terminal(a), identity(a)};
        } else {
            row.push_back(identity(a));
        }
        f.comp.push_back(std::move(row));
    }
    return f;
}

std::vector<Hyperface> hyperfaces(const Cell& t) {
    std::vector<Hyperface> out;
    int n = t.width();
    auto without = [&](int a, int b) {
        Cell s;
        for (int i = 1; i <= n; ++i)
            if (i != a && i != b) s.ch.push_back(t.ch[static_cast<std::size_t>(i - 1)]);
        return s;
    };
    for (int k = 1; k <= n; ++k) {
        auto sub = hyperfaces(t.ch[static_cast<std::size_t>(k - 1)]);
        for (std::size_t v = 0; v < sub.size(); ++v) {
            Cell s = t;
            s.ch[static_cast<std::size_t>(k - 1)] = sub[v].map.src;
            Morphism f = identity(s);
            f.tgt = t;
            f.comp[static_cast<std::size_t>(k - 1)][0] = sub[v].map;
            out.push_back({FaceKind::vertical, k, static_cast<int>(v), std::move(f)});
        }
    }
    for (int k = 1; k < n; ++k) {
        if (t.ch[static_cast<std::size_t>(k)].width() == 0) {
            Cell s = without(k + 1, -1);
            out.push_back({FaceKind::inner, k, 0, coface_morphism(s, t, k, 0)});
        }
        if (t.ch[static_cast<std::size_t>(k - 1)].width() == 0) {
            Cell s = without(k, -1);
            out.push_back({FaceKind::inner, k, 1, coface_morphism(s, t, k, 1)});
        }
    }
    if (n >= 1 && t.ch.front().width() == 0)
        out.push_back({FaceKind::outer, 0, 0, coface_morphism(without(1, -1), t, 0, 0)});
    if (n >= 1 && t.ch.back().width() == 0)
        out.push_back({FaceKind::outer, n, 0, coface_morphism(without(n, -1), t, n, 0)});
    return out;
}

namespace {

// leaves are numbered left to right; returns the child index holding leaf i and the local index
std::pair<int, int> locate_leaf(const Cell& t, int i) {
    for (int s = 1; s <= t.width(); ++s) {
        int cnt = static_cast<int>(globular_sum(t.ch[static_cast<std::size_t>(s - 1)]).leaf_dims.size());
        if (i < cnt) return {s, i};
        i -= cnt;
    }
    throw std::out_of_range("leaf index");
}

Morphism descend(const Cell& t, int s, Morphism inner) {
    Cell src = Cell(std::vector<Cell>{inner.src});
    return Morphism{src, t, SimplicialMap{1, t.width(), {s - 1, s}}, {{std::move(inner)}}};
}

}  // namespace

Morphism globe_inclusion(const Cell& t, int i) {
    if (t.width() == 0) {
        if (i != 0) throw std::out_of_range("leaf index");
        return identity(t);
    }
    auto [s, li] = locate_leaf(t, i);
    return descend(t, s, globe_inclusion(t.ch[static_cast<std::size_t>(s - 1)], li));
}

Morphism meet_inclusion(const Cell& t, int i) {
    // meet between leaf i-1 and leaf i
    auto [s0, l0] = locate_leaf(t, i - 1);
    auto [s1, l1] = locate_leaf(t, i);
    if (s0 != s1) return vertex(t, s0);
    return descend(t, s0, meet_inclusion(t.ch[static_cast<std::size_t>(s0 - 1)], l1));
}

}  // namespace gcyl
