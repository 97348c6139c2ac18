#include "gcyl/dac.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

#include "json.hpp"

namespace gcyl {

Chain Complex::boundary(int k, const Chain& x) const {
    Chain r;
    if (k <= 0) return r;
    for (const auto& [i, c] : x.t) r += diff(k, i).scaled(c);
    return r;
}

i64 Complex::augment(const Chain& x) const {
    i64 s = 0;
    for (const auto& [i, c] : x.t) s = checked_add(s, checked_mul(c, e[static_cast<std::size_t>(i)]));
    return s;
}

std::optional<std::pair<int, int>> Complex::find(const std::string& nm) const {
    auto it = index_.find(nm);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::string Complex::format(int k, const Chain& x) const {
    if (x.empty()) return "0";
    std::string out;
    for (const auto& [i, c] : x.t) {
        if (out.empty()) {
            if (c < 0) out += "-";
        } else {
            out += c < 0 ? " - " : " + ";
        }
        i64 a = c < 0 ? -c : c;
        if (a != 1) out += std::to_string(a) + " ";
        out += name(k, i);
    }
    return out;
}

Chain Complex::parse_chain(int k, const std::string& text) const {
    Chain x;
    std::istringstream in(text);
    std::vector<std::string> toks;
    for (std::string tok; in >> tok;) toks.push_back(tok);
    i64 sign = 1, coef = 1;
    auto is_op = [](const std::string& t) { return t == "+" || t == "-"; };
    for (std::size_t i = 0; i < toks.size(); ++i) {
        std::string tok = toks[i];
        if (is_op(tok)) {
            sign = tok == "-" ? -1 : 1;
            continue;
        }
        bool digits = std::all_of(tok.begin(), tok.end(), ::isdigit);
        // a number followed by a term is a coefficient
        if (digits && i + 1 < toks.size() && !is_op(toks[i + 1])) {
            coef = std::stoll(tok);
            continue;
        }
        if (tok == "0" && toks.size() == 1 && !find(tok)) continue;
        if (tok.size() > 1 && tok[0] == '-' && find(tok.substr(1))) {
            sign = -1;
            tok = tok.substr(1);
        }
        auto g = find(tok);
        if (!g || g->first != k) throw std::invalid_argument("unknown generator " + tok + " in degree " + std::to_string(k));
        x.add_term(g->second, sign * coef);
        sign = 1;
        coef = 1;
    }
    return x;
}

void Complex::reindex() {
    index_.clear();
    for (int k = 0; k <= top(); ++k)
        for (int i = 0; i < size(k); ++i) index_[name(k, i)] = {k, i};
}

int add_generator(Complex& c, int k, std::string nm, Chain boundary, i64 aug) {
    while (c.top() < k) {
        c.names.emplace_back();
        c.d.emplace_back();
    }
    c.names[static_cast<std::size_t>(k)].push_back(std::move(nm));
    c.d[static_cast<std::size_t>(k)].push_back(k == 0 ? Chain{} : std::move(boundary));
    if (k == 0) c.e.push_back(aug);
    return c.size(k) - 1;
}

CPtr finish(Complex c) {
    c.reindex();
    return std::make_shared<const Complex>(std::move(c));
}

CPtr point() {
    Complex c;
    add_generator(c, 0, "0", {}, 1);
    return finish(std::move(c));
}

CPtr interval() {
    Complex c;
    add_generator(c, 0, "l", {}, 1);
    add_generator(c, 0, "r", {}, 1);
    add_generator(c, 1, "h", Chain::gen(1) - Chain::gen(0));
    return finish(std::move(c));
}

CPtr lambda_globe(int n) {
    Complex c;
    if (n == 0) {
        add_generator(c, 0, "v0", {}, 1);
        return finish(std::move(c));
    }
    for (int k = 0; k < n; ++k) {
        Chain bd = k == 0 ? Chain{} : Chain::gen(1) - Chain::gen(0);
        add_generator(c, k, "b" + std::to_string(k), bd, 1);
        add_generator(c, k, "t" + std::to_string(k), bd, 1);
    }
    add_generator(c, n, "v" + std::to_string(n), Chain::gen(1) - Chain::gen(0));
    return finish(std::move(c));
}

Chain Wreath::suspend(int i, int k, const Chain& x) const {
    Chain r;
    for (const auto& [a, c] : x.t) r.t.emplace_back(sigma(i, k, a), c);
    return r;
}

std::pair<int, int> Wreath::unsuspend(int k1, int idx) const {
    for (int i = 1; i <= n(); ++i) {
        int lo = sigma(i, k1 - 1, 0);
        if (idx >= lo && idx < lo + labels[static_cast<std::size_t>(i - 1)]->size(k1 - 1)) return {i, idx - lo};
    }
    throw std::out_of_range("not a suspended generator");
}

Wreath wreath(std::vector<CPtr> labels) {
    Wreath w;
    w.labels = std::move(labels);
    int n = w.n();
    int maxk = -1;
    for (const auto& l : w.labels) maxk = std::max(maxk, l->top());
    w.offset.assign(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(std::max(maxk + 1, 0)), 0));
    for (int k = 0; k <= maxk; ++k) {
        int run = 0;
        for (int i = 1; i <= n; ++i) {
            w.offset[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(k)] = run;
            run += w.labels[static_cast<std::size_t>(i - 1)]->size(k);
        }
    }
    Complex c;
    for (int q = 0; q <= n; ++q) add_generator(c, 0, std::to_string(q), {}, 1);
    for (int k = 0; k <= maxk; ++k)
        for (int i = 1; i <= n; ++i) {
            const Complex& L = *w.labels[static_cast<std::size_t>(i - 1)];
            for (int a = 0; a < L.size(k); ++a) {
                Chain bd;
                if (k == 0) {
                    i64 ea = L.e[static_cast<std::size_t>(a)];
                    bd = Chain::gen(i, ea) - Chain::gen(i - 1, ea);
                } else {
                    bd = w.suspend(i, k - 1, L.diff(k, a));
                }
                add_generator(c, k + 1, "S" + std::to_string(i) + "(" + L.name(k, a) + ")", bd);
            }
        }
    w.cx = finish(std::move(c));
    return w;
}

Wreath lambda_wreath(const Cell& t) {
    std::vector<CPtr> labels;
    for (const auto& c : t.ch) labels.push_back(lambda(c));
    return wreath(std::move(labels));
}

CPtr lambda(const Cell& t) { return lambda_wreath(t).cx; }

namespace {

std::string wrap(const std::string& s) {
    return s.find("⊗") == std::string::npos ? s : "(" + s + ")";
}

}  // namespace

Tensor::Split Tensor::split(int n, int idx) const {
    for (int p = 0; p <= n; ++p) {
        int q = n - p;
        int lo = offset[static_cast<std::size_t>(n)][static_cast<std::size_t>(p)];
        int sz = K->size(p) * L->size(q);
        if (idx >= lo && idx < lo + sz) return {p, (idx - lo) / L->size(q), q, (idx - lo) % L->size(q)};
    }
    throw std::out_of_range("tensor index");
}

Chain Tensor::pair(int p, const Chain& x, int q, const Chain& y) const {
    Chain r;
    if (p < 0 || q < 0 || p > K->top() || q > L->top()) return r;
    for (const auto& [a, c] : x.t)
        for (const auto& [b, d] : y.t) r.add_term(index(p, a, q, b), checked_mul(c, d));
    return r;
}

Tensor tensor(CPtr K, CPtr L) {
    Tensor T;
    T.K = K;
    T.L = L;
    int top = K->top() + L->top();
    T.offset.assign(static_cast<std::size_t>(top) + 1, {});
    Complex c;
    for (int n = 0; n <= top; ++n) {
        int run = 0;
        for (int p = 0; p <= n; ++p) {
            T.offset[static_cast<std::size_t>(n)].push_back(run);
            run += K->size(p) * L->size(n - p);
        }
    }
    for (int n = 0; n <= top; ++n)
        for (int p = 0; p <= n; ++p) {
            int q = n - p;
            for (int a = 0; a < K->size(p); ++a)
                for (int b = 0; b < L->size(q); ++b) {
                    std::string nm = wrap(K->name(p, a)) + "⊗" + wrap(L->name(q, b));
                    if (n == 0) {
                        add_generator(c, 0, nm, {}, checked_mul(K->e[static_cast<std::size_t>(a)], L->e[static_cast<std::size_t>(b)]));
                        continue;
                    }
                    Chain bd;
                    if (p > 0) bd += T.pair(p - 1, K->diff(p, a), q, Chain::gen(b));
                    if (q > 0) bd += T.pair(p, Chain::gen(a), q - 1, L->diff(q, b)).scaled(p % 2 ? -1 : 1);
                    add_generator(c, n, nm, bd);
                }
        }
    T.cx = finish(std::move(c));
    return T;
}

Tensor cylinder(const Cell& t) { return tensor(interval(), lambda(t)); }

Chain Morph::apply(int k, const Chain& x) const {
    Chain r;
    if (k < 0 || k >= static_cast<int>(img.size())) return r;
    for (const auto& [i, c] : x.t) r += of(k, i).scaled(c);
    return r;
}

Morph zero_morph(CPtr src, CPtr tgt) {
    Morph f{src, tgt, {}};
    for (int k = 0; k <= src->top(); ++k) f.img.emplace_back(static_cast<std::size_t>(src->size(k)));
    return f;
}

Morph identity_morph(CPtr k) {
    Morph f = zero_morph(k, k);
    for (int d = 0; d <= k->top(); ++d)
        for (int i = 0; i < k->size(d); ++i) f.img[static_cast<std::size_t>(d)][static_cast<std::size_t>(i)] = Chain::gen(i);
    return f;
}

Morph compose(const Morph& f, const Morph& g) {
    Morph h = zero_morph(f.src, g.tgt);
    for (int k = 0; k <= f.src->top(); ++k)
        for (int i = 0; i < f.src->size(k); ++i) h.img[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)] = g.apply(k, f.of(k, i));
    return h;
}

Morph add(const Morph& f, const Morph& g) {
    Morph h = f;
    for (std::size_t k = 0; k < h.img.size(); ++k)
        for (std::size_t i = 0; i < h.img[k].size(); ++i) h.img[k][i] += g.img[k][i];
    return h;
}

std::string check_complex(const Complex& k) {
    for (int d = 1; d <= k.top(); ++d)
        for (int i = 0; i < k.size(d); ++i) {
            for (const auto& [j, c] : k.diff(d, i).t)
                if (j < 0 || j >= k.size(d - 1)) return "boundary of " + k.name(d, i) + " out of range";
            if (d >= 2 && !k.boundary(d - 1, k.diff(d, i)).empty()) return "d∘d ≠ 0 on " + k.name(d, i);
            if (d == 1 && k.augment(k.diff(d, i)) != 0) return "e∘d ≠ 0 on " + k.name(d, i);
        }
    return {};
}

std::string check_morph(const Morph& f) {
    const Complex& S = *f.src;
    const Complex& T = *f.tgt;
    if (static_cast<int>(f.img.size()) != S.top() + 1) return "image table has wrong shape";
    for (int k = 0; k <= S.top(); ++k)
        for (int i = 0; i < S.size(k); ++i) {
            const Chain& y = f.of(k, i);
            if (!y.nonnegative()) return "negative image of " + S.name(k, i);
            if (!y.empty() && k > T.top()) return "image of " + S.name(k, i) + " above target top";
            for (const auto& [j, c] : y.t)
                if (j < 0 || j >= T.size(k)) return "image of " + S.name(k, i) + " out of range";
            if (k == 0) {
                if (T.augment(y) != S.e[static_cast<std::size_t>(i)]) return "augmentation not preserved at " + S.name(k, i);
            } else if (T.boundary(k, y) != f.apply(k - 1, S.diff(k, i))) {
                return "not a chain map at " + S.name(k, i);
            }
        }
    return {};
}

Morph wreath_map(const Wreath& A, const Wreath& B, const SimplicialMap& base,
                 const std::vector<std::vector<Morph>>& comps) {
    Morph f = zero_morph(A.cx, B.cx);
    for (int p = 0; p <= A.n(); ++p) f.img[0][static_cast<std::size_t>(p)] = Chain::gen(base(p));
    for (int k1 = 1; k1 <= A.cx->top(); ++k1)
        for (int idx = 0; idx < A.cx->size(k1); ++idx) {
            auto [i, a] = A.unsuspend(k1, idx);
            Chain y;
            for (int j = base(i - 1) + 1; j <= base(i); ++j) {
                const Morph& c = comps[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - base(i - 1) - 1)];
                if (k1 - 1 <= B.labels[static_cast<std::size_t>(j - 1)]->top()) y += B.suspend(j, k1 - 1, c.of(k1 - 1, a));
            }
            f.img[static_cast<std::size_t>(k1)][static_cast<std::size_t>(idx)] = std::move(y);
        }
    return f;
}

Morph lambda_map(const Morphism& f) {
    Wreath A = lambda_wreath(f.src);
    Wreath B = lambda_wreath(f.tgt);
    std::vector<std::vector<Morph>> comps;
    for (int i = 1; i <= f.src.width(); ++i) {
        std::vector<Morph> row;
        for (int j = f.base(i - 1) + 1; j <= f.base(i); ++j) row.push_back(lambda_map(f.at(i, j)));
        comps.push_back(std::move(row));
    }
    return wreath_map(A, B, f.base, comps);
}

Morph tensor_map(const Tensor& A, const Tensor& B, const Morph& f, const Morph& g) {
    Morph h = zero_morph(A.cx, B.cx);
    for (int n = 0; n <= A.cx->top(); ++n)
        for (int idx = 0; idx < A.cx->size(n); ++idx) {
            auto s = A.split(n, idx);
            h.img[static_cast<std::size_t>(n)][static_cast<std::size_t>(idx)] = B.pair(s.p, f.of(s.p, s.a), s.q, g.of(s.q, s.b));
        }
    return h;
}

Morph to_point(CPtr src) {
    Morph f = zero_morph(src, point());
    for (int i = 0; i < src->size(0); ++i) f.img[0][static_cast<std::size_t>(i)] = Chain::gen(0, src->e[static_cast<std::size_t>(i)]);
    return f;
}

SignSplit sign_split(const Chain& x) {
    SignSplit s;
    for (const auto& p : x.t) s.supp.push_back(p.first);
    s.plus = x.plus();
    s.minus = x.minus();
    return s;
}

Atom atom(const Complex& k, int deg, int idx) {
    Atom a;
    a.rows.assign(static_cast<std::size_t>(deg) + 1, {});
    a.rows[static_cast<std::size_t>(deg)] = {Chain::gen(idx), Chain::gen(idx)};
    for (int r = deg; r >= 1; --r) {
        const auto& row = a.rows[static_cast<std::size_t>(r)];
        a.rows[static_cast<std::size_t>(r - 1)] = {k.boundary(r, row.first).minus(), k.boundary(r, row.second).plus()};
    }
    a.valid = k.augment(a.rows[0].first) == 1 && k.augment(a.rows[0].second) == 1;
    return a;
}

Atom atom(const Complex& k, const std::string& gen) {
    auto g = k.find(gen);
    if (!g) throw std::invalid_argument("unknown generator " + gen);
    return atom(k, g->first, g->second);
}

namespace {

bool acyclic(int n, const std::vector<std::vector<int>>& adj) {
    std::vector<int> color(static_cast<std::size_t>(n), 0);
    for (int s = 0; s < n; ++s) {
        if (color[static_cast<std::size_t>(s)]) continue;
        std::vector<std::pair<int, std::size_t>> stack{{s, 0}};
        color[static_cast<std::size_t>(s)] = 1;
        while (!stack.empty()) {
            auto& [v, pos] = stack.back();
            if (pos < adj[static_cast<std::size_t>(v)].size()) {
                int w = adj[static_cast<std::size_t>(v)][pos++];
                if (w == v) continue;
                if (color[static_cast<std::size_t>(w)] == 1) return false;
                if (!color[static_cast<std::size_t>(w)]) {
                    color[static_cast<std::size_t>(w)] = 1;
                    stack.emplace_back(w, 0);
                }
            } else {
                color[static_cast<std::size_t>(v)] = 2;
                stack.pop_back();
            }
        }
    }
    return true;
}

bool meets(const Chain& a, const Chain& b) {
    std::size_t i = 0, j = 0;
    while (i < a.t.size() && j < b.t.size()) {
        if (a.t[i].first == b.t[j].first) return true;
        if (a.t[i].first < b.t[j].first) ++i;
        else ++j;
    }
    return false;
}

}  // namespace

BasisReport check_basis(const Complex& k) {
    BasisReport rep;
    std::vector<int> off{0};
    for (int d = 0; d <= k.top(); ++d) off.push_back(off.back() + k.size(d));
    int total = off.back();
    std::vector<Atom> atoms;
    atoms.reserve(static_cast<std::size_t>(total));
    for (int d = 0; d <= k.top(); ++d)
        for (int i = 0; i < k.size(d); ++i) atoms.push_back(atom(k, d, i));
    rep.unital = std::all_of(atoms.begin(), atoms.end(), [](const Atom& a) { return a.valid; });

    rep.loop_free = true;
    for (int lvl = 0; lvl < k.top() && rep.loop_free; ++lvl) {
        std::vector<int> nodes;
        for (int g = off[static_cast<std::size_t>(lvl) + 1]; g < total; ++g) nodes.push_back(g);
        std::vector<std::vector<int>> adj(nodes.size());
        for (std::size_t x = 0; x < nodes.size(); ++x)
            for (std::size_t y = 0; y < nodes.size(); ++y) {
                if (x == y) continue;
                const auto& ax = atoms[static_cast<std::size_t>(nodes[x])].rows[static_cast<std::size_t>(lvl)];
                const auto& ay = atoms[static_cast<std::size_t>(nodes[y])].rows[static_cast<std::size_t>(lvl)];
                if (meets(ax.second, ay.first)) adj[x].push_back(static_cast<int>(y));
            }
        rep.loop_free = acyclic(static_cast<int>(nodes.size()), adj);
    }

    std::vector<std::vector<int>> adj(static_cast<std::size_t>(total));
    for (int d = 1; d <= k.top(); ++d)
        for (int i = 0; i < k.size(d); ++i) {
            int y = off[static_cast<std::size_t>(d)] + i;
            const Chain& bd = k.diff(d, i);
            // x in supp(d(y)-) gives x <= y; z in supp(d(y)+) gives y <= z
            for (const auto& [j, c] : bd.t) {
                int x = off[static_cast<std::size_t>(d) - 1] + j;
                if (c < 0) adj[static_cast<std::size_t>(x)].push_back(y);
                else adj[static_cast<std::size_t>(y)].push_back(x);
            }
        }
    rep.strongly_loop_free = acyclic(total, adj);
    return rep;
}

namespace {

// generator -> generator map of a prerigid leg
std::vector<std::vector<int>> generator_map(const Morph& f) {
    std::vector<std::vector<int>> m;
    for (int k = 0; k <= f.src->top(); ++k) {
        m.emplace_back();
        std::vector<bool> seen(static_cast<std::size_t>(f.tgt->size(k)), false);
        for (int i = 0; i < f.src->size(k); ++i) {
            const Chain& y = f.of(k, i);
            if (y.t.size() != 1 || y.t[0].second != 1) throw std::invalid_argument("leg is not prerigid");
            int g = y.t[0].first;
            if (seen[static_cast<std::size_t>(g)]) throw std::invalid_argument("leg is not injective");
            seen[static_cast<std::size_t>(g)] = true;
            m.back().push_back(g);
        }
    }
    return m;
}

}  // namespace

CPtr amalgamate(const Complex& K, const Complex& L, const Complex& M, const Morph& i, const Morph& j) {
    if (i.src->top() != M.top() || j.src->top() != M.top()) throw std::invalid_argument("legs do not start at M");
    auto mi = generator_map(i);
    auto mj = generator_map(j);
    Complex c = K;
    int top = std::max(K.top(), L.top());
    std::vector<std::vector<int>> lmap;
    for (int k = 0; k <= L.top(); ++k) lmap.emplace_back(static_cast<std::size_t>(L.size(k)), -1);
    for (int k = 0; k <= M.top(); ++k)
        for (int m = 0; m < M.size(k); ++m) lmap[static_cast<std::size_t>(k)][static_cast<std::size_t>(mj[static_cast<std::size_t>(k)][static_cast<std::size_t>(m)])] = mi[static_cast<std::size_t>(k)][static_cast<std::size_t>(m)];
    for (int k = 0; k <= top; ++k)
        for (int g = 0; g < L.size(k); ++g) {
            if (lmap[static_cast<std::size_t>(k)][static_cast<std::size_t>(g)] >= 0) continue;
            Chain bd;
            if (k > 0)
                for (const auto& [x, co] : L.diff(k, g).t) bd.add_term(lmap[static_cast<std::size_t>(k) - 1][static_cast<std::size_t>(x)], co);
            std::string nm = L.name(k, g);
            if (K.find(nm)) nm = "L:" + nm;
            lmap[static_cast<std::size_t>(k)][static_cast<std::size_t>(g)] =
                add_generator(c, k, nm, bd, k == 0 ? L.e[static_cast<std::size_t>(g)] : 0);
        }
    return finish(std::move(c));
}

CPtr amalgamate_globular(const Cell& t) {
    GlobularSum g = globular_sum(t);
    CPtr acc = lambda_globe(g.leaf_dims[0]);
    // positions in acc of the generators of the most recently glued globe
    std::vector<std::vector<int>> last;
    for (int k = 0; k <= acc->top(); ++k) {
        last.emplace_back();
        for (int i = 0; i < acc->size(k); ++i) last.back().push_back(i);
    }
    for (std::size_t s = 0; s < g.meet_dims.size(); ++s) {
        int m = g.meet_dims[s];
        int n = g.leaf_dims[s + 1];
        CPtr M = lambda_globe(m);
        CPtr L = lambda_globe(n);
        int prev_n = g.leaf_dims[s];
        Morph into_acc = zero_morph(M, acc);
        Morph into_new = zero_morph(M, L);
        for (int k = 0; k <= m; ++k)
            for (int i = 0; i < M->size(k); ++i) {
                // globe generators: index 0 = b, 1 = t (v at the top)
                int tgt_i = (k == m) ? 1 : i;
                int src_i = (k == m) ? 0 : i;
                if (prev_n == 0) tgt_i = 0;
                if (n == 0) src_i = 0;
                into_acc.img[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)] = Chain::gen(last[static_cast<std::size_t>(k)][static_cast<std::size_t>(tgt_i)]);
                into_new.img[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)] = Chain::gen(src_i);
            }
        int before_top = acc->top();
        std::vector<int> before;
        for (int k = 0; k <= before_top; ++k) before.push_back(acc->size(k));
        CPtr next = amalgamate(*acc, *L, *M, into_acc, into_new);
        // recover where L's generators went: identified ones from the leg, the rest appended in order
        std::vector<std::vector<int>> pos;
        for (int k = 0; k <= L->top(); ++k) {
            pos.emplace_back();
            int fresh = k <= before_top ? before[static_cast<std::size_t>(k)] : 0;
            for (int i = 0; i < L->size(k); ++i) {
                int found = -1;
                for (int x = 0; x <= m && found < 0; ++x)
                    if (x == k)
                        for (int q = 0; q < M->size(k); ++q)
                            if (into_new.of(k, q).t[0].first == i) found = into_acc.of(k, q).t[0].first;
                pos.back().push_back(found >= 0 ? found : fresh++);
            }
        }
        last = std::move(pos);
        acc = next;
    }
    return acc;
}

std::optional<std::vector<std::vector<int>>> find_isomorphism(const Complex& a, const Complex& b) {
    if (a.top() != b.top()) return std::nullopt;
    for (int k = 0; k <= a.top(); ++k)
        if (a.size(k) != b.size(k)) return std::nullopt;
    std::vector<std::vector<int>> phi, used;
    for (int k = 0; k <= a.top(); ++k) {
        phi.emplace_back(static_cast<std::size_t>(a.size(k)), -1);
        used.emplace_back(static_cast<std::size_t>(a.size(k)), 0);
    }
    std::vector<std::pair<int, int>> order;
    for (int k = 0; k <= a.top(); ++k)
        for (int i = 0; i < a.size(k); ++i) order.emplace_back(k, i);
    auto image = [&](int k, const Chain& x) {
        Chain r;
        for (const auto& [i, c] : x.t) r.add_term(phi[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)], c);
        return r;
    };
    std::function<bool(std::size_t)> go = [&](std::size_t pos) -> bool {
        if (pos == order.size()) return true;
        auto [k, i] = order[pos];
        Chain want = k ? image(k - 1, a.diff(k, i)) : Chain{};
        for (int y = 0; y < b.size(k); ++y) {
            if (used[static_cast<std::size_t>(k)][static_cast<std::size_t>(y)]) continue;
            if (k == 0 ? b.e[static_cast<std::size_t>(y)] != a.e[static_cast<std::size_t>(i)] : b.diff(k, y) != want) continue;
            used[static_cast<std::size_t>(k)][static_cast<std::size_t>(y)] = 1;
            phi[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)] = y;
            if (go(pos + 1)) return true;
            used[static_cast<std::size_t>(k)][static_cast<std::size_t>(y)] = 0;
        }
        return false;
    };
    if (!go(0)) return std::nullopt;
    return phi;
}

std::string to_json(const Complex& k) {
    nlohmann::json j;
    j["degrees"] = nlohmann::json::array();
    j["d"] = nlohmann::json::object();
    j["e"] = nlohmann::json::object();
    for (int d = 0; d <= k.top(); ++d) {
        j["degrees"].push_back(k.names[static_cast<std::size_t>(d)]);
        for (int i = 0; i < k.size(d); ++i) {
            if (d == 0) {
                j["e"][k.name(d, i)] = k.e[static_cast<std::size_t>(i)];
                continue;
            }
            nlohmann::json row = nlohmann::json::object();
            for (const auto& [x, c] : k.diff(d, i).t) row[k.name(d - 1, x)] = c;
            j["d"][k.name(d, i)] = row;
        }
    }
    return j.dump(2);
}

}  // namespace gcyl
