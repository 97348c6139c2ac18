#include "gcyl/gray.hpp"

#include <sstream>
#include <stdexcept>

#include "gcyl/pr.hpp"
#include "json.hpp"

namespace gcyl {

namespace {

using std::size_t;

Chain at_gen(int i) { return Chain::gen(i); }

// image under the piece embedding of S_i(x) with x a generator of degree deg of label i
Chain emb(const Piece& P, int i, int deg, int idx) {
    return P.embed.of(deg + 1, P.w.sigma(i, deg, idx));
}

Chain emb_vertex(const Piece& P, int q) { return P.embed.of(0, q); }

Cell shuffle_cell(const Cell& t, int k) {
    Cell o;
    for (int i = 0; i < t.width(); ++i) {
        if (i == k) o.ch.push_back(leaf());
        o.ch.push_back(t.ch[static_cast<size_t>(i)]);
    }
    if (k == t.width()) o.ch.push_back(leaf());
    return o;
}

std::string mixed_label(const Cell& t, int k) {
    std::string s = "[" + std::to_string(t.width()) + "](";
    for (int i = 1; i <= t.width(); ++i) {
        if (i > 1) s += ",";
        const Cell& a = t.ch[static_cast<size_t>(i - 1)];
        if (i == k)
            s += a.width() == 0 ? "[1]" : "[1]⊗" + to_string(a);
        else
            s += to_string(a);
    }
    return s + ")";
}

Piece make_shuffle(const ShuffleDiagram& D, int k) {
    Piece P;
    P.kind = Piece::Kind::shuffle;
    P.k = k;
    P.base = shuffle_cell(D.t, k);
    P.label = to_string(P.base);
    P.w = lambda_wreath(P.base);
    Morph f = zero_morph(P.w.cx, D.C.cx);
    for (int q = 0; q <= D.n() + 1; ++q) f.img[0][static_cast<size_t>(q)] = at_gen(q <= k ? D.l(0, q) : D.r(0, q - 1));
    for (int k1 = 1; k1 <= P.w.cx->top(); ++k1)
        for (int idx = 0; idx < P.w.cx->size(k1); ++idx) {
            auto [i, a] = P.w.unsuspend(k1, idx);
            int e = k1 - 1;
            Chain y;
            if (i <= k)
                y = at_gen(D.l(e + 1, D.W.sigma(i, e, a)));
            else if (i == k + 1)
                y = at_gen(D.h(0, k));
            else
                y = at_gen(D.r(e + 1, D.W.sigma(i - 1, e, a)));
            f.img[static_cast<size_t>(k1)][static_cast<size_t>(idx)] = std::move(y);
        }
    P.embed = std::move(f);
    return P;
}

Piece make_mixed(const ShuffleDiagram& D, int k) {
    Piece P;
    P.kind = Piece::Kind::mixed;
    P.k = k;
    P.base = D.t;
    P.label = mixed_label(D.t, k);
    P.tm = tensor(interval(), D.W.labels[static_cast<size_t>(k - 1)]);
    std::vector<CPtr> labels = D.W.labels;
    labels[static_cast<size_t>(k - 1)] = P.tm.cx;
    P.w = wreath(std::move(labels));
    Morph f = zero_morph(P.w.cx, D.C.cx);
    for (int q = 0; q <= D.n(); ++q) f.img[0][static_cast<size_t>(q)] = at_gen(q <= k - 1 ? D.l(0, q) : D.r(0, q));
    for (int k1 = 1; k1 <= P.w.cx->top(); ++k1)
        for (int idx = 0; idx < P.w.cx->size(k1); ++idx) {
            auto [i, u] = P.w.unsuspend(k1, idx);
            int e = k1 - 1;
            Chain y;
            if (i < k) {
                y = at_gen(D.l(e + 1, D.W.sigma(i, e, u)));
            } else if (i > k) {
                y = at_gen(D.r(e + 1, D.W.sigma(i, e, u)));
            } else {
                auto s = P.tm.split(e, u);
                int sig = D.W.sigma(k, s.q, s.b);
                if (s.p == 1) {
                    y = at_gen(D.h(s.q + 1, sig));
                } else if (s.a == 0) {
                    y = at_gen(D.l(s.q + 1, sig));
                    if (s.q == 0) y += at_gen(D.h(0, k));
                } else {
                    y = at_gen(D.r(s.q + 1, sig));
                    if (s.q == 0) y += at_gen(D.h(0, k - 1));
                }
            }
            f.img[static_cast<size_t>(k1)][static_cast<size_t>(idx)] = std::move(y);
        }
    P.embed = std::move(f);
    return P;
}

// lambda(T) -> lambda(M_k) as the l- or r-copy of segment k
Morph copy_leg(const ShuffleDiagram& D, const Piece& M, int end) {
    std::vector<std::vector<Morph>> comps;
    for (int i = 1; i <= D.n(); ++i) {
        CPtr a = D.W.labels[static_cast<size_t>(i - 1)];
        if (i != M.k) {
            comps.push_back({identity_morph(a)});
            continue;
        }
        Morph g = zero_morph(a, M.tm.cx);
        for (int q = 0; q <= a->top(); ++q)
            for (int b = 0; b < a->size(q); ++b) g.img[static_cast<size_t>(q)][static_cast<size_t>(b)] = at_gen(M.tm.index(0, end, q, b));
        comps.push_back({std::move(g)});
    }
    return wreath_map(D.W, M.w, identity_map(D.n()), comps);
}

bool contained(const Mat& a, const Mat& b) {
    Mat eb = echelon(b);
    for (const auto& v : a)
        if (!in_span(eb, v)) return false;
    return true;
}

std::string where(const std::string& what, int deg) { return what + " in degree " + std::to_string(deg); }

}  // namespace

Vec dense(const Chain& x, int size) {
    Vec v(static_cast<size_t>(size), 0);
    for (const auto& [i, c] : x.t) v[static_cast<size_t>(i)] = c;
    return v;
}

Mat image(const Morph& f, int k) {
    Mat m;
    for (int i = 0; i < f.src->size(k); ++i) m.push_back(dense(f.of(k, i), f.tgt->size(k)));
    return m;
}

ShuffleDiagram lax_shuffle_diagram(const Cell& t) {
    ShuffleDiagram D;
    D.t = t;
    D.W = lambda_wreath(t);
    D.C = tensor(interval(), D.W.cx);
    int n = t.width();
    D.pieces.push_back(make_shuffle(D, 0));
    for (int k = 1; k <= n; ++k) {
        D.pieces.push_back(make_mixed(D, k));
        D.pieces.push_back(make_shuffle(D, k));
    }
    for (int k = 1; k <= n; ++k) {
        const Piece& Ob = D.O(k - 1);
        const Piece& M = D.M(k);
        const Piece& Oa = D.O(k);
        D.legs.push_back({2 * k - 2, 2 * k - 1, lambda_map(coface_morphism(t, Ob.base, k, 1)), copy_leg(D, M, 1)});
        D.legs.push_back({2 * k - 1, 2 * k, copy_leg(D, M, 0), lambda_map(coface_morphism(t, Oa.base, k, 0))});
    }
    return D;
}

GluingReport verify_gluing(const Cell& t) {
    ShuffleDiagram D = lax_shuffle_diagram(t);
    GluingReport rep;
    const Complex& C = *D.C.cx;
    size_t np = D.pieces.size();
    for (const auto& P : D.pieces) rep.pieces.push_back(P.label);
    std::vector<std::vector<Mat>> im(np);
    for (size_t p = 0; p < np; ++p) {
        const Piece& P = D.pieces[p];
        bool ok = check_morph(P.embed).empty();
        for (int k = 0; k <= C.top(); ++k) {
            im[p].push_back(image(P.embed, k));
            if (rank(im[p].back()) != P.w.cx->size(k)) ok = false;
        }
        rep.mono.push_back(ok);
        if (!ok) rep.failures.push_back("piece " + P.label + " is not a mono");
    }
    for (int k = 0; k <= C.top(); ++k) {
        Mat all;
        for (size_t p = 0; p < np; ++p) all.insert(all.end(), im[p][static_cast<size_t>(k)].begin(), im[p][static_cast<size_t>(k)].end());
        bool ok = rank(all) == C.size(k);
        rep.coverage.push_back(ok);
        if (!ok) rep.failures.push_back(where("pieces do not cover", k));
    }
    for (const auto& L : D.legs) {
        const Piece& A = D.pieces[static_cast<size_t>(L.from)];
        const Piece& B = D.pieces[static_cast<size_t>(L.to)];
        Morph via_a = compose(L.into_from, A.embed);
        Morph via_b = compose(L.into_to, B.embed);
        bool comm = via_a == via_b && check_morph(L.into_from).empty() && check_morph(L.into_to).empty();
        rep.commute.push_back(comm);
        if (!comm) rep.failures.push_back("span " + A.label + " | " + B.label + " does not commute");
        bool pb = true;
        for (int k = 0; k <= C.top(); ++k) {
            Mat meet = intersect(im[static_cast<size_t>(L.from)][static_cast<size_t>(k)], im[static_cast<size_t>(L.to)][static_cast<size_t>(k)]);
            if (!same_span(meet, image(via_a, k))) {
                pb = false;
                rep.failures.push_back(where("span " + A.label + " | " + B.label + " is not a pullback", k));
            }
        }
        rep.pullback.push_back(pb);
    }
    for (size_t a = 0; a < np; ++a)
        for (size_t b = a + 2; b < np; ++b)
            for (int k = 0; k <= C.top(); ++k) {
                Mat meet = intersect(im[a][static_cast<size_t>(k)], im[b][static_cast<size_t>(k)]);
                for (size_t c = a + 1; c < b; ++c)
                    if (!contained(meet, im[c][static_cast<size_t>(k)])) {
                        rep.transit = false;
                        rep.failures.push_back(where("overlap of pieces " + std::to_string(a) + " and " + std::to_string(b) +
                                                         " misses piece " + std::to_string(c), k));
                    }
            }
    rep.pass = rep.failures.empty();
    return rep;
}

std::string to_json(const GluingReport& r) {
    nlohmann::ordered_json j;
    j["pieces"] = r.pieces;
    j["mono"] = r.mono;
    j["coverage"] = r.coverage;
    j["commute"] = r.commute;
    j["pullback"] = r.pullback;
    j["transit"] = r.transit;
    j["pass"] = r.pass;
    j["failures"] = r.failures;
    return j.dump(2);
}

CellSet gray_cylinder(const Cell& t, int max_dim, std::size_t ceiling) {
    Tensor C = tensor(interval(), lambda(t));
    return enumerate_cells(*C.cx, max_dim, ceiling);
}

Endpoints endpoints(const Cell& t) {
    Tensor C = tensor(interval(), lambda(t));
    Endpoints e{zero_morph(C.L, C.cx), zero_morph(C.L, C.cx)};
    for (int k = 0; k <= C.L->top(); ++k)
        for (int i = 0; i < C.L->size(k); ++i) {
            e.e0.img[static_cast<size_t>(k)][static_cast<size_t>(i)] = at_gen(C.index(0, 0, k, i));
            e.e1.img[static_cast<size_t>(k)][static_cast<size_t>(i)] = at_gen(C.index(0, 1, k, i));
        }
    return e;
}

EndpointReport verify_endpoints(const Cell& t) {
    EndpointReport rep;
    Endpoints e = endpoints(t);
    ShuffleDiagram D = lax_shuffle_diagram(t);
    int n = t.width();
    rep.disjoint = true;
    rep.injective = check_morph(e.e0).empty() && check_morph(e.e1).empty();
    for (int k = 0; k <= e.e0.src->top(); ++k) {
        Mat a = image(e.e0, k), b = image(e.e1, k);
        rep.disjoint = rep.disjoint && intersect(a, b).empty();
        rep.injective = rep.injective && rank(a) == e.e0.src->size(k) && rank(b) == e.e1.src->size(k);
    }
    Morph f1 = compose(lambda_map(coface_morphism(t, D.O(0).base, 0, 0)), D.O(0).embed);
    Morph f0 = compose(lambda_map(coface_morphism(t, D.O(n).base, n + 1, 0)), D.O(n).embed);
    rep.factor = f1 == e.e1 && f0 == e.e0;
    rep.pass = rep.disjoint && rep.injective && rep.factor;
    return rep;
}

bool verify_globular_preservation(const Cell& t, std::vector<std::string>* failures) {
    std::vector<std::string> fails;
    Wreath W = lambda_wreath(t);
    Tensor C = tensor(interval(), W.cx);
    Morph idI = identity_morph(interval());
    int nl = static_cast<int>(globular_sum(t).leaf_dims.size());
    auto cyl_image = [&](const Morphism& g) {
        Tensor G = tensor(interval(), lambda(g.src));
        Morph m = tensor_map(G, C, idI, lambda_map(g));
        if (!check_morph(m).empty()) fails.push_back("inclusion of " + to_string(g.src) + " is not a map");
        return m;
    };
    std::vector<Morph> inc, gin;
    for (int i = 0; i < nl; ++i) {
        Morphism g = globe_inclusion(t, i);
        gin.push_back(lambda_map(g));
        inc.push_back(cyl_image(g));
    }
    std::vector<Morph> meets;
    for (int i = 1; i < nl; ++i) meets.push_back(cyl_image(meet_inclusion(t, i)));
    const Complex& K = *C.cx;
    for (int k = 0; k <= K.top(); ++k) {
        Mat all;
        std::vector<Mat> im;
        for (int i = 0; i < nl; ++i) {
            im.push_back(image(inc[static_cast<size_t>(i)], k));
            if (rank(im.back()) != inc[static_cast<size_t>(i)].src->size(k)) fails.push_back(where("globe " + std::to_string(i) + " not injective", k));
            all.insert(all.end(), im.back().begin(), im.back().end());
        }
        if (rank(all) != K.size(k)) fails.push_back(where("globes do not cover", k));
        for (int i = 1; i < nl; ++i) {
            Mat meet = intersect(im[static_cast<size_t>(i - 1)], im[static_cast<size_t>(i)]);
            if (!same_span(meet, image(meets[static_cast<size_t>(i - 1)], k)))
                fails.push_back(where("globes " + std::to_string(i - 1) + "," + std::to_string(i) + " meet wrongly", k));
        }
        for (int i = 0; i < nl; ++i)
            for (int j = i + 2; j < nl; ++j) {
                Mat meet = intersect(im[static_cast<size_t>(i)], im[static_cast<size_t>(j)]);
                // I (x) (common part inside lambda(T))
                Mat expect;
                auto add = [&](int p, int a, int q) {
                    if (q < 0 || q > W.cx->top()) return;
                    Mat common = intersect(image(gin[static_cast<size_t>(i)], q), image(gin[static_cast<size_t>(j)], q));
                    for (const auto& v : common) {
                        Chain x;
                        for (size_t b = 0; b < v.size(); ++b)
                            if (v[b]) x.add_term(C.index(p, a, q, static_cast<int>(b)), v[b]);
                        expect.push_back(dense(x, K.size(k)));
                    }
                };
                add(0, 0, k);
                add(0, 1, k);
                add(1, 0, k - 1);
                if (!same_span(meet, expect))
                    fails.push_back(where("globes " + std::to_string(i) + "," + std::to_string(j) + " overlap outside the base", k));
            }
    }
    bool ok = fails.empty();
    if (failures) *failures = std::move(fails);
    return ok;
}

Induced induce(const ShuffleDiagram& D, const std::vector<Morph>& phi, CPtr target) {
    Induced out;
    const Complex& K = *D.C.cx;
    int n = D.n();
    out.map = zero_morph(D.C.cx, target);
    const Piece& first = D.O(0);
    const Piece& last = D.O(n);
    auto of = [&](size_t p, int deg, int idx) { return phi[p].of(deg, idx); };
    for (int deg = 0; deg <= K.top(); ++deg)
        for (int idx = 0; idx < K.size(deg); ++idx) {
            auto s = D.C.split(deg, idx);
            Chain y;
            if (s.q == 0) {
                if (s.p == 1)
                    y = of(static_cast<size_t>(2 * s.b), 1, D.O(s.b).w.sigma(s.b + 1, 0, 0));
                else if (s.a == 0)
                    y = of(static_cast<size_t>(2 * n), 0, s.b);
                else
                    y = of(0, 0, s.b + 1);
            } else {
                auto [i, a] = D.W.unsuspend(s.q, s.b);
                int e = s.q - 1;
                if (s.p == 1) {
                    const Piece& M = D.M(i);
                    y = of(static_cast<size_t>(2 * i - 1), deg, M.w.sigma(i, deg - 1, M.tm.index(1, 0, e, a)));
                } else if (s.a == 0) {
                    y = of(static_cast<size_t>(2 * n), deg, last.w.sigma(i, e, a));
                } else {
                    y = of(0, deg, first.w.sigma(i + 1, e, a));
                }
            }
            out.map.img[static_cast<size_t>(deg)][static_cast<size_t>(idx)] = std::move(y);
        }
    std::string bad = check_morph(out.map);
    if (!bad.empty()) out.failures.push_back("induced assignment: " + bad);
    for (size_t p = 0; p < D.pieces.size(); ++p)
        if (!(compose(D.pieces[p].embed, out.map) == phi[p])) out.failures.push_back("does not restrict to column " + D.pieces[p].label);
    out.consistent = out.failures.empty();
    return out;
}

namespace {

Morph shuffle_column(const ShuffleDiagram& DU, const ShuffleDiagram& DS, const Morphism& f, int k) {
    const Piece& P = DU.O(k);
    int fk = f.base(k);
    const Piece& Q = DS.O(fk);
    int m = DU.n();
    Morphism g{P.base, Q.base, SimplicialMap{m + 1, DS.n() + 1, {}}, {}};
    for (int v = 0; v <= m + 1; ++v) g.base.img.push_back(v <= k ? f.base(v) : f.base(v - 1) + 1);
    for (int i = 1; i <= m + 1; ++i) {
        std::vector<Morphism> row;
        if (i <= k) {
            for (int j = f.base(i - 1) + 1; j <= f.base(i); ++j) row.push_back(f.at(i, j));
        } else if (i == k + 1) {
            row.push_back(identity(leaf()));
        } else {
            for (int j = f.base(i - 2) + 1; j <= f.base(i - 1); ++j) row.push_back(f.at(i - 1, j));
        }
        g.comp.push_back(std::move(row));
    }
    return compose(lambda_map(g), Q.embed);
}

Morph mixed_column(const ShuffleDiagram& DU, const ShuffleDiagram& DS, const Morphism& f, int k) {
    const Piece& P = DU.M(k);
    int j = f.base(k);
    const Piece& Q = DS.M(j);
    std::vector<std::vector<Morph>> comps;
    for (int i = 1; i <= DU.n(); ++i) {
        std::vector<Morph> row;
        for (int jj = f.base(i - 1) + 1; jj <= f.base(i); ++jj) {
            const Morphism& c = f.at(i, jj);
            if (i != k)
                row.push_back(lambda_map(c));
            else if (c == identity(c.src))
                row.push_back(identity_morph(P.tm.cx));
            else
                row.push_back(hyperface_cylinder(c).diagram_map);
        }
        comps.push_back(std::move(row));
    }
    return compose(wreath_map(P.w, Q.w, f.base, comps), Q.embed);
}

// the P.R.(A, [0]) or P.R.([0], A) column over the doubled segment p of an inner face
Morph inner_column(const ShuffleDiagram& DU, const ShuffleDiagram& DS, int p, int variant) {
    const Piece& P = DU.M(p);
    const Piece& Mp = DS.M(p);
    const Piece& Mq = DS.M(p + 1);
    Morph f = zero_morph(P.w.cx, DS.C.cx);
    for (int q = 0; q <= DU.n(); ++q) f.img[0][static_cast<size_t>(q)] = emb_vertex(Mp, q <= p - 1 ? q : q + 1);
    for (int k1 = 1; k1 <= P.w.cx->top(); ++k1)
        for (int idx = 0; idx < P.w.cx->size(k1); ++idx) {
            auto [i, u] = P.w.unsuspend(k1, idx);
            int e = k1 - 1;
            Chain y;
            if (i < p) {
                y = emb(Mp, i, e, u);
            } else if (i > p) {
                y = emb(Mp, i + 1, e, u);
            } else {
                auto s = P.tm.split(e, u);
                bool pt = s.q == 0;
                if (variant == 0) {
                    if (s.p == 1) {
                        y = emb(Mp, p, e, Mp.tm.index(1, 0, s.q, s.b));
                        if (pt) y += emb(Mq, p + 1, 1, Mq.tm.index(1, 0, 0, 0));
                    } else if (s.a == 0) {
                        y = emb(Mq, p, s.q, s.b);
                        if (pt) y += emb(Mq, p + 1, 0, Mq.tm.index(0, 0, 0, 0));
                    } else {
                        y = emb(Mp, p, s.q, Mp.tm.index(0, 1, s.q, s.b));
                        if (pt) y += emb(Mp, p + 1, 0, 0);
                    }
                } else {
                    if (s.p == 1) {
                        y = emb(Mq, p + 1, e, Mq.tm.index(1, 0, s.q, s.b));
                        if (pt) y += emb(Mp, p, 1, Mp.tm.index(1, 0, 0, 0));
                    } else if (s.a == 0) {
                        y = emb(Mq, p + 1, s.q, Mq.tm.index(0, 0, s.q, s.b));
                        if (pt) y += emb(Mq, p, 0, 0);
                    } else {
                        y = emb(Mp, p + 1, s.q, s.b);
                        if (pt) y += emb(Mp, p, 0, Mp.tm.index(0, 1, 0, 0));
                    }
                }
            }
            f.img[static_cast<size_t>(k1)][static_cast<size_t>(idx)] = std::move(y);
        }
    return f;
}

}  // namespace

HyperfaceCylinder hyperface_cylinder(const Morphism& face) {
    const Hyperface* hf = nullptr;
    auto all = hyperfaces(face.tgt);
    for (const auto& h : all)
        if (h.map == face) hf = &h;
    if (!hf) throw std::invalid_argument("not a hyperface: " + to_string(face));
    ShuffleDiagram DU = lax_shuffle_diagram(face.src);
    ShuffleDiagram DS = lax_shuffle_diagram(face.tgt);
    std::vector<Morph> phi;
    for (int k = 0; k <= DU.n(); ++k) {
        if (k >= 1) {
            if (hf->kind == FaceKind::inner && hf->position == k)
                phi.push_back(inner_column(DU, DS, k, hf->variant));
            else
                phi.push_back(mixed_column(DU, DS, face, k));
        }
        phi.push_back(shuffle_column(DU, DS, face, k));
    }
    HyperfaceCylinder out;
    Induced ind = induce(DU, phi, DS.C.cx);
    out.diagram_map = ind.map;
    out.failures = ind.failures;
    out.steiner_map = tensor_map(DU.C, DS.C, identity_morph(interval()), lambda_map(face));
    if (!(out.diagram_map == out.steiner_map)) out.failures.push_back("diagram map differs from the Steiner map");
    out.agree = out.failures.empty();
    return out;
}

bool check_pr_morphism(const Morphism& f, int x, int z, std::string* why) {
    PRMorphism m = pr_morphism(f, x, z);
    Wreath WS = lambda_wreath(f.src), WT = lambda_wreath(f.tgt);
    Tensor CS = tensor(interval(), WS.cx), CT = tensor(interval(), WT.cx);
    Morph g = tensor_map(CS, CT, identity_morph(interval()), lambda_map(f));
    auto one_cell = [](const Tensor& C, const Wreath& W, int lo, const PRObject& o) {
        Chain c;
        for (size_t s = 0; s < o.coords.size(); ++s) {
            int i = lo + 1 + static_cast<int>(s);
            c.add_term(C.index(0, i <= o.level ? 0 : 1, 1, W.sigma(i, 0, o.coords[s])), 1);
        }
        c.add_term(C.index(1, 0, 0, o.level), 1);
        return c;
    };
    for (const auto& [o, parts] : m.objects) {
        PRObject img = concatenate(parts, m.tgt_families, f.base(x));
        Chain got = g.apply(1, one_cell(CS, WS, x, o));
        Chain want = one_cell(CT, WT, f.base(x), img);
        if (got != want) {
            if (why) *why = "object " + to_string(o) + " goes to " + CT.cx->format(1, got) + ", expected " + CT.cx->format(1, want);
            return false;
        }
    }
    return true;
}

std::string shuffle_dot(const ShuffleDiagram& D) {
    std::ostringstream os;
    os << "digraph shuffle {\n  rankdir=LR;\n";
    for (size_t p = 0; p < D.pieces.size(); ++p)
        os << "  p" << p << " [label=\"" << D.pieces[p].label << "\", shape=box];\n";
    for (size_t s = 0; s < D.legs.size(); ++s) {
        os << "  a" << s << " [label=\"" << to_string(D.t) << "\", shape=plaintext];\n";
        os << "  a" << s << " -> p" << D.legs[s].from << ";\n";
        os << "  a" << s << " -> p" << D.legs[s].to << ";\n";
    }
    os << "}\n";
    return os.str();
}

std::string shuffle_json(const ShuffleDiagram& D) {
    nlohmann::ordered_json j;
    j["cell"] = to_string(D.t);
    j["pieces"] = nlohmann::ordered_json::array();
    for (const auto& P : D.pieces)
        j["pieces"].push_back({{"label", P.label}, {"kind", P.kind == Piece::Kind::shuffle ? "shuffle" : "mixed"}, {"k", P.k}});
    j["legs"] = nlohmann::ordered_json::array();
    for (const auto& L : D.legs) j["legs"].push_back({{"from", L.from}, {"to", L.to}});
    return j.dump(2);
}

}  // namespace gcyl
