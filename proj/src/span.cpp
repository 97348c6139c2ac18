#include "gcyl/span.hpp"

#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace gcyl {

namespace {

using std::size_t;

Morphism with_base(const Cell& src, const Cell& tgt, SimplicialMap base) {
    Morphism f{src, tgt, std::move(base), {}};
    f.comp.resize(static_cast<size_t>(src.width()));
    return f;
}

// the end of I (x) lambda(T) -> I, constant at eps
Morph constant_at(CPtr src, CPtr tgt, int eps) {
    Morph f = zero_morph(src, tgt);
    for (int i = 0; i < src->size(0); ++i) f.img[0][static_cast<size_t>(i)] = Chain::gen(eps);
    return f;
}

}  // namespace

SimplicialMap split_map(int n, int j) {
    if (j < 0 || j > n) throw std::out_of_range("split index out of range");
    SimplicialMap f{n, 1, {}};
    for (int i = 0; i <= n; ++i) f.img.push_back(i < j ? 0 : 1);
    return f;
}

SpanBundle build_span(const Cell& t, bool mutate) {
    SpanBundle B;
    B.t = t;
    Cell R = reversed(t);
    B.shift = Cell(std::vector<Cell>{R});
    int n = t.width();
    ShuffleDiagram D = lax_shuffle_diagram(t);
    Cell one = simplex(1);
    Wreath WI = lambda_wreath(one), WS = lambda_wreath(B.shift);
    for (int k = 0; k <= n; ++k) {
        if (k >= 1) {
            const Piece& M = D.M(k);
            const Cell& a = t.ch[static_cast<size_t>(k - 1)];
            SpanBundle child = build_span(a, mutate);
            for (const auto& f : child.failures) B.failures.push_back("in " + to_string(a) + ": " + f);
            SimplicialMap split = split_map(n, k);
            std::vector<std::vector<Morph>> c1(static_cast<size_t>(n)), c2, cs(static_cast<size_t>(n));
            for (int i = 1; i <= n; ++i) c2.push_back({i == k ? child.kappa2 : identity_morph(D.W.labels[static_cast<size_t>(i - 1)])});
            c1[static_cast<size_t>(k - 1)].push_back(to_point(M.tm.cx));
            Morphism inc{child.shift, R, SimplicialMap{1, n, {n - k, n + 1 - k}}, {{identity(child.shift.ch[0])}}};
            cs[static_cast<size_t>(k - 1)].push_back(compose(child.sigma, lambda_map(inc)));
            B.kappa1_cols.push_back(wreath_map(M.w, WI, split, c1));
            B.kappa2_cols.push_back(wreath_map(M.w, D.W, identity_map(n), c2));
            B.sigma_cols.push_back(wreath_map(M.w, WS, split, cs));
        }
        const Piece& O = D.O(k);
        Morphism k1 = with_base(O.base, one, split_map(n + 1, k + 1));
        k1.comp[static_cast<size_t>(k)].push_back(identity(leaf()));
        Morphism k2 = with_base(O.base, t, codegeneracy(n, k));
        for (int i = 1; i <= n + 1; ++i)
            if (i != k + 1) k2.comp[static_cast<size_t>(i - 1)].push_back(identity(O.base.ch[static_cast<size_t>(i - 1)]));
        Morphism s = with_base(O.base, B.shift, split_map(n + 1, k + 1));
        s.comp[static_cast<size_t>(k)].push_back(vertex(R, mutate ? k : n - k));
        B.kappa1_cols.push_back(lambda_map(k1));
        B.kappa2_cols.push_back(lambda_map(k2));
        B.sigma_cols.push_back(lambda_map(s));
    }
    auto glue = [&](const std::vector<Morph>& cols, CPtr tgt, const char* what) {
        Induced ind = induce(D, cols, tgt);
        for (const auto& f : ind.failures) B.failures.push_back(std::string(what) + ": " + f);
        return ind.map;
    };
    B.kappa1 = glue(B.kappa1_cols, WI.cx, "kappa1");
    B.kappa2 = glue(B.kappa2_cols, D.W.cx, "kappa2");
    B.sigma = glue(B.sigma_cols, WS.cx, "sigma");
    return B;
}

SpanReport verify_span(const Cell& t, int max_dim, bool mutate) {
    SpanReport rep;
    SpanBundle B = build_span(t, mutate);
    ShuffleDiagram D = lax_shuffle_diagram(t);
    int n = t.width();
    rep.induced = B.failures.empty();
    for (const auto& f : B.failures) rep.failures.push_back(f);

    // each span of the shuffle diagram must be respected by the column maps
    auto square = [&](const std::string& name, const Morph& a, const Morph& b) {
        SquareCheck s{name, a == b};
        if (!s.ok) rep.failures.push_back("square " + name + " does not commute");
        rep.squares.push_back(s);
    };
    for (const auto& L : D.legs) {
        std::string tag = D.pieces[static_cast<size_t>(L.from)].label + " | " + D.pieces[static_cast<size_t>(L.to)].label;
        size_t a = static_cast<size_t>(L.from), b = static_cast<size_t>(L.to);
        square("kappa1 " + tag, compose(L.into_from, B.kappa1_cols[a]), compose(L.into_to, B.kappa1_cols[b]));
        square("kappa2 " + tag, compose(L.into_from, B.kappa2_cols[a]), compose(L.into_to, B.kappa2_cols[b]));
        square("sigma " + tag, compose(L.into_from, B.sigma_cols[a]), compose(L.into_to, B.sigma_cols[b]));
    }

    // kappa against the two projections of the cylinder
    Tensor C = D.C;
    Morph p1 = zero_morph(C.cx, B.kappa1.tgt), p2 = zero_morph(C.cx, B.kappa2.tgt);
    for (int deg = 0; deg <= C.cx->top(); ++deg)
        for (int idx = 0; idx < C.cx->size(deg); ++idx) {
            auto s = C.split(deg, idx);
            if (s.q == 0) p1.img[static_cast<size_t>(deg)][static_cast<size_t>(idx)] = s.p == 0 ? Chain::gen(s.a) : Chain::gen(0);
            if (s.p == 0) p2.img[static_cast<size_t>(deg)][static_cast<size_t>(idx)] = Chain::gen(s.b);
        }
    rep.canonical = B.kappa1 == p1 && B.kappa2 == p2;
    if (!rep.canonical) rep.failures.push_back("kappa differs from the product projections");

    Endpoints e = endpoints(t);
    rep.diamond = true;
    for (int eps = 0; eps <= 1; ++eps) {
        const Morph& ee = eps == 0 ? e.e0 : e.e1;
        bool ok = compose(ee, B.kappa1) == constant_at(ee.src, B.kappa1.tgt, eps) && compose(ee, B.kappa2) == identity_morph(ee.src) &&
                  compose(ee, B.sigma) == constant_at(ee.src, B.sigma.tgt, eps);
        if (!ok) {
            rep.diamond = false;
            rep.failures.push_back("folding diamond fails at end " + std::to_string(eps));
        }
    }

    rep.splits = true;
    for (int k = 0; k <= n; ++k) {
        SimplicialMap d = coface(n, k);
        if (!(compose(d, split_map(n + 1, k)) == split_map(n, k)) || !(compose(d, split_map(n + 1, k + 1)) == split_map(n, k))) {
            rep.splits = false;
            rep.failures.push_back("split identity fails at k = " + std::to_string(k));
        }
    }

    rep.functors = true;
    for (const Morph* f : {&B.kappa1, &B.kappa2, &B.sigma}) {
        if (!check_morph(*f).empty()) {
            rep.functors = false;
            rep.failures.push_back("span leg is not a map: " + check_morph(*f));
            continue;
        }
        FunctorReport fr = check_functor(*f, max_dim);
        if (!fr.ok) {
            rep.functors = false;
            for (const auto& v : fr.violations) rep.failures.push_back(v);
        }
    }
    rep.pass = rep.failures.empty();
    return rep;
}

std::string to_json(const SpanReport& r) {
    nlohmann::ordered_json j;
    j["squares"] = nlohmann::ordered_json::array();
    for (const auto& s : r.squares) j["squares"].push_back({{"name", s.name}, {"ok", s.ok}});
    j["induced"] = r.induced;
    j["canonical"] = r.canonical;
    j["diamond"] = r.diamond;
    j["splits"] = r.splits;
    j["functors"] = r.functors;
    j["pass"] = r.pass;
    j["failures"] = r.failures;
    return j.dump(2);
}

std::string span_dot(const Cell& t, const SpanReport& r) {
    std::ostringstream os;
    os << "digraph span {\n";
    os << "  cyl [label=\"[1]⊗" << to_string(t) << "\"];\n";
    os << "  prod [label=\"[1]×" << to_string(t) << "\"];\n";
    os << "  shift [label=\"[1];" << to_string(reversed(t)) << "\"];\n";
    os << "  cyl -> prod [label=\"kappa\", color=" << (r.canonical && r.functors ? "green" : "red") << "];\n";
    os << "  cyl -> shift [label=\"sigma\", color=" << (r.induced && r.functors ? "green" : "red") << "];\n";
    for (size_t i = 0; i < r.squares.size(); ++i)
        os << "  sq" << i << " [label=\"" << r.squares[i].name << "\", shape=box, color=" << (r.squares[i].ok ? "green" : "red") << "];\n";
    os << "}\n";
    return os.str();
}

}  // namespace gcyl
