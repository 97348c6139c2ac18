#include <random>

#include "doctest.h"
#include "gcyl/dac.hpp"

using namespace gcyl;

namespace {

bool iso(const Complex& a, const Complex& b) { return find_isomorphism(a, b).has_value(); }

}  // namespace

TEST_CASE("interval and point") {
    CPtr i = interval();
    CHECK(i->top() == 1);
    CHECK(i->format(0, i->boundary(1, Chain::gen(0))) == "-l + r");
    CHECK(i->augment(Chain::gen(0) + Chain::gen(1)) == 2);
    CHECK(point()->size(0) == 1);
}

TEST_CASE("lambda of globes") {
    for (int n = 0; n <= 5; ++n) {
        CPtr g = lambda_globe(n);
        CHECK(check_complex(*g).empty());
        CHECK(iso(*g, *lambda(globe(n))));
        for (int k = 0; k < n; ++k) CHECK(g->size(k) == 2);
        CHECK(g->size(n) == 1);
    }
}

TEST_CASE("every corpus complex is a based complex with a strong basis") {
    for (const auto& t : all_cells(7)) {
        CPtr k = lambda(t);
        CHECK(check_complex(*k).empty());
        BasisReport b = check_basis(*k);
        CHECK(b.unital);
        CHECK(b.strongly_loop_free);
        CHECK(b.loop_free);
    }
}

TEST_CASE("cylinders are based complexes") {
    for (const auto& t : all_cells(5)) {
        Tensor c = cylinder(t);
        CHECK(check_complex(*c.cx).empty());
        BasisReport b = check_basis(*c.cx);
        CHECK(b.unital);
        CHECK(b.loop_free);
    }
}

TEST_CASE("tensor sign convention") {
    Tensor c = cylinder(simplex(1));
    auto g = c.cx->find("h⊗S1(0)");
    REQUIRE(g);
    CHECK(c.cx->format(1, c.cx->diff(g->first, g->second)) == "-l⊗S1(0) + r⊗S1(0) + h⊗0 - h⊗1");
    CHECK(c.cx->size(0) == 4);
    CHECK(c.cx->size(1) == 4);
    CHECK(c.cx->size(2) == 1);
}

TEST_CASE("chain text round trip") {
    CPtr k = lambda(parse_cell("[2]([1],[0])"));
    for (int d = 0; d <= k->top(); ++d)
        for (int i = 0; i < k->size(d); ++i) {
            Chain x = Chain::gen(i, 2) - Chain::gen((i + 1) % k->size(d));
            CHECK(k->parse_chain(d, k->format(d, x)) == x);
        }
    CHECK(k->format(0, Chain{}) == "0");
}

TEST_CASE("d squared and augmentation vanish on constructed complexes") {
    std::vector<CPtr> ks;
    for (const auto& t : all_cells(6)) {
        ks.push_back(lambda(t));
        ks.push_back(cylinder(t).cx);
    }
    for (const auto& k : ks) {
        for (int d = 2; d <= k->top(); ++d)
            for (int i = 0; i < k->size(d); ++i) CHECK(k->boundary(d - 1, k->diff(d, i)).empty());
        for (int i = 0; i < k->size(1); ++i) CHECK(k->augment(k->diff(1, i)) == 0);
    }
}

TEST_CASE("tensor is associative up to basis bijection") {
    for (int a = 0; a <= 2; ++a)
        for (int b = 0; b <= 2; ++b)
            for (int c = 0; c <= 2; ++c) {
                CPtr A = lambda_globe(a), B = lambda_globe(b), C = lambda_globe(c);
                Tensor ab = tensor(A, B), bc = tensor(B, C);
                CHECK(iso(*tensor(ab.cx, C).cx, *tensor(A, bc.cx).cx));
            }
}

TEST_CASE("amalgamated globular sums rebuild lambda") {
    for (const auto& t : all_cells(6)) CHECK(iso(*amalgamate_globular(t), *lambda(t)));
}

TEST_CASE("lambda is functorial on face chains") {
    std::mt19937_64 rng(7);
    auto cells = all_cells(7);
    for (int trial = 0; trial < 200; ++trial) {
        Cell t = cells[rng() % cells.size()];
        auto hs = hyperfaces(t);
        if (hs.empty()) continue;
        Morphism g = hs[rng() % hs.size()].map;
        auto hs2 = hyperfaces(g.src);
        if (hs2.empty()) continue;
        Morphism f = hs2[rng() % hs2.size()].map;
        Morph lf = lambda_map(f), lg = lambda_map(g);
        CHECK(check_morph(lf).empty());
        CHECK(check_morph(lg).empty());
        CHECK(lambda_map(compose(f, g)) == compose(lf, lg));
        CHECK(lambda_map(identity(t)) == identity_morph(lambda(t)));
    }
}

TEST_CASE("tensor maps are functorial") {
    Cell t = parse_cell("[2]([1],[0])");
    for (const auto& h : hyperfaces(t)) {
        Tensor a = cylinder(h.map.src), b = cylinder(t);
        Morph m = tensor_map(a, b, identity_morph(interval()), lambda_map(h.map));
        CHECK(check_morph(m).empty());
        Morph id = tensor_map(a, a, identity_morph(interval()), identity_morph(a.L));
        CHECK(id == identity_morph(a.cx));
        CHECK(compose(id, m) == m);
    }
}

TEST_CASE("atoms of lambda of a cell") {
    CPtr k = lambda(parse_cell("[2]"));
    Atom a = atom(*k, "S1(0)");
    CHECK(a.valid);
    CHECK(a.rows.size() == 2);
    CHECK(k->format(0, a.rows[0].first) == "0");
    CHECK(k->format(0, a.rows[0].second) == "1");
}

TEST_CASE("morphism checks catch broken maps") {
    CPtr k = lambda(simplex(1));
    Morph f = identity_morph(k);
    f.img[0][0] = Chain::gen(1);
    CHECK_FALSE(check_morph(f).empty());
    Morph z = zero_morph(k, k);
    CHECK_FALSE(check_morph(z).empty());
}

TEST_CASE("json dump of a complex") {
    std::string j = to_json(*lambda(simplex(1)));
    CHECK(j.find("S1(0)") != std::string::npos);
}
