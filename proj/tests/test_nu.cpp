#include <map>
#include <random>

#include "doctest.h"
#include "gcyl/gray.hpp"
#include "gcyl/nu.hpp"

using namespace gcyl;

TEST_CASE("globes have two cells per dimension and one on top") {
    for (int n = 0; n <= 5; ++n) {
        CellSet s = enumerate_cells(*lambda(globe(n)), n);
        std::vector<std::size_t> want(static_cast<std::size_t>(n) + 1, 2);
        want.back() = 1;
        CHECK(s.nondegenerate() == want);
    }
}

TEST_CASE("parallel closure equals serial closure") {
    for (const char* s : {"[0]", "[1]", "[2]", "[1]([1])", "[2]([1],[0])", "[1]([2])"}) {
        Tensor c = cylinder(parse_cell(s));
        CHECK(enumerate_cells(*c.cx, 3) == enumerate_cells_serial(*c.cx, 3));
    }
}

TEST_CASE("bounded table search equals closure") {
    for (const char* s : {"[1]", "G<2>"}) {
        Tensor c = cylinder(parse_cell(s));
        CellSet cl = enumerate_cells(*c.cx, 3);
        CHECK(table_search(*c.cx, 3, 3) == cl);
        CHECK(table_search_serial(*c.cx, 2, 3) == enumerate_cells_serial(*c.cx, 2));
    }
}

TEST_CASE("ceiling aborts enumeration") {
    Tensor c = cylinder(parse_cell("[2]"));
    CHECK_THROWS(enumerate_cells(*c.cx, 3, 5));
}

TEST_CASE("every enumerated cell is a valid table with valid boundary") {
    Tensor c = cylinder(parse_cell("[2]([1],[0])"));
    CellSet s = enumerate_cells(*c.cx, 3);
    for (const auto& layer : s.by_dim)
        for (const auto& x : layer) {
            CHECK(validate(*c.cx, x).empty());
            if (x.dim() == 0) continue;
            auto [a, b] = nu_boundary(x);
            CHECK(validate(*c.cx, a).empty());
            CHECK(validate(*c.cx, b).empty());
            if (x.dim() < 2) continue;
            CHECK(nu_source(a) == nu_source(b));
            CHECK(nu_target(a) == nu_target(b));
        }
}

TEST_CASE("composition laws on random composable pairs") {
    Tensor c = cylinder(parse_cell("[2]"));
    CellSet s = enumerate_cells(*c.cx, 3);
    std::mt19937_64 rng(99);
    int checked = 0;
    for (int d = 1; d <= 3; ++d) {
        const auto& layer = s.by_dim[static_cast<std::size_t>(d)];
        for (int j = 0; j < d; ++j) {
            std::map<NuCell, std::vector<const NuCell*>> by_src;
            for (const auto& x : layer) by_src[source_j(x, j)].push_back(&x);
            for (int trial = 0; trial < 200; ++trial) {
                const NuCell& a = layer[rng() % layer.size()];
                auto it = by_src.find(target_j(a, j));
                if (it == by_src.end()) continue;
                const NuCell& b = *it->second[rng() % it->second.size()];
                REQUIRE(composable(j, a, b));
                NuCell ab = nu_compose(j, a, b);
                CHECK(validate(*c.cx, ab).empty());
                CHECK(source_j(ab, j) == source_j(a, j));
                CHECK(target_j(ab, j) == target_j(b, j));
                ++checked;
                auto it2 = by_src.find(target_j(b, j));
                if (it2 == by_src.end()) continue;
                const NuCell& e = *it2->second[rng() % it2->second.size()];
                CHECK(nu_compose(j, nu_compose(j, a, b), e) == nu_compose(j, a, nu_compose(j, b, e)));
            }
        }
    }
    CHECK(checked > 100);
}

TEST_CASE("identities are units") {
    Tensor c = cylinder(parse_cell("[1]([1])"));
    CellSet s = enumerate_cells(*c.cx, 3);
    for (int d = 0; d < 3; ++d)
        for (const auto& x : s.by_dim[static_cast<std::size_t>(d)]) {
            NuCell i = nu_identity(x);
            CHECK(i.dim() == d + 1);
            CHECK(is_degenerate(i));
            CHECK(nu_source(i) == x);
            CHECK(nu_target(i) == x);
        }
}

TEST_CASE("exchange law in the cylinder over the 2-globe") {
    Tensor c = cylinder(globe(2));
    CellSet s = enumerate_cells(*c.cx, 3);
    int instances = 0;
    for (int d = 2; d <= 3; ++d) {
        const auto& layer = s.by_dim[static_cast<std::size_t>(d)];
        for (int i = 0; i < d; ++i)
            for (int j = i + 1; j < d; ++j) {
                std::map<NuCell, std::vector<const NuCell*>> src_i, src_j;
                for (const auto& x : layer) {
                    src_i[source_j(x, i)].push_back(&x);
                    src_j[source_j(x, j)].push_back(&x);
                }
                for (const auto& a : layer) {
                    auto bi = src_i.find(target_j(a, i));
                    auto cj = src_j.find(target_j(a, j));
                    if (bi == src_i.end() || cj == src_j.end()) continue;
                    for (const NuCell* b : bi->second)
                        for (const NuCell* cc : cj->second) {
                            auto di = src_i.find(target_j(*cc, i));
                            if (di == src_i.end()) continue;
                            for (const NuCell* dd : di->second) {
                                if (!composable(j, *b, *dd)) continue;
                                NuCell lhs = nu_compose(j, nu_compose(i, a, *b), nu_compose(i, *cc, *dd));
                                NuCell rhs = nu_compose(i, nu_compose(j, a, *cc), nu_compose(j, *b, *dd));
                                CHECK(lhs == rhs);
                                ++instances;
                            }
                        }
                }
            }
    }
    CHECK(instances > 0);
}

TEST_CASE("lambda of faces gives functors") {
    for (const auto& t : all_cells(5))
        for (const auto& h : hyperfaces(t)) {
            FunctorReport r = check_functor(lambda_map(h.map), dimension(h.map.src) + 1);
            CHECK(r.ok);
        }
}

TEST_CASE("a broken assignment is not a functor") {
    CPtr k = lambda(simplex(2));
    CellSet s = enumerate_cells(*k, 2);
    FunctorReport r = check_functor(*k, s, *k, [](const NuCell& c) {
        NuCell y = c;
        if (y.dim() == 0) y.rows[0] = {Chain::gen(0), Chain::gen(0)};
        return y;
    });
    CHECK_FALSE(r.ok);
    CHECK_FALSE(r.violations.empty());
}

TEST_CASE("product views") {
    ProductView v = product_view({interval(), lambda(simplex(2))}, 2);
    CHECK(v.count(0) == 2 * 3);
    CellSet a = enumerate_cells(*interval(), 2), b = enumerate_cells(*lambda(simplex(2)), 2);
    CHECK(v.count(1) == a.by_dim[1].size() * b.by_dim[1].size());
    CHECK(v.contains({a.by_dim[1][0], b.by_dim[1][0]}));
    CHECK_FALSE(v.contains({a.by_dim[1][0], b.by_dim[0][0]}));
}

TEST_CASE("cell output formats") {
    CPtr k = lambda(simplex(1));
    CellSet s = enumerate_cells(*k, 1);
    CHECK(cells_json(*k, s).find("\"totals\"") != std::string::npos);
    CHECK(cells_dot(*k, s).rfind("digraph", 0) == 0);
    CHECK(format_cell(*k, atom_cell(*k, 1, 0)) == "[0 | 1; S1(0) | S1(0)]");
}
