#include "doctest.h"
#include "gcyl/gray.hpp"
#include "gcyl/pr.hpp"

using namespace gcyl;

namespace {

struct Frozen {
    const char* cell;
    std::vector<i64> totals;  // dimensions 0..4
};

const std::vector<Frozen> kTotals = {
    {"[0]", {2, 3, 3, 3, 3}},
    {"[1]", {4, 10, 11, 11, 11}},
    {"[2]", {6, 22, 27, 27, 27}},
    {"[3]", {8, 40, 55, 55, 55}},
    {"[1]([1])", {4, 14, 22, 23, 23}},
    {"[2]([1],[0])", {6, 31, 56, 59, 59}},
    {"[1]([2])", {4, 18, 40, 45, 45}},
};

}  // namespace

TEST_CASE("frozen P.R. counts") {
    for (const auto& f : kTotals) CHECK(pr_counts({parse_cell(f.cell)}, 4) == f.totals);
}

TEST_CASE("hom expressions") {
    std::vector<Cell> c2{simplex(2)};
    CHECK(to_string(pr_hom(c2, {0, {0}}, {1, {1}})) == "[0,1]");
    CHECK(to_string(pr_hom(c2, {0, {1}}, {1, {2}})) == "[1,2]");
    CHECK(to_string(pr_hom(c2, {0, {0}}, {1, {2}})) == "[0,2]");
    CHECK(to_string(pr_hom(c2, {1, {0}}, {0, {1}})) == "empty");
    CHECK(to_string(pr_hom(c2, {0, {2}}, {0, {2}})) == "pt");
    std::vector<Cell> c3{simplex(1), parse_cell("[1]([1])")};
    CHECK(to_string(pr_hom(c3, {0, {0, 0}}, {2, {1, 1}})) == "PR([0],[1])");
}

TEST_CASE("objects of PR are pairs of a level and coordinates") {
    std::vector<Cell> c{simplex(1), parse_cell("[1]([1])")};
    auto obs = pr_objects(c);
    CHECK(obs.size() == 12);
    CHECK(to_string(obs.front()) == "(0,0,0)");
    CHECK(to_string(obs.back()) == "(2,1,1)");
    for (const char* s : {"[1]", "[2]([1],[0])", "[3]"}) {
        Cell t = parse_cell(s);
        CHECK(static_cast<i64>(pr_objects({t}).size()) == pr_count({t}, 0));
    }
}

TEST_CASE("worked P.R. morphism") {
    Cell a = parse_cell("[1]([2])"), b = parse_cell("[2]([1],[1])");
    Morphism f = parse_morphism("<0,2>{(1,1):<0,1,1>,(1,2):<0,0,1>}", a, b);
    PRMorphism m = pr_morphism(f, 0, 1);
    std::vector<std::string> objs;
    for (const auto& [o, parts] : m.objects) objs.push_back(to_string(o) + "->" + to_string(concatenate(parts, m.tgt_families, 0)));
    CHECK(objs == std::vector<std::string>{"(0,0)->(0,0,0)", "(0,1)->(0,1,0)", "(0,2)->(0,1,1)",
                                           "(1,0)->(2,0,0)", "(1,1)->(2,1,0)", "(1,2)->(2,1,1)"});
    auto hom = [&](PRObject s, PRObject t) {
        for (const auto& h : m.homs)
            if (h.src == s && h.tgt == t) return to_string(h.src_hom) + " => " + to_string(h.tgt_hom);
        return std::string("missing");
    };
    CHECK(hom({0, {0}}, {1, {1}}) == "[0,1] => [0,1] * [0,0]");
    CHECK(hom({0, {1}}, {1, {2}}) == "[1,2] => [1,1] * [0,1]");
    CHECK(hom({0, {0}}, {1, {2}}) == "[0,2] => [0,1] * [0,1]");
    std::string why;
    CHECK_MESSAGE(check_pr_morphism(f, 0, 1, &why), why);
}

TEST_CASE("P.R. morphisms of faces agree with the cylinder") {
    for (const auto& t : all_cells(5)) {
        bool flat = true;
        for (const auto& c : t.ch) flat = flat && c.width() == 0;
        if (!flat) continue;
        for (const auto& h : hyperfaces(t)) {
            int n = h.map.src.width();
            for (int x = 0; x <= n; ++x)
                for (int z = x; z <= n; ++z) {
                    std::string why;
                    CHECK_MESSAGE(check_pr_morphism(h.map, x, z, &why), why);
                }
        }
    }
}

TEST_CASE("concatenation splits PR into two halves") {
    std::vector<std::vector<Cell>> lists = {{leaf()}, {simplex(1)}, {simplex(2), leaf()}, {parse_cell("[1]([1])")}};
    for (const auto& a : lists)
        for (const auto& b : lists) {
            ConcatReport r = check_concatenation(a, b, 3);
            CHECK(r.ok);
        }
}

TEST_CASE("degenerate P.R. inputs") {
    CHECK(pr_count({}, 0) == 1);
    CHECK(pr_count({leaf()}, 0) == 2);
    CHECK(to_string(PRExpr::pr({})) == "pt");
    CHECK(to_string(PRExpr::product({PRExpr::point(), PRExpr::empty()})) == "empty");
}
