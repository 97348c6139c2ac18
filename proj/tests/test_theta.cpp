#include <random>

#include "doctest.h"
#include "gcyl/theta.hpp"

using namespace gcyl;

TEST_CASE("corpus size by node count") {
    std::vector<int> by_nodes(8, 0);
    auto all = all_cells(7);
    for (const auto& t : all) ++by_nodes[static_cast<std::size_t>(num_nodes(t))];
    CHECK(all.size() == 197);
    CHECK(by_nodes == std::vector<int>{0, 1, 1, 2, 5, 14, 42, 132});
}

TEST_CASE("parse and print round trip") {
    for (const auto& t : all_cells(7)) CHECK(parse_cell(to_string(t)) == t);
    CHECK(to_string(parse_cell("[2]([1],[0])")) == "[2]([1],[0])");
    CHECK(to_string(parse_cell("[2]([0],[0])")) == "[2]");
    CHECK(parse_cell(" [1] ( [2] ) ") == parse_cell("[1]([2])"));
}

TEST_CASE("globe sugar") {
    CHECK(parse_cell("G<0>") == leaf());
    CHECK(to_string(parse_cell("G<3>")) == "[1]([1]([1]))");
    for (int n = 0; n <= 5; ++n) {
        CHECK(dimension(globe(n)) == n);
        CHECK(parse_cell("G<" + std::to_string(n) + ">") == globe(n));
    }
}

TEST_CASE("malformed cells are rejected") {
    for (const char* s : {"", "[", "[2", "[1]([0],[0])", "[2]([1])", "[x]", "G<", "G<2", "[1]([0]) junk"})
        CHECK_THROWS_AS(parse_cell(s), ParseError);
}

TEST_CASE("globular sums") {
    CHECK(to_string(globular_sum(parse_cell("[2]([1],[0])"))) == "2 ⊕₀ 1");
    CHECK(to_string(globular_sum(parse_cell("[3]([1],[0],[2]([1],[0]))"))) == "2 ⊕₀ 1 ⊕₀ 3 ⊕₁ 2");
    CHECK(to_string(globular_sum(parse_cell("[1]([2])"))) == "2 ⊕₁ 2");
    CHECK(to_string(globular_sum(leaf())) == "0");
    for (const auto& t : all_cells(7)) {
        GlobularSum g = globular_sum(t);
        CHECK(g.leaf_dims.size() == g.meet_dims.size() + 1);
        CHECK(from_globular_sum(g) == t);
    }
}

TEST_CASE("reversal") {
    CHECK(to_string(reversed(parse_cell("[2]([2]([1],[0]),[0])"))) == "[2]([0],[2]([0],[1]))");
    for (const auto& t : all_cells(7)) {
        CHECK(reversed(reversed(t)) == t);
        CHECK(is_self_dual(t) == (reversed(t) == t));
        CHECK(dimension(reversed(t)) == dimension(t));
    }
}

TEST_CASE("cosimplicial identities") {
    for (int n = 0; n <= 5; ++n) {
        for (int i = 0; i <= n + 1; ++i)
            for (int j = i + 1; j <= n + 2; ++j)
                CHECK(compose(coface(n, i), coface(n + 1, j)) == compose(coface(n, j - 1), coface(n + 1, i)));
        for (int k = 0; k <= n; ++k) {
            CHECK(compose(coface(n, k), codegeneracy(n, k)) == identity_map(n));
            CHECK(compose(coface(n, k + 1), codegeneracy(n, k)) == identity_map(n));
            CHECK(is_monotone(coface(n, k)));
            CHECK(is_monotone(codegeneracy(n, k)));
        }
    }
}

TEST_CASE("gamma image") {
    SimplicialMap f{3, 4, {0, 2, 2, 4}};
    GammaImage g = gamma_image(f);
    CHECK(gamma_set(g, 1) == std::vector<int>{1, 2});
    CHECK(gamma_set(g, 2).empty());
    CHECK(gamma_set(g, 3) == std::vector<int>{3, 4});
}

TEST_CASE("hyperface inventory") {
    auto kinds = [](const Cell& t) {
        std::vector<std::string> out;
        for (const auto& h : hyperfaces(t)) out.push_back(to_string(h.kind) + std::to_string(h.position) + "/" + std::to_string(h.variant));
        return out;
    };
    CHECK(kinds(parse_cell("[2]")) == std::vector<std::string>{"inner1/0", "inner1/1", "outer0/0", "outer2/0"});
    CHECK(kinds(parse_cell("[1]([1])")) == std::vector<std::string>{"vertical1/0", "vertical1/1"});
    CHECK(kinds(parse_cell("[2]([1],[0])")) == std::vector<std::string>{"vertical1/0", "vertical1/1", "inner1/0", "outer2/0"});
    CHECK(hyperfaces(leaf()).empty());
    for (const auto& t : all_cells(6))
        for (const auto& h : hyperfaces(t)) {
            std::string why;
            CHECK_MESSAGE(is_valid(h.map, &why), why);
            CHECK(h.map.tgt == t);
            CHECK(num_nodes(h.map.src) == num_nodes(t) - 1);
        }
}

TEST_CASE("morphism literal round trip") {
    Cell a = parse_cell("[1]([2])"), b = parse_cell("[2]([1],[1])");
    Morphism f = parse_morphism("<0,2>{(1,1):<0,1,1>,(1,2):<0,0,1>}", a, b);
    CHECK(is_valid(f));
    CHECK(to_string(f) == "<0,2>{(1,1):<0,1,1>,(1,2):<0,0,1>}");
    CHECK_THROWS(parse_morphism("<0,3>", a, b));
}

TEST_CASE("composition of face chains is associative and unital") {
    std::mt19937_64 rng(20260417);
    auto cells = all_cells(7);
    for (int trial = 0; trial < 300; ++trial) {
        Cell t = cells[rng() % cells.size()];
        std::vector<Morphism> chain;
        Cell cur = t;
        while (chain.size() < 3) {
            auto hs = hyperfaces(cur);
            if (hs.empty()) break;
            Morphism f = hs[rng() % hs.size()].map;
            chain.insert(chain.begin(), f);
            cur = f.src;
        }
        if (chain.size() < 3) continue;
        const auto &f = chain[0], &g = chain[1], &h = chain[2];
        Morphism left = compose(compose(f, g), h), right = compose(f, compose(g, h));
        CHECK(left == right);
        CHECK(is_valid(left));
        CHECK(compose(identity(f.src), f) == f);
        CHECK(compose(f, identity(f.tgt)) == f);
    }
}

TEST_CASE("globe and meet inclusions") {
    Cell t = parse_cell("[2]([1],[0])");
    CHECK(globe_inclusion(t, 0).src == globe(2));
    CHECK(globe_inclusion(t, 1).src == globe(1));
    CHECK(meet_inclusion(t, 1).src == globe(0));
    for (const auto& c : all_cells(6)) {
        int n = static_cast<int>(globular_sum(c).leaf_dims.size());
        for (int i = 0; i < n; ++i) CHECK(is_valid(globe_inclusion(c, i)));
        for (int i = 1; i < n; ++i) CHECK(is_valid(meet_inclusion(c, i)));
    }
}
