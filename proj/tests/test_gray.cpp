#include "doctest.h"
#include "gcyl/gray.hpp"
#include "gcyl/pr.hpp"

using namespace gcyl;

namespace {

std::vector<std::string> labels(const Cell& t) {
    std::vector<std::string> out;
    for (const auto& p : lax_shuffle_diagram(t).pieces) out.push_back(p.label);
    return out;
}

struct Frozen {
    const char* cell;
    std::vector<std::size_t> nondegenerate;
};

const std::vector<Frozen> kNondegenerate = {
    {"[0]", {2, 1}},
    {"[1]", {4, 6, 1}},
    {"[2]", {6, 16, 5}},
    {"[3]", {8, 32, 15}},
    {"[1]([1])", {4, 10, 8, 1}},
    {"[2]([1],[0])", {6, 25, 25, 3}},
    {"[1]([2])", {4, 14, 22, 5}},
};

}  // namespace

TEST_CASE("shuffle diagram shapes") {
    CHECK(labels(leaf()) == std::vector<std::string>{"[1]"});
    CHECK(labels(simplex(1)) == std::vector<std::string>{"[2]", "[1]([1])", "[2]"});
    CHECK(labels(simplex(2)) == std::vector<std::string>{"[3]", "[2]([1],[0])", "[3]", "[2]([0],[1])", "[3]"});
    CHECK(labels(globe(3)) == std::vector<std::string>{"[2]([0],[1]([1]))", "[1]([1]⊗[1]([1]))", "[2]([1]([1]),[0])"});
    auto D = lax_shuffle_diagram(parse_cell("[2]([1],[0])"));
    CHECK(D.pieces.size() == 5);
    CHECK(D.legs.size() == 4);
    for (std::size_t s = 0; s < D.legs.size(); ++s) CHECK(D.legs[s].to == D.legs[s].from + 1);
}

TEST_CASE("piece embeddings are maps") {
    for (const auto& t : all_cells(6))
        for (const auto& p : lax_shuffle_diagram(t).pieces) CHECK(check_morph(p.embed).empty());
}

TEST_CASE("gluing holds for globes and small cells") {
    for (int n = 0; n <= 4; ++n) CHECK(verify_gluing(globe(n)).pass);
    for (const auto& t : all_cells(6)) {
        GluingReport r = verify_gluing(t);
        CHECK_MESSAGE(r.pass, to_string(t));
        CHECK(r.mono.size() == static_cast<std::size_t>(2 * t.width() + 1));
        CHECK(r.pullback.size() == static_cast<std::size_t>(2 * t.width()));
    }
}

TEST_CASE("endpoints") {
    for (const auto& t : all_cells(6)) {
        EndpointReport r = verify_endpoints(t);
        CHECK(r.disjoint);
        CHECK(r.injective);
        CHECK(r.factor);
    }
}

TEST_CASE("globular sums are preserved") {
    for (const auto& t : all_cells(6)) {
        std::vector<std::string> f;
        CHECK_MESSAGE(verify_globular_preservation(t, &f), to_string(t));
    }
}

TEST_CASE("frozen cylinder counts") {
    for (const auto& f : kNondegenerate) {
        Cell t = parse_cell(f.cell);
        int md = static_cast<int>(f.nondegenerate.size()) - 1;
        CellSet s = gray_cylinder(t, md);
        CHECK(s.nondegenerate() == f.nondegenerate);
        auto tot = s.totals();
        auto pr = pr_counts({t}, md);
        for (int d = 0; d <= md; ++d) CHECK(static_cast<i64>(tot[static_cast<std::size_t>(d)]) == pr[static_cast<std::size_t>(d)]);
    }
}

TEST_CASE("objects of the cylinder are two copies of the objects of T") {
    for (const auto& t : all_cells(6)) {
        CellSet base = enumerate_cells(*lambda(t), 0);
        CellSet cyl = gray_cylinder(t, 0);
        CHECK(cyl.by_dim[0].size() == 2 * base.by_dim[0].size());
    }
}

TEST_CASE("hyperface cylinders agree with the Steiner map") {
    for (const auto& t : all_cells(6))
        for (const auto& h : hyperfaces(t)) {
            HyperfaceCylinder c = hyperface_cylinder(h.map);
            CHECK_MESSAGE(c.agree, to_string(h.map));
            CHECK(check_morph(c.diagram_map).empty());
        }
    CHECK_THROWS(hyperface_cylinder(identity(simplex(2))));
}

TEST_CASE("cylinders of composite faces compose") {
    for (const auto& t : all_cells(6))
        for (const auto& g : hyperfaces(t))
            for (const auto& f : hyperfaces(g.map.src)) {
                Tensor a = cylinder(f.map.src), c = cylinder(t);
                Morph whole = tensor_map(a, c, identity_morph(interval()), lambda_map(compose(f.map, g.map)));
                CHECK(whole == compose(hyperface_cylinder(f.map).steiner_map, hyperface_cylinder(g.map).steiner_map));
            }
}

TEST_CASE("shuffle emission") {
    auto D = lax_shuffle_diagram(simplex(1));
    std::string dot = shuffle_dot(D);
    CHECK(dot.rfind("digraph shuffle", 0) == 0);
    CHECK(dot.find("[1]([1])") != std::string::npos);
    CHECK(shuffle_json(D).find("\"mixed\"") != std::string::npos);
    CHECK(to_json(verify_gluing(simplex(1))).find("\"pass\": true") != std::string::npos);
}
