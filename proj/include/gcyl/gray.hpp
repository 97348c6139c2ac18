#pragma once

#include <string>
#include <vector>

#include "gcyl/dac.hpp"
#include "gcyl/lattice.hpp"
#include "gcyl/nu.hpp"
#include "gcyl/theta.hpp"

namespace gcyl {

// one object of the lax shuffle diagram with its embedding into I (x) lambda(T)
struct Piece {
    enum class Kind { shuffle, mixed };
    Kind kind = Kind::shuffle;
    int k = 0;
    Cell base;          // shuffle: the Theta cell; mixed: T with segment k kept as A_k
    std::string label;  // [n+1];(..,[0],..) or [n];(..,[1]⊗A_k,..)
    Wreath w;
    Tensor tm;          // mixed only: I (x) lambda(A_k)
    Morph embed;
};

struct Leg {
    int from = 0, to = 0;  // apex lambda(T) into pieces[from] and pieces[to]
    Morph into_from, into_to;
};

struct ShuffleDiagram {
    Cell t;
    Wreath W;
    Tensor C;  // I (x) lambda(T)
    std::vector<Piece> pieces;  // O_0, M_1, O_1, .., M_n, O_n
    std::vector<Leg> legs;      // per span between adjacent pieces

    int n() const { return t.width(); }
    const Piece& O(int k) const { return pieces[static_cast<std::size_t>(2 * k)]; }
    const Piece& M(int k) const { return pieces[static_cast<std::size_t>(2 * k - 1)]; }
    // generator of I (x) lambda(T) over l, r, h and a generator of lambda(T)
    int l(int deg, int idx) const { return C.index(0, 0, deg, idx); }
    int r(int deg, int idx) const { return C.index(0, 1, deg, idx); }
    int h(int deg, int idx) const { return C.index(1, 0, deg, idx); }
};

ShuffleDiagram lax_shuffle_diagram(const Cell& t);

struct GluingReport {
    std::vector<std::string> pieces;
    std::vector<bool> mono;       // per piece
    std::vector<bool> coverage;   // per degree
    std::vector<bool> commute;    // per span
    std::vector<bool> pullback;   // per span
    bool transit = true;          // non-adjacent overlaps pass through every piece in between
    bool pass = false;
    std::vector<std::string> failures;
};

GluingReport verify_gluing(const Cell& t);
std::string to_json(const GluingReport& r);

CellSet gray_cylinder(const Cell& t, int max_dim, std::size_t ceiling = kDefaultCeiling);

struct Endpoints {
    Morph e0, e1;  // lambda(T) -> I (x) lambda(T) at the vertex 0 and 1
};

Endpoints endpoints(const Cell& t);

struct EndpointReport {
    bool disjoint = false;
    bool injective = false;
    bool factor = false;  // e1 through O_0 via d^0, e0 through O_n via d^(n+1)
    bool pass = false;
};

EndpointReport verify_endpoints(const Cell& t);

bool verify_globular_preservation(const Cell& t, std::vector<std::string>* failures = nullptr);

// image of every generator of I (x) lambda(T) given maps out of each piece; checks each map factors through it
struct Induced {
    Morph map;
    bool consistent = false;
    std::vector<std::string> failures;
};

Induced induce(const ShuffleDiagram& D, const std::vector<Morph>& phi, CPtr target);

struct HyperfaceCylinder {
    Morph diagram_map;
    Morph steiner_map;
    bool agree = false;
    std::vector<std::string> failures;
};

HyperfaceCylinder hyperface_cylinder(const Morphism& face);

// a P.R. morphism, pushed through the cylinder, against the image of its objects as 1-cells
bool check_pr_morphism(const Morphism& f, int x, int z, std::string* why = nullptr);

std::string shuffle_dot(const ShuffleDiagram& D);
std::string shuffle_json(const ShuffleDiagram& D);

// dense span of images of the degree-k generators of f
Mat image(const Morph& f, int k);
Vec dense(const Chain& x, int size);

}  // namespace gcyl
