#pragma once

#include <string>
#include <vector>

#include "gcyl/gray.hpp"

namespace gcyl {

// [n] -> [1], i < j to 0 and i >= j to 1
SimplicialMap split_map(int n, int j);

// kappa = (kappa1, kappa2) into I x lambda(T); sigma into lambda([1];reversed(T))
struct SpanBundle {
    Cell t;
    Cell shift;
    Morph kappa1, kappa2, sigma;
    std::vector<Morph> kappa1_cols, kappa2_cols, sigma_cols;  // per shuffle column
    std::vector<std::string> failures;  // columns that do not glue
};

// mutate swaps the vertex used by the shuffle columns of sigma
SpanBundle build_span(const Cell& t, bool mutate = false);

struct SquareCheck {
    std::string name;
    bool ok = false;
};

struct SpanReport {
    std::vector<SquareCheck> squares;
    bool induced = false;     // every column family glues to a map on the cylinder
    bool canonical = false;   // kappa is (lambda(!) (x) id... projections) of the cylinder
    bool diamond = false;
    bool splits = false;
    bool functors = false;
    bool pass = false;
    std::vector<std::string> failures;
};

SpanReport verify_span(const Cell& t, int max_dim, bool mutate = false);
std::string to_json(const SpanReport& r);
std::string span_dot(const Cell& t, const SpanReport& r);

}  // namespace gcyl
