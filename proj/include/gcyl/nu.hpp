#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "gcyl/dac.hpp"

namespace gcyl {

// a cell of nu(K): rows (x_k^0, x_k^1) for k = 0..dim, top pair equal
struct NuCell {
    Table rows;

    int dim() const { return static_cast<int>(rows.size()) - 1; }
    bool operator==(const NuCell&) const = default;
    auto operator<=>(const NuCell&) const = default;
};

struct NuCellHash {
    std::size_t operator()(const NuCell& c) const;
};

// empty string when the table satisfies the four table conditions
std::string validate(const Complex& k, const NuCell& c);

NuCell nu_source(const NuCell& c);
NuCell nu_target(const NuCell& c);
std::pair<NuCell, NuCell> nu_boundary(const NuCell& c);
NuCell nu_identity(const NuCell& c);
// j-dimensional source and target, as cells of dimension j
NuCell source_j(const NuCell& c, int j);
NuCell target_j(const NuCell& c, int j);
bool composable(int j, const NuCell& a, const NuCell& b);
// a then b
NuCell nu_compose(int j, const NuCell& a, const NuCell& b);
bool is_degenerate(const NuCell& c);
NuCell atom_cell(const Complex& k, int deg, int idx);

struct CellSet {
    std::vector<std::vector<NuCell>> by_dim;

    int max_dim() const { return static_cast<int>(by_dim.size()) - 1; }
    std::vector<std::size_t> totals() const;
    std::vector<std::size_t> nondegenerate() const;
    bool operator==(const CellSet&) const = default;
};

inline constexpr std::size_t kDefaultCeiling = 1000000;

// closure of atoms and identities under all compositions
CellSet enumerate_cells(const Complex& k, int max_dim, std::size_t ceiling = kDefaultCeiling);
CellSet enumerate_cells_serial(const Complex& k, int max_dim, std::size_t ceiling = kDefaultCeiling);

// every valid table with coefficients in [0, bound]
CellSet table_search(const Complex& k, int max_dim, i64 bound);
CellSet table_search_serial(const Complex& k, int max_dim, i64 bound);

NuCell apply(const Morph& f, const NuCell& c);

using CellMap = std::function<NuCell(const NuCell&)>;

struct FunctorReport {
    bool ok = true;
    std::size_t cells = 0;
    std::size_t compositions = 0;
    std::vector<std::string> violations;
};

FunctorReport check_functor(const Complex& src, const CellSet& cells, const Complex& tgt, const CellMap& f);
FunctorReport check_functor(const Morph& f, int max_dim);

// cartesian product of finitely enumerated views; cells are tuples
struct ProductView {
    std::vector<CPtr> factors;
    std::vector<CellSet> sets;

    std::size_t count(int d) const;
    bool contains(const std::vector<NuCell>& cell) const;
};

ProductView product_view(std::vector<CPtr> factors, int max_dim);

std::string format_cell(const Complex& k, const NuCell& c);
std::string cells_json(const Complex& k, const CellSet& s);
std::string cells_dot(const Complex& k, const CellSet& s);

}  // namespace gcyl
