#pragma once

#include <compare>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace gcyl {

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, std::size_t pos)
        : std::runtime_error(msg + " at position " + std::to_string(pos)), pos_(pos) {}
    std::size_t pos() const { return pos_; }

private:
    std::size_t pos_;
};

// [n];(T_1,...,T_n) as a planar rooted tree
struct Cell {
    std::vector<Cell> ch;

    Cell() = default;
    explicit Cell(std::vector<Cell> children) : ch(std::move(children)) {}

    int width() const { return static_cast<int>(ch.size()); }
    bool operator==(const Cell&) const = default;
    std::strong_ordering operator<=>(const Cell& o) const;
};

Cell leaf();
Cell simplex(int n);
Cell globe(int n);
Cell parse_cell(std::string_view text);
std::string to_string(const Cell& t);

int dimension(const Cell& t);
int num_nodes(const Cell& t);
bool is_self_dual(const Cell& t);
Cell reversed(const Cell& t);

struct GlobularSum {
    std::vector<int> leaf_dims;
    std::vector<int> meet_dims;
    bool operator==(const GlobularSum&) const = default;
};

GlobularSum globular_sum(const Cell& t);
Cell from_globular_sum(const GlobularSum& g);
std::string to_string(const GlobularSum& g);

// every cell with at most max_nodes tree nodes, in a fixed order
std::vector<Cell> all_cells(int max_nodes);

struct SimplicialMap {
    int src = 0;
    int tgt = 0;
    std::vector<int> img;

    int operator()(int i) const { return img[static_cast<std::size_t>(i)]; }
    bool operator==(const SimplicialMap&) const = default;
};

bool is_monotone(const SimplicialMap& f);
SimplicialMap identity_map(int n);
SimplicialMap coface(int n, int k);
SimplicialMap codegeneracy(int n, int k);
SimplicialMap compose(const SimplicialMap& f, const SimplicialMap& g);

// F(f)(i) = {j | f(i-1) < j <= f(i)} for i = 1..n, stored as closed ranges [first, second]
using GammaImage = std::vector<std::pair<int, int>>;
GammaImage gamma_image(const SimplicialMap& f);
std::vector<int> gamma_set(const GammaImage& g, int i);

struct Morphism {
    Cell src;
    Cell tgt;
    SimplicialMap base;
    // comp[i-1][j - first(F(i))] : src.ch[i-1] -> tgt.ch[j-1]
    std::vector<std::vector<Morphism>> comp;

    const Morphism& at(int i, int j) const;
    bool operator==(const Morphism&) const = default;
};

Morphism identity(const Cell& t);
Morphism terminal(const Cell& t);
Morphism vertex(const Cell& t, int q);
Morphism compose(const Morphism& f, const Morphism& g);
bool is_valid(const Morphism& f, std::string* why = nullptr);

std::string to_string(const Morphism& f);
Morphism parse_morphism(std::string_view text, const Cell& src, const Cell& tgt);

enum class FaceKind { vertical, inner, outer };
std::string to_string(FaceKind k);

struct Hyperface {
    FaceKind kind;
    int position;
    int variant;
    Morphism map;
};

std::vector<Hyperface> hyperfaces(const Cell& t);

// d^k with identity components, except the doubled segment k which gets (id,!) for variant 0 and (!,id) for variant 1
Morphism coface_morphism(const Cell& src, const Cell& tgt, int k, int variant);

// inclusion of the i-th globe (i = 0..l) of the globular sum, and of the meet globes
Morphism globe_inclusion(const Cell& t, int i);
Morphism meet_inclusion(const Cell& t, int i);

}  // namespace gcyl
