#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "gcyl/chain.hpp"
#include "gcyl/theta.hpp"

namespace gcyl {

struct Complex;
using CPtr = std::shared_ptr<const Complex>;

// based directed augmented complex; positivity is the nonnegative span of the basis
struct Complex {
    std::vector<std::vector<std::string>> names;
    std::vector<std::vector<Chain>> d;  // d[k][i] lives in degree k-1; d[0] is empty
    std::vector<i64> e;

    int top() const { return static_cast<int>(names.size()) - 1; }
    int size(int k) const {
        return (k < 0 || k > top()) ? 0 : static_cast<int>(names[static_cast<std::size_t>(k)].size());
    }
    const std::string& name(int k, int i) const { return names[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)]; }
    const Chain& diff(int k, int i) const { return d[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)]; }

    Chain boundary(int k, const Chain& x) const;
    i64 augment(const Chain& x) const;
    std::optional<std::pair<int, int>> find(const std::string& nm) const;
    std::string format(int k, const Chain& x) const;
    Chain parse_chain(int k, const std::string& text) const;

    void reindex();

private:
    std::unordered_map<std::string, std::pair<int, int>> index_;
};

// one new generator of degree k with the given boundary (or augmentation for k = 0)
int add_generator(Complex& c, int k, std::string nm, Chain boundary, i64 aug = 0);
CPtr finish(Complex c);

CPtr point();
CPtr interval();
CPtr lambda_globe(int n);

// [n];(K_1..K_n) with complex labels
struct Wreath {
    CPtr cx;
    std::vector<CPtr> labels;
    std::vector<std::vector<int>> offset;  // offset[i-1][k]: first index of S_i(degree k) in degree k+1

    int n() const { return static_cast<int>(labels.size()); }
    int sigma(int i, int k, int a) const { return offset[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(k)] + a; }
    Chain suspend(int i, int k, const Chain& x) const;
    // inverse of sigma for a generator of degree k+1 >= 1: (segment, label index)
    std::pair<int, int> unsuspend(int k1, int idx) const;
};

Wreath wreath(std::vector<CPtr> labels);
Wreath lambda_wreath(const Cell& t);
CPtr lambda(const Cell& t);

struct Tensor {
    CPtr cx;
    CPtr K, L;
    std::vector<std::vector<int>> offset;  // offset[n][p]: first index of K_p (x) L_{n-p}

    int index(int p, int a, int q, int b) const {
        return offset[static_cast<std::size_t>(p + q)][static_cast<std::size_t>(p)] + a * L->size(q) + b;
    }
    struct Split {
        int p, a, q, b;
    };
    Split split(int n, int idx) const;
    Chain pair(int p, const Chain& x, int q, const Chain& y) const;
};

Tensor tensor(CPtr K, CPtr L);
Tensor cylinder(const Cell& t);

struct Morph {
    CPtr src, tgt;
    std::vector<std::vector<Chain>> img;  // img[k][i] in tgt degree k

    Chain apply(int k, const Chain& x) const;
    const Chain& of(int k, int i) const { return img[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)]; }
    bool operator==(const Morph& o) const { return img == o.img; }
};

Morph zero_morph(CPtr src, CPtr tgt);
Morph identity_morph(CPtr k);
Morph compose(const Morph& f, const Morph& g);  // g after f
Morph add(const Morph& f, const Morph& g);

// checks: chain map, augmentation, positivity; returns empty string when fine
std::string check_morph(const Morph& f);
std::string check_complex(const Complex& k);

Morph wreath_map(const Wreath& A, const Wreath& B, const SimplicialMap& base,
                 const std::vector<std::vector<Morph>>& comps);
Morph lambda_map(const Morphism& f);
Morph tensor_map(const Tensor& A, const Tensor& B, const Morph& f, const Morph& g);
// degree-0 generators to the unique point, everything else to 0
Morph to_point(CPtr src);

using Row = std::pair<Chain, Chain>;
using Table = std::vector<Row>;

struct SignSplit {
    std::vector<int> supp;
    Chain plus, minus;
};
SignSplit sign_split(const Chain& x);

struct Atom {
    Table rows;
    bool valid = false;
};
Atom atom(const Complex& k, int deg, int idx);
Atom atom(const Complex& k, const std::string& gen);

struct BasisReport {
    bool unital = false;
    bool loop_free = false;
    bool strongly_loop_free = false;
};
BasisReport check_basis(const Complex& k);

// legs must send generators to distinct generators
CPtr amalgamate(const Complex& K, const Complex& L, const Complex& M, const Morph& i, const Morph& j);
CPtr amalgamate_globular(const Cell& t);

// generator bijection per degree preserving d and e, if one exists
std::optional<std::vector<std::vector<int>>> find_isomorphism(const Complex& a, const Complex& b);

std::string to_json(const Complex& k);

}  // namespace gcyl
