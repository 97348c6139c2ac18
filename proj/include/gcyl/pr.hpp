#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "gcyl/chain.hpp"
#include "gcyl/theta.hpp"

namespace gcyl {

struct PRExpr {
    enum class Kind { empty, point, interval, cell, product, pr };
    Kind kind = Kind::point;
    int lo = 0, hi = 0;       // interval [lo, hi]
    Cell cell;                // cell
    std::vector<PRExpr> factors;  // product
    std::vector<Cell> cells;  // pr

    static PRExpr empty() {
        PRExpr e;
        e.kind = Kind::empty;
        return e;
    }
    static PRExpr point() { return PRExpr{}; }
    static PRExpr interval(int a, int b);
    static PRExpr of_cell(Cell c);
    static PRExpr product(std::vector<PRExpr> fs);
    static PRExpr pr(std::vector<Cell> cs);

    bool operator==(const PRExpr&) const = default;
};

std::string to_string(const PRExpr& e);

// (level, coordinates); level in {0..n}, coordinate i in {0..width(S_i)}
struct PRObject {
    int level = 0;
    std::vector<int> coords;

    bool operator==(const PRObject&) const = default;
    auto operator<=>(const PRObject&) const = default;
};

std::string to_string(const PRObject& o);

std::vector<PRObject> pr_objects(const std::vector<Cell>& cells);
PRExpr pr_hom(const std::vector<Cell>& cells, const PRObject& src, const PRObject& tgt);

// total cell counts; the memo lives inside one counter
class PRCounter {
public:
    i64 count(const PRExpr& e, int dim);
    i64 pr(const std::vector<Cell>& cells, int dim);
    i64 cell(const Cell& t, int dim);
    // cells of the full sub-category on the objects accepted by keep
    i64 restricted(const std::vector<Cell>& cells, const std::function<bool(const PRObject&)>& keep, int dim);

private:
    std::map<std::pair<std::string, int>, i64> memo_;
};

i64 pr_count(const std::vector<Cell>& cells, int dim);
std::vector<i64> pr_counts(const std::vector<Cell>& cells, int max_dim);

struct ConcatReport {
    bool ok = true;
    std::vector<std::string> failures;
};

// the two halves of PR(A ++ B) are PR(A) x prod B and prod A x PR(B), meeting in prod A x prod B
ConcatReport check_concatenation(const std::vector<Cell>& a, const std::vector<Cell>& b, int max_dim);

struct IntervalMap {
    int src_lo = 0, src_hi = 0;
    int tgt_lo = 0, tgt_hi = 0;
    std::vector<int> img;  // image of src_lo..src_hi
};

struct PRHomMap {
    PRObject src, tgt;
    PRExpr src_hom, tgt_hom;
    std::vector<IntervalMap> factors;  // one per (i, j), j in F(f)(i)
};

struct PRMorphism {
    int x = 0, z = 0;
    std::vector<Cell> src_cells;
    std::vector<std::vector<Cell>> tgt_families;  // per source segment i: (S_j), j in F(f)(i)
    std::vector<std::pair<PRObject, std::vector<PRObject>>> objects;
    std::vector<PRHomMap> homs;
};

// f must have simplices as children on both sides; range <x, z> of source segments
PRMorphism pr_morphism(const Morphism& f, int x, int z);
// glue per-segment objects of a product of PR's into one object of the concatenated PR whose levels start at start
PRObject concatenate(const std::vector<PRObject>& parts, const std::vector<std::vector<Cell>>& families, int start);

}  // namespace gcyl
