#include "gcyl/nu.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include <omp.h>

#include "json.hpp"

namespace gcyl {

std::size_t NuCellHash::operator()(const NuCell& c) const {
    std::size_t h = c.rows.size();
    for (const auto& [a, b] : c.rows) {
        h = h * 1000003 ^ hash_value(a);
        h = h * 1000003 ^ hash_value(b);
    }
    return h;
}

std::string validate(const Complex& k, const NuCell& c) {
    if (c.rows.empty()) return "empty table";
    int i = c.dim();
    for (int r = 0; r <= i; ++r) {
        const auto& [a, b] = c.rows[static_cast<std::size_t>(r)];
        if (!a.nonnegative() || !b.nonnegative()) return "negative entry in row " + std::to_string(r);
        for (const Chain* x : {&a, &b})
            for (const auto& [g, co] : x->t)
                if (g < 0 || g >= k.size(r)) return "entry out of range in row " + std::to_string(r);
        if (r > 0) {
            Chain want = c.rows[static_cast<std::size_t>(r) - 1].second - c.rows[static_cast<std::size_t>(r) - 1].first;
            if (k.boundary(r, a) != want || k.boundary(r, b) != want) return "boundary mismatch in row " + std::to_string(r);
        }
    }
    if (k.augment(c.rows[0].first) != 1 || k.augment(c.rows[0].second) != 1) return "augmentation is not 1";
    if (c.rows.back().first != c.rows.back().second) return "top entries differ";
    return {};
}

NuCell source_j(const NuCell& c, int j) {
    NuCell r;
    r.rows.assign(c.rows.begin(), c.rows.begin() + j + 1);
    r.rows.back().second = r.rows.back().first;
    return r;
}

NuCell target_j(const NuCell& c, int j) {
    NuCell r;
    r.rows.assign(c.rows.begin(), c.rows.begin() + j + 1);
    r.rows.back().first = r.rows.back().second;
    return r;
}

NuCell nu_source(const NuCell& c) {
    if (c.dim() < 1) throw std::invalid_argument("a 0-cell has no boundary");
    return source_j(c, c.dim() - 1);
}

NuCell nu_target(const NuCell& c) {
    if (c.dim() < 1) throw std::invalid_argument("a 0-cell has no boundary");
    return target_j(c, c.dim() - 1);
}

std::pair<NuCell, NuCell> nu_boundary(const NuCell& c) { return {nu_source(c), nu_target(c)}; }

NuCell nu_identity(const NuCell& c) {
    NuCell r = c;
    r.rows.emplace_back();
    return r;
}

bool composable(int j, const NuCell& a, const NuCell& b) {
    if (a.dim() != b.dim() || j < 0 || j >= a.dim()) return false;
    for (int k = 0; k < j; ++k)
        if (a.rows[static_cast<std::size_t>(k)] != b.rows[static_cast<std::size_t>(k)]) return false;
    return a.rows[static_cast<std::size_t>(j)].second == b.rows[static_cast<std::size_t>(j)].first;
}

NuCell nu_compose(int j, const NuCell& a, const NuCell& b) {
    if (!composable(j, a, b)) throw std::invalid_argument("cells are not composable at level " + std::to_string(j));
    NuCell r = a;
    r.rows[static_cast<std::size_t>(j)].second = b.rows[static_cast<std::size_t>(j)].second;
    for (std::size_t k = static_cast<std::size_t>(j) + 1; k < r.rows.size(); ++k) {
        r.rows[k].first += b.rows[k].first;
        r.rows[k].second += b.rows[k].second;
    }
    return r;
}

bool is_degenerate(const NuCell& c) {
    return c.dim() >= 1 && c.rows.back().first.empty() && c.rows.back().second.empty();
}

NuCell atom_cell(const Complex& k, int deg, int idx) { return NuCell{atom(k, deg, idx).rows}; }

std::vector<std::size_t> CellSet::totals() const {
    std::vector<std::size_t> r;
    for (const auto& v : by_dim) r.push_back(v.size());
    return r;
}

std::vector<std::size_t> CellSet::nondegenerate() const {
    std::vector<std::size_t> r;
    for (const auto& v : by_dim)
        r.push_back(static_cast<std::size_t>(std::count_if(v.begin(), v.end(), [](const NuCell& c) { return !is_degenerate(c); })));
    return r;
}

namespace {

using Index = std::unordered_map<NuCell, std::vector<int>, NuCellHash>;

struct Closure {
    int d;
    std::size_t ceiling;
    std::vector<NuCell> cells;
    std::unordered_set<NuCell, NuCellHash> seen;
    std::vector<Index> by_src, by_tgt;

    Closure(int dim, std::size_t ceil) : d(dim), ceiling(ceil), by_src(static_cast<std::size_t>(dim)), by_tgt(static_cast<std::size_t>(dim)) {}

    void insert(NuCell c) {
        if (seen.count(c)) return;
        if (cells.size() >= ceiling) throw std::runtime_error("cell ceiling exceeded in dimension " + std::to_string(d));
        int id = static_cast<int>(cells.size());
        for (int j = 0; j < d; ++j) {
            by_src[static_cast<std::size_t>(j)][source_j(c, j)].push_back(id);
            by_tgt[static_cast<std::size_t>(j)][target_j(c, j)].push_back(id);
        }
        seen.insert(c);
        cells.push_back(std::move(c));
    }

    void partners(const NuCell& c, std::vector<NuCell>& out) const {
        for (int j = 0; j < d; ++j) {
            auto it = by_src[static_cast<std::size_t>(j)].find(target_j(c, j));
            if (it != by_src[static_cast<std::size_t>(j)].end())
                for (int b : it->second) out.push_back(nu_compose(j, c, cells[static_cast<std::size_t>(b)]));
            it = by_tgt[static_cast<std::size_t>(j)].find(source_j(c, j));
            if (it != by_tgt[static_cast<std::size_t>(j)].end())
                for (int a : it->second) out.push_back(nu_compose(j, cells[static_cast<std::size_t>(a)], c));
        }
    }
};

std::vector<NuCell> seeds(const Complex& k, const CellSet& s, int d) {
    std::vector<NuCell> out;
    if (d > 0)
        for (const auto& c : s.by_dim[static_cast<std::size_t>(d) - 1]) out.push_back(nu_identity(c));
    for (int i = 0; i < k.size(d); ++i) {
        Atom a = atom(k, d, i);
        if (a.valid) out.push_back(NuCell{std::move(a.rows)});
    }
    return out;
}

template <class Step>
CellSet run_closure(const Complex& k, int max_dim, std::size_t ceiling, Step step) {
    CellSet s;
    for (int d = 0; d <= max_dim; ++d) {
        Closure cl(d, ceiling);
        for (auto& c : seeds(k, s, d)) cl.insert(std::move(c));
        step(cl);
        auto cells = std::move(cl.cells);
        std::sort(cells.begin(), cells.end());
        s.by_dim.push_back(std::move(cells));
    }
    return s;
}

}  // namespace

CellSet enumerate_cells_serial(const Complex& k, int max_dim, std::size_t ceiling) {
    return run_closure(k, max_dim, ceiling, [](Closure& cl) {
        std::vector<NuCell> found;
        for (std::size_t q = 0; q < cl.cells.size(); ++q) {
            found.clear();
            cl.partners(cl.cells[q], found);
            for (auto& c : found) cl.insert(std::move(c));
        }
    });
}

CellSet enumerate_cells(const Complex& k, int max_dim, std::size_t ceiling) {
    return run_closure(k, max_dim, ceiling, [](Closure& cl) {
        std::size_t lo = 0;
        while (lo < cl.cells.size()) {
            std::size_t hi = cl.cells.size();
            int nt = omp_get_max_threads();
            std::vector<std::vector<NuCell>> found(static_cast<std::size_t>(nt));
#pragma omp parallel for schedule(dynamic, 16)
            for (std::size_t q = lo; q < hi; ++q)
                cl.partners(cl.cells[q], found[static_cast<std::size_t>(omp_get_thread_num())]);
            for (auto& part : found)
                for (auto& c : part) cl.insert(std::move(c));
            lo = hi;
        }
    });
}

namespace {

struct Vectors {
    // nonnegative vectors per degree grouped by boundary (augmentation in degree 0)
    std::vector<std::map<Chain, std::vector<Chain>>> by_boundary;
    std::vector<Chain> unit0;
};

Vectors all_vectors(const Complex& k, int max_dim, i64 bound) {
    Vectors v;
    for (int d = 0; d <= max_dim; ++d) {
        std::map<Chain, std::vector<Chain>> m;
        int n = k.size(d);
        double space = 1;
        for (int i = 0; i < n; ++i) space *= static_cast<double>(bound + 1);
        if (space > 2e7) throw std::runtime_error("table search space too large in degree " + std::to_string(d));
        std::vector<i64> c(static_cast<std::size_t>(n), 0);
        while (true) {
            Chain x;
            for (int i = 0; i < n; ++i)
                if (c[static_cast<std::size_t>(i)]) x.t.emplace_back(i, c[static_cast<std::size_t>(i)]);
            if (d == 0) {
                if (k.augment(x) == 1) v.unit0.push_back(x);
            } else {
                m[k.boundary(d, x)].push_back(x);
            }
            int i = 0;
            while (i < n && c[static_cast<std::size_t>(i)] == bound) c[static_cast<std::size_t>(i++)] = 0;
            if (i == n) break;
            ++c[static_cast<std::size_t>(i)];
        }
        v.by_boundary.push_back(std::move(m));
    }
    return v;
}

const std::vector<Chain>& with_boundary(const Vectors& v, int d, const Chain& b) {
    static const std::vector<Chain> none;
    const auto& m = v.by_boundary[static_cast<std::size_t>(d)];
    auto it = m.find(b);
    return it == m.end() ? none : it->second;
}

// extend rows 0..r-1 to every valid table of dimension i
void extend(const Vectors& v, NuCell& c, int i, std::vector<NuCell>& out) {
    int r = static_cast<int>(c.rows.size());
    const Row& prev = c.rows.back();
    const auto& opts = with_boundary(v, r, prev.second - prev.first);
    if (r == i) {
        for (const auto& x : opts) {
            c.rows.emplace_back(x, x);
            out.push_back(c);
            c.rows.pop_back();
        }
        return;
    }
    for (const auto& a : opts)
        for (const auto& b : opts) {
            c.rows.emplace_back(a, b);
            extend(v, c, i, out);
            c.rows.pop_back();
        }
}

template <bool Parallel>
CellSet search(const Complex& k, int max_dim, i64 bound) {
    Vectors v = all_vectors(k, max_dim, bound);
    CellSet s;
    for (int i = 0; i <= max_dim; ++i) {
        std::vector<NuCell> cells;
        if (i == 0) {
            for (const auto& x : v.unit0) cells.push_back(NuCell{{{x, x}}});
        } else {
            std::vector<Row> starts;
            for (const auto& a : v.unit0)
                for (const auto& b : v.unit0) starts.emplace_back(a, b);
            std::vector<std::vector<NuCell>> parts(starts.size());
#pragma omp parallel for schedule(dynamic) if (Parallel)
            for (std::size_t q = 0; q < starts.size(); ++q) {
                NuCell c{{starts[q]}};
                extend(v, c, i, parts[q]);
            }
            for (auto& p : parts) cells.insert(cells.end(), p.begin(), p.end());
        }
        std::sort(cells.begin(), cells.end());
        s.by_dim.push_back(std::move(cells));
    }
    return s;
}

}  // namespace

CellSet table_search(const Complex& k, int max_dim, i64 bound) { return search<true>(k, max_dim, bound); }
CellSet table_search_serial(const Complex& k, int max_dim, i64 bound) { return search<false>(k, max_dim, bound); }

NuCell apply(const Morph& f, const NuCell& c) {
    NuCell r;
    for (std::size_t k = 0; k < c.rows.size(); ++k)
        r.rows.emplace_back(f.apply(static_cast<int>(k), c.rows[k].first), f.apply(static_cast<int>(k), c.rows[k].second));
    return r;
}

FunctorReport check_functor(const Complex& src, const CellSet& cells, const Complex& tgt, const CellMap& f) {
    FunctorReport rep;
    auto fail = [&](const std::string& what, const NuCell& c) {
        rep.ok = false;
        if (rep.violations.size() < 20) rep.violations.push_back(what + " at " + format_cell(src, c));
    };
    std::unordered_map<NuCell, NuCell, NuCellHash> img;
    for (const auto& layer : cells.by_dim)
        for (const auto& c : layer) {
            NuCell y = f(c);
            ++rep.cells;
            if (y.dim() != c.dim()) {
                fail("dimension changed", c);
                continue;
            }
            if (auto why = validate(tgt, y); !why.empty()) fail("image invalid (" + why + ")", c);
            img.emplace(c, std::move(y));
        }
    auto image = [&](const NuCell& c) {
        auto it = img.find(c);
        return it != img.end() ? it->second : f(c);
    };
    for (const auto& layer : cells.by_dim)
        for (const auto& c : layer) {
            const NuCell& y = img.at(c);
            if (c.dim() >= 1) {
                if (image(nu_source(c)) != nu_source(y)) fail("source not preserved", c);
                if (image(nu_target(c)) != nu_target(y)) fail("target not preserved", c);
            }
            if (image(nu_identity(c)) != nu_identity(y)) fail("identity not preserved", c);
        }
    for (int d = 1; d <= cells.max_dim(); ++d) {
        const auto& layer = cells.by_dim[static_cast<std::size_t>(d)];
        for (int j = 0; j < d; ++j) {
            Index by_src;
            for (std::size_t q = 0; q < layer.size(); ++q) by_src[source_j(layer[q], j)].push_back(static_cast<int>(q));
            for (const auto& a : layer) {
                auto it = by_src.find(target_j(a, j));
                if (it == by_src.end()) continue;
                for (int b : it->second) {
                    const NuCell& bc = layer[static_cast<std::size_t>(b)];
                    ++rep.compositions;
                    NuCell lhs = image(nu_compose(j, a, bc));
                    const NuCell& fa = img.at(a);
                    const NuCell& fb = img.at(bc);
                    if (!composable(j, fa, fb) || lhs != nu_compose(j, fa, fb)) fail("composition not preserved at level " + std::to_string(j), a);
                }
            }
        }
    }
    return rep;
}

FunctorReport check_functor(const Morph& f, int max_dim) {
    CellSet cells = enumerate_cells(*f.src, max_dim);
    return check_functor(*f.src, cells, *f.tgt, [&f](const NuCell& c) { return apply(f, c); });
}

std::size_t ProductView::count(int d) const {
    std::size_t n = 1;
    for (const auto& s : sets) n *= s.by_dim[static_cast<std::size_t>(d)].size();
    return n;
}

bool ProductView::contains(const std::vector<NuCell>& cell) const {
    if (cell.size() != factors.size()) return false;
    for (std::size_t i = 0; i < cell.size(); ++i)
        if (!validate(*factors[i], cell[i]).empty()) return false;
    return std::all_of(cell.begin(), cell.end(), [&](const NuCell& c) { return c.dim() == cell[0].dim(); });
}

ProductView product_view(std::vector<CPtr> factors, int max_dim) {
    ProductView v;
    for (const auto& f : factors) v.sets.push_back(enumerate_cells(*f, max_dim));
    v.factors = std::move(factors);
    return v;
}

std::string format_cell(const Complex& k, const NuCell& c) {
    std::string out = "[";
    for (std::size_t r = 0; r < c.rows.size(); ++r) {
        if (r) out += "; ";
        int deg = static_cast<int>(r);
        out += k.format(deg, c.rows[r].first) + " | " + k.format(deg, c.rows[r].second);
    }
    return out + "]";
}

namespace {

nlohmann::json entry_json(const Complex& k, int deg, const Chain& x) {
    nlohmann::json j = nlohmann::json::object();
    for (const auto& [g, c] : x.t) j[k.name(deg, g)] = c;
    return j;
}

}  // namespace

std::string cells_json(const Complex& k, const CellSet& s) {
    nlohmann::json j;
    j["totals"] = s.totals();
    j["nondegenerate"] = s.nondegenerate();
    j["cells"] = nlohmann::json::array();
    for (const auto& layer : s.by_dim)
        for (const auto& c : layer) {
            nlohmann::json t = nlohmann::json::array();
            for (std::size_t r = 0; r < c.rows.size(); ++r)
                t.push_back({entry_json(k, static_cast<int>(r), c.rows[r].first), entry_json(k, static_cast<int>(r), c.rows[r].second)});
            j["cells"].push_back(t);
        }
    return j.dump(2);
}

namespace {

std::string quote(const std::string& s) {
    std::string r = "\"";
    for (char ch : s) {
        if (ch == '"' || ch == '\\') r += '\\';
        r += ch;
    }
    return r + "\"";
}

}  // namespace

std::string cells_dot(const Complex& k, const CellSet& s) {
    std::ostringstream out;
    out << "digraph nu {\n  rankdir=LR;\n";
    if (s.max_dim() >= 0)
        for (const auto& c : s.by_dim[0]) out << "  " << quote(format_cell(k, c)) << " [label=" << quote(k.format(0, c.rows[0].first)) << "];\n";
    if (s.max_dim() >= 1)
        for (const auto& c : s.by_dim[1]) {
            if (is_degenerate(c)) continue;
            out << "  " << quote(format_cell(k, source_j(c, 0))) << " -> " << quote(format_cell(k, target_j(c, 0)))
                << " [label=" << quote(k.format(1, c.rows[1].first)) << "];\n";
        }
    if (s.max_dim() >= 2) {
        int n = 0;
        for (const auto& c : s.by_dim[2]) {
            if (is_degenerate(c)) continue;
            std::string id = "cell2_" + std::to_string(n++);
            out << "  " << id << " [shape=box,style=dashed,label=" << quote(k.format(2, c.rows[2].first)) << "];\n";
            out << "  " << quote(format_cell(k, source_j(c, 0))) << " -> " << id << " [style=dashed,arrowhead=none];\n";
            out << "  " << id << " -> " << quote(format_cell(k, target_j(c, 0))) << " [style=dashed];\n";
        }
    }
    out << "}\n";
    return out.str();
}

}  // namespace gcyl
