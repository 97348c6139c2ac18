#include "gcyl/pr.hpp"

#include <algorithm>
#include <stdexcept>

#include "gcyl/dac.hpp"

namespace gcyl {

PRExpr PRExpr::interval(int a, int b) {
    if (a > b) throw std::invalid_argument("interval with a > b");
    PRExpr e;
    e.kind = Kind::interval;
    e.lo = a;
    e.hi = b;
    return e;
}

PRExpr PRExpr::of_cell(Cell c) {
    if (c.width() == 0) return point();
    PRExpr e;
    e.kind = Kind::cell;
    e.cell = std::move(c);
    return e;
}

PRExpr PRExpr::product(std::vector<PRExpr> fs) {
    std::vector<PRExpr> keep;
    for (auto& f : fs) {
        if (f.kind == Kind::empty) return empty();
        if (f.kind == Kind::point) continue;
        if (f.kind == Kind::product) {
            for (auto& g : f.factors) keep.push_back(std::move(g));
            continue;
        }
        keep.push_back(std::move(f));
    }
    if (keep.empty()) return point();
    if (keep.size() == 1) return std::move(keep[0]);
    PRExpr e;
    e.kind = Kind::product;
    e.factors = std::move(keep);
    return e;
}

PRExpr PRExpr::pr(std::vector<Cell> cs) {
    if (cs.empty()) return point();
    PRExpr e;
    e.kind = Kind::pr;
    e.cells = std::move(cs);
    return e;
}

std::string to_string(const PRExpr& e) {
    switch (e.kind) {
    case PRExpr::Kind::empty: return "empty";
    case PRExpr::Kind::point: return "pt";
    case PRExpr::Kind::interval: return "[" + std::to_string(e.lo) + "," + std::to_string(e.hi) + "]";
    case PRExpr::Kind::cell: return to_string(e.cell);
    case PRExpr::Kind::product: {
        std::string out;
        for (const auto& f : e.factors) out += (out.empty() ? "" : " * ") + to_string(f);
        return out;
    }
    case PRExpr::Kind::pr: {
        std::string out = "PR(";
        for (std::size_t i = 0; i < e.cells.size(); ++i) out += (i ? "," : "") + to_string(e.cells[i]);
        return out + ")";
    }
    }
    return {};
}

std::string to_string(const PRObject& o) {
    std::string out = "(" + std::to_string(o.level);
    for (int c : o.coords) out += "," + std::to_string(c);
    return out + ")";
}

std::vector<PRObject> pr_objects(const std::vector<Cell>& cells) {
    std::vector<PRObject> out;
    int n = static_cast<int>(cells.size());
    std::vector<int> z(cells.size(), 0);
    for (int x = 0; x <= n; ++x) {
        std::fill(z.begin(), z.end(), 0);
        while (true) {
            out.push_back(PRObject{x, z});
            std::size_t i = 0;
            while (i < z.size() && z[i] == cells[i].width()) z[i++] = 0;
            if (i == z.size()) break;
            ++z[i];
        }
    }
    return out;
}

PRExpr pr_hom(const std::vector<Cell>& cells, const PRObject& src, const PRObject& tgt) {
    int n = static_cast<int>(cells.size());
    if (src.level > tgt.level) return PRExpr::empty();
    for (int i = 0; i < n; ++i)
        if (src.coords[static_cast<std::size_t>(i)] > tgt.coords[static_cast<std::size_t>(i)]) return PRExpr::empty();
    auto children = [&](int a) {
        std::vector<Cell> r;
        const Cell& s = cells[static_cast<std::size_t>(a - 1)];
        for (int q = src.coords[static_cast<std::size_t>(a - 1)] + 1; q <= tgt.coords[static_cast<std::size_t>(a - 1)]; ++q)
            r.push_back(s.ch[static_cast<std::size_t>(q - 1)]);
        return r;
    };
    std::vector<PRExpr> fs;
    for (int a = 1; a <= src.level; ++a)
        for (auto& c : children(a)) fs.push_back(PRExpr::of_cell(std::move(c)));
    std::vector<Cell> family;
    for (int b = src.level + 1; b <= tgt.level; ++b)
        for (auto& c : children(b)) family.push_back(std::move(c));
    bool flat = std::all_of(family.begin(), family.end(), [](const Cell& c) { return c.width() == 0; });
    if (flat && tgt.level == src.level + 1 && !family.empty()) {
        int b = tgt.level - 1;
        fs.push_back(PRExpr::interval(src.coords[static_cast<std::size_t>(b)], tgt.coords[static_cast<std::size_t>(b)]));
    } else {
        fs.push_back(PRExpr::pr(std::move(family)));
    }
    for (int c = tgt.level + 1; c <= n; ++c)
        for (auto& ch : children(c)) fs.push_back(PRExpr::of_cell(std::move(ch)));
    return PRExpr::product(std::move(fs));
}

i64 PRCounter::cell(const Cell& t, int dim) {
    if (dim == 0) return t.width() + 1;
    auto key = std::make_pair("C" + to_string(t), dim);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    i64 total = 0;
    for (int z = 0; z <= t.width(); ++z)
        for (int w = z; w <= t.width(); ++w) {
            i64 p = 1;
            for (int q = z + 1; q <= w; ++q) p = checked_mul(p, cell(t.ch[static_cast<std::size_t>(q - 1)], dim - 1));
            total = checked_add(total, p);
        }
    memo_[key] = total;
    return total;
}

i64 PRCounter::pr(const std::vector<Cell>& cells, int dim) {
    if (cells.empty()) return 1;
    if (dim == 0) {
        i64 n = static_cast<i64>(cells.size()) + 1;
        for (const auto& c : cells) n = checked_mul(n, c.width() + 1);
        return n;
    }
    auto key = std::make_pair(to_string(PRExpr::pr(cells)), dim);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    i64 total = restricted(cells, [](const PRObject&) { return true; }, dim);
    memo_[key] = total;
    return total;
}

i64 PRCounter::restricted(const std::vector<Cell>& cells, const std::function<bool(const PRObject&)>& keep, int dim) {
    std::vector<PRObject> obs;
    for (auto& o : pr_objects(cells))
        if (keep(o)) obs.push_back(std::move(o));
    if (dim == 0) return static_cast<i64>(obs.size());
    i64 total = 0;
    for (const auto& a : obs)
        for (const auto& b : obs) total = checked_add(total, count(pr_hom(cells, a, b), dim - 1));
    return total;
}

i64 PRCounter::count(const PRExpr& e, int dim) {
    switch (e.kind) {
    case PRExpr::Kind::empty: return 0;
    case PRExpr::Kind::point: return 1;
    case PRExpr::Kind::interval: return cell(simplex(e.hi - e.lo), dim);
    case PRExpr::Kind::cell: return cell(e.cell, dim);
    case PRExpr::Kind::product: {
        i64 p = 1;
        for (const auto& f : e.factors) p = checked_mul(p, count(f, dim));
        return p;
    }
    case PRExpr::Kind::pr: return pr(e.cells, dim);
    }
    return 0;
}

i64 pr_count(const std::vector<Cell>& cells, int dim) {
    PRCounter c;
    return c.pr(cells, dim);
}

std::vector<i64> pr_counts(const std::vector<Cell>& cells, int max_dim) {
    PRCounter c;
    std::vector<i64> out;
    for (int d = 0; d <= max_dim; ++d) out.push_back(c.pr(cells, d));
    return out;
}

ConcatReport check_concatenation(const std::vector<Cell>& a, const std::vector<Cell>& b, int max_dim) {
    ConcatReport rep;
    std::vector<Cell> ab = a;
    ab.insert(ab.end(), b.begin(), b.end());
    int n = static_cast<int>(a.size());
    std::vector<PRExpr> prod_a, prod_b;
    for (const auto& c : a) prod_a.push_back(PRExpr::of_cell(c));
    for (const auto& c : b) prod_b.push_back(PRExpr::of_cell(c));
    std::vector<PRExpr> left{PRExpr::pr(a)}, right = prod_a, mid = prod_a;
    left.insert(left.end(), prod_b.begin(), prod_b.end());
    right.push_back(PRExpr::pr(b));
    mid.insert(mid.end(), prod_b.begin(), prod_b.end());
    PRExpr l = PRExpr::product(left), r = PRExpr::product(right), m = PRExpr::product(mid);
    if (a.empty()) l = m;
    if (b.empty()) r = m;
    PRCounter c;
    for (int d = 0; d <= max_dim; ++d) {
        i64 lo = c.restricted(ab, [n](const PRObject& o) { return o.level <= n; }, d);
        i64 hi = c.restricted(ab, [n](const PRObject& o) { return o.level >= n; }, d);
        i64 both = c.restricted(ab, [n](const PRObject& o) { return o.level == n; }, d);
        auto note = [&](const std::string& what, i64 got, i64 want) {
            if (got == want) return;
            rep.ok = false;
            rep.failures.push_back(what + " in dimension " + std::to_string(d) + ": " + std::to_string(got) + " vs " + std::to_string(want));
        };
        note("left half", lo, c.count(l, d));
        note("right half", hi, c.count(r, d));
        note("overlap", both, c.count(m, d));
        if (d == 0) note("objects", c.pr(ab, 0), lo + hi - both);
    }
    return rep;
}

namespace {

bool flat_children(const Cell& t) {
    return std::all_of(t.ch.begin(), t.ch.end(), [](const Cell& c) {
        return std::all_of(c.ch.begin(), c.ch.end(), [](const Cell& g) { return g.width() == 0; });
    });
}

// f restricted to [i-1, i], evaluated at level p
int clamp_level(const SimplicialMap& f, int i, int p) { return p < i ? f(i - 1) : f(i); }

}  // namespace

PRObject concatenate(const std::vector<PRObject>& parts, const std::vector<std::vector<Cell>>& families, int start) {
    PRObject o;
    bool found = false;
    int lo = start;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        int top = lo + static_cast<int>(families[i].size());
        int p = parts[i].level;
        if (p < lo || p > top) throw std::invalid_argument("level outside its segment");
        if (!found && p < top) {
            o.level = p;
            found = true;
        } else if (found && p != lo) {
            throw std::invalid_argument("inconsistent levels");
        }
        o.coords.insert(o.coords.end(), parts[i].coords.begin(), parts[i].coords.end());
        lo = top;
    }
    if (!found) o.level = lo;
    return o;
}

PRMorphism pr_morphism(const Morphism& f, int x, int z) {
    if (!flat_children(f.src) || !flat_children(f.tgt)) throw std::invalid_argument("pr_morphism needs simplices as children");
    if (x < 0 || x > z || z > f.src.width()) throw std::invalid_argument("segment range out of bounds");
    PRMorphism m;
    m.x = x;
    m.z = z;
    for (int i = x + 1; i <= z; ++i) {
        m.src_cells.push_back(f.src.ch[static_cast<std::size_t>(i - 1)]);
        std::vector<Cell> fam;
        for (int j = f.base(i - 1) + 1; j <= f.base(i); ++j) fam.push_back(f.tgt.ch[static_cast<std::size_t>(j - 1)]);
        m.tgt_families.push_back(std::move(fam));
    }
    auto image = [&](const PRObject& o) {
        std::vector<PRObject> out;
        for (int i = x + 1; i <= z; ++i) {
            PRObject part{clamp_level(f.base, i, o.level), {}};
            for (int j = f.base(i - 1) + 1; j <= f.base(i); ++j)
                part.coords.push_back(f.at(i, j).base(o.coords[static_cast<std::size_t>(i - x - 1)]));
            out.push_back(std::move(part));
        }
        return out;
    };
    auto objs = pr_objects(m.src_cells);
    for (auto& o : objs) o.level += x;
    for (const auto& o : objs) m.objects.emplace_back(o, image(o));

    for (const auto& s : objs)
        for (const auto& t : objs) {
            bool ok = s.level <= t.level;
            for (std::size_t i = 0; i < s.coords.size(); ++i) ok = ok && s.coords[i] <= t.coords[i];
            if (!ok) continue;
            PRHomMap h{s, t, {}, {}, {}};
            std::vector<PRExpr> sf, tf;
            for (int i = x + 1; i <= z; ++i) {
                int a = s.coords[static_cast<std::size_t>(i - x - 1)];
                int c = t.coords[static_cast<std::size_t>(i - x - 1)];
                bool inside = s.level < i && i <= t.level;
                sf.push_back(inside ? PRExpr::interval(a, c) : PRExpr::point());
                int fb = clamp_level(f.base, i, s.level);
                int fd = clamp_level(f.base, i, t.level);
                for (int j = f.base(i - 1) + 1; j <= f.base(i); ++j) {
                    const SimplicialMap& g = f.at(i, j).base;
                    bool tin = fb < j && j <= fd;
                    tf.push_back(tin ? PRExpr::interval(g(a), g(c)) : PRExpr::point());
                    IntervalMap im{inside ? a : 0, inside ? c : 0, tin ? g(a) : 0, tin ? g(c) : 0, {}};
                    if (inside)
                        for (int v = a; v <= c; ++v) im.img.push_back(tin ? g(v) : 0);
                    else
                        im.img.push_back(0);
                    h.factors.push_back(std::move(im));
                }
            }
            h.src_hom = PRExpr::product(sf);
            h.tgt_hom = PRExpr::product(tf);
            m.homs.push_back(std::move(h));
        }
    return m;
}

}  // namespace gcyl
