#include "gcyl/lattice.hpp"

#include <algorithm>
#include <cstdlib>

namespace gcyl {

namespace {

void axpy(Vec& y, i64 a, const Vec& x) {
    for (std::size_t i = 0; i < y.size(); ++i) y[i] = checked_add(y[i], checked_mul(a, x[i]));
}

}  // namespace

Mat echelon(Mat rows) {
    if (rows.empty()) return rows;
    std::size_t cols = rows[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
        while (true) {
            std::size_t piv = rows.size();
            for (std::size_t i = r; i < rows.size(); ++i)
                if (rows[i][c] && (piv == rows.size() || std::llabs(rows[i][c]) < std::llabs(rows[piv][c]))) piv = i;
            if (piv == rows.size()) break;
            std::swap(rows[r], rows[piv]);
            bool done = true;
            for (std::size_t i = r + 1; i < rows.size(); ++i) {
                if (!rows[i][c]) continue;
                axpy(rows[i], -(rows[i][c] / rows[r][c]), rows[r]);
                if (rows[i][c]) done = false;
            }
            if (done) {
                if (rows[r][c] < 0)
                    for (auto& x : rows[r]) x = -x;
                ++r;
                break;
            }
        }
    }
    rows.resize(r);
    return rows;
}

int rank(const Mat& m) { return static_cast<int>(echelon(m).size()); }

bool in_span(const Mat& ech, Vec v) {
    for (const auto& row : ech) {
        std::size_t c = 0;
        while (!row[c]) ++c;
        if (v[c] % row[c]) return false;
        axpy(v, -(v[c] / row[c]), row);
    }
    return std::all_of(v.begin(), v.end(), [](i64 x) { return x == 0; });
}

bool same_span(const Mat& a, const Mat& b) {
    Mat ea = echelon(a), eb = echelon(b);
    for (const auto& v : b)
        if (!in_span(ea, v)) return false;
    for (const auto& v : a)
        if (!in_span(eb, v)) return false;
    return true;
}

Mat intersect(const Mat& a, const Mat& b) {
    if (a.empty() || b.empty()) return {};
    std::size_t n = a[0].size();
    Mat big;
    for (const auto& v : a) {
        Vec w = v;
        w.insert(w.end(), v.begin(), v.end());
        big.push_back(std::move(w));
    }
    for (const auto& v : b) {
        Vec w = v;
        w.resize(2 * n, 0);
        big.push_back(std::move(w));
    }
    Mat out;
    for (const auto& row : echelon(std::move(big)))
        if (std::all_of(row.begin(), row.begin() + static_cast<long>(n), [](i64 x) { return x == 0; }))
            out.emplace_back(row.begin() + static_cast<long>(n), row.end());
    return out;
}

}  // namespace gcyl
