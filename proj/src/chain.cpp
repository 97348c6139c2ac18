#include "gcyl/chain.hpp"

#include <algorithm>
#include <limits>

namespace gcyl {

i64 Chain::coeff(int i) const {
    auto it = std::lower_bound(t.begin(), t.end(), std::make_pair(i, std::numeric_limits<i64>::min()));
    return (it != t.end() && it->first == i) ? it->second : 0;
}

bool Chain::nonnegative() const {
    return std::all_of(t.begin(), t.end(), [](const auto& p) { return p.second > 0; });
}

i64 Chain::max_coeff() const {
    i64 m = 0;
    for (const auto& [i, c] : t) m = std::max(m, c < 0 ? -c : c);
    return m;
}

namespace {

Chain merge(const Chain& a, const Chain& b, i64 sign) {
    Chain r;
    r.t.reserve(a.t.size() + b.t.size());
    std::size_t i = 0, j = 0;
    while (i < a.t.size() || j < b.t.size()) {
        if (j == b.t.size() || (i < a.t.size() && a.t[i].first < b.t[j].first)) {
            r.t.push_back(a.t[i++]);
        } else if (i == a.t.size() || b.t[j].first < a.t[i].first) {
            r.t.emplace_back(b.t[j].first, checked_mul(sign, b.t[j].second));
            ++j;
        } else {
            i64 c = checked_add(a.t[i].second, checked_mul(sign, b.t[j].second));
            if (c) r.t.emplace_back(a.t[i].first, c);
            ++i;
            ++j;
        }
    }
    return r;
}

}  // namespace

Chain& Chain::operator+=(const Chain& o) {
    *this = merge(*this, o, 1);
    return *this;
}

Chain& Chain::operator-=(const Chain& o) {
    *this = merge(*this, o, -1);
    return *this;
}

Chain Chain::operator-() const { return scaled(-1); }

Chain Chain::scaled(i64 c) const {
    Chain r;
    if (!c) return r;
    r.t.reserve(t.size());
    for (const auto& [i, v] : t) r.t.emplace_back(i, checked_mul(v, c));
    return r;
}

void Chain::add_term(int i, i64 c) { *this += gen(i, c); }

Chain Chain::plus() const {
    Chain r;
    for (const auto& p : t)
        if (p.second > 0) r.t.push_back(p);
    return r;
}

Chain Chain::minus() const {
    Chain r;
    for (const auto& p : t)
        if (p.second < 0) r.t.emplace_back(p.first, -p.second);
    return r;
}

std::size_t hash_value(const Chain& c) {
    std::size_t h = 0x9e3779b97f4a7c15ULL;
    for (const auto& [i, v] : c.t) {
        h ^= std::hash<i64>{}(static_cast<i64>(i) * 1000003 + v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
}

}  // namespace gcyl
