#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace gcyl {

using i64 = std::int64_t;

inline i64 checked_add(i64 a, i64 b) {
    i64 r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("integer overflow");
    return r;
}

inline i64 checked_mul(i64 a, i64 b) {
    i64 r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("integer overflow");
    return r;
}

// sparse integer combination of generators of one degree, sorted by index, no zero terms
struct Chain {
    std::vector<std::pair<int, i64>> t;

    Chain() = default;
    static Chain gen(int i, i64 c = 1) {
        Chain x;
        if (c) x.t.emplace_back(i, c);
        return x;
    }

    bool empty() const { return t.empty(); }
    i64 coeff(int i) const;
    bool nonnegative() const;
    i64 max_coeff() const;

    Chain& operator+=(const Chain& o);
    Chain& operator-=(const Chain& o);
    Chain operator+(const Chain& o) const { Chain r = *this; return r += o; }
    Chain operator-(const Chain& o) const { Chain r = *this; return r -= o; }
    Chain operator-() const;
    Chain scaled(i64 c) const;
    void add_term(int i, i64 c);

    Chain plus() const;
    Chain minus() const;

    bool operator==(const Chain&) const = default;
    auto operator<=>(const Chain&) const = default;
};

std::size_t hash_value(const Chain& c);

}  // namespace gcyl
