#pragma once

#include <vector>

#include "gcyl/chain.hpp"

namespace gcyl {

using Vec = std::vector<i64>;
using Mat = std::vector<Vec>;

// integer row echelon form with positive pivots and zero rows removed
Mat echelon(Mat rows);
int rank(const Mat& m);
bool in_span(const Mat& ech, Vec v);
bool same_span(const Mat& a, const Mat& b);
Mat intersect(const Mat& a, const Mat& b);

}  // namespace gcyl
