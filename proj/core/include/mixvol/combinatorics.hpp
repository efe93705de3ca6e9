#pragma once

#include "mixvol/rational.hpp"

#include <vector>

namespace mixvol {

Integer factorial(int n);

// 0 outside the Pascal triangle.
Integer binomial(int n, int k);

// n! / (parts[0]! * ... ); parts must be nonnegative and sum to n.
Integer multinomial(int n, const std::vector<int>& parts);

// All (k_1,...,k_parts) with 0 <= k_i <= max_per_part and sum k_i = total,
// in lexicographic order.
std::vector<std::vector<int>> compositions(int total, int parts, int max_per_part);

}  // namespace mixvol
