#include "mixvol/combinatorics.hpp"

#include <numeric>
#include <stdexcept>

namespace mixvol {

Integer factorial(int n) {
  if (n < 0) throw std::invalid_argument("factorial: negative argument");
  Integer f(1);
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

Integer binomial(int n, int k) {
  if (k < 0 || k > n || n < 0) return Integer(0);
  k = std::min(k, n - k);
  Integer num(1);
  for (int i = 0; i < k; ++i) num *= (n - i);
  return num / factorial(k);
}

Integer multinomial(int n, const std::vector<int>& parts) {
  int sum = 0;
  for (int p : parts) {
    if (p < 0) throw std::invalid_argument("multinomial: negative part");
    sum += p;
  }
  if (sum != n) throw std::invalid_argument("multinomial: parts do not sum to n");
  Integer result = factorial(n);
  for (int p : parts) result /= factorial(p);
  return result;
}

std::vector<std::vector<int>> compositions(int total, int parts, int max_per_part) {
  std::vector<std::vector<int>> out;
  if (total < 0 || parts < 0) return out;
  if (parts == 0) {
    if (total == 0) out.push_back({});
    return out;
  }
  std::vector<int> current(parts, 0);
  // Depth-first in lexicographic order.
  auto rec = [&](auto&& self, int pos, int remaining) -> void {
    if (pos == parts - 1) {
      if (remaining <= max_per_part) {
        current[pos] = remaining;
        out.push_back(current);
      }
      return;
    }
    for (int v = 0; v <= std::min(remaining, max_per_part); ++v) {
      current[pos] = v;
      self(self, pos + 1, remaining - v);
    }
  };
  rec(rec, 0, total);
  return out;
}

}  // namespace mixvol
