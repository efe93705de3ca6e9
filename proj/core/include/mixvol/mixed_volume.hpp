#pragma once

#include "mixvol/covers.hpp"
#include "mixvol/polytope.hpp"
#include "mixvol/rational.hpp"
#include "mixvol/report.hpp"

#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace mixvol {

// Memoizes exact volumes of candidate point sets (typically Minkowski-sum
// vertex lists) keyed by their canonical serialization. Shareable across
// threads.
class VolumeCache {
 public:
  std::optional<Rational> lookup(const std::string& key) const;
  void store(const std::string& key, const Rational& value);
  std::size_t size() const;

 private:
  mutable std::mutex mutex_;
  std::map<std::string, Rational> values_;
};

// volume_of_points with memoization; cache may be null.
Rational cached_volume_of_points(int ambient_dim, std::vector<Point> points, VolumeCache* cache);

// Multiset of bodies with multiplicities summing to the ambient dimension.
// Equal bodies are merged on construction.
struct MixedVolumeQuery {
  int ambient_dim = 0;
  std::vector<std::pair<VPolytope, int>> entries;

  static MixedVolumeQuery of(int ambient_dim, std::vector<std::pair<VPolytope, int>> entries);
};

// Exact mixed volume by polarization over multi-subsets:
// V = (1/N!) sum_{0 <= j <= mult, j != 0} (-1)^{N-|j|} prod C(mult_t, j_t)
//     vol(sum_t j_t K_t).
Rational mixed_volume(const MixedVolumeQuery& query, VolumeCache* cache = nullptr);

// Independent oracle: interpolates the volume polynomial
// vol(l_1 K_1 + ... + l_m K_m) on the homogeneous exponent grid and reads
// off the mixed coefficient. Intended for small N.
Rational mixed_volume_interpolation(const MixedVolumeQuery& query, VolumeCache* cache = nullptr);

// The exact-sequence product identity for coordinate splits: with
// W1 = E_sigma inside R^n and quotient W3 = E_{sigma^c},
//   C(n,k) V(K_1,...,K_{n-k}, f(L_1),...,f(L_k))
//     = V(g(K_1),...,g(K_{n-k})) * V(L_1,...,L_k).
// bodies_w2 live in R^n, bodies_w1 in R^k with coordinates indexed by
// sigma in sorted order.
VerificationReport lemma_exact_sequence_check(const CoordinateSubset& sigma,
                                              const std::vector<VPolytope>& bodies_w2,
                                              const std::vector<VPolytope>& bodies_w1,
                                              VolumeCache* cache = nullptr);

}  // namespace mixvol
