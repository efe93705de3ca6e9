#pragma once

#include <string>
#include <vector>

namespace mixvol {

// Subset of the coordinate set {0,...,ground-1} (0-based internally;
// rendered 1-based in all textual forms, matching the usual {1,...,n}).
struct CoordinateSubset {
  int ground = 0;
  std::vector<int> members;  // sorted, unique, in [0, ground)

  static CoordinateSubset of(int ground, std::vector<int> members);
  static CoordinateSubset full(int ground);
  static CoordinateSubset empty(int ground);

  CoordinateSubset complement() const;
  bool contains(int i) const;
  int size() const { return static_cast<int>(members.size()); }
  std::string to_text() const;  // "1,3" (1-based), "-" for the empty set

  friend bool operator==(const CoordinateSubset& a, const CoordinateSubset& b) {
    return a.ground == b.ground && a.members == b.members;
  }
};

// Ordered tuple of blocks covering each element exactly `multiplicity`
// times. Blocks are labeled (no quotient by permutations); empty blocks are
// allowed.
struct UniformCover {
  int ground = 0;        // n
  int multiplicity = 0;  // p
  std::vector<CoordinateSubset> blocks;

  bool valid() const;
  std::string to_text() const;  // blocks joined by '/', e.g. "1,2/2/1"

  friend bool operator==(const UniformCover& a, const UniformCover& b) {
    return a.ground == b.ground && a.multiplicity == b.multiplicity && a.blocks == b.blocks;
  }
};

// All p-uniform covers with p+1 blocks of the prescribed sizes, enumerated
// as assignments of each element to its unique missing block. Infeasible
// sizes give an empty list; sizes.size() != p+1 is an error.
std::vector<UniformCover> enumerate_covers(int n, int p, const std::vector<int>& sizes);

// For (p+1)-block covers: the complement blocks, in block order (empty
// complements kept). For general covers: the nonempty membership-pattern
// cells, ordered by smallest element.
UniformCover induced_one_cover(const UniformCover& cover);

// Inverse of UniformCover::to_text: blocks joined by '/', members 1-based
// comma lists, "-" for an empty block. Throws on malformed text; validity
// as a cover is the caller's concern.
UniformCover cover_from_text(int ground, int multiplicity, const std::string& text);

// Sum_k C(pn,k) C(n,k) = C(pn+n, n).
bool vandermonde_check_1(int n, int p);

// Sum over k_1+...+k_p = k of prod C(n,k_i) = C(pn, k).
bool vandermonde_check_2(int n, int p, int k);

}  // namespace mixvol
