#include "mixvol/covers.hpp"

#include "mixvol/combinatorics.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace mixvol {

CoordinateSubset CoordinateSubset::of(int ground, std::vector<int> members) {
  if (ground < 0) throw std::invalid_argument("CoordinateSubset: negative ground size");
  std::sort(members.begin(), members.end());
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (members[i] < 0 || members[i] >= ground) {
      throw std::invalid_argument("CoordinateSubset: member out of range");
    }
    if (i > 0 && members[i] == members[i - 1]) {
      throw std::invalid_argument("CoordinateSubset: duplicate member");
    }
  }
  CoordinateSubset s;
  s.ground = ground;
  s.members = std::move(members);
  return s;
}

CoordinateSubset CoordinateSubset::full(int ground) {
  std::vector<int> all(ground);
  std::iota(all.begin(), all.end(), 0);
  return of(ground, std::move(all));
}

CoordinateSubset CoordinateSubset::empty(int ground) { return of(ground, {}); }

CoordinateSubset CoordinateSubset::complement() const {
  std::vector<int> rest;
  for (int i = 0; i < ground; ++i) {
    if (!contains(i)) rest.push_back(i);
  }
  return of(ground, std::move(rest));
}

bool CoordinateSubset::contains(int i) const {
  return std::binary_search(members.begin(), members.end(), i);
}

std::string CoordinateSubset::to_text() const {
  if (members.empty()) return "-";
  std::string out;
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (i != 0) out += ',';
    out += std::to_string(members[i] + 1);
  }
  return out;
}

bool UniformCover::valid() const {
  if (ground < 0 || multiplicity < 1) return false;
  std::vector<int> count(ground, 0);
  for (const CoordinateSubset& b : blocks) {
    if (b.ground != ground) return false;
    for (int i : b.members) ++count[i];
  }
  for (int c : count) {
    if (c != multiplicity) return false;
  }
  return true;
}

std::string UniformCover::to_text() const {
  std::string out;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (i != 0) out += '/';
    out += blocks[i].to_text();
  }
  return out;
}

std::vector<UniformCover> enumerate_covers(int n, int p, const std::vector<int>& sizes) {
  if (static_cast<int>(sizes.size()) != p + 1) {
    throw std::invalid_argument("enumerate_covers: expected p+1 block sizes");
  }
  std::vector<UniformCover> out;
  // missing[i] = number of elements whose unique missing block is i.
  std::vector<int> missing(p + 1);
  int total_missing = 0;
  for (int i = 0; i <= p; ++i) {
    if (sizes[i] < 0 || sizes[i] > n) return out;
    missing[i] = n - sizes[i];
    total_missing += missing[i];
  }
  if (total_missing != n) return out;

  std::vector<int> assign(n, -1);
  std::vector<int> used(p + 1, 0);
  auto rec = [&](auto&& self, int element) -> void {
    if (element == n) {
      UniformCover c;
      c.ground = n;
      c.multiplicity = p;
      for (int b = 0; b <= p; ++b) {
        std::vector<int> mem;
        for (int e = 0; e < n; ++e) {
          if (assign[e] != b) mem.push_back(e);
        }
        c.blocks.push_back(CoordinateSubset::of(n, std::move(mem)));
      }
      out.push_back(std::move(c));
      return;
    }
    for (int b = 0; b <= p; ++b) {
      if (used[b] == missing[b]) continue;
      assign[element] = b;
      ++used[b];
      self(self, element + 1);
      --used[b];
      assign[element] = -1;
    }
  };
  rec(rec, 0);
  return out;
}

UniformCover induced_one_cover(const UniformCover& cover) {
  UniformCover out;
  out.ground = cover.ground;
  out.multiplicity = 1;
  if (static_cast<int>(cover.blocks.size()) == cover.multiplicity + 1) {
    for (const CoordinateSubset& b : cover.blocks) out.blocks.push_back(b.complement());
    return out;
  }
  // General path: cells of the membership pattern, ordered by smallest
  // element.
  std::vector<std::vector<int>> ordered;
  std::map<std::vector<bool>, std::size_t> cell_index;
  for (int e = 0; e < cover.ground; ++e) {
    std::vector<bool> pattern;
    pattern.reserve(cover.blocks.size());
    for (const CoordinateSubset& b : cover.blocks) pattern.push_back(b.contains(e));
    auto it = cell_index.find(pattern);
    if (it == cell_index.end()) {
      cell_index.emplace(pattern, ordered.size());
      ordered.push_back({e});
    } else {
      ordered[it->second].push_back(e);
    }
  }
  for (std::vector<int>& cell : ordered) {
    out.blocks.push_back(CoordinateSubset::of(cover.ground, std::move(cell)));
  }
  return out;
}

UniformCover cover_from_text(int ground, int multiplicity, const std::string& text) {
  UniformCover cover;
  cover.ground = ground;
  cover.multiplicity = multiplicity;
  std::size_t pos = 0;
  while (true) {
    const std::size_t slash = text.find('/', pos);
    const std::string block_text =
        text.substr(pos, slash == std::string::npos ? std::string::npos : slash - pos);
    std::vector<int> members;
    if (block_text != "-") {
      std::size_t at = 0;
      while (at <= block_text.size()) {
        const std::size_t comma = block_text.find(',', at);
        const std::string item = block_text.substr(
            at, comma == std::string::npos ? std::string::npos : comma - at);
        if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos) {
          throw std::invalid_argument("cover_from_text: bad coordinate '" + item + "' in '" +
                                      text + "'");
        }
        members.push_back(std::stoi(item) - 1);  // 1-based in text
        if (comma == std::string::npos) break;
        at = comma + 1;
      }
    }
    cover.blocks.push_back(CoordinateSubset::of(ground, std::move(members)));
    if (slash == std::string::npos) break;
    pos = slash + 1;
  }
  return cover;
}

bool vandermonde_check_1(int n, int p) {
  Integer sum(0);
  for (int k = 0; k <= n; ++k) sum += binomial(p * n, k) * binomial(n, k);
  return sum == binomial(p * n + n, n);
}

bool vandermonde_check_2(int n, int p, int k) {
  Integer sum(0);
  for (const std::vector<int>& parts : compositions(k, p, n)) {
    Integer term(1);
    for (int ki : parts) term *= binomial(n, ki);
    sum += term;
  }
  return sum == binomial(p * n, k);
}

}  // namespace mixvol
