#pragma once

#include <cstdint>
#include <vector>

namespace localelab {

// A poset on 0..n-1 given by its full order relation.
struct Poset {
  int n = 0;
  std::vector<std::uint8_t> leq;  // n x n, row-major
  bool leq_at(int i, int j) const { return leq[i * n + j] != 0; }
};

// 64-bit encoding of the relation under the vertex relabeling that minimizes
// it; equal codes <=> isomorphic posets (n <= 8).
std::uint64_t poset_canonical_code(const Poset& p);

// All posets on exactly n elements, one per isomorphism class, n <= 8.
std::vector<Poset> posets_of_size(int n);

// Sizes 0..max_n inclusive.
std::vector<Poset> posets_up_to(int max_n);

}  // namespace localelab
