#include "localelab/posets.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "localelab/error.hpp"

namespace localelab {

std::uint64_t poset_canonical_code(const Poset& p) {
  const int n = p.n;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t best = ~std::uint64_t{0};
  do {
    std::uint64_t code = 0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (p.leq_at(perm[i], perm[j])) code |= std::uint64_t{1} << (i * n + j);
    best = std::min(best, code);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

std::vector<Poset> posets_of_size(int n) {
  if (n < 0 || n > 8) fail(Errc::size_cap_exceeded, "poset enumeration supports sizes 0..8");
  if (n == 0) return {Poset{0, {}}};

  // Every finite poset admits a linear extension, so it suffices to scan
  // strict relations contained in the index order i < j.
  std::vector<std::pair<int, int>> slots;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) slots.emplace_back(i, j);

  std::vector<Poset> out;
  std::set<std::uint64_t> seen;
  const std::uint64_t limit = std::uint64_t{1} << slots.size();
  for (std::uint64_t mask = 0; mask < limit; ++mask) {
    Poset p{n, std::vector<std::uint8_t>(n * n, 0)};
    for (int i = 0; i < n; ++i) p.leq[i * n + i] = 1;
    for (std::size_t s = 0; s < slots.size(); ++s)
      if ((mask >> s) & 1) p.leq[slots[s].first * n + slots[s].second] = 1;

    bool transitive = true;
    for (int i = 0; i < n && transitive; ++i)
      for (int j = 0; j < n && transitive; ++j) {
        if (!p.leq_at(i, j)) continue;
        for (int k = 0; k < n; ++k)
          if (p.leq_at(j, k) && !p.leq_at(i, k)) { transitive = false; break; }
      }
    if (!transitive) continue;

    if (seen.insert(poset_canonical_code(p)).second) out.push_back(std::move(p));
  }
  return out;
}

std::vector<Poset> posets_up_to(int max_n) {
  std::vector<Poset> out;
  for (int k = 0; k <= max_n; ++k) {
    auto part = posets_of_size(k);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

}  // namespace localelab
