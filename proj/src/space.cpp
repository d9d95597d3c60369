#include "localelab/space.hpp"

#include <algorithm>
#include <set>

namespace localelab {

FiniteSpace::FiniteSpace(int points, std::vector<Mask> opens, std::string label)
    : points_(points), opens_(std::move(opens)), label_(std::move(label)) {
  if (points_ < 0 || points_ > 16) fail(Errc::size_cap_exceeded, "spaces capped at 16 points");
  const Mask all = all_points();
  for (Mask u : opens_)
    if (!mask_subset(u, all)) fail(Errc::not_a_topology, "open set has stray points");
  std::sort(opens_.begin(), opens_.end(), [](Mask a, Mask b) {
    return std::make_pair(mask_count(a), a) < std::make_pair(mask_count(b), b);
  });
  opens_.erase(std::unique(opens_.begin(), opens_.end()), opens_.end());
  if (opens_.empty() || opens_.front() != 0 || opens_.back() != all)
    fail(Errc::not_a_topology, "opens must contain the empty set and the whole space");
  for (Mask u : opens_)
    for (Mask v : opens_) {
      if (open_index(u | v) < 0) fail(Errc::not_a_topology, "opens not closed under union");
      if (open_index(u & v) < 0) fail(Errc::not_a_topology, "opens not closed under intersection");
    }
  for (int p = 0; p < points_; ++p)
    for (int q = p + 1; q < points_; ++q) {
      bool separated = false;
      for (Mask u : opens_)
        if (mask_has(u, p) != mask_has(u, q)) { separated = true; break; }
      if (!separated)
        fail(Errc::not_t0, "points " + std::to_string(p) + " and " + std::to_string(q) +
                               " have identical neighborhoods");
    }
  if (label_.empty()) label_ = "X" + std::to_string(points_);
}

int FiniteSpace::open_index(Mask u) const {
  for (int i = 0; i < open_count(); ++i)
    if (opens_[i] == u) return i;
  return -1;
}

Mask FiniteSpace::interior_of(Mask a) const {
  Mask out = 0;
  for (Mask u : opens_)
    if (mask_subset(u, a)) out |= u;
  return out;
}

Mask FiniteSpace::closure_of(Mask a) const {
  return all_points() & ~interior_of(all_points() & ~a);
}

std::string FiniteSpace::subset_name(Mask a) const {
  std::string s = "{";
  bool first = true;
  for (Elem p : bits(a)) {
    if (!first) s += " ";
    s += std::to_string(p);
    first = false;
  }
  return s + "}";
}

FramePtr open_set_frame(const FiniteSpace& x) {
  const int n = x.open_count();
  std::vector<std::uint8_t> leq(static_cast<std::size_t>(n) * n, 0);
  std::vector<std::string> names(n);
  for (int i = 0; i < n; ++i) {
    names[i] = x.subset_name(x.opens()[i]);
    for (int j = 0; j < n; ++j)
      if (mask_subset(x.opens()[i], x.opens()[j])) leq[static_cast<std::size_t>(i) * n + j] = 1;
  }
  return build_frame(n, leq, std::move(names), "O(" + x.label() + ")");
}

Sublocale induced_sublocale(const FiniteSpace& x, Mask a, FramePtr frame) {
  Mask members = 0;
  const Mask comp = x.all_points() & ~a;
  for (Mask g : x.opens()) {
    int idx = x.open_index(x.interior_of(comp | g));
    members |= elem_bit(idx);
  }
  return Sublocale(std::move(frame), members);
}

Mask interior_in_subspace(const FiniteSpace& x, Mask f, Mask a) {
  Mask out = 0;
  for (Mask u : x.opens())
    if (mask_subset(u & f, a)) out |= u & f;
  return out;
}

Mask closure_in_subspace(const FiniteSpace& x, Mask f, Mask a) {
  return x.closure_of(a) & f;
}

bool spatial_nwd_in(const FiniteSpace& x, Mask a, Mask f) {
  return interior_in_subspace(x, f, closure_in_subspace(x, f, a)) == 0;
}

bool spatial_nwd(const FiniteSpace& x, Mask a) { return spatial_nwd_in(x, a, x.all_points()); }

bool spatial_maximal_nwd(const FiniteSpace& x, Mask a) {
  if (!spatial_nwd(x, a)) return false;
  const Mask all = x.all_points();
  for (Mask k = 0;; ++k) {
    if (mask_subset(a, k) && spatial_nwd(x, k) && spatial_nwd_in(x, a, k)) return false;
    if (k == all) break;
  }
  return true;
}

bool spatial_regular_closed_in(const FiniteSpace& x, Mask a, Mask f) {
  for (Mask u : x.opens())
    if (closure_in_subspace(x, f, u & f) == a) return true;
  return false;
}

bool spatial_hmnd(const FiniteSpace& x, Mask f) {
  if (f == 0) return false;
  if (x.closure_of(f) != f) return false;
  if (!spatial_nwd(x, f)) return false;
  for (Mask u : x.opens()) {
    Mask r = closure_in_subspace(x, f, u & f);
    if (r != 0 && !spatial_maximal_nwd(x, r)) return false;
  }
  return true;
}

namespace {

std::uint64_t space_canonical_code(int n, const std::vector<Mask>& opens) {
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  std::uint64_t best = ~std::uint64_t{0};
  do {
    // Relabel points, then fold the sorted open list into one word. Each open
    // uses n bits and a topology on n <= 4 points has at most 2^n <= 16 opens,
    // so 64 bits hold the whole family for n <= 4... n=4: 16 opens x 4 bits =
    // 64 bits exactly.
    std::vector<Mask> relabeled;
    relabeled.reserve(opens.size());
    for (Mask u : opens) {
      Mask v = 0;
      for (Elem p : bits(u)) v |= elem_bit(perm[p]);
      relabeled.push_back(v);
    }
    std::sort(relabeled.begin(), relabeled.end());
    std::uint64_t code = 0;
    for (Mask u : relabeled) code = (code << n) | u;
    best = std::min(best, code);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

}  // namespace

namespace {

// Visits one representative open-set family per homeomorphism class.
template <typename Fn>
void for_each_topology(int n, bool t0_only, Fn&& visit) {
  const Mask all = elem_bit(n) - 1;
  // Candidate families are subsets of the proper non-empty subsets of X.
  std::vector<Mask> proper;
  for (Mask u = 1; u < all; ++u) proper.push_back(u);
  std::set<std::uint64_t> seen;
  const std::uint64_t limit = std::uint64_t{1} << proper.size();
  for (std::uint64_t pick = 0; pick < limit; ++pick) {
    std::vector<Mask> opens = {0, all};
    for (std::size_t i = 0; i < proper.size(); ++i)
      if ((pick >> i) & 1) opens.push_back(proper[i]);
    auto is_open = [&](Mask u) { return std::find(opens.begin(), opens.end(), u) != opens.end(); };
    bool closed = true;
    for (std::size_t i = 0; i < opens.size() && closed; ++i)
      for (std::size_t j = i + 1; j < opens.size() && closed; ++j)
        closed = is_open(opens[i] | opens[j]) && is_open(opens[i] & opens[j]);
    if (!closed) continue;
    if (t0_only) {
      bool t0 = true;
      for (int p = 0; p < n && t0; ++p)
        for (int q = p + 1; q < n && t0; ++q) {
          bool sep = false;
          for (Mask u : opens)
            if (mask_has(u, p) != mask_has(u, q)) { sep = true; break; }
          t0 = sep;
        }
      if (!t0) continue;
    }
    if (!seen.insert(space_canonical_code(n, opens)).second) continue;
    visit(opens);
  }
}

}  // namespace

std::vector<FiniteSpace> spaces_up_to_homeo(int max_points) {
  if (max_points > 4) fail(Errc::size_cap_exceeded, "space enumeration capped at 4 points");
  std::vector<FiniteSpace> out;
  for (int n = 1; n <= max_points; ++n) {
    int index = 0;
    for_each_topology(n, true, [&](const std::vector<Mask>& opens) {
      out.emplace_back(n, opens, "X" + std::to_string(n) + "." + std::to_string(index++));
    });
  }
  return out;
}

int count_topologies_up_to_homeo(int n, bool t0_only) {
  if (n < 1 || n > 4) fail(Errc::size_cap_exceeded, "space enumeration capped at 4 points");
  int count = 0;
  for_each_topology(n, t0_only, [&](const std::vector<Mask>&) { ++count; });
  return count;
}

}  // namespace localelab
