#pragma once

#include <string>
#include <vector>

#include "localelab/sublocale.hpp"

namespace localelab {

// A finite T0 topological space. Point subsets are bit masks; the open-set
// family contains the empty set and the full set and is closed under union
// and intersection. Finite T0 implies T_D, so every subset induces a
// complemented sublocale of the open-set frame.
class FiniteSpace {
public:
  FiniteSpace(int points, std::vector<Mask> opens, std::string label = {});

  int points() const { return points_; }
  Mask all_points() const { return points_ == 0 ? 0 : (elem_bit(points_) - 1); }
  const std::vector<Mask>& opens() const { return opens_; }
  int open_count() const { return static_cast<int>(opens_.size()); }
  int open_index(Mask u) const;  // -1 when u is not open
  const std::string& label() const { return label_; }

  bool is_open_set(Mask u) const { return open_index(u) >= 0; }
  Mask interior_of(Mask a) const;  // union of opens inside a
  Mask closure_of(Mask a) const;

  std::string subset_name(Mask a) const;

private:
  int points_ = 0;
  std::vector<Mask> opens_;  // sorted by (size, mask); [0] is empty, last is X
  std::string label_;
};

// Frame on the open sets ordered by inclusion; element i is opens()[i].
FramePtr open_set_frame(const FiniteSpace& x);

// Induced sublocale of a point subset: { int((X \ A) u G) : G open }.
Sublocale induced_sublocale(const FiniteSpace& x, Mask a, FramePtr frame);

// Relative interior/closure in the subspace topology of f.
Mask interior_in_subspace(const FiniteSpace& x, Mask f, Mask a);
Mask closure_in_subspace(const FiniteSpace& x, Mask f, Mask a);

// Nowhere density of a <= f in the subspace f.
bool spatial_nwd_in(const FiniteSpace& x, Mask a, Mask f);
bool spatial_nwd(const FiniteSpace& x, Mask a);

// No nowhere dense k <= X has a nowhere dense in the subspace k; quantifies
// over all subsets exhaustively.
bool spatial_maximal_nwd(const FiniteSpace& x, Mask a);

// a = cl_f(u ^ f) for some open u.
bool spatial_regular_closed_in(const FiniteSpace& x, Mask a, Mask f);

// Closed nowhere dense non-empty f whose non-empty regular-closed parts are
// all maximal nowhere dense in x.
bool spatial_hmnd(const FiniteSpace& x, Mask f);

// All topologies on 1..max_points points are generated up to homeomorphism by
// canonical-form hashing; the T0 ones come back as spaces (non-T0 families
// cannot inhabit FiniteSpace).
std::vector<FiniteSpace> spaces_up_to_homeo(int max_points);
// Homeomorphism-class count on exactly n points, with or without the T0 filter.
int count_topologies_up_to_homeo(int n, bool t0_only);

}  // namespace localelab
