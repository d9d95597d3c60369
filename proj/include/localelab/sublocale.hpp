#pragma once

#include <optional>
#include <span>
#include <vector>

#include "localelab/frame.hpp"

namespace localelab {

constexpr int kDefaultSublocaleCap = 10;

// A sublocale of a finite frame: a member set containing the top element,
// closed under all meets and under x -> s for every frame element x.
// Equality is member-set equality over the same frame.
class Sublocale {
public:
  Sublocale(FramePtr frame, Mask members);  // validates, throws NotASublocale

  const FramePtr& frame() const { return frame_; }
  Mask members() const { return members_; }

  bool contains(Elem a) const { return mask_has(members_, a); }
  int count() const { return mask_count(members_); }
  Elem bottom() const { return frame_->meet_of(members_); }  // 0_S
  bool is_void() const { return members_ == elem_bit(frame_->top()); }
  bool is_dense() const { return contains(frame_->bottom()); }

  // nu_S(a), the smallest member above a
  Elem nucleus(Elem a) const { return frame_->meet_of(members_ & frame_->upset(a)); }
  std::vector<Elem> nucleus_table() const;

  bool same_frame(const Sublocale& o) const { return frame_.get() == o.frame_.get(); }

  friend bool operator==(const Sublocale& a, const Sublocale& b) {
    return a.frame_.get() == b.frame_.get() && a.members_ == b.members_;
  }

private:
  struct unchecked_t {};
  Sublocale(FramePtr frame, Mask members, unchecked_t) : frame_(std::move(frame)), members_(members) {}
  friend Sublocale sublocale_unchecked(FramePtr, Mask);

  FramePtr frame_;
  Mask members_;
};

// Internal fast path; the mask must already satisfy the sublocale conditions.
Sublocale sublocale_unchecked(FramePtr frame, Mask members);

bool is_sublocale_mask(const FiniteFrame& f, Mask m);
// Smallest sublocale mask containing the seed.
Mask sublocale_closure_mask(const FiniteFrame& f, Mask seed);
Sublocale sublocale_generated_by(FramePtr frame, Mask seed);

Sublocale void_sublocale(FramePtr frame);  // O = {1}
Sublocale full_sublocale(FramePtr frame);  // L

Mask closed_mask(const FiniteFrame& f, Elem a);  // c(a) = {x : a <= x}
Mask open_mask(const FiniteFrame& f, Elem a);    // o(a) = {a -> x : x in L}
Sublocale closed_sublocale(FramePtr frame, Elem a);
Sublocale open_sublocale(FramePtr frame, Elem a);

bool is_closed(const Sublocale& s);
bool is_open(const Sublocale& s);
std::optional<Elem> open_witness(const Sublocale& s);  // a with S = o(a)

Sublocale closure(const Sublocale& s);   // c(/\S)
Sublocale interior(const Sublocale& s);  // largest open sublocale inside S
Sublocale boundary(const Sublocale& s);  // closure(S) minus interior(S)

// Join of sublocales is the meet-closure of the union; already Heyting-closed.
Mask join_mask(const FiniteFrame& f, Mask a, Mask b);
Sublocale join(const Sublocale& a, const Sublocale& b);
Sublocale join(std::span<const Sublocale> list, FramePtr frame);
Sublocale intersect(const Sublocale& a, const Sublocale& b);
Sublocale intersect(std::span<const Sublocale> list, FramePtr frame);

// Smallest T with S v T = L, as the meet of all such T (valid by the coframe
// law). Closed and open sublocales take the complement fast path; anything
// else needs the sublocale enumeration.
Sublocale supplement(const Sublocale& s, int cap = kDefaultSublocaleCap);
Sublocale supplement(const Sublocale& s, std::span<const Sublocale> all);
bool is_complemented(const Sublocale& s, std::span<const Sublocale> all);

Sublocale booleanization(FramePtr frame);            // BL = {x -> 0}
Sublocale relative_booleanization(const Sublocale& s);  // BS computed inside S

// Heyting operation of the locale S is the restriction of the ambient one.
Elem relative_heyting(const Sublocale& s, Elem x, Elem y);
Elem relative_pseudocomplement(const Sublocale& s, Elem x);  // x -> 0_S
Mask dense_elements_in(const Sublocale& s);  // S-dense members of S

bool is_dense_in(Elem x, const Sublocale& s);

bool is_nowhere_dense(const Sublocale& n);  // misses BL
// Requires N <= S; throws NotASublocaleOf otherwise.
bool is_nowhere_dense_in(const Sublocale& n, const Sublocale& s);

// cl_S and int_S for A <= S, computed inside the locale S.
Mask closure_in_mask(const FiniteFrame& f, Mask s, Mask a);
Mask interior_in_mask(const FiniteFrame& f, Mask s, Mask a);
Sublocale closure_in(const Sublocale& s, const Sublocale& a);
Sublocale interior_in(const Sublocale& s, const Sublocale& a);

// The regular-closed sublocales of a closed S = c(x): all c(a -> x).
// Throws NotClosed.
std::vector<Sublocale> regular_closed_of(const Sublocale& s);
// Closures of relative opens, the defining route; must agree with the above.
std::vector<Sublocale> regular_closed_of_by_definition(const Sublocale& s);
bool is_regular_closed_in(const Sublocale& a, const Sublocale& s);  // A <= S

// All sublocales, lectic order. Throws SizeCapExceeded when |L| > cap.
std::vector<Sublocale> enumerate_sublocales(FramePtr frame, int cap = kDefaultSublocaleCap);
// {c(y) : y dense}; includes the void c(1).
std::vector<Sublocale> enumerate_closed_nwd(FramePtr frame);

// Join of all nowhere dense sublocales, closed form c(/\ dense elements).
Sublocale nd_sublocale(FramePtr frame);
// Every dense sublocale open?
bool is_strongly_submaximal(FramePtr frame, std::span<const Sublocale> all);

}  // namespace localelab
