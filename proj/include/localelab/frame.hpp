#pragma once

#include <bit>
#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "localelab/error.hpp"

namespace localelab {

// Elements of a finite frame are canonical integer indices 0..n-1.
using Elem = int;

// Element subsets are 64-bit masks; frames are capped at 64 elements.
using Mask = std::uint64_t;

constexpr int kMaxFrameSize = 64;
constexpr int kDefaultPosetCap = 5;

constexpr Mask elem_bit(Elem a) { return Mask{1} << a; }
constexpr bool mask_has(Mask m, Elem a) { return (m >> a) & Mask{1}; }
constexpr bool mask_subset(Mask a, Mask b) { return (a & ~b) == 0; }
constexpr int mask_count(Mask m) { return std::popcount(m); }

// Iterate set bits low to high: for (Elem a : bits(m)) ...
struct BitRange {
  Mask m;
  struct iterator {
    Mask m;
    bool operator!=(const iterator& o) const { return m != o.m; }
    Elem operator*() const { return std::countr_zero(m); }
    iterator& operator++() { m &= m - 1; return *this; }
  };
  iterator begin() const { return {m}; }
  iterator end() const { return {0}; }
};
inline BitRange bits(Mask m) { return {m}; }

class FiniteFrame;
using FramePtr = std::shared_ptr<const FiniteFrame>;

// A finite distributive lattice with fully materialized order, meet, join and
// Heyting tables. Immutable after construction; safe to share across threads.
class FiniteFrame {
public:
  int size() const { return n_; }
  Elem bottom() const { return bottom_; }
  Elem top() const { return top_; }
  Mask full() const { return n_ == 64 ? ~Mask{0} : (elem_bit(n_) - 1); }

  bool leq(Elem a, Elem b) const { return leq_[a * n_ + b] != 0; }
  Elem meet(Elem a, Elem b) const { return meet_[a * n_ + b]; }
  Elem join(Elem a, Elem b) const { return join_[a * n_ + b]; }
  Elem heyting(Elem a, Elem b) const { return heyting_[a * n_ + b]; }

  // {x : a <= x} and {x : x <= a}
  Mask upset(Elem a) const { return up_[a]; }
  Mask downset(Elem a) const { return down_[a]; }
  // member mask of o(a) = {a -> x : x in L}
  Mask open_mask_of(Elem a) const { return omask_[a]; }

  Elem pseudocomplement(Elem a) const { return heyting(a, bottom_); }

  bool is_dense(Elem a) const { return pseudocomplement(a) == bottom_; }
  bool is_complemented(Elem a) const { return join(a, pseudocomplement(a)) == top_; }
  bool rather_below(Elem a, Elem b) const { return join(pseudocomplement(a), b) == top_; }
  bool completely_below(Elem a, Elem b) const { return cb_[a * n_ + b] != 0; }
  bool is_point(Elem p) const;

  bool is_boolean() const;
  bool is_completely_regular() const;

  Mask dense_elements() const { return dense_; }
  // {x -> 0 : x in L}, the members of the smallest dense sublocale
  Mask booleanization_mask() const { return bool_; }

  Elem meet_of(Mask m) const;   // empty meet = top
  Elem join_of(Mask m) const;   // empty join = bottom

  const std::string& name(Elem a) const { return names_[a]; }
  Elem element_by_name(const std::string& s) const;  // -1 if absent
  const std::string& label() const { return label_; }

  // Construction goes through build_frame / downset_frame below.
  struct Tables {
    int n = 0;
    std::vector<std::uint8_t> leq;
    std::vector<std::string> names;
    std::string label;
  };
  explicit FiniteFrame(const Tables& t);

  FramePtr with_label(std::string label) const;

  // Harness sanity hook: returns a copy with one Heyting entry overwritten.
  // The result is intentionally inconsistent; only the check runner should see it.
  FramePtr with_corrupted_heyting(Elem a, Elem b, Elem value) const;

private:
  FiniteFrame() = default;

  int n_ = 0;
  Elem bottom_ = 0, top_ = 0;
  std::vector<std::uint8_t> leq_;
  std::vector<Elem> meet_, join_, heyting_;
  std::vector<std::uint8_t> cb_;  // completely-below relation
  std::vector<Mask> up_, down_, omask_;
  Mask dense_ = 0, bool_ = 0;
  std::vector<std::string> names_;
  std::string label_;
};

// Validates that leq (n x n, row-major) is a partial order carrying a
// distributive lattice and computes all tables.
// Throws: NotAPartialOrder, NotALattice, NotDistributive, SizeCapExceeded.
FramePtr build_frame(int n, const std::vector<std::uint8_t>& leq,
                     std::vector<std::string> names = {}, std::string label = {});
FramePtr build_frame_from_pairs(int n, const std::vector<std::pair<int, int>>& leq_pairs,
                                std::vector<std::string> names = {}, std::string label = {});

// Birkhoff generator input: finite frames are exactly downset lattices of
// finite posets.
struct PosetSeed {
  int size = 0;
  std::vector<std::pair<int, int>> covers;  // a < b cover pairs
};

// Frame of downsets of the seed poset, ordered by inclusion (meet = set
// intersection, join = set union). Throws CycleInCovers, SizeCapExceeded.
FramePtr downset_frame(const PosetSeed& seed);

FramePtr chain_frame(int n);       // n >= 1 elements
FramePtr boolean_frame(int k);     // 2^k elements, 0 <= k <= 6
FramePtr product_frame(const FramePtr& a, const FramePtr& b);

// One representative per isomorphism class of frames with <= max_elems
// elements, via posets enumerated up to isomorphism.
std::vector<FramePtr> all_frames_up_to(int max_elems, int poset_cap = kDefaultPosetCap);

// Downset frames of every poset with <= max_poset elements, one per poset
// isomorphism class. This is the corpus generator used by the check runner.
std::vector<FramePtr> frames_from_posets_up_to(int max_poset, int poset_cap = kDefaultPosetCap);

// Order-isomorphism test by backtracking search (corpus deduplication).
bool frames_isomorphic(const FiniteFrame& a, const FiniteFrame& b);

}  // namespace localelab
