#include "localelab/frame.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "localelab/posets.hpp"

namespace localelab {

namespace {

std::string elem_list(const std::vector<std::string>& names, std::initializer_list<Elem> es) {
  std::string s;
  for (Elem e : es) {
    if (!s.empty()) s += ", ";
    s += names[static_cast<std::size_t>(e)];
  }
  return s;
}

std::vector<std::string> default_names(int n) {
  std::vector<std::string> names(n);
  for (int i = 0; i < n; ++i) names[i] = "x" + std::to_string(i);
  return names;
}

std::string downset_name(Mask m) {
  std::string s = "{";
  for (Elem p : bits(m)) s += static_cast<char>('0' + p);
  s += "}";
  return s;
}

}  // namespace

FiniteFrame::FiniteFrame(const Tables& t) {
  n_ = t.n;
  if (n_ < 1) fail(Errc::bad_input, "a frame needs at least one element");
  if (n_ > kMaxFrameSize)
    fail(Errc::size_cap_exceeded,
         "frame has " + std::to_string(n_) + " elements, cap is " + std::to_string(kMaxFrameSize));
  if (t.leq.size() != static_cast<std::size_t>(n_) * n_)
    fail(Errc::bad_input, "leq table size mismatch");
  leq_ = t.leq;
  names_ = t.names.empty() ? default_names(n_) : t.names;
  if (names_.size() != static_cast<std::size_t>(n_)) fail(Errc::bad_input, "name count mismatch");
  label_ = t.label;

  // Partial order axioms.
  for (Elem a = 0; a < n_; ++a)
    if (!leq(a, a)) fail(Errc::not_a_partial_order, "not reflexive at " + names_[a]);
  for (Elem a = 0; a < n_; ++a)
    for (Elem b = 0; b < n_; ++b) {
      if (a != b && leq(a, b) && leq(b, a))
        fail(Errc::not_a_partial_order, "not antisymmetric at " + elem_list(names_, {a, b}));
      if (!leq(a, b)) continue;
      for (Elem c = 0; c < n_; ++c)
        if (leq(b, c) && !leq(a, c))
          fail(Errc::not_a_partial_order, "not transitive at " + elem_list(names_, {a, b, c}));
    }

  up_.assign(n_, 0);
  down_.assign(n_, 0);
  for (Elem a = 0; a < n_; ++a)
    for (Elem b = 0; b < n_; ++b)
      if (leq(a, b)) {
        up_[a] |= elem_bit(b);
        down_[b] |= elem_bit(a);
      }

  bottom_ = top_ = -1;
  for (Elem a = 0; a < n_; ++a) {
    if (up_[a] == full()) bottom_ = a;
    if (down_[a] == full()) top_ = a;
  }
  if (bottom_ < 0) fail(Errc::not_a_lattice, "no bottom element");
  if (top_ < 0) fail(Errc::not_a_lattice, "no top element");

  // Meets and joins as greatest lower / least upper bounds.
  meet_.assign(static_cast<std::size_t>(n_) * n_, -1);
  join_.assign(static_cast<std::size_t>(n_) * n_, -1);
  for (Elem a = 0; a < n_; ++a)
    for (Elem b = 0; b < n_; ++b) {
      Mask lower = down_[a] & down_[b];
      Elem glb = -1;
      for (Elem c : bits(lower))
        if (mask_subset(lower, down_[c])) { glb = c; break; }
      if (glb < 0) fail(Errc::not_a_lattice, "no meet for " + elem_list(names_, {a, b}));
      meet_[a * n_ + b] = glb;

      Mask upper = up_[a] & up_[b];
      Elem lub = -1;
      for (Elem c : bits(upper))
        if (mask_subset(upper, up_[c])) { lub = c; break; }
      if (lub < 0) fail(Errc::not_a_lattice, "no join for " + elem_list(names_, {a, b}));
      join_[a * n_ + b] = lub;
    }

  // Finite distributivity; sufficient for the frame law on finite lattices.
  for (Elem a = 0; a < n_; ++a)
    for (Elem b = 0; b < n_; ++b)
      for (Elem c = 0; c < n_; ++c)
        if (meet(a, join(b, c)) != join(meet(a, b), meet(a, c)))
          fail(Errc::not_distributive,
               "a^(bvc) != (a^b)v(a^c) at " + elem_list(names_, {a, b, c}));

  // heyting(a,b) = join of {x : a^x <= b}; the adjunction follows from
  // distributivity on finite lattices, asserted below anyway.
  heyting_.assign(static_cast<std::size_t>(n_) * n_, -1);
  for (Elem a = 0; a < n_; ++a)
    for (Elem b = 0; b < n_; ++b) {
      Elem h = bottom_;
      for (Elem x = 0; x < n_; ++x)
        if (leq(meet(x, a), b)) h = join(h, x);
      heyting_[a * n_ + b] = h;
    }
  for (Elem a = 0; a < n_; ++a)
    for (Elem b = 0; b < n_; ++b)
      for (Elem c = 0; c < n_; ++c)
        if (leq(a, heyting(b, c)) != leq(meet(a, b), c))
          fail(Errc::not_distributive,
               "heyting adjunction failed at " + elem_list(names_, {a, b, c}));

  dense_ = 0;
  bool_ = 0;
  for (Elem a = 0; a < n_; ++a) {
    if (is_dense(a)) dense_ |= elem_bit(a);
    bool_ |= elem_bit(pseudocomplement(a));
  }
  omask_.assign(n_, 0);
  for (Elem a = 0; a < n_; ++a)
    for (Elem x = 0; x < n_; ++x) omask_[a] |= elem_bit(heyting(a, x));

  // Largest interpolative relation inside rather-below, by whole-relation
  // pruning to the greatest fixpoint. On finite frames this coincides with
  // the chain-indexed definition of completely-below.
  cb_.assign(static_cast<std::size_t>(n_) * n_, 0);
  for (Elem a = 0; a < n_; ++a)
    for (Elem b = 0; b < n_; ++b) cb_[a * n_ + b] = rather_below(a, b) ? 1 : 0;
  for (bool changed = true; changed;) {
    changed = false;
    std::vector<std::uint8_t> next = cb_;
    for (Elem a = 0; a < n_; ++a)
      for (Elem b = 0; b < n_; ++b) {
        if (!cb_[a * n_ + b]) continue;
        bool witnessed = false;
        for (Elem c = 0; c < n_ && !witnessed; ++c)
          witnessed = cb_[a * n_ + c] && cb_[c * n_ + b];
        if (!witnessed) { next[a * n_ + b] = 0; changed = true; }
      }
    cb_ = std::move(next);
  }
}

bool FiniteFrame::is_point(Elem p) const {
  if (p == top_) return false;
  for (Elem a = 0; a < n_; ++a)
    for (Elem b = 0; b < n_; ++b)
      if (leq(meet(a, b), p) && !leq(a, p) && !leq(b, p)) return false;
  return true;
}

bool FiniteFrame::is_boolean() const {
  for (Elem a = 0; a < n_; ++a)
    if (!is_complemented(a)) return false;
  return true;
}

bool FiniteFrame::is_completely_regular() const {
  for (Elem a = 0; a < n_; ++a) {
    Elem j = bottom_;
    for (Elem x = 0; x < n_; ++x)
      if (completely_below(x, a)) j = join(j, x);
    if (j != a) return false;
  }
  return true;
}

Elem FiniteFrame::meet_of(Mask m) const {
  Elem r = top_;
  for (Elem a : bits(m)) r = meet(r, a);
  return r;
}

Elem FiniteFrame::join_of(Mask m) const {
  Elem r = bottom_;
  for (Elem a : bits(m)) r = join(r, a);
  return r;
}

Elem FiniteFrame::element_by_name(const std::string& s) const {
  for (Elem a = 0; a < n_; ++a)
    if (names_[a] == s) return a;
  return -1;
}

FramePtr FiniteFrame::with_label(std::string label) const {
  auto copy = std::make_shared<FiniteFrame>(*this);
  copy->label_ = std::move(label);
  return copy;
}

FramePtr FiniteFrame::with_corrupted_heyting(Elem a, Elem b, Elem value) const {
  auto copy = std::make_shared<FiniteFrame>(*this);
  copy->heyting_[a * n_ + b] = value;
  // Derived data flows from the corrupted table, as a buggy build would have it.
  copy->dense_ = 0;
  copy->bool_ = 0;
  for (Elem x = 0; x < n_; ++x) {
    if (copy->is_dense(x)) copy->dense_ |= elem_bit(x);
    copy->bool_ |= elem_bit(copy->pseudocomplement(x));
  }
  copy->omask_.assign(n_, 0);
  for (Elem x = 0; x < n_; ++x)
    for (Elem y = 0; y < n_; ++y) copy->omask_[x] |= elem_bit(copy->heyting(x, y));
  copy->label_ = label_ + "!corrupt";
  return copy;
}

FramePtr build_frame(int n, const std::vector<std::uint8_t>& leq,
                     std::vector<std::string> names, std::string label) {
  FiniteFrame::Tables t;
  t.n = n;
  t.leq = leq;
  t.names = std::move(names);
  t.label = std::move(label);
  return std::make_shared<FiniteFrame>(t);
}

FramePtr build_frame_from_pairs(int n, const std::vector<std::pair<int, int>>& leq_pairs,
                                std::vector<std::string> names, std::string label) {
  if (n < 1) fail(Errc::bad_input, "need n >= 1");
  std::vector<std::uint8_t> leq(static_cast<std::size_t>(n) * n, 0);
  for (auto [i, j] : leq_pairs) {
    if (i < 0 || j < 0 || i >= n || j >= n)
      fail(Errc::bad_input, "leq pair out of range: [" + std::to_string(i) + "," + std::to_string(j) + "]");
    leq[static_cast<std::size_t>(i) * n + j] = 1;
  }
  return build_frame(n, leq, std::move(names), std::move(label));
}

FramePtr downset_frame(const PosetSeed& seed) {
  const int p = seed.size;
  if (p < 0 || p > 16) fail(Errc::size_cap_exceeded, "poset size out of range");
  std::vector<std::uint8_t> rel(static_cast<std::size_t>(p) * p, 0);
  for (int i = 0; i < p; ++i) rel[i * p + i] = 1;
  for (auto [a, b] : seed.covers) {
    if (a < 0 || b < 0 || a >= p || b >= p || a == b) fail(Errc::bad_input, "bad cover pair");
    rel[a * p + b] = 1;
  }
  // Transitive closure; a cycle shows up as antisymmetry failure.
  for (int k = 0; k < p; ++k)
    for (int i = 0; i < p; ++i)
      if (rel[i * p + k])
        for (int j = 0; j < p; ++j)
          if (rel[k * p + j]) rel[i * p + j] = 1;
  for (int i = 0; i < p; ++i)
    for (int j = 0; j < p; ++j)
      if (i != j && rel[i * p + j] && rel[j * p + i])
        fail(Errc::cycle_in_covers, "covers contain a cycle through " + std::to_string(i));

  std::vector<Mask> ptdown(p, 0);
  for (int i = 0; i < p; ++i)
    for (int j = 0; j < p; ++j)
      if (rel[j * p + i]) ptdown[i] |= elem_bit(j);

  std::vector<Mask> downsets;
  const Mask all = (p == 0) ? 0 : ((p == 64 ? ~Mask{0} : (elem_bit(p) - 1)));
  for (Mask m = 0;; ++m) {
    bool ok = true;
    for (Elem q : bits(m))
      if (!mask_subset(ptdown[q], m)) { ok = false; break; }
    if (ok) downsets.push_back(m);
    if (m == all) break;
  }
  if (downsets.size() > static_cast<std::size_t>(kMaxFrameSize))
    fail(Errc::size_cap_exceeded, "downset lattice exceeds " + std::to_string(kMaxFrameSize) + " elements");
  std::sort(downsets.begin(), downsets.end(), [](Mask a, Mask b) {
    return std::make_pair(mask_count(a), a) < std::make_pair(mask_count(b), b);
  });

  const int n = static_cast<int>(downsets.size());
  std::vector<std::uint8_t> leq(static_cast<std::size_t>(n) * n, 0);
  std::vector<std::string> names(n);
  for (int i = 0; i < n; ++i) {
    names[i] = downset_name(downsets[i]);
    for (int j = 0; j < n; ++j)
      if (mask_subset(downsets[i], downsets[j])) leq[static_cast<std::size_t>(i) * n + j] = 1;
  }
  return build_frame(n, leq, std::move(names), "downsets(p=" + std::to_string(p) + ")");
}

FramePtr chain_frame(int n) {
  if (n < 1) fail(Errc::bad_input, "chain_frame needs n >= 1");
  if (n > kMaxFrameSize) fail(Errc::size_cap_exceeded, "chain too long");
  std::vector<std::uint8_t> leq(static_cast<std::size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) leq[static_cast<std::size_t>(i) * n + j] = 1;
  std::vector<std::string> names(n);
  if (n == 1) {
    names[0] = "*";
  } else {
    names[0] = "0";
    names[n - 1] = "1";
    for (int i = 1; i + 1 < n; ++i) names[i] = std::string(1, static_cast<char>('a' + i - 1));
  }
  return build_frame(n, leq, std::move(names), "chain" + std::to_string(n));
}

FramePtr boolean_frame(int k) {
  if (k < 0 || k > 6) fail(Errc::size_cap_exceeded, "boolean_frame supports 0 <= k <= 6");
  PosetSeed antichain;
  antichain.size = k;
  return downset_frame(antichain)->with_label("bool" + std::to_string(k));
}

FramePtr product_frame(const FramePtr& a, const FramePtr& b) {
  const int na = a->size(), nb = b->size();
  if (na * nb > kMaxFrameSize) fail(Errc::size_cap_exceeded, "product frame too large");
  const int n = na * nb;
  std::vector<std::uint8_t> leq(static_cast<std::size_t>(n) * n, 0);
  std::vector<std::string> names(n);
  for (int i = 0; i < n; ++i) {
    names[i] = a->name(i / nb) + "|" + b->name(i % nb);
    for (int j = 0; j < n; ++j)
      if (a->leq(i / nb, j / nb) && b->leq(i % nb, j % nb))
        leq[static_cast<std::size_t>(i) * n + j] = 1;
  }
  return build_frame(n, leq, std::move(names), a->label() + "x" + b->label());
}

namespace {

FramePtr frame_of_poset(const Poset& p, const std::string& label) {
  PosetSeed seed;
  seed.size = p.n;
  for (int i = 0; i < p.n; ++i)
    for (int j = 0; j < p.n; ++j)
      if (i != j && p.leq_at(i, j)) seed.covers.emplace_back(i, j);
  return downset_frame(seed)->with_label(label);
}

}  // namespace

std::vector<FramePtr> all_frames_up_to(int max_elems, int poset_cap) {
  if (max_elems < 1) fail(Errc::bad_input, "need max_elems >= 1");
  if (max_elems - 1 > poset_cap)
    fail(Errc::size_cap_exceeded, "frames of " + std::to_string(max_elems) +
                                      " elements need posets of size " + std::to_string(max_elems - 1) +
                                      ", cap is " + std::to_string(poset_cap));
  std::vector<FramePtr> out;
  for (int k = 0; k < max_elems; ++k) {
    auto posets = posets_of_size(k);
    for (std::size_t i = 0; i < posets.size(); ++i) {
      auto f = frame_of_poset(posets[i], "p" + std::to_string(k) + "." + std::to_string(i));
      if (f->size() <= max_elems) out.push_back(std::move(f));
    }
  }
  return out;
}

std::vector<FramePtr> frames_from_posets_up_to(int max_poset, int poset_cap) {
  if (max_poset < 0) fail(Errc::bad_input, "need max_poset >= 0");
  if (max_poset > poset_cap)
    fail(Errc::size_cap_exceeded,
         "poset size " + std::to_string(max_poset) + " over cap " + std::to_string(poset_cap));
  std::vector<FramePtr> out;
  for (int k = 0; k <= max_poset; ++k) {
    auto posets = posets_of_size(k);
    for (std::size_t i = 0; i < posets.size(); ++i)
      out.push_back(frame_of_poset(posets[i], "p" + std::to_string(k) + "." + std::to_string(i)));
  }
  return out;
}

namespace {

bool iso_backtrack(const FiniteFrame& a, const FiniteFrame& b, std::vector<Elem>& map,
                   std::vector<bool>& used, Elem next) {
  const int n = a.size();
  if (next == n) return true;
  for (Elem cand = 0; cand < n; ++cand) {
    if (used[cand]) continue;
    if (mask_count(a.upset(next)) != mask_count(b.upset(cand)) ||
        mask_count(a.downset(next)) != mask_count(b.downset(cand)))
      continue;
    bool ok = true;
    for (Elem prev = 0; prev < next && ok; ++prev)
      ok = (a.leq(prev, next) == b.leq(map[prev], cand)) &&
           (a.leq(next, prev) == b.leq(cand, map[prev]));
    if (!ok) continue;
    map[next] = cand;
    used[cand] = true;
    if (iso_backtrack(a, b, map, used, next + 1)) return true;
    used[cand] = false;
  }
  return false;
}

}  // namespace

bool frames_isomorphic(const FiniteFrame& a, const FiniteFrame& b) {
  if (a.size() != b.size()) return false;
  auto profile = [](const FiniteFrame& f) {
    std::vector<std::pair<int, int>> prof;
    for (Elem x = 0; x < f.size(); ++x)
      prof.emplace_back(mask_count(f.downset(x)), mask_count(f.upset(x)));
    std::sort(prof.begin(), prof.end());
    return prof;
  };
  if (profile(a) != profile(b)) return false;
  std::vector<Elem> map(a.size(), -1);
  std::vector<bool> used(a.size(), false);
  return iso_backtrack(a, b, map, used, 0);
}

}  // namespace localelab
