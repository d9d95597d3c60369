#include "localelab/sublocale.hpp"

#include <algorithm>

namespace localelab {

namespace {

void require_same_frame(const Sublocale& a, const Sublocale& b) {
  if (!a.same_frame(b)) fail(Errc::mixed_frames, "sublocales live over different frames");
}

}  // namespace

bool is_sublocale_mask(const FiniteFrame& f, Mask m) {
  if (!mask_has(m, f.top())) return false;
  for (Elem s : bits(m)) {
    for (Elem t : bits(m))
      if (!mask_has(m, f.meet(s, t))) return false;
    for (Elem x = 0; x < f.size(); ++x)
      if (!mask_has(m, f.heyting(x, s))) return false;
  }
  return true;
}

Mask sublocale_closure_mask(const FiniteFrame& f, Mask seed) {
  Mask m = seed | elem_bit(f.top());
  Mask pending = m;
  while (pending) {
    Elem u = std::countr_zero(pending);
    pending &= pending - 1;
    auto add = [&](Elem v) {
      if (!mask_has(m, v)) {
        m |= elem_bit(v);
        pending |= elem_bit(v);
      }
    };
    for (Elem x = 0; x < f.size(); ++x) add(f.heyting(x, u));
    for (Elem t : bits(m)) add(f.meet(u, t));
  }
  return m;
}

Sublocale::Sublocale(FramePtr frame, Mask members) : frame_(std::move(frame)), members_(members) {
  if (!is_sublocale_mask(*frame_, members_))
    fail(Errc::not_a_sublocale, "member set is not meet- and Heyting-closed");
}

std::vector<Elem> Sublocale::nucleus_table() const {
  std::vector<Elem> t(frame_->size());
  for (Elem a = 0; a < frame_->size(); ++a) t[a] = nucleus(a);
  return t;
}

Sublocale sublocale_unchecked(FramePtr frame, Mask members) {
  return Sublocale(std::move(frame), members, Sublocale::unchecked_t{});
}

Sublocale sublocale_generated_by(FramePtr frame, Mask seed) {
  Mask m = sublocale_closure_mask(*frame, seed);
  return sublocale_unchecked(std::move(frame), m);
}

Sublocale void_sublocale(FramePtr frame) {
  Mask m = elem_bit(frame->top());
  return sublocale_unchecked(std::move(frame), m);
}

Sublocale full_sublocale(FramePtr frame) {
  Mask m = frame->full();
  return sublocale_unchecked(std::move(frame), m);
}

Mask closed_mask(const FiniteFrame& f, Elem a) { return f.upset(a); }
Mask open_mask(const FiniteFrame& f, Elem a) { return f.open_mask_of(a); }

Sublocale closed_sublocale(FramePtr frame, Elem a) {
  Mask m = frame->upset(a);
  return sublocale_unchecked(std::move(frame), m);
}

Sublocale open_sublocale(FramePtr frame, Elem a) {
  Mask m = frame->open_mask_of(a);
  return sublocale_unchecked(std::move(frame), m);
}

bool is_closed(const Sublocale& s) { return s.members() == s.frame()->upset(s.bottom()); }

std::optional<Elem> open_witness(const Sublocale& s) {
  const FiniteFrame& f = *s.frame();
  for (Elem a = 0; a < f.size(); ++a)
    if (s.members() == f.open_mask_of(a)) return a;
  return std::nullopt;
}

bool is_open(const Sublocale& s) { return open_witness(s).has_value(); }

Sublocale closure(const Sublocale& s) { return closed_sublocale(s.frame(), s.bottom()); }

Sublocale interior(const Sublocale& s) {
  const FiniteFrame& f = *s.frame();
  Elem u = f.bottom();
  for (Elem b = 0; b < f.size(); ++b)
    if (mask_subset(f.open_mask_of(b), s.members())) u = f.join(u, b);
  return open_sublocale(s.frame(), u);
}

Sublocale boundary(const Sublocale& s) {
  const FiniteFrame& f = *s.frame();
  Elem u = f.bottom();
  for (Elem b = 0; b < f.size(); ++b)
    if (mask_subset(f.open_mask_of(b), s.members())) u = f.join(u, b);
  return closed_sublocale(s.frame(), f.join(s.bottom(), u));
}

Mask join_mask(const FiniteFrame& f, Mask a, Mask b) {
  Mask out = 0;
  for (Elem s : bits(a))
    for (Elem t : bits(b)) out |= elem_bit(f.meet(s, t));
  return out;
}

Sublocale join(const Sublocale& a, const Sublocale& b) {
  require_same_frame(a, b);
  return sublocale_unchecked(a.frame(), join_mask(*a.frame(), a.members(), b.members()));
}

Sublocale join(std::span<const Sublocale> list, FramePtr frame) {
  Mask acc = elem_bit(frame->top());
  for (const Sublocale& s : list) {
    if (s.frame().get() != frame.get()) fail(Errc::mixed_frames, "join over different frames");
    acc = join_mask(*frame, acc, s.members());
  }
  return sublocale_unchecked(std::move(frame), acc);
}

Sublocale intersect(const Sublocale& a, const Sublocale& b) {
  require_same_frame(a, b);
  return sublocale_unchecked(a.frame(), a.members() & b.members());
}

Sublocale intersect(std::span<const Sublocale> list, FramePtr frame) {
  Mask acc = frame->full();
  for (const Sublocale& s : list) {
    if (s.frame().get() != frame.get()) fail(Errc::mixed_frames, "intersect over different frames");
    acc &= s.members();
  }
  return sublocale_unchecked(std::move(frame), acc);
}

Sublocale supplement(const Sublocale& s, int cap) {
  if (is_closed(s)) return open_sublocale(s.frame(), s.bottom());
  if (auto a = open_witness(s)) return closed_sublocale(s.frame(), *a);
  auto all = enumerate_sublocales(s.frame(), cap);
  return supplement(s, all);
}

Sublocale supplement(const Sublocale& s, std::span<const Sublocale> all) {
  const FiniteFrame& f = *s.frame();
  if (is_closed(s)) return open_sublocale(s.frame(), s.bottom());
  if (auto a = open_witness(s)) return closed_sublocale(s.frame(), *a);
  Mask acc = f.full();
  for (const Sublocale& t : all)
    if (join_mask(f, s.members(), t.members()) == f.full()) acc &= t.members();
  return Sublocale(s.frame(), acc);
}

bool is_complemented(const Sublocale& s, std::span<const Sublocale> all) {
  Sublocale t = supplement(s, all);
  return (s.members() & t.members()) == elem_bit(s.frame()->top());
}

Sublocale booleanization(FramePtr frame) {
  Mask m = frame->booleanization_mask();
  return sublocale_unchecked(std::move(frame), m);
}

Sublocale relative_booleanization(const Sublocale& s) {
  const FiniteFrame& f = *s.frame();
  const Elem bot = s.bottom();
  Mask m = 0;
  for (Elem x : bits(s.members())) m |= elem_bit(f.heyting(x, bot));
  return Sublocale(s.frame(), m);
}

Elem relative_heyting(const Sublocale& s, Elem x, Elem y) {
  return s.nucleus(s.frame()->heyting(x, y));
}

Elem relative_pseudocomplement(const Sublocale& s, Elem x) {
  return s.frame()->heyting(x, s.bottom());
}

Mask dense_elements_in(const Sublocale& s) {
  const FiniteFrame& f = *s.frame();
  const Elem bot = s.bottom();
  Mask m = 0;
  for (Elem x : bits(s.members()))
    if (f.heyting(x, bot) == bot) m |= elem_bit(x);
  return m;
}

bool is_dense_in(Elem x, const Sublocale& s) {
  const Elem bot = s.bottom();
  return s.frame()->heyting(s.nucleus(x), bot) == bot;
}

bool is_nowhere_dense(const Sublocale& n) {
  return (n.members() & n.frame()->booleanization_mask()) == elem_bit(n.frame()->top());
}

bool is_nowhere_dense_in(const Sublocale& n, const Sublocale& s) {
  require_same_frame(n, s);
  if (!mask_subset(n.members(), s.members()))
    fail(Errc::not_a_sublocale_of, "relative nowhere density needs N <= S");
  return (n.members() & relative_booleanization(s).members()) == elem_bit(s.frame()->top());
}

Mask closure_in_mask(const FiniteFrame& f, Mask s, Mask a) {
  return s & f.upset(f.meet_of(a));
}

Mask interior_in_mask(const FiniteFrame& f, Mask s, Mask a) {
  Elem u = f.bottom();
  for (Elem c : bits(s))
    if (mask_subset(s & f.open_mask_of(c), a)) u = f.join(u, c);
  Elem nu = f.meet_of(s & f.upset(u));  // nu_S(u)
  return s & f.open_mask_of(nu);
}

Sublocale closure_in(const Sublocale& s, const Sublocale& a) {
  require_same_frame(s, a);
  if (!mask_subset(a.members(), s.members())) fail(Errc::not_contained, "closure_in needs A <= S");
  return sublocale_unchecked(s.frame(), closure_in_mask(*s.frame(), s.members(), a.members()));
}

Sublocale interior_in(const Sublocale& s, const Sublocale& a) {
  require_same_frame(s, a);
  if (!mask_subset(a.members(), s.members())) fail(Errc::not_contained, "interior_in needs A <= S");
  return sublocale_unchecked(s.frame(), interior_in_mask(*s.frame(), s.members(), a.members()));
}

std::vector<Sublocale> regular_closed_of(const Sublocale& s) {
  if (!is_closed(s)) fail(Errc::not_closed, "regular_closed_of needs a closed sublocale");
  const FiniteFrame& f = *s.frame();
  const Elem x = s.bottom();
  std::vector<Mask> masks;
  for (Elem a = 0; a < f.size(); ++a) masks.push_back(f.upset(f.heyting(a, x)));
  std::sort(masks.begin(), masks.end());
  masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
  std::vector<Sublocale> out;
  out.reserve(masks.size());
  for (Mask m : masks) out.push_back(sublocale_unchecked(s.frame(), m));
  return out;
}

std::vector<Sublocale> regular_closed_of_by_definition(const Sublocale& s) {
  if (!is_closed(s)) fail(Errc::not_closed, "regular_closed_of needs a closed sublocale");
  const FiniteFrame& f = *s.frame();
  std::vector<Mask> masks;
  for (Elem a = 0; a < f.size(); ++a) {
    Mask rel_open = f.open_mask_of(a) & s.members();
    masks.push_back(f.upset(f.meet_of(rel_open)) & s.members());
  }
  std::sort(masks.begin(), masks.end());
  masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
  std::vector<Sublocale> out;
  out.reserve(masks.size());
  for (Mask m : masks) out.push_back(sublocale_unchecked(s.frame(), m));
  return out;
}

bool is_regular_closed_in(const Sublocale& a, const Sublocale& s) {
  require_same_frame(a, s);
  if (!mask_subset(a.members(), s.members()))
    fail(Errc::not_contained, "is_regular_closed_in needs A <= S");
  const FiniteFrame& f = *s.frame();
  Mask inter = interior_in_mask(f, s.members(), a.members());
  return closure_in_mask(f, s.members(), inter) == a.members();
}

std::vector<Sublocale> enumerate_sublocales(FramePtr frame, int cap) {
  const FiniteFrame& f = *frame;
  if (f.size() > cap)
    fail(Errc::size_cap_exceeded, "sublocale enumeration capped at " + std::to_string(cap) +
                                      " elements, frame has " + std::to_string(f.size()));
  const int n = f.size();
  std::vector<Sublocale> out;
  Mask a = sublocale_closure_mask(f, 0);
  out.push_back(sublocale_unchecked(frame, a));
  // Ganter-style next-closure walk over the sublocale closure system.
  while (true) {
    bool found = false;
    for (Elem i = n - 1; i >= 0 && !found; --i) {
      if (mask_has(a, i)) continue;
      Mask low = a & (elem_bit(i) - 1);
      Mask b = sublocale_closure_mask(f, low | elem_bit(i));
      if ((b & (elem_bit(i) - 1)) == low) {
        a = b;
        out.push_back(sublocale_unchecked(frame, a));
        found = true;
      }
    }
    if (!found) break;
  }
  return out;
}

std::vector<Sublocale> enumerate_closed_nwd(FramePtr frame) {
  std::vector<Sublocale> out;
  for (Elem y : bits(frame->dense_elements())) out.push_back(closed_sublocale(frame, y));
  return out;
}

Sublocale nd_sublocale(FramePtr frame) {
  Elem m = frame->meet_of(frame->dense_elements());
  return closed_sublocale(std::move(frame), m);
}

bool is_strongly_submaximal(FramePtr /*frame*/, std::span<const Sublocale> all) {
  for (const Sublocale& s : all)
    if (s.is_dense() && !is_open(s)) return false;
  return true;
}

}  // namespace localelab
