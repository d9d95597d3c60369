#include "localelab/maps.hpp"

#include <algorithm>
#include <numeric>

namespace localelab {

namespace {

// Checks that h : M -> L preserves 0, 1, binary meets and binary joins;
// on finite frames that is the full frame homomorphism contract.
void validate_hom(const FiniteFrame& m, const FiniteFrame& l, const std::vector<Elem>& h) {
  if (h.size() != static_cast<std::size_t>(m.size())) fail(Errc::not_a_frame_hom, "arity mismatch");
  for (Elem b = 0; b < m.size(); ++b)
    if (h[b] < 0 || h[b] >= l.size()) fail(Errc::not_a_frame_hom, "value out of range");
  if (h[m.bottom()] != l.bottom()) fail(Errc::not_a_frame_hom, "does not preserve 0");
  if (h[m.top()] != l.top()) fail(Errc::not_a_frame_hom, "does not preserve 1");
  for (Elem a = 0; a < m.size(); ++a)
    for (Elem b = 0; b < m.size(); ++b) {
      if (h[m.meet(a, b)] != l.meet(h[a], h[b]))
        fail(Errc::not_a_frame_hom, "does not preserve meet at " + m.name(a) + "," + m.name(b));
      if (h[m.join(a, b)] != l.join(h[a], h[b]))
        fail(Errc::not_a_frame_hom, "does not preserve join at " + m.name(a) + "," + m.name(b));
    }
}

}  // namespace

LocalicMap from_frame_hom(FramePtr source_l, FramePtr target_m, const std::vector<Elem>& h,
                          std::string label) {
  const FiniteFrame& l = *source_l;
  const FiniteFrame& m = *target_m;
  validate_hom(m, l, h);

  LocalicMap out;
  out.source = std::move(source_l);
  out.target = std::move(target_m);
  out.f_star = h;
  out.f.assign(l.size(), -1);
  for (Elem a = 0; a < l.size(); ++a) {
    Elem v = m.bottom();
    for (Elem b = 0; b < m.size(); ++b)
      if (l.leq(h[b], a)) v = m.join(v, b);
    out.f[a] = v;
  }
  // Adjunction h(b) <= a  <=>  b <= f(a); automatic once h preserves joins.
  for (Elem a = 0; a < l.size(); ++a)
    for (Elem b = 0; b < m.size(); ++b)
      if (l.leq(h[b], a) != m.leq(b, out.f[a]))
        fail(Errc::not_a_frame_hom, "adjunction failed; h does not preserve all joins");
  out.label = std::move(label);
  return out;
}

LocalicMap identity_map(FramePtr frame) {
  std::vector<Elem> h(frame->size());
  std::iota(h.begin(), h.end(), 0);
  return from_frame_hom(frame, frame, h, "id");
}

Sublocale image(const LocalicMap& f, const Sublocale& a) {
  if (a.frame().get() != f.source.get()) fail(Errc::mixed_frames, "image needs a source sublocale");
  Mask out = 0;
  for (Elem s : bits(a.members())) out |= elem_bit(f.f[s]);
  return Sublocale(f.target, out);  // localic images of sublocales are sublocales
}

Sublocale preimage(const LocalicMap& f, const Sublocale& t) {
  if (t.frame().get() != f.target.get()) fail(Errc::mixed_frames, "preimage needs a target sublocale");
  const FiniteFrame& l = *f.source;
  Mask p = 0;
  for (Elem a = 0; a < l.size(); ++a)
    if (t.contains(f.f[a])) p |= elem_bit(a);
  // p is meet-closed and contains the top; prune to the Heyting fixpoint.
  for (bool changed = true; changed;) {
    changed = false;
    for (Elem s : bits(p)) {
      for (Elem x = 0; x < l.size(); ++x)
        if (!mask_has(p, l.heyting(x, s))) {
          p &= ~elem_bit(s);
          changed = true;
          break;
        }
    }
  }
  return Sublocale(f.source, p);
}

Sublocale preimage_by_join(const LocalicMap& f, const Sublocale& t,
                           std::span<const Sublocale> all_source) {
  if (t.frame().get() != f.target.get()) fail(Errc::mixed_frames, "preimage needs a target sublocale");
  const FiniteFrame& l = *f.source;
  Mask p = 0;
  for (Elem a = 0; a < l.size(); ++a)
    if (t.contains(f.f[a])) p |= elem_bit(a);
  Mask acc = elem_bit(l.top());
  for (const Sublocale& s : all_source)
    if (mask_subset(s.members(), p)) acc = join_mask(l, acc, s.members());
  return Sublocale(f.source, acc);
}

bool is_open_map(const LocalicMap& f) {
  const FiniteFrame& l = *f.source;
  const FiniteFrame& m = *f.target;
  for (Elem a = 0; a < l.size(); ++a) {
    Mask img = 0;
    for (Elem s : bits(l.open_mask_of(a))) img |= elem_bit(f.f[s]);
    bool open = false;
    for (Elem b = 0; b < m.size() && !open; ++b) open = img == m.open_mask_of(b);
    if (!open) return false;
  }
  return true;
}

bool is_open_map_frobenius(const LocalicMap& f) {
  const FiniteFrame& l = *f.source;
  const FiniteFrame& m = *f.target;
  // h = f_star : M -> L preserves all meets here, so its left adjoint exists:
  // h_!(x) = /\ {b : x <= h(b)}.
  std::vector<Elem> hbang(l.size());
  for (Elem x = 0; x < l.size(); ++x) {
    Elem v = m.top();
    for (Elem b = 0; b < m.size(); ++b)
      if (l.leq(x, f.f_star[b])) v = m.meet(v, b);
    hbang[x] = v;
  }
  for (Elem x = 0; x < l.size(); ++x)
    for (Elem b = 0; b < m.size(); ++b)
      if (m.leq(hbang[x], b) != l.leq(x, f.f_star[b])) return false;  // adjunction sanity
  for (Elem a = 0; a < m.size(); ++a)
    for (Elem x = 0; x < l.size(); ++x)
      if (hbang[l.meet(f.f_star[a], x)] != m.meet(a, hbang[x])) return false;
  return true;
}

bool sends_dense_to_dense(const LocalicMap& f) {
  const FiniteFrame& l = *f.source;
  const FiniteFrame& m = *f.target;
  for (Elem a : bits(l.dense_elements()))
    if (!m.is_dense(f.f[a])) return false;
  return true;
}

bool star_sends_dense_to_dense(const LocalicMap& f) {
  const FiniteFrame& l = *f.source;
  const FiniteFrame& m = *f.target;
  for (Elem b : bits(m.dense_elements()))
    if (!l.is_dense(f.f_star[b])) return false;
  return true;
}

bool is_injective(const LocalicMap& f) {
  const FiniteFrame& l = *f.source;
  for (Elem a = 0; a < l.size(); ++a)
    for (Elem b = a + 1; b < l.size(); ++b)
      if (f.f[a] == f.f[b]) return false;
  return true;
}

namespace {

// Backtracking over a linear extension of M; join-reducible values are forced.
void search_homs(const FiniteFrame& m, const FiniteFrame& l, const std::vector<Elem>& order,
                 std::size_t pos, std::vector<Elem>& h, std::vector<std::vector<Elem>>& out) {
  if (pos == order.size()) {
    out.push_back(h);
    return;
  }
  const Elem c = order[pos];

  // Checks every meet/join constraint whose participants and result are all
  // assigned; pairs of earlier elements whose meet or join lands on c become
  // checkable only now.
  auto consistent = [&](Elem v) {
    if (c == m.bottom() && v != l.bottom()) return false;
    if (c == m.top() && v != l.top()) return false;
    h[c] = v;
    for (std::size_t i = 0; i <= pos; ++i) {
      const Elem a = order[i];
      if (a != c) {
        if (m.leq(a, c) && !l.leq(h[a], v)) return false;
        if (m.leq(c, a) && !l.leq(v, h[a])) return false;
      }
      for (std::size_t j = i; j <= pos; ++j) {
        const Elem b = order[j];
        const Elem mt = m.meet(a, b), jn = m.join(a, b);
        if (h[mt] >= 0 && h[mt] != l.meet(h[a], h[b])) return false;
        if (h[jn] >= 0 && h[jn] != l.join(h[a], h[b])) return false;
      }
    }
    return true;
  };

  // Forced when c is a join of two earlier elements.
  for (std::size_t i = 0; i < pos; ++i)
    for (std::size_t j = i; j < pos; ++j)
      if (m.join(order[i], order[j]) == c && order[i] != c && order[j] != c) {
        Elem v = l.join(h[order[i]], h[order[j]]);
        if (consistent(v)) search_homs(m, l, order, pos + 1, h, out);
        h[c] = -1;
        return;
      }

  for (Elem v = 0; v < l.size(); ++v) {
    if (consistent(v)) search_homs(m, l, order, pos + 1, h, out);
    h[c] = -1;
  }
}

}  // namespace

std::vector<LocalicMap> enumerate_localic_maps(FramePtr l, FramePtr m, int cap) {
  if (l->size() > cap || m->size() > cap)
    fail(Errc::size_cap_exceeded, "map enumeration capped at " + std::to_string(cap) + " elements");
  const FiniteFrame& fm = *m;

  std::vector<Elem> order(fm.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](Elem a, Elem b) { return mask_count(fm.downset(a)) < mask_count(fm.downset(b)); });

  std::vector<Elem> h(fm.size(), -1);
  std::vector<std::vector<Elem>> homs;
  search_homs(fm, *l, order, 0, h, homs);

  std::vector<LocalicMap> out;
  out.reserve(homs.size());
  int k = 0;
  for (auto& hom : homs)
    out.push_back(from_frame_hom(l, m, hom,
                                 l->label() + "->" + m->label() + "#" + std::to_string(k++)));
  return out;
}

}  // namespace localelab
