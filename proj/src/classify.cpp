#include "localelab/classify.hpp"

#include <algorithm>

namespace localelab {

namespace {

void require_contained(const Sublocale& t, const Sublocale& s) {
  if (!t.same_frame(s)) fail(Errc::mixed_frames, "sublocales over different frames");
  if (!mask_subset(t.members(), s.members()))
    fail(Errc::not_contained, "inaccessibility needs T <= S");
}

Mask void_mask(const FiniteFrame& f) { return elem_bit(f.top()); }

}  // namespace

MndResult is_maximal_nwd(const Sublocale& n) {
  const FiniteFrame& f = *n.frame();
  if (!is_nowhere_dense(n)) return {false, std::nullopt};
  const Elem m = n.bottom();
  for (Elem y : bits(f.dense_elements()))
    if (f.leq(y, m) && f.heyting(m, y) == y) return {false, y};
  return {true, std::nullopt};
}

bool is_maximal_nwd_by_definition(const Sublocale& n, std::span<const Sublocale> all) {
  if (!is_nowhere_dense(n)) return false;
  const FiniteFrame& f = *n.frame();
  for (const Sublocale& s : all) {
    if (!is_nowhere_dense(s) || !mask_subset(n.members(), s.members())) continue;
    if ((n.members() & relative_booleanization(s).members()) == void_mask(f)) return false;
  }
  return true;
}

bool is_strongly_maximal_nwd(const Sublocale& n, std::span<const Sublocale> all) {
  if (!is_nowhere_dense(n)) return false;
  for (const Sublocale& s : all)
    if (is_nowhere_dense(s) && s.members() != n.members() &&
        mask_subset(n.members(), s.members()))
      return false;
  return true;
}

bool is_hmnd(const Sublocale& n) {
  if (n.is_void() || !is_closed(n) || !is_nowhere_dense(n)) return false;
  const FiniteFrame& f = *n.frame();
  const Elem x = n.bottom();
  for (Elem a = 0; a < f.size(); ++a) {
    Elem h = f.heyting(a, x);
    if (h == f.top()) continue;  // void part
    if (!is_maximal_nwd(closed_sublocale(n.frame(), h)).value) return false;
  }
  return true;
}

bool is_weakly_hmnd(const Sublocale& n) {
  if (n.is_void() || !is_nowhere_dense(n)) return false;
  const FiniteFrame& f = *n.frame();
  for (Elem a = 0; a < f.size(); ++a) {
    Mask rel_open = f.open_mask_of(a) & n.members();
    Mask r = f.upset(f.meet_of(rel_open)) & n.members();  // cl_N(N ^ o(a))
    if (r == void_mask(f)) continue;
    if (!is_maximal_nwd(sublocale_unchecked(n.frame(), r)).value) return false;
  }
  return true;
}

bool is_remote(const Sublocale& t) {
  return mask_subset(t.members(), t.frame()->booleanization_mask());
}

bool is_remote_by_definition(const Sublocale& t, std::span<const Sublocale> all) {
  const Mask o = void_mask(*t.frame());
  for (const Sublocale& s : all)
    if (is_nowhere_dense(s) && (t.members() & s.members()) != o) return false;
  return true;
}

bool is_remote_from_unchecked(const Sublocale& t, const Sublocale& s) {
  if (!t.same_frame(s)) fail(Errc::mixed_frames, "sublocales over different frames");
  const FiniteFrame& f = *t.frame();
  const Mask o = void_mask(f);
  for (Elem z : bits(dense_elements_in(s)))
    if ((t.members() & f.upset(z)) != o) return false;
  return true;
}

bool is_remote_from(const Sublocale& t, const Sublocale& s) {
  if (!s.is_dense()) fail(Errc::not_dense, "remote-from needs a dense sublocale");
  return is_remote_from_unchecked(t, s);
}

bool is_star_remote_from(const Sublocale& t, const Sublocale& s, const Sublocale& supp_s) {
  return is_remote_from(t, s) && mask_subset(t.members(), supp_s.members());
}

Sublocale remote_join(const Sublocale& s, std::span<const Sublocale> all) {
  const FiniteFrame& f = *s.frame();
  Mask acc = void_mask(f);
  for (const Sublocale& t : all)
    if (is_remote_from_unchecked(t, s)) acc = join_mask(f, acc, t.members());
  return sublocale_unchecked(s.frame(), acc);
}

Sublocale rs_sublocale(const Sublocale& s, std::span<const Sublocale> all) {
  if (!s.is_dense()) fail(Errc::not_dense, "Rs needs a dense sublocale");
  return remote_join(s, all);
}

bool is_inaccessible(const Sublocale& t, const Sublocale& s, const Sublocale& supp_s) {
  require_contained(t, s);
  const FiniteFrame& f = *t.frame();
  const Mask o = void_mask(f);
  for (Elem z : bits(dense_elements_in(supp_s)))
    if ((t.members() & f.upset(z)) != o) return false;
  return true;
}

bool is_almost_inaccessible(const Sublocale& t, const Sublocale& s, const Sublocale& supp_s) {
  require_contained(t, s);
  const FiniteFrame& f = *t.frame();
  for (Elem z : bits(dense_elements_in(supp_s))) {
    Mask cl = closure_in_mask(f, s.members(), s.members() & f.open_mask_of(z));
    if (!mask_subset(t.members(), cl)) return false;
  }
  return true;
}

bool is_inaccessible(const Sublocale& t, const Sublocale& s, std::span<const Sublocale> all) {
  return is_inaccessible(t, s, supplement(s, all));
}

bool is_almost_inaccessible(const Sublocale& t, const Sublocale& s,
                            std::span<const Sublocale> all) {
  return is_almost_inaccessible(t, s, supplement(s, all));
}

Universe Universe::build(FramePtr frame, int cap) {
  Universe u;
  u.frame_ = frame;
  u.subs_ = enumerate_sublocales(frame, cap);
  const FiniteFrame& f = *frame;
  const int m = static_cast<int>(u.subs_.size());
  const Mask o = void_mask(f);
  u.info_.resize(m);
  for (int i = 0; i < m; ++i) u.index_[u.subs_[i].members()] = i;

  for (int i = 0; i < m; ++i) {
    SubInfo& si = u.info_[i];
    si.members = u.subs_[i].members();
    si.bottom = f.meet_of(si.members);
    si.is_void = si.members == o;
    si.closed = si.members == f.upset(si.bottom);
    si.open = false;
    for (Elem a = 0; a < f.size() && !si.open; ++a) si.open = si.members == f.open_mask_of(a);
    si.dense = mask_has(si.members, f.bottom());
    si.nwd = (si.members & f.booleanization_mask()) == o;
    si.brel = 0;
    for (Elem x : bits(si.members)) si.brel |= elem_bit(f.heyting(x, si.bottom));
    for (Elem x : bits(si.members))
      if (f.heyting(x, si.bottom) == si.bottom) si.rel_dense.push_back(x);
  }

  // Supplements: meet of every T with S v T = L; complement fast path for
  // closed and open sublocales. On deliberately corrupted tables the fast-path
  // masks may fail to be sublocales, so fall back to the scan, whose result is
  // an intersection of enumerated members and therefore always present.
  for (int i = 0; i < m; ++i) {
    SubInfo& si = u.info_[i];
    Mask supp = 0;
    bool found = false;
    if (si.closed) {
      supp = f.open_mask_of(si.bottom);
      found = u.index_of(supp) >= 0;
    }
    if (!found) {
      for (Elem a = 0; a < f.size() && !found; ++a)
        if (si.members == f.open_mask_of(a)) {
          supp = f.upset(a);
          found = u.index_of(supp) >= 0;
        }
    }
    if (!found) {
      supp = f.full();
      for (int j = 0; j < m; ++j)
        if (join_mask(f, si.members, u.info_[j].members) == f.full()) supp &= u.info_[j].members;
    }
    si.supplement = u.index_of(supp);
    si.complemented = (si.members & supp) == o;
  }

  for (int i = 0; i < m; ++i) {
    SubInfo& si = u.info_[i];
    for (int j = 0; j < m; ++j)
      if (mask_subset(u.info_[j].members, si.members) && (u.info_[j].members & si.brel) == o)
        si.nwd_subs.push_back(j);
  }

  for (int i = 0; i < m; ++i) {
    SubInfo& si = u.info_[i];
    auto r = is_maximal_nwd(u.subs_[i]);
    si.mnd = r.value;
    si.mnd_witness = r.witness;
    si.mnd_def = si.nwd;
    if (si.nwd) {
      for (int j = 0; j < m && si.mnd_def; ++j) {
        const SubInfo& sj = u.info_[j];
        if (sj.nwd && mask_subset(si.members, sj.members) && (si.members & sj.brel) == o)
          si.mnd_def = false;
      }
    }
    si.smnd = si.nwd;
    if (si.nwd) {
      for (int j = 0; j < m && si.smnd; ++j)
        if (u.info_[j].nwd && u.info_[j].members != si.members &&
            mask_subset(si.members, u.info_[j].members))
          si.smnd = false;
    }
    si.hmnd = is_hmnd(u.subs_[i]);
    si.whmnd = is_weakly_hmnd(u.subs_[i]);
    si.remote = mask_subset(si.members, f.booleanization_mask());
    si.remote_def = true;
    for (int j = 0; j < m && si.remote_def; ++j)
      if (u.info_[j].nwd && (si.members & u.info_[j].members) != o) si.remote_def = false;
  }
  return u;
}

int Universe::index_of(Mask members) const {
  auto it = index_.find(members);
  return it == index_.end() ? -1 : it->second;
}

bool Universe::inaccessible(Mask t, int s) const {
  const FiniteFrame& f = *frame_;
  const Mask o = elem_bit(f.top());
  const SubInfo& supp = info_[info_[s].supplement];
  for (Elem z : supp.rel_dense)
    if ((t & f.upset(z)) != o) return false;
  return true;
}

bool Universe::almost_inaccessible(Mask t, int s) const {
  const FiniteFrame& f = *frame_;
  const Mask sm = info_[s].members;
  const SubInfo& supp = info_[info_[s].supplement];
  for (Elem z : supp.rel_dense) {
    Mask cl = closure_in_mask(f, sm, sm & f.open_mask_of(z));
    if (!mask_subset(t, cl)) return false;
  }
  return true;
}

bool Universe::inaccessible_def(Mask t, int s) const {
  const FiniteFrame& f = *frame_;
  const Mask o = elem_bit(f.top());
  const SubInfo& supp = info_[info_[s].supplement];
  for (int j : supp.nwd_subs) {
    Mask nbar = f.upset(info_[j].bottom);  // closure of N in L
    if ((t & nbar) != o) return false;
  }
  return true;
}

bool Universe::almost_inaccessible_def(Mask t, int s) const {
  const FiniteFrame& f = *frame_;
  const Mask sm = info_[s].members;
  const SubInfo& supp = info_[info_[s].supplement];
  for (int j : supp.nwd_subs) {
    Mask lnbar = f.open_mask_of(info_[j].bottom);  // L minus closure(N)
    Mask cl = closure_in_mask(f, sm, sm & lnbar);
    if (!mask_subset(t, cl)) return false;
  }
  return true;
}

bool Universe::remote_from(Mask t, int s) const {
  const FiniteFrame& f = *frame_;
  const Mask o = elem_bit(f.top());
  for (Elem z : info_[s].rel_dense)
    if ((t & f.upset(z)) != o) return false;
  return true;
}

std::string Universe::sub_name(Mask members) const {
  std::string out = "{";
  bool first = true;
  for (Elem a : bits(members)) {
    if (!first) out += ",";
    out += frame_->name(a);
    first = false;
  }
  return out + "}";
}

std::string Universe::sub_name(int i) const { return sub_name(info_[i].members); }

Classification classify_sublocale(const Universe& u, const Sublocale& s) {
  Classification c;
  const int i = u.index_of(s.members());
  if (i < 0) fail(Errc::not_a_sublocale, "not a sublocale of the given frame");
  const SubInfo& si = u.info_at(i);
  c.flags = {
      {"void", si.is_void},
      {"dense", si.dense},
      {"closed", si.closed},
      {"open", si.open},
      {"complemented", si.complemented},
      {"nowhere_dense", si.nwd},
      {"maximal_nwd", si.mnd},
      {"strongly_maximal_nwd", si.smnd},
      {"hmnd", si.hmnd},
      {"weakly_hmnd", si.whmnd},
      {"remote", si.remote},
      {"inaccessible_self", u.inaccessible(si.members, i)},
      {"almost_inaccessible_self", u.almost_inaccessible(si.members, i)},
  };
  if (si.mnd_witness)
    c.witnesses.emplace_back("maximal_nwd_defeater", u.frame()->name(*si.mnd_witness));
  c.witnesses.emplace_back("supplement", u.sub_name(si.supplement));
  c.witnesses.emplace_back("nucleus_bottom", u.frame()->name(si.bottom));
  return c;
}

}  // namespace localelab
