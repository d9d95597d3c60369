#include "localelab/theorems.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <thread>

namespace localelab {

namespace {

std::string frame_tag(const Universe& u) {
  return u.frame()->label() + "[n=" + std::to_string(u.frame()->size()) + "]";
}

std::string onoff(bool b) { return b ? "1" : "0"; }

// A derived member set that is not an enumerated sublocale means the frame
// tables are inconsistent (mutation mode); report it instead of crashing.
int lookup_sub(const Universe& u, Mask m, CheckSink& sink, const std::string& ctx) {
  int i = u.index_of(m);
  if (i < 0)
    sink.expect(false, [&] { return u.frame()->label() + " " + ctx; },
                [&] { return "derived set " + u.sub_name(m) + " is not a sublocale"; });
  return i;
}

// Maps serialize as explicit element-image arrays in failure reports.
std::string map_tag(const LocalicMap& f) {
  std::string s = f.label + " f=[";
  for (Elem a = 0; a < f.source->size(); ++a) {
    if (a) s += ",";
    s += std::to_string(f.f[a]);
  }
  s += "] f*=[";
  for (Elem b = 0; b < f.target->size(); ++b) {
    if (b) s += ",";
    s += std::to_string(f.f_star[b]);
  }
  return s + "]";
}

int closed_index(const Universe& u, Elem y, CheckSink& sink, const std::string& ctx) {
  return lookup_sub(u, u.frame()->upset(y), sink, ctx);
}

Mask void_of(const FiniteFrame& f) { return elem_bit(f.top()); }

// Join of all sublocales remote from S, by index.
Mask rs_mask(const Universe& u, int s) {
  const FiniteFrame& f = *u.frame();
  Mask acc = void_of(f);
  for (int t = 0; t < u.count(); ++t)
    if (u.remote_from(u.info_at(t).members, s)) acc = join_mask(f, acc, u.info_at(t).members);
  return acc;
}

}  // namespace

Corpus Corpus::build(const CorpusConfig& cfg) {
  Corpus c;
  c.cfg = cfg;

  std::vector<FramePtr> fs;
  if (!cfg.frames_override.empty()) {
    fs = cfg.frames_override;
  } else {
    fs = frames_from_posets_up_to(cfg.max_poset, std::max(cfg.max_poset, kDefaultPosetCap));
  }
  c.frames.reserve(fs.size());
  for (auto& f : fs) c.frames.push_back(Universe::build(f, cfg.sublocale_cap));

  for (FiniteSpace& x : spaces_up_to_homeo(cfg.max_points)) {
    FramePtr frame = open_set_frame(x);
    Universe uni = Universe::build(frame, std::max(cfg.sublocale_cap, frame->size()));
    const Mask all = x.all_points();
    std::vector<Mask> induced;
    std::vector<int> induced_idx;
    for (Mask a = 0;; ++a) {
      Mask mem = induced_sublocale(x, a, frame).members();
      induced.push_back(mem);
      induced_idx.push_back(uni.index_of(mem));
      if (a == all) break;
    }
    c.spaces.push_back(SpaceCtx{std::move(x), frame, std::move(uni), std::move(induced),
                                std::move(induced_idx)});
  }

  const int map_poset = std::max(0, std::min(cfg.max_map_size - 1, kDefaultPosetCap));
  for (auto& f : frames_from_posets_up_to(map_poset))
    if (f->size() <= cfg.max_map_size)
      c.map_frames.push_back(Universe::build(f, std::max(cfg.sublocale_cap, f->size())));
  for (std::size_t i = 0; i < c.map_frames.size(); ++i)
    for (std::size_t j = 0; j < c.map_frames.size(); ++j) {
      auto maps = enumerate_localic_maps(c.map_frames[i].frame(), c.map_frames[j].frame(),
                                         std::max(cfg.max_map_size, 1));
      for (LocalicMap& mp : maps) {
        MapCtx ctx;
        ctx.src = static_cast<int>(i);
        ctx.tgt = static_cast<int>(j);
        ctx.open = is_open_map(mp);
        ctx.frobenius_open = is_open_map_frobenius(mp);
        ctx.d2d = sends_dense_to_dense(mp);
        ctx.star_d2d = star_sends_dense_to_dense(mp);
        ctx.injective = is_injective(mp);
        ctx.map = std::move(mp);
        c.maps.push_back(std::move(ctx));
      }
    }
  return c;
}

namespace {

using Run = std::function<void(const Corpus&, CheckSink&)>;

void add_check(std::vector<TheoremCheck>& reg, std::string id, std::string anchor,
               std::string domain, Run run) {
  reg.push_back(TheoremCheck{std::move(id), std::move(anchor), std::move(domain), std::move(run)});
}

// ---------------------------------------------------------------------------
// Frame-corpus checks
// ---------------------------------------------------------------------------

void chk_three_chain(const Corpus&, CheckSink& sink) {
  auto f = chain_frame(3);
  Universe u = Universe::build(f, 16);
  const Elem a = 1;
  sink.instance();
  sink.hypothesis();
  auto inst = [&] { return std::string("three-element chain"); };
  sink.expect(u.count() == 4, inst, [&] { return "sublocale count " + std::to_string(u.count()); });

  std::vector<int> closed_nwd_nonvoid;
  for (int i = 0; i < u.count(); ++i) {
    const SubInfo& si = u.info_at(i);
    if (si.closed && si.nwd && !si.is_void) closed_nwd_nonvoid.push_back(i);
  }
  sink.expect(closed_nwd_nonvoid.size() == 1 &&
                  u.info_at(closed_nwd_nonvoid[0]).members == f->upset(a),
              inst, [&] { return "non-void closed nwd sublocales != {c(a)}"; });

  int ca = u.index_of(f->upset(a));
  sink.expect(ca >= 0 && u.info_at(ca).mnd && u.info_at(ca).mnd_def, inst,
              [&] { return "c(a) not maximal nowhere dense"; });

  Mask bl = f->booleanization_mask();
  sink.expect(bl == (elem_bit(0) | elem_bit(2)), inst, [&] { return "B3 != {0,1}"; });
  int bidx = u.index_of(bl);
  sink.expect(bidx >= 0 && u.info_at(u.info_at(bidx).supplement).members == f->upset(a), inst,
              [&] { return "supplement(B3) != c(a)"; });
}

void chk_mndcmndlemma(const Corpus& c, CheckSink& sink) {
  for (const Universe& u : c.frames) {
    const FiniteFrame& f = *u.frame();
    const Mask o = void_of(f);
    for (int k = 0; k < u.count(); ++k) {
      const SubInfo& sk = u.info_at(k);
      int clk = lookup_sub(u, f.upset(sk.bottom), sink, "closure of " + u.sub_name(k));
      if (clk < 0) continue;
      const SubInfo& sck = u.info_at(clk);
      for (int n = 0; n < u.count(); ++n) {
        const SubInfo& sn = u.info_at(n);
        if (!mask_subset(sn.members, sk.members)) continue;
        sink.instance();
        sink.hypothesis();
        bool in_k = (sn.members & sk.brel) == o;
        bool in_clk = (sn.members & sck.brel) == o;
        sink.expect(in_k == in_clk,
                    [&] { return frame_tag(u) + " N=" + u.sub_name(n) + " K=" + u.sub_name(k); },
                    [&] { return "nwd-in-K=" + onoff(in_k) + " nwd-in-cl(K)=" + onoff(in_clk); });
      }
    }
  }
}

void chk_mndcmnd(const Corpus& c, CheckSink& sink) {
  for (const Universe& u : c.frames) {
    const FiniteFrame& f = *u.frame();
    const Mask o = void_of(f);
    for (int n = 0; n < u.count(); ++n) {
      const SubInfo& sn = u.info_at(n);
      sink.instance();
      if (!sn.nwd) continue;
      sink.hypothesis();

      bool c1 = sn.mnd_def;
      bool lookup_ok = true;
      auto no_closed_nwd_above = [&](Mask mem) {
        for (Elem y : bits(f.dense_elements())) {
          if (!mask_subset(mem, f.upset(y))) continue;
          int cy = closed_index(u, y, sink, "c(" + f.name(y) + ")");
          if (cy < 0) { lookup_ok = false; return false; }
          if ((mem & u.info_at(cy).brel) == o) return false;
        }
        return true;
      };
      bool c2 = no_closed_nwd_above(sn.members);
      int cl = lookup_sub(u, f.upset(sn.bottom), sink, "closure of " + u.sub_name(n));
      if (cl < 0 || !lookup_ok) continue;
      bool c3 = u.info_at(cl).mnd_def;
      bool c4 = no_closed_nwd_above(u.info_at(cl).members);
      if (!lookup_ok) continue;
      bool c5 = true;
      for (Elem y : bits(f.dense_elements()))
        if (f.leq(y, sn.bottom) && f.heyting(sn.bottom, y) == y) { c5 = false; break; }

      sink.expect(c1 == c2 && c2 == c3 && c3 == c4 && c4 == c5,
                  [&] { return frame_tag(u) + " N=" + u.sub_name(n); },
                  [&] {
                    return "(1..5)=" + onoff(c1) + onoff(c2) + onoff(c3) + onoff(c4) + onoff(c5);
                  });
    }
  }
}

void chk_mndcmnd_closed(const Corpus& c, CheckSink& sink) {
  for (const Universe& u : c.frames) {
    const FiniteFrame& f = *u.frame();
    for (Elem x = 0; x < f.size(); ++x) {
      sink.instance();
      sink.hypothesis();
      int cx = closed_index(u, x, sink, "c(" + f.name(x) + ")");
      if (cx < 0) continue;
      bool lhs = u.info_at(cx).mnd;
      bool rhs = f.is_dense(x);
      if (rhs)
        for (Elem y : bits(f.dense_elements()))
          if (f.leq(y, x) && f.heyting(x, y) == y) { rhs = false; break; }
      sink.expect(lhs == rhs, [&] { return frame_tag(u) + " x=" + f.name(x); },
                  [&] { return "mnd(c(x))=" + onoff(lhs) + " criterion=" + onoff(rhs); });
    }
  }
}

void chk_ndsubspace(const Corpus& c, CheckSink& sink) {
  for (const Universe& u : c.frames) {
    const FiniteFrame& f = *u.frame();
    const Mask o = void_of(f);
    for (int a = 0; a < u.count(); ++a) {
      const SubInfo& sa = u.info_at(a);
      if (!sa.complemented) continue;
      for (int fi = 0; fi < u.count(); ++fi) {
        const SubInfo& sf = u.info_at(fi);
        if (!mask_subset(sf.members, sa.members)) continue;
        sink.instance();
        sink.hypothesis();
        bool lhs = (sf.members & sa.brel) == o;
        Mask meets_open = sa.members & f.open_mask_of(sf.bottom);  // A ^ (L minus cl F)
        bool rhs = mask_subset(sa.members, f.upset(f.meet_of(meets_open)));
        sink.expect(lhs == rhs,
                    [&] { return frame_tag(u) + " A=" + u.sub_name(a) + " F=" + u.sub_name(fi); },
                    [&] { return "nwd-in-A=" + onoff(lhs) + " closure-criterion=" + onoff(rhs); });
      }
    }
  }
}

void chk_mndprop1(const Corpus& c, CheckSink& sink) {
  for (const Universe& u : c.frames) {
    for (int fi = 0; fi < u.count(); ++fi) {
      const SubInfo& sf = u.info_at(fi);
      if (!sf.mnd) continue;
      for (int a = 0; a < u.count(); ++a) {
        const SubInfo& sa = u.info_at(a);
        sink.instance();
        if (!sa.nwd || !mask_subset(sf.members, sa.members)) continue;
        sink.hypothesis();
        sink.expect(sa.mnd,
                    [&] { return frame_tag(u) + " F=" + u.sub_name(fi) + " A=" + u.sub_name(a); },
                    [&] { return "nwd superset of a m.n.d sublocale is not m.n.d"; });
      }
    }
  }
}

void chk_mnd_join(const Corpus& c, CheckSink& sink) {
  for (const Universe& u : c.frames) {
    const FiniteFrame& f = *u.frame();
    for (int i = 0; i < u.count(); ++i) {
      if (!u.info_at(i).mnd) continue;
      for (int j = i; j < u.count(); ++j) {
        if (!u.info_at(j).mnd) continue;
        sink.instance();
        sink.hypothesis();
        Mask jn = join_mask(f, u.info_at(i).members, u.info_at(j).members);
        int k = u.index_of(jn);
        sink.expect(k >= 0 && u.info_at(k).mnd,
                    [&] { return frame_tag(u) + " F=" + u.sub_name(i) + " G=" + u.sub_name(j); },
                    [&] { return "join " + u.sub_name(jn) + " not m.n.d"; });
      }
    }
  }
}

void chk_mndprop2(const Corpus& c, CheckSink& sink) {
  for (const Universe& u : c.frames) {
    const FiniteFrame& f = *u.frame();
    const Mask o = void_of(f);
    for (int fi = 0; fi < u.count(); ++fi) {
      const SubInfo& sf = u.info_at(fi);
      sink.instance();
      if (sf.is_void || !sf.nwd) continue;
      const SubInfo& supp = u.info_at(sf.supplement);
      bool hyp = true;
      for (int j : supp.nwd_subs) {
        Mask lminus_cln = f.open_mask_of(u.info_at(j).bottom);
        if ((sf.members & lminus_cln) == o) { hyp = false; break; }
      }
      if (!hyp) continue;
      sink.hypothesis();
      sink.expect(sf.mnd, [&] { return frame_tag(u) + " F=" + u.sub_name(fi); },
                  [&] { return "meets every L\\cl(N) yet not m.n.d"; });
    }
  }
}

void chk_strongly_mnd(const Corpus& c, CheckSink& sink) {
  for (const Universe& u : c.frames) {
    const FiniteFrame& f = *u.frame();
    sink.instance();
    sink.hypothesis();
    Mask nd = f.upset(f.meet_of(f.dense_elements()));
    int nd_idx = lookup_sub(u, nd, sink, "Nd(L)");
    if (nd_idx < 0) continue;
    bool e1 = false;
    for (int i = 0; i < u.count() && !e1; ++i) e1 = u.info_at(i).smnd;
    bool e2 = u.info_at(nd_idx).nwd;
    sink.expect(e1 == e2, [&] { return frame_tag(u); },
                [&] { return "has-smnd=" + onoff(e1) + " Nd-nwd=" + onoff(e2); });
    if (!f.is_boolean()) {
      bool e3 = u.info_at(nd_idx).mnd;
      sink.expect(e2 == e3, [&] { return frame_tag(u) + " (non-Boolean)"; },
                  [&] { return "Nd-nwd=" + onoff(e2) + " Nd-mnd=" + onoff(e3); });
    }
    for (int i = 0; i < u.count(); ++i) {
      bool expect_smnd = u.info_at(i).members == nd && u.info_at(nd_idx).nwd;
      sink.expect(u.info_at(i).smnd == expect_smnd,
                  [&] { return frame_tag(u) + " N=" + u.sub_name(i); },
                  [&] { return "strongly-m.n.d flag disagrees with Nd criterion"; });
    }
  }
}

void chk_mndexample(const Corpus& c, CheckSink& sink) {
  for (const Universe& u : c.frames) {
    const FiniteFrame& f = *u.frame();
    sink.instance();
    int void_idx = lookup_sub(u, void_of(f), sink, "void sublocale");
    if (void_idx < 0) continue;
    sink.expect(!u.info_at(void_idx).mnd, [&] { return frame_tag(u); },
                [&] { return "the void sublocale claims to be m.n.d"; });
    if (f.is_boolean()) {
      for (int i = 0; i < u.count(); ++i)
        sink.expect(!u.info_at(i).mnd,
                    [&] { return frame_tag(u) + " (Boolean) N=" + u.sub_name(i); },
                    [&] { return "Boolean locale with a m.n.d sublocale"; });
    }
    bool submax = true;
    for (int i = 0; i < u.count() && submax; ++i)
      if (u.info_at(i).dense && !u.info_at(i).open) submax = false;
    if (submax && !f.is_boolean()) {
      sink.hypothesis();
      Mask nd = f.upset(f.meet_of(f.dense_elements()));
      int nd_idx = lookup_sub(u, nd, sink, "Nd(L)");
      int bl_idx = lookup_sub(u, f.booleanization_mask(), sink, "BL");
      if (nd_idx < 0 || bl_idx < 0) continue;
      sink.expect(u.info_at(nd_idx).mnd, [&] { return frame_tag(u) + " strongly submaximal"; },
                  [&] { return "Nd(L) not m.n.d"; });
      sink.expect(u.info_at(u.info_at(bl_idx).supplement).members == nd,
                  [&] { return frame_tag(u) + " strongly submaximal"; },
                  [&] { return "Nd(L) != L\\BL"; });
    }
  }
}

void chk_regularclosed(const Corpus& c, CheckSink& sink) {
  for (const Universe& u : c.frames) {
    const FiniteFrame& f = *u.frame();
    for (Elem x = 0; x < f.size(); ++x) {
      sink.instance();
      if (f.is_dense(x)) sink.hypothesis();
      std::vector<Mask> formula, defn;
      for (Elem a = 0; a < f.size(); ++a) {
        formula.push_back(f.upset(f.heyting(a, x)));
        Mask rel_open = f.open_mask_of(a) & f.upset(x);
        defn.push_back(f.upset(f.meet_of(rel_open)) & f.upset(x));
      }
      std::sort(formula.begin(), formula.end());
      formula.erase(std::unique(formula.begin(), formula.end()), formula.end());
      std::sort(defn.begin(), defn.end());
      defn.erase(std::unique(defn.begin(), defn.end()), defn.end());
      sink.expect(formula == defn, [&] { return frame_tag(u) + " x=" + f.name(x); },
                  [&] { return "c(a->x) family differs from closures of relative opens"; });
    }
  }
}

void chk_hmndcharac(const Corpus& c, CheckSink& sink) {
  for (const Universe& u : c.frames) {
    const FiniteFrame& f = *u.frame();
    const Mask o = void_of(f);
    for (Elem x = 0; x < f.size(); ++x) {
      sink.instance();
      if (!f.is_dense(x) || x == f.top()) continue;  // c(x) closed nwd non-void
      sink.hypothesis();
      bool lookups_ok = true;
      bool h1 = true;
      for (Elem a = 0; a < f.size() && h1; ++a) {
        Mask rel_open = f.open_mask_of(a) & f.upset(x);
        Mask r = f.upset(f.meet_of(rel_open)) & f.upset(x);
        if (r == o) continue;
        int ri = lookup_sub(u, r, sink, "regular-closed part of c(" + f.name(x) + ")");
        if (ri < 0) { lookups_ok = false; break; }
        h1 = u.info_at(ri).mnd_def;
      }
      bool h2 = true;
      for (Elem a = 0; a < f.size() && h2; ++a) {
        Elem h = f.heyting(a, x);
        if (h == f.top()) continue;
        int ci = closed_index(u, h, sink, "c(" + f.name(h) + ")");
        if (ci < 0) { lookups_ok = false; break; }
        h2 = u.info_at(ci).mnd;
      }
      if (!lookups_ok) continue;
      bool h3 = true;
      for (Elem a = 0; a < f.size() && h3; ++a) {
        Elem h = f.heyting(a, x);
        if (h == f.top()) continue;
        for (Elem y : bits(f.dense_elements()))
          if (f.leq(y, h) && f.heyting(h, y) == y) { h3 = false; break; }
      }
      sink.expect(h1 == h2 && h2 == h3, [&] { return frame_tag(u) + " x=" + f.name(x); },
                  [&] { return "(1..3)=" + onoff(h1) + onoff(h2) + onoff(h3); });
    }
  }
}

void chk_hmnd_heredity(const Corpus& c, CheckSink& sink) {
  for (const Universe& u : c.frames) {
    const FiniteFrame& f = *u.frame();
    for (int fi = 0; fi < u.count(); ++fi) {
      const SubInfo& sf = u.info_at(fi);
      if (!sf.hmnd) continue;
      for (Elem a = 0; a < f.size(); ++a) {
        Elem h = f.heyting(a, sf.bottom);
        if (h == f.top()) continue;
        sink.instance();
        sink.hypothesis();
        int ci = closed_index(u, h, sink, "c(" + f.name(h) + ")");
        if (ci < 0) continue;
        sink.expect(u.info_at(ci).hmnd,
                    [&] { return frame_tag(u) + " F=" + u.sub_name(fi) + " part=c(" + f.name(h) + ")"; },
                    [&] { return "regular-closed part of h.m.n.d not h.m.n.d"; });
      }
    }
  }
}

void chk_smndandmnd(const Corpus& c, CheckSink& sink) {
  for (const Universe& u : c.frames) {
    for (int i = 0; i < u.count(); ++i) {
      const SubInfo& si = u.info_at(i);
      sink.instance();
      if (si.hmnd || si.whmnd) {
        sink.hypothesis();
        sink.expect(!si.hmnd || si.mnd, [&] { return frame_tag(u) + " N=" + u.sub_name(i); },
                    [&] { return "h.m.n.d but not m.n.d"; });
        sink.expect(!si.whmnd || si.mnd, [&] { return frame_tag(u) + " N=" + u.sub_name(i); },
                    [&] { return "weakly h.m.n.d but not m.n.d"; });
      }
      if (si.closed)
        sink.expect(si.whmnd == si.hmnd, [&] { return frame_tag(u) + " N=" + u.sub_name(i); },
                    [&] { return "closed: weak and plain h.m.n.d disagree"; });
    }
  }
}

void chk_inacccharact(const Corpus& c, CheckSink& sink) {
  for (const Universe& u : c.frames) {
    const FiniteFrame& f = *u.frame();
    const Mask o = void_of(f);
    for (int s = 0; s < u.count(); ++s) {
      const SubInfo& ss = u.info_at(s);
      const SubInfo& supp = u.info_at(ss.supplement);
      for (int t = 0; t < u.count(); ++t) {
        const SubInfo& st = u.info_at(t);
        if (!mask_subset(st.members, ss.members)) continue;
        sink.instance();
        sink.hypothesis();
        bool i1 = u.inaccessible_def(st.members, s);
        bool i2 = true, i3 = true, i4 = true;
        for (Elem z : supp.rel_dense) {
          if ((st.members & f.upset(z)) != o) i2 = false;
          if (!mask_subset(st.members, f.open_mask_of(z))) i3 = false;
          if (f.meet_of(st.members & f.upset(z)) != f.top()) i4 = false;
        }
        sink.expect(i1 == i2 && i2 == i3 && i3 == i4,
                    [&] { return frame_tag(u) + " S=" + u.sub_name(s) + " T=" + u.sub_name(t); },
                    [&] { return "(1..4)=" + onoff(i1) + onoff(i2) + onoff(i3) + onoff(i4); });
      }
    }
  }
}

void chk_obsinacc(const Corpus& c, CheckSink& sink) {
  for (const Universe& u : c.frames) {
    const FiniteFrame& f = *u.frame();
    for (int fi = 0; fi < u.count(); ++fi) {
      const SubInfo& sf = u.info_at(fi);
      const SubInfo& supp = u.info_at(sf.supplement);
      sink.instance();
      sink.hypothesis();
      bool e1 = u.almost_inaccessible_def(sf.members, fi);
      bool e2 = true, e3 = true;
      for (int j : supp.nwd_subs) {
        Elem z = u.info_at(j).bottom;
        Mask inter = sf.members & f.open_mask_of(z);
        if (closure_in_mask(f, sf.members, inter) != sf.members) e2 = false;
        if (!mask_has(inter, sf.bottom)) e3 = false;
      }
      sink.expect(e1 == e2 && e2 == e3, [&] { return frame_tag(u) + " F=" + u.sub_name(fi); },
                  [&] { return "(1..3)=" + onoff(e1) + onoff(e2) + onoff(e3); });
    }
  }
}

void chk_complalmost(const Corpus& c, CheckSink& sink) {
  for (const Universe& u : c.frames) {
    const FiniteFrame& f = *u.frame();
    const Mask o = void_of(f);
    for (int s = 0; s < u.count(); ++s) {
      const SubInfo& ss = u.info_at(s);
      if (!ss.complemented) continue;
      for (Elem m = 0; m < f.size(); ++m) {  // N ranges over c(m); only cl(N) matters
        Mask cl = closure_in_mask(f, ss.members, ss.members & f.open_mask_of(m));
        Mask inter = interior_in_mask(f, ss.members, ss.members & f.upset(m));
        for (int t = 0; t < u.count(); ++t) {
          const SubInfo& st = u.info_at(t);
          if (!mask_subset(st.members, ss.members)) continue;
          sink.instance();
          sink.hypothesis();
          bool lhs = mask_subset(st.members, cl);
          bool rhs = (st.members & inter) == o;
          sink.expect(lhs == rhs,
                      [&] {
                        return frame_tag(u) + " S=" + u.sub_name(s) + " T=" + u.sub_name(t) +
                               " N=c(" + f.name(m) + ")";
                      },
                      [&] { return "closure-form=" + onoff(lhs) + " interior-form=" + onoff(rhs); });
        }
      }
    }
  }
}

void chk_complementedremote(const Corpus& c, CheckSink& sink) {
  for (const Universe& u : c.frames) {
    const FiniteFrame& f = *u.frame();
    const Mask o = void_of(f);
    for (int s = 0; s < u.count(); ++s) {
      const SubInfo& ss = u.info_at(s);
      if (!ss.complemented) continue;
      const SubInfo& supp = u.info_at(ss.supplement);
      std::vector<Mask> interiors;
      for (int j : supp.nwd_subs)
        interiors.push_back(
            interior_in_mask(f, ss.members, ss.members & f.upset(u.info_at(j).bottom)));
      for (int t = 0; t < u.count(); ++t) {
        const SubInfo& st = u.info_at(t);
        if (!mask_subset(st.members, ss.members)) continue;
        sink.instance();
        sink.hypothesis();
        bool a1 = u.almost_inaccessible_def(st.members, s);
        bool a2 = true;
        for (Mask inter : interiors)
          if ((st.members & inter) != o) { a2 = false; break; }
        bool ok = a1 == a2;
        bool a3 = true;
        if (ss.closed) {
          for (Elem z : supp.rel_dense)
            if (!f.leq(f.heyting(z, ss.bottom), st.bottom)) { a3 = false; break; }
          ok = ok && a2 == a3;
        }
        sink.expect(ok,
                    [&] { return frame_tag(u) + " S=" + u.sub_name(s) + " T=" + u.sub_name(t); },
                    [&] { return "(1,2,3)=" + onoff(a1) + onoff(a2) + onoff(a3); });
      }
    }
  }
}

void chk_almostinaccesprop(const Corpus& c, CheckSink& sink) {
  for (const Universe& u : c.frames) {
    const FiniteFrame& f = *u.frame();
    const int full = u.index_of(f.full());
    for (int s = 0; s < u.count(); ++s) {
      const SubInfo& ss = u.info_at(s);
      std::vector<int> inside;
      for (int t = 0; t < u.count(); ++t)
        if (mask_subset(u.info_at(t).members, ss.members)) inside.push_back(t);

      if (ss.open) {
        sink.instance();
        sink.hypothesis();
        sink.expect(u.inaccessible(ss.members, s), [&] { return frame_tag(u) + " S=" + u.sub_name(s); },
                    [&] { return "open S not S-inaccessible"; });
      }
      if (ss.complemented) {
        const SubInfo& supp = u.info_at(ss.supplement);
        for (int t = 0; t < u.count(); ++t) {
          const SubInfo& st = u.info_at(t);
          if (!mask_subset(st.members, supp.members) || !st.open) continue;
          sink.instance();
          sink.hypothesis();
          sink.expect(u.inaccessible(st.members, ss.supplement),
                      [&] { return frame_tag(u) + " S=" + u.sub_name(s) + " T=" + u.sub_name(t); },
                      [&] { return "open T <= L\\S not (L\\S)-inaccessible"; });
        }
      }

      for (int t : inside) {
        const SubInfo& st = u.info_at(t);
        bool inacc = u.inaccessible(st.members, s);
        bool ainacc = u.almost_inaccessible(st.members, s);
        sink.instance();
        if (inacc) {
          sink.hypothesis();
          sink.expect(ainacc, [&] { return frame_tag(u) + " S=" + u.sub_name(s) + " T=" + u.sub_name(t); },
                      [&] { return "inaccessible but not almost inaccessible"; });
        }
        if (inacc || ainacc) {
          for (int b : inside) {
            if (!mask_subset(u.info_at(b).members, st.members)) continue;
            sink.instance();
            sink.hypothesis();
            bool ok = (!inacc || u.inaccessible(u.info_at(b).members, s)) &&
                      (!ainacc || u.almost_inaccessible(u.info_at(b).members, s));
            sink.expect(ok,
                        [&] {
                          return frame_tag(u) + " S=" + u.sub_name(s) + " A=" + u.sub_name(t) +
                                 " B=" + u.sub_name(b);
                        },
                        [&] { return "sub-sublocale loses (almost) inaccessibility"; });
          }
        }
        if (inacc || ainacc) {
          for (int t2 : inside) {
            if (t2 < t) continue;
            const SubInfo& st2 = u.info_at(t2);
            bool inacc2 = u.inaccessible(st2.members, s);
            bool ainacc2 = u.almost_inaccessible(st2.members, s);
            if (!((inacc && inacc2) || (ainacc && ainacc2))) continue;
            sink.instance();
            sink.hypothesis();
            Mask jn = join_mask(f, st.members, st2.members);
            bool ok = (!(inacc && inacc2) || u.inaccessible(jn, s)) &&
                      (!(ainacc && ainacc2) || u.almost_inaccessible(jn, s));
            sink.expect(ok,
                        [&] {
                          return frame_tag(u) + " S=" + u.sub_name(s) + " T1=" + u.sub_name(t) +
                                 " T2=" + u.sub_name(t2);
                        },
                        [&] { return "join loses (almost) inaccessibility"; });
          }
        }
      }
    }
    // L is L-inaccessible, hence every sublocale is.
    for (int t = 0; t < u.count(); ++t) {
      sink.instance();
      sink.hypothesis();
      sink.expect(u.inaccessible(u.info_at(t).members, full),
                  [&] { return frame_tag(u) + " T=" + u.sub_name(t); },
                  [&] { return "sublocale not L-inaccessible"; });
    }
  }
}

void chk_thm_maximal(const Corpus& c, CheckSink& sink) {
  for (const Universe& u : c.frames) {
    const FiniteFrame& f = *u.frame();
    for (int fi = 0; fi < u.count(); ++fi) {
      const SubInfo& sf = u.info_at(fi);
      if (sf.is_void || !sf.closed || !sf.nwd) {
        sink.instance();
        continue;
      }
      const SubInfo& supp = u.info_at(sf.supplement);

      sink.instance();
      if (u.almost_inaccessible(sf.members, fi)) {
        sink.hypothesis();
        sink.expect(sf.mnd, [&] { return frame_tag(u) + " F=" + u.sub_name(fi); },
                    [&] { return "(1) almost self-inaccessible closed nwd not m.n.d"; });
      }
      sink.instance();
      if (sf.mnd) {
        sink.hypothesis();
        Mask covered = 0;
        for (int j : supp.nwd_subs)
          covered |= interior_in_mask(f, sf.members, sf.members & f.upset(u.info_at(j).bottom));
        sink.expect((sf.members & ~covered) != 0,
                    [&] { return frame_tag(u) + " F=" + u.sub_name(fi); },
                    [&] { return "(2) no member avoids every Int_F(cl(N)^F)"; });
      }
      sink.instance();
      if (sf.hmnd) {
        sink.hypothesis();
        for (int b = 0; b < u.count(); ++b) {
          if (!mask_subset(u.info_at(b).members, sf.members)) continue;
          sink.expect(u.almost_inaccessible(u.info_at(b).members, fi),
                      [&] { return frame_tag(u) + " F=" + u.sub_name(fi) + " B=" + u.sub_name(b); },
                      [&] { return "(3) part of h.m.n.d not almost F-inaccessible"; });
        }
      }
    }
  }
}

void chk_hmndclopen(const Corpus& c, CheckSink& sink) {
  for (const Universe& u : c.frames) {
    const FiniteFrame& f = *u.frame();
    for (int fi = 0; fi < u.count(); ++fi) {
      const SubInfo& sf = u.info_at(fi);
      if (!sf.hmnd) continue;
      for (int a = 0; a < u.count(); ++a) {
        const SubInfo& sa = u.info_at(a);
        if (!mask_subset(sa.members, sf.members)) continue;
        bool f_closed = sa.members == (sf.members & f.upset(sa.bottom));
        bool f_open = false;
        for (Elem x = 0; x < f.size() && !f_open; ++x)
          f_open = sa.members == (sf.members & f.open_mask_of(x));
        if (!f_closed || !f_open) continue;
        sink.instance();
        sink.hypothesis();
        sink.expect(u.almost_inaccessible(sa.members, a),
                    [&] { return frame_tag(u) + " F=" + u.sub_name(fi) + " A=" + u.sub_name(a); },
                    [&] { return "F-clopen part not almost self-inaccessible"; });
      }
    }
  }
}

void chk_hmnd_regularclosed(const Corpus& c, CheckSink& sink) {
  for (const Universe& u : c.frames) {
    const FiniteFrame& f = *u.frame();
    for (int fi = 0; fi < u.count(); ++fi) {
      const SubInfo& sf = u.info_at(fi);
      if (!sf.hmnd) continue;
      for (int a = 0; a < u.count(); ++a) {
        const SubInfo& sa = u.info_at(a);
        if (!sa.complemented || !sa.nwd || !mask_subset(sf.members, sa.members)) continue;
        sink.instance();
        sink.hypothesis();
        Mask inter = interior_in_mask(f, sa.members, sf.members);
        bool ok = closure_in_mask(f, sa.members, inter) == sf.members;
        sink.expect(ok, [&] { return frame_tag(u) + " F=" + u.sub_name(fi) + " A=" + u.sub_name(a); },
                    [&] { return "h.m.n.d not regular-closed in complemented nwd superset"; });
      }
    }
  }
}

void chk_thmmnd(const Corpus& c, CheckSink& sink) {
  for (const Universe& u : c.frames) {
    const FiniteFrame& f = *u.frame();
    sink.instance();
    sink.hypothesis();
    bool b1 = true, b2 = true, b3 = true, b4 = true, b5 = true, b6 = true;
    bool lookups_ok = true;
    for (int i = 0; i < u.count() && b1; ++i) {
      const SubInfo& si = u.info_at(i);
      if (!si.is_void && si.nwd) b1 = si.mnd;
    }
    for (Elem y : bits(f.dense_elements())) {
      if (y == f.top()) continue;
      int cy = closed_index(u, y, sink, "c(" + f.name(y) + ")");
      if (cy < 0) { lookups_ok = false; break; }
      if (!u.info_at(cy).mnd) b2 = false;
      if (!u.info_at(cy).hmnd) b4 = false;
      if (!u.almost_inaccessible(u.info_at(cy).members, cy)) b5 = false;
      if (!u.inaccessible(u.info_at(cy).members, cy)) b6 = false;
    }
    for (Elem x = 0; x < f.size() && lookups_ok; ++x) {
      if (x == f.bottom()) continue;  // void open sublocale
      Elem bd = f.join(x, f.pseudocomplement(x));
      if (bd == f.top()) continue;  // complemented x
      int ci = closed_index(u, bd, sink, "bd(o(" + f.name(x) + "))");
      if (ci < 0) { lookups_ok = false; break; }
      if (!u.info_at(ci).mnd) b3 = false;
    }
    if (!lookups_ok) continue;
    bool all_eq = b1 == b2 && b2 == b3 && b3 == b4 && b4 == b5 && b5 == b6;
    sink.expect(all_eq, [&] { return frame_tag(u); },
                [&] {
                  return "(1..6)=" + onoff(b1) + onoff(b2) + onoff(b3) + onoff(b4) + onoff(b5) +
                         onoff(b6);
                });
  }
}

void chk_remote_vs_inacc(const Corpus& c, CheckSink& sink) {
  for (const Universe& u : c.frames) {
    const FiniteFrame& f = *u.frame();
    sink.instance();
    sink.hypothesis();
    int full = u.index_of(f.full());
    sink.expect(u.info_at(full).remote_def == f.is_boolean(), [&] { return frame_tag(u); },
                [&] { return "L remote in itself iff Boolean failed"; });
    sink.expect(u.inaccessible(f.full(), full), [&] { return frame_tag(u); },
                [&] { return "L not L-inaccessible"; });
  }
}

void chk_inaccessibilityandremoteness(const Corpus& c, CheckSink& sink) {
  for (const Universe& u : c.frames) {
    for (int s = 0; s < u.count(); ++s) {
      const SubInfo& ss = u.info_at(s);
      if (!ss.dense || !ss.complemented) continue;
      const SubInfo& supp = u.info_at(ss.supplement);
      for (int t = 0; t < u.count(); ++t) {
        const SubInfo& st = u.info_at(t);
        if (!mask_subset(st.members, supp.members)) continue;
        sink.instance();
        sink.hypothesis();
        bool inacc = u.inaccessible(st.members, ss.supplement);
        bool star = u.remote_from(st.members, s) && mask_subset(st.members, supp.members);
        sink.expect(inacc == star,
                    [&] { return frame_tag(u) + " S=" + u.sub_name(s) + " T=" + u.sub_name(t); },
                    [&] { return "inacc=" + onoff(inacc) + " *remote=" + onoff(star); });
      }
    }
  }
}

void chk_inaccrem(const Corpus& c, CheckSink& sink) {
  for (const Universe& u : c.frames) {
    for (int s = 0; s < u.count(); ++s) {
      const SubInfo& ss = u.info_at(s);
      if (!ss.dense || !ss.complemented) continue;
      const SubInfo& supp = u.info_at(ss.supplement);
      for (int t = 0; t < u.count(); ++t) {
        const SubInfo& st = u.info_at(t);
        if (!mask_subset(st.members, supp.members)) continue;
        sink.instance();
        sink.hypothesis();
        bool r1 = st.remote_def;
        bool r2 = u.remote_from(st.members, s);
        bool r3 = r2 && mask_subset(st.members, supp.members);
        bool r4 = u.inaccessible(st.members, ss.supplement);
        bool r5 = u.almost_inaccessible(st.members, ss.supplement);
        bool ok = (!r1 || r2) && (r2 == r3) && (r3 == r4) && (!r4 || r5);
        sink.expect(ok, [&] { return frame_tag(u) + " S=" + u.sub_name(s) + " T=" + u.sub_name(t); },
                    [&] {
                      return "(1..5)=" + onoff(r1) + onoff(r2) + onoff(r3) + onoff(r4) + onoff(r5);
                    });
      }
    }
  }
}

void chk_almostinaccesprop1(const Corpus& c, CheckSink& sink) {
  for (const Universe& u : c.frames) {
    const FiniteFrame& f = *u.frame();
    const Mask bl = f.booleanization_mask();
    for (int s = 0; s < u.count(); ++s) {
      const SubInfo& ss = u.info_at(s);
      if (ss.open) {
        sink.instance();
        sink.hypothesis();
        Mask rs = rs_mask(u, s);
        sink.expect(u.inaccessible(ss.members & rs, s),
                    [&] { return frame_tag(u) + " S=" + u.sub_name(s); },
                    [&] { return "S^Rs(S) not S-inaccessible for open S"; });
        if (ss.dense) {
          sink.expect(u.inaccessible(bl, s), [&] { return frame_tag(u) + " S=" + u.sub_name(s); },
                      [&] { return "BL not S-inaccessible for open dense S"; });
        }
      }
      if (ss.dense) {
        sink.instance();
        sink.hypothesis();
        Mask rs = rs_mask(u, s);
        sink.expect((ss.members & rs) == bl, [&] { return frame_tag(u) + " S=" + u.sub_name(s); },
                    [&] { return "BL != S^Rs(S) for dense S"; });
      }
    }
  }
}

void chk_remoteandmaximal(const Corpus& c, CheckSink& sink) {
  for (const Universe& u : c.frames) {
    const FiniteFrame& f = *u.frame();
    const Mask o = void_of(f);
    for (int s = 0; s < u.count(); ++s) {
      const SubInfo& ss = u.info_at(s);
      if (!ss.open || !ss.dense || ss.members == f.full()) continue;
      const int sharp = ss.supplement;
      const SubInfo& sh = u.info_at(sharp);
      sink.instance();
      if (u.remote_from(sh.members, s)) {  // S# is trivially inside L\S
        sink.hypothesis();
        sink.expect(sh.mnd, [&] { return frame_tag(u) + " S=" + u.sub_name(s); },
                    [&] { return "(1) *remote supplement not m.n.d"; });
      }
      sink.instance();
      if (sh.hmnd) {
        sink.hypothesis();
        for (int a = 0; a < u.count(); ++a) {
          const SubInfo& sa = u.info_at(a);
          if (!mask_subset(sa.members, sh.members)) continue;
          bool remote_in_sharp = true;
          for (int j : sh.nwd_subs)
            if ((sa.members & u.info_at(j).members) != o) { remote_in_sharp = false; break; }
          if (!remote_in_sharp) continue;
          sink.expect(u.remote_from(sa.members, s),
                      [&] { return frame_tag(u) + " S=" + u.sub_name(s) + " A=" + u.sub_name(a); },
                      [&] { return "(2) S#-remote sublocale not *remote from S"; });
        }
      }
    }
  }
}

// ---------------------------------------------------------------------------
// Space-corpus checks
// ---------------------------------------------------------------------------

void chk_binaryintersection(const Corpus& c, CheckSink& sink) {
  for (const SpaceCtx& sc : c.spaces) {
    const Mask all = sc.space.all_points();
    for (Mask b = 0;; ++b) {
      if (sc.uni.info_at(sc.induced_idx[b]).complemented) {
        for (Mask a = 0;; ++a) {
          sink.instance();
          sink.hypothesis();
          sink.expect(sc.induced[a & b] == (sc.induced[a] & sc.induced[b]),
                      [&] {
                        return sc.space.label() + " A=" + sc.space.subset_name(a) +
                               " B=" + sc.space.subset_name(b);
                      },
                      [&] { return "induced(A^B) != induced(A)^induced(B)"; });
          if (a == all) break;
        }
      } else {
        sink.instance();  // hypothesis fails: skipped, counted
      }
      if (b == all) break;
    }
  }
}

void chk_n1(const Corpus& c, CheckSink& sink) {
  for (const SpaceCtx& sc : c.spaces) {
    const Mask all = sc.space.all_points();
    const Mask o = void_of(*sc.frame);
    for (Mask n = 0;; ++n) {
      if (sc.uni.info_at(sc.induced_idx[n]).complemented) {
        for (Mask a = 0;; ++a) {
          sink.instance();
          sink.hypothesis();
          bool pts = (n & a) == 0;
          bool subs = (sc.induced[n] & sc.induced[a]) == o;
          sink.expect(pts == subs,
                      [&] {
                        return sc.space.label() + " N=" + sc.space.subset_name(n) +
                               " A=" + sc.space.subset_name(a);
                      },
                      [&] { return "points=" + onoff(pts) + " sublocales=" + onoff(subs); });
          if (a == all) break;
        }
      } else {
        sink.instance();
      }
      if (n == all) break;
    }
  }
}

void chk_lembinaryintersection(const Corpus& c, CheckSink& sink) {
  for (const SpaceCtx& sc : c.spaces) {
    const Mask all = sc.space.all_points();
    const Mask o = void_of(*sc.frame);
    for (Mask fset = 0;; ++fset) {
      const SubInfo& sf = sc.uni.info_at(sc.induced_idx[fset]);
      for (Mask a = fset;; a = (a - 1) & fset) {  // subsets of fset
        sink.instance();
        sink.hypothesis();
        bool sp = spatial_nwd_in(sc.space, a, fset);
        bool lo = (sc.induced[a] & sf.brel) == o;
        sink.expect(sp == lo,
                    [&] {
                      return sc.space.label() + " A=" + sc.space.subset_name(a) +
                             " F=" + sc.space.subset_name(fset);
                    },
                    [&] { return "spatial=" + onoff(sp) + " localic=" + onoff(lo); });
        if (a == 0) break;
      }
      if (fset == all) break;
    }
  }
}

void chk_prop_mnd(const Corpus& c, CheckSink& sink) {
  for (const SpaceCtx& sc : c.spaces) {
    const Mask all = sc.space.all_points();
    for (Mask fset = 0;; ++fset) {
      sink.instance();
      sink.hypothesis();
      bool sp = spatial_maximal_nwd(sc.space, fset);
      bool lo = sc.uni.info_at(sc.induced_idx[fset]).mnd;
      sink.expect(sp == lo, [&] { return sc.space.label() + " F=" + sc.space.subset_name(fset); },
                  [&] { return "spatial=" + onoff(sp) + " localic=" + onoff(lo); });
      if (fset == all) break;
    }
  }
}

void chk_knd(const Corpus& c, CheckSink& sink) {
  for (const SpaceCtx& sc : c.spaces) {
    const Mask all = sc.space.all_points();
    const FiniteFrame& f = *sc.frame;
    for (Mask fset = 0;; ++fset) {
      if (!sc.uni.info_at(sc.induced_idx[fset]).complemented) {
        sink.instance();
        if (fset == all) break;
        continue;
      }
      for (Mask uset = 0;; ++uset) {
        const Mask uf = uset & fset;
        const Mask ind_uf = sc.induced[uset] & sc.induced[fset];
        for (Mask k = 0;; ++k) {
          // (1): U^F <= K
          if (mask_subset(uf, k)) {
            sink.instance();
            sink.hypothesis();
            bool sp = spatial_nwd_in(sc.space, uf, k);
            bool lo = (ind_uf & sc.uni.info_at(sc.induced_idx[k]).brel) == void_of(f);
            sink.expect(sp == lo,
                        [&] {
                          return sc.space.label() + " U=" + sc.space.subset_name(uset) + " F=" +
                                 sc.space.subset_name(fset) + " K=" + sc.space.subset_name(k);
                        },
                        [&] { return "(1) spatial=" + onoff(sp) + " localic=" + onoff(lo); });
          }
          // (2): A = cl(F^U)^F  vs  induced(A) = cl(indF^indU)^indF
          {
            const Mask a = k;
            sink.instance();
            sink.hypothesis();
            bool sp = (sc.space.closure_of(uf) & fset) == a;
            Mask cl = f.upset(f.meet_of(ind_uf));
            bool lo = (cl & sc.induced[fset]) == sc.induced[a];
            sink.expect(sp == lo,
                        [&] {
                          return sc.space.label() + " A=" + sc.space.subset_name(a) + " F=" +
                                 sc.space.subset_name(fset) + " U=" + sc.space.subset_name(uset);
                        },
                        [&] { return "(2) spatial=" + onoff(sp) + " localic=" + onoff(lo); });
          }
          if (k == all) break;
        }
        if (uset == all) break;
      }
      if (fset == all) break;
    }
  }
}

void chk_regularclosedf(const Corpus& c, CheckSink& sink) {
  for (const SpaceCtx& sc : c.spaces) {
    const Mask all = sc.space.all_points();
    const FiniteFrame& f = *sc.frame;
    for (Mask fset = 0;; ++fset) {
      const Mask ind_f = sc.induced[fset];
      for (Mask a = fset;; a = (a - 1) & fset) {
        sink.instance();
        sink.hypothesis();
        bool sp = spatial_regular_closed_in(sc.space, a, fset);
        Mask inter = interior_in_mask(f, ind_f, sc.induced[a]);
        bool lo = closure_in_mask(f, ind_f, inter) == sc.induced[a];
        sink.expect(sp == lo,
                    [&] {
                      return sc.space.label() + " A=" + sc.space.subset_name(a) +
                             " F=" + sc.space.subset_name(fset);
                    },
                    [&] { return "spatial=" + onoff(sp) + " localic=" + onoff(lo); });
        if (a == 0) break;
      }
      if (fset == all) break;
    }
  }
}

void chk_hmnd_conservative(const Corpus& c, CheckSink& sink) {
  for (const SpaceCtx& sc : c.spaces) {
    const Mask all = sc.space.all_points();
    for (Mask fset = 0;; ++fset) {
      sink.instance();
      if (sc.space.closure_of(fset) == fset) {
        sink.hypothesis();
        bool sp = spatial_hmnd(sc.space, fset);
        bool lo = sc.uni.info_at(sc.induced_idx[fset]).hmnd;
        sink.expect(sp == lo, [&] { return sc.space.label() + " F=" + sc.space.subset_name(fset); },
                    [&] { return "spatial=" + onoff(sp) + " localic=" + onoff(lo); });
      }
      if (fset == all) break;
    }
  }
}

void chk_induced_supplement(const Corpus& c, CheckSink& sink) {
  for (const SpaceCtx& sc : c.spaces) {
    const FiniteFrame& f = *sc.frame;
    const Mask all = sc.space.all_points();
    for (Mask a = 0;; ++a) {
      sink.instance();
      sink.hypothesis();
      const SubInfo& si = sc.uni.info_at(sc.induced_idx[a]);
      bool supp_ok = sc.uni.info_at(si.supplement).members == sc.induced[all & ~a];
      sink.expect(supp_ok && si.complemented,
                  [&] { return sc.space.label() + " A=" + sc.space.subset_name(a); },
                  [&] { return "induced(X\\A) is not the complement of induced(A)"; });
      for (Mask b = a;; ++b) {
        bool union_ok =
            sc.induced[a | b] == join_mask(f, sc.induced[a], sc.induced[b]) &&
            mask_subset(sc.induced[a & b], sc.induced[a] & sc.induced[b]);
        sink.expect(union_ok,
                    [&] {
                      return sc.space.label() + " A=" + sc.space.subset_name(a) +
                             " B=" + sc.space.subset_name(b);
                    },
                    [&] { return "induced(AuB) != induced(A) v induced(B)"; });
        if (b == all) break;
      }
      if (a == all) break;
    }
  }
}

// ---------------------------------------------------------------------------
// Map-corpus checks
// ---------------------------------------------------------------------------

void chk_mapmnd(const Corpus& c, CheckSink& sink) {
  for (const MapCtx& mc : c.maps) {
    if (!mc.d2d || !mc.star_d2d) continue;
    const Universe& us = c.map_frames[mc.src];
    const Universe& ut = c.map_frames[mc.tgt];
    for (int n = 0; n < ut.count(); ++n) {
      sink.instance();
      if (!ut.info_at(n).mnd) continue;
      Mask p = preimage(mc.map, ut.at(n)).members();
      // The preimage of a m.n.d sublocale can be void (f*(/\N) = 1), and the
      // void sublocale is never m.n.d; the statement is about the non-void case.
      if (p == void_of(*us.frame())) continue;
      sink.hypothesis();
      int pi = us.index_of(p);
      sink.expect(pi >= 0 && us.info_at(pi).mnd,
                  [&] { return map_tag(mc.map) + " N=" + ut.sub_name(n); },
                  [&] { return "preimage " + us.sub_name(p) + " not m.n.d"; });
    }
  }
}

void chk_obsopen(const Corpus& c, CheckSink& sink) {
  for (const Universe& u : c.map_frames) {
    const FiniteFrame& l = *u.frame();
    if (l.is_boolean()) continue;
    sink.instance();
    sink.hypothesis();
    auto two = chain_frame(2);
    std::vector<Elem> h = {l.bottom(), l.top()};
    LocalicMap f = from_frame_hom(u.frame(), two, h, u.frame()->label() + "->2");
    sink.expect(is_open_map(f) && !sends_dense_to_dense(f),
                [&] { return frame_tag(u) + " -> 2"; },
                [&] {
                  return "open=" + onoff(is_open_map(f)) +
                         " dense-to-dense=" + onoff(sends_dense_to_dense(f));
                });
  }
}

void chk_smndmap(const Corpus& c, CheckSink& sink) {
  for (const MapCtx& mc : c.maps) {
    if (!mc.open || !mc.d2d) continue;
    const Universe& us = c.map_frames[mc.src];
    const Universe& ut = c.map_frames[mc.tgt];
    for (int n = 0; n < us.count(); ++n) {
      sink.instance();
      if (!us.info_at(n).mnd) continue;
      sink.hypothesis();
      Mask img = image(mc.map, us.at(n)).members();
      int ii = ut.index_of(img);
      sink.expect(ii >= 0 && ut.info_at(ii).mnd,
                  [&] { return map_tag(mc.map) + " N=" + us.sub_name(n); },
                  [&] { return "image " + ut.sub_name(img) + " not m.n.d"; });
    }
  }
}

void chk_cor_smndmap(const Corpus& c, CheckSink& sink) {
  for (const MapCtx& mc : c.maps) {
    if (!mc.open) continue;
    sink.instance();
    sink.expect(mc.star_d2d, [&] { return map_tag(mc.map); },
                [&] { return "open map whose frame hom is not weakly open"; });
    if (!mc.d2d) continue;
    sink.hypothesis();
    const Universe& us = c.map_frames[mc.src];
    const Universe& ut = c.map_frames[mc.tgt];
    for (int n = 0; n < us.count(); ++n) {
      if (!us.info_at(n).mnd) continue;
      Mask img = image(mc.map, us.at(n)).members();
      sink.expect(ut.info_at(ut.index_of(img)).mnd,
                  [&] { return map_tag(mc.map) + " N=" + us.sub_name(n); },
                  [&] { return "does not preserve m.n.d"; });
    }
    for (int n = 0; n < ut.count(); ++n) {
      if (!ut.info_at(n).mnd) continue;
      Mask p = preimage(mc.map, ut.at(n)).members();
      if (p == void_of(*us.frame())) continue;
      sink.expect(us.info_at(us.index_of(p)).mnd,
                  [&] { return map_tag(mc.map) + " N=" + ut.sub_name(n); },
                  [&] { return "does not reflect m.n.d"; });
    }
  }
}

void chk_hmndpresereflec(const Corpus& c, CheckSink& sink) {
  for (const MapCtx& mc : c.maps) {
    if (!mc.open || !mc.d2d) continue;
    const Universe& us = c.map_frames[mc.src];
    const Universe& ut = c.map_frames[mc.tgt];
    for (int n = 0; n < us.count(); ++n) {
      sink.instance();
      if (!us.info_at(n).whmnd) continue;
      sink.hypothesis();
      Mask img = image(mc.map, us.at(n)).members();
      sink.expect(ut.info_at(ut.index_of(img)).whmnd,
                  [&] { return map_tag(mc.map) + " F=" + us.sub_name(n); },
                  [&] { return "(1) image not weakly h.m.n.d"; });
    }
    if (!mc.injective) continue;
    for (int n = 0; n < ut.count(); ++n) {
      sink.instance();
      const SubInfo& sn = ut.info_at(n);
      if (!sn.whmnd && !sn.hmnd) continue;
      Mask p = preimage(mc.map, ut.at(n)).members();
      if (p == void_of(*us.frame())) continue;  // void preimage carries nothing to reflect
      sink.hypothesis();
      const SubInfo& sp = us.info_at(us.index_of(p));
      bool ok = (!sn.whmnd || sp.whmnd) && (!sn.hmnd || sp.hmnd);
      sink.expect(ok, [&] { return map_tag(mc.map) + " K=" + ut.sub_name(n); },
                  [&] { return "(2) preimage loses (weak) h.m.n.d"; });
    }
  }
}

void chk_inaccmap(const Corpus& c, CheckSink& sink) {
  for (const MapCtx& mc : c.maps) {
    if (!mc.open || !mc.injective) continue;
    const Universe& us = c.map_frames[mc.src];
    const Universe& ut = c.map_frames[mc.tgt];
    for (int s = 0; s < us.count(); ++s) {
      if (!us.info_at(s).open) continue;
      Mask img_s = image(mc.map, us.at(s)).members();
      int ts = ut.index_of(img_s);
      for (int a = 0; a < us.count(); ++a) {
        if (!mask_subset(us.info_at(a).members, us.info_at(s).members)) continue;
        sink.instance();
        bool inacc = us.inaccessible(us.info_at(a).members, s);
        bool ainacc = us.almost_inaccessible(us.info_at(a).members, s);
        if (!inacc && !ainacc) continue;
        sink.hypothesis();
        Mask img_a = image(mc.map, us.at(a)).members();
        bool ok = (!inacc || ut.inaccessible(img_a, ts)) &&
                  (!ainacc || ut.almost_inaccessible(img_a, ts));
        sink.expect(ok,
                    [&] { return map_tag(mc.map) + " S=" + us.sub_name(s) + " A=" + us.sub_name(a); },
                    [&] { return "image loses (almost) inaccessibility"; });
      }
    }
  }
}

void chk_inacclocalicmap(const Corpus& c, CheckSink& sink) {
  for (const MapCtx& mc : c.maps) {
    if (!mc.d2d || !mc.star_d2d) continue;
    const Universe& us = c.map_frames[mc.src];
    const Universe& ut = c.map_frames[mc.tgt];
    for (int t = 0; t < ut.count(); ++t) {
      const SubInfo& st = ut.info_at(t);
      if (!st.closed || !st.nwd) continue;
      Mask pt = preimage(mc.map, ut.at(t)).members();
      int pts = us.index_of(pt);
      for (int a = 0; a < ut.count(); ++a) {
        if (!mask_subset(ut.info_at(a).members, st.members)) continue;
        sink.instance();
        bool inacc = ut.inaccessible(ut.info_at(a).members, t);
        bool ainacc = ut.almost_inaccessible(ut.info_at(a).members, t);
        if (!inacc && !(mc.open && ainacc)) continue;
        sink.hypothesis();
        Mask pa = preimage(mc.map, ut.at(a)).members();
        bool ok = (!inacc || us.inaccessible(pa, pts)) &&
                  (!(mc.open && ainacc) || us.almost_inaccessible(pa, pts));
        sink.expect(ok,
                    [&] { return map_tag(mc.map) + " T=" + ut.sub_name(t) + " A=" + ut.sub_name(a); },
                    [&] { return "preimage loses (almost) inaccessibility"; });
      }
    }
  }
}

void chk_id_preimage(const Corpus& c, CheckSink& sink) {
  for (const MapCtx& mc : c.maps) {
    const FiniteFrame& l = *mc.map.source;
    const FiniteFrame& m = *mc.map.target;
    for (Elem x = 0; x < m.size(); ++x) {
      sink.instance();
      sink.hypothesis();
      Mask pc = preimage(mc.map, closed_sublocale(mc.map.target, x)).members();
      Mask po = preimage(mc.map, open_sublocale(mc.map.target, x)).members();
      bool ok = pc == l.upset(mc.map.star(x)) && po == l.open_mask_of(mc.map.star(x));
      sink.expect(ok, [&] { return map_tag(mc.map) + " x=" + m.name(x); },
                  [&] { return "preimage of c(x)/o(x) differs from c(f*(x))/o(f*(x))"; });
    }
  }
}

void chk_id_image_closure(const Corpus& c, CheckSink& sink) {
  for (const MapCtx& mc : c.maps) {
    const Universe& us = c.map_frames[mc.src];
    const FiniteFrame& m = *mc.map.target;
    for (int a = 0; a < us.count(); ++a) {
      sink.instance();
      sink.hypothesis();
      Mask img = image(mc.map, us.at(a)).members();
      Mask img_cl = image(mc.map, closed_sublocale(mc.map.source, us.info_at(a).bottom)).members();
      bool ok = mask_subset(img_cl, m.upset(m.meet_of(img)));
      sink.expect(ok, [&] { return map_tag(mc.map) + " A=" + us.sub_name(a); },
                  [&] { return "f[cl A] not inside cl(f[A])"; });
    }
  }
}

void chk_id_open_preimage_closure(const Corpus& c, CheckSink& sink) {
  for (const MapCtx& mc : c.maps) {
    if (!mc.open) continue;
    const Universe& ut = c.map_frames[mc.tgt];
    const FiniteFrame& l = *mc.map.source;
    for (int a = 0; a < ut.count(); ++a) {
      sink.instance();
      sink.hypothesis();
      Mask pre_cl = preimage(mc.map, closed_sublocale(mc.map.target, ut.info_at(a).bottom)).members();
      Mask pre = preimage(mc.map, ut.at(a)).members();
      bool ok = pre_cl == l.upset(l.meet_of(pre));
      sink.expect(ok, [&] { return map_tag(mc.map) + " A=" + ut.sub_name(a); },
                  [&] { return "open map: preimage of closure differs from closure of preimage"; });
    }
  }
}

// ---------------------------------------------------------------------------
// Oracle agreement checks
// ---------------------------------------------------------------------------

void chk_oracle_mnd(const Corpus& c, CheckSink& sink) {
  for (const Universe& u : c.frames)
    for (int i = 0; i < u.count(); ++i) {
      sink.instance();
      sink.hypothesis();
      sink.expect(u.info_at(i).mnd == u.info_at(i).mnd_def,
                  [&] { return frame_tag(u) + " N=" + u.sub_name(i); },
                  [&] {
                    return "fast=" + onoff(u.info_at(i).mnd) +
                           " definition=" + onoff(u.info_at(i).mnd_def);
                  });
    }
}

void chk_oracle_remote(const Corpus& c, CheckSink& sink) {
  for (const Universe& u : c.frames)
    for (int i = 0; i < u.count(); ++i) {
      sink.instance();
      sink.hypothesis();
      sink.expect(u.info_at(i).remote == u.info_at(i).remote_def,
                  [&] { return frame_tag(u) + " T=" + u.sub_name(i); },
                  [&] {
                    return "T<=BL gives " + onoff(u.info_at(i).remote) + ", definition gives " +
                           onoff(u.info_at(i).remote_def);
                  });
    }
}

void chk_oracle_nd(const Corpus& c, CheckSink& sink) {
  for (const Universe& u : c.frames) {
    const FiniteFrame& f = *u.frame();
    sink.instance();
    sink.hypothesis();
    Mask closed_form = f.upset(f.meet_of(f.dense_elements()));
    Mask by_join = void_of(f);
    for (int i = 0; i < u.count(); ++i)
      if (u.info_at(i).nwd) by_join = join_mask(f, by_join, u.info_at(i).members);
    Mask by_closed_nwd = void_of(f);
    for (Elem y : bits(f.dense_elements()))
      by_closed_nwd = join_mask(f, by_closed_nwd, f.upset(y));
    sink.expect(closed_form == by_join && closed_form == by_closed_nwd,
                [&] { return frame_tag(u); },
                [&] { return "Nd closed form disagrees with enumeration join"; });
  }
}

void chk_oracle_supplement(const Corpus& c, CheckSink& sink) {
  for (const Universe& u : c.frames) {
    const FiniteFrame& f = *u.frame();
    for (int i = 0; i < u.count(); ++i) {
      sink.instance();
      sink.hypothesis();
      Mask supp = u.info_at(u.info_at(i).supplement).members;
      bool covers = join_mask(f, u.info_at(i).members, supp) == f.full();
      bool minimal = true;
      for (int j = 0; j < u.count() && minimal; ++j)
        if (join_mask(f, u.info_at(i).members, u.info_at(j).members) == f.full())
          minimal = mask_subset(supp, u.info_at(j).members);
      sink.expect(covers && minimal, [&] { return frame_tag(u) + " S=" + u.sub_name(i); },
                  [&] { return "covers=" + onoff(covers) + " minimal=" + onoff(minimal); });
    }
  }
}

void chk_oracle_preimage(const Corpus& c, CheckSink& sink) {
  for (const MapCtx& mc : c.maps) {
    const Universe& us = c.map_frames[mc.src];
    const Universe& ut = c.map_frames[mc.tgt];
    for (int t = 0; t < ut.count(); ++t) {
      sink.instance();
      sink.hypothesis();
      Mask fix = preimage(mc.map, ut.at(t)).members();
      Mask join = preimage_by_join(mc.map, ut.at(t), us.subs()).members();
      sink.expect(fix == join, [&] { return map_tag(mc.map) + " T=" + ut.sub_name(t); },
                  [&] { return "fixpoint " + us.sub_name(fix) + " vs join " + us.sub_name(join); });
    }
  }
}

void chk_oracle_openness(const Corpus& c, CheckSink& sink) {
  for (const MapCtx& mc : c.maps) {
    sink.instance();
    sink.hypothesis();
    sink.expect(mc.open == mc.frobenius_open, [&] { return map_tag(mc.map); },
                [&] {
                  return "direct=" + onoff(mc.open) + " frobenius=" + onoff(mc.frobenius_open);
                });
  }
}

std::vector<TheoremCheck> build_registry() {
  std::vector<TheoremCheck> reg;
  add_check(reg, "ex-three-chain",
            "the three-element chain has exactly four sublocales, c(a) its unique non-void closed "
            "nowhere dense sublocale, which is maximal nowhere dense",
            "the fixed three-element chain", chk_three_chain);
  add_check(reg, "lemma-mndcmndlemma",
            "N is nowhere dense in K iff N is nowhere dense in the closure of K",
            "pairs N <= K of sublocales over the frame corpus", chk_mndcmndlemma);
  add_check(reg, "prop-mndcmnd",
            "five characterizations of maximal nowhere density agree for every nowhere dense "
            "sublocale",
            "nowhere dense sublocales over the frame corpus", chk_mndcmnd);
  add_check(reg, "cor-mndcmnd-closed",
            "c(x) is maximal nowhere dense iff x is dense and no dense y <= x has x -> y = y",
            "elements of corpus frames", chk_mndcmnd_closed);
  add_check(reg, "obs-ndsubspace",
            "for complemented A and F <= A: F is A-nowhere dense iff A is inside the closure of "
            "A ^ (L \\ cl F)",
            "pairs F <= A with A complemented", chk_ndsubspace);
  add_check(reg, "prop-mndprop-1",
            "a nowhere dense sublocale containing a maximal nowhere dense one is maximal nowhere "
            "dense",
            "pairs (m.n.d F, nwd A) with F <= A", chk_mndprop1);
  add_check(reg, "obs-mnd-join", "finite joins of maximal nowhere dense sublocales are m.n.d",
            "pairs of m.n.d sublocales", chk_mnd_join);
  add_check(reg, "prop-mndprop-2",
            "a non-void nowhere dense F meeting L \\ cl(N) for every N nowhere dense in the "
            "supplement of F is maximal nowhere dense",
            "non-void nowhere dense sublocales", chk_mndprop2);
  add_check(reg, "prop-strongly-mnd",
            "a strongly maximal nowhere dense sublocale exists iff Nd(L) is nowhere dense; for "
            "non-Boolean L also iff Nd(L) is m.n.d",
            "corpus frames", chk_strongly_mnd);
  add_check(reg, "ex-mndexample",
            "the void sublocale is never m.n.d; Boolean locales have no m.n.d sublocale; in a "
            "non-Boolean strongly submaximal locale Nd(L) = L \\ BL is m.n.d",
            "corpus frames", chk_mndexample);
  add_check(reg, "obs-regularclosed",
            "regular-closed sublocales of a closed sublocale c(x) are exactly the c(a -> x)",
            "elements x of corpus frames", chk_regularclosed);
  add_check(reg, "prop-hmndcharac",
            "three characterizations of homogeneous maximal nowhere density of c(x) agree",
            "dense x != 1 over corpus frames", chk_hmndcharac);
  add_check(reg, "prop-hmnd-heredity",
            "every non-void regular-closed part of a h.m.n.d sublocale is h.m.n.d",
            "pairs (h.m.n.d F, regular-closed part)", chk_hmnd_heredity);
  add_check(reg, "prop-smndandmnd",
            "(weakly) homogeneous maximal nowhere dense implies maximal nowhere dense; on closed "
            "sublocales weak and plain h.m.n.d agree",
            "sublocales over the frame corpus", chk_smndandmnd);
  add_check(reg, "prop-inacccharact", "four characterizations of S-inaccessibility agree",
            "pairs T <= S over the frame corpus", chk_inacccharact);
  add_check(reg, "obs-obsinacc",
            "three characterizations of almost self-inaccessibility agree",
            "sublocales over the frame corpus", chk_obsinacc);
  add_check(reg, "lemma-complalmost",
            "for complemented S and T <= S: T <= cl_S(S ^ (L \\ cl N)) iff T misses "
            "Int_S(S ^ cl N)",
            "triples (complemented S, T <= S, closed N)", chk_complalmost);
  add_check(reg, "prop-complementedremote",
            "almost S-inaccessibility via closures, via interiors, and for closed S via "
            "a -> 0_S <= 0_T, all agree",
            "pairs T <= S with S complemented", chk_complementedremote);
  add_check(reg, "prop-almostinaccesprop",
            "inaccessible implies almost inaccessible; both are downward closed and closed under "
            "joins; open S is S-inaccessible; everything is L-inaccessible; open parts of "
            "supplements are supplement-inaccessible",
            "sublocale pairs and triples over the frame corpus", chk_almostinaccesprop);
  add_check(reg, "thm-maximal",
            "for non-void closed nowhere dense F: almost self-inaccessibility forces m.n.d; "
            "m.n.d yields a member avoiding all Int_F(cl N ^ F); h.m.n.d makes every part almost "
            "F-inaccessible",
            "non-void closed nowhere dense sublocales", chk_thm_maximal);
  add_check(reg, "prop-hmndclopen",
            "clopen parts of a h.m.n.d sublocale are almost self-inaccessible",
            "pairs (h.m.n.d F, F-clopen A)", chk_hmndclopen);
  add_check(reg, "prop-hmnd-regularclosed",
            "a h.m.n.d sublocale is regular-closed in every complemented nowhere dense sublocale "
            "containing it",
            "pairs (h.m.n.d F, complemented nwd A >= F)", chk_hmnd_regularclosed);
  add_check(reg, "thm-thmmnd",
            "six conditions on a locale (all non-void nwd sublocales m.n.d, ..., all non-void "
            "closed nwd self-inaccessible) are equivalent",
            "corpus frames, one six-tuple per frame", chk_thmmnd);
  add_check(reg, "obs-remote-vs-inacc",
            "L is remote in itself iff L is Boolean, yet L is always L-inaccessible",
            "corpus frames", chk_remote_vs_inacc);
  add_check(reg, "prop-inaccessibilityandremoteness",
            "for dense complemented S and T <= L \\ S: (L\\S)-inaccessible iff *remote from S",
            "pairs (dense complemented S, T <= L\\S)", chk_inaccessibilityandremoteness);
  add_check(reg, "prop-inaccrem",
            "remote implies remote-from; remote-from, *remote-from and supplement-inaccessible "
            "agree; they imply almost supplement-inaccessible",
            "pairs (dense complemented S, T <= L\\S)", chk_inaccrem);
  add_check(reg, "prop-almostinaccesprop1",
            "for open S, S ^ Rs(S) is S-inaccessible; for dense S, BL = S ^ Rs(S); hence BL is "
            "S-inaccessible for open dense S",
            "open or dense sublocales over the frame corpus", chk_almostinaccesprop1);
  add_check(reg, "prop-remoteandmaximal",
            "for open dense S != L: a *remote supplement is m.n.d; a h.m.n.d supplement makes "
            "every S#-remote sublocale *remote from S",
            "open dense S != L over the frame corpus", chk_remoteandmaximal);
  add_check(reg, "lemma-binaryintersection",
            "induced(A ^ B) = induced(A) ^ induced(B) when induced(B) is complemented",
            "subset pairs over the space corpus", chk_binaryintersection);
  add_check(reg, "lemma-n1",
            "for complemented induced(N): N ^ A empty iff induced(N) ^ induced(A) void",
            "subset pairs over the space corpus", chk_n1);
  add_check(reg, "lemma-lembinaryintersection",
            "A <= F is nowhere dense in the subspace F iff induced(A) is nowhere dense in "
            "induced(F)",
            "pairs A <= F over the space corpus", chk_lembinaryintersection);
  add_check(reg, "prop-mnd",
            "F is maximal nowhere dense in X iff induced(F) is maximal nowhere dense in the "
            "open-set frame",
            "subsets over the space corpus", chk_prop_mnd);
  add_check(reg, "lemma-knd",
            "relative nowhere density and the cl(F ^ U) ^ F description transfer along the "
            "induced-sublocale functor when induced(F) is complemented",
            "subset triples over the space corpus", chk_knd);
  add_check(reg, "cor-regularclosedf",
            "A <= F is F-regular-closed iff induced(A) is induced(F)-regular-closed",
            "pairs A <= F over the space corpus", chk_regularclosedf);
  add_check(reg, "prop-hmnd-conservative",
            "a closed F is homogeneous maximal nowhere dense in X iff induced(F) is h.m.n.d",
            "closed subsets over the space corpus", chk_hmnd_conservative);
  add_check(reg, "id-induced-supplement",
            "induced(X \\ A) is the complement of induced(A), and induced(A u B) is the join of the induced sublocales, on finite T0 spaces",
            "subsets over the space corpus", chk_induced_supplement);
  add_check(reg, "prop-mapmnd",
            "when f and f* both send dense elements to dense elements, preimage preserves "
            "maximal nowhere dense sublocales",
            "(map, m.n.d target sublocale) pairs", chk_mapmnd);
  add_check(reg, "obs-obsopen",
            "the map L -> 2 for non-Boolean L is open but does not send dense elements to dense "
            "elements",
            "non-Boolean frames of the map corpus", chk_obsopen);
  add_check(reg, "prop-smndmap",
            "open maps sending dense elements to dense elements preserve m.n.d sublocales",
            "(open dense-to-dense map, m.n.d source sublocale) pairs", chk_smndmap);
  add_check(reg, "cor-smndmap",
            "open dense-to-dense maps preserve and reflect maximal nowhere dense sublocales",
            "open dense-to-dense maps of the corpus", chk_cor_smndmap);
  add_check(reg, "prop-hmndpresereflec",
            "open dense-to-dense maps preserve weakly h.m.n.d sublocales; injective ones also "
            "reflect (weakly) h.m.n.d",
            "(map, sublocale) pairs", chk_hmndpresereflec);
  add_check(reg, "prop-inaccmap",
            "open injective maps send (almost) S-inaccessible sublocales to (almost) "
            "f[S]-inaccessible ones, for open S",
            "(open injective map, open S, A <= S) triples", chk_inaccmap);
  add_check(reg, "prop-inacclocalicmap",
            "dense-to-dense both ways: preimage sends T-inaccessible into f_{-1}[T]-inaccessible "
            "for closed nwd T; with openness also the almost variant",
            "(map, closed nwd T, A <= T) triples", chk_inacclocalicmap);
  add_check(reg, "id-preimage-closed-open",
            "preimage of c(x) is c(f*(x)) and preimage of o(x) is o(f*(x))",
            "(map, target element) pairs", chk_id_preimage);
  add_check(reg, "id-image-closure", "f[cl A] is contained in cl(f[A])",
            "(map, source sublocale) pairs", chk_id_image_closure);
  add_check(reg, "id-open-preimage-closure",
            "open maps: preimage of the closure is the closure of the preimage",
            "(open map, target sublocale) pairs", chk_id_open_preimage_closure);
  add_check(reg, "oracle-mnd",
            "dense-element criterion for m.n.d agrees with the raw definition everywhere",
            "sublocales over the frame corpus", chk_oracle_mnd);
  add_check(reg, "oracle-remote", "T <= BL agrees with the raw remoteness definition",
            "sublocales over the frame corpus", chk_oracle_remote);
  add_check(reg, "oracle-nd",
            "Nd(L) closed form c(/\\ dense) equals the join of all nowhere dense sublocales",
            "corpus frames", chk_oracle_nd);
  add_check(reg, "oracle-supplement",
            "the computed supplement covers L jointly with S and is minimal among such",
            "sublocales over the frame corpus", chk_oracle_supplement);
  add_check(reg, "oracle-preimage",
            "greatest-fixpoint preimage equals the join of sublocales inside the set preimage",
            "(map, target sublocale) pairs", chk_oracle_preimage);
  add_check(reg, "oracle-openness", "direct-image openness agrees with the Frobenius criterion",
            "maps of the corpus", chk_oracle_openness);
  return reg;
}

}  // namespace

const std::vector<TheoremCheck>& check_registry() {
  static const std::vector<TheoremCheck> reg = build_registry();
  return reg;
}

const TheoremCheck* find_check(const std::string& id) {
  for (const TheoremCheck& c : check_registry())
    if (c.id == id) return &c;
  return nullptr;
}

CheckReport run_check_on(const TheoremCheck& chk, const Corpus& corpus) {
  CheckSink sink(corpus.cfg.max_counterexamples);
  auto start = std::chrono::steady_clock::now();
  chk.run(corpus, sink);
  auto stop = std::chrono::steady_clock::now();
  CheckReport r;
  r.id = chk.id;
  r.anchor = chk.anchor;
  r.instances = sink.instance_count();
  r.hypothesis_satisfied = sink.hypothesis_count();
  r.failures = sink.failures();
  r.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(stop - start).count();
  return r;
}

CheckReport run_check(const std::string& id, const CorpusConfig& cfg) {
  const TheoremCheck* chk = find_check(id);
  if (!chk) fail(Errc::unknown_check, "no check named '" + id + "'");
  Corpus corpus = Corpus::build(cfg);
  return run_check_on(*chk, corpus);
}

std::vector<CheckReport> run_all_on(const Corpus& corpus) {
  const auto& reg = check_registry();
  std::vector<CheckReport> reports(reg.size());
  const int jobs = std::max(1, corpus.cfg.jobs);
  if (jobs == 1) {
    for (std::size_t i = 0; i < reg.size(); ++i) reports[i] = run_check_on(reg[i], corpus);
  } else {
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      for (std::size_t i = next.fetch_add(1); i < reg.size(); i = next.fetch_add(1))
        reports[i] = run_check_on(reg[i], corpus);
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  std::sort(reports.begin(), reports.end(),
            [](const CheckReport& a, const CheckReport& b) { return a.id < b.id; });
  return reports;
}

std::vector<CheckReport> run_all(const CorpusConfig& cfg) {
  Corpus corpus = Corpus::build(cfg);
  return run_all_on(corpus);
}

}  // namespace localelab
