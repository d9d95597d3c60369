#pragma once

#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "localelab/sublocale.hpp"

namespace localelab {

struct MndResult {
  bool value = false;
  std::optional<Elem> witness;  // dense y defeating maximality
};

// Maximal nowhere density, decided through the dense-element criterion:
// N is m.n.d iff N is nowhere dense and no dense y <= /\N has (/\N) -> y = y.
MndResult is_maximal_nwd(const Sublocale& n);
// The raw quantifier over all nowhere dense sublocales; must agree.
bool is_maximal_nwd_by_definition(const Sublocale& n, std::span<const Sublocale> all);

// Nowhere dense with no strictly larger nowhere dense sublocale.
bool is_strongly_maximal_nwd(const Sublocale& n, std::span<const Sublocale> all);

// Homogeneous maximal nowhere density. Non-void closed nowhere dense N with
// every non-void regular-closed part maximal nowhere dense; the weak form
// drops closedness. The void sublocale is not h.m.n.d by convention.
bool is_hmnd(const Sublocale& n);
bool is_weakly_hmnd(const Sublocale& n);

// Remoteness. Fast path: T <= BL.
bool is_remote(const Sublocale& t);
bool is_remote_by_definition(const Sublocale& t, std::span<const Sublocale> all);

// T misses closures of all S-nowhere dense sublocales. The public form
// requires S dense (NotDense); the unchecked form is the raw quantifier.
bool is_remote_from(const Sublocale& t, const Sublocale& s);
bool is_remote_from_unchecked(const Sublocale& t, const Sublocale& s);
// *remote: additionally T <= supplement(S).
bool is_star_remote_from(const Sublocale& t, const Sublocale& s, const Sublocale& supp_s);

// Join of all sublocales remote from S.
Sublocale remote_join(const Sublocale& s, std::span<const Sublocale> all);
Sublocale rs_sublocale(const Sublocale& s, std::span<const Sublocale> all);  // requires S dense

// Inaccessibility of T <= S, quantified over nowhere dense sublocales of the
// supplement of S (closed-nowhere-dense reduction inside the supplement).
bool is_inaccessible(const Sublocale& t, const Sublocale& s, const Sublocale& supp_s);
bool is_almost_inaccessible(const Sublocale& t, const Sublocale& s, const Sublocale& supp_s);
bool is_inaccessible(const Sublocale& t, const Sublocale& s, std::span<const Sublocale> all);
bool is_almost_inaccessible(const Sublocale& t, const Sublocale& s, std::span<const Sublocale> all);

// Per-sublocale facts precomputed for one frame. Indices refer to `subs`.
struct SubInfo {
  Mask members = 0;
  Elem bottom = 0;
  Mask brel = 0;  // members of the relative Booleanization BS
  bool is_void = false;
  bool closed = false;
  bool open = false;
  bool dense = false;
  bool nwd = false;
  bool complemented = false;
  bool mnd = false;      // dense-element criterion
  bool mnd_def = false;  // raw definition
  std::optional<Elem> mnd_witness;
  bool smnd = false;
  bool hmnd = false;
  bool whmnd = false;
  bool remote = false;      // T <= BL
  bool remote_def = false;  // raw definition
  int supplement = -1;
  std::vector<Elem> rel_dense;  // S-dense members of S
  std::vector<int> nwd_subs;    // NdS(S): indices of N <= S nowhere dense in S
};

// A frame together with its full sublocale coframe and classification flags.
class Universe {
public:
  static Universe build(FramePtr frame, int cap);

  const FramePtr& frame() const { return frame_; }
  const std::vector<Sublocale>& subs() const { return subs_; }
  const std::vector<SubInfo>& info() const { return info_; }
  const Sublocale& at(int i) const { return subs_[i]; }
  const SubInfo& info_at(int i) const { return info_[i]; }
  int count() const { return static_cast<int>(subs_.size()); }

  int index_of(Mask members) const;  // -1 when absent
  int supplement_of(int i) const { return info_[i].supplement; }

  // S-inaccessibility helpers (T <= S assumed); fast paths over the
  // supplement's dense elements.
  bool inaccessible(Mask t, int s) const;
  bool almost_inaccessible(Mask t, int s) const;
  // Raw quantifiers over NdS(supplement(S)).
  bool inaccessible_def(Mask t, int s) const;
  bool almost_inaccessible_def(Mask t, int s) const;

  bool remote_from(Mask t, int s) const;  // over NdS(S)

  std::string sub_name(int i) const;
  std::string sub_name(Mask members) const;

private:
  FramePtr frame_;
  std::vector<Sublocale> subs_;
  std::vector<SubInfo> info_;
  std::unordered_map<Mask, int> index_;
};

// Flag map with witnesses, as reported by the CLI.
struct Classification {
  std::vector<std::pair<std::string, bool>> flags;
  std::vector<std::pair<std::string, std::string>> witnesses;
};

Classification classify_sublocale(const Universe& u, const Sublocale& s);

}  // namespace localelab
