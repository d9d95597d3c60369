#pragma once

#include <span>
#include <string>
#include <vector>

#include "localelab/sublocale.hpp"

namespace localelab {

constexpr int kDefaultMapCap = 8;

// Adjoint pair between finite frames: f : L -> M preserves all meets, its
// left adjoint f_star : M -> L is a frame homomorphism.
struct LocalicMap {
  FramePtr source;  // L
  FramePtr target;  // M
  std::vector<Elem> f;       // |L| entries into M
  std::vector<Elem> f_star;  // |M| entries into L
  std::string label;

  Elem apply(Elem a) const { return f[a]; }
  Elem star(Elem b) const { return f_star[b]; }
};

// Builds the localic map L -> M whose frame homomorphism is h : M -> L.
// h must preserve 0, 1, binary meets and binary joins; throws NotAFrameHom.
LocalicMap from_frame_hom(FramePtr source_l, FramePtr target_m, const std::vector<Elem>& h,
                          std::string label = {});

LocalicMap identity_map(FramePtr frame);

// Set-theoretic image of a sublocale; always a sublocale again.
Sublocale image(const LocalicMap& f, const Sublocale& a);

// Largest sublocale inside the set preimage, by greatest-fixpoint pruning of
// the Heyting closure condition (the set preimage is already meet-closed).
Sublocale preimage(const LocalicMap& f, const Sublocale& t);
// Join of all sublocales contained in the set preimage; the oracle route.
Sublocale preimage_by_join(const LocalicMap& f, const Sublocale& t,
                           std::span<const Sublocale> all_source);

bool is_open_map(const LocalicMap& f);            // images of opens are open
bool is_open_map_frobenius(const LocalicMap& f);  // Frobenius identity route
bool sends_dense_to_dense(const LocalicMap& f);
bool star_sends_dense_to_dense(const LocalicMap& f);
bool is_injective(const LocalicMap& f);

// All localic maps L -> M, through exhaustive frame homomorphism search
// M -> L with preservation pruning. Throws SizeCapExceeded.
std::vector<LocalicMap> enumerate_localic_maps(FramePtr l, FramePtr m, int cap = kDefaultMapCap);

}  // namespace localelab
