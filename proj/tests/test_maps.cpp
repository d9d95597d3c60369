#include "doctest.h"
#include "localelab/maps.hpp"

using namespace localelab;

namespace {

// Exhaustive function scan; the enumeration oracle.
int count_frame_homs_brute(const FiniteFrame& m, const FiniteFrame& l) {
  int count = 0;
  std::vector<Elem> h(m.size(), 0);
  while (true) {
    bool ok = h[m.bottom()] == l.bottom() && h[m.top()] == l.top();
    for (Elem a = 0; a < m.size() && ok; ++a)
      for (Elem b = 0; b < m.size() && ok; ++b)
        ok = h[m.meet(a, b)] == l.meet(h[a], h[b]) && h[m.join(a, b)] == l.join(h[a], h[b]);
    if (ok) ++count;
    int i = 0;
    for (; i < m.size(); ++i) {
      if (++h[i] < l.size()) break;
      h[i] = 0;
    }
    if (i == m.size()) break;
  }
  return count;
}

}  // namespace

TEST_CASE("identity map") {
  auto f = identity_map(chain_frame(4));
  CHECK(is_open_map(f));
  CHECK(is_open_map_frobenius(f));
  CHECK(sends_dense_to_dense(f));
  CHECK(star_sends_dense_to_dense(f));
  CHECK(is_injective(f));
}

TEST_CASE("the unique map into 2 is open but not dense-to-dense for non-boolean sources") {
  auto l = chain_frame(3);
  auto two = chain_frame(2);
  auto f = from_frame_hom(l, two, {l->bottom(), l->top()});
  CHECK(f.f[0] == 0);
  CHECK(f.f[1] == 0);  // a maps to 0: f(a) = 1 iff a = 1
  CHECK(f.f[2] == 1);
  CHECK(is_open_map(f));
  CHECK(!sends_dense_to_dense(f));
}

TEST_CASE("hom validation") {
  auto l = chain_frame(3);
  auto two = chain_frame(2);
  CHECK_THROWS_AS((void)from_frame_hom(l, two, {l->top(), l->top()}), Error);
  CHECK_THROWS_AS((void)from_frame_hom(l, two, {l->bottom()}), Error);
  // no localic map into the one-element frame from a bigger one, exactly one out of it
  CHECK(enumerate_localic_maps(chain_frame(3), chain_frame(1)).empty());
  CHECK(enumerate_localic_maps(chain_frame(1), chain_frame(3)).size() == 1);
}

TEST_CASE("enumeration counts match the brute-force oracle") {
  CHECK(enumerate_localic_maps(chain_frame(2), chain_frame(2)).size() == 1);
  CHECK(enumerate_localic_maps(chain_frame(3), chain_frame(3)).size() == 3);
  auto frames = frames_from_posets_up_to(2);
  frames.push_back(chain_frame(4));
  for (const auto& l : frames)
    for (const auto& m : frames) {
      auto maps = enumerate_localic_maps(l, m, 8);
      CHECK(static_cast<int>(maps.size()) == count_frame_homs_brute(*m, *l));
      for (const auto& f : maps) {
        // adjunction: f*(b) <= a iff b <= f(a)
        for (Elem a = 0; a < l->size(); ++a)
          for (Elem b = 0; b < m->size(); ++b)
            CHECK(l->leq(f.f_star[b], a) == m->leq(b, f.f[a]));
        // f preserves all meets
        for (Elem a = 0; a < l->size(); ++a)
          for (Elem b = 0; b < l->size(); ++b)
            CHECK(f.f[l->meet(a, b)] == m->meet(f.f[a], f.f[b]));
      }
    }
  CHECK_THROWS_AS((void)enumerate_localic_maps(chain_frame(9), chain_frame(2)), Error);
}

TEST_CASE("images, preimages and their identities") {
  auto l = chain_frame(4);
  auto m = chain_frame(3);
  auto maps = enumerate_localic_maps(l, m, 8);
  auto subs_l = enumerate_sublocales(l);
  auto subs_m = enumerate_sublocales(m);
  REQUIRE(!maps.empty());
  for (const auto& f : maps) {
    CHECK(image(f, void_sublocale(l)).is_void());
    for (Elem x = 0; x < m->size(); ++x) {
      CHECK(preimage(f, closed_sublocale(m, x)).members() == l->upset(f.f_star[x]));
      CHECK(preimage(f, open_sublocale(m, x)).members() == l->open_mask_of(f.f_star[x]));
    }
    for (const auto& a : subs_l) {
      Mask img = image(f, a).members();
      CHECK(is_sublocale_mask(*m, img));
      Mask img_cl = image(f, closure(a)).members();
      CHECK(mask_subset(img_cl, m->upset(m->meet_of(img))));  // f[cl A] <= cl f[A]
    }
    for (const auto& t : subs_m)
      CHECK(preimage(f, t) == preimage_by_join(f, t, subs_l));
    CHECK(is_open_map(f) == is_open_map_frobenius(f));
  }
}

TEST_CASE("mixed frame errors") {
  auto l = chain_frame(3);
  auto f = identity_map(l);
  auto other = chain_frame(3);
  CHECK_THROWS_AS((void)image(f, full_sublocale(other)), Error);
  CHECK_THROWS_AS((void)preimage(f, full_sublocale(other)), Error);
}
