#include "doctest.h"
#include "localelab/space.hpp"

using namespace localelab;

namespace {

FiniteSpace sierpinski() { return FiniteSpace(2, {0, elem_bit(0), elem_bit(0) | elem_bit(1)}, "sierp"); }

FiniteSpace discrete(int n) {
  std::vector<Mask> opens;
  const Mask all = n == 0 ? 0 : elem_bit(n) - 1;
  for (Mask m = 0;; ++m) {
    opens.push_back(m);
    if (m == all) break;
  }
  return FiniteSpace(n, opens, "disc" + std::to_string(n));
}

}  // namespace

TEST_CASE("topology validation") {
  CHECK_THROWS_AS(FiniteSpace(2, {0}, ""), Error);  // missing X
  try {
    FiniteSpace(3, {0, elem_bit(0), elem_bit(1), elem_bit(0) | elem_bit(1) | elem_bit(2)}, "");
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::not_a_topology);  // {0} u {1} missing
  }
  try {
    FiniteSpace(2, {0, elem_bit(0) | elem_bit(1)}, "");  // indiscrete, not T0
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::not_t0);
  }
}

TEST_CASE("open-set frames of landmark spaces") {
  CHECK(frames_isomorphic(*open_set_frame(discrete(1)), *chain_frame(2)));
  CHECK(frames_isomorphic(*open_set_frame(sierpinski()), *chain_frame(3)));
  CHECK(frames_isomorphic(*open_set_frame(discrete(2)), *boolean_frame(2)));
}

TEST_CASE("frame heyting matches interior formula") {
  for (const FiniteSpace& x : spaces_up_to_homeo(3)) {
    auto f = open_set_frame(x);
    for (Elem u = 0; u < f->size(); ++u)
      for (Elem v = 0; v < f->size(); ++v) {
        Mask uu = x.opens()[u], vv = x.opens()[v];
        Mask expect = x.interior_of((x.all_points() & ~uu) | vv);
        CHECK(x.opens()[f->heyting(u, v)] == expect);
      }
  }
}

TEST_CASE("induced sublocales") {
  auto x = sierpinski();
  auto f = open_set_frame(x);
  CHECK(induced_sublocale(x, x.all_points(), f).members() == f->full());

  // A = {second point} is closed; its induced sublocale is c({first point})
  Mask a = elem_bit(1);
  int open_x = x.open_index(elem_bit(0));
  CHECK(induced_sublocale(x, a, f).members() == f->upset(open_x));

  for (const FiniteSpace& sp : spaces_up_to_homeo(3)) {
    auto g = open_set_frame(sp);
    const Mask all = sp.all_points();
    // open U induces o(U), closed F = X\U induces c(U)
    for (Mask u : sp.opens()) {
      CHECK(induced_sublocale(sp, u, g).members() == g->open_mask_of(sp.open_index(u)));
      CHECK(induced_sublocale(sp, all & ~u, g).members() == g->upset(sp.open_index(u)));
    }
    // induced(A u B) = induced(A) v induced(B); induced(A^B) <= induced(A)^induced(B)
    for (Mask a2 = 0;; ++a2) {
      for (Mask b2 = 0;; ++b2) {
        Mask ia = induced_sublocale(sp, a2, g).members();
        Mask ib = induced_sublocale(sp, b2, g).members();
        CHECK(induced_sublocale(sp, a2 | b2, g).members() == join_mask(*g, ia, ib));
        CHECK(mask_subset(induced_sublocale(sp, a2 & b2, g).members(), ia & ib));
        if (b2 == all) break;
      }
      if (a2 == all) break;
    }
  }
}

TEST_CASE("spatial nowhere density") {
  auto x = sierpinski();
  CHECK(spatial_nwd(x, 0));
  CHECK(!spatial_maximal_nwd(x, 0));
  CHECK(spatial_nwd(x, elem_bit(1)));
  CHECK(spatial_maximal_nwd(x, elem_bit(1)));
  CHECK(spatial_hmnd(x, elem_bit(1)));

  auto d = discrete(3);
  const Mask all = d.all_points();
  for (Mask a = 1;; ++a) {
    CHECK(!spatial_nwd(d, a));
    if (a == all) break;
  }
}

TEST_CASE("homeomorphism-class counts") {
  CHECK(spaces_up_to_homeo(1).size() == 1);
  CHECK(spaces_up_to_homeo(2).size() == 3);   // 1 + 2
  CHECK(spaces_up_to_homeo(3).size() == 8);   // 1 + 2 + 5
  CHECK(spaces_up_to_homeo(4).size() == 24);  // 1 + 2 + 5 + 16
  // T0 classes match poset isomorphism classes; all topologies match the
  // known 1, 3, 9, 33 sequence
  CHECK(count_topologies_up_to_homeo(2, true) == 2);
  CHECK(count_topologies_up_to_homeo(3, true) == 5);
  CHECK(count_topologies_up_to_homeo(4, true) == 16);
  CHECK(count_topologies_up_to_homeo(2, false) == 3);
  CHECK(count_topologies_up_to_homeo(3, false) == 9);
  CHECK(count_topologies_up_to_homeo(4, false) == 33);
}
