#include "doctest.h"
#include "localelab/frame.hpp"
#include "localelab/posets.hpp"

using namespace localelab;

namespace {

std::vector<std::uint8_t> leq_from_pairs(int n, std::initializer_list<std::pair<int, int>> pairs) {
  std::vector<std::uint8_t> leq(n * n, 0);
  for (int i = 0; i < n; ++i) leq[i * n + i] = 1;
  for (auto [a, b] : pairs) leq[a * n + b] = 1;
  return leq;
}

}  // namespace

TEST_CASE("three-element chain heyting table") {
  auto f = chain_frame(3);
  const Elem a = 1;
  CHECK(f->size() == 3);
  CHECK(f->bottom() == 0);
  CHECK(f->top() == 2);
  CHECK(f->heyting(a, 0) == 0);
  CHECK(f->heyting(0, a) == f->top());
  CHECK(f->pseudocomplement(a) == 0);
  CHECK(f->pseudocomplement(0) == f->top());
}

TEST_CASE("degenerate one-element frame") {
  auto f = chain_frame(1);
  CHECK(f->size() == 1);
  CHECK(f->bottom() == f->top());
  CHECK(f->is_boolean());
  CHECK(f->is_dense(0));
}

TEST_CASE("pentagon is rejected as non-distributive") {
  // 0 < x < z < 1, 0 < y < 1, y incomparable to x and z
  auto leq = leq_from_pairs(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 4}, {2, 4}, {3, 4}});
  CHECK_THROWS_AS((void)build_frame(5, leq), Error);
  try {
    (void)build_frame(5, leq);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::not_distributive);
  }
}

TEST_CASE("missing bounds and missing meets are lattice errors") {
  // two maximal elements, no top
  auto leq = leq_from_pairs(3, {{0, 1}, {0, 2}});
  try {
    (void)build_frame(3, leq);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::not_a_lattice);
  }
  // bowtie: a,b < c,d has no meet for (c,d)
  auto leq2 = leq_from_pairs(
      6, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {1, 5}, {2, 5},
          {3, 5}, {4, 5}});
  try {
    (void)build_frame(6, leq2);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::not_a_lattice);
  }
}

TEST_CASE("partial order violations are rejected") {
  std::vector<std::uint8_t> not_reflexive(4, 0);
  try {
    (void)build_frame(2, not_reflexive);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::not_a_partial_order);
  }
  auto cyclic = leq_from_pairs(2, {{0, 1}, {1, 0}});
  try {
    (void)build_frame(2, cyclic);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::not_a_partial_order);
  }
}

TEST_CASE("downset frames of small posets") {
  PosetSeed one;
  one.size = 1;
  CHECK(downset_frame(one)->size() == 2);

  PosetSeed two_chain;
  two_chain.size = 2;
  two_chain.covers = {{0, 1}};
  auto f = downset_frame(two_chain);
  CHECK(f->size() == 3);
  CHECK(frames_isomorphic(*f, *chain_frame(3)));

  PosetSeed two_anti;
  two_anti.size = 2;
  auto g = downset_frame(two_anti);
  CHECK(g->size() == 4);
  CHECK(frames_isomorphic(*g, *boolean_frame(2)));

  PosetSeed cyc;
  cyc.size = 2;
  cyc.covers = {{0, 1}, {1, 0}};
  try {
    (void)downset_frame(cyc);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::cycle_in_covers);
  }
}

TEST_CASE("generators") {
  CHECK(boolean_frame(0)->size() == 1);
  CHECK(boolean_frame(3)->size() == 8);
  CHECK(frames_isomorphic(*product_frame(chain_frame(2), chain_frame(2)), *boolean_frame(2)));

  // frames with <= 4 elements: 1, 2, 3, 2^2 and the 4-chain
  auto frames = all_frames_up_to(4);
  CHECK(frames.size() == 5);
  bool has_b2 = false, has_c3 = false, has_c4 = false;
  for (const auto& f : frames) {
    CHECK(f->size() <= 4);
    if (frames_isomorphic(*f, *boolean_frame(2))) has_b2 = true;
    if (frames_isomorphic(*f, *chain_frame(3))) has_c3 = true;
    if (frames_isomorphic(*f, *chain_frame(4))) has_c4 = true;
  }
  CHECK(has_b2);
  CHECK(has_c3);
  CHECK(has_c4);
  CHECK(all_frames_up_to(2).size() == 2);

  CHECK_THROWS_AS((void)all_frames_up_to(8, 5), Error);
  CHECK_THROWS_AS((void)boolean_frame(7), Error);
}

TEST_CASE("poset enumeration counts and frame corpus dedup") {
  CHECK(posets_of_size(0).size() == 1);
  CHECK(posets_of_size(1).size() == 1);
  CHECK(posets_of_size(2).size() == 2);
  CHECK(posets_of_size(3).size() == 5);
  CHECK(posets_of_size(4).size() == 16);
  CHECK(posets_of_size(5).size() == 63);

  auto frames = frames_from_posets_up_to(3);
  CHECK(frames.size() == 9);
  for (std::size_t i = 0; i < frames.size(); ++i)
    for (std::size_t j = i + 1; j < frames.size(); ++j)
      CHECK(!frames_isomorphic(*frames[i], *frames[j]));
}

TEST_CASE("pseudocomplement examples") {
  auto b2 = boolean_frame(2);
  // atoms of 2^2 are complements of each other
  Elem p = 1, q = 2;
  CHECK(b2->pseudocomplement(p) == q);
  CHECK(b2->pseudocomplement(q) == p);
  CHECK(b2->is_boolean());
  CHECK(!chain_frame(3)->is_boolean());
}

TEST_CASE("element predicates on the four-chain") {
  auto f = chain_frame(4);
  CHECK(f->dense_elements() == (elem_bit(1) | elem_bit(2) | elem_bit(3)));
  CHECK(f->is_dense(f->top()));
  // every element below the top of a chain is a point
  for (Elem x = 0; x < f->size(); ++x) CHECK(f->is_point(x) == (x != f->top()));
  // strongly submaximal fails is covered in sublocale tests; here: not boolean
  CHECK(!f->is_boolean());
}

TEST_CASE("frame axioms as properties over the corpus") {
  for (const auto& f : frames_from_posets_up_to(3)) {
    const int n = f->size();
    for (Elem a = 0; a < n; ++a) {
      CHECK(f->heyting(a, a) == f->top());
      CHECK(f->heyting(f->top(), a) == a);
      Elem astar = f->pseudocomplement(a);
      CHECK(f->leq(a, f->pseudocomplement(astar)));                      // a <= a**
      CHECK(f->pseudocomplement(f->pseudocomplement(astar)) == astar);   // a* = a***
      for (Elem b = 0; b < n; ++b) {
        CHECK(f->leq(a, f->heyting(b, f->meet(a, b))));
        for (Elem c = 0; c < n; ++c)
          CHECK(f->leq(a, f->heyting(b, c)) == f->leq(f->meet(a, b), c));
      }
    }
    // boolean iff the only dense element is the top
    CHECK(f->is_boolean() == (f->dense_elements() == elem_bit(f->top())));
    // completely-below: contained in rather-below and interpolative
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b) {
        if (!f->completely_below(a, b)) continue;
        CHECK(f->rather_below(a, b));
        bool interpolates = false;
        for (Elem ci = 0; ci < n && !interpolates; ++ci)
          interpolates = f->completely_below(a, ci) && f->completely_below(ci, b);
        CHECK(interpolates);
      }
    // every generated frame re-validates through build_frame
    std::vector<std::uint8_t> leq(n * n, 0);
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b) leq[a * n + b] = f->leq(a, b);
    CHECK(build_frame(n, leq)->size() == n);
  }
}

TEST_CASE("complete regularity at this scale is booleanness") {
  CHECK(boolean_frame(2)->is_completely_regular());
  CHECK(!chain_frame(3)->is_completely_regular());
  for (const auto& f : frames_from_posets_up_to(3))
    CHECK(f->is_completely_regular() == f->is_boolean());
}

TEST_CASE("isomorphism testing") {
  CHECK(frames_isomorphic(*chain_frame(4), *chain_frame(4)));
  CHECK(!frames_isomorphic(*chain_frame(4), *boolean_frame(2)));
  CHECK(!frames_isomorphic(*chain_frame(3), *chain_frame(4)));
}

TEST_CASE("corrupted heyting hook changes derived data") {
  auto f = chain_frame(4);
  auto bad = f->with_corrupted_heyting(1, 0, 2);  // a -> 0 := b
  CHECK(bad->heyting(1, 0) == 2);
  CHECK(bad->dense_elements() != f->dense_elements());
}
