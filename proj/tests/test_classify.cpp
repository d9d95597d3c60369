#include "doctest.h"
#include "localelab/classify.hpp"

using namespace localelab;

TEST_CASE("maximal nowhere density on chains and boolean frames") {
  auto f3 = chain_frame(3);
  CHECK(is_maximal_nwd(closed_sublocale(f3, 1)).value);
  CHECK(!is_maximal_nwd(void_sublocale(f3)).value);
  CHECK(!is_maximal_nwd(full_sublocale(f3)).value);

  auto b2 = boolean_frame(2);
  for (const auto& s : enumerate_sublocales(b2)) CHECK(!is_maximal_nwd(s).value);

  auto f4 = chain_frame(4);
  CHECK(is_maximal_nwd(closed_sublocale(f4, 1)).value);
  auto cb = is_maximal_nwd(closed_sublocale(f4, 2));
  CHECK(!cb.value);
  REQUIRE(cb.witness.has_value());
  CHECK(*cb.witness == 1);  // the dense a with b -> a = a

  for (const auto& g : frames_from_posets_up_to(3)) {
    auto subs = enumerate_sublocales(g, 16);
    for (const auto& s : subs)
      CHECK(is_maximal_nwd(s).value == is_maximal_nwd_by_definition(s, subs));
  }
}

TEST_CASE("strongly maximal nowhere density diverges from m.n.d on the void sublocale") {
  auto b2 = boolean_frame(2);
  auto subs2 = enumerate_sublocales(b2);
  CHECK(is_strongly_maximal_nwd(void_sublocale(b2), subs2));  // nothing nwd strictly above O

  auto f3 = chain_frame(3);
  auto subs3 = enumerate_sublocales(f3);
  CHECK(is_strongly_maximal_nwd(closed_sublocale(f3, 1), subs3));
  CHECK(!is_strongly_maximal_nwd(void_sublocale(f3), subs3));

  auto f4 = chain_frame(4);
  auto subs4 = enumerate_sublocales(f4);
  CHECK(!is_strongly_maximal_nwd(closed_sublocale(f4, 2), subs4));
  CHECK(is_strongly_maximal_nwd(closed_sublocale(f4, 1), subs4));
}

TEST_CASE("homogeneous maximal nowhere density") {
  auto f3 = chain_frame(3);
  CHECK(is_hmnd(closed_sublocale(f3, 1)));
  CHECK(!is_hmnd(void_sublocale(f3)));
  CHECK(!is_hmnd(booleanization(f3)));  // not closed

  auto b3 = boolean_frame(3);
  for (const auto& s : enumerate_sublocales(b3)) CHECK(!is_hmnd(s));

  for (const auto& g : frames_from_posets_up_to(3)) {
    for (const auto& s : enumerate_sublocales(g, 16)) {
      if (is_hmnd(s)) CHECK(is_maximal_nwd(s).value);
      if (is_weakly_hmnd(s)) CHECK(is_maximal_nwd(s).value);
      if (is_closed(s)) CHECK(is_hmnd(s) == is_weakly_hmnd(s));
    }
  }
}

TEST_CASE("remoteness") {
  for (const auto& g : frames_from_posets_up_to(3)) {
    auto subs = enumerate_sublocales(g, 16);
    CHECK(is_remote(booleanization(g)));
    CHECK(is_remote_by_definition(booleanization(g), subs));
    for (const auto& t : subs) {
      bool fast = is_remote(t);
      CHECK(fast == is_remote_by_definition(t, subs));
      // remote iff inside every o(y) for dense y
      bool via_opens = true;
      for (Elem y : bits(g->dense_elements()))
        via_opens = via_opens && mask_subset(t.members(), g->open_mask_of(y));
      CHECK(fast == via_opens);
    }
  }

  auto f3 = chain_frame(3);
  CHECK(!is_remote(closed_sublocale(f3, 1)));
  auto O = void_sublocale(f3);
  CHECK(is_remote(O));
  CHECK(is_remote_from(O, full_sublocale(f3)));
  CHECK(is_star_remote_from(O, full_sublocale(f3), void_sublocale(f3)));
  CHECK_THROWS_AS((void)is_remote_from(O, closed_sublocale(f3, 1)), Error);  // S not dense
}

TEST_CASE("Rs and the booleanization identity") {
  auto b2 = boolean_frame(2);
  auto subs2 = enumerate_sublocales(b2);
  CHECK(rs_sublocale(full_sublocale(b2), subs2).members() == b2->full());

  auto f3 = chain_frame(3);
  auto subs3 = enumerate_sublocales(f3);
  CHECK(rs_sublocale(full_sublocale(f3), subs3).members() == f3->booleanization_mask());
  CHECK_THROWS_AS((void)rs_sublocale(closed_sublocale(f3, 1), subs3), Error);

  for (const auto& g : frames_from_posets_up_to(3)) {
    auto subs = enumerate_sublocales(g, 16);
    for (const auto& s : subs)
      if (s.is_dense())
        CHECK((s.members() & rs_sublocale(s, subs).members()) == g->booleanization_mask());
  }
}

TEST_CASE("inaccessibility") {
  auto f4 = chain_frame(4);
  auto subs = enumerate_sublocales(f4);
  auto L = full_sublocale(f4);
  CHECK(is_inaccessible(L, L, subs));
  for (const auto& t : subs) CHECK(is_inaccessible(t, L, subs));

  // open S is S-inaccessible
  for (Elem x = 0; x < f4->size(); ++x) {
    auto s = open_sublocale(f4, x);
    CHECK(is_inaccessible(s, s, subs));
  }

  // S = c(a) in the four-chain: supplement o(a) = {0,1} is boolean, so every
  // T <= S is S-inaccessible
  auto ca = closed_sublocale(f4, 1);
  for (const auto& t : subs)
    if (mask_subset(t.members(), ca.members())) CHECK(is_inaccessible(t, ca, subs));

  CHECK_THROWS_AS((void)is_inaccessible(L, closed_sublocale(f4, 1), subs), Error);  // T not <= S

  for (const auto& g : frames_from_posets_up_to(3)) {
    auto gs = enumerate_sublocales(g, 16);
    for (const auto& s : gs)
      for (const auto& t : gs)
        if (mask_subset(t.members(), s.members()))
          if (is_inaccessible(t, s, gs)) CHECK(is_almost_inaccessible(t, s, gs));
  }
}

TEST_CASE("universe flags agree with the free functions") {
  for (const auto& g : frames_from_posets_up_to(3)) {
    Universe u = Universe::build(g, 16);
    auto subs = enumerate_sublocales(g, 16);
    REQUIRE(u.count() == static_cast<int>(subs.size()));
    for (int i = 0; i < u.count(); ++i) {
      const SubInfo& si = u.info_at(i);
      const Sublocale& s = u.at(i);
      CHECK(si.members == s.members());
      CHECK(si.nwd == is_nowhere_dense(s));
      CHECK(si.mnd == is_maximal_nwd(s).value);
      CHECK(si.mnd_def == is_maximal_nwd_by_definition(s, subs));
      CHECK(si.smnd == is_strongly_maximal_nwd(s, subs));
      CHECK(si.hmnd == is_hmnd(s));
      CHECK(si.whmnd == is_weakly_hmnd(s));
      CHECK(si.remote == is_remote(s));
      CHECK(si.closed == is_closed(s));
      CHECK(si.open == is_open(s));
      CHECK(u.at(u.info_at(i).supplement).members() == supplement(s, subs).members());
      CHECK(si.complemented == is_complemented(s, subs));
    }
  }
}

TEST_CASE("classification output for the three-chain") {
  auto f = chain_frame(3);
  Universe u = Universe::build(f, 16);
  Classification c = classify_sublocale(u, closed_sublocale(f, 1));
  auto flag = [&](const std::string& k) {
    for (const auto& [key, v] : c.flags)
      if (key == k) return v;
    FAIL("missing flag ", k);
    return false;
  };
  CHECK(flag("nowhere_dense"));
  CHECK(flag("maximal_nwd"));
  CHECK(flag("hmnd"));
  CHECK(!flag("remote"));
  CHECK(flag("closed"));
}
