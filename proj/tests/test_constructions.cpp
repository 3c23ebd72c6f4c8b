#include "doctest.h"
#include "fixtures.hpp"

using namespace hoops;

TEST_CASE("glued product carrier is exactly the graph below f") {
  Hoop l2 = fixtures::two_chain();
  PairedHoop p = f_product(l2, l2, sigma_map(l2, l2));
  REQUIRE(p.pair_of.size() == 3);
  CHECK(p.pair_of[0] == std::pair<Elem, Elem>{0, 0});
  CHECK(p.pair_of[1] == std::pair<Elem, Elem>{0, 1});
  CHECK(p.pair_of[2] == std::pair<Elem, Elem>{1, 1});
  CHECK(p.index_of(0, 1) == 1);
  CHECK(p.index_of(1, 0) == -1);  // 1 is not below sigma(0) = 0
}

TEST_CASE("carrier membership rule holds for every census product") {
  auto small = fixtures::census_through(3);
  for (const Hoop& a : small)
    for (const Hoop& b : small)
      for (const auto& f : all_product_morphism_maps(b, a)) {
        PairedHoop p = f_product(a, b, f);
        size_t expect = 0;
        for (Elem x = 0; x < b.size(); ++x)
          for (Elem e = 0; e < a.size(); ++e)
            if (a.leq(e, f[static_cast<size_t>(x)])) ++expect;
        CHECK(p.pair_of.size() == expect);
        for (const auto& [e, x] : p.pair_of) CHECK(a.leq(e, f[static_cast<size_t>(x)]));
      }
}

TEST_CASE("every glued product is a hoop with the restricted order") {
  auto small = fixtures::census_through(3);
  for (const Hoop& a : small)
    for (const Hoop& b : small)
      for (const auto& f : all_product_morphism_maps(b, a)) {
        PairedHoop p = f_product(a, b, f);
        CHECK(validate_hoop(p.algebra.data()).valid());
        for (Elem i = 0; i < p.algebra.size(); ++i)
          for (Elem j = 0; j < p.algebra.size(); ++j) {
            auto [ai, xi] = p.pair_of[static_cast<size_t>(i)];
            auto [aj, xj] = p.pair_of[static_cast<size_t>(j)];
            CHECK(p.algebra.leq(i, j) == (a.leq(ai, aj) && b.leq(xi, xj)));
          }
      }
}

TEST_CASE("the constant unit glue gives the direct product tables") {
  auto small = fixtures::census_through(3);
  for (const Hoop& a : small)
    for (const Hoop& b : small) {
      PairedHoop via_glue = f_product(a, b, epsilon_map(b, a));
      PairedHoop direct = direct_product(a, b);
      CHECK(via_glue.algebra.data().same_tables(direct.algebra.data()));
      CHECK(via_glue.algebra.size() == a.size() * b.size());
    }
}

TEST_CASE("the unit or bottom glue gives the ordinal sum") {
  auto small = fixtures::census_through(3);
  for (const Hoop& a : small)
    for (const Hoop& b : small) {
      PairedHoop p = f_product(a, b, sigma_map(b, a));
      Hoop sum = ordinal_sum(b, a);
      CHECK(hoop_isomorphism(p.algebra, sum).has_value());
    }
  // and the two chain square case comes out as the godel chain on the nose
  Hoop l2 = fixtures::two_chain();
  CHECK(f_product(l2, l2, sigma_map(l2, l2)).algebra.data().same_tables(
      fixtures::godel_chain_data()));
}

TEST_CASE("glued product rejects a non product morphism") {
  Hoop l3 = fixtures::three_chain();
  Hoop l2 = fixtures::two_chain();
  CHECK_THROWS_AS(f_product(l2, l3, std::vector<Elem>{0, 1, 1}), argument_error);
  CHECK_THROWS_AS(f_product(l2, l3, std::vector<Elem>{1, 1}), argument_error);
}

TEST_CASE("ordinal sum shape") {
  Hoop l2 = fixtures::two_chain();
  Hoop l3 = fixtures::three_chain();
  Hoop s = ordinal_sum(l3, l2);
  CHECK(s.size() == 4);
  CHECK(s.unit() == 3);
  CHECK(s.bottom() == 0);
  // lower copy keeps its multiplication, upper copy sits above everything
  CHECK(s.mul(0, 1) == l3.mul(0, 1));
  CHECK(s.mul(1, 1) == l3.mul(1, 1));
  CHECK(s.leq(1, 2));
  CHECK(s.mul(1, 2) == 1);
  CHECK(s.imp(2, 1) == 1);
  CHECK(validate_hoop(s.data()).valid());
  // sums with the trivial hoop change nothing
  CHECK(hoop_isomorphism(ordinal_sum(l3, Hoop{}), l3).has_value());
  CHECK(hoop_isomorphism(ordinal_sum(Hoop{}, l3), l3).has_value());
}

TEST_CASE("ordinal sums associate up to isomorphism") {
  Hoop l2 = fixtures::two_chain();
  Hoop l3 = fixtures::three_chain();
  Hoop left = ordinal_sum(ordinal_sum(l2, l3), l2);
  Hoop right = ordinal_sum(l2, ordinal_sum(l3, l2));
  CHECK(hoop_isomorphism(left, right).has_value());
}

TEST_CASE("nucleus checks and images") {
  Hoop sq = fixtures::square();
  // push the second coordinate to the top: fixed points are the right edge
  std::vector<Elem> gamma{2, 3, 2, 3};
  CHECK(is_nucleus(sq, gamma));
  NucleusImage img = nucleus_image(sq, gamma);
  CHECK(img.algebra.size() == 2);
  CHECK(validate_hoop(img.algebra.data()).valid());
  CHECK(hoop_isomorphism(img.algebra, fixtures::two_chain()).has_value());

  // identity and constant unit are nuclei
  Hoop l3 = fixtures::three_chain();
  CHECK(is_nucleus(l3, identity_map(3)));
  CHECK(nucleus_image(l3, identity_map(3)).algebra.size() == 3);
  std::vector<Elem> to_unit(3, 2);
  CHECK(is_nucleus(l3, to_unit));
  CHECK(nucleus_image(l3, to_unit).algebra.size() == 1);

  // not inflationary
  std::vector<Elem> down{0, 0, 2};
  CHECK_FALSE(is_nucleus(l3, down));
  // not idempotent: send 0 up one step repeatedly
  std::vector<Elem> creep{1, 2, 2};
  CHECK_FALSE(is_nucleus(l3, creep));
  CHECK_THROWS_AS(nucleus_image(l3, down), argument_error);
}
