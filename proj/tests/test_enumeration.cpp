#include <algorithm>
#include <set>

#include "doctest.h"
#include "fixtures.hpp"

using namespace hoops;

namespace {

// all seven axiom families, written out once more with no library code
bool axioms_longhand(int n, Elem e, const std::vector<Elem>& mul, const std::vector<Elem>& imp) {
  auto m = [&](Elem x, Elem y) { return mul[static_cast<size_t>(x) * n + y]; };
  auto i = [&](Elem x, Elem y) { return imp[static_cast<size_t>(x) * n + y]; };
  for (Elem x = 0; x < n; ++x) {
    if (m(e, x) != x || m(x, e) != x) return false;
    if (i(x, x) != e) return false;
    for (Elem y = 0; y < n; ++y) {
      if (m(x, y) != m(y, x)) return false;
      if (m(x, i(x, y)) != m(y, i(y, x))) return false;
      if (x != y && i(x, y) == e && i(y, x) == e) return false;
      for (Elem z = 0; z < n; ++z) {
        if (m(m(x, y), z) != m(x, m(y, z))) return false;
        if (i(m(x, y), z) != i(x, i(y, z))) return false;
      }
    }
  }
  return true;
}

// iso-class key: least (unit, mul, imp) over every relabeling
std::vector<Elem> perm_min_key(int n, Elem e, const std::vector<Elem>& mul,
                               const std::vector<Elem>& imp) {
  std::vector<Elem> perm(static_cast<size_t>(n));
  for (Elem x = 0; x < n; ++x) perm[static_cast<size_t>(x)] = x;
  std::vector<Elem> best;
  do {
    std::vector<Elem> key;
    key.push_back(perm[static_cast<size_t>(e)]);
    key.resize(1 + 2 * static_cast<size_t>(n) * n);
    for (Elem x = 0; x < n; ++x)
      for (Elem y = 0; y < n; ++y) {
        size_t at = 1 + static_cast<size_t>(perm[static_cast<size_t>(x)]) * n +
                    perm[static_cast<size_t>(y)];
        key[at] = perm[static_cast<size_t>(mul[static_cast<size_t>(x) * n + y])];
        key[at + static_cast<size_t>(n) * n] =
            perm[static_cast<size_t>(imp[static_cast<size_t>(x) * n + y])];
      }
    if (best.empty() || key < best) best = key;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

std::vector<Elem> perm_min_key(const Hoop& h) {
  return perm_min_key(h.size(), h.unit(), h.data().mul, h.data().imp);
}

// every unit, every multiplication table, every implication table
std::set<std::vector<Elem>> dumb_census_keys(int n) {
  std::set<std::vector<Elem>> keys;
  const size_t nn = static_cast<size_t>(n) * n;
  std::vector<Elem> mul(nn, 0), imp(nn, 0);
  auto bump = [&](std::vector<Elem>& t) {
    size_t i = 0;
    while (i < t.size() && t[i] == n - 1) t[i++] = 0;
    if (i == t.size()) return false;
    ++t[i];
    return true;
  };
  for (Elem e = 0; e < n; ++e) {
    std::fill(mul.begin(), mul.end(), 0);
    do {
      // monoid part first so the inner loop stays affordable
      bool monoid = true;
      for (Elem x = 0; x < n && monoid; ++x) {
        if (mul[static_cast<size_t>(e) * n + x] != x || mul[static_cast<size_t>(x) * n + e] != x)
          monoid = false;
        for (Elem y = 0; y < n && monoid; ++y) {
          if (mul[static_cast<size_t>(x) * n + y] != mul[static_cast<size_t>(y) * n + x])
            monoid = false;
          for (Elem z = 0; z < n && monoid; ++z)
            if (mul[static_cast<size_t>(mul[static_cast<size_t>(x) * n + y]) * n + z] !=
                mul[static_cast<size_t>(x) * n + mul[static_cast<size_t>(y) * n + z]])
              monoid = false;
        }
      }
      if (!monoid) continue;
      std::fill(imp.begin(), imp.end(), 0);
      do {
        if (axioms_longhand(n, e, mul, imp)) keys.insert(perm_min_key(n, e, mul, imp));
      } while (bump(imp));
    } while (bump(mul));
  }
  return keys;
}

// a different generator again: symmetric tables with the unit pinned,
// implication forced by residuation over the divisibility order
std::set<std::vector<Elem>> residuation_census_keys_4() {
  const int n = 4;
  const Elem e = 3;
  std::set<std::vector<Elem>> keys;
  std::vector<std::pair<Elem, Elem>> cells;
  for (Elem x = 0; x < 3; ++x)
    for (Elem y = x; y < 3; ++y) cells.emplace_back(x, y);

  std::vector<Elem> choice(cells.size(), 0);
  while (true) {
    std::vector<Elem> mul(16);
    for (Elem x = 0; x < n; ++x) {
      mul[static_cast<size_t>(x) * n + e] = x;
      mul[static_cast<size_t>(e) * n + x] = x;
    }
    for (size_t k = 0; k < cells.size(); ++k) {
      auto [x, y] = cells[k];
      mul[static_cast<size_t>(x) * n + y] = choice[k];
      mul[static_cast<size_t>(y) * n + x] = choice[k];
    }

    bool assoc = true;
    for (Elem x = 0; x < n && assoc; ++x)
      for (Elem y = 0; y < n && assoc; ++y)
        for (Elem z = 0; z < n && assoc; ++z)
          if (mul[static_cast<size_t>(mul[static_cast<size_t>(x) * n + y]) * n + z] !=
              mul[static_cast<size_t>(x) * n + mul[static_cast<size_t>(y) * n + z]])
            assoc = false;

    if (assoc) {
      // x <= y iff x is a multiple of y
      auto le = [&](Elem x, Elem y) {
        for (Elem z = 0; z < n; ++z)
          if (mul[static_cast<size_t>(y) * n + z] == x) return true;
        return false;
      };
      bool antisym = true;
      for (Elem x = 0; x < n && antisym; ++x)
        for (Elem y = 0; y < n && antisym; ++y)
          if (x != y && le(x, y) && le(y, x)) antisym = false;

      if (antisym) {
        std::vector<Elem> imp(16, -1);
        bool total = true;
        for (Elem x = 0; x < n && total; ++x)
          for (Elem y = 0; y < n && total; ++y) {
            Elem top = -1;
            for (Elem z = 0; z < n; ++z) {
              if (!le(mul[static_cast<size_t>(x) * n + z], y)) continue;
              bool greatest = true;
              for (Elem w = 0; w < n; ++w)
                if (le(mul[static_cast<size_t>(x) * n + w], y) && !le(w, z)) {
                  greatest = false;
                  break;
                }
              if (greatest) {
                top = z;
                break;
              }
            }
            if (top < 0)
              total = false;
            else
              imp[static_cast<size_t>(x) * n + y] = top;
          }
        if (total && axioms_longhand(n, e, mul, imp)) keys.insert(perm_min_key(n, e, mul, imp));
      }
    }

    size_t i = 0;
    while (i < choice.size() && choice[i] == n - 1) choice[i++] = 0;
    if (i == choice.size()) break;
    ++choice[i];
  }
  return keys;
}

std::set<std::vector<Elem>> library_census_keys(int n) {
  std::set<std::vector<Elem>> keys;
  for (const auto& h : enumerate_hoops(n, 8).representatives) keys.insert(perm_min_key(h));
  return keys;
}

}  // namespace

TEST_CASE("census counts") {
  const int expected[] = {1, 1, 2, 5, 10, 23};
  for (int n = 1; n <= 6; ++n) {
    HoopCensus c = enumerate_hoops(n, 6);
    CHECK(c.order == n);
    CHECK(c.count == expected[n - 1]);
    CHECK(c.count == static_cast<int>(c.representatives.size()));
  }
}

TEST_CASE("dumb full search agrees at small sizes") {
  for (int n = 1; n <= 3; ++n) {
    auto dumb = dumb_census_keys(n);
    auto lib = library_census_keys(n);
    CHECK(dumb == lib);
  }
  CHECK(dumb_census_keys(1).size() == 1);
  CHECK(dumb_census_keys(2).size() == 1);
  CHECK(dumb_census_keys(3).size() == 2);
}

TEST_CASE("residuation search agrees at size four") {
  auto other = residuation_census_keys_4();
  CHECK(other.size() == 5);
  CHECK(other == library_census_keys(4));
}

TEST_CASE("representatives are canonical, sorted, valid") {
  for (int n = 1; n <= 6; ++n) {
    HoopCensus c = enumerate_hoops(n, 6);
    std::vector<Elem> prev;
    for (const auto& h : c.representatives) {
      CHECK(h.size() == n);
      CHECK(h.unit() == n - 1);
      CHECK(validate_hoop(h.data()).valid());
      CHECK(canonical_form(h).same_tables(h));
      std::vector<Elem> key = h.data().mul;
      key.insert(key.end(), h.data().imp.begin(), h.data().imp.end());
      CHECK(prev < key);
      prev = std::move(key);
    }
  }
  for (const auto& h : fixtures::census_through(5)) CHECK(check_lemma_suite(h).valid());
}

TEST_CASE("canonical form") {
  Hoop l3 = fixtures::three_chain();
  Hoop g3 = fixtures::godel_chain();

  SUBCASE("relabeling invariance") {
    std::vector<Elem> perm{0, 1, 2};
    do {
      for (const Hoop& h : {l3, g3}) {
        HoopData d;
        d.size = 3;
        d.unit = perm[static_cast<size_t>(h.unit())];
        d.mul.assign(9, 0);
        d.imp.assign(9, 0);
        for (Elem x = 0; x < 3; ++x)
          for (Elem y = 0; y < 3; ++y) {
            d.mul_at(perm[static_cast<size_t>(x)], perm[static_cast<size_t>(y)]) =
                perm[static_cast<size_t>(h.mul(x, y))];
            d.imp_at(perm[static_cast<size_t>(x)], perm[static_cast<size_t>(y)]) =
                perm[static_cast<size_t>(h.imp(x, y))];
          }
        CHECK(canonical_form(Hoop(d)).same_tables(canonical_form(h)));
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
  }

  SUBCASE("idempotent") {
    for (const auto& h : fixtures::census_through(4)) {
      Hoop c = canonical_form(h);
      CHECK(canonical_form(c).same_tables(c));
    }
  }

  SUBCASE("equal tables exactly for isomorphic pairs") {
    auto reps = enumerate_hoops(4, 6).representatives;
    for (size_t i = 0; i < reps.size(); ++i)
      for (size_t j = 0; j < reps.size(); ++j) {
        bool same = canonical_form(reps[i]).same_tables(canonical_form(reps[j]));
        bool iso = hoop_isomorphism(reps[i], reps[j]).has_value();
        CHECK(same == iso);
        CHECK(same == (i == j));
      }
  }

  SUBCASE("size guard") { CHECK_THROWS_AS(canonical_form(mv_chain(10)), argument_error); }
}

TEST_CASE("census is closed under the constructions") {
  std::set<std::vector<Elem>> keys[7];
  for (int n = 1; n <= 6; ++n)
    for (const auto& h : enumerate_hoops(n, 6).representatives) keys[n].insert(perm_min_key(h));

  for (const auto& h : fixtures::census_through(5)) {
    for (const auto& f : all_filters(h)) {
      Hoop q = quotient(h, f).algebra;
      CHECK(keys[q.size()].count(perm_min_key(q)) == 1);
      Hoop s = filter_subalgebra(h, f).algebra;
      CHECK(keys[s.size()].count(perm_min_key(s)) == 1);
    }
  }
  auto small = fixtures::census_through(3);
  for (const auto& a : small)
    for (const auto& b : small) {
      if (a.size() * b.size() <= 6) {
        Hoop p = direct_product(a, b).algebra;
        CHECK(keys[p.size()].count(perm_min_key(p)) == 1);
      }
      if (a.size() + b.size() - 1 <= 6) {
        Hoop o = ordinal_sum(a, b);
        CHECK(keys[o.size()].count(perm_min_key(o)) == 1);
      }
    }
}

TEST_CASE("enumeration guards") {
  CHECK_THROWS_AS(enumerate_hoops(0), argument_error);
  CHECK_THROWS_AS(enumerate_hoops(-2), argument_error);
  CHECK_THROWS_AS(enumerate_hoops(7), argument_error);
  CHECK_THROWS_AS(enumerate_hoops(3, 2), argument_error);
  CHECK(enumerate_hoops(3, 3).count == 2);
}
