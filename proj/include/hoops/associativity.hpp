#pragma once

// Nested f-products associate in a controlled way: pairs of morphisms
// shaped (A x_f B) x_g C convert to pairs shaped A x_f (B x_g C) and
// back, and the two evaluations are isomorphic via the evident pair
// shuffle. This header implements the conversions and the isomorphism.

#include "hoops/constructions.hpp"

namespace hoops {

// f : B -> A and g : C -> (A x_f B), with the product cached.
struct LeftAssociatedPair {
  Hoop a, b, c;
  std::vector<Elem> f;
  PairedHoop ab;
  std::vector<Elem> g;
};

// g : C -> B and f : (B x_g C) -> A, with the product cached.
struct RightAssociatedPair {
  Hoop a, b, c;
  std::vector<Elem> g;
  PairedHoop bc;
  std::vector<Elem> f;
};

inline LeftAssociatedPair make_left_pair(Hoop a, Hoop b, Hoop c, std::vector<Elem> f,
                                         std::vector<Elem> g) {
  if (!is_product_morphism(b, a, f))
    throw argument_error("left pair: f is not a product morphism B -> A");
  PairedHoop ab = f_product(a, b, f);
  if (!is_product_morphism(c, ab.algebra, g))
    throw argument_error("left pair: g is not a product morphism C -> A x_f B");
  return LeftAssociatedPair{std::move(a), std::move(b), std::move(c),
                            std::move(f), std::move(ab), std::move(g)};
}

inline RightAssociatedPair make_right_pair(Hoop a, Hoop b, Hoop c, std::vector<Elem> f,
                                           std::vector<Elem> g) {
  if (!is_product_morphism(c, b, g))
    throw argument_error("right pair: g is not a product morphism C -> B");
  PairedHoop bc = f_product(b, c, g);
  if (!is_product_morphism(bc.algebra, a, f))
    throw argument_error("right pair: f is not a product morphism (B x_g C) -> A");
  return RightAssociatedPair{std::move(a), std::move(b), std::move(c),
                             std::move(g), std::move(bc), std::move(f)};
}

// Left to right: split g into components, meet the leftovers into f.
//   g'(c)    = second(g(c))
//   f'(b, c) = f(b) ^ first(g(c))
// Both results are product morphisms by the correspondence theorem, so
// failures here are internal.
inline RightAssociatedPair to_right_associated(const LeftAssociatedPair& p) {
  const int nc = p.c.size();
  std::vector<Elem> g2(static_cast<size_t>(nc)), g1(static_cast<size_t>(nc));
  for (Elem c = 0; c < nc; ++c) {
    auto [first, second] = p.ab.pair_of[static_cast<size_t>(p.g[static_cast<size_t>(c)])];
    g1[static_cast<size_t>(c)] = first;
    g2[static_cast<size_t>(c)] = second;
  }
  if (!is_product_morphism(p.c, p.b, g2))
    throw internal_error("conversion: second component of g is not a product morphism");
  PairedHoop bc = f_product(p.b, p.c, g2);
  std::vector<Elem> fbar(bc.pair_of.size());
  for (size_t i = 0; i < bc.pair_of.size(); ++i) {
    auto [b, c] = bc.pair_of[i];
    fbar[i] = p.a.meet(p.f[static_cast<size_t>(b)], g1[static_cast<size_t>(c)]);
  }
  if (!is_product_morphism(bc.algebra, p.a, fbar))
    throw internal_error("conversion: assembled f is not a product morphism");
  return RightAssociatedPair{p.a, p.b, p.c, std::move(g2), std::move(bc), std::move(fbar)};
}

// Right to left: restrict f to the (b, unit) slice, rebuild g as a pair.
//   f'(b) = f(b, 1)
//   g'(c) = (f(g(c), c), g(c))
inline LeftAssociatedPair to_left_associated(const RightAssociatedPair& p) {
  const int nb = p.b.size(), nc = p.c.size();
  std::vector<Elem> fbar(static_cast<size_t>(nb));
  for (Elem b = 0; b < nb; ++b) {
    Elem i = p.bc.index_of(b, p.c.unit());
    if (i < 0) throw internal_error("conversion: (b, unit) slice missing from carrier");
    fbar[static_cast<size_t>(b)] = p.f[static_cast<size_t>(i)];
  }
  if (!is_product_morphism(p.b, p.a, fbar))
    throw internal_error("conversion: restricted f is not a product morphism");
  PairedHoop ab = f_product(p.a, p.b, fbar);
  std::vector<Elem> gbar(static_cast<size_t>(nc));
  for (Elem c = 0; c < nc; ++c) {
    Elem gc = p.g[static_cast<size_t>(c)];
    Elem i = p.bc.index_of(gc, c);
    if (i < 0) throw internal_error("conversion: (g(c), c) missing from carrier");
    Elem j = ab.index_of(p.f[static_cast<size_t>(i)], gc);
    if (j < 0) throw internal_error("conversion: assembled g leaves the carrier");
    gbar[static_cast<size_t>(c)] = j;
  }
  if (!is_product_morphism(p.c, ab.algebra, gbar))
    throw internal_error("conversion: assembled g is not a product morphism");
  return LeftAssociatedPair{p.a, p.b, p.c, std::move(fbar), std::move(ab), std::move(gbar)};
}

inline bool pairs_equal(const LeftAssociatedPair& x, const LeftAssociatedPair& y) {
  return x.a.same_tables(y.a) && x.b.same_tables(y.b) && x.c.same_tables(y.c) &&
         x.f == y.f && x.g == y.g;
}

inline bool pairs_equal(const RightAssociatedPair& x, const RightAssociatedPair& y) {
  return x.a.same_tables(y.a) && x.b.same_tables(y.b) && x.c.same_tables(y.c) &&
         x.f == y.f && x.g == y.g;
}

inline bool round_trips(const LeftAssociatedPair& p) {
  return pairs_equal(p, to_left_associated(to_right_associated(p)));
}

inline bool round_trips(const RightAssociatedPair& p) {
  return pairs_equal(p, to_right_associated(to_left_associated(p)));
}

struct ReassociationIso {
  PairedHoop nested_right;  // A x_f (B x_g C)
  PairedHoop nested_left;   // (A x_f' B) x_g' C
  std::vector<Elem> map;    // right-nested index -> left-nested index
};

// The pair shuffle (a,(b,c)) |-> ((a,b),c) between the two nestings of
// a right associated pair. Verified to be a bijection preserving both
// tables, and the three-way membership test
//   a <= f(b,1)  and  a <= f(g(c),c)  and  b <= g(c)
// is checked against membership in both carriers for every raw triple.
inline ReassociationIso reassociation_iso(const RightAssociatedPair& p) {
  LeftAssociatedPair lp = to_left_associated(p);
  PairedHoop right_nested = f_product(p.a, p.bc.algebra, p.f);
  PairedHoop left_nested = f_product(lp.ab.algebra, p.c, lp.g);

  if (right_nested.algebra.size() != left_nested.algebra.size())
    throw internal_error("reassociation: carrier sizes differ");

  std::vector<Elem> map(right_nested.pair_of.size());
  std::vector<char> hit(left_nested.pair_of.size(), 0);
  for (size_t i = 0; i < right_nested.pair_of.size(); ++i) {
    auto [a, w] = right_nested.pair_of[i];
    auto [b, c] = p.bc.pair_of[static_cast<size_t>(w)];
    Elem u = lp.ab.index_of(a, b);
    if (u < 0) throw internal_error("reassociation: (a,b) not in the left product");
    Elem t = left_nested.index_of(u, c);
    if (t < 0) throw internal_error("reassociation: ((a,b),c) not in the left nesting");
    if (hit[static_cast<size_t>(t)]) throw internal_error("reassociation: not injective");
    hit[static_cast<size_t>(t)] = 1;
    map[i] = t;
  }

  const Hoop& R = right_nested.algebra;
  const Hoop& L = left_nested.algebra;
  for (Elem i = 0; i < R.size(); ++i)
    for (Elem j = 0; j < R.size(); ++j) {
      if (map[static_cast<size_t>(R.mul(i, j))] !=
          L.mul(map[static_cast<size_t>(i)], map[static_cast<size_t>(j)]))
        throw internal_error("reassociation does not preserve multiplication");
      if (map[static_cast<size_t>(R.imp(i, j))] !=
          L.imp(map[static_cast<size_t>(i)], map[static_cast<size_t>(j)]))
        throw internal_error("reassociation does not preserve implication");
    }

  // membership chain over raw triples
  for (Elem a = 0; a < p.a.size(); ++a)
    for (Elem b = 0; b < p.b.size(); ++b)
      for (Elem c = 0; c < p.c.size(); ++c) {
        Elem gc = p.g[static_cast<size_t>(c)];
        bool b_le_gc = p.b.leq(b, gc);
        bool in_right = false;
        if (b_le_gc) {
          Elem w = p.bc.index_of(b, c);
          in_right = w >= 0 && p.a.leq(a, p.f[static_cast<size_t>(w)]);
        }
        Elem wg = p.bc.index_of(gc, c);
        if (wg < 0) throw internal_error("reassociation: (g(c),c) missing");
        bool chain = p.a.leq(a, lp.f[static_cast<size_t>(b)]) &&
                     p.a.leq(a, p.f[static_cast<size_t>(wg)]) && b_le_gc;
        Elem u = lp.ab.index_of(a, b);
        bool in_left = u >= 0 && lp.ab.algebra.leq(u, lp.g[static_cast<size_t>(c)]);
        if (in_right != chain || chain != in_left)
          throw internal_error("reassociation membership chain failed");
      }

  return ReassociationIso{std::move(right_nested), std::move(left_nested), std::move(map)};
}

inline std::vector<LeftAssociatedPair> all_left_pairs(const Hoop& a, const Hoop& b,
                                                      const Hoop& c) {
  std::vector<LeftAssociatedPair> out;
  for (const auto& f : all_product_morphism_maps(b, a)) {
    PairedHoop ab = f_product(a, b, f);
    for (const auto& g : all_product_morphism_maps(c, ab.algebra))
      out.push_back(LeftAssociatedPair{a, b, c, f, ab, g});
  }
  return out;
}

inline std::vector<RightAssociatedPair> all_right_pairs(const Hoop& a, const Hoop& b,
                                                        const Hoop& c) {
  std::vector<RightAssociatedPair> out;
  for (const auto& g : all_product_morphism_maps(c, b)) {
    PairedHoop bc = f_product(b, c, g);
    for (const auto& f : all_product_morphism_maps(bc.algebra, a))
      out.push_back(RightAssociatedPair{a, b, c, g, bc, f});
  }
  return out;
}

}  // namespace hoops
