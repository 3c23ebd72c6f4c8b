#pragma once

// Product morphisms (the maps the f-product construction is built over)
// and plain hoop homomorphisms, with exhaustive enumeration for both.

#include "hoops/core.hpp"

namespace hoops {

// f(1) = 1 and f(x)*f(y) = f(x*y) = f(x)^f(y) = f(x^y). The common value
// forces every image element to be idempotent.
inline bool is_product_morphism(const Hoop& domain, const Hoop& codomain,
                                std::span<const Elem> map) {
  if (static_cast<int>(map.size()) != domain.size()) return false;
  for (Elem v : map)
    if (v < 0 || v >= codomain.size()) return false;
  if (map[static_cast<size_t>(domain.unit())] != codomain.unit()) return false;
  for (Elem x = 0; x < domain.size(); ++x)
    for (Elem y = 0; y < domain.size(); ++y) {
      Elem p = codomain.mul(map[static_cast<size_t>(x)], map[static_cast<size_t>(y)]);
      if (p != map[static_cast<size_t>(domain.mul(x, y))]) return false;
      if (p != codomain.meet(map[static_cast<size_t>(x)], map[static_cast<size_t>(y)]))
        return false;
      if (p != map[static_cast<size_t>(domain.meet(x, y))]) return false;
    }
  return true;
}

struct ProductMorphism {
  Hoop domain;
  Hoop codomain;
  std::vector<Elem> map;

  Elem operator()(Elem x) const { return map[static_cast<size_t>(x)]; }
};

inline ProductMorphism make_product_morphism(Hoop domain, Hoop codomain,
                                             std::vector<Elem> map) {
  if (!is_product_morphism(domain, codomain, map))
    throw argument_error("map is not a product morphism");
  return ProductMorphism{std::move(domain), std::move(codomain), std::move(map)};
}

// Constant-unit morphism; the f-product over it is the direct product.
inline std::vector<Elem> epsilon_map(const Hoop& domain, const Hoop& codomain) {
  return std::vector<Elem>(static_cast<size_t>(domain.size()), codomain.unit());
}

// Unit to unit, everything else to the codomain bottom; the f-product
// over it is the ordinal sum with the codomain on top.
inline std::vector<Elem> sigma_map(const Hoop& domain, const Hoop& codomain) {
  std::vector<Elem> m(static_cast<size_t>(domain.size()), codomain.bottom());
  m[static_cast<size_t>(domain.unit())] = codomain.unit();
  return m;
}

inline ProductMorphism epsilon_morphism(const Hoop& domain, const Hoop& codomain) {
  return make_product_morphism(domain, codomain, epsilon_map(domain, codomain));
}

inline ProductMorphism sigma_morphism(const Hoop& domain, const Hoop& codomain) {
  return make_product_morphism(domain, codomain, sigma_map(domain, codomain));
}

// Elements with exactly one upper cover. Every element is the meet of
// the meet-irreducibles above it (the unit as the empty meet), so a
// product morphism is determined by its values there.
inline std::vector<Elem> meet_irreducibles(const Hoop& h) {
  std::vector<Elem> out;
  for (Elem x = 0; x < h.size(); ++x) {
    int covers = 0;
    for (const auto& e : h.order().hasse_edges)
      if (e.first == x) ++covers;
    if (covers == 1) out.push_back(x);
  }
  return out;
}

// All product morphism maps domain -> codomain, lexicographically sorted.
// Search assigns idempotent codomain values to the meet-irreducibles of
// the domain, forces the rest by meets, and keeps what verifies.
inline std::vector<std::vector<Elem>> all_product_morphism_maps(const Hoop& domain,
                                                                const Hoop& codomain) {
  const std::vector<Elem> mi = meet_irreducibles(domain);
  const std::vector<Elem> idem = idempotents(codomain);
  std::vector<std::vector<Elem>> out;
  std::vector<Elem> choice(mi.size(), 0);

  std::vector<std::vector<Elem>> mi_above(static_cast<size_t>(domain.size()));
  for (Elem x = 0; x < domain.size(); ++x)
    for (size_t k = 0; k < mi.size(); ++k)
      if (domain.leq(x, mi[k])) mi_above[static_cast<size_t>(x)].push_back(static_cast<Elem>(k));

  struct Rec {
    const Hoop& domain;
    const Hoop& codomain;
    const std::vector<Elem>& mi;
    const std::vector<Elem>& idem;
    const std::vector<std::vector<Elem>>& mi_above;
    std::vector<Elem>& choice;
    std::vector<std::vector<Elem>>& out;

    void go(size_t k) {
      if (k == mi.size()) {
        std::vector<Elem> map(static_cast<size_t>(domain.size()));
        for (Elem x = 0; x < domain.size(); ++x) {
          Elem v = codomain.unit();
          for (Elem idx : mi_above[static_cast<size_t>(x)])
            v = codomain.meet(v, idem[static_cast<size_t>(choice[static_cast<size_t>(idx)])]);
          map[static_cast<size_t>(x)] = v;
        }
        if (is_product_morphism(domain, codomain, map)) out.push_back(std::move(map));
        return;
      }
      for (size_t c = 0; c < idem.size(); ++c) {
        choice[k] = static_cast<Elem>(c);
        // partial monotonicity: comparable meet-irreducibles need
        // comparable images
        bool ok = true;
        for (size_t j = 0; j < k && ok; ++j) {
          Elem a = mi[j], b = mi[k];
          Elem va = idem[static_cast<size_t>(choice[j])], vb = idem[c];
          if (domain.leq(a, b) && !codomain.leq(va, vb)) ok = false;
          if (domain.leq(b, a) && !codomain.leq(vb, va)) ok = false;
        }
        if (ok) go(k + 1);
      }
    }
  } rec{domain, codomain, mi, idem, mi_above, choice, out};
  rec.go(0);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

inline std::vector<ProductMorphism> all_product_morphisms(const Hoop& domain,
                                                          const Hoop& codomain) {
  std::vector<ProductMorphism> out;
  for (auto& m : all_product_morphism_maps(domain, codomain))
    out.push_back(ProductMorphism{domain, codomain, std::move(m)});
  return out;
}

// Plain homomorphism: preserves *, -> and the unit.
inline bool is_homomorphism(const Hoop& domain, const Hoop& codomain,
                            std::span<const Elem> map) {
  if (static_cast<int>(map.size()) != domain.size()) return false;
  for (Elem v : map)
    if (v < 0 || v >= codomain.size()) return false;
  if (map[static_cast<size_t>(domain.unit())] != codomain.unit()) return false;
  for (Elem x = 0; x < domain.size(); ++x)
    for (Elem y = 0; y < domain.size(); ++y) {
      if (codomain.mul(map[static_cast<size_t>(x)], map[static_cast<size_t>(y)]) !=
          map[static_cast<size_t>(domain.mul(x, y))])
        return false;
      if (codomain.imp(map[static_cast<size_t>(x)], map[static_cast<size_t>(y)]) !=
          map[static_cast<size_t>(domain.imp(x, y))])
        return false;
    }
  return true;
}

// Backtracking over element images in index order with partial table
// checks; intended for the small orders the census runs at.
inline std::vector<std::vector<Elem>> all_homomorphism_maps(const Hoop& domain,
                                                            const Hoop& codomain) {
  const int n = domain.size();
  std::vector<std::vector<Elem>> out;
  std::vector<Elem> map(static_cast<size_t>(n), -1);

  struct Rec {
    const Hoop& a;
    const Hoop& b;
    std::vector<Elem>& map;
    std::vector<std::vector<Elem>>& out;

    bool partial_ok(Elem x) const {
      for (Elem i = 0; i <= x; ++i)
        for (Elem j = 0; j <= x; ++j) {
          Elem m = a.mul(i, j);
          if (m <= x && b.mul(map[static_cast<size_t>(i)], map[static_cast<size_t>(j)]) !=
                            map[static_cast<size_t>(m)])
            return false;
          Elem r = a.imp(i, j);
          if (r <= x && b.imp(map[static_cast<size_t>(i)], map[static_cast<size_t>(j)]) !=
                            map[static_cast<size_t>(r)])
            return false;
        }
      return true;
    }

    void go(Elem x) {
      if (x == a.size()) {
        out.push_back(map);
        return;
      }
      for (Elem y = 0; y < b.size(); ++y) {
        // only the unit is pinned; other elements may land on the unit
        // too (the constant-unit map is a homomorphism)
        if (x == a.unit() && y != b.unit()) continue;
        map[static_cast<size_t>(x)] = y;
        if (partial_ok(x)) go(x + 1);
      }
      map[static_cast<size_t>(x)] = -1;
    }
  } rec{domain, codomain, map, out};
  rec.go(0);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace hoops
