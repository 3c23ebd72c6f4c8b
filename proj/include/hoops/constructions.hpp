#pragma once

// Ways of building hoops from hoops: the f-product over a product
// morphism, its two degenerate cases (direct product, ordinal sum), and
// nucleus images.

#include "hoops/filters.hpp"
#include "hoops/morphisms.hpp"

namespace hoops {

// A hoop whose elements are pairs (a, x): a from the first factor, x
// from the second. Carrier is sorted by (x, a), so pairs sharing the
// second component are consecutive.
struct PairedHoop {
  Hoop algebra;
  std::vector<std::pair<Elem, Elem>> pair_of;  // index -> (a, x)
  int first_size = 0;
  int second_size = 0;
  std::vector<Elem> index_table;  // a * second_size + x -> index or -1

  Elem index_of(Elem a, Elem x) const {
    return index_table[static_cast<size_t>(a) * second_size + x];
  }
};

// First factor A, second factor B, f : B -> A a product morphism.
// Carrier {(a,x) : a <= f(x)}, componentwise product, arrow
//   (a,x) -> (b,y)  =  (f(x->y) ^ (a->b), x->y).
// The result always validates; a validation failure here is a bug.
inline PairedHoop f_product(const Hoop& A, const Hoop& B, std::span<const Elem> f) {
  if (!is_product_morphism(B, A, f))
    throw argument_error("f_product: map is not a product morphism");

  PairedHoop out;
  out.first_size = A.size();
  out.second_size = B.size();
  out.index_table.assign(static_cast<size_t>(A.size()) * B.size(), -1);
  for (Elem x = 0; x < B.size(); ++x)
    for (Elem a = 0; a < A.size(); ++a)
      if (A.leq(a, f[static_cast<size_t>(x)])) {
        out.index_table[static_cast<size_t>(a) * B.size() + x] =
            static_cast<Elem>(out.pair_of.size());
        out.pair_of.emplace_back(a, x);
      }

  const int n = static_cast<int>(out.pair_of.size());
  HoopData d;
  d.size = n;
  d.unit = out.index_of(A.unit(), B.unit());
  d.mul.resize(static_cast<size_t>(n) * n);
  d.imp.resize(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      auto [a, x] = out.pair_of[static_cast<size_t>(i)];
      auto [b, y] = out.pair_of[static_cast<size_t>(j)];
      Elem pm = out.index_of(A.mul(a, b), B.mul(x, y));
      Elem xy = B.imp(x, y);
      Elem pr = out.index_of(A.meet(A.imp(a, b), f[static_cast<size_t>(xy)]), xy);
      if (pm < 0 || pr < 0) throw internal_error("f_product: operation left the carrier");
      d.mul_at(i, j) = pm;
      d.imp_at(i, j) = pr;
    }
  d.labels.reserve(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    auto [a, x] = out.pair_of[static_cast<size_t>(i)];
    d.labels.push_back("(" + A.label(a) + "," + B.label(x) + ")");
  }
  try {
    out.algebra = Hoop(std::move(d));
  } catch (const invalid_hoop& e) {
    throw internal_error(std::string("f_product produced a non-hoop: ") + e.what());
  }
  return out;
}

inline PairedHoop f_product(const Hoop& A, const Hoop& B, const ProductMorphism& f) {
  if (!f.domain.same_tables(B) || !f.codomain.same_tables(A))
    throw argument_error("f_product: morphism endpoints do not match the factors");
  return f_product(A, B, f.map);
}

// A x B with the same (x, a)-major carrier ordering, so it coincides
// table-for-table with the f-product over the constant-unit morphism.
inline PairedHoop direct_product(const Hoop& A, const Hoop& B) {
  return f_product(A, B, epsilon_map(B, A));
}

// B stacked on top of A: carrier is A minus its unit, then B, with the
// sum's unit taken from B. An A-implication that would give A's unit
// gives the sum's top instead.
inline Hoop ordinal_sum(const Hoop& A, const Hoop& B) {
  const int na = A.size(), nb = B.size();
  std::vector<Elem> a_pos(static_cast<size_t>(na), -1);
  std::vector<Elem> lower;  // sum index -> A element, for the lower part
  for (Elem a = 0; a < na; ++a)
    if (a != A.unit()) {
      a_pos[static_cast<size_t>(a)] = static_cast<Elem>(lower.size());
      lower.push_back(a);
    }
  const int base = na - 1;
  const int n = base + nb;
  const Elem top = static_cast<Elem>(base + B.unit());

  auto from_a = [&](Elem a) -> Elem {
    return a == A.unit() ? top : a_pos[static_cast<size_t>(a)];
  };
  auto from_b = [&](Elem b) -> Elem { return static_cast<Elem>(base + b); };

  HoopData d;
  d.size = n;
  d.unit = top;
  d.mul.resize(static_cast<size_t>(n) * n);
  d.imp.resize(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const bool i_low = i < base, j_low = j < base;
      Elem m, r;
      if (i_low && j_low) {
        Elem x = lower[static_cast<size_t>(i)], y = lower[static_cast<size_t>(j)];
        m = from_a(A.mul(x, y));
        r = from_a(A.imp(x, y));
      } else if (!i_low && !j_low) {
        Elem x = static_cast<Elem>(i - base), y = static_cast<Elem>(j - base);
        m = from_b(B.mul(x, y));
        r = from_b(B.imp(x, y));
      } else if (i_low) {  // low * high
        m = static_cast<Elem>(i);
        r = d.unit;  // x <= y, so the arrow is the top
      } else {  // high * low
        m = static_cast<Elem>(j);
        r = static_cast<Elem>(j);
      }
      d.mul_at(i, j) = m;
      d.imp_at(i, j) = r;
    }
  d.labels.reserve(static_cast<size_t>(n));
  for (int i = 0; i < base; ++i) d.labels.push_back(A.label(lower[static_cast<size_t>(i)]));
  for (int b = 0; b < nb; ++b) d.labels.push_back(B.label(static_cast<Elem>(b)));
  return Hoop(std::move(d));
}

// Inflationary monotone idempotent map with g(a)*g(b) <= g(a*b).
inline bool is_nucleus(const Hoop& h, std::span<const Elem> map) {
  const int n = h.size();
  if (static_cast<int>(map.size()) != n) return false;
  for (Elem v : map)
    if (v < 0 || v >= n) return false;
  for (Elem a = 0; a < n; ++a) {
    if (!h.leq(a, map[static_cast<size_t>(a)])) return false;
    if (map[static_cast<size_t>(map[static_cast<size_t>(a)])] != map[static_cast<size_t>(a)])
      return false;
    for (Elem b = 0; b < n; ++b) {
      if (h.leq(a, b) && !h.leq(map[static_cast<size_t>(a)], map[static_cast<size_t>(b)]))
        return false;
      if (!h.leq(h.mul(map[static_cast<size_t>(a)], map[static_cast<size_t>(b)]),
                 map[static_cast<size_t>(h.mul(a, b))]))
        return false;
    }
  }
  return true;
}

struct NucleusImage {
  Hoop algebra;
  std::vector<Elem> carrier;       // image element -> parent element (the fixed points)
  std::vector<Elem> from_parent;   // parent element -> image element or -1
};

// Fixed points with a*b redefined as g(a*b); the arrow restricts as-is
// because fixed points are closed under -> from the right.
inline NucleusImage nucleus_image(const Hoop& h, std::span<const Elem> gamma) {
  if (!is_nucleus(h, gamma)) throw argument_error("nucleus_image: map is not a nucleus");
  std::vector<Elem> fixed;
  std::vector<Elem> from(static_cast<size_t>(h.size()), -1);
  for (Elem a = 0; a < h.size(); ++a)
    if (gamma[static_cast<size_t>(a)] == a) {
      from[static_cast<size_t>(a)] = static_cast<Elem>(fixed.size());
      fixed.push_back(a);
    }
  const int n = static_cast<int>(fixed.size());
  HoopData d;
  d.size = n;
  if (from[static_cast<size_t>(h.unit())] < 0)
    throw internal_error("nucleus image does not contain the unit");
  d.unit = from[static_cast<size_t>(h.unit())];
  d.mul.resize(static_cast<size_t>(n) * n);
  d.imp.resize(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Elem p = gamma[static_cast<size_t>(h.mul(fixed[static_cast<size_t>(i)],
                                               fixed[static_cast<size_t>(j)]))];
      Elem r = h.imp(fixed[static_cast<size_t>(i)], fixed[static_cast<size_t>(j)]);
      if (from[static_cast<size_t>(p)] < 0 || from[static_cast<size_t>(r)] < 0)
        throw internal_error("nucleus image is not closed");
      d.mul_at(i, j) = from[static_cast<size_t>(p)];
      d.imp_at(i, j) = from[static_cast<size_t>(r)];
    }
  if (!h.data().labels.empty())
    for (Elem a : fixed) d.labels.push_back(h.label(a));
  try {
    return NucleusImage{Hoop(std::move(d)), std::move(fixed), std::move(from)};
  } catch (const invalid_hoop& e) {
    throw internal_error(std::string("nucleus image is not a hoop: ") + e.what());
  }
}

// The map a |-> t -> (t * a) on the filter subalgebra, where t is the
// top of a congruence class of theta_F. Left multiplication by t then
// takes its fixed points bijectively onto the class.
inline std::vector<Elem> class_nucleus(const Hoop& h, const SubHoop& filter_part,
                                       Elem class_top) {
  const int n = filter_part.algebra.size();
  std::vector<Elem> g(static_cast<size_t>(n));
  for (Elem i = 0; i < n; ++i) {
    Elem p = filter_part.to_parent[static_cast<size_t>(i)];
    Elem v = h.imp(class_top, h.mul(class_top, p));
    Elem s = filter_part.from_parent[static_cast<size_t>(v)];
    if (s < 0) throw internal_error("class nucleus left the filter");
    g[static_cast<size_t>(i)] = s;
  }
  return g;
}

}  // namespace hoops
