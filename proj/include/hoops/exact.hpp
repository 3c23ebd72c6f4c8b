#pragma once

// Homomorphisms, kernels as filters, filter homomorphisms, the bullet
// product A .f B = (Ker f) x_gamma (B / f(A)), exact sequences, and the
// three-way composition of two exact steps.

#include "hoops/decomposition.hpp"

namespace hoops {

// Preimage of the unit. This is a filter for every homomorphism, not
// just filter homomorphisms; make_filter failing would be a bug.
inline Filter kernel(const Hoop& domain, const Hoop& codomain, std::span<const Elem> map) {
  if (!is_homomorphism(domain, codomain, map))
    throw argument_error("kernel: map is not a homomorphism");
  std::vector<Elem> pre;
  for (Elem x = 0; x < domain.size(); ++x)
    if (map[static_cast<size_t>(x)] == codomain.unit()) pre.push_back(x);
  try {
    return make_filter(domain, std::move(pre));
  } catch (const argument_error& e) {
    throw internal_error(std::string("kernel is not a filter: ") + e.what());
  }
}

inline std::vector<Elem> image_elements(std::span<const Elem> map) {
  std::vector<Elem> img(map.begin(), map.end());
  std::sort(img.begin(), img.end());
  img.erase(std::unique(img.begin(), img.end()), img.end());
  return img;
}

// The image of a homomorphism is closed under both operations.
inline SubHoop image_subalgebra(const Hoop& domain, const Hoop& codomain,
                                std::span<const Elem> map) {
  if (!is_homomorphism(domain, codomain, map))
    throw argument_error("image_subalgebra: map is not a homomorphism");
  try {
    return subalgebra(codomain, image_elements(map));
  } catch (const argument_error& e) {
    throw internal_error(std::string("image is not a subalgebra: ") + e.what());
  }
}

inline bool is_filter_homomorphism(const Hoop& domain, const Hoop& codomain,
                                   std::span<const Elem> map) {
  return is_homomorphism(domain, codomain, map) &&
         is_filter(codomain, image_elements(map));
}

// theta over the kernel coincides with "same image" for any
// homomorphism. This is what makes the first-isomorphism map
// well defined, and it is checked here rather than assumed.
inline bool kernel_congruence_is_image_fibration(const Hoop& domain, const Hoop& codomain,
                                                 std::span<const Elem> map) {
  Filter ker = kernel(domain, codomain, map);
  for (Elem x = 0; x < domain.size(); ++x)
    for (Elem y = 0; y < domain.size(); ++y)
      if (congruent_mod(domain, ker, x, y) !=
          (map[static_cast<size_t>(x)] == map[static_cast<size_t>(y)]))
        return false;
  return true;
}

// A / Ker f -> f(A), class |-> image of any member. Checked to be a
// well-defined isomorphism onto the image subalgebra.
struct FirstIso {
  QuotientHoop domain_quotient;  // A / Ker f
  SubHoop image_part;            // f(A) inside B
  std::vector<Elem> map;         // quotient class -> image_part element
  std::vector<Elem> inverse;     // image_part element -> quotient class
};

inline FirstIso first_isomorphism(const Hoop& domain, const Hoop& codomain,
                                  std::span<const Elem> map) {
  if (!kernel_congruence_is_image_fibration(domain, codomain, map))
    throw internal_error("kernel congruence does not match the image fibration");
  FirstIso out;
  Filter ker = kernel(domain, codomain, map);
  out.domain_quotient = quotient(domain, ker);
  out.image_part = image_subalgebra(domain, codomain, map);
  const int q = out.domain_quotient.algebra.size();
  out.map.resize(static_cast<size_t>(q));
  for (Elem X = 0; X < q; ++X) {
    Elem rep = out.domain_quotient.classes[static_cast<size_t>(X)].front();
    for (Elem m : out.domain_quotient.classes[static_cast<size_t>(X)])
      if (map[static_cast<size_t>(m)] != map[static_cast<size_t>(rep)])
        throw internal_error("first isomorphism: class with two images");
    Elem v = out.image_part.from_parent[static_cast<size_t>(map[static_cast<size_t>(rep)])];
    if (v < 0) throw internal_error("first isomorphism: image element missing");
    out.map[static_cast<size_t>(X)] = v;
  }
  if (q != out.image_part.algebra.size())
    throw internal_error("first isomorphism: sizes differ");
  std::vector<char> hit(static_cast<size_t>(q), 0);
  for (Elem v : out.map) {
    if (hit[static_cast<size_t>(v)]) throw internal_error("first isomorphism: not injective");
    hit[static_cast<size_t>(v)] = 1;
  }
  const Hoop& Q = out.domain_quotient.algebra;
  const Hoop& I = out.image_part.algebra;
  for (Elem x = 0; x < q; ++x)
    for (Elem y = 0; y < q; ++y) {
      if (out.map[static_cast<size_t>(Q.mul(x, y))] !=
          I.mul(out.map[static_cast<size_t>(x)], out.map[static_cast<size_t>(y)]))
        throw internal_error("first isomorphism does not preserve multiplication");
      if (out.map[static_cast<size_t>(Q.imp(x, y))] !=
          I.imp(out.map[static_cast<size_t>(x)], out.map[static_cast<size_t>(y)]))
        throw internal_error("first isomorphism does not preserve implication");
    }
  out.inverse = inverse_permutation(out.map);
  return out;
}

// A .f B for a filter homomorphism f : A -> B. The glue
// gamma = psi o eta^-1 o phi runs B/f(A) -> f(A) -> A/Ker f -> Ker f.
struct BulletProduct {
  Filter kernel_filter;          // Ker f in A
  SubHoop kernel_part;           // Ker f as a hoop
  Filter image_filter;           // f(A) in B
  QuotientHoop cokernel_part;    // B / f(A)
  std::vector<Elem> glue;        // cokernel class -> kernel_part element
  PairedHoop product;            // the bullet product itself
};

inline BulletProduct bullet_product(const Hoop& A, const Hoop& B, std::span<const Elem> f) {
  if (!is_homomorphism(A, B, f))
    throw argument_error("bullet_product: map is not a homomorphism");
  if (!is_filter_homomorphism(A, B, f))
    throw argument_error("bullet_product: image is not a filter");

  BulletProduct out;
  out.kernel_filter = kernel(A, B, f);
  out.kernel_part = filter_subalgebra(A, out.kernel_filter);
  out.image_filter = make_filter(B, image_elements(f));

  FilterSplit splitA = split_by_filter(A, out.kernel_filter);
  FilterSplit splitB = split_by_filter(B, out.image_filter);
  FirstIso eta = first_isomorphism(A, B, f);

  // splitA and eta were built from the same quotient construction, so
  // class numberings agree; guard anyway.
  if (splitA.quotient_part.algebra.size() != eta.domain_quotient.algebra.size())
    throw internal_error("bullet: quotient size mismatch");

  out.cokernel_part = splitB.quotient_part;
  const int q = out.cokernel_part.algebra.size();
  out.glue.resize(static_cast<size_t>(q));
  for (Elem Z = 0; Z < q; ++Z) {
    Elem img = splitB.psi[static_cast<size_t>(Z)];      // element of f(A) as image_part index
    Elem cls = eta.inverse[static_cast<size_t>(img)];   // class of A / Ker f
    Elem ker = splitA.psi[static_cast<size_t>(cls)];    // element of Ker f
    out.glue[static_cast<size_t>(Z)] = ker;
  }
  if (!is_product_morphism(out.cokernel_part.algebra, out.kernel_part.algebra, out.glue))
    throw internal_error("bullet: glue is not a product morphism");
  out.product = f_product(out.kernel_part.algebra, out.cokernel_part.algebra, out.glue);
  return out;
}

// The immediate consequences of the definition:
//   i-left-unit     1 .i A = A          (i : 1 -> A)
//   ii-right-unit   A .j 1 = A          (j : A -> 1)
//   iii-inclusion   F .inc A = A/F      for every filter F
//   iv-projection   A .proj A/F = F     for every filter F
//   v-iso-collapse  over all filter endomorphisms h of A:
//                   h bijective iff A .h A is trivial
// Isomorphism is meant up to hoop_isomorphism.
inline ValidationReport check_bullet_properties(const Hoop& A) {
  ValidationReport rep;
  auto record = [&rep](const char* name, std::vector<Elem> w) {
    rep.violations.push_back({name, std::move(w)});
  };
  Hoop one = mv_chain(1);

  {
    std::vector<Elem> i{A.unit()};
    BulletProduct b = bullet_product(one, A, i);
    if (!hoop_isomorphism(b.product.algebra, A)) record("i-left-unit", {});
  }
  {
    std::vector<Elem> j(static_cast<size_t>(A.size()), 0);
    BulletProduct b = bullet_product(A, one, j);
    if (!hoop_isomorphism(b.product.algebra, A)) record("ii-right-unit", {});
  }
  {
    auto filters = all_filters(A);
    for (size_t fi = 0; fi < filters.size(); ++fi) {
      const Filter& F = filters[fi];
      SubHoop part = filter_subalgebra(A, F);
      BulletProduct inc = bullet_product(part.algebra, A, part.to_parent);
      QuotientHoop q = quotient(A, F);
      if (!hoop_isomorphism(inc.product.algebra, q.algebra))
        record("iii-inclusion", {static_cast<Elem>(fi)});
      BulletProduct proj = bullet_product(A, q.algebra, q.class_of);
      if (!hoop_isomorphism(proj.product.algebra, part.algebra))
        record("iv-projection", {static_cast<Elem>(fi)});
    }
  }
  {
    for (const auto& h : all_homomorphism_maps(A, A)) {
      if (!is_filter_homomorphism(A, A, h)) continue;
      BulletProduct b = bullet_product(A, A, h);
      bool bijective = image_elements(h).size() == static_cast<size_t>(A.size());
      bool trivial = b.product.algebra.size() == 1;
      if (bijective != trivial) {
        record("v-iso-collapse", {h.empty() ? -1 : h[0]});
        break;
      }
    }
  }
  return rep;
}

// A chain of homomorphisms; exact when each image equals the next
// kernel, as subsets of the middle hoop.
struct HoopSequence {
  std::vector<Hoop> hoops;                // k+1 hoops
  std::vector<std::vector<Elem>> maps;    // k maps, maps[i] : hoops[i] -> hoops[i+1]
};

inline void check_sequence_shape(const HoopSequence& s) {
  if (s.hoops.size() < 2 || s.maps.size() + 1 != s.hoops.size())
    throw argument_error("sequence: need k+1 hoops and k maps");
  for (size_t i = 0; i < s.maps.size(); ++i)
    if (!is_homomorphism(s.hoops[i], s.hoops[i + 1], s.maps[i]))
      throw argument_error("sequence: entry is not a homomorphism");
}

inline bool is_exact(const HoopSequence& s) {
  check_sequence_shape(s);
  for (size_t i = 0; i + 1 < s.maps.size(); ++i) {
    std::vector<Elem> img = image_elements(s.maps[i]);
    Filter ker = kernel(s.hoops[i + 1], s.hoops[i + 2], s.maps[i + 1]);
    if (img != ker.members) return false;
  }
  return true;
}

// Composition of A -f-> B -g-> C, exact at B, with g a filter
// homomorphism. Three equivalent packagings are produced:
//   nested_right = A .f' (B .g C)   f'(a) = (f(a), unit class)
//   nested_left  = (A .f B) .g' C   g'(k, Z) = g(member of Z)
//   direct       = Ker f x_chi (C / g(B))
// with chi threaded through both first isomorphisms. All three are
// verified pairwise isomorphic.
struct TripleComposition {
  Hoop nested_right;
  Hoop nested_left;
  Hoop direct;
  std::vector<Elem> iso_right_to_left;
  std::vector<Elem> iso_left_to_direct;
};

inline TripleComposition triple_composition(const Hoop& A, const Hoop& B, const Hoop& C,
                                            std::span<const Elem> f, std::span<const Elem> g) {
  if (!is_homomorphism(A, B, f) || !is_homomorphism(B, C, g))
    throw argument_error("triple: maps must be homomorphisms");
  if (!is_filter_homomorphism(B, C, g))
    throw argument_error("triple: g must be a filter homomorphism");
  {
    std::vector<Elem> img = image_elements(f);
    Filter kg = kernel(B, C, g);
    if (img != kg.members) throw argument_error("triple: sequence is not exact at the middle");
  }
  // exactness makes f a filter homomorphism automatically
  if (!is_filter_homomorphism(A, B, f))
    throw internal_error("triple: image of f is not a filter despite exactness");

  TripleComposition out;

  BulletProduct bc = bullet_product(B, C, g);
  // f' : A -> B .g C
  std::vector<Elem> fprime(static_cast<size_t>(A.size()));
  {
    Elem unit_cls = bc.cokernel_part.class_of[static_cast<size_t>(C.unit())];
    for (Elem a = 0; a < A.size(); ++a) {
      Elem k = bc.kernel_part.from_parent[static_cast<size_t>(f[static_cast<size_t>(a)])];
      if (k < 0) throw internal_error("triple: f(a) escaped Ker g");
      Elem idx = bc.product.index_of(k, unit_cls);
      if (idx < 0) throw internal_error("triple: (f(a), unit) not in the bullet carrier");
      fprime[static_cast<size_t>(a)] = idx;
    }
  }
  if (!is_homomorphism(A, bc.product.algebra, fprime))
    throw internal_error("triple: f' is not a homomorphism");
  if (!is_filter_homomorphism(A, bc.product.algebra, fprime))
    throw internal_error("triple: f' is not a filter homomorphism");
  {
    Filter kf = kernel(A, B, f);
    Filter kfp = kernel(A, bc.product.algebra, fprime);
    if (kf.members != kfp.members) throw internal_error("triple: Ker f' differs from Ker f");
  }
  BulletProduct right = bullet_product(A, bc.product.algebra, fprime);
  out.nested_right = right.product.algebra;

  BulletProduct ab = bullet_product(A, B, f);
  // g' : A .f B -> C through the second components
  std::vector<Elem> gprime(static_cast<size_t>(ab.product.algebra.size()));
  for (size_t i = 0; i < ab.product.pair_of.size(); ++i) {
    Elem Z = ab.product.pair_of[i].second;
    Elem rep = ab.cokernel_part.classes[static_cast<size_t>(Z)].front();
    gprime[i] = g[static_cast<size_t>(rep)];
    for (Elem m : ab.cokernel_part.classes[static_cast<size_t>(Z)])
      if (g[static_cast<size_t>(m)] != gprime[i])
        throw internal_error("triple: g' is not class-invariant");
  }
  if (!is_homomorphism(ab.product.algebra, C, gprime))
    throw internal_error("triple: g' is not a homomorphism");
  if (image_elements(gprime) != image_elements(g))
    throw internal_error("triple: g' changed the image");
  BulletProduct left = bullet_product(ab.product.algebra, C, gprime);
  out.nested_left = left.product.algebra;

  // direct form: chi = psiA o etaF^-1 o psiB o etaG^-1 o psiC
  {
    Filter kf = kernel(A, B, f);
    FilterSplit sA = split_by_filter(A, kf);
    FilterSplit sB = split_by_filter(B, make_filter(B, image_elements(f)));
    FilterSplit sC = split_by_filter(C, make_filter(C, image_elements(g)));
    FirstIso etaF = first_isomorphism(A, B, f);
    FirstIso etaG = first_isomorphism(B, C, g);
    const int q = sC.quotient_part.algebra.size();
    std::vector<Elem> chi(static_cast<size_t>(q));
    for (Elem W = 0; W < q; ++W) {
      Elem gb = sC.psi[static_cast<size_t>(W)];          // element of g(B)
      Elem clsB = etaG.inverse[static_cast<size_t>(gb)]; // class of B / Ker g
      Elem fb = sB.psi[static_cast<size_t>(clsB)];       // element of f(A)
      Elem clsA = etaF.inverse[static_cast<size_t>(fb)]; // class of A / Ker f
      chi[static_cast<size_t>(W)] = sA.psi[static_cast<size_t>(clsA)];
    }
    if (!is_product_morphism(sC.quotient_part.algebra, sA.filter_part.algebra, chi))
      throw internal_error("triple: chi is not a product morphism");
    out.direct = f_product(sA.filter_part.algebra, sC.quotient_part.algebra, chi).algebra;
  }

  auto iso1 = hoop_isomorphism(out.nested_right, out.nested_left);
  if (!iso1) throw internal_error("triple: the two nestings are not isomorphic");
  auto iso2 = hoop_isomorphism(out.nested_left, out.direct);
  if (!iso2) throw internal_error("triple: nesting differs from the direct form");
  out.iso_right_to_left = std::move(*iso1);
  out.iso_left_to_direct = std::move(*iso2);
  return out;
}

}  // namespace hoops
