#pragma once

// Splitting a finite hoop along a filter into (filter) x_psi (quotient),
// iterating that split down to MV-chains, and packaging the result as a
// replayable certificate. Also the census of product morphisms between
// a hoop and an MV-chain, which is what the glue maps range over.

#include <memory>

#include "hoops/associativity.hpp"

namespace hoops {

// The n-element MV-chain: truncated addition on 0..n-1 read upside
// down, with ascending index equal to ascending order and unit n-1.
inline Hoop mv_chain(int n) {
  if (n < 1) throw argument_error("mv_chain: order must be positive");
  HoopData d;
  d.size = n;
  d.unit = n - 1;
  d.mul.resize(static_cast<size_t>(n) * n);
  d.imp.resize(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      d.mul_at(i, j) = std::max(0, i + j - (n - 1));
      d.imp_at(i, j) = std::min(n - 1, n - 1 - i + j);
    }
  return Hoop(std::move(d));
}

// Rank map onto mv_chain(n) if the hoop is one, else nullopt.
inline std::optional<std::vector<Elem>> mv_chain_rank(const Hoop& h) {
  const int n = h.size();
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      if (!h.leq(x, y) && !h.leq(y, x)) return std::nullopt;
  std::vector<Elem> rank(static_cast<size_t>(n));
  for (Elem x = 0; x < n; ++x) {
    int below = 0;
    for (Elem y = 0; y < n; ++y)
      if (y != x && h.leq(y, x)) ++below;
    rank[static_cast<size_t>(x)] = below;
  }
  Hoop chain = mv_chain(n);
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) {
      if (rank[static_cast<size_t>(h.mul(x, y))] !=
          chain.mul(rank[static_cast<size_t>(x)], rank[static_cast<size_t>(y)]))
        return std::nullopt;
      if (rank[static_cast<size_t>(h.imp(x, y))] !=
          chain.imp(rank[static_cast<size_t>(x)], rank[static_cast<size_t>(y)]))
        return std::nullopt;
    }
  return rank;
}

// Order of the MV-chain the hoop is isomorphic to, if any. For sizes
// at least two this must agree with simplicity; the cross-check guards
// the equivalence at runtime.
inline std::optional<int> is_mv_chain(const Hoop& h) {
  auto r = mv_chain_rank(h);
  if (h.size() >= 2 && r.has_value() != is_simple(h))
    throw internal_error("MV-chain test disagrees with simplicity");
  if (r) return h.size();
  return std::nullopt;
}

// Irreducible under the f-product (both factors trivial in any
// factorization) coincides with simplicity; the one-element hoop is
// excluded on both sides by convention.
inline bool is_irreducible(const Hoop& h) { return is_simple(h); }

// Longest chain in the poset of idempotents.
inline int idempotent_chain_length(const Hoop& h) {
  std::vector<Elem> ids = idempotents(h);
  std::sort(ids.begin(), ids.end(), [&h](Elem a, Elem b) {
    int da = 0, db = 0;
    for (Elem y = 0; y < h.size(); ++y) {
      if (h.leq(y, a)) ++da;
      if (h.leq(y, b)) ++db;
    }
    if (da != db) return da < db;
    return a < b;
  });
  std::vector<int> len(ids.size(), 1);
  int best = ids.empty() ? 0 : 1;
  for (size_t i = 0; i < ids.size(); ++i)
    for (size_t j = 0; j < i; ++j)
      if (ids[j] != ids[i] && h.leq(ids[j], ids[i])) {
        len[i] = std::max(len[i], len[j] + 1);
        best = std::max(best, len[i]);
      }
  return best;
}

// One split: A regarded as (filter) x_psi (A / filter), with
// psi(X) = top(X) v bottom(F) and the pairing a |-> (a v l, a/F).
// Everything the theorem promises is verified; failures are internal.
struct FilterSplit {
  Filter filter;
  SubHoop filter_part;
  QuotientHoop quotient_part;
  std::vector<Elem> psi;        // quotient class -> filter_part element
  PairedHoop product;           // filter_part x_psi quotient_part
  std::vector<Elem> omega;      // parent element -> product index
  std::vector<Elem> omega_inv;  // product index -> parent element
};

inline FilterSplit split_by_filter(const Hoop& A, const Filter& F) {
  FilterSplit sp;
  sp.filter = F;
  sp.filter_part = filter_subalgebra(A, F);
  sp.quotient_part = quotient(A, F);
  const Elem l = F.least;
  const int q = sp.quotient_part.algebra.size();

  sp.psi.resize(static_cast<size_t>(q));
  for (Elem X = 0; X < q; ++X) {
    Elem v = A.join(sp.quotient_part.class_top[static_cast<size_t>(X)], l);
    Elem s = v < 0 ? -1 : sp.filter_part.from_parent[static_cast<size_t>(v)];
    if (s < 0) throw internal_error("split: psi left the filter");
    sp.psi[static_cast<size_t>(X)] = s;
  }
  if (!is_product_morphism(sp.quotient_part.algebra, sp.filter_part.algebra, sp.psi))
    throw internal_error("split: psi is not a product morphism");

  sp.product = f_product(sp.filter_part.algebra, sp.quotient_part.algebra, sp.psi);

  sp.omega.resize(static_cast<size_t>(A.size()));
  for (Elem a = 0; a < A.size(); ++a) {
    Elem v = A.join(a, l);
    Elem s = v < 0 ? -1 : sp.filter_part.from_parent[static_cast<size_t>(v)];
    Elem idx = s < 0 ? -1 : sp.product.index_of(s, sp.quotient_part.class_of[static_cast<size_t>(a)]);
    if (idx < 0) throw internal_error("split: pairing left the carrier");
    sp.omega[static_cast<size_t>(a)] = idx;
  }
  sp.omega_inv.resize(sp.product.pair_of.size());
  for (size_t i = 0; i < sp.product.pair_of.size(); ++i) {
    auto [s, X] = sp.product.pair_of[i];
    sp.omega_inv[i] = A.meet(sp.filter_part.to_parent[static_cast<size_t>(s)],
                             sp.quotient_part.class_top[static_cast<size_t>(X)]);
  }

  for (Elem a = 0; a < A.size(); ++a)
    if (sp.omega_inv[static_cast<size_t>(sp.omega[static_cast<size_t>(a)])] != a)
      throw internal_error("split: pairing is not injective");
  for (size_t i = 0; i < sp.omega_inv.size(); ++i)
    if (sp.omega[static_cast<size_t>(sp.omega_inv[i])] != static_cast<Elem>(i))
      throw internal_error("split: pairing is not onto");
  const Hoop& P = sp.product.algebra;
  for (Elem a = 0; a < A.size(); ++a)
    for (Elem b = 0; b < A.size(); ++b) {
      if (sp.omega[static_cast<size_t>(A.mul(a, b))] !=
          P.mul(sp.omega[static_cast<size_t>(a)], sp.omega[static_cast<size_t>(b)]))
        throw internal_error("split: pairing does not preserve multiplication");
      if (sp.omega[static_cast<size_t>(A.imp(a, b))] !=
          P.imp(sp.omega[static_cast<size_t>(a)], sp.omega[static_cast<size_t>(b)]))
        throw internal_error("split: pairing does not preserve implication");
    }
  return sp;
}

enum class Association { left, right };
enum class FilterStrategy { smallest, largest, coatom };

// Serializable decomposition tree. A node is a leaf when left < 0; the
// morphism of an internal node maps the right child's evaluation into
// the left child's. Nodes are stored in postorder; root is the last.
struct CertTree {
  struct Node {
    int mv = 0;
    int left = -1;
    int right = -1;
    std::vector<Elem> morphism;
    bool is_leaf() const { return left < 0; }
  };
  std::vector<Node> nodes;
  int root = -1;
};

struct DecompositionCertificate {
  CertTree tree;
  Association association = Association::right;
  std::vector<Elem> iso_to_input;  // evaluated-tree element -> input element
  std::string input_hash;
};

inline int leaf_count(const CertTree& t) {
  int k = 0;
  for (const auto& n : t.nodes)
    if (n.is_leaf() && n.mv >= 2) ++k;
  return k;
}

namespace detail {

inline Hoop evaluate_cert_node(const CertTree& t, int idx) {
  if (idx < 0 || idx >= static_cast<int>(t.nodes.size()))
    throw argument_error("certificate tree: node index out of range");
  const auto& nd = t.nodes[static_cast<size_t>(idx)];
  if (nd.is_leaf()) {
    if (nd.mv < 1) throw argument_error("certificate tree: bad leaf order");
    return mv_chain(nd.mv);
  }
  Hoop left = evaluate_cert_node(t, nd.left);
  Hoop right = evaluate_cert_node(t, nd.right);
  if (!is_product_morphism(right, left, nd.morphism))
    throw argument_error("certificate tree: glue is not a product morphism");
  return f_product(left, right, nd.morphism).algebra;
}

}  // namespace detail

inline Hoop evaluate_certificate_tree(const CertTree& t) {
  if (t.root < 0) throw argument_error("certificate tree: empty");
  return detail::evaluate_cert_node(t, t.root);
}

// Full replay: rebuild the tree bottom-up (glue maps re-checked), check
// the association shape, then check the claimed isomorphism and hash.
inline bool verify_certificate(const Hoop& input, const DecompositionCertificate& cert,
                               std::string* why = nullptr) {
  auto fail = [why](const char* msg) {
    if (why) *why = msg;
    return false;
  };
  Hoop built;
  try {
    built = evaluate_certificate_tree(cert.tree);
  } catch (const std::exception& e) {
    if (why) *why = e.what();
    return false;
  }
  for (const auto& nd : cert.tree.nodes) {
    if (nd.is_leaf()) continue;
    const auto& child = cert.tree.nodes[static_cast<size_t>(
        cert.association == Association::right ? nd.left : nd.right)];
    if (!child.is_leaf()) return fail("tree does not match the association tag");
  }
  if (built.size() != input.size()) return fail("evaluated size differs from input");
  const auto& iso = cert.iso_to_input;
  if (static_cast<int>(iso.size()) != input.size()) return fail("iso has wrong length");
  std::vector<char> hit(iso.size(), 0);
  for (Elem v : iso) {
    if (v < 0 || v >= input.size() || hit[static_cast<size_t>(v)])
      return fail("iso is not a bijection");
    hit[static_cast<size_t>(v)] = 1;
  }
  for (Elem i = 0; i < built.size(); ++i)
    for (Elem j = 0; j < built.size(); ++j) {
      if (iso[static_cast<size_t>(built.mul(i, j))] !=
          input.mul(iso[static_cast<size_t>(i)], iso[static_cast<size_t>(j)]))
        return fail("iso does not preserve multiplication");
      if (iso[static_cast<size_t>(built.imp(i, j))] !=
          input.imp(iso[static_cast<size_t>(i)], iso[static_cast<size_t>(j)]))
        return fail("iso does not preserve implication");
    }
  if (iso[static_cast<size_t>(built.unit())] != input.unit()) return fail("iso moves the unit");
  if (cert.input_hash != table_hash(input.data())) return fail("input hash mismatch");
  if (why) why->clear();
  return true;
}

namespace detail {

struct DecompNode {
  bool leaf = false;
  int mv_order = 0;
  std::unique_ptr<DecompNode> left, right;
  std::vector<Elem> glue;  // right->eval element -> left->eval element
  PairedHoop paired;       // internal nodes only; paired.algebra == eval
  Hoop eval;
};

using NodePtr = std::unique_ptr<DecompNode>;

inline NodePtr make_decomp_leaf(int order) {
  auto n = std::make_unique<DecompNode>();
  n->leaf = true;
  n->mv_order = order;
  n->eval = mv_chain(order);
  return n;
}

inline NodePtr make_decomp_node(NodePtr l, NodePtr r, std::vector<Elem> glue) {
  if (!is_product_morphism(r->eval, l->eval, glue))
    throw internal_error("decomposition: glue is not a product morphism");
  auto n = std::make_unique<DecompNode>();
  n->paired = f_product(l->eval, r->eval, glue);
  n->eval = n->paired.algebra;
  n->left = std::move(l);
  n->right = std::move(r);
  n->glue = std::move(glue);
  return n;
}

inline Filter choose_filter(const Hoop& A, FilterStrategy s) {
  std::vector<Filter> proper;
  for (auto& f : all_filters(A))
    if (f.size() > 1 && static_cast<int>(f.size()) < A.size()) proper.push_back(std::move(f));
  if (proper.empty()) throw internal_error("no proper nontrivial filter to split along");
  switch (s) {
    case FilterStrategy::smallest:
      return proper.front();
    case FilterStrategy::largest:
      return proper.back();
    case FilterStrategy::coatom: {
      // up-set of the least-indexed maximal non-unit idempotent
      std::vector<Elem> ids = idempotents(A);
      Elem pick = -1;
      for (Elem e : ids) {
        if (e == A.unit()) continue;
        bool maximal = true;
        for (Elem e2 : ids)
          if (e2 != e && e2 != A.unit() && A.leq(e, e2)) {
            maximal = false;
            break;
          }
        if (maximal && pick == -1) pick = e;
      }
      if (pick == -1) throw internal_error("no coatom idempotent");
      return principal_filter(A, pick);
    }
  }
  throw argument_error("unknown strategy");
}

// Returns the tree plus an isomorphism eval(tree) -> A.
inline std::pair<NodePtr, std::vector<Elem>> decompose_rec(const Hoop& A, FilterStrategy s) {
  if (auto rank = mv_chain_rank(A)) {
    return {make_decomp_leaf(A.size()), inverse_permutation(*rank)};
  }
  Filter F = choose_filter(A, s);
  FilterSplit sp = split_by_filter(A, F);
  auto [L, isoL] = decompose_rec(sp.filter_part.algebra, s);
  auto [R, isoR] = decompose_rec(sp.quotient_part.algebra, s);
  auto invL = inverse_permutation(isoL);
  std::vector<Elem> glue(static_cast<size_t>(R->eval.size()));
  for (Elem r = 0; r < R->eval.size(); ++r)
    glue[static_cast<size_t>(r)] =
        invL[static_cast<size_t>(sp.psi[static_cast<size_t>(isoR[static_cast<size_t>(r)])])];
  NodePtr n = make_decomp_node(std::move(L), std::move(R), std::move(glue));
  std::vector<Elem> iso(static_cast<size_t>(n->eval.size()));
  for (size_t i = 0; i < n->paired.pair_of.size(); ++i) {
    auto [u, v] = n->paired.pair_of[i];
    Elem p = sp.product.index_of(isoL[static_cast<size_t>(u)], isoR[static_cast<size_t>(v)]);
    if (p < 0) throw internal_error("decomposition: carrier mismatch after recursion");
    iso[i] = sp.omega_inv[static_cast<size_t>(p)];
  }
  return {std::move(n), std::move(iso)};
}

inline std::vector<Elem> compose_maps(std::span<const Elem> first, std::span<const Elem> then) {
  std::vector<Elem> out(first.size());
  for (size_t i = 0; i < first.size(); ++i)
    out[i] = then[static_cast<size_t>(first[i])];
  return out;
}

// ((X x_h Y) x_g R)  ~>  (X x_f' (Y x_g' R)); iso maps new eval to old.
inline std::pair<NodePtr, std::vector<Elem>> rotate_right_at_root(NodePtr n) {
  DecompNode* l = n->left.get();
  LeftAssociatedPair lp{l->left->eval, l->right->eval, n->right->eval,
                        l->glue, l->paired, n->glue};
  RightAssociatedPair rp = to_right_associated(lp);
  ReassociationIso ri = reassociation_iso(rp);
  if (!ri.nested_left.algebra.same_tables(n->eval))
    throw internal_error("rotation: left nesting does not match the node");
  NodePtr inner = make_decomp_node(std::move(l->right), std::move(n->right), rp.g);
  NodePtr root = make_decomp_node(std::move(l->left), std::move(inner), rp.f);
  if (!ri.nested_right.algebra.same_tables(root->eval))
    throw internal_error("rotation: right nesting does not match the rebuilt node");
  return {std::move(root), std::move(ri.map)};
}

// (X x_f (Y x_g R))  ~>  ((X x_f' Y) x_g' R); iso maps new eval to old.
inline std::pair<NodePtr, std::vector<Elem>> rotate_left_at_root(NodePtr n) {
  DecompNode* r = n->right.get();
  RightAssociatedPair rp{n->left->eval, r->left->eval, r->right->eval,
                         r->glue, r->paired, n->glue};
  ReassociationIso ri = reassociation_iso(rp);
  if (!ri.nested_right.algebra.same_tables(n->eval))
    throw internal_error("rotation: right nesting does not match the node");
  LeftAssociatedPair lp = to_left_associated(rp);
  NodePtr inner = make_decomp_node(std::move(n->left), std::move(r->left), lp.f);
  NodePtr root = make_decomp_node(std::move(inner), std::move(r->right), lp.g);
  if (!ri.nested_left.algebra.same_tables(root->eval))
    throw internal_error("rotation: left nesting does not match the rebuilt node");
  return {std::move(root), inverse_permutation(ri.map)};
}

inline std::pair<NodePtr, std::vector<Elem>> normalize(NodePtr n, Association dir);

// Rebuild an internal node from normalized children, composing the
// reglued morphism with the child isomorphisms.
inline std::pair<NodePtr, std::vector<Elem>> reglue(NodePtr l, std::vector<Elem> isoL,
                                                    NodePtr r, std::vector<Elem> isoR,
                                                    const DecompNode& old) {
  auto invL = inverse_permutation(isoL);
  std::vector<Elem> glue(static_cast<size_t>(r->eval.size()));
  for (Elem x = 0; x < r->eval.size(); ++x)
    glue[static_cast<size_t>(x)] =
        invL[static_cast<size_t>(old.glue[static_cast<size_t>(isoR[static_cast<size_t>(x)])])];
  NodePtr m = make_decomp_node(std::move(l), std::move(r), std::move(glue));
  std::vector<Elem> iso(static_cast<size_t>(m->eval.size()));
  for (size_t i = 0; i < m->paired.pair_of.size(); ++i) {
    auto [u, v] = m->paired.pair_of[i];
    Elem t = old.paired.index_of(isoL[static_cast<size_t>(u)], isoR[static_cast<size_t>(v)]);
    if (t < 0) throw internal_error("reglue: carrier mismatch");
    iso[i] = t;
  }
  return {std::move(m), std::move(iso)};
}

inline std::pair<NodePtr, std::vector<Elem>> normalize(NodePtr n, Association dir) {
  if (n->leaf) {
    auto id = identity_map(n->eval.size());
    return {std::move(n), std::move(id)};
  }
  auto [L, isoL] = normalize(std::move(n->left), dir);
  auto [R, isoR] = normalize(std::move(n->right), dir);
  auto [m, iso] = reglue(std::move(L), isoL, std::move(R), isoR, *n);

  if (dir == Association::right && !m->left->leaf) {
    auto [m2, isoRot] = rotate_right_at_root(std::move(m));
    // the fresh inner node may violate the spine; renormalize the right
    auto [r3, isoR3] = normalize(std::move(m2->right), dir);
    std::vector<Elem> glue3 = compose_maps(isoR3, m2->glue);
    NodePtr l3 = std::move(m2->left);
    const PairedHoop old_paired = m2->paired;
    NodePtr m3 = make_decomp_node(std::move(l3), std::move(r3), std::move(glue3));
    std::vector<Elem> iso3(static_cast<size_t>(m3->eval.size()));
    for (size_t i = 0; i < m3->paired.pair_of.size(); ++i) {
      auto [u, v] = m3->paired.pair_of[i];
      Elem t = old_paired.index_of(u, isoR3[static_cast<size_t>(v)]);
      if (t < 0) throw internal_error("normalize: carrier mismatch after rotation");
      iso3[i] = t;
    }
    auto total = compose_maps(compose_maps(iso3, isoRot), iso);
    return {std::move(m3), std::move(total)};
  }
  if (dir == Association::left && !m->right->leaf) {
    auto [m2, isoRot] = rotate_left_at_root(std::move(m));
    auto [l3, isoL3] = normalize(std::move(m2->left), dir);
    auto invL3 = inverse_permutation(isoL3);
    std::vector<Elem> glue3 = compose_maps(m2->glue, invL3);
    NodePtr r3 = std::move(m2->right);
    const PairedHoop old_paired = m2->paired;
    NodePtr m3 = make_decomp_node(std::move(l3), std::move(r3), std::move(glue3));
    std::vector<Elem> iso3(static_cast<size_t>(m3->eval.size()));
    for (size_t i = 0; i < m3->paired.pair_of.size(); ++i) {
      auto [u, v] = m3->paired.pair_of[i];
      Elem t = old_paired.index_of(isoL3[static_cast<size_t>(u)], v);
      if (t < 0) throw internal_error("normalize: carrier mismatch after rotation");
      iso3[i] = t;
    }
    auto total = compose_maps(compose_maps(iso3, isoRot), iso);
    return {std::move(m3), std::move(total)};
  }
  return {std::move(m), std::move(iso)};
}

inline int flatten_tree(const DecompNode& n, CertTree& t) {
  CertTree::Node out;
  if (n.leaf) {
    out.mv = n.mv_order;
  } else {
    out.left = flatten_tree(*n.left, t);
    out.right = flatten_tree(*n.right, t);
    out.morphism = n.glue;
  }
  t.nodes.push_back(std::move(out));
  return static_cast<int>(t.nodes.size()) - 1;
}

}  // namespace detail

// Decompose into MV-chains along repeated filter splits, normalized to
// the requested association, with the isomorphism back to the input.
// The certificate is verified before being returned.
inline DecompositionCertificate full_decomposition(const Hoop& A, Association assoc,
                                                   FilterStrategy strat) {
  auto [root, iso] = detail::decompose_rec(A, strat);
  auto [norm, isoN] = detail::normalize(std::move(root), assoc);
  DecompositionCertificate cert;
  cert.association = assoc;
  cert.iso_to_input = detail::compose_maps(isoN, iso);
  cert.tree.root = detail::flatten_tree(*norm, cert.tree);
  cert.input_hash = table_hash(A.data());
  std::string why;
  if (!verify_certificate(A, cert, &why))
    throw internal_error("decomposition certificate failed verification: " + why);
  return cert;
}

// Product morphisms from A into an MV-chain correspond one-to-one with
// the idempotents of A: psi maps to the least element of psi^-1(unit),
// and psi is the two-valued threshold map of that idempotent.
struct ChainMorphismCensus {
  std::vector<std::vector<Elem>> maps;
  std::vector<Elem> paired_idempotent;
};

inline ChainMorphismCensus census_to_chain(const Hoop& A, const Hoop& M) {
  if (M.size() < 2 || !mv_chain_rank(M))
    throw argument_error("census_to_chain: codomain is not a nontrivial MV-chain");
  ChainMorphismCensus out;
  out.maps = all_product_morphism_maps(A, M);
  for (const auto& psi : out.maps) {
    Elem e = A.unit();
    for (Elem x = 0; x < A.size(); ++x)
      if (psi[static_cast<size_t>(x)] == M.unit()) e = A.meet(e, x);
    if (A.mul(e, e) != e) throw internal_error("census: paired element is not idempotent");
    for (Elem x = 0; x < A.size(); ++x) {
      Elem expect = A.leq(e, x) ? M.unit() : M.bottom();
      if (psi[static_cast<size_t>(x)] != expect)
        throw internal_error("census: morphism is not the threshold map of its idempotent");
    }
    out.paired_idempotent.push_back(e);
  }
  auto sorted = out.paired_idempotent;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != idempotents(A))
    throw internal_error("census: pairing is not a bijection with the idempotents");
  return out;
}

// Product morphisms from an MV-chain into A correspond one-to-one with
// the idempotents of A: psi maps to psi(bottom), and psi sends the unit
// to the unit and everything else to that idempotent.
inline ChainMorphismCensus census_from_chain(const Hoop& A, const Hoop& M) {
  if (M.size() < 2 || !mv_chain_rank(M))
    throw argument_error("census_from_chain: domain is not a nontrivial MV-chain");
  ChainMorphismCensus out;
  out.maps = all_product_morphism_maps(M, A);
  for (const auto& psi : out.maps) {
    Elem e = psi[static_cast<size_t>(M.bottom())];
    if (A.mul(e, e) != e) throw internal_error("census: paired element is not idempotent");
    for (Elem x = 0; x < M.size(); ++x) {
      Elem expect = (x == M.unit()) ? A.unit() : e;
      if (psi[static_cast<size_t>(x)] != expect)
        throw internal_error("census: morphism is not two-valued");
    }
    out.paired_idempotent.push_back(e);
  }
  auto sorted = out.paired_idempotent;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != idempotents(A))
    throw internal_error("census: pairing is not a bijection with the idempotents");
  return out;
}

}  // namespace hoops
