#pragma once

// Core finite-hoop type: dense operation tables, axiom validation with
// witness reporting, derived order structure, and isomorphism search.

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hoops {

using Elem = int;

// Malformed table data (wrong dimensions, out-of-range entries).
class structural_error : public std::runtime_error {
 public:
  explicit structural_error(const std::string& what) : std::runtime_error(what) {}
};

// Well-formed input that violates a precondition of the operation.
class argument_error : public std::invalid_argument {
 public:
  explicit argument_error(const std::string& what) : std::invalid_argument(what) {}
};

// A theorem-backed internal check failed; indicates a bug, not bad input.
class internal_error : public std::logic_error {
 public:
  explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

struct Violation {
  std::string axiom;
  std::vector<Elem> witness;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool valid() const { return violations.empty(); }
  bool has(const std::string& axiom) const {
    for (const auto& v : violations)
      if (v.axiom == axiom) return true;
    return false;
  }
};

// Raw tables. Row-major: mul[x*size + y] is x*y.
struct HoopData {
  int size = 0;
  Elem unit = 0;
  std::vector<Elem> mul;
  std::vector<Elem> imp;
  std::vector<std::string> labels;  // optional; empty or exactly size entries

  Elem mul_at(Elem x, Elem y) const { return mul[static_cast<size_t>(x) * size + y]; }
  Elem imp_at(Elem x, Elem y) const { return imp[static_cast<size_t>(x) * size + y]; }
  Elem& mul_at(Elem x, Elem y) { return mul[static_cast<size_t>(x) * size + y]; }
  Elem& imp_at(Elem x, Elem y) { return imp[static_cast<size_t>(x) * size + y]; }

  bool same_tables(const HoopData& o) const {
    return size == o.size && unit == o.unit && mul == o.mul && imp == o.imp;
  }
};

inline void check_structure(const HoopData& d) {
  if (d.size < 1) throw structural_error("hoop size must be at least 1");
  const size_t n2 = static_cast<size_t>(d.size) * d.size;
  if (d.mul.size() != n2) throw structural_error("mul table has wrong shape");
  if (d.imp.size() != n2) throw structural_error("imp table has wrong shape");
  if (d.unit < 0 || d.unit >= d.size) throw structural_error("unit index out of range");
  for (Elem v : d.mul)
    if (v < 0 || v >= d.size) throw structural_error("mul entry out of range");
  for (Elem v : d.imp)
    if (v < 0 || v >= d.size) throw structural_error("imp entry out of range");
  if (!d.labels.empty() && static_cast<int>(d.labels.size()) != d.size)
    throw structural_error("label count does not match size");
}

// Axiom families checked, in report order:
//   commutativity   x*y = y*x
//   associativity   (x*y)*z = x*(y*z)
//   identity        unit*x = x = x*unit
//   H1              x->x = unit
//   H2              (x*y)->z = x->(y->z)
//   H3              x*(x->y) = y*(y->x)
//   antisymmetry    x->y = unit and y->x = unit imply x = y
// Each violated family is reported once with the first witness in scan order.
inline ValidationReport validate_hoop(const HoopData& d) {
  check_structure(d);
  ValidationReport rep;
  const int n = d.size;
  const Elem e = d.unit;

  auto record = [&rep](const char* axiom, std::vector<Elem> w) {
    rep.violations.push_back({axiom, std::move(w)});
  };

  for (Elem x = 0; x < n; ++x) {
    for (Elem y = 0; y < n; ++y)
      if (d.mul_at(x, y) != d.mul_at(y, x)) {
        record("commutativity", {x, y});
        goto comm_done;
      }
  }
comm_done:
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      for (Elem z = 0; z < n; ++z)
        if (d.mul_at(d.mul_at(x, y), z) != d.mul_at(x, d.mul_at(y, z))) {
          record("associativity", {x, y, z});
          goto assoc_done;
        }
assoc_done:
  for (Elem x = 0; x < n; ++x)
    if (d.mul_at(e, x) != x || d.mul_at(x, e) != x) {
      record("identity", {x});
      break;
    }
  for (Elem x = 0; x < n; ++x)
    if (d.imp_at(x, x) != e) {
      record("H1", {x});
      break;
    }
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      for (Elem z = 0; z < n; ++z)
        if (d.imp_at(d.mul_at(x, y), z) != d.imp_at(x, d.imp_at(y, z))) {
          record("H2", {x, y, z});
          goto h2_done;
        }
h2_done:
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      if (d.mul_at(x, d.imp_at(x, y)) != d.mul_at(y, d.imp_at(y, x))) {
        record("H3", {x, y});
        goto h3_done;
      }
h3_done:
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      if (x != y && d.imp_at(x, y) == e && d.imp_at(y, x) == e) {
        record("antisymmetry", {x, y});
        goto antisym_done;
      }
antisym_done:
  return rep;
}

// Construction attempted on tables that fail validate_hoop.
class invalid_hoop : public std::invalid_argument {
 public:
  explicit invalid_hoop(ValidationReport rep)
      : std::invalid_argument(describe(rep)), report_(std::move(rep)) {}
  const ValidationReport& report() const { return report_; }

 private:
  static std::string describe(const ValidationReport& rep) {
    std::string s = "tables violate hoop axioms:";
    for (const auto& v : rep.violations) {
      s += ' ';
      s += v.axiom;
    }
    return s;
  }
  ValidationReport report_;
};

// Order structure derived from the tables: x <= y iff x->y = unit.
// meet is x*(x->y); join/bottom are computed from the order. On a valid
// hoop the order is a bounded distributive lattice with the unit on top.
struct OrderStructure {
  int size = 0;
  std::vector<char> leq;             // row-major size*size
  std::vector<Elem> meet;            // row-major
  std::vector<Elem> join;            // row-major; -1 when no unique lub (unchecked hoops only)
  Elem bottom = 0;
  std::vector<std::pair<Elem, Elem>> hasse_edges;  // (lower, upper) covers, sorted

  bool le(Elem x, Elem y) const { return leq[static_cast<size_t>(x) * size + y] != 0; }
  Elem meet_at(Elem x, Elem y) const { return meet[static_cast<size_t>(x) * size + y]; }
  Elem join_at(Elem x, Elem y) const { return join[static_cast<size_t>(x) * size + y]; }
};

namespace detail {

inline OrderStructure derive_order_impl(const HoopData& d, bool strict) {
  OrderStructure os;
  const int n = d.size;
  os.size = n;
  os.leq.assign(static_cast<size_t>(n) * n, 0);
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      if (d.imp_at(x, y) == d.unit) os.leq[static_cast<size_t>(x) * n + y] = 1;

  auto le = [&os, n](Elem x, Elem y) { return os.leq[static_cast<size_t>(x) * n + y] != 0; };

  if (strict) {
    for (Elem x = 0; x < n; ++x)
      if (!le(x, d.unit)) throw internal_error("derived order: unit is not the top");
    for (Elem x = 0; x < n; ++x)
      for (Elem y = 0; y < n; ++y)
        for (Elem z = 0; z < n; ++z)
          if (le(x, y) && le(y, z) && !le(x, z))
            throw internal_error("derived order is not transitive");
  }

  os.meet.resize(static_cast<size_t>(n) * n);
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) {
      Elem m = d.mul_at(x, d.imp_at(x, y));
      os.meet[static_cast<size_t>(x) * n + y] = m;
      if (strict) {
        if (!le(m, x) || !le(m, y)) throw internal_error("meet is not a lower bound");
        for (Elem z = 0; z < n; ++z)
          if (le(z, x) && le(z, y) && !le(z, m))
            throw internal_error("meet is not the greatest lower bound");
      }
    }

  os.join.assign(static_cast<size_t>(n) * n, -1);
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) {
      Elem best = -1;
      bool unique = true;
      for (Elem u = 0; u < n; ++u) {
        if (!le(x, u) || !le(y, u)) continue;
        bool minimal = true;
        for (Elem v = 0; v < n; ++v)
          if (v != u && le(x, v) && le(y, v) && le(v, u)) {
            minimal = false;
            break;
          }
        if (minimal) {
          if (best == -1)
            best = u;
          else
            unique = false;
        }
      }
      if (best == -1 || !unique) {
        if (strict) throw internal_error("join is not unique");
      } else {
        os.join[static_cast<size_t>(x) * n + y] = best;
      }
    }

  Elem bot = 0;
  for (Elem x = 1; x < n; ++x) bot = os.meet[static_cast<size_t>(bot) * n + x];
  if (strict)
    for (Elem x = 0; x < n; ++x)
      if (!le(bot, x)) throw internal_error("no least element");
  os.bottom = bot;

  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) {
      if (x == y || !le(x, y)) continue;
      bool cover = true;
      for (Elem z = 0; z < n; ++z)
        if (z != x && z != y && le(x, z) && le(z, y)) {
          cover = false;
          break;
        }
      if (cover) os.hasse_edges.emplace_back(x, y);
    }
  std::sort(os.hasse_edges.begin(), os.hasse_edges.end());
  return os;
}

}  // namespace detail

// Immutable validated hoop. Construction throws invalid_hoop on axiom
// violations and structural_error on malformed tables; afterwards the
// order structure is cached and theorem-level sanity checks have run.
class Hoop {
 public:
  // Default is the one-element hoop.
  Hoop() : Hoop(HoopData{1, 0, {0}, {0}, {}}) {}

  explicit Hoop(HoopData d) : data_(std::move(d)) {
    ValidationReport rep = validate_hoop(data_);
    if (!rep.valid()) throw invalid_hoop(std::move(rep));
    order_ = detail::derive_order_impl(data_, true);
  }

  // Skips axiom validation; order structure is derived best-effort.
  // Exists for fault-injection tests and must not be used elsewhere.
  static Hoop unchecked(HoopData d) {
    check_structure(d);
    return Hoop(std::move(d), unchecked_tag{});
  }

  int size() const { return data_.size; }
  Elem unit() const { return data_.unit; }
  Elem mul(Elem x, Elem y) const { return data_.mul_at(x, y); }
  Elem imp(Elem x, Elem y) const { return data_.imp_at(x, y); }
  bool leq(Elem x, Elem y) const { return order_.le(x, y); }
  Elem meet(Elem x, Elem y) const { return order_.meet_at(x, y); }
  Elem join(Elem x, Elem y) const { return order_.join_at(x, y); }
  Elem bottom() const { return order_.bottom; }
  const HoopData& data() const { return data_; }
  const OrderStructure& order() const { return order_; }

  std::string label(Elem x) const {
    if (!data_.labels.empty()) return data_.labels[static_cast<size_t>(x)];
    return std::to_string(x);
  }

  bool same_tables(const Hoop& o) const { return data_.same_tables(o.data_); }

 private:
  struct unchecked_tag {};
  Hoop(HoopData d, unchecked_tag) : data_(std::move(d)) {
    order_ = detail::derive_order_impl(data_, false);
  }

  HoopData data_;
  OrderStructure order_;
};

inline OrderStructure derive_order(const Hoop& h) { return h.order(); }

inline std::vector<Elem> idempotents(const Hoop& h) {
  std::vector<Elem> out;
  for (Elem x = 0; x < h.size(); ++x)
    if (h.mul(x, x) == x) out.push_back(x);
  return out;
}

inline bool is_idempotent(const Hoop& h, Elem x) { return h.mul(x, x) == x; }

// Arithmetic facts every hoop satisfies, checked exhaustively:
//   mul-monotone            x <= y implies x*z <= y*z
//   imp-monotone-right      x <= y implies z->x <= z->y
//   imp-antitone-left       x <= y implies y->z <= x->z
//   adjointness             x*y <= z iff x <= y->z
//   imp-meet-distribution   x->(y^z) = (x->y)^(x->z)
//   mul-join-distribution   x*(y v z) = (x*y) v (x*z)
//   join-imp-distribution   (x v y)->z = (x->z)^(y->z)
//   mul-meet-distribution   x*(y^z) = (x*y)^(x*z)
//   lattice-distributivity  x^(y v z) = (x^y) v (x^z)
//   idempotent-mul-is-meet  x*x = x implies x*y = x^y
// A failure on a validated hoop means the implementation is broken; the
// suite exists to catch tables that sneak past validation.
inline ValidationReport check_lemma_suite(const Hoop& h) {
  ValidationReport rep;
  const int n = h.size();
  auto record = [&rep](const char* name, std::vector<Elem> w) {
    rep.violations.push_back({name, std::move(w)});
  };

  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      for (Elem z = 0; z < n; ++z)
        if (h.leq(x, y) && !h.leq(h.mul(x, z), h.mul(y, z))) {
          record("mul-monotone", {x, y, z});
          goto l1_done;
        }
l1_done:
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      for (Elem z = 0; z < n; ++z)
        if (h.leq(x, y) && !h.leq(h.imp(z, x), h.imp(z, y))) {
          record("imp-monotone-right", {x, y, z});
          goto l2_done;
        }
l2_done:
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      for (Elem z = 0; z < n; ++z)
        if (h.leq(x, y) && !h.leq(h.imp(y, z), h.imp(x, z))) {
          record("imp-antitone-left", {x, y, z});
          goto l3_done;
        }
l3_done:
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      for (Elem z = 0; z < n; ++z)
        if (h.leq(h.mul(x, y), z) != h.leq(x, h.imp(y, z))) {
          record("adjointness", {x, y, z});
          goto l4_done;
        }
l4_done:
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      for (Elem z = 0; z < n; ++z)
        if (h.imp(x, h.meet(y, z)) != h.meet(h.imp(x, y), h.imp(x, z))) {
          record("imp-meet-distribution", {x, y, z});
          goto l5_done;
        }
l5_done:
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      for (Elem z = 0; z < n; ++z) {
        Elem j = h.join(y, z);
        if (j < 0 || h.join(h.mul(x, y), h.mul(x, z)) < 0 ||
            h.mul(x, j) != h.join(h.mul(x, y), h.mul(x, z))) {
          record("mul-join-distribution", {x, y, z});
          goto l6_done;
        }
      }
l6_done:
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      for (Elem z = 0; z < n; ++z) {
        Elem j = h.join(x, y);
        if (j < 0 || h.imp(j, z) != h.meet(h.imp(x, z), h.imp(y, z))) {
          record("join-imp-distribution", {x, y, z});
          goto l7_done;
        }
      }
l7_done:
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      for (Elem z = 0; z < n; ++z)
        if (h.mul(x, h.meet(y, z)) != h.meet(h.mul(x, y), h.mul(x, z))) {
          record("mul-meet-distribution", {x, y, z});
          goto l8_done;
        }
l8_done:
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      for (Elem z = 0; z < n; ++z) {
        Elem j = h.join(y, z);
        if (j < 0 || h.join(h.meet(x, y), h.meet(x, z)) < 0 ||
            h.meet(x, j) != h.join(h.meet(x, y), h.meet(x, z))) {
          record("lattice-distributivity", {x, y, z});
          goto l9_done;
        }
      }
l9_done:
  for (Elem x = 0; x < n; ++x) {
    if (h.mul(x, x) != x) continue;
    for (Elem y = 0; y < n; ++y)
      if (h.mul(x, y) != h.meet(x, y)) {
        record("idempotent-mul-is-meet", {x, y});
        goto l10_done;
      }
  }
l10_done:
  return rep;
}

namespace detail {

// Label-independent fingerprint per element, used to prune isomorphism
// candidates: idempotency, down/up-set sizes, table in-degrees.
inline std::vector<std::vector<int>> element_invariants(const Hoop& h) {
  const int m = h.size();
  std::vector<std::vector<int>> inv(m);
  for (Elem x = 0; x < m; ++x) {
    int down = 0, up = 0, mul_in = 0, imp_in = 0;
    for (Elem y = 0; y < m; ++y) {
      if (h.leq(y, x)) ++down;
      if (h.leq(x, y)) ++up;
    }
    for (Elem y = 0; y < m; ++y)
      for (Elem z = 0; z < m; ++z) {
        if (h.mul(y, z) == x) ++mul_in;
        if (h.imp(y, z) == x) ++imp_in;
      }
    inv[x] = {h.mul(x, x) == x ? 1 : 0, down, up, mul_in, imp_in};
  }
  return inv;
}

struct IsoSearch {
  const Hoop& a;
  const Hoop& b;
  std::vector<std::vector<int>> inv_a = element_invariants(a);
  std::vector<std::vector<int>> inv_b = element_invariants(b);
  std::vector<Elem> map = std::vector<Elem>(a.size(), -1);
  std::vector<char> used = std::vector<char>(a.size(), 0);

  // Every pair among the assigned prefix must transport correctly; a
  // result that is still unassigned must not hit an already-used target.
  bool consistent(Elem x) const {
    for (Elem i = 0; i <= x; ++i)
      for (Elem j = 0; j <= x; ++j) {
        Elem m = a.mul(i, j);
        Elem t = b.mul(map[i], map[j]);
        if (map[m] != -1 ? t != map[m] : used[t]) return false;
        Elem r = a.imp(i, j);
        Elem s = b.imp(map[i], map[j]);
        if (map[r] != -1 ? s != map[r] : used[s]) return false;
      }
    return true;
  }

  bool go(Elem x) {
    const int n = a.size();
    if (x == n) return true;
    for (Elem y = 0; y < n; ++y) {
      if (used[y]) continue;
      if (inv_a[x] != inv_b[y]) continue;
      if ((x == a.unit()) != (y == b.unit())) continue;
      map[x] = y;
      used[y] = 1;
      if (consistent(x) && go(x + 1)) return true;
      map[x] = -1;
      used[y] = 0;
    }
    return false;
  }
};

}  // namespace detail

// Backtracking isomorphism search. Returns the lexicographically least
// mapping (as the array h[0..n-1]) or nullopt. Units must correspond.
inline std::optional<std::vector<Elem>> hoop_isomorphism(const Hoop& a, const Hoop& b) {
  if (a.size() != b.size()) return std::nullopt;
  detail::IsoSearch search{a, b};
  {
    auto sa = search.inv_a;
    auto sb = search.inv_b;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return std::nullopt;
  }
  if (search.go(0)) return search.map;
  return std::nullopt;
}

inline std::vector<Elem> inverse_permutation(std::span<const Elem> p) {
  std::vector<Elem> inv(p.size());
  for (size_t i = 0; i < p.size(); ++i) inv[static_cast<size_t>(p[i])] = static_cast<Elem>(i);
  return inv;
}

inline std::vector<Elem> identity_map(int n) {
  std::vector<Elem> id(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) id[static_cast<size_t>(i)] = i;
  return id;
}

// FNV-1a over a canonical rendering of size, unit and both tables.
// Labels are display-only and deliberately excluded.
inline std::string table_hash(const HoopData& d) {
  uint64_t h = 14695981039346656037ULL;
  auto feed = [&h](long long v) {
    char buf[24];
    int len = std::snprintf(buf, sizeof buf, "%lld;", v);
    for (int i = 0; i < len; ++i) {
      h ^= static_cast<unsigned char>(buf[i]);
      h *= 1099511628211ULL;
    }
  };
  feed(d.size);
  feed(d.unit);
  for (Elem v : d.mul) feed(v);
  for (Elem v : d.imp) feed(v);
  char out[32];
  std::snprintf(out, sizeof out, "fnv1a64:%016llx", static_cast<unsigned long long>(h));
  return std::string(out);
}

}  // namespace hoops
