#pragma once

// Filters of a finite hoop, the induced congruences, quotients, and the
// subalgebra/quotient plumbing the decomposition machinery sits on.

#include "hoops/core.hpp"

namespace hoops {

struct Filter {
  std::vector<Elem> members;  // sorted ascending
  Elem least = -1;            // minimum member; idempotent in a valid hoop

  bool contains(Elem x) const {
    return std::binary_search(members.begin(), members.end(), x);
  }
  size_t size() const { return members.size(); }
  bool operator==(const Filter& o) const { return members == o.members; }
};

// Upward closed, multiplication closed, nonempty.
inline bool is_filter(const Hoop& h, const std::vector<Elem>& subset) {
  if (subset.empty()) return false;
  std::vector<char> in(h.size(), 0);
  for (Elem x : subset) {
    if (x < 0 || x >= h.size()) throw argument_error("subset element out of range");
    in[static_cast<size_t>(x)] = 1;
  }
  for (Elem x = 0; x < h.size(); ++x) {
    if (!in[static_cast<size_t>(x)]) continue;
    for (Elem y = 0; y < h.size(); ++y) {
      if (h.leq(x, y) && !in[static_cast<size_t>(y)]) return false;
      if (in[static_cast<size_t>(y)] && !in[static_cast<size_t>(h.mul(x, y))]) return false;
    }
  }
  return true;
}

inline Filter make_filter(const Hoop& h, std::vector<Elem> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  if (!is_filter(h, members)) throw argument_error("subset is not a filter");
  Filter f;
  f.least = members.front();
  for (Elem m : members)
    if (h.leq(m, f.least)) f.least = m;
  // sorted ascending already; least is the order-minimum, which for a
  // filter is also unique, but keep the scan independent of that fact
  f.members = std::move(members);
  return f;
}

inline Filter principal_filter(const Hoop& h, Elem e) {
  std::vector<Elem> up;
  for (Elem x = 0; x < h.size(); ++x)
    if (h.leq(e, x)) up.push_back(x);
  return make_filter(h, std::move(up));
}

// Every filter of a finite hoop is the up-set of its least element, and
// that least element is idempotent; conversely the up-set of an
// idempotent is a filter. So the filters are exactly {up(e) : e*e = e}.
inline std::vector<Filter> all_filters(const Hoop& h) {
  std::vector<Filter> out;
  for (Elem e : idempotents(h)) out.push_back(principal_filter(h, e));
  std::sort(out.begin(), out.end(), [](const Filter& a, const Filter& b) {
    if (a.members.size() != b.members.size()) return a.members.size() < b.members.size();
    return a.members < b.members;
  });
  return out;
}

// Smallest filter containing the subset: close under products, then up.
inline Filter filter_generated(const Hoop& h, const std::vector<Elem>& subset) {
  if (subset.empty()) throw argument_error("filter_generated: empty subset");
  std::vector<char> in(h.size(), 0);
  for (Elem x : subset) {
    if (x < 0 || x >= h.size()) throw argument_error("subset element out of range");
    in[static_cast<size_t>(x)] = 1;
  }
  bool grew = true;
  while (grew) {
    grew = false;
    for (Elem x = 0; x < h.size(); ++x)
      for (Elem y = 0; y < h.size(); ++y)
        if (in[static_cast<size_t>(x)] && in[static_cast<size_t>(y)]) {
          Elem p = h.mul(x, y);
          if (!in[static_cast<size_t>(p)]) {
            in[static_cast<size_t>(p)] = 1;
            grew = true;
          }
        }
  }
  std::vector<Elem> members;
  for (Elem x = 0; x < h.size(); ++x)
    for (Elem y = 0; y < h.size(); ++y)
      if (in[static_cast<size_t>(x)] && h.leq(x, y) && !in[static_cast<size_t>(y)])
        members.push_back(y);
  for (Elem x = 0; x < h.size(); ++x)
    if (in[static_cast<size_t>(x)]) members.push_back(x);
  return make_filter(h, std::move(members));
}

// Exactly two filters: {unit} and the whole hoop. The one-element hoop
// has a single filter and does not count as simple.
inline bool is_simple(const Hoop& h) { return idempotents(h).size() == 2; }

// A subset closed under both operations and containing the unit, viewed
// as a hoop in its own right with a translation to/from the parent.
struct SubHoop {
  Hoop algebra;
  std::vector<Elem> to_parent;    // sub element -> parent element
  std::vector<Elem> from_parent;  // parent element -> sub element or -1
};

inline SubHoop subalgebra(const Hoop& h, std::vector<Elem> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  if (members.empty()) throw argument_error("subalgebra: empty carrier");
  std::vector<Elem> from(h.size(), -1);
  for (size_t i = 0; i < members.size(); ++i) {
    Elem m = members[i];
    if (m < 0 || m >= h.size()) throw argument_error("subalgebra element out of range");
    from[static_cast<size_t>(m)] = static_cast<Elem>(i);
  }
  if (from[static_cast<size_t>(h.unit())] < 0)
    throw argument_error("subalgebra must contain the unit");
  HoopData d;
  d.size = static_cast<int>(members.size());
  d.unit = from[static_cast<size_t>(h.unit())];
  d.mul.resize(static_cast<size_t>(d.size) * d.size);
  d.imp.resize(static_cast<size_t>(d.size) * d.size);
  for (int i = 0; i < d.size; ++i)
    for (int j = 0; j < d.size; ++j) {
      Elem p = h.mul(members[i], members[j]);
      Elem r = h.imp(members[i], members[j]);
      if (from[static_cast<size_t>(p)] < 0 || from[static_cast<size_t>(r)] < 0)
        throw argument_error("subset is not closed under the operations");
      d.mul_at(i, j) = from[static_cast<size_t>(p)];
      d.imp_at(i, j) = from[static_cast<size_t>(r)];
    }
  if (!h.data().labels.empty()) {
    for (Elem m : members) d.labels.push_back(h.label(m));
  }
  return SubHoop{Hoop(std::move(d)), std::move(members), std::move(from)};
}

// A filter is closed under ->  (x->y is above y), so this always works.
inline SubHoop filter_subalgebra(const Hoop& h, const Filter& f) {
  return subalgebra(h, f.members);
}

// theta_F relates x and y when (x->y)*(y->x) lands in F.
inline bool congruent_mod(const Hoop& h, const Filter& f, Elem x, Elem y) {
  return f.contains(h.mul(h.imp(x, y), h.imp(y, x)));
}

struct QuotientHoop {
  Hoop algebra;
  std::vector<Elem> class_of;              // parent element -> class index
  std::vector<std::vector<Elem>> classes;  // class index -> sorted members
  std::vector<Elem> class_top;             // class index -> greatest member
  std::vector<Elem> class_bottom;          // class index -> least member
};

// Quotient by theta_F. Classes are indexed in order of their smallest
// member, making the construction deterministic. Well-definedness of the
// induced tables is verified; a failure would mean theta_F is not a
// congruence, which is impossible for validated input.
inline QuotientHoop quotient(const Hoop& h, const Filter& f) {
  if (!is_filter(h, f.members)) throw argument_error("quotient: not a filter");
  const int n = h.size();
  std::vector<Elem> cls(n, -1);
  std::vector<std::vector<Elem>> classes;
  for (Elem x = 0; x < n; ++x) {
    if (cls[static_cast<size_t>(x)] != -1) continue;
    Elem id = static_cast<Elem>(classes.size());
    classes.emplace_back();
    for (Elem y = x; y < n; ++y)
      if (cls[static_cast<size_t>(y)] == -1 && congruent_mod(h, f, x, y)) {
        cls[static_cast<size_t>(y)] = id;
        classes.back().push_back(y);
      }
  }
  // transitivity sanity: members of one class must be pairwise related
  for (const auto& c : classes)
    for (Elem x : c)
      for (Elem y : c)
        if (!congruent_mod(h, f, x, y))
          throw internal_error("theta_F is not transitive");

  const int q = static_cast<int>(classes.size());
  HoopData d;
  d.size = q;
  d.unit = cls[static_cast<size_t>(h.unit())];
  d.mul.assign(static_cast<size_t>(q) * q, -1);
  d.imp.assign(static_cast<size_t>(q) * q, -1);
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) {
      Elem cx = cls[static_cast<size_t>(x)], cy = cls[static_cast<size_t>(y)];
      Elem cm = cls[static_cast<size_t>(h.mul(x, y))];
      Elem cr = cls[static_cast<size_t>(h.imp(x, y))];
      Elem& slot_m = d.mul[static_cast<size_t>(cx) * q + cy];
      Elem& slot_r = d.imp[static_cast<size_t>(cx) * q + cy];
      if (slot_m == -1)
        slot_m = cm;
      else if (slot_m != cm)
        throw internal_error("quotient multiplication is not well defined");
      if (slot_r == -1)
        slot_r = cr;
      else if (slot_r != cr)
        throw internal_error("quotient implication is not well defined");
    }

  std::vector<Elem> tops(q), bottoms(q);
  for (int c = 0; c < q; ++c) {
    Elem t = classes[static_cast<size_t>(c)].front();
    Elem b = t;
    for (Elem m : classes[static_cast<size_t>(c)]) {
      if (h.leq(t, m)) t = m;
      if (h.leq(m, b)) b = m;
    }
    for (Elem m : classes[static_cast<size_t>(c)])
      if (!h.leq(m, t) || !h.leq(b, m))
        throw internal_error("congruence class has no top or bottom");
    tops[static_cast<size_t>(c)] = t;
    bottoms[static_cast<size_t>(c)] = b;
  }

  d.labels.reserve(static_cast<size_t>(q));
  for (int c = 0; c < q; ++c) {
    std::string s = "{";
    bool first = true;
    for (Elem m : classes[static_cast<size_t>(c)]) {
      if (!first) s += ',';
      s += h.label(m);
      first = false;
    }
    s += '}';
    d.labels.push_back(std::move(s));
  }

  QuotientHoop out{Hoop(std::move(d)), std::move(cls), std::move(classes),
                   std::move(tops), std::move(bottoms)};
  return out;
}

// Facts about congruence classes that the decomposition leans on. With
// t_X / l_X the top and bottom of class X and l the bottom of F:
//   class-join-closed    x ~ y implies x ~ x v y  (tops exist)
//   class-meet-closed    x ~ y implies x ~ x ^ y  (bottoms exist)
//   i-{join,meet,mul,imp}  t_X o t_Y <= t_{X o Y}
//   ii-order-via-tops    X <= Y iff t_X <= t_Y
//   iii-top-meet         t_X ^ t_Y = t_{X ^ Y}
//   iv-top-imp           t_X -> t_Y = t_{X -> Y}
//   v-top-mul-imp        t_X * t_{X->Y} = t_{X ^ Y}
//   vi-filter-action     a in F: a -> t_X = t_X and t_X * a = t_X ^ a
//   vii-bottom-via-l     t_X * l = t_X ^ l = l_X
// Every violated clause is reported once with its first witness; classes
// are numbered as in quotient().
inline ValidationReport check_class_lemma(const Hoop& h, const Filter& f) {
  ValidationReport rep;
  const int n = h.size();
  auto record = [&rep](const char* name, std::vector<Elem> w) {
    rep.violations.push_back({name, std::move(w)});
  };

  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) {
      if (!congruent_mod(h, f, x, y)) continue;
      Elem j = h.join(x, y);
      if (j < 0 || !congruent_mod(h, f, x, j)) {
        record("class-join-closed", {x, y});
        goto jc_done;
      }
    }
jc_done:
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) {
      if (!congruent_mod(h, f, x, y)) continue;
      if (!congruent_mod(h, f, x, h.meet(x, y))) {
        record("class-meet-closed", {x, y});
        goto mc_done;
      }
    }
mc_done: {
  QuotientHoop q = quotient(h, f);
  const Hoop& Q = q.algebra;
  const int m = Q.size();
  const auto& t = q.class_top;
  const auto& b = q.class_bottom;
  const Elem l = f.least;

  // clause (i): inequalities, one per operation
  for (Elem X = 0; X < m; ++X)
    for (Elem Y = 0; Y < m; ++Y) {
      Elem ja = h.join(t[X], t[Y]);
      Elem jq = Q.join(X, Y);
      if (ja < 0 || jq < 0 || !h.leq(ja, t[jq])) {
        record("i-join", {X, Y});
        goto i_join_done;
      }
    }
i_join_done:
  for (Elem X = 0; X < m; ++X)
    for (Elem Y = 0; Y < m; ++Y)
      if (!h.leq(h.meet(t[X], t[Y]), t[Q.meet(X, Y)])) {
        record("i-meet", {X, Y});
        goto i_meet_done;
      }
i_meet_done:
  for (Elem X = 0; X < m; ++X)
    for (Elem Y = 0; Y < m; ++Y)
      if (!h.leq(h.mul(t[X], t[Y]), t[Q.mul(X, Y)])) {
        record("i-mul", {X, Y});
        goto i_mul_done;
      }
i_mul_done:
  for (Elem X = 0; X < m; ++X)
    for (Elem Y = 0; Y < m; ++Y)
      if (!h.leq(h.imp(t[X], t[Y]), t[Q.imp(X, Y)])) {
        record("i-imp", {X, Y});
        goto i_imp_done;
      }
i_imp_done:
  for (Elem X = 0; X < m; ++X)
    for (Elem Y = 0; Y < m; ++Y)
      if (Q.leq(X, Y) != h.leq(t[X], t[Y])) {
        record("ii-order-via-tops", {X, Y});
        goto ii_done;
      }
ii_done:
  for (Elem X = 0; X < m; ++X)
    for (Elem Y = 0; Y < m; ++Y)
      if (h.meet(t[X], t[Y]) != t[Q.meet(X, Y)]) {
        record("iii-top-meet", {X, Y});
        goto iii_done;
      }
iii_done:
  for (Elem X = 0; X < m; ++X)
    for (Elem Y = 0; Y < m; ++Y)
      if (h.imp(t[X], t[Y]) != t[Q.imp(X, Y)]) {
        record("iv-top-imp", {X, Y});
        goto iv_done;
      }
iv_done:
  for (Elem X = 0; X < m; ++X)
    for (Elem Y = 0; Y < m; ++Y)
      if (h.mul(t[X], t[Q.imp(X, Y)]) != t[Q.meet(X, Y)]) {
        record("v-top-mul-imp", {X, Y});
        goto v_done;
      }
v_done:
  for (Elem a : f.members)
    for (Elem X = 0; X < m; ++X)
      if (h.imp(a, t[X]) != t[X] || h.mul(t[X], a) != h.meet(t[X], a)) {
        record("vi-filter-action", {a, X});
        goto vi_done;
      }
vi_done:
  for (Elem X = 0; X < m; ++X)
    if (h.mul(t[X], l) != h.meet(t[X], l) || h.mul(t[X], l) != b[X]) {
      record("vii-bottom-via-l", {X});
      break;
    }
}
  return rep;
}

}  // namespace hoops
