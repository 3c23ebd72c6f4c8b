#pragma once

// Exhaustive generation of all hoops of a given order up to isomorphism.
// Backtracks over multiplication tables; implication is forced by
// residuation against the divisibility order, so it is derived, not
// searched. Dedup by canonical relabeling.

#include "hoops/core.hpp"

namespace hoops {

struct HoopCensus {
  int order = 0;
  std::vector<Hoop> representatives;  // canonical form, sorted by tables
  int count = 0;
};

namespace detail {

inline std::vector<Elem> flatten_tables(const HoopData& d) {
  std::vector<Elem> v;
  v.reserve(d.mul.size() + d.imp.size());
  v.insert(v.end(), d.mul.begin(), d.mul.end());
  v.insert(v.end(), d.imp.begin(), d.imp.end());
  return v;
}

inline HoopData relabel_tables(const HoopData& d, std::span<const Elem> perm) {
  const int n = d.size;
  HoopData out;
  out.size = n;
  out.unit = perm[static_cast<size_t>(d.unit)];
  out.mul.assign(static_cast<size_t>(n) * n, 0);
  out.imp.assign(static_cast<size_t>(n) * n, 0);
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) {
      Elem px = perm[static_cast<size_t>(x)], py = perm[static_cast<size_t>(y)];
      out.mul_at(px, py) = perm[static_cast<size_t>(d.mul_at(x, y))];
      out.imp_at(px, py) = perm[static_cast<size_t>(d.imp_at(x, y))];
    }
  return out;
}

}  // namespace detail

// Least (mul, imp) table pair over all relabelings sending the unit to
// index n-1. Equal canonical tables iff isomorphic.
inline Hoop canonical_form(const Hoop& h) {
  const int n = h.size();
  if (n > 9) throw argument_error("canonical_form: order too large");
  std::vector<Elem> rest;
  for (Elem x = 0; x < n; ++x)
    if (x != h.unit()) rest.push_back(x);
  std::vector<Elem> perm(static_cast<size_t>(n));
  perm[static_cast<size_t>(h.unit())] = n - 1;

  bool have = false;
  HoopData best;
  std::vector<Elem> best_key;
  // arr holds the new labels 0..n-2 handed out to the non-unit
  // elements; ascending start, so next_permutation walks every one
  std::vector<Elem> arr(rest.size());
  for (size_t i = 0; i < arr.size(); ++i) arr[i] = static_cast<Elem>(i);
  do {
    for (size_t i = 0; i < rest.size(); ++i)
      perm[static_cast<size_t>(rest[i])] = arr[i];
    HoopData cand = detail::relabel_tables(h.data(), perm);
    std::vector<Elem> key = detail::flatten_tables(cand);
    if (!have || key < best_key) {
      have = true;
      best = std::move(cand);
      best_key = std::move(key);
    }
  } while (std::next_permutation(arr.begin(), arr.end()));
  return Hoop(best);
}

namespace detail {

// x <= y in a hoop iff x is a multiple of y, so the order is read off
// the finished multiplication table.
inline std::vector<char> divisibility(const std::vector<Elem>& mul, int n) {
  std::vector<char> leq(static_cast<size_t>(n) * n, 0);
  for (Elem y = 0; y < n; ++y)
    for (Elem z = 0; z < n; ++z)
      leq[static_cast<size_t>(mul[static_cast<size_t>(y) * n + z]) * n + y] = 1;
  return leq;
}

struct MulSearch {
  int n;
  std::vector<std::pair<Elem, Elem>> cells;  // x <= y < n-1, by (y, x)
  std::vector<Elem> mul;
  std::vector<HoopData> found;

  explicit MulSearch(int order) : n(order) {
    for (Elem y = 0; y + 1 < n; ++y)
      for (Elem x = 0; x <= y; ++x) cells.emplace_back(x, y);
    mul.assign(static_cast<size_t>(n) * n, -1);
    for (Elem x = 0; x < n; ++x) {
      mul[static_cast<size_t>(x) * n + (n - 1)] = x;
      mul[static_cast<size_t>(n - 1) * n + x] = x;
    }
  }

  Elem at(Elem x, Elem y) const { return mul[static_cast<size_t>(x) * n + y]; }
  void set(Elem x, Elem y, Elem v) {
    mul[static_cast<size_t>(x) * n + y] = v;
    mul[static_cast<size_t>(y) * n + x] = v;
  }

  // check every triple whose both bracketings are already determined
  bool assoc_ok() const {
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b)
        for (Elem c = 0; c < n; ++c) {
          Elem ab = at(a, b), bc = at(b, c);
          if (ab < 0 || bc < 0) continue;
          Elem l = at(ab, c), r = at(a, bc);
          if (l < 0 || r < 0) continue;
          if (l != r) return false;
        }
    return true;
  }

  void finish() {
    std::vector<char> leq = divisibility(mul, n);
    auto le = [&](Elem x, Elem y) { return leq[static_cast<size_t>(x) * n + y] != 0; };

    // symmetry breaking: upset sizes must not increase with index
    {
      std::vector<int> up(static_cast<size_t>(n), 0);
      for (Elem x = 0; x < n; ++x)
        for (Elem y = 0; y < n; ++y)
          if (le(x, y)) ++up[static_cast<size_t>(x)];
      for (Elem x = 0; x + 1 < n; ++x)
        if (up[static_cast<size_t>(x)] < up[static_cast<size_t>(x + 1)]) return;
    }

    // residuation: x -> y is the order-greatest z with x*z <= y
    std::vector<Elem> imp(static_cast<size_t>(n) * n, -1);
    for (Elem x = 0; x < n; ++x)
      for (Elem y = 0; y < n; ++y) {
        std::vector<Elem> s;
        for (Elem z = 0; z < n; ++z)
          if (le(at(x, z), y)) s.push_back(z);
        Elem top = -1;
        for (Elem c0 : s) {
          bool greatest = true;
          for (Elem z : s)
            if (!le(z, c0)) { greatest = false; break; }
          if (greatest) { top = c0; break; }
        }
        if (top < 0) return;  // no residual, not a hoop
        imp[static_cast<size_t>(x) * n + y] = top;
      }

    HoopData d{n, n - 1, mul, imp, {}};
    if (!validate_hoop(d).valid()) return;
    found.push_back(std::move(d));
  }

  void rec(size_t k) {
    if (k == cells.size()) {
      finish();
      return;
    }
    auto [x, y] = cells[k];
    for (Elem v = 0; v <= std::min(x, y); ++v) {
      set(x, y, v);
      if (assoc_ok()) rec(k + 1);
    }
    set(x, y, -1);
  }
};

}  // namespace detail

inline HoopCensus enumerate_hoops(int n, int cap = 6) {
  if (n < 1) throw argument_error("enumerate_hoops: order must be positive");
  if (n > cap) throw argument_error("enumerate_hoops: order exceeds the cap");

  HoopCensus census;
  census.order = n;
  if (n == 1) {
    census.representatives.push_back(Hoop(HoopData{1, 0, {0}, {0}, {}}));
    census.count = 1;
    return census;
  }

  detail::MulSearch search(n);
  search.rec(0);

  std::vector<std::pair<std::vector<Elem>, Hoop>> canon;
  for (const HoopData& d : search.found) {
    Hoop c = canonical_form(Hoop(d));
    std::vector<Elem> key = detail::flatten_tables(c.data());
    bool fresh = true;
    for (const auto& [k, unused] : canon)
      if (k == key) { fresh = false; break; }
    if (fresh) canon.emplace_back(std::move(key), std::move(c));
  }
  std::sort(canon.begin(), canon.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (auto& [key, h] : canon) census.representatives.push_back(std::move(h));
  census.count = static_cast<int>(census.representatives.size());
  return census;
}

}  // namespace hoops
