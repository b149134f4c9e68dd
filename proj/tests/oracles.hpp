#pragma once

// Brute-force reference implementations. Nothing here calls into the
// library: groups are plain coordinate vectors, spans are computed by
// repeated addition and topologies by listing every open set.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <vector>

namespace oracle {

using Vec = std::vector<std::uint64_t>;

struct Group {
  Vec moduli;
  std::vector<Vec> elems;

  explicit Group(Vec mods) : moduli(std::move(mods)) {
    elems.push_back(Vec(moduli.size(), 0));
    for (std::size_t i = 0; i < moduli.size(); ++i) {
      std::vector<Vec> next;
      for (const auto& e : elems)
        for (std::uint64_t v = 0; v < moduli[i]; ++v) {
          auto f = e;
          f[i] = v;
          next.push_back(f);
        }
      elems = std::move(next);
    }
    std::sort(elems.begin(), elems.end());
  }

  std::size_t order() const { return elems.size(); }
  Vec zero() const { return Vec(moduli.size(), 0); }
  Vec add(const Vec& a, const Vec& b) const {
    Vec c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = (a[i] + b[i]) % moduli[i];
    return c;
  }
  // Z-span of x, which is also the F_p-span for elementary abelian groups.
  std::set<Vec> span(const Vec& x) const {
    std::set<Vec> s{zero()};
    Vec y = x;
    while (y != zero()) {
      s.insert(y);
      y = add(y, x);
    }
    return s;
  }
  bool divides(const Vec& a, const Vec& b) const { return span(a).count(b) > 0; }
  bool is_sharp(const Vec& x) const { return x != zero() && span(x).size() != order(); }
  std::vector<Vec> sharp() const {
    std::vector<Vec> out;
    for (const auto& e : elems)
      if (is_sharp(e)) out.push_back(e);
    return out;
  }
};

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline unsigned big_omega(std::uint64_t n) {
  unsigned k = 0;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    while (n % d == 0) {
      n /= d;
      ++k;
    }
  return k + (n > 1);
}

// Every nonzero nongenerator spans a group of prime order.
inline bool pseudo_simple(const Group& g) {
  for (const auto& x : g.sharp())
    if (!is_prime(g.span(x).size())) return false;
  return true;
}

// No two non-associate sharp elements share a sharp common divisor.
inline bool star(const Group& g) {
  const auto s = g.sharp();
  for (const auto& a : s)
    for (const auto& b : s) {
      if (g.span(a) == g.span(b)) continue;
      for (const auto& x : s)
        if (g.divides(x, a) && g.divides(x, b)) return false;
    }
  return true;
}

// Submodules of a finite abelian group by closing every subset of
// generators pairwise; small groups only.
inline std::set<std::set<Vec>> subgroups(const Group& g) {
  std::set<std::set<Vec>> out{{g.zero()}};
  bool grew = true;
  while (grew) {
    grew = false;
    auto cur = out;
    for (const auto& h : cur)
      for (const auto& x : g.elems) {
        if (h.count(x)) continue;
        std::set<Vec> k = h;
        // close h ∪ {x} under addition
        bool changed = true;
        k.insert(x);
        while (changed) {
          changed = false;
          std::vector<Vec> items(k.begin(), k.end());
          for (const auto& a : items)
            for (const auto& b : items)
              if (k.insert(g.add(a, b)).second) changed = true;
        }
        if (out.insert(k).second) grew = true;
      }
  }
  return out;
}

inline bool uniserial(const Group& g) {
  const auto subs = subgroups(g);
  for (const auto& a : subs)
    for (const auto& b : subs)
      if (!std::includes(a.begin(), a.end(), b.begin(), b.end()) &&
          !std::includes(b.begin(), b.end(), a.begin(), a.end()))
        return false;
  return true;
}

// A finite space given by a preorder on points 0..n-1; leq[i][j] means
// i | j, so the opens are the down-sets.
struct Space {
  std::size_t n = 0;
  std::vector<std::vector<bool>> leq;
  std::vector<std::uint32_t> opens;  // bitmasks

  // Opens are listed only for small spaces; larger ones keep the relation.
  explicit Space(std::vector<std::vector<bool>> rel) : n(rel.size()), leq(std::move(rel)) {
    if (n > 16) return;
    for (std::uint32_t s = 0; s < (1u << n); ++s) {
      bool open = true;
      for (std::size_t j = 0; j < n && open; ++j)
        if (s >> j & 1)
          for (std::size_t i = 0; i < n; ++i)
            if (leq[i][j] && !(s >> i & 1)) open = false;
      if (open) opens.push_back(s);
    }
  }
  std::uint32_t full() const { return n == 32 ? ~0u : (1u << n) - 1; }
  bool is_open(std::uint32_t s) const { return std::find(opens.begin(), opens.end(), s) != opens.end(); }
  bool is_closed(std::uint32_t s) const { return is_open(full() & ~s); }
  std::uint32_t closure(std::uint32_t s) const {
    std::uint32_t c = full();
    for (auto o : opens)
      if (!(o & s)) c &= ~o;
    return c;
  }

  bool t0() const {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        bool sep = false;
        for (auto o : opens) sep = sep || ((o >> i & 1) != (o >> j & 1));
        if (!sep) return false;
      }
    return true;
  }
  bool t1() const {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        if (i == j) continue;
        bool sep = false;
        for (auto o : opens) sep = sep || ((o >> i & 1) && !(o >> j & 1));
        if (!sep) return false;
      }
    return true;
  }
  bool separates(std::uint32_t a, std::uint32_t b) const {
    for (auto u : opens)
      if ((u & a) == a)
        for (auto v : opens)
          if ((v & b) == b && !(u & v)) return true;
    return false;
  }
  bool t2() const {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (!separates(1u << i, 1u << j)) return false;
    return true;
  }
  bool discrete() const { return opens.size() == (std::size_t{1} << n); }
  bool t4() const {
    for (auto a : opens)
      for (auto b : opens) {
        const auto ca = full() & ~a, cb = full() & ~b;
        if (ca && cb && !(ca & cb) && !separates(ca, cb)) return false;
      }
    return true;
  }
  // Separated sets have disjoint neighbourhoods.
  bool t5() const {
    for (std::uint32_t a = 1; a <= full(); ++a)
      for (std::uint32_t b = 1; b <= full(); ++b) {
        if (a & b) continue;
        if ((closure(a) & b) || (a & closure(b))) continue;
        if (!separates(a, b)) return false;
      }
    return true;
  }
  bool nested() const {
    for (auto a : opens)
      for (auto b : opens)
        if ((a & b) != a && (a & b) != b) return false;
    return true;
  }
  bool connected() const {
    if (n == 0) return false;
    for (auto o : opens)
      if (o != 0 && o != full() && is_closed(o)) return false;
    return true;
  }
  // Any two nonempty closed sets meet.
  bool ultraconnected() const {
    if (n == 0) return false;
    for (auto a : opens)
      for (auto b : opens) {
        const auto ca = full() & ~a, cb = full() & ~b;
        if (ca && cb && !(ca & cb)) return false;
      }
    return true;
  }
};

// Classes of M# (grouped by equal spans, ordered by least member) and the
// space they carry.
struct ClassSpace {
  std::vector<Vec> reps;
  std::vector<std::set<Vec>> spans;
  Space space;
};

inline ClassSpace class_space(const Group& g) {
  std::map<std::set<Vec>, Vec> by_span;
  for (const auto& x : g.sharp()) {
    auto s = g.span(x);
    auto it = by_span.find(s);
    if (it == by_span.end() || x < it->second) by_span[s] = x;
  }
  std::vector<std::pair<Vec, std::set<Vec>>> items;
  for (auto& [s, r] : by_span) items.push_back({r, s});
  std::sort(items.begin(), items.end());
  std::vector<std::vector<bool>> leq(items.size(), std::vector<bool>(items.size()));
  for (std::size_t i = 0; i < items.size(); ++i)
    for (std::size_t j = 0; j < items.size(); ++j) leq[i][j] = items[i].second.count(items[j].first) > 0;
  ClassSpace out{{}, {}, Space(leq)};
  for (auto& [r, s] : items) {
    out.reps.push_back(r);
    out.spans.push_back(s);
  }
  return out;
}

// p(n), partitions of n.
inline std::uint64_t partitions(unsigned n) {
  std::vector<std::uint64_t> p(n + 1, 0);
  p[0] = 1;
  for (unsigned k = 1; k <= n; ++k)
    for (unsigned i = k; i <= n; ++i) p[i] += p[i - k];
  return p[n];
}

inline std::uint64_t abelian_group_count(std::uint64_t n) {
  std::uint64_t count = 1;
  for (std::uint64_t d = 2; d <= n; ++d) {
    unsigned e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    if (e) count *= partitions(e);
  }
  return count;
}

// Z_n ⋉ Z_m by definition: (a,x)(b,y) = (ab, ay + bx).
struct TrivExt {
  std::uint64_t n, m;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> elems;

  TrivExt(std::uint64_t n_, std::uint64_t m_) : n(n_), m(m_) {
    for (std::uint64_t a = 0; a < n; ++a)
      for (std::uint64_t x = 0; x < m; ++x) elems.push_back({a, x});
  }
  using E = std::pair<std::uint64_t, std::uint64_t>;
  E mul(E r, E s) const { return {r.first * s.first % n, (r.first * s.second + s.first * r.second) % m}; }
  E add(E r, E s) const { return {(r.first + s.first) % n, (r.second + s.second) % m}; }
  bool unit(E r) const {
    for (auto s : elems)
      if (mul(r, s) == E{1 % n, 0}) return true;
    return false;
  }
  std::set<E> ann(E r) const {
    std::set<E> out;
    for (auto s : elems)
      if (mul(s, r) == E{0, 0}) out.insert(s);
    return out;
  }
  // I + Rs = R for all s outside I, and I proper.
  bool maximal(const std::set<E>& ideal) const {
    const E one{1 % n, 0};
    if (ideal.count(one)) return false;
    for (auto s : elems) {
      if (ideal.count(s)) continue;
      bool reaches = false;
      for (auto i : ideal)
        for (auto t : elems)
          if (add(i, mul(t, s)) == one) reaches = true;
      if (!reaches) return false;
    }
    return true;
  }
  bool pseudo_simple() const {
    for (auto r : elems)
      if (r != E{0, 0} && !unit(r) && !maximal(ann(r))) return false;
    return true;
  }
};

inline std::uint64_t gcd(std::uint64_t a, std::uint64_t b) { return std::gcd(a, b); }

// a/b divides c/d in Q over Z iff (c/d)/(a/b) = cb/(da) is an integer.
inline bool rational_divides(std::uint64_t a, std::uint64_t b, std::uint64_t c, std::uint64_t d) {
  return (c * b) % (d * a) == 0;
}

}  // namespace oracle
