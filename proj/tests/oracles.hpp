#pragma once

// Brute-force reference implementations. They work from the list of open
// sets and from all set functions, never from the library's search code.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <vector>

#include "fintop/axioms.hpp"
#include "fintop/morphism.hpp"
#include "fintop/space.hpp"

namespace oracle {

using fintop::AxiomId;
using fintop::FiniteSpace;
using fintop::PointIndex;
using Set = std::uint64_t;
using Function = std::vector<PointIndex>;

inline bool has(Set s, std::size_t x) { return (s >> x) & 1U; }

/// U is open when it contains every point specializing to one of its points.
inline std::vector<Set> open_sets(const FiniteSpace& s) {
  const std::size_t n = s.size();
  std::vector<Set> out;
  for (Set u = 0; u < (Set{1} << n); ++u) {
    bool open = true;
    for (std::size_t y = 0; y < n && open; ++y) {
      if (!has(u, y)) continue;
      for (std::size_t x = 0; x < n && open; ++x) open = !s.leq(x, y) || has(u, x);
    }
    if (open) out.push_back(u);
  }
  return out;
}

struct Topology {
  std::size_t n = 0;
  std::vector<Set> opens;
  std::vector<Set> closeds;

  explicit Topology(const FiniteSpace& s) : n(s.size()), opens(open_sets(s)) {
    for (Set u : opens) closeds.push_back(full() & ~u);
  }

  Set full() const { return n == 64 ? ~Set{0} : (Set{1} << n) - 1; }
  bool is_open(Set s) const { return std::find(opens.begin(), opens.end(), s) != opens.end(); }
  bool is_closed(Set s) const { return std::find(closeds.begin(), closeds.end(), s) != closeds.end(); }
  bool is_clopen(Set s) const { return is_open(s) && is_closed(s); }

  Set closure(Set s) const {
    Set out = full();
    for (Set c : closeds) {
      if ((s & ~c) == 0) out &= c;
    }
    return out;
  }

  bool disjoint_open_nbhds(Set a, Set b) const {
    for (Set u : opens) {
      if ((a & ~u) != 0) continue;
      for (Set v : opens) {
        if ((b & ~v) == 0 && (u & v) == 0) return true;
      }
    }
    return false;
  }

  bool disjoint_closed_nbhds(Set a, Set b) const {
    for (Set u : opens) {
      if ((a & ~u) != 0) continue;
      for (Set v : opens) {
        if ((b & ~v) == 0 && (closure(u) & closure(v)) == 0) return true;
      }
    }
    return false;
  }

  // A real function on a finite space has finite image, which is discrete, so
  // it is continuous exactly when every level set is clopen.
  bool clopen_separation(Set a, Set b) const {
    for (Set c : opens) {
      if (is_closed(c) && (a & ~c) == 0 && (b & c) == 0) return true;
    }
    return false;
  }

  bool precise_separation(Set a, Set b) const { return (a & b) == 0 && is_clopen(a) && is_clopen(b); }

  bool separated(Set a, Set b) const { return (a & closure(b)) == 0 && (b & closure(a)) == 0; }
};

/// Open sets of the subspace on s, as subsets of the whole space.
inline Topology subspace(const Topology& t, Set s) {
  Topology sub = t;
  sub.opens.clear();
  for (Set u : t.opens) {
    if (std::find(sub.opens.begin(), sub.opens.end(), u & s) == sub.opens.end()) sub.opens.push_back(u & s);
  }
  sub.closeds.clear();
  for (Set u : sub.opens) sub.closeds.push_back(s & ~u);
  return sub;
}

inline bool normal_on(const Topology& t, Set whole) {
  for (Set a : t.closeds) {
    for (Set b : t.closeds) {
      if ((a & b) != 0) continue;
      bool found = false;
      for (Set u : t.opens) {
        if ((a & ~u) != 0) continue;
        for (Set v : t.opens) {
          if ((b & ~v) == 0 && (u & v & whole) == 0) {
            found = true;
            break;
          }
        }
        if (found) break;
      }
      if (!found) return false;
    }
  }
  return true;
}

inline bool axiom(const FiniteSpace& s, AxiomId id) {
  const Topology t(s);
  const std::size_t n = s.size();
  auto pt = [](std::size_t x) { return Set{1} << x; };
  auto pairs = [&](auto pred) {
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        if (x != y && !pred(x, y)) return false;
      }
    }
    return true;
  };
  auto distinguishable = [&](std::size_t x, std::size_t y) {
    return std::any_of(t.opens.begin(), t.opens.end(), [&](Set u) { return has(u, x) != has(u, y); });
  };
  // Each has a neighbourhood missing the other.
  auto points_separated = [&](std::size_t x, std::size_t y) {
    auto nbhd_missing = [&](std::size_t p, std::size_t q) {
      return std::any_of(t.opens.begin(), t.opens.end(), [&](Set u) { return has(u, p) && !has(u, q); });
    };
    return nbhd_missing(x, y) && nbhd_missing(y, x);
  };
  auto point_closed = [&](auto pred) {
    for (std::size_t x = 0; x < n; ++x) {
      for (Set f : t.closeds) {
        if (!has(f, x) && !pred(pt(x), f)) return false;
      }
    }
    return true;
  };
  auto closed_pairs = [&](auto pred) {
    for (Set a : t.closeds) {
      for (Set b : t.closeds) {
        if ((a & b) == 0 && !pred(a, b)) return false;
      }
    }
    return true;
  };
  switch (id) {
    case AxiomId::T0: return pairs(distinguishable);
    case AxiomId::R0:
      return pairs([&](auto x, auto y) { return !distinguishable(x, y) || points_separated(x, y); });
    case AxiomId::T1: return pairs(points_separated);
    case AxiomId::R1:
      return pairs([&](auto x, auto y) { return !distinguishable(x, y) || t.disjoint_open_nbhds(pt(x), pt(y)); });
    case AxiomId::T2: return pairs([&](auto x, auto y) { return t.disjoint_open_nbhds(pt(x), pt(y)); });
    case AxiomId::T2_HALF: return pairs([&](auto x, auto y) { return t.disjoint_closed_nbhds(pt(x), pt(y)); });
    case AxiomId::COMPLETELY_T2: return pairs([&](auto x, auto y) { return t.clopen_separation(pt(x), pt(y)); });
    case AxiomId::REGULAR: return point_closed([&](Set a, Set b) { return t.disjoint_open_nbhds(a, b); });
    case AxiomId::T3: return axiom(s, AxiomId::T0) && axiom(s, AxiomId::REGULAR);
    case AxiomId::COMPLETELY_REGULAR: return point_closed([&](Set a, Set b) { return t.clopen_separation(a, b); });
    case AxiomId::T3_HALF: return axiom(s, AxiomId::T0) && axiom(s, AxiomId::COMPLETELY_REGULAR);
    case AxiomId::NORMAL: return closed_pairs([&](Set a, Set b) { return t.disjoint_open_nbhds(a, b); });
    case AxiomId::NORMAL_URYSOHN: return closed_pairs([&](Set a, Set b) { return t.clopen_separation(a, b); });
    case AxiomId::T4: return axiom(s, AxiomId::T1) && axiom(s, AxiomId::NORMAL);
    case AxiomId::COMPLETELY_NORMAL:
      // Classical equivalent: every subspace is normal.
      for (Set sub = 0; sub <= t.full(); ++sub) {
        if (!normal_on(subspace(t, sub), sub)) return false;
      }
      return true;
    case AxiomId::PERFECTLY_NORMAL: return closed_pairs([&](Set a, Set b) { return t.precise_separation(a, b); });
    case AxiomId::TD:
      for (std::size_t x = 0; x < n; ++x) {
        bool found = false;
        for (Set u : t.opens) {
          for (Set z : t.closeds) found = found || (u & z) == pt(x);
        }
        if (!found) return false;
      }
      return true;
    case AxiomId::EXTREMALLY_DISCONNECTED:
      return std::all_of(t.opens.begin(), t.opens.end(), [&](Set u) { return t.is_open(t.closure(u)); });
  }
  return false;
}

/// Preimage of every open set is open.
inline bool continuous(const FiniteSpace& dom, const FiniteSpace& cod, const Function& f) {
  const Topology td(dom);
  for (Set v : open_sets(cod)) {
    Set pre = 0;
    for (std::size_t x = 0; x < dom.size(); ++x) {
      if (has(v, f[x])) pre |= Set{1} << x;
    }
    if (!td.is_open(pre)) return false;
  }
  return true;
}

/// Every set function dom -> cod, in lexicographic order.
inline std::vector<Function> all_functions(std::size_t dom, std::size_t cod) {
  std::vector<Function> out;
  if (dom > 0 && cod == 0) return out;
  Function f(dom, 0);
  while (true) {
    out.push_back(f);
    std::size_t i = dom;
    while (i > 0 && f[i - 1] + 1 == cod) f[--i] = 0;
    if (i == 0) return out;
    ++f[i - 1];
  }
}

inline std::vector<Function> continuous_functions(const FiniteSpace& dom, const FiniteSpace& cod) {
  std::vector<Function> out;
  for (auto& f : all_functions(dom.size(), cod.size())) {
    if (continuous(dom, cod, f)) out.push_back(std::move(f));
  }
  return out;
}

inline Function compose(const Function& g, const Function& f) {
  Function out(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) out[i] = g[f[i]];
  return out;
}

/// f: A -> B lifts against g: E -> Y.
inline bool has_lifting(const FiniteSpace& a, const FiniteSpace& b, const Function& f, const FiniteSpace& e,
                        const FiniteSpace& y, const Function& g) {
  const auto tops = continuous_functions(a, e);
  const auto bottoms = continuous_functions(b, y);
  const auto diagonals = continuous_functions(b, e);
  for (const auto& top : tops) {
    for (const auto& bottom : bottoms) {
      if (compose(g, top) != compose(bottom, f)) continue;
      const bool lifted = std::any_of(diagonals.begin(), diagonals.end(), [&](const Function& d) {
        return compose(d, f) == top && compose(g, d) == bottom;
      });
      if (!lifted) return false;
    }
  }
  return true;
}

/// Every reflexive transitive relation on n points, as closure rows, in
/// increasing order of the row-major matrix with entry (0,0) most significant.
inline std::vector<std::vector<Set>> preorders(std::size_t n) {
  std::vector<std::vector<Set>> out;
  const std::size_t cells = n * n;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << cells); ++m) {
    // Bit (cells-1-k) of m is matrix cell k, so increasing m is the required order.
    auto rel = [&](std::size_t x, std::size_t y) { return (m >> (cells - 1 - (x * n + y))) & 1U; };
    bool ok = true;
    for (std::size_t x = 0; x < n && ok; ++x) ok = rel(x, x);
    for (std::size_t x = 0; x < n && ok; ++x) {
      for (std::size_t y = 0; y < n && ok; ++y) {
        for (std::size_t z = 0; z < n && ok; ++z) ok = !(rel(x, y) && rel(y, z)) || rel(x, z);
      }
    }
    if (!ok) continue;
    std::vector<Set> rows(n, 0);
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) rows[x] |= static_cast<Set>(rel(x, y)) << y;
    }
    out.push_back(rows);
  }
  return out;
}

inline bool isomorphic_rows(const std::vector<Set>& a, const std::vector<Set>& b) {
  const std::size_t n = a.size();
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    bool ok = true;
    for (std::size_t x = 0; x < n && ok; ++x) {
      for (std::size_t y = 0; y < n && ok; ++y) ok = has(a[x], y) == has(b[p[x]], p[y]);
    }
    if (ok) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

inline std::size_t iso_classes(std::size_t n) {
  std::vector<std::vector<Set>> reps;
  for (const auto& r : preorders(n)) {
    if (std::none_of(reps.begin(), reps.end(), [&](const auto& q) { return isomorphic_rows(q, r); })) reps.push_back(r);
  }
  return reps.size();
}

inline bool antisymmetric(const std::vector<Set>& rows) {
  for (std::size_t x = 0; x < rows.size(); ++x) {
    for (std::size_t y = 0; y < rows.size(); ++y) {
      if (x != y && has(rows[x], y) && has(rows[y], x)) return false;
    }
  }
  return true;
}

}  // namespace oracle
