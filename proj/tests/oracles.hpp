#pragma once

// Brute-force references built from the order relation alone. None of them
// read the meet, join or implication tables of a Frame.

#include <cstdint>
#include <vector>

#include "localelab/lattice.hpp"

namespace oracle {

using localelab::Elem;
using localelab::ElemSet;
using localelab::Frame;

inline bool le(const Frame& f, Elem a, Elem b) { return f.poset().le(a, b); }

/// Greatest lower bound of a set by scanning all elements.
inline Elem glb(const Frame& f, ElemSet s) {
  Elem best = -1;
  for (Elem x = 0; x < f.size(); ++x) {
    bool lower = true;
    s.for_each([&](Elem a) { lower = lower && le(f, x, a); });
    if (lower && (best < 0 || le(f, best, x))) best = x;
  }
  return best;
}

inline Elem lub(const Frame& f, ElemSet s) {
  Elem best = -1;
  for (Elem x = 0; x < f.size(); ++x) {
    bool upper = true;
    s.for_each([&](Elem a) { upper = upper && le(f, a, x); });
    if (upper && (best < 0 || le(f, x, best))) best = x;
  }
  return best;
}

inline Elem meet(const Frame& f, Elem a, Elem b) { return glb(f, ElemSet::single(a) | ElemSet::single(b)); }
inline Elem join(const Frame& f, Elem a, Elem b) { return lub(f, ElemSet::single(a) | ElemSet::single(b)); }

/// Largest x with x ^ a <= b.
inline Elem implies(const Frame& f, Elem a, Elem b) {
  ElemSet candidates;
  for (Elem x = 0; x < f.size(); ++x) {
    if (le(f, meet(f, x, a), b)) candidates.insert(x);
  }
  return lub(f, candidates);
}

/// Implication table computed once per frame, for the scans below.
struct Tables {
  int n;
  std::vector<Elem> m, imp;
  explicit Tables(const Frame& f) : n(f.size()), m(n * n), imp(n * n) {
    for (Elem a = 0; a < n; ++a) {
      for (Elem b = 0; b < n; ++b) {
        m[a * n + b] = meet(f, a, b);
        imp[a * n + b] = implies(f, a, b);
      }
    }
  }
};

/// Closed under all meets (so contains top) and under x -> (-).
inline bool is_sublocale(const Frame& f, const Tables& t, ElemSet s) {
  if (!s.contains(glb(f, ElemSet{}))) return false;
  bool ok = true;
  s.for_each([&](Elem a) {
    s.for_each([&](Elem b) { ok = ok && s.contains(t.m[a * t.n + b]); });
    for (Elem x = 0; x < f.size(); ++x) ok = ok && s.contains(t.imp[x * t.n + a]);
  });
  return ok;
}

inline std::vector<ElemSet> sublocales(const Frame& f) {
  const Tables t(f);
  std::vector<ElemSet> out;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << f.size()); ++bits) {
    if (is_sublocale(f, t, ElemSet{bits})) out.push_back(ElemSet{bits});
  }
  return out;
}

/// Least sublocale containing `set`: intersection of all that contain it.
inline ElemSet least_containing(const std::vector<ElemSet>& subs, ElemSet set, ElemSet all) {
  ElemSet acc = all;
  for (ElemSet s : subs) {
    if (set.subset_of(s)) acc &= s;
  }
  return acc;
}

/// Largest sublocale inside `set`.
inline ElemSet largest_inside(const std::vector<ElemSet>& subs, ElemSet set) {
  ElemSet best;
  bool found = false;
  for (ElemSet s : subs) {
    if (s.subset_of(set) && (!found || best.subset_of(s))) {
      best = s;
      found = true;
    }
  }
  return best;
}

/// Points as filters F whose indicator preserves finite meets and all joins.
inline std::vector<ElemSet> points(const Frame& f) {
  std::vector<ElemSet> out;
  const Elem top = glb(f, ElemSet{}), bottom = lub(f, ElemSet{});
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << f.size()); ++bits) {
    const ElemSet p{bits};
    if (!p.contains(top) || p.contains(bottom)) continue;
    bool ok = true;
    for (Elem a = 0; a < f.size() && ok; ++a) {
      for (Elem b = 0; b < f.size() && ok; ++b) {
        ok = p.contains(meet(f, a, b)) == (p.contains(a) && p.contains(b)) &&
             p.contains(join(f, a, b)) == (p.contains(a) || p.contains(b));
      }
    }
    if (ok) out.push_back(p);
  }
  return out;
}

/// Maps M -> L preserving top, bottom, binary meets and joins, by trying all |L|^|M| tables.
inline long frame_hom_count(const Frame& m, const Frame& l) {
  const int n = m.size(), k = l.size();
  std::vector<Elem> map(n, 0);
  long count = 0;
  while (true) {
    bool ok = map[glb(m, ElemSet{})] == glb(l, ElemSet{}) && map[lub(m, ElemSet{})] == lub(l, ElemSet{});
    for (Elem a = 0; a < n && ok; ++a) {
      for (Elem b = 0; b < n && ok; ++b) {
        ok = map[meet(m, a, b)] == meet(l, map[a], map[b]) && map[join(m, a, b)] == join(l, map[a], map[b]);
      }
    }
    count += ok;
    int i = 0;
    while (i < n && ++map[i] == k) map[i++] = 0;
    if (i == n) break;
  }
  return count;
}

}  // namespace oracle
