#include "localelab/kernels.hpp"

#include <algorithm>
#include <cstdint>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace localelab::kernels {

namespace {

// Precomputed per-element rows so the inner test is pure bit arithmetic.
struct SublocaleRows {
  std::vector<ElemSet> arrows_into;  // { x -> s : x in L }
  int n = 0;
  Elem top = 0;

  explicit SublocaleRows(const Frame& f) : arrows_into(f.size()), n(f.size()), top(f.top()) {
    for (Elem s = 0; s < n; ++s) {
      for (Elem x = 0; x < n; ++x) arrows_into[s].insert(f.implies(x, s));
    }
  }
};

bool is_sublocale_mask(const Frame& f, const SublocaleRows& rows, ElemSet a) {
  if (!a.contains(rows.top)) return false;
  bool ok = true;
  a.for_each([&](Elem s) {
    if (ok && !rows.arrows_into[s].subset_of(a)) ok = false;
  });
  if (!ok) return false;
  const auto members = a.members();
  for (std::size_t i = 0; i < members.size() && ok; ++i) {
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      if (!a.contains(f.meet(members[i], members[j]))) return false;
    }
  }
  return ok;
}

/// Expands the low `n-1` bits of `idx` into a carrier subset with `top` forced in.
ElemSet with_top(std::uint64_t idx, Elem top) {
  const std::uint64_t low = idx & ((std::uint64_t{1} << top) - 1);
  const std::uint64_t high = (idx >> top) << (top + 1);
  return ElemSet{low | high | (std::uint64_t{1} << top)};
}

bool is_point_mask(const Frame& f, ElemSet filter) {
  if (!filter.contains(f.top()) || filter.contains(f.bottom())) return false;
  const int n = f.size();
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = a + 1; b < n; ++b) {
      const bool ia = filter.contains(a);
      const bool ib = filter.contains(b);
      if (filter.contains(f.meet(a, b)) != (ia && ib)) return false;
      if (filter.contains(f.join(a, b)) != (ia || ib)) return false;
    }
  }
  return true;
}

template <class Pred>
std::vector<ElemSet> scan_parallel(std::uint64_t count, Pred pred) {
  std::vector<ElemSet> out;
#pragma omp parallel
  {
    std::vector<ElemSet> local;
#pragma omp for schedule(static) nowait
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(count); ++i) {
      ElemSet s;
      if (pred(static_cast<std::uint64_t>(i), s)) local.push_back(s);
    }
#pragma omp critical
    out.insert(out.end(), local.begin(), local.end());
  }
  std::sort(out.begin(), out.end(), CanonicalLess{});
  return out;
}

}  // namespace

std::vector<ElemSet> sublocale_scan(const Frame& frame) {
  const SublocaleRows rows(frame);
  const std::uint64_t count = std::uint64_t{1} << (frame.size() - 1);
  return scan_parallel(count, [&](std::uint64_t i, ElemSet& s) {
    s = with_top(i, frame.top());
    return is_sublocale_mask(frame, rows, s);
  });
}

std::vector<ElemSet> sublocale_scan_serial(const Frame& frame) {
  // Plain definition check on every subset; shares nothing with the fast path.
  const int n = frame.size();
  std::vector<ElemSet> out;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
    const ElemSet a{bits};
    if (!a.contains(frame.top())) continue;
    bool ok = true;
    for (Elem s = 0; s < n && ok; ++s) {
      if (!a.contains(s)) continue;
      for (Elem t = 0; t < n && ok; ++t) {
        if (a.contains(t) && !a.contains(frame.meet(s, t))) ok = false;
      }
      for (Elem x = 0; x < n && ok; ++x) {
        if (!a.contains(frame.implies(x, s))) ok = false;
      }
    }
    if (ok) out.push_back(a);
  }
  std::sort(out.begin(), out.end(), CanonicalLess{});
  return out;
}

std::vector<ElemSet> point_scan(const Frame& frame) {
  const std::uint64_t count = std::uint64_t{1} << frame.size();
  return scan_parallel(count, [&](std::uint64_t i, ElemSet& s) {
    s = ElemSet{i};
    return is_point_mask(frame, s);
  });
}

std::vector<ElemSet> point_scan_serial(const Frame& frame) {
  const int n = frame.size();
  std::vector<ElemSet> out;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
    const ElemSet filter{bits};
    // indicator map L -> 2 with 2 = {0 < 1}
    bool ok = filter.contains(frame.top()) && !filter.contains(frame.bottom());
    for (Elem a = 0; a < n && ok; ++a) {
      for (Elem b = 0; b < n && ok; ++b) {
        const int pa = filter.contains(a), pb = filter.contains(b);
        ok = filter.contains(frame.meet(a, b)) == static_cast<bool>(std::min(pa, pb)) &&
             filter.contains(frame.join(a, b)) == static_cast<bool>(std::max(pa, pb));
      }
    }
    if (ok) out.push_back(filter);
  }
  std::sort(out.begin(), out.end(), CanonicalLess{});
  return out;
}

int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace localelab::kernels
