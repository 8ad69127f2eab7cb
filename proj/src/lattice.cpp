#include "localelab/lattice.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace localelab {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotAPoset: return "NotAPoset";
    case ErrorKind::NoMeetOrJoin: return "NoMeetOrJoin";
    case ErrorKind::NotDistributive: return "NotDistributive";
    case ErrorKind::NotLocalic: return "NotLocalic";
    case ErrorKind::NotContinuous: return "NotContinuous";
    case ErrorKind::NotMeetClosed: return "NotMeetClosed";
    case ErrorKind::NotASublocale: return "NotASublocale";
    case ErrorKind::DomainMismatch: return "DomainMismatch";
    case ErrorKind::HostMismatch: return "HostMismatch";
    case ErrorKind::EmptyFamily: return "EmptyFamily";
    case ErrorKind::PreconditionUnmet: return "PreconditionUnmet";
    case ErrorKind::SizeLimit: return "SizeLimit";
    case ErrorKind::UnknownWitness: return "UnknownWitness";
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

namespace {

void check_carrier_size(std::size_t n) {
  if (n > static_cast<std::size_t>(kMaxCarrier)) {
    throw LocaleError(ErrorKind::SizeLimit,
                      "carrier has " + std::to_string(n) + " elements, maximum is " +
                          std::to_string(kMaxCarrier));
  }
}

void check_unique_labels(const std::vector<std::string>& labels) {
  std::vector<std::string> sorted = labels;
  std::sort(sorted.begin(), sorted.end());
  auto dup = std::adjacent_find(sorted.begin(), sorted.end());
  if (dup != sorted.end()) {
    throw LocaleError(ErrorKind::InvalidInput, "duplicate label '" + *dup + "'", *dup);
  }
}

}  // namespace

// ---------------------------------------------------------------- Poset

Poset Poset::from_pairs(std::vector<std::string> labels,
                        const std::vector<std::pair<Elem, Elem>>& le_pairs) {
  check_carrier_size(labels.size());
  const int n = static_cast<int>(labels.size());
  std::vector<ElemSet> below(n);
  for (Elem i = 0; i < n; ++i) below[i].insert(i);
  for (auto [a, b] : le_pairs) {
    if (a < 0 || a >= n || b < 0 || b >= n) {
      throw LocaleError(ErrorKind::InvalidInput, "order pair refers to an unknown element");
    }
    below[b].insert(a);
  }
  // Warshall closure on down-sets.
  for (Elem k = 0; k < n; ++k) {
    for (Elem j = 0; j < n; ++j) {
      if (below[j].contains(k)) below[j] |= below[k];
    }
  }
  return from_downsets(std::move(labels), std::move(below));
}

Poset Poset::from_downsets(std::vector<std::string> labels, std::vector<ElemSet> below) {
  check_carrier_size(labels.size());
  check_unique_labels(labels);
  const int n = static_cast<int>(labels.size());
  if (static_cast<int>(below.size()) != n) {
    throw LocaleError(ErrorKind::InvalidInput, "order matrix size does not match labels");
  }
  for (Elem a = 0; a < n; ++a) {
    if (!below[a].contains(a)) {
      throw LocaleError(ErrorKind::NotAPoset, "reflexivity fails", labels[a]);
    }
    for (Elem b = 0; b < n; ++b) {
      if (a != b && below[a].contains(b) && below[b].contains(a)) {
        throw LocaleError(ErrorKind::NotAPoset, "antisymmetry fails (cycle in the order)",
                          labels[b] + " <= " + labels[a] + " <= " + labels[b]);
      }
      if (below[a].contains(b) && !below[b].subset_of(below[a])) {
        throw LocaleError(ErrorKind::NotAPoset, "transitivity fails",
                          labels[b] + " <= " + labels[a]);
      }
    }
  }
  Poset p;
  p.labels_ = std::move(labels);
  p.below_ = std::move(below);
  p.above_.assign(n, ElemSet{});
  for (Elem b = 0; b < n; ++b) p.below_[b].for_each([&](Elem a) { p.above_[a].insert(b); });
  return p;
}

Elem Poset::index_of(std::string_view label) const {
  for (Elem i = 0; i < size(); ++i) {
    if (labels_[i] == label) return i;
  }
  return -1;
}

std::vector<std::pair<Elem, Elem>> Poset::covers() const {
  std::vector<std::pair<Elem, Elem>> out;
  for (Elem a = 0; a < size(); ++a) {
    for (Elem b = 0; b < size(); ++b) {
      if (a == b || !le(a, b)) continue;
      // a < b is a cover iff the open interval is empty
      ElemSet between = up(a) & down(b);
      if (between.size() == 2) out.emplace_back(a, b);
    }
  }
  return out;
}

int Poset::rank(Elem a) const {
  int best = 0;
  down(a).for_each([&](Elem b) {
    if (b != a) best = std::max(best, rank(b) + 1);
  });
  return best;
}

// ---------------------------------------------------------------- Frame

Elem Frame::meet_all(ElemSet s) const {
  Elem acc = top_;
  s.for_each([&](Elem e) { acc = meet(acc, e); });
  return acc;
}

Elem Frame::join_all(ElemSet s) const {
  Elem acc = bottom_;
  s.for_each([&](Elem e) { acc = join(acc, e); });
  return acc;
}

std::string Frame::render(ElemSet s) const {
  std::string out = "{";
  bool first = true;
  s.for_each([&](Elem e) {
    if (!first) out += ",";
    out += label(e);
    first = false;
  });
  return out + "}";
}

Frame build_frame(const Poset& poset) {
  const int n = poset.size();
  if (n == 0) throw LocaleError(ErrorKind::NoMeetOrJoin, "empty carrier has no top or bottom");
  const auto& lab = poset.labels();

  // Greatest element of `s` w.r.t. the order, if it exists.
  auto greatest = [&](ElemSet s) -> Elem {
    Elem found = -1;
    s.for_each([&](Elem e) {
      if (found < 0 && s.subset_of(poset.down(e))) found = e;
    });
    return found;
  };
  auto least = [&](ElemSet s) -> Elem {
    Elem found = -1;
    s.for_each([&](Elem e) {
      if (found < 0 && s.subset_of(poset.up(e))) found = e;
    });
    return found;
  };

  Frame f;
  f.poset_ = poset;
  f.meet_.assign(static_cast<std::size_t>(n) * n, 0);
  f.join_.assign(static_cast<std::size_t>(n) * n, 0);
  f.imp_.assign(static_cast<std::size_t>(n) * n, 0);

  const ElemSet all = ElemSet::full(n);
  f.top_ = greatest(all);
  f.bottom_ = least(all);
  if (f.top_ < 0) throw LocaleError(ErrorKind::NoMeetOrJoin, "no top element (empty meet)");
  if (f.bottom_ < 0) throw LocaleError(ErrorKind::NoMeetOrJoin, "no bottom element (empty join)");

  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      const Elem m = greatest(poset.down(a) & poset.down(b));
      const Elem j = least(poset.up(a) & poset.up(b));
      if (m < 0) {
        throw LocaleError(ErrorKind::NoMeetOrJoin, "pair has no meet", lab[a] + "," + lab[b]);
      }
      if (j < 0) {
        throw LocaleError(ErrorKind::NoMeetOrJoin, "pair has no join", lab[a] + "," + lab[b]);
      }
      f.meet_[a * n + b] = m;
      f.join_[a * n + b] = j;
    }
  }

  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      for (Elem c = 0; c < n; ++c) {
        const Elem lhs = f.meet(a, f.join(b, c));
        const Elem rhs = f.join(f.meet(a, b), f.meet(a, c));
        if (lhs != rhs) {
          throw LocaleError(ErrorKind::NotDistributive,
                            "a^(b v c) != (a^b) v (a^c)",
                            "a=" + lab[a] + " b=" + lab[b] + " c=" + lab[c]);
        }
      }
    }
  }

  // a -> b is the largest c with c ^ a <= b; in a distributive lattice the
  // join of all such c is again such a c.
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      ElemSet candidates;
      for (Elem c = 0; c < n; ++c) {
        if (poset.le(f.meet(c, a), b)) candidates.insert(c);
      }
      f.imp_[a * n + b] = f.join_all(candidates);
    }
  }
  return f;
}

Frame build_frame(std::vector<std::string> labels,
                  const std::vector<std::pair<std::string, std::string>>& le_pairs) {
  std::vector<std::pair<Elem, Elem>> pairs;
  pairs.reserve(le_pairs.size());
  auto find = [&](const std::string& l) {
    auto it = std::find(labels.begin(), labels.end(), l);
    if (it == labels.end()) {
      throw LocaleError(ErrorKind::InvalidInput, "order pair names unknown element '" + l + "'", l);
    }
    return static_cast<Elem>(it - labels.begin());
  };
  for (const auto& [a, b] : le_pairs) pairs.emplace_back(find(a), find(b));
  return build_frame(Poset::from_pairs(std::move(labels), pairs));
}

Elem heyting(const Frame& frame, Elem a, Elem b) { return frame.implies(a, b); }

Elem pseudocomplement(const Frame& frame, Elem a) { return frame.implies(a, frame.bottom()); }

namespace {

std::string render_subset(const std::vector<std::string>& names, ElemSet s) {
  std::string out = "{";
  bool first = true;
  s.for_each([&](Elem e) {
    if (!first) out += ",";
    out += names[e];
    first = false;
  });
  return out + "}";
}

/// Frame on a family of subsets ordered by inclusion; element i is family[i].
Frame inclusion_frame(const std::vector<std::string>& names, const std::vector<ElemSet>& family) {
  const int n = static_cast<int>(family.size());
  check_carrier_size(family.size());
  std::vector<std::string> labels;
  labels.reserve(n);
  for (ElemSet s : family) labels.push_back(render_subset(names, s));
  std::vector<ElemSet> below(n);
  for (Elem i = 0; i < n; ++i) {
    for (Elem j = 0; j < n; ++j) {
      if (family[j].subset_of(family[i])) below[i].insert(j);
    }
  }
  return build_frame(Poset::from_downsets(std::move(labels), std::move(below)));
}

std::vector<ElemSet> downsets_of(const Poset& poset) {
  std::vector<ElemSet> out;
  const int n = poset.size();
  if (n > 24) throw LocaleError(ErrorKind::SizeLimit, "downset enumeration limited to 24 points");
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
    ElemSet s{bits};
    bool closed = true;
    s.for_each([&](Elem e) { closed = closed && poset.down(e).subset_of(s); });
    if (closed) out.push_back(s);
  }
  std::sort(out.begin(), out.end(), CanonicalLess{});
  return out;
}

}  // namespace

Frame downset_frame(const Poset& poset) { return inclusion_frame(poset.labels(), downsets_of(poset)); }

FiniteSpace downset_space(const Poset& poset) { return FiniteSpace(poset.labels(), downsets_of(poset)); }

// ---------------------------------------------------------------- FiniteSpace

FiniteSpace::FiniteSpace(std::vector<std::string> points, std::vector<ElemSet> opens) {
  check_carrier_size(points.size());
  check_unique_labels(points);
  const int n = static_cast<int>(points.size());
  const ElemSet all = ElemSet::full(n);
  std::sort(opens.begin(), opens.end(), CanonicalLess{});
  opens.erase(std::unique(opens.begin(), opens.end()), opens.end());
  for (ElemSet u : opens) {
    if (!u.subset_of(all)) throw LocaleError(ErrorKind::InvalidInput, "open set names an unknown point");
  }
  auto has = [&](ElemSet u) { return std::binary_search(opens.begin(), opens.end(), u, CanonicalLess{}); };
  if (!has(ElemSet{})) throw LocaleError(ErrorKind::InvalidInput, "open family lacks the empty set");
  if (!has(all)) throw LocaleError(ErrorKind::InvalidInput, "open family lacks the whole space");
  for (ElemSet u : opens) {
    for (ElemSet v : opens) {
      if (!has(u | v)) {
        throw LocaleError(ErrorKind::InvalidInput, "open family not closed under union",
                          render_subset(points, u) + " | " + render_subset(points, v));
      }
      if (!has(u & v)) {
        throw LocaleError(ErrorKind::InvalidInput, "open family not closed under intersection",
                          render_subset(points, u) + " & " + render_subset(points, v));
      }
    }
  }
  points_ = std::move(points);
  opens_ = std::move(opens);
}

int FiniteSpace::open_index(ElemSet u) const {
  auto it = std::lower_bound(opens_.begin(), opens_.end(), u, CanonicalLess{});
  if (it == opens_.end() || *it != u) return -1;
  return static_cast<int>(it - opens_.begin());
}

Elem FiniteSpace::point_index(std::string_view label) const {
  for (Elem i = 0; i < size(); ++i) {
    if (points_[i] == label) return i;
  }
  return -1;
}

std::string FiniteSpace::render(ElemSet s) const { return render_subset(points_, s); }

Frame frame_of_space(const FiniteSpace& space) { return inclusion_frame(space.points(), space.opens()); }

// ---------------------------------------------------------------- isomorphism

bool order_isomorphic(const Poset& a, const Poset& b) {
  const int n = a.size();
  if (n != b.size()) return false;
  auto signature = [](const Poset& p, Elem e) { return std::pair{p.down(e).size(), p.up(e).size()}; };
  std::vector<Elem> image(n, -1);
  ElemSet used;
  std::function<bool(Elem)> extend = [&](Elem i) -> bool {
    if (i == n) return true;
    for (Elem j = 0; j < n; ++j) {
      if (used.contains(j) || signature(a, i) != signature(b, j)) continue;
      bool consistent = true;
      for (Elem k = 0; k < i && consistent; ++k) {
        consistent = a.le(k, i) == b.le(image[k], j) && a.le(i, k) == b.le(j, image[k]);
      }
      if (!consistent) continue;
      image[i] = j;
      used.insert(j);
      if (extend(i + 1)) return true;
      used.erase(j);
    }
    return false;
  };
  return extend(0);
}

}  // namespace localelab
