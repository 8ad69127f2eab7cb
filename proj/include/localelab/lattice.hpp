#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "localelab/elemset.hpp"
#include "localelab/error.hpp"

namespace localelab {

/// Finite partial order on labelled elements 0..n-1.
class Poset {
 public:
  Poset() = default;

  /// Reflexive-transitive closure of `le_pairs`; throws NotAPoset on a cycle.
  static Poset from_pairs(std::vector<std::string> labels,
                          const std::vector<std::pair<Elem, Elem>>& le_pairs);

  /// `below[i]` must already be the full down-set of i.
  static Poset from_downsets(std::vector<std::string> labels, std::vector<ElemSet> below);

  int size() const { return static_cast<int>(labels_.size()); }
  bool le(Elem a, Elem b) const { return below_[b].contains(a); }
  ElemSet down(Elem a) const { return below_[a]; }
  ElemSet up(Elem a) const { return above_[a]; }

  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(Elem a) const { return labels_[a]; }
  Elem index_of(std::string_view label) const;

  /// Covering pairs (a, b): a < b with nothing strictly between.
  std::vector<std::pair<Elem, Elem>> covers() const;
  /// Length of the longest chain from a minimal element up to `a`.
  int rank(Elem a) const;

  bool operator==(const Poset& o) const { return labels_ == o.labels_ && below_ == o.below_; }

 private:
  std::vector<std::string> labels_;
  std::vector<ElemSet> below_;
  std::vector<ElemSet> above_;
};

/// Finite distributive lattice with its meet, join and Heyting tables.
/// Only obtainable through `build_frame` and friends, so every value is valid.
class Frame {
 public:
  const Poset& poset() const { return poset_; }
  int size() const { return poset_.size(); }
  Elem top() const { return top_; }
  Elem bottom() const { return bottom_; }

  bool le(Elem a, Elem b) const { return poset_.le(a, b); }
  Elem meet(Elem a, Elem b) const { return meet_[a * size() + b]; }
  Elem join(Elem a, Elem b) const { return join_[a * size() + b]; }
  /// a -> b
  Elem implies(Elem a, Elem b) const { return imp_[a * size() + b]; }

  ElemSet up(Elem a) const { return poset_.up(a); }
  ElemSet down(Elem a) const { return poset_.down(a); }
  ElemSet all() const { return ElemSet::full(size()); }

  /// Meet of a subset; the empty meet is top.
  Elem meet_all(ElemSet s) const;
  /// Join of a subset; the empty join is bottom.
  Elem join_all(ElemSet s) const;

  const std::vector<std::string>& labels() const { return poset_.labels(); }
  const std::string& label(Elem a) const { return poset_.label(a); }
  Elem index_of(std::string_view label) const { return poset_.index_of(label); }

  /// "{a,b,1}" with members in index order.
  std::string render(ElemSet s) const;

  bool operator==(const Frame& o) const { return poset_ == o.poset_; }

 private:
  friend Frame build_frame(const Poset& poset);

  Poset poset_;
  Elem top_ = 0;
  Elem bottom_ = 0;
  std::vector<Elem> meet_;
  std::vector<Elem> join_;
  std::vector<Elem> imp_;
};

/// Validates lattice and distributivity of an existing poset and fills the tables.
/// Throws NoMeetOrJoin or NotDistributive with a witness.
Frame build_frame(const Poset& poset);

/// Builds from labels and order pairs given by label.
Frame build_frame(std::vector<std::string> labels,
                  const std::vector<std::pair<std::string, std::string>>& le_pairs);

Elem heyting(const Frame& frame, Elem a, Elem b);
Elem pseudocomplement(const Frame& frame, Elem a);

/// Lattice of down-closed subsets of `poset` under inclusion.
Frame downset_frame(const Poset& poset);

/// Finite topological space given by its family of open sets.
class FiniteSpace {
 public:
  FiniteSpace() = default;
  /// Validates the open-set family; duplicates are merged and opens are
  /// stored in canonical (cardinality, bit pattern) order.
  FiniteSpace(std::vector<std::string> points, std::vector<ElemSet> opens);

  int size() const { return static_cast<int>(points_.size()); }
  const std::vector<std::string>& points() const { return points_; }
  const std::vector<ElemSet>& opens() const { return opens_; }
  /// Position of `u` in opens(), or -1 if not open.
  int open_index(ElemSet u) const;
  Elem point_index(std::string_view label) const;
  std::string render(ElemSet s) const;

  bool operator==(const FiniteSpace&) const = default;

 private:
  std::vector<std::string> points_;
  std::vector<ElemSet> opens_;
};

/// Omega(X): opens ordered by inclusion, element i is opens()[i].
Frame frame_of_space(const FiniteSpace& space);

/// The Alexandrov-style space whose opens are the downsets of `poset`.
FiniteSpace downset_space(const Poset& poset);

/// Order isomorphism test by exhaustive search over rank-compatible bijections.
bool order_isomorphic(const Poset& a, const Poset& b);

}  // namespace localelab
