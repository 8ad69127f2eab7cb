#pragma once

#include <memory>
#include <random>
#include <span>
#include <vector>

#include "localelab/interior_ops.hpp"

namespace localelab {

/// The complemented sublocales of one lattice, addressed by position.
struct ComplementedFragment {
  SublocaleLatticePtr lattice;
  std::vector<int> indices;   // position -> sublocale index
  std::vector<int> position;  // sublocale index -> position, -1 outside

  int size() const { return static_cast<int>(indices.size()); }
  bool contains(int sub) const { return position[sub] >= 0; }
  /// Whether the fragment is all of S_l(L).
  bool is_everything() const { return size() == lattice->size(); }
};

using FragmentPtr = std::shared_ptr<const ComplementedFragment>;

ComplementedFragment complemented_fragment(const SublocaleLatticePtr& lattice);
inline FragmentPtr share(ComplementedFragment f) { return std::make_shared<const ComplementedFragment>(std::move(f)); }

/// Table on fragment positions; entries are sublocale indices that must lie
/// in the fragment.
struct HOperator {
  FragmentPtr fragment;
  std::vector<int> table;

  /// h applied to a sublocale index of the fragment.
  int operator()(int sub) const { return table[fragment->position[sub]]; }
  bool operator==(const HOperator& o) const { return table == o.table; }
};

/// (h1) S ^ h(S) <= S (vacuous, reported as such), (h2) S <= T =>
/// S ^ h(S) <= T ^ h(T), (h3) h(L) = L.
AxiomReport check_h(const ComplementedFragment& fragment, const std::vector<int>& table);
inline AxiomReport check_h(const HOperator& op) { return check_h(*op.fragment, op.table); }

HOperator discrete_h(const FragmentPtr& fragment);
HOperator trivial_h(const FragmentPtr& fragment);
HOperator h_join(std::span<const HOperator> family);
HOperator h_meet(std::span<const HOperator> family);
OrderCheck h_le(const HOperator& a, const HOperator& b);  // witness is a sublocale index

/// Random valid operator: a random monotone-closure interior operator i on
/// the fragment, then h(S) drawn among X with S ^ X = i(S).
HOperator random_h(const FragmentPtr& fragment, std::mt19937_64& rng);

/// The interior part alone: a random monotone-closure operator with h(S) <= S.
HOperator random_contractive_h(const FragmentPtr& fragment, std::mt19937_64& rng);

/// Restriction of an interior operator whose values stay in the fragment.
HOperator restrict_to_fragment(const FragmentPtr& fragment, const InteriorOperator& op);

struct HContinuityReport {
  bool passed = true;
  int witness = -1;  // T in S_l(M)
  int checked = 0;
  std::vector<int> escapes;  // T whose preimage is not complemented
};

/// f_{-1}[T ^ h_M(T)] <= f_{-1}[T] ^ h_L(f_{-1}[T]) for T in the fragment of
/// M with complemented preimage; the rest are recorded as escapes.
HContinuityReport is_h_continuous(const InducedMaps& f, const HOperator& h_l, const HOperator& h_m);

struct HCompositionReport {
  CompositionReport result;
  int escapes = 0;
};

HCompositionReport check_h_composition(const InducedMaps& f, const InducedMaps& g, const HOperator& h_l,
                                       const HOperator& h_m, const HOperator& h_n);

struct HInitialResult {
  HOperator candidate;
  AxiomReport report;        // h1, h2, h3 and "f h-continuous"
  bool image_is_total = false;
  std::vector<int> escapes;  // sublocale indices S of L where f[S] or the preimage leaves a fragment
};

/// S |-> f_{-1}[h_M(f[S])] on the fragment of L. Escaped entries keep S.
HInitialResult initial_h(const InducedMaps& f, const HOperator& h_m, const FragmentPtr& source_fragment);

/// Least table k with k(S) = join{ f_{-1}[T ^ h_M(T)] : f_{-1}[T] <= S } and
/// k(L) = L; f is h-continuous for it and for anything above it.
HOperator least_h_continuous_source(const InducedMaps& f, const HOperator& h_m, const FragmentPtr& source_fragment);

struct HUniversalReport {
  UniversalReport result;
  int escapes = 0;
};

HUniversalReport check_h_universal(const InducedMaps& f, const HOperator& h_m, const FragmentPtr& l_fragment,
                                   const InducedMaps& g, const HOperator& h_n);

}  // namespace localelab
