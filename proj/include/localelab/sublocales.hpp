#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "localelab/frame_maps.hpp"

namespace localelab {

/// Enumeration bound: LOCALELAB_SIZE_LIMIT if set to a positive integer, else 12.
int default_size_limit();

struct Sublocale {
  FramePtr host;
  ElemSet members;

  bool operator==(const Sublocale& o) const { return same_frame(host, o.host) && members == o.members; }
};

/// Contains top, closed under binary meets, and x -> s stays inside.
LawReport is_sublocale(const Frame& frame, ElemSet a);

/// Greatest fixpoint of A |-> { a in A : x -> a in A for all x }.
/// Throws NotMeetClosed unless A contains top and is closed under meets.
Sublocale sloc_core(const FramePtr& frame, ElemSet a);
/// Per-iteration sets of the fixpoint computation, first entry is `a`.
std::vector<ElemSet> sloc_core_trace(const Frame& frame, ElemSet a);

/// Closure of the union under binary meets (plus top): the least sublocale
/// containing every member of the family. Throws HostMismatch.
Sublocale sub_join(const FramePtr& frame, const std::vector<Sublocale>& family);
ElemSet meet_closure(const Frame& frame, ElemSet generators);
/// Closure of a set under all joins, including the empty join.
ElemSet join_closure(const Frame& frame, ElemSet generators);

/// c(a) = up-set of a.
Sublocale closed_sub(const FramePtr& frame, Elem a);
/// o(a) = { a -> x : x in L }.
Sublocale open_sub(const FramePtr& frame, Elem a);

/// The coframe of all sublocales of a frame, indexed canonically by
/// (cardinality, bit pattern). Index 0 is {1}; the last index is L.
class SublocaleLattice {
 public:
  const FramePtr& host() const { return host_; }
  int size() const { return static_cast<int>(subs_.size()); }
  ElemSet members(int i) const { return subs_[i]; }
  Sublocale sublocale(int i) const { return {host_, subs_[i]}; }
  const std::vector<ElemSet>& all() const { return subs_; }
  /// Position of an exact member set, -1 if it is not a sublocale.
  int index_of(ElemSet s) const;
  int index_of(const Sublocale& s) const;

  int bottom() const { return 0; }
  int top() const { return size() - 1; }
  bool le(int a, int b) const { return subs_[a].subset_of(subs_[b]); }
  int meet(int a, int b) const { return meet_[a * size() + b]; }
  int join(int a, int b) const { return join_[a * size() + b]; }

  int open(Elem a) const { return open_[a]; }
  int closed(Elem a) const { return closed_[a]; }
  /// Complement in the coframe, if one exists.
  std::optional<int> complement(int s) const { return complement_[s] < 0 ? std::nullopt : std::optional<int>(complement_[s]); }

  std::string render(int i) const { return host_->render(subs_[i]); }

 private:
  friend SublocaleLattice enumerate_sublocales(const FramePtr&, int);
  friend SublocaleLattice enumerate_sublocales_serial(const FramePtr&, int);
  static SublocaleLattice assemble(const FramePtr& frame, std::vector<ElemSet> subs);

  FramePtr host_;
  std::vector<ElemSet> subs_;
  std::vector<int> meet_, join_;
  std::vector<int> open_, closed_;
  std::vector<int> complement_;
};

using SublocaleLatticePtr = std::shared_ptr<const SublocaleLattice>;

/// Throws SizeLimit when |L| exceeds `size_limit`.
SublocaleLattice enumerate_sublocales(const FramePtr& frame, int size_limit = default_size_limit());
/// Same result through the serial reference scan.
SublocaleLattice enumerate_sublocales_serial(const FramePtr& frame, int size_limit = default_size_limit());

inline SublocaleLatticePtr share(SublocaleLattice sl) {
  return std::make_shared<const SublocaleLattice>(std::move(sl));
}

std::optional<Sublocale> complement(const SublocaleLattice& lattice, const Sublocale& s);

/// Intersection of every enumerated sublocale containing `set`.
int least_sublocale_containing(const SublocaleLattice& lattice, ElemSet set);

/// Pointwise image f[S]; throws NotASublocale if the image is not one.
Sublocale image(const LocalicMap& f, const Sublocale& s);
/// sloc_core of the set preimage f^{-1}[T].
Sublocale preimage(const LocalicMap& f, const Sublocale& t);
ElemSet set_preimage(const LocalicMap& f, ElemSet t);

/// Image and preimage of a localic map as tables on sublocale indices.
struct InducedMaps {
  LocalicMap map;
  SublocaleLatticePtr source;  // S_l(L)
  SublocaleLatticePtr target;  // S_l(M)
  std::vector<int> image;      // S_l(L) -> S_l(M)
  std::vector<int> preimage;   // S_l(M) -> S_l(L)

  int img(int s) const { return image[s]; }
  int pre(int t) const { return preimage[t]; }
};

InducedMaps induce(const LocalicMap& f, SublocaleLatticePtr source, SublocaleLatticePtr target);

struct PairCheck {
  LawReport report;
  int pairs = 0;
};

/// f[S] <= T  <=>  S <= f_{-1}[T] for every pair.
PairCheck check_adjunction(const InducedMaps& maps);
PairCheck check_adjunction(const LocalicMap& f, int size_limit = default_size_limit());

/// Compares S with the intersection of all o(x) v c(y) containing it.
LawReport generation_check(const SublocaleLattice& lattice, int s);

}  // namespace localelab
