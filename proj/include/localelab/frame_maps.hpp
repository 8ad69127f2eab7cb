#pragma once

#include <memory>
#include <vector>

#include "localelab/lattice.hpp"

namespace localelab {

using FramePtr = std::shared_ptr<const Frame>;

inline FramePtr share(Frame f) { return std::make_shared<const Frame>(std::move(f)); }

/// Same object, or structurally equal frames.
inline bool same_frame(const FramePtr& a, const FramePtr& b) { return a == b || (a && b && *a == *b); }

/// Map M -> L preserving top, bottom, binary meets and binary joins.
struct FrameHom {
  FramePtr source;
  FramePtr target;
  std::vector<Elem> map;

  Elem operator()(Elem m) const { return map[m]; }
  bool operator==(const FrameHom& o) const {
    return same_frame(source, o.source) && same_frame(target, o.target) && map == o.map;
  }
};

/// Meet-preserving map L -> M, always paired with its left adjoint M -> L.
struct LocalicMap {
  FramePtr source;
  FramePtr target;
  std::vector<Elem> map;
  FrameHom left_adjoint;

  Elem operator()(Elem x) const { return map[x]; }
  bool operator==(const LocalicMap& o) const {
    return same_frame(source, o.source) && same_frame(target, o.target) && map == o.map;
  }
};

/// Pass, or the first violated law with a witness.
LawReport check_frame_hom(const Frame& source, const Frame& target, const std::vector<Elem>& map);

/// Validated construction; throws InvalidInput when `map` is not a frame hom.
FrameHom make_frame_hom(FramePtr source, FramePtr target, std::vector<Elem> map);

/// f(x) = join{ m : h(m) <= x }.
LocalicMap right_adjoint(const FrameHom& h);

/// h(m) = meet{ x : m <= f(x) }. Throws NotLocalic (meet, top, hom or
/// adjunction witness) unless `f` is the right adjoint of a frame hom.
FrameHom left_adjoint(const FramePtr& source, const FramePtr& target, const std::vector<Elem>& f);

/// Validated localic map L -> M from its element table.
LocalicMap make_localic_map(FramePtr source, FramePtr target, std::vector<Elem> map);

LocalicMap identity_localic(const FramePtr& frame);

/// g after f; throws DomainMismatch unless f.target == g.source.
LocalicMap compose_localic(const LocalicMap& g, const LocalicMap& f);

struct ContinuousMap {
  FiniteSpace source;
  FiniteSpace target;
  std::vector<Elem> point_map;
};

/// Omega(c): Omega(Y) -> Omega(X), U |-> c^{-1}[U]. Frames are built by
/// frame_of_space on each side. Throws NotContinuous with the offending open.
FrameHom omega_of_map(const ContinuousMap& c);
FrameHom omega_of_map(const ContinuousMap& c, FramePtr omega_target, FramePtr omega_source);

/// All frame homs source -> target, by backtracking over monotone maps.
/// Stops after `limit` results when limit > 0.
std::vector<FrameHom> enumerate_frame_homs(const FramePtr& source, const FramePtr& target,
                                           std::size_t limit = 0);

}  // namespace localelab
