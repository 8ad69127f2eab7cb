#pragma once

#include <vector>

#include "localelab/frame_maps.hpp"

namespace localelab {

/// Largest frame for which points are enumerated by brute force.
inline constexpr int kPointScanLimit = 16;

/// A frame map L -> 2, stored as the filter it sends to 1.
struct Point {
  FramePtr host;
  ElemSet filter;

  bool operator()(Elem a) const { return filter.contains(a); }
  bool operator==(const Point& o) const { return same_frame(host, o.host) && filter == o.filter; }
};

/// All points in canonical filter order. Throws SizeLimit above kPointScanLimit.
std::vector<Point> points_of(const FramePtr& frame);
std::vector<Point> points_of_serial(const FramePtr& frame);

/// Name of a point: "p[a]" where a is the least element of its filter.
std::string point_label(const Point& p);

/// pt(L): points with opens Sigma_a = { p : p(a) = 1 }.
FiniteSpace pt_space(const FramePtr& frame);

/// a |-> Sigma_a into Omega(pt(L)), validated as a frame hom.
FrameHom spatialization(const FramePtr& frame);

struct SpatialReport {
  bool spatial = true;
  Elem a = -1, b = -1;  // a not <= b with no separating point
  int pairs = 0;        // non-<= pairs examined
};

SpatialReport is_spatial(const FramePtr& frame);

bool is_injective(const FrameHom& h);

struct Sobrification {
  FiniteSpace target;            // pt(Omega(X))
  std::vector<Elem> point_map;   // x |-> f_x
  LawReport validation;          // every f_x a frame map, and the map continuous
};

Sobrification sobrification(const FiniteSpace& space);

}  // namespace localelab
