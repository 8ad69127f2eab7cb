#include "localelab/points.hpp"

#include <algorithm>

#include "localelab/kernels.hpp"

namespace localelab {

namespace {

void check_limit(const Frame& f) {
  if (f.size() > kPointScanLimit) {
    throw LocaleError(ErrorKind::SizeLimit, "point enumeration is limited to frames of " +
                                                std::to_string(kPointScanLimit) + " elements");
  }
}

std::vector<Point> wrap(const FramePtr& frame, const std::vector<ElemSet>& filters) {
  std::vector<Point> out;
  out.reserve(filters.size());
  for (ElemSet s : filters) out.push_back({frame, s});
  return out;
}

}  // namespace

std::vector<Point> points_of(const FramePtr& frame) {
  check_limit(*frame);
  return wrap(frame, kernels::point_scan(*frame));
}

std::vector<Point> points_of_serial(const FramePtr& frame) {
  check_limit(*frame);
  return wrap(frame, kernels::point_scan_serial(*frame));
}

std::string point_label(const Point& p) { return "p[" + p.host->label(p.host->meet_all(p.filter)) + "]"; }

FiniteSpace pt_space(const FramePtr& frame) {
  const auto pts = points_of(frame);
  std::vector<std::string> names;
  for (const auto& p : pts) names.push_back(point_label(p));
  std::vector<ElemSet> opens;
  for (Elem a = 0; a < frame->size(); ++a) {
    ElemSet sigma;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      if (pts[i](a)) sigma.insert(static_cast<Elem>(i));
    }
    opens.push_back(sigma);
  }
  return FiniteSpace(std::move(names), std::move(opens));
}

FrameHom spatialization(const FramePtr& frame) {
  const auto pts = points_of(frame);
  const FiniteSpace space = pt_space(frame);
  std::vector<Elem> map(frame->size());
  for (Elem a = 0; a < frame->size(); ++a) {
    ElemSet sigma;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      if (pts[i](a)) sigma.insert(static_cast<Elem>(i));
    }
    map[a] = space.open_index(sigma);
  }
  return make_frame_hom(frame, share(frame_of_space(space)), std::move(map));
}

SpatialReport is_spatial(const FramePtr& frame) {
  const auto pts = points_of(frame);
  SpatialReport r;
  for (Elem a = 0; a < frame->size(); ++a) {
    for (Elem b = 0; b < frame->size(); ++b) {
      if (frame->le(a, b)) continue;
      ++r.pairs;
      const bool separated = std::any_of(pts.begin(), pts.end(), [&](const Point& p) { return p(a) && !p(b); });
      if (!separated && r.spatial) {
        r.spatial = false;
        r.a = a;
        r.b = b;
      }
    }
  }
  return r;
}

bool is_injective(const FrameHom& h) {
  std::vector<Elem> sorted = h.map;
  std::sort(sorted.begin(), sorted.end());
  return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

Sobrification sobrification(const FiniteSpace& space) {
  auto omega = share(frame_of_space(space));
  const auto pts = points_of(omega);
  Sobrification out{pt_space(omega), std::vector<Elem>(space.size(), -1), LawReport::ok()};
  const auto two = share(build_frame({"0", "1"}, {{"0", "1"}}));
  std::vector<Elem> two_map(omega->size());
  for (Elem x = 0; x < space.size(); ++x) {
    // f_x(U) = 1 iff x in U; element i of Omega(X) is space.opens()[i]
    ElemSet filter;
    for (Elem u = 0; u < omega->size(); ++u) {
      if (space.opens()[u].contains(x)) filter.insert(u);
    }
    for (Elem u = 0; u < omega->size(); ++u) two_map[u] = filter.contains(u) ? 1 : 0;
    if (auto r = check_frame_hom(*omega, *two, two_map); !r && out.validation) {
      out.validation = LawReport::fail("f_x is a frame map: " + r.law, space.points()[x]);
    }
    auto it = std::find_if(pts.begin(), pts.end(), [&](const Point& p) { return p.filter == filter; });
    if (it == pts.end()) {
      if (out.validation) out.validation = LawReport::fail("f_x is a point of Omega(X)", space.points()[x]);
      continue;
    }
    out.point_map[x] = static_cast<Elem>(it - pts.begin());
  }
  if (out.validation) {
    try {
      ContinuousMap c{space, out.target, out.point_map};
      (void)omega_of_map(c);
    } catch (const LocaleError& e) {
      out.validation = LawReport::fail("sobrification map is continuous", e.witness());
    }
  }
  return out;
}

}  // namespace localelab
