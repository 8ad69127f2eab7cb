#include "localelab/frame_maps.hpp"

#include <functional>

namespace localelab {

namespace {

std::string pair_witness(const Frame& f, Elem a, Elem b) { return f.label(a) + "," + f.label(b); }

void require_total(const Frame& source, const Frame& target, const std::vector<Elem>& map) {
  if (static_cast<int>(map.size()) != source.size()) {
    throw LocaleError(ErrorKind::InvalidInput, "map is not total on its source");
  }
  for (Elem v : map) {
    if (v < 0 || v >= target.size()) throw LocaleError(ErrorKind::InvalidInput, "map value out of range");
  }
}

}  // namespace

LawReport check_frame_hom(const Frame& source, const Frame& target, const std::vector<Elem>& map) {
  require_total(source, target, map);
  if (map[source.top()] != target.top()) return LawReport::fail("preserves top", source.label(source.top()));
  if (map[source.bottom()] != target.bottom()) {
    return LawReport::fail("preserves bottom", source.label(source.bottom()));
  }
  for (Elem a = 0; a < source.size(); ++a) {
    for (Elem b = a + 1; b < source.size(); ++b) {
      if (map[source.meet(a, b)] != target.meet(map[a], map[b])) {
        return LawReport::fail("preserves binary meets", pair_witness(source, a, b));
      }
      if (map[source.join(a, b)] != target.join(map[a], map[b])) {
        return LawReport::fail("preserves binary joins", pair_witness(source, a, b));
      }
    }
  }
  return LawReport::ok();
}

FrameHom make_frame_hom(FramePtr source, FramePtr target, std::vector<Elem> map) {
  auto report = check_frame_hom(*source, *target, map);
  if (!report) throw LocaleError(ErrorKind::InvalidInput, "not a frame hom: " + report.law, report.witness);
  return FrameHom{std::move(source), std::move(target), std::move(map)};
}

LocalicMap right_adjoint(const FrameHom& h) {
  const Frame& m = *h.source;
  const Frame& l = *h.target;
  std::vector<Elem> f(l.size());
  for (Elem x = 0; x < l.size(); ++x) {
    ElemSet below;
    for (Elem y = 0; y < m.size(); ++y) {
      if (l.le(h(y), x)) below.insert(y);
    }
    f[x] = m.join_all(below);
  }
  return LocalicMap{h.target, h.source, std::move(f), h};
}

FrameHom left_adjoint(const FramePtr& source, const FramePtr& target, const std::vector<Elem>& f) {
  const Frame& l = *source;
  const Frame& m = *target;
  require_total(l, m, f);
  if (f[l.top()] != m.top()) throw LocaleError(ErrorKind::NotLocalic, "top is not preserved", l.label(l.top()));
  for (Elem a = 0; a < l.size(); ++a) {
    for (Elem b = a + 1; b < l.size(); ++b) {
      if (f[l.meet(a, b)] != m.meet(f[a], f[b])) {
        throw LocaleError(ErrorKind::NotLocalic, "binary meets are not preserved", pair_witness(l, a, b));
      }
    }
  }
  std::vector<Elem> h(m.size());
  for (Elem y = 0; y < m.size(); ++y) {
    ElemSet above;
    for (Elem x = 0; x < l.size(); ++x) {
      if (m.le(y, f[x])) above.insert(x);
    }
    h[y] = l.meet_all(above);
  }
  auto hom = check_frame_hom(m, l, h);
  if (!hom) {
    throw LocaleError(ErrorKind::NotLocalic, "left adjoint fails: " + hom.law, hom.witness);
  }
  for (Elem y = 0; y < m.size(); ++y) {
    for (Elem x = 0; x < l.size(); ++x) {
      if (l.le(h[y], x) != m.le(y, f[x])) {
        throw LocaleError(ErrorKind::NotLocalic, "adjunction h(m) <= x <=> m <= f(x) fails",
                          "m=" + m.label(y) + " x=" + l.label(x));
      }
    }
  }
  return FrameHom{target, source, std::move(h)};
}

LocalicMap make_localic_map(FramePtr source, FramePtr target, std::vector<Elem> map) {
  FrameHom h = left_adjoint(source, target, map);
  return LocalicMap{std::move(source), std::move(target), std::move(map), std::move(h)};
}

LocalicMap identity_localic(const FramePtr& frame) {
  std::vector<Elem> id(frame->size());
  for (Elem i = 0; i < frame->size(); ++i) id[i] = i;
  FrameHom h{frame, frame, id};
  return LocalicMap{frame, frame, std::move(id), std::move(h)};
}

LocalicMap compose_localic(const LocalicMap& g, const LocalicMap& f) {
  if (!same_frame(f.target, g.source)) {
    throw LocaleError(ErrorKind::DomainMismatch, "codomain of f is not the domain of g");
  }
  std::vector<Elem> gf(f.source->size());
  for (Elem x = 0; x < f.source->size(); ++x) gf[x] = g(f(x));
  // left adjoints compose in the opposite order: (g f)^* = f^* g^*
  std::vector<Elem> h(g.target->size());
  for (Elem z = 0; z < g.target->size(); ++z) h[z] = f.left_adjoint(g.left_adjoint(z));
  return LocalicMap{f.source, g.target, std::move(gf), FrameHom{g.target, f.source, std::move(h)}};
}

FrameHom omega_of_map(const ContinuousMap& c) {
  return omega_of_map(c, share(frame_of_space(c.target)), share(frame_of_space(c.source)));
}

FrameHom omega_of_map(const ContinuousMap& c, FramePtr omega_target, FramePtr omega_source) {
  const auto& x = c.source;
  const auto& y = c.target;
  if (static_cast<int>(c.point_map.size()) != x.size()) {
    throw LocaleError(ErrorKind::InvalidInput, "point map is not total");
  }
  for (Elem p : c.point_map) {
    if (p < 0 || p >= y.size()) throw LocaleError(ErrorKind::InvalidInput, "point map value out of range");
  }
  std::vector<Elem> map(y.opens().size());
  for (std::size_t u = 0; u < y.opens().size(); ++u) {
    ElemSet pre;
    for (Elem p = 0; p < x.size(); ++p) {
      if (y.opens()[u].contains(c.point_map[p])) pre.insert(p);
    }
    const int idx = x.open_index(pre);
    if (idx < 0) {
      throw LocaleError(ErrorKind::NotContinuous, "preimage of an open is not open", y.render(y.opens()[u]));
    }
    map[u] = idx;
  }
  return FrameHom{std::move(omega_target), std::move(omega_source), std::move(map)};
}

std::vector<FrameHom> enumerate_frame_homs(const FramePtr& source, const FramePtr& target, std::size_t limit) {
  const Frame& m = *source;
  const Frame& l = *target;
  std::vector<FrameHom> out;
  std::vector<Elem> map(m.size(), -1);
  map[m.top()] = l.top();
  map[m.bottom()] = l.bottom();
  if (m.top() == m.bottom() && l.top() != l.bottom()) return out;

  std::function<void(Elem)> extend = [&](Elem i) {
    if (limit > 0 && out.size() >= limit) return;
    if (i == m.size()) {
      if (check_frame_hom(m, l, map)) out.push_back(FrameHom{source, target, map});
      return;
    }
    if (i == m.top() || i == m.bottom()) {
      extend(i + 1);
      return;
    }
    for (Elem v = 0; v < l.size(); ++v) {
      bool ok = true;
      // prune: monotone w.r.t. every already-assigned element
      for (Elem k = 0; k < m.size() && ok; ++k) {
        if (map[k] < 0 || k == i) continue;
        if (m.le(k, i) && !l.le(map[k], v)) ok = false;
        if (m.le(i, k) && !l.le(v, map[k])) ok = false;
      }
      if (!ok) continue;
      map[i] = v;
      extend(i + 1);
      map[i] = -1;
    }
  };
  extend(0);
  return out;
}

}  // namespace localelab
