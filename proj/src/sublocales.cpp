#include "localelab/sublocales.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "localelab/kernels.hpp"

namespace localelab {

int default_size_limit() {
  if (const char* env = std::getenv("LOCALELAB_SIZE_LIMIT")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<int>(std::min<long>(v, 30));
  }
  return 12;
}

namespace {

void require_host(const FramePtr& expected, const FramePtr& actual) {
  if (!same_frame(expected, actual)) throw LocaleError(ErrorKind::HostMismatch, "sublocale hosted in a different frame");
}

LawReport meet_closed(const Frame& f, ElemSet a) {
  if (!a.contains(f.top())) return LawReport::fail("contains top", f.label(f.top()));
  LawReport out;
  a.for_each([&](Elem s) {
    a.for_each([&](Elem t) {
      if (out && !a.contains(f.meet(s, t))) {
        out = LawReport::fail("closed under meets",
                              f.label(s) + "^" + f.label(t) + "=" + f.label(f.meet(s, t)));
      }
    });
  });
  return out;
}

}  // namespace

LawReport is_sublocale(const Frame& f, ElemSet a) {
  if (!a.subset_of(f.all())) throw LocaleError(ErrorKind::InvalidInput, "subset names an unknown element");
  if (auto r = meet_closed(f, a); !r) return r;
  for (Elem s : a.members()) {
    for (Elem x = 0; x < f.size(); ++x) {
      const Elem v = f.implies(x, s);
      if (!a.contains(v)) {
        return LawReport::fail("closed under x->s",
                               f.label(x) + "->" + f.label(s) + "=" + f.label(v) + " not in " + f.render(a));
      }
    }
  }
  return LawReport::ok();
}

std::vector<ElemSet> sloc_core_trace(const Frame& f, ElemSet a) {
  if (auto r = meet_closed(f, a); !r) throw LocaleError(ErrorKind::NotMeetClosed, r.law, r.witness);
  std::vector<ElemSet> trace{a};
  for (;;) {
    const ElemSet cur = trace.back();
    ElemSet next;
    cur.for_each([&](Elem s) {
      bool keep = true;
      for (Elem x = 0; x < f.size() && keep; ++x) keep = cur.contains(f.implies(x, s));
      if (keep) next.insert(s);
    });
    if (next == cur) return trace;
    trace.push_back(next);
  }
}

Sublocale sloc_core(const FramePtr& frame, ElemSet a) { return {frame, sloc_core_trace(*frame, a).back()}; }

ElemSet meet_closure(const Frame& f, ElemSet generators) {
  ElemSet acc = generators;
  acc.insert(f.top());
  for (;;) {
    ElemSet next = acc;
    acc.for_each([&](Elem s) { acc.for_each([&](Elem t) { next.insert(f.meet(s, t)); }); });
    if (next == acc) return acc;
    acc = next;
  }
}

ElemSet join_closure(const Frame& f, ElemSet generators) {
  ElemSet acc = generators;
  acc.insert(f.bottom());
  for (;;) {
    ElemSet next = acc;
    acc.for_each([&](Elem s) { acc.for_each([&](Elem t) { next.insert(f.join(s, t)); }); });
    if (next == acc) return acc;
    acc = next;
  }
}

Sublocale sub_join(const FramePtr& frame, const std::vector<Sublocale>& family) {
  ElemSet u;
  for (const auto& s : family) {
    require_host(frame, s.host);
    u |= s.members;
  }
  return {frame, meet_closure(*frame, u)};
}

Sublocale closed_sub(const FramePtr& frame, Elem a) { return {frame, frame->up(a)}; }

Sublocale open_sub(const FramePtr& frame, Elem a) {
  ElemSet s;
  for (Elem x = 0; x < frame->size(); ++x) s.insert(frame->implies(a, x));
  return {frame, s};
}

// ---------------------------------------------------------------- lattice

int SublocaleLattice::index_of(ElemSet s) const {
  auto it = std::lower_bound(subs_.begin(), subs_.end(), s, CanonicalLess{});
  if (it == subs_.end() || *it != s) return -1;
  return static_cast<int>(it - subs_.begin());
}

int SublocaleLattice::index_of(const Sublocale& s) const {
  require_host(host_, s.host);
  return index_of(s.members);
}

SublocaleLattice SublocaleLattice::assemble(const FramePtr& frame, std::vector<ElemSet> subs) {
  SublocaleLattice sl;
  sl.host_ = frame;
  sl.subs_ = std::move(subs);
  const int k = sl.size();
  const Frame& f = *frame;
  sl.meet_.assign(static_cast<std::size_t>(k) * k, -1);
  sl.join_.assign(static_cast<std::size_t>(k) * k, -1);
  for (int a = 0; a < k; ++a) {
    for (int b = a; b < k; ++b) {
      const int m = sl.index_of(sl.subs_[a] & sl.subs_[b]);
      const int j = sl.index_of(meet_closure(f, sl.subs_[a] | sl.subs_[b]));
      if (m < 0 || j < 0) {
        throw LocaleError(ErrorKind::NotASublocale, "sublocale family not closed under meet/join",
                          sl.render(a) + "," + sl.render(b));
      }
      sl.meet_[a * k + b] = sl.meet_[b * k + a] = m;
      sl.join_[a * k + b] = sl.join_[b * k + a] = j;
    }
  }
  sl.open_.resize(f.size());
  sl.closed_.resize(f.size());
  for (Elem a = 0; a < f.size(); ++a) {
    sl.open_[a] = sl.index_of(open_sub(frame, a).members);
    sl.closed_[a] = sl.index_of(closed_sub(frame, a).members);
  }
  sl.complement_.assign(k, -1);
  for (int a = 0; a < k; ++a) {
    for (int b = 0; b < k; ++b) {
      if (sl.meet(a, b) == sl.bottom() && sl.join(a, b) == sl.top()) {
        sl.complement_[a] = b;
        break;
      }
    }
  }
  return sl;
}

namespace {

void check_limit(const Frame& f, int size_limit) {
  if (f.size() > size_limit) {
    throw LocaleError(ErrorKind::SizeLimit, "frame has " + std::to_string(f.size()) +
                                                " elements, sublocale enumeration bound is " +
                                                std::to_string(size_limit));
  }
}

}  // namespace

SublocaleLattice enumerate_sublocales(const FramePtr& frame, int size_limit) {
  check_limit(*frame, size_limit);
  return SublocaleLattice::assemble(frame, kernels::sublocale_scan(*frame));
}

SublocaleLattice enumerate_sublocales_serial(const FramePtr& frame, int size_limit) {
  check_limit(*frame, size_limit);
  return SublocaleLattice::assemble(frame, kernels::sublocale_scan_serial(*frame));
}

std::optional<Sublocale> complement(const SublocaleLattice& lattice, const Sublocale& s) {
  const int i = lattice.index_of(s);
  if (i < 0) throw LocaleError(ErrorKind::NotASublocale, "not a member of the lattice", lattice.host()->render(s.members));
  if (auto c = lattice.complement(i)) return lattice.sublocale(*c);
  return std::nullopt;
}

int least_sublocale_containing(const SublocaleLattice& lattice, ElemSet set) {
  ElemSet acc = lattice.host()->all();
  for (ElemSet s : lattice.all()) {
    if (set.subset_of(s)) acc &= s;
  }
  return lattice.index_of(acc);
}

// ---------------------------------------------------------------- images

namespace {

ElemSet set_image(const LocalicMap& f, ElemSet s) {
  ElemSet out;
  s.for_each([&](Elem x) { out.insert(f(x)); });
  return out;
}

}  // namespace

ElemSet set_preimage(const LocalicMap& f, ElemSet t) {
  ElemSet out;
  for (Elem x = 0; x < f.source->size(); ++x) {
    if (t.contains(f(x))) out.insert(x);
  }
  return out;
}

Sublocale image(const LocalicMap& f, const Sublocale& s) {
  require_host(f.source, s.host);
  const ElemSet img = set_image(f, s.members);
  if (auto r = is_sublocale(*f.target, img); !r) {
    throw LocaleError(ErrorKind::NotASublocale, "image of a sublocale is not a sublocale: " + r.law, r.witness);
  }
  return {f.target, img};
}

Sublocale preimage(const LocalicMap& f, const Sublocale& t) {
  require_host(f.target, t.host);
  return sloc_core(f.source, set_preimage(f, t.members));
}

InducedMaps induce(const LocalicMap& f, SublocaleLatticePtr source, SublocaleLatticePtr target) {
  require_host(f.source, source->host());
  require_host(f.target, target->host());
  InducedMaps out{f, source, target, {}, {}};
  out.image.resize(source->size());
  for (int s = 0; s < source->size(); ++s) {
    out.image[s] = target->index_of(image(f, source->sublocale(s)).members);
  }
  out.preimage.resize(target->size());
  for (int t = 0; t < target->size(); ++t) {
    out.preimage[t] = source->index_of(preimage(f, target->sublocale(t)).members);
  }
  return out;
}

PairCheck check_adjunction(const InducedMaps& maps) {
  PairCheck out;
  const auto& sl = *maps.source;
  const auto& tl = *maps.target;
  for (int s = 0; s < sl.size(); ++s) {
    for (int t = 0; t < tl.size(); ++t) {
      ++out.pairs;
      const bool lhs = tl.le(maps.img(s), t);
      const bool rhs = sl.le(s, maps.pre(t));
      if (lhs != rhs && out.report) {
        out.report = LawReport::fail("f[S] <= T iff S <= f_{-1}[T]", "S=" + sl.render(s) + " T=" + tl.render(t));
      }
    }
  }
  return out;
}

PairCheck check_adjunction(const LocalicMap& f, int size_limit) {
  auto sl = share(enumerate_sublocales(f.source, size_limit));
  auto tl = share(enumerate_sublocales(f.target, size_limit));
  return check_adjunction(induce(f, sl, tl));
}

LawReport generation_check(const SublocaleLattice& lattice, int s) {
  const Frame& f = *lattice.host();
  ElemSet acc = f.all();
  for (Elem x = 0; x < f.size(); ++x) {
    for (Elem y = 0; y < f.size(); ++y) {
      const int j = lattice.join(lattice.open(x), lattice.closed(y));
      if (lattice.le(s, j)) acc &= lattice.members(j);
    }
  }
  if (acc != lattice.members(s)) {
    return LawReport::fail("S = meet of o(x) v c(y) above S",
                           "S=" + lattice.render(s) + " intersection=" + f.render(acc));
  }
  return LawReport::ok();
}

}  // namespace localelab
