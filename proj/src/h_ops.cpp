#include "localelab/h_ops.hpp"

namespace localelab {

namespace {

void require_fragment(const FragmentPtr& expected, const FragmentPtr& actual) {
  const bool same = expected == actual ||
                    (expected && actual && same_frame(expected->lattice->host(), actual->lattice->host()) &&
                     expected->indices == actual->indices);
  if (!same) throw LocaleError(ErrorKind::HostMismatch, "h operator is hosted on a different fragment");
}

void require_lattice_of(const FragmentPtr& fragment, const SublocaleLatticePtr& lattice) {
  if (!same_frame(fragment->lattice->host(), lattice->host())) {
    throw LocaleError(ErrorKind::HostMismatch, "fragment belongs to a different frame");
  }
}

}  // namespace

ComplementedFragment complemented_fragment(const SublocaleLatticePtr& lattice) {
  ComplementedFragment f{lattice, {}, std::vector<int>(lattice->size(), -1)};
  for (int s = 0; s < lattice->size(); ++s) {
    if (lattice->complement(s)) {
      f.position[s] = f.size();
      f.indices.push_back(s);
    }
  }
  return f;
}

AxiomReport check_h(const ComplementedFragment& frag, const std::vector<int>& table) {
  const auto& sl = *frag.lattice;
  if (static_cast<int>(table.size()) != frag.size()) {
    throw LocaleError(ErrorKind::InvalidInput, "h table is not total on the fragment");
  }
  for (int v : table) {
    if (v < 0 || v >= sl.size() || !frag.contains(v)) {
      throw LocaleError(ErrorKind::InvalidInput, "h table value outside the complemented fragment");
    }
  }
  auto kept = [&](int p) { return sl.meet(frag.indices[p], table[p]); };

  AxiomResult h1{"h1", true, true, {}, {}};
  for (int p = 0; p < frag.size() && h1.passed; ++p) {
    if (!sl.le(kept(p), frag.indices[p])) {
      h1.passed = false;
      h1.witness_ids = {frag.indices[p]};
      h1.witness = "S=" + sl.render(frag.indices[p]);
    }
  }
  AxiomResult h2{"h2", true, false, {}, {}};
  for (int p = 0; p < frag.size() && h2.passed; ++p) {
    for (int q = 0; q < frag.size() && h2.passed; ++q) {
      const int s = frag.indices[p], t = frag.indices[q];
      if (sl.le(s, t) && !sl.le(kept(p), kept(q))) {
        h2.passed = false;
        h2.witness_ids = {s, t};
        h2.witness = sl.render(s) + " <= " + sl.render(t) + " but S^h(S)=" + sl.render(kept(p)) +
                     " not inside T^h(T)=" + sl.render(kept(q));
      }
    }
  }
  const int top_pos = frag.position[sl.top()];
  AxiomResult h3{"h3", top_pos >= 0 && table[top_pos] == sl.top(), false, {}, {}};
  if (!h3.passed) {
    h3.witness_ids = {sl.top()};
    h3.witness = top_pos >= 0 ? "h(L)=" + sl.render(table[top_pos]) + " != L" : "L not in fragment";
  }
  return AxiomReport{{h1, h2, h3}};
}

HOperator discrete_h(const FragmentPtr& fragment) { return {fragment, fragment->indices}; }

HOperator trivial_h(const FragmentPtr& fragment) {
  const auto& sl = *fragment->lattice;
  std::vector<int> t(fragment->size(), sl.bottom());
  t[fragment->position[sl.top()]] = sl.top();
  return {fragment, std::move(t)};
}

namespace {

template <class Combine>
HOperator pointwise(std::span<const HOperator> family, Combine combine) {
  if (family.empty()) throw LocaleError(ErrorKind::EmptyFamily, "h operator family is empty");
  HOperator out = family.front();
  for (const auto& op : family.subspan(1)) {
    require_fragment(out.fragment, op.fragment);
    for (std::size_t p = 0; p < out.table.size(); ++p) out.table[p] = combine(out.table[p], op.table[p]);
  }
  return out;
}

}  // namespace

HOperator h_join(std::span<const HOperator> family) {
  if (family.empty()) throw LocaleError(ErrorKind::EmptyFamily, "h operator family is empty");
  const auto& sl = *family.front().fragment->lattice;
  return pointwise(family, [&](int a, int b) { return sl.join(a, b); });
}

HOperator h_meet(std::span<const HOperator> family) {
  if (family.empty()) throw LocaleError(ErrorKind::EmptyFamily, "h operator family is empty");
  const auto& sl = *family.front().fragment->lattice;
  return pointwise(family, [&](int a, int b) { return sl.meet(a, b); });
}

OrderCheck h_le(const HOperator& a, const HOperator& b) {
  require_fragment(a.fragment, b.fragment);
  const auto& sl = *a.fragment->lattice;
  for (int p = 0; p < a.fragment->size(); ++p) {
    if (!sl.le(a.table[p], b.table[p])) return {false, a.fragment->indices[p]};
  }
  return {};
}

namespace {

std::vector<int> random_inner(const ComplementedFragment& frag, std::mt19937_64& rng) {
  const auto& sl = *frag.lattice;
  const int k = frag.size();
  auto pick_from = [&](const std::vector<int>& v) {
    std::uniform_int_distribution<std::size_t> d(0, v.size() - 1);
    return v[d(rng)];
  };
  // interior part on the fragment, by monotone closure of a contractive seed
  std::vector<int> seed(k);
  for (int q = 0; q < k; ++q) {
    std::vector<int> below;
    for (int u : frag.indices) {
      if (sl.le(u, frag.indices[q])) below.push_back(u);
    }
    seed[q] = pick_from(below);
  }
  std::vector<int> inner(k);
  for (int p = 0; p < k; ++p) {
    int acc = sl.bottom();
    for (int q = 0; q < k; ++q) {
      if (sl.le(frag.indices[q], frag.indices[p])) acc = sl.join(acc, seed[q]);
    }
    inner[p] = acc;
  }
  inner[frag.position[sl.top()]] = sl.top();
  return inner;
}

}  // namespace

HOperator random_contractive_h(const FragmentPtr& fragment, std::mt19937_64& rng) {
  return {fragment, random_inner(*fragment, rng)};
}

HOperator random_h(const FragmentPtr& fragment, std::mt19937_64& rng) {
  const auto& frag = *fragment;
  const auto& sl = *frag.lattice;
  const int k = frag.size();
  const std::vector<int> inner = random_inner(frag, rng);
  auto pick_from = [&](const std::vector<int>& v) {
    std::uniform_int_distribution<std::size_t> d(0, v.size() - 1);
    return v[d(rng)];
  };
  // any X with S ^ X = i(S) keeps S ^ h(S) = i(S)
  std::vector<int> table(k);
  for (int p = 0; p < k; ++p) {
    std::vector<int> options;
    for (int x : frag.indices) {
      if (sl.meet(frag.indices[p], x) == inner[p]) options.push_back(x);
    }
    table[p] = pick_from(options);
  }
  return {fragment, std::move(table)};
}

HOperator restrict_to_fragment(const FragmentPtr& fragment, const InteriorOperator& op) {
  require_lattice_of(fragment, op.lattice);
  std::vector<int> table(fragment->size());
  for (int p = 0; p < fragment->size(); ++p) {
    table[p] = op(fragment->indices[p]);
    if (!fragment->contains(table[p])) {
      throw LocaleError(ErrorKind::InvalidInput, "interior operator leaves the complemented fragment",
                        op.lattice->render(fragment->indices[p]));
    }
  }
  return {fragment, std::move(table)};
}

HContinuityReport is_h_continuous(const InducedMaps& f, const HOperator& h_l, const HOperator& h_m) {
  require_lattice_of(h_l.fragment, f.source);
  require_lattice_of(h_m.fragment, f.target);
  const auto& ls = *f.source;
  const auto& ms = *f.target;
  HContinuityReport r;
  for (int t : h_m.fragment->indices) {
    const int p = f.pre(t);
    if (!h_l.fragment->contains(p)) {
      r.escapes.push_back(t);
      continue;
    }
    ++r.checked;
    const int lhs = f.pre(ms.meet(t, h_m(t)));
    const int rhs = ls.meet(p, h_l(p));
    if (r.passed && !ls.le(lhs, rhs)) {
      r.passed = false;
      r.witness = t;
    }
  }
  return r;
}

HCompositionReport check_h_composition(const InducedMaps& f, const InducedMaps& g, const HOperator& h_l,
                                       const HOperator& h_m, const HOperator& h_n) {
  const auto cf = is_h_continuous(f, h_l, h_m);
  const auto cg = is_h_continuous(g, h_m, h_n);
  HCompositionReport out;
  out.escapes = static_cast<int>(cf.escapes.size() + cg.escapes.size());
  if (!cf.passed || !cg.passed) {
    out.result = {Verdict::PreconditionUnmet, !cf.passed ? "f is not h-continuous" : "g is not h-continuous"};
    return out;
  }
  const InducedMaps gf = compose_induced(g, f);
  const auto c = is_h_continuous(gf, h_l, h_n);
  out.escapes += static_cast<int>(c.escapes.size());
  if (!c.passed) out.result = {Verdict::Fail, "g f not h-continuous at T=" + g.target->render(c.witness)};
  return out;
}

HInitialResult initial_h(const InducedMaps& f, const HOperator& h_m, const FragmentPtr& source_fragment) {
  require_lattice_of(h_m.fragment, f.target);
  require_lattice_of(source_fragment, f.source);
  const auto& frag = *source_fragment;
  const auto& mfrag = *h_m.fragment;
  HInitialResult out;
  out.candidate = {source_fragment, std::vector<int>(frag.size())};
  for (int p = 0; p < frag.size(); ++p) {
    const int s = frag.indices[p];
    const int img = f.img(s);
    int value = s;
    if (!mfrag.contains(img)) {
      out.escapes.push_back(s);
    } else {
      const int pre = f.pre(h_m(img));
      if (frag.contains(pre)) {
        value = pre;
      } else {
        out.escapes.push_back(s);
      }
    }
    out.candidate.table[p] = value;
  }
  out.image_is_total = f.img(f.source->top()) == f.target->top();
  out.report = check_h(out.candidate);
  const auto c = is_h_continuous(f, out.candidate, h_m);
  AxiomResult cont{"f h-continuous", c.passed, false, {}, {}};
  if (!c.passed) {
    cont.witness_ids = {c.witness};
    cont.witness = "T=" + f.target->render(c.witness);
  }
  out.report.axioms.push_back(cont);
  return out;
}

HOperator least_h_continuous_source(const InducedMaps& f, const HOperator& h_m, const FragmentPtr& source_fragment) {
  const auto& frag = *source_fragment;
  const auto& ls = *f.source;
  const auto& ms = *f.target;
  std::vector<int> table(frag.size(), ls.bottom());
  for (int t : h_m.fragment->indices) {
    const int contribution = f.pre(ms.meet(t, h_m(t)));
    for (int p = 0; p < frag.size(); ++p) {
      if (ls.le(f.pre(t), frag.indices[p])) table[p] = ls.join(table[p], contribution);
    }
  }
  table[frag.position[ls.top()]] = ls.top();
  for (int& v : table) {
    if (!frag.contains(v)) throw LocaleError(ErrorKind::InvalidInput, "continuity lift leaves the fragment", ls.render(v));
  }
  return {source_fragment, std::move(table)};
}

HUniversalReport check_h_universal(const InducedMaps& f, const HOperator& h_m, const FragmentPtr& l_fragment,
                                   const InducedMaps& g, const HOperator& h_n) {
  const auto initial = initial_h(f, h_m, l_fragment);
  const auto cg = is_h_continuous(g, h_n, initial.candidate);
  const auto cfg = is_h_continuous(compose_induced(f, g), h_n, h_m);
  HUniversalReport out;
  out.result = {cg.passed, cfg.passed, cg.witness, cfg.witness};
  out.escapes = static_cast<int>(initial.escapes.size() + cg.escapes.size() + cfg.escapes.size());
  return out;
}

}  // namespace localelab
