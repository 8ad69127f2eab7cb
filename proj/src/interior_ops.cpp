#include "localelab/interior_ops.hpp"

#include <algorithm>

namespace localelab {

bool AxiomReport::passed() const {
  return std::all_of(axioms.begin(), axioms.end(), [](const AxiomResult& a) { return a.passed; });
}

const AxiomResult& AxiomReport::at(const std::string& name) const {
  for (const auto& a : axioms) {
    if (a.name == name) return a;
  }
  throw LocaleError(ErrorKind::InvalidInput, "axiom not evaluated: " + name);
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::PreconditionUnmet: return "precondition-unmet";
  }
  return "?";
}

namespace {

bool same_lattice(const SublocaleLatticePtr& a, const SublocaleLatticePtr& b) {
  return a == b || (a && b && same_frame(a->host(), b->host()) && a->all() == b->all());
}

void require_lattice(const SublocaleLatticePtr& expected, const SublocaleLatticePtr& actual) {
  if (!same_lattice(expected, actual)) {
    throw LocaleError(ErrorKind::HostMismatch, "operator is hosted on a different sublocale lattice");
  }
}

void require_total(const SublocaleLattice& sl, const std::vector<int>& table) {
  if (static_cast<int>(table.size()) != sl.size()) {
    throw LocaleError(ErrorKind::InvalidInput, "operator table is not total on the sublocale lattice");
  }
  for (int v : table) {
    if (v < 0 || v >= sl.size()) throw LocaleError(ErrorKind::InvalidInput, "operator table value out of range");
  }
}

}  // namespace

AxiomReport check_interior(const SublocaleLattice& sl, const std::vector<int>& table) {
  require_total(sl, table);
  AxiomReport report;
  AxiomResult i1{"I1", true, false, {}, {}};
  for (int s = 0; s < sl.size() && i1.passed; ++s) {
    if (!sl.le(table[s], s)) {
      i1.passed = false;
      i1.witness_ids = {s, table[s]};
      i1.witness = "i(" + sl.render(s) + ")=" + sl.render(table[s]) + " not inside " + sl.render(s);
    }
  }
  AxiomResult i2{"I2", true, false, {}, {}};
  for (int s = 0; s < sl.size() && i2.passed; ++s) {
    for (int t = 0; t < sl.size() && i2.passed; ++t) {
      if (sl.le(s, t) && !sl.le(table[s], table[t])) {
        i2.passed = false;
        i2.witness_ids = {s, t};
        i2.witness = sl.render(s) + " <= " + sl.render(t) + " but i(S)=" + sl.render(table[s]) +
                     " not inside i(T)=" + sl.render(table[t]);
      }
    }
  }
  AxiomResult i3{"I3", table[sl.top()] == sl.top(), false, {}, {}};
  if (!i3.passed) {
    i3.witness_ids = {sl.top(), table[sl.top()]};
    i3.witness = "i(L)=" + sl.render(table[sl.top()]) + " != L";
  }
  report.axioms = {i1, i2, i3};
  return report;
}

InteriorOperator discrete_op(const SublocaleLatticePtr& lattice) {
  std::vector<int> t(lattice->size());
  for (int s = 0; s < lattice->size(); ++s) t[s] = s;
  return {lattice, std::move(t)};
}

InteriorOperator trivial_op(const SublocaleLatticePtr& lattice) {
  std::vector<int> t(lattice->size(), lattice->bottom());
  t[lattice->top()] = lattice->top();
  return {lattice, std::move(t)};
}

namespace {

template <class Combine>
InteriorOperator pointwise(std::span<const InteriorOperator> family, Combine combine) {
  if (family.empty()) throw LocaleError(ErrorKind::EmptyFamily, "operator family is empty");
  InteriorOperator out = family.front();
  for (const auto& op : family.subspan(1)) {
    require_lattice(out.lattice, op.lattice);
    for (std::size_t s = 0; s < out.table.size(); ++s) out.table[s] = combine(out.table[s], op.table[s]);
  }
  return out;
}

}  // namespace

InteriorOperator op_join(std::span<const InteriorOperator> family) {
  if (family.empty()) throw LocaleError(ErrorKind::EmptyFamily, "operator family is empty");
  const auto& sl = *family.front().lattice;
  return pointwise(family, [&](int a, int b) { return sl.join(a, b); });
}

InteriorOperator op_meet(std::span<const InteriorOperator> family) {
  if (family.empty()) throw LocaleError(ErrorKind::EmptyFamily, "operator family is empty");
  const auto& sl = *family.front().lattice;
  return pointwise(family, [&](int a, int b) { return sl.meet(a, b); });
}

OrderCheck op_le(const InteriorOperator& i, const InteriorOperator& j) {
  require_lattice(i.lattice, j.lattice);
  for (int s = 0; s < i.lattice->size(); ++s) {
    if (!i.lattice->le(i(s), j(s))) return {false, s};
  }
  return {};
}

InteriorOperator random_interior(const SublocaleLatticePtr& lattice, std::mt19937_64& rng) {
  const auto& sl = *lattice;
  const int k = sl.size();
  std::vector<int> seed(k);
  for (int t = 0; t < k; ++t) {
    std::vector<int> below;
    for (int u = 0; u < k; ++u) {
      if (sl.le(u, t)) below.push_back(u);
    }
    std::uniform_int_distribution<std::size_t> pick(0, below.size() - 1);
    seed[t] = below[pick(rng)];
  }
  std::vector<int> table(k);
  for (int s = 0; s < k; ++s) {
    int acc = sl.bottom();
    for (int t = 0; t < k; ++t) {
      if (sl.le(t, s)) acc = sl.join(acc, seed[t]);
    }
    table[s] = acc;
  }
  table[sl.top()] = sl.top();
  return {lattice, std::move(table)};
}

ContinuityReport is_I_continuous(const InducedMaps& f, const InteriorOperator& op_l, const InteriorOperator& op_m) {
  require_lattice(f.source, op_l.lattice);
  require_lattice(f.target, op_m.lattice);
  ContinuityReport r;
  for (int t = 0; t < f.target->size(); ++t) {
    ++r.checked;
    const int lhs = f.pre(op_m(t));
    const int rhs = op_l(f.pre(t));
    if (r.passed && !f.source->le(lhs, rhs)) {
      r.passed = false;
      r.witness = t;
    }
  }
  return r;
}

InducedMaps compose_induced(const InducedMaps& g, const InducedMaps& f) {
  return induce(compose_localic(g.map, f.map), f.source, g.target);
}

CompositionReport check_composition(const InducedMaps& f, const InducedMaps& g, const InteriorOperator& op_l,
                                    const InteriorOperator& op_m, const InteriorOperator& op_n) {
  if (!same_lattice(f.target, g.source)) throw LocaleError(ErrorKind::DomainMismatch, "f and g are not composable");
  const auto cf = is_I_continuous(f, op_l, op_m);
  const auto cg = is_I_continuous(g, op_m, op_n);
  if (!cf.passed || !cg.passed) {
    return {Verdict::PreconditionUnmet, !cf.passed ? "f is not I-continuous" : "g is not I-continuous"};
  }
  const InducedMaps gf = compose_induced(g, f);
  const auto& ls = *f.source;
  const auto& ns = *g.target;
  for (int u = 0; u < ns.size(); ++u) {
    if (gf.pre(u) != f.pre(g.pre(u))) {
      return {Verdict::Fail, "(g f)_{-1} != f_{-1} g_{-1} at " + ns.render(u)};
    }
  }
  for (int s = 0; s < ls.size(); ++s) {
    if (gf.img(s) != g.img(f.img(s))) return {Verdict::Fail, "(g f)[S] != g[f[S]] at " + ls.render(s)};
  }
  const auto c = is_I_continuous(gf, op_l, op_n);
  if (!c.passed) return {Verdict::Fail, "g f not I-continuous at T=" + ns.render(c.witness)};
  return {};
}

InitialResult initial_interior(const InducedMaps& f, const InteriorOperator& op_m) {
  require_lattice(f.target, op_m.lattice);
  const auto& ls = *f.source;
  std::vector<int> table(ls.size());
  for (int s = 0; s < ls.size(); ++s) table[s] = f.pre(op_m(f.img(s)));
  InitialResult out{{f.source, std::move(table)}, {}, f.img(ls.top()) == f.target->top()};
  out.report = check_interior(out.candidate);
  const auto c = is_I_continuous(f, out.candidate, op_m);
  AxiomResult cont{"f I-continuous", c.passed, false, {}, {}};
  if (!c.passed) {
    cont.witness_ids = {c.witness};
    cont.witness = "T=" + f.target->render(c.witness);
  }
  out.report.axioms.push_back(cont);
  return out;
}

InteriorOperator least_continuous_source(const InducedMaps& f, const InteriorOperator& op_m) {
  require_lattice(f.target, op_m.lattice);
  const auto& ls = *f.source;
  std::vector<int> table(ls.size(), ls.bottom());
  for (int t = 0; t < f.target->size(); ++t) {
    const int contribution = f.pre(op_m(t));
    for (int s = 0; s < ls.size(); ++s) {
      if (ls.le(f.pre(t), s)) table[s] = ls.join(table[s], contribution);
    }
  }
  table[ls.top()] = ls.top();
  return {f.source, std::move(table)};
}

UniversalReport check_universal_property(const InducedMaps& f, const InteriorOperator& op_m, const InducedMaps& g,
                                         const InteriorOperator& op_n) {
  if (!same_lattice(g.target, f.source)) throw LocaleError(ErrorKind::HostMismatch, "g does not land in the source of f");
  const auto initial = initial_interior(f, op_m);
  const auto cg = is_I_continuous(g, op_n, initial.candidate);
  const auto cfg = is_I_continuous(compose_induced(f, g), op_n, op_m);
  return {cg.passed, cfg.passed, cg.witness, cfg.witness};
}

std::vector<int> open_fixpoints(const InteriorOperator& op) {
  std::vector<int> out;
  for (int s = 0; s < op.lattice->size(); ++s) {
    if (op(s) == s) out.push_back(s);
  }
  return out;
}

OpenPreimageReport check_open_preimage(const InducedMaps& f, const InteriorOperator& op_l,
                                       const InteriorOperator& op_m) {
  if (!is_I_continuous(f, op_l, op_m).passed) return {Verdict::PreconditionUnmet, -1};
  for (int t : open_fixpoints(op_m)) {
    const int p = f.pre(t);
    if (op_l(p) != p) return {Verdict::Fail, t};
  }
  return {};
}

FamilyReport family_initial_check(std::span<const InducedMaps> maps, std::span<const InteriorOperator> ops,
                                  std::span<const FamilyProbe> probes) {
  if (maps.empty()) throw LocaleError(ErrorKind::EmptyFamily, "map family is empty");
  if (maps.size() != ops.size()) throw LocaleError(ErrorKind::InvalidInput, "one operator per map is required");
  std::vector<InteriorOperator> initials;
  for (std::size_t i = 0; i < maps.size(); ++i) {
    require_lattice(maps[0].source, maps[i].source);
    initials.push_back(initial_interior(maps[i], ops[i]).candidate);
  }
  FamilyReport out{op_join(initials), {}, 0, 0, 0};
  out.axioms = check_interior(out.candidate);
  for (std::size_t i = 0; i < maps.size(); ++i) {
    if (!is_I_continuous(maps[i], out.candidate, ops[i]).passed) ++out.continuity_failures;
  }
  for (const auto& probe : probes) {
    ++out.probes;
    const bool lhs = is_I_continuous(probe.g, probe.op_n, out.candidate).passed;
    bool rhs = true;
    for (std::size_t i = 0; i < maps.size() && rhs; ++i) {
      rhs = is_I_continuous(compose_induced(maps[i], probe.g), probe.op_n, ops[i]).passed;
    }
    if (lhs != rhs) ++out.probe_disagreements;
  }
  return out;
}

}  // namespace localelab
