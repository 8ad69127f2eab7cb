#include "checks.hpp"

#include <algorithm>
#include <array>

#include "localelab/corpus.hpp"

namespace localelab::verify::detail {

namespace {

constexpr std::size_t kFindingCap = 4;

std::string set_str(const Frame& frame, ElemSet s) { return frame.render(s); }

/// Sublocale name for traces: L (or M) for the top, {1} for the least.
std::string named(const SublocaleLattice& sl, int i, const std::string& whole) {
  if (i == sl.top()) return whole;
  if (i == sl.bottom()) return "{1}";
  return sl.render(i);
}

std::string inside(bool holds) { return holds ? " is inside " : " is not inside "; }

}  // namespace

void Eval::fail(Finding f) {
  if (f.anomaly.empty()) {
    ++failures;
  } else {
    ++expected;
    ++by_anomaly[f.anomaly];
  }
  if (findings.size() < kFindingCap) findings.push_back(std::move(f));
}

void Eval::add(const Eval& o) {
  instances += o.instances;
  failures += o.failures;
  expected += o.expected;
  unmet += o.unmet;
  escapes += o.escapes;
  operators += o.operators;
  for (const auto& [k, v] : o.by_anomaly) by_anomaly[k] += v;
  for (const auto& f : o.findings) {
    if (findings.size() < kFindingCap) findings.push_back(f);
  }
}

// ---- orders and frames ----

namespace {

constexpr std::array<long, 7> kKnownPosetCounts = {1, 1, 2, 5, 16, 63, 318};

/// Every strict order on n labelled points, grouped by exhaustive isomorphism search.
long brute_force_classes(int n) {
  std::vector<std::pair<int, int>> slots;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i != j) slots.emplace_back(i, j);
    }
  }
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  std::vector<Poset> reps;
  const std::uint64_t total = std::uint64_t{1} << slots.size();
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    std::array<std::uint32_t, 8> rel{};
    for (std::size_t k = 0; k < slots.size(); ++k) {
      if ((mask >> k) & 1u) rel[slots[k].first] |= 1u << slots[k].second;
    }
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) {
      for (int j = 0; j < n && ok; ++j) {
        if (!((rel[i] >> j) & 1u)) continue;
        if ((rel[j] >> i) & 1u) ok = false;
        if ((rel[j] & ~rel[i]) != 0) ok = false;
      }
    }
    if (!ok) continue;
    std::vector<std::pair<Elem, Elem>> pairs;
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if ((rel[i] >> j) & 1u) pairs.emplace_back(i, j);
      }
    }
    Poset p = Poset::from_pairs(labels, pairs);
    if (std::none_of(reps.begin(), reps.end(), [&](const Poset& r) { return order_isomorphic(r, p); })) {
      reps.push_back(std::move(p));
    }
  }
  return static_cast<long>(reps.size());
}

}  // namespace

Eval eval_poset_counts(int max_n, bool trace) {
  Eval e;
  for (int n = 1; n <= max_n; ++n) {
    ++e.instances;
    const long generated = static_cast<long>(posets_up_to_iso(n).size());
    const long known = n < static_cast<int>(kKnownPosetCounts.size()) ? kKnownPosetCounts[n] : -1;
    const long brute = n <= 5 ? brute_force_classes(n) : known;
    if (generated != known || brute != known) {
      Finding f{"n=" + std::to_string(n) + ": generated " + std::to_string(generated) + " classes, brute force " +
                    std::to_string(brute) + ", known " + std::to_string(known),
                {}, {}};
      if (trace) f.steps.push_back("isomorphism classes re-counted by pairwise order-isomorphism search");
      e.fail(std::move(f));
    }
  }
  return e;
}

Eval eval_distributive(const Frame& F, bool trace) {
  Eval e;
  const int n = F.size();
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      ++e.instances;
      const Elem m = F.meet(a, b), j = F.join(a, b);
      bool ok = F.le(m, a) && F.le(m, b) && F.le(a, j) && F.le(b, j);
      for (Elem c = 0; c < n && ok; ++c) {
        if (F.le(c, a) && F.le(c, b) && !F.le(c, m)) ok = false;
        if (F.le(a, c) && F.le(b, c) && !F.le(j, c)) ok = false;
      }
      if (!ok) {
        Finding f{"meet/join tables are not the glb/lub at a=" + F.label(a) + " b=" + F.label(b), {}, {}};
        if (trace) f.steps.push_back("a^b=" + F.label(m) + ", avb=" + F.label(j));
        e.fail(std::move(f));
      }
    }
  }
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      for (Elem c = 0; c < n; ++c) {
        ++e.instances;
        const Elem lhs = F.meet(a, F.join(b, c));
        const Elem rhs = F.join(F.meet(a, b), F.meet(a, c));
        if (lhs != rhs) {
          Finding f{"a^(bvc)=" + F.label(lhs) + " but (a^b)v(a^c)=" + F.label(rhs) + " at a=" + F.label(a) +
                        " b=" + F.label(b) + " c=" + F.label(c),
                    {}, {}};
          e.fail(std::move(f));
        }
      }
    }
  }
  return e;
}

Eval eval_heyting(const Frame& F, bool trace) {
  Eval e;
  const int n = F.size();
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      for (Elem c = 0; c < n; ++c) {
        ++e.instances;
        if (F.le(F.meet(a, b), c) != F.le(a, F.implies(b, c))) {
          Finding f{"a^b<=c and a<=b->c disagree at a=" + F.label(a) + " b=" + F.label(b) + " c=" + F.label(c), {}, {}};
          if (trace) {
            f.steps.push_back("a^b = " + F.label(F.meet(a, b)));
            f.steps.push_back("b->c = " + F.label(F.implies(b, c)));
          }
          e.fail(std::move(f));
        }
      }
    }
  }
  // b->c against the largest x with x^b <= c, found by search.
  for (Elem b = 0; b < n; ++b) {
    for (Elem c = 0; c < n; ++c) {
      ++e.instances;
      Elem best = -1;
      for (Elem x = 0; x < n; ++x) {
        if (!F.le(F.meet(x, b), c)) continue;
        bool greatest = true;
        for (Elem y = 0; y < n && greatest; ++y) {
          if (F.le(F.meet(y, b), c) && !F.le(y, x)) greatest = false;
        }
        if (greatest) best = x;
      }
      if (best != F.implies(b, c)) {
        Finding f{"b->c=" + F.label(F.implies(b, c)) + " is not the largest x with x^b<=c at b=" + F.label(b) +
                      " c=" + F.label(c),
                  {}, {}};
        e.fail(std::move(f));
      }
    }
  }
  return e;
}

namespace {

struct Folds {
  Elem join = 0;
  Elem meet = 0;
};

Folds fold(const Frame& F, ElemSet a) {
  Folds out{F.bottom(), F.top()};
  a.for_each([&](Elem x) {
    out.join = F.join(out.join, x);
    out.meet = F.meet(out.meet, x);
  });
  return out;
}

template <class Op>
Elem fold_join(const Frame& F, ElemSet a, Op op) {
  Elem acc = F.bottom();
  a.for_each([&](Elem x) { acc = F.join(acc, op(x)); });
  return acc;
}

template <class Op>
Elem fold_meet(const Frame& F, ElemSet a, Op op) {
  Elem acc = F.top();
  a.for_each([&](Elem x) { acc = F.meet(acc, op(x)); });
  return acc;
}

}  // namespace

Eval eval_heyting_identities(const Frame& F, bool trace) {
  Eval e;
  const int n = F.size();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    const ElemSet A(mask);
    const Folds fa = fold(F, A);
    for (Elem b = 0; b < n; ++b) {
      e.instances += 3;
      const std::string at = " at A=" + set_str(F, A) + ", b=" + F.label(b);
      const Elem l1 = F.meet(fa.join, b), r1 = fold_join(F, A, [&](Elem a) { return F.meet(a, b); });
      const Elem l2 = F.implies(b, fa.meet), r2 = fold_meet(F, A, [&](Elem a) { return F.implies(b, a); });
      const Elem l3 = F.implies(fa.join, b), r3 = fold_meet(F, A, [&](Elem a) { return F.implies(a, b); });
      auto report = [&](const char* form, Elem l, Elem r) {
        Finding f{std::string(form) + " fails" + at, {}, {}};
        if (trace) f.steps.push_back("lhs=" + F.label(l) + ", rhs=" + F.label(r));
        e.fail(std::move(f));
      };
      if (l1 != r1) report("(join A)^b = join{a^b}", l1, r1);
      if (l2 != r2) report("b->(meet A) = meet{b->a}", l2, r2);
      if (l3 != r3) report("(join A)->b = meet{a->b}", l3, r3);
    }
  }
  return e;
}

Eval eval_heyting_printed(const Frame& F, bool trace) {
  Eval e;
  const int n = F.size();
  bool seen[2] = {false, false};
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    const ElemSet A(mask);
    const Folds fa = fold(F, A);
    for (Elem b = 0; b < n; ++b) {
      e.instances += 2;
      const Elem l1 = F.implies(b, fa.join), r1 = fold_join(F, A, [&](Elem a) { return F.implies(b, a); });
      const Elem l2 = F.implies(fa.join, b), r2 = fold_join(F, A, [&](Elem a) { return F.implies(a, b); });
      const Elem ls[2] = {l1, l2}, rs[2] = {r1, r2};
      const char* forms[2] = {"b->(join A) = join{b->a}", "(join A)->b = join{a->b}"};
      for (int k = 0; k < 2; ++k) {
        if (ls[k] == rs[k]) continue;
        Finding f{std::string(forms[k]) + " fails at A=" + set_str(F, A) + ", b=" + F.label(b) + ": lhs=" +
                      F.label(ls[k]) + ", rhs=" + F.label(rs[k]),
                  "heyting-printed-identities", {}};
        if (seen[k]) {
          // Only the first falsification of each form is kept as a witness.
          ++e.expected;
          ++e.by_anomaly[f.anomaly];
          continue;
        }
        seen[k] = true;
        if (trace) {
          f.steps.push_back("join A = " + F.label(fa.join));
          f.steps.push_back("lhs = " + F.label(ls[k]));
          std::string terms;
          A.for_each([&](Elem a) {
            const Elem t = k == 0 ? F.implies(b, a) : F.implies(a, b);
            terms += (terms.empty() ? "" : ", ") + F.label(t);
          });
          f.steps.push_back("terms = {" + terms + "}, their join = " + F.label(rs[k]));
          const Elem fixed = k == 0 ? F.implies(b, fa.meet) : fold_meet(F, A, [&](Elem a) { return F.implies(a, b); });
          const Elem fixed_lhs = k == 0 ? fold_meet(F, A, [&](Elem a) { return F.implies(b, a); }) : l2;
          f.steps.push_back(std::string(k == 0 ? "meet form b->(meet A) = meet{b->a}: " : "meet form (join A)->b = meet{a->b}: ") +
                            F.label(k == 0 ? fixed : fixed_lhs) + " = " + F.label(k == 0 ? fixed_lhs : fixed));
        }
        e.fail(std::move(f));
      }
    }
  }
  return e;
}

// ---- sublocales ----

Eval eval_open_closed(const SublocaleLattice& sl, bool trace) {
  Eval e;
  const FramePtr& host = sl.host();
  const Frame& F = *host;
  for (Elem a = 0; a < F.size(); ++a) {
    e.instances += 4;
    const Sublocale o = open_sub(host, a), c = closed_sub(host, a);
    const LawReport ro = is_sublocale(F, o.members), rc = is_sublocale(F, c.members);
    if (!ro) e.fail({"o(" + F.label(a) + ") is not a sublocale: " + ro.witness, {}, {}});
    if (!rc) e.fail({"c(" + F.label(a) + ") is not a sublocale: " + rc.witness, {}, {}});
    if (!ro || !rc) continue;
    const int oi = sl.index_of(o.members), ci = sl.index_of(c.members);
    const bool disjoint = (o.members & c.members) == ElemSet::single(F.top());
    const bool covering = least_sublocale_containing(sl, o.members | c.members) == sl.top();
    if (!disjoint || !covering) {
      Finding f{"o(" + F.label(a) + ") and c(" + F.label(a) + ") are not complements", {}, {}};
      if (trace) {
        f.steps.push_back("o(a) = " + set_str(F, o.members) + ", c(a) = " + set_str(F, c.members));
        f.steps.push_back(std::string("meet is {1}: ") + (disjoint ? "yes" : "no") + ", join is L: " + (covering ? "yes" : "no"));
      }
      e.fail(std::move(f));
    }
    const auto comp = sl.complement(ci);
    if (!comp || *comp != oi) {
      e.fail({"complement(c(" + F.label(a) + ")) is not o(" + F.label(a) + ")", {}, {}});
    }
  }
  return e;
}

Eval eval_intersection(const SublocaleLattice& sl, bool trace) {
  Eval e;
  const Frame& F = *sl.host();
  for (int i = 0; i < sl.size(); ++i) {
    for (int j = i; j < sl.size(); ++j) {
      ++e.instances;
      const ElemSet s = sl.members(i) & sl.members(j);
      const LawReport r = is_sublocale(F, s);
      if (!r || sl.index_of(s) != sl.meet(i, j)) {
        Finding f{sl.render(i) + " & " + sl.render(j) + " = " + set_str(F, s) + " is not the sublocale meet", {}, {}};
        if (trace && !r) f.steps.push_back(r.law + ": " + r.witness);
        e.fail(std::move(f));
      }
    }
  }
  return e;
}

Eval eval_join(const SublocaleLattice& sl, bool trace) {
  Eval e;
  const FramePtr& host = sl.host();
  for (int i = 0; i < sl.size(); ++i) {
    for (int j = i; j < sl.size(); ++j) {
      ++e.instances;
      const ElemSet joined = sub_join(host, {sl.sublocale(i), sl.sublocale(j)}).members;
      const int oracle = least_sublocale_containing(sl, sl.members(i) | sl.members(j));
      if (joined != sl.members(oracle) || sl.join(i, j) != oracle) {
        Finding f{"join of " + sl.render(i) + " and " + sl.render(j) + " is " + host->render(joined) +
                      ", least containing sublocale is " + sl.render(oracle),
                  {}, {}};
        if (trace) f.steps.push_back("table join = " + sl.render(sl.join(i, j)));
        e.fail(std::move(f));
      }
    }
  }
  return e;
}

Eval eval_join_printed(const SublocaleLattice& sl, bool trace) {
  Eval e;
  const Frame& F = *sl.host();
  bool seen = false;
  for (int i = 0; i < sl.size(); ++i) {
    for (int j = i; j < sl.size(); ++j) {
      ++e.instances;
      const ElemSet uni = sl.members(i) | sl.members(j);
      const ElemSet printed = join_closure(F, uni);
      const int oracle = least_sublocale_containing(sl, uni);
      if (printed == sl.members(oracle)) continue;
      Finding f{"{join M : M in " + sl.render(i) + " u " + sl.render(j) + "} = " + set_str(F, printed) +
                    ", least containing sublocale is " + sl.render(oracle),
                "sublocale-join-printed", {}};
      if (seen) {
        ++e.expected;
        ++e.by_anomaly[f.anomaly];
        continue;
      }
      seen = true;
      if (trace) {
        f.steps.push_back("union = " + set_str(F, uni));
        f.steps.push_back("closure under joins (empty join included) = " + set_str(F, printed));
        const LawReport r = is_sublocale(F, printed);
        f.steps.push_back(r ? "that set is a sublocale" : "that set is not a sublocale: " + r.witness);
        f.steps.push_back("closure under meets = " + set_str(F, meet_closure(F, uni)));
        f.steps.push_back("least sublocale containing the union = " + sl.render(oracle));
      }
      e.fail(std::move(f));
    }
  }
  return e;
}

Eval eval_core(const SublocaleLattice& sl, bool trace) {
  Eval e;
  const FramePtr& host = sl.host();
  const Frame& F = *host;
  const int n = F.size();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    const ElemSet A(mask);
    if (!A.contains(F.top())) continue;
    bool closed = true;
    A.for_each([&](Elem x) {
      A.for_each([&](Elem y) {
        if (!A.contains(F.meet(x, y))) closed = false;
      });
    });
    if (!closed) continue;
    ++e.instances;
    const ElemSet core = sloc_core(host, A).members;
    bool ok = core.subset_of(A) && static_cast<bool>(is_sublocale(F, core));
    int missed = -1;
    for (int s = 0; s < sl.size() && ok; ++s) {
      if (sl.members(s).subset_of(A) && !sl.members(s).subset_of(core)) {
        ok = false;
        missed = s;
      }
    }
    if (!ok) {
      Finding f{"sloc-core of " + set_str(F, A) + " = " + set_str(F, core) + " is not the largest sublocale inside", {}, {}};
      if (trace && missed >= 0) f.steps.push_back("sublocale " + sl.render(missed) + " lies in A but not in the core");
      e.fail(std::move(f));
    }
  }
  return e;
}

Eval eval_generation(const SublocaleLattice& sl, bool trace) {
  Eval e;
  for (int s = 0; s < sl.size(); ++s) {
    ++e.instances;
    const LawReport r = generation_check(sl, s);
    if (!r) {
      Finding f{"generation fails for " + sl.render(s) + ": " + r.witness, {}, {}};
      if (trace) f.steps.push_back(r.law);
      e.fail(std::move(f));
    }
  }
  return e;
}

// ---- maps ----

Eval eval_localic(const FrameHom& h, bool trace) {
  Eval e;
  const Frame& M = *h.source;
  const Frame& L = *h.target;
  LocalicMap f;
  try {
    f = right_adjoint(h);
  } catch (const LocaleError& ex) {
    e.fail({std::string("right adjoint rejected: ") + ex.what(), {}, {}});
    return e;
  }
  ++e.instances;
  if (f(L.top()) != M.top()) e.fail({"f(1) = " + M.label(f(L.top())) + " != 1", {}, {}});
  if (L.size() <= 12) {
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << L.size()); ++mask) {
      ++e.instances;
      const ElemSet S(mask);
      const Elem lhs = f(L.meet_all(S));
      const Elem rhs = fold_meet(M, S, [&](Elem x) { return f(x); });
      if (lhs != rhs) {
        e.fail({"f(meet S) != meet f[S] at S=" + L.render(S), {}, {}});
        break;
      }
    }
  }
  for (Elem m = 0; m < M.size(); ++m) {
    for (Elem x = 0; x < L.size(); ++x) {
      ++e.instances;
      if (L.le(h(m), x) != M.le(m, f(x))) {
        Finding fd{"h(m)<=x and m<=f(x) disagree at m=" + M.label(m) + " x=" + L.label(x), {}, {}};
        if (trace) fd.steps.push_back("h(m)=" + L.label(h(m)) + ", f(x)=" + M.label(f(x)));
        e.fail(std::move(fd));
      }
    }
  }
  ++e.instances;
  try {
    const FrameHom back = left_adjoint(h.target, h.source, f.map);
    if (back.map != h.map) e.fail({"left adjoint of the right adjoint differs from h", {}, {}});
  } catch (const LocaleError& ex) {
    e.fail({std::string("left adjoint rejected: ") + ex.what(), {}, {}});
  }
  return e;
}

Eval eval_adjunction(const InducedMaps& f, bool trace) {
  Eval e;
  const PairCheck pc = check_adjunction(f);
  e.instances += pc.pairs;
  if (!pc.report) {
    Finding fd{pc.report.law + ": " + pc.report.witness, {}, {}};
    e.fail(std::move(fd));
  }
  const auto& ls = *f.source;
  const auto& ms = *f.target;
  for (int s = 0; s < ls.size(); ++s) {
    ++e.instances;
    if (!ls.le(s, f.pre(f.img(s)))) {
      Finding fd{"S not inside f_{-1}[f[S]] at S=" + ls.render(s), {}, {}};
      if (trace) fd.steps.push_back("f[S]=" + ms.render(f.img(s)) + ", f_{-1}[f[S]]=" + ls.render(f.pre(f.img(s))));
      e.fail(std::move(fd));
    }
  }
  for (int t = 0; t < ms.size(); ++t) {
    ++e.instances;
    if (!ms.le(f.img(f.pre(t)), t)) {
      e.fail({"f[f_{-1}[T]] not inside T at T=" + ms.render(t), {}, {}});
    }
  }
  return e;
}

// ---- operators ----

namespace {

void axioms_into(Eval& e, const std::string& who, const AxiomReport& r, bool require_vacuous_h1 = false) {
  for (const auto& a : r.axioms) {
    ++e.instances;
    if (!a.passed) e.fail({who + " fails " + a.name + ": " + a.witness, {}, {}});
    if (require_vacuous_h1 && a.name == "h1" && !a.vacuous) e.fail({who + ": h1 not reported vacuous", {}, {}});
  }
}

void order_into(Eval& e, const std::string& what, const OrderCheck& c, const SublocaleLattice& sl) {
  ++e.instances;
  if (!c.holds) e.fail({what + " fails at S=" + sl.render(c.witness), {}, {}});
}

}  // namespace

Eval eval_interior_axioms(const InteriorOperator& a, const InteriorOperator& b, bool) {
  Eval e;
  const auto& sl = *a.lattice;
  const std::array<InteriorOperator, 2> pair{a, b};
  const InteriorOperator j = op_join(pair), m = op_meet(pair);
  const InteriorOperator d = discrete_op(a.lattice), t = trivial_op(a.lattice);
  e.operators += 4;
  axioms_into(e, "A", check_interior(a));
  axioms_into(e, "B", check_interior(b));
  axioms_into(e, "A v B", check_interior(j));
  axioms_into(e, "A ^ B", check_interior(m));
  axioms_into(e, "discrete", check_interior(d));
  axioms_into(e, "trivial", check_interior(t));
  order_into(e, "trivial <= A", op_le(t, a), sl);
  order_into(e, "A <= discrete", op_le(a, d), sl);
  order_into(e, "trivial <= B", op_le(t, b), sl);
  order_into(e, "B <= discrete", op_le(b, d), sl);
  order_into(e, "A <= A v B", op_le(a, j), sl);
  order_into(e, "B <= A v B", op_le(b, j), sl);
  order_into(e, "A ^ B <= A", op_le(m, a), sl);
  order_into(e, "A ^ B <= B", op_le(m, b), sl);
  return e;
}

Eval eval_upward(const InducedMaps& f, const InteriorOperator& op_l, const InteriorOperator& op_l2,
                 const InteriorOperator& op_m, bool trace) {
  Eval e;
  e.operators += 3;
  if (!check_interior(op_l).passed() || !check_interior(op_l2).passed() || !check_interior(op_m).passed() ||
      !is_I_continuous(f, op_l, op_m).passed || !op_le(op_l, op_l2).holds) {
    ++e.unmet;
    return e;
  }
  ++e.instances;
  const auto c = is_I_continuous(f, op_l2, op_m);
  if (!c.passed) {
    Finding fd{"f continuous for i_L but not for a larger i_L' at T=" + f.target->render(c.witness), {}, {}};
    if (trace) {
      const int t = c.witness, p = f.pre(t);
      fd.steps.push_back("f_{-1}[i_M(T)] = " + f.source->render(f.pre(op_m(t))));
      fd.steps.push_back("i_L'(f_{-1}[T]) = " + f.source->render(op_l2(p)));
    }
    e.fail(std::move(fd));
  }
  return e;
}

Eval eval_h_axioms(const HOperator& a, const HOperator& b, bool trace) {
  Eval e;
  const auto& frag = *a.fragment;
  const auto& sl = *frag.lattice;
  const std::array<HOperator, 2> pair{a, b};
  const HOperator j = h_join(pair), m = h_meet(pair);
  const HOperator d = discrete_h(a.fragment), t = trivial_h(a.fragment);
  e.operators += 4;
  axioms_into(e, "A", check_h(a), true);
  axioms_into(e, "B", check_h(b), true);
  axioms_into(e, "A v B", check_h(j), true);
  axioms_into(e, "A ^ B", check_h(m), true);
  axioms_into(e, "discrete", check_h(d), true);
  axioms_into(e, "trivial", check_h(t), true);
  order_into(e, "trivial <= A", h_le(t, a), sl);
  order_into(e, "trivial <= B", h_le(t, b), sl);
  order_into(e, "A <= A v B", h_le(a, j), sl);
  order_into(e, "A ^ B <= B", h_le(m, b), sl);
  // h1 does not bound h(S) by S, so pointwise X <= discrete holds exactly
  // for the contractive X. The effective values S ^ h(S) always sit below S.
  for (const auto& [name, x] : std::array<std::pair<const char*, const HOperator*>, 2>{{{"A", &a}, {"B", &b}}}) {
    ++e.instances;
    const OrderCheck c = h_le(*x, d);
    if (!c.holds) {
      Finding fd{std::string(name) + " <= discrete fails at S=" + sl.render(c.witness), "h-discrete-not-largest", {}};
      if (trace) {
        fd.steps.push_back("S = " + sl.render(c.witness));
        fd.steps.push_back(std::string(name) + "(S) = " + sl.render((*x)(c.witness)) + " is not inside S = discrete(S)");
        fd.steps.push_back("S ^ " + std::string(name) + "(S) = " + sl.render(sl.meet(c.witness, (*x)(c.witness))) +
                           " <= S, so the effective order still places " + name + " below discrete");
      }
      e.fail(std::move(fd));
    }
    ++e.instances;
    for (int s : frag.indices) {
      if (!sl.le(sl.meet(s, (*x)(s)), s)) {
        e.fail({std::string(name) + ": S ^ h(S) not inside S at S=" + sl.render(s), {}, {}});
        break;
      }
    }
  }
  return e;
}

Eval eval_fragment(const InteriorOperator& op, const FragmentPtr& fragment, bool trace) {
  Eval e;
  const auto& sl = *op.lattice;
  const FramePtr& host = sl.host();
  e.instances += 2;
  if (!fragment->is_everything()) {
    Finding fd{"only " + std::to_string(fragment->size()) + " of " + std::to_string(sl.size()) +
                   " sublocales are complemented",
               {}, {}};
    for (int s = 0; s < sl.size() && trace; ++s) {
      if (!fragment->contains(s)) fd.steps.push_back("not complemented: " + sl.render(s));
    }
    e.fail(std::move(fd));
  }
  const std::size_t points = points_of(host).size();
  if (points >= 63 || sl.size() != (std::int64_t{1} << points)) {
    e.fail({"|S_l(L)| = " + std::to_string(sl.size()) + " but |pt(L)| = " + std::to_string(points), {}, {}});
  }
  ++e.operators;
  axioms_into(e, "i", check_interior(op));
  if (fragment->is_everything()) {
    axioms_into(e, "restricted i", check_h(restrict_to_fragment(fragment, op)), true);
  }
  return e;
}

Eval eval_composition(const InducedMaps& f, const InducedMaps& g, const InteriorOperator& op_l,
                      const InteriorOperator& op_m, const InteriorOperator& op_n, bool trace) {
  Eval e;
  e.operators += 3;
  const CompositionReport r = check_composition(f, g, op_l, op_m, op_n);
  if (r.verdict == Verdict::PreconditionUnmet) {
    ++e.unmet;
    return e;
  }
  ++e.instances;
  if (r.verdict == Verdict::Fail) {
    Finding fd{r.detail, {}, {}};
    if (trace) fd.steps.push_back("f and g are both I-continuous; the composite check failed");
    e.fail(std::move(fd));
  }
  return e;
}

Eval eval_h_composition(const InducedMaps& f, const InducedMaps& g, const HOperator& h_l, const HOperator& h_m,
                        const HOperator& h_n, bool trace) {
  Eval e;
  e.operators += 3;
  const HCompositionReport r = check_h_composition(f, g, h_l, h_m, h_n);
  e.escapes += r.escapes;
  if (r.result.verdict == Verdict::PreconditionUnmet) {
    ++e.unmet;
    return e;
  }
  ++e.instances;
  if (r.result.verdict == Verdict::Fail) {
    Finding fd{r.result.detail, {}, {}};
    if (trace) fd.steps.push_back("f and g are both h-continuous; the composite check failed");
    e.fail(std::move(fd));
  }
  return e;
}

// ---- initial operators ----

namespace {

/// Steps of f_{-1}[op(f[S])] for one S, ending at the sloc-core fixpoint.
void trace_candidate(std::vector<std::string>& out, const InducedMaps& f, int s, int value_m,
                     const std::string& name, const std::string& op_name) {
  const auto& ms = *f.target;
  const Frame& L = *f.source->host();
  out.push_back("f[" + name + "] = " + ms.render(f.img(s)));
  out.push_back(op_name + "(f[" + name + "]) = " + ms.render(value_m));
  const ElemSet pre = set_preimage(f.map, ms.members(value_m));
  out.push_back("set preimage f^{-1}[" + ms.render(value_m) + "] = " + L.render(pre));
  const auto iterations = sloc_core_trace(L, pre);
  for (std::size_t k = 0; k < iterations.size(); ++k) {
    out.push_back("sloc-core iteration " + std::to_string(k) + ": " + L.render(iterations[k]));
  }
}

bool unit_gap(const InducedMaps& f, int s) { return f.pre(f.img(s)) != s; }
bool counit_gap(const InducedMaps& f, int t) { return f.img(f.pre(t)) != t; }

}  // namespace

Eval eval_initial(const InducedMaps& f, const InteriorOperator& op_m, bool trace) {
  Eval e;
  ++e.operators;
  const auto& ls = *f.source;
  const auto& ms = *f.target;
  const InitialResult r = initial_interior(f, op_m);
  const auto& cand = r.candidate;
  for (const auto& a : r.report.axioms) {
    ++e.instances;
    if (a.passed) continue;
    Finding fd{a.name + ": " + a.witness, {}, {}};
    if (a.name == "I1") {
      const int s = a.witness_ids[0];
      if (unit_gap(f, s)) fd.anomaly = "initial-contraction";
      if (trace) {
        fd.steps.push_back("S = " + ls.render(s));
        trace_candidate(fd.steps, f, s, op_m(f.img(s)), "S", "i_M");
        fd.steps.push_back("unit: f_{-1}[f[S]] = " + ls.render(f.pre(f.img(s))) + (unit_gap(f, s) ? " ≠ S" : " = S"));
        fd.steps.push_back("i_{L_f}(S) = " + named(ls, cand(s), "L") + " ⊄ S");
      }
    } else if (a.name == "I3") {
      if (!r.image_is_total) fd.anomaly = "initial-upper-bound";
      if (trace) {
        fd.steps.push_back("f[L] " + std::string(r.image_is_total ? "= M" : "≠ M"));
        trace_candidate(fd.steps, f, ls.top(), op_m(f.img(ls.top())), "L", "i_M");
        fd.steps.push_back("i_{L_f}(L) = " + named(ls, cand(ls.top()), "L") + " ≠ L");
      }
    } else if (a.name == "f I-continuous") {
      const int t = a.witness_ids[0];
      if (counit_gap(f, t)) fd.anomaly = "initial-continuity";
      if (trace) {
        const int p = f.pre(t);
        fd.steps.push_back("T = " + ms.render(t));
        fd.steps.push_back("f_{-1}[i_M(T)] = " + ls.render(f.pre(op_m(t))));
        fd.steps.push_back("f_{-1}[T] = " + ls.render(p));
        trace_candidate(fd.steps, f, p, op_m(f.img(p)), "f_{-1}[T]", "i_M");
        fd.steps.push_back("counit: f[f_{-1}[T]] = " + ms.render(f.img(p)) + (counit_gap(f, t) ? " ≠ T" : " = T"));
        fd.steps.push_back("f_{-1}[i_M(T)] = " + ls.render(f.pre(op_m(t))) + inside(false) +
                           "i_{L_f}(f_{-1}[T]) = " + ls.render(cand(p)));
      }
    } else if (trace) {
      fd.steps.push_back("no registered explanation applies to " + a.name);
    }
    e.fail(std::move(fd));
  }
  return e;
}

Eval eval_h_initial(const InducedMaps& f, const HOperator& h_m, const FragmentPtr& l_fragment, bool trace) {
  Eval e;
  ++e.operators;
  const auto& ls = *f.source;
  const auto& ms = *f.target;
  const HInitialResult r = initial_h(f, h_m, l_fragment);
  e.escapes += static_cast<long>(r.escapes.size());
  const auto& cand = r.candidate;
  for (const auto& a : r.report.axioms) {
    ++e.instances;
    if (a.passed) continue;
    Finding fd{a.name + ": " + a.witness, {}, {}};
    if (a.name == "h3") {
      if (!r.image_is_total) fd.anomaly = "h-initial-upper-bound";
      if (trace) {
        fd.steps.push_back("f[L] " + std::string(r.image_is_total ? "= M" : "≠ M"));
        trace_candidate(fd.steps, f, ls.top(), h_m(f.img(ls.top())), "L", "h_M");
        fd.steps.push_back("h_{L_f}(L) = " + named(ls, cand(ls.top()), "L") + " ≠ L");
      }
    } else if (a.name == "f h-continuous") {
      const int t = a.witness_ids[0];
      if (counit_gap(f, t)) fd.anomaly = "h-initial-continuity";
      if (trace) {
        const int p = f.pre(t);
        fd.steps.push_back("T = " + ms.render(t) + ", h_M(T) = " + ms.render(h_m(t)));
        fd.steps.push_back("f_{-1}[T ^ h_M(T)] = " + ls.render(f.pre(ms.meet(t, h_m(t)))));
        fd.steps.push_back("f_{-1}[T] = " + ls.render(p));
        trace_candidate(fd.steps, f, p, h_m(f.img(p)), "f_{-1}[T]", "h_M");
        fd.steps.push_back("counit: f[f_{-1}[T]] = " + ms.render(f.img(p)) + (counit_gap(f, t) ? " ≠ T" : " = T"));
        fd.steps.push_back("f_{-1}[T] ^ h_{L_f}(f_{-1}[T]) = " + ls.render(ls.meet(p, cand(p))));
      }
    } else if (trace) {
      fd.steps.push_back("no registered explanation applies to " + a.name);
    }
    e.fail(std::move(fd));
  }
  return e;
}

Eval eval_coarseness(const InducedMaps& f, const InteriorOperator& op_m, const InteriorOperator& op_l, bool trace) {
  Eval e;
  e.operators += 2;
  const auto& ls = *f.source;
  if (!check_interior(op_l).passed() || !is_I_continuous(f, op_l, op_m).passed) {
    ++e.unmet;
    return e;
  }
  const InteriorOperator cand = initial_interior(f, op_m).candidate;
  const InteriorOperator least = least_continuous_source(f, op_m);
  e.instances += 4;
  const OrderCheck c = op_le(cand, op_l);
  if (!c.holds) {
    const int s = c.witness;
    Finding fd{"i_{L_f}(S) = " + ls.render(cand(s)) + " not inside i_L(S) = " + ls.render(op_l(s)) + " at S=" +
                   ls.render(s),
               unit_gap(f, s) ? "initial-coarseness" : "", {}};
    if (trace) {
      fd.steps.push_back("f is I-continuous for (i_L, i_M)");
      trace_candidate(fd.steps, f, s, op_m(f.img(s)), "S", "i_M");
      fd.steps.push_back("unit: f_{-1}[f[S]] = " + ls.render(f.pre(f.img(s))) + (unit_gap(f, s) ? " ≠ S" : " = S"));
      fd.steps.push_back("continuity only bounds it by i_L(f_{-1}[f[S]]) = " + ls.render(op_l(f.pre(f.img(s)))));
    }
    e.fail(std::move(fd));
  }
  const OrderCheck lc = op_le(least, op_l);
  if (!lc.holds) e.fail({"least continuous source not below i_L at S=" + ls.render(lc.witness), {}, {}});
  if (!check_interior(least).passed()) e.fail({"least continuous source is not an interior operator", {}, {}});
  if (!is_I_continuous(f, least, op_m).passed) e.fail({"f is not continuous for the least continuous source", {}, {}});
  return e;
}

Eval eval_universal(const InducedMaps& f, const InteriorOperator& op_m, const InducedMaps& g,
                    const InteriorOperator& op_n, bool trace) {
  Eval e;
  e.operators += 2;
  ++e.instances;
  const UniversalReport r = check_universal_property(f, op_m, g, op_n);
  if (r.agree()) return e;
  const auto& ls = *f.source;
  const InteriorOperator cand = initial_interior(f, op_m).candidate;
  Finding fd;
  if (r.g_continuous) {
    const auto fc = is_I_continuous(f, cand, op_m);
    fd.summary = "g continuous for i_{L_f} but f g not continuous at T=" + f.target->render(r.fg_witness);
    if (!fc.passed) fd.anomaly = "universal-lifting";
    if (trace) {
      fd.steps.push_back("g: (N, i_N) -> (L, i_{L_f}) is I-continuous");
      fd.steps.push_back("f g fails I-continuity at T=" + f.target->render(r.fg_witness));
      fd.steps.push_back(fc.passed ? "f is I-continuous for i_{L_f}"
                                   : "f itself is not I-continuous for i_{L_f} (T=" + f.target->render(fc.witness) + ")");
    }
  } else {
    const int s = r.g_witness;
    fd.summary = "f g continuous but g not continuous for i_{L_f} at S=" + ls.render(s);
    if (unit_gap(f, s)) fd.anomaly = "universal-descent";
    if (trace) {
      fd.steps.push_back("f g: (N, i_N) -> (M, i_M) is I-continuous");
      fd.steps.push_back("S = " + ls.render(s) + ", i_{L_f}(S) = " + ls.render(cand(s)));
      fd.steps.push_back("g_{-1}[i_{L_f}(S)] = " + g.source->render(g.pre(cand(s))));
      fd.steps.push_back("i_N(g_{-1}[S]) = " + g.source->render(op_n(g.pre(s))));
      fd.steps.push_back("unit: f_{-1}[f[S]] = " + ls.render(f.pre(f.img(s))) + (unit_gap(f, s) ? " ≠ S" : " = S"));
    }
  }
  e.fail(std::move(fd));
  return e;
}

Eval eval_h_universal(const InducedMaps& f, const HOperator& h_m, const FragmentPtr& l_fragment,
                      const InducedMaps& g, const HOperator& h_n, bool trace) {
  Eval e;
  e.operators += 2;
  ++e.instances;
  const HUniversalReport hr = check_h_universal(f, h_m, l_fragment, g, h_n);
  e.escapes += hr.escapes;
  const UniversalReport& r = hr.result;
  if (r.agree()) return e;
  const auto& ls = *f.source;
  const HOperator cand = initial_h(f, h_m, l_fragment).candidate;
  Finding fd;
  if (r.g_continuous) {
    const auto fc = is_h_continuous(f, cand, h_m);
    fd.summary = "g h-continuous for h_{L_f} but f g not h-continuous at T=" + f.target->render(r.fg_witness);
    if (!fc.passed) fd.anomaly = "h-universal-lifting";
    if (trace) {
      fd.steps.push_back("f g fails h-continuity at T=" + f.target->render(r.fg_witness));
      fd.steps.push_back(fc.passed ? "f is h-continuous for h_{L_f}"
                                   : "f itself is not h-continuous for h_{L_f} (T=" + f.target->render(fc.witness) + ")");
    }
  } else {
    const int s = r.g_witness;
    fd.summary = "f g h-continuous but g not h-continuous for h_{L_f} at S=" + ls.render(s);
    if (unit_gap(f, s)) fd.anomaly = "h-universal-descent";
    if (trace) {
      fd.steps.push_back("S = " + ls.render(s) + ", h_{L_f}(S) = " + ls.render(cand(s)));
      fd.steps.push_back("unit: f_{-1}[f[S]] = " + ls.render(f.pre(f.img(s))) + (unit_gap(f, s) ? " ≠ S" : " = S"));
    }
  }
  e.fail(std::move(fd));
  return e;
}

Eval eval_open_preimage(const InducedMaps& f, const InteriorOperator& op_l, const InteriorOperator& op_m,
                        bool trace) {
  Eval e;
  e.operators += 2;
  const OpenPreimageReport r = check_open_preimage(f, op_l, op_m);
  if (r.verdict == Verdict::PreconditionUnmet) {
    ++e.unmet;
    return e;
  }
  e.instances += static_cast<long>(open_fixpoints(op_m).size());
  if (r.verdict == Verdict::Fail) {
    const int t = r.witness, p = f.pre(t);
    Finding fd{"T=" + f.target->render(t) + " is open but f_{-1}[T]=" + f.source->render(p) + " is not", {}, {}};
    if (trace) fd.steps.push_back("i_L(f_{-1}[T]) = " + f.source->render(op_l(p)));
    e.fail(std::move(fd));
  }
  return e;
}

// ---- points ----

Eval eval_spatial(const FramePtr& frame, bool trace) {
  Eval e;
  const Frame& F = *frame;
  const SpatialReport rep = is_spatial(frame);
  e.instances += rep.pairs + 1;
  if (!rep.spatial) {
    Finding fd{"no point separates a=" + F.label(rep.a) + " from b=" + F.label(rep.b), {}, {}};
    if (trace) fd.steps.push_back(std::to_string(points_of(frame).size()) + " points enumerated");
    e.fail(std::move(fd));
  }
  const bool injective = is_injective(spatialization(frame));
  if (injective != rep.spatial) {
    e.fail({std::string("spatialization injective: ") + (injective ? "yes" : "no") + ", witness-pair test: " +
                (rep.spatial ? "spatial" : "not spatial"),
            {}, {}});
  }
  const auto pts = points_of(frame);
  const FramePtr two = fixtures::two();
  auto sigma = [&](Elem a) {
    ElemSet s;
    for (std::size_t p = 0; p < pts.size(); ++p) {
      if (pts[p](a)) s.insert(static_cast<Elem>(p));
    }
    return s;
  };
  for (const auto& p : pts) {
    ++e.instances;
    std::vector<Elem> map(F.size());
    for (Elem a = 0; a < F.size(); ++a) map[a] = p(a) ? two->top() : two->bottom();
    const LawReport r = check_frame_hom(F, *two, map);
    if (!r) e.fail({point_label(p) + " is not a frame map into 2: " + r.witness, {}, {}});
  }
  for (Elem a = 0; a < F.size(); ++a) {
    for (Elem b = 0; b < F.size(); ++b) {
      e.instances += 2;
      if (sigma(F.meet(a, b)) != (sigma(a) & sigma(b))) e.fail({"Sigma does not preserve a^b at a=" + F.label(a) + " b=" + F.label(b), {}, {}});
      if (sigma(F.join(a, b)) != (sigma(a) | sigma(b))) e.fail({"Sigma does not preserve avb at a=" + F.label(a) + " b=" + F.label(b), {}, {}});
    }
  }
  return e;
}

Eval eval_sobrification(const Poset& base, bool trace) {
  Eval e;
  const FiniteSpace X = downset_space(base);
  const Sobrification sob = sobrification(X);
  e.instances += 3;
  if (!sob.validation) e.fail({"sobrification map invalid: " + sob.validation.law + " " + sob.validation.witness, {}, {}});
  ElemSet hit;
  for (Elem y : sob.point_map) hit.insert(y);
  if (hit.size() != X.size() || sob.target.size() != X.size()) {
    Finding fd{"x |-> f_x is not a bijection onto pt(Omega(X)) for a T0 space", {}, {}};
    if (trace) fd.steps.push_back(std::to_string(X.size()) + " points, " + std::to_string(sob.target.size()) + " points of Omega(X)");
    e.fail(std::move(fd));
  }
  if (!order_isomorphic(frame_of_space(X).poset(), downset_frame(base).poset())) {
    e.fail({"Omega of the downset space is not isomorphic to the downset frame", {}, {}});
  }
  return e;
}

}  // namespace localelab::verify::detail
