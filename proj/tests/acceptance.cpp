// Acceptance run: one PASS/FAIL line per criterion. All counts are compared
// exactly (tolerance 0); nothing here is a floating-point quantity.

#include <array>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "localelab/corpus.hpp"
#include "localelab/io.hpp"
#include "localelab/verify.hpp"
#include "oracles.hpp"

using namespace localelab;
using io::Json;

namespace {

struct Outcome {
  bool pass = true;
  std::vector<std::string> notes;

  void require(bool ok, const std::string& what) {
    pass = pass && ok;
    notes.push_back(std::string(ok ? "ok   " : "FAIL ") + what);
  }
  void note(const std::string& what) { notes.push_back("note " + what); }
};

std::string str(long v) { return std::to_string(v); }

struct CorpusItem {
  FramePtr frame;
  SublocaleLatticePtr sl;
  FragmentPtr fragment;
};

std::vector<CorpusItem> corpus(int max_poset) {
  std::vector<CorpusItem> out;
  for (const auto& c : frame_corpus(max_poset)) {
    auto sl = share(enumerate_sublocales(c.frame, 16));
    out.push_back({c.frame, sl, share(complemented_fragment(sl))});
  }
  return out;
}

// 1. Fixture counts.
Outcome fixture_counts() {
  Outcome o;
  const std::array<std::pair<const char*, FramePtr>, 3> fx{
      {{"TWO", fixtures::two()}, {"CHAIN3", fixtures::chain3()}, {"SQUARE", fixtures::square()}}};
  const std::array<int, 3> want_sl{2, 4, 4};
  for (std::size_t i = 0; i < fx.size(); ++i) {
    const auto& [name, f] = fx[i];
    const int got = enumerate_sublocales(f).size();
    const int oracle_count = static_cast<int>(oracle::sublocales(*f).size());
    o.require(got == want_sl[i] && oracle_count == want_sl[i],
              std::string("|S_l(") + name + ")| = " + str(got) + ", oracle " + str(oracle_count) + ", want " +
                  str(want_sl[i]));
  }
  for (const auto& [name, f] : {fx[1], fx[2]}) {
    const int got = static_cast<int>(points_of(f).size());
    const int oracle_count = static_cast<int>(oracle::points(*f).size());
    o.require(got == 2 && oracle_count == 2,
              std::string("|pt(") + name + ")| = " + str(got) + ", oracle " + str(oracle_count) + ", want 2");
  }
  return o;
}

// 2. Heyting adjunction, complements, generation, joins on downset frames of posets of size <= 4.
Outcome frame_laws() {
  Outcome o;
  const auto items = corpus(4);
  long triples = 0, heyting_fail = 0, comp = 0, comp_fail = 0, gen = 0, gen_fail = 0, pairs = 0, join_fail = 0;
  for (const auto& it : items) {
    const Frame& f = *it.frame;
    const auto& sl = *it.sl;
    for (Elem a = 0; a < f.size(); ++a) {
      for (Elem b = 0; b < f.size(); ++b) {
        if (f.implies(b, a) != oracle::implies(f, b, a)) ++heyting_fail;
        for (Elem c = 0; c < f.size(); ++c) {
          ++triples;
          if (f.le(f.meet(a, b), c) != f.le(a, f.implies(b, c))) ++heyting_fail;
        }
      }
      ++comp;
      const int op = sl.open(a), cl = sl.closed(a);
      if (sl.complement(op) != cl || sl.meet(op, cl) != sl.bottom() || sl.join(op, cl) != sl.top()) ++comp_fail;
    }
    if (f.size() <= 6) {
      for (int s = 0; s < sl.size(); ++s) {
        ++gen;
        if (!generation_check(sl, s).passed) ++gen_fail;
      }
    }
    const auto subs = oracle::sublocales(f);
    for (int a = 0; a < sl.size(); ++a) {
      for (int b = 0; b < sl.size(); ++b) {
        ++pairs;
        const Sublocale j = sub_join(it.frame, {sl.sublocale(a), sl.sublocale(b)});
        if (j.members != oracle::least_containing(subs, sl.members(a) | sl.members(b), f.all())) ++join_fail;
      }
    }
  }
  o.require(items.size() == 24, "corpus frames: " + str(static_cast<long>(items.size())) + " (1 + 2 + 5 + 16)");
  o.require(heyting_fail == 0, "Heyting adjunction: " + str(triples) + " triples, " + str(heyting_fail) + " failures");
  o.require(comp_fail == 0, "c(a)/o(a) complementation: " + str(comp) + " elements, " + str(comp_fail) + " failures");
  o.require(gen_fail == 0, "generation (|L| <= 6): " + str(gen) + " sublocales, " + str(gen_fail) + " failures");
  o.require(join_fail == 0, "sub_join = least containing sublocale: " + str(pairs) + " pairs, " + str(join_fail) +
                                " failures");
  return o;
}

// 3. Frame homs between corpus frames with |L|, |M| <= 4.
Outcome localic_maps() {
  Outcome o;
  const auto items = corpus(4);
  long homs = 0, localic_fail = 0, adj_pairs = 0, adj_fail = 0, round_fail = 0;
  for (const auto& m : items) {
    if (m.frame->size() > 4) continue;
    for (const auto& l : items) {
      if (l.frame->size() > 4) continue;
      for (const auto& h : enumerate_frame_homs(m.frame, l.frame)) {
        ++homs;
        const LocalicMap f = right_adjoint(h);
        try {
          make_localic_map(f.source, f.target, f.map);
        } catch (const LocaleError&) {
          ++localic_fail;
        }
        const PairCheck pc = check_adjunction(induce(f, l.sl, m.sl));
        adj_pairs += pc.pairs;
        if (!pc.report.passed) ++adj_fail;
        if (!(left_adjoint(f.source, f.target, f.map) == h)) ++round_fail;
      }
    }
  }
  o.require(homs > 0, "frame homs: " + str(homs));
  o.require(localic_fail == 0, "right_adjoint localic: " + str(localic_fail) + " failures");
  o.require(adj_fail == 0, "check_adjunction: " + str(adj_pairs) + " (S,T) pairs, " + str(adj_fail) + " failing maps");
  o.require(round_fail == 0, "left_adjoint(right_adjoint(h)) = h: " + str(round_fail) + " failures");
  return o;
}

// 4. Operator suites on corpus frames with |L| <= 5.
Outcome operator_suites() {
  Outcome o;
  constexpr int kSamples = 100;
  long frames = 0, generated = 0, axiom_fail = 0, order_fail = 0, above_discrete = 0;
  for (const auto& it : corpus(4)) {
    if (it.frame->size() > 5) continue;
    ++frames;
    const auto& sl = it.sl;
    const auto& frag = it.fragment;
    const InteriorOperator d = discrete_op(sl), t = trivial_op(sl);
    const HOperator hd = discrete_h(frag), ht = trivial_h(frag);
    std::mt19937_64 rng(1000 + frames);
    for (int k = 0; k < kSamples; ++k) {
      const InteriorOperator a = random_interior(sl, rng), b = random_interior(sl, rng);
      const HOperator ha = random_contractive_h(frag, rng), hb = random_contractive_h(frag, rng);
      const HOperator general = random_h(frag, rng);
      generated += 5;
      const std::array<InteriorOperator, 2> ab{a, b};
      const std::array<HOperator, 2> hab{ha, hb};
      for (const auto& x : {a, b, op_join(ab), op_meet(ab), d, t}) {
        axiom_fail += !check_interior(x).passed();
        axiom_fail += !check_h(restrict_to_fragment(frag, x)).passed();
        order_fail += !op_le(t, x).holds || !op_le(x, d).holds;
      }
      for (const auto& x : {ha, hb, h_join(hab), h_meet(hab), hd, ht}) {
        axiom_fail += !check_h(x).passed();
        order_fail += !h_le(ht, x).holds || !h_le(x, hd).holds;
      }
      axiom_fail += !check_h(general).passed();
      above_discrete += !h_le(general, hd).holds;
    }
  }
  o.require(frames > 0, "frames with |L| <= 5: " + str(frames) + ", " + str(kSamples) + " seeded draws each");
  o.require(axiom_fail == 0, "check_interior / check_h on discrete, trivial, random, join, meet: " +
                                 str(axiom_fail) + " failures");
  o.require(order_fail == 0, "trivial <= X <= discrete over " + str(generated - generated / 5) +
                                 " monotone-closure operators: " + str(order_fail) + " failures");
  o.note("valid non-contractive h operators above discrete pointwise: " + str(above_discrete) + " of " +
         str(generated / 5) + " (registered anomaly h-discrete-not-largest)");
  return o;
}

const Json& check_entry(const Json& report, const std::string& id) {
  for (const auto& c : report.at("checks")) {
    if (c.at("id") == id) return c;
  }
  throw std::runtime_error("missing check " + id);
}

long count(const Json& c, const char* key) { return c.at(key).get<long>(); }

long anomaly_count(const Json& c, const std::string& id) {
  const Json& m = c.at("by_anomaly");
  return m.contains(id) ? m.at(id).get<long>() : 0;
}

verify::CorpusConfig harness_config(std::vector<std::string> checks) {
  verify::CorpusConfig cfg;
  cfg.max_poset_size = 4;
  cfg.operator_samples_per_frame = 100;
  cfg.seed = 42;
  cfg.configurations = 200;
  cfg.checks = std::move(checks);
  return cfg;
}

// 5. Composition.
Outcome composition() {
  Outcome o;
  const Json r = verify::run_verify(harness_config({"composition"}));
  for (const char* id : {"interior.composition", "h.composition"}) {
    const Json& c = check_entry(r, id);
    o.require(count(c, "instances") >= 200 && count(c, "failures") == 0 && count(c, "expected_failures") == 0,
              std::string(id) + ": " + str(count(c, "instances")) + " composable triples, " +
                  str(count(c, "failures")) + " failures, " + str(count(c, "escapes")) + " escapes, " +
                  str(count(c, "precondition_unmet")) + " precondition unmet");
  }
  return o;
}

// 6. Initial operators and universal properties.
Outcome initial_suites() {
  Outcome o;
  const Json r = verify::run_verify(harness_config({"initial", "universal"}));
  const Json& ii = check_entry(r, "interior.initial");
  const Json& hi = check_entry(r, "h.initial");
  const long i1 = anomaly_count(ii, "initial-contraction");
  const long cont = anomaly_count(ii, "initial-continuity");
  o.require(i1 == 0, "I1 over all corpus (f, opM): " + str(count(ii, "instances")) + " instances, " + str(i1) +
                         " failures (each at S with f_{-1}[f[S]] != S)");
  o.require(count(ii, "failures") == 0,
            "I2, and I3 whenever f[L] = M: " + str(count(ii, "failures")) + " unexplained failures");
  o.require(cont == 0, "f I-continuous for the initial operator: " + str(cont) +
                           " failures (each at T with f[f_{-1}[T]] != T)");
  o.require(count(hi, "failures") == 0, "h2, and h3 whenever f[L] = M: " + str(count(hi, "failures")) +
                                            " unexplained failures");

  const auto homs = enumerate_frame_homs(fixtures::chain3(), fixtures::two());
  bool i3_fails = true, h3_fails = true;
  for (const auto& h : homs) {
    const LocalicMap f = right_adjoint(h);
    const auto lsl = share(enumerate_sublocales(f.source)), msl = share(enumerate_sublocales(f.target));
    const InducedMaps ind = induce(f, lsl, msl);
    i3_fails = i3_fails && !initial_interior(ind, trivial_op(msl)).report.at("I3").passed;
    const auto lf = share(complemented_fragment(lsl)), mf = share(complemented_fragment(msl));
    h3_fails = h3_fails && !initial_h(ind, trivial_h(mf), lf).report.at("h3").passed;
  }
  bool registered_i3 = false, registered_h3 = false;
  for (const auto& a : r.at("anomalies")) {
    const bool hit = a.at("confirmed").get<bool>() && !a.at("witnesses").empty();
    if (a.at("id") == "initial-upper-bound") registered_i3 = hit;
    if (a.at("id") == "h-initial-upper-bound") registered_h3 = hit;
  }
  const std::string first = ii.at("witnesses").empty() ? "" : ii.at("witnesses")[0].at("summary").get<std::string>();
  o.require(i3_fails && registered_i3 && first.rfind("I3", 0) == 0,
            "TWO -> CHAIN3 / trivial fails I3 and heads the registry: " + first);
  o.require(h3_fails && registered_h3, "its h twin fails h3 and is registered");

  for (const char* id : {"interior.universal", "h.universal"}) {
    const Json& c = check_entry(r, id);
    o.require(count(c, "instances") >= 200 && count(c, "failures") == 0,
              std::string(id) + ": " + str(count(c, "instances")) + " configurations, " +
                  str(count(c, "expected_failures")) + " registry-linked, " + str(count(c, "failures")) +
                  " unexplained");
  }
  return o;
}

// 7. Open preimage over I-continuous triples with |L| <= 5.
Outcome open_preimage() {
  Outcome o;
  const auto items = corpus(4);
  long triples = 0, failures = 0, unmet = 0;
  std::mt19937_64 rng(77);
  for (const auto& m : items) {
    if (m.frame->size() > 5) continue;
    for (const auto& l : items) {
      if (l.frame->size() > 5) continue;
      for (const auto& h : enumerate_frame_homs(m.frame, l.frame)) {
        const InducedMaps f = induce(right_adjoint(h), l.sl, m.sl);
        std::vector<InteriorOperator> ops_m{discrete_op(m.sl), trivial_op(m.sl)};
        for (int k = 0; k < 10; ++k) ops_m.push_back(random_interior(m.sl, rng));
        for (const auto& op_m : ops_m) {
          const InteriorOperator least = least_continuous_source(f, op_m);
          std::vector<InteriorOperator> ops_l{least, discrete_op(l.sl)};
          for (int k = 0; k < 3; ++k) {
            const std::array<InteriorOperator, 2> pair{least, random_interior(l.sl, rng)};
            ops_l.push_back(op_join(pair));
          }
          for (const auto& op_l : ops_l) {
            if (!is_I_continuous(f, op_l, op_m).passed) continue;
            ++triples;
            const auto v = check_open_preimage(f, op_l, op_m).verdict;
            failures += v == Verdict::Fail;
            unmet += v == Verdict::PreconditionUnmet;
          }
        }
      }
    }
  }
  o.require(triples > 0 && failures == 0 && unmet == 0,
            "I-continuous triples: " + str(triples) + ", " + str(failures) + " failures");
  return o;
}

// 8. Spatiality.
Outcome spatiality() {
  Outcome o;
  long frames = 0, spatial = 0, agree = 0;
  for (const auto& c : frame_corpus(4)) {
    ++frames;
    const SpatialReport r = is_spatial(c.frame);
    spatial += r.spatial;
    agree += is_injective(spatialization(c.frame)) == r.spatial;
  }
  o.require(spatial == frames, "spatial: " + str(spatial) + " of " + str(frames) + " corpus frames");
  o.require(agree == frames, "injectivity agrees with the witness-pair definition: " + str(agree) + " of " +
                                 str(frames));
  return o;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// 9. Determinism and replay.
Outcome determinism() {
  Outcome o;
  const std::string base = std::string(LOCALELAB_CLI) + " verify --max-poset 4 --samples 100 --seed 42 --report ";
  const int rc1 = std::system((base + "acceptance_run1.json > /dev/null").c_str());
  const int rc2 = std::system((base + "acceptance_run2.json > /dev/null").c_str());
  const std::string a = read_file("acceptance_run1.json"), b = read_file("acceptance_run2.json");
  o.require(rc1 == 0 && rc2 == 0 && !a.empty() && a == b,
            "two CLI runs: " + str(static_cast<long>(a.size())) + " bytes, identical: " + (a == b ? "yes" : "no"));
  const Json report = Json::parse(a);
  long witnesses = 0, reproduced = 0;
  for (const auto& c : report.at("checks")) {
    for (const auto& w : c.at("witnesses")) {
      ++witnesses;
      reproduced += verify::replay(report, w.at("id")).reproduced;
    }
  }
  o.require(witnesses > 0 && reproduced == witnesses,
            "replay: " + str(reproduced) + " of " + str(witnesses) + " recorded witnesses reproduced");
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"1 fixture counts", fixture_counts},
      {"2 frame and sublocale laws", frame_laws},
      {"3 localic maps and adjunction", localic_maps},
      {"4 operator suites", operator_suites},
      {"5 composition", composition},
      {"6 initial operators and universal properties", initial_suites},
      {"7 open preimage", open_preimage},
      {"8 spatiality", spatiality},
      {"9 determinism and replay", determinism},
  };
  int failed = 0;
  for (const auto& [name, run] : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    const std::chrono::duration<double> secs = std::chrono::steady_clock::now() - start;
    std::printf("[%s] criterion %s (tolerance: exact, %.2fs)\n", o.pass ? "PASS" : "FAIL", name.c_str(), secs.count());
    for (const auto& n : o.notes) std::printf("       %s\n", n.c_str());
    failed += !o.pass;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
