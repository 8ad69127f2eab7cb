#include "localelab/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>

#include "checks.hpp"
#include "localelab/corpus.hpp"
#include "localelab/io.hpp"

namespace localelab::verify {

using detail::Eval;
using detail::Finding;

// ---- config and catalogue ----

namespace {

constexpr int kMaxPosetSize = 6;
constexpr std::size_t kWitnessCap = 3;

}  // namespace

const std::vector<CheckInfo>& check_catalogue() {
  static const std::vector<CheckInfo> catalogue = {
      {"poset.counts", "posets up to isomorphism: 1, 2, 5, 16, 63 classes, matched by brute force"},
      {"frame.distributive", "downset frames are distributive lattices with correct meet/join tables"},
      {"frame.heyting", "a^b <= c iff a <= b->c, and b->c is the largest x with x^b <= c"},
      {"frame.heyting_identities", "(join A)^b = join{a^b}, b->(meet A) = meet{b->a}, (join A)->b = meet{a->b}"},
      {"frame.heyting_printed", "printed forms b->(join A) = join{b->a} and (join A)->b = join{a->b}"},
      {"sublocale.open_closed", "o(a) and c(a) are sublocales and complements of each other"},
      {"sublocale.intersection", "the intersection of two sublocales is their meet"},
      {"sublocale.join", "meet-closure of a union equals the least sublocale containing it"},
      {"sublocale.join_printed", "printed join formula {join M : M subset of the union}"},
      {"sublocale.core", "sloc-core(A) is the largest sublocale inside a meet-closed A"},
      {"sublocale.generation", "every sublocale is an intersection of sublocales o(x) v c(y)"},
      {"maps.localic", "right adjoints of frame homs preserve meets and 1, and recover the hom"},
      {"sublocale.adjunction", "f[S] <= T iff S <= f_{-1}[T], with unit and counit inclusions"},
      {"interior.axioms", "discrete, trivial, random, joins and meets satisfy I1-I3; trivial <= X <= discrete"},
      {"interior.upward_closure", "continuity for (i_L, i_M) persists for any larger i_L'"},
      {"h.axioms", "discrete, trivial, random, joins and meets satisfy h1-h3; trivial <= X <= discrete pointwise"},
      {"h.fragment", "every sublocale of a finite frame is complemented; interior operators restrict to h operators"},
      {"interior.composition", "composites of I-continuous maps are I-continuous"},
      {"h.composition", "composites of h-continuous maps are h-continuous"},
      {"interior.initial", "f_{-1} i_M f[-] satisfies I1-I3 and makes f I-continuous"},
      {"h.initial", "f_{-1} h_M f[-] satisfies h1-h3 and makes f h-continuous"},
      {"interior.coarseness", "the initial operator lies below every i_L making f I-continuous"},
      {"interior.universal", "g is continuous into (L, i_{L_f}) iff f g is continuous"},
      {"h.universal", "g is h-continuous into (L, h_{L_f}) iff f g is h-continuous"},
      {"interior.open_preimage", "preimages of I-open sublocales under I-continuous maps are I-open"},
      {"points.spatial", "every corpus frame is spatial, matching injectivity of spatialization"},
      {"points.sobrification", "x |-> f_x is a valid bijection for downset spaces, with Omega matching the frame"},
  };
  return catalogue;
}

const std::vector<AnomalyInfo>& anomaly_registry() {
  static const std::vector<AnomalyInfo> registry = {
      {"heyting-printed-identities", "text-discrepancy", "frame.heyting_printed",
       "the printed identities use joins where meets are required; the meet forms hold"},
      {"sublocale-join-printed", "text-discrepancy", "sublocale.join_printed",
       "joins of subsets of the union are not closed under x->(-); the meet-closure is the join"},
      {"h-discrete-not-largest", "counterexample", "h.axioms",
       "h1 places no bound on h(S), so an h operator with h(S) not inside S lies above discrete pointwise"},
      {"initial-upper-bound", "counterexample", "interior.initial",
       "I3 fails for f_{-1} i_M f[-] whenever f[L] != M"},
      {"initial-contraction", "counterexample", "interior.initial",
       "I1 fails at S with f_{-1}[f[S]] != S; the adjunction only gives S <= f_{-1}[f[S]]"},
      {"initial-continuity", "counterexample", "interior.initial",
       "f fails I-continuity for the initial operator at T with f[f_{-1}[T]] != T"},
      {"h-initial-upper-bound", "counterexample", "h.initial", "h3 fails for f_{-1} h_M f[-] whenever f[L] != M"},
      {"h-initial-continuity", "counterexample", "h.initial",
       "f fails h-continuity for the initial operator at T with f[f_{-1}[T]] != T"},
      {"initial-coarseness", "counterexample", "interior.coarseness",
       "the initial operator exceeds an admissible i_L at S with f_{-1}[f[S]] != S"},
      {"universal-lifting", "counterexample", "interior.universal",
       "g continuous into (L, i_{L_f}) but f g not; occurs only when f is not continuous for i_{L_f}"},
      {"universal-descent", "counterexample", "interior.universal",
       "f g continuous but g not continuous into (L, i_{L_f}), at S with f_{-1}[f[S]] != S"},
      {"h-universal-lifting", "counterexample", "h.universal",
       "g h-continuous into (L, h_{L_f}) but f g not; occurs only when f is not h-continuous for h_{L_f}"},
      {"h-universal-descent", "counterexample", "h.universal",
       "f g h-continuous but g not h-continuous into (L, h_{L_f}), at S with f_{-1}[f[S]] != S"},
  };
  return registry;
}

std::vector<std::string> select_checks(const std::vector<std::string>& names) {
  const auto& cat = check_catalogue();
  std::vector<bool> chosen(cat.size(), names.empty());
  for (const auto& name : names) {
    bool matched = false;
    for (std::size_t i = 0; i < cat.size(); ++i) {
      const std::string& id = cat[i].id;
      const auto dot = id.find('.');
      if (id == name || id.substr(0, dot) == name || id.substr(dot + 1) == name) {
        chosen[i] = true;
        matched = true;
      }
    }
    if (!matched) throw LocaleError(ErrorKind::InvalidInput, "unknown check '" + name + "'", name);
  }
  std::vector<std::string> out;
  for (std::size_t i = 0; i < cat.size(); ++i) {
    if (chosen[i]) out.push_back(cat[i].id);
  }
  return out;
}

void CorpusConfig::validate() const {
  auto bad = [](const std::string& what) { throw LocaleError(ErrorKind::InvalidInput, what); };
  if (max_poset_size < 1 || max_poset_size > kMaxPosetSize) bad("max poset size must be in 1.." + std::to_string(kMaxPosetSize));
  if (operator_samples_per_frame < 0) bad("samples must be non-negative");
  if (map_budget < 0) bad("map budget must be non-negative");
  if (size_limit < 1 || size_limit > 30) bad("size limit must be in 1..30");
  if (operator_frame_limit < 1 || map_frame_limit < 1) bad("frame limits must be positive");
  if (configurations < 0) bad("configurations must be non-negative");
  select_checks(checks);
}

Json CorpusConfig::to_json() const {
  return Json{{"max_poset_size", max_poset_size},
              {"operator_samples_per_frame", operator_samples_per_frame},
              {"map_budget", map_budget},
              {"seed", seed},
              {"checks", select_checks(checks)},
              {"size_limit", size_limit},
              {"operator_frame_limit", operator_frame_limit},
              {"map_frame_limit", map_frame_limit},
              {"configurations", configurations}};
}

CorpusConfig CorpusConfig::from_json(const Json& doc) {
  CorpusConfig c;
  try {
    c.max_poset_size = doc.at("max_poset_size").get<int>();
    c.operator_samples_per_frame = doc.at("operator_samples_per_frame").get<int>();
    c.map_budget = doc.at("map_budget").get<int>();
    c.seed = doc.at("seed").get<std::uint64_t>();
    c.checks = doc.at("checks").get<std::vector<std::string>>();
    c.size_limit = doc.at("size_limit").get<int>();
    c.operator_frame_limit = doc.at("operator_frame_limit").get<int>();
    c.map_frame_limit = doc.at("map_frame_limit").get<int>();
    c.configurations = doc.at("configurations").get<int>();
  } catch (const Json::exception& e) {
    throw LocaleError(ErrorKind::ParseError, std::string("report config: ") + e.what());
  }
  return c;
}

// ---- instance payloads ----

namespace {

struct FrameCase {
  std::string name;
  std::optional<Poset> base;
  FramePtr frame;
  SublocaleLatticePtr sl;  // null above the size limit
  FragmentPtr fragment;
};

struct MapCase {
  FrameHom hom;  // M -> L
  int l = 0;
  int m = 0;
  InducedMaps ind;  // the localic map L -> M
};

Json map_json(const std::string& from, const std::string& to, const Frame& src, const Frame& tgt,
              const std::vector<Elem>& table) {
  Json m = Json::object();
  for (Elem x = 0; x < src.size(); ++x) m[src.label(x)] = tgt.label(table[x]);
  return Json{{"from", from}, {"to", to}, {"map", m}};
}

/// Self-contained description of one corpus item, keyed by role names.
struct Payload {
  Json j = Json::object();

  Payload& frame(const std::string& role, const FrameCase& c) {
    j["frames"][role] = Json{{"name", c.name}, {"frame", io::frame_to_json(*c.frame)}};
    return *this;
  }
  Payload& map(const std::string& role, const std::string& from, const std::string& to, const LocalicMap& f) {
    j["maps"][role] = map_json(from, to, *f.source, *f.target, f.map);
    return *this;
  }
  Payload& hom(const std::string& role, const std::string& from, const std::string& to, const FrameHom& h) {
    j["homs"][role] = map_json(from, to, *h.source, *h.target, h.map);
    return *this;
  }
  Payload& op(const std::string& role, const std::string& on, const InteriorOperator& op) {
    j["ops"][role] = io::operator_to_json(op, on);
    return *this;
  }
  Payload& hop(const std::string& role, const std::string& on, const HOperator& op) {
    j["ops"][role] = io::operator_to_json(op, on);
    return *this;
  }
  Payload& subject(const std::string& key, Json value) {
    j["subject"][key] = std::move(value);
    return *this;
  }
};

/// Decodes a payload back into frames, maps and operators.
class Scene {
 public:
  Scene(const Json& instance, int size_limit) : j_(instance), size_limit_(size_limit) {}

  const FramePtr& frame(const std::string& role) {
    auto it = frames_.find(role);
    if (it == frames_.end()) {
      const Json& entry = j_.at("frames").at(role);
      it = frames_.emplace(role, share(io::frame_from_json(entry.at("frame")))).first;
    }
    return it->second;
  }
  SublocaleLatticePtr sl(const std::string& role) {
    auto it = lattices_.find(role);
    if (it == lattices_.end()) it = lattices_.emplace(role, share(enumerate_sublocales(frame(role), size_limit_))).first;
    return it->second;
  }
  FragmentPtr fragment(const std::string& role) {
    auto it = fragments_.find(role);
    if (it == fragments_.end()) it = fragments_.emplace(role, share(complemented_fragment(sl(role)))).first;
    return it->second;
  }
  std::vector<Elem> table(const Json& entry, const Frame& src, const Frame& tgt) {
    io::MapFile file;
    for (auto it = entry.at("map").begin(); it != entry.at("map").end(); ++it) {
      file.pairs.emplace_back(it.key(), it.value().get<std::string>());
    }
    return io::map_table(file, src, tgt);
  }
  FrameHom hom(const std::string& role) {
    const Json& e = j_.at("homs").at(role);
    const auto src = frame(e.at("from")), tgt = frame(e.at("to"));
    return make_frame_hom(src, tgt, table(e, *src, *tgt));
  }
  InducedMaps map(const std::string& role) {
    const Json& e = j_.at("maps").at(role);
    const std::string from = e.at("from"), to = e.at("to");
    const auto src = frame(from), tgt = frame(to);
    return induce(make_localic_map(src, tgt, table(e, *src, *tgt)), sl(from), sl(to));
  }
  InteriorOperator op(const std::string& role) {
    const auto file = io::operator_file_from_json(j_.at("ops").at(role), {});
    const auto lattice = sl(file.frame.string());
    return {lattice, io::operator_table(file, *lattice)};
  }
  HOperator hop(const std::string& role) {
    const auto file = io::operator_file_from_json(j_.at("ops").at(role), {});
    const auto frag = fragment(file.frame.string());
    return {frag, io::operator_table(file, *frag->lattice, frag.get())};
  }
  const Json& subject(const std::string& key) const { return j_.at("subject").at(key); }

  std::vector<std::string> describe() const {
    std::vector<std::string> out;
    if (j_.contains("frames")) {
      for (auto it = j_["frames"].begin(); it != j_["frames"].end(); ++it) {
        out.push_back(it.key() + " = " + it.value().at("name").get<std::string>() + ", elements " +
                      it.value().at("frame").at("elements").dump());
      }
    }
    for (const char* kind : {"homs", "maps"}) {
      if (!j_.contains(kind)) continue;
      for (auto it = j_[kind].begin(); it != j_[kind].end(); ++it) {
        out.push_back(std::string(kind == std::string("homs") ? "frame hom " : "localic map ") + it.key() + ": " +
                      it.value().at("from").get<std::string>() + " -> " + it.value().at("to").get<std::string>() +
                      " " + it.value().at("map").dump());
      }
    }
    if (j_.contains("ops")) {
      for (auto it = j_["ops"].begin(); it != j_["ops"].end(); ++it) {
        out.push_back("operator " + it.key() + " on " + it.value().at("frame").get<std::string>() + ": " +
                      it.value().at("table").dump());
      }
    }
    return out;
  }

 private:
  const Json& j_;
  int size_limit_;
  std::map<std::string, FramePtr> frames_;
  std::map<std::string, SublocaleLatticePtr> lattices_;
  std::map<std::string, FragmentPtr> fragments_;
};

// ---- harness ----

struct Kept {
  std::string summary;
  std::string anomaly;
  Json instance;
};

struct TaskOut {
  Eval totals;
  std::vector<Kept> kept;
  long skipped = 0;
};

void absorb(TaskOut& out, const Eval& e, const std::function<Json()>& payload) {
  Eval counts = e;
  counts.findings.clear();
  out.totals.add(counts);
  if (e.findings.empty()) return;
  const Json instance = payload();
  for (const auto& f : e.findings) {
    if (out.kept.size() < 2 * kWitnessCap) out.kept.push_back({f.summary, f.anomaly, instance});
  }
}

std::mt19937_64 task_rng(std::uint64_t seed, const std::string& check, std::uint64_t index) {
  std::uint64_t h = 1469598103934665603ull;  // FNV-1a
  for (unsigned char c : check) {
    h ^= c;
    h *= 1099511628211ull;
  }
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(h), static_cast<std::uint32_t>(h >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  return std::mt19937_64(seq);
}

int pick(std::mt19937_64& rng, std::size_t n) {
  return static_cast<int>(std::uniform_int_distribution<std::size_t>(0, n - 1)(rng));
}

InteriorOperator lift(const InteriorOperator& base, std::mt19937_64& rng) {
  const std::array<InteriorOperator, 2> pair{base, random_interior(base.lattice, rng)};
  return op_join(pair);
}

HOperator lift(const HOperator& base, std::mt19937_64& rng) {
  const std::array<HOperator, 2> pair{base, random_h(base.fragment, rng)};
  return h_join(pair);
}

struct CheckRecord {
  const CheckInfo* info = nullptr;
  bool selected = false;
  bool ran = false;
  std::string skip_reason;
  Eval totals;
  long items_skipped = 0;
  std::vector<Kept> witnesses;
  std::map<std::string, std::size_t> kept_per_anomaly;
  std::size_t kept_unexplained = 0;
};

class Harness {
 public:
  explicit Harness(const CorpusConfig& cfg) : cfg_(cfg) {
    const auto selected = select_checks(cfg.checks);
    for (const auto& info : check_catalogue()) {
      CheckRecord rec;
      rec.info = &info;
      rec.selected = std::find(selected.begin(), selected.end(), info.id) != selected.end();
      records_.emplace(info.id, std::move(rec));
    }
  }

  Json run() {
    build_frames();
    build_maps();
    frame_checks();
    map_checks();
    operator_checks();
    initial_checks();
    configuration_checks();
    point_checks();
    return assemble();
  }

 private:
  const CorpusConfig& cfg_;
  std::map<std::string, CheckRecord> records_;
  std::vector<FrameCase> frames_;
  std::size_t fixture_count_ = 0;
  std::vector<MapCase> maps_;
  std::vector<MapCase> fixture_maps_;
  std::vector<std::vector<int>> by_source_, by_target_;
  bool budget_exhausted_ = false;

  int samples() const { return cfg_.operator_samples_per_frame; }

  FrameCase make_case(std::string name, std::optional<Poset> base, FramePtr frame) const {
    FrameCase c{std::move(name), std::move(base), std::move(frame), nullptr, nullptr};
    if (c.frame->size() <= cfg_.size_limit) {
      c.sl = share(enumerate_sublocales(c.frame, cfg_.size_limit));
      c.fragment = share(complemented_fragment(c.sl));
    }
    return c;
  }

  void build_frames() {
    frames_.push_back(make_case("TWO", std::nullopt, fixtures::two()));
    frames_.push_back(make_case("CHAIN3", std::nullopt, fixtures::chain3()));
    frames_.push_back(make_case("SQUARE", std::nullopt, fixtures::square()));
    fixture_count_ = frames_.size();
    for (auto& c : frame_corpus(cfg_.max_poset_size)) frames_.push_back(make_case(c.name, c.base, c.frame));
  }

  void build_maps() {
    // The two localic maps TWO -> CHAIN3, named in the anomaly registry.
    for (const auto& h : enumerate_frame_homs(frames_[1].frame, frames_[0].frame)) {
      fixture_maps_.push_back({h, 0, 1, induce(right_adjoint(h), frames_[0].sl, frames_[1].sl)});
    }
    std::vector<int> eligible;
    for (std::size_t i = fixture_count_; i < frames_.size(); ++i) {
      if (frames_[i].sl && frames_[i].frame->size() <= cfg_.map_frame_limit) eligible.push_back(static_cast<int>(i));
    }
    std::size_t remaining = static_cast<std::size_t>(cfg_.map_budget);
    for (int m : eligible) {
      for (int l : eligible) {
        if (remaining == 0) {
          budget_exhausted_ = true;
          break;
        }
        for (auto& h : enumerate_frame_homs(frames_[m].frame, frames_[l].frame, remaining)) {
          LocalicMap f = right_adjoint(h);
          maps_.push_back({std::move(h), l, m, induce(f, frames_[l].sl, frames_[m].sl)});
          --remaining;
        }
      }
    }
    by_source_.assign(frames_.size(), {});
    by_target_.assign(frames_.size(), {});
    for (std::size_t i = 0; i < maps_.size(); ++i) {
      by_source_[maps_[i].l].push_back(static_cast<int>(i));
      by_target_[maps_[i].m].push_back(static_cast<int>(i));
    }
  }

  template <class Fn>
  void run_check(const std::string& id, std::size_t items, Fn&& fn, const std::string& empty_reason = {}) {
    CheckRecord& rec = records_.at(id);
    if (!rec.selected) return;
    rec.ran = true;
    std::vector<TaskOut> outs(items);
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(items); ++i) {
      try {
        fn(static_cast<std::size_t>(i), outs[i]);
      } catch (const std::exception& ex) {
        Eval e;
        e.instances = 1;
        e.fail({std::string("exception: ") + ex.what(), {}, {}});
        const Json item = static_cast<std::int64_t>(i);
        absorb(outs[i], e, [&] { return Json{{"subject", {{"item", item}}}}; });
      }
    }
    for (auto& out : outs) {
      rec.totals.add(out.totals);
      rec.items_skipped += out.skipped;
      for (auto& k : out.kept) {
        std::size_t& n = k.anomaly.empty() ? rec.kept_unexplained : rec.kept_per_anomaly[k.anomaly];
        if (n >= kWitnessCap) continue;
        ++n;
        rec.witnesses.push_back(std::move(k));
      }
    }
    if (rec.totals.instances == 0 && rec.totals.unmet == 0) {
      rec.skip_reason = empty_reason.empty() ? "no items within the configured bounds" : empty_reason;
    }
  }

  void frame_checks() {
    const std::size_t n = frames_.size();
    run_check("poset.counts", 1, [&](std::size_t, TaskOut& out) {
      const int max_n = std::min(cfg_.max_poset_size, 5);
      absorb(out, detail::eval_poset_counts(max_n, false), [&] { return Payload().subject("max_size", max_n).j; });
    });
    auto per_frame = [&](const std::string& id, int max_size, auto eval) {
      run_check(id, n, [&, max_size, eval](std::size_t i, TaskOut& out) {
        const FrameCase& c = frames_[i];
        if (c.frame->size() > max_size) {
          ++out.skipped;
          return;
        }
        absorb(out, eval(*c.frame), [&] { return Payload().frame("L", c).j; });
      });
    };
    per_frame("frame.distributive", kMaxCarrier, [](const Frame& f) { return detail::eval_distributive(f, false); });
    per_frame("frame.heyting", kMaxCarrier, [](const Frame& f) { return detail::eval_heyting(f, false); });
    per_frame("frame.heyting_identities", 8, [](const Frame& f) { return detail::eval_heyting_identities(f, false); });
    per_frame("frame.heyting_printed", 8, [](const Frame& f) { return detail::eval_heyting_printed(f, false); });

    auto per_lattice = [&](const std::string& id, int max_size, auto eval) {
      run_check(id, n, [&, max_size, eval](std::size_t i, TaskOut& out) {
        const FrameCase& c = frames_[i];
        if (!c.sl || c.frame->size() > max_size) {
          ++out.skipped;
          return;
        }
        absorb(out, eval(*c.sl), [&] { return Payload().frame("L", c).j; });
      });
    };
    per_lattice("sublocale.open_closed", kMaxCarrier, [](const SublocaleLattice& s) { return detail::eval_open_closed(s, false); });
    per_lattice("sublocale.intersection", kMaxCarrier, [](const SublocaleLattice& s) { return detail::eval_intersection(s, false); });
    per_lattice("sublocale.join", kMaxCarrier, [](const SublocaleLattice& s) { return detail::eval_join(s, false); });
    per_lattice("sublocale.join_printed", kMaxCarrier, [](const SublocaleLattice& s) { return detail::eval_join_printed(s, false); });
    per_lattice("sublocale.core", 5, [](const SublocaleLattice& s) { return detail::eval_core(s, false); });
    per_lattice("sublocale.generation", kMaxCarrier, [](const SublocaleLattice& s) { return detail::eval_generation(s, false); });
  }

  Payload map_payload(const MapCase& mc) const {
    Payload p;
    p.frame("L", frames_[mc.l]).frame("M", frames_[mc.m]).map("f", "L", "M", mc.ind.map);
    return p;
  }

  void map_checks() {
    run_check("maps.localic", maps_.size(), [&](std::size_t i, TaskOut& out) {
      const MapCase& mc = maps_[i];
      absorb(out, detail::eval_localic(mc.hom, false), [&] {
        return Payload().frame("L", frames_[mc.l]).frame("M", frames_[mc.m]).hom("h", "M", "L", mc.hom).j;
      });
    });
    run_check("sublocale.adjunction", maps_.size(), [&](std::size_t i, TaskOut& out) {
      const MapCase& mc = maps_[i];
      absorb(out, detail::eval_adjunction(mc.ind, false), [&] { return map_payload(mc).j; });
    });
  }

  void operator_checks() {
    const std::size_t n = frames_.size();
    run_check("interior.axioms", n, [&](std::size_t i, TaskOut& out) {
      const FrameCase& c = frames_[i];
      if (!c.sl || c.frame->size() > cfg_.operator_frame_limit) {
        ++out.skipped;
        return;
      }
      auto rng = task_rng(cfg_.seed, "interior.axioms", i);
      for (int k = 0; k <= samples(); ++k) {
        const InteriorOperator a = k == 0 ? discrete_op(c.sl) : random_interior(c.sl, rng);
        const InteriorOperator b = k == 0 ? trivial_op(c.sl) : random_interior(c.sl, rng);
        absorb(out, detail::eval_interior_axioms(a, b, false),
               [&] { return Payload().frame("L", c).op("A", "L", a).op("B", "L", b).j; });
      }
    });
    run_check("h.axioms", n, [&](std::size_t i, TaskOut& out) {
      const FrameCase& c = frames_[i];
      if (!c.sl || c.frame->size() > cfg_.operator_frame_limit) {
        ++out.skipped;
        return;
      }
      auto rng = task_rng(cfg_.seed, "h.axioms", i);
      for (int k = 0; k <= samples(); ++k) {
        const HOperator a = k == 0 ? discrete_h(c.fragment) : random_contractive_h(c.fragment, rng);
        const HOperator b = k == 0 ? trivial_h(c.fragment) : random_h(c.fragment, rng);
        absorb(out, detail::eval_h_axioms(a, b, false),
               [&] { return Payload().frame("L", c).hop("A", "L", a).hop("B", "L", b).j; });
      }
    });
    run_check("h.fragment", n, [&](std::size_t i, TaskOut& out) {
      const FrameCase& c = frames_[i];
      if (!c.sl || c.frame->size() > cfg_.operator_frame_limit) {
        ++out.skipped;
        return;
      }
      auto rng = task_rng(cfg_.seed, "h.fragment", i);
      for (int k = 0; k <= samples(); ++k) {
        const InteriorOperator a = k == 0 ? discrete_op(c.sl) : random_interior(c.sl, rng);
        absorb(out, detail::eval_fragment(a, c.fragment, false), [&] { return Payload().frame("L", c).op("A", "L", a).j; });
      }
    });
    const std::string no_samples = "operator sampling disabled (samples = 0)";
    run_check("interior.upward_closure", maps_.size(), [&](std::size_t i, TaskOut& out) {
      const MapCase& mc = maps_[i];
      auto rng = task_rng(cfg_.seed, "interior.upward_closure", i);
      for (int k = 0; k < samples(); ++k) {
        const InteriorOperator op_m = random_interior(frames_[mc.m].sl, rng);
        const InteriorOperator op_l = lift(least_continuous_source(mc.ind, op_m), rng);
        const InteriorOperator op_l2 = lift(op_l, rng);
        absorb(out, detail::eval_upward(mc.ind, op_l, op_l2, op_m, false), [&] {
          return map_payload(mc).op("opL", "L", op_l).op("opL2", "L", op_l2).op("opM", "M", op_m).j;
        });
      }
    }, no_samples);
    run_check("interior.coarseness", maps_.size(), [&](std::size_t i, TaskOut& out) {
      const MapCase& mc = maps_[i];
      auto rng = task_rng(cfg_.seed, "interior.coarseness", i);
      for (int k = 0; k < samples(); ++k) {
        const InteriorOperator op_m = random_interior(frames_[mc.m].sl, rng);
        const InteriorOperator least = least_continuous_source(mc.ind, op_m);
        const InteriorOperator op_l = k == 0 ? least : lift(least, rng);
        absorb(out, detail::eval_coarseness(mc.ind, op_m, op_l, false),
               [&] { return map_payload(mc).op("opM", "M", op_m).op("opL", "L", op_l).j; });
      }
    }, no_samples);
    run_check("interior.open_preimage", maps_.size(), [&](std::size_t i, TaskOut& out) {
      const MapCase& mc = maps_[i];
      if (frames_[mc.l].frame->size() > cfg_.operator_frame_limit) {
        ++out.skipped;
        return;
      }
      auto rng = task_rng(cfg_.seed, "interior.open_preimage", i);
      for (int k = 0; k < samples(); ++k) {
        const InteriorOperator op_m = random_interior(frames_[mc.m].sl, rng);
        const InteriorOperator op_l = lift(least_continuous_source(mc.ind, op_m), rng);
        absorb(out, detail::eval_open_preimage(mc.ind, op_l, op_m, false),
               [&] { return map_payload(mc).op("opL", "L", op_l).op("opM", "M", op_m).j; });
      }
    }, no_samples);
  }

  void initial_checks() {
    const std::size_t fixtures = fixture_maps_.size();
    auto map_at = [&](std::size_t i) -> const MapCase& { return i < fixtures ? fixture_maps_[i] : maps_[i - fixtures]; };
    run_check("interior.initial", fixtures + maps_.size(), [&](std::size_t i, TaskOut& out) {
      const MapCase& mc = map_at(i);
      const auto& msl = frames_[mc.m].sl;
      auto rng = task_rng(cfg_.seed, "interior.initial", i);
      const int draws = i < fixtures ? 0 : samples();
      for (int k = -2; k < draws; ++k) {
        const InteriorOperator op_m = k == -2 ? trivial_op(msl) : k == -1 ? discrete_op(msl) : random_interior(msl, rng);
        absorb(out, detail::eval_initial(mc.ind, op_m, false), [&] { return map_payload(mc).op("opM", "M", op_m).j; });
      }
    });
    run_check("h.initial", fixtures + maps_.size(), [&](std::size_t i, TaskOut& out) {
      const MapCase& mc = map_at(i);
      const auto& mfrag = frames_[mc.m].fragment;
      auto rng = task_rng(cfg_.seed, "h.initial", i);
      const int draws = i < fixtures ? 0 : samples();
      for (int k = -2; k < draws; ++k) {
        const HOperator h_m = k == -2 ? trivial_h(mfrag) : k == -1 ? discrete_h(mfrag) : random_h(mfrag, rng);
        absorb(out, detail::eval_h_initial(mc.ind, h_m, frames_[mc.l].fragment, false),
               [&] { return map_payload(mc).hop("hM", "M", h_m).j; });
      }
    });
  }

  void configuration_checks() {
    const std::size_t draws = samples() > 0 && !maps_.empty() ? static_cast<std::size_t>(cfg_.configurations) : 0;
    const std::string reason = samples() > 0 ? "no composable maps within the configured bounds"
                                             : "operator sampling disabled (samples = 0)";
    auto chain = [&](std::mt19937_64& rng) {
      const MapCase& f = maps_[pick(rng, maps_.size())];
      const auto& next = by_source_[f.m];  // identities guarantee a non-empty list
      const MapCase& g = maps_[next[pick(rng, next.size())]];
      return std::pair<const MapCase*, const MapCase*>{&f, &g};
    };
    auto chain_payload = [&](const MapCase& f, const MapCase& g) {
      Payload p;
      p.frame("L", frames_[f.l]).frame("M", frames_[f.m]).frame("N", frames_[g.m]);
      p.map("f", "L", "M", f.ind.map).map("g", "M", "N", g.ind.map);
      return p;
    };
    run_check("interior.composition", draws, [&](std::size_t i, TaskOut& out) {
      auto rng = task_rng(cfg_.seed, "interior.composition", i);
      const auto [f, g] = chain(rng);
      const InteriorOperator op_n = random_interior(frames_[g->m].sl, rng);
      // Lifting from the least admissible source keeps both maps continuous.
      const InteriorOperator op_m = lift(least_continuous_source(g->ind, op_n), rng);
      const InteriorOperator op_l = lift(least_continuous_source(f->ind, op_m), rng);
      absorb(out, detail::eval_composition(f->ind, g->ind, op_l, op_m, op_n, false), [&] {
        return chain_payload(*f, *g).op("opL", "L", op_l).op("opM", "M", op_m).op("opN", "N", op_n).j;
      });
    }, reason);
    run_check("h.composition", draws, [&](std::size_t i, TaskOut& out) {
      auto rng = task_rng(cfg_.seed, "h.composition", i);
      const auto [f, g] = chain(rng);
      const HOperator h_n = random_h(frames_[g->m].fragment, rng);
      const HOperator h_m = lift(least_h_continuous_source(g->ind, h_n, frames_[f->m].fragment), rng);
      const HOperator h_l = lift(least_h_continuous_source(f->ind, h_m, frames_[f->l].fragment), rng);
      absorb(out, detail::eval_h_composition(f->ind, g->ind, h_l, h_m, h_n, false), [&] {
        return chain_payload(*f, *g).hop("hL", "L", h_l).hop("hM", "M", h_m).hop("hN", "N", h_n).j;
      });
    }, reason);

    // f: L -> M and g: N -> L.
    auto probe = [&](std::mt19937_64& rng) {
      const MapCase& f = maps_[pick(rng, maps_.size())];
      const auto& into = by_target_[f.l];
      const MapCase& g = maps_[into[pick(rng, into.size())]];
      return std::pair<const MapCase*, const MapCase*>{&f, &g};
    };
    auto probe_payload = [&](const MapCase& f, const MapCase& g) {
      Payload p;
      p.frame("L", frames_[f.l]).frame("M", frames_[f.m]).frame("N", frames_[g.l]);
      p.map("f", "L", "M", f.ind.map).map("g", "N", "L", g.ind.map);
      return p;
    };
    run_check("interior.universal", draws, [&](std::size_t i, TaskOut& out) {
      auto rng = task_rng(cfg_.seed, "interior.universal", i);
      const auto [f, g] = probe(rng);
      const InteriorOperator op_m = random_interior(frames_[f->m].sl, rng);
      InteriorOperator op_n;
      switch (pick(rng, 3)) {
        case 0: op_n = random_interior(frames_[g->l].sl, rng); break;
        case 1: op_n = lift(least_continuous_source(compose_induced(f->ind, g->ind), op_m), rng); break;
        default:
          op_n = lift(least_continuous_source(g->ind, initial_interior(f->ind, op_m).candidate), rng);
      }
      absorb(out, detail::eval_universal(f->ind, op_m, g->ind, op_n, false),
             [&] { return probe_payload(*f, *g).op("opM", "M", op_m).op("opN", "N", op_n).j; });
    }, reason);
    run_check("h.universal", draws, [&](std::size_t i, TaskOut& out) {
      auto rng = task_rng(cfg_.seed, "h.universal", i);
      const auto [f, g] = probe(rng);
      const auto& lfrag = frames_[f->l].fragment;
      const auto& nfrag = frames_[g->l].fragment;
      const HOperator h_m = random_h(frames_[f->m].fragment, rng);
      HOperator h_n;
      switch (pick(rng, 3)) {
        case 0: h_n = random_h(nfrag, rng); break;
        case 1: h_n = lift(least_h_continuous_source(compose_induced(f->ind, g->ind), h_m, nfrag), rng); break;
        default:
          h_n = lift(least_h_continuous_source(g->ind, initial_h(f->ind, h_m, lfrag).candidate, nfrag), rng);
      }
      absorb(out, detail::eval_h_universal(f->ind, h_m, lfrag, g->ind, h_n, false),
             [&] { return probe_payload(*f, *g).hop("hM", "M", h_m).hop("hN", "N", h_n).j; });
    }, reason);
  }

  void point_checks() {
    run_check("points.spatial", frames_.size(), [&](std::size_t i, TaskOut& out) {
      const FrameCase& c = frames_[i];
      if (c.frame->size() > kPointScanLimit) {
        ++out.skipped;
        return;
      }
      absorb(out, detail::eval_spatial(c.frame, false), [&] { return Payload().frame("L", c).j; });
    });
    run_check("points.sobrification", frames_.size(), [&](std::size_t i, TaskOut& out) {
      const FrameCase& c = frames_[i];
      if (!c.base) {
        ++out.skipped;
        return;
      }
      absorb(out, detail::eval_sobrification(*c.base, false),
             [&] { return Payload().frame("L", c).subject("poset", io::poset_to_json(*c.base)).j; });
    });
  }

  Json assemble() const {
    Json checks = Json::array();
    long instances = 0, operators = 0, escapes = 0, unexplained = 0;
    int passed = 0, expected_fail = 0, failed = 0, skipped = 0;
    std::map<std::string, long> occurrences;
    std::map<std::string, std::vector<std::string>> anomaly_witnesses;
    for (const auto& info : check_catalogue()) {
      const CheckRecord& rec = records_.at(info.id);
      if (!rec.selected) continue;
      const Eval& t = rec.totals;
      Json entry{{"id", info.id},
                 {"claim", info.claim},
                 {"instances", t.instances},
                 {"failures", t.failures},
                 {"expected_failures", t.expected},
                 {"precondition_unmet", t.unmet},
                 {"escapes", t.escapes},
                 {"items_skipped", rec.items_skipped}};
      std::string status;
      if (!rec.ran || !rec.skip_reason.empty()) {
        status = "skipped";
        entry["reason"] = rec.ran ? rec.skip_reason : "not run";
        ++skipped;
      } else if (t.failures > 0) {
        status = "fail";
        ++failed;
      } else if (t.expected > 0) {
        status = "expected-fail";
        ++expected_fail;
      } else {
        status = "pass";
        ++passed;
      }
      entry["status"] = status;
      Json by_anomaly = Json::object();
      for (const auto& [k, v] : t.by_anomaly) {
        by_anomaly[k] = v;
        occurrences[k] += v;
      }
      entry["by_anomaly"] = by_anomaly;
      Json witnesses = Json::array();
      int k = 0;
      for (const auto& w : rec.witnesses) {
        const std::string id = info.id + "#" + std::to_string(++k);
        Json wj{{"id", id}, {"summary", w.summary}, {"instance", w.instance}};
        if (!w.anomaly.empty()) {
          wj["anomaly"] = w.anomaly;
          anomaly_witnesses[w.anomaly].push_back(id);
        }
        witnesses.push_back(wj);
      }
      entry["witnesses"] = witnesses;
      checks.push_back(entry);
      instances += t.instances;
      operators += t.operators;
      escapes += t.escapes;
      unexplained += t.failures;
    }
    Json anomalies = Json::array();
    int confirmed = 0;
    for (const auto& a : anomaly_registry()) {
      if (!records_.at(a.check).selected) continue;
      const long occ = occurrences.count(a.id) ? occurrences.at(a.id) : 0;
      if (occ > 0) ++confirmed;
      anomalies.push_back(Json{{"id", a.id},
                               {"kind", a.kind},
                               {"check", a.check},
                               {"title", a.title},
                               {"confirmed", occ > 0},
                               {"occurrences", occ},
                               {"witnesses", anomaly_witnesses.count(a.id) ? anomaly_witnesses.at(a.id)
                                                                          : std::vector<std::string>{}}});
    }
    return Json{{"artifact", {{"name", "localelab"}, {"version", LOCALELAB_VERSION}}},
                {"config", cfg_.to_json()},
                {"counts",
                 {{"frames", frames_.size() - fixture_count_},
                  {"fixture_frames", fixture_count_},
                  {"maps", maps_.size()},
                  {"fixture_maps", fixture_maps_.size()},
                  {"map_budget_exhausted", budget_exhausted_},
                  {"operators", operators},
                  {"escapes", escapes},
                  {"instances", instances}}},
                {"checks", checks},
                {"anomalies", anomalies},
                {"summary",
                 {{"checks_run", passed + expected_fail + failed},
                  {"passed", passed},
                  {"expected_fail", expected_fail},
                  {"failed", failed},
                  {"skipped", skipped},
                  {"unexplained_failures", unexplained},
                  {"anomalies_confirmed", confirmed}}}};
  }
};

// ---- replay ----

using Replayer = std::function<Eval(Scene&)>;

const std::map<std::string, Replayer>& replayers() {
  using namespace detail;
  static const std::map<std::string, Replayer> table = {
      {"poset.counts", [](Scene& s) { return eval_poset_counts(s.subject("max_size").get<int>(), true); }},
      {"frame.distributive", [](Scene& s) { return eval_distributive(*s.frame("L"), true); }},
      {"frame.heyting", [](Scene& s) { return eval_heyting(*s.frame("L"), true); }},
      {"frame.heyting_identities", [](Scene& s) { return eval_heyting_identities(*s.frame("L"), true); }},
      {"frame.heyting_printed", [](Scene& s) { return eval_heyting_printed(*s.frame("L"), true); }},
      {"sublocale.open_closed", [](Scene& s) { return eval_open_closed(*s.sl("L"), true); }},
      {"sublocale.intersection", [](Scene& s) { return eval_intersection(*s.sl("L"), true); }},
      {"sublocale.join", [](Scene& s) { return eval_join(*s.sl("L"), true); }},
      {"sublocale.join_printed", [](Scene& s) { return eval_join_printed(*s.sl("L"), true); }},
      {"sublocale.core", [](Scene& s) { return eval_core(*s.sl("L"), true); }},
      {"sublocale.generation", [](Scene& s) { return eval_generation(*s.sl("L"), true); }},
      {"maps.localic", [](Scene& s) { return eval_localic(s.hom("h"), true); }},
      {"sublocale.adjunction", [](Scene& s) { return eval_adjunction(s.map("f"), true); }},
      {"interior.axioms", [](Scene& s) { return eval_interior_axioms(s.op("A"), s.op("B"), true); }},
      {"interior.upward_closure",
       [](Scene& s) { return eval_upward(s.map("f"), s.op("opL"), s.op("opL2"), s.op("opM"), true); }},
      {"h.axioms", [](Scene& s) { return eval_h_axioms(s.hop("A"), s.hop("B"), true); }},
      {"h.fragment", [](Scene& s) { return eval_fragment(s.op("A"), s.fragment("L"), true); }},
      {"interior.composition",
       [](Scene& s) { return eval_composition(s.map("f"), s.map("g"), s.op("opL"), s.op("opM"), s.op("opN"), true); }},
      {"h.composition",
       [](Scene& s) { return eval_h_composition(s.map("f"), s.map("g"), s.hop("hL"), s.hop("hM"), s.hop("hN"), true); }},
      {"interior.initial", [](Scene& s) { return eval_initial(s.map("f"), s.op("opM"), true); }},
      {"h.initial", [](Scene& s) { return eval_h_initial(s.map("f"), s.hop("hM"), s.fragment("L"), true); }},
      {"interior.coarseness", [](Scene& s) { return eval_coarseness(s.map("f"), s.op("opM"), s.op("opL"), true); }},
      {"interior.universal",
       [](Scene& s) { return eval_universal(s.map("f"), s.op("opM"), s.map("g"), s.op("opN"), true); }},
      {"h.universal",
       [](Scene& s) { return eval_h_universal(s.map("f"), s.hop("hM"), s.fragment("L"), s.map("g"), s.hop("hN"), true); }},
      {"interior.open_preimage", [](Scene& s) { return eval_open_preimage(s.map("f"), s.op("opL"), s.op("opM"), true); }},
      {"points.spatial", [](Scene& s) { return eval_spatial(s.frame("L"), true); }},
      {"points.sobrification",
       [](Scene& s) { return eval_sobrification(io::poset_from_json(s.subject("poset")), true); }},
  };
  return table;
}

}  // namespace

Json run_verify(const CorpusConfig& config) {
  config.validate();
  return Harness(config).run();
}

std::string render_report(const Json& report) { return report.dump(2) + "\n"; }

long unexplained_failures(const Json& report) {
  try {
    return report.at("summary").at("unexplained_failures").get<long>();
  } catch (const Json::exception& e) {
    throw LocaleError(ErrorKind::ParseError, std::string("report summary: ") + e.what());
  }
}

ReplayResult replay(const Json& report, const std::string& id) {
  if (!report.is_object() || !report.contains("checks") || !report.contains("config")) {
    throw LocaleError(ErrorKind::ParseError, "not a verification report");
  }
  const CorpusConfig cfg = CorpusConfig::from_json(report.at("config"));
  for (const auto& check : report.at("checks")) {
    const std::string check_id = check.at("id");
    const Json& witnesses = check.at("witnesses");
    if (check_id == id) {
      ReplayResult out;
      if (witnesses.empty()) {
        out.trace.push_back("no failure recorded for " + id + " (status " + check.at("status").get<std::string>() + ")");
        return out;
      }
      out.kind = ReplayResult::Kind::Listing;
      out.trace.push_back(id + " recorded " + std::to_string(witnesses.size()) + " witness(es):");
      for (const auto& w : witnesses) {
        out.trace.push_back("  " + w.at("id").get<std::string>() + "  " + w.at("summary").get<std::string>());
      }
      return out;
    }
    for (const auto& w : witnesses) {
      if (w.at("id") != id) continue;
      ReplayResult out;
      out.kind = ReplayResult::Kind::Replayed;
      const std::string summary = w.at("summary");
      out.trace.push_back("witness " + id + " of " + check_id + ": " + check.at("claim").get<std::string>());
      out.trace.push_back("recorded: " + summary);
      if (w.contains("anomaly")) out.trace.push_back("registered anomaly: " + w.at("anomaly").get<std::string>());
      Scene scene(w.at("instance"), cfg.size_limit);
      const auto it = replayers().find(check_id);
      std::optional<Finding> match;
      if (it != replayers().end() && w.at("instance").contains("frames") + w.at("instance").contains("subject") > 0) {
        const Eval e = it->second(scene);
        for (const auto& f : e.findings) {
          if (f.summary == summary) {
            match = f;
            break;
          }
        }
      }
      out.reproduced = match.has_value();
      out.trace.push_back(std::string("reproduced: ") + (out.reproduced ? "yes" : "no"));
      for (auto& line : scene.describe()) out.trace.push_back(line);
      if (match) {
        for (const auto& s : match->steps) out.trace.push_back(s);
      }
      return out;
    }
  }
  throw LocaleError(ErrorKind::UnknownWitness, "no check or witness '" + id + "' in this report", id);
}

}  // namespace localelab::verify
