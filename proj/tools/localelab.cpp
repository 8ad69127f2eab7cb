// localelab: command-line front end for the finite locale library.
//
// Exit codes: 0 pass, 1 law violation, 2 I/O or parse error (or unknown
// witness), 3 resource limit.

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <sstream>

#include "localelab/io.hpp"
#include "localelab/verify.hpp"

namespace fs = std::filesystem;
using namespace localelab;
using io::Json;

namespace {

constexpr int kPass = 0;
constexpr int kViolation = 1;
constexpr int kInputError = 2;
constexpr int kResourceLimit = 3;

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ParseError:
    case ErrorKind::UnknownWitness:
      return kInputError;
    case ErrorKind::SizeLimit:
      return kResourceLimit;
    default:
      return kViolation;
  }
}

fs::path dir_of(const fs::path& file) { return file.parent_path(); }

FramePtr load_frame(const fs::path& path) { return share(io::frame_from_json(io::load_json(path))); }

void print_axioms(const AxiomReport& report) {
  for (const auto& a : report.axioms) {
    std::cout << "  " << a.name << ": " << (a.passed ? (a.vacuous ? "pass (vacuous)" : "pass") : "FAIL");
    if (!a.passed) std::cout << "  witness " << a.witness;
    std::cout << "\n";
  }
}

int cmd_check(const fs::path& file) {
  const Json doc = io::load_json(file);
  switch (io::detect_kind(doc)) {
    case io::FileKind::Poset: {
      const Poset p = io::poset_from_json(doc);
      std::cout << "poset: " << p.size() << " elements, partial order ok\n";
      return kPass;
    }
    case io::FileKind::Frame: {
      const Frame f = io::frame_from_json(doc);
      std::cout << "frame: " << f.size() << " elements, distributive lattice with Heyting implication ok\n";
      return kPass;
    }
    case io::FileKind::Space: {
      const FiniteSpace s = io::space_from_json(doc);
      std::cout << "space: " << s.size() << " points, " << s.opens().size() << " opens, topology ok\n";
      return kPass;
    }
    case io::FileKind::Map: {
      const io::MapFile m = io::map_file_from_json(doc, dir_of(file));
      if (m.type == "point") {
        ContinuousMap c{io::space_from_json(io::load_json(m.from)), io::space_from_json(io::load_json(m.to)), {}};
        c.point_map = io::point_table(m, c.source, c.target);
        omega_of_map(c);
        std::cout << "continuous map: ok\n";
        return kPass;
      }
      const FramePtr src = load_frame(m.from), tgt = load_frame(m.to);
      const auto table = io::map_table(m, *src, *tgt);
      if (m.type == "frame_hom") {
        make_frame_hom(src, tgt, table);
        std::cout << "frame hom: ok\n";
      } else {
        make_localic_map(src, tgt, table);
        std::cout << "localic map: ok (right adjoint of a frame hom)\n";
      }
      return kPass;
    }
    case io::FileKind::Operator: {
      const io::OperatorFile op = io::operator_file_from_json(doc, dir_of(file));
      if (op.frame.empty()) throw LocaleError(ErrorKind::ParseError, "operator file names no frame");
      const auto sl = share(enumerate_sublocales(load_frame(op.frame)));
      AxiomReport report;
      if (op.fragment) {
        const auto frag = share(complemented_fragment(sl));
        report = check_h(*frag, io::operator_table(op, *sl, frag.get()));
      } else {
        report = check_interior(*sl, io::operator_table(op, *sl));
      }
      std::cout << (op.fragment ? "h operator" : "interior operator") << ":\n";
      print_axioms(report);
      return report.passed() ? kPass : kViolation;
    }
  }
  return kPass;
}

int cmd_sublocales(const fs::path& file, const std::string& dot, const std::string& json) {
  const auto sl = share(enumerate_sublocales(load_frame(file)));
  const Json doc = io::sublocale_lattice_to_json(*sl);
  int complemented = 0;
  for (const auto& s : doc.at("sublocales")) {
    if (!s.at("complement").is_null()) ++complemented;
  }
  std::cout << sl->size() << " sublocales, " << complemented << " complemented\n";
  for (int i = 0; i < sl->size(); ++i) {
    const Json& s = doc.at("sublocales")[i];
    std::cout << "  [" << i << "] " << sl->render(i);
    for (const auto& t : s.at("tags")) std::cout << " " << t.get<std::string>();
    if (!s.at("complement").is_null()) std::cout << "  complement [" << s.at("complement").get<int>() << "]";
    std::cout << "\n";
  }
  if (!dot.empty()) io::write_text(dot, io::sublocale_dot(*sl));
  if (!json.empty()) io::write_text(json, doc.dump(2) + "\n");
  return kPass;
}

int cmd_points(const fs::path& file) {
  std::cout << io::space_to_json(pt_space(load_frame(file))).dump(2) << "\n";
  return kPass;
}

struct OperatorOn {
  SublocaleLatticePtr sl;
  FragmentPtr fragment;  // set for h operators
  std::vector<int> table;
};

OperatorOn load_operator(const FramePtr& frame, const fs::path& opfile) {
  // The frame argument takes precedence over the file's own "frame" entry.
  const io::OperatorFile op = io::operator_file_from_json(io::load_json(opfile), dir_of(opfile));
  OperatorOn out{share(enumerate_sublocales(frame)), nullptr, {}};
  if (op.fragment) out.fragment = share(complemented_fragment(out.sl));
  out.table = io::operator_table(op, *out.sl, out.fragment.get());
  return out;
}

int cmd_op_check(const fs::path& frame_file, const fs::path& opfile) {
  const OperatorOn op = load_operator(load_frame(frame_file), opfile);
  const AxiomReport report = op.fragment ? check_h(*op.fragment, op.table) : check_interior(*op.sl, op.table);
  std::cout << (op.fragment ? "h operator" : "interior operator") << " on " << op.sl->size() << " sublocales:\n";
  print_axioms(report);
  return report.passed() ? kPass : kViolation;
}

int cmd_initial(const fs::path& frame_file, const fs::path& mapfile, const fs::path& opfile) {
  const io::MapFile m = io::map_file_from_json(io::load_json(mapfile), dir_of(mapfile));
  if (m.type != "localic") throw LocaleError(ErrorKind::InvalidInput, "initial needs a localic map file");
  const FramePtr l = load_frame(frame_file), mframe = load_frame(m.to);
  const LocalicMap f = make_localic_map(l, mframe, io::map_table(m, *l, *mframe));
  const OperatorOn op = load_operator(mframe, opfile);
  const InducedMaps ind = induce(f, share(enumerate_sublocales(l)), op.sl);
  Json out;
  AxiomReport report;
  bool total = false;
  if (op.fragment) {
    const HInitialResult r = initial_h(ind, {op.fragment, op.table}, share(complemented_fragment(ind.source)));
    report = r.report;
    total = r.image_is_total;
    out = io::operator_to_json(r.candidate, frame_file.string());
  } else {
    const InitialResult r = initial_interior(ind, {op.sl, op.table});
    report = r.report;
    total = r.image_is_total;
    out = io::operator_to_json(r.candidate, frame_file.string());
  }
  std::cout << "initial operator on " << frame_file.string() << ":\n" << out.dump(2) << "\n";
  std::cout << "image f[L] = M: " << (total ? "yes" : "no") << "\n";
  print_axioms(report);
  return report.passed() ? kPass : kViolation;
}

std::vector<std::string> split_list(const std::string& list) {
  std::vector<std::string> out;
  std::stringstream ss(list);
  for (std::string item; std::getline(ss, item, ',');) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

int cmd_verify(verify::CorpusConfig cfg, const std::string& checks, const fs::path& report_path) {
  cfg.checks = split_list(checks);
  if (std::getenv("LOCALELAB_SIZE_LIMIT")) cfg.size_limit = default_size_limit();
  const Json report = verify::run_verify(cfg);
  io::write_text(report_path, verify::render_report(report));
  const Json& s = report.at("summary");
  std::cout << "checks run " << s.at("checks_run") << ": " << s.at("passed") << " pass, " << s.at("expected_fail")
            << " expected-fail, " << s.at("failed") << " fail, " << s.at("skipped") << " skipped\n";
  for (const auto& c : report.at("checks")) {
    std::cout << "  " << c.at("id").get<std::string>() << ": " << c.at("status").get<std::string>() << " ("
              << c.at("instances") << " instances";
    if (c.at("expected_failures").get<long>() > 0) std::cout << ", " << c.at("expected_failures") << " registered";
    if (c.at("failures").get<long>() > 0) std::cout << ", " << c.at("failures") << " unexplained";
    std::cout << ")\n";
  }
  std::cout << "anomalies confirmed: " << s.at("anomalies_confirmed") << "\n";
  std::cout << "report written to " << report_path.string() << "\n";
  return verify::unexplained_failures(report) == 0 ? kPass : kViolation;
}

int cmd_replay(const fs::path& report_path, const std::string& id) {
  const verify::ReplayResult r = verify::replay(io::load_json(report_path), id);
  for (const auto& line : r.trace) std::cout << line << "\n";
  return r.kind != verify::ReplayResult::Kind::Replayed || r.reproduced ? kPass : kViolation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"localelab: finite frames, sublocales and interior operators"};
  app.set_version_flag("--version", LOCALELAB_VERSION);
  app.require_subcommand(1);

  std::string file, frame, mapfile, opfile, dot, json, checks, report_path, id;
  verify::CorpusConfig cfg;

  auto* check = app.add_subcommand("check", "validate a poset, frame, space, map or operator file");
  check->add_option("FILE", file)->required();

  auto* subs = app.add_subcommand("sublocales", "list S_l(L) with open, closed and complement tags");
  subs->add_option("FILE", file)->required();
  subs->add_option("--dot", dot, "write a Graphviz diagram");
  subs->add_option("--json", json, "write the lattice as JSON");

  auto* points = app.add_subcommand("points", "print pt(L) as a space");
  points->add_option("FILE", file)->required();

  auto* opcheck = app.add_subcommand("op-check", "check interior (or h) operator axioms");
  opcheck->add_option("FRAME", frame)->required();
  opcheck->add_option("OPFILE", opfile)->required();

  auto* initial = app.add_subcommand("initial", "build f_{-1} i_M f[-] for a localic map f: FRAME -> M");
  initial->add_option("FRAME", frame)->required();
  initial->add_option("MAPFILE", mapfile)->required();
  initial->add_option("OPFILE", opfile)->required();

  auto* ver = app.add_subcommand("verify", "run the proposition harness over the generated corpus");
  ver->add_option("--max-poset", cfg.max_poset_size, "largest poset size in the corpus")->capture_default_str();
  ver->add_option("--samples", cfg.operator_samples_per_frame, "random operators per frame or map")->capture_default_str();
  ver->add_option("--seed", cfg.seed, "random seed")->capture_default_str();
  ver->add_option("--checks", checks, "comma-separated check ids, groups or suffixes");
  ver->add_option("--map-budget", cfg.map_budget, "maximum number of corpus maps")->capture_default_str();
  ver->add_option("--configurations", cfg.configurations, "draws for composition and universal checks")
      ->capture_default_str();
  ver->add_option("--report", report_path, "report path")->required();

  auto* rep = app.add_subcommand("replay", "re-run a recorded witness with a step trace");
  rep->add_option("REPORT", report_path)->required();
  rep->add_option("ID", id)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kInputError;
  }

  try {
    if (*check) return cmd_check(file);
    if (*subs) return cmd_sublocales(file, dot, json);
    if (*points) return cmd_points(file);
    if (*opcheck) return cmd_op_check(frame, opfile);
    if (*initial) return cmd_initial(frame, mapfile, opfile);
    if (*ver) return cmd_verify(cfg, checks, report_path);
    if (*rep) return cmd_replay(report_path, id);
  } catch (const LocaleError& e) {
    std::cerr << "error: " << e.what();
    if (!e.witness().empty()) std::cerr << " [witness: " << e.witness() << "]";
    std::cerr << "\n";
    return exit_code(e.kind());
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: malformed input: " << e.what() << "\n";
    return kInputError;
  }
  return kPass;
}
