#include "localelab/io.hpp"

#include <fstream>
#include <map>
#include <sstream>

namespace localelab::io {

namespace fs = std::filesystem;

Json load_json(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw LocaleError(ErrorKind::ParseError, "cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw LocaleError(ErrorKind::ParseError, path.string() + ": " + e.what());
  }
}

void write_text(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw LocaleError(ErrorKind::ParseError, "cannot write " + path.string());
  out << text;
  if (!out) throw LocaleError(ErrorKind::ParseError, "write failed for " + path.string());
}

namespace {

template <class T>
T field(const Json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains(key)) {
    throw LocaleError(ErrorKind::ParseError, std::string("missing field '") + key + "'");
  }
  try {
    return doc.at(key).get<T>();
  } catch (const Json::exception& e) {
    throw LocaleError(ErrorKind::ParseError, std::string("field '") + key + "': " + e.what());
  }
}

Elem lookup(const std::vector<std::string>& labels, const std::string& label, const char* what) {
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i] == label) return static_cast<Elem>(i);
  }
  throw LocaleError(ErrorKind::InvalidInput, std::string("unknown ") + what + " '" + label + "'", label);
}

std::vector<std::pair<std::string, std::string>> string_pairs(const Json& doc, const char* key) {
  std::vector<std::pair<std::string, std::string>> out;
  if (!doc.contains(key)) return out;
  try {
    const Json& v = doc.at(key);
    if (v.is_object()) {
      for (auto it = v.begin(); it != v.end(); ++it) out.emplace_back(it.key(), it.value().get<std::string>());
    } else {
      for (const auto& p : v) {
        if (!p.is_array() || p.size() != 2) throw LocaleError(ErrorKind::ParseError, std::string("'") + key + "' entries must be pairs");
        out.emplace_back(p[0].get<std::string>(), p[1].get<std::string>());
      }
    }
  } catch (const Json::exception& e) {
    throw LocaleError(ErrorKind::ParseError, std::string("field '") + key + "': " + e.what());
  }
  return out;
}

fs::path resolve(const fs::path& base, const std::string& ref) {
  fs::path p(ref);
  return p.is_absolute() ? p : base / p;
}

}  // namespace

FileKind detect_kind(const Json& doc) {
  if (!doc.is_object()) throw LocaleError(ErrorKind::ParseError, "top-level JSON value must be an object");
  if (doc.contains("kind")) {
    const auto kind = field<std::string>(doc, "kind");
    if (kind == "poset") return FileKind::Poset;
    if (kind == "frame" || kind == "lattice") return FileKind::Frame;
    if (kind == "space") return FileKind::Space;
    if (kind == "map") return FileKind::Map;
    if (kind == "operator") return FileKind::Operator;
    throw LocaleError(ErrorKind::ParseError, "unknown kind '" + kind + "'");
  }
  if (doc.contains("points")) return FileKind::Space;
  if (doc.contains("map")) return FileKind::Map;
  if (doc.contains("table")) return FileKind::Operator;
  if (doc.contains("elements")) return FileKind::Frame;
  throw LocaleError(ErrorKind::ParseError, "cannot infer the kind of this document");
}

Poset poset_from_json(const Json& doc) {
  auto labels = field<std::vector<std::string>>(doc, "elements");
  std::vector<std::pair<Elem, Elem>> pairs;
  for (const auto& [a, b] : string_pairs(doc, "le")) {
    pairs.emplace_back(lookup(labels, a, "element"), lookup(labels, b, "element"));
  }
  return Poset::from_pairs(std::move(labels), pairs);
}

Json poset_to_json(const Poset& poset) {
  Json le = Json::array();
  for (auto [a, b] : poset.covers()) le.push_back({poset.label(a), poset.label(b)});
  return Json{{"kind", "poset"}, {"elements", poset.labels()}, {"le", le}};
}

Frame frame_from_json(const Json& doc) { return build_frame(poset_from_json(doc)); }

Json frame_to_json(const Frame& frame) {
  Json le = Json::array();
  for (auto [a, b] : frame.poset().covers()) le.push_back({frame.label(a), frame.label(b)});
  return Json{{"kind", "frame"}, {"elements", frame.labels()}, {"le", le}};
}

FiniteSpace space_from_json(const Json& doc) {
  auto points = field<std::vector<std::string>>(doc, "points");
  auto opens_raw = field<std::vector<std::vector<std::string>>>(doc, "opens");
  std::vector<ElemSet> opens;
  for (const auto& u : opens_raw) {
    ElemSet s;
    for (const auto& p : u) s.insert(lookup(points, p, "point"));
    opens.push_back(s);
  }
  return FiniteSpace(std::move(points), std::move(opens));
}

Json space_to_json(const FiniteSpace& space) {
  Json opens = Json::array();
  for (ElemSet u : space.opens()) {
    Json names = Json::array();
    u.for_each([&](Elem p) { names.push_back(space.points()[p]); });
    opens.push_back(names);
  }
  return Json{{"kind", "space"}, {"points", space.points()}, {"opens", opens}};
}

MapFile map_file_from_json(const Json& doc, const fs::path& base_dir) {
  MapFile m;
  if (doc.contains("type")) m.type = field<std::string>(doc, "type");
  if (m.type != "localic" && m.type != "frame_hom" && m.type != "point") {
    throw LocaleError(ErrorKind::ParseError, "unknown map type '" + m.type + "'");
  }
  if (doc.contains("from")) m.from = resolve(base_dir, field<std::string>(doc, "from"));
  if (doc.contains("to")) m.to = resolve(base_dir, field<std::string>(doc, "to"));
  if (!doc.contains("map") || !doc.at("map").is_object()) throw LocaleError(ErrorKind::ParseError, "missing object 'map'");
  m.pairs = string_pairs(doc, "map");
  return m;
}

std::vector<Elem> map_table(const MapFile& file, const Frame& source, const Frame& target) {
  std::vector<Elem> table(source.size(), -1);
  for (const auto& [a, b] : file.pairs) {
    table[lookup(source.labels(), a, "source element")] = lookup(target.labels(), b, "target element");
  }
  for (Elem x = 0; x < source.size(); ++x) {
    if (table[x] < 0) throw LocaleError(ErrorKind::InvalidInput, "map does not assign '" + source.label(x) + "'", source.label(x));
  }
  return table;
}

std::vector<Elem> point_table(const MapFile& file, const FiniteSpace& source, const FiniteSpace& target) {
  std::vector<Elem> table(source.size(), -1);
  for (const auto& [a, b] : file.pairs) {
    table[lookup(source.points(), a, "source point")] = lookup(target.points(), b, "target point");
  }
  for (Elem x = 0; x < source.size(); ++x) {
    if (table[x] < 0) throw LocaleError(ErrorKind::InvalidInput, "point map does not assign '" + source.points()[x] + "'");
  }
  return table;
}

std::string sublocale_key(const Frame& frame, ElemSet members) { return frame.render(members); }

ElemSet parse_subset(const Frame& frame, const std::string& key) {
  std::string body = key;
  if (body.size() < 2 || body.front() != '{' || body.back() != '}') {
    throw LocaleError(ErrorKind::ParseError, "sublocale key must look like {a,b,1}: " + key);
  }
  body = body.substr(1, body.size() - 2);
  ElemSet out;
  if (body.empty()) return out;
  // Labels may themselves contain braces and commas (downset frames), so
  // split at top-level commas only.
  int depth = 0;
  std::string cur;
  auto flush = [&] {
    const auto first = cur.find_first_not_of(' '), last = cur.find_last_not_of(' ');
    cur = first == std::string::npos ? std::string() : cur.substr(first, last - first + 1);
    out.insert(lookup(frame.labels(), cur, "element"));
    cur.clear();
  };
  for (char c : body) {
    if (c == '{') ++depth;
    if (c == '}') --depth;
    if (c == ',' && depth == 0) {
      flush();
      continue;
    }
    cur += c;
  }
  flush();
  return out;
}

OperatorFile operator_file_from_json(const Json& doc, const fs::path& base_dir) {
  OperatorFile op;
  if (doc.contains("frame")) op.frame = resolve(base_dir, field<std::string>(doc, "frame"));
  if (doc.contains("fragment")) op.fragment = field<bool>(doc, "fragment");
  if (!doc.contains("table") || !doc.at("table").is_object()) throw LocaleError(ErrorKind::ParseError, "missing object 'table'");
  op.entries = string_pairs(doc, "table");
  return op;
}

std::vector<int> operator_table(const OperatorFile& file, const SublocaleLattice& lattice,
                                const ComplementedFragment* fragment) {
  const Frame& frame = *lattice.host();
  std::vector<int> by_sub(lattice.size(), -1);
  for (const auto& [k, v] : file.entries) {
    const int s = lattice.index_of(parse_subset(frame, k));
    const int t = lattice.index_of(parse_subset(frame, v));
    if (s < 0) throw LocaleError(ErrorKind::InvalidInput, "table key is not a sublocale", k);
    if (t < 0) throw LocaleError(ErrorKind::InvalidInput, "table value is not a sublocale", v);
    by_sub[s] = t;
  }
  if (fragment) {
    std::vector<int> table;
    for (int s : fragment->indices) {
      if (by_sub[s] < 0) throw LocaleError(ErrorKind::InvalidInput, "h table misses a complemented sublocale", lattice.render(s));
      table.push_back(by_sub[s]);
    }
    return table;
  }
  for (int s = 0; s < lattice.size(); ++s) {
    if (by_sub[s] < 0) throw LocaleError(ErrorKind::InvalidInput, "table misses a sublocale", lattice.render(s));
  }
  return by_sub;
}

Json operator_to_json(const InteriorOperator& op, const std::string& frame_ref) {
  Json table = Json::object();
  for (int s = 0; s < op.lattice->size(); ++s) table[op.lattice->render(s)] = op.lattice->render(op(s));
  return Json{{"kind", "operator"}, {"frame", frame_ref}, {"table", table}};
}

Json operator_to_json(const HOperator& op, const std::string& frame_ref) {
  const auto& sl = *op.fragment->lattice;
  Json table = Json::object();
  for (int p = 0; p < op.fragment->size(); ++p) table[sl.render(op.fragment->indices[p])] = sl.render(op.table[p]);
  return Json{{"kind", "operator"}, {"frame", frame_ref}, {"fragment", true}, {"table", table}};
}

Json axiom_report_to_json(const AxiomReport& report) {
  Json axioms = Json::array();
  for (const auto& a : report.axioms) {
    Json entry{{"axiom", a.name}, {"passed", a.passed}};
    if (a.vacuous) entry["vacuous"] = true;
    if (!a.passed) {
      entry["witness"] = a.witness;
      entry["witness_ids"] = a.witness_ids;
    }
    axioms.push_back(entry);
  }
  return Json{{"passed", report.passed()}, {"axioms", axioms}};
}

Json sublocale_lattice_to_json(const SublocaleLattice& sl) {
  const Frame& f = *sl.host();
  Json subs = Json::array();
  for (int i = 0; i < sl.size(); ++i) {
    Json members = Json::array();
    sl.members(i).for_each([&](Elem e) { members.push_back(f.label(e)); });
    Json tags = Json::array();
    for (Elem a = 0; a < f.size(); ++a) {
      if (sl.open(a) == i) tags.push_back("open(" + f.label(a) + ")");
    }
    for (Elem a = 0; a < f.size(); ++a) {
      if (sl.closed(a) == i) tags.push_back("closed(" + f.label(a) + ")");
    }
    Json entry{{"index", i}, {"members", members}, {"tags", tags}};
    if (auto c = sl.complement(i)) {
      entry["complement"] = *c;
    } else {
      entry["complement"] = nullptr;
    }
    subs.push_back(entry);
  }
  Json le = Json::array();
  for (int a = 0; a < sl.size(); ++a) {
    for (int b = 0; b < sl.size(); ++b) {
      if (a != b && sl.le(a, b)) le.push_back({a, b});
    }
  }
  return Json{{"frame", frame_to_json(f)}, {"sublocales", subs}, {"inclusions", le}};
}

namespace {

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string hasse_dot(const Poset& poset, const std::string& name) {
  std::ostringstream out;
  out << "digraph " << quote(name) << " {\n  rankdir=BT;\n  node [shape=plaintext];\n";
  std::map<int, std::vector<Elem>> ranks;
  for (Elem a = 0; a < poset.size(); ++a) {
    ranks[poset.rank(a)].push_back(a);
    out << "  n" << a << " [label=" << quote(poset.label(a)) << ", rank=" << poset.rank(a) << "];\n";
  }
  for (const auto& [r, elems] : ranks) {
    out << "  { rank=same;";
    for (Elem a : elems) out << " n" << a << ";";
    out << " }\n";
  }
  for (auto [a, b] : poset.covers()) out << "  n" << a << " -> n" << b << " [arrowhead=none];\n";
  out << "}\n";
  return out.str();
}

std::string sublocale_dot(const SublocaleLattice& sl) {
  const Frame& f = *sl.host();
  std::vector<std::string> labels;
  std::vector<ElemSet> below(sl.size());
  for (int i = 0; i < sl.size(); ++i) {
    labels.push_back(std::to_string(i));
    for (int j = 0; j < sl.size(); ++j) {
      if (sl.le(j, i)) below[i].insert(j);
    }
  }
  const Poset order = Poset::from_downsets(labels, below);
  std::ostringstream out;
  out << "digraph \"Sl\" {\n  rankdir=BT;\n  node [shape=box, style=filled, fillcolor=white];\n";
  for (int i = 0; i < sl.size(); ++i) {
    bool is_open = false, is_closed = false;
    for (Elem a = 0; a < f.size(); ++a) {
      is_open = is_open || sl.open(a) == i;
      is_closed = is_closed || sl.closed(a) == i;
    }
    const char* colour = is_open && is_closed ? "plum" : is_open ? "lightblue" : is_closed ? "lightsalmon"
                         : sl.complement(i) ? "palegreen" : "white";
    std::string tags;
    if (is_open) tags += " open";
    if (is_closed) tags += " closed";
    if (sl.complement(i)) tags += " complemented";
    out << "  s" << i << " [label=" << quote(sl.render(i)) << ", fillcolor=" << colour
        << ", rank=" << order.rank(i) << ", tags=" << quote(tags.empty() ? "" : tags.substr(1)) << "];\n";
  }
  for (auto [a, b] : order.covers()) out << "  s" << a << " -> s" << b << " [arrowhead=none];\n";
  out << "}\n";
  return out.str();
}

}  // namespace localelab::io
