#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "localelab/h_ops.hpp"
#include "localelab/interior_ops.hpp"
#include "localelab/points.hpp"

namespace localelab::io {

using Json = nlohmann::json;

/// Reads and parses a JSON file; throws ParseError with the parser message.
Json load_json(const std::filesystem::path& path);
void write_text(const std::filesystem::path& path, const std::string& text);

enum class FileKind { Poset, Frame, Space, Map, Operator };

/// Explicit "kind" field, else inferred from the keys present.
FileKind detect_kind(const Json& doc);

// Orders: {"elements":[...],"le":[[a,b],...]}
Poset poset_from_json(const Json& doc);
/// Covering pairs only.
Json poset_to_json(const Poset& poset);
Frame frame_from_json(const Json& doc);
/// Emits covering pairs only; re-parses to an equal frame.
Json frame_to_json(const Frame& frame);

// Spaces: {"points":[...],"opens":[[...],...]}
FiniteSpace space_from_json(const Json& doc);
Json space_to_json(const FiniteSpace& space);

/// {"from":"fileA","to":"fileB","map":{"0":"0","m":"1"}} with an optional
/// "type": "localic" (default, a map from -> to), "frame_hom", or "point".
struct MapFile {
  std::string type = "localic";
  std::filesystem::path from;
  std::filesystem::path to;
  std::vector<std::pair<std::string, std::string>> pairs;
};

MapFile map_file_from_json(const Json& doc, const std::filesystem::path& base_dir);
/// Element table of a map file against resolved frames; throws InvalidInput on missing labels.
std::vector<Elem> map_table(const MapFile& file, const Frame& source, const Frame& target);
std::vector<Elem> point_table(const MapFile& file, const FiniteSpace& source, const FiniteSpace& target);

/// Sublocale key "{a,b,1}" with members in element order.
std::string sublocale_key(const Frame& frame, ElemSet members);
ElemSet parse_subset(const Frame& frame, const std::string& key);

/// {"frame":"file","table":{"<sublocale>":"<sublocale>"}} and, for h
/// operators, "fragment": true.
struct OperatorFile {
  std::filesystem::path frame;
  bool fragment = false;
  std::vector<std::pair<std::string, std::string>> entries;
};

OperatorFile operator_file_from_json(const Json& doc, const std::filesystem::path& base_dir);
/// Table on sublocale indices (entries of the fragment for h operators,
/// in fragment position order). Throws InvalidInput on unknown or missing keys.
std::vector<int> operator_table(const OperatorFile& file, const SublocaleLattice& lattice,
                                const ComplementedFragment* fragment = nullptr);

Json operator_to_json(const InteriorOperator& op, const std::string& frame_ref);
Json operator_to_json(const HOperator& op, const std::string& frame_ref);

Json axiom_report_to_json(const AxiomReport& report);

/// Members as label lists, inclusion order, and open/closed/complement tags.
Json sublocale_lattice_to_json(const SublocaleLattice& lattice);

/// Hasse diagram, covers only, bottom drawn lowest with rank attributes.
std::string hasse_dot(const Poset& poset, const std::string& name = "L");
/// Hasse diagram of S_l(L) with open, closed and complemented sublocales colour-tagged.
std::string sublocale_dot(const SublocaleLattice& lattice);

}  // namespace localelab::io
