#include "dualcx/json_io.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <set>

#include "json.hpp"

namespace dualcx {

using nlohmann::json;

namespace {

json parse_json(const std::string& text) {
  json doc = json::parse(text, nullptr, /*allow_exceptions=*/false);
  if (doc.is_discarded()) fail("BadDocument", "input is not valid JSON");
  if (!doc.is_object()) fail("BadDocument", "top-level value must be an object");
  return doc;
}

void check_version(const json& doc) {
  if (!doc.contains("format_version") ||
      !doc["format_version"].is_number_integer())
    fail("BadDocument", "missing integer format_version");
  if (doc["format_version"].get<int>() != kFormatVersion)
    fail("UnknownFormatVersion",
         "format_version " + doc["format_version"].dump() + " not supported");
}

std::string dump(const json& doc) { return doc.dump(2) + "\n"; }

std::string id_str(CellId id) { return std::to_string(id); }

// Canonical decimal (no sign, no leading zeros) or nothing.
std::optional<CellId> as_decimal(const std::string& s) {
  if (s.empty() || (s.size() > 1 && s[0] == '0')) return std::nullopt;
  CellId value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return value;
}

std::vector<std::string> string_array(const json& v, const std::string& what) {
  if (!v.is_array()) fail("BadDocument", what + " must be an array");
  std::vector<std::string> out;
  for (const auto& e : v) {
    if (!e.is_string()) fail("BadDocument", what + " must hold strings");
    out.push_back(e.get<std::string>());
  }
  return out;
}

}  // namespace

std::string print_complex(const Complex& cx) {
  json doc;
  doc["format_version"] = kFormatVersion;
  json verts = json::array();
  for (const auto& [v, id] : cx.vertex_cells()) verts.push_back(v);
  doc["vertices"] = verts;
  json cells = json::array();
  for (const auto& [id, c] : cx.cells()) {
    json entry;
    entry["id"] = id_str(id);
    entry["vertices"] = c.vertices;
    json facets = json::array();
    for (CellId f : c.facets) facets.push_back(id_str(f));
    entry["facets"] = facets;
    cells.push_back(entry);
  }
  doc["cells"] = cells;
  return dump(doc);
}

Complex parse_complex(const std::string& text, bool validate) {
  json doc = parse_json(text);
  check_version(doc);

  Complex cx;
  if (doc.contains("maximal_simplices")) {
    if (doc.contains("cells"))
      fail("BadDocument", "maximal_simplices excludes an explicit cell list");
    std::vector<std::vector<VertexLabel>> maximal;
    if (!doc["maximal_simplices"].is_array())
      fail("BadDocument", "maximal_simplices must be an array");
    for (const auto& e : doc["maximal_simplices"])
      maximal.push_back(string_array(e, "maximal simplex"));
    cx = from_maximal_simplices(maximal);
  } else {
    if (!doc.contains("vertices"))
      fail("BadDocument", "missing vertices array");
    std::vector<VertexLabel> vertices =
        string_array(doc["vertices"], "vertices");

    struct Entry {
      std::string id;
      std::vector<VertexLabel> vertices;
      std::vector<std::string> facets;
    };
    std::vector<Entry> entries;
    std::set<std::string> explicit_zero;  // labels with an explicit 0-cell
    if (doc.contains("cells")) {
      if (!doc["cells"].is_array())
        fail("BadDocument", "cells must be an array");
      for (const auto& e : doc["cells"]) {
        Entry entry;
        if (!e.contains("id") || !e["id"].is_string())
          fail("BadDocument", "every cell needs a string id");
        entry.id = e["id"].get<std::string>();
        entry.vertices = string_array(e.at("vertices"), "cell vertices");
        if (e.contains("facets"))
          entry.facets = string_array(e["facets"], "cell facets");
        if (entry.vertices.size() == 1) explicit_zero.insert(entry.vertices[0]);
        entries.push_back(std::move(entry));
      }
    }
    // Elided 0-cells: addressable by their vertex label.
    std::vector<Entry> implied;
    for (const VertexLabel& v : vertices)
      if (!explicit_zero.count(v)) implied.push_back(Entry{v, {v}, {}});
    entries.insert(entries.begin(), implied.begin(), implied.end());

    std::set<std::string> distinct;
    bool all_decimal = true;
    std::set<CellId> decimal_values;
    for (const Entry& e : entries) {
      if (!distinct.insert(e.id).second)
        fail("BadDocument", "cell id " + e.id + " repeated");
      auto d = as_decimal(e.id);
      if (!d || !decimal_values.insert(*d).second) all_decimal = false;
    }
    std::map<std::string, CellId> internal;
    if (all_decimal) {
      for (const Entry& e : entries) internal[e.id] = *as_decimal(e.id);
    } else {
      // Fallback for hand-written ids: dimension then document order.
      std::vector<const Entry*> order;
      for (const Entry& e : entries) order.push_back(&e);
      std::stable_sort(order.begin(), order.end(),
                       [](const Entry* a, const Entry* b) {
                         return a->vertices.size() < b->vertices.size();
                       });
      CellId next = 0;
      for (const Entry* e : order) internal[e->id] = next++;
    }

    std::vector<std::pair<CellId, Cell>> parts;
    for (const Entry& e : entries) {
      Cell cell;
      cell.dim = int(e.vertices.size()) - 1;
      // Align facets with the sorted tuple if the document was unsorted.
      std::vector<std::pair<VertexLabel, std::size_t>> perm;
      for (std::size_t i = 0; i < e.vertices.size(); ++i)
        perm.push_back({e.vertices[i], i});
      std::sort(perm.begin(), perm.end());
      if (cell.dim >= 1 && e.facets.size() != e.vertices.size())
        fail("BadDocument", "cell " + e.id + " needs one facet per vertex");
      for (const auto& [label, pos] : perm) {
        cell.vertices.push_back(label);
        if (cell.dim >= 1) {
          auto it = internal.find(e.facets[pos]);
          if (it == internal.end())
            fail("BadDocument",
                 "cell " + e.id + " references unknown facet " +
                     e.facets[pos]);
          cell.facets.push_back(it->second);
        }
      }
      parts.push_back({internal.at(e.id), std::move(cell)});
    }
    cx = Complex::from_parts(parts);
    for (const VertexLabel& v : vertices)
      if (!cx.has_vertex(v))
        fail("BadDocument", "vertex " + v + " has no 0-cell");
  }

  if (validate) {
    std::vector<std::string> violations = verify(cx);
    if (!violations.empty()) fail("InvalidComplex", violations.front());
  }
  return cx;
}

std::string print_strata(const StrataDescriptor& d) {
  json doc;
  doc["format_version"] = kFormatVersion;
  doc["divisors"] = d.divisors;
  json strata = json::array();
  for (const Stratum& s : d.strata) {
    json e;
    e["id"] = s.id;
    e["J"] = s.J;
    e["tag"] = s.tag;
    strata.push_back(e);
  }
  doc["strata"] = strata;
  json parents = json::array();
  for (const auto& [key, parent] : d.parent) {
    json e;
    e["stratum"] = key.first;
    e["drop"] = key.second;
    e["parent"] = parent;
    parents.push_back(e);
  }
  doc["parents"] = parents;
  return dump(doc);
}

StrataDescriptor parse_strata(const std::string& text) {
  json doc = parse_json(text);
  check_version(doc);
  StrataDescriptor d;
  if (!doc.contains("divisors") || !doc.contains("strata"))
    fail("BadDocument", "strata document needs divisors and strata");
  d.divisors = string_array(doc["divisors"], "divisors");
  for (const auto& e : doc["strata"]) {
    Stratum s;
    if (!e.contains("id") || !e["id"].is_string())
      fail("BadDocument", "every stratum needs a string id");
    s.id = e["id"].get<std::string>();
    s.J = string_array(e.at("J"), "stratum J");
    s.tag = e.contains("tag") ? e["tag"].get<std::string>() : "";
    d.strata.push_back(std::move(s));
  }
  if (doc.contains("parents"))
    for (const auto& e : doc["parents"])
      d.parent[{e.at("stratum").get<std::string>(),
                e.at("drop").get<std::string>()}] =
          e.at("parent").get<std::string>();
  return d;
}

namespace {

json sequence_json(const CollapseSequence& seq) {
  json pairs = json::array();
  for (const FreePair& p : seq.pairs) {
    json e;
    e["coface"] = id_str(p.coface);
    e["face"] = id_str(p.face);
    pairs.push_back(e);
  }
  return pairs;
}

CellId parse_id(const json& v, const std::string& what) {
  if (!v.is_string()) fail("BadDocument", what + " must be a string id");
  auto d = as_decimal(v.get<std::string>());
  if (!d) fail("BadDocument", what + " is not a canonical cell id");
  return *d;
}

CollapseSequence sequence_from(const json& doc) {
  CollapseSequence seq;
  if (!doc.contains("pairs") || !doc["pairs"].is_array())
    fail("BadDocument", "missing pairs array");
  for (const auto& e : doc["pairs"])
    seq.pairs.push_back(
        FreePair{parse_id(e.at("coface"), "coface"),
                 parse_id(e.at("face"), "face")});
  return seq;
}

}  // namespace

std::string print_sequence(const CollapseSequence& seq) {
  json doc;
  doc["format_version"] = kFormatVersion;
  doc["pairs"] = sequence_json(seq);
  return dump(doc);
}

CollapseSequence parse_sequence(const std::string& text) {
  json doc = parse_json(text);
  check_version(doc);
  return sequence_from(doc);
}

std::string print_instruction(const MmpInstruction& instr) {
  json doc;
  doc["format_version"] = kFormatVersion;
  doc["v0"] = instr.v0;
  json contracted = json::array();
  for (CellId w : instr.contracted) contracted.push_back(id_str(w));
  doc["contracted"] = contracted;
  return dump(doc);
}

namespace {

MmpInstruction instruction_from(const json& e) {
  MmpInstruction instr;
  if (!e.contains("v0") || !e["v0"].is_string())
    fail("BadDocument", "instruction needs a v0 label");
  instr.v0 = e["v0"].get<std::string>();
  if (e.contains("contracted"))
    for (const auto& w : e["contracted"])
      instr.contracted.insert(parse_id(w, "contracted cell"));
  return instr;
}

}  // namespace

MmpInstruction parse_instruction(const std::string& text) {
  json doc = parse_json(text);
  check_version(doc);
  return instruction_from(doc);
}

std::vector<MmpInstruction> parse_instructions(const std::string& text) {
  json doc = parse_json(text);
  check_version(doc);
  std::vector<MmpInstruction> out;
  if (doc.contains("instructions")) {
    for (const auto& e : doc["instructions"]) out.push_back(instruction_from(e));
  } else {
    out.push_back(instruction_from(doc));
  }
  return out;
}

GroupAction parse_action(const std::string& text) {
  json doc = parse_json(text);
  check_version(doc);
  GroupAction action;
  if (!doc.contains("generators") || !doc["generators"].is_array())
    fail("BadDocument", "action needs a generators array");
  for (const auto& g : doc["generators"]) {
    if (!g.is_object()) fail("BadDocument", "generator must map labels");
    std::map<VertexLabel, VertexLabel> gen;
    for (const auto& [from, to] : g.items()) {
      if (!to.is_string()) fail("BadDocument", "generator values are labels");
      gen[from] = to.get<std::string>();
    }
    action.generators.push_back(std::move(gen));
  }
  if (doc.contains("max_order"))
    action.max_order = doc["max_order"].get<std::size_t>();
  return action;
}

AttachmentSpec parse_attachment(const std::string& text, const Complex& host) {
  json doc = parse_json(text);
  check_version(doc);
  AttachmentSpec spec;
  spec.cell = parse_id(doc.at("cell"), "cell");
  if (!host.has_cell(spec.cell))
    fail("UnknownCell", "attachment center " + id_str(spec.cell) +
                            " is not a cell of the host");
  if (doc.contains("link_complex"))
    spec.link_complex = parse_complex(doc["link_complex"].dump());
  if (doc.contains("vertex_map"))
    for (const auto& [from, to] : doc["vertex_map"].items())
      spec.tau.vertex_map[from] = to.get<std::string>();
  if (doc.contains("image_cells"))
    for (const auto& [from, to] : doc["image_cells"].items()) {
      auto d = as_decimal(from);
      if (!d) fail("BadDocument", "image_cells keys are cell ids");
      spec.tau.image_cells[*d] = parse_id(to, "image cell");
    }
  if (doc.contains("apex")) spec.apex = doc["apex"].get<std::string>();
  if (doc.contains("anchor")) spec.anchor = doc["anchor"].get<std::string>();
  return spec;
}

std::string print_attachment_record(const AttachmentRecord& rec) {
  json doc;
  doc["format_version"] = kFormatVersion;
  doc["apex"] = rec.apex;
  doc["apex_cell"] = id_str(rec.apex_cell);
  doc["anchor"] = rec.anchor;
  doc["pairs"] = sequence_json(rec.pairs);
  return dump(doc);
}

AttachmentRecord parse_attachment_record(const std::string& text) {
  json doc = parse_json(text);
  check_version(doc);
  AttachmentRecord rec;
  rec.apex = doc.at("apex").get<std::string>();
  rec.apex_cell = parse_id(doc.at("apex_cell"), "apex_cell");
  rec.anchor = doc.at("anchor").get<std::string>();
  rec.pairs = sequence_from(doc);
  return rec;
}

std::string print_homology(const HomologyResult& result) {
  json doc;
  doc["format_version"] = kFormatVersion;
  doc["over"] = "z";
  doc["reduced"] = result.reduced;
  doc["betti"] = result.betti;
  json torsion = json::array();
  for (const auto& degree : result.torsion) {
    json factors = json::array();
    for (const BigInt& f : degree) {
      if (f > BigInt(std::numeric_limits<std::int64_t>::max()))
        factors.push_back(f.str());
      else
        factors.push_back(f.convert_to<std::int64_t>());
    }
    torsion.push_back(factors);
  }
  doc["torsion"] = torsion;
  return dump(doc);
}

std::string print_betti_q(const std::vector<long long>& betti, bool reduced) {
  json doc;
  doc["format_version"] = kFormatVersion;
  doc["over"] = "q";
  doc["reduced"] = reduced;
  doc["betti"] = betti;
  return dump(doc);
}

std::string print_verify_report(const std::vector<std::string>& violations) {
  json doc;
  doc["format_version"] = kFormatVersion;
  doc["valid"] = violations.empty();
  doc["violations"] = violations;
  return dump(doc);
}

std::string print_iso(
    const std::optional<std::map<VertexLabel, VertexLabel>>& bijection) {
  json doc;
  doc["format_version"] = kFormatVersion;
  doc["isomorphic"] = bijection.has_value();
  if (bijection) {
    json map = json::object();
    for (const auto& [a, b] : *bijection) map[a] = b;
    doc["vertex_map"] = map;
  }
  return dump(doc);
}

std::string print_verdict(const Verdict& verdict) {
  json doc;
  doc["format_version"] = kFormatVersion;
  doc["verdict"] = verdict_name(verdict.kind);
  doc["nodes"] = verdict.nodes;
  if (verdict.sequence)
    doc["sequence"] = sequence_json(*verdict.sequence);
  return dump(doc);
}

}  // namespace dualcx
