// dualcx — build and manipulate dual complexes of stratified divisor data.
//
// Subcommands compose through stdin/stdout ('-' or omitted input reads the
// standard input), all documents are canonical JSON, and every domain error
// exits 1 with a machine-readable {"error": name} object on stderr.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "dualcx/builders.hpp"
#include "dualcx/collapse.hpp"
#include "dualcx/complex.hpp"
#include "dualcx/homology.hpp"
#include "dualcx/json_io.hpp"
#include "dualcx/subdivision.hpp"
#include "json.hpp"

namespace {

using namespace dualcx;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string slurp(const std::string& path) {
  if (path.empty() || path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void spill(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write " + path);
  out << text;
}

CellId parse_cell_id(const std::string& s) {
  try {
    std::size_t used = 0;
    unsigned long long v = std::stoull(s, &used);
    if (used == s.size()) return v;
  } catch (const std::exception&) {
  }
  throw UsageError("not a cell id: " + s);
}

std::uint64_t search_budget(std::uint64_t flag_value) {
  if (flag_value != 0) return flag_value;
  if (const char* env = std::getenv("DUALCX_BUDGET")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw UsageError("DUALCX_BUDGET is not a number");
    }
  }
  return kDefaultSearchBudget;
}

VertexLabel fresh_label(const Complex& cx, const std::string& given) {
  if (!given.empty()) return given;
  for (std::size_t k = 0;; ++k) {
    VertexLabel cand = "p" + std::to_string(k);
    if (!cx.has_vertex(cand)) return cand;
  }
}

// A collapse target: either an explicit id list or a complex document whose
// cells are matched into the host by vertex tuple.
std::set<CellId> resolve_target(const std::string& text, const Complex& cx) {
  nlohmann::json doc =
      nlohmann::json::parse(text, nullptr, /*allow_exceptions=*/false);
  if (!doc.is_discarded() && doc.is_object() && doc.contains("cells") &&
      doc["cells"].is_array() && !doc["cells"].empty() &&
      doc["cells"][0].is_string()) {
    std::set<CellId> target;
    for (const auto& e : doc["cells"])
      target.insert(parse_cell_id(e.get<std::string>()));
    return target;
  }
  Complex want = parse_complex(text);
  std::map<std::vector<VertexLabel>, std::vector<CellId>> host_by_tuple;
  for (const auto& [id, c] : cx.cells()) host_by_tuple[c.vertices].push_back(id);
  std::map<std::vector<VertexLabel>, std::size_t> want_count;
  for (const auto& [id, c] : want.cells()) want_count[c.vertices]++;
  std::set<CellId> target;
  for (const auto& [tuple, n] : want_count) {
    auto it = host_by_tuple.find(tuple);
    if (it == host_by_tuple.end() || it->second.size() < n)
      fail("NotASubcomplex", "target cell has no counterpart in the host");
    if (it->second.size() != n)
      fail("NotASubcomplex",
           "target matches parallel host cells ambiguously; pass an id list");
    for (CellId id : it->second) target.insert(id);
  }
  return target;
}

int run(int argc, char** argv) {
  CLI::App app{"dual complexes of stratified divisor data: builders, "
               "subdivision, blow-ups, collapses, homology"};
  app.require_subcommand(1);

  // build
  auto* cmd_build = app.add_subcommand("build", "dual complex of a strata descriptor");
  std::string build_in;
  cmd_build->add_option("input", build_in, "strata document (default stdin)");

  // catalog
  auto* cmd_catalog = app.add_subcommand("catalog", "named example complexes");
  std::string catalog_name;
  cmd_catalog->add_option("name", catalog_name)->required();

  // subdivide
  auto* cmd_subdivide = app.add_subcommand("subdivide", "stellar or barycentric subdivision");
  std::string sd_stellar, sd_label, sd_in;
  bool sd_barycentric = false;
  cmd_subdivide->add_option("--stellar", sd_stellar, "cell id of the center");
  cmd_subdivide->add_flag("--barycentric", sd_barycentric);
  cmd_subdivide->add_option("--label", sd_label, "label for the new vertex");
  cmd_subdivide->add_option("input", sd_in, "complex document (default stdin)");

  // blowup
  auto* cmd_blowup = app.add_subcommand("blowup", "blow-up moves on a dual complex");
  std::string bu_stratum, bu_label, bu_cone, bu_record, bu_in;
  bool bu_trivial = false;
  cmd_blowup->add_option("--stratum", bu_stratum, "cell id of the blown-up stratum");
  cmd_blowup->add_flag("--trivial", bu_trivial, "center is not a stratum: identity");
  cmd_blowup->add_option("--cone", bu_cone, "attachment document for a cone over a join");
  cmd_blowup->add_option("--record", bu_record, "write the attachment record here");
  cmd_blowup->add_option("--label", bu_label, "label for the new vertex");
  cmd_blowup->add_option("input", bu_in, "complex document (default stdin)");

  // collapse
  auto* cmd_collapse = app.add_subcommand("collapse", "free-pair collapses and searches");
  bool cl_greedy = false, cl_search = false;
  std::string cl_mmp, cl_to, cl_replay, cl_equivariant, cl_seq_out, cl_verdict_out, cl_in;
  std::uint64_t cl_budget = 0;
  cmd_collapse->add_flag("--greedy", cl_greedy);
  cmd_collapse->add_option("--mmp", cl_mmp, "instruction document");
  cmd_collapse->add_flag("--search", cl_search, "collapsibility search");
  cmd_collapse->add_option("--to", cl_to, "target subcomplex (id list or complex document)");
  cmd_collapse->add_option("--replay", cl_replay, "sequence document to replay");
  cmd_collapse->add_option("--equivariant", cl_equivariant, "group action document");
  cmd_collapse->add_option("--budget", cl_budget, "search node budget");
  cmd_collapse->add_option("--sequence-out", cl_seq_out, "write the collapse sequence here");
  cmd_collapse->add_option("--verdict-out", cl_verdict_out, "write the search verdict here");
  cmd_collapse->add_option("input", cl_in, "complex document (default stdin)");

  // homology
  auto* cmd_homology = app.add_subcommand("homology", "Betti numbers and torsion");
  bool h_reduced = false;
  std::string h_over = "z", h_in;
  cmd_homology->add_flag("--reduced", h_reduced);
  cmd_homology->add_option("--over", h_over)->check(CLI::IsMember({"z", "q"}));
  cmd_homology->add_option("input", h_in, "complex document (default stdin)");

  // verify
  auto* cmd_verify = app.add_subcommand("verify", "structural validation report");
  std::string v_in;
  cmd_verify->add_option("input", v_in, "complex document (default stdin)");

  // iso
  auto* cmd_iso = app.add_subcommand("iso", "isomorphism test");
  std::string iso_a, iso_b;
  cmd_iso->add_option("a", iso_a)->required();
  cmd_iso->add_option("b", iso_b)->required();

  app.parse(argc, argv);

  if (cmd_build->parsed()) {
    std::cout << print_complex(dual_complex(parse_strata(slurp(build_in))));
    return 0;
  }

  if (cmd_catalog->parsed()) {
    std::cout << print_complex(catalog(catalog_name));
    return 0;
  }

  if (cmd_subdivide->parsed()) {
    if (sd_barycentric == !sd_stellar.empty())
      throw UsageError("pick exactly one of --stellar ID / --barycentric");
    Complex cx = parse_complex(slurp(sd_in));
    Complex out = sd_barycentric
                      ? barycentric_subdivide(cx)
                      : stellar_subdivide(cx, parse_cell_id(sd_stellar),
                                          fresh_label(cx, sd_label));
    std::cout << print_complex(out);
    return 0;
  }

  if (cmd_blowup->parsed()) {
    int modes = int(!bu_stratum.empty()) + int(bu_trivial) + int(!bu_cone.empty());
    if (modes != 1)
      throw UsageError("pick exactly one of --stratum ID / --trivial / --cone FILE");
    Complex cx = parse_complex(slurp(bu_in));
    if (bu_trivial) {
      std::cout << print_complex(blowup_trivial(cx));
    } else if (!bu_stratum.empty()) {
      std::cout << print_complex(blowup_stratum(cx, parse_cell_id(bu_stratum),
                                                fresh_label(cx, bu_label)));
    } else {
      AttachmentSpec spec = parse_attachment(slurp(bu_cone), cx);
      auto [out, record] = attach_cone_over_join(cx, spec.cell,
                                                 spec.link_complex, spec.tau,
                                                 spec.apex, spec.anchor);
      if (!bu_record.empty()) spill(bu_record, print_attachment_record(record));
      std::cout << print_complex(out);
    }
    return 0;
  }

  if (cmd_collapse->parsed()) {
    int modes = int(cl_greedy) + int(!cl_mmp.empty()) + int(cl_search) +
                int(!cl_to.empty()) + int(!cl_replay.empty());
    if (modes != 1)
      throw UsageError(
          "pick exactly one of --greedy / --mmp / --search / --to / --replay");
    Complex cx = parse_complex(slurp(cl_in));
    Complex out = cx;
    CollapseSequence seq;
    std::optional<Verdict> verdict;

    if (!cl_equivariant.empty()) {
      GroupAction action = parse_action(slurp(cl_equivariant));
      if (cl_greedy) {
        std::tie(out, seq) = equivariant_collapse(cx, action);
      } else if (!cl_mmp.empty()) {
        std::tie(out, seq) =
            equivariant_collapse(cx, action, parse_instructions(slurp(cl_mmp)));
      } else {
        throw UsageError("--equivariant combines with --greedy or --mmp");
      }
    } else if (cl_greedy) {
      std::tie(out, seq) = greedy_collapse(cx);
    } else if (!cl_mmp.empty()) {
      std::tie(out, seq) = mmp_collapse(cx, parse_instruction(slurp(cl_mmp)));
    } else if (!cl_replay.empty()) {
      seq = parse_sequence(slurp(cl_replay));
      out = replay(cx, seq);
    } else if (cl_search) {
      verdict = collapsible_search(cx, search_budget(cl_budget));
    } else {
      verdict = collapses_to(cx, resolve_target(slurp(cl_to), cx),
                             search_budget(cl_budget));
    }

    if (verdict) {
      if (verdict->sequence) {
        seq = *verdict->sequence;
        out = replay(cx, seq);
      }
      std::cerr << "verdict: " << verdict_name(verdict->kind) << "\n";
      if (!cl_verdict_out.empty()) spill(cl_verdict_out, print_verdict(*verdict));
    }
    if (!cl_seq_out.empty()) spill(cl_seq_out, print_sequence(seq));
    std::cout << print_complex(out);
    return 0;
  }

  if (cmd_homology->parsed()) {
    Complex cx = parse_complex(slurp(h_in));
    if (h_over == "q")
      std::cout << print_betti_q(betti_Q(cx, h_reduced), h_reduced);
    else
      std::cout << print_homology(homology_Z(cx, h_reduced));
    return 0;
  }

  if (cmd_verify->parsed()) {
    Complex cx = parse_complex(slurp(v_in), /*validate=*/false);
    std::vector<std::string> violations = verify(cx);
    std::cout << print_verify_report(violations);
    return violations.empty() ? 0 : 1;
  }

  if (cmd_iso->parsed()) {
    auto bijection =
        is_isomorphic(parse_complex(slurp(iso_a)), parse_complex(slurp(iso_b)));
    std::cout << print_iso(bijection);
    return bijection ? 0 : 1;
  }

  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    try {
      return run(argc, argv);
    } catch (const CLI::ParseError& e) {
      CLI::App app;
      int code = app.exit(e);
      return code == 0 ? 0 : 2;
    }
  } catch (const Error& e) {
    nlohmann::json err;
    err["error"] = e.name();
    err["message"] = e.what();
    if (e.step()) err["step"] = *e.step();
    std::cerr << err.dump(2) << "\n";
    return (e.name() == "BadDocument" || e.name() == "UnknownFormatVersion")
               ? 2
               : 1;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
