#ifndef DUALCX_JSON_IO_HPP
#define DUALCX_JSON_IO_HPP

#include <optional>
#include <string>
#include <vector>

#include "dualcx/builders.hpp"
#include "dualcx/collapse.hpp"
#include "dualcx/complex.hpp"
#include "dualcx/homology.hpp"
#include "dualcx/subdivision.hpp"

namespace dualcx {

/// Documents carry a mandatory format_version; unknown versions are rejected
/// (UnknownFormatVersion) so golden files outlive code changes.
inline constexpr int kFormatVersion = 1;

/// Canonical printing: UTF-8, keys sorted, two-space indent, trailing
/// newline, cells in id order with explicit 0-cells.  Canonical output is
/// byte-deterministic and survives parse -> print unchanged.
std::string print_complex(const Complex& cx);

/// Accepts the canonical form, a form with elided 0-cells (facets may then
/// reference a 0-cell by its vertex label), and the `maximal_simplices`
/// shorthand (input only).  Structural problems throw BadDocument; with
/// `validate` the parsed complex must also pass `verify` (InvalidComplex).
Complex parse_complex(const std::string& text, bool validate = true);

std::string print_strata(const StrataDescriptor& d);
StrataDescriptor parse_strata(const std::string& text);

std::string print_sequence(const CollapseSequence& seq);
/// Accepts a sequence document or an attachment record (anything with pairs).
CollapseSequence parse_sequence(const std::string& text);

std::string print_instruction(const MmpInstruction& instr);
MmpInstruction parse_instruction(const std::string& text);
/// A single-instruction document or {"instructions": [...]}.
std::vector<MmpInstruction> parse_instructions(const std::string& text);

GroupAction parse_action(const std::string& text);

/// Input description of a cone-over-join attachment.
struct AttachmentSpec {
  CellId cell = 0;
  Complex link_complex;
  TauMap tau;
  std::optional<VertexLabel> apex;
  std::optional<VertexLabel> anchor;
};
/// The attachment's cell/image references are resolved against `host`.
AttachmentSpec parse_attachment(const std::string& text, const Complex& host);

std::string print_attachment_record(const AttachmentRecord& rec);
AttachmentRecord parse_attachment_record(const std::string& text);

std::string print_homology(const HomologyResult& result);
std::string print_betti_q(const std::vector<long long>& betti, bool reduced);

std::string print_verify_report(const std::vector<std::string>& violations);
std::string print_iso(
    const std::optional<std::map<VertexLabel, VertexLabel>>& bijection);
std::string print_verdict(const Verdict& verdict);

}  // namespace dualcx

#endif
