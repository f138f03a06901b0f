#ifndef DUALCX_SUBDIVISION_HPP
#define DUALCX_SUBDIVISION_HPP

#include <map>
#include <optional>
#include <utility>

#include "dualcx/collapse.hpp"
#include "dualcx/complex.hpp"

namespace dualcx {

/// Stellar subdivision at an interior point of a positive-dimensional cell:
/// cells whose closure does not contain `c` are untouched (ids preserved);
/// every coface of `c` (including `c`) is replaced by the spans of the fresh
/// vertex `p` with its faces not containing `c`.  Errors: UnknownCell,
/// DimZeroCenter, LabelClash.
Complex stellar_subdivide(const Complex& cx, CellId c, const VertexLabel& p);

/// Stellar subdivisions at all cells of dim >= 1 of the input, dimension
/// descending then id ascending; the output is always simplicial.  New
/// vertices are named b<id> after the subdivided cell (prefixed with '_' on a
/// clash with existing labels).
Complex barycentric_subdivide(const Complex& cx);

/// Blow-up of a stratum: stellar subdivision under its divisorial name.
Complex blowup_stratum(const Complex& cx, CellId c, const VertexLabel& p);

/// Blow-up of a center that is not a stratum: the dual complex is unchanged.
Complex blowup_trivial(const Complex& cx);

/// How the cells of an attached complex land in the host: a vertex relabeling
/// plus, where the host is ambiguous (parallel cells), explicit image cells
/// for the top joins c * l.
struct TauMap {
  std::map<VertexLabel, VertexLabel> vertex_map;
  /// Optional: cell of L -> cell of the host identified with the join of the
  /// center and that cell.  Resolved by uniqueness when absent.
  std::map<CellId, CellId> image_cells;
};

/// Everything needed to undo an attachment: the apex, the anchor vertex of
/// the center the schedule pairs through, and the pairing schedule itself
/// (largest dimensions first, ending with (apex*anchor, apex)).
struct AttachmentRecord {
  VertexLabel apex;
  CellId apex_cell = 0;
  VertexLabel anchor;
  CollapseSequence pairs;
};

/// Glues the cone over the join of a cell `c` of the host with a disjoint
/// complex `L`, identifying the join with existing host cells through `tau`
/// and adding one new cell per join cell (plus the apex).  Errors:
/// NonInjectiveOnCell, UnresolvedImageCell, LabelClash, UnknownCell.
std::pair<Complex, AttachmentRecord> attach_cone_over_join(
    const Complex& cx, CellId c, const Complex& L, const TauMap& tau,
    const std::optional<VertexLabel>& apex = std::nullopt,
    const std::optional<VertexLabel>& anchor = std::nullopt);

/// Collapses everything an attachment added, verifying each scheduled pair
/// is free at its turn (NotFreeAtStep(k) otherwise: the record is stale or
/// the complex was modified).  Returns the pruned complex — equal to the
/// original host on surviving cell ids — and the executed sequence.
std::pair<Complex, CollapseSequence> collapse_coned_join(
    const Complex& cx, const AttachmentRecord& record);

}  // namespace dualcx

#endif
