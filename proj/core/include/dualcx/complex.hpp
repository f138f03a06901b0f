#ifndef DUALCX_COMPLEX_HPP
#define DUALCX_COMPLEX_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dualcx/errors.hpp"

namespace dualcx {

/// Stable cell identifier.  Ids are assigned in creation order and are never
/// reused after a deletion (deleted ids stay tombstoned), which keeps
/// recorded collapse sequences replayable without ambiguity.
using CellId = std::uint64_t;

/// Vertex labels are opaque string tokens, totally ordered lexicographically.
using VertexLabel = std::string;

struct LinkResult;

/// One cell of a regular complex with simplex cells.
///
/// `vertices` is the sorted tuple of the d+1 distinct labels spanning the
/// cell.  `facets[i]` is the face obtained by omitting `vertices[i]`; it is
/// empty for 0-cells.  Distinct cells may carry the same vertex tuple (the
/// complex is a simplicial poset, not necessarily a simplicial complex).
struct Cell {
  int dim = 0;
  std::vector<VertexLabel> vertices;
  std::vector<CellId> facets;

  bool operator==(const Cell&) const = default;
};

/// A regular cell complex all of whose cells are simplices (a simplicial
/// poset).  0-cells are in bijection with vertex labels.  Query methods are
/// const; the mutating builders (`add_vertex`, `attach_cell`, ...) are meant
/// for the construction phase — every operation in the library takes its
/// input by const reference and returns a fresh value.
class Complex {
 public:
  Complex() = default;

  static Complex empty() { return Complex{}; }

  /// Restores a complex from explicit (id, cell) parts, e.g. after parsing.
  /// Checks only what is needed to represent the data (resolvable facets,
  /// consistent dims, one 0-cell per label); run `verify` for the full
  /// structural validation.
  static Complex from_parts(const std::vector<std::pair<CellId, Cell>>& parts);

  // --- construction -------------------------------------------------------

  /// Adds a fresh vertex (a 0-cell).  Throws DuplicateLabel.
  CellId add_vertex(const VertexLabel& v);

  /// Attaches a cell of dimension |vertices|-1 >= 1 on the given facets.
  /// `facets[i]` must be the face omitting the i-th vertex of the sorted
  /// tuple.  Throws NonRegular (duplicate facets or degenerate tuple),
  /// FacetMismatch (tuple disagreement), IncoherentBoundary (facet maps of
  /// the facets do not commute), UnknownCell.
  CellId attach_cell(std::vector<VertexLabel> vertices,
                     std::vector<CellId> facets);

  /// Removes a cell (and its label, for 0-cells).  No coface bookkeeping:
  /// callers must keep the complex closed under faces themselves.  Used by
  /// the collapse/deletion operations after checking their preconditions.
  void remove_cell(CellId c);

  // --- queries -------------------------------------------------------------

  bool has_cell(CellId c) const { return cells_.count(c) != 0; }
  const Cell& cell(CellId c) const;
  const std::map<CellId, Cell>& cells() const { return cells_; }
  std::size_t cell_count() const { return cells_.size(); }

  /// -1 for the empty complex.
  int dim() const;

  std::vector<CellId> cells_of_dim(int d) const;
  std::size_t count_of_dim(int d) const;

  const std::map<VertexLabel, CellId>& vertex_cells() const {
    return vertex_cells_;
  }
  std::optional<CellId> vertex_cell(const VertexLabel& v) const;
  bool has_vertex(const VertexLabel& v) const {
    return vertex_cells_.count(v) != 0;
  }

  /// True iff `face` is an (iterated) face of `of`; reflexive.
  bool is_face(CellId face, CellId of) const;

  /// The unique face of `c` spanned by `subset` (a subset of c's tuple), via
  /// iterated facet maps.  Returns nullopt if `subset` is not a subset of the
  /// tuple.  `subset` must be sorted.
  std::optional<CellId> face_on(CellId c,
                                const std::vector<VertexLabel>& subset) const;

  /// Strict cofaces of c, in id order.
  std::vector<CellId> cofaces(CellId c) const;

  /// All cells whose closure contains c (c itself included), in id order.
  std::vector<CellId> star(CellId c) const;

  /// The closure of star(c) as a subcomplex; cell ids are preserved.
  Complex closed_star(CellId c) const;

  /// The subcomplex on a face-closed id set; ids are preserved.
  Complex subcomplex(const std::vector<CellId>& ids) const;

  /// The link of a vertex, built from the strict cofaces of its 0-cell: one
  /// link cell per coface, spanned by fresh vertices labelled after the far
  /// ends of the edges at v (suffixed "#k" when several edges share a far
  /// end).  Throws UnknownCell; the argument must be a 0-cell.
  LinkResult link(CellId vertex_cell) const;

  /// True iff every cell is determined by its vertex set.
  bool is_simplicial() const;

  /// Sum over d of (-1)^d (number of d-cells); 0 for the empty complex.
  long long euler_characteristic() const;

  /// Partition of the vertex labels under facet-incidence connectivity.
  /// Classes are sorted internally and listed by their least label.
  std::vector<std::vector<VertexLabel>> connected_components() const;

  CellId next_id() const { return next_id_; }
  void set_next_id(CellId n) { next_id_ = n; }

 private:
  std::map<CellId, Cell> cells_;
  std::map<VertexLabel, CellId> vertex_cells_;
  CellId next_id_ = 0;
};

struct LinkResult {
  Complex complex;
  /// Whether the ambient complex was simplicial; the classical link is only
  /// defined in that case, so non-simplicial inputs are flagged here.
  bool ambient_simplicial = true;
};

// --- free operations --------------------------------------------------------

/// Builds the simplicial complex whose cells are all non-empty subsets of the
/// given vertex sets.  Sets must be non-empty (throws EmptyVertexSet).
Complex from_maximal_simplices(
    const std::vector<std::vector<VertexLabel>>& maximal);

/// Removes a maximal cell, keeping its faces.  Throws HasCofaces, UnknownCell.
Complex delete_open_cell(const Complex& cx, CellId c);

/// The join A * B: cells of A, cells of B, and one cell per pair, with facet
/// maps inherited coordinatewise.  Label sets must be disjoint (LabelClash).
Complex join(const Complex& a, const Complex& b);

/// join(A, point); the apex label must be fresh (LabelClash).
Complex cone(const Complex& a, const VertexLabel& apex);

/// Searches for a vertex bijection inducing a cell bijection that commutes
/// with the facet maps.  Backtracking with degree-profile pruning; intended
/// for desk-scale complexes only.
std::optional<std::map<VertexLabel, VertexLabel>> is_isomorphic(
    const Complex& a, const Complex& b);

/// Full structural validation: face closure, tuple/facet alignment,
/// regularity, commuting facet maps, boolean face intervals, and the
/// label/0-cell bijection.  Returns human-readable violations (empty = valid).
std::vector<std::string> verify(const Complex& cx);

/// Vertex tuple sorted and checked for duplicates (throws NonRegular).
std::vector<VertexLabel> sorted_tuple(std::vector<VertexLabel> vertices);

}  // namespace dualcx

#endif
