#ifndef DUALCX_COLLAPSE_HPP
#define DUALCX_COLLAPSE_HPP

#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "dualcx/complex.hpp"

namespace dualcx {

/// A free pair: `face` is a facet of `coface` and of no other cell.
struct FreePair {
  CellId coface = 0;
  CellId face = 0;
  bool operator==(const FreePair&) const = default;
};

/// Ordered, replayable list of elementary collapses: each pair must be free
/// in the complex obtained by executing all earlier pairs.
struct CollapseSequence {
  std::vector<FreePair> pairs;
};

/// One MMP-style contraction step: a distinguished vertex and the link cells
/// to contract.  Executing it removes `contracted` together with the matching
/// cells through v0, as star/link-type pairs.
struct MmpInstruction {
  VertexLabel v0;
  std::set<CellId> contracted;
};

/// A finite set of cell-level automorphisms, generated from vertex-label
/// bijections.  The closure holds every cell bijection commuting with the
/// facet maps whose vertex part lies in the group the generators span; on a
/// non-simplicial complex this includes automorphisms fixing all labels
/// (e.g. swapping parallel edges).
struct GroupAction {
  /// label -> label maps; labels omitted from a generator stay fixed.
  std::vector<std::map<VertexLabel, VertexLabel>> generators;
  std::size_t max_order = 10000;
};

/// The computed closure: each element maps every cell id.
struct ActionClosure {
  std::vector<std::map<CellId, CellId>> elements;  // includes the identity
};

/// Computes the closure of an action on a given complex.  Throws
/// NotAnAutomorphism if a generator does not extend to a cell bijection and
/// GroupTooLarge past `max_order`.
ActionClosure action_closure(const Complex& cx, const GroupAction& action);

/// All free pairs, ordered by coface dimension descending then ids ascending.
std::vector<FreePair> free_pairs(const Complex& cx);

/// Removes the pair's two cells.  Throws NotFree.
Complex elementary_collapse(const Complex& cx, const FreePair& pair);

/// Executes a recorded sequence, verifying freeness at every step.
/// Throws NotFreeAtStep(k).
Complex replay(const Complex& cx, const CollapseSequence& seq);

/// The paired star/link-type collapse of one MMP step: every contracted link
/// cell w is removed together with its unique coface through v0, largest
/// dimensions first.  Errors: NotInLink, Ambiguous, NotUpwardClosed, and
/// NotFreeAtStep(k) when the instruction violates the combinatorial
/// hypotheses behind the schedule.
std::pair<Complex, CollapseSequence> mmp_collapse(const Complex& cx,
                                                  const MmpInstruction& instr);

/// Applies the first free pair until none exists.
std::pair<Complex, CollapseSequence> greedy_collapse(const Complex& cx);

struct Verdict {
  enum class Kind { Collapsible, NotCollapsible, Inconclusive, NoFreePair };
  Kind kind = Kind::NoFreePair;
  std::optional<CollapseSequence> sequence;  // set when Collapsible
  std::uint64_t nodes = 0;

  bool collapsible() const { return kind == Kind::Collapsible; }
};

std::string verdict_name(Verdict::Kind k);

inline constexpr std::uint64_t kDefaultSearchBudget = 1000000;

/// Backtracking search for a collapse to a single vertex, with memoization
/// of visited cell sets.  `budget` caps the number of search nodes.
Verdict collapsible_search(const Complex& cx,
                           std::uint64_t budget = kDefaultSearchBudget);

/// As collapsible_search, but moves never remove target cells and success
/// means reaching exactly the target subcomplex.  The target id set must be
/// face-closed (NotASubcomplex).
Verdict collapses_to(const Complex& cx, const std::set<CellId>& target,
                     std::uint64_t budget = kDefaultSearchBudget);

/// Equivariant greedy collapse: whole orbits of free pairs are removed per
/// step after checking that the orbit's pairs occupy pairwise disjoint cell
/// sets (OverlappingOrbit otherwise).  The result is setwise invariant.
std::pair<Complex, CollapseSequence> equivariant_collapse(
    const Complex& cx, const GroupAction& action);

/// Equivariant instructed collapse: the instruction set must be invariant
/// under the action (NotInvariantInstruction) and the instructions' removed
/// sets pairwise disjoint (OverlappingOrbit); all pair schedules are merged
/// and executed largest dimension first.
std::pair<Complex, CollapseSequence> equivariant_collapse(
    const Complex& cx, const GroupAction& action,
    const std::vector<MmpInstruction>& instructions);

}  // namespace dualcx

#endif
