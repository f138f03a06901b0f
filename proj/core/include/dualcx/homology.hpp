#ifndef DUALCX_HOMOLOGY_HPP
#define DUALCX_HOMOLOGY_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

#include "dualcx/complex.hpp"

namespace dualcx {

using BigInt = boost::multiprecision::cpp_int;

/// Integer boundary matrix in degree k: rows indexed by the (k-1)-cells,
/// columns by the k-cells, both in id order.  The entry for the facet
/// omitting position i of a column's sorted vertex tuple is (-1)^i.
struct BoundaryMatrix {
  int degree = 0;
  std::vector<CellId> rows;
  std::vector<CellId> cols;
  std::vector<std::vector<int>> entries;  // rows x cols, values in {-1,0,1}
};

/// Per-degree Betti numbers and invariant factors.  Degree d torsion comes
/// from the Smith normal form of the boundary in degree d+1, so the top
/// degree never carries torsion.
struct HomologyResult {
  bool reduced = false;
  std::vector<long long> betti;               // degrees 0..dim
  std::vector<std::vector<BigInt>> torsion;   // invariant factors > 1
};

/// Throws DegreeOutOfRange unless 0 <= k <= dim(cx).
BoundaryMatrix boundary_matrix(const Complex& cx, int k);

/// Multiset of nonzero invariant factors of an integer matrix (Smith normal
/// form by pivot-magnitude minimization; exact arbitrary-precision
/// arithmetic).  Sorted ascending, each >= 1, consecutive entries dividing.
std::vector<BigInt> smith_invariant_factors(
    std::vector<std::vector<BigInt>> m);

/// Integer homology of every degree via Smith normal forms.  With `reduced`
/// the degree-0 boundary is augmented by the all-ones row.
HomologyResult homology_Z(const Complex& cx, bool reduced = false);

/// Rational Betti numbers.  Deliberately computed by fraction-based Gaussian
/// elimination, independent of the Smith-normal-form route, so the two can
/// cross-check each other.
std::vector<long long> betti_Q(const Complex& cx, bool reduced = false);

/// All reduced rational Betti numbers vanish.
bool is_Q_acyclic(const Complex& cx);

}  // namespace dualcx

#endif
