#ifndef DUALCX_BUILDERS_HPP
#define DUALCX_BUILDERS_HPP

#include <map>
#include <string>
#include <vector>

#include "dualcx/complex.hpp"

namespace dualcx {

using DivisorId = std::string;

/// One stratum: a connected component of the intersection of the divisors in
/// J.  `tag` distinguishes multiple components over the same J.
struct Stratum {
  std::string id;
  std::vector<DivisorId> J;  // sorted, non-empty
  std::string tag;
};

/// Extensional encoding of a stratification: divisors, strata, and for every
/// (stratum, j in J) the component of the intersection over J minus j that
/// contains it.  This is exactly the combinatorial data a dual complex is
/// built from.
struct StrataDescriptor {
  std::vector<DivisorId> divisors;
  std::vector<Stratum> strata;
  /// parent[{stratum id, dropped divisor}] = stratum id over J minus {j}.
  std::map<std::pair<std::string, DivisorId>, std::string> parent;
};

/// Builds the dual complex: one vertex per divisor, one (|J|-1)-cell per
/// stratum, facets given by the parent maps.  Errors name the offending
/// stratum: MissingParent, NonCommutingParents, DanglingDivisor.
Complex dual_complex(const StrataDescriptor& d);

/// Inverse encoding: one divisor per vertex, one stratum per cell, parents
/// from the facet maps.  dual_complex(strata_of(cx)) is isomorphic to cx.
StrataDescriptor strata_of(const Complex& cx);

/// Named example complexes.  Accepts simplex(n) and boundary(n) for
/// 0 <= n <= 8, two_edge_circle, fig1_left/right, fig2_left/right,
/// fig3_left/right, dunce_hat, rp2.  Throws UnknownName otherwise.
///
/// dunce_hat and rp2 are frozen cell lists: generated once from first
/// principles (a boundary-identified disk, resp. an exhaustive search over
/// 6-vertex closed surfaces) and machine-verified against the homology and
/// free-pair oracles before being committed; see tests/support/golden_gen.
Complex catalog(const std::string& name);

/// The names `catalog` accepts, with n ranges collapsed.
std::vector<std::string> catalog_names();

namespace detail {
// Frozen canonical documents backing catalog("dunce_hat") / catalog("rp2").
extern const char* const kDunceHatJson;
extern const char* const kRp2Json;
}  // namespace detail

}  // namespace dualcx

#endif
