#include <functional>

#include "doctest.h"
#include "dualcx/builders.hpp"
#include "dualcx/homology.hpp"
#include "support/random_complex.hpp"

using namespace dualcx;

namespace {

void expect_error(const std::function<void()>& f, const std::string& name) {
  try {
    f();
    FAIL_CHECK("expected error " << name);
  } catch (const Error& e) {
    CHECK(e.name() == name);
  }
}

// Independent chain condition check: rows of d_k dotted against columns of
// d_{k+1} must vanish.
bool boundary_squares_to_zero(const Complex& cx) {
  for (int k = 1; k <= cx.dim(); ++k) {
    BoundaryMatrix lo = boundary_matrix(cx, k - 1);
    BoundaryMatrix hi = boundary_matrix(cx, k);
    if (lo.cols != hi.rows) return false;
    for (std::size_t i = 0; i < lo.rows.size(); ++i)
      for (std::size_t j = 0; j < hi.cols.size(); ++j) {
        long long sum = 0;
        for (std::size_t m = 0; m < lo.cols.size(); ++m)
          sum += (long long)lo.entries[i][m] * hi.entries[m][j];
        if (sum != 0) return false;
      }
  }
  return true;
}

}  // namespace

TEST_CASE("boundary matrix of a single edge") {
  Complex edge = from_maximal_simplices({{"v1", "v2"}});
  BoundaryMatrix m = boundary_matrix(edge, 1);
  REQUIRE(m.rows.size() == 2);
  REQUIRE(m.cols.size() == 1);
  // rows in id order = (v1, v2); omitting v1 hits v2 with sign +1
  CHECK(m.entries[0][0] == -1);
  CHECK(m.entries[1][0] == 1);
}

TEST_CASE("boundary matrix of the two-edge circle has rank 1") {
  Complex circle = catalog("two_edge_circle");
  BoundaryMatrix m = boundary_matrix(circle, 1);
  REQUIRE(m.cols.size() == 2);
  CHECK(m.entries[0][0] == m.entries[0][1]);
  CHECK(m.entries[1][0] == m.entries[1][1]);
  std::vector<std::vector<BigInt>> big(2, std::vector<BigInt>(2));
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) big[i][j] = m.entries[i][j];
  CHECK(smith_invariant_factors(big).size() == 1);
}

TEST_CASE("chain condition") {
  CHECK(boundary_squares_to_zero(catalog("simplex(2)")));
  CHECK(boundary_squares_to_zero(catalog("boundary(3)")));
  CHECK(boundary_squares_to_zero(catalog("rp2")));
  CHECK(boundary_squares_to_zero(catalog("dunce_hat")));
  expect_error([] { (void)boundary_matrix(catalog("simplex(2)"), 3); },
               "DegreeOutOfRange");
}

TEST_CASE("smith normal form on hand-checked matrices") {
  auto factors = [](std::vector<std::vector<long long>> rows) {
    std::vector<std::vector<BigInt>> m;
    for (const auto& r : rows) m.push_back(std::vector<BigInt>(r.begin(), r.end()));
    return smith_invariant_factors(m);
  };
  CHECK(factors({{2, 0}, {0, 3}}) == std::vector<BigInt>{1, 6});
  CHECK(factors({{2, 4}, {6, 8}}) == std::vector<BigInt>{2, 4});
  CHECK(factors({{1, 0}, {0, 0}}) == std::vector<BigInt>{1});
  CHECK(factors({{0, 0}, {0, 0}}).empty());
  CHECK(factors({{6, 10}, {10, 6}}) == std::vector<BigInt>{2, 32});
  CHECK(factors({{4}}) == std::vector<BigInt>{4});
}

TEST_CASE("integer homology of standard spaces") {
  SUBCASE("circle") {
    HomologyResult h = homology_Z(catalog("boundary(2)"));
    CHECK(h.betti == std::vector<long long>{1, 1});
    for (const auto& t : h.torsion) CHECK(t.empty());
  }
  SUBCASE("2-sphere") {
    HomologyResult h = homology_Z(catalog("boundary(3)"));
    CHECK(h.betti == std::vector<long long>{1, 0, 1});
  }
  SUBCASE("projective plane") {
    HomologyResult h = homology_Z(catalog("rp2"));
    CHECK(h.betti == std::vector<long long>{1, 0, 0});
    REQUIRE(h.torsion.size() == 3);
    CHECK(h.torsion[0].empty());
    CHECK(h.torsion[1] == std::vector<BigInt>{2});
    CHECK(h.torsion[2].empty());  // no torsion in the top degree
  }
  SUBCASE("dunce hat, reduced") {
    HomologyResult h = homology_Z(catalog("dunce_hat"), /*reduced=*/true);
    CHECK(h.betti == std::vector<long long>{0, 0, 0});
    for (const auto& t : h.torsion) CHECK(t.empty());
  }
  SUBCASE("two disjoint points") {
    HomologyResult h = homology_Z(catalog("fig1_right"));
    CHECK(h.betti == std::vector<long long>{2});
    HomologyResult hr = homology_Z(catalog("fig1_right"), /*reduced=*/true);
    CHECK(hr.betti == std::vector<long long>{1});
  }
}

TEST_CASE("rational Betti numbers") {
  CHECK(is_Q_acyclic(catalog("simplex(4)")));
  CHECK(betti_Q(catalog("two_edge_circle")) == std::vector<long long>{1, 1});
  CHECK_FALSE(is_Q_acyclic(catalog("two_edge_circle")));
  CHECK(is_Q_acyclic(catalog("rp2")));  // torsion is invisible over Q
  CHECK(betti_Q(catalog("rp2")) == std::vector<long long>{1, 0, 0});
}

TEST_CASE("the two homology routes agree on a corpus") {
  testing::Rng rng(777);
  for (int i = 0; i < 30; ++i) {
    Complex cx = testing::random_complex(rng);
    CHECK(boundary_squares_to_zero(cx));
    HomologyResult hz = homology_Z(cx, false);
    CHECK(hz.betti == betti_Q(cx, false));
    CHECK(homology_Z(cx, true).betti == betti_Q(cx, true));
    CHECK((std::size_t)hz.betti[0] == cx.connected_components().size());
    if (cx.dim() >= 0) CHECK(hz.torsion[cx.dim()].empty());
  }
}
