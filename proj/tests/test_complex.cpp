#include <algorithm>

#include "doctest.h"
#include "dualcx/builders.hpp"
#include "dualcx/complex.hpp"
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

void expect_valid(const Complex& cx) {
  std::vector<std::string> bad = verify(cx);
  for (const std::string& b : bad) FAIL_CHECK(b);
}

}  // namespace

TEST_CASE("empty complex and vertices") {
  Complex cx = Complex::empty();
  CHECK(cx.cell_count() == 0);
  CHECK(cx.euler_characteristic() == 0);
  CHECK(cx.dim() == -1);

  cx.add_vertex("v1");
  CHECK(cx.cell_count() == 1);
  CHECK(cx.euler_characteristic() == 1);
  expect_error([&] { cx.add_vertex("v1"); }, "DuplicateLabel");
  expect_valid(cx);
}

TEST_CASE("attach_cell edges and regularity") {
  Complex cx;
  CellId v1 = cx.add_vertex("v1");
  CellId v2 = cx.add_vertex("v2");
  cx.attach_cell({"v1", "v2"}, {v2, v1});
  CHECK(cx.euler_characteristic() == 1);
  expect_valid(cx);

  // a second distinct edge on the same vertices is allowed: the two-edge
  // circle is regular but not simplicial
  cx.attach_cell({"v1", "v2"}, {v2, v1});
  CHECK(cx.euler_characteristic() == 0);
  CHECK_FALSE(cx.is_simplicial());
  expect_valid(cx);

  expect_error([&] { cx.attach_cell({"v1", "v2"}, {v1, v1}); }, "NonRegular");
  expect_error([&] { cx.attach_cell({"v1", "v2"}, {v1, v2}); },
               "FacetMismatch");
  expect_error([&] { cx.attach_cell({"v1", "v1"}, {v1, v1}); }, "NonRegular");
}

TEST_CASE("attach_cell commuting squares") {
  // Two triangles on {a,b,c} sharing only some edges: gluing a 2-cell whose
  // facets do not close up a coherent boundary must fail.
  Complex cx;
  CellId a = cx.add_vertex("a");
  CellId b = cx.add_vertex("b");
  CellId c = cx.add_vertex("c");
  CellId ab = cx.attach_cell({"a", "b"}, {b, a});
  CellId ab2 = cx.attach_cell({"a", "b"}, {b, a});
  CellId ac = cx.attach_cell({"a", "c"}, {c, a});
  CellId bc = cx.attach_cell({"b", "c"}, {c, b});
  cx.attach_cell({"a", "b", "c"}, {bc, ac, ab});
  expect_valid(cx);
  CHECK(cx.cofaces(ab).size() == 1);
  CHECK(cx.cofaces(ab2).empty());
}

TEST_CASE("from_maximal_simplices") {
  Complex full = from_maximal_simplices({{"a", "b", "c"}});
  CHECK(full.cell_count() == 7);
  CHECK(full.euler_characteristic() == 1);
  CHECK(full.is_simplicial());
  expect_valid(full);

  Complex circle = from_maximal_simplices({{"a", "b"}, {"b", "c"}, {"a", "c"}});
  CHECK(circle.euler_characteristic() == 0);
  CHECK(circle.cell_count() == 6);

  CHECK(is_isomorphic(from_maximal_simplices({{"A1", "A2", "B1"}}),
                      catalog("fig2_left"))
            .has_value());

  expect_error([] { from_maximal_simplices({{}}); }, "EmptyVertexSet");
}

TEST_CASE("star, closed star, link") {
  Complex fig2 = catalog("fig2_left");
  CellId edge = *fig2.face_on(fig2.cells().rbegin()->first, {"A1", "A2"});
  std::vector<CellId> st = fig2.star(edge);
  CHECK(st.size() == 2);  // the edge and the triangle

  Complex cst = fig2.closed_star(edge);
  CHECK(cst.cell_count() == 7);  // closure of {edge, triangle} is everything

  // link of the apex of a cone over the boundary of a triangle
  Complex base = catalog("boundary(2)");
  Complex coned = cone(base, "apex");
  LinkResult link = coned.link(*coned.vertex_cell("apex"));
  CHECK(link.ambient_simplicial);
  CHECK(link.complex.cell_count() == 6);
  CHECK(is_isomorphic(link.complex, base).has_value());
  expect_valid(link.complex);

  // link of v1 in the two-edge circle: two distinct 0-cells, both copies of
  // the far end v2
  Complex circle = catalog("two_edge_circle");
  LinkResult poset_link = circle.link(*circle.vertex_cell("v1"));
  CHECK_FALSE(poset_link.ambient_simplicial);
  CHECK(poset_link.complex.cell_count() == 2);
  CHECK(poset_link.complex.dim() == 0);
  CHECK(poset_link.complex.has_vertex("v2#0"));
  CHECK(poset_link.complex.has_vertex("v2#1"));

  expect_error([&] { (void)circle.link(12345); }, "UnknownCell");
}

TEST_CASE("is_simplicial") {
  CHECK(catalog("simplex(2)").is_simplicial());
  CHECK_FALSE(catalog("two_edge_circle").is_simplicial());
  Complex cycle4 = from_maximal_simplices(
      {{"v1", "v3"}, {"v3", "v2"}, {"v2", "v4"}, {"v4", "v1"}});
  CHECK(cycle4.is_simplicial());
}

TEST_CASE("euler characteristic and components") {
  Complex left = catalog("fig1_left");
  CHECK(left.euler_characteristic() == 1);
  CHECK(left.connected_components().size() == 1);

  Complex right = catalog("fig1_right");
  CHECK(right.euler_characteristic() == 2);
  CHECK(right.connected_components().size() == 2);

  CHECK(catalog("boundary(3)").euler_characteristic() == 2);
  CHECK(catalog("boundary(3)").cell_count() == 14);
}

TEST_CASE("join and cone") {
  Complex pt_a = from_maximal_simplices({{"a"}});
  Complex pt_b = from_maximal_simplices({{"b"}});
  Complex edge = join(pt_a, pt_b);
  CHECK(edge.cell_count() == 3);
  CHECK(edge.dim() == 1);
  expect_valid(edge);

  Complex triangle = cone(edge, "c");
  CHECK(is_isomorphic(triangle, catalog("simplex(2)")).has_value());

  // join of the two-edge circle with a point: the pillow made of two
  // triangles glued along both boundary edges
  Complex pillow = join(catalog("two_edge_circle"), pt_a);
  CHECK(pillow.euler_characteristic() == 1);
  CHECK(pillow.count_of_dim(2) == 2);
  CHECK(pillow.count_of_dim(1) == 4);
  expect_valid(pillow);

  expect_error([&] { (void)join(pt_a, pt_a); }, "LabelClash");
  expect_error([&] { (void)cone(edge, "a"); }, "LabelClash");
}

TEST_CASE("join Euler characteristic product formula") {
  testing::Rng rng(20260810);
  for (int i = 0; i < 20; ++i) {
    Complex a = testing::random_complex(rng);
    Complex b = testing::random_complex(rng);
    // disjoint label spaces
    Complex bprime;
    std::map<CellId, CellId> idmap;
    for (const auto& [id, c] : b.cells()) {
      if (c.dim == 0) {
        idmap[id] = bprime.add_vertex(c.vertices[0] + "'");
      } else {
        std::vector<VertexLabel> tuple;
        for (const VertexLabel& v : c.vertices) tuple.push_back(v + "'");
        std::vector<CellId> facets;
        for (CellId f : c.facets) facets.push_back(idmap.at(f));
        idmap[id] = bprime.attach_cell(tuple, facets);
      }
    }
    Complex j = join(a, bprime);
    long long ca = a.euler_characteristic();
    long long cb = bprime.euler_characteristic();
    CHECK(j.euler_characteristic() == ca + cb - ca * cb);
    expect_valid(j);
  }
}

TEST_CASE("delete_open_cell") {
  Complex left = catalog("fig1_left");
  CellId e = left.cells_of_dim(1).at(0);
  Complex right = delete_open_cell(left, e);
  CHECK(is_isomorphic(right, catalog("fig1_right")).has_value());
  CHECK(right.euler_characteristic() == 2);

  Complex sphere = catalog("boundary(3)");
  CellId tri = sphere.cells_of_dim(2).at(0);
  Complex opened = delete_open_cell(sphere, tri);
  CHECK(opened.euler_characteristic() == 1);
  CHECK(opened.count_of_dim(2) == sphere.count_of_dim(2) - 1);
  expect_valid(opened);

  expect_error([&] { (void)delete_open_cell(sphere, sphere.cells_of_dim(1).at(0)); },
               "HasCofaces");
}

TEST_CASE("is_isomorphic on the figure pairs") {
  auto iso = is_isomorphic(catalog("fig3_left"), catalog("fig3_right"));
  REQUIRE(iso.has_value());
  // the relabeling swaps the diagonal families
  CHECK(iso->at("A1") != "A1");

  CHECK_FALSE(is_isomorphic(catalog("fig2_left"), catalog("fig2_right")));

  Complex a = catalog("fig3_left");
  auto self = is_isomorphic(a, a);
  REQUIRE(self.has_value());
  for (const auto& [from, to] : *self) CHECK(from == to);
}

TEST_CASE("is_isomorphic is reflexive and symmetric on a corpus") {
  testing::Rng rng(7);
  for (int i = 0; i < 10; ++i) {
    Complex a = testing::random_complex(rng);
    Complex b = testing::random_complex(rng);
    CHECK(is_isomorphic(a, a).has_value());
    CHECK(is_isomorphic(b, b).has_value());
    CHECK(is_isomorphic(a, b).has_value() == is_isomorphic(b, a).has_value());
  }
}

TEST_CASE("face interval is order independent") {
  Complex s3 = catalog("simplex(3)");
  for (const auto& [id, c] : s3.cells()) {
    // every pair of deletions commutes; verify() checks this exhaustively,
    // here we also spot-check via face_on against direct facet walks
    if (c.dim < 2) continue;
    for (std::size_t i = 0; i < c.facets.size(); ++i)
      for (std::size_t j = i + 1; j < c.facets.size(); ++j) {
        CellId via_i = s3.cell(c.facets[i]).facets[j - 1];
        CellId via_j = s3.cell(c.facets[j]).facets[i];
        CHECK(via_i == via_j);
      }
  }
  expect_valid(s3);
}

TEST_CASE("random complexes pass the validator") {
  testing::Rng rng(99);
  for (int i = 0; i < 40; ++i) {
    Complex cx = testing::random_complex(rng);
    expect_valid(cx);
    CHECK(cx.cell_count() <= 40);
    CHECK(cx.dim() <= 3);
  }
}
