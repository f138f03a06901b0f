#include <functional>

#include "doctest.h"
#include "dualcx/builders.hpp"
#include "dualcx/json_io.hpp"
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

const std::vector<std::string> kCatalog = {
    "simplex(0)", "simplex(2)",  "simplex(3)",  "boundary(2)",
    "boundary(3)", "two_edge_circle", "fig1_left",  "fig1_right",
    "fig2_left",  "fig2_right", "fig3_left",   "fig3_right",
    "dunce_hat",  "rp2"};

}  // namespace

TEST_CASE("canonical print is stable under parse") {
  for (const std::string& name : kCatalog) {
    std::string once = print_complex(catalog(name));
    Complex parsed = parse_complex(once);
    CHECK(verify(parsed).empty());
    CHECK(print_complex(parsed) == once);
  }
}

TEST_CASE("canonical print round trips on a random corpus") {
  testing::Rng rng(505);
  for (int i = 0; i < 20; ++i) {
    Complex cx = testing::random_complex(rng);
    std::string once = print_complex(cx);
    CHECK(print_complex(parse_complex(once)) == once);
  }
}

TEST_CASE("maximal_simplices shorthand") {
  Complex cx = parse_complex(
      R"({"format_version":1,"maximal_simplices":[["b","a"],["b","c"]]})");
  CHECK(cx.cells() ==
        from_maximal_simplices({{"a", "b"}, {"b", "c"}}).cells());
}

TEST_CASE("elided 0-cells and label facet references") {
  Complex cx = parse_complex(R"({
    "format_version": 1,
    "vertices": ["a", "b"],
    "cells": [{"id": "e", "vertices": ["a", "b"], "facets": ["b", "a"]}]
  })");
  CHECK(cx.cell_count() == 3);
  CHECK(cx.count_of_dim(1) == 1);
}

TEST_CASE("unsorted document tuples are realigned") {
  Complex cx = parse_complex(R"({
    "format_version": 1,
    "vertices": ["a", "b"],
    "cells": [{"id": "e", "vertices": ["b", "a"], "facets": ["a", "b"]}]
  })");
  const Cell& edge = cx.cell(*cx.face_on(
      cx.cells_of_dim(1).front(), {"a", "b"}));
  CHECK(edge.vertices == std::vector<VertexLabel>{"a", "b"});
}

TEST_CASE("document rejection") {
  expect_error([] { (void)parse_complex("not json"); }, "BadDocument");
  expect_error([] { (void)parse_complex(R"({"vertices":[]})"); }, "BadDocument");
  expect_error(
      [] { (void)parse_complex(R"({"format_version":2,"vertices":[]})"); },
      "UnknownFormatVersion");
  expect_error(
      [] {
        (void)parse_complex(R"({
          "format_version": 1,
          "vertices": ["a", "b"],
          "cells": [{"id": "e", "vertices": ["a", "b"], "facets": ["a", "a"]}]
        })");
      },
      "InvalidComplex");
  // the same document parses leniently for the validator command
  Complex bad = parse_complex(R"({
    "format_version": 1,
    "vertices": ["a", "b"],
    "cells": [{"id": "e", "vertices": ["a", "b"], "facets": ["a", "a"]}]
  })", /*validate=*/false);
  CHECK_FALSE(verify(bad).empty());
}

TEST_CASE("strata documents") {
  Complex cx = catalog("fig3_left");
  StrataDescriptor d = strata_of(cx);
  std::string doc = print_strata(d);
  StrataDescriptor back = parse_strata(doc);
  CHECK(is_isomorphic(dual_complex(back), cx).has_value());
  CHECK(print_strata(back) == doc);
}

TEST_CASE("sequence and instruction documents") {
  CollapseSequence seq{{FreePair{6, 3}, FreePair{5, 2}}};
  CHECK(parse_sequence(print_sequence(seq)).pairs == seq.pairs);

  MmpInstruction instr{"B1", {3, 4}};
  MmpInstruction back = parse_instruction(print_instruction(instr));
  CHECK(back.v0 == instr.v0);
  CHECK(back.contracted == instr.contracted);

  auto list = parse_instructions(
      R"({"format_version":1,"instructions":[{"v0":"a"},{"v0":"b","contracted":["7"]}]})");
  REQUIRE(list.size() == 2);
  CHECK(list[1].contracted == std::set<CellId>{7});
}

TEST_CASE("action and attachment documents") {
  GroupAction action = parse_action(
      R"({"format_version":1,"generators":[{"a1":"a2","a2":"a1"}],"max_order":64})");
  CHECK(action.generators.size() == 1);
  CHECK(action.max_order == 64);

  AttachmentRecord rec;
  rec.apex = "e0";
  rec.apex_cell = 9;
  rec.anchor = "a";
  rec.pairs.pairs = {FreePair{12, 10}};
  AttachmentRecord back = parse_attachment_record(print_attachment_record(rec));
  CHECK(back.apex == rec.apex);
  CHECK(back.apex_cell == rec.apex_cell);
  CHECK(back.anchor == rec.anchor);
  CHECK(back.pairs.pairs == rec.pairs.pairs);

  // a record is also accepted wherever a sequence is expected
  CHECK(parse_sequence(print_attachment_record(rec)).pairs == rec.pairs.pairs);
}
