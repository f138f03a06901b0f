// Process-level tests of the dualcx executable: pipelines, exit codes, and
// the machine-readable error surface.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <unistd.h>

#include "doctest.h"
#include "dualcx/builders.hpp"
#include "dualcx/json_io.hpp"

#ifndef DUALCX_CLI_PATH
#error "DUALCX_CLI_PATH must point at the built executable"
#endif

namespace {

namespace fs = std::filesystem;
using namespace dualcx;

struct Sandbox {
  fs::path dir;
  Sandbox() {
    dir = fs::temp_directory_path() /
          fs::path("dualcx_cli_" + std::to_string(::getpid()));
    fs::create_directories(dir);
  }
  ~Sandbox() {
    std::error_code ec;
    fs::remove_all(dir, ec);
  }
  fs::path file(const std::string& name) const { return dir / name; }
  void write(const std::string& name, const std::string& text) const {
    std::ofstream out(file(name));
    out << text;
  }
  std::string read(const std::string& name) const {
    std::ifstream in(file(name));
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
  }
};

int run(const Sandbox& box, const std::string& pipeline) {
  std::string cmd = "cd " + box.dir.string() + " && { " + pipeline +
                    " ; } > stdout.txt 2> stderr.txt";
  int status = std::system(cmd.c_str());
  REQUIRE(status != -1);
  return WEXITSTATUS(status);
}

const std::string cli = DUALCX_CLI_PATH;

}  // namespace

TEST_CASE("the triangle-to-path pipeline") {
  Sandbox box;
  Complex fig2 = catalog("fig2_left");
  CellId diagonal = 0;
  for (const auto& [id, c] : fig2.cells())
    if (c.vertices == std::vector<VertexLabel>{"A1", "A2"}) diagonal = id;
  box.write("instr.json",
            print_instruction(MmpInstruction{"B1", {diagonal}}));
  box.write("fig2_right.json", print_complex(catalog("fig2_right")));

  int rc = run(box, cli + " catalog fig2_left | " + cli +
                        " collapse --mmp instr.json - | " + cli +
                        " iso - fig2_right.json");
  CHECK(rc == 0);
  CHECK(box.read("stdout.txt").find("\"isomorphic\": true") !=
        std::string::npos);
}

TEST_CASE("catalog documents survive a CLI round trip byte for byte") {
  Sandbox box;
  for (const std::string& name : {"fig3_left", "two_edge_circle", "rp2"}) {
    CHECK(run(box, cli + " catalog " + name + " > a.json") == 0);
    CHECK(run(box, cli + " blowup --trivial a.json > b.json") == 0);
    CHECK(run(box, cli + " verify a.json > /dev/null") == 0);
    CHECK(box.read("a.json") == box.read("b.json"));
    CHECK(box.read("a.json") == print_complex(catalog(name)));
  }
}

TEST_CASE("build and homology subcommands") {
  Sandbox box;
  box.write("strata.json", print_strata(strata_of(catalog("fig3_left"))));
  CHECK(run(box, cli + " build strata.json | " + cli +
                     " homology --over z -") == 0);
  std::string out = box.read("stdout.txt");
  CHECK(out.find("\"over\": \"z\"") != std::string::npos);
  CHECK(out.find("\"betti\": [\n    1,\n    0,\n    0\n  ]") !=
        std::string::npos);

  CHECK(run(box, cli + " catalog rp2 | " + cli + " homology --over q -") == 0);
  CHECK(box.read("stdout.txt").find("\"over\": \"q\"") != std::string::npos);
}

TEST_CASE("greedy collapse of the dunce hat is the identity") {
  Sandbox box;
  CHECK(run(box, cli + " catalog dunce_hat | " + cli +
                     " collapse --greedy --sequence-out seq.json -") == 0);
  CHECK(box.read("stdout.txt") == print_complex(catalog("dunce_hat")));
  CHECK(parse_sequence(box.read("seq.json")).pairs.empty());
}

TEST_CASE("search verdicts and budgets") {
  Sandbox box;
  CHECK(run(box, cli + " catalog simplex(3) | " + cli +
                     " collapse --search --verdict-out v.json -") == 0);
  CHECK(box.read("v.json").find("\"verdict\": \"Collapsible\"") !=
        std::string::npos);

  CHECK(run(box, cli + " catalog boundary(3) | " + cli +
                     " collapse --search --verdict-out v.json -") == 0);
  CHECK(box.read("v.json").find("\"verdict\": \"NoFreePair\"") !=
        std::string::npos);

  CHECK(run(box, cli + " catalog simplex(4) > fig.json") == 0);
  CHECK(run(box, "DUALCX_BUDGET=2 " + cli +
                     " collapse --search --verdict-out v.json fig.json") == 0);
  CHECK(box.read("v.json").find("\"verdict\": \"Inconclusive\"") !=
        std::string::npos);
}

TEST_CASE("exit codes and machine-readable errors") {
  Sandbox box;
  // domain error: collapsing a non-free pair surfaces its spec name
  box.write("seq.json",
            R"({"format_version":1,"pairs":[{"coface":"13","face":"9"}]})");
  int rc = run(box, cli + " catalog boundary(3) | " + cli +
                        " collapse --replay seq.json -");
  CHECK(rc == 1);
  CHECK(box.read("stderr.txt").find("NotFreeAtStep") != std::string::npos);
  CHECK(box.read("stderr.txt").find("\"step\": 0") != std::string::npos);

  // domain error: bad instruction
  box.write("instr.json", R"({"format_version":1,"v0":"A1","contracted":["4"]})");
  rc = run(box, cli + " catalog fig2_left | " + cli +
                    " collapse --mmp instr.json -");
  CHECK(rc == 1);
  CHECK(box.read("stderr.txt").find("\"error\"") != std::string::npos);

  // IO/usage errors
  CHECK(run(box, "echo not-json | " + cli + " verify -") == 2);
  CHECK(run(box, cli + " catalog no_such_thing") == 1);
  CHECK(run(box, cli + " subdivide --stellar 1 --barycentric < /dev/null") == 2);

  // invalid complex: verify reports and exits 1
  box.write("bad.json", R"({
    "format_version": 1,
    "vertices": ["a", "b"],
    "cells": [{"id": "e", "vertices": ["a", "b"], "facets": ["a", "a"]}]
  })");
  rc = run(box, cli + " verify bad.json");
  CHECK(rc == 1);
  CHECK(box.read("stdout.txt").find("\"valid\": false") != std::string::npos);

  // not isomorphic exits 1
  box.write("l.json", print_complex(catalog("fig2_left")));
  box.write("r.json", print_complex(catalog("fig2_right")));
  CHECK(run(box, cli + " iso l.json r.json") == 1);
}

TEST_CASE("stellar subdivision and cone attachment through the CLI") {
  Sandbox box;
  Complex fig3 = catalog("fig3_left");
  CellId diagonal = 0;
  for (const auto& [id, c] : fig3.cells())
    if (c.vertices == std::vector<VertexLabel>{"A1", "A2"}) diagonal = id;
  CHECK(run(box, cli + " catalog fig3_left | " + cli + " subdivide --stellar " +
                     std::to_string(diagonal) + " --label p - | " + cli +
                     " verify -") == 0);

  // cone attachment: glue over a vertex of an edge, then collapse back
  box.write("edge.json", print_complex(from_maximal_simplices({{"v", "w"}})));
  Complex edge = parse_complex(box.read("edge.json"));
  box.write("attach.json", std::string(R"({"format_version":1,"cell":")") +
                               std::to_string(*edge.vertex_cell("v")) +
                               R"("})");
  CHECK(run(box, cli + " blowup --cone attach.json --record rec.json edge.json"
                       " > glued.json") == 0);
  CHECK(run(box, cli + " collapse --replay rec.json glued.json > back.json") ==
        0);
  CHECK(box.read("back.json") == box.read("edge.json"));
}
