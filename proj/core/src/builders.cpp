#include "dualcx/builders.hpp"

#include <algorithm>
#include <set>

#include "dualcx/json_io.hpp"

namespace dualcx {

namespace {

std::string set_str(const std::vector<DivisorId>& J) {
  std::string out = "{";
  for (std::size_t i = 0; i < J.size(); ++i) {
    if (i) out += ",";
    out += J[i];
  }
  return out + "}";
}

}  // namespace

Complex dual_complex(const StrataDescriptor& d) {
  std::set<DivisorId> divisors;
  for (const DivisorId& v : d.divisors)
    if (!divisors.insert(v).second)
      fail("DuplicateLabel", "divisor " + v + " listed twice");

  // Work on a normalized copy: index sets sorted.
  std::vector<Stratum> strata = d.strata;
  for (Stratum& s : strata) {
    if (s.J.empty())
      fail("BadStratum", "stratum " + s.id + " has empty index set");
    std::sort(s.J.begin(), s.J.end());
    if (std::adjacent_find(s.J.begin(), s.J.end()) != s.J.end())
      fail("BadStratum", "stratum " + s.id + " lists a divisor twice");
  }

  std::map<std::string, const Stratum*> by_id;
  std::set<std::pair<std::vector<DivisorId>, std::string>> seen;
  std::set<DivisorId> used;
  std::set<std::vector<DivisorId>> singleton_js;
  for (const Stratum& s : strata) {
    if (!by_id.emplace(s.id, &s).second)
      fail("DuplicateStratum", "stratum id " + s.id + " repeated");
    if (!seen.insert({s.J, s.tag}).second)
      fail("DuplicateStratum",
           "stratum " + s.id + " repeats (J, tag) = (" + set_str(s.J) + ", " +
               s.tag + ")");
    for (const DivisorId& j : s.J) {
      if (!divisors.count(j))
        fail("DanglingDivisor",
             "stratum " + s.id + " uses undeclared divisor " + j);
      used.insert(j);
    }
    if (s.J.size() == 1) singleton_js.insert(s.J);
  }
  for (const DivisorId& v : d.divisors)
    if (!used.count(v))
      fail("DanglingDivisor", "divisor " + v + " occurs in no stratum");
  for (const Stratum& s : strata)
    for (const DivisorId& j : s.J)
      if (!singleton_js.count({j}))
        fail("MissingParent", "stratum " + s.id + " needs the singleton " +
                                  "stratum for divisor " + j);

  auto parent_of = [&](const Stratum& s, const DivisorId& j) -> const Stratum& {
    auto it = d.parent.find({s.id, j});
    if (it == d.parent.end())
      fail("MissingParent",
           "stratum " + s.id + " has no parent for dropping " + j);
    auto pit = by_id.find(it->second);
    if (pit == by_id.end())
      fail("MissingParent", "stratum " + s.id + " names unknown parent " +
                                it->second);
    std::vector<DivisorId> want;
    for (const DivisorId& k : s.J)
      if (k != j) want.push_back(k);
    if (pit->second->J != want)
      fail("MissingParent", "parent of " + s.id + " dropping " + j +
                                " spans " + set_str(pit->second->J) +
                                ", expected " + set_str(want));
    return *pit->second;
  };

  for (const Stratum& s : strata) {
    if (s.J.size() < 3) continue;
    for (const DivisorId& j : s.J)
      for (const DivisorId& k : s.J) {
        if (j >= k) continue;
        const Stratum& via_j = parent_of(parent_of(s, j), k);
        const Stratum& via_k = parent_of(parent_of(s, k), j);
        if (via_j.id != via_k.id)
          fail("NonCommutingParents",
               "stratum " + s.id + ": dropping " + j + "," + k +
                   " reaches " + via_j.id + " vs " + via_k.id);
      }
  }

  // Attach in order of |J|, preserving the input order within a level.
  std::vector<const Stratum*> order;
  for (const Stratum& s : strata) order.push_back(&s);
  std::stable_sort(order.begin(), order.end(),
                   [](const Stratum* a, const Stratum* b) {
                     return a->J.size() < b->J.size();
                   });
  Complex cx;
  std::map<std::string, CellId> cell_of;
  for (const Stratum* s : order) {
    if (s->J.size() == 1) {
      cell_of[s->id] = cx.add_vertex(s->J[0]);
    } else {
      std::vector<CellId> facets;
      for (const DivisorId& j : s->J)
        facets.push_back(cell_of.at(parent_of(*s, j).id));
      cell_of[s->id] = cx.attach_cell(s->J, facets);
    }
  }
  return cx;
}

StrataDescriptor strata_of(const Complex& cx) {
  StrataDescriptor d;
  for (const auto& [v, id] : cx.vertex_cells()) d.divisors.push_back(v);

  std::map<std::vector<VertexLabel>, int> tag_counter;
  std::map<CellId, std::string> stratum_of;
  for (const auto& [id, c] : cx.cells()) {
    Stratum s;
    s.id = "s" + std::to_string(id);
    s.J = c.vertices;
    s.tag = std::to_string(tag_counter[c.vertices]++);
    stratum_of[id] = s.id;
    d.strata.push_back(std::move(s));
  }
  for (const auto& [id, c] : cx.cells())
    for (std::size_t i = 0; i < c.facets.size(); ++i)
      d.parent[{stratum_of.at(id), c.vertices[i]}] = stratum_of.at(c.facets[i]);
  return d;
}

namespace {

Complex two_edge_circle() {
  Complex cx;
  CellId v1 = cx.add_vertex("v1");
  CellId v2 = cx.add_vertex("v2");
  cx.attach_cell({"v1", "v2"}, {v2, v1});
  cx.attach_cell({"v1", "v2"}, {v2, v1});
  return cx;
}

std::vector<VertexLabel> simplex_labels(int n) {
  std::vector<VertexLabel> labels;
  for (int i = 0; i <= n; ++i) labels.push_back("v" + std::to_string(i));
  return labels;
}

Complex simplex(int n) {
  return from_maximal_simplices({simplex_labels(n)});
}

Complex boundary(int n) {
  std::vector<VertexLabel> all = simplex_labels(n);
  std::vector<std::vector<VertexLabel>> facets;
  for (int i = 0; i <= n; ++i) {
    std::vector<VertexLabel> f = all;
    f.erase(f.begin() + i);
    facets.push_back(f);
  }
  return from_maximal_simplices(facets);
}

bool parse_arg(const std::string& name, const std::string& head, int& n) {
  if (name.size() < head.size() + 3) return false;
  if (name.compare(0, head.size(), head) != 0) return false;
  if (name[head.size()] != '(' || name.back() != ')') return false;
  std::string digits = name.substr(head.size() + 1,
                                   name.size() - head.size() - 2);
  if (digits.empty()) return false;
  for (char c : digits)
    if (c < '0' || c > '9') return false;
  n = std::stoi(digits);
  return true;
}

}  // namespace

Complex catalog(const std::string& name) {
  int n = 0;
  if (parse_arg(name, "simplex", n)) {
    if (n > 8) fail("UnknownName", "simplex(n) supported for n <= 8");
    return simplex(n);
  }
  if (parse_arg(name, "boundary", n)) {
    if (n < 1 || n > 8)
      fail("UnknownName", "boundary(n) supported for 1 <= n <= 8");
    return boundary(n);
  }
  if (name == "two_edge_circle") return two_edge_circle();
  if (name == "fig1_left") return from_maximal_simplices({{"A1", "A2"}});
  if (name == "fig1_right") return from_maximal_simplices({{"A1"}, {"A2"}});
  if (name == "fig2_left") return from_maximal_simplices({{"A1", "A2", "B1"}});
  if (name == "fig2_right")
    return from_maximal_simplices({{"A1", "B1"}, {"A2", "B1"}});
  if (name == "fig3_left")
    return from_maximal_simplices({{"A1", "A2", "B1"}, {"A1", "A2", "B2"}});
  if (name == "fig3_right")
    return from_maximal_simplices({{"A1", "B1", "B2"}, {"A2", "B1", "B2"}});
  if (name == "dunce_hat") return parse_complex(detail::kDunceHatJson);
  if (name == "rp2") return parse_complex(detail::kRp2Json);
  fail("UnknownName", "no catalog entry named " + name);
}

std::vector<std::string> catalog_names() {
  return {"simplex(n)",  "boundary(n)", "two_edge_circle",
          "fig1_left",   "fig1_right",  "fig2_left",
          "fig2_right",  "fig3_left",   "fig3_right",
          "dunce_hat",   "rp2"};
}

}  // namespace dualcx
