#include "dualcx/complex.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace dualcx {

namespace {

std::string tuple_str(const std::vector<VertexLabel>& vs) {
  std::string out = "{";
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i) out += ",";
    out += vs[i];
  }
  return out + "}";
}

std::vector<VertexLabel> tuple_without(const std::vector<VertexLabel>& vs,
                                       std::size_t i) {
  std::vector<VertexLabel> out;
  out.reserve(vs.size() - 1);
  for (std::size_t k = 0; k < vs.size(); ++k)
    if (k != i) out.push_back(vs[k]);
  return out;
}

}  // namespace

std::vector<VertexLabel> sorted_tuple(std::vector<VertexLabel> vertices) {
  std::sort(vertices.begin(), vertices.end());
  if (std::adjacent_find(vertices.begin(), vertices.end()) != vertices.end())
    fail("NonRegular", "vertex tuple " + tuple_str(vertices) +
                           " contains a repeated label");
  return vertices;
}

Complex Complex::from_parts(
    const std::vector<std::pair<CellId, Cell>>& parts) {
  Complex cx;
  for (const auto& [id, cell] : parts) {
    if (cx.cells_.count(id))
      fail("BadDocument", "cell id " + std::to_string(id) + " repeated");
    cx.cells_.emplace(id, cell);
    cx.next_id_ = std::max(cx.next_id_, id + 1);
  }
  for (const auto& [id, cell] : cx.cells_) {
    if (cell.dim < 0 || cell.vertices.size() != std::size_t(cell.dim) + 1)
      fail("BadDocument", "cell " + std::to_string(id) + " has dim " +
                              std::to_string(cell.dim) + " but " +
                              std::to_string(cell.vertices.size()) +
                              " vertices");
    if (cell.dim == 0) {
      auto [it, fresh] = cx.vertex_cells_.emplace(cell.vertices[0], id);
      if (!fresh)
        fail("BadDocument", "two 0-cells labelled " + cell.vertices[0]);
      if (!cell.facets.empty())
        fail("BadDocument", "0-cell with facets");
    } else {
      if (cell.facets.size() != cell.vertices.size())
        fail("BadDocument", "cell " + std::to_string(id) +
                                " needs one facet per vertex");
      for (CellId f : cell.facets)
        if (!cx.cells_.count(f))
          fail("BadDocument", "cell " + std::to_string(id) +
                                  " references missing facet " +
                                  std::to_string(f));
    }
  }
  return cx;
}

CellId Complex::add_vertex(const VertexLabel& v) {
  if (vertex_cells_.count(v))
    fail("DuplicateLabel", "vertex " + v + " already present");
  CellId id = next_id_++;
  cells_.emplace(id, Cell{0, {v}, {}});
  vertex_cells_.emplace(v, id);
  return id;
}

CellId Complex::attach_cell(std::vector<VertexLabel> vertices,
                            std::vector<CellId> facets) {
  vertices = sorted_tuple(std::move(vertices));
  if (vertices.size() < 2)
    fail("NonRegular", "attach_cell needs dimension >= 1; use add_vertex");
  if (facets.size() != vertices.size())
    fail("FacetMismatch",
         "expected " + std::to_string(vertices.size()) + " facets, got " +
             std::to_string(facets.size()));
  // Duplicate facets first: that is the regularity violation.
  for (std::size_t i = 0; i < facets.size(); ++i)
    for (std::size_t j = i + 1; j < facets.size(); ++j)
      if (facets[i] == facets[j])
        fail("NonRegular", "facets " + std::to_string(i) + " and " +
                               std::to_string(j) + " coincide (cell " +
                               std::to_string(facets[i]) + ")");
  for (std::size_t i = 0; i < facets.size(); ++i) {
    const Cell& f = cell(facets[i]);
    if (f.vertices != tuple_without(vertices, i))
      fail("FacetMismatch", "facet " + std::to_string(i) + " spans " +
                                tuple_str(f.vertices) + ", expected " +
                                tuple_str(tuple_without(vertices, i)));
  }
  // Commuting squares: omitting vertex i then j must equal j then i.
  for (std::size_t i = 0; i < facets.size(); ++i)
    for (std::size_t j = i + 1; j < facets.size(); ++j) {
      if (vertices.size() == 2) break;
      CellId via_i = cell(facets[i]).facets[j - 1];
      CellId via_j = cell(facets[j]).facets[i];
      if (via_i != via_j)
        fail("IncoherentBoundary",
             "facet maps disagree on omitting vertices " + std::to_string(i) +
                 "," + std::to_string(j));
    }
  CellId id = next_id_++;
  cells_.emplace(id, Cell{int(vertices.size()) - 1, std::move(vertices),
                          std::move(facets)});
  return id;
}

void Complex::remove_cell(CellId c) {
  const Cell& cc = cell(c);
  if (cc.dim == 0) vertex_cells_.erase(cc.vertices[0]);
  cells_.erase(c);
}

const Cell& Complex::cell(CellId c) const {
  auto it = cells_.find(c);
  if (it == cells_.end())
    fail("UnknownCell", "no cell with id " + std::to_string(c));
  return it->second;
}

int Complex::dim() const {
  int d = -1;
  for (const auto& [id, c] : cells_) d = std::max(d, c.dim);
  return d;
}

std::vector<CellId> Complex::cells_of_dim(int d) const {
  std::vector<CellId> out;
  for (const auto& [id, c] : cells_)
    if (c.dim == d) out.push_back(id);
  return out;
}

std::size_t Complex::count_of_dim(int d) const {
  std::size_t n = 0;
  for (const auto& [id, c] : cells_)
    if (c.dim == d) ++n;
  return n;
}

std::optional<CellId> Complex::vertex_cell(const VertexLabel& v) const {
  auto it = vertex_cells_.find(v);
  if (it == vertex_cells_.end()) return std::nullopt;
  return it->second;
}

std::optional<CellId> Complex::face_on(
    CellId c, const std::vector<VertexLabel>& subset) const {
  CellId cur = c;
  // Repeatedly delete the first tuple vertex not in `subset`; the boolean
  // face interval makes the result independent of the order.
  for (;;) {
    const Cell& cc = cell(cur);
    if (!std::includes(cc.vertices.begin(), cc.vertices.end(), subset.begin(),
                       subset.end()))
      return std::nullopt;
    if (cc.vertices.size() == subset.size()) return cur;
    for (std::size_t i = 0; i < cc.vertices.size(); ++i) {
      if (!std::binary_search(subset.begin(), subset.end(), cc.vertices[i])) {
        cur = cc.facets[i];
        break;
      }
    }
  }
}

bool Complex::is_face(CellId face, CellId of) const {
  const Cell& fc = cell(face);
  auto got = face_on(of, fc.vertices);
  return got && *got == face;
}

std::vector<CellId> Complex::cofaces(CellId c) const {
  std::vector<CellId> out;
  for (const auto& [id, cc] : cells_)
    if (id != c && is_face(c, id)) out.push_back(id);
  return out;
}

std::vector<CellId> Complex::star(CellId c) const {
  std::vector<CellId> out;
  for (const auto& [id, cc] : cells_)
    if (is_face(c, id)) out.push_back(id);
  return out;
}

Complex Complex::subcomplex(const std::vector<CellId>& ids) const {
  Complex out;
  std::set<CellId> keep(ids.begin(), ids.end());
  for (CellId id : keep) {
    const Cell& c = cell(id);
    out.cells_.emplace(id, c);
    if (c.dim == 0) out.vertex_cells_.emplace(c.vertices[0], id);
  }
  out.next_id_ = next_id_;
  return out;
}

Complex Complex::closed_star(CellId c) const {
  std::set<CellId> keep;
  for (CellId s : star(c)) {
    keep.insert(s);
    // closure: walk all iterated facets
    std::vector<CellId> stack{s};
    while (!stack.empty()) {
      CellId top = stack.back();
      stack.pop_back();
      for (CellId f : cell(top).facets)
        if (keep.insert(f).second) stack.push_back(f);
    }
  }
  return subcomplex(std::vector<CellId>(keep.begin(), keep.end()));
}

LinkResult Complex::link(CellId v) const {
  const Cell& vc = cell(v);
  if (vc.dim != 0)
    fail("UnknownCell",
         "link is defined at a 0-cell, got dim " + std::to_string(vc.dim));
  const VertexLabel& vlabel = vc.vertices[0];

  std::vector<CellId> cof = cofaces(v);

  // Link vertices come from the edges at v; label them after the far end,
  // disambiguating parallel edges with a #k suffix.
  std::map<VertexLabel, std::vector<CellId>> by_far_end;
  for (CellId e : cof) {
    const Cell& ec = cell(e);
    if (ec.dim != 1) continue;
    VertexLabel far = ec.vertices[0] == vlabel ? ec.vertices[1] : ec.vertices[0];
    by_far_end[far].push_back(e);
  }
  std::map<CellId, VertexLabel> edge_label;
  for (const auto& [far, edges] : by_far_end) {
    if (edges.size() == 1) {
      edge_label[edges[0]] = far;
    } else {
      for (std::size_t k = 0; k < edges.size(); ++k)
        edge_label[edges[k]] = far + "#" + std::to_string(k);
    }
  }

  LinkResult out;
  out.ambient_simplicial = is_simplicial();
  std::map<CellId, CellId> image;  // ambient coface -> link cell
  std::sort(cof.begin(), cof.end(), [&](CellId a, CellId b) {
    const Cell& ca = cell(a);
    const Cell& cb = cell(b);
    return std::tie(ca.dim, a) < std::tie(cb.dim, b);
  });
  for (CellId cid : cof) {
    const Cell& cc = cell(cid);
    if (cc.dim == 1) {
      image[cid] = out.complex.add_vertex(edge_label.at(cid));
      continue;
    }
    // Link cell for a coface of dim d: spanned by the labels of the edges
    // (v,u) under this coface, with facet maps inherited from the ambient
    // facet maps that keep v.
    std::vector<std::pair<VertexLabel, std::size_t>> members;  // label, pos
    for (std::size_t i = 0; i < cc.vertices.size(); ++i) {
      if (cc.vertices[i] == vlabel) continue;
      CellId edge = *face_on(cid, sorted_tuple({vlabel, cc.vertices[i]}));
      members.push_back({edge_label.at(edge), i});
    }
    std::sort(members.begin(), members.end());
    std::vector<VertexLabel> tuple;
    std::vector<CellId> facets;
    for (const auto& [label, pos] : members) {
      tuple.push_back(label);
      facets.push_back(image.at(cc.facets[pos]));
    }
    image[cid] = out.complex.attach_cell(std::move(tuple), std::move(facets));
  }
  return out;
}

bool Complex::is_simplicial() const {
  std::set<std::vector<VertexLabel>> seen;
  for (const auto& [id, c] : cells_)
    if (!seen.insert(c.vertices).second) return false;
  return true;
}

long long Complex::euler_characteristic() const {
  long long chi = 0;
  for (const auto& [id, c] : cells_) chi += (c.dim % 2 == 0) ? 1 : -1;
  return chi;
}

std::vector<std::vector<VertexLabel>> Complex::connected_components() const {
  std::map<VertexLabel, VertexLabel> parent;
  for (const auto& [v, id] : vertex_cells_) parent[v] = v;
  auto find = [&](VertexLabel v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (const auto& [id, c] : cells_)
    for (std::size_t i = 1; i < c.vertices.size(); ++i) {
      VertexLabel a = find(c.vertices[0]);
      VertexLabel b = find(c.vertices[i]);
      if (a != b) parent[b] = a;
    }
  std::map<VertexLabel, std::vector<VertexLabel>> classes;
  for (const auto& [v, id] : vertex_cells_) classes[find(v)].push_back(v);
  std::vector<std::vector<VertexLabel>> out;
  for (auto& [root, members] : classes) {
    std::sort(members.begin(), members.end());
    out.push_back(std::move(members));
  }
  return out;
}

// --- free operations --------------------------------------------------------

Complex from_maximal_simplices(
    const std::vector<std::vector<VertexLabel>>& maximal) {
  Complex cx;
  std::set<std::vector<VertexLabel>> subsets;
  for (const auto& m : maximal) {
    if (m.empty()) fail("EmptyVertexSet", "maximal simplex with no vertices");
    std::vector<VertexLabel> t = sorted_tuple(m);
    // all non-empty subsets
    std::size_t n = t.size();
    for (std::size_t mask = 1; mask < (std::size_t(1) << n); ++mask) {
      std::vector<VertexLabel> sub;
      for (std::size_t i = 0; i < n; ++i)
        if (mask & (std::size_t(1) << i)) sub.push_back(t[i]);
      subsets.insert(sub);
    }
  }
  std::vector<std::vector<VertexLabel>> ordered(subsets.begin(), subsets.end());
  std::stable_sort(ordered.begin(), ordered.end(),
                   [](const auto& a, const auto& b) {
                     return a.size() < b.size();
                   });
  std::map<std::vector<VertexLabel>, CellId> ids;
  for (const auto& t : ordered) {
    if (t.size() == 1) {
      ids[t] = cx.add_vertex(t[0]);
    } else {
      std::vector<CellId> facets;
      for (std::size_t i = 0; i < t.size(); ++i) {
        std::vector<VertexLabel> sub = t;
        sub.erase(sub.begin() + i);
        facets.push_back(ids.at(sub));
      }
      ids[t] = cx.attach_cell(t, facets);
    }
  }
  return cx;
}

Complex delete_open_cell(const Complex& cx, CellId c) {
  if (!cx.cofaces(c).empty())
    fail("HasCofaces", "cell " + std::to_string(c) + " is not maximal");
  Complex out = cx;
  out.remove_cell(c);
  return out;
}

Complex join(const Complex& a, const Complex& b) {
  for (const auto& [v, id] : a.vertex_cells())
    if (b.has_vertex(v)) fail("LabelClash", "label " + v + " on both sides");

  Complex out;
  std::map<CellId, CellId> ida, idb;
  std::map<std::pair<CellId, CellId>, CellId> idp;

  auto copy_side = [&out](const Complex& src, std::map<CellId, CellId>& idmap) {
    std::vector<CellId> order;
    for (const auto& [id, c] : src.cells()) order.push_back(id);
    std::sort(order.begin(), order.end(), [&](CellId x, CellId y) {
      return std::tie(src.cell(x).dim, x) < std::tie(src.cell(y).dim, y);
    });
    for (CellId id : order) {
      const Cell& c = src.cell(id);
      if (c.dim == 0) {
        idmap[id] = out.add_vertex(c.vertices[0]);
      } else {
        std::vector<CellId> facets;
        for (CellId f : c.facets) facets.push_back(idmap.at(f));
        idmap[id] = out.attach_cell(c.vertices, facets);
      }
    }
  };
  copy_side(a, ida);
  copy_side(b, idb);

  // Pair cells a*b, by total dimension then id.
  std::vector<std::pair<CellId, CellId>> pairs;
  for (const auto& [x, cx] : a.cells())
    for (const auto& [y, cy] : b.cells()) pairs.push_back({x, y});
  std::sort(pairs.begin(), pairs.end(), [&](const auto& p, const auto& q) {
    int dp = a.cell(p.first).dim + b.cell(p.second).dim;
    int dq = a.cell(q.first).dim + b.cell(q.second).dim;
    return std::tie(dp, p.first, p.second) < std::tie(dq, q.first, q.second);
  });
  for (const auto& [x, y] : pairs) {
    const Cell& cx = a.cell(x);
    const Cell& cy = b.cell(y);
    std::vector<VertexLabel> tuple = cx.vertices;
    tuple.insert(tuple.end(), cy.vertices.begin(), cy.vertices.end());
    std::sort(tuple.begin(), tuple.end());
    std::vector<CellId> facets;
    for (const VertexLabel& v : tuple) {
      auto pos_a = std::find(cx.vertices.begin(), cx.vertices.end(), v);
      if (pos_a != cx.vertices.end()) {
        std::size_t i = pos_a - cx.vertices.begin();
        facets.push_back(cx.dim == 0 ? idb.at(y)
                                     : idp.at({cx.facets[i], y}));
      } else {
        auto pos_b = std::find(cy.vertices.begin(), cy.vertices.end(), v);
        std::size_t i = pos_b - cy.vertices.begin();
        facets.push_back(cy.dim == 0 ? ida.at(x)
                                     : idp.at({x, cy.facets[i]}));
      }
    }
    idp[{x, y}] = out.attach_cell(tuple, facets);
  }
  return out;
}

Complex cone(const Complex& a, const VertexLabel& apex) {
  Complex pt;
  pt.add_vertex(apex);
  return join(a, pt);
}

namespace {

// Degree profile of a vertex: number of cofaces of the 0-cell per dimension.
std::map<int, std::size_t> vertex_profile(const Complex& cx, CellId v) {
  std::map<int, std::size_t> prof;
  for (CellId c : cx.cofaces(v)) prof[cx.cell(c).dim]++;
  return prof;
}

struct IsoSearch {
  const Complex& a;
  const Complex& b;
  std::map<VertexLabel, VertexLabel> vmap;
  std::map<CellId, CellId> cmap;
  std::set<CellId> used_b;

  bool match_cells(const std::vector<CellId>& order, std::size_t k) {
    if (k == order.size()) return true;
    CellId ca = order[k];
    const Cell& cc = a.cell(ca);
    // required image tuple and facet array (positions follow the sorted
    // image labels)
    std::vector<std::pair<VertexLabel, std::size_t>> mapped;
    for (std::size_t i = 0; i < cc.vertices.size(); ++i)
      mapped.push_back({vmap.at(cc.vertices[i]), i});
    std::sort(mapped.begin(), mapped.end());
    std::vector<VertexLabel> want_tuple;
    std::vector<CellId> want_facets;
    for (const auto& [label, pos] : mapped) {
      want_tuple.push_back(label);
      if (cc.dim > 0) want_facets.push_back(cmap.at(cc.facets[pos]));
    }
    for (const auto& [cb, bc] : b.cells()) {
      if (bc.dim != cc.dim || used_b.count(cb)) continue;
      if (bc.vertices != want_tuple) continue;
      if (cc.dim > 0 && bc.facets != want_facets) continue;
      cmap[ca] = cb;
      used_b.insert(cb);
      if (match_cells(order, k + 1)) return true;
      used_b.erase(cb);
      cmap.erase(ca);
    }
    return false;
  }
};

}  // namespace

std::optional<std::map<VertexLabel, VertexLabel>> is_isomorphic(
    const Complex& a, const Complex& b) {
  if (a.cell_count() != b.cell_count()) return std::nullopt;
  if (a.dim() != b.dim()) return std::nullopt;
  for (int d = 0; d <= a.dim(); ++d)
    if (a.count_of_dim(d) != b.count_of_dim(d)) return std::nullopt;

  std::vector<VertexLabel> averts;
  for (const auto& [v, id] : a.vertex_cells()) averts.push_back(v);

  std::map<VertexLabel, std::map<int, std::size_t>> aprof, bprof;
  for (const auto& [v, id] : a.vertex_cells())
    aprof[v] = vertex_profile(a, id);
  for (const auto& [v, id] : b.vertex_cells())
    bprof[v] = vertex_profile(b, id);

  IsoSearch search{a, b, {}, {}, {}};
  std::set<VertexLabel> used;

  // Cell order for the inner matching: dimension ascending, id ascending.
  std::vector<CellId> order;
  for (const auto& [id, c] : a.cells()) order.push_back(id);
  std::sort(order.begin(), order.end(), [&](CellId x, CellId y) {
    return std::tie(a.cell(x).dim, x) < std::tie(a.cell(y).dim, y);
  });

  std::function<bool(std::size_t)> assign = [&](std::size_t k) -> bool {
    if (k == averts.size()) {
      search.cmap.clear();
      search.used_b.clear();
      return search.match_cells(order, 0);
    }
    const VertexLabel& va = averts[k];
    for (const auto& [vb, id] : b.vertex_cells()) {
      if (used.count(vb) || aprof.at(va) != bprof.at(vb)) continue;
      search.vmap[va] = vb;
      used.insert(vb);
      if (assign(k + 1)) return true;
      used.erase(vb);
      search.vmap.erase(va);
    }
    return false;
  };

  if (assign(0)) return search.vmap;
  return std::nullopt;
}

std::vector<std::string> verify(const Complex& cx) {
  std::vector<std::string> bad;
  auto note = [&bad](const std::string& s) { bad.push_back(s); };

  // label <-> 0-cell bijection
  for (const auto& [v, id] : cx.vertex_cells()) {
    if (!cx.has_cell(id)) {
      note("vertex " + v + " has no cell");
      continue;
    }
    const Cell& c = cx.cells().at(id);
    if (c.dim != 0 || c.vertices != std::vector<VertexLabel>{v})
      note("vertex " + v + " maps to a non-matching cell");
  }
  for (const auto& [id, c] : cx.cells()) {
    if (c.dim == 0) {
      auto reg = cx.vertex_cell(c.vertices[0]);
      if (!reg || *reg != id)
        note("0-cell " + std::to_string(id) + " not registered for label " +
             c.vertices[0]);
    }
  }

  for (const auto& [id, c] : cx.cells()) {
    std::string who = "cell " + std::to_string(id);
    if (c.dim < 0 || c.vertices.size() != std::size_t(c.dim) + 1) {
      note(who + ": dim/vertex-count mismatch");
      continue;
    }
    if (!std::is_sorted(c.vertices.begin(), c.vertices.end()) ||
        std::adjacent_find(c.vertices.begin(), c.vertices.end()) !=
            c.vertices.end()) {
      note(who + ": vertex tuple not sorted-distinct");
      continue;
    }
    for (const VertexLabel& v : c.vertices)
      if (!cx.has_vertex(v)) note(who + ": unknown vertex " + v);
    if (c.dim == 0) {
      if (!c.facets.empty()) note(who + ": 0-cell with facets");
      continue;
    }
    if (c.facets.size() != c.vertices.size()) {
      note(who + ": facet count != vertex count");
      continue;
    }
    bool resolvable = true;
    for (CellId f : c.facets)
      if (!cx.has_cell(f)) {
        note(who + ": dangling facet " + std::to_string(f));
        resolvable = false;
      }
    if (!resolvable) continue;
    for (std::size_t i = 0; i < c.facets.size(); ++i) {
      const Cell& f = cx.cells().at(c.facets[i]);
      if (f.vertices != tuple_without(c.vertices, i))
        note(who + ": facet " + std::to_string(i) + " spans wrong tuple");
    }
    for (std::size_t i = 0; i < c.facets.size(); ++i)
      for (std::size_t j = i + 1; j < c.facets.size(); ++j)
        if (c.facets[i] == c.facets[j])
          note(who + ": duplicate facets (not regular)");
    if (c.dim >= 2) {
      for (std::size_t i = 0; i < c.facets.size(); ++i)
        for (std::size_t j = i + 1; j < c.facets.size(); ++j) {
          const Cell& fi = cx.cells().at(c.facets[i]);
          const Cell& fj = cx.cells().at(c.facets[j]);
          if (fi.facets.size() > j - 1 && fj.facets.size() > i &&
              fi.facets[j - 1] != fj.facets[i])
            note(who + ": facet maps do not commute at (" + std::to_string(i) +
                 "," + std::to_string(j) + ")");
        }
    }
    // boolean face interval: every vertex subset reaches one well-defined
    // face along every deletion order (exhaustive for desk-scale dims)
    if (c.dim >= 2 && c.dim <= 6) {
      std::map<std::vector<VertexLabel>, CellId> faces;
      faces[c.vertices] = id;
      bool ok = true;
      for (int d = c.dim; d >= 1 && ok; --d) {
        std::map<std::vector<VertexLabel>, CellId> next;
        for (const auto& [tuple, cid] : faces) {
          if (int(tuple.size()) != d + 1) continue;
          const Cell& cc = cx.cells().at(cid);
          for (std::size_t i = 0; i < cc.facets.size(); ++i) {
            auto sub = tuple_without(tuple, i);
            auto [it, fresh] = next.emplace(sub, cc.facets[i]);
            if (!fresh && it->second != cc.facets[i]) {
              note(who + ": face on " + tuple_str(sub) +
                   " depends on deletion order");
              ok = false;
            }
          }
        }
        faces.merge(next);
      }
    }
  }
  return bad;
}

}  // namespace dualcx
