#include "dualcx/subdivision.hpp"

#include <algorithm>
#include <set>

namespace dualcx {

namespace {

// All iterated faces of `c`, including `c` itself.
std::set<CellId> faces_of(const Complex& cx, CellId c) {
  std::set<CellId> out{c};
  std::vector<CellId> stack{c};
  while (!stack.empty()) {
    CellId top = stack.back();
    stack.pop_back();
    for (CellId f : cx.cell(top).facets)
      if (out.insert(f).second) stack.push_back(f);
  }
  return out;
}

}  // namespace

Complex stellar_subdivide(const Complex& cx, CellId c, const VertexLabel& p) {
  const Cell& center = cx.cell(c);
  if (center.dim == 0)
    fail("DimZeroCenter", "stellar subdivision needs a cell of dim >= 1");
  if (cx.has_vertex(p))
    fail("LabelClash", "vertex " + p + " already present");

  std::vector<CellId> doomed = cx.star(c);

  // Spans <p, w> are created for every face w of a removed cell that does
  // not itself contain the center (w empty gives the vertex p).
  std::set<CellId> spans;
  for (CellId v : doomed)
    for (CellId w : faces_of(cx, v))
      if (!cx.is_face(c, w)) spans.insert(w);

  Complex out = cx;
  for (CellId v : doomed) out.remove_cell(v);
  CellId pcell = out.add_vertex(p);

  std::vector<CellId> order(spans.begin(), spans.end());
  std::sort(order.begin(), order.end(), [&](CellId a, CellId b) {
    return std::tie(cx.cell(a).dim, a) < std::tie(cx.cell(b).dim, b);
  });
  std::map<CellId, CellId> span_of;  // w -> <p, w>
  for (CellId w : order) {
    const Cell& wc = cx.cell(w);
    std::vector<VertexLabel> tuple = wc.vertices;
    tuple.push_back(p);
    std::sort(tuple.begin(), tuple.end());
    std::vector<CellId> facets;
    for (const VertexLabel& x : tuple) {
      if (x == p) {
        facets.push_back(w);
      } else {
        std::size_t k = std::find(wc.vertices.begin(), wc.vertices.end(), x) -
                        wc.vertices.begin();
        facets.push_back(wc.dim == 0 ? pcell : span_of.at(wc.facets[k]));
      }
    }
    span_of[w] = out.attach_cell(tuple, facets);
  }
  return out;
}

Complex barycentric_subdivide(const Complex& cx) {
  std::vector<CellId> order;
  for (const auto& [id, c] : cx.cells())
    if (c.dim >= 1) order.push_back(id);
  std::sort(order.begin(), order.end(), [&](CellId a, CellId b) {
    int da = cx.cell(a).dim, db = cx.cell(b).dim;
    return std::tie(db, a) < std::tie(da, b);  // dim desc, id asc
  });
  Complex cur = cx;
  for (CellId c : order) {
    VertexLabel label = "b" + std::to_string(c);
    while (cur.has_vertex(label)) label = "_" + label;
    cur = stellar_subdivide(cur, c, label);
  }
  return cur;
}

Complex blowup_stratum(const Complex& cx, CellId c, const VertexLabel& p) {
  return stellar_subdivide(cx, c, p);
}

Complex blowup_trivial(const Complex& cx) { return cx; }

namespace {

VertexLabel fresh_apex(const Complex& cx, const Complex& L) {
  for (std::size_t k = 0;; ++k) {
    VertexLabel cand = "e" + std::to_string(k);
    if (!cx.has_vertex(cand) && !L.has_vertex(cand)) return cand;
  }
}

}  // namespace

std::pair<Complex, AttachmentRecord> attach_cone_over_join(
    const Complex& cx, CellId c, const Complex& L, const TauMap& tau,
    const std::optional<VertexLabel>& apex,
    const std::optional<VertexLabel>& anchor) {
  const Cell& center = cx.cell(c);
  for (const auto& [v, id] : L.vertex_cells())
    if (cx.has_vertex(v))
      fail("LabelClash", "attached complex reuses host label " + v);

  VertexLabel e0 = apex ? *apex : fresh_apex(cx, L);
  if (cx.has_vertex(e0) || L.has_vertex(e0))
    fail("LabelClash", "apex label " + e0 + " already present");
  VertexLabel a = anchor ? *anchor : center.vertices[0];
  if (std::find(center.vertices.begin(), center.vertices.end(), a) ==
      center.vertices.end())
    fail("UnknownCell", "anchor " + a + " is not a vertex of the center");

  // Image of each L-vertex, required total and per-cell injective.
  auto mapped = [&](const VertexLabel& u) -> VertexLabel {
    auto it = tau.vertex_map.find(u);
    if (it == tau.vertex_map.end())
      fail("UnresolvedImageCell", "no image for vertex " + u);
    return it->second;
  };

  // Resolve the identification of each top join c * l with a host cell.
  std::map<CellId, CellId> top_image;  // l -> host cell over c + tau(l)
  for (const auto& [lid, lc] : L.cells()) {
    std::set<VertexLabel> image_set;
    for (const VertexLabel& u : lc.vertices) {
      VertexLabel v = mapped(u);
      if (!image_set.insert(v).second)
        fail("NonInjectiveOnCell",
             "two vertices of attached cell " + std::to_string(lid) +
                 " map to " + v);
      if (std::find(center.vertices.begin(), center.vertices.end(), v) !=
          center.vertices.end())
        fail("NonInjectiveOnCell",
             "image " + v + " collides with the center's vertices");
    }
    std::vector<VertexLabel> want(center.vertices);
    want.insert(want.end(), image_set.begin(), image_set.end());
    std::sort(want.begin(), want.end());

    auto given = tau.image_cells.find(lid);
    if (given != tau.image_cells.end()) {
      const Cell& m = cx.cell(given->second);
      if (m.vertices != want || !cx.is_face(c, given->second))
        fail("UnresolvedImageCell",
             "declared image of cell " + std::to_string(lid) +
                 " does not span the join over the center");
      top_image[lid] = given->second;
    } else {
      std::vector<CellId> candidates;
      for (const auto& [mid, mc] : cx.cells())
        if (mc.vertices == want && cx.is_face(c, mid))
          candidates.push_back(mid);
      if (candidates.size() != 1)
        fail("UnresolvedImageCell",
             "join over attached cell " + std::to_string(lid) +
                 (candidates.empty() ? " spans no host cell"
                                     : " is ambiguous; name the image cell"));
      top_image[lid] = candidates[0];
    }
  }

  // Coherence: the image of a facet is the matching facet of the image.
  for (const auto& [lid, lc] : L.cells())
    for (std::size_t i = 0; i < lc.facets.size(); ++i) {
      const Cell& m = cx.cell(top_image.at(lid));
      std::vector<VertexLabel> sub;
      for (std::size_t k = 0; k < lc.vertices.size(); ++k)
        if (k != i) sub.push_back(mapped(lc.vertices[k]));
      for (const VertexLabel& v : center.vertices) sub.push_back(v);
      std::sort(sub.begin(), sub.end());
      if (cx.face_on(top_image.at(lid), sub) != top_image.at(lc.facets[i]))
        fail("UnresolvedImageCell",
             "image cells of attached cell " + std::to_string(lid) +
                 " and its facet are not aligned");
      (void)m;
    }

  // The identified copy of the join inside the host: faces of the center,
  // images of plain L-cells, and faces of the top joins.
  std::set<CellId> glued_base;
  for (CellId f : faces_of(cx, c)) glued_base.insert(f);
  for (const auto& [lid, lc] : L.cells()) {
    CellId m = top_image.at(lid);
    std::vector<VertexLabel> tau_side;
    for (const VertexLabel& u : lc.vertices) tau_side.push_back(mapped(u));
    std::sort(tau_side.begin(), tau_side.end());
    glued_base.insert(*cx.face_on(m, tau_side));  // plain l
    for (CellId aface : faces_of(cx, c)) {
      std::vector<VertexLabel> sub = tau_side;
      for (const VertexLabel& v : cx.cell(aface).vertices) sub.push_back(v);
      std::sort(sub.begin(), sub.end());
      glued_base.insert(*cx.face_on(m, sub));
    }
  }

  // Expected join size: distinct identified cells, one per join cell.
  std::size_t faces_c = faces_of(cx, c).size();
  std::size_t expect = faces_c + L.cell_count() * (1 + faces_c);
  if (glued_base.size() != expect)
    fail("UnresolvedImageCell",
         "the identification merges distinct cells of the join");

  Complex out = cx;
  CellId apex_cell = out.add_vertex(e0);
  std::vector<CellId> base_order(glued_base.begin(), glued_base.end());
  std::sort(base_order.begin(), base_order.end(), [&](CellId x, CellId y) {
    return std::tie(cx.cell(x).dim, x) < std::tie(cx.cell(y).dim, y);
  });
  std::map<CellId, CellId> over;  // base cell -> apex * base cell
  for (CellId b : base_order) {
    const Cell& bc = cx.cell(b);
    std::vector<VertexLabel> tuple = bc.vertices;
    tuple.push_back(e0);
    std::sort(tuple.begin(), tuple.end());
    std::vector<CellId> facets;
    for (const VertexLabel& x : tuple) {
      if (x == e0) {
        facets.push_back(b);
      } else {
        std::size_t k = std::find(bc.vertices.begin(), bc.vertices.end(), x) -
                        bc.vertices.begin();
        facets.push_back(bc.dim == 0 ? apex_cell : over.at(bc.facets[k]));
      }
    }
    over[b] = out.attach_cell(tuple, facets);
  }

  // Pairing schedule: (apex*anchor*s, apex*s) with s shrinking, so apex cells
  // over anchor-containing base cells lead, largest dimension first.
  AttachmentRecord rec;
  rec.apex = e0;
  rec.apex_cell = apex_cell;
  rec.anchor = a;
  std::vector<CellId> with_anchor;
  for (CellId b : base_order) {
    const Cell& bc = cx.cell(b);
    if (std::binary_search(bc.vertices.begin(), bc.vertices.end(), a))
      with_anchor.push_back(b);
  }
  std::sort(with_anchor.begin(), with_anchor.end(), [&](CellId x, CellId y) {
    int dx = cx.cell(x).dim, dy = cx.cell(y).dim;
    return std::tie(dy, over.at(x)) < std::tie(dx, over.at(y));
  });
  for (CellId b : with_anchor) {
    const Cell& bc = cx.cell(b);
    CellId face;
    if (bc.dim == 0) {
      face = apex_cell;
    } else {
      std::vector<VertexLabel> rest;
      for (const VertexLabel& v : bc.vertices)
        if (v != a) rest.push_back(v);
      face = over.at(*cx.face_on(b, rest));
    }
    rec.pairs.pairs.push_back(FreePair{over.at(b), face});
  }
  return {std::move(out), std::move(rec)};
}

std::pair<Complex, CollapseSequence> collapse_coned_join(
    const Complex& cx, const AttachmentRecord& record) {
  Complex out = replay(cx, record.pairs);
  return {std::move(out), record.pairs};
}

}  // namespace dualcx
