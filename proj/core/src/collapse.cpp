#include "dualcx/collapse.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace dualcx {

namespace {

// Cofacet lists: parents[w] = cells having w as a facet.  A cell is a free
// face iff it has exactly one cofacet (a cell with a deeper coface always has
// at least two cofacets, by the boolean face intervals).
std::map<CellId, std::vector<CellId>> cofacet_lists(const Complex& cx) {
  std::map<CellId, std::vector<CellId>> parents;
  for (const auto& [id, c] : cx.cells()) {
    parents[id];
    for (CellId f : c.facets) parents[f].push_back(id);
  }
  return parents;
}

void sort_pairs(const Complex& cx, std::vector<FreePair>& pairs) {
  std::sort(pairs.begin(), pairs.end(), [&](const FreePair& a,
                                            const FreePair& b) {
    int da = cx.cell(a.coface).dim, db = cx.cell(b.coface).dim;
    return std::tie(db, a.coface, a.face) < std::tie(da, b.coface, b.face);
  });
}

void check_free(const Complex& cx, const FreePair& pair,
                std::optional<std::size_t> step) {
  auto bail = [&](const std::string& why) {
    if (step) throw Error("NotFreeAtStep", why, step);
    fail("NotFree", why);
  };
  if (!cx.has_cell(pair.coface) || !cx.has_cell(pair.face))
    bail("pair references a missing cell");
  const Cell& v = cx.cell(pair.coface);
  if (std::find(v.facets.begin(), v.facets.end(), pair.face) == v.facets.end())
    bail("cell " + std::to_string(pair.face) + " is not a facet of " +
         std::to_string(pair.coface));
  std::size_t cofacets = 0;
  for (const auto& [id, c] : cx.cells())
    for (CellId f : c.facets)
      if (f == pair.face) ++cofacets;
  if (cofacets != 1)
    bail("cell " + std::to_string(pair.face) + " has " +
         std::to_string(cofacets) + " cofacets");
}

}  // namespace

std::vector<FreePair> free_pairs(const Complex& cx) {
  std::vector<FreePair> out;
  for (const auto& [w, parents] : cofacet_lists(cx))
    if (parents.size() == 1) out.push_back(FreePair{parents[0], w});
  sort_pairs(cx, out);
  return out;
}

Complex elementary_collapse(const Complex& cx, const FreePair& pair) {
  check_free(cx, pair, std::nullopt);
  Complex out = cx;
  out.remove_cell(pair.coface);
  out.remove_cell(pair.face);
  return out;
}

Complex replay(const Complex& cx, const CollapseSequence& seq) {
  Complex cur = cx;
  for (std::size_t k = 0; k < seq.pairs.size(); ++k) {
    check_free(cur, seq.pairs[k], k);
    cur.remove_cell(seq.pairs[k].coface);
    cur.remove_cell(seq.pairs[k].face);
  }
  return cur;
}

namespace {

// Cofacets of w whose extra vertex is v0's label.
std::vector<CellId> cofacets_through(const Complex& cx, CellId w,
                                     const VertexLabel& v0) {
  std::vector<CellId> out;
  for (const auto& [id, c] : cx.cells()) {
    if (c.dim != cx.cell(w).dim + 1) continue;
    if (!std::binary_search(c.vertices.begin(), c.vertices.end(), v0))
      continue;
    if (std::find(c.facets.begin(), c.facets.end(), w) != c.facets.end())
      out.push_back(id);
  }
  return out;
}

bool lies_in_link(const Complex& cx, CellId w, const VertexLabel& v0) {
  const Cell& c = cx.cell(w);
  if (std::binary_search(c.vertices.begin(), c.vertices.end(), v0))
    return false;
  return !cofacets_through(cx, w, v0).empty();
}

// Validates an instruction and lays out its schedule without executing it.
std::vector<FreePair> mmp_plan(const Complex& cx,
                               const MmpInstruction& instr) {
  auto v0cell = cx.vertex_cell(instr.v0);
  if (!v0cell) fail("UnknownCell", "no vertex labelled " + instr.v0);

  std::vector<FreePair> pairs;
  for (CellId w : instr.contracted) {
    const Cell& wc = cx.cell(w);
    if (std::binary_search(wc.vertices.begin(), wc.vertices.end(), instr.v0))
      fail("NotInLink", "cell " + std::to_string(w) + " contains " + instr.v0);
    std::vector<CellId> through = cofacets_through(cx, w, instr.v0);
    if (through.empty())
      fail("NotInLink",
           "cell " + std::to_string(w) + " is not in the link of " + instr.v0);
    if (through.size() > 1)
      fail("Ambiguous", "cell " + std::to_string(w) + " has " +
                            std::to_string(through.size()) +
                            " cofaces through " + instr.v0);
    pairs.push_back(FreePair{through[0], w});
  }

  // Upward closure within the link.
  for (CellId w : instr.contracted)
    for (CellId y : cx.cofaces(w)) {
      if (instr.contracted.count(y)) continue;
      if (lies_in_link(cx, y, instr.v0))
        fail("NotUpwardClosed",
             "cell " + std::to_string(y) + " lies over contracted cell " +
                 std::to_string(w) + " in the link of " + instr.v0 +
                 " but is not contracted");
    }

  sort_pairs(cx, pairs);
  return pairs;
}

}  // namespace

std::pair<Complex, CollapseSequence> mmp_collapse(const Complex& cx,
                                                  const MmpInstruction& instr) {
  CollapseSequence seq;
  seq.pairs = mmp_plan(cx, instr);
  Complex out = replay(cx, seq);
  return {std::move(out), std::move(seq)};
}

std::pair<Complex, CollapseSequence> greedy_collapse(const Complex& cx) {
  Complex cur = cx;
  CollapseSequence seq;
  for (;;) {
    std::vector<FreePair> pairs = free_pairs(cur);
    if (pairs.empty()) break;
    cur.remove_cell(pairs[0].coface);
    cur.remove_cell(pairs[0].face);
    seq.pairs.push_back(pairs[0]);
  }
  return {std::move(cur), std::move(seq)};
}

std::string verdict_name(Verdict::Kind k) {
  switch (k) {
    case Verdict::Kind::Collapsible: return "Collapsible";
    case Verdict::Kind::NotCollapsible: return "NotCollapsible";
    case Verdict::Kind::Inconclusive: return "Inconclusive";
    case Verdict::Kind::NoFreePair: return "NoFreePair";
  }
  return "?";
}

namespace {

struct CollapseSearch {
  const std::set<CellId>* target = nullptr;  // nullptr: any single vertex
  std::uint64_t budget = 0;
  std::uint64_t nodes = 0;
  bool exhausted_budget = false;
  std::set<std::vector<CellId>> dead;
  std::vector<FreePair> found;

  bool at_goal(const Complex& cur) const {
    if (target) {
      if (cur.cell_count() != target->size()) return false;
      for (const auto& [id, c] : cur.cells())
        if (!target->count(id)) return false;
      return true;
    }
    return cur.cell_count() == 1 && cur.dim() == 0;
  }

  bool admissible(const FreePair& p) const {
    return !target || (!target->count(p.coface) && !target->count(p.face));
  }

  bool dfs(const Complex& cur, std::vector<FreePair>& trail) {
    if (at_goal(cur)) {
      found = trail;
      return true;
    }
    if (++nodes > budget) {
      exhausted_budget = true;
      return false;
    }
    std::vector<CellId> key;
    for (const auto& [id, c] : cur.cells()) key.push_back(id);
    if (dead.count(key)) return false;

    for (const FreePair& p : free_pairs(cur)) {
      if (!admissible(p)) continue;
      Complex next = cur;
      next.remove_cell(p.coface);
      next.remove_cell(p.face);
      trail.push_back(p);
      if (dfs(next, trail)) return true;
      trail.pop_back();
      if (exhausted_budget) return false;
    }
    dead.insert(std::move(key));
    return false;
  }
};

Verdict run_search(const Complex& cx, const std::set<CellId>* target,
                   std::uint64_t budget) {
  CollapseSearch search;
  search.target = target;
  search.budget = budget;

  Verdict v;
  if (search.at_goal(cx)) {
    v.kind = Verdict::Kind::Collapsible;
    v.sequence = CollapseSequence{};
    return v;
  }
  bool any_admissible = false;
  for (const FreePair& p : free_pairs(cx))
    if (search.admissible(p)) {
      any_admissible = true;
      break;
    }
  if (!any_admissible) {
    v.kind = Verdict::Kind::NoFreePair;
    return v;
  }

  std::vector<FreePair> trail;
  bool ok = search.dfs(cx, trail);
  v.nodes = search.nodes;
  if (ok) {
    v.kind = Verdict::Kind::Collapsible;
    v.sequence = CollapseSequence{std::move(search.found)};
  } else if (search.exhausted_budget) {
    v.kind = Verdict::Kind::Inconclusive;
  } else {
    v.kind = Verdict::Kind::NotCollapsible;
  }
  return v;
}

}  // namespace

Verdict collapsible_search(const Complex& cx, std::uint64_t budget) {
  return run_search(cx, nullptr, budget);
}

Verdict collapses_to(const Complex& cx, const std::set<CellId>& target,
                     std::uint64_t budget) {
  for (CellId id : target) {
    if (!cx.has_cell(id))
      fail("NotASubcomplex", "target id " + std::to_string(id) + " missing");
    for (CellId f : cx.cell(id).facets)
      if (!target.count(f))
        fail("NotASubcomplex", "target omits facet " + std::to_string(f) +
                                   " of " + std::to_string(id));
  }
  return run_search(cx, &target, budget);
}

// --- group actions ----------------------------------------------------------

namespace {

using VertexPerm = std::map<VertexLabel, VertexLabel>;

VertexPerm complete_permutation(const Complex& cx, const VertexPerm& gen) {
  VertexPerm perm;
  for (const auto& [v, id] : cx.vertex_cells()) perm[v] = v;
  for (const auto& [from, to] : gen) {
    if (!cx.has_vertex(from) || !cx.has_vertex(to))
      fail("NotAnAutomorphism", "generator mentions unknown label " +
                                    (cx.has_vertex(from) ? to : from));
    perm[from] = to;
  }
  std::set<VertexLabel> image;
  for (const auto& [from, to] : perm) image.insert(to);
  if (image.size() != perm.size())
    fail("NotAnAutomorphism", "generator is not a bijection on the labels");
  return perm;
}

VertexPerm compose(const VertexPerm& f, const VertexPerm& g) {
  VertexPerm out;  // out = f after g
  for (const auto& [v, gv] : g) out[v] = f.at(gv);
  return out;
}

// All cell bijections of cx with the given vertex part; empty if none.
std::vector<std::map<CellId, CellId>> cell_extensions(
    const Complex& cx, const VertexPerm& perm, std::size_t limit) {
  std::vector<CellId> order;
  for (const auto& [id, c] : cx.cells()) order.push_back(id);
  std::sort(order.begin(), order.end(), [&](CellId x, CellId y) {
    return std::tie(cx.cell(x).dim, x) < std::tie(cx.cell(y).dim, y);
  });

  std::vector<std::map<CellId, CellId>> results;
  std::map<CellId, CellId> cmap;
  std::set<CellId> used;

  std::function<void(std::size_t)> go = [&](std::size_t k) {
    if (results.size() >= limit) return;
    if (k == order.size()) {
      results.push_back(cmap);
      return;
    }
    CellId ca = order[k];
    const Cell& cc = cx.cell(ca);
    std::vector<std::pair<VertexLabel, std::size_t>> mapped;
    for (std::size_t i = 0; i < cc.vertices.size(); ++i)
      mapped.push_back({perm.at(cc.vertices[i]), i});
    std::sort(mapped.begin(), mapped.end());
    std::vector<VertexLabel> want_tuple;
    std::vector<CellId> want_facets;
    for (const auto& [label, pos] : mapped) {
      want_tuple.push_back(label);
      if (cc.dim > 0) want_facets.push_back(cmap.at(cc.facets[pos]));
    }
    for (const auto& [cb, bc] : cx.cells()) {
      if (bc.dim != cc.dim || used.count(cb)) continue;
      if (bc.vertices != want_tuple) continue;
      if (cc.dim > 0 && bc.facets != want_facets) continue;
      cmap[ca] = cb;
      used.insert(cb);
      go(k + 1);
      used.erase(cb);
      cmap.erase(ca);
      if (results.size() >= limit) return;
    }
  };
  go(0);
  return results;
}

}  // namespace

ActionClosure action_closure(const Complex& cx, const GroupAction& action) {
  std::vector<VertexPerm> perms;
  std::set<std::vector<VertexLabel>> seen;
  auto key_of = [&](const VertexPerm& p) {
    std::vector<VertexLabel> key;
    for (const auto& [v, pv] : p) key.push_back(pv);
    return key;
  };

  VertexPerm identity = complete_permutation(cx, VertexPerm{});
  perms.push_back(identity);
  seen.insert(key_of(identity));

  std::vector<VertexPerm> gens;
  for (const auto& g : action.generators) {
    VertexPerm perm = complete_permutation(cx, g);
    if (cell_extensions(cx, perm, 1).empty())
      fail("NotAnAutomorphism",
           "a generator does not extend to a cell bijection");
    gens.push_back(perm);
  }

  for (std::size_t i = 0; i < perms.size(); ++i) {
    for (const VertexPerm& g : gens) {
      VertexPerm next = compose(g, perms[i]);
      if (seen.insert(key_of(next)).second) {
        perms.push_back(next);
        if (perms.size() > action.max_order)
          fail("GroupTooLarge", "vertex group exceeds max_order " +
                                    std::to_string(action.max_order));
      }
    }
  }

  ActionClosure closure;
  std::set<std::vector<CellId>> element_keys;
  for (const VertexPerm& perm : perms) {
    for (auto& ext : cell_extensions(cx, perm, action.max_order + 1)) {
      std::vector<CellId> key;
      for (const auto& [a, b] : ext) key.push_back(b);
      if (element_keys.insert(std::move(key)).second)
        closure.elements.push_back(std::move(ext));
      if (closure.elements.size() > action.max_order)
        fail("GroupTooLarge", "automorphism closure exceeds max_order " +
                                  std::to_string(action.max_order));
    }
  }
  return closure;
}

namespace {

std::vector<FreePair> pair_orbit(const ActionClosure& closure,
                                 const FreePair& seed) {
  std::set<std::pair<CellId, CellId>> seen;
  std::vector<FreePair> orbit;
  for (const auto& g : closure.elements) {
    FreePair mapped{g.at(seed.coface), g.at(seed.face)};
    if (seen.insert({mapped.coface, mapped.face}).second)
      orbit.push_back(mapped);
  }
  std::sort(orbit.begin(), orbit.end(),
            [](const FreePair& a, const FreePair& b) {
              return std::tie(a.coface, a.face) < std::tie(b.coface, b.face);
            });
  return orbit;
}

void check_disjoint(const std::vector<FreePair>& orbit) {
  std::set<CellId> cells;
  for (const FreePair& p : orbit) {
    if (!cells.insert(p.coface).second || !cells.insert(p.face).second)
      fail("OverlappingOrbit",
           "orbit pairs share cells; they cannot collapse simultaneously");
  }
}

}  // namespace

std::pair<Complex, CollapseSequence> equivariant_collapse(
    const Complex& cx, const GroupAction& action) {
  ActionClosure closure = action_closure(cx, action);
  Complex cur = cx;
  CollapseSequence seq;
  for (;;) {
    std::vector<FreePair> pairs = free_pairs(cur);
    if (pairs.empty()) break;
    std::vector<FreePair> orbit = pair_orbit(closure, pairs[0]);
    check_disjoint(orbit);
    for (std::size_t k = 0; k < orbit.size(); ++k) {
      check_free(cur, orbit[k], seq.pairs.size());
      cur.remove_cell(orbit[k].coface);
      cur.remove_cell(orbit[k].face);
      seq.pairs.push_back(orbit[k]);
    }
  }
  return {std::move(cur), std::move(seq)};
}

std::pair<Complex, CollapseSequence> equivariant_collapse(
    const Complex& cx, const GroupAction& action,
    const std::vector<MmpInstruction>& instructions) {
  ActionClosure closure = action_closure(cx, action);

  // The instruction set must be closed under the action.
  std::set<std::pair<VertexLabel, std::set<CellId>>> given;
  for (const MmpInstruction& i : instructions)
    given.insert({i.v0, i.contracted});
  for (const auto& g : closure.elements) {
    for (const MmpInstruction& i : instructions) {
      CellId v0cell = *cx.vertex_cell(i.v0);
      VertexLabel v0_mapped = cx.cell(g.at(v0cell)).vertices[0];
      std::set<CellId> contracted_mapped;
      for (CellId w : i.contracted) contracted_mapped.insert(g.at(w));
      if (!given.count({v0_mapped, contracted_mapped}))
        fail("NotInvariantInstruction",
             "the action maps an instruction outside the given set");
    }
  }

  // Plan each instruction, then require the removed sets to be disjoint.
  std::vector<FreePair> all;
  std::set<CellId> removed;
  for (const MmpInstruction& i : instructions) {
    std::vector<FreePair> plan = mmp_plan(cx, i);
    for (const FreePair& p : plan) {
      if (!removed.insert(p.coface).second || !removed.insert(p.face).second)
        fail("OverlappingOrbit",
             "instructions remove overlapping cell sets");
      all.push_back(p);
    }
  }
  sort_pairs(cx, all);

  CollapseSequence seq{std::move(all)};
  Complex out = replay(cx, seq);
  return {std::move(out), std::move(seq)};
}

}  // namespace dualcx
