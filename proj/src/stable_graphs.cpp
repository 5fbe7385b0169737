#include "ogw/stable_graphs.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

#include "ogw/error.hpp"

namespace ogw {

namespace {

bool leaf_less(const GraphLeaf& a, const GraphLeaf& b) {
  return std::tie(a.vertex, a.height) < std::tie(b.vertex, b.height);
}

void canonicalize_edge(GraphEdge& e) {
  if (std::tie(e.v1, e.k1) > std::tie(e.v2, e.k2)) {
    std::swap(e.v1, e.v2);
    std::swap(e.k1, e.k2);
  }
}

bool edge_less(const GraphEdge& a, const GraphEdge& b) {
  return std::tie(a.v1, a.k1, a.v2, a.k2) < std::tie(b.v1, b.k1, b.v2, b.k2);
}

// Flat integer serialization of a fully sorted labeled graph.
std::vector<int> serialize(const StableLabeledGraph& g) {
  std::vector<int> out;
  out.push_back(static_cast<int>(g.vertices.size()));
  for (const auto& v : g.vertices) {
    out.push_back(v.genus);
    out.push_back(v.marking);
  }
  out.push_back(static_cast<int>(g.edges.size()));
  for (const auto& e : g.edges) {
    out.push_back(e.v1);
    out.push_back(e.k1);
    out.push_back(e.v2);
    out.push_back(e.k2);
  }
  for (const auto* leaves : {&g.ordered_leaves, &g.unordered_leaves, &g.dilaton_leaves}) {
    out.push_back(static_cast<int>(leaves->size()));
    for (const auto& l : *leaves) {
      out.push_back(l.vertex);
      out.push_back(l.height);
    }
  }
  return out;
}

StableLabeledGraph relabel(const StableLabeledGraph& g, const std::vector<int>& perm) {
  StableLabeledGraph out = g;
  for (size_t v = 0; v < g.vertices.size(); ++v) out.vertices[perm[v]] = g.vertices[v];
  for (auto& e : out.edges) {
    e.v1 = perm[e.v1];
    e.v2 = perm[e.v2];
    canonicalize_edge(e);
  }
  std::sort(out.edges.begin(), out.edges.end(), edge_less);
  for (auto& l : out.ordered_leaves) l.vertex = perm[l.vertex];
  for (auto& l : out.unordered_leaves) l.vertex = perm[l.vertex];
  for (auto& l : out.dilaton_leaves) l.vertex = perm[l.vertex];
  std::sort(out.unordered_leaves.begin(), out.unordered_leaves.end(), leaf_less);
  std::sort(out.dilaton_leaves.begin(), out.dilaton_leaves.end(), leaf_less);
  return out;
}

// Canonical form plus the number of vertex permutations fixing the graph.
std::pair<std::vector<int>, long> canonical_form_and_vertex_aut(const StableLabeledGraph& g) {
  int V = static_cast<int>(g.vertices.size());
  std::vector<int> perm(V);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<int> self = serialize(g);
  std::vector<int> best;
  long fixers = 0;
  do {
    std::vector<int> s = serialize(relabel(g, perm));
    if (s == self) ++fixers;
    if (best.empty() || s < best) best = std::move(s);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return {best, fixers};
}

Integer internal_aut_factors(const StableLabeledGraph& g) {
  Integer aut = 1;
  // Parallel edges of identical type permute; loops with equal heights flip.
  std::map<std::tuple<int, int, int, int>, long> edge_types;
  for (const auto& e : g.edges) {
    ++edge_types[{e.v1, e.k1, e.v2, e.k2}];
    if (e.v1 == e.v2 && e.k1 == e.k2) aut *= 2;
  }
  for (const auto& [type, cnt] : edge_types) aut *= factorial(static_cast<unsigned>(cnt));
  for (const auto* leaves : {&g.unordered_leaves, &g.dilaton_leaves}) {
    std::map<std::pair<int, int>, long> groups;
    for (const auto& l : *leaves) ++groups[{l.vertex, l.height}];
    for (const auto& [key, cnt] : groups) aut *= factorial(static_cast<unsigned>(cnt));
  }
  return aut;
}

// Nonnegative compositions of `total` into `parts` parts, each part >= minimum.
void for_each_composition(int total, int parts, int minimum,
                          const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> cur(parts, 0);
  std::function<void(int, int)> rec = [&](int idx, int remaining) {
    if (idx == parts - 1) {
      if (remaining >= minimum) {
        cur[idx] = remaining;
        fn(cur);
      }
      return;
    }
    for (int x = minimum; x <= remaining - minimum * (parts - 1 - idx); ++x) {
      cur[idx] = x;
      rec(idx + 1, remaining - x);
    }
  };
  if (parts == 0) {
    if (total == 0) fn(cur);
    return;
  }
  if (total < minimum * parts) return;
  rec(0, total);
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

int StableLabeledGraph::total_genus() const {
  int s = 0;
  for (const auto& v : vertices) s += v.genus;
  return s + static_cast<int>(edges.size()) - static_cast<int>(vertices.size()) + 1;
}

int StableLabeledGraph::valence(int v) const {
  int val = 0;
  for (const auto& e : edges) val += (e.v1 == v) + (e.v2 == v);
  for (const auto* leaves : {&ordered_leaves, &unordered_leaves, &dilaton_leaves})
    for (const auto& l : *leaves) val += (l.vertex == v);
  return val;
}

long StableLabeledGraph::height_sum(int v) const {
  long s = 0;
  for (const auto& e : edges) {
    if (e.v1 == v) s += e.k1;
    if (e.v2 == v) s += e.k2;
  }
  for (const auto* leaves : {&ordered_leaves, &unordered_leaves, &dilaton_leaves})
    for (const auto& l : *leaves)
      if (l.vertex == v) s += l.height;
  return s;
}

bool StableLabeledGraph::is_connected() const {
  UnionFind uf(static_cast<int>(vertices.size()));
  for (const auto& e : edges) uf.unite(e.v1, e.v2);
  for (size_t v = 1; v < vertices.size(); ++v)
    if (uf.find(static_cast<int>(v)) != uf.find(0)) return false;
  return true;
}

void validate_stable_graph(const StableLabeledGraph& g, int expect_genus) {
  require(g.is_connected(), "graph_sum.InvalidGraph", "graph not connected");
  require(g.total_genus() == expect_genus, "graph_sum.InvalidGraph", "genus formula violated");
  for (int v = 0; v < static_cast<int>(g.vertices.size()); ++v) {
    int val = g.valence(v);
    require(2 * g.vertices[v].genus - 2 + val > 0, "graph_sum.InvalidGraph",
            "unstable vertex");
    require(g.height_sum(v) == 3L * g.vertices[v].genus - 3 + val, "graph_sum.InvalidGraph",
            "vertex dimension constraint violated");
  }
  for (const auto& l : g.dilaton_leaves)
    require(l.height >= 2, "graph_sum.InvalidGraph", "dilaton leaf of height < 2");
}

std::vector<StableLabeledGraph> enumerate_stable_graphs(int genus, int n_ordered,
                                                        int n_unordered,
                                                        const GraphEnumOptions& opts) {
  std::vector<StableLabeledGraph> out;
  int n_tot = n_ordered + n_unordered;
  if (2 * genus - 2 + n_tot <= 0) return out;
  require(opts.num_markings >= 1, "graph_sum.InvalidInput", "need at least one marking");
  require(opts.slot_marking.empty() ||
              static_cast<int>(opts.slot_marking.size()) == n_ordered,
          "graph_sum.InvalidInput", "slot constraint length mismatch");

  int dil_cap = std::max(0, 3 * genus - 3 + n_tot);
  int vmax = std::max(1, 2 * genus - 2 + n_tot + dil_cap);

  std::set<std::vector<int>> seen;
  std::map<std::vector<int>, StableLabeledGraph> result_by_form;

  for (int V = 1; V <= vmax; ++V) {
    // vertex pair list for edge endpoints
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < V; ++i)
      for (int j = i; j < V; ++j) pairs.emplace_back(i, j);

    std::vector<int> gv(V, 0);
    std::function<void(int, int)> genus_rec = [&](int idx, int remaining) {
      if (idx == V) {
        int sum_gv = genus - remaining;
        int edges_needed = genus - sum_gv + V - 1;
        if (edges_needed < 0) return;
        if (edges_needed < V - 1) return;  // cannot connect V vertices
        // multisets of edges_needed endpoint pairs
        std::vector<int> choice(edges_needed, 0);
        std::function<void(int, int)> edge_rec = [&](int pos, int start) {
          if (pos == edges_needed) {
            // connectivity
            UnionFind uf(V);
            for (int c : choice) uf.unite(pairs[c].first, pairs[c].second);
            for (int v = 1; v < V; ++v)
              if (uf.find(v) != uf.find(0)) return;

            // base structure fixed; now leaves and dilatons
            std::vector<int> edge_deg(V, 0);
            for (int c : choice) {
              ++edge_deg[pairs[c].first];
              ++edge_deg[pairs[c].second];
            }

            // ordered slot -> vertex
            std::vector<int> slot_vertex(n_ordered, 0);
            std::function<void(int)> slot_rec = [&](int slot) {
              if (slot == n_ordered) {
                // unordered leaves: composition over vertices
                for_each_composition(n_unordered, V, 0, [&](const std::vector<int>& uleaf) {
                  // dilaton counts per vertex
                  std::vector<int> val0(V), dmax(V);
                  for (int v = 0; v < V; ++v) {
                    val0[v] = edge_deg[v] + uleaf[v];
                    for (int s = 0; s < n_ordered; ++s) val0[v] += (slot_vertex[s] == v);
                    dmax[v] = std::max(0, 3 * gv[v] - 3 + val0[v]);
                  }
                  std::vector<int> dil(V, 0);
                  std::function<void(int)> dil_rec = [&](int v) {
                    if (v == V) {
                      // stability + budget
                      for (int u = 0; u < V; ++u) {
                        int val = val0[u] + dil[u];
                        if (2 * gv[u] - 2 + val <= 0) return;
                        long budget = 3L * gv[u] - 3 + val;
                        if (budget < 2L * dil[u]) return;
                      }
                      // heights per vertex: slots are (edge half-edges at u,
                      // ordered leaves at u, unordered leaves at u, dilatons at u)
                      // enumerated as one composition per vertex.
                      struct Slot {
                        int kind;  // 0 half-edge, 1 ordered, 2 unordered, 3 dilaton
                        int index; // edge choice index / slot id / seq
                        int side;  // half-edge side
                      };
                      std::vector<std::vector<Slot>> slots(V);
                      for (size_t c = 0; c < choice.size(); ++c) {
                        slots[pairs[choice[c]].first].push_back({0, static_cast<int>(c), 0});
                        slots[pairs[choice[c]].second].push_back({0, static_cast<int>(c), 1});
                      }
                      for (int s = 0; s < n_ordered; ++s)
                        slots[slot_vertex[s]].push_back({1, s, 0});
                      for (int u = 0; u < V; ++u) {
                        for (int q = 0; q < uleaf[u]; ++q) slots[u].push_back({2, q, 0});
                        for (int q = 0; q < dil[u]; ++q) slots[u].push_back({3, q, 0});
                      }

                      // per-vertex height assignments
                      std::vector<std::vector<std::vector<int>>> vheights(V);
                      for (int u = 0; u < V; ++u) {
                        long budget = 3L * gv[u] - 3 + val0[u] + dil[u];
                        int nslots = static_cast<int>(slots[u].size());
                        // heights for non-dilaton slots >= 0, dilaton >= 2
                        std::vector<int> hs(nslots, 0);
                        std::function<void(int, long)> h_rec = [&](int idx, long rem) {
                          if (idx == nslots) {
                            if (rem == 0) vheights[u].push_back(hs);
                            return;
                          }
                          int least = slots[u][idx].kind == 3 ? 2 : 0;
                          for (int x = least; x <= rem; ++x) {
                            hs[idx] = x;
                            h_rec(idx + 1, rem - x);
                          }
                        };
                        if (budget >= 0) h_rec(0, budget);
                        if (vheights[u].empty()) return;
                      }

                      // cartesian product over vertices of height assignments
                      std::vector<size_t> pick(V, 0);
                      bool more = true;
                      while (more) {
                        // markings
                        std::vector<int> marking(V, 0);
                        std::function<void(int)> mark_rec = [&](int mv) {
                          if (mv == V) {
                            // slot constraints
                            if (!opts.slot_marking.empty())
                              for (int s = 0; s < n_ordered; ++s)
                                if (opts.slot_marking[s] >= 0 &&
                                    marking[slot_vertex[s]] != opts.slot_marking[s])
                                  return;
                            // assemble
                            StableLabeledGraph gr;
                            gr.vertices.resize(V);
                            for (int u = 0; u < V; ++u)
                              gr.vertices[u] = {gv[u], marking[u]};
                            std::vector<GraphEdge> edges(choice.size());
                            for (size_t c = 0; c < choice.size(); ++c) {
                              edges[c].v1 = pairs[choice[c]].first;
                              edges[c].v2 = pairs[choice[c]].second;
                            }
                            gr.ordered_leaves.resize(n_ordered);
                            for (int u = 0; u < V; ++u) {
                              const auto& hs = vheights[u][pick[u]];
                              for (size_t si = 0; si < slots[u].size(); ++si) {
                                const Slot& sl = slots[u][si];
                                int h = hs[si];
                                switch (sl.kind) {
                                  case 0:
                                    (sl.side == 0 ? edges[sl.index].k1
                                                  : edges[sl.index].k2) = h;
                                    break;
                                  case 1:
                                    gr.ordered_leaves[sl.index] = {u, h};
                                    break;
                                  case 2:
                                    gr.unordered_leaves.push_back({u, h});
                                    break;
                                  case 3:
                                    gr.dilaton_leaves.push_back({u, h});
                                    break;
                                }
                              }
                            }
                            for (auto& e : edges) canonicalize_edge(e);
                            std::sort(edges.begin(), edges.end(), edge_less);
                            gr.edges = std::move(edges);
                            std::sort(gr.unordered_leaves.begin(), gr.unordered_leaves.end(),
                                      leaf_less);
                            std::sort(gr.dilaton_leaves.begin(), gr.dilaton_leaves.end(),
                                      leaf_less);

                            auto [form, fixers] = canonical_form_and_vertex_aut(gr);
                            if (seen.insert(form).second) {
                              gr.aut_order = Integer(fixers) * internal_aut_factors(gr);
                              validate_stable_graph(gr, genus);
                              result_by_form.emplace(form, std::move(gr));
                            }
                            return;
                          }
                          for (int mk = 0; mk < opts.num_markings; ++mk) {
                            marking[mv] = mk;
                            mark_rec(mv + 1);
                          }
                        };
                        mark_rec(0);

                        more = false;
                        for (int u = 0; u < V; ++u) {
                          if (++pick[u] < vheights[u].size()) {
                            more = true;
                            break;
                          }
                          pick[u] = 0;
                        }
                      }
                      return;
                    }
                    for (int d = 0; d <= dmax[v]; ++d) {
                      dil[v] = d;
                      dil_rec(v + 1);
                    }
                  };
                  dil_rec(0);
                });
                return;
              }
              for (int v = 0; v < V; ++v) {
                slot_vertex[slot] = v;
                slot_rec(slot + 1);
              }
            };
            slot_rec(0);
            return;
          }
          for (int c = start; c < static_cast<int>(pairs.size()); ++c) {
            choice[pos] = c;
            edge_rec(pos + 1, c);
          }
        };
        edge_rec(0, 0);
        return;
      }
      for (int x = 0; x <= remaining; ++x) {
        gv[idx] = x;
        genus_rec(idx + 1, remaining - x);
      }
    };
    genus_rec(0, genus);
  }

  for (auto& [form, gr] : result_by_form) out.push_back(std::move(gr));
  return out;
}

Integer aut_order_bruteforce(const StableLabeledGraph& g) {
  int V = static_cast<int>(g.vertices.size());
  int E = static_cast<int>(g.edges.size());
  std::vector<int> perm(V);
  std::iota(perm.begin(), perm.end(), 0);
  Integer total = 0;
  do {
    // vertex labels preserved?
    bool ok = true;
    for (int v = 0; v < V && ok; ++v) {
      const auto& a = g.vertices[v];
      const auto& b = g.vertices[perm[v]];
      ok = a.genus == b.genus && a.marking == b.marking;
    }
    for (const auto& l : g.ordered_leaves)
      if (ok && perm[l.vertex] != l.vertex) ok = false;
    if (!ok) continue;

    // edge permutations with explicit orientation choices
    std::vector<int> eperm(E);
    std::iota(eperm.begin(), eperm.end(), 0);
    Integer edge_ways = 0;
    do {
      Integer ways = 1;
      for (int e = 0; e < E && ways != 0; ++e) {
        const auto& src = g.edges[e];
        const auto& dst = g.edges[eperm[e]];
        int match = 0;
        if (perm[src.v1] == dst.v1 && src.k1 == dst.k1 && perm[src.v2] == dst.v2 &&
            src.k2 == dst.k2)
          ++match;
        if (perm[src.v1] == dst.v2 && src.k1 == dst.k2 && perm[src.v2] == dst.v1 &&
            src.k2 == dst.k1)
          ++match;
        ways *= match;
      }
      edge_ways += ways;
    } while (std::next_permutation(eperm.begin(), eperm.end()));

    auto leaf_ways = [&](const std::vector<GraphLeaf>& leaves) {
      int L = static_cast<int>(leaves.size());
      std::vector<int> lperm(L);
      std::iota(lperm.begin(), lperm.end(), 0);
      long count = 0;
      do {
        bool lok = true;
        for (int l = 0; l < L && lok; ++l)
          lok = perm[leaves[l].vertex] == leaves[lperm[l]].vertex &&
                leaves[l].height == leaves[lperm[l]].height;
        if (lok) ++count;
      } while (std::next_permutation(lperm.begin(), lperm.end()));
      return Integer(count);
    };

    total += edge_ways * leaf_ways(g.unordered_leaves) * leaf_ways(g.dilaton_leaves);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

}  // namespace ogw
