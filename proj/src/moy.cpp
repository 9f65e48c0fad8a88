// Graph-rewriting evaluation of closed colored trivalent graphs.
#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

#include "moymf/analysis.hpp"

namespace moymf {

namespace {

struct GEdge {
  int color = 0;
  int from = -1, to = -1;  // node index, -1 on a circle
  bool alive = true;
};

struct GNode {
  VertexKind kind = VertexKind::merge;
  std::vector<int> ins, outs;
  bool alive = true;
};

struct Graph {
  int level = 0;
  std::vector<GEdge> edges;
  std::vector<GNode> nodes;

  int add_edge(int color, int from, int to) {
    edges.push_back({color, from, to, true});
    return static_cast<int>(edges.size()) - 1;
  }
  int add_node(VertexKind k, std::vector<int> ins, std::vector<int> outs) {
    nodes.push_back({k, std::move(ins), std::move(outs), true});
    int id = static_cast<int>(nodes.size()) - 1;
    for (int e : nodes[id].ins) edges[e].to = id;
    for (int e : nodes[id].outs) edges[e].from = id;
    return id;
  }
  int other(const std::vector<int>& pair, int e) const { return pair[0] == e ? pair[1] : pair[0]; }
};

Graph to_graph(const Diagram& d) {
  std::map<std::string, int> index;
  for (std::size_t k = 0; k < d.edges.size(); ++k) index[d.edges[k].id] = static_cast<int>(k);
  std::vector<int> parent(d.edges.size());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  std::map<std::string, int> head_at, tail_at;
  for (std::size_t k = 0; k < d.edges.size(); ++k) {
    if (d.edges[k].head.boundary) head_at[d.edges[k].head.name] = static_cast<int>(k);
    if (d.edges[k].tail.boundary) tail_at[d.edges[k].tail.name] = static_cast<int>(k);
  }
  for (auto& [label, e] : head_at) {
    auto t = tail_at.find(label);
    if (t == tail_at.end()) throw NotClosed("boundary label " + label + " is not glued");
    parent[find(e)] = find(t->second);
  }
  for (auto& [label, e] : tail_at)
    if (!head_at.count(label)) throw NotClosed("boundary label " + label + " is not glued");

  Graph g;
  g.level = d.level;
  std::map<int, int> chain;
  for (std::size_t k = 0; k < d.edges.size(); ++k) {
    int r = find(static_cast<int>(k));
    if (!chain.count(r)) chain[r] = g.add_edge(d.edges[k].color, -1, -1);
  }
  for (auto& v : d.vertices) {
    std::vector<int> ins, outs;
    for (auto& e : v.ins) ins.push_back(chain.at(find(index.at(e))));
    for (auto& e : v.outs) outs.push_back(chain.at(find(index.at(e))));
    g.add_node(v.kind, ins, outs);
  }
  return g;
}

// Erase nodes and internal edges, then splice external edge ends pairwise.
struct Surgery {
  Graph& g;
  std::map<int, int> alias;

  int resolve(int e) {
    while (alias.count(e)) e = alias[e];
    return e;
  }
  void kill_nodes(std::initializer_list<int> ns) {
    for (int n : ns) g.nodes[n].alive = false;
  }
  void kill_edges(std::initializer_list<int> es) {
    for (int e : es) g.edges[e].alive = false;
  }
  // e ends at a removed node, f starts at one; they become a single edge.
  void join(int e, int f) {
    e = resolve(e);
    f = resolve(f);
    if (e == f) {
      g.edges[e].from = g.edges[e].to = -1;
      return;
    }
    int to = g.edges[f].to;
    g.edges[e].to = to;
    if (to >= 0)
      for (auto& x : g.nodes[to].ins)
        if (x == f) x = e;
    g.edges[f].alive = false;
    alias[f] = e;
  }
};

struct Term {
  QLaurent coeff;
  Graph graph;
};

bool live_node(const Graph& g, int n) { return n >= 0 && g.nodes[n].alive; }

// Each rule returns the weighted replacements, or nothing when it does not apply.
std::vector<Term> circles(const Graph& g) {
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    auto& x = g.edges[e];
    if (x.alive && x.from < 0 && x.to < 0) {
      Term t{qbinomial(g.level, x.color), g};
      t.graph.edges[e].alive = false;
      return {t};
    }
  }
  return {};
}

std::vector<Term> bubble(const Graph& g) {
  for (std::size_t s = 0; s < g.nodes.size(); ++s) {
    auto& sp = g.nodes[s];
    if (!sp.alive || sp.kind != VertexKind::split) continue;
    int a = sp.outs[0], b = sp.outs[1];
    int m = g.edges[a].to;
    if (a == b || m < 0 || g.edges[b].to != m || m == static_cast<int>(s)) continue;
    auto& mg = g.nodes[m];
    int in = sp.ins[0], out = mg.outs[0];
    Term t{qbinomial(g.edges[in].color, g.edges[a].color), g};
    Surgery op{t.graph, {}};
    op.kill_nodes({static_cast<int>(s), m});
    op.kill_edges({a, b});
    op.join(in, out);
    return {t};
  }
  return {};
}

std::vector<Term> counter_bubble(const Graph& g) {
  for (std::size_t m = 0; m < g.nodes.size(); ++m) {
    auto& mg = g.nodes[m];
    if (!mg.alive || mg.kind != VertexKind::merge) continue;
    int c = mg.outs[0];
    int s = g.edges[c].to;
    if (!live_node(g, s) || g.nodes[s].kind != VertexKind::split || s == static_cast<int>(m)) continue;
    auto& sp = g.nodes[s];
    for (int side = 0; side < 2; ++side) {
      int back = mg.ins[side];
      if (g.edges[back].from != s || back == c) continue;
      if (std::find(sp.outs.begin(), sp.outs.end(), back) == sp.outs.end()) continue;
      int e0 = mg.ins[1 - side];
      int e1 = g.other(sp.outs, back);
      if (e0 == back || e1 == back) continue;
      int i1 = g.edges[e0].color;
      Term t{qbinomial(g.level - i1, g.edges[back].color), g};
      Surgery op{t.graph, {}};
      op.kill_nodes({static_cast<int>(m), s});
      op.kill_edges({c, back});
      op.join(e0, e1);
      return {t};
    }
  }
  return {};
}

// Split (j) -> 1 + (j-1); the 1 merges with an external 1 into a 2, which
// splits into 1 + 1; one of those merges with the j-1 back into a j.
std::vector<Term> square_narrow(const Graph& g) {
  const int n = g.level;
  for (std::size_t v = 0; v < g.nodes.size(); ++v) {
    auto& sv = g.nodes[v];
    if (!sv.alive || sv.kind != VertexKind::split) continue;
    int j = g.edges[sv.ins[0]].color;
    if (j < 2) continue;
    for (int side = 0; side < 2; ++side) {
      int one = sv.outs[side], rest = sv.outs[1 - side];
      if (g.edges[one].color != 1 || g.edges[rest].color != j - 1 || one == rest) continue;
      int m5 = g.edges[one].to, m2 = g.edges[rest].to;
      if (!live_node(g, m5) || !live_node(g, m2) || g.nodes[m5].kind != VertexKind::merge ||
          g.nodes[m2].kind != VertexKind::merge || m5 == m2)
        continue;
      int a3 = g.other(g.nodes[m5].ins, one);
      int a5 = g.nodes[m5].outs[0];
      if (g.edges[a3].color != 1 || g.edges[a5].color != 2) continue;
      int s5 = g.edges[a5].to;
      if (!live_node(g, s5) || g.nodes[s5].kind != VertexKind::split) continue;
      int a6 = g.other(g.nodes[m2].ins, rest);
      if (g.edges[a6].from != s5 || std::find(g.nodes[s5].outs.begin(), g.nodes[s5].outs.end(), a6) ==
                                         g.nodes[s5].outs.end())
        continue;
      int a1 = g.other(g.nodes[s5].outs, a6);
      int a2 = g.nodes[m2].outs[0], a4 = sv.ins[0];
      std::vector<int> quad = {static_cast<int>(v), m5, s5, m2};
      std::sort(quad.begin(), quad.end());
      if (std::adjacent_find(quad.begin(), quad.end()) != quad.end()) continue;
      std::vector<int> inner = {one, rest, a5, a6};
      bool clash = false;
      for (int x : {a1, a2, a3, a4})
        clash = clash || std::find(inner.begin(), inner.end(), x) != inner.end();
      if (clash) continue;

      std::vector<Term> out;
      {
        Term t{QLaurent(1), g};
        Graph& h = t.graph;
        for (int x : quad) h.nodes[x].alive = false;
        for (int x : inner) h.edges[x].alive = false;
        int w = h.add_edge(j + 1, -1, -1);
        int mm = h.add_node(VertexKind::merge, {a3, a4}, {w});
        int ss = h.add_node(VertexKind::split, {w}, {a1, a2});
        // outer ends of the external edges still point at the right nodes
        h.edges[w].from = mm;
        h.edges[w].to = ss;
        out.push_back(std::move(t));
      }
      QLaurent mult;
      for (int i = 1; i <= j - 1; ++i) mult.add(2 * i - j, 1);
      (void)n;
      Term t{mult, g};
      Surgery op{t.graph, {}};
      for (int x : quad) t.graph.nodes[x].alive = false;
      for (int x : inner) t.graph.edges[x].alive = false;
      op.join(a3, a1);
      op.join(a4, a2);
      out.push_back(std::move(t));
      return out;
    }
  }
  return {};
}

// Merge 1 + j -> j+1, split into 1 + j; the 1 merges with an external j into
// a j+1, which splits into 1 + j, and that j feeds the first merge.
std::vector<Term> square_wide(const Graph& g) {
  const int n = g.level;
  for (std::size_t a = 0; a < g.nodes.size(); ++a) {
    auto& m6 = g.nodes[a];
    if (!m6.alive || m6.kind != VertexKind::merge) continue;
    for (int side = 0; side < 2; ++side) {
      int b1 = m6.ins[side], b5 = m6.ins[1 - side];
      if (g.edges[b1].color != 1) continue;
      int j = g.edges[b5].color;
      if (j < 2 || b1 == b5) continue;
      int b6 = m6.outs[0];
      int s6 = g.edges[b6].to;
      if (!live_node(g, s6) || g.nodes[s6].kind != VertexKind::split) continue;
      for (int t6 = 0; t6 < 2; ++t6) {
        int b7 = g.nodes[s6].outs[t6], b2 = g.nodes[s6].outs[1 - t6];
        if (g.edges[b7].color != 1 || g.edges[b2].color != j || b7 == b2) continue;
        int m8 = g.edges[b7].to;
        if (!live_node(g, m8) || g.nodes[m8].kind != VertexKind::merge) continue;
        int b4 = g.other(g.nodes[m8].ins, b7);
        int b8 = g.nodes[m8].outs[0];
        if (g.edges[b4].color != j || b4 == b7) continue;
        int s8 = g.edges[b8].to;
        if (!live_node(g, s8) || g.nodes[s8].kind != VertexKind::split || g.edges[b5].from != s8) continue;
        auto& so = g.nodes[s8].outs;
        if (std::find(so.begin(), so.end(), b5) == so.end()) continue;
        int b3 = g.other(so, b5);
        if (b3 == b5) continue;
        std::vector<int> quad = {static_cast<int>(a), s6, m8, s8};
        std::sort(quad.begin(), quad.end());
        if (std::adjacent_find(quad.begin(), quad.end()) != quad.end()) continue;
        std::vector<int> inner = {b5, b6, b7, b8};
        bool clash = false;
        for (int x : {b1, b2, b3, b4})
          clash = clash || std::find(inner.begin(), inner.end(), x) != inner.end();
        if (clash) continue;

        std::vector<Term> out;
        {
          Term t{QLaurent(1), g};
          Surgery op{t.graph, {}};
          for (int x : quad) t.graph.nodes[x].alive = false;
          for (int x : inner) t.graph.edges[x].alive = false;
          op.join(b1, b3);
          op.join(b4, b2);
          out.push_back(std::move(t));
        }
        QLaurent mult;
        for (int k = 1; k <= n - j - 1; ++k) mult.add(2 * k + j - n, 1);
        if (!mult.is_zero()) {
          Term t{mult, g};
          Graph& h = t.graph;
          for (int x : quad) h.nodes[x].alive = false;
          for (int x : inner) h.edges[x].alive = false;
          int c9 = h.add_edge(j - 1, -1, -1);
          h.add_node(VertexKind::split, {b4}, {b3, c9});
          h.add_node(VertexKind::merge, {b1, c9}, {b2});
          out.push_back(std::move(t));
        }
        return out;
      }
    }
  }
  return {};
}

QLaurent evaluate(const Graph& g, int depth) {
  if (depth > 10000) throw Irreducible("rewriting did not terminate");
  bool empty = std::none_of(g.edges.begin(), g.edges.end(), [](auto& e) { return e.alive; });
  if (empty) return QLaurent(1);
  for (auto rule : {circles, bubble, counter_bubble, square_narrow, square_wide}) {
    auto terms = rule(g);
    if (terms.empty()) continue;
    QLaurent sum;
    for (auto& t : terms) sum += t.coeff * evaluate(t.graph, depth + 1);
    return sum;
  }
  int nodes = static_cast<int>(std::count_if(g.nodes.begin(), g.nodes.end(), [](auto& v) { return v.alive; }));
  throw Irreducible("no rewriting rule applies (" + std::to_string(nodes) + " vertices left)");
}

}  // namespace

QLaurent moy_bracket(const Diagram& d) {
  check_diagram(d, true);
  return evaluate(to_graph(d), 0);
}

}  // namespace moymf
