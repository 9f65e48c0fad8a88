#include "moymf/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>

namespace moymf {

const Edge& Diagram::edge(const std::string& id) const {
  for (auto& e : edges)
    if (e.id == id) return e;
  throw Error("unknown edge " + id);
}

namespace {

struct Token {
  std::string text;
  int column;
};

std::vector<Token> tokenize(const std::string& line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    if (line[i] == '#') break;
    if (std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j])) && line[j] != '#') ++j;
    out.push_back({line.substr(i, j - i), static_cast<int>(i) + 1});
    i = j;
  }
  return out;
}

bool valid_name(const std::string& s) {
  if (s.empty()) return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' || c == '.';
  });
}

int parse_int(const Token& t, int line) {
  try {
    std::size_t used = 0;
    int v = std::stoi(t.text, &used);
    if (used == t.text.size()) return v;
  } catch (const std::exception&) {
  }
  throw SyntaxError(line, t.column, "expected an integer, got '" + t.text + "'");
}

void expect(const std::vector<Token>& ts, std::size_t i, const char* word, int line) {
  if (i >= ts.size())
    throw SyntaxError(line, ts.empty() ? 1 : ts.back().column, std::string("expected '") + word + "'");
  if (ts[i].text != word)
    throw SyntaxError(line, ts[i].column, std::string("expected '") + word + "', got '" + ts[i].text + "'");
}

std::string name_at(const std::vector<Token>& ts, std::size_t i, int line, const char* what) {
  if (i >= ts.size()) throw SyntaxError(line, ts.empty() ? 1 : ts.back().column, std::string("missing ") + what);
  if (!valid_name(ts[i].text)) throw SyntaxError(line, ts[i].column, std::string("invalid ") + what + " '" + ts[i].text + "'");
  return ts[i].text;
}

Endpoint endpoint_at(const std::vector<Token>& ts, std::size_t i, int line) {
  if (i >= ts.size()) throw SyntaxError(line, ts.empty() ? 1 : ts.back().column, "missing endpoint");
  const std::string& t = ts[i].text;
  const std::string prefix = "boundary:";
  if (t.rfind(prefix, 0) == 0) {
    std::string label = t.substr(prefix.size());
    if (!valid_name(label)) throw SyntaxError(line, ts[i].column, "invalid boundary label '" + label + "'");
    return {true, label};
  }
  return {false, name_at(ts, i, line, "vertex id")};
}

void no_trailing(const std::vector<Token>& ts, std::size_t n, int line) {
  if (ts.size() > n) throw SyntaxError(line, ts[n].column, "unexpected '" + ts[n].text + "'");
}

}  // namespace

Diagram parse_diagram(std::string_view text, const DiagramOptions& opt) {
  Diagram d;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  bool have_level = false;
  while (std::getline(in, line)) {
    ++lineno;
    auto ts = tokenize(line);
    if (ts.empty()) continue;
    const std::string& kw = ts[0].text;
    if (kw == "level") {
      std::size_t i = 1;
      if (i < ts.size() && ts[i].text == "n") ++i;
      if (i >= ts.size()) throw SyntaxError(lineno, ts.back().column, "missing level value");
      d.level = parse_int(ts[i], lineno);
      if (d.level < 1) throw SyntaxError(lineno, ts[i].column, "level must be positive");
      no_trailing(ts, i + 1, lineno);
      have_level = true;
    } else if (kw == "edge") {
      Edge e;
      e.id = name_at(ts, 1, lineno, "edge id");
      expect(ts, 2, "color", lineno);
      if (ts.size() < 4) throw SyntaxError(lineno, ts.back().column, "missing color value");
      e.color = parse_int(ts[3], lineno);
      if (e.color < 1) throw SyntaxError(lineno, ts[3].column, "color must be positive");
      expect(ts, 4, "from", lineno);
      e.tail = endpoint_at(ts, 5, lineno);
      expect(ts, 6, "to", lineno);
      e.head = endpoint_at(ts, 7, lineno);
      no_trailing(ts, 8, lineno);
      d.edges.push_back(e);
    } else if (kw == "vertex") {
      Vertex v;
      v.id = name_at(ts, 1, lineno, "vertex id");
      if (ts.size() < 3) throw SyntaxError(lineno, ts.back().column, "missing vertex kind");
      expect(ts, 3, "in", lineno);
      if (ts[2].text == "merge") {
        v.kind = VertexKind::merge;
        v.ins = {name_at(ts, 4, lineno, "edge id"), name_at(ts, 5, lineno, "edge id")};
        expect(ts, 6, "out", lineno);
        v.outs = {name_at(ts, 7, lineno, "edge id")};
      } else if (ts[2].text == "split") {
        v.kind = VertexKind::split;
        v.ins = {name_at(ts, 4, lineno, "edge id")};
        expect(ts, 5, "out", lineno);
        v.outs = {name_at(ts, 6, lineno, "edge id"), name_at(ts, 7, lineno, "edge id")};
      } else {
        throw SyntaxError(lineno, ts[2].column, "vertex kind must be merge or split");
      }
      no_trailing(ts, 8, lineno);
      d.vertices.push_back(v);
    } else {
      throw SyntaxError(lineno, ts[0].column, "unknown directive '" + kw + "'");
    }
  }
  if (opt.level) d.level = *opt.level;
  else if (!have_level) throw SyntaxError(lineno + 1, 1, "missing 'level n <int>' line");
  check_diagram(d, opt.allow_large_colors);
  return d;
}

std::string render(const Diagram& d) {
  std::ostringstream os;
  auto ep = [](const Endpoint& e) { return e.boundary ? "boundary:" + e.name : e.name; };
  os << "level n " << d.level << "\n";
  for (auto& e : d.edges)
    os << "edge " << e.id << " color " << e.color << " from " << ep(e.tail) << " to " << ep(e.head) << "\n";
  for (auto& v : d.vertices) {
    if (v.kind == VertexKind::merge)
      os << "vertex " << v.id << " merge in " << v.ins[0] << " " << v.ins[1] << " out " << v.outs[0] << "\n";
    else
      os << "vertex " << v.id << " split in " << v.ins[0] << " out " << v.outs[0] << " " << v.outs[1] << "\n";
  }
  return os.str();
}

void check_diagram(const Diagram& d, bool allow_large_colors) {
  if (d.level < 1) throw Error("level must be positive");
  std::map<std::string, const Edge*> edges;
  for (auto& e : d.edges) {
    if (!edges.emplace(e.id, &e).second) throw Error("duplicate edge id " + e.id);
    if (e.color < 1) throw ColorConstraintViolation("edge " + e.id + " has a non-positive color");
    if (e.color > d.level && !allow_large_colors)
      throw ColorConstraintViolation("edge " + e.id + " has color " + std::to_string(e.color) + " above level " +
                                     std::to_string(d.level));
  }
  std::map<std::string, const Vertex*> vertices;
  for (auto& v : d.vertices)
    if (!vertices.emplace(v.id, &v).second) throw Error("duplicate vertex id " + v.id);

  std::map<std::pair<std::string, bool>, std::string> slot_of;  // (edge, is_head) -> vertex
  for (auto& v : d.vertices) {
    auto need = [&](const std::string& eid) -> const Edge& {
      auto it = edges.find(eid);
      if (it == edges.end()) throw Error("vertex " + v.id + " refers to unknown edge " + eid);
      return *it->second;
    };
    for (auto& eid : v.ins) {
      const Edge& e = need(eid);
      if (e.head.boundary || e.head.name != v.id)
        throw Error("edge " + eid + " is an input of vertex " + v.id + " but does not end there");
      if (!slot_of.emplace(std::make_pair(eid, true), v.id).second) throw Error("edge " + eid + " ends twice");
    }
    for (auto& eid : v.outs) {
      const Edge& e = need(eid);
      if (e.tail.boundary || e.tail.name != v.id)
        throw Error("edge " + eid + " is an output of vertex " + v.id + " but does not start there");
      if (!slot_of.emplace(std::make_pair(eid, false), v.id).second) throw Error("edge " + eid + " starts twice");
    }
    const auto& wide = v.kind == VertexKind::merge ? v.outs : v.ins;
    const auto& thin = v.kind == VertexKind::merge ? v.ins : v.outs;
    int w = need(wide[0]).color, a = need(thin[0]).color, b = need(thin[1]).color;
    if (w != a + b)
      throw ColorConstraintViolation("vertex " + v.id + ": colors " + std::to_string(a) + " + " + std::to_string(b) +
                                     " do not add up to " + std::to_string(w));
    if (w > d.level && !allow_large_colors)
      throw ColorConstraintViolation("vertex " + v.id + ": color " + std::to_string(w) + " exceeds level " +
                                     std::to_string(d.level));
  }
  std::map<std::string, int> head_color, tail_color;
  for (auto& e : d.edges) {
    for (bool is_head : {false, true}) {
      const Endpoint& p = is_head ? e.head : e.tail;
      if (p.boundary) {
        auto& uses = is_head ? head_color : tail_color;
        if (!uses.emplace(p.name, e.color).second)
          throw Error("boundary label " + p.name + " is used twice as " + (is_head ? "a head" : "a tail"));
      } else {
        if (!vertices.count(p.name)) throw Error("edge " + e.id + " refers to unknown vertex " + p.name);
        if (!slot_of.count({e.id, is_head}))
          throw Error("edge " + e.id + " is not listed at vertex " + p.name);
      }
    }
  }
  for (auto& [label, c] : head_color) {
    auto it = tail_color.find(label);
    if (it != tail_color.end() && it->second != c)
      throw ColorConstraintViolation("boundary label " + label + " glues colors " + std::to_string(c) + " and " +
                                     std::to_string(it->second));
  }
}

std::vector<BoundaryEnd> boundary_ends(const Diagram& d) {
  std::map<std::string, int> heads, tails;
  for (auto& e : d.edges) {
    if (e.head.boundary) ++heads[e.head.name];
    if (e.tail.boundary) ++tails[e.tail.name];
  }
  std::vector<BoundaryEnd> out;
  for (auto& e : d.edges) {
    if (e.tail.boundary && !heads.count(e.tail.name)) out.push_back({e.tail.name, e.id, e.color, false});
    if (e.head.boundary && !tails.count(e.head.name)) out.push_back({e.head.name, e.id, e.color, true});
  }
  return out;
}

bool is_closed(const Diagram& d) { return boundary_ends(d).empty(); }

std::vector<VarId> CompiledDiagram::internal_vars() const {
  std::vector<VarId> v;
  for (auto& a : internal) v.insert(v.end(), a.vars.begin(), a.vars.end());
  return v;
}

std::vector<VarId> CompiledDiagram::external_vars() const {
  std::vector<VarId> v;
  for (auto* side : {&inputs, &outputs})
    for (auto& a : *side) v.insert(v.end(), a.vars.begin(), a.vars.end());
  return v;
}

CompiledDiagram compile(const Diagram& d, const std::string& internal_prefix) {
  check_diagram(d, true);
  const int n = d.level;
  const int pd = 2 * n + 2;
  std::map<std::string, Alphabet> alphabets;
  auto alphabet = [&](const std::string& key, int color) -> const Alphabet& {
    auto it = alphabets.find(key);
    if (it == alphabets.end()) it = alphabets.emplace(key, make_alphabet(color, key)).first;
    return it->second;
  };
  auto at = [&](const Edge& e, bool head) -> const Alphabet& {
    if (e.tail.boundary && e.head.boundary) return alphabet(head ? e.head.name : e.tail.name, e.color);
    if (e.tail.boundary) return alphabet(e.tail.name, e.color);
    if (e.head.boundary) return alphabet(e.head.name, e.color);
    return alphabet(internal_prefix + "@" + e.id, e.color);
  };
  auto by_id = [&](const std::string& id) -> const Edge& { return d.edge(id); };

  CompiledDiagram out;
  KoszulMF& k = out.mf;
  k.potential_degree = pd;
  for (auto& e : d.edges) {
    if (!(e.tail.boundary && e.head.boundary)) continue;
    const Alphabet& hi = at(e, true);
    const Alphabet& lo = at(e, false);
    for (int j = 1; j <= e.color; ++j)
      k.rows.push_back(make_row(line_entry(j, n, hi, lo), hi.x(j) - lo.x(j), pd - 2 * j, 2 * j));
  }
  for (auto& v : d.vertices) {
    if (v.kind == VertexKind::merge) {
      const Alphabet& a = at(by_id(v.ins[0]), true);
      const Alphabet& b = at(by_id(v.ins[1]), true);
      const Alphabet& c = at(by_id(v.outs[0]), false);
      for (int j = 1; j <= c.color; ++j)
        k.rows.push_back(make_row(merge_entry(j, n, a, b, c), c.x(j) - product_term(j, a, b), pd - 2 * j, 2 * j));
    } else {
      const Alphabet& c = at(by_id(v.ins[0]), true);
      const Alphabet& a = at(by_id(v.outs[0]), false);
      const Alphabet& b = at(by_id(v.outs[1]), false);
      for (int j = 1; j <= c.color; ++j)
        k.rows.push_back(make_row(split_entry(j, n, a, b, c), product_term(j, a, b) - c.x(j), pd - 2 * j, 2 * j));
      k.shift -= a.color * b.color;
    }
  }
  // every edge contributes its alphabets even without rows (an isolated edge is impossible, but keep it total)
  for (auto& e : d.edges) {
    at(e, true);
    at(e, false);
  }

  std::set<std::string> external;
  for (auto& be : boundary_ends(d)) {
    external.insert(be.label);
    (be.out ? out.outputs : out.inputs).push_back(alphabets.at(be.label));
  }
  std::vector<VarId> vars;
  for (auto& [key, a] : alphabets) {
    vars.insert(vars.end(), a.vars.begin(), a.vars.end());
    if (!external.count(key)) out.internal.push_back(a);
  }
  k.base = polynomial_base(vars);
  return out;
}

Poly boundary_potential(const Diagram& d) {
  Poly w;
  for (auto& be : boundary_ends(d)) {
    Poly f = power_sum(d.level, make_alphabet(be.color, be.label));
    w += be.out ? f : -f;
  }
  return w;
}

namespace {

Diagram random_attempt(std::mt19937_64& rng, int level, int max_color, int max_vertices, bool close) {
  const int cap = std::min(level, max_color);
  auto uniform = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  Diagram d;
  d.level = level;
  struct Strand {
    std::size_t edge;
  };
  std::vector<Strand> open;
  int next_edge = 0, next_vertex = 0, next_in = 0, next_out = 0;
  auto new_edge = [&](int color, Endpoint tail) {
    d.edges.push_back({"e" + std::to_string(++next_edge), color, tail, {}});
    return d.edges.size() - 1;
  };
  int inputs = uniform(1, 2);
  for (int i = 0; i < inputs; ++i) open.push_back({new_edge(uniform(1, cap), {true, "in" + std::to_string(++next_in)})});

  int steps = uniform(1, std::max(1, max_vertices));
  for (int s = 0; s < steps; ++s) {
    std::vector<std::size_t> splittable;
    std::vector<std::pair<std::size_t, std::size_t>> mergeable;
    for (std::size_t i = 0; i < open.size(); ++i) {
      if (d.edges[open[i].edge].color >= 2) splittable.push_back(i);
      for (std::size_t j = i + 1; j < open.size(); ++j)
        if (d.edges[open[i].edge].color + d.edges[open[j].edge].color <= cap) mergeable.push_back({i, j});
    }
    bool do_merge = !mergeable.empty() && (splittable.empty() || uniform(0, 1) == 1);
    if (!do_merge && splittable.empty()) break;
    std::string vid = "v" + std::to_string(++next_vertex);
    if (do_merge) {
      auto [i, j] = mergeable[uniform(0, static_cast<int>(mergeable.size()) - 1)];
      auto ei = open[i].edge, ej = open[j].edge;
      d.edges[ei].head = {false, vid};
      d.edges[ej].head = {false, vid};
      auto eo = new_edge(d.edges[ei].color + d.edges[ej].color, {false, vid});
      d.vertices.push_back({vid, VertexKind::merge, {d.edges[ei].id, d.edges[ej].id}, {d.edges[eo].id}});
      open.erase(open.begin() + static_cast<long>(j));
      open[i] = {eo};
    } else {
      auto i = splittable[uniform(0, static_cast<int>(splittable.size()) - 1)];
      auto ei = open[i].edge;
      int c = d.edges[ei].color, c1 = uniform(1, c - 1);
      d.edges[ei].head = {false, vid};
      auto e1 = new_edge(c1, {false, vid});
      auto e2 = new_edge(c - c1, {false, vid});
      d.vertices.push_back({vid, VertexKind::split, {d.edges[ei].id}, {d.edges[e1].id, d.edges[e2].id}});
      open[i] = {e1};
      open.push_back({e2});
    }
  }
  std::vector<std::string> free_inputs;
  for (auto& e : d.edges)
    if (e.tail.boundary) free_inputs.push_back(e.tail.name);
  for (auto& st : open) {
    Edge& e = d.edges[st.edge];
    std::string label;
    if (close) {
      for (auto it = free_inputs.begin(); it != free_inputs.end(); ++it) {
        const Edge* src = nullptr;
        for (auto& f : d.edges)
          if (f.tail.boundary && f.tail.name == *it) src = &f;
        if (src && src->color == e.color) {
          label = *it;
          free_inputs.erase(it);
          break;
        }
      }
    }
    if (label.empty()) label = "out" + std::to_string(++next_out);
    e.head = {true, label};
  }
  check_diagram(d);
  return d;
}

}  // namespace

// Closed requests are redrawn until every open end finds an input of its color.
Diagram random_diagram(std::mt19937_64& rng, int level, int max_color, int max_vertices, bool close) {
  for (;;) {
    Diagram d = random_attempt(rng, level, max_color, max_vertices, close);
    if (!close || is_closed(d)) return d;
  }
}

}  // namespace moymf
