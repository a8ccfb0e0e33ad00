#include "chordkern/graph.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <set>
#include <sstream>

#include "chordkern/errors.hpp"

namespace chordkern {

Graph::Graph(int vertex_count, std::span<const Edge> edges, std::vector<std::string> labels)
    : adj_(static_cast<std::size_t>(std::max(vertex_count, 0))),
      stride_(static_cast<std::size_t>(std::max(vertex_count, 0))),
      labels_(std::move(labels)) {
  if (vertex_count < 0) throw ContractError("negative vertex count");
  if (!labels_.empty() && labels_.size() != adj_.size()) {
    throw ContractError("label count does not match vertex count");
  }
  bits_.assign((stride_ * stride_ + 63) / 64, 0);
  for (const Edge& e : edges) {
    if (e.u < 0 || e.v >= vertex_count) {
      throw ContractError("edge " + std::to_string(e.u) + "-" + std::to_string(e.v) +
                          " has an id outside 0.." + std::to_string(vertex_count - 1));
    }
    if (e.u == e.v) throw ContractError("self-loop at vertex " + std::to_string(e.u));
    if (adjacent(e.u, e.v)) {
      throw ContractError("repeated edge " + std::to_string(e.u) + "-" + std::to_string(e.v));
    }
    for (auto [a, b] : {std::pair{e.u, e.v}, std::pair{e.v, e.u}}) {
      const auto bit = static_cast<std::size_t>(a) * stride_ + static_cast<std::size_t>(b);
      bits_[bit >> 6] |= std::uint64_t{1} << (bit & 63);
      adj_[a].push_back(b);
    }
    ++edge_count_;
  }
  for (auto& list : adj_) std::sort(list.begin(), list.end());
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < vertex_count(); ++u) {
    for (Vertex v : adj_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

std::string Graph::label(Vertex v) const {
  return labels_.empty() ? std::to_string(v) : labels_[v];
}

Graph Graph::with_labels(std::vector<std::string> labels) const {
  auto e = edges();
  return Graph(vertex_count(), e, std::move(labels));
}

Graph Graph::induced(std::span<const Vertex> keep) const {
  std::vector<int> index(adj_.size(), -1);
  for (std::size_t i = 0; i < keep.size(); ++i) {
    if (keep[i] < 0 || keep[i] >= vertex_count() || index[keep[i]] != -1) {
      throw ContractError("induced(): invalid or repeated vertex");
    }
    index[keep[i]] = static_cast<int>(i);
  }
  std::vector<Edge> e;
  std::vector<std::string> labels;
  labels.reserve(keep.size());
  for (std::size_t i = 0; i < keep.size(); ++i) {
    labels.push_back(label(keep[i]));
    for (Vertex w : adj_[keep[i]]) {
      if (index[w] > static_cast<int>(i)) e.emplace_back(static_cast<Vertex>(i), index[w]);
    }
  }
  return Graph(static_cast<int>(keep.size()), e, std::move(labels));
}

Graph Graph::without(std::span<const Vertex> removed) const {
  std::vector<char> gone(adj_.size(), 0);
  for (Vertex v : removed) gone.at(v) = 1;
  VertexSet keep;
  for (Vertex v = 0; v < vertex_count(); ++v) {
    if (!gone[v]) keep.push_back(v);
  }
  return induced(keep);
}

bool operator==(const Graph& a, const Graph& b) {
  return a.adj_ == b.adj_;
}

bool is_valid_vertex_set(const Graph& g, std::span<const Vertex> s) {
  std::vector<char> seen(static_cast<std::size_t>(g.vertex_count()), 0);
  for (Vertex v : s) {
    if (v < 0 || v >= g.vertex_count() || seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

bool is_clique(const Graph& g, std::span<const Vertex> s) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      if (!g.adjacent(s[i], s[j])) return false;
    }
  }
  return true;
}

VertexSet open_neighborhood(const Graph& g, std::span<const Vertex> s) {
  std::vector<char> mark(static_cast<std::size_t>(g.vertex_count()), 0);
  for (Vertex v : s) mark[v] = 2;
  VertexSet out;
  for (Vertex v : s) {
    for (Vertex w : g.neighbors(v)) {
      if (mark[w] == 0) {
        mark[w] = 1;
        out.push_back(w);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<VertexSet> connected_components(const Graph& g, const std::vector<char>& allowed) {
  const int n = g.vertex_count();
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::vector<VertexSet> out;
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < n; ++s) {
    if (seen[s] || !allowed[s]) continue;
    VertexSet comp;
    seen[s] = 1;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (Vertex w : g.neighbors(v)) {
        if (!seen[w] && allowed[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

std::vector<VertexSet> connected_components(const Graph& g) {
  return connected_components(g, std::vector<char>(static_cast<std::size_t>(g.vertex_count()), 1));
}

std::vector<int> bfs_distances(const Graph& g, Vertex source, const std::vector<char>* allowed) {
  std::vector<int> dist(static_cast<std::size_t>(g.vertex_count()), -1);
  std::deque<Vertex> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    Vertex v = queue.front();
    queue.pop_front();
    for (Vertex w : g.neighbors(v)) {
      if (dist[w] == -1 && (allowed == nullptr || (*allowed)[w])) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

// ---------------------------------------------------------------------------

EditSet::EditSet(EditKind kind, std::vector<Edge> pairs) : kind_(kind), pairs_(std::move(pairs)) {
  std::sort(pairs_.begin(), pairs_.end());
  for (std::size_t i = 0; i < pairs_.size(); ++i) {
    if (pairs_[i].u == pairs_[i].v) {
      throw ContractError("edit pair (" + std::to_string(pairs_[i].u) + "," +
                          std::to_string(pairs_[i].u) + ") is a loop");
    }
    if (i > 0 && pairs_[i] == pairs_[i - 1]) {
      throw ContractError("edit pair " + std::to_string(pairs_[i].u) + "-" +
                          std::to_string(pairs_[i].v) + " repeated");
    }
  }
}

void EditSet::check_against(const Graph& g) const {
  for (const Edge& e : pairs_) {
    if (e.u < 0 || e.v >= g.vertex_count()) {
      throw ContractError("edit pair " + std::to_string(e.u) + "-" + std::to_string(e.v) +
                          " names a vertex outside the graph");
    }
    const bool present = g.adjacent(e.u, e.v);
    if (kind_ == EditKind::completion && present) {
      throw ContractError("completion pair " + std::to_string(e.u) + "-" + std::to_string(e.v) +
                          " is already an edge");
    }
    if (kind_ == EditKind::deletion && !present) {
      throw ContractError("deletion pair " + std::to_string(e.u) + "-" + std::to_string(e.v) +
                          " is not an edge");
    }
  }
}

Graph apply_edits(const Graph& g, const EditSet& f) {
  f.check_against(g);
  const auto& toggles = f.pairs();
  std::vector<Edge> out;
  out.reserve(g.edge_count() + toggles.size());
  for (const Edge& e : g.edges()) {
    if (!std::binary_search(toggles.begin(), toggles.end(), e)) out.push_back(e);
  }
  for (const Edge& e : toggles) {
    if (!g.adjacent(e.u, e.v)) out.push_back(e);
  }
  return Graph(g.vertex_count(), out, g.labels());
}

// ---------------------------------------------------------------------------

JoinComposition join_compose(const Graph& g1, std::span<const Vertex> s1, const Graph& g2,
                             std::span<const Vertex> s2) {
  if (!is_valid_vertex_set(g1, s1) || !is_valid_vertex_set(g2, s2)) {
    throw ContractError("join_compose: designated set contains an invalid or repeated id");
  }
  const int offset = g1.vertex_count();
  std::vector<Edge> e = g1.edges();
  for (const Edge& x : g2.edges()) e.emplace_back(x.u + offset, x.v + offset);
  for (Vertex a : s1) {
    for (Vertex b : s2) e.emplace_back(a, b + offset);
  }
  std::vector<std::string> labels;
  if (g1.has_labels() || g2.has_labels()) {
    for (Vertex v = 0; v < g1.vertex_count(); ++v) labels.push_back(g1.label(v));
    for (Vertex v = 0; v < g2.vertex_count(); ++v) labels.push_back(g2.label(v));
  }
  return {Graph(offset + g2.vertex_count(), e, std::move(labels)), offset};
}

// ---------------------------------------------------------------------------

namespace {

// Splits a line into integer tokens; returns false on any non-integer token.
bool read_ints(std::string_view line, std::vector<long long>& out) {
  out.clear();
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    if (i == line.size()) break;
    std::size_t j = i;
    if (line[j] == '-' || line[j] == '+') ++j;
    std::size_t digits = j;
    while (j < line.size() && line[j] >= '0' && line[j] <= '9') ++j;
    if (j == digits || (j < line.size() && line[j] != ' ' && line[j] != '\t')) return false;
    if (j - digits > 12) return false;
    out.push_back(std::stoll(std::string(line.substr(i, j - i))));
    i = j;
  }
  return true;
}

}  // namespace

Graph parse_graph(std::string_view text) {
  int line_no = 0;
  bool have_header = false;
  long long n = 0;
  long long m = 0;
  std::vector<Edge> edges;
  std::vector<long long> ints;
  std::set<Edge> seen;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    std::size_t first = line.find_first_not_of(" \t");
    if (first == std::string_view::npos) {
      if (end == text.size()) break;
      continue;
    }
    if (line[first] == '#') continue;
    if (!read_ints(line, ints) || ints.size() != 2) {
      throw ParseError(line_no, have_header ? "expected \"u v\"" : "expected header \"n m\"");
    }
    if (!have_header) {
      n = ints[0];
      m = ints[1];
      if (n < 0 || m < 0) throw ParseError(line_no, "negative count in header");
      if (n > 1'000'000) throw ParseError(line_no, "vertex count too large");
      if (m > n * (n - 1) / 2) throw ParseError(line_no, "more edges than vertex pairs");
      have_header = true;
      edges.reserve(static_cast<std::size_t>(m));
      continue;
    }
    if (static_cast<long long>(edges.size()) == m) {
      throw ParseError(line_no, "more edge lines than announced in header");
    }
    const long long u = ints[0];
    const long long v = ints[1];
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw ParseError(line_no, "vertex id out of range 0.." + std::to_string(n - 1));
    }
    if (u == v) throw ParseError(line_no, "self-loop at vertex " + std::to_string(u));
    Edge e(static_cast<Vertex>(u), static_cast<Vertex>(v));
    if (!seen.insert(e).second) {
      throw ParseError(line_no, "duplicate edge " + std::to_string(e.u) + " " + std::to_string(e.v));
    }
    edges.push_back(e);
  }
  if (!have_header) throw ParseError(line_no, "missing header \"n m\"");
  if (static_cast<long long>(edges.size()) != m) {
    throw ParseError(line_no, "expected " + std::to_string(m) + " edges, found " +
                                  std::to_string(edges.size()));
  }
  return Graph(static_cast<int>(n), edges);
}

Graph parse_graph(std::istream& in) {
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_graph(buffer.str());
}

Graph read_graph_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  return parse_graph(in);
}

void write_graph(std::ostream& out, const Graph& g, std::span<const std::string> comments) {
  for (const auto& c : comments) out << "# " << c << '\n';
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

std::string to_edge_list(const Graph& g, std::span<const std::string> comments) {
  std::ostringstream out;
  write_graph(out, g, comments);
  return out.str();
}

}  // namespace chordkern
