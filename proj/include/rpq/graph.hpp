#pragma once

// Edge-labeled directed graph model, paths, and the searches every
// algorithm in this library builds on.

#include <algorithm>
#include <array>
#include <cassert>
#include <compare>
#include <cstdint>
#include <deque>
#include <istream>
#include <limits>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace rpq {

using NodeId = uint32_t;
using LabelId = uint32_t;
inline constexpr uint32_t kNone = std::numeric_limits<uint32_t>::max();
inline constexpr uint32_t kInf = std::numeric_limits<uint32_t>::max();

struct Edge {
  NodeId src;
  LabelId label;
  NodeId dst;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Node and label ids are indexes into name tables sorted lexicographically,
// so integer comparison of ids coincides with lexicographic comparison of
// names. Every radix order in the library relies on this.
class Graph {
 public:
  Graph() = default;

  static Graph from_edges(const std::vector<std::array<std::string, 3>>& triples,
                          const std::vector<std::string>& extra_nodes = {}) {
    Graph g;
    std::set<std::string> nodes(extra_nodes.begin(), extra_nodes.end());
    std::set<std::string> labels;
    for (const auto& t : triples) {
      check_token(t[0]);
      check_token(t[1]);
      check_token(t[2]);
      nodes.insert(t[0]);
      nodes.insert(t[2]);
      labels.insert(t[1]);
    }
    g.node_names_.assign(nodes.begin(), nodes.end());
    g.label_names_.assign(labels.begin(), labels.end());
    for (NodeId i = 0; i < g.node_names_.size(); ++i) g.node_ix_[g.node_names_[i]] = i;
    for (LabelId i = 0; i < g.label_names_.size(); ++i) g.label_ix_[g.label_names_[i]] = i;
    std::set<Edge> edges;
    for (const auto& t : triples)
      edges.insert(Edge{g.node_ix_.at(t[0]), g.label_ix_.at(t[1]), g.node_ix_.at(t[2])});
    g.edges_.assign(edges.begin(), edges.end());
    g.out_.resize(g.node_names_.size());
    g.in_.resize(g.node_names_.size());
    for (uint32_t i = 0; i < g.edges_.size(); ++i) {
      g.out_[g.edges_[i].src].push_back(i);
      g.in_[g.edges_[i].dst].push_back(i);
    }
    return g;
  }

  // One edge per line, `src<TAB>label<TAB>dst`. Lines starting with `#` are
  // ignored; a line with a single token declares an isolated node.
  static Graph read_tsv(std::istream& in) {
    std::vector<std::array<std::string, 3>> triples;
    std::vector<std::string> isolated;
    std::string line;
    size_t lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.empty() || line[0] == '#') continue;
      std::vector<std::string> fields;
      size_t pos = 0;
      while (true) {
        size_t tab = line.find('\t', pos);
        fields.push_back(line.substr(pos, tab == std::string::npos ? tab : tab - pos));
        if (tab == std::string::npos) break;
        pos = tab + 1;
      }
      if (fields.size() == 1) {
        isolated.push_back(fields[0]);
      } else if (fields.size() == 3) {
        triples.push_back({fields[0], fields[1], fields[2]});
      } else {
        throw std::runtime_error("graph tsv: line " + std::to_string(lineno) +
                                 ": expected 1 or 3 tab-separated fields");
      }
    }
    return from_edges(triples, isolated);
  }

  void write_tsv(std::ostream& out) const {
    std::vector<char> mentioned(node_count(), 0);
    for (const Edge& e : edges_) {
      out << node_names_[e.src] << '\t' << label_names_[e.label] << '\t'
          << node_names_[e.dst] << '\n';
      mentioned[e.src] = mentioned[e.dst] = 1;
    }
    for (NodeId v = 0; v < node_count(); ++v)
      if (!mentioned[v]) out << node_names_[v] << '\n';
  }

  size_t node_count() const { return node_names_.size(); }
  size_t edge_count() const { return edges_.size(); }
  size_t size() const { return node_count() + edge_count(); }

  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(uint32_t i) const { return edges_[i]; }
  const std::vector<uint32_t>& out_edges(NodeId v) const { return out_[v]; }
  const std::vector<uint32_t>& in_edges(NodeId v) const { return in_[v]; }

  const std::string& node_name(NodeId v) const { return node_names_[v]; }
  const std::string& label_name(LabelId l) const { return label_names_[l]; }
  const std::vector<std::string>& node_names() const { return node_names_; }
  const std::vector<std::string>& label_names() const { return label_names_; }

  std::optional<NodeId> find_node(const std::string& name) const {
    auto it = node_ix_.find(name);
    if (it == node_ix_.end()) return std::nullopt;
    return it->second;
  }
  std::optional<LabelId> find_label(const std::string& name) const {
    auto it = label_ix_.find(name);
    if (it == label_ix_.end()) return std::nullopt;
    return it->second;
  }
  NodeId node(const std::string& name) const {
    auto v = find_node(name);
    if (!v) throw std::out_of_range("unknown node: " + name);
    return *v;
  }

  bool has_edge(const Edge& e) const {
    return std::binary_search(edges_.begin(), edges_.end(), e);
  }

  // Same node set, every edge flipped. Node and label tables are unchanged,
  // so ids remain valid across the reversal.
  Graph reversed() const {
    Graph g = *this;
    for (Edge& e : g.edges_) std::swap(e.src, e.dst);
    std::sort(g.edges_.begin(), g.edges_.end());
    for (auto& v : g.out_) v.clear();
    for (auto& v : g.in_) v.clear();
    for (uint32_t i = 0; i < g.edges_.size(); ++i) {
      g.out_[g.edges_[i].src].push_back(i);
      g.in_[g.edges_[i].dst].push_back(i);
    }
    return g;
  }

 private:
  static void check_token(const std::string& s) {
    if (s.empty() || s.find('\t') != std::string::npos)
      throw std::runtime_error("graph token must be non-empty and tab-free: '" + s + "'");
  }

  std::vector<std::string> node_names_;
  std::vector<std::string> label_names_;
  std::vector<Edge> edges_;
  std::vector<std::vector<uint32_t>> out_, in_;
  std::unordered_map<std::string, NodeId> node_ix_;
  std::unordered_map<std::string, LabelId> label_ix_;
};

struct PointedGraph {
  Graph graph;
  NodeId source = kNone;
  NodeId target = kNone;

  PointedGraph() = default;
  PointedGraph(Graph g, NodeId s, NodeId t) : graph(std::move(g)), source(s), target(t) {}
  PointedGraph(Graph g, const std::string& s, const std::string& t) : graph(std::move(g)) {
    source = graph.node(s);
    target = graph.node(t);
  }
};

// A sequence of adjacent labeled edges. A zero-length path is a single
// designated node with the empty word. Two paths are equal iff they are the
// same edge sequence (and the same node, when zero-length). operator< is
// radix order: length first, then lexicographic on the edge triples.
class Path {
 public:
  explicit Path(NodeId at) : anchor_(at) {}
  explicit Path(std::vector<Edge> edges) : anchor_(kNone), edges_(std::move(edges)) {
    if (edges_.empty()) throw std::invalid_argument("empty edge list; use Path(node)");
    anchor_ = edges_[0].src;
    for (size_t i = 1; i < edges_.size(); ++i)
      if (edges_[i - 1].dst != edges_[i].src)
        throw std::invalid_argument("edges do not chain");
  }

  size_t length() const { return edges_.size(); }
  NodeId source() const { return anchor_; }
  NodeId target() const { return edges_.empty() ? anchor_ : edges_.back().dst; }
  const std::vector<Edge>& edges() const { return edges_; }

  NodeId node_at(size_t i) const {
    assert(i <= edges_.size());
    return i == 0 ? anchor_ : edges_[i - 1].dst;
  }

  std::vector<NodeId> nodes() const {
    std::vector<NodeId> ns;
    ns.reserve(edges_.size() + 1);
    ns.push_back(anchor_);
    for (const Edge& e : edges_) ns.push_back(e.dst);
    return ns;
  }

  std::vector<LabelId> word() const {
    std::vector<LabelId> w;
    w.reserve(edges_.size());
    for (const Edge& e : edges_) w.push_back(e.label);
    return w;
  }

  std::vector<std::string> word_names(const Graph& g) const {
    std::vector<std::string> w;
    w.reserve(edges_.size());
    for (const Edge& e : edges_) w.push_back(g.label_name(e.label));
    return w;
  }

  bool is_simple() const {
    std::set<NodeId> seen{anchor_};
    for (const Edge& e : edges_)
      if (!seen.insert(e.dst).second) return false;
    return true;
  }

  bool is_trail() const {
    std::set<Edge> seen;
    for (const Edge& e : edges_)
      if (!seen.insert(e).second) return false;
    return true;
  }

  Path subpath(size_t i, size_t j) const {
    if (i > j || j > edges_.size()) throw std::out_of_range("subpath index");
    if (i == j) return Path(node_at(i));
    return Path(std::vector<Edge>(edges_.begin() + i, edges_.begin() + j));
  }

  std::string to_string(const Graph& g) const {
    std::ostringstream os;
    os << g.node_name(anchor_);
    for (const Edge& e : edges_)
      os << " -" << g.label_name(e.label) << "-> " << g.node_name(e.dst);
    return os.str();
  }

  friend bool operator==(const Path& a, const Path& b) {
    return a.anchor_ == b.anchor_ && a.edges_ == b.edges_;
  }
  // Radix order.
  friend bool operator<(const Path& a, const Path& b) {
    if (a.edges_.size() != b.edges_.size()) return a.edges_.size() < b.edges_.size();
    if (a.edges_ != b.edges_) return a.edges_ < b.edges_;
    return a.anchor_ < b.anchor_;
  }

 private:
  NodeId anchor_;
  std::vector<Edge> edges_;
};

inline Path concat(const Path& p1, const Path& p2) {
  if (p1.target() != p2.source())
    throw std::invalid_argument("concat: endpoint mismatch");
  if (p1.length() == 0) return p2;
  if (p2.length() == 0) return p1;
  std::vector<Edge> es = p1.edges();
  es.insert(es.end(), p2.edges().begin(), p2.edges().end());
  return Path(std::move(es));
}

// A subgraph view: nodes/edges/labels removed from an immutable Graph.
// Endpoint nodes a search was asked about are always traversable.
struct Restriction {
  std::vector<char> node_ok;    // empty = all nodes allowed
  std::set<Edge> banned_edges;  // exact triples
  std::vector<char> label_ok;   // empty = all labels allowed

  bool allows_node(NodeId v) const { return node_ok.empty() || node_ok[v]; }
  bool allows_label(LabelId l) const { return label_ok.empty() || label_ok[l]; }
  bool allows_edge(const Edge& e) const {
    return allows_node(e.src) && allows_node(e.dst) && allows_label(e.label) &&
           (banned_edges.empty() || !banned_edges.count(e));
  }

  static Restriction all(const Graph&) { return Restriction{}; }

  Restriction& forbid_node(const Graph& g, NodeId v) {
    if (node_ok.empty()) node_ok.assign(g.node_count(), 1);
    node_ok[v] = 0;
    return *this;
  }
  Restriction& keep_only_label(const Graph& g, LabelId l) {
    label_ok.assign(g.label_names().size(), 0);
    label_ok[l] = 1;
    return *this;
  }
};

// Hop distances from every node to `to` within the restriction.
inline std::vector<uint32_t> dist_to_target(const Graph& g, NodeId to,
                                            const Restriction& r) {
  std::vector<uint32_t> dist(g.node_count(), kInf);
  std::deque<NodeId> q;
  dist[to] = 0;
  q.push_back(to);
  while (!q.empty()) {
    NodeId v = q.front();
    q.pop_front();
    for (uint32_t ei : g.in_edges(v)) {
      const Edge& e = g.edge(ei);
      if (!r.allows_label(e.label)) continue;
      if (!r.banned_edges.empty() && r.banned_edges.count(e)) continue;
      if (v != to && !r.allows_node(v)) continue;  // cannot pass through v
      if (dist[e.src] != kInf) continue;
      if (e.src != to && !r.allows_node(e.src)) continue;  // frontier must be enterable
      dist[e.src] = dist[v] + 1;
      q.push_back(e.src);
    }
  }
  return dist;
}

// Minimum-length path from `from` to `to` avoiding forbidden nodes (the
// endpoints are always allowed) and forbidden edges. Ties are broken to the
// radix-smallest edge sequence. Absence is a value.
inline std::optional<Path> shortest_path(const Graph& g, NodeId from, NodeId to,
                                         const Restriction& restr) {
  Restriction r = restr;
  if (!r.node_ok.empty()) {
    r.node_ok[from] = 1;
    r.node_ok[to] = 1;
  }
  // Backward BFS distances, then greedy forward choosing the smallest edge
  // that makes progress; the result is the lexicographically smallest among
  // the shortest edge sequences.
  std::vector<uint32_t> dist = dist_to_target(g, to, r);
  if (dist[from] == kInf) return std::nullopt;
  if (from == to) return Path(from);
  std::vector<Edge> out;
  NodeId v = from;
  while (v != to) {
    const uint32_t need = dist[v] - 1;
    bool advanced = false;
    for (uint32_t ei : g.out_edges(v)) {  // sorted by (label, dst)
      const Edge& e = g.edge(ei);
      if (!r.allows_edge(e)) continue;
      if (dist[e.dst] != need) continue;
      out.push_back(e);
      v = e.dst;
      advanced = true;
      break;
    }
    if (!advanced) return std::nullopt;
  }
  return Path(std::move(out));
}

inline std::optional<Path> shortest_path(const Graph& g, NodeId from, NodeId to,
                                         const std::set<NodeId>& forbidden_nodes = {},
                                         const std::set<Edge>& forbidden_edges = {}) {
  Restriction r;
  if (!forbidden_nodes.empty()) {
    r.node_ok.assign(g.node_count(), 1);
    for (NodeId v : forbidden_nodes) r.node_ok[v] = 0;
  }
  r.banned_edges = forbidden_edges;
  return shortest_path(g, from, to, r);
}

inline bool reachable(const Graph& g, NodeId from, NodeId to, const Restriction& restr) {
  Restriction r = restr;
  if (!r.node_ok.empty()) {
    r.node_ok[from] = 1;
    r.node_ok[to] = 1;
  }
  if (from == to) return true;
  std::vector<char> seen(g.node_count(), 0);
  std::deque<NodeId> q{from};
  seen[from] = 1;
  while (!q.empty()) {
    NodeId v = q.front();
    q.pop_front();
    for (uint32_t ei : g.out_edges(v)) {
      const Edge& e = g.edge(ei);
      if (seen[e.dst]) continue;
      if (!r.allows_label(e.label)) continue;
      if (!r.banned_edges.empty() && r.banned_edges.count(e)) continue;
      if (e.dst != to && !r.allows_node(e.dst)) continue;
      if (e.dst == to) return true;
      seen[e.dst] = 1;
      q.push_back(e.dst);
    }
  }
  return false;
}

}  // namespace rpq
