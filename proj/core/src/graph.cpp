#include "timcolor/graph.hpp"

#include <algorithm>
#include <deque>
#include <ostream>
#include <set>

namespace timcolor {

namespace {

Bitset singleton(std::size_t size, std::size_t bit) {
  Bitset b(size);
  b.set(bit);
  return b;
}

}  // namespace

Graph::Graph(std::size_t n)
    : live_(n), live_count_(n), original_bound_(static_cast<std::uint32_t>(n)),
      next_id_(static_cast<std::uint32_t>(n)) {
  slot_ids_.reserve(n);
  adj_.assign(n, Bitset(n));
  prov_.reserve(n);
  slot_of_id_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    slot_ids_.emplace_back(static_cast<std::uint32_t>(i));
    prov_.push_back(singleton(n, i));
    slot_of_id_[i] = static_cast<std::int32_t>(i);
  }
  live_.set();
}

std::size_t Graph::edge_count() const {
  std::size_t twice = 0;
  for (auto s = live_.find_first(); s != Bitset::npos; s = live_.find_next(s)) {
    twice += adj_[s].count();
  }
  return twice / 2;
}

std::vector<VertexId> Graph::vertices() const {
  std::vector<VertexId> out;
  out.reserve(live_count_);
  for (auto s = live_.find_first(); s != Bitset::npos; s = live_.find_next(s)) {
    out.push_back(slot_ids_[s]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (auto s = live_.find_first(); s != Bitset::npos; s = live_.find_next(s)) {
    const auto& row = adj_[s];
    for (auto t = row.find_next(s); t != Bitset::npos; t = row.find_next(t)) {
      auto a = slot_ids_[s];
      auto b = slot_ids_[t];
      out.emplace_back(std::min(a, b), std::max(a, b));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool Graph::contains(VertexId v) const {
  return v.value < slot_of_id_.size() && slot_of_id_[v.value] >= 0;
}

std::size_t Graph::slot_of(VertexId v) const {
  check_live(v, "slot lookup");
  return static_cast<std::size_t>(slot_of_id_[v.value]);
}

void Graph::check_live(VertexId v, const char* what) const {
  if (!contains(v)) {
    throw GraphError(std::string(what) + ": unknown vertex " + to_string(v));
  }
}

bool Graph::adjacent(VertexId a, VertexId b) const {
  return adj_[slot_of(a)].test(slot_of(b));
}

std::size_t Graph::degree(VertexId v) const { return adj_[slot_of(v)].count(); }

std::vector<VertexId> Graph::neighbors(VertexId v) const {
  const auto& row = adj_[slot_of(v)];
  std::vector<VertexId> out;
  for (auto t = row.find_first(); t != Bitset::npos; t = row.find_next(t)) {
    out.push_back(slot_ids_[t]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<VertexId> Graph::provenance(VertexId v) const {
  const auto& p = prov_[slot_of(v)];
  std::vector<VertexId> out;
  for (auto o = p.find_first(); o != Bitset::npos; o = p.find_next(o)) {
    out.emplace_back(static_cast<std::uint32_t>(o));
  }
  return out;
}

const Bitset& Graph::provenance_bits(VertexId v) const { return prov_[slot_of(v)]; }

std::optional<VertexId> Graph::holder_of(VertexId original) const {
  if (original.value >= original_bound_) return std::nullopt;
  for (auto s = live_.find_first(); s != Bitset::npos; s = live_.find_next(s)) {
    if (prov_[s].test(original.value)) return slot_ids_[s];
  }
  return std::nullopt;
}

void Graph::add_edge(VertexId a, VertexId b) {
  check_live(a, "add_edge");
  check_live(b, "add_edge");
  if (a == b) throw GraphError("add_edge: self-loop on " + to_string(a));
  auto sa = slot_of(a);
  auto sb = slot_of(b);
  if (adj_[sa].test(sb)) {
    throw GraphError("add_edge: edge (" + to_string(a) + "," + to_string(b) +
                     ") already present");
  }
  adj_[sa].set(sb);
  adj_[sb].set(sa);
}

void Graph::remove_edge(VertexId a, VertexId b) {
  check_live(a, "remove_edge");
  check_live(b, "remove_edge");
  auto sa = slot_of(a);
  auto sb = slot_of(b);
  if (a == b || !adj_[sa].test(sb)) {
    throw GraphError("remove_edge: edge (" + to_string(a) + "," + to_string(b) +
                     ") absent");
  }
  adj_[sa].reset(sb);
  adj_[sb].reset(sa);
}

VertexId Graph::merge(VertexId a, VertexId b) {
  check_live(a, "merge");
  check_live(b, "merge");
  if (a == b) throw GraphError("merge: identical vertices");
  auto sa = slot_of(a);
  auto sb = slot_of(b);

  Bitset nbrs = adj_[sa] | adj_[sb];
  nbrs.reset(sa);
  nbrs.reset(sb);

  for (auto t = adj_[sb].find_first(); t != Bitset::npos; t = adj_[sb].find_next(t)) {
    adj_[t].reset(sb);
  }
  adj_[sb].reset();
  live_.reset(sb);
  prov_[sa] |= prov_[sb];
  prov_[sb].reset();

  adj_[sa] = nbrs;
  for (auto t = nbrs.find_first(); t != Bitset::npos; t = nbrs.find_next(t)) {
    adj_[t].set(sa);
  }

  VertexId z(next_id_++);
  slot_of_id_[a.value] = -1;
  slot_of_id_[b.value] = -1;
  slot_of_id_.push_back(static_cast<std::int32_t>(sa));
  slot_ids_[sa] = z;
  --live_count_;
  return z;
}

void Graph::remove_vertex(VertexId v) {
  auto s = slot_of(v);
  for (auto t = adj_[s].find_first(); t != Bitset::npos; t = adj_[s].find_next(t)) {
    adj_[t].reset(s);
  }
  adj_[s].reset();
  live_.reset(s);
  slot_of_id_[v.value] = -1;
  --live_count_;
}

bool Graph::is_complete() const {
  for (auto s = live_.find_first(); s != Bitset::npos; s = live_.find_next(s)) {
    if (adj_[s].count() + 1 != live_count_) return false;
  }
  return true;
}

bool operator==(const Graph& a, const Graph& b) {
  if (a.vertex_count() != b.vertex_count()) return false;
  auto va = a.vertices();
  if (va != b.vertices()) return false;
  for (auto v : va) {
    if (a.provenance(v) != b.provenance(v)) return false;
  }
  return a.edges() == b.edges();
}

Graph make_graph(std::size_t n, std::span<const std::pair<int, int>> edges) {
  Graph g(n);
  for (auto [i, j] : edges) {
    if (i < 0 || j < 0 || static_cast<std::size_t>(i) >= n ||
        static_cast<std::size_t>(j) >= n) {
      throw GraphError("make_graph: edge (" + std::to_string(i) + "," +
                       std::to_string(j) + ") out of range");
    }
    g.add_edge(VertexId(static_cast<std::uint32_t>(i)),
               VertexId(static_cast<std::uint32_t>(j)));
  }
  return g;
}

Graph make_graph(std::size_t n, std::initializer_list<std::pair<int, int>> edges) {
  return make_graph(n, std::span<const std::pair<int, int>>(edges.begin(), edges.size()));
}

Graph insert_edge(const Graph& g, VertexId u, VertexId v) {
  Graph h = g;
  h.add_edge(u, v);
  return h;
}

Graph delete_edge(const Graph& g, VertexId u, VertexId v) {
  Graph h = g;
  h.remove_edge(u, v);
  return h;
}

LineGraph line_graph(const Graph& g) {
  LineGraph out;
  out.source_edges = g.edges();
  const auto m = out.source_edges.size();
  out.graph = Graph(m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      auto [a, b] = out.source_edges[i];
      auto [c, d] = out.source_edges[j];
      if (a == c || a == d || b == c || b == d) {
        out.graph.add_edge(VertexId(static_cast<std::uint32_t>(i)),
                           VertexId(static_cast<std::uint32_t>(j)));
      }
    }
  }
  return out;
}

Graph square(const Graph& g) {
  Graph h = g;
  for (auto v : g.vertices()) {
    auto nb = g.neighbors(v);
    for (std::size_t i = 0; i < nb.size(); ++i) {
      for (std::size_t j = i + 1; j < nb.size(); ++j) {
        if (!h.adjacent(nb[i], nb[j])) h.add_edge(nb[i], nb[j]);
      }
    }
  }
  return h;
}

Graph complement(const Graph& g) {
  Graph h = g;
  for (auto s = g.live_.find_first(); s != Bitset::npos; s = g.live_.find_next(s)) {
    h.adj_[s] = g.live_ - g.adj_[s];
    h.adj_[s].reset(s);
  }
  return h;
}

Graph induced_subgraph(const Graph& g, std::span<const VertexId> keep) {
  std::set<VertexId> wanted;
  for (auto v : keep) {
    if (!g.contains(v)) {
      throw GraphError("induced_subgraph: unknown vertex " + to_string(v));
    }
    wanted.insert(v);
  }
  Graph h = g;
  for (auto v : g.vertices()) {
    if (!wanted.contains(v)) h.remove_vertex(v);
  }
  return h;
}

Graph path_graph(std::size_t n) {
  Graph g(n);
  for (std::uint32_t i = 0; i + 1 < n; ++i) g.add_edge(VertexId(i), VertexId(i + 1));
  return g;
}

Graph cycle_graph(std::size_t n) {
  Graph g = path_graph(n);
  if (n >= 3) g.add_edge(VertexId(static_cast<std::uint32_t>(n - 1)), VertexId(0));
  return g;
}

Graph complete_graph(std::size_t n) {
  Graph g(n);
  for (std::uint32_t i = 0; i < n; ++i) {
    for (std::uint32_t j = i + 1; j < n; ++j) g.add_edge(VertexId(i), VertexId(j));
  }
  return g;
}

std::vector<std::vector<VertexId>> connected_components(const Graph& g) {
  std::vector<std::vector<VertexId>> out;
  Bitset seen(g.slot_count());
  for (auto v : g.vertices()) {
    auto s0 = g.slot_of(v);
    if (seen.test(s0)) continue;
    std::vector<VertexId> comp;
    std::deque<std::size_t> queue{s0};
    seen.set(s0);
    while (!queue.empty()) {
      auto s = queue.front();
      queue.pop_front();
      comp.push_back(g.slot_id(s));
      Bitset next = g.slot_neighbors(s) - seen;
      for (auto t = next.find_first(); t != Bitset::npos; t = next.find_next(t)) {
        seen.set(t);
        queue.push_back(t);
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

std::string to_string(VertexId v) { return "v" + std::to_string(v.value); }

std::ostream& operator<<(std::ostream& os, VertexId v) { return os << to_string(v); }

}  // namespace timcolor
