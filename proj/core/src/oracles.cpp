#include "timcolor/oracles.hpp"

#include <algorithm>
#include <string>

namespace timcolor {

namespace {

void check_cap(const Graph& g, std::size_t cap, const char* what) {
  if (g.vertex_count() > cap) {
    throw OracleCapExceeded(std::string(what) + ": " + std::to_string(g.vertex_count()) +
                            " vertices exceeds cap " + std::to_string(cap));
  }
}

struct Colorer {
  const std::vector<std::vector<int>>& adj;
  std::vector<int> order;
  std::vector<int> color;
  int k = 0;

  bool run(std::size_t pos, int used) {
    if (pos == order.size()) return true;
    int v = order[pos];
    // New colors are only opened in increasing order, which removes
    // permutation symmetry.
    for (int c = 0; c < std::min(used + 1, k); ++c) {
      bool ok = true;
      for (int w : adj[v]) {
        if (color[w] == c) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      color[v] = c;
      if (run(pos + 1, std::max(used, c + 1))) return true;
      color[v] = -1;
    }
    return false;
  }
};

}  // namespace

int oracle_chromatic(const Graph& g, std::size_t cap) {
  check_cap(g, cap, "oracle_chromatic");
  auto vs = g.vertices();
  const int n = static_cast<int>(vs.size());
  if (n == 0) return 0;
  std::vector<std::vector<int>> adj(n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (a != b && g.adjacent(vs[a], vs[b])) adj[a].push_back(b);
    }
  }
  Colorer col{adj, {}, std::vector<int>(n, -1), 0};
  for (int v = 0; v < n; ++v) col.order.push_back(v);
  std::stable_sort(col.order.begin(), col.order.end(),
                   [&](int a, int b) { return adj[a].size() > adj[b].size(); });
  for (int k = 1; k <= n; ++k) {
    col.k = k;
    std::fill(col.color.begin(), col.color.end(), -1);
    if (col.run(0, 0)) return k;
  }
  return n;
}

std::vector<VertexId> oracle_max_clique(const Graph& g, std::size_t cap) {
  check_cap(g, cap, "oracle_max_clique");
  auto vs = g.vertices();
  std::vector<VertexId> best;
  std::vector<VertexId> current;
  // Depth-first over increasing extensions visits cliques in lexicographic
  // order, so the first clique of each size wins ties.
  auto grow = [&](auto&& self, std::size_t from) -> void {
    if (current.size() > best.size()) best = current;
    for (std::size_t i = from; i < vs.size(); ++i) {
      if (current.size() + (vs.size() - i) <= best.size()) return;
      bool ok = std::all_of(current.begin(), current.end(),
                            [&](VertexId w) { return g.adjacent(w, vs[i]); });
      if (!ok) continue;
      current.push_back(vs[i]);
      self(self, i + 1);
      current.pop_back();
    }
  };
  grow(grow, 0);
  return best;
}

}  // namespace timcolor
