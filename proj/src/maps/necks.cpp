#include <algorithm>
#include <numeric>
#include <string>

#include "minbu/errors.hpp"
#include "minbu/maps/necks.hpp"

namespace minbu {

namespace {

struct Dsu {
  std::vector<int> p;
  explicit Dsu(size_t n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  int find(int x) {
    while (p[static_cast<size_t>(x)] != x) {
      p[static_cast<size_t>(x)] = p[static_cast<size_t>(p[static_cast<size_t>(x)])];
      x = p[static_cast<size_t>(x)];
    }
    return x;
  }
  void unite(int a, int b) { p[static_cast<size_t>(find(a))] = find(b); }
};

// node of the bipartite component/hub tree: components are 0..C-1, hubs C..C+K-1
int edge_node(const NeckDecomposition& d, int h) {
  int hub = d.half_edge_hub[static_cast<size_t>(h)];
  if (hub >= 0) return d.component_count() + hub;
  return d.half_edge_component[static_cast<size_t>(h)];
}

}  // namespace

NeckDecomposition neck_decompose(const QuadMap& m, bool build_components) {
  size_t H = m.sigma.size();
  if (H == 0 || m.alpha.size() != H || m.vertex_of.size() != H) throw MapError("malformed map");
  auto nb = [&](int h) { return m.vertex_of[static_cast<size_t>(m.alpha[static_cast<size_t>(h)])]; };

  NeckDecomposition d;
  // parallel classes, half-edges collected in rotation order at the smaller endpoint
  std::vector<int> first = m.vertex_half_edges();
  std::vector<int> stamp(static_cast<size_t>(m.vertex_count), -1);
  std::vector<int> mult(static_cast<size_t>(m.vertex_count), 0);
  std::vector<int> slot(static_cast<size_t>(m.vertex_count), -1);
  for (int u = 0; u < m.vertex_count; ++u) {
    int h0 = first[static_cast<size_t>(u)];
    if (h0 < 0) throw MapError("isolated vertex " + std::to_string(u));
    bool parallel = false;
    int h = h0;
    do {
      int w = nb(h);
      if (w == u) throw MapError("map has a loop");
      if (w > u) {
        if (stamp[static_cast<size_t>(w)] != u) {
          stamp[static_cast<size_t>(w)] = u;
          mult[static_cast<size_t>(w)] = 0;
          slot[static_cast<size_t>(w)] = -1;
        }
        if (++mult[static_cast<size_t>(w)] == 2) parallel = true;
      }
      h = m.sigma[static_cast<size_t>(h)];
    } while (h != h0);
    if (!parallel) continue;
    h = h0;
    do {
      int w = nb(h);
      if (w > u && mult[static_cast<size_t>(w)] >= 2) {
        if (slot[static_cast<size_t>(w)] < 0) {
          slot[static_cast<size_t>(w)] = static_cast<int>(d.hubs.size());
          d.hubs.emplace_back();
          d.hubs.back().u = u;
          d.hubs.back().w = w;
        }
        d.hubs[static_cast<size_t>(slot[static_cast<size_t>(w)])].half_edges.push_back(h);
      }
      h = m.sigma[static_cast<size_t>(h)];
    } while (h != h0);
  }

  // cut one class at a time: pocket i keeps the arc of the rotation at u ending at
  // h_i and the matching arc at w, closed up by the edge h_i -- alpha(h_{i-1})
  std::vector<int> sigma2 = m.sigma, alpha2 = m.alpha;
  d.half_edge_hub.assign(H, -1);
  std::vector<int> old_u, old_w;
  for (size_t i = 0; i < d.hubs.size(); ++i) {
    const auto& hs = d.hubs[i].half_edges;
    size_t k = hs.size();
    old_u.resize(k);
    old_w.resize(k);
    for (size_t j = 0; j < k; ++j) {
      int h = hs[j], f = m.alpha[static_cast<size_t>(h)];
      d.half_edge_hub[static_cast<size_t>(h)] = static_cast<int>(i);
      d.half_edge_hub[static_cast<size_t>(f)] = static_cast<int>(i);
      old_u[j] = sigma2[static_cast<size_t>(h)];
      old_w[j] = sigma2[static_cast<size_t>(f)];
    }
    // the partners run the other way round w
    for (size_t j = 0; j < k; ++j) {
      int h = hs[j], f = m.alpha[static_cast<size_t>(h)];
      sigma2[static_cast<size_t>(h)] = old_u[(j + k - 1) % k];
      sigma2[static_cast<size_t>(f)] = old_w[(j + 1) % k];
      int b = m.alpha[static_cast<size_t>(hs[(j + k - 1) % k])];
      alpha2[static_cast<size_t>(h)] = b;
      alpha2[static_cast<size_t>(b)] = h;
    }
  }

  Dsu dsu(H);
  for (size_t h = 0; h < H; ++h) {
    dsu.unite(static_cast<int>(h), sigma2[h]);
    dsu.unite(static_cast<int>(h), alpha2[h]);
  }
  std::vector<int> root_to_raw(H, -1);
  std::vector<int> raw(H);
  int C = 0;
  std::vector<int> raw_min;
  for (size_t h = 0; h < H; ++h) {
    int r = dsu.find(static_cast<int>(h));
    if (root_to_raw[static_cast<size_t>(r)] < 0) {
      root_to_raw[static_cast<size_t>(r)] = C++;
      raw_min.push_back(static_cast<int>(h));
    }
    raw[h] = root_to_raw[static_cast<size_t>(r)];
  }
  std::vector<int> raw_faces(static_cast<size_t>(C), 0);
  {
    std::vector<char> seen(H, 0);
    for (size_t h = 0; h < H; ++h) {
      if (seen[h]) continue;
      int k = static_cast<int>(h), len = 0;
      do {
        seen[static_cast<size_t>(k)] = 1;
        k = sigma2[static_cast<size_t>(alpha2[static_cast<size_t>(k)])];
        ++len;
      } while (k != static_cast<int>(h));
      if (len != 4) throw MapError("component face of degree " + std::to_string(len) + " after cutting");
      ++raw_faces[static_cast<size_t>(raw[h])];
    }
  }
  // canonical order
  std::vector<int> order(static_cast<size_t>(C));
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (raw_faces[static_cast<size_t>(a)] != raw_faces[static_cast<size_t>(b)]) {
      return raw_faces[static_cast<size_t>(a)] > raw_faces[static_cast<size_t>(b)];
    }
    return raw_min[static_cast<size_t>(a)] < raw_min[static_cast<size_t>(b)];
  });
  std::vector<int> rank(static_cast<size_t>(C));
  for (int i = 0; i < C; ++i) rank[static_cast<size_t>(order[static_cast<size_t>(i)])] = i;
  d.faces.resize(static_cast<size_t>(C));
  d.min_half_edge.resize(static_cast<size_t>(C));
  for (int i = 0; i < C; ++i) {
    d.faces[static_cast<size_t>(i)] = raw_faces[static_cast<size_t>(order[static_cast<size_t>(i)])];
    d.min_half_edge[static_cast<size_t>(i)] = raw_min[static_cast<size_t>(order[static_cast<size_t>(i)])];
  }
  d.half_edge_component.resize(H);
  for (size_t h = 0; h < H; ++h) d.half_edge_component[h] = rank[static_cast<size_t>(raw[h])];
  d.mother = 0;

  // bipartite tree rooted at the mother
  int K = static_cast<int>(d.hubs.size());
  std::vector<std::vector<int>> comp_hubs(static_cast<size_t>(C));
  for (int i = 0; i < K; ++i) {
    auto& hub = d.hubs[static_cast<size_t>(i)];
    for (int h : hub.half_edges) hub.components.push_back(d.half_edge_component[static_cast<size_t>(h)]);
    for (int c : hub.components) comp_hubs[static_cast<size_t>(c)].push_back(i);
  }
  d.parent_hub.assign(static_cast<size_t>(C), -1);
  d.depth.assign(static_cast<size_t>(C), -1);
  d.depth[0] = 0;
  std::vector<int> queue{0};
  std::vector<char> hub_seen(static_cast<size_t>(K), 0);
  for (size_t qi = 0; qi < queue.size(); ++qi) {
    int c = queue[qi];
    for (int i : comp_hubs[static_cast<size_t>(c)]) {
      if (hub_seen[static_cast<size_t>(i)]) continue;
      hub_seen[static_cast<size_t>(i)] = 1;
      auto& hub = d.hubs[static_cast<size_t>(i)];
      hub.parent_component = c;
      for (int x : hub.components) {
        if (x == c) continue;
        if (d.depth[static_cast<size_t>(x)] >= 0) throw MapError("component graph has a cycle");
        d.depth[static_cast<size_t>(x)] = d.depth[static_cast<size_t>(c)] + 1;
        d.parent_hub[static_cast<size_t>(x)] = i;
        d.tree.push_back({c, x, i});
        queue.push_back(x);
      }
    }
  }
  if (static_cast<int>(queue.size()) != C) throw MapError("component graph is disconnected");

  if (build_components) {
    d.half_edge_local.assign(H, -1);
    std::vector<int> count(static_cast<size_t>(C), 0);
    for (size_t h = 0; h < H; ++h) {
      int c = d.half_edge_component[h];
      d.half_edge_local[h] = count[static_cast<size_t>(c)]++;
    }
    d.components.resize(static_cast<size_t>(C));
    for (int c = 0; c < C; ++c) {
      auto& q = d.components[static_cast<size_t>(c)];
      size_t n = static_cast<size_t>(count[static_cast<size_t>(c)]);
      q.sigma.resize(n);
      q.alpha.resize(n);
      q.vertex_of.assign(n, -1);
    }
    for (size_t h = 0; h < H; ++h) {
      auto& q = d.components[static_cast<size_t>(d.half_edge_component[h])];
      size_t l = static_cast<size_t>(d.half_edge_local[h]);
      q.sigma[l] = d.half_edge_local[static_cast<size_t>(sigma2[h])];
      q.alpha[l] = d.half_edge_local[static_cast<size_t>(alpha2[h])];
    }
    for (size_t h = 0; h < H; ++h) {
      auto& q = d.components[static_cast<size_t>(d.half_edge_component[h])];
      size_t l = static_cast<size_t>(d.half_edge_local[h]);
      if (q.vertex_of[l] >= 0) continue;
      int v = q.vertex_count++;
      size_t k = l;
      do {
        q.vertex_of[k] = v;
        k = static_cast<size_t>(q.sigma[k]);
      } while (k != l);
    }
    if (m.root >= 0 && d.half_edge_hub[static_cast<size_t>(m.root)] < 0) {
      auto& q = d.components[static_cast<size_t>(d.half_edge_component[static_cast<size_t>(m.root)])];
      q.root = d.half_edge_local[static_cast<size_t>(m.root)];
    }
  }
  return d;
}

int mother_component(const NeckDecomposition& d) { return d.mother; }

int distance_to_mother(const QuadMap& m, const NeckDecomposition& d) {
  int r = m.root_vertex();
  std::vector<char> in_mother(static_cast<size_t>(m.vertex_count), 0);
  for (size_t h = 0; h < m.vertex_of.size(); ++h) {
    if (d.half_edge_component[h] == d.mother) in_mother[static_cast<size_t>(m.vertex_of[h])] = 1;
  }
  std::vector<int> first = m.vertex_half_edges();
  std::vector<int> dist(static_cast<size_t>(m.vertex_count), -1);
  std::vector<int> queue{r};
  dist[static_cast<size_t>(r)] = 0;
  for (size_t i = 0; i < queue.size(); ++i) {
    int u = queue[i];
    if (in_mother[static_cast<size_t>(u)]) return dist[static_cast<size_t>(u)];
    int h0 = first[static_cast<size_t>(u)], h = h0;
    do {
      int w = m.vertex_of[static_cast<size_t>(m.alpha[static_cast<size_t>(h)])];
      if (dist[static_cast<size_t>(w)] < 0) {
        dist[static_cast<size_t>(w)] = dist[static_cast<size_t>(u)] + 1;
        queue.push_back(w);
      }
      h = m.sigma[static_cast<size_t>(h)];
    } while (h != h0);
  }
  throw MapError("mother component is unreachable from the root");
}

int necks_to_mother(const QuadMap& m, const NeckDecomposition& d) {
  if (m.root < 0) throw MapError("map has no root");
  int hub = d.half_edge_hub[static_cast<size_t>(m.root)];
  if (hub >= 0) return d.depth[static_cast<size_t>(d.hubs[static_cast<size_t>(hub)].parent_component)];
  return d.depth[static_cast<size_t>(d.half_edge_component[static_cast<size_t>(m.root)])];
}

Kernel kernel_between(const QuadMap& m, const NeckDecomposition& d, int e1, int e2) {
  int H = m.half_edge_count();
  if (e1 < 0 || e1 >= H || e2 < 0 || e2 >= H) throw MapError("edge out of range");
  int C = d.component_count();
  auto parent = [&](int node) {
    if (node < C) {
      int hub = d.parent_hub[static_cast<size_t>(node)];
      return hub < 0 ? -1 : C + hub;
    }
    return d.hubs[static_cast<size_t>(node - C)].parent_component;
  };
  auto level = [&](int node) {
    // components sit at even levels, hubs at odd ones
    if (node < C) return 2 * d.depth[static_cast<size_t>(node)];
    return 2 * d.depth[static_cast<size_t>(d.hubs[static_cast<size_t>(node - C)].parent_component)] + 1;
  };
  int a = edge_node(d, e1), b = edge_node(d, e2);
  Kernel out;
  bool same_edge = e1 == e2 || e1 == m.alpha[static_cast<size_t>(e2)];
  if (same_edge || (a == b && a >= C)) return out;
  std::vector<int> path_a{a}, path_b{b};
  while (a != b) {
    if (level(a) >= level(b)) {
      a = parent(a);
      path_a.push_back(a);
    } else {
      b = parent(b);
      path_b.push_back(b);
    }
  }
  path_b.pop_back();
  path_a.insert(path_a.end(), path_b.rbegin(), path_b.rend());
  for (size_t i = 0; i < path_a.size(); ++i) {
    int node = path_a[i];
    if (node < C) {
      out.k += d.faces[static_cast<size_t>(node)];
      if (node == d.mother) out.same_minbu = false;
    } else if (i > 0 && i + 1 < path_a.size()) {
      ++out.m;
    }
  }
  return out;
}

Kernel kernel_between(const QuadMap& m, int e1, int e2) { return kernel_between(m, neck_decompose(m, false), e1, e2); }

}  // namespace minbu
