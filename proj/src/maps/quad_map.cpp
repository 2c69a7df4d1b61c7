#include <deque>
#include <string>

#include "minbu/errors.hpp"
#include "minbu/maps/quad_map.hpp"

namespace minbu {

namespace {

void check_permutation(const std::vector<int>& p, const char* name) {
  std::vector<char> seen(p.size(), 0);
  for (int x : p) {
    if (x < 0 || static_cast<size_t>(x) >= p.size() || seen[static_cast<size_t>(x)]) {
      throw MapError(std::string(name) + " is not a permutation");
    }
    seen[static_cast<size_t>(x)] = 1;
  }
}

}  // namespace

int QuadMap::root_vertex() const {
  if (root < 0) throw MapError("map has no root");
  return vertex_of[static_cast<size_t>(root)];
}

std::vector<int> QuadMap::face_of(int* face_count) const {
  std::vector<int> f(sigma.size(), -1);
  int count = 0;
  for (size_t h = 0; h < sigma.size(); ++h) {
    if (f[h] >= 0) continue;
    int k = static_cast<int>(h);
    do {
      f[static_cast<size_t>(k)] = count;
      k = phi(k);
    } while (k != static_cast<int>(h));
    ++count;
  }
  if (face_count) *face_count = count;
  return f;
}

int QuadMap::face_count() const {
  int c = 0;
  face_of(&c);
  return c;
}

std::vector<int> QuadMap::vertex_half_edges() const {
  std::vector<int> out(static_cast<size_t>(vertex_count), -1);
  for (size_t h = 0; h < vertex_of.size(); ++h) {
    auto& slot = out[static_cast<size_t>(vertex_of[h])];
    if (slot < 0) slot = static_cast<int>(h);
  }
  return out;
}

void QuadMap::validate() const {
  size_t H = sigma.size();
  if (H == 0 || H % 2) throw MapError("half-edge count must be positive and even");
  if (alpha.size() != H || vertex_of.size() != H) throw MapError("sigma, alpha, vertex arrays differ in length");
  check_permutation(sigma, "sigma");
  check_permutation(alpha, "alpha");
  for (size_t h = 0; h < H; ++h) {
    int a = alpha[h];
    if (a == static_cast<int>(h) || alpha[static_cast<size_t>(a)] != static_cast<int>(h)) {
      throw MapError("alpha is not a fixed-point-free involution at " + std::to_string(h));
    }
  }
  // sigma cycles are exactly the vertices
  std::vector<char> seen_vertex(static_cast<size_t>(vertex_count), 0);
  std::vector<char> seen(H, 0);
  for (size_t h = 0; h < H; ++h) {
    if (seen[h]) continue;
    int v = vertex_of[h];
    if (v < 0 || v >= vertex_count) throw MapError("vertex id out of range");
    if (seen_vertex[static_cast<size_t>(v)]) throw MapError("vertex " + std::to_string(v) + " spans two rotations");
    seen_vertex[static_cast<size_t>(v)] = 1;
    int k = static_cast<int>(h);
    do {
      if (vertex_of[static_cast<size_t>(k)] != v) throw MapError("rotation at vertex " + std::to_string(v) + " is mixed");
      seen[static_cast<size_t>(k)] = 1;
      k = sigma[static_cast<size_t>(k)];
    } while (k != static_cast<int>(h));
  }
  for (char c : seen_vertex) {
    if (!c) throw MapError("isolated vertex id");
  }
  if (origin >= vertex_count) throw MapError("origin out of range");
  if (root >= static_cast<int>(H)) throw MapError("root out of range");
  auto d = bfs_distances(*this, 0);
  for (size_t h = 0; h < H; ++h) {
    int u = vertex_of[h], w = vertex_of[static_cast<size_t>(alpha[h])];
    if (d[static_cast<size_t>(u)] < 0) throw MapError("map is disconnected");
    if ((d[static_cast<size_t>(u)] + d[static_cast<size_t>(w)]) % 2 == 0) throw MapError("map is not bipartite");
  }
  int F = 0;
  auto f = face_of(&F);
  std::vector<int> deg(static_cast<size_t>(F), 0);
  for (int x : f) ++deg[static_cast<size_t>(x)];
  for (int x : deg) {
    if (x != 4) throw MapError("face of degree " + std::to_string(x));
  }
  int E = edge_count();
  if (vertex_count - E + F != 2) {
    throw MapError("Euler relation fails: V - E + F = " + std::to_string(vertex_count - E + F));
  }
}

std::vector<int> bfs_distances(const QuadMap& m, int v) {
  if (v < 0 || v >= m.vertex_count) throw MapError("vertex " + std::to_string(v) + " is not in the map");
  std::vector<int> first = m.vertex_half_edges();
  std::vector<int> d(static_cast<size_t>(m.vertex_count), -1);
  std::vector<int> queue{v};
  d[static_cast<size_t>(v)] = 0;
  for (size_t i = 0; i < queue.size(); ++i) {
    int u = queue[i];
    int h0 = first[static_cast<size_t>(u)];
    int h = h0;
    do {
      int w = m.vertex_of[static_cast<size_t>(m.alpha[static_cast<size_t>(h)])];
      if (d[static_cast<size_t>(w)] < 0) {
        d[static_cast<size_t>(w)] = d[static_cast<size_t>(u)] + 1;
        queue.push_back(w);
      }
      h = m.sigma[static_cast<size_t>(h)];
    } while (h != h0);
  }
  return d;
}

bool has_multiple_edges(const QuadMap& m) {
  std::vector<int> stamp(static_cast<size_t>(m.vertex_count), -1);
  std::vector<int> first = m.vertex_half_edges();
  for (int u = 0; u < m.vertex_count; ++u) {
    int h0 = first[static_cast<size_t>(u)];
    int h = h0;
    do {
      int w = m.vertex_of[static_cast<size_t>(m.alpha[static_cast<size_t>(h)])];
      if (stamp[static_cast<size_t>(w)] == u) return true;
      stamp[static_cast<size_t>(w)] = u;
      h = m.sigma[static_cast<size_t>(h)];
    } while (h != h0);
  }
  return false;
}

std::vector<int> canonical_code(const QuadMap& m) {
  if (m.root < 0) throw MapError("canonical code needs a rooted map");
  size_t H = m.sigma.size();
  std::vector<int> id(H, -1), order;
  order.reserve(H);
  id[static_cast<size_t>(m.root)] = 0;
  order.push_back(m.root);
  for (size_t i = 0; i < order.size(); ++i) {
    int h = order[i];
    for (int k : {m.sigma[static_cast<size_t>(h)], m.alpha[static_cast<size_t>(h)]}) {
      if (id[static_cast<size_t>(k)] < 0) {
        id[static_cast<size_t>(k)] = static_cast<int>(order.size());
        order.push_back(k);
      }
    }
  }
  if (order.size() != H) throw MapError("map is disconnected");
  std::vector<int> code;
  code.reserve(2 * H + 1);
  for (int h : order) {
    code.push_back(id[static_cast<size_t>(m.sigma[static_cast<size_t>(h)])]);
    code.push_back(id[static_cast<size_t>(m.alpha[static_cast<size_t>(h)])]);
  }
  int origin_tag = -1;
  if (m.origin >= 0) {
    for (size_t h = 0; h < H; ++h) {
      if (m.vertex_of[h] == m.origin && (origin_tag < 0 || id[h] < origin_tag)) origin_tag = id[h];
    }
  }
  code.push_back(origin_tag);
  return code;
}

}  // namespace minbu
