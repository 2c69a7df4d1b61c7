#pragma once

#include <vector>

namespace minbu {

// Half-edge map. sigma is the counterclockwise successor around a vertex,
// alpha pairs the two halves of an edge. Faces are the cycles of sigma o alpha.
// The root half-edge h marks the edge oriented from vertex_of[h] to vertex_of[alpha[h]].
struct QuadMap {
  std::vector<int> sigma;
  std::vector<int> alpha;
  std::vector<int> vertex_of;
  int vertex_count = 0;
  int origin = -1;
  int root = -1;

  int half_edge_count() const { return static_cast<int>(sigma.size()); }
  int edge_count() const { return half_edge_count() / 2; }
  int phi(int h) const { return sigma[static_cast<size_t>(alpha[static_cast<size_t>(h)])]; }
  int root_vertex() const;

  // face id per half-edge and the face count
  std::vector<int> face_of(int* face_count = nullptr) const;
  int face_count() const;
  // one half-edge per vertex
  std::vector<int> vertex_half_edges() const;

  // permutations, connectivity, Euler relation, degree-4 faces, bipartiteness; throws MapError
  void validate() const;

  bool operator==(const QuadMap&) const = default;
};

// breadth-first distances from vertex v (-1 where unreachable)
std::vector<int> bfs_distances(const QuadMap& m, int v);

bool has_multiple_edges(const QuadMap& m);

// relabels half-edges in breadth-first order from the root, so two rooted maps are
// isomorphic (with origins matching) iff their codes are equal
std::vector<int> canonical_code(const QuadMap& m);

}  // namespace minbu
