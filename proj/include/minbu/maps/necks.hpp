#pragma once

#include <vector>

#include "minbu/maps/quad_map.hpp"

namespace minbu {

// A vertex pair joined by k >= 2 parallel edges. Cutting along the k elementary
// 2-cycles leaves k pockets, each closing its 2-cycle into one edge.
struct Hub {
  int u = -1, w = -1;
  std::vector<int> half_edges;  // parallel half-edges at u, counterclockwise
  std::vector<int> components;  // pocket i holds half_edges[i]
  int parent_component = -1;    // the pocket on the mother side
};

struct ComponentTreeEdge {
  int parent = -1, child = -1;  // component indices
  int hub = -1;                 // the neck pair the edge came from
};

struct NeckDecomposition {
  // components in canonical order: faces descending, then smallest original half-edge
  std::vector<QuadMap> components;  // empty unless built
  std::vector<int> faces;           // face count per component
  std::vector<int> min_half_edge;
  std::vector<Hub> hubs;
  std::vector<ComponentTreeEdge> tree;  // component count - 1 edges
  int mother = 0;
  std::vector<int> parent_hub;  // per component, -1 for the mother
  std::vector<int> depth;       // hubs between a component and the mother

  // original half-edge -> component and its id inside that component
  std::vector<int> half_edge_component;
  std::vector<int> half_edge_local;
  // original half-edge -> hub index when its edge is one of a parallel class, else -1
  std::vector<int> half_edge_hub;

  int component_count() const { return static_cast<int>(faces.size()); }
};

NeckDecomposition neck_decompose(const QuadMap& m, bool build_components = true);

int mother_component(const NeckDecomposition& d);
// min distance in the original map from the root vertex to a vertex of the mother
int distance_to_mother(const QuadMap& m, const NeckDecomposition& d);
// hubs crossed from the root edge to the mother
int necks_to_mother(const QuadMap& m, const NeckDecomposition& d);

struct Kernel {
  long k = 0;              // faces of the components on the path
  int m = 0;               // necks on the path
  bool same_minbu = true;  // the path avoids the mother
};
// e1, e2 given by any of their half-edges
Kernel kernel_between(const QuadMap& m, const NeckDecomposition& d, int e1, int e2);
Kernel kernel_between(const QuadMap& m, int e1, int e2);

}  // namespace minbu
