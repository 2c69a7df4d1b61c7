#pragma once

#include "minbu/maps/labeled_tree.hpp"
#include "minbu/maps/quad_map.hpp"

namespace minbu {

// Tree vertices keep their ids, the origin is vertex n+1. Edge k joins corner k
// (half-edge 2k) to its successor (half-edge 2k+1). The root edge is the edge of
// corner 0, oriented toward the tree (root = 1) for root_sign = +1 and away
// from it (root = 0) for root_sign = -1.
QuadMap schaeffer_decode(const LabeledPlaneTree& tree, int root_sign = +1);

// Labels are distances from the origin. The root corner is the corner holding the
// root edge at its far end from the origin; *root_sign receives the orientation.
LabeledPlaneTree schaeffer_encode(const QuadMap& map, int* root_sign = nullptr);

// successor corner of every corner, -1 for the origin
std::vector<int> corner_successors(const LabeledPlaneTree& tree);

}  // namespace minbu
