#pragma once

#include <vector>

#include "minbu/maps/labeled_tree.hpp"
#include "minbu/maps/quad_map.hpp"
#include "minbu/sampler/rng.hpp"

namespace minbu {

// uniform Dyck path of length 2n via the cycle lemma
std::vector<int> sample_dyck_path(int n, RngStream& rng);
// uniform rooted plane tree with n edges, all labels 1
LabeledPlaneTree sample_plane_tree(int n, RngStream& rng);
// uniform over the 3^n Cat(n) trees with a root corner and minimum label 1
LabeledPlaneTree sample_planted_well_labeled_tree(int n, RngStream& rng);

enum class RootedMethod {
  // uniform tree and uniform root orientation, then forget the origin
  sign,
  // trees redrawn until the root label is 1, origin at the root vertex
  rejection,
};

struct RootedSampleStats {
  long long attempts = 0;
  long long accepted = 0;
  double acceptance() const { return attempts ? static_cast<double>(accepted) / static_cast<double>(attempts) : 0.0; }
};

// uniform over rooted quadrangulations with n faces
QuadMap sample_rooted_quadrangulation(int n, RngStream& rng, RootedMethod method = RootedMethod::sign,
                                      RootedSampleStats* stats = nullptr);

}  // namespace minbu
