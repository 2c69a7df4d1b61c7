#pragma once

#include <functional>
#include <vector>

#include "minbu/maps/labeled_tree.hpp"

namespace minbu {

constexpr int kEnumerationMaxSize = 9;

// every (plane tree, labels) pair with n edges and minimum label 1; the visitor
// sees a tree that is reused between calls. Throws SizeError for n > 9.
void for_each_planted_well_labeled_tree(int n, const std::function<void(const LabeledPlaneTree&)>& visit);

struct EnumerationOptions {
  // decode both root orientations, re-encode, compare labels with BFS distances
  // and well-balancedness with simplicity
  bool check_maps = false;
};

struct EnumerationCounts {
  int n = 0;
  long long total = 0;
  long long well_balanced = 0;
  // vectors are indexed by label, entry 0 unused
  std::vector<long long> root_label;     // all trees
  std::vector<long long> wb_root_label;  // well-balanced trees
  // in well-balanced trees of root label 1, excluding the root corner / vertex
  std::vector<long long> wb_corner_label;
  std::vector<long long> wb_vertex_label;

  long long maps_checked = 0;
  long long codec_failures = 0;
  long long label_distance_failures = 0;
  long long equivalence_failures = 0;

  long long at(const std::vector<long long>& v, int l) const {
    return l >= 0 && static_cast<size_t>(l) < v.size() ? v[static_cast<size_t>(l)] : 0;
  }
};

EnumerationCounts enumerate_planted_well_labeled_trees(int n, const EnumerationOptions& options = {});

}  // namespace minbu
