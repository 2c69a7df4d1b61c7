#include <utility>

#include "minbu/errors.hpp"
#include "minbu/maps/schaeffer.hpp"
#include "minbu/sampler/samplers.hpp"

namespace minbu {

std::vector<int> sample_dyck_path(int n, RngStream& rng) {
  if (n < 0) throw SizeError("tree size must be nonnegative");
  // n up steps and n+1 down steps in uniform order; the rotation starting after
  // the first minimum of the prefix sums ends in its only excursion below zero
  size_t len = 2 * static_cast<size_t>(n) + 1;
  std::vector<int> x(len, -1);
  for (size_t i = 0; i < static_cast<size_t>(n); ++i) x[i] = 1;
  for (size_t i = len - 1; i > 0; --i) std::swap(x[i], x[rng.below(i + 1)]);
  long s = 0, lo = 0;
  size_t at = 0;
  for (size_t i = 0; i < len; ++i) {
    s += x[i];
    if (s < lo) {
      lo = s;
      at = i + 1;
    }
  }
  std::vector<int> steps;
  steps.reserve(len - 1);
  for (size_t i = 0; i + 1 < len; ++i) steps.push_back(x[(at + i) % len]);
  return steps;
}

LabeledPlaneTree sample_plane_tree(int n, RngStream& rng) {
  if (n < 1) throw SizeError("tree needs at least one edge");
  return tree_from_dyck(sample_dyck_path(n, rng));
}

LabeledPlaneTree sample_planted_well_labeled_tree(int n, RngStream& rng) {
  LabeledPlaneTree t = sample_plane_tree(n, rng);
  std::vector<int> inc(t.parent.size(), 0);
  for (size_t v = 1; v < inc.size(); ++v) inc[v] = static_cast<int>(rng.below(3)) - 1;
  assign_labels_from_increments(t, inc);
  return t;
}

QuadMap sample_rooted_quadrangulation(int n, RngStream& rng, RootedMethod method, RootedSampleStats* stats) {
  if (n < 1) throw SizeError("quadrangulation needs at least one face");
  if (method == RootedMethod::sign) {
    LabeledPlaneTree t = sample_planted_well_labeled_tree(n, rng);
    int sign = rng.below(2) ? 1 : -1;
    if (stats) {
      ++stats->attempts;
      ++stats->accepted;
    }
    return schaeffer_decode(t, sign);
  }
  while (true) {
    LabeledPlaneTree t = sample_planted_well_labeled_tree(n, rng);
    if (stats) ++stats->attempts;
    if (t.root_label() != 1) continue;
    if (stats) ++stats->accepted;
    return schaeffer_decode(t, 1);
  }
}

}  // namespace minbu
