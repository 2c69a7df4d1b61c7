#include "minbu/errors.hpp"
#include "minbu/maps/quad_map.hpp"
#include "minbu/maps/schaeffer.hpp"
#include "minbu/sampler/enumerate.hpp"

namespace minbu {

namespace {

void for_each_dyck(int n, std::vector<int>& steps, int up, int height,
                   const std::function<void(const std::vector<int>&)>& visit) {
  if (static_cast<int>(steps.size()) == 2 * n) {
    visit(steps);
    return;
  }
  if (up < n) {
    steps.push_back(1);
    for_each_dyck(n, steps, up + 1, height + 1, visit);
    steps.pop_back();
  }
  if (height > 0) {
    steps.push_back(-1);
    for_each_dyck(n, steps, up, height - 1, visit);
    steps.pop_back();
  }
}

void bump(std::vector<long long>& v, int l) {
  if (static_cast<size_t>(l) >= v.size()) v.resize(static_cast<size_t>(l) + 1, 0);
  ++v[static_cast<size_t>(l)];
}

}  // namespace

void for_each_planted_well_labeled_tree(int n, const std::function<void(const LabeledPlaneTree&)>& visit) {
  if (n < 1) throw SizeError("enumeration needs n >= 1");
  if (n > kEnumerationMaxSize) throw SizeError("exhaustive enumeration is limited to n <= " + std::to_string(kEnumerationMaxSize));
  std::vector<int> steps;
  for_each_dyck(n, steps, 0, 0, [&](const std::vector<int>& s) {
    LabeledPlaneTree t = tree_from_dyck(s);
    // odometer over the 3^n increment vectors
    std::vector<int> inc(t.parent.size(), -1);
    inc[0] = 0;
    while (true) {
      assign_labels_from_increments(t, inc);
      visit(t);
      size_t v = 1;
      while (v < inc.size() && inc[v] == 1) inc[v++] = -1;
      if (v == inc.size()) break;
      ++inc[v];
    }
  });
}

EnumerationCounts enumerate_planted_well_labeled_trees(int n, const EnumerationOptions& options) {
  EnumerationCounts c;
  c.n = n;
  std::vector<int> corner_count;
  for_each_planted_well_labeled_tree(n, [&](const LabeledPlaneTree& t) {
    ++c.total;
    bump(c.root_label, t.root_label());
    bool wb = is_well_balanced(t);
    if (wb) {
      ++c.well_balanced;
      bump(c.wb_root_label, t.root_label());
      if (t.root_label() == 1) {
        auto cv = t.contour();
        for (size_t k = 1; k < cv.size(); ++k) bump(c.wb_corner_label, t.labels[static_cast<size_t>(cv[k])]);
        for (size_t v = 1; v < t.labels.size(); ++v) bump(c.wb_vertex_label, t.labels[v]);
      }
    }
    if (!options.check_maps) return;
    for (int sign : {1, -1}) {
      QuadMap m = schaeffer_decode(t, sign);
      ++c.maps_checked;
      auto d = bfs_distances(m, m.origin);
      for (size_t v = 0; v < t.labels.size(); ++v) {
        if (d[v] != t.labels[v]) {
          ++c.label_distance_failures;
          break;
        }
      }
      if (sign == 1 && has_multiple_edges(m) == wb) ++c.equivalence_failures;
      try {
        int back_sign = 0;
        LabeledPlaneTree back = schaeffer_encode(m, &back_sign);
        if (!(back == t) || back_sign != sign) ++c.codec_failures;
      } catch (const MapError&) {
        ++c.codec_failures;
      }
    }
  });
  return c;
}

}  // namespace minbu
