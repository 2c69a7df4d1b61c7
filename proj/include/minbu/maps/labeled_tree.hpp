#pragma once

#include <vector>

namespace minbu {

// Plane tree in preorder: parent[v] < v, parent[0] = -1, and the children of a
// vertex are ordered left to right by increasing id. Corner 0 is the root
// corner, the one in front of the first child of the root.
struct LabeledPlaneTree {
  std::vector<int> parent;
  std::vector<int> labels;

  int vertex_count() const { return static_cast<int>(parent.size()); }
  int edge_count() const { return vertex_count() - 1; }
  int root_label() const { return labels.at(0); }

  std::vector<std::vector<int>> children() const;
  // vertex at each of the 2n corners in contour order
  std::vector<int> contour() const;
  std::vector<int> degrees() const;

  // preorder structure; throws LabelError
  void validate_shape() const;
  // shape plus |l(u)-l(v)| <= 1 on edges and all labels >= 1; throws LabelError
  void validate() const;
  // validate() plus min label = 1
  bool is_well_labeled() const;

  bool operator==(const LabeledPlaneTree&) const = default;
};

// 2n steps of +1/-1 with nonnegative prefix sums
LabeledPlaneTree tree_from_dyck(const std::vector<int>& steps);
std::vector<int> tree_to_dyck(const LabeledPlaneTree& t);

// labels from increments in {-1, 0, 1} along each edge (indexed by child vertex),
// shifted so the minimum label is 1
void assign_labels_from_increments(LabeledPlaneTree& t, const std::vector<int>& increments);

// (a) label-1 vertices have degree 1 and (b) at every vertex of label l > 1 and
// degree >= 2, each branch contains a label l-1
bool is_well_balanced(const LabeledPlaneTree& t);

}  // namespace minbu
