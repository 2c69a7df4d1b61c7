#include <algorithm>
#include <climits>

#include "minbu/errors.hpp"
#include "minbu/maps/labeled_tree.hpp"

namespace minbu {

std::vector<std::vector<int>> LabeledPlaneTree::children() const {
  std::vector<std::vector<int>> ch(parent.size());
  for (size_t v = 1; v < parent.size(); ++v) ch[static_cast<size_t>(parent[v])].push_back(static_cast<int>(v));
  return ch;
}

std::vector<int> LabeledPlaneTree::degrees() const {
  std::vector<int> d(parent.size(), 0);
  for (size_t v = 1; v < parent.size(); ++v) {
    ++d[v];
    ++d[static_cast<size_t>(parent[v])];
  }
  return d;
}

std::vector<int> LabeledPlaneTree::contour() const {
  int n = edge_count();
  std::vector<int> out;
  out.reserve(static_cast<size_t>(2 * n));
  if (n == 0) return out;
  // preorder ids: the walk goes down to v+1 whenever parent[v+1] is the current vertex
  std::vector<int> stack{0};
  out.push_back(0);
  for (int v = 1; v <= n; ++v) {
    while (stack.back() != parent[static_cast<size_t>(v)]) {
      stack.pop_back();
      out.push_back(stack.back());
    }
    stack.push_back(v);
    out.push_back(v);
  }
  while (stack.size() > 1) {
    stack.pop_back();
    out.push_back(stack.back());
  }
  out.pop_back();  // the return to the root corner 0
  return out;
}

void LabeledPlaneTree::validate_shape() const {
  if (parent.empty()) throw LabelError("tree has no vertices");
  if (labels.size() != parent.size()) throw LabelError("label count does not match vertex count");
  if (parent[0] != -1) throw LabelError("vertex 0 must be the root");
  std::vector<int> stack{0};
  for (size_t v = 1; v < parent.size(); ++v) {
    int p = parent[v];
    while (!stack.empty() && stack.back() != p) stack.pop_back();
    if (stack.empty()) throw LabelError("parent list is not in preorder at vertex " + std::to_string(v));
    stack.push_back(static_cast<int>(v));
  }
}

void LabeledPlaneTree::validate() const {
  validate_shape();
  for (size_t v = 0; v < parent.size(); ++v) {
    if (labels[v] < 1) throw LabelError("label " + std::to_string(labels[v]) + " < 1 at vertex " + std::to_string(v));
    if (v > 0 && std::abs(labels[v] - labels[static_cast<size_t>(parent[v])]) > 1) {
      throw LabelError("labels differ by more than 1 on edge " + std::to_string(parent[v]) + "-" + std::to_string(v));
    }
  }
}

bool LabeledPlaneTree::is_well_labeled() const {
  validate();
  return *std::min_element(labels.begin(), labels.end()) == 1;
}

LabeledPlaneTree tree_from_dyck(const std::vector<int>& steps) {
  LabeledPlaneTree t;
  t.parent.push_back(-1);
  std::vector<int> stack{0};
  for (int s : steps) {
    if (s == 1) {
      int v = static_cast<int>(t.parent.size());
      t.parent.push_back(stack.back());
      stack.push_back(v);
    } else if (s == -1) {
      if (stack.size() < 2) throw LabelError("step sequence goes below zero");
      stack.pop_back();
    } else {
      throw LabelError("steps must be +1 or -1");
    }
  }
  if (stack.size() != 1) throw LabelError("step sequence does not return to zero");
  t.labels.assign(t.parent.size(), 1);
  return t;
}

std::vector<int> tree_to_dyck(const LabeledPlaneTree& t) {
  std::vector<int> steps;
  std::vector<int> stack{0};
  for (int v = 1; v < t.vertex_count(); ++v) {
    while (stack.back() != t.parent[static_cast<size_t>(v)]) {
      stack.pop_back();
      steps.push_back(-1);
    }
    stack.push_back(v);
    steps.push_back(1);
  }
  while (stack.size() > 1) {
    stack.pop_back();
    steps.push_back(-1);
  }
  return steps;
}

void assign_labels_from_increments(LabeledPlaneTree& t, const std::vector<int>& inc) {
  size_t nv = t.parent.size();
  if (inc.size() != nv) throw LabelError("need one increment slot per vertex (slot 0 unused)");
  t.labels.assign(nv, 0);
  int lo = 0;
  for (size_t v = 1; v < nv; ++v) {
    if (inc[v] < -1 || inc[v] > 1) throw LabelError("increments must lie in {-1, 0, 1}");
    t.labels[v] = t.labels[static_cast<size_t>(t.parent[v])] + inc[v];
    lo = std::min(lo, t.labels[v]);
  }
  for (auto& l : t.labels) l += 1 - lo;
}

bool is_well_balanced(const LabeledPlaneTree& t) {
  size_t nv = t.parent.size();
  if (nv == 1) return t.labels[0] == 1;
  auto deg = t.degrees();
  for (size_t v = 0; v < nv; ++v) {
    if (t.labels[v] == 1 && deg[v] != 1) return false;
  }
  // subtree minima bottom-up (preorder: children have larger ids)
  std::vector<int> sub(t.labels.begin(), t.labels.end());
  for (size_t v = nv - 1; v > 0; --v) {
    size_t p = static_cast<size_t>(t.parent[v]);
    sub[p] = std::min(sub[p], sub[v]);
  }
  // minimum outside each subtree, top-down through prefix/suffix minima of siblings
  auto ch = t.children();
  std::vector<int> out(nv, INT_MAX);
  for (size_t v = 0; v < nv; ++v) {
    const auto& c = ch[v];
    if (c.empty()) continue;
    int base = std::min(out[v], t.labels[v]);
    std::vector<int> suffix(c.size() + 1, INT_MAX);
    for (size_t i = c.size(); i-- > 0;) suffix[i] = std::min(suffix[i + 1], sub[static_cast<size_t>(c[i])]);
    int prefix = INT_MAX;
    for (size_t i = 0; i < c.size(); ++i) {
      out[static_cast<size_t>(c[i])] = std::min({base, prefix, suffix[i + 1]});
      prefix = std::min(prefix, sub[static_cast<size_t>(c[i])]);
    }
  }
  for (size_t v = 0; v < nv; ++v) {
    int l = t.labels[v];
    if (l == 1 || deg[v] < 2) continue;
    for (int c : ch[v]) {
      if (sub[static_cast<size_t>(c)] > l - 1) return false;
    }
    if (v != 0 && out[v] > l - 1) return false;
  }
  return true;
}

}  // namespace minbu
