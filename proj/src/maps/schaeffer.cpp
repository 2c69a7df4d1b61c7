#include <algorithm>

#include "minbu/errors.hpp"
#include "minbu/maps/schaeffer.hpp"

namespace minbu {

std::vector<int> corner_successors(const LabeledPlaneTree& tree) {
  auto cv = tree.contour();
  int c = static_cast<int>(cv.size());
  int top = 0;
  for (int l : tree.labels) top = std::max(top, l);
  std::vector<int> next(static_cast<size_t>(top) + 2, -1);
  std::vector<int> succ(static_cast<size_t>(c), -1);
  // scan the doubled contour backwards, remembering the nearest corner of each label ahead
  for (int j = 2 * c - 1; j >= 0; --j) {
    int i = j % c;
    int l = tree.labels[static_cast<size_t>(cv[static_cast<size_t>(i)])];
    if (j < c) succ[static_cast<size_t>(i)] = l == 1 ? -1 : next[static_cast<size_t>(l - 1)] % c;
    next[static_cast<size_t>(l)] = j;
  }
  return succ;
}

QuadMap schaeffer_decode(const LabeledPlaneTree& tree, int root_sign) {
  if (!tree.is_well_labeled()) throw LabelError("tree is not well-labeled (minimum label must be 1)");
  int n = tree.edge_count();
  if (n < 1) throw LabelError("tree needs at least one edge");
  if (root_sign != 1 && root_sign != -1) throw LabelError("root sign must be +1 or -1");
  auto cv = tree.contour();
  auto succ = corner_successors(tree);
  int C = 2 * n;
  int origin = n + 1;

  QuadMap m;
  m.vertex_count = n + 2;
  m.origin = origin;
  m.root = root_sign == 1 ? 1 : 0;
  m.alpha.resize(static_cast<size_t>(2 * C));
  m.vertex_of.resize(static_cast<size_t>(2 * C));
  m.sigma.resize(static_cast<size_t>(2 * C));
  for (int k = 0; k < C; ++k) {
    m.alpha[static_cast<size_t>(2 * k)] = 2 * k + 1;
    m.alpha[static_cast<size_t>(2 * k + 1)] = 2 * k;
    m.vertex_of[static_cast<size_t>(2 * k)] = cv[static_cast<size_t>(k)];
    int s = succ[static_cast<size_t>(k)];
    m.vertex_of[static_cast<size_t>(2 * k + 1)] = s < 0 ? origin : cv[static_cast<size_t>(s)];
  }
  // incoming chords per corner, nearest predecessor first
  std::vector<int> in_start(static_cast<size_t>(C) + 1, 0), in_list(static_cast<size_t>(C));
  for (int k = 0; k < C; ++k) {
    int s = succ[static_cast<size_t>(k)];
    if (s >= 0) ++in_start[static_cast<size_t>(s) + 1];
  }
  for (int c = 0; c < C; ++c) in_start[static_cast<size_t>(c) + 1] += in_start[static_cast<size_t>(c)];
  {
    std::vector<int> fill(in_start.begin(), in_start.end() - 1);
    for (int k = 0; k < C; ++k) {
      int s = succ[static_cast<size_t>(k)];
      if (s >= 0) in_list[static_cast<size_t>(fill[static_cast<size_t>(s)]++)] = k;
    }
  }
  for (int c = 0; c < C; ++c) {
    auto b = in_list.begin() + in_start[static_cast<size_t>(c)], e = in_list.begin() + in_start[static_cast<size_t>(c) + 1];
    if (e - b > 1) std::sort(b, e, [c, C](int a, int x) { return (c - a + C) % C < (c - x + C) % C; });
  }
  // rotations: at a tree vertex corners in contour order, each corner holding its
  // incoming chords then its outgoing chord; at the origin the label-1 corners in reverse
  std::vector<int> head(static_cast<size_t>(n + 2), -1), tail(static_cast<size_t>(n + 2), -1);
  auto append = [&](int v, int x) {
    int& t = tail[static_cast<size_t>(v)];
    if (t < 0) head[static_cast<size_t>(v)] = x;
    else m.sigma[static_cast<size_t>(t)] = x;
    t = x;
  };
  for (int c = 0; c < C; ++c) {
    int v = cv[static_cast<size_t>(c)];
    for (int i = in_start[static_cast<size_t>(c)]; i < in_start[static_cast<size_t>(c) + 1]; ++i) {
      append(v, 2 * in_list[static_cast<size_t>(i)] + 1);
    }
    append(v, 2 * c);
  }
  for (int c = C - 1; c >= 0; --c) {
    if (succ[static_cast<size_t>(c)] < 0) append(origin, 2 * c + 1);
  }
  for (int v = 0; v < n + 2; ++v) m.sigma[static_cast<size_t>(tail[static_cast<size_t>(v)])] = head[static_cast<size_t>(v)];
  return m;
}

LabeledPlaneTree schaeffer_encode(const QuadMap& m, int* root_sign) {
  m.validate();
  if (m.origin < 0) throw MapError("encoding needs a pointed map");
  if (m.root < 0) throw MapError("encoding needs a rooted map");
  size_t H = m.sigma.size();
  auto dist = bfs_distances(m, m.origin);
  auto lab = [&](int h) { return dist[static_cast<size_t>(m.vertex_of[static_cast<size_t>(h)])]; };

  // one tree edge per face, hung on the face corners; the corner of face half-edge k
  // sits between sigma^{-1}(k) and k
  std::vector<int> stub(H, -1);          // tree edge ending in the gap before half-edge k
  std::vector<int> tree_edge_ends;       // pairs of gap positions
  std::vector<char> done(H, 0);
  for (size_t h0 = 0; h0 < H; ++h0) {
    if (done[h0]) continue;
    int k[4];
    int h = static_cast<int>(h0);
    for (int i = 0; i < 4; ++i) {
      k[i] = h;
      done[static_cast<size_t>(h)] = 1;
      h = m.phi(h);
    }
    int l[4];
    for (int i = 0; i < 4; ++i) l[i] = lab(k[i]);
    int hi = *std::max_element(l, l + 4);
    int top = -1, tops = 0;
    for (int i = 0; i < 4; ++i) {
      if (l[i] == hi) {
        ++tops;
        if (top < 0) top = i;
      }
    }
    int a, b;
    if (tops == 2) {
      // d, d+1, d, d+1: join the two high corners
      a = top;
      b = (top + 2) % 4;
      if (l[b] != hi) throw MapError("face labels are not of a quadrangulation");
    } else {
      // d, d+1, d+2, d+1: join the top corner to the previous corner of the face
      a = top;
      b = (top + 3) % 4;
    }
    int e = static_cast<int>(tree_edge_ends.size() / 2);
    for (int i : {a, b}) {
      if (stub[static_cast<size_t>(k[i])] >= 0) throw MapError("two tree edges in one corner");
      stub[static_cast<size_t>(k[i])] = e;
    }
    tree_edge_ends.push_back(k[a]);
    tree_edge_ends.push_back(k[b]);
  }
  int n = static_cast<int>(tree_edge_ends.size() / 2);
  if (m.vertex_count != n + 2) throw MapError("face and vertex counts do not fit a quadrangulation");
  auto other_end = [&](int pos) {
    int e = stub[static_cast<size_t>(pos)];
    int x = tree_edge_ends[static_cast<size_t>(2 * e)];
    return x == pos ? tree_edge_ends[static_cast<size_t>(2 * e + 1)] : x;
  };

  // the root edge leaves the root corner from its higher end
  int r = m.root, ra = m.alpha[static_cast<size_t>(r)];
  int h_root = lab(r) > lab(ra) ? r : ra;
  int sign = h_root == r ? -1 : 1;
  if (lab(h_root) == 0) throw MapError("root edge has no tree end");
  int start = m.sigma[static_cast<size_t>(h_root)];
  for (size_t guard = 0; stub[static_cast<size_t>(start)] < 0; ++guard) {
    if (guard > H) throw MapError("root vertex has no tree edge");
    start = m.sigma[static_cast<size_t>(start)];
  }

  LabeledPlaneTree t;
  t.parent.assign(1, -1);
  t.labels.assign(1, lab(h_root));
  // depth-first in preorder: frames hold the vertex id, the first gap and the current gap
  struct Frame {
    int id, first, cur;
    bool started;
  };
  std::vector<Frame> stack;
  stack.push_back({0, start, start, false});
  while (!stack.empty()) {
    Frame& f = stack.back();
    int pos = f.cur;
    if (f.started) {
      pos = m.sigma[static_cast<size_t>(pos)];
      while (pos != f.first && stub[static_cast<size_t>(pos)] < 0) pos = m.sigma[static_cast<size_t>(pos)];
      if (pos == f.first) {
        stack.pop_back();
        continue;
      }
    }
    f.started = true;
    f.cur = pos;
    int child_gap = other_end(pos);
    int id = static_cast<int>(t.parent.size());
    t.parent.push_back(f.id);
    t.labels.push_back(lab(child_gap));
    if (static_cast<int>(t.parent.size()) > n + 1) throw MapError("tree edges form a cycle");
    // children of the new vertex follow its parent edge counterclockwise
    stack.push_back({id, child_gap, child_gap, true});
  }
  if (t.edge_count() != n) throw MapError("tree edges do not span the map");
  if (root_sign) *root_sign = sign;
  return t;
}

}  // namespace minbu
