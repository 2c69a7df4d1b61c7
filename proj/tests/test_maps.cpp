#include <doctest.h>

#include <functional>

#include "minbu/errors.hpp"
#include "minbu/maps/necks.hpp"
#include "minbu/maps/schaeffer.hpp"
#include "minbu/maps/text_format.hpp"

using namespace minbu;

namespace {

LabeledPlaneTree tree(std::vector<int> parent, std::vector<int> labels) {
  LabeledPlaneTree t;
  t.parent = std::move(parent);
  t.labels = std::move(labels);
  return t;
}

void for_each_tree(int n, const std::function<void(const LabeledPlaneTree&)>& f) {
  std::vector<int> steps;
  std::function<void(int, int)> gen = [&](int up, int h) {
    if (static_cast<int>(steps.size()) == 2 * n) {
      LabeledPlaneTree t = tree_from_dyck(steps);
      std::vector<int> inc(t.parent.size(), -1);
      while (true) {
        assign_labels_from_increments(t, inc);
        f(t);
        size_t v = 1;
        while (v < inc.size() && inc[v] == 1) inc[v++] = -1;
        if (v == inc.size()) break;
        ++inc[v];
      }
      return;
    }
    if (up < n) {
      steps.push_back(1);
      gen(up + 1, h + 1);
      steps.pop_back();
    }
    if (h > 0) {
      steps.push_back(-1);
      gen(up, h - 1);
      steps.pop_back();
    }
  };
  gen(0, 0);
}

}  // namespace

TEST_CASE("tree structure") {
  auto t = tree_from_dyck({1, 1, -1, 1, -1, -1});
  CHECK(t.parent == std::vector<int>{-1, 0, 1, 1});
  CHECK(tree_to_dyck(t) == std::vector<int>{1, 1, -1, 1, -1, -1});
  CHECK(t.contour() == std::vector<int>{0, 1, 2, 1, 3, 1});
  CHECK_THROWS_AS(tree_from_dyck({1, -1, -1, 1}), LabelError);
  auto bad = tree({-1, 0}, {1, 3});
  CHECK_THROWS_AS(bad.validate(), LabelError);
}

TEST_CASE("single-edge trees decode to the two one-face maps") {
  auto m = schaeffer_decode(tree({-1, 0}, {1, 1}));
  m.validate();
  CHECK(m.vertex_count == 3);
  CHECK(m.face_count() == 1);
  CHECK(!has_multiple_edges(m));
  auto d = bfs_distances(m, m.origin);
  CHECK(d == std::vector<int>{1, 1, 0});
  auto p = schaeffer_decode(tree({-1, 0}, {1, 2}));
  CHECK(bfs_distances(p, p.origin) == std::vector<int>{1, 2, 0});
  CHECK(!has_multiple_edges(p));
  CHECK_THROWS_AS(schaeffer_decode(tree({-1, 0}, {2, 3})), LabelError);
}

TEST_CASE("a label-1 inner vertex gives a double edge") {
  auto t = tree({-1, 0, 1}, {1, 1, 2});
  CHECK(!is_well_balanced(t));
  auto m = schaeffer_decode(t);
  CHECK(has_multiple_edges(m));
  auto d = neck_decompose(m);
  CHECK(d.component_count() == 2);
  CHECK(d.hubs.size() == 1);
  CHECK(d.tree.size() == 1);
  CHECK(d.faces == std::vector<int>{1, 1});
  // re-root on each edge: edges of the non-mother component sit behind one neck
  int outside = 0, hub_edges = 0;
  for (int h = 0; h < m.half_edge_count(); ++h) {
    QuadMap r = m;
    r.root = h;
    if (d.half_edge_hub[static_cast<size_t>(h)] >= 0) {
      ++hub_edges;
      CHECK(necks_to_mother(r, d) == 0);
    } else if (d.half_edge_component[static_cast<size_t>(h)] != d.mother) {
      ++outside;
      CHECK(necks_to_mother(r, d) == 1);
      Kernel k = kernel_between(r, d, h, d.min_half_edge[0]);
      CHECK(k.m == 1);
      CHECK(k.k == 2);
      CHECK(!k.same_minbu);
    }
  }
  CHECK(hub_edges == 4);
  CHECK(outside > 0);
}

TEST_CASE("kernel of an edge with itself is empty") {
  auto m = schaeffer_decode(tree({-1, 0, 1, 2}, {1, 2, 3, 2}));
  Kernel k = kernel_between(m, 0, 0);
  CHECK(k.k == 0);
  CHECK(k.m == 0);
  CHECK(k.same_minbu);
  Kernel k2 = kernel_between(m, 0, 1);
  CHECK(k2.k == 0);
}

TEST_CASE("exhaustive n <= 5: codec, distances, well-balanced vs simple, necks") {
  for (int n = 1; n <= 5; ++n) {
    long count = 0;
    for_each_tree(n, [&](const LabeledPlaneTree& t) {
      ++count;
      for (int sign : {1, -1}) {
        QuadMap m = schaeffer_decode(t, sign);
        m.validate();
        auto d = bfs_distances(m, m.origin);
        for (size_t v = 0; v < t.labels.size(); ++v) REQUIRE(d[v] == t.labels[v]);
        int back = 0;
        REQUIRE(schaeffer_encode(m, &back) == t);
        REQUIRE(back == sign);
      }
      QuadMap m = schaeffer_decode(t);
      REQUIRE(is_well_balanced(t) == !has_multiple_edges(m));
      auto nd = neck_decompose(m);
      int faces = 0;
      for (int f : nd.faces) faces += f;
      REQUIRE(faces == n);
      REQUIRE(static_cast<int>(nd.tree.size()) == nd.component_count() - 1);
      REQUIRE(nd.hubs.empty() == !has_multiple_edges(m));
      for (const auto& q : nd.components) {
        q.validate();
        REQUIRE(!has_multiple_edges(q));
      }
    });
    long cat[] = {0, 1, 2, 5, 14, 42};
    long p3 = 1;
    for (int i = 0; i < n; ++i) p3 *= 3;
    CHECK(count == cat[n] * p3);
  }
}

TEST_CASE("canonical codes ignore half-edge names") {
  auto m = schaeffer_decode(tree({-1, 0, 0, 2}, {2, 1, 2, 3}));
  QuadMap p = m;
  // rename half-edges by the cyclic shift h -> h + 1
  int H = m.half_edge_count();
  auto ren = [H](int h) { return (h + 1) % H; };
  for (int h = 0; h < H; ++h) {
    p.sigma[static_cast<size_t>(ren(h))] = ren(m.sigma[static_cast<size_t>(h)]);
    p.alpha[static_cast<size_t>(ren(h))] = ren(m.alpha[static_cast<size_t>(h)]);
    p.vertex_of[static_cast<size_t>(ren(h))] = m.vertex_of[static_cast<size_t>(h)];
  }
  p.root = ren(m.root);
  CHECK(canonical_code(p) == canonical_code(m));
  p.root = ren(m.alpha[static_cast<size_t>(m.root)]);
  CHECK(canonical_code(p) != canonical_code(m));
}

TEST_CASE("map validation") {
  auto m = schaeffer_decode(tree({-1, 0}, {1, 1}));
  QuadMap bad = m;
  bad.alpha[0] = 0;
  CHECK_THROWS_AS(bad.validate(), MapError);
  bad = m;
  std::swap(bad.sigma[0], bad.sigma[1]);
  CHECK_THROWS_AS(bad.validate(), MapError);
}

TEST_CASE("text formats round trip byte for byte") {
  auto t = tree({-1, 0, 1, 1}, {2, 1, 2, 1});
  std::string s = tree_to_string(t);
  CHECK(s == "tree 3\nparents -1 0 1 1\nlabels 2 1 2 1\n");
  CHECK(tree_from_string(s) == t);
  auto m = schaeffer_decode(t, -1);
  std::string ms = map_to_string(m);
  QuadMap back = map_from_string(ms);
  CHECK(back == m);
  CHECK(map_to_string(back) == ms);
  CHECK_THROWS_AS(tree_from_string("tree 1\nparents -1 0\nlabels 1 3\n"), LabelError);
  CHECK_THROWS_AS(map_from_string("quadmap 2\nsigma 0 1\nalpha 0 1\n"), MapError);
}
