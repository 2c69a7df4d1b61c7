#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>

#include "minbu/errors.hpp"
#include "minbu/maps/text_format.hpp"

namespace minbu {

namespace {

void write_row(std::ostream& out, const char* key, const std::vector<int>& v) {
  out << key;
  for (int x : v) out << ' ' << x;
  out << '\n';
}

template <class E>
std::vector<int> read_row(std::istream& in, const std::string& key, size_t count) {
  std::string line;
  if (!std::getline(in, line)) throw E("missing line '" + key + "'");
  std::istringstream ss(line);
  std::string word;
  ss >> word;
  if (word != key) throw E("expected '" + key + "', got '" + word + "'");
  std::vector<int> v;
  long long x;
  while (ss >> x) v.push_back(static_cast<int>(x));
  if (!ss.eof()) throw E("bad number in line '" + key + "'");
  if (v.size() != count) throw E("line '" + key + "' has " + std::to_string(v.size()) + " entries, want " + std::to_string(count));
  return v;
}

template <class E>
long long read_header(std::istream& in, const std::string& key) {
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ss(line);
    std::string word;
    long long n = -1;
    ss >> word >> n;
    if (word != key || n < 0) throw E("expected '" + key + " <count>'");
    return n;
  }
  throw E("missing '" + key + "' header");
}

}  // namespace

void write_tree(std::ostream& out, const LabeledPlaneTree& t) {
  out << "tree " << t.edge_count() << '\n';
  write_row(out, "parents", t.parent);
  write_row(out, "labels", t.labels);
}

LabeledPlaneTree read_tree(std::istream& in) {
  long long n = read_header<LabelError>(in, "tree");
  LabeledPlaneTree t;
  t.parent = read_row<LabelError>(in, "parents", static_cast<size_t>(n + 1));
  t.labels = read_row<LabelError>(in, "labels", static_cast<size_t>(n + 1));
  t.validate();
  return t;
}

void write_map(std::ostream& out, const QuadMap& m) {
  out << "quadmap " << m.half_edge_count() << '\n';
  write_row(out, "sigma", m.sigma);
  write_row(out, "alpha", m.alpha);
  write_row(out, "vertex", m.vertex_of);
  out << "origin " << m.origin << '\n';
  out << "root " << m.root << '\n';
}

QuadMap read_map(std::istream& in) {
  long long H = read_header<MapError>(in, "quadmap");
  QuadMap m;
  m.sigma = read_row<MapError>(in, "sigma", static_cast<size_t>(H));
  m.alpha = read_row<MapError>(in, "alpha", static_cast<size_t>(H));
  m.vertex_of = read_row<MapError>(in, "vertex", static_cast<size_t>(H));
  m.origin = read_row<MapError>(in, "origin", 1)[0];
  m.root = read_row<MapError>(in, "root", 1)[0];
  int top = -1;
  for (int v : m.vertex_of) top = std::max(top, v);
  m.vertex_count = top + 1;
  m.validate();
  return m;
}

std::string tree_to_string(const LabeledPlaneTree& t) {
  std::ostringstream ss;
  write_tree(ss, t);
  return ss.str();
}

LabeledPlaneTree tree_from_string(const std::string& s) {
  std::istringstream ss(s);
  return read_tree(ss);
}

std::string map_to_string(const QuadMap& m) {
  std::ostringstream ss;
  write_map(ss, m);
  return ss.str();
}

QuadMap map_from_string(const std::string& s) {
  std::istringstream ss(s);
  return read_map(ss);
}

}  // namespace minbu
