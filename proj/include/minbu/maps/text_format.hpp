#pragma once

#include <iosfwd>
#include <string>

#include "minbu/maps/labeled_tree.hpp"
#include "minbu/maps/quad_map.hpp"

namespace minbu {

// Line formats, see docs/FORMATS.md. Readers throw LabelError / MapError on
// malformed input and validate what they read.
void write_tree(std::ostream& out, const LabeledPlaneTree& t);
LabeledPlaneTree read_tree(std::istream& in);
std::string tree_to_string(const LabeledPlaneTree& t);
LabeledPlaneTree tree_from_string(const std::string& s);

void write_map(std::ostream& out, const QuadMap& m);
QuadMap read_map(std::istream& in);
std::string map_to_string(const QuadMap& m);
QuadMap map_from_string(const std::string& s);

}  // namespace minbu
