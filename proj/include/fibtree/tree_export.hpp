#ifndef FIBTREE_TREE_EXPORT_HPP
#define FIBTREE_TREE_EXPORT_HPP

#include "fibtree/tree.hpp"

#include <json.hpp>

#include <string>

namespace fibtree {

// Graphviz DOT text for an expanded tree: core vertices v0..v(n-1), leaves
// z0..z(n-1), nodes and edges in ascending id order, LF line endings.
// Byte-identical across calls on the same graph.
std::string export_dot(const ExpandedTree& g);

// {"n": vertex count, "edges": [[u,v],...] sorted lexicographically,
//  "core": core ids, "leaves": leaf ids}.
nlohmann::ordered_json export_json(const ExpandedTree& g);

}  // namespace fibtree

#endif
