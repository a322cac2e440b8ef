#ifndef SEMICOV_EXPORT_HPP
#define SEMICOV_EXPORT_HPP

#include <ostream>
#include <string>

#include <json.hpp>

#include "semicov/family.hpp"
#include "semicov/numerical_semigroup.hpp"

namespace semicov {

using json = nlohmann::ordered_json;

inline json to_json(const NumericalSemigroup& s) {
  return json{{"msg", s.msg()},
              {"frobenius", s.frobenius()},
              {"genus", s.genus()},
              {"gaps", s.gaps()}};
}

// {"minimum": sg, "members": [sg...], "edges": [[child, parent]...]};
// members in BFS order, edges by child index.
inline json to_json(const FamilyTree& tree) {
  json members = json::array();
  for (const auto& node : tree.nodes) members.push_back(to_json(node.sg));
  json edges = json::array();
  for (std::size_t i = 1; i < tree.nodes.size(); ++i)
    edges.push_back(json::array({i, tree.nodes[i].parent}));
  return json{{"minimum", to_json(tree.nodes.front().sg)},
              {"members", std::move(members)},
              {"edges", std::move(edges)}};
}

inline std::string join(const std::vector<int>& xs, const char* sep = ",") {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(xs[i]);
  }
  return out;
}

// Node label: the minimal generators up to F; when those alone do not
// generate the semigroup (some minimal generator exceeds F), the label
// carries the tail {F+1,->} explicitly.
inline std::string dot_label(const NumericalSemigroup& s) {
  if (s.is_naturals()) return "{0,→}";
  const auto gens = s.msg();
  std::vector<int> below;
  for (int g : gens)
    if (g <= s.frobenius()) below.push_back(g);
  const std::string tail =
      "{" + std::to_string(s.frobenius() + 1) + ",→}";
  if (below.size() == gens.size()) return join(below);
  if (below.empty()) return "{0," + std::to_string(s.frobenius() + 1) +
                            ",→}";
  return join(below) + "∪" + tail;
}

// DOT export; edges point from child to parent.
inline void to_dot(const FamilyTree& tree, std::ostream& os) {
  os << "digraph family {\n";
  for (std::size_t i = 0; i < tree.nodes.size(); ++i)
    os << "  n" << i << " [label=\"" << dot_label(tree.nodes[i].sg)
       << "\"];\n";
  for (std::size_t i = 1; i < tree.nodes.size(); ++i)
    os << "  n" << i << " -> n" << tree.nodes[i].parent << ";\n";
  os << "}\n";
}

}  // namespace semicov

#endif  // SEMICOV_EXPORT_HPP
