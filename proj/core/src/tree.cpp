#include "bellstir/tree.hpp"

#include <algorithm>

#include "bellstir/errors.hpp"

namespace bellstir {

Tree::Tree(Graph g) : graph_(std::move(g)) {
  if (!is_tree(graph_)) throw PreconditionError("graph is not a tree");
  const int n = graph_.order();
  side_.assign(static_cast<std::size_t>(n), -1);
  side_[0] = 0;
  std::vector<Vertex> stack{0};
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : graph_.neighbours(v)) {
      if (side_[w] < 0) {
        side_[w] = 1 - side_[v];
        stack.push_back(w);
      }
    }
  }
  for (Vertex v = 0; v < n; ++v) {
    (side_[v] == 0 ? part_a_ : part_b_).push_back(v);
    if (graph_.degree(v) == 1) leaves_.push_back(v);
  }
}

bool Tree::is_star() const {
  return order() >= 3 && graph_.max_degree() == order() - 1;
}

}  // namespace bellstir
