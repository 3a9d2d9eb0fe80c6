#pragma once

#include <vector>

#include "bellstir/graph.hpp"

namespace bellstir {

// A tree together with its unique 2-colouring {A, B} (A holds vertex 0)
// and its sorted leaves.
class Tree {
 public:
  // Throws PreconditionError unless g is connected with n-1 edges.
  explicit Tree(Graph g);

  const Graph& graph() const { return graph_; }
  int order() const { return graph_.order(); }
  const std::vector<Vertex>& part_a() const { return part_a_; }
  const std::vector<Vertex>& part_b() const { return part_b_; }
  const std::vector<Vertex>& leaves() const { return leaves_; }
  bool in_part_a(Vertex v) const { return side_[v] == 0; }
  bool is_star() const;

 private:
  Graph graph_;
  std::vector<Vertex> part_a_;
  std::vector<Vertex> part_b_;
  std::vector<Vertex> leaves_;
  std::vector<int> side_;
};

}  // namespace bellstir
