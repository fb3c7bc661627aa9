// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "matcon/connectivity.hpp"
#include "matcon/matroid.hpp"

namespace matcon {

// An undirected tree whose leaves may carry element ids (-1 when unlabelled).
// A branch-decomposition of M is a cubic tree (internal degree 3) whose leaves
// are labelled bijectively by E(M).
class BranchTree {
 public:
  BranchTree() = default;
  BranchTree(int vertices, std::vector<std::pair<int, int>> edges, std::vector<int> element);

  int vertex_count() const { return static_cast<int>(adj_.size()); }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  const std::vector<int>& neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }
  int element(int v) const { return element_[v]; }
  std::vector<int> leaves() const;

  // Elements on the leaves of the component of T − edges()[edge] that
  // contains vertex `side` (an endpoint of that edge).
  Subset display(int edge, int side) const;
  // Number of edges on a longest path.
  int longest_path() const;
  // Vertex-degree check: every vertex has degree 1 or 3 (a single edge is cubic).
  bool is_cubic() const;
  // Isomorphism-invariant encoding of the unlabelled shape.
  std::string canonical_shape() const;

 private:
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::vector<int>> adj_;
  std::vector<int> element_;
};

// Throws kNotCubic or kBadLabelling.
void check_branch_tree(const Matroid& m, const BranchTree& t);

// max over edges of λ(display) + 1. Requires |E(M)| >= 2.
int width(const Matroid& m, const BranchTree& t);

struct BranchWidthResult {
  int width = 0;
  // An optimal decomposition when |E(M)| >= 2.
  BranchTree tree;
};

// Exact branch-width by dynamic programming over the sets displayed below an
// edge of a tree rooted at the leaf of the first element; |M| when |M| <= 1.
// Guarded to |E| <= 10.
BranchWidthResult branch_width(const Matroid& m);

// Displayed sets along a path (edge indices, in order), read on the side of
// the path's start vertex; the strictly increasing ones are returned as
// width(M, T)-separations. Throws kNotAPath.
std::vector<Separation> nested_from_path(const Matroid& m, const BranchTree& t, const std::vector<int>& path);

// leaves(T) <= 3^n with n the number of edges of a longest path. Throws kNotCubic.
bool leafbound_check(const BranchTree& t);

// All unlabelled cubic trees with the given number of leaves (>= 2), one per
// isomorphism class.
std::vector<BranchTree> cubic_trees(int leaves);

// Nested parentheses over labels: "(x,y)" at the top level is an edge
// between two parts and "(x,y,z)" a vertex with three parts; inner groups are
// pairs. A single label is the one-leaf tree.
std::string format_branch_tree(const Matroid& m, const BranchTree& t);
// Throws kParseError, kNotCubic, kBadLabelling.
BranchTree parse_branch_tree(const Matroid& m, std::string_view text);

}  // namespace matcon
