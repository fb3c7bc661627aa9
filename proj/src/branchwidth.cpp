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

#include "matcon/branchwidth.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <memory>
#include <set>

#include "matcon/error.hpp"

namespace matcon {

BranchTree::BranchTree(int vertices, std::vector<std::pair<int, int>> edges, std::vector<int> element)
    : edges_(std::move(edges)), adj_(vertices), element_(std::move(element)) {
  if (static_cast<int>(element_.size()) != vertices) element_.assign(vertices, -1);
  for (const auto& [u, v] : edges_) {
    if (u < 0 || v < 0 || u >= vertices || v >= vertices || u == v) {
      throw Error(ErrorKind::kInvalidArgument, "tree edge endpoint out of range");
    }
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
  if (vertices > 0 && static_cast<int>(edges_.size()) != vertices - 1) {
    throw Error(ErrorKind::kInvalidArgument, "a tree on n vertices has n − 1 edges");
  }
}

std::vector<int> BranchTree::leaves() const {
  std::vector<int> out;
  for (int v = 0; v < vertex_count(); ++v) {
    if (degree(v) <= 1) out.push_back(v);
  }
  return out;
}

Subset BranchTree::display(int edge, int side) const {
  const auto [u, v] = edges_[edge];
  if (side != u && side != v) throw Error(ErrorKind::kInvalidArgument, "side must be an endpoint of the edge");
  const int blocked = side == u ? v : u;
  Subset out;
  std::vector<int> stack{side};
  std::vector<bool> seen(vertex_count(), false);
  seen[side] = seen[blocked] = true;
  while (!stack.empty()) {
    const int x = stack.back();
    stack.pop_back();
    if (element_[x] >= 0) out = out.with(element_[x]);
    for (int y : adj_[x]) {
      if (!seen[y]) {
        seen[y] = true;
        stack.push_back(y);
      }
    }
  }
  return out;
}

namespace {

// Farthest vertex from s and its distance.
std::pair<int, int> farthest(const BranchTree& t, int s) {
  std::vector<int> dist(t.vertex_count(), -1);
  std::vector<int> queue{s};
  dist[s] = 0;
  int best = s;
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const int x = queue[i];
    if (dist[x] > dist[best]) best = x;
    for (int y : t.neighbors(x)) {
      if (dist[y] < 0) {
        dist[y] = dist[x] + 1;
        queue.push_back(y);
      }
    }
  }
  return {best, dist[best]};
}

std::string rooted_shape(const BranchTree& t, int v, int parent) {
  std::vector<std::string> kids;
  for (int c : t.neighbors(v)) {
    if (c != parent) kids.push_back(rooted_shape(t, c, v));
  }
  std::sort(kids.begin(), kids.end());
  std::string out = "(";
  for (const auto& k : kids) out += k;
  return out + ")";
}

}  // namespace

int BranchTree::longest_path() const {
  if (vertex_count() == 0) return 0;
  return farthest(*this, farthest(*this, 0).first).second;
}

bool BranchTree::is_cubic() const {
  for (int v = 0; v < vertex_count(); ++v) {
    if (degree(v) != 1 && degree(v) != 3 && vertex_count() > 1) return false;
  }
  return true;
}

std::string BranchTree::canonical_shape() const {
  if (vertex_count() == 0) return "";
  // Centre(s) by repeatedly stripping leaves.
  std::vector<int> deg(vertex_count());
  std::vector<int> layer;
  for (int v = 0; v < vertex_count(); ++v) {
    deg[v] = degree(v);
    if (deg[v] <= 1) layer.push_back(v);
  }
  int remaining = vertex_count();
  while (remaining > 2) {
    remaining -= static_cast<int>(layer.size());
    std::vector<int> next;
    for (int v : layer) {
      for (int w : adj_[v]) {
        if (--deg[w] == 1) next.push_back(w);
      }
    }
    layer = std::move(next);
  }
  if (layer.size() == 1) return rooted_shape(*this, layer[0], -1);
  std::string a = rooted_shape(*this, layer[0], layer[1]);
  std::string b = rooted_shape(*this, layer[1], layer[0]);
  if (b < a) std::swap(a, b);
  return "[" + a + b + "]";
}

void check_branch_tree(const Matroid& m, const BranchTree& t) {
  if (!t.is_cubic()) throw Error(ErrorKind::kNotCubic, "internal vertices must have degree 3");
  Subset seen;
  for (int v = 0; v < t.vertex_count(); ++v) {
    const int e = t.element(v);
    const bool leaf = t.degree(v) <= 1;
    if (leaf != (e >= 0)) throw Error(ErrorKind::kBadLabelling, "leaves and labelled vertices must coincide");
    if (e < 0) continue;
    if (!m.ground().contains(e) || seen.contains(e)) throw Error(ErrorKind::kBadLabelling, "leaf labels are not a bijection onto E");
    seen = seen.with(e);
  }
  if (seen != m.ground()) throw Error(ErrorKind::kBadLabelling, "some element labels no leaf");
}

int width(const Matroid& m, const BranchTree& t) {
  if (m.size() < 2) throw Error(ErrorKind::kInvalidArgument, "width needs at least two elements");
  check_branch_tree(m, t);
  int best = 0;
  for (int i = 0; i < static_cast<int>(t.edges().size()); ++i) {
    best = std::max(best, lambda(m, t.display(i, t.edges()[i].first)) + 1);
  }
  return best;
}

BranchWidthResult branch_width(const Matroid& m) {
  const int n = m.size();
  check_size("branch-width ground set", static_cast<std::size_t>(n), 10);
  if (n == 0) return {0, BranchTree()};
  if (n == 1) return {1, BranchTree(1, {}, {m.ground().first()})};
  const Subset g = m.ground();
  const int e0 = g.first();
  const SubsetIndexer idx(g - Subset::single(e0));
  const std::size_t count = idx.count();
  // g[x]: least possible max of λ over the edges of a subtree displaying x,
  // including the edge above it; split[x] the chosen part with the lowest element.
  std::vector<int> best(count, 0);
  std::vector<std::size_t> split(count, 0);
  for (std::size_t x = 1; x < count; ++x) {
    const int lx = lambda(m, idx.subset(x));
    if (std::popcount(x) == 1) {
      best[x] = lx;
      continue;
    }
    const std::size_t low = x & (~x + 1);
    const std::size_t rest = x & ~low;
    int opt = 1 << 20;
    std::size_t arg = 0;
    // x1 = low ∪ s for s ⊊ rest, in increasing order of s.
    for (std::size_t s = 0;; s = (s - rest) & rest) {
      if (s == rest) break;
      const std::size_t x1 = low | s, x2 = x & ~x1;
      const int v = std::max(best[x1], best[x2]);
      if (v < opt) {
        opt = v;
        arg = x1;
      }
    }
    best[x] = std::max(lx, opt);
    split[x] = arg;
  }
  // Rebuild the tree: leaf e0 joined to the subtree displaying E − e0.
  std::vector<std::pair<int, int>> edges;
  std::vector<int> element;
  std::function<int(std::size_t)> build = [&](std::size_t x) -> int {
    const int v = static_cast<int>(element.size());
    if (std::popcount(x) == 1) {
      element.push_back(idx.subset(x).first());
      return v;
    }
    element.push_back(-1);
    const int a = build(split[x]);
    const int b = build(x & ~split[x]);
    edges.emplace_back(v, a);
    edges.emplace_back(v, b);
    return v;
  };
  element.push_back(e0);
  const int sub = build(count - 1);
  edges.emplace_back(0, sub);
  const int vertices = static_cast<int>(element.size());
  BranchTree tree(vertices, std::move(edges), std::move(element));
  return {best[count - 1] + 1, std::move(tree)};
}

std::vector<Separation> nested_from_path(const Matroid& m, const BranchTree& t, const std::vector<int>& path) {
  const int w = width(m, t);
  const int edge_count = static_cast<int>(t.edges().size());
  if (path.empty()) throw Error(ErrorKind::kNotAPath, "empty path");
  for (int e : path) {
    if (e < 0 || e >= edge_count) throw Error(ErrorKind::kNotAPath, "edge index out of range");
  }
  // Walk the path, recording the vertex sequence.
  auto [s0, s1] = t.edges()[path[0]];
  int start = s0, cur = s1;
  if (path.size() > 1) {
    const auto [n0, n1] = t.edges()[path[1]];
    if (s0 == n0 || s0 == n1) std::swap(start, cur);
  }
  std::vector<int> visited{start, cur};
  for (std::size_t i = 1; i < path.size(); ++i) {
    const auto [a, b] = t.edges()[path[i]];
    int next;
    if (a == cur) {
      next = b;
    } else if (b == cur) {
      next = a;
    } else {
      throw Error(ErrorKind::kNotAPath, "consecutive edges do not share a vertex");
    }
    if (std::find(visited.begin(), visited.end(), next) != visited.end()) {
      throw Error(ErrorKind::kNotAPath, "path revisits a vertex");
    }
    visited.push_back(next);
    cur = next;
  }
  std::vector<Separation> out;
  for (std::size_t i = 0; i < path.size(); ++i) {
    const Subset x = t.display(path[i], visited[i]);
    if (!out.empty() && out.back().a == x) continue;
    out.push_back({x, m.ground() - x, w});
  }
  return out;
}

bool leafbound_check(const BranchTree& t) {
  if (!t.is_cubic()) throw Error(ErrorKind::kNotCubic, "tree is not cubic");
  const int n = t.longest_path();
  double bound = 1;
  for (int i = 0; i < n; ++i) bound *= 3;
  return static_cast<double>(t.leaves().size()) <= bound;
}

std::vector<BranchTree> cubic_trees(int leaves) {
  if (leaves < 2) throw Error(ErrorKind::kInvalidArgument, "cubic trees need at least two leaves");
  check_size("cubic tree leaves", static_cast<std::size_t>(leaves), 16);
  std::vector<BranchTree> level{BranchTree(2, {{0, 1}}, {})};
  for (int l = 3; l <= leaves; ++l) {
    std::vector<BranchTree> next;
    std::set<std::string> seen;
    for (const BranchTree& t : level) {
      for (std::size_t i = 0; i < t.edges().size(); ++i) {
        // Subdivide edge i with a new vertex s and hang a new leaf from it.
        auto edges = t.edges();
        const int s = t.vertex_count(), leaf = s + 1;
        const auto [u, v] = edges[i];
        edges[i] = {u, s};
        edges.emplace_back(s, v);
        edges.emplace_back(s, leaf);
        BranchTree grown(t.vertex_count() + 2, std::move(edges), {});
        if (seen.insert(grown.canonical_shape()).second) next.push_back(std::move(grown));
      }
    }
    level = std::move(next);
  }
  return level;
}

namespace {

std::string format_below(const Matroid& m, const BranchTree& t, int v, int parent,
                         const std::vector<int>& min_element) {
  if (t.element(v) >= 0 && t.degree(v) <= 1) return m.label(t.element(v));
  std::vector<int> kids;
  for (int c : t.neighbors(v)) {
    if (c != parent) kids.push_back(c);
  }
  std::sort(kids.begin(), kids.end(), [&](int a, int b) { return min_element[a] < min_element[b]; });
  std::string out = "(";
  for (std::size_t i = 0; i < kids.size(); ++i) out += (i ? "," : "") + format_below(m, t, kids[i], v, min_element);
  return out + ")";
}

struct Group {
  std::string label;
  std::vector<std::unique_ptr<Group>> kids;
};

class TreeParser {
 public:
  explicit TreeParser(std::string_view s) : s_(s) {}

  std::unique_ptr<Group> parse() {
    auto g = expr();
    skip();
    if (pos_ != s_.size()) fail("trailing characters");
    return g;
  }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorKind::kParseError, "branch tree: " + what + " at offset " + std::to_string(pos_), static_cast<long>(pos_));
  }
  std::unique_ptr<Group> expr() {
    skip();
    auto g = std::make_unique<Group>();
    if (pos_ < s_.size() && s_[pos_] == '(') {
      ++pos_;
      while (true) {
        g->kids.push_back(expr());
        skip();
        if (pos_ < s_.size() && s_[pos_] == ',') {
          ++pos_;
          continue;
        }
        if (pos_ < s_.size() && s_[pos_] == ')') {
          ++pos_;
          break;
        }
        fail("expected ',' or ')'");
      }
      return g;
    }
    const std::size_t begin = pos_;
    while (pos_ < s_.size() && s_[pos_] != ',' && s_[pos_] != '(' && s_[pos_] != ')' &&
           !std::isspace(static_cast<unsigned char>(s_[pos_]))) {
      ++pos_;
    }
    if (pos_ == begin) fail("expected a label");
    g->label = std::string(s_.substr(begin, pos_ - begin));
    return g;
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string format_branch_tree(const Matroid& m, const BranchTree& t) {
  if (t.vertex_count() == 0) return "()";
  if (t.vertex_count() == 1) return m.label(t.element(0));
  check_branch_tree(m, t);
  // Subtree minima for a stable child order, rooted at the smallest element's leaf.
  int root = -1;
  for (int v = 0; v < t.vertex_count(); ++v) {
    if (t.element(v) >= 0 && (root < 0 || t.element(v) < t.element(root))) root = v;
  }
  std::vector<int> min_element(t.vertex_count(), 1 << 20);
  std::function<int(int, int)> fill = [&](int v, int parent) {
    int best = t.element(v) >= 0 ? t.element(v) : 1 << 20;
    for (int c : t.neighbors(v)) {
      if (c != parent) best = std::min(best, fill(c, v));
    }
    return min_element[v] = best;
  };
  fill(root, -1);
  const int other = t.neighbors(root).front();
  return "(" + m.label(t.element(root)) + "," + format_below(m, t, other, root, min_element) + ")";
}

BranchTree parse_branch_tree(const Matroid& m, std::string_view text) {
  const auto top = TreeParser(text).parse();
  std::vector<std::pair<int, int>> edges;
  std::vector<int> element;
  std::function<int(const Group&)> build = [&](const Group& g) -> int {
    const int v = static_cast<int>(element.size());
    if (g.kids.empty()) {
      const int e = m.find(g.label);
      if (e < 0 || !m.ground().contains(e)) throw Error(ErrorKind::kBadLabelling, "unknown label '" + g.label + "'");
      element.push_back(e);
      return v;
    }
    if (g.kids.size() != 2) throw Error(ErrorKind::kNotCubic, "inner groups must have exactly two parts");
    element.push_back(-1);
    for (const auto& k : g.kids) edges.emplace_back(v, build(*k));
    return v;
  };
  if (top->kids.empty()) {
    build(*top);
  } else if (top->kids.size() == 2) {
    const int a = build(*top->kids[0]);
    const int b = build(*top->kids[1]);
    edges.emplace_back(a, b);
  } else if (top->kids.size() == 3) {
    element.push_back(-1);
    for (const auto& k : top->kids) edges.emplace_back(0, build(*k));
  } else {
    throw Error(ErrorKind::kNotCubic, "the top group must have two or three parts");
  }
  const int vertices = static_cast<int>(element.size());
  BranchTree t(vertices, std::move(edges), std::move(element));
  check_branch_tree(m, t);
  return t;
}

}  // namespace matcon
