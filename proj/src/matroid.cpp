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

#include "matcon/matroid.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>
#include <set>
#include <unordered_set>

#include "matcon/error.hpp"

namespace matcon {

namespace detail {

struct Node {
  MatroidKind kind;
  int universe = 0;
  Subset ground;
  std::shared_ptr<const std::vector<std::string>> labels;
  std::string name;
  bool validated = true;

  Node(MatroidKind k, int n, Subset g, std::shared_ptr<const std::vector<std::string>> l)
      : kind(k), universe(n), ground(g), labels(std::move(l)) {}
  virtual ~Node() = default;
  virtual int rank(Subset x) const = 0;
  virtual std::shared_ptr<Node> clone() const = 0;
};

}  // namespace detail

namespace {

using detail::Node;

// Concrete matroids on at most this many elements keep their full rank table.
constexpr int kTableLimit = 16;

std::shared_ptr<const std::vector<std::string>> make_labels(int n, std::vector<std::string> labels) {
  if (labels.empty()) labels = default_labels(n);
  if (static_cast<int>(labels.size()) != n) {
    throw Error(ErrorKind::kInvalidArgument,
                "expected " + std::to_string(n) + " labels, got " + std::to_string(labels.size()));
  }
  std::set<std::string> seen;
  for (const auto& l : labels) {
    if (l.empty() || l.find_first_of(", \t\n|") != std::string::npos) {
      throw Error(ErrorKind::kInvalidArgument, "bad element label '" + l + "'");
    }
    if (!seen.insert(l).second) throw Error(ErrorKind::kInvalidArgument, "duplicate label '" + l + "'");
  }
  return std::make_shared<const std::vector<std::string>>(std::move(labels));
}

void check_universe(int n) {
  if (n < 0 || n > kMaxElements) {
    throw Error(ErrorKind::kInvalidArgument, "ground set size must be in [0, " + std::to_string(kMaxElements) + "]");
  }
}

struct UniformNode final : Node {
  int r;
  UniformNode(int r_, int n, std::shared_ptr<const std::vector<std::string>> l)
      : Node(MatroidKind::kUniform, n, Subset::range(n), std::move(l)), r(r_) {}
  int rank(Subset x) const override { return std::min(x.size(), r); }
  std::shared_ptr<Node> clone() const override { return std::make_shared<UniformNode>(*this); }
};

struct TabulatedNode : Node {
  std::vector<std::uint8_t> table;  // empty when the universe is too large
  using Node::Node;
  int rank(Subset x) const final {
    if (!table.empty()) return table[x.bits()];
    return compute(x);
  }
  virtual int compute(Subset x) const = 0;
};

struct LinearNode final : TabulatedNode {
  Matrix matrix;
  LinearNode(Matrix m, std::shared_ptr<const std::vector<std::string>> l)
      : TabulatedNode(MatroidKind::kLinear, m.cols(), Subset::range(m.cols()), std::move(l)), matrix(std::move(m)) {}
  int compute(Subset x) const override { return column_rank(matrix, x); }
  std::shared_ptr<Node> clone() const override { return std::make_shared<LinearNode>(*this); }

  // Depth-first over subsets, extending an echelon basis one column at a time.
  void fill_table() {
    const int n = universe;
    table.assign(std::size_t{1} << n, 0);
    std::vector<Vector> cols;
    for (int c = 0; c < n; ++c) cols.push_back(matrix.column(c));
    std::function<void(int, std::uint64_t, const SpanBuilder&)> rec = [&](int next, std::uint64_t mask,
                                                                        const SpanBuilder& span) {
      table[mask] = static_cast<std::uint8_t>(span.rank());
      for (int e = next; e < n; ++e) {
        SpanBuilder grown = span;
        grown.add(cols[e]);
        rec(e + 1, mask | (std::uint64_t{1} << e), grown);
      }
    };
    rec(0, 0, SpanBuilder(matrix.field(), matrix.rows()));
  }
};

struct BasesNode final : TabulatedNode {
  std::vector<Subset> bases;
  BasesNode(int n, std::vector<Subset> b, std::shared_ptr<const std::vector<std::string>> l)
      : TabulatedNode(MatroidKind::kBases, n, Subset::range(n), std::move(l)), bases(std::move(b)) {}
  int compute(Subset x) const override {
    int best = 0;
    for (Subset b : bases) best = std::max(best, (x & b).size());
    return best;
  }
  std::shared_ptr<Node> clone() const override { return std::make_shared<BasesNode>(*this); }

  void fill_table() {
    const int n = universe;
    const std::size_t count = std::size_t{1} << n;
    std::vector<std::uint8_t> indep(count, 0);
    for (Subset b : bases) indep[b.bits()] = 1;
    for (std::size_t x = count; x-- > 0;) {
      if (indep[x]) continue;
      for (int e = 0; e < n; ++e) {
        if (!((x >> e) & 1U) && indep[x | (std::size_t{1} << e)]) {
          indep[x] = 1;
          break;
        }
      }
    }
    table.assign(count, 0);
    for (std::size_t x = 1; x < count; ++x) {
      if (indep[x]) {
        table[x] = static_cast<std::uint8_t>(std::popcount(x));
      } else {
        std::uint8_t best = 0;
        for (int e = 0; e < n; ++e) {
          if ((x >> e) & 1U) best = std::max(best, table[x & ~(std::size_t{1} << e)]);
        }
        table[x] = best;
      }
    }
  }
};

struct GraphicNode final : TabulatedNode {
  int vertices;
  std::vector<Edge> edges;
  GraphicNode(int v, std::vector<Edge> e, std::shared_ptr<const std::vector<std::string>> l)
      : TabulatedNode(MatroidKind::kGraphic, static_cast<int>(e.size()), Subset::range(static_cast<int>(e.size())),
                      std::move(l)),
        vertices(v),
        edges(std::move(e)) {}
  int compute(Subset x) const override {
    std::vector<int> parent(vertices);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> root = [&](int a) { return parent[a] == a ? a : parent[a] = root(parent[a]); };
    int r = 0;
    for (int e : x) {
      const int a = root(edges[e].u), b = root(edges[e].v);
      if (a != b) {
        parent[a] = b;
        ++r;
      }
    }
    return r;
  }
  std::shared_ptr<Node> clone() const override { return std::make_shared<GraphicNode>(*this); }
};

struct MinorNode final : Node {
  Matroid parent;
  Subset contract, remove;
  int contract_rank;
  MinorNode(const Matroid& p, Subset c, Subset d)
      : Node(MatroidKind::kMinor, p.universe(), p.ground() - c - d,
             std::make_shared<const std::vector<std::string>>(p.labels())),
        parent(p),
        contract(c),
        remove(d),
        contract_rank(p.rank(c)) {}
  int rank(Subset x) const override { return parent.rank(x | contract) - contract_rank; }
  std::shared_ptr<Node> clone() const override { return std::make_shared<MinorNode>(*this); }
};

struct DualNode final : Node {
  Matroid parent;
  int parent_rank;
  explicit DualNode(const Matroid& p)
      : Node(MatroidKind::kDual, p.universe(), p.ground(), std::make_shared<const std::vector<std::string>>(p.labels())),
        parent(p),
        parent_rank(p.rank()) {}
  int rank(Subset x) const override { return x.size() + parent.rank(ground - x) - parent_rank; }
  std::shared_ptr<Node> clone() const override { return std::make_shared<DualNode>(*this); }
};

bool bases_satisfy_exchange(const std::vector<Subset>& bases) {
  std::unordered_set<std::uint64_t> lookup;
  for (Subset b : bases) lookup.insert(b.bits());
  for (Subset b1 : bases) {
    for (Subset b2 : bases) {
      for (int x : b1 - b2) {
        bool found = false;
        for (int y : b2 - b1) {
          if (lookup.count(b1.without(x).with(y).bits())) {
            found = true;
            break;
          }
        }
        if (!found) return false;
      }
    }
  }
  return true;
}

}  // namespace

std::string_view kind_name(MatroidKind kind) {
  switch (kind) {
    case MatroidKind::kLinear: return "linear";
    case MatroidKind::kUniform: return "uniform";
    case MatroidKind::kBases: return "bases";
    case MatroidKind::kGraphic: return "graphic";
    case MatroidKind::kMinor: return "minor";
    case MatroidKind::kDual: return "dual";
  }
  return "unknown";
}

std::vector<std::string> default_labels(int n) {
  std::vector<std::string> out;
  out.reserve(n);
  for (int i = 0; i < n; ++i) out.push_back("e" + std::to_string(i));
  return out;
}

Matroid Matroid::uniform(int r, int n, std::vector<std::string> labels) {
  check_universe(n);
  if (r < 0 || r > n) throw Error(ErrorKind::kInvalidArgument, "uniform matroid needs 0 <= r <= n");
  auto node = std::make_shared<UniformNode>(r, n, make_labels(n, std::move(labels)));
  node->name = "U" + std::to_string(r) + "," + std::to_string(n);
  return Matroid(std::move(node));
}

Matroid Matroid::linear(Matrix matrix, std::vector<std::string> labels) {
  const int n = matrix.cols();
  check_universe(n);
  auto node = std::make_shared<LinearNode>(std::move(matrix), make_labels(n, std::move(labels)));
  if (n <= kTableLimit) node->fill_table();
  return Matroid(std::move(node));
}

Matroid Matroid::from_bases(int n, std::vector<Subset> bases, std::vector<std::string> labels) {
  check_universe(n);
  if (bases.empty()) throw Error(ErrorKind::kValidationError, "a matroid has at least one basis");
  std::sort(bases.begin(), bases.end());
  bases.erase(std::unique(bases.begin(), bases.end()), bases.end());
  const int r = bases.front().size();
  for (Subset b : bases) {
    if (!b.is_subset_of(Subset::range(n))) throw Error(ErrorKind::kValidationError, "basis outside ground set");
    if (b.size() != r) throw Error(ErrorKind::kValidationError, "bases of different sizes");
  }
  auto node = std::make_shared<BasesNode>(n, std::move(bases), make_labels(n, std::move(labels)));
  if (n <= 12) {
    if (!bases_satisfy_exchange(node->bases)) {
      throw Error(ErrorKind::kValidationError, "basis exchange axiom fails");
    }
  } else {
    node->validated = false;
  }
  if (n <= kTableLimit) node->fill_table();
  return Matroid(std::move(node));
}

Matroid Matroid::graphic(int vertices, std::vector<Edge> edges, std::vector<std::string> labels) {
  const int n = static_cast<int>(edges.size());
  check_universe(n);
  for (const Edge& e : edges) {
    if (e.u < 0 || e.v < 0 || e.u >= vertices || e.v >= vertices) {
      throw Error(ErrorKind::kInvalidArgument, "edge endpoint outside vertex range");
    }
  }
  auto node = std::make_shared<GraphicNode>(vertices, std::move(edges), make_labels(n, std::move(labels)));
  if (n <= kTableLimit) {
    node->table.assign(std::size_t{1} << n, 0);
    for (std::size_t x = 0; x < node->table.size(); ++x) {
      node->table[x] = static_cast<std::uint8_t>(node->compute(Subset(x)));
    }
  }
  return Matroid(std::move(node));
}

Matroid Matroid::from_rank_table(int n, std::vector<std::uint8_t> ranks, std::vector<std::string> labels) {
  check_universe(n);
  if (n > 24 || ranks.size() != (std::size_t{1} << n)) {
    throw Error(ErrorKind::kInvalidArgument, "rank table size does not match ground set");
  }
  const std::size_t full = ranks.size() - 1;
  const int r = ranks[full];
  std::vector<Subset> bases;
  for (std::size_t x = 0; x <= full; ++x) {
    if (std::popcount(x) == r && ranks[x] == r) bases.emplace_back(x);
  }
  auto node = std::make_shared<BasesNode>(n, std::move(bases), make_labels(n, std::move(labels)));
  if (n <= kTableLimit) {
    node->table = std::move(ranks);
  }
  return Matroid(std::move(node));
}

MatroidKind Matroid::kind() const { return node_->kind; }
int Matroid::universe() const { return node_->universe; }
Subset Matroid::ground() const { return node_->ground; }
int Matroid::rank(Subset x) const { return node_->rank(x); }
const std::vector<std::string>& Matroid::labels() const { return *node_->labels; }
const std::string& Matroid::name() const { return node_->name; }
bool Matroid::validated() const { return node_->validated; }

int Matroid::find(std::string_view label) const {
  const auto& ls = labels();
  for (std::size_t i = 0; i < ls.size(); ++i) {
    if (ls[i] == label) return static_cast<int>(i);
  }
  return -1;
}

Matroid Matroid::with_name(std::string name) const {
  auto copy = node_->clone();
  copy->name = std::move(name);
  return Matroid(std::move(copy));
}

const Matrix* Matroid::matrix() const {
  if (const auto* n = dynamic_cast<const LinearNode*>(node_.get())) return &n->matrix;
  return nullptr;
}
const std::vector<Subset>* Matroid::bases() const {
  if (const auto* n = dynamic_cast<const BasesNode*>(node_.get())) return &n->bases;
  return nullptr;
}
const std::vector<Edge>* Matroid::edges() const {
  if (const auto* n = dynamic_cast<const GraphicNode*>(node_.get())) return &n->edges;
  return nullptr;
}
int Matroid::vertex_count() const {
  if (const auto* n = dynamic_cast<const GraphicNode*>(node_.get())) return n->vertices;
  return 0;
}
const Matroid* Matroid::parent() const {
  if (const auto* n = dynamic_cast<const MinorNode*>(node_.get())) return &n->parent;
  if (const auto* n = dynamic_cast<const DualNode*>(node_.get())) return &n->parent;
  return nullptr;
}
Subset Matroid::contracted() const {
  if (const auto* n = dynamic_cast<const MinorNode*>(node_.get())) return n->contract;
  return {};
}
Subset Matroid::deleted() const {
  if (const auto* n = dynamic_cast<const MinorNode*>(node_.get())) return n->remove;
  return {};
}

Matroid dual(const Matroid& m) {
  if (const auto* n = dynamic_cast<const DualNode*>(m.node_.get())) return n->parent;
  auto node = std::make_shared<DualNode>(m);
  node->name = m.name().empty() ? "" : m.name() + "*";
  return Matroid(std::move(node));
}

Matroid minor(const Matroid& m, Subset contract, Subset remove) {
  if (contract.intersects(remove)) throw Error(ErrorKind::kInvalidArgument, "contract and delete sets overlap");
  if (!(contract | remove).is_subset_of(m.ground())) {
    throw Error(ErrorKind::kInvalidArgument, "minor sets outside the ground set");
  }
  if (contract.empty() && remove.empty()) return m;
  if (const auto* n = dynamic_cast<const MinorNode*>(m.node_.get())) {
    auto node = std::make_shared<MinorNode>(n->parent, n->contract | contract, n->remove | remove);
    node->name = m.name();
    return Matroid(std::move(node));
  }
  auto node = std::make_shared<MinorNode>(m, contract, remove);
  node->name = m.name();
  return Matroid(std::move(node));
}

Matroid minor_apply(const Matroid& m, const MinorContext& ctx, Subset x) {
  if (ctx.contract.intersects(ctx.remove)) throw Error(ErrorKind::kInvalidArgument, "C and D overlap");
  if (!x.is_subset_of(ctx.contract | ctx.remove)) {
    throw Error(ErrorKind::kInvalidRegion, "region is not contained in C ∪ D");
  }
  return minor(m, ctx.contract & x, ctx.remove & x);
}

std::vector<std::uint8_t> rank_table(const Matroid& m) {
  std::vector<std::uint8_t> out;
  out.reserve(std::size_t{1} << m.size());
  for_each_subset(m.ground(), [&](Subset x) { out.push_back(static_cast<std::uint8_t>(m.rank(x))); });
  return out;
}

Matroid compact(const Matroid& m) {
  std::vector<std::string> labels;
  for (int e : m.ground()) labels.push_back(m.label(e));
  return Matroid::from_rank_table(m.size(), rank_table(m), std::move(labels)).with_name(m.name());
}

Subset closure(const Matroid& m, Subset x) {
  const int r = m.rank(x);
  Subset out = x;
  for (int e : m.ground() - x) {
    if (m.rank(x.with(e)) == r) out = out.with(e);
  }
  return out;
}

Subset coclosure(const Matroid& m, Subset x) { return closure(dual(m), x); }

bool is_loop(const Matroid& m, int e) { return m.rank(Subset::single(e)) == 0; }

bool is_coloop(const Matroid& m, int e) { return m.rank(m.ground().without(e)) < m.rank(); }

bool is_independent(const Matroid& m, Subset x) { return m.rank(x) == x.size(); }

Subset basis_of(const Matroid& m, Subset x) {
  Subset b;
  for (int e : x) {
    if (m.rank(b.with(e)) > b.size()) b = b.with(e);
  }
  return b;
}

Subset loops(const Matroid& m) {
  Subset out;
  for (int e : m.ground()) {
    if (is_loop(m, e)) out = out.with(e);
  }
  return out;
}

std::vector<Subset> parallel_classes(const Matroid& m) {
  std::vector<Subset> out;
  Subset seen = loops(m);
  for (int e : m.ground()) {
    if (seen.contains(e)) continue;
    Subset cls = Subset::single(e);
    for (int f : m.ground() - seen) {
      if (f > e && m.rank(Subset::single(e).with(f)) == 1) cls = cls.with(f);
    }
    seen |= cls;
    out.push_back(cls);
  }
  return out;
}

bool is_simple(const Matroid& m) {
  if (!loops(m).empty()) return false;
  for (Subset cls : parallel_classes(m)) {
    if (cls.size() > 1) return false;
  }
  return true;
}

bool satisfies_rank_axioms(const Matroid& m) {
  const Subset g = m.ground();
  const auto table = rank_table(m);
  const SubsetIndexer idx(g);
  const int n = idx.size();
  if (table[0] != 0) return false;
  for (std::size_t x = 0; x < table.size(); ++x) {
    if (table[x] > std::popcount(x)) return false;
    for (int e = 0; e < n; ++e) {
      const std::size_t bit = std::size_t{1} << e;
      if (x & bit) continue;
      const int step = table[x | bit] - table[x];
      if (step < 0 || step > 1) return false;
    }
  }
  if (n <= 10) {
    // Literal (R3) over all pairs.
    for (std::size_t x = 0; x < table.size(); ++x) {
      for (std::size_t y = x; y < table.size(); ++y) {
        if (table[x] + table[y] < table[x | y] + table[x & y]) return false;
      }
    }
    return true;
  }
  // Local submodularity; equivalent to (R3) for any set function.
  for (std::size_t x = 0; x < table.size(); ++x) {
    for (int e = 0; e < n; ++e) {
      const std::size_t be = std::size_t{1} << e;
      if (x & be) continue;
      for (int f = e + 1; f < n; ++f) {
        const std::size_t bf = std::size_t{1} << f;
        if (x & bf) continue;
        if (table[x | be] + table[x | bf] < table[x | be | bf] + table[x]) return false;
      }
    }
  }
  return true;
}

bool same_rank_oracle(const Matroid& a, const Matroid& b) {
  if (a.size() != b.size()) return false;
  return rank_table(a) == rank_table(b);
}

namespace {

// Per-element signature: for each (|X|, r(X)) the number of X containing e.
std::vector<std::vector<int>> element_signatures(const std::vector<std::uint8_t>& table, int n, int r) {
  std::vector<std::vector<int>> sig(n, std::vector<int>((n + 1) * (r + 1), 0));
  for (std::size_t x = 0; x < table.size(); ++x) {
    const int slot = std::popcount(x) * (r + 1) + table[x];
    for (std::size_t rest = x; rest != 0; rest &= rest - 1) ++sig[std::countr_zero(rest)][slot];
  }
  return sig;
}

}  // namespace

std::optional<std::vector<int>> find_isomorphism(const Matroid& a, const Matroid& b) {
  const int n = a.size();
  if (n != b.size() || a.rank() != b.rank()) return std::nullopt;
  check_size("isomorphism ground set", static_cast<std::size_t>(n), 16);
  return find_table_isomorphism(rank_table(a), rank_table(b), n);
}

std::optional<std::vector<int>> find_table_isomorphism(const std::vector<std::uint8_t>& ta,
                                                       const std::vector<std::uint8_t>& tb, int n) {
  const int r = ta.back();
  if (tb.back() != r) return std::nullopt;
  const auto sa = element_signatures(ta, n, r);
  const auto sb = element_signatures(tb, n, r);
  {
    auto ma = sa, mb = sb;
    std::sort(ma.begin(), ma.end());
    std::sort(mb.begin(), mb.end());
    if (ma != mb) return std::nullopt;
  }
  std::vector<int> image(n, -1);
  std::vector<bool> used(n, false);
  // img[S] = image of S (as a bit pattern) for S over the mapped prefix.
  std::vector<std::uint32_t> img(std::size_t{1} << n, 0);
  std::function<bool(int)> rec = [&](int i) {
    if (i == n) return true;
    const std::size_t prefix = std::size_t{1} << i;
    for (int j = 0; j < n; ++j) {
      if (used[j] || sa[i] != sb[j]) continue;
      bool ok = true;
      for (std::size_t s = 0; s < prefix && ok; ++s) {
        const std::uint32_t mapped = img[s] | (std::uint32_t{1} << j);
        ok = ta[s | prefix] == tb[mapped];
      }
      if (!ok) continue;
      for (std::size_t s = 0; s < prefix; ++s) img[s | prefix] = img[s] | (std::uint32_t{1} << j);
      used[j] = true;
      image[i] = j;
      if (rec(i + 1)) return true;
      used[j] = false;
    }
    return false;
  };
  if (!rec(0)) return std::nullopt;
  return image;
}

std::size_t isomorphism_invariant(const Matroid& m) { return table_invariant(rank_table(m), m.size()); }

std::size_t table_invariant(const std::vector<std::uint8_t>& t, int n) {
  const int r = t.back();
  auto sig = element_signatures(t, n, r);
  std::sort(sig.begin(), sig.end());
  std::size_t h = std::hash<int>()(n) * 1000003U ^ std::hash<int>()(r);
  for (const auto& s : sig) {
    for (int v : s) h = h * 1000003U ^ std::hash<int>()(v);
  }
  return h;
}

bool has_minor(const Matroid& m, const Matroid& n) {
  check_size("has_minor ground set", static_cast<std::size_t>(m.size()), 12);
  const Matroid big = compact(m);
  const Matroid small = compact(n);
  const int size = big.size();
  const int k = small.size();
  const int c = big.rank() - small.rank();
  const int d = (size - k) - c;
  if (k > size || c < 0 || d < 0) return false;
  const std::size_t target = isomorphism_invariant(small);
  const Subset all = big.ground();
  bool found = false;
  for_each_subset(all, [&](Subset con) {
    if (found || con.size() != c || !is_independent(big, con)) return;
    for_each_subset(all - con, [&](Subset del) {
      if (found || del.size() != d) return;
      if (big.rank(all - del) != big.rank()) return;
      const Matroid candidate = compact(minor(big, con, del));
      if (isomorphism_invariant(candidate) != target) return;
      if (isomorphic(candidate, small)) found = true;
    });
  });
  return found;
}

Subset parse_subset(const Matroid& m, std::string_view text) {
  Subset out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find(',', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view tok = text.substr(pos, end - pos);
    while (!tok.empty() && std::isspace(static_cast<unsigned char>(tok.front()))) tok.remove_prefix(1);
    while (!tok.empty() && std::isspace(static_cast<unsigned char>(tok.back()))) tok.remove_suffix(1);
    if (!tok.empty()) {
      const int id = m.find(tok);
      if (id < 0 || !m.ground().contains(id)) {
        throw Error(ErrorKind::kInvalidArgument, "unknown element '" + std::string(tok) + "'");
      }
      out = out.with(id);
    }
    pos = end + 1;
  }
  return out;
}

std::vector<std::string> subset_labels(const Matroid& m, Subset x) {
  std::vector<std::string> out;
  for (int e : x) out.push_back(m.label(e));
  return out;
}

std::string format_subset(const Matroid& m, Subset x) {
  std::string out = "{";
  bool first = true;
  for (int e : x) {
    if (!first) out += ",";
    out += m.label(e);
    first = false;
  }
  return out + "}";
}

}  // namespace matcon
