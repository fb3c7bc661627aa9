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

#include "matcon/corpus.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <unordered_map>

#include "matcon/error.hpp"

namespace matcon {

namespace {

std::vector<std::string> letters(int n) {
  std::vector<std::string> out;
  for (int i = 0; i < n; ++i) out.emplace_back(1, static_cast<char>('a' + i));
  return out;
}

}  // namespace

Matroid named_u24() { return Matroid::uniform(2, 4, letters(4)).with_name("U24"); }

Matroid named_fano() {
  const Matrix m(Field::get(2), {{1, 0, 0, 1, 1, 0, 1}, {0, 1, 0, 1, 0, 1, 1}, {0, 0, 1, 0, 1, 1, 1}});
  return Matroid::linear(m, letters(7)).with_name("F7");
}

Matroid named_fano_dual() {
  // [A^T | I] for the Fano matrix [I | A].
  const Matrix m(Field::get(2),
                 {{1, 1, 0, 1, 0, 0, 0}, {1, 0, 1, 0, 1, 0, 0}, {0, 1, 1, 0, 0, 1, 0}, {1, 1, 1, 0, 0, 0, 1}});
  return Matroid::linear(m, letters(7)).with_name("F7*");
}

Matroid uniform_linear(int r, int n, int q) {
  const Field& f = Field::get(q);
  if (r < 1 || r > n || n > q + 1) {
    throw Error(ErrorKind::kInvalidArgument, "uniform_linear needs 1 <= r <= n <= q + 1");
  }
  Matrix m(f, r, n);
  for (int c = 0; c < n; ++c) {
    if (c == q) {
      m.set(r - 1, c, 1);
      continue;
    }
    Element power = 1;
    for (int row = 0; row < r; ++row) {
      m.set(row, c, power);
      power = f.mul(power, static_cast<Element>(c));
    }
  }
  return Matroid::linear(std::move(m)).with_name("U" + std::to_string(r) + "," + std::to_string(n));
}

Matroid graphic_path(int edges) {
  std::vector<Edge> es;
  for (int i = 0; i < edges; ++i) es.push_back({i, i + 1});
  return Matroid::graphic(edges + 1, std::move(es)).with_name("path" + std::to_string(edges));
}

Matroid graphic_cycle(int edges) {
  std::vector<Edge> es;
  for (int i = 0; i < edges; ++i) es.push_back({i, (i + 1) % edges});
  return Matroid::graphic(edges, std::move(es)).with_name("cycle" + std::to_string(edges));
}

Matroid graphic_grid(int rows, int cols) {
  std::vector<Edge> es;
  auto id = [cols](int r, int c) { return r * cols + c; };
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      if (c + 1 < cols) es.push_back({id(r, c), id(r, c + 1)});
      if (r + 1 < rows) es.push_back({id(r, c), id(r + 1, c)});
    }
  }
  return Matroid::graphic(rows * cols, std::move(es))
      .with_name("grid" + std::to_string(rows) + "x" + std::to_string(cols));
}

Matroid graphic_complete(int vertices) {
  std::vector<Edge> es;
  for (int u = 0; u < vertices; ++u) {
    for (int v = u + 1; v < vertices; ++v) es.push_back({u, v});
  }
  return Matroid::graphic(vertices, std::move(es)).with_name("K" + std::to_string(vertices));
}

Matroid as_linear(const Matroid& m, int q) {
  if (m.ground() != Subset::range(m.universe())) throw Error(ErrorKind::kInvalidArgument, "as_linear needs a concrete matroid");
  const Field& f = Field::get(q);
  if (const Matrix* mat = m.matrix()) {
    if (mat->field() == f) return m;
    throw Error(ErrorKind::kInvalidArgument, "matrix is over a different field");
  }
  if (const auto* edges = m.edges()) {
    Matrix out(f, m.vertex_count(), m.size());
    for (int e = 0; e < m.size(); ++e) {
      const Edge& ed = (*edges)[e];
      if (ed.u == ed.v) continue;
      out.set(ed.u, e, 1);
      out.set(ed.v, e, f.neg(1));
    }
    return Matroid::linear(std::move(out), m.labels()).with_name(m.name());
  }
  if (m.kind() == MatroidKind::kUniform) {
    const int r = m.rank(), n = m.size();
    if (r == 0) return Matroid::linear(Matrix(f, 1, n), m.labels()).with_name(m.name());
    if (r == n) {
      Matrix id(f, n, n);
      for (int i = 0; i < n; ++i) id.set(i, i, 1);
      return Matroid::linear(std::move(id), m.labels()).with_name(m.name());
    }
    return Matroid::linear(*uniform_linear(r, n, q).matrix(), m.labels()).with_name(m.name());
  }
  throw Error(ErrorKind::kInvalidArgument, "no matrix representation available for this matroid kind");
}

Matroid direct_sum(const std::vector<Matroid>& parts) {
  if (parts.empty()) throw Error(ErrorKind::kInvalidArgument, "direct_sum of no matroids");
  const Field* field = nullptr;
  int rows = 0, cols = 0;
  for (const Matroid& p : parts) {
    const Matrix* m = p.matrix();
    if (m == nullptr || p.ground() != Subset::range(p.universe())) {
      throw Error(ErrorKind::kInvalidArgument, "direct_sum needs concrete linear matroids");
    }
    if (field != nullptr && !(m->field() == *field)) {
      throw Error(ErrorKind::kInvalidArgument, "direct_sum parts use different fields");
    }
    field = &m->field();
    rows += m->rows();
    cols += m->cols();
  }
  Matrix out(*field, rows, cols);
  std::vector<std::string> labels;
  std::set<std::string> seen;
  bool clash = false;
  int r0 = 0, c0 = 0;
  for (const Matroid& p : parts) {
    const Matrix& m = *p.matrix();
    for (int r = 0; r < m.rows(); ++r) {
      for (int c = 0; c < m.cols(); ++c) out.set(r0 + r, c0 + c, m.at(r, c));
    }
    for (const auto& l : p.labels()) {
      clash = clash || !seen.insert(l).second;
      labels.push_back(l);
    }
    r0 += m.rows();
    c0 += m.cols();
  }
  if (clash) {
    labels.clear();
    for (std::size_t i = 0; i < parts.size(); ++i) {
      for (const auto& l : parts[i].labels()) labels.push_back(l + std::to_string(i + 1));
    }
  }
  return Matroid::linear(std::move(out), std::move(labels));
}

std::vector<std::string> named_matroid_names() {
  return {"u24", "u25", "u35", "u36", "fano", "fano-dual", "free<n>", "k4", "path<n>", "cycle<n>"};
}

Matroid named_matroid(std::string_view name) {
  auto numeric_suffix = [&](std::string_view prefix) -> int {
    if (name.substr(0, prefix.size()) != prefix || name.size() == prefix.size()) return -1;
    int v = 0;
    for (char ch : name.substr(prefix.size())) {
      if (ch < '0' || ch > '9' || v > 64) return -1;
      v = v * 10 + (ch - '0');
    }
    return v;
  };
  if (name == "u24") return named_u24();
  if (name == "u25") return Matroid::uniform(2, 5, letters(5)).with_name("U25");
  if (name == "u35") return Matroid::uniform(3, 5, letters(5)).with_name("U35");
  if (name == "u36") return Matroid::uniform(3, 6, letters(6)).with_name("U36");
  if (name == "fano") return named_fano();
  if (name == "fano-dual") return named_fano_dual();
  if (name == "k4") return graphic_complete(4);
  if (int n = numeric_suffix("free"); n >= 0 && n <= kMaxElements) {
    return Matroid::free(n).with_name("free" + std::to_string(n));
  }
  if (int n = numeric_suffix("path"); n >= 0 && n <= kMaxElements) return graphic_path(n);
  if (int n = numeric_suffix("cycle"); n >= 1 && n <= kMaxElements) return graphic_cycle(n);
  throw Error(ErrorKind::kInvalidArgument, "unknown named matroid '" + std::string(name) + "'");
}

namespace {

using Table = std::vector<std::uint8_t>;

// Linear subclasses of the hyperplanes of a matroid given by its rank table.
class SubclassSearch {
 public:
  SubclassSearch(const Table& t, int n) : t_(t), n_(n) {
    const std::size_t full = (std::size_t{1} << n) - 1;
    r_ = t[full];
    for (std::size_t x = 0; x <= full; ++x) {
      if (t[x] != r_ - 1) continue;
      bool closed = true;
      for (int e = 0; e < n && closed; ++e) {
        if (!((x >> e) & 1U) && t[x | (std::size_t{1} << e)] == t[x]) closed = false;
      }
      if (closed) hyper_.push_back(x);
    }
    const std::size_t h = hyper_.size();
    forced_.assign(h * h, {});
    for (std::size_t i = 0; i < h; ++i) {
      for (std::size_t j = i + 1; j < h; ++j) {
        const std::size_t meet = hyper_[i] & hyper_[j];
        if (t[meet] != r_ - 2) continue;
        std::vector<int> over;
        for (std::size_t k = 0; k < h; ++k) {
          if ((hyper_[k] & meet) == meet) over.push_back(static_cast<int>(k));
        }
        forced_[i * h + j] = over;
        forced_[j * h + i] = std::move(over);
      }
    }
  }

  template <class F>
  void run(F&& visit) {
    state_.assign(hyper_.size(), 0);
    rec(0, visit);
  }

  const std::vector<std::size_t>& hyperplanes() const { return hyper_; }

 private:
  // state: 0 unknown, 1 in, 2 out.
  bool include(int i, std::vector<int>& changed) {
    std::vector<int> queue{i};
    while (!queue.empty()) {
      const int a = queue.back();
      queue.pop_back();
      if (state_[a] == 1) continue;
      if (state_[a] == 2) return false;
      state_[a] = 1;
      changed.push_back(a);
      const std::size_t h = hyper_.size();
      for (std::size_t b = 0; b < h; ++b) {
        if (state_[b] != 1 || static_cast<int>(b) == a) continue;
        for (int k : forced_[a * h + b]) {
          if (state_[k] == 2) return false;
          if (state_[k] == 0) queue.push_back(k);
        }
      }
    }
    return true;
  }

  template <class F>
  void rec(std::size_t i, F& visit) {
    while (i < hyper_.size() && state_[i] != 0) ++i;
    if (i == hyper_.size()) {
      visit(state_);
      return;
    }
    state_[i] = 2;
    rec(i + 1, visit);
    state_[i] = 0;
    std::vector<int> changed;
    if (include(static_cast<int>(i), changed)) rec(i + 1, visit);
    for (int c : changed) state_[c] = 0;
  }

  const Table& t_;
  int n_;
  int r_ = 0;
  std::vector<std::size_t> hyper_;
  std::vector<std::vector<int>> forced_;
  std::vector<std::uint8_t> state_;
};

std::vector<Table> extensions(const Table& t, int n) {
  const std::size_t size = std::size_t{1} << n;
  std::vector<Table> out;
  {
    Table coloop(size * 2);
    for (std::size_t x = 0; x < size; ++x) {
      coloop[x] = t[x];
      coloop[x | size] = static_cast<std::uint8_t>(t[x] + 1);
    }
    out.push_back(std::move(coloop));
  }
  SubclassSearch search(t, n);
  const auto& hyper = search.hyperplanes();
  search.run([&](const std::vector<std::uint8_t>& state) {
    Table ext(size * 2);
    for (std::size_t x = 0; x < size; ++x) {
      ext[x] = t[x];
      // cl(X) lies in the modular cut iff every hyperplane containing X is in the subclass.
      bool in_cut = true;
      for (std::size_t k = 0; k < hyper.size() && in_cut; ++k) {
        if ((hyper[k] & x) == x && state[k] != 1) in_cut = false;
      }
      ext[x | size] = static_cast<std::uint8_t>(in_cut ? t[x] : t[x] + 1);
    }
    out.push_back(std::move(ext));
  });
  return out;
}

std::vector<Table> enumerate_tables(int n) {
  if (n == 0) return {Table{0}};
  const auto smaller = enumerate_tables(n - 1);
  std::vector<Table> out;
  std::unordered_map<std::size_t, std::vector<std::size_t>> buckets;
  for (const Table& t : smaller) {
    for (Table& e : extensions(t, n - 1)) {
      auto& bucket = buckets[table_invariant(e, n)];
      bool seen = false;
      for (std::size_t idx : bucket) {
        if (find_table_isomorphism(out[idx], e, n)) {
          seen = true;
          break;
        }
      }
      if (seen) continue;
      bucket.push_back(out.size());
      out.push_back(std::move(e));
    }
  }
  return out;
}

}  // namespace

const std::vector<Matroid>& all_matroids(int n) {
  check_size("exhaustive matroid enumeration", static_cast<std::size_t>(n), 8);
  static std::mutex mu;
  static std::map<int, std::vector<Matroid>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  std::vector<Matroid> out;
  int index = 0;
  for (Table& t : enumerate_tables(n)) {
    out.push_back(Matroid::from_rank_table(n, std::move(t))
                      .with_name("M" + std::to_string(n) + "." + std::to_string(index++)));
  }
  return cache.emplace(n, std::move(out)).first->second;
}

Matroid random_linear(int q, int r, int n, std::mt19937_64& rng) {
  const Field& f = Field::get(q);
  Matrix m(f, r, n);
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < n; ++j) m.set(i, j, static_cast<Element>(rng() % q));
  }
  return Matroid::linear(std::move(m));
}

}  // namespace matcon
