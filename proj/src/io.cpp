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

#include "matcon/io.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <vector>

#include "matcon/error.hpp"

namespace matcon {

namespace {

[[noreturn]] void parse_error(int line, const std::string& msg) {
  throw Error(ErrorKind::kParseError, "line " + std::to_string(line) + ": " + msg, line);
}

std::vector<std::string> tokens(std::string_view line) {
  std::vector<std::string> out;
  std::istringstream in{std::string(line)};
  for (std::string t; in >> t;) out.push_back(t);
  return out;
}

std::optional<int> to_int(const std::string& s) {
  int v = 0;
  const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size() || v < 0) return std::nullopt;
  return v;
}

int int_arg(const std::vector<std::string>& t, std::size_t i, int line) {
  if (i >= t.size()) parse_error(line, "missing value after '" + t[0] + "'");
  const auto v = to_int(t[i]);
  if (!v) parse_error(line, "expected a nonnegative integer, got '" + t[i] + "'");
  return *v;
}

struct Line {
  int number;
  std::vector<std::string> words;
};

}  // namespace

Matroid parse_matroid(std::string_view text) {
  std::vector<Line> lines;
  int number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    std::string_view raw = text.substr(pos, end - pos);
    ++number;
    if (const auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    if (auto w = tokens(raw); !w.empty()) lines.push_back({number, std::move(w)});
    pos = end + 1;
  }

  std::string name, type;
  std::optional<int> q, rank;
  std::optional<std::vector<std::string>> elements;
  std::size_t i = 0;
  const std::set<std::string> headers{"matroid", "type", "field", "rank", "elements"};
  for (; i < lines.size() && headers.contains(lines[i].words[0]); ++i) {
    const auto& [ln, w] = lines[i];
    if (w[0] == "matroid") {
      if (w.size() != 2) parse_error(ln, "expected 'matroid <name>'");
      name = w[1];
    } else if (w[0] == "type") {
      if (w.size() != 2) parse_error(ln, "expected 'type <kind>'");
      if (w[1] != "linear" && w[1] != "uniform" && w[1] != "bases" && w[1] != "graphic") {
        parse_error(ln, "unknown type '" + w[1] + "'");
      }
      type = w[1];
    } else if (w[0] == "field") {
      if (w.size() != 2) parse_error(ln, "expected 'field <q>'");
      q = int_arg(w, 1, ln);
      try {
        field_create(*q);
      } catch (const Error& e) {
        parse_error(ln, e.what());
      }
    } else if (w[0] == "rank") {
      if (w.size() != 2) parse_error(ln, "expected 'rank <r>'");
      rank = int_arg(w, 1, ln);
    } else {
      elements = std::vector<std::string>(w.begin() + 1, w.end());
      if (elements->size() > 64) parse_error(ln, "at most 64 elements are supported");
      const std::set<std::string> distinct(elements->begin(), elements->end());
      if (distinct.size() != elements->size()) parse_error(ln, "repeated element label");
    }
  }
  const int body_line = i < lines.size() ? lines[i].number : number;
  if (type.empty()) parse_error(body_line, "missing 'type' line before the body");
  if (type != "linear" && (q || rank)) parse_error(body_line, "'field' and 'rank' apply to linear matroids only");
  std::vector<std::string> labels = elements.value_or(std::vector<std::string>{});

  Matroid m = Matroid::uniform(0, 0);
  if (type == "linear") {
    if (!q) parse_error(body_line, "linear matroid needs a 'field' line");
    std::vector<std::vector<int>> rows;
    for (; i < lines.size(); ++i) {
      const auto& [ln, w] = lines[i];
      std::vector<int> row;
      for (std::size_t c = 0; c < w.size(); ++c) {
        const int v = int_arg(w, c, ln);
        if (v >= *q) parse_error(ln, "entry " + w[c] + " is not an element of GF(" + std::to_string(*q) + ")");
        row.push_back(v);
      }
      if (!rows.empty() && row.size() != rows.front().size()) parse_error(ln, "rows of different lengths");
      rows.push_back(std::move(row));
    }
    if (rank && static_cast<int>(rows.size()) != *rank) {
      parse_error(number, "expected " + std::to_string(*rank) + " matrix rows, found " + std::to_string(rows.size()));
    }
    const int n = rows.empty() ? static_cast<int>(labels.size()) : static_cast<int>(rows.front().size());
    if (elements && static_cast<int>(labels.size()) != n) {
      parse_error(body_line, "elements line lists " + std::to_string(labels.size()) + " labels for " +
                                 std::to_string(n) + " columns");
    }
    if (n > 64) parse_error(body_line, "at most 64 elements are supported");
    const Field& f = Field::get(*q);
    Matrix mat = rows.empty() ? Matrix(f, 1, n) : Matrix(f, rows);
    if (rank && mat.rank() != *rank) {
      throw Error(ErrorKind::kValidationError,
                  "matrix has rank " + std::to_string(mat.rank()) + ", declared " + std::to_string(*rank));
    }
    m = Matroid::linear(std::move(mat), labels);
  } else if (type == "uniform") {
    if (i >= lines.size() || lines[i].words[0] != "params" || lines[i].words.size() != 3) {
      parse_error(body_line, "uniform matroid needs 'params <r> <n>'");
    }
    const int r = int_arg(lines[i].words, 1, lines[i].number);
    const int n = int_arg(lines[i].words, 2, lines[i].number);
    if (r > n || n > 64) parse_error(lines[i].number, "params need 0 <= r <= n <= 64");
    if (elements && static_cast<int>(labels.size()) != n) parse_error(lines[i].number, "elements line does not match n");
    if (i + 1 < lines.size()) parse_error(lines[i + 1].number, "unexpected line after params");
    m = Matroid::uniform(r, n, labels);
  } else if (type == "bases") {
    std::map<std::string, int> id;
    for (int e = 0; e < static_cast<int>(labels.size()); ++e) id[labels[e]] = e;
    std::set<Subset> bases;
    int n = static_cast<int>(labels.size());
    for (; i < lines.size(); ++i) {
      const auto& [ln, w] = lines[i];
      Subset b;
      if (!(w.size() == 1 && w[0] == "-")) {
        for (const std::string& t : w) {
          int e;
          if (elements) {
            const auto it = id.find(t);
            if (it == id.end()) parse_error(ln, "unknown element '" + t + "'");
            e = it->second;
          } else {
            e = int_arg(w, static_cast<std::size_t>(&t - w.data()), ln);
            if (e >= 64) parse_error(ln, "element id out of range");
            n = std::max(n, e + 1);
          }
          if (b.contains(e)) parse_error(ln, "element repeated in a basis");
          b = b.with(e);
        }
      }
      bases.insert(b);
    }
    if (bases.empty()) parse_error(number, "basis list is empty");
    m = Matroid::from_bases(n, std::vector<Subset>(bases.begin(), bases.end()), labels);
  } else {
    std::vector<Edge> edges;
    int vertices = 0;
    for (; i < lines.size(); ++i) {
      const auto& [ln, w] = lines[i];
      if (w.size() != 2) parse_error(ln, "expected an edge 'u v'");
      const int u = int_arg(w, 0, ln), v = int_arg(w, 1, ln);
      edges.push_back({u, v});
      vertices = std::max({vertices, u + 1, v + 1});
    }
    if (edges.size() > 64) parse_error(number, "at most 64 edges are supported");
    if (elements && labels.size() != edges.size()) parse_error(body_line, "elements line does not match the edge count");
    m = Matroid::graphic(vertices, std::move(edges), labels);
  }
  return name.empty() ? m : m.with_name(name);
}

Matroid load_matroid(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::kInvalidArgument, "cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_matroid(buf.str());
}

std::string serialize_matroid(const Matroid& m) {
  const bool concrete = m.ground() == Subset::range(m.universe()) &&
                        (m.kind() == MatroidKind::kLinear || m.kind() == MatroidKind::kUniform ||
                         m.kind() == MatroidKind::kGraphic || m.kind() == MatroidKind::kBases);
  const Matroid c = concrete ? m : compact(m);
  std::ostringstream out;
  std::string name = m.name();
  for (char& ch : name) {
    if (ch == ' ' || ch == '\t' || ch == '#') ch = '_';
  }
  if (!name.empty()) out << "matroid " << name << "\n";
  const auto write_elements = [&] {
    for (const std::string& l : c.labels()) {
      if (l.empty() || l == "-" || l.find_first_of(" \t#") != std::string::npos) {
        throw Error(ErrorKind::kInvalidArgument, "label '" + l + "' cannot be written");
      }
    }
    out << "elements";
    for (const std::string& l : c.labels()) out << " " << l;
    out << "\n";
  };
  switch (c.kind()) {
    case MatroidKind::kLinear: {
      const Matrix::Reduced red = c.matrix()->rref();
      const int r = static_cast<int>(red.pivots.size());
      out << "type linear\nfield " << c.matrix()->field().q() << "\nrank " << r << "\n";
      write_elements();
      for (int i = 0; i < r; ++i) {
        for (int j = 0; j < red.matrix.cols(); ++j) out << (j ? " " : "") << int{red.matrix.at(i, j)};
        out << "\n";
      }
      break;
    }
    case MatroidKind::kUniform:
      out << "type uniform\n";
      write_elements();
      out << "params " << c.rank() << " " << c.size() << "\n";
      break;
    case MatroidKind::kGraphic:
      out << "type graphic\n";
      write_elements();
      for (const Edge& e : *c.edges()) out << e.u << " " << e.v << "\n";
      break;
    default: {
      out << "type bases\n";
      write_elements();
      for (Subset b : *c.bases()) {
        if (b.empty()) {
          out << "-\n";
          continue;
        }
        bool first = true;
        for (int e : b) {
          out << (first ? "" : " ") << c.label(e);
          first = false;
        }
        out << "\n";
      }
    }
  }
  return out.str();
}

}  // namespace matcon
