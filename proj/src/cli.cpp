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

#include "matcon/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "matcon/branchwidth.hpp"
#include "matcon/classes.hpp"
#include "matcon/connectivity.hpp"
#include "matcon/corpus.hpp"
#include "matcon/dissection.hpp"
#include "matcon/error.hpp"
#include "matcon/geometry.hpp"
#include "matcon/io.hpp"
#include "matcon/repr.hpp"
#include "matcon/schemes.hpp"

#ifndef MATCON_DATA_DIR
#define MATCON_DATA_DIR "data"
#endif

namespace matcon {

namespace {

using Json = nlohmann::ordered_json;

Matroid resolve_matroid(const std::string& spec) {
  namespace fs = std::filesystem;
  if (fs::is_regular_file(spec)) return load_matroid(spec);
  const fs::path bundled = fs::path(MATCON_DATA_DIR) / spec;
  if (fs::is_regular_file(bundled)) return load_matroid(bundled.string());
  std::string name = spec;
  if (name.size() > 2 && name.ends_with(".m")) name.resize(name.size() - 2);
  return named_matroid(name);
}

Json labels_of(const Matroid& m, Subset x) { return subset_labels(m, x); }

// Parts separated by '/', elements by ','.
std::vector<Subset> parse_parts(const Matroid& m, const std::string& text) {
  std::vector<Subset> parts;
  std::size_t pos = 0;
  while (true) {
    const std::size_t end = text.find('/', pos);
    parts.push_back(parse_subset(m, text.substr(pos, end == std::string::npos ? std::string::npos : end - pos)));
    if (end == std::string::npos) break;
    pos = end + 1;
  }
  return parts;
}

std::vector<int> parse_orders(const std::string& text) {
  std::vector<int> out;
  std::stringstream in(text);
  for (std::string item; std::getline(in, item, ',');) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::logic_error&) {
      throw Error(ErrorKind::kInvalidArgument, "bad field order '" + item + "'");
    }
  }
  return out;
}

Json dissection_json(const Matroid& m, const Dissection& d) {
  Json parts = Json::array();
  for (Subset p : d.parts) parts.push_back(labels_of(m, p));
  return Json{{"k", d.k}, {"length", d.length()}, {"parts", parts}};
}

Json flat_json(const Flat& f) {
  Json rows = Json::array();
  for (const Vector& r : f.rows()) {
    Json row = Json::array();
    for (Element x : r) row.push_back(int{x});
    rows.push_back(row);
  }
  return rows;
}

Json scheme_json(const Scheme& s) {
  Json out = Json::object();
  for (std::size_t c = 0; c < s.assignment.size(); ++c) {
    Json flats = Json::array();
    for (const Flat& f : s.assignment[c]) flats.push_back(flat_json(f));
    out[std::to_string(c)] = flats;
  }
  return out;
}

Json matrix_json(const Matrix& w) {
  Json rows = Json::array();
  for (int i = 0; i < w.rows(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < w.cols(); ++j) row.push_back(int{w.at(i, j)});
    rows.push_back(row);
  }
  return rows;
}

Json tower_json(const TowerValue& t) {
  if (t.over_guard) return Json{{"over_guard", true}, {"expression", t.expression}};
  return Json{{"value", t.value.get_str()}};
}

std::string scalar_text(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_array() && std::all_of(v.begin(), v.end(), [](const Json& x) { return x.is_primitive(); })) {
    std::string out;
    for (const Json& x : v) out += (out.empty() ? "" : ", ") + scalar_text(x);
    return out;
  }
  return v.dump();
}

void print(const Json& j, bool text, std::ostream& out) {
  if (!text) {
    out << j.dump() << "\n";
    return;
  }
  if (!j.is_object()) {
    out << scalar_text(j) << "\n";
    return;
  }
  std::size_t width = 0;
  for (const auto& [k, v] : j.items()) width = std::max(width, k.size());
  for (const auto& [k, v] : j.items()) out << std::left << std::setw(static_cast<int>(width)) << k << "  " << scalar_text(v) << "\n";
}

Json report_json(const VerifyReport& r) {
  Json j{{"lemma", r.lemma}, {"instances", r.instances}, {"passes", r.passes}, {"failures", r.instances - r.passes}};
  if (r.counterexample) {
    j["counterexample"] = Json{{"matroid", r.counterexample->matroid},
                               {"instance", r.counterexample->instance},
                               {"detail", r.counterexample->detail}};
  } else {
    j["counterexample"] = nullptr;
  }
  j["wall_seconds"] = r.wall_seconds;
  j["seed"] = r.seed;
  return j;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Matroid connectivity and representability toolkit", "matcon"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "json";
  std::size_t max_size = 0;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--max-size", max_size, "Replace every default size guard");

  std::string matroid, set_a, set_x, set_y, parts, fields;
  int k = -1, n = 0, q = 2;
  bool all = false, list = false;
  std::vector<std::string> numbers;
  std::string lemma;
  VerifyOptions vopt;

  auto with_matroid = [&](CLI::App* sub) {
    sub->add_option("--matroid", matroid, "Matroid file or bundled name")->required();
    return sub;
  };
  auto* c_show = with_matroid(app.add_subcommand("show", "Print a matroid in the text format"));
  auto* c_rank = with_matroid(app.add_subcommand("rank", "Rank of a set"));
  c_rank->add_option("--set", set_a, "Comma-separated labels (default: ground set)");
  auto* c_lambda = with_matroid(app.add_subcommand("lambda", "Connectivity λ(X)"));
  c_lambda->add_option("--set", set_a)->required();
  auto* c_kappa = with_matroid(app.add_subcommand("kappa", "κ(X, Y) with a witness"));
  auto* c_link = with_matroid(app.add_subcommand("link", "Tutte linking set for X and Y"));
  for (auto* sub : {c_kappa, c_link}) {
    sub->add_option("--x", set_x)->required();
    sub->add_option("--y", set_y)->required();
  }
  auto* c_dissect = with_matroid(app.add_subcommand("dissect", "Validate a dissection or find a longest one"));
  c_dissect->add_option("--k", k)->required();
  c_dissect->add_option("--parts", parts, "Parts separated by '/'");
  auto* c_extract = with_matroid(app.add_subcommand("linked-extract", "Extract a linked dissection of length n"));
  c_extract->add_option("--k", k)->required();
  c_extract->add_option("--parts", parts)->required();
  c_extract->add_option("--n", n)->required();
  auto* c_classes = with_matroid(app.add_subcommand("classes", "Partition P(M, A)"));
  auto* c_pi = with_matroid(app.add_subcommand("pi", "π table for (A, E − A)"));
  auto* c_schemes = with_matroid(app.add_subcommand("schemes", "Realizable schemes for (A, E − A)"));
  auto* c_realizable = with_matroid(app.add_subcommand("realizable", "Realizable schemes with replayed witnesses"));
  auto* c_compat = with_matroid(app.add_subcommand("compat", "Compatible pairs of realizable schemes"));
  for (auto* sub : {c_classes, c_pi, c_schemes, c_realizable, c_compat}) sub->add_option("--set", set_a)->required();
  for (auto* sub : {c_schemes, c_realizable, c_compat}) sub->add_option("--q", q)->required();
  for (auto* sub : {c_schemes, c_realizable}) sub->add_option("--k", k, "Default λ(A) + 1");
  auto* c_represent = with_matroid(app.add_subcommand("represent", "Representation over GF(q)"));
  c_represent->add_option("--q", q)->required();
  c_represent->add_flag("--all", all, "Count all inequivalent representations");
  auto* c_excluded = with_matroid(app.add_subcommand("excluded-minor", "Excluded-minor test for a field family"));
  auto* c_nested = with_matroid(app.add_subcommand("nested-count", "Nested k-separations against the tower bound"));
  for (auto* sub : {c_excluded, c_nested}) sub->add_option("--fields", fields, "Field orders, e.g. 2,3")->required();
  c_nested->add_option("--k", k)->required();
  auto* c_bw = with_matroid(app.add_subcommand("branchwidth", "Branch-width and an optimal tree"));
  auto* c_flats = app.add_subcommand("pg-flats", "Flats of PG(k−1, q)");
  c_flats->add_option("--k", k)->required();
  c_flats->add_option("--q", q)->required();
  c_flats->add_flag("--list", list, "List every flat");
  auto* c_tower = app.add_subcommand("tower", "Right-associated power tower");
  c_tower->add_option("values", numbers)->required();
  auto* c_verify = app.add_subcommand("verify", "Check a lemma over the corpus");
  c_verify->add_option("lemma", lemma)->required()->check(CLI::IsMember(verify_lemma_ids()));
  c_verify->add_option("--max-n", vopt.max_n, "Exhaustive corpus size");
  c_verify->add_option("--random", vopt.random_count, "Random linear matroids");
  c_verify->add_option("--random-max-n", vopt.random_max_n);
  c_verify->add_option("--seed", vopt.seed);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  const bool text = format == "text";
  if (max_size > 0) set_size_limit_override(max_size);
  struct Reset {
    bool active;
    ~Reset() {
      if (active) clear_size_limit_override();
    }
  } reset{max_size > 0};

  try {
    if (c_tower->parsed()) {
      std::vector<std::uint64_t> vals;
      for (const std::string& s : numbers) {
        std::size_t used = 0;
        unsigned long long v = 0;
        try {
          v = std::stoull(s, &used);
        } catch (const std::logic_error&) {
          used = 0;
        }
        if (used != s.size() || s.empty() || s[0] == '-') throw Error(ErrorKind::kInvalidArgument, "bad tower entry '" + s + "'");
        vals.push_back(v);
      }
      const TowerValue t = tower(vals);
      if (t.over_guard) {
        print(tower_json(t), text, out);
      } else {
        out << t.value.get_str() << "\n";
      }
      return 0;
    }
    if (c_verify->parsed()) {
      const VerifyReport r = verify(lemma, vopt);
      print(report_json(r), text, out);
      return r.ok() ? 0 : 1;
    }
    if (c_flats->parsed()) {
      Json j{{"k", k}, {"q", q}, {"count", flat_count(k, q).get_str()}, {"bound", tower_json(tower({std::uint64_t(q), std::uint64_t(k), std::uint64_t(k)}))},
             {"holds", flats_bound_holds(k, q)}};
      if (list) {
        Json flats = Json::array();
        for (const Flat& f : enumerate_flats(k, q)) flats.push_back(flat_json(f));
        j["flats"] = flats;
      }
      print(j, text, out);
      return 0;
    }

    const Matroid m = resolve_matroid(matroid);
    const Subset ground = m.ground();
    Json j;
    if (c_show->parsed()) {
      out << serialize_matroid(m);
      return 0;
    } else if (c_rank->parsed()) {
      const Subset x = set_a.empty() ? ground : parse_subset(m, set_a);
      j = Json{{"rank", m.rank(x)}};
    } else if (c_lambda->parsed()) {
      j = Json{{"value", lambda(m, parse_subset(m, set_a))}};
    } else if (c_kappa->parsed()) {
      const KappaResult r = kappa(m, parse_subset(m, set_x), parse_subset(m, set_y));
      j = Json{{"value", r.value}, {"witness", labels_of(m, r.witness)}};
    } else if (c_link->parsed()) {
      const Subset x = parse_subset(m, set_x), y = parse_subset(m, set_y);
      const LinkResult r = tutte_link(m, x, y);
      j = Json{{"kappa", r.kappa},
               {"contract", labels_of(m, r.contract)},
               {"local_conn", local_conn(contraction(m, r.contract), x, y)}};
    } else if (c_dissect->parsed()) {
      if (parts.empty()) {
        j = dissection_json(m, find_longest_dissection(m, k));
      } else {
        const Dissection d = validate(m, parse_parts(m, parts), k);
        j = dissection_json(m, d);
        Json seps = Json::array();
        for (const Separation& s : to_nested(m, d)) seps.push_back(labels_of(m, s.a));
        j["nested"] = seps;
      }
    } else if (c_extract->parsed()) {
      const Dissection d = validate(m, parse_parts(m, parts), k);
      const Dissection got = extract_linked(m, d, n);
      j = dissection_json(m, got);
      j["linked"] = is_linked(m, got);
    } else if (c_classes->parsed()) {
      const EquivPartition p = partition(m, parse_subset(m, set_a));
      Json classes = Json::array();
      for (int c = 0; c < p.count(); ++c) {
        Json members = Json::array();
        for (Subset x : p.members(c)) members.push_back(labels_of(m, x));
        classes.push_back(Json{{"id", c}, {"representative", labels_of(m, p.reps()[c])}, {"members", members}});
      }
      j = Json{{"count", p.count()}, {"classes", classes}};
    } else if (c_pi->parsed()) {
      const Subset a = parse_subset(m, set_a);
      const EquivPartition pa = partition(m, a), pb = partition(m, ground - a);
      const PiTable t = pi_table(m, pa, pb);
      Json rows = Json::array(), left = Json::array(), right = Json::array();
      for (int i = 0; i < t.rows; ++i) {
        Json row = Json::array();
        for (int c = 0; c < t.cols; ++c) row.push_back(t.at(i, c));
        rows.push_back(row);
      }
      for (Subset r : pa.reps()) left.push_back(labels_of(m, r));
      for (Subset r : pb.reps()) right.push_back(labels_of(m, r));
      j = Json{{"rows", t.rows}, {"cols", t.cols}, {"left", left}, {"right", right}, {"values", rows}};
    } else if (c_schemes->parsed() || c_realizable->parsed()) {
      const Subset a = parse_subset(m, set_a);
      const int kk = k >= 0 ? k : lambda(m, a) + 1;
      const auto found = realizable_schemes(m, a, kk, q);
      Json list_json = Json::array();
      for (const RealizedScheme& rs : found) {
        if (c_schemes->parsed()) {
          list_json.push_back(scheme_json(rs.scheme));
        } else {
          list_json.push_back(Json{{"scheme", scheme_json(rs.scheme)},
                                   {"witness", Json{{"dim", rs.witness.dim}, {"matrix", matrix_json(rs.witness.matrix)}}},
                                   {"replayed", replay_witness(m, rs.scheme, rs.witness)}});
        }
      }
      j = Json{{"k", kk}, {"count", found.size()}, {"schemes", list_json}};
    } else if (c_compat->parsed()) {
      const Subset a = parse_subset(m, set_a), b = ground - a;
      const MajicReport rep = majic_report(m, a, q);
      const auto left = realizable_schemes(m, a, rep.k, q);
      const auto right = realizable_schemes(m, b, rep.k, q);
      const PiTable pi = pi_table(m, a);
      long pairs = 0;
      Json first = nullptr;
      for (const auto& x : left) {
        for (const auto& y : right) {
          if (!compatible(x.scheme, y.scheme, pi)) continue;
          if (pairs++ == 0) first = Json{{"left", scheme_json(x.scheme)}, {"right", scheme_json(y.scheme)}};
        }
      }
      j = Json{{"k", rep.k},
               {"left_schemes", left.size()},
               {"right_schemes", right.size()},
               {"compatible_pairs", pairs},
               {"first_pair", first},
               {"representable", rep.representable}};
    } else if (c_represent->parsed()) {
      if (all) {
        j = Json{{"count", all_representations(m, q).size()}};
      } else {
        const auto w = is_representable(m, q);
        j = Json{{"representable", w.has_value()}};
        if (w) j["matrix"] = matrix_json(*w);
      }
    } else if (c_excluded->parsed()) {
      const FieldFamily fam(parse_orders(fields));
      j = Json{{"family", fam.to_string()}, {"excluded_minor", is_excluded_minor(m, fam)}};
    } else if (c_nested->parsed()) {
      const FieldFamily fam(parse_orders(fields));
      const NestedBoundReport r = nested_bound_report(m, fam, k);
      j = Json{{"k", r.k}, {"count", r.count}, {"bound", tower_json(r.bound)}, {"below", r.below}};
    } else if (c_bw->parsed()) {
      const BranchWidthResult r = branch_width(m);
      j = Json{{"width", r.width}, {"tree", m.size() >= 2 ? format_branch_tree(m, r.tree) : std::string()}};
    }
    print(j, text, out);
    return 0;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  }
}

}  // namespace matcon
