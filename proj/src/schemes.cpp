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

#include "matcon/schemes.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <memory>
#include <mutex>
#include <tuple>

#include "matcon/connectivity.hpp"
#include "matcon/error.hpp"
#include "matcon/repr.hpp"

namespace matcon {

bool Scheme::operator<(const Scheme& o) const {
  return std::tie(side, k, field.q, assignment) < std::tie(o.side, o.k, o.field.q, o.assignment);
}

std::string Scheme::to_string() const {
  std::string out = "{";
  for (std::size_t c = 0; c < assignment.size(); ++c) {
    if (c) out += ", ";
    out += std::to_string(c) + ": [";
    bool first = true;
    for (const Flat& fl : assignment[c]) {
      if (!first) out += ", ";
      first = false;
      out += fl.to_string();
    }
    out += "]";
  }
  return out + "}";
}

namespace {

void check_scheme_shape(const Scheme& s) {
  for (const auto& flats : s.assignment) {
    for (const Flat& fl : flats) {
      if (fl.ambient() != s.k - 1 || fl.field().q() != s.field.q) {
        throw Error(ErrorKind::kDimensionMismatch, "scheme flat outside GF(q)^(k-1)");
      }
    }
  }
}

void check_guards(Subset side, int k, int q) {
  check_size("scheme side", static_cast<std::size_t>(side.size()), 5);
  check_size("scheme field order", static_cast<std::size_t>(q), 3);
  check_size("scheme k", static_cast<std::size_t>(std::max(k, 0)), 3);
}

// One way to place N next to a representation of M|side: S is the part of the
// column space shared with N, and local[X] is span(X) ∩ S written in the
// echelon coordinates of S.
struct LocalProfile {
  int rep = 0;
  Flat sub;
  std::vector<Flat> local;
};

struct SideData {
  int rank = 0;
  std::vector<Matrix> reps;
  std::vector<LocalProfile> locals;
};

std::vector<int> pivots_of(const Flat& fl) {
  std::vector<int> piv;
  for (const Vector& r : fl.rows()) {
    piv.push_back(static_cast<int>(std::find_if(r.begin(), r.end(), [](Element x) { return x != 0; }) - r.begin()));
  }
  return piv;
}

std::shared_ptr<const SideData> side_data(const Matroid& mc, int q, int k) {
  static std::mutex mu;
  static std::map<std::tuple<int, int, int, std::vector<std::uint8_t>>, std::shared_ptr<const SideData>> cache;
  auto key = std::make_tuple(q, k, mc.size(), rank_table(mc));
  {
    std::lock_guard<std::mutex> lock(mu);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  const Field& f = Field::get(q);
  auto d = std::make_shared<SideData>();
  d->rank = mc.rank();
  d->reps = all_representations(mc, q);
  const int n = mc.size();
  std::set<std::vector<Flat>> seen;
  for (int ri = 0; ri < static_cast<int>(d->reps.size()); ++ri) {
    const Matrix& rep = d->reps[ri];
    const int rows = rep.rows();
    std::vector<Flat> spans;
    spans.reserve(std::size_t{1} << n);
    for (std::size_t x = 0; x < (std::size_t{1} << n); ++x) {
      std::vector<Vector> cols;
      for (int e : Subset(x)) cols.push_back(rep.column(e));
      spans.push_back(span_flat(f, rows, cols));
    }
    for (int u = 0; u <= std::min(d->rank, k - 1); ++u) {
      for (const Flat& sub : enumerate_subspaces(rows, q, u)) {
        const std::vector<int> piv = pivots_of(sub);
        std::vector<Flat> local;
        local.reserve(spans.size());
        for (const Flat& sp : spans) {
          std::vector<Vector> coords;
          const Flat meet = flat_meet(sp, sub);
          for (const Vector& t : meet.rows()) {
            Vector c(u);
            for (int i = 0; i < u; ++i) c[i] = t[piv[i]];
            coords.push_back(std::move(c));
          }
          local.push_back(span_flat(f, u, coords));
        }
        if (seen.insert(local).second) d->locals.push_back({ri, sub, std::move(local)});
      }
    }
  }
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(std::move(key), std::move(d)).first->second;
}

// Injective linear maps GF(q)^u → GF(q)^(k−1), as the images of the unit
// vectors. With canonical set only the map onto the first u coordinates.
std::vector<std::vector<Vector>> injections(const Field& f, int u, int target, bool canonical) {
  std::vector<std::vector<Vector>> out;
  if (canonical) {
    std::vector<Vector> id(u, Vector(target, 0));
    for (int i = 0; i < u; ++i) id[i][i] = 1;
    out.push_back(std::move(id));
    return out;
  }
  const int q = f.q();
  const int cells = u * target;
  std::vector<int> digit(cells, 0);
  while (true) {
    std::vector<Vector> imgs(u, Vector(target, 0));
    for (int c = 0; c < cells; ++c) imgs[c / target][c % target] = static_cast<Element>(digit[c]);
    SpanBuilder b(f, target);
    bool independent = true;
    for (const Vector& v : imgs) independent = independent && b.add(v);
    if (independent) out.push_back(std::move(imgs));
    int pos = cells;
    while (pos > 0 && ++digit[pos - 1] == q) digit[--pos] = 0;
    if (pos == 0) break;
  }
  return out;
}

Flat apply_map(const Field& f, const Flat& local, const std::vector<Vector>& phi, int target) {
  std::vector<Vector> vs;
  for (const Vector& c : local.rows()) {
    Vector v(target, 0);
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (c[i] == 0) continue;
      for (int j = 0; j < target; ++j) v[j] = f.add(v[j], f.mul(c[i], phi[i][j]));
    }
    vs.push_back(std::move(v));
  }
  return span_flat(f, target, vs);
}

struct Profile {
  std::size_t local = 0;
  std::vector<Vector> phi;
  std::vector<Flat> flats;  // cl(X) ∩ E(N) per X, as subspaces of GF(q)^(k−1)
};

std::vector<Profile> build_profiles(const SideData& d, const Field& f, int k, bool canonical) {
  std::vector<Profile> out;
  std::set<std::vector<Flat>> seen;
  for (std::size_t li = 0; li < d.locals.size(); ++li) {
    const LocalProfile& lp = d.locals[li];
    for (auto& phi : injections(f, lp.sub.dim(), k - 1, canonical)) {
      std::vector<Flat> flats;
      flats.reserve(lp.local.size());
      for (const Flat& l : lp.local) flats.push_back(apply_map(f, l, phi, k - 1));
      if (seen.insert(flats).second) out.push_back({li, std::move(phi), std::move(flats)});
    }
  }
  return out;
}

// All subspaces of GF(q)^(k−1), indexed so that a profile can be stored as
// one small id per subset.
struct FlatIndex {
  std::vector<Flat> flats;
  std::map<Flat, int> id;
};

const FlatIndex& flat_index(int k, int q) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::unique_ptr<FlatIndex>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[{k, q}];
  if (!slot) {
    slot = std::make_unique<FlatIndex>();
    for (int d = 0; d <= k - 1; ++d) {
      for (Flat& fl : enumerate_subspaces(k - 1, q, d)) {
        slot->id.emplace(fl, static_cast<int>(slot->flats.size()));
        slot->flats.push_back(std::move(fl));
      }
    }
  }
  return *slot;
}

struct ProfileSet {
  std::shared_ptr<const SideData> data;
  std::vector<Profile> profiles;
  std::vector<std::vector<int>> ids;  // flat ids per profile, per subset
};

std::shared_ptr<const ProfileSet> profiles(const Matroid& mc, int q, int k, bool canonical) {
  static std::mutex mu;
  static std::map<std::tuple<int, int, bool, int, std::vector<std::uint8_t>>, std::shared_ptr<const ProfileSet>>
      cache;
  auto key = std::make_tuple(q, k, canonical, mc.size(), rank_table(mc));
  {
    std::lock_guard<std::mutex> lock(mu);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  const Field& f = Field::get(q);
  auto ps = std::make_shared<ProfileSet>();
  ps->data = side_data(mc, q, k);
  ps->profiles = build_profiles(*ps->data, f, k, canonical);
  const FlatIndex& fi = flat_index(k, q);
  for (const Profile& p : ps->profiles) {
    std::vector<int> row;
    row.reserve(p.flats.size());
    for (const Flat& fl : p.flats) row.push_back(fi.id.at(fl));
    ps->ids.push_back(std::move(row));
  }
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(std::move(key), std::move(ps)).first->second;
}

// A scheme as one bitmask of flat ids per class.
std::set<std::vector<std::uint64_t>> scheme_masks(const ProfileSet& ps, const EquivPartition& part) {
  std::set<std::vector<std::uint64_t>> out;
  const auto& cv = part.class_vector();
  for (const auto& row : ps.ids) {
    std::vector<std::uint64_t> mask(part.count(), 0);
    for (std::size_t x = 0; x < cv.size(); ++x) mask[cv[x]] |= std::uint64_t{1} << row[x];
    out.insert(std::move(mask));
  }
  return out;
}

Scheme scheme_of(const Profile& p, const EquivPartition& part, int k, const Field& f) {
  Scheme s{part.side(), k, f.spec(), std::vector<std::set<Flat>>(part.count())};
  const auto& cv = part.class_vector();
  for (std::size_t x = 0; x < cv.size(); ++x) s.assignment[cv[x]].insert(p.flats[x]);
  return s;
}

// Ambient GF(q)^(k−1) ⊕ GF(q)^(rank − u): S is sent into N by phi and a
// complement of S in the column space fills the remaining coordinates.
RealizabilityWitness make_witness(const Field& f, const SideData& d, const Profile& p, int k) {
  const LocalProfile& lp = d.locals[p.local];
  const Matrix& rep = lp.rep < static_cast<int>(d.reps.size()) ? d.reps[lp.rep] : d.reps.front();
  const int u = lp.sub.dim();
  const std::vector<int> piv = pivots_of(lp.sub);
  std::vector<int> rest;
  if (d.rank > 0) {
    for (int i = 0; i < rep.rows(); ++i) {
      if (std::find(piv.begin(), piv.end(), i) == piv.end()) rest.push_back(i);
    }
  }
  const int dim = (k - 1) + static_cast<int>(rest.size());
  const ProjectiveGeometry pg = projective_geometry(k - 1, f.q());
  const int n = rep.cols();
  Matrix w(f, std::max(dim, 1), n + static_cast<int>(pg.points.size()));
  for (int c = 0; c < n; ++c) {
    Vector v = rep.column(c);
    Vector out(dim, 0);
    for (int i = 0; i < u; ++i) {
      const Element a = v[piv[i]];
      if (a == 0) continue;
      for (int j = 0; j < k - 1; ++j) out[j] = f.add(out[j], f.mul(a, p.phi[i][j]));
      for (int r = 0; r < rep.rows(); ++r) v[r] = f.sub(v[r], f.mul(a, lp.sub.rows()[i][r]));
    }
    for (std::size_t j = 0; j < rest.size(); ++j) out[k - 1 + j] = v[rest[j]];
    for (int r = 0; r < dim; ++r) w.set(r, c, out[r]);
  }
  for (std::size_t j = 0; j < pg.points.size(); ++j) {
    for (int r = 0; r < k - 1; ++r) w.set(r, n + static_cast<int>(j), pg.points[j][r]);
  }
  return {std::move(w), dim};
}

}  // namespace

bool compatible(const Scheme& s1, const Scheme& s2, const PiTable& pi) {
  if (s1.k != s2.k || s1.field.q != s2.field.q) {
    throw Error(ErrorKind::kDimensionMismatch, "schemes over different k or fields");
  }
  if (s1.side.intersects(s2.side)) throw Error(ErrorKind::kDimensionMismatch, "schemes must be for opposite sides");
  if (pi.rows != static_cast<int>(s1.assignment.size()) || pi.cols != static_cast<int>(s2.assignment.size())) {
    throw Error(ErrorKind::kDimensionMismatch, "π table does not match the class counts");
  }
  check_scheme_shape(s1);
  check_scheme_shape(s2);
  for (int i = 0; i < pi.rows; ++i) {
    for (int j = 0; j < pi.cols; ++j) {
      for (const Flat& f1 : s1.assignment[i]) {
        for (const Flat& f2 : s2.assignment[j]) {
          if (flat_local_conn(f1, f2) != pi.at(i, j)) return false;
        }
      }
    }
  }
  return true;
}

std::vector<RealizedScheme> realizable_schemes(const Matroid& m, Subset a, int k, int q) {
  field_create(q);
  check_guards(a, k, q);
  if (!is_exact_separation(m, a, k)) {
    throw Error(ErrorKind::kNotExactSeparation, "(A, E − A) is not an exact " + std::to_string(k) + "-separation");
  }
  const Field& f = Field::get(q);
  const auto ps = profiles(compact(restriction(m, a)), q, k, false);
  const EquivPartition part = partition(m, a);
  std::map<Scheme, RealizabilityWitness> found;
  for (const Profile& p : ps->profiles) {
    Scheme s = scheme_of(p, part, k, f);
    if (!found.contains(s)) found.emplace(std::move(s), make_witness(f, *ps->data, p, k));
  }
  std::vector<RealizedScheme> out;
  for (auto& [s, w] : found) out.push_back({s, w});
  return out;
}

bool replay_witness(const Matroid& m, const Scheme& s, const RealizabilityWitness& w) {
  const Matrix& mat = w.matrix;
  if (mat.field().q() != s.field.q) return false;
  const Field& f = mat.field();
  const SubsetIndexer idx(s.side);
  const int n = idx.size();
  const ProjectiveGeometry pg = projective_geometry(s.k - 1, f.q());
  const int np = static_cast<int>(pg.points.size());
  if (mat.cols() != n + np) return false;
  // M′|A = M|A.
  for (std::size_t x = 0; x < idx.count(); ++x) {
    if (column_rank(mat, Subset(x)) != m.rank(idx.subset(x))) return false;
  }
  // M′|E(N) = N, element by element.
  check_size("replayed geometry points", static_cast<std::size_t>(np), 16);
  Matrix pgm(f, std::max(s.k - 1, 1), std::max(np, 1));
  for (int j = 0; j < np; ++j) {
    for (int r = 0; r < s.k - 1; ++r) pgm.set(r, j, pg.points[j][r]);
  }
  for (std::uint64_t t = 0; t < (std::uint64_t{1} << np); ++t) {
    if (column_rank(mat, Subset(t << n)) != column_rank(pgm, Subset(t))) return false;
  }
  const EquivPartition part = partition(m, s.side);
  if (part.count() != static_cast<int>(s.assignment.size())) return false;
  std::vector<std::set<Flat>> seen(s.assignment.size());
  for (std::size_t x = 0; x < idx.count(); ++x) {
    const int r = column_rank(mat, Subset(x));
    std::vector<Vector> pts;
    for (int j = 0; j < np; ++j) {
      if (column_rank(mat, Subset(x | (std::uint64_t{1} << (n + j)))) == r) pts.push_back(pg.points[j]);
    }
    seen[part.class_of(idx.subset(x))].insert(span_flat(f, s.k - 1, pts));
  }
  return seen == s.assignment;
}

MajicReport majic_report(const Matroid& m, Subset a, int q) {
  field_create(q);
  const Subset b = m.ground() - a;
  if (a.empty() || b.empty() || !a.is_subset_of(m.ground())) {
    throw Error(ErrorKind::kNotExactSeparation, "both sides of the separation must be nonempty");
  }
  MajicReport rep;
  rep.k = lambda(m, a) + 1;
  check_guards(a, rep.k, q);
  check_guards(b, rep.k, q);
  rep.representable = is_representable(m, q).has_value();

  const EquivPartition pa = partition(m, a), pb = partition(m, b);
  const PiTable pi = pi_table(m, pa, pb);
  // Compatibility is preserved by any change of coordinates on N, so the left
  // side only needs one embedding of each shared subspace.
  const auto left = scheme_masks(*profiles(compact(restriction(m, a)), q, rep.k, true), pa);
  const auto right = scheme_masks(*profiles(compact(restriction(m, b)), q, rep.k, false), pb);
  rep.left_schemes = static_cast<int>(left.size());
  rep.right_schemes = static_cast<int>(right.size());
  // good[f1 * levels + v]: flats meeting f1 with local connectivity v.
  const FlatIndex& fi = flat_index(rep.k, q);
  const int nf = static_cast<int>(fi.flats.size());
  if (nf > 64) throw Error(ErrorKind::kSizeGuard, "more than 64 subspaces of GF(q)^(k-1)");
  const int levels = rep.k + 1;
  std::vector<std::uint64_t> good(static_cast<std::size_t>(nf) * levels, 0);
  for (int i = 0; i < nf; ++i) {
    for (int j = 0; j < nf; ++j) {
      good[i * levels + flat_local_conn(fi.flats[i], fi.flats[j])] |= std::uint64_t{1} << j;
    }
  }
  for (const auto& s1 : left) {
    for (const auto& s2 : right) {
      bool ok = true;
      for (int i = 0; ok && i < pi.rows; ++i) {
        for (std::uint64_t m1 = s1[i]; ok && m1; m1 &= m1 - 1) {
          const int f1 = std::countr_zero(m1);
          for (int j = 0; ok && j < pi.cols; ++j) {
            const int v = pi.at(i, j);
            const std::uint64_t allowed = v >= 0 && v < levels ? good[f1 * levels + v] : 0;
            ok = (s2[j] & ~allowed) == 0;
          }
        }
      }
      if (ok) {
        rep.compatible_pair = true;
        break;
      }
    }
    if (rep.compatible_pair) break;
  }
  if (rep.compatible_pair != rep.representable) {
    throw Error(ErrorKind::kDisagreementBug, "representability over GF(" + std::to_string(q) + ") is " +
                                                 (rep.representable ? "true" : "false") +
                                                 " but a compatible scheme pair " +
                                                 (rep.compatible_pair ? "exists" : "does not exist"));
  }
  return rep;
}

bool majic_check(const Matroid& m, Subset a, int q) { return majic_report(m, a, q).representable; }

}  // namespace matcon
