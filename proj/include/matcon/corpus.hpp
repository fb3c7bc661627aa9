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

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "matcon/matroid.hpp"

namespace matcon {

// Named matroids. Elements of U_{2,4} are labelled a, b, c, d.
Matroid named_u24();
Matroid named_fano();
Matroid named_fano_dual();
// Linear representation of U_{r,n} over GF(q) by Vandermonde columns
// (requires n <= q + 1; the last column is the point at infinity when n = q + 1).
Matroid uniform_linear(int r, int n, int q);
// Cycle matroid of a path with `edges` edges; every element is a coloop.
Matroid graphic_path(int edges);
Matroid graphic_cycle(int edges);
// Cycle matroid of the rows x cols grid graph.
Matroid graphic_grid(int rows, int cols);
Matroid graphic_complete(int vertices);

// A matrix representation over GF(q): graphic matroids use the signed
// incidence matrix, uniform matroids uniform_linear, and linear matroids are
// returned unchanged when already over GF(q). Labels and name are kept.
// Throws kInvalidArgument for other kinds.
Matroid as_linear(const Matroid& m, int q);

// Direct sum of linear matroids over a common field; block-diagonal matrix.
Matroid direct_sum(const std::vector<Matroid>& parts);

// Names accepted by named_matroid: u24, u25, u35, u36, fano, fano-dual,
// free<n>, k4, path<n>, cycle<n>.
std::vector<std::string> named_matroid_names();
// Throws kInvalidArgument for an unknown name.
Matroid named_matroid(std::string_view name);

// Every matroid on n elements up to isomorphism, built by single-element
// extensions along linear subclasses of hyperplanes. The result is cached
// per process. Guarded to n <= 8.
const std::vector<Matroid>& all_matroids(int n);

// Uniform random r x n matrix over GF(q), entries drawn as rng() % q.
Matroid random_linear(int q, int r, int n, std::mt19937_64& rng);

}  // namespace matcon
