// Copyright 2026 the graphsample authors
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

#include <Eigen/Core>
#include <cstdint>
#include <string>

namespace gsp {

// Weighted adjacency matrix of an undirected graph, used as the elementary
// shift operator. Weights are symmetric with zero diagonal; `normalized`
// records whether the spectral radius has been scaled to one.
struct GraphShift {
  int n = 0;
  Eigen::MatrixXd weights;
  bool normalized = false;
};

// Circulant ring where node i connects to its k nearest neighbors
// (offsets 1..k/2 on each side). k must be even and smaller than n.
GraphShift build_ring_knn(int n, int k);

// G(n, p): each unordered pair gets a unit-weight edge independently with
// probability p. Deterministic for a fixed seed; self-loops excluded;
// disconnected samples are kept as generated.
GraphShift build_erdos_renyi(int n, double p, std::uint64_t seed);

// Node 0 is the hub, connected with unit weight to every other node.
GraphShift build_star(int n);

// Divides all weights by the spectral radius so that max |eigenvalue| == 1.
// Rejects graphs with no edges.
GraphShift normalize_shift(const GraphShift& a);

// max |eigenvalue| of a symmetric matrix (dense solver, values only).
double spectral_radius(const Eigen::MatrixXd& m);

// Text edge list: header line is the node count (followed by the token
// `normalized` when the flag is set); each following line is `i j w` with
// 0-based node indices. Undirected: `i j w` and `j i w` describe the same
// edge and may both appear as long as the weights agree. Round trips exactly.
GraphShift load_edge_list(const std::string& path);
void save_edge_list(const GraphShift& a, const std::string& path);

}  // namespace gsp
