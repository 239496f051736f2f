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

#include "core/graph.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "core/errors.hpp"
#include "core/rng.hpp"
#include "core/textio.hpp"

namespace gsp {

GraphShift build_ring_knn(int n, int k) {
  if (n < 3)
    throw std::invalid_argument("ring graph needs at least 3 nodes, got " + std::to_string(n));
  if (k < 0 || k % 2 != 0)
    throw std::invalid_argument("ring neighbor count must be even and nonnegative, got " +
                                std::to_string(k));
  if (k >= n)
    throw std::invalid_argument("ring neighbor count " + std::to_string(k) +
                                " must be smaller than the node count " + std::to_string(n));
  GraphShift g{n, Eigen::MatrixXd::Zero(n, n), false};
  for (int i = 0; i < n; ++i) {
    for (int off = 1; off <= k / 2; ++off) {
      const int j = (i + off) % n;
      g.weights(i, j) = 1.0;
      g.weights(j, i) = 1.0;
    }
  }
  return g;
}

GraphShift build_erdos_renyi(int n, double p, std::uint64_t seed) {
  if (n < 2)
    throw std::invalid_argument("random graph needs at least 2 nodes, got " + std::to_string(n));
  if (!(p > 0.0 && p <= 1.0))
    throw std::invalid_argument("edge probability must lie in (0, 1]");
  GraphShift g{n, Eigen::MatrixXd::Zero(n, n), false};
  rng::Stream stream(seed);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (stream.uniform01() < p) {
        g.weights(i, j) = 1.0;
        g.weights(j, i) = 1.0;
      }
    }
  }
  return g;
}

GraphShift build_star(int n) {
  if (n < 3)
    throw std::invalid_argument("star graph needs at least 3 nodes, got " + std::to_string(n));
  GraphShift g{n, Eigen::MatrixXd::Zero(n, n), false};
  for (int j = 1; j < n; ++j) {
    g.weights(0, j) = 1.0;
    g.weights(j, 0) = 1.0;
  }
  return g;
}

double spectral_radius(const Eigen::MatrixXd& m) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("eigenvalue computation failed");
  const auto& vals = solver.eigenvalues();
  return std::max(std::abs(vals(0)), std::abs(vals(vals.size() - 1)));
}

GraphShift normalize_shift(const GraphShift& a) {
  if (a.weights.size() == 0 || a.weights.cwiseAbs().maxCoeff() == 0.0)
    throw std::invalid_argument("cannot normalize a graph with no edges");
  const double rho = spectral_radius(a.weights);
  return GraphShift{a.n, a.weights / rho, true};
}

namespace {

bool parse_tokens(const std::string& line, std::vector<std::string>& tokens) {
  tokens.clear();
  std::istringstream iss(line);
  std::string tok;
  while (iss >> tok) tokens.push_back(tok);
  return !tokens.empty();
}

int parse_index(const std::string& tok, const std::string& where) {
  std::size_t pos = 0;
  int value = 0;
  try {
    value = std::stoi(tok, &pos);
  } catch (const std::exception&) {
    throw ParseError(where + ": expected an integer node index, got '" + tok + "'");
  }
  if (pos != tok.size())
    throw ParseError(where + ": expected an integer node index, got '" + tok + "'");
  return value;
}

double parse_weight(const std::string& tok, const std::string& where) {
  std::size_t pos = 0;
  double value = 0.0;
  try {
    value = std::stod(tok, &pos);
  } catch (const std::exception&) {
    throw ParseError(where + ": expected a numeric edge weight, got '" + tok + "'");
  }
  if (pos != tok.size() || !std::isfinite(value))
    throw ParseError(where + ": expected a finite edge weight, got '" + tok + "'");
  return value;
}

}  // namespace

GraphShift load_edge_list(const std::string& path) {
  auto in = textio::open_input(path);
  std::string line;
  std::vector<std::string> tokens;

  // Header: node count, optionally followed by `normalized`.
  if (!std::getline(in, line) || !parse_tokens(line, tokens))
    throw ParseError("header: missing node count in '" + path + "'");
  const int n = parse_index(tokens[0], "header");
  if (n < 1) throw ParseError("header: node count must be positive, got " + tokens[0]);
  bool normalized = false;
  if (tokens.size() >= 2) {
    if (tokens[1] == "normalized" && tokens.size() == 2)
      normalized = true;
    else
      throw ParseError("header: unexpected token '" + tokens[1] + "'");
  }

  GraphShift g{n, Eigen::MatrixXd::Zero(n, n), normalized};
  std::vector<bool> seen(static_cast<std::size_t>(n) * n, false);

  int edge_line = 0;
  while (std::getline(in, line)) {
    if (!parse_tokens(line, tokens)) continue;  // skip blank lines
    if (tokens[0][0] == '#') continue;
    ++edge_line;
    const std::string where = "edge line " + std::to_string(edge_line);
    if (tokens.size() != 3)
      throw ParseError(where + ": expected 'i j w', got '" + line + "'");
    const int i = parse_index(tokens[0], where);
    const int j = parse_index(tokens[1], where);
    const double w = parse_weight(tokens[2], where);
    if (i < 0 || i >= n || j < 0 || j >= n)
      throw ParseError(where + ": node index out of range for " + std::to_string(n) + " nodes");
    if (i == j) throw ParseError(where + ": self-loops are not allowed");
    const std::size_t a = static_cast<std::size_t>(i) * n + j;
    if (seen[a] && g.weights(i, j) != w)
      throw ParseError(where + ": conflicting weight for edge (" + std::to_string(i) + ", " +
                       std::to_string(j) + ")");
    seen[a] = true;
    seen[static_cast<std::size_t>(j) * n + i] = true;
    g.weights(i, j) = w;
    g.weights(j, i) = w;
  }
  return g;
}

void save_edge_list(const GraphShift& a, const std::string& path) {
  auto out = textio::open_output(path);
  out << a.n;
  if (a.normalized) out << " normalized";
  out << "\n";
  for (int i = 0; i < a.n; ++i)
    for (int j = i + 1; j < a.n; ++j)
      if (a.weights(i, j) != 0.0)
        out << i << ' ' << j << ' ' << textio::format_double(a.weights(i, j)) << "\n";
  textio::finish_output(out, path);
}

}  // namespace gsp
