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

#include <cmath>
#include <cstdio>
#include <set>
#include <stdexcept>

#include "core/errors.hpp"
#include "core/rng.hpp"
#include "doctest.h"
#include "test_util.hpp"

using namespace gsp;

namespace {

void require_symmetric_zero_diagonal(const GraphShift& g) {
  REQUIRE((g.weights - g.weights.transpose()).cwiseAbs().maxCoeff() == 0.0);
  REQUIRE(g.weights.diagonal().cwiseAbs().maxCoeff() == 0.0);
}

}  // namespace

TEST_CASE("ring with two neighbors has ones exactly at offsets +-1") {
  const GraphShift g = build_ring_knn(8, 2);
  require_symmetric_zero_diagonal(g);
  for (int i = 0; i < 8; ++i) {
    int ones = 0;
    for (int j = 0; j < 8; ++j) {
      if (g.weights(i, j) != 0.0) {
        REQUIRE(g.weights(i, j) == 1.0);
        ++ones;
        const bool neighbor = (j == (i + 1) % 8) || (j == (i + 7) % 8);
        REQUIRE(neighbor);
      }
    }
    REQUIRE(ones == 2);
  }
}

TEST_CASE("ring row 0 nonzeros for four neighbors on eight nodes") {
  const GraphShift g = build_ring_knn(8, 4);
  std::set<int> cols;
  for (int j = 0; j < 8; ++j)
    if (g.weights(0, j) != 0.0) cols.insert(j);
  REQUIRE(cols == std::set<int>{1, 2, 6, 7});
}

TEST_CASE("large ring has constant row sums equal to the neighbor count") {
  const GraphShift g = build_ring_knn(10000, 4);
  const Eigen::VectorXd sums = g.weights.rowwise().sum();
  REQUIRE(sums.minCoeff() == 4.0);
  REQUIRE(sums.maxCoeff() == 4.0);
}

TEST_CASE("ring construction rejects bad arguments") {
  CHECK_THROWS_AS(build_ring_knn(8, 3), std::invalid_argument);   // odd k
  CHECK_THROWS_AS(build_ring_knn(8, 8), std::invalid_argument);   // k >= n
  CHECK_THROWS_AS(build_ring_knn(2, 2), std::invalid_argument);   // degenerate ring
  CHECK_THROWS_AS(build_ring_knn(8, -2), std::invalid_argument);  // negative k
}

TEST_CASE("dense random graph matches its expected degree at paper scale") {
  const GraphShift g = build_erdos_renyi(10000, 0.01, 99);
  require_symmetric_zero_diagonal(g);
  const double edges = g.weights.sum() / 2.0;
  const double pairs = 10000.0 * 9999.0 / 2.0;
  const double mean = pairs * 0.01;
  const double sigma = std::sqrt(pairs * 0.01 * 0.99);
  CHECK(std::abs(edges - mean) <= 3.0 * sigma);
  // mean degree about 100
  CHECK(g.weights.rowwise().sum().mean() == doctest::Approx(100.0).epsilon(0.05));
}

TEST_CASE("edge probability one gives the complete graph") {
  const GraphShift g = build_erdos_renyi(5, 1.0, 1234);
  require_symmetric_zero_diagonal(g);
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j)
      if (i != j) REQUIRE(g.weights(i, j) == 1.0);
}

TEST_CASE("random graph edge count matches an independent replay of the stream") {
  const int n = 100;
  const double p = 0.05;
  const std::uint64_t seed = 42;
  const GraphShift g = build_erdos_renyi(n, p, seed);

  // Replay the same pair order on the same uniform stream.
  rng::Stream stream(seed);
  int expected_edges = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (stream.uniform01() < p) ++expected_edges;

  const int built_edges = static_cast<int>(g.weights.sum() / 2.0);
  CHECK(built_edges == expected_edges);
  CHECK(built_edges == 229);  // frozen for seed 42
}

TEST_CASE("random graph generation is reproducible") {
  const GraphShift a = build_erdos_renyi(64, 0.2, 7);
  const GraphShift b = build_erdos_renyi(64, 0.2, 7);
  CHECK((a.weights - b.weights).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("random graph rejects probabilities outside (0, 1]") {
  CHECK_THROWS_AS(build_erdos_renyi(10, 0.0, 1), std::invalid_argument);
  CHECK_THROWS_AS(build_erdos_renyi(10, -0.5, 1), std::invalid_argument);
  CHECK_THROWS_AS(build_erdos_renyi(10, 1.5, 1), std::invalid_argument);
  CHECK_THROWS_AS(build_erdos_renyi(1, 0.5, 1), std::invalid_argument);
}

TEST_CASE("star has hub row of ones and no leaf-leaf edges") {
  const GraphShift g = build_star(4);
  require_symmetric_zero_diagonal(g);
  for (int j = 1; j < 4; ++j) REQUIRE(g.weights(0, j) == 1.0);
  for (int i = 1; i < 4; ++i)
    for (int j = 1; j < 4; ++j) REQUIRE(g.weights(i, j) == 0.0);
  CHECK_THROWS_AS(build_star(2), std::invalid_argument);
}

TEST_CASE("large star hub degree") {
  const GraphShift g = build_star(10000);
  CHECK(g.weights.row(0).sum() == 9999.0);
}

TEST_CASE("star spectral radius is sqrt(n-1), against the power-iteration oracle") {
  const GraphShift g = build_star(4);
  const double rho = spectral_radius(g.weights);
  CHECK(rho == doctest::Approx(std::sqrt(3.0)).epsilon(1e-10));
  CHECK(oracle::spectral_radius(g.weights) == doctest::Approx(std::sqrt(3.0)).epsilon(1e-8));
}

TEST_CASE("normalization scales the star hub weights to 1/sqrt(3)") {
  const GraphShift g = normalize_shift(build_star(4));
  CHECK(g.normalized);
  CHECK(g.weights(0, 1) == doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-12));
  CHECK(std::abs(oracle::spectral_radius(g.weights) - 1.0) <= 1e-8);
}

TEST_CASE("normalization scales the two-neighbor ring weights to one half") {
  const GraphShift g = normalize_shift(build_ring_knn(8, 2));
  CHECK(g.weights(0, 1) == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("normalization is idempotent within 1e-12") {
  const GraphShift once = normalize_shift(build_star(6));
  const GraphShift twice = normalize_shift(once);
  CHECK((twice.weights - once.weights).cwiseAbs().maxCoeff() <= 1e-12);
}

TEST_CASE("normalizing an empty graph fails") {
  GraphShift g{3, Eigen::MatrixXd::Zero(3, 3), false};
  CHECK_THROWS_AS(normalize_shift(g), std::invalid_argument);
}

TEST_CASE("every generator output is normalizable to spectral radius one") {
  for (const GraphShift& g :
       {build_ring_knn(16, 4), build_erdos_renyi(32, 0.3, 5), build_star(17)}) {
    require_symmetric_zero_diagonal(g);
    const GraphShift norm = normalize_shift(g);
    CHECK(std::abs(spectral_radius(norm.weights) - 1.0) <= 1e-9);
  }
}

TEST_CASE("edge list round trip is exact") {
  const std::string path = testutil::temp_path("star4.edges");
  const GraphShift g = build_star(4);
  save_edge_list(g, path);
  const GraphShift loaded = load_edge_list(path);
  CHECK(loaded.n == g.n);
  CHECK(!loaded.normalized);
  CHECK((loaded.weights - g.weights).cwiseAbs().maxCoeff() == 0.0);

  // Normalized weights round trip bit-exactly as well, flag included.
  const GraphShift norm = normalize_shift(g);
  save_edge_list(norm, path);
  const GraphShift norm_loaded = load_edge_list(path);
  CHECK(norm_loaded.normalized);
  CHECK((norm_loaded.weights - norm.weights).cwiseAbs().maxCoeff() == 0.0);
  std::remove(path.c_str());
}

TEST_CASE("edge list loader reports the offending edge line") {
  const std::string path = testutil::temp_path("bad.edges");
  {
    std::ofstream out(path);
    out << "4\n0 5 1.0\n";
  }
  try {
    load_edge_list(path);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("edge line 1") != std::string::npos);
  }
  std::remove(path.c_str());
}

TEST_CASE("edge list accepts both directions of the same undirected edge") {
  const std::string path = testutil::temp_path("dup.edges");
  {
    std::ofstream out(path);
    out << "4\n0 1 1.0\n1 0 1.0\n";
  }
  const GraphShift g = load_edge_list(path);
  CHECK(g.weights(0, 1) == 1.0);
  CHECK(g.weights(1, 0) == 1.0);
  CHECK(g.weights.sum() == 2.0);  // one undirected edge
  std::remove(path.c_str());
}

TEST_CASE("edge list rejects conflicting duplicate weights") {
  const std::string path = testutil::temp_path("conflict.edges");
  {
    std::ofstream out(path);
    out << "4\n0 1 1.0\n1 0 2.0\n";
  }
  try {
    load_edge_list(path);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("edge line 2") != std::string::npos);
    CHECK(std::string(e.what()).find("conflicting") != std::string::npos);
  }
  std::remove(path.c_str());
}

TEST_CASE("edge list rejects malformed lines and self-loops") {
  const std::string path = testutil::temp_path("malformed.edges");
  {
    std::ofstream out(path);
    out << "4\n0 1\n";
  }
  CHECK_THROWS_AS(load_edge_list(path), ParseError);
  {
    std::ofstream out(path);
    out << "4\n0 1 abc\n";
  }
  CHECK_THROWS_AS(load_edge_list(path), ParseError);
  {
    std::ofstream out(path);
    out << "4\n2 2 1.0\n";
  }
  CHECK_THROWS_AS(load_edge_list(path), ParseError);
  CHECK_THROWS_AS(load_edge_list("does_not_exist.edges"), IoError);
  std::remove(path.c_str());
}

