// Copyright 2026 The causemap Authors.
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

#include <algorithm>
#include <cmath>
#include <random>
#include <unordered_map>

#include "causemap/base.h"
#include "causemap/graphio.h"

namespace causemap {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kSpacing = 100.0;  // ideal edge length k
// Below this distance two nodes are treated as coincident and pushed apart
// along a fixed direction.
constexpr double kMinDistance = 1e-6;

}  // namespace

LayoutResult Layout(const BeliefGraph &graph, uint64_t seed,
                    size_t iterations) {
  LayoutResult result;
  result.iterations = iterations;
  result.seed = seed;
  const size_t n = graph.nodes.size();
  if (n == 0) return result;

  std::vector<const std::string *> keys;
  keys.reserve(n);
  std::unordered_map<std::string_view, size_t> index;
  for (const auto &[key, s] : graph.nodes) {
    index.emplace(key, keys.size());
    keys.push_back(&key);
  }
  struct Spring {
    size_t a, b;
    double weight;
  };
  std::vector<Spring> springs;
  springs.reserve(graph.edges.size());
  for (const Edge &e : graph.edges) {
    auto a = index.find(e.source);
    auto b = index.find(e.target);
    if (a == index.end() || b == index.end()) continue;
    springs.push_back(Spring{a->second, b->second, static_cast<double>(e.weight)});
  }

  const double side = kSpacing * std::sqrt(static_cast<double>(n));
  const double k = kSpacing;
  const double k2 = k * k;
  const double t0 = side / 10.0;
  const double radius = side / 2.0;

  std::vector<double> x(n), y(n), dx(n), dy(n);
  std::mt19937_64 rng(seed);
  for (size_t i = 0; i < n; ++i) {
    double r = radius * std::sqrt(UniformUnit(rng));
    double theta = 2.0 * kPi * UniformUnit(rng);
    x[i] = r * std::cos(theta);
    y[i] = r * std::sin(theta);
  }

  for (size_t it = 0; it < iterations; ++it) {
    const double temperature =
        t0 * static_cast<double>(iterations - it) / static_cast<double>(iterations);
    std::fill(dx.begin(), dx.end(), 0.0);
    std::fill(dy.begin(), dy.end(), 0.0);
    for (size_t i = 0; i < n; ++i) {
      for (size_t j = i + 1; j < n; ++j) {
        double ddx = x[i] - x[j];
        double ddy = y[i] - y[j];
        double d = std::sqrt(ddx * ddx + ddy * ddy);
        if (d < kMinDistance) {
          ddx = kMinDistance;
          ddy = 0.0;
          d = kMinDistance;
        }
        double f = k2 / d / d;
        dx[i] += ddx * f;
        dy[i] += ddy * f;
        dx[j] -= ddx * f;
        dy[j] -= ddy * f;
      }
    }
    for (const Spring &s : springs) {
      double ddx = x[s.a] - x[s.b];
      double ddy = y[s.a] - y[s.b];
      double d = std::sqrt(ddx * ddx + ddy * ddy);
      // Force w * d^2 / k along the unit vector: w * d / k per component.
      double f = s.weight * d / k;
      dx[s.a] -= ddx * f;
      dy[s.a] -= ddy * f;
      dx[s.b] += ddx * f;
      dy[s.b] += ddy * f;
    }
    for (size_t i = 0; i < n; ++i) {
      double len = std::sqrt(dx[i] * dx[i] + dy[i] * dy[i]);
      if (len <= 0.0 || !std::isfinite(len)) continue;
      double step = std::min(len, temperature) / len;
      x[i] += dx[i] * step;
      y[i] += dy[i] * step;
      // Nodes stay inside the placement disc.
      double r = std::sqrt(x[i] * x[i] + y[i] * y[i]);
      if (r > radius) {
        x[i] *= radius / r;
        y[i] *= radius / r;
      }
    }
  }
  for (size_t i = 0; i < n; ++i) result.positions[*keys[i]] = Point{x[i], y[i]};
  return result;
}

}  // namespace causemap
