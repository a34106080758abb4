#include "skeinym/spine.hpp"

#include <string>

#include "skeinym/errors.hpp"

namespace skeinym {

namespace {

bool triple_admissible(int a, int b, int c) {
  if (a < 0 || b < 0 || c < 0) return false;
  if ((a + b + c) % 2 != 0) return false;
  return a <= b + c && b <= c + a && c <= a + b;
}

}  // namespace

void validate_spine(const ColoredSpine& s) {
  if (s.genus < 1) throw SpineError("spine: genus must be >= 1");
  const std::size_t n_edges = 6 * s.genus - 3;
  const std::size_t n_vertices = 4 * s.genus - 2;
  if (s.edge_colors.size() != n_edges)
    throw SpineError("spine: expected " + std::to_string(n_edges) +
                     " edges, got " + std::to_string(s.edge_colors.size()));
  if (s.vertices.size() != n_vertices)
    throw SpineError("spine: expected " + std::to_string(n_vertices) +
                     " vertices, got " + std::to_string(s.vertices.size()));

  std::vector<int> incidence(n_edges, 0);
  for (const auto& v : s.vertices) {
    for (int e : v) {
      if (e < 0 || static_cast<std::size_t>(e) >= n_edges)
        throw SpineError("spine: edge index " + std::to_string(e) +
                         " out of range");
      ++incidence[e];
    }
  }
  for (std::size_t e = 0; e < n_edges; ++e)
    if (incidence[e] != 2)
      throw SpineError("spine: edge " + std::to_string(e) + " has " +
                       std::to_string(incidence[e]) +
                       " endpoints, expected 2");

  for (int c : s.edge_colors)
    if (c < 0) throw SpineError("spine: negative edge color");
  for (const auto& v : s.vertices) {
    const int a = s.edge_colors[v[0]];
    const int b = s.edge_colors[v[1]];
    const int c = s.edge_colors[v[2]];
    if (!triple_admissible(a, b, c))
      throw SpineError("spine: inadmissible vertex colors (" +
                       std::to_string(a) + "," + std::to_string(b) + "," +
                       std::to_string(c) + ")");
  }
}

ColoredSpine canonical_spine(int g) {
  if (g < 1) throw SpineError("canonical_spine: genus must be >= 1");
  ColoredSpine s;
  s.genus = g;
  s.edge_colors.assign(6 * g - 3, 0);
  s.vertices.reserve(4 * g - 2);
  // Theta blocks: edges 3j, 3j+1, 3j+2 with two copies of the triple.
  for (int j = 0; j < g; ++j) {
    s.vertices.push_back({3 * j, 3 * j + 1, 3 * j + 2});
    s.vertices.push_back({3 * j, 3 * j + 1, 3 * j + 2});
  }
  // Bridge i joins blocks i and i+1: edge 3g+3i splits edge 3i+2 at the
  // right vertex of block i, edge 3g+3i+1 splits edge 3(i+1)+1 at the left
  // vertex of block i+1, edge 3g+3i+2 is the bridge.
  for (int i = 0; i + 1 < g; ++i) {
    const int s1 = 3 * g + 3 * i;
    const int s2 = 3 * g + 3 * i + 1;
    const int br = 3 * g + 3 * i + 2;
    s.vertices[2 * i + 1] = {3 * i, 3 * i + 1, s1};
    s.vertices[2 * (i + 1)] = {3 * (i + 1), s2, 3 * (i + 1) + 2};
    s.vertices.push_back({3 * i + 2, s1, br});
    s.vertices.push_back({3 * (i + 1) + 1, s2, br});
  }
  return s;
}

ColoredSpine k33_spine() {
  ColoredSpine s;
  s.genus = 2;
  s.edge_colors.assign(9, 0);
  for (int i = 0; i < 3; ++i) s.vertices.push_back({3 * i, 3 * i + 1, 3 * i + 2});
  for (int j = 0; j < 3; ++j) s.vertices.push_back({j, 3 + j, 6 + j});
  return s;
}

}  // namespace skeinym
