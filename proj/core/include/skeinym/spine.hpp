#pragma once

#include <array>
#include <vector>

namespace skeinym {

// Trivalent spine of a genus-g handlebody boundary: 6g-3 colored edges,
// 4g-2 vertices, each vertex an ordered triple of edge indices and each
// edge incident to exactly two vertex slots.
struct ColoredSpine {
  int genus = 0;
  std::vector<int> edge_colors;
  std::vector<std::array<int, 3>> vertices;
};

// Checks the counts, the incidence invariant, nonnegative colors and the
// admissibility (parity + triangle) of every vertex color triple.
// Throws SpineError on violation.
void validate_spine(const ColoredSpine& s);

// Chain of g theta graphs joined by g-1 bridges, all colors zero.
ColoredSpine canonical_spine(int g);

// K_{3,3} incidence structure (genus 2), all colors zero.
ColoredSpine k33_spine();

}  // namespace skeinym
