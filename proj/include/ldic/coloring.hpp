#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "ldic/error.hpp"
#include "ldic/sigraph.hpp"

namespace ldic {

/// b colours per vertex out of a palette {1..a}; adjacent vertices share none.
struct ABColoring {
  int a = 0;
  int b = 0;
  std::vector<std::vector<int>> classes;  ///< classes[v-1] = C_v, sorted
};

/// Empty string if `c` is a valid a:b colouring of `h`, otherwise the reason.
inline std::string coloring_error(const UndirectedGraph& h, const ABColoring& c) {
  if (c.a < 1 || c.b < 1) return "a and b must be positive";
  if (static_cast<int>(c.classes.size()) != h.n()) return "one colour class per vertex required";
  for (int v = 1; v <= h.n(); ++v) {
    const auto& cv = c.classes[v - 1];
    if (static_cast<int>(cv.size()) != c.b) return "vertex " + std::to_string(v) + " does not have b colours";
    if (!std::is_sorted(cv.begin(), cv.end()) || std::adjacent_find(cv.begin(), cv.end()) != cv.end())
      return "vertex " + std::to_string(v) + " has repeated or unsorted colours";
    if (cv.front() < 1 || cv.back() > c.a) return "vertex " + std::to_string(v) + " uses a colour outside [a]";
  }
  for (auto [u, v] : h.edges()) {
    const auto& cu = c.classes[u - 1];
    const auto& cv = c.classes[v - 1];
    std::vector<int> common;
    std::set_intersection(cu.begin(), cu.end(), cv.begin(), cv.end(), std::back_inserter(common));
    if (!common.empty()) return "adjacent vertices " + std::to_string(u) + "," + std::to_string(v) + " share a colour";
  }
  return {};
}

}  // namespace ldic
