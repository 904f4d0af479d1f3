#pragma once

#include <string>
#include <vector>

/// Catalog members exercised by the property and acceptance tests.
inline std::vector<std::string> catalog_specs() {
  return {"cube:1",          "cube:2",          "cube:3",          "cube:4",  "simplex:2", "simplex:3",
          "simplex:4",       "bruns:4",         "bruns:5",         "bruns:6", "bruns:7",   "higashitani:3,1",
          "higashitani:3,2", "higashitani:3,3", "higashitani:4,1", "reeve"};
}
