#pragma once

// Second independent oracle: exhaustive gluings of 2(n-2) oriented triangles.
// Every triangulation of the sphere with n vertices arises from pairing the
// 6(n-2) triangle sides with reversed orientation, so enumerating all
// fixed-point-free pairings and keeping the connected, n-vertex results is a
// complete (if brute-force) census. Feasible for n <= 4 (15 and 10395
// pairings); used to validate both the general-class and the simple-class
// enumeration at tiny sizes, loops and parallel edges included.

#include <string>
#include <vector>

namespace oracle {

struct GlueCensus {
  std::vector<std::string> general_codes;  // canonical codes, sorted
  std::vector<std::string> simple_codes;   // subset without loops/multi-edges
};

GlueCensus glue_census(int n);

}  // namespace oracle
