#include "idealis/arrangement/fixtures.hpp"

namespace idealis::fixtures {

// Rational realization: lines in table order.
const std::vector<IntTriple>& table1_lines() {
  static const std::vector<IntTriple> lines = [] {
    std::vector<IntTriple> v;
    for (int i : {0, 2, 3, 4, 5, 6, 8}) v.push_back({1, 1, i});
    for (int j : {4, 6, 7, 8, 9, 10, 12}) v.push_back({2, -1, j});
    for (int k : {8, 10, 11, 12, 13, 14, 16}) v.push_back({3, 0, k});
    for (int l : {2, 4, 6}) v.push_back({1, -2, l});
    for (int m : {14, 16, 18}) v.push_back({4, 1, m});
    for (int n : {18, 20, 22}) v.push_back({5, -1, n});
    v.push_back({0, 0, 1});
    return v;
  }();
  return lines;
}

// The 21 lines of the rational model that realize the sub-arrangement; the
// complement is {1, 3, 5, 8, 10, 12, 15, 17, 19, 30}.
const std::vector<std::size_t>& b21_table1_indices() {
  static const std::vector<std::size_t> idx{0, 2, 4, 6, 7, 9, 11, 13, 14, 16, 18, 20, 21, 22, 23, 24, 25, 26, 27, 28, 29};
  return idx;
}

const std::vector<TablePoint>& table2_points() {
  static const std::vector<TablePoint> pts{
    {2, -2, -3, 2}, {6, -6, -1, 2}, {7, -7, -3, 2}, {13, -13, -3, 2},
    {3, -1, -1, 2}, {13, -7, -3, 2}, {5, 1, -1, 2}, {11, 7, -3, 2},
    {22, 2, -3, 2}, {2, 6, -1, 2}, {17, 7, -3, 2}, {11, 13, -3, 2},
    {7, 2, -3, 2}, {3, 0, -1, 2}, {14, -5, -3, 2}, {16, -7, -3, 2},
    {7, -1, -2, 2}, {23, -5, -6, 2}, {25, -7, -6, 2}, {5, 0, -1, 2},
    {17, -2, -3, 2}, {8, 7, -3, 2}, {10, 5, -3, 2}, {23, 7, -6, 2},
    {25, 5, -6, 2}, {9, 1, -2, 2}, {-22, -8, 3, 2}, {-22, -5, 6, 2},
    {-26, -7, 6, 2}, {-22, 1, 6, 2}, {-26, -1, 6, 2}, {-2, 8, 3, 2},
    {-22, 7, 6, 2}, {-26, 5, 6, 2}, {-6, -8, 1, 2}, {-13, -14, 3, 2},
    {-13, -8, 3, 2}, {-11, 8, 3, 2}, {-2, 8, 1, 2}, {-11, 14, 3, 2},
    {-8, -22, 3, 2}, {8, -11, -3, 2}, {8, -26, -3, 2}, {10, -7, -3, 2},
    {14, 7, -3, 2}, {-16, 22, 3, 2}, {16, 11, -3, 2}, {16, 26, -3, 2},
    {7, 0, -2, 2}, {23, -8, -6, 2}, {23, 4, -6, 2}, {25, -4, -6, 2},
    {25, 8, -6, 2}, {9, 0, -2, 2}, {4, -4, -3, 3}, {2, -2, -1, 3},
    {8, -8, -3, 3}, {4, -4, -1, 3}, {14, -14, -3, 3}, {16, -16, -3, 3},
    {3, -3, -1, 3}, {11, -11, -3, 3}, {2, 0, -1, 3}, {16, -10, -3, 3},
    {8, 4, -3, 3}, {16, -4, -3, 3}, {6, 0, -1, 3}, {8, 10, -3, 3},
    {6, 2, -1, 3}, {20, 4, -3, 3}, {4, 4, -1, 3}, {16, 8, -3, 3},
    {8, 16, -3, 3}, {10, 14, -3, 3}, {5, 3, -1, 3}, {13, 11, -3, 3},
    {8, 1, -3, 3}, {5, -2, -1, 3}, {16, -1, -3, 3}, {3, 2, -1, 3},
    {-16, -5, 3, 3}, {-34, -8, 9, 3}, {-38, -10, 9, 3}, {-32, 2, 9, 3},
    {-40, -2, 9, 3}, {-8, 5, 3, 3}, {-34, 10, 9, 3}, {-38, 8, 9, 3},
    {-14, -16, 3, 3}, {-16, -20, 3, 3}, {-11, -10, 3, 3}, {-16, -14, 3, 3},
    {-8, 14, 3, 3}, {-8, 20, 3, 3}, {-10, 16, 3, 3}, {-13, 10, 3, 3},
    {2, 1, 0, 4}, {-1, 4, 0, 4}, {1, 5, 0, 4}, {10, -10, -3, 4},
    {8, -2, -3, 4}, {14, -8, -3, 4}, {11, -5, -3, 4}, {11, 1, -3, 4},
    {13, -1, -3, 4}, {16, 2, -3, 4}, {10, 8, -3, 4}, {13, 5, -3, 4},
    {14, 10, -3, 4}, {10, -1, -3, 4}, {4, -1, -1, 4}, {11, -2, -3, 4},
    {13, -4, -3, 4}, {4, 1, -1, 4}, {14, 1, -3, 4}, {11, 4, -3, 4},
    {13, 2, -3, 4}, {10, -4, -3, 5}, {4, -2, -1, 5}, {10, 2, -3, 5},
    {14, -2, -3, 5}, {14, 4, -3, 5}, {4, 2, -1, 5}, {4, 0, -1, 6},
    {-1, 1, 0, 8}, {1, 2, 0, 8}, {0, 1, 0, 8},
  };
  return pts;
}

const std::vector<SqrtTriple>& orbit_table_representatives() {
  // Coordinates a + b*u with u = sqrt(3)/2, as {a, b} per coordinate.
  static const std::vector<SqrtTriple> reps{
      {{{0, 0}, {0, 0}, {1, 0}}, 1},
      {{{0, 0}, {1, 0}, {1, 0}}, 6},  {{{1, 0}, {0, 0}, {0, 1}}, 6},  {{{0, 2}, {0, 0}, {1, 0}}, 6},
      {{{0, 0}, {2, 0}, {1, 0}}, 6},  {{{0, 4}, {0, 0}, {1, 0}}, 6},  {{{0, 0}, {4, 0}, {1, 0}}, 6},
      {{{0, 1}, {0, 0}, {1, 0}}, 6},  {{{0, 8}, {0, 0}, {1, 0}}, 6},  {{{1, 0}, {0, 0}, {1, 0}}, 6},
      {{{0, 6}, {1, 0}, {4, 0}}, 12}, {{{9, 0}, {0, 2}, {0, 4}}, 12}, {{{0, 4}, {1, 0}, {1, 0}}, 12},
      {{{15, 0}, {0, 6}, {0, 4}}, 12}, {{{0, 6}, {1, 0}, {1, 0}}, 12}, {{{0, 10}, {1, 0}, {1, 0}}, 12},
  };
  return reps;
}

}  // namespace idealis::fixtures

namespace idealis {

Model parse_model(std::string_view text) {
  if (text == "sqrt3") return Model::Sqrt3;
  if (text == "rationalTable1" || text == "rational") return Model::RationalTable1;
  throw ParseError("unknown model '" + std::string(text) + "' (expected sqrt3 or rationalTable1)");
}

std::string model_name(Model m) { return m == Model::Sqrt3 ? "sqrt3" : "rationalTable1"; }

}  // namespace idealis
