#include <ostream>

#include "nearfact/campaign.hpp"

namespace nearfact {

// Nine (4, s, 2) pairs in noncyclic groups of odd order up to 81, kept
// verbatim as published; table3_reproduce re-derives nothing and only checks.
const std::vector<ReferencePair>& reference_pairs_r4() {
    static const std::vector<ReferencePair> rows = {
        {"Z3xZ3",
         4,
         4,
         {{0, 1}, {1, 0}, {0, 2}, {2, 0}},
         {{1, 1}, {1, 2}, {2, 1}, {2, 2}}},
        {"Z5xZ5",
         4,
         12,
         {{0, 1}, {1, 0}, {0, 4}, {4, 0}},
         {{1, 1}, {1, 2}, {1, 3}, {1, 4}, {2, 1}, {2, 4}, {3, 1}, {3, 4}, {4, 1}, {4, 2}, {4, 3}, {4, 4}}},
        {"Z3xZ9",
         4,
         13,
         {{0, 1}, {1, 1}, {0, 8}, {2, 8}},
         {{0, 0}, {0, 2}, {0, 7}, {1, 3}, {1, 5}, {1, 6}, {1, 7}, {1, 8}, {2, 1}, {2, 2}, {2, 3}, {2, 4}, {2, 6}}},
        {"Z5xZ3xZ3",
         4,
         22,
         {{1, 0, 1}, {1, 1, 0}, {4, 0, 2}, {4, 2, 0}},
         {{0, 1, 1}, {0, 1, 2}, {0, 2, 1}, {0, 2, 2}, {1, 0, 0}, {1, 0, 2}, {1, 2, 0}, {1, 2, 2},
          {2, 0, 1}, {2, 1, 0}, {2, 1, 1}, {2, 1, 2}, {2, 2, 1}, {3, 0, 2}, {3, 1, 2}, {3, 2, 0},
          {3, 2, 1}, {3, 2, 2}, {4, 0, 0}, {4, 0, 1}, {4, 1, 0}, {4, 1, 1}}},
        {"Z7xZ7",
         4,
         24,
         {{0, 1}, {1, 0}, {0, 6}, {6, 0}},
         {{1, 1}, {1, 2}, {1, 3}, {1, 4}, {1, 5}, {1, 6}, {2, 1}, {2, 6}, {3, 1}, {3, 3}, {3, 4}, {3, 6},
          {4, 1}, {4, 3}, {4, 4}, {4, 6}, {5, 1}, {5, 6}, {6, 1}, {6, 2}, {6, 3}, {6, 4}, {6, 5}, {6, 6}}},
        {"Z7xZ3xZ3",
         4,
         31,
         {{1, 0, 1}, {1, 1, 0}, {6, 0, 2}, {6, 2, 0}},
         {{0, 0, 0}, {0, 0, 1}, {0, 0, 2}, {0, 1, 0}, {0, 2, 0}, {1, 1, 1}, {1, 1, 2}, {1, 2, 1},
          {1, 2, 2}, {2, 0, 0}, {2, 0, 2}, {2, 2, 0}, {2, 2, 2}, {3, 0, 1}, {3, 1, 0}, {3, 1, 1},
          {3, 1, 2}, {3, 2, 1}, {4, 0, 2}, {4, 1, 2}, {4, 2, 0}, {4, 2, 1}, {4, 2, 2}, {5, 0, 0},
          {5, 0, 1}, {5, 1, 0}, {5, 1, 1}, {6, 1, 1}, {6, 1, 2}, {6, 2, 1}, {6, 2, 2}}},
        {"Z5xZ5xZ3",
         4,
         37,
         {{0, 1, 1}, {1, 0, 1}, {0, 4, 2}, {4, 0, 2}},
         {{0, 0, 0}, {0, 1, 2}, {0, 2, 2}, {0, 3, 1}, {0, 4, 1}, {1, 0, 2}, {1, 1, 0}, {1, 1, 1},
          {1, 2, 0}, {1, 2, 2}, {1, 3, 0}, {1, 3, 2}, {1, 4, 1}, {1, 4, 2}, {2, 0, 2}, {2, 1, 0},
          {2, 1, 2}, {2, 2, 1}, {2, 3, 0}, {2, 4, 0}, {2, 4, 1}, {3, 0, 1}, {3, 1, 0}, {3, 1, 2},
          {3, 2, 0}, {3, 3, 2}, {3, 4, 0}, {3, 4, 1}, {4, 0, 1}, {4, 1, 1}, {4, 1, 2}, {4, 2, 0},
          {4, 2, 1}, {4, 3, 0}, {4, 3, 1}, {4, 4, 0}, {4, 4, 2}}},
        {"Z9xZ9",
         4,
         40,
         {{0, 1}, {1, 0}, {0, 8}, {8, 0}},
         {{1, 1}, {1, 2}, {1, 3}, {1, 4}, {1, 5}, {1, 6}, {1, 7}, {1, 8}, {2, 1}, {2, 8},
          {3, 1}, {3, 3}, {3, 4}, {3, 5}, {3, 6}, {3, 8}, {4, 1}, {4, 3}, {4, 6}, {4, 8},
          {5, 1}, {5, 3}, {5, 6}, {5, 8}, {6, 1}, {6, 3}, {6, 4}, {6, 5}, {6, 6}, {6, 8},
          {7, 1}, {7, 8}, {8, 1}, {8, 2}, {8, 3}, {8, 4}, {8, 5}, {8, 6}, {8, 7}, {8, 8}}},
        {"Z3xZ27",
         4,
         40,
         {{0, 1}, {1, 1}, {0, 26}, {2, 26}},
         {{0, 4},  {0, 6},  {0, 7},  {0, 8},  {0, 9},  {0, 11}, {0, 16}, {0, 18}, {0, 19}, {0, 20},
          {0, 21}, {0, 23}, {1, 0},  {1, 2},  {1, 3},  {1, 4},  {1, 5},  {1, 7},  {1, 12}, {1, 14},
          {1, 15}, {1, 16}, {1, 17}, {1, 19}, {1, 24}, {1, 26}, {2, 0},  {2, 1},  {2, 3},  {2, 8},
          {2, 10}, {2, 11}, {2, 12}, {2, 13}, {2, 15}, {2, 20}, {2, 22}, {2, 23}, {2, 24}, {2, 25}}},
    };
    return rows;
}

int table3_reproduce(std::ostream& out) {
    int failures = 0;
    int index = 0;
    for (const auto& row : reference_pairs_r4()) {
        ++index;
        GroupSpec g = GroupSpec::parse(row.group);
        GroupSubset a = GroupSubset::from_coords(g, row.a);
        GroupSubset b = GroupSubset::from_coords(g, row.b);
        bool ok = a.size() == row.r && b.size() == row.s && verify(g, a, b, 2);
        out << "row " << index << " " << row.group << " (" << row.r << "," << row.s << ";2): "
            << (ok ? "pass" : "FAIL") << '\n';
        if (!ok) ++failures;
    }
    return failures;
}

}  // namespace nearfact
