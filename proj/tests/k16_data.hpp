#pragma once

#include <string>
#include <vector>

// Reference data for the 16-element example, transcribed independently of
// src/, so the tests cross-check the built-in instance entry by entry.
// Raw-table oracles below use nothing but these arrays and integer loops.
namespace k16data {

inline constexpr int kTable[16][16] = {
    {0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15},
    {1, 0, 3, 2, 5, 4, 7, 6, 9, 8, 11, 10, 13, 12, 15, 14},
    {2, 3, 1, 0, 6, 7, 5, 4, 11, 10, 8, 9, 15, 14, 12, 13},
    {3, 2, 0, 1, 7, 6, 4, 5, 10, 11, 9, 8, 14, 15, 13, 12},
    {4, 5, 6, 7, 3, 2, 0, 1, 15, 14, 12, 13, 9, 8, 11, 10},
    {5, 4, 7, 6, 2, 3, 1, 0, 14, 15, 13, 12, 8, 9, 10, 11},
    {6, 7, 5, 4, 0, 1, 2, 3, 13, 12, 15, 14, 10, 11, 9, 8},
    {7, 6, 4, 5, 1, 0, 3, 2, 12, 13, 14, 15, 11, 10, 8, 9},
    {8, 9, 10, 11, 12, 13, 14, 15, 0, 1, 2, 3, 4, 5, 6, 7},
    {9, 8, 11, 10, 13, 12, 15, 14, 1, 0, 3, 2, 5, 4, 7, 6},
    {10, 11, 9, 8, 14, 15, 13, 12, 3, 2, 0, 1, 7, 6, 4, 5},
    {11, 10, 8, 9, 15, 14, 12, 13, 2, 3, 1, 0, 6, 7, 5, 4},
    {12, 13, 14, 15, 11, 10, 8, 9, 6, 7, 5, 4, 0, 1, 2, 3},
    {13, 12, 15, 14, 10, 11, 9, 8, 7, 6, 4, 5, 1, 0, 3, 2},
    {14, 15, 13, 12, 8, 9, 10, 11, 4, 5, 6, 7, 3, 2, 0, 1},
    {15, 14, 12, 13, 9, 8, 11, 10, 5, 4, 7, 6, 2, 3, 1, 0},
};

// Which gyration each pair (a, b) is: 'I' identity or 'A' the involution
// (8 9)(10 11)(12 13)(14 15). One string per row a, one char per column b.
inline constexpr const char* kGyrationNames[16] = {
    "IIIIIIIIIIIIIIII",
    "IIIIIIIIIIIIIIII",
    "IIIIIIIIIIIIIIII",
    "IIIIIIIIIIIIIIII",
    "IIIIIIIIAAAAAAAA",
    "IIIIIIIIAAAAAAAA",
    "IIIIIIIIAAAAAAAA",
    "IIIIIIIIAAAAAAAA",
    "IIIIAAAAIIIIAAAA",
    "IIIIAAAAIIIIAAAA",
    "IIIIAAAAIIIIAAAA",
    "IIIIAAAAIIIIAAAA",
    "IIIIAAAAAAAAIIII",
    "IIIIAAAAAAAAIIII",
    "IIIIAAAAAAAAIIII",
    "IIIIAAAAAAAAIIII",
};

inline constexpr int kGyrationA[16] = {0, 1, 2,  3,  4,  5,  6,  7,
                                       9, 8, 11, 10, 13, 12, 15, 14};

inline int add(int a, int b) { return kTable[a][b]; }

inline int neg(int a) {
  for (int b = 0; b < 16; ++b)
    if (kTable[b][a] == 0) return b;
  return -1;
}

// gyr[a,b]c through nothing but table lookups.
inline int gyr(int a, int b, int c) {
  return add(neg(add(a, b)), add(a, add(b, c)));
}

inline std::string table_text() {
  std::string out = "16\n";
  for (const auto& row : kTable) {
    for (int c = 0; c < 16; ++c) {
      if (c) out += ' ';
      out += std::to_string(row[c]);
    }
    out += '\n';
  }
  return out;
}

// Cyclic group of order n as a table: (i, j) -> (i + j) mod n.
inline std::vector<int> cyclic_entries(int n) {
  std::vector<int> e;
  e.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) e.push_back((i + j) % n);
  return e;
}

// Klein four-group: bitwise xor on {0,1,2,3}.
inline std::vector<int> klein_entries() {
  std::vector<int> e;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) e.push_back(i ^ j);
  return e;
}

}  // namespace k16data
