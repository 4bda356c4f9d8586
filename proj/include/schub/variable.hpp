#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace schub {

/// Variable ids: 0 is the homogenization variable t; z variables occupy
/// 1..n(n-1)/2 listed antidiagonal by antidiagonal (z11, z12, z21, z13,
/// z22, z31, ...). The listing does not depend on the group size, only
/// which ids are in play does (z_ij exists when i+j <= n).
inline constexpr int kTVar = 0;

inline int z_var_count(int n) { return n * (n - 1) / 2; }

inline int z_var_id(int i, int j) {
  if (i < 1 || j < 1) throw std::invalid_argument("z_var_id: indices are 1-based");
  const int s = i + j;
  return (s - 2) * (s - 1) / 2 + i;
}

/// Inverse of z_var_id.
inline std::pair<int, int> z_var_coords(int id) {
  if (id < 1) throw std::invalid_argument("z_var_coords: not a z variable");
  int s = 2;
  while ((s - 1) * s / 2 < id) ++s;
  const int base = (s - 2) * (s - 1) / 2;
  const int i = id - base;
  return {i, s - i};
}

inline std::string var_name(int id) {
  if (id == kTVar) return "t";
  auto [i, j] = z_var_coords(id);
  return "z" + std::to_string(i) + std::to_string(j);
}

/// Either t or z_ij; thin wrapper over the id scheme above.
struct Variable {
  int id = kTVar;

  static Variable t() { return Variable{kTVar}; }
  static Variable z(int i, int j) { return Variable{z_var_id(i, j)}; }

  bool is_t() const { return id == kTVar; }
  std::pair<int, int> coords() const { return z_var_coords(id); }
  std::string name() const { return var_name(id); }

  friend bool operator==(const Variable& a, const Variable& b) { return a.id == b.id; }
};

}  // namespace schub
