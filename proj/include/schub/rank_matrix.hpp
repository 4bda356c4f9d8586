#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "schub/permutation.hpp"

namespace schub {

/// Rank matrix R(w): r(i,j) = #{k <= j : w^{-1}(k) <= i}, 1-indexed.
/// Entrywise comparison of rank matrices decides Bruhat order.
class RankMatrix {
public:
  explicit RankMatrix(const Permutation& w) : n_(w.size()), r_(static_cast<size_t>(n_) * n_, 0) {
    // r(i,j) counts positions (a,b) with a <= i, b <= j and w(a) = b;
    // build by 2D prefix sums over the permutation matrix.
    for (int i = 1; i <= n_; ++i) {
      for (int j = 1; j <= n_; ++j) {
        int cell = (w(i) == j) ? 1 : 0;
        r_[idx(i, j)] = cell + at(i - 1, j) + at(i, j - 1) - at(i - 1, j - 1);
      }
    }
  }

  int size() const { return n_; }

  /// r(i,j); indices outside 1..n read as 0.
  int at(int i, int j) const {
    if (i < 1 || j < 1) return 0;
    return r_[idx(i, j)];
  }

private:
  size_t idx(int i, int j) const {
    return static_cast<size_t>(i - 1) * static_cast<size_t>(n_) + static_cast<size_t>(j - 1);
  }

  int n_;
  std::vector<int> r_;
};

inline RankMatrix rank_matrix(const Permutation& w) { return RankMatrix(w); }

/// v >= w in Bruhat order iff r(i,j)(v) <= r(i,j)(w) for all i,j.
inline bool bruhat_geq(const Permutation& v, const Permutation& w) {
  if (v.size() != w.size())
    throw std::invalid_argument("bruhat_geq: group sizes differ (" +
                                std::to_string(v.size()) + " vs " + std::to_string(w.size()) + ")");
  RankMatrix rv(v), rw(w);
  for (int i = 1; i <= v.size(); ++i)
    for (int j = 1; j <= v.size(); ++j)
      if (rv.at(i, j) > rw.at(i, j)) return false;
  return true;
}

}  // namespace schub
