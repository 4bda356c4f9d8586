#pragma once

#include <cstdint>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "schub/groebner.hpp"
#include "schub/permutation.hpp"
#include "schub/poly_matrix.hpp"
#include "schub/rank_matrix.hpp"

namespace schub {

/// Generators of the homogenized specialized determinantal ideal of Y_w:
/// the nonzero minors prescribed by the rank matrix, monic, deduplicated.
struct GeneratorSet {
  int n = 0;
  std::vector<int> word;  // one-line notation of w
  std::vector<Polynomial> gens;
};

/// The n x n matrix with z_ij above the main antidiagonal (i+j <= n),
/// t on it (i+j = n+1), and 0 below. Indices here are 1-based.
inline PolyMatrix generic_matrix(int n) {
  if (n < 1) throw std::invalid_argument("generic_matrix: n must be >= 1");
  PolyMatrix G(n, n);
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      if (i + j <= n)
        G.at(i - 1, j - 1) = Polynomial::variable(z_var_id(i, j));
      else if (i + j == n + 1)
        G.at(i - 1, j - 1) = Polynomial::variable(kTVar);
    }
  }
  return G;
}

namespace detail {

// k-subsets of {0..limit-1} in lexicographic order.
inline std::vector<std::vector<int>> k_subsets(int limit, int k) {
  std::vector<std::vector<int>> out;
  if (k > limit || k < 0) return out;
  std::vector<int> cur(static_cast<size_t>(k));
  for (int i = 0; i < k; ++i) cur[static_cast<size_t>(i)] = i;
  while (true) {
    out.push_back(cur);
    int pos = k - 1;
    while (pos >= 0 && cur[static_cast<size_t>(pos)] == limit - k + pos) --pos;
    if (pos < 0) break;
    ++cur[static_cast<size_t>(pos)];
    for (int q = pos + 1; q < k; ++q)
      cur[static_cast<size_t>(q)] = cur[static_cast<size_t>(q - 1)] + 1;
  }
  return out;
}

inline std::uint64_t mask_of(const std::vector<int>& subset) {
  std::uint64_t m = 0;
  for (int v : subset) m |= (1ull << v);
  return m;
}

}  // namespace detail

/// All size-(r_ij(w)+1) minors of the top-left i x j corners of the
/// specialized generic matrix, for every cell where the bound bites.
/// Minors are enumerated row-subset-major, column-subset-minor, subsets in
/// lexicographic order; zero minors are dropped and duplicates (after the
/// monic normalization) are kept once.
inline GeneratorSet generate(const Permutation& w, const TermOrder& ord) {
  const int n = w.size();
  const RankMatrix R(w);
  const PolyMatrix G = generic_matrix(n);

  // Determinants shared across cells: the same row/column selection shows
  // up under every corner that contains it.
  std::unordered_map<std::uint64_t, Polynomial> det_memo;
  auto minor_det = [&](const std::vector<int>& rows, const std::vector<int>& cols) {
    const std::uint64_t key =
        detail::mask_of(rows) << 32 | detail::mask_of(cols);
    auto it = det_memo.find(key);
    if (it != det_memo.end()) return it->second;
    Polynomial d = determinant(G, rows, cols, ord);
    det_memo.emplace(key, d);
    return d;
  };

  GeneratorSet out;
  out.n = n;
  out.word = w.image();
  std::unordered_set<Polynomial> seen;

  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      const int k = R.at(i, j) + 1;
      if (k > std::min(i, j)) continue;  // no rank condition at this cell
      for (const auto& rows : detail::k_subsets(i, k)) {
        for (const auto& cols : detail::k_subsets(j, k)) {
          Polynomial minor = minor_det(rows, cols);
          if (minor.is_zero()) continue;
          minor = make_monic(minor);
          if (seen.insert(minor).second) out.gens.push_back(std::move(minor));
        }
      }
    }
  }
  return out;
}

/// Interreduction: processes generators by increasing degree and keeps the
/// nonzero normal form of each against the survivors. The generated ideal
/// is unchanged.
inline GeneratorSet minimize_generators(const GeneratorSet& g, const TermOrder& ord) {
  std::vector<Polynomial> sorted = g.gens;
  std::stable_sort(sorted.begin(), sorted.end(), [&](const Polynomial& a, const Polynomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return ord.less(a.leading_monomial(), b.leading_monomial());
  });

  GeneratorSet out;
  out.n = g.n;
  out.word = g.word;
  for (const auto& f : sorted) {
    Polynomial r = normal_form(f, out.gens, ord);
    if (!r.is_zero()) out.gens.push_back(make_monic(r));
  }
  return out;
}

}  // namespace schub
