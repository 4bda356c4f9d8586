#pragma once

#include <vector>

#include "schub/permutation.hpp"

namespace schub {

namespace detail {

// Extend the chosen subsequence one position at a time; prune as soon as a
// new value breaks order-isomorphism with the pattern prefix.
inline bool pattern_search(const std::vector<int>& word, const std::vector<int>& pat,
                           std::vector<int>& chosen, size_t from) {
  if (chosen.size() == pat.size()) return true;
  const size_t need = pat.size() - chosen.size();
  for (size_t pos = from; pos + need <= word.size(); ++pos) {
    const int value = word[pos];
    const size_t k = chosen.size();
    bool ok = true;
    for (size_t a = 0; a < k && ok; ++a)
      ok = (chosen[a] < value) == (pat[a] < pat[k]);
    if (!ok) continue;
    chosen.push_back(value);
    if (pattern_search(word, pat, chosen, pos + 1)) return true;
    chosen.pop_back();
  }
  return false;
}

}  // namespace detail

/// True iff some subsequence of w's one-line word is order-isomorphic to p.
inline bool contains_pattern(const Permutation& w, const Permutation& p) {
  if (p.size() > w.size()) return false;
  std::vector<int> chosen;
  chosen.reserve(static_cast<size_t>(p.size()));
  return detail::pattern_search(w.image(), p.image(), chosen, 0);
}

/// Smoothness of Y_w by pattern avoidance: smooth iff w avoids 1324 and 2143.
inline bool is_pattern_smooth(const Permutation& w) {
  static const std::vector<int> p1{1, 3, 2, 4};
  static const std::vector<int> p2{2, 1, 4, 3};
  return !contains_pattern(w, Permutation(p1)) && !contains_pattern(w, Permutation(p2));
}

}  // namespace schub
