#pragma once

#include <algorithm>
#include <vector>

#include "schub/monomial.hpp"

namespace schub {

/// Finite monomial ideal held by its minimal generators (pairwise
/// non-divisible), sorted canonically. Tracks the ambient variable ids so
/// Hilbert computations know how many free variables surround the ideal.
class MonomialIdeal {
public:
  MonomialIdeal() = default;

  static MonomialIdeal make(std::vector<Monomial> gens, std::vector<int> ambient_vars) {
    MonomialIdeal I;
    std::sort(ambient_vars.begin(), ambient_vars.end());
    ambient_vars.erase(std::unique(ambient_vars.begin(), ambient_vars.end()), ambient_vars.end());
    I.vars_ = std::move(ambient_vars);
    I.gens_ = minimalize(std::move(gens));
    return I;
  }

  /// Ambient variable set spanning z_ij for i+j <= n (and optionally t).
  const std::vector<int>& vars() const { return vars_; }
  int nvars() const { return static_cast<int>(vars_.size()); }

  const std::vector<Monomial>& gens() const { return gens_; }
  bool empty() const { return gens_.empty(); }

  bool contains_unit() const { return !gens_.empty() && gens_.front().is_one(); }

  /// True iff some generator divides m, i.e. m lies in the ideal.
  bool divides(const Monomial& m) const {
    for (const auto& g : gens_)
      if (Monomial::divides(g, m)) return true;
    return false;
  }

  static std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
    std::sort(gens.begin(), gens.end(), Monomial::id_lex_less);
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    std::vector<Monomial> minimal;
    for (const auto& m : gens) {
      bool redundant = false;
      for (const auto& kept : minimal) {
        if (Monomial::divides(kept, m)) {  // kept has lower or equal degree
          redundant = true;
          break;
        }
      }
      if (!redundant) minimal.push_back(m);
    }
    return minimal;
  }

  friend bool operator==(const MonomialIdeal& a, const MonomialIdeal& b) {
    return a.vars_ == b.vars_ && a.gens_ == b.gens_;
  }

private:
  std::vector<int> vars_;
  std::vector<Monomial> gens_;
};

}  // namespace schub
