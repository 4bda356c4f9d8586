#pragma once

#include <compare>
#include <stdexcept>
#include <string>
#include <vector>

#include "schub/monomial.hpp"

namespace schub {

enum class TieBreak { Grevlex, Lex };

inline std::string tie_break_name(TieBreak tb) {
  return tb == TieBreak::Grevlex ? "grevlex" : "lex";
}

/// Term order that compares total degree in t first (higher t-power wins),
/// so leading terms of homogenized polynomials pick out lowest-degree forms.
/// Ties are broken on the z part by graded reverse lexicographic or
/// lexicographic order over a configurable z-variable sequence; the default
/// sequence is the antidiagonal reading order z11, z12, z21, z13, z22, z31, ...
class TermOrder {
public:
  explicit TermOrder(TieBreak tie = TieBreak::Grevlex) : tie_(tie) {}

  /// z_sequence lists z variable ids from most to least significant.
  TermOrder(TieBreak tie, const std::vector<int>& z_sequence) : tie_(tie) {
    int max_id = 0;
    for (int id : z_sequence) {
      if (id <= 0) throw std::invalid_argument("term order: z sequence must hold z variables");
      max_id = std::max(max_id, id);
    }
    rank_.assign(static_cast<size_t>(max_id) + 1, -1);
    int pos = 0;
    for (int id : z_sequence) {
      if (rank_[static_cast<size_t>(id)] != -1)
        throw std::invalid_argument("term order: duplicate variable in z sequence");
      rank_[static_cast<size_t>(id)] = pos++;
    }
  }

  TieBreak tie_break() const { return tie_; }

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const {
    const int ta = a.t_exponent(), tb = b.t_exponent();
    if (ta != tb) return ta > tb ? std::strong_ordering::greater : std::strong_ordering::less;

    if (tie_ == TieBreak::Grevlex) {
      const int za = a.z_degree(), zb = b.z_degree();
      if (za != zb) return za > zb ? std::strong_ordering::greater : std::strong_ordering::less;
      // Reverse lexicographic: at the least significant differing variable,
      // the smaller exponent wins.
      int best_rank = -1;
      int sign = 0;
      scan_differences(a, b, [&](int rank, int ea, int eb) {
        if (rank > best_rank) {
          best_rank = rank;
          sign = (ea < eb) ? 1 : -1;
        }
      });
      if (sign == 0) return std::strong_ordering::equal;
      return sign > 0 ? std::strong_ordering::greater : std::strong_ordering::less;
    }

    // Lex: at the most significant differing variable, the larger exponent wins.
    int best_rank = -1;
    int sign = 0;
    scan_differences(a, b, [&](int rank, int ea, int eb) {
      if (best_rank == -1 || rank < best_rank) {
        best_rank = rank;
        sign = (ea > eb) ? 1 : -1;
      }
    });
    if (sign == 0) return std::strong_ordering::equal;
    return sign > 0 ? std::strong_ordering::greater : std::strong_ordering::less;
  }

  bool less(const Monomial& a, const Monomial& b) const {
    return compare(a, b) == std::strong_ordering::less;
  }
  bool greater(const Monomial& a, const Monomial& b) const {
    return compare(a, b) == std::strong_ordering::greater;
  }
  bool equal(const Monomial& a, const Monomial& b) const {
    return compare(a, b) == std::strong_ordering::equal;
  }

private:
  int rank(int var) const {
    if (rank_.empty()) return var;
    if (var < static_cast<int>(rank_.size()) && rank_[static_cast<size_t>(var)] != -1)
      return rank_[static_cast<size_t>(var)];
    // Variables beyond the configured sequence keep their default position,
    // pushed after the configured block.
    return static_cast<int>(rank_.size()) + var;
  }

  // Walks the z entries of both monomials, reporting (rank, exp_a, exp_b)
  // for each variable where the exponents differ.
  template <class F>
  void scan_differences(const Monomial& a, const Monomial& b, F&& report) const {
    const auto& ea = a.entries();
    const auto& eb = b.entries();
    size_t i = (ea.empty() || ea[0].var != kTVar) ? 0 : 1;
    size_t j = (eb.empty() || eb[0].var != kTVar) ? 0 : 1;
    while (i < ea.size() && j < eb.size()) {
      if (ea[i].var == eb[j].var) {
        if (ea[i].exp != eb[j].exp) report(rank(ea[i].var), ea[i].exp, eb[j].exp);
        ++i;
        ++j;
      } else if (ea[i].var < eb[j].var) {
        report(rank(ea[i].var), ea[i].exp, 0);
        ++i;
      } else {
        report(rank(eb[j].var), 0, eb[j].exp);
        ++j;
      }
    }
    for (; i < ea.size(); ++i) report(rank(ea[i].var), ea[i].exp, 0);
    for (; j < eb.size(); ++j) report(rank(eb[j].var), 0, eb[j].exp);
  }

  TieBreak tie_;
  std::vector<int> rank_;  // empty when the default sequence is in effect
};

}  // namespace schub
