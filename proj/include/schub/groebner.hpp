#pragma once

#include <algorithm>
#include <queue>
#include <vector>

#include "schub/error.hpp"
#include "schub/monomial_ideal.hpp"
#include "schub/polynomial.hpp"

namespace schub {

/// Reduced Groebner basis: monic, interreduced, sorted by leading monomial
/// ascending under its order. Unique for a given ideal and order.
struct GroebnerBasis {
  TermOrder order;
  std::vector<Polynomial> basis;
};

enum class SelectionStrategy {
  Normal,  // smallest lcm degree first
  Fifo,    // pair creation order
};

/// Division remainder of f by G (in list order): no term of the result is
/// divisible by any leading monomial of G.
inline Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& G,
                              const TermOrder& ord) {
  Polynomial rest = f;
  Polynomial remainder;
  std::vector<Term> kept;
  while (!rest.is_zero()) {
    const Monomial& lm = rest.leading_monomial();
    const Polynomial* reducer = nullptr;
    for (const auto& g : G) {
      if (Monomial::divides(g.leading_monomial(), lm)) {
        reducer = &g;
        break;
      }
    }
    if (reducer == nullptr) {
      // Leading term is irreducible; move it to the remainder.
      kept.push_back(rest.leading_term());
      Polynomial tail;
      for (size_t i = 1; i < rest.terms().size(); ++i)
        tail.push_term_unchecked(rest.terms()[i].coeff, rest.terms()[i].mono);
      rest = std::move(tail);
    } else {
      const Coefficient c = rest.leading_coeff() / reducer->leading_coeff();
      const Monomial m = lm.divided_by(reducer->leading_monomial());
      rest = sub(rest, mul_term(*reducer, c, m), ord);
    }
  }
  for (auto& t : kept) remainder.push_term_unchecked(std::move(t.coeff), std::move(t.mono));
  return remainder;
}

/// lcm(LM f, LM g)/LT(f) * f - lcm(LM f, LM g)/LT(g) * g.
inline Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const TermOrder& ord) {
  if (f.is_zero() || g.is_zero())
    throw std::invalid_argument("s_polynomial: zero input");
  const Monomial l = Monomial::lcm(f.leading_monomial(), g.leading_monomial());
  const Polynomial left =
      mul_term(f, Coefficient(1) / f.leading_coeff(), l.divided_by(f.leading_monomial()));
  const Polynomial right =
      mul_term(g, Coefficient(1) / g.leading_coeff(), l.divided_by(g.leading_monomial()));
  return sub(left, right, ord);
}

namespace detail {

struct Pair {
  int i, j;        // basis indices, i < j
  Monomial lcm;
  long long seq;   // creation order
};

}  // namespace detail

/// Buchberger's algorithm with the product and chain criteria; returns the
/// reduced basis. Empty input yields an empty basis.
inline GroebnerBasis buchberger(const std::vector<Polynomial>& gens, const TermOrder& ord,
                                SelectionStrategy strategy = SelectionStrategy::Normal) {
  std::vector<Polynomial> basis;
  for (const auto& g : gens)
    if (!g.is_zero()) basis.push_back(make_monic(g));

  auto later = [&](const detail::Pair& a, const detail::Pair& b) {
    if (strategy == SelectionStrategy::Normal) {
      if (a.lcm.degree() != b.lcm.degree()) return a.lcm.degree() > b.lcm.degree();
    }
    return a.seq > b.seq;
  };
  std::priority_queue<detail::Pair, std::vector<detail::Pair>, decltype(later)> pending(later);

  // done[i][j] records pairs already handled (processed or skipped); the
  // chain criterion consults it.
  std::vector<std::vector<bool>> done;
  long long seq = 0;

  auto add_pairs_for = [&](size_t idx) {
    done.emplace_back(idx, false);
    for (size_t k = 0; k < idx; ++k) {
      pending.push({static_cast<int>(k), static_cast<int>(idx),
                    Monomial::lcm(basis[k].leading_monomial(), basis[idx].leading_monomial()),
                    seq++});
    }
  };
  for (size_t i = 0; i < basis.size(); ++i) add_pairs_for(i);

  long long processed = 0;
  constexpr long long kIterationCap = 2'000'000;

  while (!pending.empty()) {
    if (++processed > kIterationCap)
      throw internal_error("buchberger: iteration cap exceeded (internal bug)");
    detail::Pair p = pending.top();
    pending.pop();
    const size_t i = static_cast<size_t>(p.i), j = static_cast<size_t>(p.j);

    auto mark_done = [&] { done[j][i] = true; };

    // Product criterion: coprime leading monomials reduce to zero.
    if (Monomial::coprime(basis[i].leading_monomial(), basis[j].leading_monomial())) {
      mark_done();
      continue;
    }
    // Chain criterion: lcm divisible by LM(k) with both side pairs handled.
    bool skip = false;
    for (size_t k = 0; k < basis.size() && !skip; ++k) {
      if (k == i || k == j) continue;
      if (done[std::max(i, k)][std::min(i, k)] && done[std::max(j, k)][std::min(j, k)] &&
          Monomial::divides(basis[k].leading_monomial(), p.lcm))
        skip = true;
    }
    if (skip) {
      mark_done();
      continue;
    }

    Polynomial s = s_polynomial(basis[i], basis[j], ord);
    Polynomial r = normal_form(s, basis, ord);
    mark_done();
    if (!r.is_zero()) {
      basis.push_back(make_monic(r));
      add_pairs_for(basis.size() - 1);
    }
  }

  // Minimalize: drop elements whose lead is divisible by another lead.
  std::vector<bool> dropped(basis.size(), false);
  for (size_t i = 0; i < basis.size(); ++i) {
    for (size_t j = 0; j < basis.size() && !dropped[i]; ++j) {
      if (i == j || dropped[j]) continue;
      if (Monomial::divides(basis[j].leading_monomial(), basis[i].leading_monomial()) &&
          !(basis[i].leading_monomial() == basis[j].leading_monomial() && j > i))
        dropped[i] = true;
    }
  }
  std::vector<Polynomial> minimal;
  for (size_t i = 0; i < basis.size(); ++i)
    if (!dropped[i]) minimal.push_back(basis[i]);

  // Interreduce tails to reach the reduced basis.
  std::vector<Polynomial> reduced = minimal;
  for (size_t i = 0; i < reduced.size(); ++i) {
    std::vector<Polynomial> others;
    others.reserve(reduced.size() - 1);
    for (size_t j = 0; j < reduced.size(); ++j)
      if (j != i) others.push_back(reduced[j]);
    reduced[i] = make_monic(normal_form(reduced[i], others, ord));
  }

  std::sort(reduced.begin(), reduced.end(), [&](const Polynomial& a, const Polynomial& b) {
    return ord.less(a.leading_monomial(), b.leading_monomial());
  });
  return GroebnerBasis{ord, std::move(reduced)};
}

/// Ambient variable ids {t} + all z_ij with i+j <= n.
inline std::vector<int> ambient_vars_with_t(int n) {
  std::vector<int> vars(static_cast<size_t>(z_var_count(n)) + 1);
  for (int id = 0; id <= z_var_count(n); ++id) vars[static_cast<size_t>(id)] = id;
  return vars;
}

/// Minimal generators of the lead-term ideal of a reduced basis.
inline MonomialIdeal lead_term_ideal(const GroebnerBasis& G, int n) {
  std::vector<Monomial> lead;
  lead.reserve(G.basis.size());
  for (const auto& g : G.basis) lead.push_back(g.leading_monomial());
  return MonomialIdeal::make(std::move(lead), ambient_vars_with_t(n));
}

/// Sends t to 1: drops each generator's t-exponent and re-minimalizes in the
/// z-only ambient set.
inline MonomialIdeal eliminate_t(const MonomialIdeal& I) {
  std::vector<Monomial> gens;
  gens.reserve(I.gens().size());
  for (const auto& m : I.gens()) gens.push_back(m.without_t());
  std::vector<int> vars;
  for (int v : I.vars())
    if (v != kTVar) vars.push_back(v);
  return MonomialIdeal::make(std::move(gens), std::move(vars));
}

}  // namespace schub
