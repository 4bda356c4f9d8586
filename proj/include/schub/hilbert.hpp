#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "schub/error.hpp"
#include "schub/monomial_ideal.hpp"
#include "schub/polynomial.hpp"

namespace schub {

/// Numerator N(q) of the Hilbert series HS(S/I) = N(q)/(1-q)^nvars,
/// as integer coefficients indexed by power of q. N does not depend on the
/// ambient variable count, only the factorization step does.
struct HilbertNumerator {
  std::vector<Integer> coeffs;

  bool is_zero() const { return coeffs.empty(); }
  Integer at_one() const {
    Integer s = 0;
    for (const auto& c : coeffs) s += c;
    return s;
  }
};

struct DimDegree {
  int dimension = 0;
  long long degree = 1;
};

namespace detail {

inline void trim(std::vector<Integer>& v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
}

// a -= q^shift * b
inline void sub_shifted(std::vector<Integer>& a, const std::vector<Integer>& b, int shift) {
  if (a.size() < b.size() + static_cast<size_t>(shift))
    a.resize(b.size() + static_cast<size_t>(shift), 0);
  for (size_t i = 0; i < b.size(); ++i) a[i + static_cast<size_t>(shift)] -= b[i];
  trim(a);
}

inline void add_shifted(std::vector<Integer>& a, const std::vector<Integer>& b, int shift) {
  if (a.size() < b.size() + static_cast<size_t>(shift))
    a.resize(b.size() + static_cast<size_t>(shift), 0);
  for (size_t i = 0; i < b.size(); ++i) a[i + static_cast<size_t>(shift)] += b[i];
  trim(a);
}

inline std::vector<Monomial> colon_by(const std::vector<Monomial>& gens, const Monomial& m,
                                      bool skip_equal) {
  std::vector<Monomial> colon;
  colon.reserve(gens.size());
  for (const auto& g : gens) {
    if (skip_equal && g == m) continue;
    colon.push_back(g.divided_by(Monomial::gcd(g, m)));
  }
  return MonomialIdeal::minimalize(std::move(colon));
}

inline std::vector<Integer> numerator_rec(const std::vector<Monomial>& gens) {
  if (gens.empty()) return {Integer(1)};

  constexpr size_t kSimpleLimit = 8;
  int pivot = -1;
  if (gens.size() > kSimpleLimit) {
    // Most frequently occurring variable; ties go to the smallest id.
    std::vector<int> freq;
    for (const auto& g : gens) {
      for (const auto& e : g.entries()) {
        if (e.var >= freq.size()) freq.resize(e.var + 1, 0);
        ++freq[e.var];
      }
    }
    int best = 0;
    for (size_t v = 0; v < freq.size(); ++v) {
      if (freq[v] > best) {
        best = freq[v];
        pivot = static_cast<int>(v);
      }
    }
    if (best < 2) pivot = -1;
  }

  if (pivot < 0) {
    // N({m} + J) = N(J) - q^deg(m) * N(J : m)
    const Monomial m = gens.back();
    std::vector<Monomial> rest(gens.begin(), gens.end() - 1);
    std::vector<Integer> n = numerator_rec(rest);
    sub_shifted(n, numerator_rec(colon_by(rest, m, false)), m.degree());
    return n;
  }

  // N(I) = N(I + (x)) + q * N(I : x) for the pivot variable x.
  const Monomial x = Monomial::variable(pivot);
  std::vector<Monomial> plus;
  plus.push_back(x);
  for (const auto& g : gens)
    if (g.exponent(pivot) == 0) plus.push_back(g);
  std::vector<Integer> n = numerator_rec(MonomialIdeal::minimalize(std::move(plus)));
  add_shifted(n, numerator_rec(colon_by(gens, x, false)), 1);
  return n;
}

// Quotient of a by (1-q); requires a(1) == 0.
inline std::vector<Integer> divide_by_one_minus_q(const std::vector<Integer>& a) {
  std::vector<Integer> b(a.size() > 0 ? a.size() - 1 : 0);
  Integer run = 0;
  for (size_t j = 0; j + 1 < a.size(); ++j) {
    run += a[j];
    b[j] = run;
  }
  trim(b);
  return b;
}

}  // namespace detail

/// Exact Hilbert numerator via the colon recursion, splitting on the most
/// frequent variable for wide inputs.
inline HilbertNumerator numerator(const MonomialIdeal& I, int nvars) {
  std::vector<char> seen;
  int appearing = 0;
  for (const auto& g : I.gens()) {
    for (const auto& e : g.entries()) {
      if (e.var >= seen.size()) seen.resize(e.var + 1, 0);
      if (!seen[e.var]) {
        seen[e.var] = 1;
        ++appearing;
      }
    }
  }
  if (nvars < appearing)
    throw std::invalid_argument("hilbert numerator: nvars smaller than appearing variables");
  return HilbertNumerator{detail::numerator_rec(I.gens())};
}

inline HilbertNumerator numerator(const MonomialIdeal& I) { return numerator(I, I.nvars()); }

/// Krull dimension and degree of S/I from N(q) = (1-q)^c Q(q), Q(1) != 0:
/// dimension = nvars - c, degree = Q(1).
inline DimDegree dim_degree(const MonomialIdeal& I, int nvars) {
  if (I.contains_unit())
    throw std::invalid_argument("dim_degree: unit ideal has no dimension/degree");
  std::vector<Integer> n = numerator(I, nvars).coeffs;
  if (n.empty()) throw internal_error("dim_degree: zero numerator for proper ideal");
  int codim = 0;
  auto at_one = [](const std::vector<Integer>& v) {
    Integer s = 0;
    for (const auto& c : v) s += c;
    return s;
  };
  while (at_one(n) == 0) {
    n = detail::divide_by_one_minus_q(n);
    ++codim;
    if (n.empty()) throw internal_error("dim_degree: numerator collapsed to zero");
  }
  const Integer q1 = at_one(n);
  if (q1 <= 0) throw internal_error("dim_degree: nonpositive degree for proper ideal");
  if (codim > nvars) throw internal_error("dim_degree: codimension exceeds variable count");
  return DimDegree{nvars - codim, q1.convert_to<long long>()};
}

inline DimDegree dim_degree(const MonomialIdeal& I) { return dim_degree(I, I.nvars()); }

namespace detail {

inline unsigned long long compositions(int total, int parts) {
  // C(total + parts - 1, parts - 1)
  if (parts <= 0) return total == 0 ? 1 : 0;
  unsigned long long r = 1;
  for (int i = 1; i < parts; ++i) {
    r = r * static_cast<unsigned long long>(total + i) / static_cast<unsigned long long>(i);
  }
  return r;
}

struct CountCtx {
  int nvars;
  std::vector<std::vector<int>> gexp;  // generator exponents per variable slot
  std::vector<int> glast;              // last slot in each generator's support
};

inline unsigned long long count_rec(const CountCtx& ctx, int pos, int remaining,
                                    const std::vector<int>& active) {
  if (active.empty())
    return compositions(remaining, ctx.nvars - pos);

  const bool last = (pos + 1 == ctx.nvars);
  unsigned long long total = 0;
  std::vector<int> next;
  next.reserve(active.size());
  for (int e = last ? remaining : 0; e <= remaining; ++e) {
    next.clear();
    bool divisible = false;
    for (int g : active) {
      const int need = ctx.gexp[static_cast<size_t>(g)][static_cast<size_t>(pos)];
      if (e < need) continue;  // this generator can never divide the completion
      if (ctx.glast[static_cast<size_t>(g)] <= pos) {
        divisible = true;  // generator fully satisfied: whole branch lies in I
        break;
      }
      next.push_back(g);
    }
    if (divisible) continue;
    if (last) {
      // Survivors in `next` need support beyond the final slot, which does
      // not exist, so the completed monomial is standard.
      ++total;
      continue;
    }
    total += count_rec(ctx, pos + 1, remaining - e, next);
  }
  return total;
}

}  // namespace detail

/// Brute-force count of degree-d monomials in the ambient variables that no
/// generator divides. Independent of the numerator recursion; used as an
/// oracle for dim_degree.
inline unsigned long long standard_monomial_count(const MonomialIdeal& I, int d) {
  if (d < 0) return 0;
  const auto& vars = I.vars();
  detail::CountCtx ctx;
  ctx.nvars = static_cast<int>(vars.size());
  for (const auto& g : I.gens()) {
    std::vector<int> exps(vars.size(), 0);
    int last = -1;
    bool in_ambient = true;
    for (const auto& e : g.entries()) {
      auto it = std::lower_bound(vars.begin(), vars.end(), static_cast<int>(e.var));
      if (it == vars.end() || *it != static_cast<int>(e.var)) {
        in_ambient = false;  // generator mentions a variable outside the ambient set
        break;
      }
      const int slot = static_cast<int>(it - vars.begin());
      exps[static_cast<size_t>(slot)] = e.exp;
      last = std::max(last, slot);
    }
    if (!in_ambient) continue;
    if (g.is_one()) return 0;  // unit ideal: nothing is standard
    ctx.gexp.push_back(std::move(exps));
    ctx.glast.push_back(last);
  }
  std::vector<int> active(ctx.gexp.size());
  for (size_t i = 0; i < active.size(); ++i) active[i] = static_cast<int>(i);
  return detail::count_rec(ctx, 0, d, active);
}

}  // namespace schub
