#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "schub/term_order.hpp"

namespace schub {

/// Exact rational coefficients over Q; always canonical (lowest terms,
/// positive denominator).
using Coefficient = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

struct Term {
  Coefficient coeff;
  Monomial mono;
};

/// Multivariate polynomial in canonical form: terms strictly descending
/// under the order that built it, no zero coefficients, no duplicate
/// monomials. Zero is the empty term list. Immutable value type; every
/// operation that can reorder terms takes the active order explicitly.
class Polynomial {
public:
  Polynomial() = default;

  static Polynomial zero() { return Polynomial(); }

  static Polynomial constant(Coefficient c) {
    Polynomial f;
    if (c != 0) f.terms_.push_back({std::move(c), Monomial::one()});
    return f;
  }

  static Polynomial term(Coefficient c, Monomial m) {
    Polynomial f;
    if (c != 0) f.terms_.push_back({std::move(c), std::move(m)});
    return f;
  }

  static Polynomial variable(int var_id) {
    return term(Coefficient(1), Monomial::variable(var_id));
  }

  /// Canonicalizes an arbitrary term list: sorts descending under ord,
  /// merges duplicates, drops zeros.
  static Polynomial make(std::vector<Term> terms, const TermOrder& ord) {
    std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
      return ord.greater(a.mono, b.mono);
    });
    Polynomial f;
    for (auto& t : terms) {
      if (!f.terms_.empty() && f.terms_.back().mono == t.mono) {
        f.terms_.back().coeff += t.coeff;
        if (f.terms_.back().coeff == 0) f.terms_.pop_back();
      } else if (t.coeff != 0) {
        f.terms_.push_back(std::move(t));
      }
    }
    return f;
  }

  bool is_zero() const { return terms_.empty(); }
  const std::vector<Term>& terms() const { return terms_; }
  size_t term_count() const { return terms_.size(); }

  const Term& leading_term() const {
    if (terms_.empty()) throw std::invalid_argument("leading_term: zero polynomial");
    return terms_.front();
  }
  const Monomial& leading_monomial() const { return leading_term().mono; }
  const Coefficient& leading_coeff() const { return leading_term().coeff; }

  /// Max total degree over terms; -1 for the zero polynomial.
  int degree() const {
    int d = -1;
    for (const auto& t : terms_) d = std::max(d, t.mono.degree());
    return d;
  }

  bool is_homogeneous() const {
    for (const auto& t : terms_)
      if (t.mono.degree() != terms_.front().mono.degree()) return false;
    return true;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    for (size_t i = 0; i < a.terms_.size(); ++i)
      if (!(a.terms_[i].mono == b.terms_[i].mono) || a.terms_[i].coeff != b.terms_[i].coeff)
        return false;
    return true;
  }

  size_t hash() const {
    size_t h = terms_.size();
    for (const auto& t : terms_) {
      h ^= t.mono.hash() + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
      h ^= static_cast<size_t>(t.coeff < 0 ? 3 : 5) * 0x100000001b3ull;
    }
    return h;
  }

  // Internal: push a term known to extend the strictly-descending sequence.
  void push_term_unchecked(Coefficient c, Monomial m) {
    terms_.push_back({std::move(c), std::move(m)});
  }

private:
  std::vector<Term> terms_;
};

inline Polynomial add(const Polynomial& f, const Polynomial& g, const TermOrder& ord) {
  Polynomial out;
  const auto& a = f.terms();
  const auto& b = g.terms();
  size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    const auto c = ord.compare(a[i].mono, b[j].mono);
    if (c == std::strong_ordering::greater) {
      out.push_term_unchecked(a[i].coeff, a[i].mono);
      ++i;
    } else if (c == std::strong_ordering::less) {
      out.push_term_unchecked(b[j].coeff, b[j].mono);
      ++j;
    } else {
      Coefficient s = a[i].coeff + b[j].coeff;
      if (s != 0) out.push_term_unchecked(std::move(s), a[i].mono);
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_term_unchecked(a[i].coeff, a[i].mono);
  for (; j < b.size(); ++j) out.push_term_unchecked(b[j].coeff, b[j].mono);
  return out;
}

inline Polynomial negate(const Polynomial& f) {
  Polynomial out;
  for (const auto& t : f.terms()) out.push_term_unchecked(-t.coeff, t.mono);
  return out;
}

inline Polynomial sub(const Polynomial& f, const Polynomial& g, const TermOrder& ord) {
  return add(f, negate(g), ord);
}

/// f * (c * m). Multiplication by a fixed term preserves the term order,
/// so no re-sort is needed.
inline Polynomial mul_term(const Polynomial& f, const Coefficient& c, const Monomial& m) {
  Polynomial out;
  if (c == 0) return out;
  for (const auto& t : f.terms()) out.push_term_unchecked(t.coeff * c, t.mono * m);
  return out;
}

inline Polynomial mul(const Polynomial& f, const Polynomial& g, const TermOrder& ord) {
  std::vector<Term> products;
  products.reserve(f.term_count() * g.term_count());
  for (const auto& a : f.terms())
    for (const auto& b : g.terms()) products.push_back({a.coeff * b.coeff, a.mono * b.mono});
  return Polynomial::make(std::move(products), ord);
}

inline Polynomial make_monic(const Polynomial& f) {
  if (f.is_zero() || f.leading_coeff() == 1) return f;
  Polynomial out;
  const Coefficient& lc = f.leading_coeff();
  for (const auto& t : f.terms()) out.push_term_unchecked(t.coeff / lc, t.mono);
  return out;
}

/// Terms of total degree exactly d.
inline Polynomial homogeneous_part(const Polynomial& f, int d) {
  Polynomial out;
  for (const auto& t : f.terms())
    if (t.mono.degree() == d) out.push_term_unchecked(t.coeff, t.mono);
  return out;
}

/// The nonzero homogeneous part of smallest degree.
inline Polynomial lowest_form(const Polynomial& f) {
  if (f.is_zero()) throw std::invalid_argument("lowest_form: zero polynomial");
  int s = f.terms().front().mono.degree();
  for (const auto& t : f.terms()) s = std::min(s, t.mono.degree());
  return homogeneous_part(f, s);
}

/// Sends t to 1 and re-canonicalizes in the z-only variable set.
inline Polynomial substitute_t(const Polynomial& f, const TermOrder& ord) {
  std::vector<Term> terms;
  terms.reserve(f.term_count());
  for (const auto& t : f.terms()) terms.push_back({t.coeff, t.mono.without_t()});
  return Polynomial::make(std::move(terms), ord);
}

inline std::string coeff_str(const Coefficient& c) {
  return c.str();
}

/// Human-readable form, terms in stored (descending) order:
/// "z12*z31 + z21*z13 - z13*z22*z31".
inline std::string to_string(const Polynomial& f) {
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : f.terms()) {
    const bool negative = t.coeff < 0;
    Coefficient mag = negative ? Coefficient(-t.coeff) : t.coeff;
    if (first) {
      if (negative) out += "-";
      first = false;
    } else {
      out += negative ? " - " : " + ";
    }
    if (t.mono.is_one()) {
      out += coeff_str(mag);
    } else {
      if (mag != 1) out += coeff_str(mag) + "*";
      out += t.mono.str();
    }
  }
  return out;
}

}  // namespace schub

template <>
struct std::hash<schub::Polynomial> {
  size_t operator()(const schub::Polynomial& f) const { return f.hash(); }
};
