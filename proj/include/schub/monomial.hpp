#pragma once

#include <boost/container/small_vector.hpp>

#include <cstdint>
#include <functional>
#include <initializer_list>
#include <stdexcept>
#include <string>

#include "schub/variable.hpp"

namespace schub {

struct VarExp {
  std::uint8_t var;
  std::uint8_t exp;

  friend bool operator==(const VarExp& a, const VarExp& b) {
    return a.var == b.var && a.exp == b.exp;
  }
};

/// Sparse exponent map: (var, exp) pairs sorted by variable id, exponents
/// positive, total degree cached. Immutable value type.
class Monomial {
public:
  using Entries = boost::container::small_vector<VarExp, 8>;

  Monomial() = default;

  static Monomial one() { return Monomial(); }

  static Monomial variable(int var, int exp = 1) {
    Monomial m;
    if (exp < 0) throw std::invalid_argument("monomial: negative exponent");
    if (exp > 0) {
      m.entries_.push_back({static_cast<std::uint8_t>(var), static_cast<std::uint8_t>(exp)});
      m.degree_ = exp;
    }
    return m;
  }

  /// Pairs must be sorted by var id strictly increasing; zero exponents rejected.
  static Monomial from(std::initializer_list<std::pair<int, int>> pairs) {
    Monomial m;
    int last = -1;
    for (auto [v, e] : pairs) {
      if (v <= last) throw std::invalid_argument("monomial: vars must be strictly increasing");
      if (e <= 0) throw std::invalid_argument("monomial: exponent must be positive");
      m.entries_.push_back({static_cast<std::uint8_t>(v), static_cast<std::uint8_t>(e)});
      m.degree_ += e;
      last = v;
    }
    return m;
  }

  const Entries& entries() const { return entries_; }
  int degree() const { return degree_; }
  bool is_one() const { return entries_.empty(); }

  int exponent(int var) const {
    for (const auto& e : entries_)
      if (e.var == var) return e.exp;
    return 0;
  }

  int t_exponent() const {
    // t is id 0, so it can only sit in front.
    return (!entries_.empty() && entries_[0].var == kTVar) ? entries_[0].exp : 0;
  }

  int z_degree() const { return degree_ - t_exponent(); }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial out;
    out.entries_.reserve(a.entries_.size() + b.entries_.size());
    size_t i = 0, j = 0;
    while (i < a.entries_.size() && j < b.entries_.size()) {
      if (a.entries_[i].var == b.entries_[j].var) {
        out.entries_.push_back({a.entries_[i].var,
                                static_cast<std::uint8_t>(a.entries_[i].exp + b.entries_[j].exp)});
        ++i;
        ++j;
      } else if (a.entries_[i].var < b.entries_[j].var) {
        out.entries_.push_back(a.entries_[i++]);
      } else {
        out.entries_.push_back(b.entries_[j++]);
      }
    }
    for (; i < a.entries_.size(); ++i) out.entries_.push_back(a.entries_[i]);
    for (; j < b.entries_.size(); ++j) out.entries_.push_back(b.entries_[j]);
    out.degree_ = a.degree_ + b.degree_;
    return out;
  }

  /// True iff a divides b.
  static bool divides(const Monomial& a, const Monomial& b) {
    size_t j = 0;
    for (const auto& ea : a.entries_) {
      while (j < b.entries_.size() && b.entries_[j].var < ea.var) ++j;
      if (j == b.entries_.size() || b.entries_[j].var != ea.var || b.entries_[j].exp < ea.exp)
        return false;
    }
    return true;
  }

  /// *this / d; requires d | *this.
  Monomial divided_by(const Monomial& d) const {
    Monomial out;
    size_t j = 0;
    for (const auto& e : entries_) {
      int exp = e.exp;
      if (j < d.entries_.size() && d.entries_[j].var == e.var) {
        exp -= d.entries_[j].exp;
        ++j;
      }
      if (exp < 0) throw std::invalid_argument("monomial: not divisible");
      if (exp > 0) {
        out.entries_.push_back({e.var, static_cast<std::uint8_t>(exp)});
        out.degree_ += exp;
      }
    }
    if (j != d.entries_.size()) throw std::invalid_argument("monomial: not divisible");
    return out;
  }

  static Monomial gcd(const Monomial& a, const Monomial& b) {
    Monomial out;
    size_t i = 0, j = 0;
    while (i < a.entries_.size() && j < b.entries_.size()) {
      if (a.entries_[i].var == b.entries_[j].var) {
        std::uint8_t e = std::min(a.entries_[i].exp, b.entries_[j].exp);
        out.entries_.push_back({a.entries_[i].var, e});
        out.degree_ += e;
        ++i;
        ++j;
      } else if (a.entries_[i].var < b.entries_[j].var) {
        ++i;
      } else {
        ++j;
      }
    }
    return out;
  }

  static Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial out;
    size_t i = 0, j = 0;
    while (i < a.entries_.size() && j < b.entries_.size()) {
      if (a.entries_[i].var == b.entries_[j].var) {
        std::uint8_t e = std::max(a.entries_[i].exp, b.entries_[j].exp);
        out.entries_.push_back({a.entries_[i].var, e});
        out.degree_ += e;
        ++i;
        ++j;
      } else if (a.entries_[i].var < b.entries_[j].var) {
        out.entries_.push_back(a.entries_[i]);
        out.degree_ += a.entries_[i].exp;
        ++i;
      } else {
        out.entries_.push_back(b.entries_[j]);
        out.degree_ += b.entries_[j].exp;
        ++j;
      }
    }
    for (; i < a.entries_.size(); ++i) {
      out.entries_.push_back(a.entries_[i]);
      out.degree_ += a.entries_[i].exp;
    }
    for (; j < b.entries_.size(); ++j) {
      out.entries_.push_back(b.entries_[j]);
      out.degree_ += b.entries_[j].exp;
    }
    return out;
  }

  static bool coprime(const Monomial& a, const Monomial& b) {
    size_t i = 0, j = 0;
    while (i < a.entries_.size() && j < b.entries_.size()) {
      if (a.entries_[i].var == b.entries_[j].var) return false;
      if (a.entries_[i].var < b.entries_[j].var)
        ++i;
      else
        ++j;
    }
    return true;
  }

  /// Drops the t factor (sends t to 1).
  Monomial without_t() const {
    if (t_exponent() == 0) return *this;
    Monomial out;
    out.entries_.assign(entries_.begin() + 1, entries_.end());
    out.degree_ = z_degree();
    return out;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.degree_ == b.degree_ && a.entries_ == b.entries_;
  }

  /// Canonical container order (by degree, then exponent pairs); not a term order.
  static bool id_lex_less(const Monomial& a, const Monomial& b) {
    if (a.degree_ != b.degree_) return a.degree_ < b.degree_;
    size_t i = 0;
    for (; i < a.entries_.size() && i < b.entries_.size(); ++i) {
      if (a.entries_[i].var != b.entries_[i].var) return a.entries_[i].var < b.entries_[i].var;
      if (a.entries_[i].exp != b.entries_[i].exp) return a.entries_[i].exp < b.entries_[i].exp;
    }
    return a.entries_.size() < b.entries_.size();
  }

  size_t hash() const {
    size_t h = 0x9e3779b97f4a7c15ull;
    for (const auto& e : entries_) {
      h ^= (static_cast<size_t>(e.var) << 8 | e.exp) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
  }

  std::string str() const {
    if (entries_.empty()) return "1";
    std::string out;
    for (size_t i = 0; i < entries_.size(); ++i) {
      if (i) out += "*";
      out += var_name(entries_[i].var);
      if (entries_[i].exp > 1) out += "^" + std::to_string(entries_[i].exp);
    }
    return out;
  }

private:
  Entries entries_;
  int degree_ = 0;
};

}  // namespace schub

template <>
struct std::hash<schub::Monomial> {
  size_t operator()(const schub::Monomial& m) const { return m.hash(); }
};
