#pragma once

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace schub {

/// Permutation of {1..n} in one-line notation: image()[i-1] = w(i).
///
/// Convention note: w indexes a Schubert variety the way the reference
/// tables expect; this is the opposite of the indexing used in parts of
/// the literature, so compare words with care.
class Permutation {
public:
  explicit Permutation(std::vector<int> image) : image_(std::move(image)) {
    const int n = static_cast<int>(image_.size());
    if (n < 1) throw std::invalid_argument("permutation: empty word");
    std::vector<char> seen(static_cast<size_t>(n) + 1, 0);
    for (int v : image_) {
      if (v < 1 || v > n)
        throw std::invalid_argument("permutation: value " + std::to_string(v) +
                                    " out of range 1.." + std::to_string(n));
      if (seen[static_cast<size_t>(v)])
        throw std::invalid_argument("permutation: duplicate value " + std::to_string(v));
      seen[static_cast<size_t>(v)] = 1;
    }
  }

  static Permutation identity(int n) {
    std::vector<int> v(static_cast<size_t>(n));
    std::iota(v.begin(), v.end(), 1);
    return Permutation(std::move(v));
  }

  /// w0 = n n-1 ... 1, the longest element.
  static Permutation longest(int n) {
    std::vector<int> v(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) v[static_cast<size_t>(i)] = n - i;
    return Permutation(std::move(v));
  }

  /// Accepts a digit word ("2143", n <= 9) or comma-separated values ("10,2,...").
  static Permutation parse(const std::string& word) {
    if (word.empty()) throw std::invalid_argument("permutation: empty word");
    std::vector<int> values;
    if (word.find(',') == std::string::npos) {
      for (char c : word) {
        if (c < '1' || c > '9')
          throw std::invalid_argument("permutation: bad character '" +
                                      std::string(1, c) + "' in word \"" + word + "\"");
        values.push_back(c - '0');
      }
    } else {
      std::istringstream in(word);
      std::string tok;
      while (std::getline(in, tok, ',')) {
        size_t pos = 0;
        int v = 0;
        try {
          v = std::stoi(tok, &pos);
        } catch (const std::exception&) {
          throw std::invalid_argument("permutation: bad entry \"" + tok + "\"");
        }
        if (pos != tok.size())
          throw std::invalid_argument("permutation: bad entry \"" + tok + "\"");
        values.push_back(v);
      }
    }
    return Permutation(std::move(values));
  }

  int size() const { return static_cast<int>(image_.size()); }

  /// 1-indexed application, w(i).
  int operator()(int i) const { return image_[static_cast<size_t>(i) - 1]; }

  const std::vector<int>& image() const { return image_; }

  Permutation inverse() const {
    std::vector<int> inv(image_.size());
    for (int i = 1; i <= size(); ++i) inv[static_cast<size_t>((*this)(i)) - 1] = i;
    return Permutation(std::move(inv));
  }

  /// Number of inversions.
  int length() const {
    int count = 0;
    for (size_t i = 0; i < image_.size(); ++i)
      for (size_t j = i + 1; j < image_.size(); ++j)
        if (image_[i] > image_[j]) ++count;
    return count;
  }

  /// Digit string for n <= 9, comma-separated values otherwise.
  std::string word() const {
    std::string out;
    if (size() <= 9) {
      for (int v : image_) out += static_cast<char>('0' + v);
    } else {
      for (size_t i = 0; i < image_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(image_[i]);
      }
    }
    return out;
  }

  friend bool operator==(const Permutation& a, const Permutation& b) {
    return a.image_ == b.image_;
  }
  /// Lexicographic order on one-line words.
  friend bool operator<(const Permutation& a, const Permutation& b) {
    return a.image_ < b.image_;
  }

private:
  std::vector<int> image_;
};

/// Calls f on every element of Sn exactly once, in lexicographic order
/// of one-line notation.
template <class F>
void for_each_permutation(int n, F&& f) {
  if (n < 1) throw std::invalid_argument("for_each_permutation: n must be >= 1");
  std::vector<int> v(static_cast<size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  do {
    f(Permutation(v));
  } while (std::next_permutation(v.begin(), v.end()));
}

inline std::vector<Permutation> symmetric_group(int n) {
  std::vector<Permutation> all;
  for_each_permutation(n, [&](const Permutation& w) { all.push_back(w); });
  return all;
}

}  // namespace schub
