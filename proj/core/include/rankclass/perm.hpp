#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace rankclass {

// An ordinary permutation of [n] in one-line notation (values 1..n).
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> one_line);
  Permutation(std::initializer_list<int> one_line) : Permutation(std::vector<int>(one_line)) {}

  static Permutation identity(int n);

  int size() const noexcept { return static_cast<int>(one_line_.size()); }
  const std::vector<int>& one_line() const noexcept { return one_line_; }
  // w(i) for 1 <= i <= n.
  int operator()(int i) const { return one_line_.at(static_cast<std::size_t>(i - 1)); }

  Permutation inverse() const;
  int inversions() const noexcept;
  bool is_identity() const noexcept;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> one_line_;
};

// w x v: w on [n], v shifted onto [n+1, n+m].
Permutation direct_sum(const Permutation& w, const Permutation& v);

// All of S_n in lexicographic order.
std::vector<Permutation> all_permutations(int n);

// Digits when n <= 9 ("24153"), otherwise comma separated.
std::string to_string(const Permutation& w);
Permutation parse_permutation(std::string_view text);

// A bijection f of Z with f(i + n) = f(i) + n, stored as its window
// f(1), ..., f(n). The average shift av(f) may be any integer.
class AffinePermutation {
 public:
  using Value = std::int64_t;

  explicit AffinePermutation(std::vector<Value> window);

  static AffinePermutation identity(int n);
  // w in S_n viewed as the affine permutation i + pn -> w(i) + pn.
  static AffinePermutation embed(const Permutation& w);

  int period() const noexcept { return static_cast<int>(window_.size()); }
  const std::vector<Value>& window() const noexcept { return window_; }

  Value operator()(Value i) const noexcept;

  friend bool operator==(const AffinePermutation&, const AffinePermutation&) = default;
  friend auto operator<=>(const AffinePermutation&, const AffinePermutation&) = default;

 private:
  std::vector<Value> window_;
};

using Value = AffinePermutation::Value;

Value evaluate(const AffinePermutation& f, Value i);

// (1/n) * sum_{i=1}^{n} (f(i) - i).
Value av(const AffinePermutation& f);

// i <= f(i) <= i + n for all i.
bool is_bounded(const AffinePermutation& f);

// Number of inversion classes: pairs i in [n], j > i with f(i) > f(j).
Value length(const AffinePermutation& f);

// #{p < i : f(p) > j}. Always finite: f(p) -> -infinity as p -> -infinity.
Value northeast_count(const AffinePermutation& f, Value i, Value j);

// i -> f(i + right) + left, i.e. tau^left f tau^right with tau(i) = i + 1.
AffinePermutation tau_shift(const AffinePermutation& f, Value left, Value right);

// (f g)(i) = f(g(i)). Periods must agree.
AffinePermutation compose(const AffinePermutation& f, const AffinePermutation& g);
AffinePermutation inverse(const AffinePermutation& f);

// Subtracts av(f) from every window entry, landing in the av = 0 group.
AffinePermutation normalize(const AffinePermutation& f);

// If f maps [n] onto [n], the ordinary permutation it restricts to.
std::optional<Permutation> restrict_to_window(const AffinePermutation& f);

// Simple reflection s_i, 0 <= i < n, swapping i + pn and i + 1 + pn.
AffinePermutation simple_reflection(int n, int i);

// "6,4,5,8,7;n=5".
std::string to_string(const AffinePermutation& f);
AffinePermutation parse_affine(std::string_view text);

}  // namespace rankclass
