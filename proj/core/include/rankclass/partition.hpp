#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace rankclass {

using Integer = mpz_class;
using Rational = mpq_class;

// An integer partition: strictly positive, weakly decreasing parts. The empty
// partition has no parts. Trailing zeros passed to the constructor are dropped.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  const std::vector<int>& parts() const noexcept { return parts_; }
  int size() const noexcept { return size_; }
  int length() const noexcept { return static_cast<int>(parts_.size()); }
  bool empty() const noexcept { return parts_.empty(); }

  // i-th part (0-based), zero past the end.
  int operator[](std::size_t i) const noexcept { return i < parts_.size() ? parts_[i] : 0; }

  // True when other's Young diagram sits inside this one.
  bool contains(const Partition& other) const noexcept;

  friend bool operator==(const Partition&, const Partition&) = default;
  // Degree first, then lexicographic on the part sequence. Every printed
  // expansion in the library follows this order.
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) noexcept;

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

// A k-row by cols-column box, the ambient rectangle for Gr(k, k + cols).
struct RectangleContext {
  int k = 0;
  int cols = 0;

  RectangleContext() = default;
  RectangleContext(int rows, int columns);

  bool fits(const Partition& p) const noexcept {
    return p.length() <= k && p[0] <= cols;
  }
  Partition full() const;

  friend bool operator==(const RectangleContext&, const RectangleContext&) = default;
};

class SkewShape {
 public:
  SkewShape(Partition outer, Partition inner);

  const Partition& outer() const noexcept { return outer_; }
  const Partition& inner() const noexcept { return inner_; }
  int size() const noexcept { return outer_.size() - inner_.size(); }

 private:
  Partition outer_;
  Partition inner_;
};

Partition conjugate(const Partition& p);

// The 180-degree rotated complement of p inside ctx. Throws ShapeTooLarge.
Partition complement(const Partition& p, const RectangleContext& ctx);

// Dominance order via partial sums: a >= b.
bool dominates(const Partition& a, const Partition& b);

// Number of standard Young tableaux of shape p (hook length formula).
Integer syt_count(const Partition& p);

// Littlewood-Richardson coefficient c^lambda_{mu,nu}.
Integer lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu);

// All lambda with c^lambda_{mu,nu} != 0, optionally restricted to a box.
std::map<Partition, Integer> lr_expand(const Partition& mu, const Partition& nu,
                                       const std::optional<RectangleContext>& box = std::nullopt);

// Irreducible character chi^lambda evaluated on cycle type mu (Murnaghan-Nakayama).
Integer mn_character(const Partition& lambda, const Partition& mu);

// Order of the centralizer of a permutation with cycle type mu: prod i^{m_i} m_i!.
Integer centralizer_order(const Partition& mu);

Integer factorial(int n);

// Partitions of n in the canonical order.
std::vector<Partition> partitions_of(int n);

// Partitions of n with at most max_length parts, each at most max_part.
std::vector<Partition> partitions_in_box(int n, int max_length, int max_part);

// "4,4,2,2"; the empty partition is "-".
std::string to_string(const Partition& p);
Partition parse_partition(std::string_view text);

}  // namespace rankclass
