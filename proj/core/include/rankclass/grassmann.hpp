#pragma once

#include <map>
#include <string>
#include <string_view>

#include "rankclass/partition.hpp"
#include "rankclass/symfunc.hpp"

namespace rankclass {

// An element of H^*(Gr(k, n)) in the Schubert basis. Every stored partition
// fits in the k x (n - k) box; the (k, n) context travels with the value and
// mixed-context arithmetic is refused.
class SchubertClass {
 public:
  SchubertClass(int k, int n);
  SchubertClass(int k, int n, const std::map<Partition, Integer>& terms);

  static SchubertClass basis(int k, int n, const Partition& p, const Integer& c = 1);
  static SchubertClass unit(int k, int n) { return basis(k, n, Partition{}); }
  // sigma of the full k x (n - k) rectangle.
  static SchubertClass point(int k, int n);

  int k() const noexcept { return k_; }
  int n() const noexcept { return n_; }
  RectangleContext box() const { return {k_, n_ - k_}; }

  const std::map<Partition, Integer>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  Integer coefficient(const Partition& p) const;

  // Throws ShapeTooLarge if p is outside the box.
  void add(const Partition& p, const Integer& c);

  SchubertClass& operator+=(const SchubertClass& o);
  SchubertClass& operator-=(const SchubertClass& o);
  friend SchubertClass operator+(SchubertClass a, const SchubertClass& b) { return a += b; }
  friend SchubertClass operator-(SchubertClass a, const SchubertClass& b) { return a -= b; }

  friend bool operator==(const SchubertClass&, const SchubertClass&) = default;

 private:
  int k_;
  int n_;
  std::map<Partition, Integer> terms_;
};

// s_lambda -> sigma_lambda, or 0 when lambda leaves the k x (n - k) box.
SchubertClass phi(const SchurExpansion& s, int k, int n);

// The Schur expansion with the same coefficients.
SchurExpansion lift(const SchubertClass& x);

// Pullback along Gr(k, m) -> Gr(k, n) for m <= n: lift and re-truncate.
SchubertClass pullback(const SchubertClass& x, int m);

SchubertClass class_product(const SchubertClass& a, const SchubertClass& b);
SchubertClass class_sub(const SchubertClass& a, const SchubertClass& b);

// sum_lambda coeff * f^{lambda complement}.
Integer class_degree(const SchubertClass& x);

bool is_schubert_nonnegative(const SchubertClass& x);

// sum_nu c^lambda_{mu,nu} sigma_{nu complement}, the class attached to the
// complement of the skew shape lambda/mu in the k x (n - k) box.
SchubertClass skew_complement_class(const Partition& lambda, const Partition& mu, int k, int n);

// "1*o[2,2]@Gr(2,4)"; zero is "0@Gr(2,4)".
std::string to_string(const SchubertClass& x);
SchubertClass parse_schubert(std::string_view text);

}  // namespace rankclass
