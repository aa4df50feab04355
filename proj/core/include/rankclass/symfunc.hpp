#pragma once

#include <map>
#include <string>
#include <string_view>

#include "rankclass/partition.hpp"

namespace rankclass {

enum class Basis { Schur, Monomial };

// A finite integer combination of basis elements indexed by partitions. Zero
// coefficients are never stored; iteration follows the Partition order.
template <Basis B>
class Expansion {
 public:
  using Terms = std::map<Partition, Integer>;

  Expansion() = default;
  explicit Expansion(const Terms& terms) {
    for (const auto& [p, c] : terms) add(p, c);
  }
  static Expansion basis(const Partition& p, const Integer& c = 1) {
    Expansion e;
    e.add(p, c);
    return e;
  }

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t term_count() const noexcept { return terms_.size(); }

  Integer coefficient(const Partition& p) const {
    auto it = terms_.find(p);
    return it == terms_.end() ? Integer(0) : it->second;
  }

  void add(const Partition& p, const Integer& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(p, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Expansion& operator+=(const Expansion& o) {
    for (const auto& [p, c] : o.terms_) add(p, c);
    return *this;
  }
  Expansion& operator-=(const Expansion& o) {
    for (const auto& [p, c] : o.terms_) add(p, -c);
    return *this;
  }
  Expansion& operator*=(const Integer& s) {
    if (s == 0) terms_.clear();
    for (auto& [p, c] : terms_) c *= s;
    return *this;
  }
  friend Expansion operator+(Expansion a, const Expansion& b) { return a += b; }
  friend Expansion operator-(Expansion a, const Expansion& b) { return a -= b; }
  friend Expansion operator*(Expansion a, const Integer& s) { return a *= s; }

  friend bool operator==(const Expansion&, const Expansion&) = default;

  // True when every term has the same degree (vacuously for zero).
  bool is_homogeneous() const noexcept {
    return terms_.empty() || terms_.begin()->first.size() == terms_.rbegin()->first.size();
  }
  int degree() const noexcept { return terms_.empty() ? 0 : terms_.rbegin()->first.size(); }

 private:
  Terms terms_;
};

using SchurExpansion = Expansion<Basis::Schur>;
using MonomialExpansion = Expansion<Basis::Monomial>;

SchurExpansion schur_product(const SchurExpansion& a, const SchurExpansion& b);

// Kostka number K_{lambda,mu}: semistandard tableaux of shape lambda, content mu.
Integer kostka_number(const Partition& lambda, const Partition& mu);

MonomialExpansion schur_to_monomial(const SchurExpansion& s);

// Inverts the Kostka system. Throws NotHomogeneous for mixed-degree input.
SchurExpansion monomial_to_schur(const MonomialExpansion& m);

bool is_schur_nonnegative(const SchurExpansion& s);

// "1*s[2,2] + 1*s[3,1] - 1*s[4]"; zero renders as "0". The letter is the
// basis tag: 's' Schur, 'm' monomial.
std::string format_terms(const std::map<Partition, Integer>& terms, char letter);
std::map<Partition, Integer> parse_terms(std::string_view text, char letter);

std::string to_string(const SchurExpansion& e);
std::string to_string(const MonomialExpansion& e);
SchurExpansion parse_schur(std::string_view text);
MonomialExpansion parse_monomial(std::string_view text);

}  // namespace rankclass
