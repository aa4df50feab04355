#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rankclass/diagram.hpp"
#include "rankclass/symfunc.hpp"

namespace rankclass {

// Which combinatorial rule specht_schur may use.
struct SpechtFamily {
  enum class Kind { Auto, Skew, Permutation, Product, Dual };

  Kind kind = Kind::Auto;
  std::optional<Permutation> w;  // required for Kind::Permutation

  static SpechtFamily automatic() { return {}; }
  static SpechtFamily skew() { return {Kind::Skew, std::nullopt}; }
  static SpechtFamily permutation(Permutation w) { return {Kind::Permutation, std::move(w)}; }
  static SpechtFamily product() { return {Kind::Product, std::nullopt}; }
  static SpechtFamily dual() { return {Kind::Dual, std::nullopt}; }
};

// "skew", "perm:24153", "product", "dual", "auto".
SpechtFamily parse_family(std::string_view text);

// Frobenius characteristic s_D for the supported families:
//   skew shapes (literally, or after sorting rows by their leftmost cell),
//   permutation diagrams D(w) with w supplied,
//   block products D1 . D2 of supported parts,
//   box complements of supported diagrams (needs D.box()).
// Anything else throws UnsupportedDiagram.
SchurExpansion specht_schur(const Diagram& d, const SpechtFamily& family = {});

// Relabels s_lambda -> s_{lambda complement} inside the box. Throws
// ShapeTooLarge when a term does not fit.
SchurExpansion box_dual(const SchurExpansion& e, const RectangleContext& box);

// sum a_lambda f^lambda. Throws NegativeMultiplicity.
Integer specht_dim(const SchurExpansion& e);

// Largest diagram the group-algebra oracle accepts.
inline constexpr int kBruteforceMaxCells = 6;

// Independent oracle: builds sum_{q in C(T)} sum_{p in R(T)} sgn(q) q p in
// Q[S_m] for a bijective filling T, spans its left ideal by exact row
// reduction, takes traces of left multiplication on the ideal and pairs them
// with irreducible characters. `filling` lists the cells in the order they
// receive labels 1..m; empty means row-reading order. Throws TooLarge.
SchurExpansion specht_bruteforce(const Diagram& d, const std::vector<Cell>& filling = {});

}  // namespace rankclass
