#include <doctest.h>

#include "oracles.hpp"
#include "rankclass/error.hpp"
#include "rankclass/stanley.hpp"

using namespace rankclass;

namespace {
AffinePermutation A(std::initializer_list<Value> w) { return AffinePermutation(std::vector<Value>(w)); }
}  // namespace

TEST_SUITE("stanley") {

TEST_CASE("cyclically decreasing words") {
  CHECK(cyclically_decreasing_word(4, {1, 2}) == std::vector<int>{2, 1});
  CHECK(cyclically_decreasing_word(4, {0, 3}) == std::vector<int>{0, 3});
  CHECK(cyclically_decreasing_word(5, {0, 1, 3}) == std::vector<int>{3, 1, 0});
  CHECK(cyclically_decreasing_word(4, {}).empty());
  CHECK_THROWS_AS(cyclically_decreasing_word(3, {0, 1, 2}), Error);
  CHECK(length(cyclically_decreasing_element(5, {0, 1, 3})) == 3);
}

TEST_CASE("small Stanley functions") {
  CHECK(to_string(stanley(Permutation::identity(3))) == "1*s[-]");
  CHECK(to_string(stanley(parse_permutation("1"))) == "1*s[-]");
  CHECK(to_string(stanley(parse_permutation("21"))) == "1*s[1]");
  CHECK(to_string(stanley(parse_permutation("321"))) == "1*s[2,1]");
  CHECK(to_string(stanley(parse_permutation("312"))) == "1*s[2]");
  CHECK(to_string(stanley(parse_permutation("231"))) == "1*s[1,1]");
  CHECK(to_string(stanley(parse_permutation("31524"))) == "1*s[2,2] + 1*s[3,1]");
  CHECK(to_string(stanley(parse_permutation("2143"))) == "1*s[1,1] + 1*s[2]");
}

TEST_CASE("affine Stanley function of a rank-set permutation") {
  // The literal cyclically decreasing count: m22 + 2 m211 + 4 m1111.
  const MonomialExpansion m = affine_stanley(A({5, 2, 7, 4}));
  CHECK(to_string(m) == "4*m[1,1,1,1] + 2*m[2,1,1] + 1*m[2,2]");
  CHECK(to_string(monomial_to_schur(m)) == "-1*s[1,1,1,1] + 1*s[2,1,1] + 1*s[2,2]");
  CHECK(m == oracle::affine_stanley_by_products(A({5, 2, 7, 4})));
}

TEST_CASE("factorization counts against products of subsets") {
  const std::vector<std::vector<Value>> windows = {{5, 2, 7, 4}, {6, 4, 5, 8, 7}, {0, 2, 3, 5}, {3, 1, 2},
                                                   {4, 3, 2, 1}, {2, 1, 4, 3}, {-1, 4, 1, 6}, {5, 6, 7, 8, 4}};
  for (const auto& w : windows) {
    const AffinePermutation f(w);
    CHECK_MESSAGE(affine_stanley(f) == oracle::affine_stanley_by_products(f), to_string(f));
  }
  for (int n = 1; n <= 4; ++n)
    for (const Permutation& w : all_permutations(n)) {
      const AffinePermutation f = AffinePermutation::embed(w);
      CHECK(affine_stanley(f) == oracle::affine_stanley_by_products(f));
    }
}

TEST_CASE("simple reflections give m1") {
  for (int i = 0; i < 4; ++i) CHECK(to_string(affine_stanley(simple_reflection(4, i))) == "1*m[1]");
  CHECK(to_string(affine_stanley(AffinePermutation::identity(3))) == "1*m[-]");
}

TEST_CASE("degree equals length") {
  for (const auto& f : {A({5, 2, 7, 4}), A({6, 4, 5, 8, 7}), A({2, 5, 6, 7, 9, 8, 12, 11})}) {
    const MonomialExpansion m = affine_stanley(f);
    CHECK(m.is_homogeneous());
    CHECK(m.degree() == length(normalize(f)));
  }
}

TEST_CASE("counting rejects impossible lengths") {
  CHECK(count_decreasing_factorizations(A({5, 2, 7, 4}), {4}) == 0);
  CHECK(count_decreasing_factorizations(A({5, 2, 7, 4}), {2, 1}) == 0);
  CHECK(count_decreasing_factorizations(A({5, 2, 7, 4}), {2, 2}) == 1);
  CHECK(count_decreasing_factorizations(A({5, 2, 7, 4}), {1, 2, 1}) == 2);
}

}  // TEST_SUITE
